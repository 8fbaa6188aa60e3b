use coxcells::cells::CellAnalysis;
use coxcells::coxeter::{Group, Parabolic};
use coxcells::star::TauMode;
use coxcells::induction::{check_star_induction, default_parabolic_subset, parabolic_left_cells, run_pipeline};

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "E6".into());
    let t0 = std::time::Instant::now();
    let g = Group::from_spec(&spec).unwrap();
    let a = CellAnalysis::compute(g.clone()).unwrap();
    println!("analysis {:?}", t0.elapsed());
    let (report, _) = run_pipeline(&a, None).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    println!("pipeline {:?}", t0.elapsed());
    let subset = default_parabolic_subset(&g).unwrap();
    let par = Parabolic::new(&g, &subset).unwrap();
    let pl = parabolic_left_cells(&par).unwrap();
    let rep = check_star_induction(&g, &par, &pl, &a.left, TauMode::SimplyLaced).unwrap();
    println!("{rep:?} {:?}", t0.elapsed());
}
