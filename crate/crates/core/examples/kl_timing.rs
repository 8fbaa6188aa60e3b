use std::time::Instant;

use coxcells::coxeter::Group;
use coxcells::kl::KlTable;

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "E6".into());
    let t0 = Instant::now();
    let g = Group::from_spec(&spec).unwrap();
    println!("{spec}: {} elements in {:?}", g.order(), t0.elapsed());
    let t1 = Instant::now();
    let kl = KlTable::new(g).unwrap();
    println!(
        "KL table: {:?}, {} extremal pairs, {} polynomials, {} mu entries",
        t1.elapsed(),
        kl.num_extremal_pairs(),
        kl.num_distinct_polynomials(),
        kl.num_mu_edges()
    );
}
