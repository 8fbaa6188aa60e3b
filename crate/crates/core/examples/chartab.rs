use coxcells::characters::CharacterTable;
use coxcells::coxeter::{ConjugacyAnalysis, Group};

fn main() {
    for spec in std::env::args().skip(1) {
        let t0 = std::time::Instant::now();
        let g = Group::from_spec(&spec).unwrap();
        let cc = ConjugacyAnalysis::new(&g);
        let t = CharacterTable::compute(&g, &cc).unwrap();
        println!("{spec}: {} irreducibles in {:?}", t.num_irreducibles(), t0.elapsed());
        for i in 0..t.num_irreducibles() {
            print!("{} ", t.name(i));
        }
        println!();
    }
}
