use coxcells::cells::CellPartitions;
use coxcells::coxeter::Group;
use coxcells::star::{star_class_representatives, tau_partition, TauMode};

fn main() {
    for spec in std::env::args().skip(1) {
        let t0 = std::time::Instant::now();
        let g = Group::from_spec(&spec).unwrap();
        let c = CellPartitions::compute(g.clone()).unwrap();
        let t1 = t0.elapsed();
        let all: Vec<usize> = (0..g.order()).collect();
        let tau = tau_partition(&g, &all, TauMode::SimplyLaced);
        let tilde = tau_partition(&g, &all, TauMode::Strings);
        let reps = star_class_representatives(&g, &c.left).unwrap();
        println!(
            "{spec}: {} left ({t1:?}), tau {} in {} rounds (equal {}), tilde {} (equal {}), {} star reps, {:?}",
            c.left.num_blocks(),
            tau.partition.num_blocks(),
            tau.rounds,
            tau.partition.same_blocks(&c.left),
            tilde.partition.num_blocks(),
            tilde.partition.same_blocks(&c.left),
            reps.num_orbits(),
            t0.elapsed()
        );
    }
}
