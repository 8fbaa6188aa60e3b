use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use coxcells::cells::CellAnalysis;
use coxcells::coxeter::Group;
use coxcells::harness::{rsk, rsk_inverse};
use coxcells::induction::CellLookupIndex;
use coxcells::star::{in_domain, star, star_class_representatives, string_tilde, tau_partition, TauMode};

struct Fixture {
    analysis: CellAnalysis,
    lookup: CellLookupIndex,
}

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        ["D4", "B4", "H3", "A4"]
            .iter()
            .map(|spec| {
                let analysis = CellAnalysis::compute(Group::from_spec(spec).unwrap()).unwrap();
                let classes = star_class_representatives(&analysis.group, &analysis.left).unwrap();
                let lookup = CellLookupIndex::from_analysis(&analysis, &classes);
                Fixture { analysis, lookup }
            })
            .collect()
    })
}

fn pick(which: usize, raw: usize) -> (&'static Fixture, &'static Arc<Group>, usize) {
    let f = &fixtures()[which % fixtures().len()];
    let g = &f.analysis.group;
    (f, g, raw % g.order())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn star_and_strings_are_involutions(which in 0usize..4, raw in 0usize..100_000) {
        let (_, g, w) = pick(which, raw);
        for s in 0..g.rank() {
            for t in s + 1..g.rank() {
                if !in_domain(g, w, s, t) || g.graph().m(s, t) < 3 {
                    continue;
                }
                let y = string_tilde(g, w, s, t).unwrap();
                prop_assert!(in_domain(g, y, s, t));
                prop_assert_eq!(string_tilde(g, y, s, t).unwrap(), w);
                if g.graph().m(s, t) == 3 {
                    prop_assert_eq!(star(g, w, s, t).unwrap(), y);
                }
            }
        }
    }

    #[test]
    fn left_cell_invariants(which in 0usize..4, raw in 0usize..100_000) {
        let (f, g, w) = pick(which, raw);
        let a = &f.analysis;
        let cell = a.left.block(a.left.block_of(w).unwrap());
        prop_assert!(cell.iter().all(|&y| g.right_descents(y) == g.right_descents(w)));
        prop_assert!(a.a_value(w) as usize <= g.length(w));
        prop_assert_eq!(a.a_value(w), a.a_value(g.inverse(w)));
        // w and w^{-1} lie in the same two-sided cell.
        prop_assert_eq!(a.two_sided.block_of(w), a.two_sided.block_of(g.inverse(w)));
        let r = a.right.block_of(g.inverse(w)).unwrap();
        let mut inv: Vec<usize> = cell.iter().map(|&y| g.inverse(y)).collect();
        inv.sort_unstable();
        prop_assert_eq!(a.right.block(r), &inv[..]);
    }

    #[test]
    fn lookup_matches_direct_cells(which in 0usize..4, raw in 0usize..100_000) {
        let (f, g, w) = pick(which, raw);
        let r = f.lookup.left_cell_of_element(g, w).unwrap();
        let a = &f.analysis;
        prop_assert_eq!(&r.cell[..], a.left.block(a.left.block_of(w).unwrap()));
        prop_assert_eq!(r.a, a.a_value(w));
        prop_assert_eq!(&r.special, &a.two_sided_info_of(w).special);
    }

    #[test]
    fn rsk_round_trip(perm in (1usize..=7).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())) {
        let (p, q) = rsk(&perm);
        prop_assert_eq!(p.iter().map(Vec::len).collect::<Vec<_>>(), q.iter().map(Vec::len).collect::<Vec<_>>());
        prop_assert_eq!(rsk_inverse(&p, &q), perm);
    }
}

#[test]
fn left_cells_refine_tau_partitions() {
    for f in fixtures() {
        let a = &f.analysis;
        let all: Vec<usize> = (0..a.group.order()).collect();
        for mode in [TauMode::SimplyLaced, TauMode::Strings] {
            let tau = tau_partition(&a.group, &all, mode);
            assert!(a.left.refines(&tau.partition), "{} {}", a.group.type_name(), mode.as_str());
        }
    }
}
