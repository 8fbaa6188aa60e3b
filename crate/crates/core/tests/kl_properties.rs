mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use coxcells::coxeter::Group;
use coxcells::kl::KlTable;

#[test]
fn property_suite_on_groups_up_to_ten_thousand() {
    for spec in common::groups_up_to(10_000) {
        let g = Group::from_spec(&spec).unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        let rep = common::kl_property_suite(&g, &t);
        assert!(rep.failures.is_empty(), "{spec}: {:?}", rep.failures);
        assert!(rep.pairs >= g.order());
    }
}

#[test]
fn bar_involution_oracle_agrees() {
    for spec in ["A3", "B3", "H3", "I2(5)"] {
        let g = Group::from_spec(spec).unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        assert_eq!(common::bar_involution_oracle(&g, &t), Ok(()), "{spec}");
    }
}

fn b4() -> &'static (std::sync::Arc<Group>, KlTable) {
    static CELL: OnceLock<(std::sync::Arc<Group>, KlTable)> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = Group::from_spec("B4").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        (g, t)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn inverse_symmetry_and_multiplication_by_descents(y in 0usize..384, w in 0usize..384) {
        let (g, t) = b4();
        prop_assert_eq!(t.p_q(y, w), t.p_q(g.inverse(y), g.inverse(w)));
        // P_{y,w} = P_{sy,w} whenever s is a left descent of w.
        for s in 0..g.rank() {
            if g.left_descents(w) & (1 << s) != 0 {
                prop_assert_eq!(t.p_q(y, w), t.p_q(g.lmul(s, y), w));
            }
        }
    }

    #[test]
    fn longest_element_pairs_are_trivial(y in 0usize..384) {
        let (g, t) = b4();
        prop_assert_eq!(t.p_q(y, g.longest()), &[1][..]);
    }
}
