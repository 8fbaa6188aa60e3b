//! Left, right and two-sided cells, their modules and invariants.

mod invariants;
mod module;
mod partition;

use std::sync::Arc;

pub use invariants::{a_value_of_two_sided_cell, distinguished_involutions, family_and_special, TwoSidedCellInfo};
pub use module::{cell_module, WGraphModule};
pub use partition::{
    left_cells, left_cells_from_graph, left_cells_unfiltered, right_and_two_sided_cells, CellPartition, MuGraph,
    Side,
};
pub(crate) use partition::UnionFind;

use crate::characters::{CharacterTable, ClassFunction};
use crate::coxeter::{ConjugacyAnalysis, Group};
use crate::error::Result;
use crate::kl::KlTable;

/// Everything the cell machinery derives for one group.
pub struct CellAnalysis {
    pub group: Arc<Group>,
    pub kl: KlTable,
    pub classes: ConjugacyAnalysis,
    pub table: CharacterTable,
    pub graph: MuGraph,
    pub left: CellPartition,
    pub right: CellPartition,
    pub two_sided: CellPartition,
    /// Character of `[Γ]_1` per left cell.
    pub left_characters: Vec<ClassFunction>,
    /// `m(Γ, E)` per left cell, indexed by irreducible.
    pub left_multiplicities: Vec<Vec<u64>>,
    pub two_sided_info: Vec<TwoSidedCellInfo>,
    pub a_of_element: Vec<u32>,
    pub distinguished: Vec<usize>,
}

/// KL data and the three cell partitions, without representation theory.
pub struct CellPartitions {
    pub group: Arc<Group>,
    pub kl: KlTable,
    pub graph: MuGraph,
    pub left: CellPartition,
    pub right: CellPartition,
    pub two_sided: CellPartition,
}

impl CellPartitions {
    pub fn compute(group: Arc<Group>) -> Result<CellPartitions> {
        let kl = KlTable::new(group.clone())?;
        let graph = MuGraph::new(&group, &kl);
        let left = left_cells_from_graph(&group, &graph);
        let (right, two_sided) = right_and_two_sided_cells(&group, &graph, &left)?;
        Ok(CellPartitions { group, kl, graph, left, right, two_sided })
    }
}

impl CellAnalysis {
    pub fn compute(group: Arc<Group>) -> Result<CellAnalysis> {
        Self::from_partitions(CellPartitions::compute(group)?)
    }

    pub fn from_partitions(parts: CellPartitions) -> Result<CellAnalysis> {
        let CellPartitions { group, kl, graph, mut left, mut right, mut two_sided } = parts;
        let g = &*group;
        let classes = ConjugacyAnalysis::new(g);
        let table = CharacterTable::compute(g, &classes)?;

        let left_characters: Vec<ClassFunction> =
            left.blocks().iter().map(|cell| cell_module(g, &kl, cell).character(g, &classes)).collect();
        let left_multiplicities =
            left_characters.iter().map(|chi| table.decompose(chi)).collect::<Result<Vec<_>>>()?;

        let mut a_of_element = vec![0u32; g.order()];
        let mut two_sided_info = Vec::with_capacity(two_sided.num_blocks());
        for (b, block) in two_sided.blocks().iter().enumerate() {
            let a = a_value_of_two_sided_cell(g, &kl, block, &left);
            for &w in block {
                a_of_element[w] = a;
            }
            let mut cells: Vec<usize> = block.iter().filter_map(|&w| left.block_of(w)).collect();
            cells.sort_unstable();
            cells.dedup();
            let info = family_and_special(b, a, cells.iter().map(|&c| &left_multiplicities[c][..]), &table)?;
            two_sided_info.push(info);
        }
        for (b, info) in two_sided_info.iter().enumerate() {
            two_sided.a_values[b] = Some(info.a_value);
            two_sided.specials[b] = Some(info.special.clone());
        }
        for p in [&mut left, &mut right] {
            for i in 0..p.num_blocks() {
                let b = two_sided.block_of(p.block(i)[0]).expect("two-sided cells cover W");
                p.a_values[i] = two_sided.a_values[b];
                p.specials[i] = two_sided.specials[b].clone();
            }
        }
        let distinguished = distinguished_involutions(g, &left, &a_of_element, &kl)?;
        Ok(CellAnalysis {
            group,
            kl,
            classes,
            table,
            graph,
            left,
            right,
            two_sided,
            left_characters,
            left_multiplicities,
            two_sided_info,
            a_of_element,
            distinguished,
        })
    }

    /// `Σ_ℱ dim(special)`, to be compared with the number of left cells.
    pub fn special_dimension_sum(&self) -> u64 {
        self.two_sided_info.iter().map(|info| self.table.degree(self.table.index_of(&info.special).unwrap())).sum()
    }

    pub fn a_value(&self, w: usize) -> u32 {
        self.a_of_element[w]
    }

    /// Information for the two-sided cell containing `w`.
    pub fn two_sided_info_of(&self, w: usize) -> &TwoSidedCellInfo {
        &self.two_sided_info[self.two_sided.block_of(w).expect("two-sided cells cover W")]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kl::structure_constant_a_values;

    #[test]
    fn small_groups_are_consistent() {
        for spec in ["A1", "A3", "B3", "H3", "I2(6)", "D4"] {
            let g = Group::from_spec(spec).unwrap();
            let c = CellAnalysis::compute(g.clone()).unwrap();
            assert_eq!(c.special_dimension_sum() as usize, c.left.num_blocks(), "{spec}");
            assert_eq!(c.a_value(0), 0);
            assert_eq!(c.a_value(g.longest()) as usize, g.max_length());
            for w in 0..g.order() {
                assert_eq!(c.a_value(w), c.a_value(g.inverse(w)));
            }
            let mut total = vec![0u64; c.table.num_irreducibles()];
            for m in &c.left_multiplicities {
                for (t, x) in total.iter_mut().zip(m) {
                    *t += x;
                }
            }
            assert_eq!(&total[..], c.table.degrees(), "{spec}");
        }
    }

    #[test]
    fn trace_a_values_match_structure_constants() {
        for spec in ["A2", "A3", "B2", "B3", "I2(5)"] {
            let g = Group::from_spec(spec).unwrap();
            let c = CellAnalysis::compute(g.clone()).unwrap();
            let oracle = structure_constant_a_values(&c.kl).unwrap();
            assert_eq!(oracle, c.a_of_element, "{spec}");
        }
    }

    #[test]
    fn a3_element_3412_is_distinguished() {
        // s1 s0 s2 s1 has P_{e,w} = 1 + q and a = 2.
        let g = Group::from_spec("A3").unwrap();
        let c = CellAnalysis::compute(g.clone()).unwrap();
        let d = g.from_word(&[1, 0, 2, 1]).unwrap();
        assert_eq!(c.a_value(d), 2);
        assert!(c.distinguished.contains(&d));
    }
}
