//! a-values, families, special representations and distinguished
//! involutions.

use serde::Serialize;

use crate::cells::{cell_module, CellPartition};
use crate::characters::CharacterTable;
use crate::coxeter::Group;
use crate::error::{Error, Result};
use crate::kl::{KlTable, MuProvider};

/// a-value of a two-sided cell from Hecke traces on its smallest left cell:
/// the least `i ≥ 0` such that `v^i · trace(T_w)` is a polynomial for every
/// `w` in that cell.
pub fn a_value_of_two_sided_cell(
    g: &Group,
    mu: &impl MuProvider,
    block: &[usize],
    left: &CellPartition,
) -> u32 {
    let mut cells: Vec<usize> = block.iter().filter_map(|&w| left.block_of(w)).collect();
    cells.sort_unstable();
    cells.dedup();
    let smallest = cells.into_iter().min_by_key(|&c| (left.block(c).len(), c)).expect("empty block");
    let cell = left.block(smallest);
    let module = cell_module(g, mu, cell);
    cell.iter()
        .filter_map(|&w| module.hecke_trace(&g.canonical_word(w)).valuation())
        .map(|val| (-val).max(0) as u32)
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoSidedCellInfo {
    pub block: usize,
    pub a_value: u32,
    pub family: Vec<String>,
    pub special: String,
    /// Family members with `b_E` smaller than the special one.
    pub below_special_b: Vec<String>,
}

/// Family and special representation of two-sided cell `block`, given the
/// multiplicity vectors of the left cells inside it.
pub fn family_and_special<'a>(
    block: usize,
    a_value: u32,
    cell_multiplicities: impl IntoIterator<Item = &'a [u64]>,
    table: &CharacterTable,
) -> Result<TwoSidedCellInfo> {
    let mut members = vec![false; table.num_irreducibles()];
    for m in cell_multiplicities {
        for (i, &k) in m.iter().enumerate() {
            if k > 0 {
                members[i] = true;
            }
        }
    }
    let family: Vec<usize> = (0..members.len()).filter(|&i| members[i]).collect();
    let specials: Vec<usize> = family.iter().copied().filter(|&i| table.b_value(i) == a_value).collect();
    if specials.len() != 1 {
        return Err(Error::SpecialNotUnique { block, count: specials.len() });
    }
    let special = specials[0];
    Ok(TwoSidedCellInfo {
        block,
        a_value,
        family: family.iter().map(|&i| table.name(i).to_string()).collect(),
        special: table.name(special).to_string(),
        below_special_b: family
            .iter()
            .filter(|&&i| table.b_value(i) < table.b_value(special))
            .map(|&i| table.name(i).to_string())
            .collect(),
    })
}

/// Involutions `d` with `l(d) - 2 deg_q P_{e,d} = a(d)`, checked to meet
/// every left cell exactly once.
pub fn distinguished_involutions(
    g: &Group,
    left: &CellPartition,
    a_of_element: &[u32],
    kl: &KlTable,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut count = vec![0usize; left.num_blocks()];
    for d in 0..g.order() {
        if g.inverse(d) != d {
            continue;
        }
        let p = kl.p_q(0, d);
        let deg = p.len().saturating_sub(1);
        if g.length(d) as i64 - 2 * deg as i64 == a_of_element[d] as i64 {
            out.push(d);
            if let Some(c) = left.block_of(d) {
                count[c] += 1;
            }
        }
    }
    for (cell, &k) in count.iter().enumerate() {
        match k {
            1 => {}
            0 => return Err(Error::CellWithoutDistinguished { cell }),
            _ => return Err(Error::CellWithMultipleDistinguished { cell, count: k }),
        }
    }
    Ok(out)
}
