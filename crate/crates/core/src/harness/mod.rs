//! Checkers for structural statements about cells, and intersection
//! tables of cuspidal classes with two-sided cells.

mod rsk;

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

pub use rsk::{calibrate, count_standard_tableaux, permutation_of, rsk, rsk_check, rsk_inverse, RskReport, TableauChoice};

use crate::cells::{CellAnalysis, CellPartition};
use crate::characters::ClassFunction;
use crate::coxeter::{ConjugacyAnalysis, Group};
use crate::error::{Error, Result};

/// Character of `V_C` for a class `C` of involutions, where
/// `s.a_w = -a_w` if `sw = ws` and `l(sw) < l(w)`, and `s.a_w = a_{sws}`
/// otherwise. Class representatives act letter by letter, rightmost first.
pub fn involution_module_character(g: &Group, cc: &ConjugacyAnalysis, class: usize) -> Result<ClassFunction> {
    let members = &cc.classes[class].elements;
    if g.inverse(members[0]) != members[0] {
        return Err(Error::NotInvolutionClass(class));
    }
    let act = |s: usize, w: usize| -> (usize, i64) {
        let sw = g.lmul(s, w);
        if sw == g.rmul(w, s) && g.length(sw) < g.length(w) {
            (w, -1)
        } else {
            (g.rmul(sw, s), 1)
        }
    };
    let values = cc
        .classes
        .iter()
        .map(|c| {
            let word = g.word(c.representative);
            members
                .iter()
                .map(|&w| {
                    let (end, sign) = word.iter().rev().fold((w, 1i64), |(x, sg), &s| {
                        let (y, e) = act(s as usize, x);
                        (y, sg * e)
                    });
                    if end == w {
                        sign
                    } else {
                        0
                    }
                })
                .sum()
        })
        .collect();
    Ok(ClassFunction::new(values))
}

/// `(1/|W|) Σ_C |C| f(C) g(C)` for integer class functions; `None` if not
/// an integer.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction, cc: &ConjugacyAnalysis, order: usize) -> Option<i64> {
    let sizes: Vec<usize> = cc.classes.iter().map(|c| c.size).collect();
    let num = f.inner_product_numerator(g, &sizes);
    (num % order as i128 == 0).then(|| (num / order as i128) as i64)
}

#[derive(Clone, Debug, Serialize)]
pub struct KottwitzFailure {
    pub class: usize,
    pub cell: usize,
    pub hom: i64,
    pub intersection: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct KottwitzReport {
    pub group: String,
    pub involution_classes: usize,
    pub left_cells: usize,
    pub checks: usize,
    pub aggregate_ok: bool,
    pub failures: Vec<KottwitzFailure>,
}

impl KottwitzReport {
    pub fn passed(&self) -> bool {
        self.aggregate_ok && self.failures.is_empty()
    }
}

/// `dim Hom_W(V_C, [Γ]_1) = |C ∩ Γ|` for every involution class `C` and
/// left cell `Γ`, after the aggregate identities over all cells.
pub fn check_kottwitz(analysis: &CellAnalysis) -> Result<KottwitzReport> {
    let g = &*analysis.group;
    let cc = &analysis.classes;
    let mut report = KottwitzReport {
        group: g.type_name().to_string(),
        involution_classes: 0,
        left_cells: analysis.left.num_blocks(),
        checks: 0,
        aggregate_ok: true,
        failures: Vec::new(),
    };
    let mut involution_dims = 0;
    for (k, class) in cc.classes.iter().enumerate() {
        if g.inverse(class.representative) != class.representative {
            continue;
        }
        report.involution_classes += 1;
        let chi = involution_module_character(g, cc, k)?;
        involution_dims += chi.values[0];
        if analysis.table.decompose(&chi).is_err() {
            report.aggregate_ok = false;
        }
        let mut homs = Vec::with_capacity(analysis.left.num_blocks());
        let mut hits = vec![0usize; analysis.left.num_blocks()];
        for &w in &class.elements {
            hits[analysis.left.block_of(w).expect("left cells cover W")] += 1;
        }
        for chi_cell in &analysis.left_characters {
            match inner_product(&chi, chi_cell, cc, g.order()) {
                Some(h) if h >= 0 => homs.push(h),
                _ => {
                    report.aggregate_ok = false;
                    homs.push(-1);
                }
            }
        }
        if homs.iter().sum::<i64>() != class.size as i64 || hits.iter().sum::<usize>() != class.size {
            report.aggregate_ok = false;
        }
        for (cell, (&h, &n)) in homs.iter().zip(&hits).enumerate() {
            report.checks += 1;
            if h != n as i64 {
                report.failures.push(KottwitzFailure { class: k, cell, hom: h, intersection: n });
            }
        }
    }
    if involution_dims as usize != cc.involutions.len() {
        report.aggregate_ok = false;
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct LeftConnectedReport {
    pub group: String,
    pub left_cells: usize,
    /// Indices of cells that are not left-connected.
    pub disconnected: Vec<usize>,
}

impl LeftConnectedReport {
    pub fn passed(&self) -> bool {
        self.disconnected.is_empty()
    }
}

/// Whether each left cell is connected under `x ↦ sx` moves inside it.
pub fn check_left_connected(g: &Group, left: &CellPartition) -> LeftConnectedReport {
    let mut disconnected = Vec::new();
    for (c, cell) in left.blocks().iter().enumerate() {
        let mut seen = vec![cell[0]];
        let mut queue = VecDeque::from([cell[0]]);
        while let Some(x) = queue.pop_front() {
            for s in 0..g.rank() {
                let y = g.lmul(s, x);
                if left.block_of(y) == Some(c) && !seen.contains(&y) {
                    seen.push(y);
                    queue.push_back(y);
                }
            }
        }
        if seen.len() != cell.len() {
            disconnected.push(c);
        }
    }
    LeftConnectedReport { group: g.type_name().to_string(), left_cells: left.num_blocks(), disconnected }
}

#[derive(Clone, Debug, Serialize)]
pub struct TildeTauReport {
    pub group: String,
    pub left_cells: usize,
    pub tilde_tau_blocks: usize,
    pub refined_blocks: usize,
    /// Same left cell ⇒ same a-value and same τ̃-block.
    pub forward: bool,
    /// Same a-value and same τ̃-block ⇒ same left cell.
    pub backward: bool,
    pub tilde_tau_alone_equals_left: bool,
}

impl TildeTauReport {
    pub fn passed(&self) -> bool {
        self.forward && self.backward
    }
}

/// `w ∼_L w'` iff `a(w) = a(w')` and `w, w'` lie in one τ̃-block.
pub fn check_tilde_tau_conjecture(
    g: &Group,
    left: &CellPartition,
    tilde_tau: &CellPartition,
    a: &[u32],
) -> TildeTauReport {
    let mut refined: BTreeMap<(usize, u32), Vec<usize>> = BTreeMap::new();
    for w in 0..g.order() {
        let b = tilde_tau.block_of(w).expect("τ̃-partition covers W");
        refined.entry((b, a[w])).or_default().push(w);
    }
    let refined =
        CellPartition::from_blocks(crate::cells::Side::Left, g.order(), refined.into_values().collect());
    TildeTauReport {
        group: g.type_name().to_string(),
        left_cells: left.num_blocks(),
        tilde_tau_blocks: tilde_tau.num_blocks(),
        refined_blocks: refined.num_blocks(),
        forward: left.refines(&refined),
        backward: refined.refines(left),
        tilde_tau_alone_equals_left: tilde_tau.same_blocks(left),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionRow {
    /// Canonical word of the class representative.
    pub class: Vec<u8>,
    pub element_order: usize,
    pub length: usize,
    pub c_min: usize,
    /// `(special, |C_min ∩ ℱ|)` for nonzero counts.
    pub counts: Vec<(String, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionTable {
    pub group: String,
    pub rows: Vec<IntersectionRow>,
}

impl IntersectionTable {
    pub fn rows_sum_correctly(&self) -> bool {
        self.rows.iter().all(|r| r.counts.iter().map(|(_, n)| n).sum::<usize>() == r.c_min)
    }
}

/// `|C_min ∩ ℱ_{E_0}|` for every (cuspidal, if requested) class.
pub fn cuspidal_intersections(analysis: &CellAnalysis, cuspidal_only: bool) -> IntersectionTable {
    let g = &*analysis.group;
    let rows = analysis
        .classes
        .classes
        .iter()
        .filter(|c| c.cuspidal || !cuspidal_only)
        .map(|c| {
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for &w in &c.c_min {
                *counts.entry(analysis.two_sided.block_of(w).expect("two-sided cells cover W")).or_default() += 1;
            }
            IntersectionRow {
                class: g.word(c.representative).to_vec(),
                element_order: c.element_order,
                length: c.d_c,
                c_min: c.c_min.len(),
                counts: counts
                    .into_iter()
                    .map(|(b, n)| (analysis.two_sided_info[b].special.clone(), n))
                    .collect(),
            }
        })
        .collect();
    IntersectionTable { group: g.type_name().to_string(), rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{tau_partition, TauMode};

    #[test]
    fn trivial_and_sign_involution_modules() {
        let g = Group::from_spec("B3").unwrap();
        let cc = ConjugacyAnalysis::new(&g);
        let e = cc.class_of[0] as usize;
        assert!(involution_module_character(&g, &cc, e).unwrap().values.iter().all(|&x| x == 1));
        let w0 = cc.class_of[g.longest()] as usize;
        let chi = involution_module_character(&g, &cc, w0).unwrap();
        for (c, class) in cc.classes.iter().enumerate() {
            let sign = if g.length(class.representative).is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(chi.values[c], sign);
        }
        let order3 = cc.classes.iter().position(|c| c.element_order == 3).unwrap();
        assert!(matches!(involution_module_character(&g, &cc, order3), Err(Error::NotInvolutionClass(_))));
    }

    #[test]
    fn small_groups_pass() {
        for spec in ["A3", "B3", "H3", "D4", "I2(6)"] {
            let g = Group::from_spec(spec).unwrap();
            let a = CellAnalysis::compute(g.clone()).unwrap();
            assert!(check_kottwitz(&a).unwrap().passed(), "{spec}");
            assert!(check_left_connected(&g, &a.left).passed(), "{spec}");
            let all: Vec<usize> = (0..g.order()).collect();
            let tt = tau_partition(&g, &all, TauMode::Strings);
            assert!(check_tilde_tau_conjecture(&g, &a.left, &tt.partition, &a.a_of_element).passed(), "{spec}");
            let table = cuspidal_intersections(&a, true);
            assert!(table.rows_sum_correctly());
            assert!(!table.rows.is_empty());
        }
    }

    #[test]
    fn longest_element_row() {
        // w0 is central and cuspidal in B3; its class is {w0}.
        let g = Group::from_spec("B3").unwrap();
        let a = CellAnalysis::compute(g.clone()).unwrap();
        let table = cuspidal_intersections(&a, true);
        let row = table.rows.iter().find(|r| r.class == g.word(g.longest())).unwrap();
        let sign = a.table.name(a.table.sign()).to_string();
        assert_eq!(row.counts, vec![(sign, 1)]);
    }
}
