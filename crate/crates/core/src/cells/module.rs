//! W-graph modules of left cells.
//!
//! For a left cell `Γ` with basis `{e_y}`:
//!
//! ```text
//! T_s e_y = -v^{-1} e_y                              if sy < y
//! T_s e_y = v e_y + Σ_{x ∈ Γ, sx < x} μ̃(x,y) e_x     if sy > y
//! ```
//!
//! with `μ̃` the symmetrized μ.

use crate::characters::ClassFunction;
use crate::coxeter::{ConjugacyAnalysis, Group};
use crate::kl::MuProvider;
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug)]
pub struct WGraphModule {
    elements: Vec<usize>,
    descents: Vec<u32>,
    /// Symmetric μ̃ adjacency in local indices.
    couplings: Vec<Vec<(u32, i64)>>,
}

pub fn cell_module(g: &Group, mu: &impl MuProvider, cell: &[usize]) -> WGraphModule {
    let mut elements = cell.to_vec();
    elements.sort_unstable();
    let local = |w: usize| elements.binary_search(&w).ok();
    let mut couplings = vec![Vec::new(); elements.len()];
    for (j, &y) in elements.iter().enumerate() {
        for &(z, m) in mu.mu_list(y) {
            if let Some(i) = local(z as usize) {
                couplings[i].push((j as u32, m));
                couplings[j].push((i as u32, m));
            }
        }
    }
    for c in &mut couplings {
        c.sort_unstable();
    }
    let descents = elements.iter().map(|&w| g.left_descents(w)).collect();
    WGraphModule { elements, descents, couplings }
}

impl WGraphModule {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Left descent set of each basis element.
    pub fn descents(&self) -> &[u32] {
        &self.descents
    }

    /// `(x, μ̃(x,y))` for basis index `y`.
    pub fn couplings(&self, y: usize) -> &[(u32, i64)] {
        &self.couplings[y]
    }

    /// `T_s` applied to `vec`, at `v = 1`.
    fn apply_at_one(&self, s: usize, vec: &[i64], out: &mut [i64]) {
        out.iter_mut().for_each(|x| *x = 0);
        let bit = 1u32 << s;
        for (y, &c) in vec.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if self.descents[y] & bit != 0 {
                out[y] -= c;
            } else {
                out[y] += c;
                for &(x, m) in &self.couplings[y] {
                    if self.descents[x as usize] & bit != 0 {
                        out[x as usize] += m * c;
                    }
                }
            }
        }
    }

    /// `T_s` applied to `vec`, generic `v`.
    pub fn apply(&self, s: usize, vec: &[LaurentPoly]) -> Vec<LaurentPoly> {
        let mut out = vec![LaurentPoly::zero(); vec.len()];
        let bit = 1u32 << s;
        for (y, c) in vec.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if self.descents[y] & bit != 0 {
                out[y] = out[y].add_scaled(c, -1, -1);
            } else {
                out[y] = out[y].add_scaled(c, 1, 1);
                for &(x, m) in &self.couplings[y] {
                    if self.descents[x as usize] & bit != 0 {
                        out[x as usize] = out[x as usize].add_scaled(c, m, 0);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `T_w` for the word `word` (columns are images of `e_y`).
    pub fn word_matrix(&self, word: &[usize]) -> Vec<Vec<LaurentPoly>> {
        (0..self.dim())
            .map(|y| {
                let mut vec = vec![LaurentPoly::zero(); self.dim()];
                vec[y] = LaurentPoly::one();
                for &s in word.iter().rev() {
                    vec = self.apply(s, &vec);
                }
                vec
            })
            .collect()
    }

    /// Trace of `T_w` on the generic module, `w` given as a reduced word.
    pub fn hecke_trace(&self, word: &[usize]) -> LaurentPoly {
        let m = self.word_matrix(word);
        m.iter().enumerate().fold(LaurentPoly::zero(), |acc, (y, col)| &acc + &col[y])
    }

    /// Trace of `w` on the `v = 1` specialization.
    pub fn trace_at_one(&self, word: &[usize]) -> i64 {
        let n = self.dim();
        let mut cur = vec![0i64; n];
        let mut next = vec![0i64; n];
        let mut total = 0;
        for y in 0..n {
            cur.iter_mut().for_each(|x| *x = 0);
            cur[y] = 1;
            for &s in word.iter().rev() {
                self.apply_at_one(s, &cur, &mut next);
                std::mem::swap(&mut cur, &mut next);
            }
            total += cur[y];
        }
        total
    }

    /// Character of the `v = 1` specialization, evaluated on the minimal
    /// length representative of each class.
    pub fn character(&self, g: &Group, cc: &ConjugacyAnalysis) -> ClassFunction {
        ClassFunction::new(
            cc.classes.iter().map(|c| self.trace_at_one(&g.canonical_word(c.representative))).collect(),
        )
    }

    /// Check `(T_s - v)(T_s + v^{-1}) = 0` and the braid relations.
    pub fn check_relations(&self, g: &Group) -> bool {
        let id: Vec<Vec<LaurentPoly>> = (0..self.dim())
            .map(|y| {
                let mut v = vec![LaurentPoly::zero(); self.dim()];
                v[y] = LaurentPoly::one();
                v
            })
            .collect();
        let vm = &LaurentPoly::v() - &LaurentPoly::v().bar();
        for s in 0..g.rank() {
            for col in &id {
                let ts = self.apply(s, col);
                let tss = self.apply(s, &ts);
                // T_s² = 1 + (v - v^{-1}) T_s
                let ok = tss.iter().zip(&ts).zip(col).all(|((a, b), c)| *a == &(b * &vm) + c);
                if !ok {
                    return false;
                }
            }
        }
        let m = g.graph().matrix();
        for s in 0..g.rank() {
            for t in s + 1..g.rank() {
                let k = m[s][t] as usize;
                let lhs: Vec<usize> = (0..k).map(|i| if i % 2 == 0 { s } else { t }).collect();
                let rhs: Vec<usize> = (0..k).map(|i| if i % 2 == 0 { t } else { s }).collect();
                if self.word_matrix(&lhs) != self.word_matrix(&rhs) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::left_cells;
    use crate::kl::KlTable;

    #[test]
    fn trivial_and_sign_cells() {
        let g = Group::from_spec("B3").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        let e = cell_module(&g, &t, &[0]);
        let w0 = cell_module(&g, &t, &[g.longest()]);
        let word = g.canonical_word(g.from_word(&[0, 1, 2]).unwrap());
        assert_eq!(e.hecke_trace(&word), LaurentPoly::monomial(1, 3));
        assert_eq!(w0.hecke_trace(&word), LaurentPoly::monomial(-1, -3));
        assert_eq!(e.hecke_trace(&[]), LaurentPoly::one());
    }

    #[test]
    fn a2_middle_cell_is_reflection_representation() {
        let g = Group::from_spec("A2").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        let cc = ConjugacyAnalysis::new(&g);
        let m = cell_module(&g, &t, &[g.from_word(&[0]).unwrap(), g.from_word(&[1, 0]).unwrap()]);
        assert_eq!(m.character(&g, &cc).values, vec![2, 0, -1]);
    }

    #[test]
    fn relations_hold_on_all_cells() {
        for spec in ["A3", "B3", "H3", "I2(5)"] {
            let g = Group::from_spec(spec).unwrap();
            let t = KlTable::new(g.clone()).unwrap();
            for cell in left_cells(&g, &t).blocks() {
                assert!(cell_module(&g, &t, cell).check_relations(&g), "{spec}");
            }
        }
    }

    #[test]
    fn cells_sum_to_regular_character() {
        let g = Group::from_spec("F4").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        let cc = ConjugacyAnalysis::new(&g);
        let mut total = ClassFunction::zero(cc.num_classes());
        for cell in left_cells(&g, &t).blocks() {
            total.add_assign(&cell_module(&g, &t, cell).character(&g, &cc));
        }
        assert_eq!(total.values[0], 1152);
        assert!(total.values[1..].iter().all(|&x| x == 0));
    }
}
