//! The C′-basis: multiplication by generators, full products, the standard
//! basis expansion and the structure-constant characterization of `a`.

use std::collections::BTreeMap;

use crate::coxeter::Group;
use crate::error::{Error, Result};
use crate::kl::KlTable;
use crate::laurent::LaurentPoly;

/// Largest group for which the structure-constant oracle runs.
pub const ORACLE_LIMIT: usize = 2000;

/// `Σ c_w C′_w`, keyed by element index, without zero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CPrimeCombination {
    terms: BTreeMap<usize, LaurentPoly>,
}

impl CPrimeCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `C′_w`.
    pub fn basis(w: usize) -> Self {
        let mut c = Self::zero();
        c.add_term(w, &LaurentPoly::one());
        c
    }

    pub fn terms(&self) -> &BTreeMap<usize, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, w: usize) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += c C′_w`.
    pub fn add_term(&mut self, w: usize, c: &LaurentPoly) {
        self.add_scaled_term(w, c, 1, 0);
    }

    /// `self += k v^e c C′_w`.
    fn add_scaled_term(&mut self, w: usize, c: &LaurentPoly, k: i64, e: i32) {
        if c.is_zero() || k == 0 {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry = entry.add_scaled(c, k, e);
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// `self += k · other`.
    pub fn add_combination(&mut self, other: &CPrimeCombination, k: i64) {
        for (&w, c) in &other.terms {
            self.add_scaled_term(w, c, k, 0);
        }
    }
}

/// `C′_s · x`.
///
/// `C′_s C′_w = (v + v^{-1}) C′_w` if `sw < w`, and otherwise
/// `C′_{sw} + Σ_{z < w, sz < z} μ(z,w) C′_z`.
pub fn cprime_times_generator(table: &KlTable, s: usize, x: &CPrimeCombination) -> CPrimeCombination {
    let g = table.group();
    let mut out = CPrimeCombination::zero();
    for (&w, c) in &x.terms {
        if g.left_descents(w) & (1 << s) != 0 {
            out.add_scaled_term(w, c, 1, 1);
            out.add_scaled_term(w, c, 1, -1);
        } else {
            out.add_term(g.lmul(s, w), c);
            for &(z, m) in table.mu_list(w) {
                if g.left_descents(z as usize) & (1 << s) != 0 {
                    out.add_scaled_term(z as usize, c, m, 0);
                }
            }
        }
    }
    out
}

/// `C′_x C′_y` for every `x`, with `y` fixed; indexed by `x`.
pub fn cprime_products_with(table: &KlTable, y: usize) -> Vec<CPrimeCombination> {
    let g = table.group();
    let mut prod: Vec<CPrimeCombination> = Vec::with_capacity(g.order());
    prod.push(CPrimeCombination::basis(y));
    for x in 1..g.order() {
        let s = g.left_descents(x).trailing_zeros() as usize;
        let xp = g.lmul(s, x);
        let mut p = cprime_times_generator(table, s, &prod[xp]);
        for &(z, m) in table.mu_list(xp) {
            if g.left_descents(z as usize) & (1 << s) != 0 {
                p.add_combination(&prod[z as usize], -m);
            }
        }
        prod.push(p);
    }
    prod
}

/// `max_{x,y} deg_v h_{x,y,z}` for every `z`, where
/// `C′_x C′_y = Σ_z h_{x,y,z} C′_z`.
pub fn structure_constant_a_values(table: &KlTable) -> Result<Vec<u32>> {
    let g = table.group();
    if g.order() > ORACLE_LIMIT {
        return Err(Error::OracleScaleExceeded { order: g.order(), limit: ORACLE_LIMIT });
    }
    let mut best = vec![0i32; g.order()];
    for y in 0..g.order() {
        for p in cprime_products_with(table, y) {
            for (&z, h) in p.terms() {
                if let Some(d) = h.degree() {
                    best[z] = best[z].max(d);
                }
            }
        }
    }
    Ok(best.into_iter().map(|d| d as u32).collect())
}

/// The oracle value for a single `z`.
pub fn structure_constant_a_oracle(table: &KlTable, z: usize) -> Result<u32> {
    Ok(structure_constant_a_values(table)?[z])
}

/// An element `Σ c_w T_w` of the Hecke algebra in the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    coeffs: Vec<LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(g: &Group) -> Self {
        HeckeElement { coeffs: vec![LaurentPoly::zero(); g.order()] }
    }

    /// `T_w`.
    pub fn t(g: &Group, w: usize) -> Self {
        let mut h = Self::zero(g);
        h.coeffs[w] = LaurentPoly::one();
        h
    }

    pub fn coeff(&self, w: usize) -> &LaurentPoly {
        &self.coeffs[w]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn add_scaled(&mut self, other: &HeckeElement, c: &LaurentPoly) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a = &*a + &(b * c);
            }
        }
    }

    /// `T_s · self`, using `T_s T_w = T_{sw}` if `sw > w` and
    /// `T_{sw} + (v - v^{-1}) T_w` if `sw < w`.
    pub fn left_mul_generator(&self, g: &Group, s: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(g);
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sw = g.lmul(s, w);
            out.coeffs[sw] = &out.coeffs[sw] + c;
            if g.left_descents(w) & (1 << s) != 0 {
                out.coeffs[w] = out.coeffs[w].add_scaled(c, 1, 1).add_scaled(c, -1, -1);
            }
        }
        out
    }

    /// `self · other`, multiplying `other` by the `T_w` of `self` along
    /// canonical words.
    pub fn mul(&self, g: &Group, other: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(g);
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = other.clone();
            for &s in g.word(w).iter().rev() {
                term = term.left_mul_generator(g, s as usize);
            }
            out.add_scaled(&term, c);
        }
        out
    }

    /// `C′_w = Σ_y v^{l(y)-l(w)} P_{y,w} T_y`.
    pub fn from_cprime(table: &KlTable, w: usize) -> HeckeElement {
        let g = table.group();
        let mut h = HeckeElement::zero(g);
        for y in table.lower_interval_of(w) {
            let shift = g.length(y) as i32 - g.length(w) as i32;
            h.coeffs[y] = table.kl_polynomial(y, w).shift(shift);
        }
        h
    }

    pub fn from_combination(table: &KlTable, x: &CPrimeCombination) -> HeckeElement {
        let mut h = HeckeElement::zero(table.group());
        for (&w, c) in x.terms() {
            h.add_scaled(&HeckeElement::from_cprime(table, w), c);
        }
        h
    }
}
