//! Sparse integer Laurent polynomials in `v`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// `Σ c_e v^e` stored as `(e, c)` pairs with strictly increasing `e` and
/// nonzero `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: Vec<(i32, i64)>,
}

fn add_checked(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn mul_checked(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c v^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    /// `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// Build from arbitrary `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut t: Vec<(i32, i64)> = terms.into_iter().collect();
        t.sort_unstable_by_key(|&(e, _)| e);
        let mut out: Vec<(i32, i64)> = Vec::with_capacity(t.len());
        for (e, c) in t {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = add_checked(last.1, c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        LaurentPoly { terms: out }
    }

    /// `Σ_k coeffs[k] v^{2k}`, the embedding of a polynomial in `q = v²`.
    pub fn from_q_coeffs(coeffs: &[i64]) -> Self {
        LaurentPoly {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| (2 * k as i32, c))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        match self.terms.binary_search_by_key(&e, |&(x, _)| x) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i32> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Lowest exponent, `None` for zero.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.first().map(|&(e, _)| e)
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|&(e, x)| (e, mul_checked(x, c))).collect() }
    }

    /// `v ↦ v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect() }
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.iter().fold(0, |acc, &(_, c)| add_checked(acc, c))
    }

    /// `self + c v^k · other`, the workhorse of basis manipulations.
    pub fn add_scaled(&self, other: &Self, c: i64, k: i32) -> Self {
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let a = self.terms.get(i).copied();
            let b = other.terms.get(j).map(|&(e, x)| (e + k, mul_checked(x, c)));
            match (a, b) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    let s = add_checked(a.1, b.1);
                    if s != 0 {
                        out.push((a.0, s));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    out.push(a);
                    i += 1;
                }
                (Some(_), Some(b)) | (None, Some(b)) => {
                    out.push(b);
                    j += 1;
                }
                (Some(a), None) => {
                    out.push(a);
                    i += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        LaurentPoly { terms: out }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_scaled(rhs, 1, 0)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_scaled(rhs, -1, 0)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for &(e, c) in &self.terms {
            acc = acc.add_scaled(rhs, c, e);
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (abs, e) {
                (_, 0) => write!(f, "{abs}")?,
                (1, 1) => write!(f, "v")?,
                (1, _) => write!(f, "v^{e}")?,
                (_, 1) => write!(f, "{abs}v")?,
                _ => write!(f, "{abs}v^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i32..6, -20i64..20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    #[test]
    fn display_and_basic_ops() {
        let p = LaurentPoly::from_terms([(0, 1), (2, 1)]);
        assert_eq!(p.to_string(), "1 + v^2");
        let q = LaurentPoly::from_terms([(-1, -1), (1, 1)]);
        assert_eq!(q.to_string(), "-v^-1 + v");
        assert_eq!((&q + &q.bar()).to_string(), "0");
        assert_eq!(p.degree(), Some(2));
        assert_eq!(LaurentPoly::zero().degree(), None);
    }

    proptest! {
        #[test]
        fn no_zero_terms_are_stored(a in arb_poly(), b in arb_poly()) {
            for p in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(p.terms().iter().all(|&(_, c)| c != 0));
                prop_assert!(p.terms().windows(2).all(|w| w[0].0 < w[1].0));
            }
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, LaurentPoly::zero());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a * &b).at_one(), a.at_one() * b.at_one());
        }
    }
}
