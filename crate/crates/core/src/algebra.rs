//! Exact arithmetic in quotients `Z[x]/(f)` for monic integer polynomials `f`.
//!
//! Two instances are used throughout the crate: `Z[γ]` with `γ = 2cos(π/m)`
//! for root coordinates of non-crystallographic groups, and the cyclotomic
//! integers `Z[ζ_L]` for character values.

use std::collections::HashMap;

/// Polynomials are stored as coefficient vectors, lowest degree first.
pub type IntPoly = Vec<i64>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Exact division by a monic polynomial; panics if the remainder is nonzero.
fn div_exact_monic(num: &[i64], den: &[i64]) -> IntPoly {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    if rem.len() <= dn {
        assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
    trim(&mut quot);
    quot
}

/// The cyclotomic polynomial `Φ_n`.
pub fn cyclotomic_polynomial(n: u32) -> IntPoly {
    fn go(n: u32, memo: &mut HashMap<u32, IntPoly>) -> IntPoly {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut num = vec![0i64; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                let phi_d = go(d, memo);
                num = div_exact_monic(&num, &phi_d);
            }
        }
        memo.insert(n, num.clone());
        num
    }
    assert!(n >= 1);
    go(n, &mut HashMap::new())
}

/// Minimal polynomial of `2cos(π/m)` over `Q`.
///
/// `Φ_{2m}` is palindromic of degree `2k`; writing `z^j + z^{-j} = C_j(x)`
/// with `x = z + z^{-1}` turns `z^{-k}Φ_{2m}(z)` into a polynomial in `x`.
pub fn cos_minimal_polynomial(m: u32) -> IntPoly {
    assert!(m >= 2);
    let phi = cyclotomic_polynomial(2 * m);
    let k = (phi.len() - 1) / 2;
    // C_0 = 2, C_1 = x, C_{j+1} = x C_j - C_{j-1}
    let mut cheb: Vec<IntPoly> = vec![vec![2], vec![0, 1]];
    while cheb.len() <= k {
        let j = cheb.len() - 1;
        let mut next = vec![0i64; j + 2];
        for (i, &c) in cheb[j].iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, &c) in cheb[j - 1].iter().enumerate() {
            next[i] -= c;
        }
        cheb.push(next);
    }
    let mut out = vec![0i64; k + 1];
    out[0] += phi[k];
    for j in 1..=k {
        for (i, &c) in cheb[j].iter().enumerate() {
            out[i] += phi[k + j] * c;
        }
    }
    trim(&mut out);
    out
}

/// The ring `Z[x]/(f)` for a monic `f` of degree `d ≥ 1`.
///
/// Elements are vectors of exactly `d` coordinates in the power basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    modulus: IntPoly,
    /// `x^{d+i}` reduced, for `0 ≤ i < d - 1`.
    high_powers: Vec<IntPoly>,
}

impl QuotientRing {
    pub fn new(modulus: IntPoly) -> Self {
        let d = modulus.len() - 1;
        assert!(d >= 1 && modulus[d] == 1, "modulus must be monic of positive degree");
        let mut high_powers = Vec::new();
        // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
        let mut cur: IntPoly = modulus[..d].iter().map(|c| -c).collect();
        for _ in 0..d.saturating_sub(1) {
            high_powers.push(cur.clone());
            let top = cur[d - 1];
            let mut next = vec![0i64; d];
            next[1..d].copy_from_slice(&cur[..(d - 1)]);
            for i in 0..d {
                next[i] -= top * modulus[i];
            }
            cur = next;
        }
        QuotientRing { modulus, high_powers }
    }

    /// `Z` itself, as `Z[x]/(x)`.
    pub fn integers() -> Self {
        QuotientRing::new(vec![0, 1])
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub fn zero(&self) -> IntPoly {
        vec![0; self.degree()]
    }

    pub fn from_int(&self, c: i64) -> IntPoly {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    /// The class of `x`.
    pub fn generator(&self) -> IntPoly {
        self.reduce(&[0, 1])
    }

    /// Reduce an arbitrary polynomial.
    pub fn reduce(&self, p: &[i64]) -> IntPoly {
        let d = self.degree();
        let mut out = self.zero();
        for (i, &c) in p.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if i < d {
                out[i] += c;
            } else {
                let r = self.power_of_x(i);
                for j in 0..d {
                    out[j] += c * r[j];
                }
            }
        }
        out
    }

    fn power_of_x(&self, i: usize) -> IntPoly {
        let d = self.degree();
        if i < d {
            let mut v = self.zero();
            v[i] = 1;
            return v;
        }
        if i - d < self.high_powers.len() {
            return self.high_powers[i - d].clone();
        }
        let mut cur: IntPoly = self.modulus[..d].iter().map(|c| -c).collect();
        for _ in d..i {
            cur = self.times_x(&cur);
        }
        cur
    }

    fn times_x(&self, a: &[i64]) -> IntPoly {
        let d = self.degree();
        let top = a[d - 1];
        let mut next = vec![0i64; d];
        next[1..d].copy_from_slice(&a[..(d - 1)]);
        for i in 0..d {
            next[i] -= top * self.modulus[i];
        }
        next
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> IntPoly {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> IntPoly {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &[i64]) -> IntPoly {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(&self, a: &[i64], c: i64) -> IntPoly {
        a.iter().map(|x| x * c).collect()
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    /// `Some(c)` when `a` is the integer `c`.
    pub fn as_integer(&self, a: &[i64]) -> Option<i64> {
        if a[1..].iter().all(|&c| c == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> IntPoly {
        let d = self.degree();
        if let Some(c) = self.as_integer(a) {
            return self.scale(b, c);
        }
        if let Some(c) = self.as_integer(b) {
            return self.scale(a, c);
        }
        let mut prod = vec![0i64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let mut out = prod[..d].to_vec();
        for (k, &c) in prod[d..].iter().enumerate() {
            if c != 0 {
                for j in 0..d {
                    out[j] += c * self.high_powers[k][j];
                }
            }
        }
        out
    }

    /// Numerical value with `x` replaced by `x0`.
    pub fn eval(&self, a: &[i64], x0: f64) -> f64 {
        a.iter().rev().fold(0.0, |acc, &c| acc * x0 + c as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cosine_minimal_polynomials() {
        assert_eq!(cos_minimal_polynomial(2), vec![0, 1]);
        assert_eq!(cos_minimal_polynomial(3), vec![-1, 1]);
        assert_eq!(cos_minimal_polynomial(4), vec![-2, 0, 1]);
        assert_eq!(cos_minimal_polynomial(5), vec![-1, -1, 1]);
        assert_eq!(cos_minimal_polynomial(6), vec![-3, 0, 1]);
        for m in 2..=30u32 {
            let f = cos_minimal_polynomial(m);
            let x = 2.0 * (std::f64::consts::PI / m as f64).cos();
            let ring = QuotientRing::new(f.clone());
            assert!(ring.eval(&f, x).abs() < 1e-7, "m = {m}");
        }
    }

    #[test]
    fn golden_ratio_arithmetic() {
        let ring = QuotientRing::new(cos_minimal_polynomial(5));
        let phi = ring.generator();
        // φ² = φ + 1
        assert_eq!(ring.mul(&phi, &phi), vec![1, 1]);
        let third = ring.mul(&ring.mul(&phi, &phi), &phi);
        assert_eq!(third, vec![1, 2]);
    }

    #[test]
    fn cyclotomic_field_roots_of_unity() {
        let ring = QuotientRing::new(cyclotomic_polynomial(12));
        let z = ring.generator();
        let mut p = ring.from_int(1);
        for _ in 0..12 {
            p = ring.mul(&p, &z);
        }
        assert_eq!(p, ring.from_int(1));
        assert_eq!(ring.reduce(&[0, 0, 0, 0, 0, 0, 1]), ring.from_int(-1));
    }
}
