//! Oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use coxcells::coxeter::{Group, Parabolic};
use coxcells::kl::KlTable;

/// Laurent polynomial in `v` as exponent -> coefficient, zeros removed.
type Poly = BTreeMap<i32, i64>;

fn add_into(acc: &mut Poly, p: &Poly, c: i64, shift: i32) {
    for (&e, &x) in p {
        let slot = acc.entry(e + shift).or_insert(0);
        *slot += c * x;
        if *slot == 0 {
            acc.remove(&(e + shift));
        }
    }
}

/// Hecke algebra element in the standard basis, written independently of
/// the library's own Hecke arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Element(Vec<Poly>);

impl Element {
    fn basis(g: &Group, w: usize) -> Element {
        let mut v = vec![Poly::new(); g.order()];
        v[w].insert(0, 1);
        Element(v)
    }

    /// `T_s^{-1} · self` with `T_s^{-1} = T_s - (v - v^{-1})`.
    fn left_mul_inverse_generator(&self, g: &Group, s: usize) -> Element {
        let mut out = vec![Poly::new(); g.order()];
        for (w, c) in self.0.iter().enumerate() {
            if c.is_empty() {
                continue;
            }
            let sw = g.lmul(s, w);
            add_into(&mut out[sw], c, 1, 0);
            if g.length(sw) < g.length(w) {
                // T_s T_w = T_sw + (v - v^{-1}) T_w
                add_into(&mut out[w], c, 1, 1);
                add_into(&mut out[w], c, -1, -1);
            }
            add_into(&mut out[w], c, -1, 1);
            add_into(&mut out[w], c, 1, -1);
        }
        Element(out)
    }
}

/// `bar(T_w) = T_{s_1}^{-1} ... T_{s_k}^{-1}` for a reduced word of `w`.
fn bar_of_basis(g: &Group, w: usize) -> Element {
    let mut e = Element::basis(g, 0);
    for &s in g.word(w).iter().rev() {
        e = e.left_mul_inverse_generator(g, s as usize);
    }
    e
}

/// Checks that `Σ_y v^{l(y)-l(w)} P_{y,w} T_y` is bar-invariant with
/// off-diagonal coefficients in `v^{-1}Z[v^{-1}]`, which characterizes the
/// KL basis uniquely. Returns the first failing `w`.
pub fn bar_involution_oracle(g: &Group, table: &KlTable) -> Result<(), usize> {
    let bars: Vec<Element> = (0..g.order()).map(|y| bar_of_basis(g, y)).collect();
    for w in 0..g.order() {
        let mut c = vec![Poly::new(); g.order()];
        for y in 0..g.order() {
            let shift = g.length(y) as i32 - g.length(w) as i32;
            for (k, &a) in table.p_q(y, w).iter().enumerate() {
                if a != 0 {
                    c[y].insert(2 * k as i32 + shift, a);
                }
            }
        }
        if c[w] != Poly::from([(0, 1)]) {
            return Err(w);
        }
        if (0..g.order()).any(|y| y != w && c[y].keys().any(|&e| e >= 0)) {
            return Err(w);
        }
        let mut barred = vec![Poly::new(); g.order()];
        for (y, cy) in c.iter().enumerate() {
            let conj: Poly = cy.iter().map(|(&e, &x)| (-e, x)).collect();
            for (z, bz) in bars[y].0.iter().enumerate() {
                if bz.is_empty() {
                    continue;
                }
                for (&e, &x) in &conj {
                    add_into(&mut barred[z], bz, x, e);
                }
            }
        }
        if barred != c {
            return Err(w);
        }
    }
    Ok(())
}

/// Outcome of the KL property suite on one group.
#[derive(Debug, Default)]
pub struct KlPropertyReport {
    pub pairs: usize,
    pub failures: Vec<String>,
}

/// Constant term 1, degree bound, `P_{y,w} = P_{y^{-1},w^{-1}}`,
/// nonnegative coefficients, vanishing outside Bruhat intervals, and
/// `μ(y,w) ≠ 0` only for odd `l(w) - l(y)`.
pub fn kl_property_suite(g: &Group, t: &KlTable) -> KlPropertyReport {
    let mut rep = KlPropertyReport::default();
    let fail = |msg: String, rep: &mut KlPropertyReport| {
        if rep.failures.len() < 10 {
            rep.failures.push(msg);
        }
    };
    for w in 0..g.order() {
        let interval = t.lower_interval_of(w);
        let lw = g.length(w);
        let winv = g.inverse(w);
        let mut inside = vec![false; g.order()];
        for &y in &interval {
            inside[y] = true;
        }
        for y in 0..g.order() {
            let p = t.p_q(y, w);
            if !inside[y] {
                if p.iter().any(|&c| c != 0) {
                    fail(format!("P({y},{w}) nonzero outside the interval"), &mut rep);
                }
                continue;
            }
            rep.pairs += 1;
            let ly = g.length(y);
            if p.first() != Some(&1) {
                fail(format!("P({y},{w}) has constant term {:?}", p.first()), &mut rep);
            }
            if p.iter().any(|&c| c < 0) {
                fail(format!("P({y},{w}) has a negative coefficient"), &mut rep);
            }
            let deg = p.iter().rposition(|&c| c != 0).unwrap_or(0);
            if y != w && 2 * deg + 1 > lw - ly {
                fail(format!("P({y},{w}) violates the degree bound"), &mut rep);
            }
            if y == w && p != [1] {
                fail(format!("P({w},{w}) != 1"), &mut rep);
            }
            if t.p_q(g.inverse(y), winv) != p {
                fail(format!("P({y},{w}) differs from the inverse pair"), &mut rep);
            }
            let mu = t.mu(y, w);
            if mu != 0 && (lw - ly) % 2 == 0 {
                fail(format!("mu({y},{w}) nonzero at even length difference"), &mut rep);
            }
            let top = if y != w && (lw - ly) % 2 == 1 { p.get((lw - ly - 1) / 2).copied().unwrap_or(0) } else { 0 };
            if y != w && top != mu {
                fail(format!("mu({y},{w}) disagrees with the top coefficient"), &mut rep);
            }
        }
    }
    rep
}

/// Irreducible finite types with at most `bound` elements.
pub fn groups_up_to(bound: u128) -> Vec<String> {
    let mut out = Vec::new();
    let fact = |n: u128| (1..=n).product::<u128>();
    for n in 1..=8u128 {
        if fact(n + 1) <= bound {
            out.push(format!("A{n}"));
        }
    }
    for n in 2..=8u128 {
        if (1u128 << n) * fact(n) <= bound {
            out.push(format!("B{n}"));
        }
    }
    for n in 4..=8u128 {
        if (1u128 << (n - 1)) * fact(n) <= bound {
            out.push(format!("D{n}"));
        }
    }
    for (name, order) in [("F4", 1152u128), ("H3", 120), ("H4", 14400), ("E6", 51840)] {
        if order <= bound {
            out.push(name.to_string());
        }
    }
    for m in 3..=12u128 {
        if 2 * m <= bound {
            out.push(format!("I2({m})"));
        }
    }
    out
}

/// A parabolic subgroup of rank `rank(W) - 1` of the given type.
pub fn parabolic_of_type(g: &Group, type_name: &str) -> Parabolic {
    let n = g.rank();
    (0..n)
        .map(|skip| (0..n).filter(|&i| i != skip).collect::<Vec<_>>())
        .map(|subset| Parabolic::new(g, &subset).unwrap())
        .find(|p| p.group.type_name() == type_name)
        .unwrap_or_else(|| panic!("{} has no maximal parabolic of type {type_name}", g.type_name()))
}
