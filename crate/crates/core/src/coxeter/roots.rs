//! Exact root systems and elements as signed permutations of roots.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::graph::CoxeterGraph;
use crate::algebra::{cos_minimal_polynomial, IntPoly, QuotientRing};
use crate::error::{Error, Result};

/// Element of `W` stored as the images of the positive roots.
///
/// Root `i + N` is `-(root i)`, so the images of negative roots are implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    images: Box<[u16]>,
}

impl GroupElement {
    pub fn images(&self) -> &[u16] {
        &self.images
    }
}

/// The geometric realization of `W` with exact root coordinates.
#[derive(Clone, Debug)]
pub struct RootDatum {
    graph: CoxeterGraph,
    ring: QuotientRing,
    gamma: f64,
    cartan: Vec<Vec<IntPoly>>,
    roots: Vec<Vec<IntPoly>>,
    gen_perms: Vec<Vec<u16>>,
}

/// `C_j(x)` with `C_0 = 2`, `C_1 = x`, `C_{j+1} = x C_j - C_{j-1}`, so that
/// `C_j(2cos θ) = 2cos(jθ)`.
fn chebyshev(j: usize) -> IntPoly {
    let mut a: IntPoly = vec![2];
    let mut b: IntPoly = vec![0, 1];
    if j == 0 {
        return a;
    }
    for _ in 1..j {
        let mut next = vec![0i64; b.len() + 1];
        for (i, &c) in b.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, &c) in a.iter().enumerate() {
            next[i] -= c;
        }
        a = b;
        b = next;
    }
    b
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl RootDatum {
    pub fn new(graph: CoxeterGraph) -> Result<Self> {
        let n = graph.rank();
        let crystallographic = |m: u32| matches!(m, 2 | 3 | 4 | 6);
        let mut big_m = 1u32;
        for i in 0..n {
            for j in 0..n {
                let m = graph.m(i, j);
                if i != j && !crystallographic(m) {
                    big_m = big_m / gcd(big_m, m) * m;
                }
            }
        }
        let ring = if big_m == 1 {
            QuotientRing::integers()
        } else {
            QuotientRing::new(cos_minimal_polynomial(big_m))
        };
        let gamma = if big_m == 1 { 0.0 } else { 2.0 * (std::f64::consts::PI / big_m as f64).cos() };
        let mut cartan = vec![vec![ring.zero(); n]; n];
        for i in 0..n {
            cartan[i][i] = ring.from_int(2);
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = graph.m(i, j);
                cartan[i][j] = match m {
                    2 => ring.zero(),
                    3 => ring.from_int(-1),
                    4 => ring.from_int(if i < j { -2 } else { -1 }),
                    6 => ring.from_int(if i < j { -3 } else { -1 }),
                    _ => ring.neg(&ring.reduce(&chebyshev((big_m / m) as usize))),
                };
            }
        }
        let mut datum = RootDatum { graph, ring, gamma, cartan, roots: vec![], gen_perms: vec![] };
        datum.generate_roots()?;
        Ok(datum)
    }

    fn reflect(&self, i: usize, root: &[IntPoly]) -> Vec<IntPoly> {
        let r = &self.ring;
        let mut pairing = r.zero();
        for (j, c) in root.iter().enumerate() {
            pairing = r.add(&pairing, &r.mul(&self.cartan[i][j], c));
        }
        let mut out = root.to_vec();
        out[i] = r.sub(&out[i], &pairing);
        out
    }

    fn generate_roots(&mut self) -> Result<()> {
        let n = self.rank();
        let expected = self.graph.num_positive_roots();
        let mut roots: Vec<Vec<IntPoly>> = Vec::new();
        let mut index: HashMap<Vec<IntPoly>, usize> = HashMap::new();
        for i in 0..n {
            let mut v = vec![self.ring.zero(); n];
            v[i] = self.ring.from_int(1);
            index.insert(v.clone(), i);
            roots.push(v);
        }
        let mut k = 0;
        while k < roots.len() {
            for i in 0..n {
                if k == i {
                    continue;
                }
                let image = self.reflect(i, &roots[k]);
                if !index.contains_key(&image) {
                    if roots.len() >= expected {
                        return Err(Error::NonFiniteType("root system larger than expected".into()));
                    }
                    index.insert(image.clone(), roots.len());
                    roots.push(image);
                }
            }
            k += 1;
        }
        if roots.len() != expected || roots.len() > (u16::MAX as usize) / 2 {
            return Err(Error::UnsupportedType(format!(
                "{} positive roots found, {} expected",
                roots.len(),
                expected
            )));
        }
        let big_n = roots.len();
        let mut gen_perms = Vec::with_capacity(n);
        for i in 0..n {
            let mut perm = vec![0u16; 2 * big_n];
            for (k, root) in roots.iter().enumerate() {
                let img = if k == i { (i + big_n) as u16 } else { index[&self.reflect(i, root)] as u16 };
                perm[k] = img;
                perm[k + big_n] = Self::negate_index(img, big_n);
            }
            gen_perms.push(perm);
        }
        self.roots = roots;
        self.gen_perms = gen_perms;
        Ok(())
    }

    #[inline]
    fn negate_index(i: u16, big_n: usize) -> u16 {
        let big_n = big_n as u16;
        if i < big_n {
            i + big_n
        } else {
            i - big_n
        }
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn coefficient_ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// Positive root `i` in simple-root coordinates.
    pub fn root(&self, i: usize) -> &[IntPoly] {
        &self.roots[i]
    }

    pub fn generator_perm(&self, s: usize) -> &[u16] {
        &self.gen_perms[s]
    }

    /// `⟨α_i^∨, α_j⟩` as a float.
    pub fn cartan_entry_f64(&self, i: usize, j: usize) -> f64 {
        self.ring.eval(&self.cartan[i][j], self.gamma)
    }

    /// Matrix of the reflection representation for a word (acting on
    /// simple-root coordinates), in floating point.
    pub fn reflection_matrix_f64(&self, word: &[usize]) -> nalgebra::DMatrix<f64> {
        let n = self.rank();
        let mut m = nalgebra::DMatrix::<f64>::identity(n, n);
        for &s in word {
            let mut g = nalgebra::DMatrix::<f64>::identity(n, n);
            for j in 0..n {
                g[(s, j)] -= self.cartan_entry_f64(s, j);
            }
            m *= g;
        }
        m
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { images: (0..self.roots.len() as u16).collect() }
    }

    pub fn generator(&self, s: usize) -> GroupElement {
        GroupElement { images: self.gen_perms[s][..self.roots.len()].into() }
    }

    /// Image of root index `i` (in `0..2N`).
    #[inline]
    pub fn apply(&self, w: &GroupElement, i: usize) -> usize {
        let big_n = self.roots.len();
        if i < big_n {
            w.images[i] as usize
        } else {
            Self::negate_index(w.images[i - big_n], big_n) as usize
        }
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement { images: b.images.iter().map(|&j| self.apply(a, j as usize) as u16).collect() }
    }

    /// `w s`.
    pub fn mul_generator_right(&self, w: &GroupElement, s: usize) -> GroupElement {
        let p = &self.gen_perms[s];
        GroupElement {
            images: (0..self.roots.len()).map(|k| self.apply(w, p[k] as usize) as u16).collect(),
        }
    }

    /// `s w`.
    pub fn mul_generator_left(&self, s: usize, w: &GroupElement) -> GroupElement {
        let p = &self.gen_perms[s];
        GroupElement { images: w.images.iter().map(|&j| p[j as usize]).collect() }
    }

    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        let big_n = self.roots.len();
        let mut images = vec![0u16; big_n];
        for (i, &j) in w.images.iter().enumerate() {
            let j = j as usize;
            if j < big_n {
                images[j] = i as u16;
            } else {
                images[j - big_n] = (i + big_n) as u16;
            }
        }
        GroupElement { images: images.into() }
    }

    pub fn word_to_element(&self, word: &[usize]) -> Result<GroupElement> {
        let mut w = self.identity();
        for &s in word {
            if s >= self.rank() {
                return Err(Error::IndexOutOfRange { index: s, rank: self.rank() });
            }
            w = self.mul_generator_right(&w, s);
        }
        Ok(w)
    }

    pub fn length(&self, w: &GroupElement) -> usize {
        let big_n = self.roots.len() as u16;
        w.images.iter().filter(|&&j| j >= big_n).count()
    }

    /// `R(w)` as a bitmask.
    pub fn right_descents(&self, w: &GroupElement) -> u32 {
        let big_n = self.roots.len() as u16;
        (0..self.rank()).filter(|&s| w.images[s] >= big_n).fold(0, |m, s| m | (1 << s))
    }

    /// `L(w) = R(w^{-1})` as a bitmask.
    pub fn left_descents(&self, w: &GroupElement) -> u32 {
        self.right_descents(&self.inverse(w))
    }

    /// `(l(w), R(w), L(w))`, descent sets as bitmasks.
    pub fn length_and_descents(&self, w: &GroupElement) -> (usize, u32, u32) {
        (self.length(w), self.right_descents(w), self.left_descents(w))
    }

    /// Lexicographically smallest reduced word.
    pub fn canonical_word(&self, w: &GroupElement) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w));
        let mut cur = w.clone();
        loop {
            let ld = self.left_descents(&cur);
            if ld == 0 {
                return word;
            }
            let s = ld.trailing_zeros() as usize;
            word.push(s);
            cur = self.mul_generator_left(s, &cur);
        }
    }

    /// Bruhat order by the descent recursion.
    pub fn bruhat_leq(&self, y: &GroupElement, w: &GroupElement) -> bool {
        let (mut y, mut w) = (y.clone(), w.clone());
        loop {
            let (ly, lw) = (self.length(&y), self.length(&w));
            if ly > lw {
                return false;
            }
            if ly == 0 {
                return true;
            }
            if ly == lw {
                return y == w;
            }
            let s = self.left_descents(&w).trailing_zeros() as usize;
            let sw = self.mul_generator_left(s, &w);
            if self.left_descents(&y) & (1 << s) != 0 {
                y = self.mul_generator_left(s, &y);
            }
            w = sw;
        }
    }

    /// Minimal left coset representatives `X_I = {w : R(w) ∩ I = ∅}`,
    /// generated without enumerating `W`.
    pub fn min_coset_reps(&self, subset: u32) -> Vec<GroupElement> {
        let mut seen: HashMap<GroupElement, ()> = HashMap::new();
        let e = self.identity();
        seen.insert(e.clone(), ());
        let mut out = vec![e];
        let mut k = 0;
        while k < out.len() {
            let x = out[k].clone();
            let ld = self.left_descents(&x);
            for s in 0..self.rank() {
                if ld & (1 << s) != 0 {
                    continue;
                }
                let sx = self.mul_generator_left(s, &x);
                if self.right_descents(&sx) & subset == 0 && !seen.contains_key(&sx) {
                    seen.insert(sx.clone(), ());
                    out.push(sx);
                }
            }
            k += 1;
        }
        out.sort_by_key(|w| (self.length(w), self.canonical_word(w)));
        out
    }

    /// `w = x u` with `x ∈ X_I`, `u ∈ W_I`; returns `(x, u)`.
    pub fn project_parabolic(&self, subset: u32, w: &GroupElement) -> (GroupElement, GroupElement) {
        let mut x = w.clone();
        let mut u_rev = Vec::new();
        loop {
            let d = self.right_descents(&x) & subset;
            if d == 0 {
                break;
            }
            let s = d.trailing_zeros() as usize;
            x = self.mul_generator_right(&x, s);
            u_rev.push(s);
        }
        u_rev.reverse();
        let u = self.word_to_element(&u_rev).expect("generator in range");
        (x, u)
    }

    /// `|W|` by iterated coset enumeration: `|W| = |X_I| |W_I|` for the
    /// subdiagram obtained by removing the last generator.
    pub fn order_by_cosets(&self) -> Result<u128> {
        let n = self.rank();
        if n == 0 {
            return Ok(1);
        }
        let subset: Vec<usize> = (0..n - 1).collect();
        let mask = (1u32 << (n - 1)) - 1;
        let index = self.min_coset_reps(mask).len() as u128;
        if subset.is_empty() {
            return Ok(index);
        }
        let sub = RootDatum::new(self.graph.subgraph(&subset)?)?;
        Ok(index * sub.order_by_cosets()?)
    }
}
