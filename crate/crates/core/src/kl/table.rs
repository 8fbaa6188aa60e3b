//! The Kazhdan-Lusztig polynomial table.
//!
//! Rows are filled one length stratum at a time; rows within a stratum are
//! independent and computed in parallel. For each `w` only the pairs
//! `(x, w)` with `x` extremal are stored: `x < w`, `L(x) ⊇ L(w)` and
//! `R(x) ⊇ R(w)`. Any other `P_{y,w}` is found by moving `y` up along left
//! multiplication by `L(w)` and right multiplication by `R(w)`, which does
//! not change the polynomial. Distinct polynomials are interned.
//!
//! Polynomials are held in `q = v²`; [`KlTable::kl_polynomial`] returns the
//! Laurent form in `v`.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::coxeter::Group;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Which left descent drives the recursion `P_{x,w}` from `v = sw`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentChoice {
    Smallest,
    Largest,
}

const ONE: u32 = 0;

#[derive(Default)]
struct Row {
    xs: Vec<u32>,
    polys: Vec<u32>,
}

pub struct KlTable {
    group: Arc<Group>,
    rows: Vec<Row>,
    store: Vec<Box<[i64]>>,
    mu: Vec<Vec<(u32, i64)>>,
}

struct RowResult {
    xs: Vec<u32>,
    polys: Vec<Vec<i64>>,
    mu: Vec<(u32, i64)>,
}

/// Per-thread scratch space for interval enumeration.
struct Scratch {
    stamp: Vec<u32>,
    current: u32,
    queue: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { stamp: vec![0; n], current: 0, queue: Vec::new() }
    }

    fn next_stamp(&mut self) -> u32 {
        self.current += 1;
        if self.current == u32::MAX {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.current = 1;
        }
        self.current
    }
}

fn poly_add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize, c: i64) -> Result<()> {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &x) in p.iter().enumerate() {
        let t = x.checked_mul(c).ok_or(Error::Overflow("KL polynomial"))?;
        acc[i + shift] = acc[i + shift].checked_add(t).ok_or(Error::Overflow("KL polynomial"))?;
    }
    Ok(())
}

impl KlTable {
    pub fn new(group: Arc<Group>) -> Result<Self> {
        Self::with_choice(group, DescentChoice::Smallest)
    }

    pub fn with_choice(group: Arc<Group>, choice: DescentChoice) -> Result<Self> {
        let n = group.order();
        let mut table = KlTable {
            group: group.clone(),
            rows: (0..n).map(|_| Row::default()).collect(),
            store: vec![vec![1i64].into_boxed_slice()],
            mu: vec![Vec::new(); n],
        };
        let mut intern: HashMap<Box<[i64]>, u32> = HashMap::new();
        intern.insert(vec![1i64].into_boxed_slice(), ONE);
        let max_len = group.max_length();
        let mut start = 1;
        for len in 1..=max_len {
            let mut end = start;
            while end < n && group.length(end) == len {
                end += 1;
            }
            let results: Vec<Result<RowResult>> = (start..end)
                .into_par_iter()
                .map_init(|| Scratch::new(n), |scratch, w| table.compute_row(w, choice, scratch))
                .collect();
            for (w, res) in (start..end).zip(results) {
                let res = res?;
                let mut ids = Vec::with_capacity(res.polys.len());
                for p in res.polys {
                    let p = p.into_boxed_slice();
                    let id = match intern.get(&p) {
                        Some(&id) => id,
                        None => {
                            let id = table.store.len() as u32;
                            table.store.push(p.clone());
                            intern.insert(p, id);
                            id
                        }
                    };
                    ids.push(id);
                }
                table.rows[w] = Row { xs: res.xs, polys: ids };
                table.mu[w] = res.mu;
            }
            start = end;
        }
        Ok(table)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    /// Move `x` up until it is extremal with respect to `w`.
    #[inline]
    fn climb(&self, mut x: usize, w: usize) -> usize {
        let g = &*self.group;
        let (lw, rw) = (g.left_descents(w), g.right_descents(w));
        loop {
            let a = lw & !g.left_descents(x);
            if a != 0 {
                x = g.lmul(a.trailing_zeros() as usize, x);
                continue;
            }
            let b = rw & !g.right_descents(x);
            if b != 0 {
                x = g.rmul(x, b.trailing_zeros() as usize);
                continue;
            }
            return x;
        }
    }

    /// Interned id of `P_{x,w}`, or `None` when it is zero.
    #[inline]
    fn lookup(&self, x: usize, w: usize) -> Option<u32> {
        let x = self.climb(x, w);
        if x == w {
            return Some(ONE);
        }
        if self.group.length(x) >= self.group.length(w) {
            return None;
        }
        let row = &self.rows[w];
        row.xs.binary_search(&(x as u32)).ok().map(|i| row.polys[i])
    }

    /// Enumerate `[e, v]` into `scratch.queue`, marking members with the
    /// current stamp.
    fn lower_interval(&self, v: usize, scratch: &mut Scratch) {
        let g = &*self.group;
        let stamp = scratch.next_stamp();
        scratch.queue.clear();
        let (lv, rv) = (g.left_descents(v), g.right_descents(v));
        let seeds = self.rows[v].xs.iter().map(|&x| x as usize).chain(std::iter::once(v));
        for seed in seeds {
            if scratch.stamp[seed] == stamp {
                continue;
            }
            scratch.stamp[seed] = stamp;
            let mut k = scratch.queue.len();
            scratch.queue.push(seed as u32);
            while k < scratch.queue.len() {
                let y = scratch.queue[k] as usize;
                k += 1;
                let mut down = lv & g.left_descents(y);
                while down != 0 {
                    let t = down.trailing_zeros() as usize;
                    down &= down - 1;
                    let ty = g.lmul(t, y);
                    if scratch.stamp[ty] != stamp {
                        scratch.stamp[ty] = stamp;
                        scratch.queue.push(ty as u32);
                    }
                }
                let mut down = rv & g.right_descents(y);
                while down != 0 {
                    let t = down.trailing_zeros() as usize;
                    down &= down - 1;
                    let yt = g.rmul(y, t);
                    if scratch.stamp[yt] != stamp {
                        scratch.stamp[yt] = stamp;
                        scratch.queue.push(yt as u32);
                    }
                }
            }
        }
    }

    fn compute_row(&self, w: usize, choice: DescentChoice, scratch: &mut Scratch) -> Result<RowResult> {
        let g = &*self.group;
        let (lw, rw) = (g.left_descents(w), g.right_descents(w));
        let s = match choice {
            DescentChoice::Smallest => lw.trailing_zeros() as usize,
            DescentChoice::Largest => 31 - lw.leading_zeros() as usize,
        };
        let v = g.lmul(s, w);
        let len_w = g.length(w);
        self.lower_interval(v, scratch);
        let mut xs: Vec<u32> = scratch
            .queue
            .iter()
            .map(|&y| y as usize)
            .filter(|&y| g.left_descents(y) & (1 << s) == 0)
            .map(|y| g.lmul(s, y))
            .filter(|&x| x != w && g.left_descents(x) & lw == lw && g.right_descents(x) & rw == rw)
            .map(|x| x as u32)
            .collect();
        xs.sort_unstable();
        let mu_v: Vec<(usize, i64, usize)> = self.mu[v]
            .iter()
            .filter(|&&(z, _)| g.left_descents(z as usize) & (1 << s) != 0)
            .map(|&(z, m)| (z as usize, m, (len_w - g.length(z as usize)) / 2))
            .collect();
        let mut polys = Vec::with_capacity(xs.len());
        let mut mu = Vec::new();
        for &x in &xs {
            let x = x as usize;
            let len_x = g.length(x);
            let mut acc: Vec<i64> = Vec::new();
            if let Some(id) = self.lookup(g.lmul(s, x), v) {
                poly_add_shifted(&mut acc, &self.store[id as usize], 0, 1)?;
            }
            if let Some(id) = self.lookup(x, v) {
                poly_add_shifted(&mut acc, &self.store[id as usize], 1, 1)?;
            }
            for &(z, m, shift) in &mu_v {
                if g.length(z) < len_x {
                    continue;
                }
                if let Some(id) = self.lookup(x, z) {
                    poly_add_shifted(&mut acc, &self.store[id as usize], shift, -m)?;
                }
            }
            while acc.len() > 1 && *acc.last().unwrap() == 0 {
                acc.pop();
            }
            debug_assert_eq!(acc.first(), Some(&1));
            let gap = len_w - len_x;
            if gap % 2 == 1 {
                let top = acc.get((gap - 1) / 2).copied().unwrap_or(0);
                if top != 0 {
                    mu.push((x as u32, top));
                }
            }
            polys.push(acc);
        }
        let mut lw_bits = lw;
        while lw_bits != 0 {
            let t = lw_bits.trailing_zeros() as usize;
            lw_bits &= lw_bits - 1;
            mu.push((g.lmul(t, w) as u32, 1));
        }
        let mut rw_bits = rw;
        while rw_bits != 0 {
            let t = rw_bits.trailing_zeros() as usize;
            rw_bits &= rw_bits - 1;
            mu.push((g.rmul(w, t) as u32, 1));
        }
        mu.sort_unstable();
        mu.dedup();
        Ok(RowResult { xs, polys, mu })
    }

    /// `P_{y,w}` as coefficients in `q = v²` (empty when zero).
    pub fn p_q(&self, y: usize, w: usize) -> &[i64] {
        match self.lookup(y, w) {
            Some(id) => &self.store[id as usize],
            None => &[],
        }
    }

    /// `P_{y,w}` in `v`, with even powers only.
    pub fn kl_polynomial(&self, y: usize, w: usize) -> LaurentPoly {
        LaurentPoly::from_q_coeffs(self.p_q(y, w))
    }

    /// Coefficient of `v^{l(w)-l(y)-1}` in `P_{y,w}`.
    pub fn mu(&self, y: usize, w: usize) -> i64 {
        match self.mu[w].binary_search_by_key(&(y as u32), |&(z, _)| z) {
            Ok(i) => self.mu[w][i].1,
            Err(_) => 0,
        }
    }

    /// All `(z, μ(z,w))` with `z < w` and `μ(z,w) ≠ 0`, sorted by `z`.
    pub fn mu_list(&self, w: usize) -> &[(u32, i64)] {
        &self.mu[w]
    }

    /// Extremal `x` stored for `w`, sorted.
    pub fn extremal(&self, w: usize) -> &[u32] {
        &self.rows[w].xs
    }

    /// All `y ≤ w`, sorted.
    pub fn lower_interval_of(&self, w: usize) -> Vec<usize> {
        let mut scratch = Scratch::new(self.group.order());
        self.lower_interval(w, &mut scratch);
        let mut out: Vec<usize> = scratch.queue.iter().map(|&y| y as usize).collect();
        out.sort_unstable();
        out
    }

    pub fn num_extremal_pairs(&self) -> usize {
        self.rows.iter().map(|r| r.xs.len()).sum()
    }

    pub fn num_distinct_polynomials(&self) -> usize {
        self.store.len()
    }

    pub fn num_mu_edges(&self) -> usize {
        self.mu.iter().map(|m| m.len()).sum()
    }

    /// Distinct polynomials in `q`, indexed by interned id.
    pub fn polynomials(&self) -> impl Iterator<Item = &[i64]> {
        self.store.iter().map(|p| &**p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_example() {
        let g = Group::from_spec("A3").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        let y = g.from_word(&[1]).unwrap();
        let w = g.from_word(&[1, 0, 2, 1]).unwrap();
        assert_eq!(t.kl_polynomial(y, w).to_string(), "1 + v^2");
        assert_eq!(t.mu(y, w), 1);
        assert_eq!(t.kl_polynomial(w, w), LaurentPoly::one());
        assert!(t.kl_polynomial(w, y).is_zero());
    }

    #[test]
    fn intervals_match_bruhat() {
        for spec in ["A3", "B3", "H3", "I2(6)"] {
            let g = Group::from_spec(spec).unwrap();
            let t = KlTable::new(g.clone()).unwrap();
            for w in 0..g.order() {
                let iv = t.lower_interval_of(w);
                let direct: Vec<usize> = (0..g.order()).filter(|&y| g.bruhat_leq(y, w)).collect();
                assert_eq!(iv, direct, "{spec} w={w}");
            }
        }
    }

    #[test]
    fn dihedral_polynomials_are_trivial() {
        let g = Group::from_spec("I2(7)").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        for w in 0..g.order() {
            for y in 0..g.order() {
                let expect = if g.bruhat_leq(y, w) { LaurentPoly::one() } else { LaurentPoly::zero() };
                assert_eq!(t.kl_polynomial(y, w), expect);
            }
        }
    }
}
