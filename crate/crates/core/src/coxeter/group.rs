//! Fully enumerated groups with multiplication tables.
//!
//! Elements are indexed `0..|W|` in order of length and then canonical word,
//! so index `0` is the identity and the last index is `w0`.

use std::collections::HashMap;
use std::sync::Arc;

use super::graph::CoxeterGraph;
use super::roots::{GroupElement, RootDatum};
use crate::error::{Error, Result};

/// Environment variable overriding the enumeration bound.
pub const ENUMERATION_BOUND_VAR: &str = "COXCELLS_MAX_ELEMENTS";
pub const DEFAULT_ENUMERATION_BOUND: usize = 1_000_000;

pub fn enumeration_bound() -> usize {
    std::env::var(ENUMERATION_BOUND_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_BOUND)
}

pub struct Group {
    datum: Arc<RootDatum>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
    words: Vec<Box<[u8]>>,
    length: Vec<u16>,
    rdesc: Vec<u32>,
    ldesc: Vec<u32>,
    rmul: Vec<u32>,
    lmul: Vec<u32>,
    inv: Vec<u32>,
    rank: usize,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group({}, order {})", self.type_name(), self.order())
    }
}

impl Group {
    /// Parse a specification string and enumerate the group.
    pub fn from_spec(spec: &str) -> Result<Arc<Group>> {
        let datum = RootDatum::new(CoxeterGraph::parse(spec)?)?;
        Ok(Arc::new(Group::enumerate(Arc::new(datum))?))
    }

    pub fn enumerate(datum: Arc<RootDatum>) -> Result<Group> {
        Self::enumerate_with_bound(datum, enumeration_bound())
    }

    pub fn enumerate_with_bound(datum: Arc<RootDatum>, bound: usize) -> Result<Group> {
        let order = datum.graph().order();
        if order > bound as u128 {
            return Err(Error::EnumerationBoundExceeded { order, bound, var: ENUMERATION_BOUND_VAR });
        }
        let rank = datum.rank();
        let mut elements: Vec<GroupElement> = vec![datum.identity()];
        let mut words: Vec<Box<[u8]>> = vec![Box::new([])];
        let mut index: HashMap<GroupElement, u32> = HashMap::new();
        index.insert(datum.identity(), 0);
        let mut layer_start = 0;
        loop {
            let layer_end = elements.len();
            let mut next: Vec<(Box<[u8]>, GroupElement)> = Vec::new();
            let mut seen: HashMap<GroupElement, ()> = HashMap::new();
            for k in layer_start..layer_end {
                for s in 0..rank {
                    let sw = datum.mul_generator_left(s, &elements[k]);
                    if index.contains_key(&sw) || seen.contains_key(&sw) {
                        continue;
                    }
                    // sw is longer than w; its canonical word starts with its
                    // smallest left descent.
                    let t = datum.left_descents(&sw).trailing_zeros() as usize;
                    let tsw = datum.mul_generator_left(t, &sw);
                    let rest = &words[index[&tsw] as usize];
                    let mut word = Vec::with_capacity(rest.len() + 1);
                    word.push(t as u8);
                    word.extend_from_slice(rest);
                    seen.insert(sw.clone(), ());
                    next.push((word.into(), sw));
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            for (word, w) in next {
                index.insert(w.clone(), elements.len() as u32);
                elements.push(w);
                words.push(word);
            }
            layer_start = layer_end;
        }
        let n = elements.len();
        if n as u128 != order {
            return Err(Error::NonFiniteType(format!("enumerated {n} elements, expected {order}")));
        }
        let mut rmul = vec![0u32; n * rank];
        let mut lmul = vec![0u32; n * rank];
        let mut inv = vec![0u32; n];
        let mut length = vec![0u16; n];
        let mut rdesc = vec![0u32; n];
        let mut ldesc = vec![0u32; n];
        for (k, w) in elements.iter().enumerate() {
            for s in 0..rank {
                rmul[k * rank + s] = index[&datum.mul_generator_right(w, s)];
                lmul[k * rank + s] = index[&datum.mul_generator_left(s, w)];
            }
            inv[k] = index[&datum.inverse(w)];
            length[k] = words[k].len() as u16;
            rdesc[k] = datum.right_descents(w);
        }
        for k in 0..n {
            ldesc[k] = rdesc[inv[k] as usize];
        }
        Ok(Group { datum, elements, index, words, length, rdesc, ldesc, rmul, lmul, inv, rank })
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn graph(&self) -> &CoxeterGraph {
        self.datum.graph()
    }

    pub fn type_name(&self) -> &str {
        self.datum.graph().type_name()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn longest(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn max_length(&self) -> usize {
        self.length[self.longest()] as usize
    }

    pub fn element(&self, w: usize) -> &GroupElement {
        &self.elements[w]
    }

    pub fn index_of(&self, g: &GroupElement) -> usize {
        self.index[g] as usize
    }

    pub fn word(&self, w: usize) -> &[u8] {
        &self.words[w]
    }

    /// The canonical word as generator indices.
    pub fn canonical_word(&self, w: usize) -> Vec<usize> {
        self.words[w].iter().map(|&s| s as usize).collect()
    }

    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut w = 0;
        for &s in word {
            if s >= self.rank {
                return Err(Error::IndexOutOfRange { index: s, rank: self.rank });
            }
            w = self.rmul(w, s);
        }
        Ok(w)
    }

    #[inline]
    pub fn length(&self, w: usize) -> usize {
        self.length[w] as usize
    }

    #[inline]
    pub fn right_descents(&self, w: usize) -> u32 {
        self.rdesc[w]
    }

    #[inline]
    pub fn left_descents(&self, w: usize) -> u32 {
        self.ldesc[w]
    }

    /// `w s`.
    #[inline]
    pub fn rmul(&self, w: usize, s: usize) -> usize {
        self.rmul[w * self.rank + s] as usize
    }

    /// `s w`.
    #[inline]
    pub fn lmul(&self, s: usize, w: usize) -> usize {
        self.lmul[w * self.rank + s] as usize
    }

    #[inline]
    pub fn inverse(&self, w: usize) -> usize {
        self.inv[w] as usize
    }

    /// `x y`, by right-multiplying along the canonical word of `y`.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.words[y].iter().fold(x, |acc, &s| self.rmul(acc, s as usize))
    }

    /// Bruhat order by the descent recursion.
    pub fn bruhat_leq(&self, mut y: usize, mut w: usize) -> bool {
        loop {
            let (ly, lw) = (self.length(y), self.length(w));
            if ly > lw {
                return false;
            }
            if ly == 0 {
                return true;
            }
            if ly == lw {
                return y == w;
            }
            let s = self.ldesc[w].trailing_zeros() as usize;
            if self.ldesc[y] & (1 << s) != 0 {
                y = self.lmul(s, y);
            }
            w = self.lmul(s, w);
        }
    }

    /// Support of `w`: generators occurring in any reduced word.
    pub fn support(&self, w: usize) -> u32 {
        self.words[w].iter().fold(0, |m, &s| m | (1 << s))
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.rank) - 1
    }

    /// Indices of `X_I`, in index order.
    pub fn min_coset_reps(&self, subset: u32) -> Vec<usize> {
        (0..self.order()).filter(|&w| self.rdesc[w] & subset == 0).collect()
    }

    /// `w = x u` with `x ∈ X_I` and `u ∈ W_I`; returns `(x, u)`.
    pub fn project_parabolic(&self, subset: u32, w: usize) -> (usize, usize) {
        let mut x = w;
        let mut u_rev = Vec::new();
        loop {
            let d = self.rdesc[x] & subset;
            if d == 0 {
                break;
            }
            let s = d.trailing_zeros() as usize;
            x = self.rmul(x, s);
            u_rev.push(s);
        }
        let u = u_rev.iter().rev().fold(0, |acc, &s| self.rmul(acc, s));
        (x, u)
    }

    /// Element order.
    pub fn element_order(&self, w: usize) -> usize {
        let mut p = w;
        let mut k = 1;
        while p != 0 {
            p = self.mul(p, w);
            k += 1;
        }
        k
    }
}

/// A standard parabolic subgroup `W_I`, enumerated as a group in its own
/// right, with its embedding into `W`.
#[derive(Debug)]
pub struct Parabolic {
    pub subset: Vec<usize>,
    pub mask: u32,
    pub group: Arc<Group>,
    /// Local index to ambient index.
    pub embed: Vec<usize>,
}

impl Parabolic {
    pub fn new(ambient: &Group, subset: &[usize]) -> Result<Parabolic> {
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if let Some(&bad) = subset.iter().find(|&&s| s >= ambient.rank()) {
            return Err(Error::IndexOutOfRange { index: bad, rank: ambient.rank() });
        }
        let mask = subset.iter().fold(0u32, |m, &s| m | (1 << s));
        let graph = ambient.graph().subgraph(&subset)?;
        let datum = Arc::new(RootDatum::new(graph)?);
        let group = Arc::new(Group::enumerate(datum)?);
        let embed = (0..group.order())
            .map(|u| group.word(u).iter().fold(0, |acc, &s| ambient.rmul(acc, subset[s as usize])))
            .collect();
        Ok(Parabolic { subset, mask, group, embed })
    }

    /// Ambient index to local index, for elements of `W_I`.
    pub fn local_index(&self, ambient: &Group, w: usize) -> Option<usize> {
        if ambient.support(w) & !self.mask != 0 {
            return None;
        }
        let local: Vec<usize> = ambient
            .word(w)
            .iter()
            .map(|&s| self.subset.iter().position(|&t| t == s as usize).unwrap())
            .collect();
        self.group.from_word(&local).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_and_lengths() {
        let a2 = Group::from_spec("A2").unwrap();
        assert_eq!(a2.order(), 6);
        let mut lens: Vec<usize> = (0..6).map(|w| a2.length(w)).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(Group::from_spec("I2(4)").unwrap().order(), 8);
        assert_eq!(Group::from_spec("H3").unwrap().order(), 120);
    }

    #[test]
    fn e6_order() {
        let g = Group::from_spec("E6").unwrap();
        assert_eq!(g.order(), 51840);
        assert_eq!(g.max_length(), 36);
        assert_eq!(g.left_descents(g.longest()), g.full_mask());
    }

    #[test]
    fn e8_is_rejected() {
        let err = Group::from_spec("E8").unwrap_err();
        assert!(matches!(err, Error::EnumerationBoundExceeded { order: 696729600, .. }));
    }

    #[test]
    fn tables_are_consistent() {
        for spec in ["A3", "B3", "H3", "I2(5)", "D4"] {
            let g = Group::from_spec(spec).unwrap();
            for w in 0..g.order() {
                assert_eq!(g.from_word(&g.canonical_word(w)).unwrap(), w);
                assert_eq!(g.length(g.inverse(w)), g.length(w));
                assert_eq!(g.left_descents(w), g.right_descents(g.inverse(w)));
                for s in 0..g.rank() {
                    let ws = g.rmul(w, s);
                    assert_eq!(g.rmul(ws, s), w);
                    assert_eq!(g.length(ws).abs_diff(g.length(w)), 1);
                    assert_eq!(g.lmul(s, w), g.inverse(g.rmul(g.inverse(w), s)));
                }
            }
        }
    }

    #[test]
    fn parabolic_indices_multiply() {
        let g = Group::from_spec("B4").unwrap();
        for mask in 0..16u32 {
            let subset: Vec<usize> = (0..4).filter(|s| mask & (1 << s) != 0).collect();
            let p = Parabolic::new(&g, &subset).unwrap();
            let xs = g.min_coset_reps(mask);
            assert_eq!(xs.len() * p.group.order(), g.order());
            for &x in xs.iter().take(5) {
                for &u in &p.embed {
                    assert_eq!(g.length(g.mul(x, u)), g.length(x) + g.length(u));
                }
            }
        }
    }
}
