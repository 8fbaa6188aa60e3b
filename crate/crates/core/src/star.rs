//! Star operations, strings, star orbits and generalized τ-invariants.

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cells::{CellPartition, Side, UnionFind};
use crate::coxeter::Group;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauMode {
    /// Star operations for pairs with `m(s,t) = 3`.
    SimplyLaced,
    /// The string operation `w ↦ w̃` for all pairs with `m(s,t) ≥ 3`.
    Strings,
}

impl TauMode {
    pub fn as_str(self) -> &'static str {
        match self {
            TauMode::SimplyLaced => "simple",
            TauMode::Strings => "strings",
        }
    }

    /// Generator pairs `s < t` the mode operates with, in lex order.
    pub fn pairs(self, g: &Group) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 0..g.rank() {
            for t in s + 1..g.rank() {
                let m = g.graph().m(s, t);
                if (self == TauMode::SimplyLaced && m == 3) || (self == TauMode::Strings && m >= 3) {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// The involution this mode applies for the pair `(s,t)`.
    pub fn apply(self, g: &Group, w: usize, s: usize, t: usize) -> Result<usize> {
        match self {
            TauMode::SimplyLaced => star(g, w, s, t),
            TauMode::Strings => string_tilde(g, w, s, t),
        }
    }
}

impl std::str::FromStr for TauMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simple" | "simply-laced" | "simply_laced" => Ok(TauMode::SimplyLaced),
            "strings" => Ok(TauMode::Strings),
            _ => Err(Error::Format(format!("unknown τ mode {s:?}"))),
        }
    }
}

/// `w ∈ D_R(s,t)`: exactly one of `s`, `t` is a right descent.
pub fn in_domain(g: &Group, w: usize, s: usize, t: usize) -> bool {
    let r = g.right_descents(w);
    ((r >> s) & 1) ^ ((r >> t) & 1) == 1
}

/// The left-handed domain: `w^{-1} ∈ D_R(s,t)`.
pub fn in_left_domain(g: &Group, w: usize, s: usize, t: usize) -> bool {
    let l = g.left_descents(w);
    ((l >> s) & 1) ^ ((l >> t) & 1) == 1
}

/// `w*`: the one of `ws`, `wt` lying in `D_R(s,t)`.
pub fn star(g: &Group, w: usize, s: usize, t: usize) -> Result<usize> {
    let m = g.graph().m(s, t);
    if m != 3 {
        return Err(Error::BadOrder { s, t, m, expected: "3" });
    }
    if !in_domain(g, w, s, t) {
        return Err(Error::NotInDomain { s, t });
    }
    let ws = g.rmul(w, s);
    Ok(if in_domain(g, ws, s, t) { ws } else { g.rmul(w, t) })
}

/// `w̃` for `m(s,t) ≥ 3`.
///
/// Write `w = x u` with `x` minimal in `w W_{s,t}` and `u ∈ W_{s,t}`. For
/// `w ∈ D_R(s,t)` the element `u` has a unique reduced word, alternating,
/// of some length `i` with `0 < i < m`. The result is `x u'` where `u'` is
/// the alternating word of length `m - i` with the same first letter.
pub fn string_tilde(g: &Group, w: usize, s: usize, t: usize) -> Result<usize> {
    let m = g.graph().m(s, t);
    if m < 3 {
        return Err(Error::BadOrder { s, t, m, expected: "at least 3" });
    }
    if !in_domain(g, w, s, t) {
        return Err(Error::NotInDomain { s, t });
    }
    let (x, u) = g.project_parabolic((1 << s) | (1 << t), w);
    let i = g.length(u);
    let first = if g.left_descents(u) & (1 << s) != 0 { s } else { t };
    let other = s + t - first;
    let mut out = x;
    for k in 0..(m as usize - i) {
        out = g.rmul(out, if k % 2 == 0 { first } else { other });
    }
    Ok(out)
}

/// `(w^{-1})^*` inverted: the left-handed star operation.
pub fn left_star(g: &Group, w: usize, s: usize, t: usize) -> Result<usize> {
    Ok(g.inverse(star(g, g.inverse(w), s, t)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitSide {
    Right,
    Left,
}

/// Star orbit of `w`: `R*(w)` on the right, `L*(w)` on the left.
pub fn star_orbit(g: &Group, w: usize, side: OrbitSide) -> Vec<usize> {
    let pairs = TauMode::SimplyLaced.pairs(g);
    let mut seen = vec![w];
    let mut k = 0;
    while k < seen.len() {
        let y = seen[k];
        for &(s, t) in &pairs {
            let image = match side {
                OrbitSide::Right => star(g, y, s, t),
                OrbitSide::Left => left_star(g, y, s, t),
            };
            if let Ok(z) = image {
                if !seen.contains(&z) {
                    seen.push(z);
                }
            }
        }
        k += 1;
    }
    seen.sort_unstable();
    seen
}

/// Result of generalized τ-invariant refinement.
#[derive(Clone, Debug)]
pub struct TauPartition {
    pub mode: TauMode,
    pub partition: CellPartition,
    /// Refinement rounds until the fixpoint, the final idle round included.
    pub rounds: usize,
}

impl TauPartition {
    pub fn to_json(&self, g: &Group) -> Value {
        json!({
            "group": g.type_name(),
            "mode": self.mode.as_str(),
            "rounds": self.rounds,
            "count": self.partition.num_blocks(),
            "blocks": self.partition.blocks().iter()
                .map(|b| b.iter().map(|&w| g.word(w)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Image {
    Inapplicable,
    Inside(u32),
    Outside(u32),
}

/// Generalized τ-invariant classes of `elements` by fixpoint refinement.
///
/// Start from the partition by right descent sets; in each round two
/// elements stay together iff for every pair `(s,t)` (lex order) their
/// images lie in a common block. Images outside `elements` are labelled by
/// their right descent set.
pub fn tau_partition(g: &Group, elements: &[usize], mode: TauMode) -> TauPartition {
    let mut elements = elements.to_vec();
    elements.sort_unstable();
    elements.dedup();
    let pairs = mode.pairs(g);
    let mut local = vec![u32::MAX; g.order()];
    for (i, &w) in elements.iter().enumerate() {
        local[w] = i as u32;
    }
    let images: Vec<Vec<(usize, u32)>> = elements
        .par_iter()
        .map(|&w| {
            pairs
                .iter()
                .enumerate()
                .filter_map(|(p, &(s, t))| mode.apply(g, w, s, t).ok().map(|z| (p, z as u32)))
                .collect()
        })
        .collect();

    let mut block = relabel(elements.iter().map(|&w| g.right_descents(w)));
    let mut count = distinct(&block);
    let mut rounds = 0;
    loop {
        rounds += 1;
        let signatures: Vec<(u32, Vec<Image>)> = (0..elements.len())
            .into_par_iter()
            .map(|i| {
                let mut sig = vec![Image::Inapplicable; pairs.len()];
                for &(p, z) in &images[i] {
                    let l = local[z as usize];
                    sig[p] = if l == u32::MAX {
                        Image::Outside(g.right_descents(z as usize))
                    } else {
                        Image::Inside(block[l as usize])
                    };
                }
                (block[i], sig)
            })
            .collect();
        let next = relabel(signatures.into_iter());
        let next_count = distinct(&next);
        block = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }
    let mut blocks = vec![Vec::new(); count];
    for (i, &b) in block.iter().enumerate() {
        blocks[b as usize].push(elements[i]);
    }
    TauPartition { mode, partition: CellPartition::from_blocks(Side::Left, g.order(), blocks), rounds }
}

fn relabel<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<u32> {
    let mut ids: HashMap<K, u32> = HashMap::new();
    keys.map(|k| {
        let next = ids.len() as u32;
        *ids.entry(k).or_insert(next)
    })
    .collect()
}

fn distinct(labels: &[u32]) -> usize {
    labels.iter().map(|&x| x as usize + 1).max().unwrap_or(0)
}

/// `{w* | w ∈ Γ}` (or `{w̃}` in strings mode), checked to be a block of
/// `left`. Returns the index of the image block.
pub fn cell_image(g: &Group, left: &CellPartition, cell: usize, s: usize, t: usize, mode: TauMode) -> Result<usize> {
    let block = left.block(cell);
    if !block.iter().all(|&w| in_domain(g, w, s, t)) {
        return Err(Error::CellNotInDomain { s, t });
    }
    let mut image = block.iter().map(|&w| mode.apply(g, w, s, t)).collect::<Result<Vec<_>>>()?;
    image.sort_unstable();
    match left.block_of(image[0]) {
        Some(b) if left.block(b) == &image[..] => Ok(b),
        _ => Err(Error::VerificationMismatch(format!("image of cell {cell} under ({s},{t}) is not a left cell"))),
    }
}

/// Star image `Γ*` of a left cell, as an element set.
pub fn cell_star_image(g: &Group, left: &CellPartition, cell: usize, s: usize, t: usize) -> Result<Vec<usize>> {
    let b = cell_image(g, left, cell, s, t, TauMode::SimplyLaced)?;
    Ok(left.block(b).to_vec())
}

/// Orbits of left cells under all star images, with one representative
/// per orbit: the cell holding the lexicographically smallest canonical
/// word.
#[derive(Clone, Debug)]
pub struct StarClasses {
    /// Orbit index of each left cell.
    pub orbit_of_cell: Vec<usize>,
    /// Representative left cell per orbit, orbits ordered by representative.
    pub representatives: Vec<usize>,
}

impl StarClasses {
    pub fn num_orbits(&self) -> usize {
        self.representatives.len()
    }

    /// Cells of orbit `o`.
    pub fn orbit(&self, o: usize) -> Vec<usize> {
        (0..self.orbit_of_cell.len()).filter(|&c| self.orbit_of_cell[c] == o).collect()
    }
}

pub fn star_class_representatives(g: &Group, left: &CellPartition) -> Result<StarClasses> {
    let n = left.num_blocks();
    let pairs = TauMode::SimplyLaced.pairs(g);
    let mut uf = UnionFind::new(n);
    for c in 0..n {
        let w = left.block(c)[0];
        for &(s, t) in &pairs {
            if in_domain(g, w, s, t) {
                uf.union(c, cell_image(g, left, c, s, t, TauMode::SimplyLaced)?);
            }
        }
    }
    let min_word = |c: usize| left.block(c).iter().map(|&w| g.word(w)).min().unwrap();
    let mut best: HashMap<usize, usize> = HashMap::new();
    for c in 0..n {
        let r = uf.find(c);
        let e = best.entry(r).or_insert(c);
        if min_word(c) < min_word(*e) {
            *e = c;
        }
    }
    let mut representatives: Vec<usize> = best.values().copied().collect();
    representatives.sort_by(|&a, &b| min_word(a).cmp(min_word(b)));
    let orbit_index: HashMap<usize, usize> =
        representatives.iter().enumerate().map(|(o, &c)| (uf.find(c), o)).collect();
    let orbit_of_cell = (0..n).map(|c| orbit_index[&uf.find(c)]).collect();
    Ok(StarClasses { orbit_of_cell, representatives })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::left_cells;
    use crate::kl::KlTable;

    #[test]
    fn a2_examples() {
        let g = Group::from_spec("A2").unwrap();
        let s0 = g.from_word(&[0]).unwrap();
        assert_eq!(star(&g, s0, 0, 1).unwrap(), g.from_word(&[0, 1]).unwrap());
        assert!(matches!(star(&g, 0, 0, 1), Err(Error::NotInDomain { .. })));
        assert_eq!(star_orbit(&g, s0, OrbitSide::Right), vec![s0, g.from_word(&[0, 1]).unwrap()]);
        assert_eq!(star_orbit(&g, 0, OrbitSide::Right), vec![0]);
    }

    #[test]
    fn bad_order_is_rejected() {
        let g = Group::from_spec("B2").unwrap();
        assert!(matches!(star(&g, 1, 0, 1), Err(Error::BadOrder { .. })));
        let g = Group::from_spec("B3").unwrap();
        assert!(matches!(string_tilde(&g, 1, 0, 2), Err(Error::BadOrder { .. })));
    }

    #[test]
    fn i2_4_string() {
        let g = Group::from_spec("I2(4)").unwrap();
        let f = |w: &[usize]| g.from_word(w).unwrap();
        assert_eq!(string_tilde(&g, f(&[0]), 0, 1).unwrap(), f(&[0, 1, 0]));
        assert_eq!(string_tilde(&g, f(&[1, 0]), 0, 1).unwrap(), f(&[1, 0]));
    }

    #[test]
    fn star_and_tilde_are_involutions() {
        for spec in ["A4", "D4", "B3", "H3", "F4"] {
            let g = Group::from_spec(spec).unwrap();
            for mode in [TauMode::SimplyLaced, TauMode::Strings] {
                for (s, t) in mode.pairs(&g) {
                    for w in (0..g.order()).filter(|&w| in_domain(&g, w, s, t)) {
                        let z = mode.apply(&g, w, s, t).unwrap();
                        assert!(in_domain(&g, z, s, t));
                        assert_eq!(mode.apply(&g, z, s, t).unwrap(), w);
                        if mode == TauMode::SimplyLaced || g.graph().m(s, t) == 3 {
                            assert_eq!(star(&g, w, s, t).unwrap(), z);
                            assert_eq!(g.length(z).abs_diff(g.length(w)), 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn a2_star_classes() {
        let g = Group::from_spec("A2").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        let left = left_cells(&g, &t);
        let sc = star_class_representatives(&g, &left).unwrap();
        assert_eq!(sc.num_orbits(), 3);
        let c = left.block_of(g.from_word(&[0]).unwrap()).unwrap();
        let image = cell_star_image(&g, &left, c, 0, 1).unwrap();
        assert_eq!(image, vec![g.from_word(&[1]).unwrap(), g.from_word(&[0, 1]).unwrap()]);
    }

    #[test]
    fn type_a_tau_cells_are_left_cells() {
        for n in 2..=5 {
            let g = Group::from_spec(&format!("A{n}")).unwrap();
            let t = KlTable::new(g.clone()).unwrap();
            let left = left_cells(&g, &t);
            let all: Vec<usize> = (0..g.order()).collect();
            let tau = tau_partition(&g, &all, TauMode::SimplyLaced);
            assert!(tau.partition.same_blocks(&left), "A{n}");
            let again = tau_partition(&g, &all, TauMode::Strings);
            assert!(again.partition.same_blocks(&tau.partition));
        }
    }
}
