//! Cell partitions from the μ-graph.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde_json::{json, Value};

use crate::coxeter::Group;
use crate::error::{Error, Result};
use crate::kl::MuProvider;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "twosided",
        }
    }
}

/// A partition of a subset of `W` into blocks.
///
/// Blocks are kept in canonical form: each block sorted, blocks ordered by
/// their smallest element. Two partitions of the same set are therefore
/// equal exactly when their block lists are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPartition {
    pub side: Side,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<u32>,
    pub a_values: Vec<Option<u32>>,
    pub specials: Vec<Option<String>>,
}

const NONE: u32 = u32::MAX;

impl CellPartition {
    /// `universe` is the size of the ambient index range (usually `|W|`).
    pub fn from_blocks(side: Side, universe: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut block_of = vec![NONE; universe];
        for (i, b) in blocks.iter().enumerate() {
            for &w in b {
                debug_assert_eq!(block_of[w], NONE, "blocks overlap");
                block_of[w] = i as u32;
            }
        }
        let k = blocks.len();
        CellPartition { side, blocks, block_of, a_values: vec![None; k], specials: vec![None; k] }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, w: usize) -> Option<usize> {
        match self.block_of.get(w) {
            Some(&b) if b != NONE => Some(b as usize),
            _ => None,
        }
    }

    /// Number of elements covered.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &CellPartition) -> bool {
        self.blocks.iter().all(|b| {
            let first = coarser.block_of(b[0]);
            first.is_some() && b.iter().all(|&w| coarser.block_of(w) == first)
        })
    }

    /// Same blocks, ignoring side tags and metadata.
    pub fn same_blocks(&self, other: &CellPartition) -> bool {
        self.blocks == other.blocks
    }

    pub fn to_json(&self, g: &Group) -> Value {
        let blocks: Vec<Value> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut o = json!({ "elements": b.iter().map(|&w| g.word(w)).collect::<Vec<_>>() });
                if let Some(a) = self.a_values[i] {
                    o["a"] = json!(a);
                }
                if let Some(s) = &self.specials[i] {
                    o["special"] = json!(s);
                }
                o
            })
            .collect();
        json!({
            "group": g.type_name(),
            "side": self.side.as_str(),
            "count": self.blocks.len(),
            "blocks": blocks,
        })
    }
}

/// The directed graph of the generating relation of `≤_L`.
///
/// An edge `(w, y)` means `y ≤_L w` in one step: `C′_y` occurs in
/// `C′_s C′_w` for some `s`, i.e. `y = sw > w`, or `y < w` with
/// `μ(y,w) ≠ 0` and `L(y) ⊄ L(w)`.
#[derive(Clone, Debug)]
pub struct MuGraph {
    order: usize,
    edges: Vec<(u32, u32)>,
}

impl MuGraph {
    pub fn new(g: &Group, mu: &impl MuProvider) -> Self {
        let mut edges = Vec::new();
        for w in 0..g.order() {
            let lw = g.left_descents(w);
            for s in 0..g.rank() {
                if lw & (1 << s) == 0 {
                    edges.push((w as u32, g.lmul(s, w) as u32));
                }
            }
            for &(y, _) in mu.mu_list(w) {
                if g.left_descents(y as usize) & !lw != 0 {
                    edges.push((w as u32, y));
                }
            }
        }
        MuGraph { order: g.order(), edges }
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

fn scc_blocks(n: usize, edges: impl Iterator<Item = (u32, u32)>) -> Vec<Vec<usize>> {
    let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(n, 0);
    for _ in 0..n {
        graph.add_node(());
    }
    graph.extend_with_edges(edges);
    tarjan_scc(&graph).into_iter().map(|c| c.into_iter().map(|v| v.index()).collect()).collect()
}

/// Left cells as strongly connected components of the μ-graph.
///
/// Edges between elements with different right descent sets are dropped
/// first: `x ≤_L y` forces `R(x) ⊇ R(y)`, so such edges never lie on a
/// cycle.
pub fn left_cells_from_graph(g: &Group, graph: &MuGraph) -> CellPartition {
    let edges = graph
        .edges
        .iter()
        .copied()
        .filter(|&(w, y)| g.right_descents(w as usize) == g.right_descents(y as usize));
    CellPartition::from_blocks(Side::Left, g.order(), scc_blocks(g.order(), edges))
}

pub fn left_cells(g: &Group, mu: &impl MuProvider) -> CellPartition {
    left_cells_from_graph(g, &MuGraph::new(g, mu))
}

/// Unrestricted SCCs, used to justify the descent-set pre-filter in tests.
pub fn left_cells_unfiltered(g: &Group, graph: &MuGraph) -> CellPartition {
    CellPartition::from_blocks(Side::Left, g.order(), scc_blocks(g.order(), graph.edges.iter().copied()))
}

/// Right cells by inversion and two-sided cells as the SCCs of the union
/// of both preorders.
///
/// Also checks that the two-sided cells are exactly the classes of the
/// equivalence generated by `∼_L` and `∼_R`, and property (A): a single
/// `≤_L` step inside a two-sided cell never leaves a left cell.
pub fn right_and_two_sided_cells(
    g: &Group,
    graph: &MuGraph,
    left: &CellPartition,
) -> Result<(CellPartition, CellPartition)> {
    let n = g.order();
    let right_blocks = left.blocks().iter().map(|b| b.iter().map(|&w| g.inverse(w)).collect()).collect();
    let right = CellPartition::from_blocks(Side::Right, n, right_blocks);

    let edges = graph.edges.iter().flat_map(|&(w, y)| {
        [(w, y), (g.inverse(w as usize) as u32, g.inverse(y as usize) as u32)]
    });
    let two = CellPartition::from_blocks(Side::TwoSided, n, scc_blocks(n, edges));

    let mut uf = UnionFind::new(n);
    for p in [left, &right] {
        for b in p.blocks() {
            for &w in &b[1..] {
                uf.union(b[0], w);
            }
        }
    }
    let mut joined: Vec<Vec<usize>> = vec![Vec::new(); n];
    for w in 0..n {
        joined[uf.find(w)].push(w);
    }
    let joined = CellPartition::from_blocks(Side::TwoSided, n, joined);
    if !joined.same_blocks(&two) {
        return Err(Error::VerificationMismatch(
            "two-sided cells differ from the join of left and right cells".into(),
        ));
    }
    for &(w, y) in &graph.edges {
        let (w, y) = (w as usize, y as usize);
        if two.block_of(w) == two.block_of(y) && left.block_of(w) != left.block_of(y) {
            return Err(Error::VerificationMismatch(format!(
                "property (A) fails for {:?} -> {:?}",
                g.word(w),
                g.word(y)
            )));
        }
    }
    Ok((right, two))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kl::KlTable;

    fn words(g: &Group, p: &CellPartition) -> Vec<Vec<Vec<u8>>> {
        p.blocks().iter().map(|b| b.iter().map(|&w| g.word(w).to_vec()).collect()).collect()
    }

    #[test]
    fn a2_cells() {
        let g = Group::from_spec("A2").unwrap();
        let t = KlTable::new(g.clone()).unwrap();
        let graph = MuGraph::new(&g, &t);
        let left = left_cells_from_graph(&g, &graph);
        assert_eq!(
            words(&g, &left),
            vec![vec![vec![]], vec![vec![0], vec![1, 0]], vec![vec![1], vec![0, 1]], vec![vec![0, 1, 0]]]
        );
        let (right, two) = right_and_two_sided_cells(&g, &graph, &left).unwrap();
        assert_eq!(right.num_blocks(), 4);
        assert_eq!(two.num_blocks(), 3);
        assert_eq!(two.block(1).len(), 4);
    }

    #[test]
    fn descent_filter_does_not_change_cells() {
        for spec in ["A3", "B3", "H3", "D4", "I2(7)"] {
            let g = Group::from_spec(spec).unwrap();
            let t = KlTable::new(g.clone()).unwrap();
            let graph = MuGraph::new(&g, &t);
            assert_eq!(left_cells_from_graph(&g, &graph), left_cells_unfiltered(&g, &graph), "{spec}");
        }
    }

    #[test]
    fn dihedral_cells() {
        for m in 3..=12 {
            let g = Group::from_spec(&format!("I2({m})")).unwrap();
            let t = KlTable::new(g.clone()).unwrap();
            let graph = MuGraph::new(&g, &t);
            let left = left_cells_from_graph(&g, &graph);
            let mut sizes: Vec<usize> = left.blocks().iter().map(Vec::len).collect();
            sizes.sort_unstable();
            assert_eq!(sizes, vec![1, 1, m - 1, m - 1]);
            let (_, two) = right_and_two_sided_cells(&g, &graph, &left).unwrap();
            assert_eq!(two.num_blocks(), 3);
        }
    }
}
