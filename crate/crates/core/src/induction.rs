//! Parabolic induction of left cells, the induced-piece pipeline, star
//! closure of representative cells, and element-to-cell lookup.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cells::{CellAnalysis, CellPartition, CellPartitions, Side};
use crate::coxeter::{Group, Parabolic};
use crate::error::{Error, Result};
use crate::star::{
    in_domain, star, star_class_representatives, star_orbit, tau_partition, OrbitSide, StarClasses, TauMode,
};

/// Source of a-values for elements of the ambient group.
pub trait AValues {
    fn a_value(&self, w: usize) -> u32;
}

impl AValues for [u32] {
    fn a_value(&self, w: usize) -> u32 {
        self[w]
    }
}

impl AValues for CellAnalysis {
    fn a_value(&self, w: usize) -> u32 {
        self.a_of_element[w]
    }
}

/// `X_I Γ` for a left cell `Γ` of `W_I`.
#[derive(Clone, Debug)]
pub struct InducedPiece {
    pub mask: u32,
    /// Source cell, as local indices of `W_I`.
    pub source_cell: Vec<usize>,
    /// Sorted ambient indices.
    pub elements: Vec<usize>,
}

pub fn induce_cell(g: &Group, par: &Parabolic, cell: &[usize]) -> InducedPiece {
    let xs = g.min_coset_reps(par.mask);
    let mut elements = Vec::with_capacity(xs.len() * cell.len());
    for &x in &xs {
        for &u in cell {
            elements.push(g.mul(x, par.embed[u]));
        }
    }
    elements.sort_unstable();
    InducedPiece { mask: par.mask, source_cell: cell.to_vec(), elements }
}

impl InducedPiece {
    /// `|X_I Γ| = |X_I| |Γ|` and `pr_I` maps the piece into `Γ`.
    pub fn check(&self, g: &Group, par: &Parabolic) -> bool {
        let xs = g.min_coset_reps(self.mask).len();
        let distinct = self.elements.windows(2).all(|w| w[0] < w[1]);
        let source: HashSet<usize> = self.source_cell.iter().map(|&u| par.embed[u]).collect();
        distinct
            && self.elements.len() == xs * self.source_cell.len()
            && self.elements.iter().all(|&w| source.contains(&g.project_parabolic(self.mask, w).1))
    }

    /// Whether the piece is a union of blocks of `left`.
    pub fn is_union_of_cells(&self, left: &CellPartition) -> bool {
        let set: HashSet<usize> = self.elements.iter().copied().collect();
        self.elements
            .iter()
            .all(|&w| left.block_of(w).is_some_and(|b| left.block(b).iter().all(|y| set.contains(y))))
    }
}

/// Left cells of a parabolic subgroup, in local indices. Rank at most two
/// uses the closed form (cells are the right descent classes); otherwise
/// the cells are computed from KL data.
pub fn parabolic_left_cells(par: &Parabolic) -> Result<CellPartition> {
    let h = &par.group;
    if h.rank() <= 2 {
        let mut by_descent: HashMap<u32, Vec<usize>> = HashMap::new();
        for u in 0..h.order() {
            by_descent.entry(h.right_descents(u)).or_default().push(u);
        }
        return Ok(CellPartition::from_blocks(Side::Left, h.order(), by_descent.into_values().collect()));
    }
    Ok(CellPartitions::compute(h.clone())?.left)
}

/// The maximal proper parabolic subset of largest order (ties: the one
/// omitting the smallest generator).
pub fn default_parabolic_subset(g: &Group) -> Result<Vec<usize>> {
    let mut best: Option<(u128, Vec<usize>)> = None;
    for drop in 0..g.rank() {
        let subset: Vec<usize> = (0..g.rank()).filter(|&s| s != drop).collect();
        let order = g.graph().subgraph(&subset)?.order();
        if best.as_ref().is_none_or(|(o, _)| order > *o) {
            best = Some((order, subset));
        }
    }
    Ok(best.map(|(_, s)| s).unwrap_or_default())
}

/// Υ_I(W): induced pieces of the star-orbit representatives of `W_I`,
/// each split into τ-blocks.
#[derive(Clone, Debug)]
pub struct Upsilon {
    pub pieces: Vec<InducedPiece>,
    pub tau_blocks: Vec<Vec<usize>>,
}

impl Upsilon {
    pub fn size(&self) -> usize {
        self.pieces.iter().map(|p| p.elements.len()).sum()
    }
}

pub fn upsilon(g: &Group, par: &Parabolic, parabolic_left: &CellPartition, reps: &[usize]) -> Upsilon {
    let mut pieces = Vec::new();
    let mut tau_blocks = Vec::new();
    for &c in reps {
        let piece = induce_cell(g, par, parabolic_left.block(c));
        let tau = tau_partition(g, &piece.elements, TauMode::SimplyLaced);
        tau_blocks.extend(tau.partition.blocks().iter().cloned());
        pieces.push(piece);
    }
    Upsilon { pieces, tau_blocks }
}

/// Counters describing how τ-blocks were decomposed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecomposeStats {
    pub single_involution_blocks: usize,
    pub split_blocks: usize,
    pub orbits_with_involution: usize,
    pub orbits_without_involution: usize,
}

/// Split a τ-block into left cells: a block meeting the distinguished
/// involutions once is a cell; otherwise it is split by a-values, computed
/// once per left star orbit (preferring an involution in the orbit).
///
/// When `truth` is given, every emitted block is checked to be one of its
/// blocks.
pub fn decompose_piece(
    g: &Group,
    block: &[usize],
    distinguished: &HashSet<usize>,
    a: &(impl AValues + ?Sized),
    truth: Option<&CellPartition>,
    stats: &mut DecomposeStats,
) -> Result<Vec<Vec<usize>>> {
    let hits = block.iter().filter(|w| distinguished.contains(w)).count();
    let out = if hits == 1 {
        stats.single_involution_blocks += 1;
        vec![block.to_vec()]
    } else {
        stats.split_blocks += 1;
        let members: HashSet<usize> = block.iter().copied().collect();
        let mut a_of: HashMap<usize, u32> = HashMap::new();
        for &w in block {
            if a_of.contains_key(&w) {
                continue;
            }
            let orbit = star_orbit(g, w, OrbitSide::Left);
            if let Some(y) = orbit.iter().find(|y| !members.contains(y)) {
                return Err(Error::VerificationMismatch(format!(
                    "τ-block is not a union of left star orbits ({:?} leaves it)",
                    g.word(*y)
                )));
            }
            let rep = match orbit.iter().find(|&&y| g.inverse(y) == y) {
                Some(&inv) => {
                    stats.orbits_with_involution += 1;
                    inv
                }
                None => {
                    stats.orbits_without_involution += 1;
                    orbit[0]
                }
            };
            let value = a.a_value(rep);
            for y in orbit {
                a_of.insert(y, value);
            }
        }
        let mut by_a: Vec<(u32, Vec<usize>)> = Vec::new();
        for &w in block {
            let v = a_of[&w];
            match by_a.iter_mut().find(|(k, _)| *k == v) {
                Some((_, b)) => b.push(w),
                None => by_a.push((v, vec![w])),
            }
        }
        by_a.into_iter().map(|(_, b)| b).collect()
    };
    if let Some(left) = truth {
        for b in &out {
            let mut sorted = b.clone();
            sorted.sort_unstable();
            let ok = left.block_of(sorted[0]).is_some_and(|c| left.block(c) == &sorted[..]);
            if !ok {
                return Err(Error::VerificationMismatch(format!(
                    "block of {} elements starting at {:?} is not a left cell",
                    sorted.len(),
                    g.word(sorted[0])
                )));
            }
        }
    }
    Ok(out)
}

/// Closure of representative cells under star images, until nothing new
/// appears; must cover `W` without overlaps.
pub fn reconstruct_all_left_cells(g: &Group, seeds: &[Vec<usize>]) -> Result<CellPartition> {
    let pairs = TauMode::SimplyLaced.pairs(g);
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        let mut c = s.clone();
        c.sort_unstable();
        if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(c[0]) {
            e.insert(cells.len());
            queue.push_back(cells.len());
            cells.push(c);
        }
    }
    while let Some(k) = queue.pop_front() {
        let cell = cells[k].clone();
        for &(s, t) in &pairs {
            if !cell.iter().all(|&w| in_domain(g, w, s, t)) {
                continue;
            }
            let mut image = cell.iter().map(|&w| star(g, w, s, t)).collect::<Result<Vec<_>>>()?;
            image.sort_unstable();
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(image[0]) {
                e.insert(cells.len());
                queue.push_back(cells.len());
                cells.push(image);
            }
        }
    }
    let covered: usize = cells.iter().map(Vec::len).sum();
    let mut mark = vec![false; g.order()];
    for c in &cells {
        for &w in c {
            if std::mem::replace(&mut mark[w], true) {
                return Err(Error::VerificationMismatch(format!("star closure overlaps at {:?}", g.word(w))));
            }
        }
    }
    if covered != g.order() {
        return Err(Error::IncompleteClosure { covered, total: g.order() });
    }
    Ok(CellPartition::from_blocks(Side::Left, g.order(), cells))
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub group: String,
    pub subset: Vec<usize>,
    pub parabolic_type: String,
    pub parabolic_left_cells: usize,
    pub parabolic_representatives: usize,
    pub upsilon_size: usize,
    pub tau_blocks: usize,
    pub stats: DecomposeStats,
    pub upsilon_left_cells: usize,
    pub representatives: usize,
    pub reconstructed_left_cells: usize,
    pub matches_direct: bool,
}

/// Rebuild all left cells of `W` from induced pieces of `W_I` and star
/// closure, verifying every intermediate cell against the direct result.
pub fn run_pipeline(analysis: &CellAnalysis, subset: Option<&[usize]>) -> Result<(PipelineReport, CellPartition)> {
    let g = &*analysis.group;
    let subset = match subset {
        Some(s) => s.to_vec(),
        None => default_parabolic_subset(g)?,
    };
    let par = Parabolic::new(g, &subset)?;
    let par_left = parabolic_left_cells(&par)?;
    let par_reps = star_class_representatives(&par.group, &par_left)?;
    let ups = upsilon(g, &par, &par_left, &par_reps.representatives);
    for piece in &ups.pieces {
        if !piece.check(g, &par) || !piece.is_union_of_cells(&analysis.left) {
            return Err(Error::VerificationMismatch("induced piece is not a union of left cells".into()));
        }
    }
    let distinguished: HashSet<usize> = analysis.distinguished.iter().copied().collect();
    let mut stats = DecomposeStats::default();
    let mut cells = Vec::new();
    for block in &ups.tau_blocks {
        cells.extend(decompose_piece(g, block, &distinguished, analysis, Some(&analysis.left), &mut stats)?);
    }
    let partition = reconstruct_all_left_cells(g, &cells)?;
    let representatives = star_class_representatives(g, &partition)?.num_orbits();
    let report = PipelineReport {
        group: g.type_name().to_string(),
        subset,
        parabolic_type: par.group.type_name().to_string(),
        parabolic_left_cells: par_left.num_blocks(),
        parabolic_representatives: par_reps.num_orbits(),
        upsilon_size: ups.size(),
        tau_blocks: ups.tau_blocks.len(),
        stats,
        upsilon_left_cells: cells.len(),
        representatives,
        reconstructed_left_cells: partition.num_blocks(),
        matches_direct: partition.same_blocks(&analysis.left),
    };
    Ok((report, partition))
}

/// Exhaustive checks of `(xu)* = x u*` and of the transport of cell
/// partitions of induced pieces under star operations.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CompatibilityReport {
    pub element_checks: usize,
    pub element_failures: usize,
    pub cell_checks: usize,
    pub cell_failures: usize,
    pub projection_failures: usize,
}

impl CompatibilityReport {
    pub fn passed(&self) -> bool {
        self.element_failures == 0 && self.cell_failures == 0 && self.projection_failures == 0
    }
}

/// In strings mode the same statements are checked for `w ↦ w̃` on every
/// pair with `m(s,t) ≥ 3`.
pub fn check_star_induction(
    g: &Group,
    par: &Parabolic,
    parabolic_left: &CellPartition,
    left: &CellPartition,
    mode: TauMode,
) -> Result<CompatibilityReport> {
    let h = &par.group;
    let mut rep = CompatibilityReport::default();
    let xs = g.min_coset_reps(par.mask);
    for (ls, lt) in mode.pairs(h) {
        let (s, t) = (par.subset[ls], par.subset[lt]);
        for u in (0..h.order()).filter(|&u| in_domain(h, u, ls, lt)) {
            let u_star = par.embed[mode.apply(h, u, ls, lt)?];
            for &x in &xs {
                rep.element_checks += 1;
                let xu = g.mul(x, par.embed[u]);
                if mode.apply(g, xu, s, t).ok() != Some(g.mul(x, u_star)) {
                    rep.element_failures += 1;
                }
            }
        }
        for (c, cell) in parabolic_left.blocks().iter().enumerate() {
            if !cell.iter().all(|&u| in_domain(h, u, ls, lt)) {
                continue;
            }
            rep.cell_checks += 1;
            let image_cell = crate::star::cell_image(h, parabolic_left, c, ls, lt, mode)?;
            let piece = induce_cell(g, par, cell);
            let target = induce_cell(g, par, parabolic_left.block(image_cell));
            let mut ids: Vec<usize> = piece.elements.iter().filter_map(|&w| left.block_of(w)).collect();
            ids.sort_unstable();
            ids.dedup();
            let mut covered: Vec<usize> = Vec::new();
            let mut ok = true;
            for id in ids {
                let mut img = left.block(id).iter().map(|&w| mode.apply(g, w, s, t)).collect::<Result<Vec<_>>>()?;
                img.sort_unstable();
                ok &= left.block_of(img[0]).is_some_and(|b| left.block(b) == &img[..]);
                covered.extend(img);
            }
            covered.sort_unstable();
            if !ok || covered != target.elements {
                rep.cell_failures += 1;
            }
        }
    }
    let local: HashMap<usize, usize> = par.embed.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    for cell in left.blocks() {
        let mut targets = cell.iter().map(|&w| parabolic_left.block_of(local[&g.project_parabolic(par.mask, w).1]));
        let first = targets.next().flatten();
        if first.is_none() || targets.any(|b| b != first) {
            rep.projection_failures += 1;
        }
    }
    Ok(rep)
}

/// A representative left cell with its two-sided data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativeCell {
    pub elements: Vec<usize>,
    pub a: u32,
    pub special: String,
    pub family: Vec<String>,
}

/// Lookup of left cells from star-orbit representatives only.
#[derive(Clone, Debug)]
pub struct CellLookupIndex {
    pub reps: Vec<RepresentativeCell>,
    owner: HashMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LookupResult {
    pub representative: usize,
    pub cell: Vec<usize>,
    pub a: u32,
    pub special: String,
}

impl CellLookupIndex {
    pub fn new(reps: Vec<RepresentativeCell>) -> Self {
        let mut owner = HashMap::new();
        for (i, r) in reps.iter().enumerate() {
            for &w in &r.elements {
                owner.insert(w, i);
            }
        }
        CellLookupIndex { reps, owner }
    }

    pub fn from_analysis(analysis: &CellAnalysis, classes: &StarClasses) -> Self {
        let reps = classes
            .representatives
            .iter()
            .map(|&c| {
                let cell = analysis.left.block(c);
                let info = analysis.two_sided_info_of(cell[0]);
                RepresentativeCell {
                    elements: cell.to_vec(),
                    a: info.a_value,
                    special: info.special.clone(),
                    family: info.family.clone(),
                }
            })
            .collect();
        Self::new(reps)
    }

    /// Left cell of `w` with its a-value and special representation.
    ///
    /// Walks `R*(w)` until it meets a representative cell, then carries
    /// that cell back along the reversed star path.
    pub fn left_cell_of_element(&self, g: &Group, w: usize) -> Result<LookupResult> {
        let pairs = TauMode::SimplyLaced.pairs(g);
        let mut parent: HashMap<usize, (usize, usize, usize)> = HashMap::new();
        let mut queue = VecDeque::from([w]);
        let mut seen = HashSet::from([w]);
        while let Some(y) = queue.pop_front() {
            if let Some(&r) = self.owner.get(&y) {
                let mut path = Vec::new();
                let mut z = y;
                while z != w {
                    let (prev, s, t) = parent[&z];
                    path.push((s, t));
                    z = prev;
                }
                let mut cell = self.reps[r].elements.clone();
                for &(s, t) in &path {
                    cell = cell.iter().map(|&u| star(g, u, s, t)).collect::<Result<Vec<_>>>()?;
                }
                cell.sort_unstable();
                return Ok(LookupResult {
                    representative: r,
                    cell,
                    a: self.reps[r].a,
                    special: self.reps[r].special.clone(),
                });
            }
            for &(s, t) in &pairs {
                if let Ok(z) = star(g, y, s, t) {
                    if seen.insert(z) {
                        parent.insert(z, (y, s, t));
                        queue.push_back(z);
                    }
                }
            }
        }
        Err(Error::IndexMiss)
    }

    /// Write one JSON file per representative plus a manifest with SHA-256
    /// hashes of each file.
    pub fn write_library(&self, g: &Group, spec: &str, dir: &Path, left_cells: usize) -> Result<()> {
        fs::create_dir_all(dir)?;
        let mut files = Vec::new();
        for (i, r) in self.reps.iter().enumerate() {
            let name = format!("cell_{i:04}.json");
            let body = serde_json::to_vec_pretty(&serde_json::json!({
                "elements": r.elements.iter().map(|&w| g.word(w)).collect::<Vec<_>>(),
                "a": r.a,
                "special": r.special,
                "family": r.family,
            }))?;
            fs::write(dir.join(&name), &body)?;
            files.push(serde_json::json!({ "file": name, "sha256": hex(&Sha256::digest(&body)) }));
        }
        let manifest = serde_json::json!({
            "group": spec,
            "left_cells": left_cells,
            "representatives": self.reps.len(),
            "files": files,
        });
        fs::write(dir.join("manifest.json"), serde_json::to_vec_pretty(&manifest)?)?;
        Ok(())
    }

    pub fn read_library(g: &Group, spec: &str, dir: &Path) -> Result<Self> {
        let manifest: serde_json::Value = serde_json::from_slice(&fs::read(dir.join("manifest.json"))?)?;
        if manifest["group"] != spec {
            return Err(Error::Format(format!("library is for {}, not {spec}", manifest["group"])));
        }
        let mut reps = Vec::new();
        for f in manifest["files"].as_array().ok_or_else(|| Error::Format("manifest files".into()))? {
            let name = f["file"].as_str().ok_or_else(|| Error::Format("manifest file name".into()))?;
            let body = fs::read(dir.join(name))?;
            if f["sha256"].as_str() != Some(hex(&Sha256::digest(&body)).as_str()) {
                return Err(Error::Format(format!("hash mismatch for {name}")));
            }
            #[derive(Deserialize)]
            struct File {
                elements: Vec<Vec<usize>>,
                a: u32,
                special: String,
                family: Vec<String>,
            }
            let file: File = serde_json::from_slice(&body)?;
            let mut elements = file.elements.iter().map(|w| g.from_word(w)).collect::<Result<Vec<_>>>()?;
            elements.sort_unstable();
            reps.push(RepresentativeCell { elements, a: file.a, special: file.special, family: file.family });
        }
        Ok(Self::new(reps))
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
