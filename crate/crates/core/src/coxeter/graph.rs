//! Coxeter matrices, the group specification grammar and the classification
//! of connected finite types.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// One irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n)
            | CoxeterType::B(n)
            | CoxeterType::D(n)
            | CoxeterType::E(n)
            | CoxeterType::H(n) => n,
            CoxeterType::F4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    /// Group order from the classification.
    pub fn order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => (1u128 << n) * fact(n),
            CoxeterType::D(n) => (1u128 << (n - 1)) * fact(n),
            CoxeterType::E(6) => 51840,
            CoxeterType::E(7) => 2903040,
            CoxeterType::E(8) => 696729600,
            CoxeterType::E(_) => unreachable!(),
            CoxeterType::F4 => 1152,
            CoxeterType::H(3) => 120,
            CoxeterType::H(4) => 14400,
            CoxeterType::H(_) => unreachable!(),
            CoxeterType::I2(m) => 2 * m as u128,
        }
    }

    /// Number of positive roots (= number of reflections).
    pub fn num_positive_roots(self) -> usize {
        match self {
            CoxeterType::A(n) => n * (n + 1) / 2,
            CoxeterType::B(n) => n * n,
            CoxeterType::D(n) => n * (n - 1),
            CoxeterType::E(6) => 36,
            CoxeterType::E(7) => 63,
            CoxeterType::E(8) => 120,
            CoxeterType::E(_) => unreachable!(),
            CoxeterType::F4 => 24,
            CoxeterType::H(3) => 15,
            CoxeterType::H(4) => 60,
            CoxeterType::H(_) => unreachable!(),
            CoxeterType::I2(m) => m as usize,
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) => n >= 2,
            CoxeterType::D(n) => n >= 4,
            CoxeterType::E(n) => (6..=8).contains(&n),
            CoxeterType::F4 => true,
            CoxeterType::H(n) => n == 3 || n == 4,
            CoxeterType::I2(m) => m >= 3,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }

    /// The Coxeter matrix in the standard labelling used by this crate.
    ///
    /// * `A_n`: path `0 - 1 - ... - (n-1)`.
    /// * `B_n`: `0 =4= 1 - 2 - ... - (n-1)`.
    /// * `D_n`: `0 - 2`, `1 - 2`, then the path `2 - 3 - ... - (n-1)`.
    /// * `E_n`: path `0 - 2 - 3 - ... - (n-1)` with `1` attached to `3`.
    /// * `F_4`: `0 - 1 =4= 2 - 3`.
    /// * `H_n`: `0 =5= 1 - 2 - ...`.
    /// * `I_2(m)`: `0 =m= 1`.
    pub fn coxeter_matrix(self) -> Vec<Vec<u32>> {
        let n = self.rank();
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut edge = |i: usize, j: usize, label: u32| {
            m[i][j] = label;
            m[j][i] = label;
        };
        match self {
            CoxeterType::A(_) => (1..n).for_each(|i| edge(i - 1, i, 3)),
            CoxeterType::B(_) => {
                edge(0, 1, 4);
                (2..n).for_each(|i| edge(i - 1, i, 3));
            }
            CoxeterType::D(_) => {
                edge(0, 2, 3);
                edge(1, 2, 3);
                (3..n).for_each(|i| edge(i - 1, i, 3));
            }
            CoxeterType::E(_) => {
                edge(0, 2, 3);
                edge(1, 3, 3);
                (3..n).for_each(|i| edge(i - 1, i, 3));
            }
            CoxeterType::F4 => {
                edge(0, 1, 3);
                edge(1, 2, 4);
                edge(2, 3, 3);
            }
            CoxeterType::H(_) => {
                edge(0, 1, 5);
                (2..n).for_each(|i| edge(i - 1, i, 3));
            }
            CoxeterType::I2(k) => edge(0, 1, k),
        }
        m
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H(n) => write!(f, "H{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGroupSpec(s.to_string());
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("I2(") {
            let m: u32 = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            return CoxeterType::I2(m).validate();
        }
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = match letter.to_ascii_uppercase() {
            'A' => CoxeterType::A(n),
            'B' | 'C' => CoxeterType::B(n),
            'D' => CoxeterType::D(n),
            'E' => CoxeterType::E(n),
            'F' if n == 4 => CoxeterType::F4,
            'G' if n == 2 => CoxeterType::I2(6),
            'H' => CoxeterType::H(n),
            'F' | 'G' => return Err(Error::UnsupportedType(s.to_string())),
            _ => return Err(bad()),
        };
        t.validate()
    }
}

/// A Coxeter system given by its Coxeter matrix.
///
/// Reducible graphs are accepted as long as every component is of a
/// supported finite type; the type name then joins the components with `+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    labels: Vec<String>,
    matrix: Vec<Vec<u32>>,
    components: Vec<(CoxeterType, Vec<usize>)>,
    type_name: String,
}

impl CoxeterGraph {
    pub fn from_type(t: CoxeterType) -> Self {
        let n = t.rank();
        CoxeterGraph {
            labels: (0..n).map(|i| format!("s{i}")).collect(),
            matrix: t.coxeter_matrix(),
            components: vec![(t, (0..n).collect())],
            type_name: t.to_string(),
        }
    }

    /// Parse a specification such as `E6`, `B4` or `I2(7)`.
    pub fn parse(spec: &str) -> Result<Self> {
        Ok(Self::from_type(spec.parse()?))
    }

    /// Build from an arbitrary Coxeter matrix, classifying its components.
    pub fn from_matrix(matrix: Vec<Vec<u32>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::UnsupportedType("empty Coxeter matrix".into()));
        }
        for i in 0..n {
            if matrix[i].len() != n || matrix[i][i] != 1 {
                return Err(Error::UnsupportedType("malformed Coxeter matrix".into()));
            }
            for j in 0..n {
                if i != j && (matrix[i][j] < 2 || matrix[i][j] != matrix[j][i]) {
                    if matrix[i][j] == 0 && matrix[j][i] == 0 {
                        return Err(Error::NonFiniteType(format!("m({i},{j}) = infinity")));
                    }
                    return Err(Error::UnsupportedType("malformed Coxeter matrix".into()));
                }
            }
        }
        if !gram_is_positive_definite(&matrix) {
            return Err(Error::NonFiniteType("Gram matrix is not positive definite".into()));
        }
        let mut components = Vec::new();
        for comp in connected_components(&matrix) {
            let sub: Vec<Vec<u32>> =
                comp.iter().map(|&i| comp.iter().map(|&j| matrix[i][j]).collect()).collect();
            components.push((classify_connected(&sub)?, comp));
        }
        let type_name = components.iter().map(|(t, _)| t.to_string()).collect::<Vec<_>>().join("+");
        Ok(CoxeterGraph {
            labels: (0..n).map(|i| format!("s{i}")).collect(),
            matrix,
            components,
            type_name,
        })
    }

    /// The induced subgraph on `subset` (relabelled `0..|subset|` in order).
    pub fn subgraph(&self, subset: &[usize]) -> Result<Self> {
        let matrix: Vec<Vec<u32>> =
            subset.iter().map(|&i| subset.iter().map(|&j| self.matrix[i][j]).collect()).collect();
        if matrix.is_empty() {
            return Ok(CoxeterGraph {
                labels: vec![],
                matrix,
                components: vec![],
                type_name: "trivial".into(),
            });
        }
        let mut g = Self::from_matrix(matrix)?;
        g.labels = subset.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(g)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn m(&self, s: usize, t: usize) -> u32 {
        self.matrix[s][t]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn type_name(&self) -> &str {
        &self.type_name
    }

    pub fn components(&self) -> &[(CoxeterType, Vec<usize>)] {
        &self.components
    }

    /// The single irreducible type, if the graph is connected.
    pub fn irreducible_type(&self) -> Option<CoxeterType> {
        match self.components.as_slice() {
            [(t, _)] => Some(*t),
            _ => None,
        }
    }

    pub fn order(&self) -> u128 {
        self.components.iter().map(|(t, _)| t.order()).product()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.components.iter().map(|(t, _)| t.num_positive_roots()).sum()
    }

    pub fn is_simply_laced(&self) -> bool {
        (0..self.rank()).all(|i| (0..self.rank()).all(|j| self.matrix[i][j] <= 3))
    }
}

/// Positive definiteness of the Gram matrix `(-cos(π/m(s,t)))`.
pub fn gram_is_positive_definite(matrix: &[Vec<u32>]) -> bool {
    let n = matrix.len();
    let gram = DMatrix::from_fn(n, n, |i, j| {
        if matrix[i][j] == 0 {
            -1.0
        } else {
            -(std::f64::consts::PI / matrix[i][j] as f64).cos()
        }
    });
    let eig = gram.symmetric_eigenvalues();
    eig.iter().all(|&x| x > 1e-9)
}

fn connected_components(matrix: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let n = matrix.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let a = comp[i];
            for b in 0..n {
                if !seen[b] && matrix[a][b] >= 3 {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Classify a connected, positive-definite Coxeter matrix.
fn classify_connected(m: &[Vec<u32>]) -> Result<CoxeterType> {
    let n = m.len();
    if n == 1 {
        return Ok(CoxeterType::A(1));
    }
    if n == 2 {
        return Ok(match m[0][1] {
            3 => CoxeterType::A(2),
            4 => CoxeterType::B(2),
            k => CoxeterType::I2(k),
        });
    }
    let nbrs: Vec<Vec<usize>> =
        (0..n).map(|i| (0..n).filter(|&j| j != i && m[i][j] >= 3).collect()).collect();
    let labels: Vec<u32> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .map(|(i, j)| m[i][j])
        .filter(|&x| x >= 3)
        .collect();
    let count = |k: u32| labels.iter().filter(|&&x| x == k).count();
    let branch: Vec<usize> = (0..n).filter(|&i| nbrs[i].len() >= 3).collect();
    let unsupported = || Error::UnsupportedType(format!("{m:?}"));
    if branch.is_empty() {
        // A path: find an end and walk it.
        let end = (0..n).find(|&i| nbrs[i].len() == 1).ok_or_else(unsupported)?;
        let mut path = vec![end];
        while path.len() < n {
            let cur = *path.last().unwrap();
            let next = nbrs[cur]
                .iter()
                .copied()
                .find(|x| !path.contains(x))
                .ok_or_else(unsupported)?;
            path.push(next);
        }
        let edge_labels: Vec<u32> = path.windows(2).map(|w| m[w[0]][w[1]]).collect();
        let last = edge_labels.len() - 1;
        if count(3) == labels.len() {
            return Ok(CoxeterType::A(n));
        }
        if count(4) == 1 && count(3) == labels.len() - 1 {
            if edge_labels[0] == 4 || edge_labels[last] == 4 {
                return Ok(CoxeterType::B(n));
            }
            if n == 4 && edge_labels[1] == 4 {
                return Ok(CoxeterType::F4);
            }
        }
        if count(5) == 1 && count(3) == labels.len() - 1 && (n == 3 || n == 4)
            && (edge_labels[0] == 5 || edge_labels[last] == 5) {
                return Ok(CoxeterType::H(n));
            }
        return Err(unsupported());
    }
    if branch.len() != 1 || count(3) != labels.len() || nbrs[branch[0]].len() != 3 {
        return Err(unsupported());
    }
    let centre = branch[0];
    let mut arms: Vec<usize> = nbrs[centre]
        .iter()
        .map(|&start| {
            let mut len = 1;
            let (mut prev, mut cur) = (centre, start);
            loop {
                match nbrs[cur].iter().copied().find(|&x| x != prev) {
                    Some(next) => {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Ok(CoxeterType::D(n)),
        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Ok(CoxeterType::E(n)),
        _ => Err(unsupported()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!("E6".parse::<CoxeterType>().unwrap(), CoxeterType::E(6));
        assert_eq!("I2(7)".parse::<CoxeterType>().unwrap(), CoxeterType::I2(7));
        assert_eq!("H4".parse::<CoxeterType>().unwrap(), CoxeterType::H(4));
        assert!("E9".parse::<CoxeterType>().is_err());
        assert!("D3".parse::<CoxeterType>().is_err());
        assert!("X5".parse::<CoxeterType>().is_err());
        assert!("I2(x)".parse::<CoxeterType>().is_err());
    }

    #[test]
    fn classification_round_trip() {
        let types = [
            CoxeterType::A(1),
            CoxeterType::A(5),
            CoxeterType::B(4),
            CoxeterType::D(4),
            CoxeterType::D(6),
            CoxeterType::E(6),
            CoxeterType::E(7),
            CoxeterType::E(8),
            CoxeterType::F4,
            CoxeterType::H(3),
            CoxeterType::H(4),
            CoxeterType::I2(5),
            CoxeterType::I2(12),
        ];
        for t in types {
            let g = CoxeterGraph::from_matrix(t.coxeter_matrix()).unwrap();
            assert_eq!(g.irreducible_type(), Some(t));
        }
    }

    #[test]
    fn affine_and_hyperbolic_rejected() {
        // affine A2: a triangle of 3-edges
        let tri = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
        assert!(matches!(CoxeterGraph::from_matrix(tri), Err(Error::NonFiniteType(_))));
        // affine C2
        let c2 = vec![vec![1, 4, 2], vec![4, 1, 4], vec![2, 4, 1]];
        assert!(matches!(CoxeterGraph::from_matrix(c2), Err(Error::NonFiniteType(_))));
    }

    #[test]
    fn reducible_graph() {
        let m = vec![vec![1, 3, 2], vec![3, 1, 2], vec![2, 2, 1]];
        let g = CoxeterGraph::from_matrix(m).unwrap();
        assert_eq!(g.type_name(), "A2+A1");
        assert_eq!(g.order(), 12);
    }
}
