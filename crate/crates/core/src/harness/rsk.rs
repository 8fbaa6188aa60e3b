//! Robinson-Schensted insertion and the type A comparison.

use std::collections::HashMap;

use serde::Serialize;

use crate::cells::{CellPartitions, CellPartition};
use crate::coxeter::Group;
use crate::error::{Error, Result};

pub type Tableau = Vec<Vec<usize>>;

/// Row insertion of a sequence; returns the insertion and recording
/// tableaux `(P, Q)`.
pub fn rsk(seq: &[usize]) -> (Tableau, Tableau) {
    let mut p: Tableau = Vec::new();
    let mut q: Tableau = Vec::new();
    for (step, &x) in seq.iter().enumerate() {
        let mut x = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(i) => {
                    x = std::mem::replace(&mut p[row][i], x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

/// Inverse of [`rsk`].
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Vec<usize> {
    let mut p = p.clone();
    let mut q = q.clone();
    let n: usize = p.iter().map(Vec::len).sum();
    let mut out = vec![0; n];
    for step in (1..=n).rev() {
        let row = q.iter().position(|r| r.last() == Some(&step)).expect("recording tableau");
        q[row].pop();
        let mut x = p[row].pop().unwrap();
        if p[row].is_empty() {
            p.pop();
            q.pop();
        }
        for r in (0..row).rev() {
            let i = p[r].iter().rposition(|&y| y < x).expect("row insertion invariant");
            x = std::mem::replace(&mut p[r][i], x);
        }
        out[step - 1] = x;
    }
    out
}

/// Number of standard Young tableaux with `n` boxes, by removing corners
/// recursively over all partitions of `n`.
pub fn count_standard_tableaux(n: usize) -> u64 {
    fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            partitions(n - k, k, cur, out);
            cur.pop();
        }
    }
    fn count(shape: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
        if shape.iter().sum::<usize>() <= 1 {
            return 1;
        }
        if let Some(&c) = memo.get(shape) {
            return c;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let corner = i + 1 == shape.len() || shape[i + 1] < shape[i];
            if corner {
                shape[i] -= 1;
                let mut smaller: Vec<usize> = shape.iter().copied().filter(|&r| r > 0).collect();
                total += count(&mut smaller, memo);
                shape[i] += 1;
            }
        }
        memo.insert(shape.clone(), total);
        total
    }
    let mut shapes = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut shapes);
    let mut memo = HashMap::new();
    shapes.iter_mut().map(|s| count(s, &mut memo)).sum()
}

/// One-line notation of `w ∈ A_{n-1}`: `s_i` swaps `i+1` and `i+2`, and
/// words compose right to left.
pub fn permutation_of(g: &Group, w: usize) -> Vec<usize> {
    let n = g.rank() + 1;
    (1..=n)
        .map(|j| g.word(w).iter().rev().fold(j, |x, &s| {
            let s = s as usize + 1;
            if x == s {
                s + 1
            } else if x == s + 1 {
                s
            } else {
                x
            }
        }))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableauChoice {
    Insertion,
    Recording,
}

#[derive(Clone, Debug, Serialize)]
pub struct RskReport {
    pub n: usize,
    pub tableau: TableauChoice,
    pub left_cells: usize,
    pub tableau_classes: usize,
    pub standard_tableaux: u64,
    pub partitions_agree: bool,
    pub round_trip: bool,
}

impl RskReport {
    pub fn passed(&self) -> bool {
        self.partitions_agree
            && self.round_trip
            && self.left_cells as u64 == self.standard_tableaux
            && self.tableau_classes as u64 == self.standard_tableaux
    }
}

fn tableau_partition(g: &Group, choice: TableauChoice) -> CellPartition {
    let mut classes: HashMap<Tableau, Vec<usize>> = HashMap::new();
    for w in 0..g.order() {
        let (p, q) = rsk(&permutation_of(g, w));
        let key = match choice {
            TableauChoice::Insertion => p,
            TableauChoice::Recording => q,
        };
        classes.entry(key).or_default().push(w);
    }
    CellPartition::from_blocks(crate::cells::Side::Left, g.order(), classes.into_values().collect())
}

/// Which tableau labels left cells, decided on `A_2` where exactly one of
/// the two choices reproduces the four left cells.
pub fn calibrate() -> Result<TableauChoice> {
    let g = Group::from_spec("A2")?;
    let left = CellPartitions::compute(g.clone())?.left;
    let matching: Vec<TableauChoice> = [TableauChoice::Insertion, TableauChoice::Recording]
        .into_iter()
        .filter(|&c| tableau_partition(&g, c).same_blocks(&left))
        .collect();
    match matching[..] {
        [c] => Ok(c),
        _ => Err(Error::VerificationMismatch("cannot calibrate the RSK tableau on A2".into())),
    }
}

/// Compare the left cells of `A_{n-1}` with RSK tableau classes.
pub fn rsk_check(n: usize) -> Result<RskReport> {
    if !(2..=7).contains(&n) {
        return Err(Error::UnsupportedType(format!("RSK check needs 2 <= n <= 7, got {n}")));
    }
    let choice = calibrate()?;
    let g = Group::from_spec(&format!("A{}", n - 1))?;
    let left = CellPartitions::compute(g.clone())?.left;
    let classes = tableau_partition(&g, choice);
    let round_trip = (0..g.order()).all(|w| {
        let perm = permutation_of(&g, w);
        let (p, q) = rsk(&perm);
        rsk_inverse(&p, &q) == perm
    });
    Ok(RskReport {
        n,
        tableau: choice,
        left_cells: left.num_blocks(),
        tableau_classes: classes.num_blocks(),
        standard_tableaux: count_standard_tableaux(n),
        partitions_agree: classes.same_blocks(&left),
        round_trip,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insertion_example() {
        let (p, q) = rsk(&[3, 1, 2]);
        assert_eq!(p, vec![vec![1, 2], vec![3]]);
        assert_eq!(q, vec![vec![1, 3], vec![2]]);
        assert_eq!(rsk_inverse(&p, &q), vec![3, 1, 2]);
    }

    #[test]
    fn tableau_counts() {
        let counts: Vec<u64> = (1..=7).map(count_standard_tableaux).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76, 232]);
    }

    #[test]
    fn small_rsk_checks() {
        for n in 2..=5 {
            let r = rsk_check(n).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
