//! Partitions and (m|n)-hook tableau combinatorics.
//!
//! `hook_schur_dim(λ, m, n)` is the dimension of the super Schur functor
//! `S_λ(V)` for `dim V = (m, n)`. The exterior-type functors used elsewhere
//! are `∧^λ = S_{λ'}`; callers conjugate explicitly.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::graded_dim;

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Unsupported(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i` with 0-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Ferrers-diagram containment `self ⊇ other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Boxes `(row, col)` in row-reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j))).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `((d+1)^e, d)`, a `(d+1) x (e+1)` rectangle minus its corner box.
pub fn lambda_de(d: u32, e: u32) -> Partition {
    let mut parts = vec![d + 1; e as usize];
    parts.push(d);
    Partition::new(parts).expect("rectangle minus a corner is a partition")
}

/// Order used by the filtration by products of super-minors: `λ` precedes
/// `μ` when, at the first index where the conjugates differ, `λ'` is
/// smaller. Under it `(t)` is the least partition of `t`.
pub fn filtration_order(lambda: &Partition, mu: &Partition) -> Ordering {
    let (a, b) = (lambda.conjugate(), mu.conjugate());
    let n = a.len().max(b.len());
    for i in 0..n {
        match a.part(i).cmp(&b.part(i)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Partitions of `t` in lexicographically decreasing order, optionally
/// bounded in length and in part size.
pub fn partitions_of(t: u32, max_parts: Option<usize>, max_part: Option<u32>) -> Vec<Partition> {
    fn rec(rest: u32, cap: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            prefix.push(p);
            rec(rest - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(t, max_part.unwrap_or(t), max_parts.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out
}

/// Counts (m|n)-hook semistandard tableaux of shape `λ`, split by the parity
/// of the number of primed entries. Alphabet `0..m` unprimed, then `m..m+n`
/// primed; entries weakly increase along rows and down columns, unprimed
/// entries strictly down columns, primed entries strictly along rows.
pub fn hook_schur_dim_by_parity(lambda: &Partition, m: usize, n: usize) -> [u128; 2] {
    if lambda.part(m) as usize > n {
        return [0, 0];
    }
    let boxes = lambda.boxes();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut counts = [0u128; 2];
    fn rec(k: usize, boxes: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, m: usize, n: usize, primed: usize, counts: &mut [u128; 2]) {
        if k == boxes.len() {
            counts[primed & 1] += 1;
            return;
        }
        let (i, j) = boxes[k];
        'entries: for v in 0..m + n {
            let is_primed = v >= m;
            if j > 0 {
                let left = grid[i][j - 1];
                if v < left || (is_primed && v == left) {
                    continue 'entries;
                }
            }
            if i > 0 {
                let up = grid[i - 1][j];
                if v < up || (!is_primed && v == up) {
                    continue 'entries;
                }
            }
            grid[i][j] = v;
            rec(k + 1, boxes, grid, m, n, primed + usize::from(is_primed), counts);
        }
    }
    rec(0, &boxes, &mut grid, m, n, 0, &mut counts);
    counts
}

pub fn hook_schur_dim(lambda: &Partition, m: usize, n: usize) -> u128 {
    let [a, b] = hook_schur_dim_by_parity(lambda, m, n);
    a + b
}

/// Both sides of the super Cauchy decomposition in degree `t`.
pub fn cauchy_sides(t: u32, v: (usize, usize), u: (usize, usize)) -> (u128, u128) {
    let (m, n) = v;
    let (d, e) = u;
    let lhs = graded_dim(m * d + n * e, m * e + n * d, t as usize);
    let rhs = partitions_of(t, None, None)
        .iter()
        .map(|l| hook_schur_dim(l, m, n) * hook_schur_dim(l, d, e))
        .sum();
    (lhs, rhs)
}

pub fn cauchy_check(t: u32, v: (usize, usize), u: (usize, usize)) -> bool {
    let (l, r) = cauchy_sides(t, v, u);
    l == r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2]).conjugate(), p(&[1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[3, 3, 3, 2]).conjugate(), p(&[4, 4, 3]));
    }

    #[test]
    fn lambda_shapes() {
        assert_eq!(lambda_de(2, 3), p(&[3, 3, 3, 2]));
        assert_eq!(lambda_de(0, 3), p(&[1, 1, 1]));
        assert_eq!(lambda_de(2, 0), p(&[2]));
        assert_eq!(lambda_de(0, 0), Partition::empty());
        assert_eq!(lambda_de(3, 2).size(), 11);
    }

    #[test]
    fn small_hook_dims() {
        assert_eq!(hook_schur_dim(&p(&[2]), 1, 1), 2);
        assert_eq!(hook_schur_dim(&p(&[1, 1]), 1, 1), 2);
        assert_eq!(hook_schur_dim(&p(&[1]), 3, 2), 5);
        assert_eq!(hook_schur_dim(&p(&[2, 2]), 1, 1), 0);
        assert_eq!(hook_schur_dim(&p(&[2, 1]), 1, 1), 2);
        assert_eq!(hook_schur_dim(&p(&[2, 2]), 1, 0), 0);
        assert_eq!(hook_schur_dim(&Partition::empty(), 0, 0), 1);
        // S_2 of a (1|1) space: S_2 V_0 even, V_0 ⊗ V_1 odd
        assert_eq!(hook_schur_dim_by_parity(&p(&[2]), 1, 1), [1, 1]);
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions_of(3, None, None), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(3, Some(2), None), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(partitions_of(0, None, None), vec![Partition::empty()]);
        assert_eq!(partitions_of(4, None, Some(2)), vec![p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    }

    #[test]
    fn filtration_order_puts_single_row_first() {
        let parts = partitions_of(4, None, None);
        let mut sorted = parts.clone();
        sorted.sort_by(filtration_order);
        assert_eq!(sorted, parts);
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_sides(2, (1, 1), (1, 1)), (8, 8));
        assert!(cauchy_check(0, (2, 1), (0, 3)));
        assert_eq!(cauchy_sides(1, (2, 1), (1, 2)), (9, 9));
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        let j: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(j, p(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
