//! Sparse exact linear algebra and graded-piece enumeration, used both by the
//! algorithms that need per-degree computations and as brute-force oracles.

use std::collections::{BTreeMap, HashMap};

use crate::superpoly::{FieldElem, Ring, SuperMonomial, SuperPoly};

/// Sparse vector: strictly increasing column indices, no zero entries.
pub type SparseVec = Vec<(usize, FieldElem)>;

/// An echelon basis of a subspace of `K^n`. Each row is monic, and the pivots
/// (first columns) are distinct.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    rows: BTreeMap<usize, SparseVec>,
}

fn axpy(v: &mut BTreeMap<usize, FieldElem>, c: &FieldElem, row: &SparseVec) {
    for (j, a) in row {
        let delta = c * a;
        let entry = v.remove(j);
        let val = match entry {
            Some(x) => &x - &delta,
            None => -delta,
        };
        if !val.is_zero() {
            v.insert(*j, val);
        }
    }
}

impl SpanBasis {
    pub fn new() -> Self {
        SpanBasis { rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut w: BTreeMap<usize, FieldElem> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = w.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(k) = next else { break };
            let c = w[&k].clone();
            axpy(&mut w, &c, &self.rows[&k]);
            cursor = k + 1;
        }
        w.into_iter().collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.first().cloned() else { return false };
        let inv = lead.inv();
        let row = r.into_iter().map(|(j, a)| (j, &a * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }
}

/// Basis of the null space `{c : sum_i c_i rows[i] = 0}`, as sparse vectors
/// indexed by row number.
pub fn left_kernel(rows: &[SparseVec], n_cols: usize, characteristic: u64) -> Vec<SparseVec> {
    let mut span = SpanBasis::new();
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut aug = r.clone();
        aug.push((n_cols + i, FieldElem::one(characteristic)));
        let red = span.reduce(&aug);
        match red.first() {
            Some((j, _)) if *j >= n_cols => {
                out.push(red.iter().map(|(j, a)| (j - n_cols, a.clone())).collect());
            }
            Some(_) => {
                span.insert(&red);
            }
            None => {}
        }
    }
    out
}

/// Number of monomials of degree `t` in a ring with the given numbers of
/// even and odd variables.
pub fn graded_dim(n_even: usize, n_odd: usize, t: usize) -> u128 {
    let binom = |n: u128, k: u128| -> u128 {
        if k > n {
            return 0;
        }
        let mut acc = 1u128;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    };
    (0..=t.min(n_odd))
        .map(|k| {
            let rest = (t - k) as u128;
            let even_part = if n_even == 0 {
                u128::from(rest == 0)
            } else {
                binom(n_even as u128 + rest - 1, rest)
            };
            binom(n_odd as u128, k as u128) * even_part
        })
        .sum()
}

/// The monomial basis of the degree-`t` piece with a lookup table.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    pub monomials: Vec<SuperMonomial>,
    index: HashMap<SuperMonomial, usize>,
}

fn compositions(total: u32, parts: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
    if parts == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if parts == 1 {
        prefix.push(total as u16);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for k in (0..=total).rev() {
        prefix.push(k as u16);
        compositions(total - k, parts - 1, prefix, out);
        prefix.pop();
    }
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            rec(i + 1, n, k - 1, acc | (1 << i), out);
        }
    }
    rec(0, n, k, 0, &mut out);
    out
}

impl GradedPiece {
    pub fn new(ring: &Ring, t: u32) -> Self {
        let mut monomials = Vec::new();
        for k in 0..=(t as usize).min(ring.n_odd()) {
            let mut evens = Vec::new();
            compositions(t - k as u32, ring.n_even(), &mut Vec::new(), &mut evens);
            for mask in subsets(ring.n_odd(), k) {
                for e in &evens {
                    monomials.push(SuperMonomial::from_parts(e, mask));
                }
            }
        }
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        GradedPiece { degree: t, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &SuperMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a polynomial whose terms all have degree `self.degree`.
    pub fn coords(&self, f: &SuperPoly) -> SparseVec {
        let mut v: Vec<(usize, FieldElem)> = f
            .terms()
            .iter()
            .map(|(m, c)| (self.index_of(m).expect("term of the wrong degree"), c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn poly(&self, ring: &Ring, v: &SparseVec) -> SuperPoly {
        SuperPoly::from_terms(ring, v.iter().map(|(i, c)| (self.monomials[*i].clone(), c.clone())).collect())
    }
}

/// K-basis (as an echelon span) of `(ideal generated by gens)_t`, computed by
/// brute force from products `m * g` with `m` a monomial. Generators must be
/// degree-homogeneous.
pub fn ideal_piece(ring: &Ring, gens: &[SuperPoly], t: u32, piece: &GradedPiece) -> SpanBasis {
    let mut span = SpanBasis::new();
    let one = ring.scalar(1);
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > t {
            continue;
        }
        let mult = GradedPiece::new(ring, t - dg);
        for m in &mult.monomials {
            let p = g.mul_monomial_left(m, &one);
            if !p.is_zero() {
                span.insert(&piece.coords(&p));
            }
        }
    }
    span
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpoly::RingSpec;

    #[test]
    fn piece_sizes_match_formula() {
        let r = RingSpec::new(vec!["x".into(), "y".into()], vec!["a".into(), "b".into()], 0).unwrap();
        for t in 0..5 {
            assert_eq!(GradedPiece::new(&r, t).len() as u128, graded_dim(2, 2, t as usize));
        }
        assert_eq!(graded_dim(2, 2, 2), 8);
        assert_eq!(graded_dim(0, 3, 4), 0);
        assert_eq!(graded_dim(0, 0, 0), 1);
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let f = |n: i64| FieldElem::from_int(n, 0);
        let rows = vec![vec![(0, f(1)), (1, f(2))], vec![(1, f(1))], vec![(0, f(2)), (1, f(1))]];
        let k = left_kernel(&rows, 2, 0);
        assert_eq!(k.len(), 1);
        // 2*r0 - 3*r1 - r2 = 0 up to scaling
        let c = &k[0];
        let mut total = [f(0), f(0)];
        for (i, a) in c {
            for (j, b) in &rows[*i] {
                total[*j] = &total[*j] + &(a * b);
            }
        }
        assert!(total.iter().all(|x| x.is_zero()));
    }
}
