//! The maps `ρ_t: ∧^t V ⊗ ∧^t U -> S_t(V ⊗ U)`, double tableaux and their
//! column symmetrizations, and the highest weight vectors `c_λ`.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::setup::GenericSetup;
use crate::error::{Error, Result};
use crate::schur::{hook_schur_dim, Partition};
use crate::superpoly::{FieldElem, Ring, SuperMonomial, SuperPoly, Var};

/// All permutations of `0..t` in lexicographic order.
pub(crate) fn permutations(t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..t).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..t).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..t).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

fn var_monomial(ring: &Ring, v: Var) -> SuperMonomial {
    match v {
        Var::Even(i) => SuperMonomial::even_var(ring.n_even(), i),
        Var::Odd(j) => SuperMonomial::odd_var(ring.n_even(), j),
    }
}

/// `ρ_t(v_{c_1} ∧ … ∧ v_{c_t} ⊗ u_{r_1} ∧ … ∧ u_{r_t})`, expanded as
/// `Σ_σ ± (v_{c_1} ⊗ u_{r_σ(1)}) ⋯ (v_{c_t} ⊗ u_{r_σ(t)})`. The sign is the
/// sign of `σ`, corrected by `(-1)` for every pair of odd `u`'s it swaps, and
/// by `(-1)^{|u||v|}` for every `u` that moves past a later `v` when the
/// factors are paired up.
pub fn rho(setup: &GenericSetup, vrow: &[usize], urow: &[usize]) -> Result<SuperPoly> {
    let t = vrow.len();
    if urow.len() != t {
        return Err(Error::DimensionMismatch(format!("rows of lengths {t} and {}", urow.len())));
    }
    if vrow.iter().any(|&c| c >= setup.v_dim()) || urow.iter().any(|&r| r >= setup.u_dim()) {
        return Err(Error::DimensionMismatch("basis index out of range".into()));
    }
    let ring = &setup.ring;
    let vp: Vec<u8> = vrow.iter().map(|&c| setup.v_parity(c)).collect();
    let up: Vec<u8> = urow.iter().map(|&r| setup.u_parity(r)).collect();
    let mut terms = Vec::new();
    for sigma in permutations(t) {
        let mut neg = false;
        for i in 0..t {
            for j in i + 1..t {
                if sigma[i] > sigma[j] {
                    neg ^= true;
                    neg ^= up[sigma[i]] & up[sigma[j]] == 1;
                }
            }
        }
        for k in 0..t {
            if up[sigma[k]] == 1 {
                neg ^= vp[k + 1..].iter().filter(|&&p| p == 1).count() % 2 == 1;
            }
        }
        let mut mono = SuperMonomial::one(ring.n_even());
        let mut alive = true;
        for k in 0..t {
            match mono.mul(&var_monomial(ring, setup.var(vrow[k], urow[sigma[k]]))) {
                Some((s, p)) => {
                    neg ^= s;
                    mono = p;
                }
                None => {
                    alive = false;
                    break;
                }
            }
        }
        if alive {
            terms.push((mono, ring.scalar(if neg { -1 } else { 1 })));
        }
    }
    Ok(SuperPoly::from_terms(ring, terms))
}

/// A pair of tableaux of the same shape: `s` with entries in the V basis,
/// `t` with entries in the U basis, both as rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoubleTableau {
    pub shape: Partition,
    pub s: Vec<Vec<usize>>,
    pub t: Vec<Vec<usize>>,
}

impl DoubleTableau {
    pub fn new(s: Vec<Vec<usize>>, t: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(s.iter().map(|r| r.len() as u32).collect())?;
        let t_shape: Vec<usize> = t.iter().map(|r| r.len()).collect();
        let s_shape: Vec<usize> = s.iter().map(|r| r.len()).collect();
        if s_shape != t_shape {
            return Err(Error::DimensionMismatch(format!("tableau shapes {s_shape:?} and {t_shape:?} differ")));
        }
        Ok(DoubleTableau { shape, s, t })
    }
}

/// Memoizes `ρ` on rows; the symmetrizations below reuse rows heavily.
pub(crate) struct RhoCache<'a> {
    setup: &'a GenericSetup,
    cache: HashMap<(Vec<usize>, Vec<usize>), SuperPoly>,
}

impl<'a> RhoCache<'a> {
    pub(crate) fn new(setup: &'a GenericSetup) -> Self {
        RhoCache { setup, cache: HashMap::new() }
    }

    pub(crate) fn row(&mut self, v: &[usize], u: &[usize]) -> Result<SuperPoly> {
        let key = (v.to_vec(), u.to_vec());
        if let Some(p) = self.cache.get(&key) {
            return Ok(p.clone());
        }
        let p = rho(self.setup, v, u)?;
        self.cache.insert(key, p.clone());
        Ok(p)
    }

    /// `Π_i ρ(S_i ⊗ T_i)`, times the sign of moving each row of `T` past the
    /// later rows of `S`.
    pub(crate) fn tableau(&mut self, s: &[Vec<usize>], t: &[Vec<usize>]) -> Result<SuperPoly> {
        let row_parity = |row: &[usize], par: &dyn Fn(usize) -> u8| row.iter().map(|&x| par(x)).sum::<u8>() & 1;
        let sp: Vec<u8> = s.iter().map(|r| row_parity(r, &|c| self.setup.v_parity(c))).collect();
        let tp: Vec<u8> = t.iter().map(|r| row_parity(r, &|c| self.setup.u_parity(c))).collect();
        let mut neg = false;
        for (i, &ti) in tp.iter().enumerate() {
            for &sj in &sp[i + 1..] {
                neg ^= ti & sj == 1;
            }
        }
        let mut acc = SuperPoly::constant(&self.setup.ring, self.setup.ring.scalar(if neg { -1 } else { 1 }));
        for (sv, tu) in s.iter().zip(t) {
            let r = self.row(sv, tu)?;
            acc = &acc * &r;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

/// `ρ(S ⊗ T)`: the product of the row maps.
pub fn rho_tableau(setup: &GenericSetup, tab: &DoubleTableau) -> Result<SuperPoly> {
    RhoCache::new(setup).tableau(&tab.s, &tab.t)
}

/// Every column-preserving permutation of the boxes of `shape`, as one
/// permutation of row indices per column.
fn column_group(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
    let conj = shape.conjugate();
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for j in 0..conj.len() {
        let perms = permutations(conj.part(j) as usize);
        out = out.iter().flat_map(|prefix| perms.iter().map(move |p| [prefix.clone(), vec![p.clone()]].concat())).collect();
    }
    out
}

/// Applies a column permutation to a tableau. Returns the new rows and the
/// Koszul sign (true = negative) of the induced reordering of the reading
/// word: one factor `-1` per pair of odd entries whose order is reversed.
fn permute_columns(rows: &[Vec<usize>], perm: &[Vec<usize>], odd: &dyn Fn(usize) -> bool) -> (Vec<Vec<usize>>, bool) {
    let mut out = rows.to_vec();
    let offsets: Vec<usize> = rows.iter().scan(0, |acc, r| {
        let o = *acc;
        *acc += r.len();
        Some(o)
    }).collect();
    let mut placed = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            let ni = perm[j][i];
            out[ni][j] = x;
            placed.push((offsets[ni] + j, odd(x)));
        }
    }
    let mut neg = false;
    for a in 0..placed.len() {
        for b in a + 1..placed.len() {
            if placed[a].1 && placed[b].1 && placed[a].0 > placed[b].0 {
                neg ^= true;
            }
        }
    }
    (out, neg)
}

pub(crate) fn pi_with(cache: &mut RhoCache<'_>, tab: &DoubleTableau, prime: bool) -> Result<SuperPoly> {
    let setup = cache.setup;
    let ring = &setup.ring;
    let mut acc = SuperPoly::zero(ring);
    for perm in column_group(&tab.shape) {
        let (term, neg) = if prime {
            let (t2, neg) = permute_columns(&tab.t, &perm, &|r| setup.u_parity(r) == 1);
            (cache.tableau(&tab.s, &t2)?, neg)
        } else {
            let (s2, neg) = permute_columns(&tab.s, &perm, &|c| setup.v_parity(c) == 1);
            (cache.tableau(&s2, &tab.t)?, neg)
        };
        acc = if neg { &acc - &term } else { &acc + &term };
    }
    Ok(acc)
}

/// `π(S, T) = Σ_{σ ∈ P(λ)} ρ(σS ⊗ T)` over the column group of the shape.
pub fn pi(setup: &GenericSetup, tab: &DoubleTableau) -> Result<SuperPoly> {
    pi_with(&mut RhoCache::new(setup), tab, false)
}

/// `π'(S, T) = Σ_{σ ∈ P(λ)} ρ(S ⊗ σT)`.
pub fn pi_prime(setup: &GenericSetup, tab: &DoubleTableau) -> Result<SuperPoly> {
    pi_with(&mut RhoCache::new(setup), tab, true)
}

/// `None` if `∧^λ V ⊗ ∧^λ U` is nonzero, otherwise the reason it vanishes.
pub fn admissibility(lambda: &Partition, setup: &GenericSetup) -> Option<String> {
    let conj = lambda.conjugate();
    let s = &setup.spec;
    if hook_schur_dim(&conj, s.m, s.n) == 0 {
        return Some(format!("∧^{lambda} V vanishes for dim V = ({},{})", s.m, s.n));
    }
    if hook_schur_dim(&conj, s.d, s.e) == 0 {
        return Some(format!("∧^{lambda} U vanishes for dim U = ({},{})", s.d, s.e));
    }
    None
}

/// Row `i` (0-based) of the highest weight tableau on a side with `even`
/// even basis vectors: the first `min(len, even)` even vectors, then the
/// `i`-th odd vector repeated.
fn weight_row(len: usize, even: usize, i: usize) -> Vec<usize> {
    let mut row: Vec<usize> = (0..len.min(even)).collect();
    row.extend(std::iter::repeat_n(even + i, len.saturating_sub(even)));
    row
}

/// The canonical double tableau whose `ρ` is `c_λ`.
pub fn highest_weight_tableau(lambda: &Partition, setup: &GenericSetup) -> DoubleTableau {
    let s = &setup.spec;
    let rows: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let sv = rows.iter().enumerate().map(|(i, &l)| weight_row(l, s.m, i)).collect();
    let tu = rows.iter().enumerate().map(|(i, &l)| weight_row(l, s.d, i)).collect();
    DoubleTableau { shape: lambda.clone(), s: sv, t: tu }
}

/// Scales a polynomial over Q to a primitive integral one and reduces it
/// into `target`, a ring with the same variable layout.
fn primitive_reduction(f: &SuperPoly, target: &Ring) -> SuperPoly {
    let mut den = BigInt::one();
    for (_, c) in f.terms() {
        if let FieldElem::Rational(q) = c {
            den = den.lcm(q.denom());
        }
    }
    let scaled: Vec<BigInt> = f
        .terms()
        .iter()
        .map(|(_, c)| {
            let FieldElem::Rational(q) = c else { unreachable!("rational coefficients") };
            q.numer() * (&den / q.denom())
        })
        .collect();
    let mut content = scaled.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
    if content.is_zero() {
        return SuperPoly::zero(target);
    }
    if scaled[0].is_negative() {
        content = -content;
    }
    let terms = f
        .terms()
        .iter()
        .zip(&scaled)
        .map(|((m, _), a)| (m.clone(), FieldElem::from_ratio(&(a / &content), &BigInt::one(), target.characteristic).unwrap()))
        .collect();
    SuperPoly::from_terms(target, terms)
}

/// The highest weight vector of `∧^λ V ⊗ ∧^λ U`, up to a scalar: the
/// column symmetrization of the product `Π_i ρ_{λ_i}(w_i^1 ⊗ w_i^2)` over
/// the canonical tableau, with integer coefficients of content one. Zero
/// when `λ` is not admissible.
///
/// When the columns of the canonical tableau are constant this is the
/// product itself. When two rows extend past both `m` and `d`, a column holds
/// distinct odd vectors on both sides and the bare product is not a weight
/// vector of the component, so the symmetrization is needed. Computing over
/// Q and reducing keeps factorial scalars from vanishing in characteristic p.
pub fn highest_weight_vector(lambda: &Partition, setup: &GenericSetup) -> Result<SuperPoly> {
    if admissibility(lambda, setup).is_some() {
        return Ok(SuperPoly::zero(&setup.ring));
    }
    let tab = highest_weight_tableau(lambda, setup);
    let rational = setup.with_characteristic(0)?;
    let mut cache = RhoCache::new(&rational);
    let mut c = pi_with(&mut cache, &tab, false)?;
    if c.is_zero() {
        c = pi_with(&mut cache, &tab, true)?;
    }
    Ok(primitive_reduction(&c, &setup.ring))
}

/// Rows of length `len` over a basis of `dim` vectors whose first `even` are
/// even, in canonical form for a super-antisymmetric slot: increasing, with
/// only odd vectors allowed to repeat.
pub(crate) fn exterior_rows(len: usize, dim: usize, even: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, start: usize, dim: usize, even: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in start..dim {
            cur.push(x);
            let next = if x < even { x + 1 } else { x };
            rec(len, next, dim, even, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, 0, dim, even, &mut Vec::new(), &mut out);
    out
}

/// Tableaux of the given shape that are canonical for a slot that is
/// super-symmetric along columns: columns weakly increase downwards, and
/// only even vectors may repeat within a column.
pub(crate) fn column_canonical(shape: &Partition, dim: usize, even: usize) -> Vec<Vec<Vec<usize>>> {
    let conj = shape.conjugate();
    let mut columns: Vec<Vec<Vec<usize>>> = Vec::new();
    for j in 0..conj.len() {
        // symmetric columns: the complement rule of `exterior_rows`
        let len = conj.part(j) as usize;
        let mut out = Vec::new();
        fn rec(len: usize, start: usize, dim: usize, even: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            for x in start..dim {
                cur.push(x);
                let next = if x < even { x } else { x + 1 };
                rec(len, next, dim, even, cur, out);
                cur.pop();
            }
        }
        rec(len, 0, dim, even, &mut Vec::new(), &mut out);
        columns.push(out);
    }
    let mut tableaux: Vec<Vec<Vec<usize>>> = vec![shape.parts().iter().map(|&p| vec![0; p as usize]).collect()];
    for (j, choices) in columns.iter().enumerate() {
        let mut next = Vec::new();
        for t in &tableaux {
            for col in choices {
                let mut t2 = t.clone();
                for (i, &x) in col.iter().enumerate() {
                    t2[i][j] = x;
                }
                next.push(t2);
            }
        }
        tableaux = next;
    }
    tableaux
}

/// Tableaux whose rows are canonical for super-antisymmetric rows.
pub(crate) fn row_canonical(shape: &Partition, dim: usize, even: usize) -> Vec<Vec<Vec<usize>>> {
    let mut tableaux: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &p in shape.parts() {
        let rows = exterior_rows(p as usize, dim, even);
        tableaux = tableaux.iter().flat_map(|t| rows.iter().map(move |r| [t.clone(), vec![r.clone()]].concat())).collect();
    }
    tableaux
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &GenericSetup, text: &str) -> SuperPoly {
        SuperPoly::parse(&s.ring, text).unwrap()
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn rho_gives_minors() {
        let s = GenericSetup::new(2, 0, 2, 0, 0).unwrap();
        assert_eq!(rho(&s, &[0, 1], &[0, 1]).unwrap(), poly(&s, "x_1_1*x_2_2 - x_1_2*x_2_1"));
        assert_eq!(rho(&s, &[1], &[0]).unwrap(), poly(&s, "x_1_2"));
        let s = GenericSetup::new(1, 1, 1, 1, 0).unwrap();
        assert_eq!(rho(&s, &[0, 1], &[0, 1]).unwrap(), poly(&s, "x_1_1*y_1_1 - a_1_1*b_1_1"));
    }

    #[test]
    fn rho_exterior_minor() {
        let s = GenericSetup::new(0, 2, 2, 0, 0).unwrap();
        // a repeated even vector kills the row
        assert!(rho(&s, &[0, 0], &[0, 1]).unwrap().is_zero());
        let q = rho(&s, &[0, 1], &[0, 0]).unwrap();
        assert_eq!(q, poly(&s, "2*b_1_1*b_1_2"));
    }

    #[test]
    fn weight_vectors() {
        let s = GenericSetup::new(2, 0, 3, 0, 0).unwrap();
        let c = highest_weight_vector(&Partition::new(vec![2]).unwrap(), &s).unwrap();
        assert_eq!(c.monic(), poly(&s, "x_1_1*x_2_2 - x_1_2*x_2_1").monic());
        let s = GenericSetup::new(0, 3, 2, 0, 0).unwrap();
        let c = highest_weight_vector(&Partition::new(vec![2, 2]).unwrap(), &s).unwrap();
        assert_eq!(c.monic(), poly(&s, "b_1_1*b_1_2*b_2_1*b_2_2"));
        assert!(highest_weight_vector(&Partition::new(vec![3]).unwrap(), &s).unwrap().is_zero());
        assert_eq!(highest_weight_vector(&Partition::empty(), &s).unwrap(), SuperPoly::one(&s.ring));
    }

    #[test]
    fn pi_symmetrizes_columns() {
        let s = GenericSetup::new(0, 2, 2, 0, 0).unwrap();
        let tab = DoubleTableau::new(vec![vec![0], vec![1]], vec![vec![0], vec![1]]).unwrap();
        let p = pi(&s, &tab).unwrap();
        let expected = &poly(&s, "b_1_1*b_2_2") + &poly(&s, "b_1_2*b_2_1");
        assert_eq!(p, expected);
    }

    #[test]
    fn canonical_enumerations() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        // dim (1|1): rows of length 2 are (0,1),(1,1); of length 1: (0),(1)
        assert_eq!(exterior_rows(2, 2, 1), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(row_canonical(&shape, 2, 1).len(), 4);
        // columns of length 2: (0,0),(0,1); of length 1: (0),(1)
        assert_eq!(column_canonical(&shape, 2, 1).len(), 4);
    }
}
