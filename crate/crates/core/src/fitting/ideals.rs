//! The ideals `I_λ`, the element `Z`, specialization, and the filtration of
//! `S_t(V ⊗ U)` by products of super-minors.

use super::lie::lie_closure;
use super::setup::GenericSetup;
use super::tableau::{admissibility, permutations, column_canonical, exterior_rows, highest_weight_vector, pi_with, rho, row_canonical, DoubleTableau, RhoCache};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::{GradedPiece, SpanBasis};
use crate::schur::{filtration_order, lambda_de, partitions_of, Partition};
use crate::supermodule::GradedMatrix;
use crate::superpoly::SuperPoly;

/// A K-basis of `∧^λ V ⊗ ∧^λ U ⊂ S(V ⊗ U)`, as the Lie closure of `c_λ`.
/// Empty when the representation vanishes.
pub fn lambda_span(lambda: &Partition, setup: &GenericSetup) -> Result<Vec<SuperPoly>> {
    if admissibility(lambda, setup).is_some() {
        return Ok(Vec::new());
    }
    let c = highest_weight_vector(lambda, setup)?;
    lie_closure(&[c], setup)
}

/// The same space spanned by the column symmetrizations `π(S, T)` (or
/// `π'(S, T)` with `prime`). The symmetrized side runs over tableaux with
/// canonical columns, the other side over tableaux with canonical rows.
pub fn lambda_span_pi(lambda: &Partition, setup: &GenericSetup, prime: bool) -> Result<Vec<SuperPoly>> {
    let s = &setup.spec;
    let (vs, us) = if prime {
        (row_canonical(lambda, setup.v_dim(), s.m), column_canonical(lambda, setup.u_dim(), s.d))
    } else {
        (column_canonical(lambda, setup.v_dim(), s.m), row_canonical(lambda, setup.u_dim(), s.d))
    };
    let piece = GradedPiece::new(&setup.ring, lambda.size());
    let mut span = SpanBasis::new();
    let mut basis = Vec::new();
    let mut cache = RhoCache::new(setup);
    for sv in &vs {
        for tu in &us {
            let tab = DoubleTableau { shape: lambda.clone(), s: sv.clone(), t: tu.clone() };
            let p = pi_with(&mut cache, &tab, prime)?;
            if !p.is_zero() && span.insert(&piece.coords(&p)) {
                basis.push(p);
            }
        }
    }
    Ok(basis)
}

/// `I_λ`, the ideal generated by `∧^λ V ⊗ ∧^λ U`.
pub fn ideal_i_lambda(lambda: &Partition, setup: &GenericSetup) -> Result<Ideal> {
    Ideal::new(&setup.ring, lambda_span(lambda, setup)?)
}

/// The single generator of `Ann(coker Φ)` as a `g`-ideal. Fails when the
/// annihilator is zero (neither `m > d`, `n > e`, nor `(m, n) = (d, e)`).
///
/// With `m > d` this is the product of the first `d+1` columns of `B` times
/// the leading `d × d` minor of `X`, and symmetrically for `n > e`. With
/// `(m, n) = (d, e)` it is the highest weight vector of `I_{Λ(d,e)}`; for
/// `e <= 1` that is `W_1⋯W_e · det X` with `W_s` the `(d+1)`-minor through
/// `y_{s,s}`, but for `e >= 2` that product is not a weight vector of
/// `∧^Λ V ⊗ ∧^Λ U` and its closure is too large.
pub fn corollary2_z(setup: &GenericSetup) -> Result<SuperPoly> {
    let s = setup.spec;
    let ring = &setup.ring;
    let product = |fs: Vec<SuperPoly>| fs.iter().fold(SuperPoly::one(ring), |acc, f| &acc * f);
    if s.m > s.d {
        let z1 = product((0..s.e).flat_map(|j| (0..=s.d).map(move |k| (k, s.d + j))).map(|(c, r)| setup.var_poly(c, r)).collect());
        let idx: Vec<usize> = (0..s.d).collect();
        return Ok(&z1 * &rho(setup, &idx, &idx)?);
    }
    if s.n > s.e {
        let z1 = product((0..s.d).flat_map(|i| (0..=s.e).map(move |l| (s.m + l, i))).map(|(c, r)| setup.var_poly(c, r)).collect());
        // the parity shift turns the leading minor of Y into an ordinary determinant
        let mut det = SuperPoly::zero(ring);
        for sigma in permutations(s.e) {
            let inversions = (0..s.e).flat_map(|i| (i + 1..s.e).map(move |j| (i, j))).filter(|&(i, j)| sigma[i] > sigma[j]).count();
            let term = product((0..s.e).map(|k| setup.var_poly(s.m + k, s.d + sigma[k])).collect());
            det = if inversions % 2 == 0 { &det + &term } else { &det - &term };
        }
        return Ok(&z1 * &det);
    }
    if s.m == s.d && s.n == s.e {
        return highest_weight_vector(&lambda_de(s.d as u32, s.e as u32), setup);
    }
    Err(Error::Unsupported(format!("the annihilator of coker Φ is zero for {}", s)))
}

/// `I(φ)`: the image of a generic ideal under the specialization `Φ -> φ`.
pub fn specialize_ideal(ideal: &Ideal, setup: &GenericSetup, phi: &GradedMatrix) -> Result<Ideal> {
    let (evens, odds) = setup.specialization(phi)?;
    let gens = ideal.generators().iter().map(|g| g.substitute(&phi.ring, &evens, &odds)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&phi.ring, gens)
}

/// Largest `|λ|` accepted by [`filtration_dim`].
pub const FILTRATION_DEGREE_CAP: u32 = 5;

/// Spanning set of `F_μ`: products `Π_i ρ_{μ_i}(rows)` over canonical rows.
fn filtration_piece(mu: &Partition, setup: &GenericSetup, cache: &mut RhoCache<'_>) -> Result<Vec<SuperPoly>> {
    let s = &setup.spec;
    let mut pairs_by_len = std::collections::HashMap::new();
    for &p in mu.parts() {
        pairs_by_len.entry(p).or_insert_with(|| {
            let vs = exterior_rows(p as usize, setup.v_dim(), s.m);
            let us = exterior_rows(p as usize, setup.u_dim(), s.d);
            vs.iter().flat_map(|v| us.iter().map(move |u| (v.clone(), u.clone()))).collect::<Vec<_>>()
        });
    }
    let mut rhos = std::collections::HashMap::new();
    for (&len, pairs) in &pairs_by_len {
        let mut polys = Vec::new();
        for (v, u) in pairs {
            polys.push(cache.row(v, u)?);
        }
        rhos.insert(len, polys);
    }
    // choose one row pair per part; equal parts take non-decreasing indices
    let mut out = Vec::new();
    fn rec(k: usize, parts: &[u32], min_idx: usize, acc: SuperPoly, rhos: &std::collections::HashMap<u32, Vec<SuperPoly>>, out: &mut Vec<SuperPoly>) {
        if acc.is_zero() {
            return;
        }
        if k == parts.len() {
            out.push(acc);
            return;
        }
        let list = &rhos[&parts[k]];
        let start = if k > 0 && parts[k - 1] == parts[k] { min_idx } else { 0 };
        for (i, r) in list.iter().enumerate().skip(start) {
            rec(k + 1, parts, i, &acc * r, rhos, out);
        }
    }
    rec(0, mu.parts(), 0, SuperPoly::one(&setup.ring), &rhos, &mut out);
    Ok(out)
}

/// `dim F_{≤λ} − dim F_{<λ}` in `S_{|λ|}(V ⊗ U)`.
pub fn filtration_dim(lambda: &Partition, setup: &GenericSetup) -> Result<usize> {
    let t = lambda.size();
    if t > FILTRATION_DEGREE_CAP {
        return Err(Error::DegreeCap(format!("|λ| = {t} exceeds {FILTRATION_DEGREE_CAP}")));
    }
    let piece = GradedPiece::new(&setup.ring, t);
    let mut cache = RhoCache::new(setup);
    let mut below = SpanBasis::new();
    let mut upto = SpanBasis::new();
    for mu in partitions_of(t, None, None) {
        let ord = filtration_order(&mu, lambda);
        if ord == std::cmp::Ordering::Greater {
            continue;
        }
        for f in filtration_piece(&mu, setup, &mut cache)? {
            let v = piece.coords(&f);
            upto.insert(&v);
            if ord == std::cmp::Ordering::Less {
                below.insert(&v);
            }
        }
    }
    Ok(upto.dim() - below.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn z_examples() {
        let s = GenericSetup::new(1, 1, 2, 0, 0).unwrap();
        assert_eq!(corollary2_z(&s).unwrap(), SuperPoly::parse(&s.ring, "x_1_1*b_1_1*b_1_2").unwrap());
        let s = GenericSetup::new(0, 2, 2, 0, 0).unwrap();
        assert_eq!(corollary2_z(&s).unwrap(), SuperPoly::parse(&s.ring, "b_1_1*b_2_1").unwrap());
        let s = GenericSetup::new(1, 1, 1, 1, 0).unwrap();
        let z = corollary2_z(&s).unwrap();
        assert_eq!(z.degree(), Some(3));
        let s = GenericSetup::new(2, 1, 1, 0, 0).unwrap();
        assert!(corollary2_z(&s).is_err());
        // equal dimensions with e = 2: det Y, not y_1_1*y_2_2
        let s = GenericSetup::new(0, 2, 0, 2, 0).unwrap();
        let z = corollary2_z(&s).unwrap();
        assert_eq!(z.monic(), SuperPoly::parse(&s.ring, "y_1_1*y_2_2 - y_1_2*y_2_1").unwrap().monic());
        let s = GenericSetup::new(0, 2, 0, 3, 0).unwrap();
        assert_eq!(corollary2_z(&s).unwrap(), SuperPoly::parse(&s.ring, "y_1_1*y_2_2 - y_1_2*y_2_1").unwrap());
    }

    #[test]
    fn classical_ideal_of_minors() {
        let s = GenericSetup::new(2, 0, 3, 0, 0).unwrap();
        let span = lambda_span(&p(&[2]), &s).unwrap();
        assert_eq!(span.len(), 3);
        assert!(lambda_span(&p(&[3]), &s).unwrap().is_empty());
    }

    #[test]
    fn filtration_examples() {
        let s = GenericSetup::new(1, 1, 1, 1, 0).unwrap();
        assert_eq!(filtration_dim(&p(&[1]), &s).unwrap(), 4);
        assert_eq!(filtration_dim(&p(&[2]), &s).unwrap(), 4);
        assert_eq!(filtration_dim(&p(&[1, 1]), &s).unwrap(), 4);
        assert!(filtration_dim(&p(&[6]), &s).is_err());
    }
}
