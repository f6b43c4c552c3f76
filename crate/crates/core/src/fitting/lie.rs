//! The action of `gl(V) × gl(U)` on the generic ring by superderivations.
//!
//! `E_{p,q}` sends basis vector `q` to basis vector `p` on its side. On a
//! variable `v_c ⊗ u_r` it replaces the V factor (V side) or the U factor
//! (U side), without a sign. It is extended to monomials written in
//! canonical order (even variables, then odd variables by index): the V side
//! acts from the left, picking up `(-1)^{|E||f|}` for the factors `f` to the
//! left of the one it replaces; the U side acts from the right, with the
//! factors to the right.

use serde::{Deserialize, Serialize};

use super::setup::GenericSetup;
use crate::error::{Error, Result};
use crate::linalg::{GradedPiece, SpanBasis};
use crate::superpoly::ring::same_ring;
use crate::superpoly::{FieldElem, SuperMonomial, SuperPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    V,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieGenerator {
    pub side: Side,
    pub p: usize,
    pub q: usize,
}

impl LieGenerator {
    pub fn new(side: Side, p: usize, q: usize, setup: &GenericSetup) -> Result<Self> {
        let dim = match side {
            Side::V => setup.v_dim(),
            Side::U => setup.u_dim(),
        };
        if p >= dim || q >= dim {
            return Err(Error::DimensionMismatch(format!("E_({p},{q}) on a side of dimension {dim}")));
        }
        Ok(LieGenerator { side, p, q })
    }

    pub fn parity(&self, setup: &GenericSetup) -> u8 {
        match self.side {
            Side::V => setup.v_parity(self.p) ^ setup.v_parity(self.q),
            Side::U => setup.u_parity(self.p) ^ setup.u_parity(self.q),
        }
    }

    /// Every elementary operator on both sides.
    pub fn all(setup: &GenericSetup) -> Vec<LieGenerator> {
        let mut out = Vec::new();
        for (side, dim) in [(Side::V, setup.v_dim()), (Side::U, setup.u_dim())] {
            for p in 0..dim {
                for q in 0..dim {
                    out.push(LieGenerator { side, p, q });
                }
            }
        }
        out
    }

    fn on_variable(&self, setup: &GenericSetup, v: Var) -> Option<Var> {
        let (c, r) = setup.position_of(v);
        match self.side {
            Side::V if c == self.q => Some(setup.var(self.p, r)),
            Side::U if r == self.q => Some(setup.var(c, self.p)),
            _ => None,
        }
    }
}

/// Precomputed images of every variable, so applying a generator to a large
/// polynomial does not search `Φ` repeatedly.
struct VariableImages {
    even: Vec<Option<Var>>,
    odd: Vec<Option<Var>>,
}

impl VariableImages {
    fn new(g: &LieGenerator, setup: &GenericSetup) -> Self {
        let ring = &setup.ring;
        VariableImages {
            even: (0..ring.n_even()).map(|i| g.on_variable(setup, Var::Even(i))).collect(),
            odd: (0..ring.n_odd()).map(|j| g.on_variable(setup, Var::Odd(j))).collect(),
        }
    }
}

fn monomial_of(n_even: usize, v: Var) -> SuperMonomial {
    match v {
        Var::Even(i) => SuperMonomial::even_var(n_even, i),
        Var::Odd(j) => SuperMonomial::odd_var(n_even, j),
    }
}

fn apply_to_monomial(
    g: &LieGenerator,
    parity: u8,
    images: &VariableImages,
    n_even: usize,
    m: &SuperMonomial,
    c: &FieldElem,
    out: &mut Vec<(SuperMonomial, FieldElem)>,
) {
    let odd = m.odd_set();
    let n_odd_factors = odd.len();
    let mut push = |prefix: SuperMonomial, w: Var, suffix: SuperMonomial, coeff: FieldElem, neg: bool| {
        let Some((s1, p)) = prefix.mul(&monomial_of(n_even, w)) else { return };
        let Some((s2, p)) = p.mul(&suffix) else { return };
        out.push((p, coeff.negate_sign(neg ^ s1 ^ s2)));
    };
    for (i, &e) in m.even_exp().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let Some(w) = images.even[i] else { continue };
        let mut rest = m.even_exp().to_vec();
        rest[i] -= 1;
        let neg = match g.side {
            Side::V => false,
            Side::U => parity == 1 && n_odd_factors % 2 == 1,
        };
        let coeff = c * &FieldElem::from_int(e as i64, c.characteristic());
        push(SuperMonomial::from_parts(&rest, 0), w, SuperMonomial::from_parts(&vec![0; n_even], m.odd_mask()), coeff, neg);
    }
    for (k, &j) in odd.iter().enumerate() {
        let Some(w) = images.odd[j] else { continue };
        let before: u64 = odd[..k].iter().map(|&x| 1u64 << x).sum();
        let after: u64 = odd[k + 1..].iter().map(|&x| 1u64 << x).sum();
        let neg = parity == 1
            && match g.side {
                Side::V => k % 2 == 1,
                Side::U => (n_odd_factors - k - 1) % 2 == 1,
            };
        push(
            SuperMonomial::from_parts(m.even_exp(), before),
            w,
            SuperMonomial::from_parts(&vec![0; n_even], after),
            c.clone(),
            neg,
        );
    }
}

/// Applies a generator to a polynomial of the setup ring.
pub fn lie_apply(g: &LieGenerator, f: &SuperPoly, setup: &GenericSetup) -> Result<SuperPoly> {
    if !same_ring(f.ring(), &setup.ring) {
        return Err(Error::RingMismatch);
    }
    let images = VariableImages::new(g, setup);
    let parity = g.parity(setup);
    let n_even = setup.ring.n_even();
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        apply_to_monomial(g, parity, &images, n_even, m, c, &mut terms);
    }
    Ok(SuperPoly::from_terms(&setup.ring, terms))
}

/// A K-basis of the smallest subspace containing `seeds` and stable under
/// every generator. Seeds must be homogeneous of one common degree.
pub fn lie_closure(seeds: &[SuperPoly], setup: &GenericSetup) -> Result<Vec<SuperPoly>> {
    let seeds: Vec<&SuperPoly> = seeds.iter().filter(|f| !f.is_zero()).collect();
    let Some(first) = seeds.first() else { return Ok(Vec::new()) };
    let t = first.degree().ok_or_else(|| Error::NotGraded(first.to_string()))?;
    if seeds.iter().any(|f| f.degree() != Some(t)) {
        return Err(Error::NotGraded("seeds of different degrees".into()));
    }
    let gens: Vec<(LieGenerator, u8, VariableImages)> = LieGenerator::all(setup)
        .into_iter()
        .map(|g| {
            let par = g.parity(setup);
            let img = VariableImages::new(&g, setup);
            (g, par, img)
        })
        .collect();
    let piece = GradedPiece::new(&setup.ring, t);
    let mut span = SpanBasis::new();
    let mut basis = Vec::new();
    let mut queue = Vec::new();
    for f in seeds {
        if span.insert(&piece.coords(f)) {
            basis.push(f.clone());
            queue.push(f.clone());
        }
    }
    let n_even = setup.ring.n_even();
    while let Some(f) = queue.pop() {
        for (g, par, images) in &gens {
            let mut terms = Vec::new();
            for (m, c) in f.terms() {
                apply_to_monomial(g, *par, images, n_even, m, c, &mut terms);
            }
            let h = SuperPoly::from_terms(&setup.ring, terms);
            if h.is_zero() {
                continue;
            }
            if span.insert(&piece.coords(&h)) {
                basis.push(h.clone());
                queue.push(h);
            }
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex3() -> GenericSetup {
        GenericSetup::new(1, 1, 1, 1, 0).unwrap()
    }

    fn poly(s: &GenericSetup, text: &str) -> SuperPoly {
        let text = text.replace('x', "x_1_1").replace('y', "y_1_1").replace('a', "a_1_1").replace('b', "b_1_1");
        SuperPoly::parse(&s.ring, &text).unwrap()
    }

    #[test]
    fn appendix_values() {
        let s = ex3();
        let axy = poly(&s, "a*x*y");
        let v01 = LieGenerator::new(Side::V, 0, 1, &s).unwrap();
        let u10 = LieGenerator::new(Side::U, 1, 0, &s).unwrap();
        assert_eq!(lie_apply(&v01, &axy, &s).unwrap(), poly(&s, "x*(x*y - a*b)"));
        assert_eq!(lie_apply(&u10, &axy, &s).unwrap(), poly(&s, "(x*y + a*b)*y"));
    }

    #[test]
    fn constants_are_killed() {
        let s = ex3();
        for g in LieGenerator::all(&s) {
            assert!(lie_apply(&g, &SuperPoly::one(&s.ring), &s).unwrap().is_zero());
        }
    }

    #[test]
    fn diagonal_generators_count_degrees() {
        let s = ex3();
        let f = poly(&s, "x^2*a");
        let g = LieGenerator::new(Side::V, 0, 0, &s).unwrap();
        assert_eq!(lie_apply(&g, &f, &s).unwrap(), poly(&s, "2*x^2*a"));
    }

    #[test]
    fn closure_of_a_minor() {
        let s = GenericSetup::new(2, 0, 2, 0, 0).unwrap();
        let x = SuperPoly::parse(&s.ring, "x_1_1").unwrap();
        assert_eq!(lie_closure(&[x], &s).unwrap().len(), 4);
        let det = SuperPoly::parse(&s.ring, "x_1_1*x_2_2 - x_1_2*x_2_1").unwrap();
        assert_eq!(lie_closure(&[det], &s).unwrap().len(), 1);
    }
}
