use std::sync::{Arc, OnceLock};

use super::engine::{GbOptions, ModuleContext, Term, Vector};
use crate::error::{Error, Result};
use crate::linalg::{ideal_piece, GradedPiece, SpanBasis};
use crate::superpoly::{Ring, SuperMonomial, SuperPoly, TermOrder, Var};

pub(crate) fn poly_to_vector(ctx: &ModuleContext, f: &SuperPoly, pos: u32) -> Vector {
    ctx.normalize(f.terms().iter().map(|(m, c)| Term { pos, mono: m.clone(), coeff: c.clone() }).collect())
}

pub(crate) fn vector_component(ring: &Ring, v: &[Term], pos: u32) -> SuperPoly {
    SuperPoly::from_terms(ring, v.iter().filter(|t| t.pos == pos).map(|t| (t.mono.clone(), t.coeff.clone())).collect())
}

/// A reduced Gröbner basis of an ideal: monic, interreduced, sorted by
/// decreasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: TermOrder,
    ctx: ModuleContext,
    vectors: Vec<Vector>,
    generators: Vec<SuperPoly>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[SuperPoly] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn leading_monomials(&self) -> Vec<SuperMonomial> {
        self.vectors.iter().map(|v| v[0].mono.clone()).collect()
    }

    pub fn normal_form(&self, f: &SuperPoly) -> Result<SuperPoly> {
        if !crate::superpoly::ring::same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let v = poly_to_vector(&self.ctx, f, 0);
        Ok(vector_component(&self.ring, &self.ctx.normal_form(&v, &self.vectors), 0))
    }

    pub fn reduces_to_zero(&self, f: &SuperPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        self.vectors.iter().any(|v| v[0].mono.is_one())
    }

    /// Dimension of `I_t`, read off from the leading monomials (graded ideals
    /// with a degree-compatible order only).
    pub fn dim_in_degree(&self, t: u32) -> usize {
        let piece = GradedPiece::new(&self.ring, t);
        let leads = self.leading_monomials();
        piece.monomials.iter().filter(|m| leads.iter().any(|l| l.divides(m))).count()
    }
}

/// Computes a reduced Gröbner basis. Generators must be Z/2-homogeneous.
pub fn buchberger(ring: &Ring, gens: &[SuperPoly], order: TermOrder) -> Result<GroebnerBasis> {
    let ctx = ModuleContext::ideal(ring, order.clone());
    let inputs: Vec<Vector> = gens
        .iter()
        .map(|g| {
            if !crate::superpoly::ring::same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            Ok(poly_to_vector(&ctx, g, 0))
        })
        .collect::<Result<_>>()?;
    let out = ctx.groebner(&inputs, &GbOptions::default())?;
    let generators = out.basis.iter().map(|v| vector_component(ring, v, 0)).collect();
    Ok(GroebnerBasis { ring: ring.clone(), order, ctx, vectors: out.basis, generators })
}

/// A two-sided ideal given by Z/2-homogeneous generators. The Gröbner basis
/// (degrevlex) is computed on first use and cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<SuperPoly>,
    gb: Arc<OnceLock<GroebnerBasis>>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<SuperPoly>) -> Result<Self> {
        for g in &generators {
            if !crate::superpoly::ring::same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if !g.is_parity_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, gb: Arc::new(OnceLock::new()) })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), gb: Arc::new(OnceLock::new()) }
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, vec![SuperPoly::one(ring)]).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[SuperPoly] {
        &self.generators
    }

    pub fn is_graded(&self) -> bool {
        self.generators.iter().all(|g| g.is_graded())
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            buchberger(&self.ring, &self.generators, TermOrder::DegRevLex).expect("generators were validated")
        })
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn contains(&self, f: &SuperPoly) -> Result<bool> {
        self.gb().reduces_to_zero(f)
    }

    pub fn normal_form(&self, f: &SuperPoly) -> Result<SuperPoly> {
        self.gb().normal_form(f)
    }

    /// `J ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        if !crate::superpoly::ring::same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.checked_mul(g)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `self ∩ (subring on the variables not listed)`, via a block order with
    /// the listed variables first.
    pub fn eliminate(&self, vars: &[Var]) -> Result<Ideal> {
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let mut even = vec![false; self.ring.n_even()];
        let mut odd = 0u64;
        for v in vars {
            match *v {
                Var::Even(i) if i < even.len() => even[i] = true,
                Var::Odd(j) if j < self.ring.n_odd() => odd |= 1 << j,
                _ => return Err(Error::UnknownVariable(format!("{v:?}"))),
            }
        }
        let order = TermOrder::Elimination { even, odd };
        let gb = buchberger(&self.ring, &self.generators, order.clone())?;
        let kept = gb.vectors.iter().filter(|v| !v.iter().any(|t| order.touches_block(&t.mono)));
        let gens = kept.map(|v| vector_component(&self.ring, v, 0)).collect();
        Ideal::new(&self.ring, gens)
    }

    /// `self ∩ other`, eliminating an even tag `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !crate::superpoly::ring::same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let big = self.ring.with_extra_even("t", 1)?;
        let t = SuperPoly::var(&big, Var::Even(0));
        let one_minus_t = &SuperPoly::one(&big) - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.rename_into(&big)?);
        }
        for h in &other.generators {
            gens.push(&one_minus_t * &h.rename_into(&big)?);
        }
        let elim = Ideal::new(&big, gens)?.eliminate(&[Var::Even(0)])?;
        let mut out = Vec::new();
        for g in elim.generators() {
            let back = g.rename_into(&self.ring)?;
            // the intersection of graded ideals is graded
            match back.degree() {
                Some(_) => out.push(back),
                None => {
                    for d in 0..=back.max_degree().unwrap_or(0) {
                        let c = back.component(d);
                        if !c.is_zero() {
                            out.push(c);
                        }
                    }
                }
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// `{g : g·f ∈ I}`, from the syzygies of `(f, g_1, ..., g_r)`.
    pub fn colon(&self, f: &SuperPoly) -> Result<Ideal> {
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let parity = f.parity().ok_or_else(|| Error::Inhomogeneous(f.to_string()))?;
        let twist = f.max_degree().unwrap_or(0) as i32;
        let ctx = ModuleContext::new(&self.ring, TermOrder::DegRevLex, vec![0, twist], vec![0, parity]);
        let mut inputs = Vec::with_capacity(self.generators.len() + 1);
        let mut first = poly_to_vector(&ctx, f, 0);
        first.push(Term { pos: 1, mono: SuperMonomial::one(self.ring.n_even()), coeff: self.ring.scalar(1) });
        inputs.push(first);
        for g in &self.generators {
            inputs.push(poly_to_vector(&ctx, g, 0));
        }
        let out = ctx.groebner(&inputs, &GbOptions::default())?;
        let gens = out.basis.iter().filter(|v| v[0].pos == 1).map(|v| vector_component(&self.ring, v, 1)).collect();
        Ideal::new(&self.ring, gens)
    }

    /// A minimal homogeneous generating set by graded Nakayama: in each degree
    /// keep the generators that are not in `R_1 · I_{δ-1}` plus the ones
    /// already chosen. Exact linear algebra over the coefficient field.
    pub fn minimal_generators(&self) -> Result<Vec<SuperPoly>> {
        if !self.is_graded() {
            return Err(Error::NotGraded("minimal generators need a graded ideal".into()));
        }
        let mut gens = self.generators.clone();
        gens.sort_by_key(|g| g.degree().unwrap());
        let Some(top) = gens.last().and_then(|g| g.degree()) else { return Ok(Vec::new()) };
        let lo = gens[0].degree().unwrap();
        let mut chosen = Vec::new();
        let mut prev: Option<(GradedPiece, SpanBasis)> = None;
        for delta in lo..=top {
            let piece = GradedPiece::new(&self.ring, delta);
            let mut span = SpanBasis::new();
            if let Some((ppiece, pspan)) = &prev {
                let one = self.ring.scalar(1);
                let vars: Vec<SuperMonomial> = GradedPiece::new(&self.ring, 1).monomials;
                for row in pspan.rows() {
                    let b = ppiece.poly(&self.ring, row);
                    for v in &vars {
                        let p = b.mul_monomial_left(v, &one);
                        if !p.is_zero() {
                            span.insert(&piece.coords(&p));
                        }
                    }
                }
            }
            for g in gens.iter().filter(|g| g.degree() == Some(delta)) {
                if span.insert(&piece.coords(g)) {
                    chosen.push(g.clone());
                }
            }
            prev = Some((piece, span));
        }
        Ok(chosen)
    }

    /// Minimal generators read off from the Gröbner engine: inputs that do not
    /// reduce to zero when introduced degree by degree.
    pub fn minimal_generators_gb(&self) -> Result<Vec<SuperPoly>> {
        if !self.is_graded() {
            return Err(Error::NotGraded("minimal generators need a graded ideal".into()));
        }
        let ctx = ModuleContext::ideal(&self.ring, TermOrder::DegRevLex);
        let inputs: Vec<Vector> = self.generators.iter().map(|g| poly_to_vector(&ctx, g, 0)).collect();
        let out = ctx.groebner(&inputs, &GbOptions { skip_interreduce: true, ..Default::default() })?;
        Ok(out.kept.iter().map(|&i| self.generators[i].clone()).collect())
    }

    /// `dim_K I_t` by brute-force linear algebra.
    pub fn dim_in_degree_oracle(&self, t: u32) -> usize {
        let piece = GradedPiece::new(&self.ring, t);
        ideal_piece(&self.ring, &self.generators, t, &piece).dim()
    }
}
