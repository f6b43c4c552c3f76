//! Graded free modules over a super-commutative ring, homogeneous matrices
//! between them, and the module computations built on the Gröbner engine:
//! submodule membership, syzygies, cokernel annihilators, minimalization.
//!
//! Modules are left modules; a matrix acts on column vectors, so the image
//! is the left span of its columns.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::ideal::vector_component;
use crate::groebner::{GbOptions, Ideal, ModuleContext, Term, Vector};
use crate::linalg::{left_kernel, GradedPiece, SparseVec, SpanBasis};
use crate::superpoly::ring::same_ring;
use crate::superpoly::{Ring, RingSpec, SuperMonomial, SuperPoly, TermOrder};

/// `R^a ⊕ R^b(1)` with per-basis-element internal degrees. Even basis
/// elements come first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedFreeModule {
    pub rank_even: usize,
    pub rank_odd: usize,
    pub twists: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(rank_even: usize, rank_odd: usize, twists: Vec<i32>) -> Result<Self> {
        if twists.len() != rank_even + rank_odd {
            return Err(Error::DimensionMismatch(format!(
                "{} twists for a module of rank {}",
                twists.len(),
                rank_even + rank_odd
            )));
        }
        Ok(GradedFreeModule { rank_even, rank_odd, twists })
    }

    /// All basis elements in the same internal degree.
    pub fn uniform(rank_even: usize, rank_odd: usize, twist: i32) -> Self {
        GradedFreeModule { rank_even, rank_odd, twists: vec![twist; rank_even + rank_odd] }
    }

    pub fn rank(&self) -> usize {
        self.rank_even + self.rank_odd
    }

    pub fn parity(&self, i: usize) -> u8 {
        u8::from(i >= self.rank_even)
    }

    pub fn parities(&self) -> Vec<u8> {
        (0..self.rank()).map(|i| self.parity(i)).collect()
    }
}

/// A homogeneous map `source -> target`: `entries[i][j]` is the coefficient
/// of target basis element `i` in the image of source basis element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    pub ring: Ring,
    pub target: GradedFreeModule,
    pub source: GradedFreeModule,
    pub entries: Vec<Vec<SuperPoly>>,
}

/// A vector in a graded free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    pub coords: Vec<SuperPoly>,
}

impl ModuleElement {
    pub fn basis(ring: &Ring, rank: usize, k: usize) -> Self {
        let coords = (0..rank).map(|i| if i == k { SuperPoly::one(ring) } else { SuperPoly::zero(ring) }).collect();
        ModuleElement { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// `r * self`.
    pub fn scale(&self, r: &SuperPoly) -> Self {
        ModuleElement { coords: self.coords.iter().map(|c| r * c).collect() }
    }
}

fn element_to_vector(ctx: &ModuleContext, v: &ModuleElement) -> Vector {
    let mut terms = Vec::new();
    for (p, c) in v.coords.iter().enumerate() {
        terms.extend(c.terms().iter().map(|(m, a)| Term { pos: p as u32, mono: m.clone(), coeff: a.clone() }));
    }
    ctx.normalize(terms)
}

fn vector_to_element(ring: &Ring, v: &[Term], rank: usize, offset: u32) -> ModuleElement {
    ModuleElement { coords: (0..rank).map(|p| vector_component(ring, v, p as u32 + offset)).collect() }
}

impl GradedMatrix {
    /// Builds and validates a homogeneous matrix.
    pub fn new(
        ring: &Ring,
        target: GradedFreeModule,
        source: GradedFreeModule,
        entries: Vec<Vec<SuperPoly>>,
    ) -> Result<Self> {
        if entries.len() != target.rank() || entries.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::DimensionMismatch("entry table does not match the module ranks".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, f) in row.iter().enumerate() {
                if !same_ring(f.ring(), ring) {
                    return Err(Error::RingMismatch);
                }
                if f.is_zero() {
                    continue;
                }
                let want_parity = (source.parity(j) + target.parity(i)) & 1;
                if f.parity() != Some(want_parity) {
                    return Err(Error::Inhomogeneous(format!("entry ({i},{j}) = {f} should have parity {want_parity}")));
                }
                let want_deg = source.twists[j] - target.twists[i];
                if f.degree().map(|d| d as i32) != Some(want_deg) {
                    return Err(Error::NotGraded(format!("entry ({i},{j}) = {f} should have degree {want_deg}")));
                }
            }
        }
        Ok(GradedMatrix { ring: ring.clone(), target, source, entries })
    }

    pub fn identity(ring: &Ring, module: &GradedFreeModule) -> Self {
        let n = module.rank();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { SuperPoly::one(ring) } else { SuperPoly::zero(ring) }).collect())
            .collect();
        GradedMatrix { ring: ring.clone(), target: module.clone(), source: module.clone(), entries }
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn column(&self, j: usize) -> ModuleElement {
        ModuleElement { coords: self.entries.iter().map(|r| r[j].clone()).collect() }
    }

    pub fn columns(&self) -> Vec<ModuleElement> {
        (0..self.cols()).map(|j| self.column(j)).collect()
    }

    /// `self ∘ other`, where `other.target == self.source`.
    pub fn compose(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.cols() != other.rows() {
            return Err(Error::DimensionMismatch("inner ranks differ".into()));
        }
        let mut entries = vec![vec![SuperPoly::zero(&self.ring); other.cols()]; self.rows()];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = SuperPoly::zero(&self.ring);
                for k in 0..self.cols() {
                    // image of eps_j is sum_k other[k][j] f_k, and f_k maps to sum_i self[i][k] e_i
                    acc = &acc + &(&other.entries[k][j] * &self.entries[i][k]);
                }
                *slot = acc;
            }
        }
        Ok(GradedMatrix { ring: self.ring.clone(), target: self.target.clone(), source: other.source.clone(), entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|f| f.is_zero())
    }

    /// True when no entry has a nonzero constant term.
    pub fn is_minimal(&self) -> bool {
        self.entries.iter().flatten().all(|f| f.constant_term().is_zero())
    }

    /// Gröbner basis of the image.
    pub fn image_gb(&self) -> Result<SubmoduleGb> {
        SubmoduleGb::new(&self.ring, &self.target, &self.columns())
    }

    /// Generators of the kernel, as the columns of a matrix into `self.source`.
    /// With a degree limit only syzygies of internal degree `<= limit` are
    /// guaranteed; the flag reports whether the computation finished.
    pub fn syzygies_truncated(&self, degree_limit: Option<i32>) -> Result<(GradedMatrix, bool)> {
        let r = self.rows();
        let c = self.cols();
        let mut twists = self.target.twists.clone();
        twists.extend(self.source.twists.iter().copied());
        let mut parities = self.target.parities();
        parities.extend(self.source.parities());
        let ctx = ModuleContext::new(&self.ring, TermOrder::DegRevLex, twists, parities);
        let one = self.ring.scalar(1);
        let n_even = self.ring.n_even();
        let mut inputs = Vec::with_capacity(c);
        for j in 0..c {
            let mut terms: Vec<Term> = Vec::new();
            for i in 0..r {
                let f = &self.entries[i][j];
                terms.extend(f.terms().iter().map(|(m, a)| Term { pos: i as u32, mono: m.clone(), coeff: a.clone() }));
            }
            terms.push(Term { pos: (r + j) as u32, mono: SuperMonomial::one(n_even), coeff: one.clone() });
            inputs.push(ctx.normalize(terms));
        }
        let out = ctx.groebner(&inputs, &GbOptions { degree_limit, ..Default::default() })?;
        let syz: Vec<(ModuleElement, i32, u8)> = out
            .basis
            .iter()
            .filter(|v| v[0].pos as usize >= r)
            .map(|v| {
                let (deg, par) = ctx.homogeneity(v).expect("basis elements stay homogeneous");
                (vector_to_element(&self.ring, v, c, r as u32), deg.unwrap_or(0), par)
            })
            .collect();
        Ok((self.kernel_matrix(syz)?, out.complete))
    }

    pub fn syzygies(&self) -> Result<GradedMatrix> {
        Ok(self.syzygies_truncated(None)?.0)
    }

    /// Packs homogeneous elements of `self.source` into a matrix, even ones first.
    pub(crate) fn kernel_matrix(&self, mut gens: Vec<(ModuleElement, i32, u8)>) -> Result<GradedMatrix> {
        gens.sort_by_key(|(_, d, p)| (*p, *d));
        let rank_even = gens.iter().filter(|g| g.2 == 0).count();
        let source = GradedFreeModule::new(rank_even, gens.len() - rank_even, gens.iter().map(|g| g.1).collect())?;
        let entries =
            (0..self.cols()).map(|k| gens.iter().map(|(g, _, _)| g.coords[k].clone()).collect()).collect();
        GradedMatrix::new(&self.ring, self.source.clone(), source, entries)
    }

    /// `Ann(coker self)`, as the intersection over target basis elements of
    /// the colon ideals `(im self : e_k)`.
    pub fn annihilator(&self) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for k in 0..self.rows() {
            let colon = self.colon_basis_element(k)?;
            acc = Some(match acc {
                None => colon,
                Some(prev) => prev.intersect(&colon)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `{a : a * e_k ∈ im self}`.
    pub fn colon_basis_element(&self, k: usize) -> Result<Ideal> {
        let r = self.rows();
        let mut twists = self.target.twists.clone();
        twists.push(self.target.twists[k]);
        let mut parities = self.target.parities();
        parities.push(self.target.parity(k));
        let ctx = ModuleContext::new(&self.ring, TermOrder::DegRevLex, twists, parities);
        let n_even = self.ring.n_even();
        let one = self.ring.scalar(1);
        let mut inputs: Vec<Vector> = self.columns().iter().map(|col| element_to_vector(&ctx, col)).collect();
        inputs.push(vec![
            Term { pos: k as u32, mono: SuperMonomial::one(n_even), coeff: one.clone() },
            Term { pos: r as u32, mono: SuperMonomial::one(n_even), coeff: one },
        ]);
        let out = ctx.groebner(&inputs, &GbOptions::default())?;
        let gens = out.basis.iter().filter(|v| v[0].pos as usize == r).map(|v| vector_component(&self.ring, v, r as u32));
        Ideal::new(&self.ring, gens.collect())
    }

    /// Removes unit entries by column operations, dropping the pivot row and
    /// column each time; zero columns are dropped as well. The cokernel is
    /// unchanged up to isomorphism.
    pub fn minimalize(&self) -> GradedMatrix {
        let mut m = self.clone();
        loop {
            let pivot = (0..m.rows())
                .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| !m.entries[i][j].constant_term().is_zero() && m.entries[i][j].degree() == Some(0));
            let Some((i, j)) = pivot else { break };
            let c_inv = m.entries[i][j].constant_term().inv();
            let col_j = m.column(j);
            for jj in 0..m.cols() {
                if jj == j || m.entries[i][jj].is_zero() {
                    continue;
                }
                let s = m.entries[i][jj].scale(&c_inv);
                for l in 0..m.rows() {
                    let delta = &s * &col_j.coords[l];
                    m.entries[l][jj] = &m.entries[l][jj] - &delta;
                }
            }
            m = m.drop(&[i], &[j]);
        }
        let zero_cols: Vec<usize> = (0..m.cols()).filter(|&j| m.column(j).is_zero()).collect();
        m.drop(&[], &zero_cols)
    }

    fn drop(&self, rows: &[usize], cols: &[usize]) -> GradedMatrix {
        let keep_r: Vec<usize> = (0..self.rows()).filter(|i| !rows.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols()).filter(|j| !cols.contains(j)).collect();
        let sub = |m: &GradedFreeModule, keep: &[usize]| GradedFreeModule {
            rank_even: keep.iter().filter(|&&i| m.parity(i) == 0).count(),
            rank_odd: keep.iter().filter(|&&i| m.parity(i) == 1).count(),
            twists: keep.iter().map(|&i| m.twists[i]).collect(),
        };
        GradedMatrix {
            ring: self.ring.clone(),
            target: sub(&self.target, &keep_r),
            source: sub(&self.source, &keep_c),
            entries: keep_r.iter().map(|&i| keep_c.iter().map(|&j| self.entries[i][j].clone()).collect()).collect(),
        }
    }

    /// Brute-force `Ann(coker self)_t` for `t = 0..=max_degree`: kernel of
    /// `R_t -> ⊕_k F/N` in the relevant degrees. Returns (dimension, basis).
    pub fn annihilator_oracle(&self, max_degree: u32) -> Vec<(usize, Vec<SuperPoly>)> {
        let mut out = Vec::new();
        for t in 0..=max_degree {
            let piece = GradedPiece::new(&self.ring, t);
            let mut offset = 0usize;
            let mut rows: Vec<SparseVec> = vec![Vec::new(); piece.len()];
            for k in 0..self.rows() {
                let s = t as i32 + self.target.twists[k];
                let fp = ModulePiece::new(&self.ring, &self.target, s);
                let n = &fp.image_span(self);
                let one = self.ring.scalar(1);
                for (idx, m) in piece.monomials.iter().enumerate() {
                    let mut e = ModuleElement::basis(&self.ring, self.rows(), k);
                    e.coords[k] = SuperPoly::monomial(&self.ring, m.clone(), one.clone());
                    let red = n.reduce(&fp.coords(&e));
                    rows[idx].extend(red.iter().map(|(c, a)| (c + offset, a.clone())));
                }
                offset += fp.len();
            }
            let ker = left_kernel(&rows, offset, self.ring.characteristic);
            let basis: Vec<SuperPoly> = ker.iter().map(|v| piece.poly(&self.ring, v)).collect();
            out.push((basis.len(), basis));
        }
        out
    }

    /// `dim_K (coker self)_s` by linear algebra.
    pub fn cokernel_dim(&self, s: i32) -> usize {
        let fp = ModulePiece::new(&self.ring, &self.target, s);
        fp.len() - fp.image_span(self).dim()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            ring: Some((*self.ring).clone()),
            target: self.target.clone(),
            source: self.source.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(|f| f.to_string()).collect()).collect(),
        }
    }

    /// Parses the JSON form; `ring` overrides (or supplies) the embedded ring.
    pub fn from_json(json: &MatrixJson, ring: Option<&Ring>) -> Result<GradedMatrix> {
        let ring = match (ring, &json.ring) {
            (Some(r), _) => r.clone(),
            (None, Some(spec)) => RingSpec::new(spec.even_vars.clone(), spec.odd_vars.clone(), spec.characteristic)?,
            (None, None) => return Err(Error::Json("matrix without a ring".into())),
        };
        let entries = json
            .entries
            .iter()
            .map(|row| row.iter().map(|s| SuperPoly::parse(&ring, s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GradedMatrix::new(&ring, json.target.clone(), json.source.clone(), entries)
    }

    /// Applies a ring map (given by images of the variables) entrywise.
    pub fn substitute(&self, target_ring: &Ring, evens: &[SuperPoly], odds: &[SuperPoly]) -> Result<GradedMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|f| f.substitute(target_ring, evens, odds)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedMatrix { ring: target_ring.clone(), target: self.target.clone(), source: self.source.clone(), entries })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSpec>,
    pub target: GradedFreeModule,
    pub source: GradedFreeModule,
    pub entries: Vec<Vec<String>>,
}

/// Coordinates on the degree-`s` piece of a graded free module.
pub struct ModulePiece {
    pieces: Vec<Option<GradedPiece>>,
    offsets: Vec<usize>,
    total: usize,
    degree: i32,
}

impl ModulePiece {
    pub fn new(ring: &Ring, module: &GradedFreeModule, s: i32) -> Self {
        let mut pieces = Vec::new();
        let mut offsets = Vec::new();
        let mut total = 0;
        for &tw in &module.twists {
            offsets.push(total);
            let d = s - tw;
            if d >= 0 {
                let p = GradedPiece::new(ring, d as u32);
                total += p.len();
                pieces.push(Some(p));
            } else {
                pieces.push(None);
            }
        }
        ModulePiece { pieces, offsets, total, degree: s }
    }

    pub fn len(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn coords(&self, v: &ModuleElement) -> SparseVec {
        let mut out = Vec::new();
        for (p, c) in v.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let piece = self.pieces[p].as_ref().expect("element has a term below the module's twist");
            for (i, a) in piece.coords(c) {
                out.push((i + self.offsets[p], a));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn element(&self, ring: &Ring, v: &SparseVec) -> ModuleElement {
        let mut coords = vec![Vec::new(); self.pieces.len()];
        for (i, a) in v {
            // the last block starting at or before i is never empty
            let p = self.offsets.partition_point(|&o| o <= *i) - 1;
            coords[p].push((i - self.offsets[p], a.clone()));
        }
        ModuleElement {
            coords: coords
                .iter()
                .enumerate()
                .map(|(p, c)| match &self.pieces[p] {
                    Some(piece) => piece.poly(ring, c),
                    None => SuperPoly::zero(ring),
                })
                .collect(),
        }
    }

    /// Span of `(im φ)_s` for a matrix with this target.
    pub fn image_span(&self, phi: &GradedMatrix) -> SpanBasis {
        let mut span = SpanBasis::new();
        let one = phi.ring.scalar(1);
        for j in 0..phi.cols() {
            let d = self.degree - phi.source.twists[j];
            if d < 0 {
                continue;
            }
            let col = phi.column(j);
            if col.is_zero() {
                continue;
            }
            for m in &GradedPiece::new(&phi.ring, d as u32).monomials {
                let v = ModuleElement { coords: col.coords.iter().map(|c| c.mul_monomial_left(m, &one)).collect() };
                if !v.is_zero() {
                    span.insert(&self.coords(&v));
                }
            }
        }
        span
    }
}

/// A Gröbner basis of a submodule of a graded free module.
#[derive(Clone, Debug)]
pub struct SubmoduleGb {
    ring: Ring,
    rank: usize,
    ctx: ModuleContext,
    basis: Vec<Vector>,
    kept: Vec<usize>,
}

impl SubmoduleGb {
    pub fn new(ring: &Ring, module: &GradedFreeModule, gens: &[ModuleElement]) -> Result<Self> {
        Self::with_options(ring, module, gens, &GbOptions::default())
    }

    pub fn with_options(ring: &Ring, module: &GradedFreeModule, gens: &[ModuleElement], opts: &GbOptions) -> Result<Self> {
        let ctx = ModuleContext::new(ring, TermOrder::DegRevLex, module.twists.clone(), module.parities());
        let inputs: Vec<Vector> = gens
            .iter()
            .map(|g| {
                if g.coords.len() != module.rank() {
                    return Err(Error::DimensionMismatch("element of the wrong rank".into()));
                }
                Ok(element_to_vector(&ctx, g))
            })
            .collect::<Result<_>>()?;
        let out = ctx.groebner(&inputs, opts)?;
        Ok(SubmoduleGb { ring: ring.clone(), rank: module.rank(), ctx, basis: out.basis, kept: out.kept })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn elements(&self) -> Vec<ModuleElement> {
        self.basis.iter().map(|v| vector_to_element(&self.ring, v, self.rank, 0)).collect()
    }

    /// Indices of the input generators that survived (a minimal generating
    /// set for graded input).
    pub fn kept_inputs(&self) -> &[usize] {
        &self.kept
    }

    pub fn normal_form(&self, v: &ModuleElement) -> ModuleElement {
        let h = element_to_vector(&self.ctx, v);
        vector_to_element(&self.ring, &self.ctx.normal_form(&h, &self.basis), self.rank, 0)
    }

    pub fn contains(&self, v: &ModuleElement) -> bool {
        self.normal_form(v).is_zero()
    }
}

/// Convenience: an ideal's generators as a 1×k matrix `R^k -> R`.
pub fn row_matrix(ring: &Ring, gens: &[SuperPoly]) -> Result<GradedMatrix> {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let d = g.degree().ok_or_else(|| Error::NotGraded(g.to_string()))? as i32;
        match g.parity() {
            Some(0) => even.push((g.clone(), d)),
            Some(_) => odd.push((g.clone(), d)),
            None => return Err(Error::Inhomogeneous(g.to_string())),
        }
    }
    let source = GradedFreeModule::new(even.len(), odd.len(), even.iter().chain(odd.iter()).map(|g| g.1).collect())?;
    let entries = vec![even.iter().chain(odd.iter()).map(|g| g.0.clone()).collect()];
    GradedMatrix::new(ring, GradedFreeModule::uniform(1, 0, 0), source, entries)
}
