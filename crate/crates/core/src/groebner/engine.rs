//! Buchberger's algorithm for submodules of graded free modules over a
//! super-commutative ring. Ideals are the rank-one case.
//!
//! Conventions: the module is a left module with basis `e_0, ..., e_{r-1}`;
//! a vector is a sorted list of terms `c * m * e_p`. Terms are compared
//! position first (smaller index is larger), then by the ring order.
//!
//! Completeness in the presence of odd variables needs, besides the usual
//! S-pairs, the products `v * g` for each odd variable `v` dividing the leading
//! monomial of `g` (there `v * lm(g) = 0`, so `v * g` has a new leading term).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::superpoly::{FieldElem, Ring, SuperMonomial, TermOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub pos: u32,
    pub mono: SuperMonomial,
    pub coeff: FieldElem,
}

/// A module element as a strictly decreasing list of terms.
pub type Vector = Vec<Term>;

/// The ambient free module: ring, order, and the degree/parity of each basis element.
#[derive(Clone, Debug)]
pub struct ModuleContext {
    pub ring: Ring,
    pub order: TermOrder,
    pub twists: Vec<i32>,
    pub parities: Vec<u8>,
}

#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Stop after all work of degree `<= limit` is done (homogeneous input only).
    pub degree_limit: Option<i32>,
    /// Return the basis as computed instead of interreducing it.
    pub skip_interreduce: bool,
}

#[derive(Clone, Debug)]
pub struct GbOutput {
    pub basis: Vec<Vector>,
    /// Indices of inputs that did not reduce to zero when processed. For
    /// homogeneous input these form a minimal generating set.
    pub kept: Vec<usize>,
    /// False if a degree limit cut the computation short.
    pub complete: bool,
    pub homogeneous: bool,
}

fn even_support(m: &SuperMonomial) -> u64 {
    let mut s = 0u64;
    for (i, &e) in m.even_exp().iter().enumerate() {
        if e > 0 {
            s |= 1 << (i % 64);
        }
    }
    s
}

struct Lead {
    pos: u32,
    mono: SuperMonomial,
    sev: u64,
}

impl Lead {
    fn of(t: &Term) -> Self {
        Lead { pos: t.pos, mono: t.mono.clone(), sev: even_support(&t.mono) }
    }

    #[inline]
    fn divides(&self, t: &Term, sev: u64) -> bool {
        self.pos == t.pos && self.sev & !sev == 0 && self.mono.divides(&t.mono)
    }
}

#[derive(Clone, Debug)]
enum Pair {
    Spair(usize, usize),
    OddMultiple(usize, usize),
}

impl ModuleContext {
    pub fn new(ring: &Ring, order: TermOrder, twists: Vec<i32>, parities: Vec<u8>) -> Self {
        assert_eq!(twists.len(), parities.len());
        ModuleContext { ring: ring.clone(), order, twists, parities }
    }

    /// Rank-one context for computations with ideals.
    pub fn ideal(ring: &Ring, order: TermOrder) -> Self {
        Self::new(ring, order, vec![0], vec![0])
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    #[inline]
    pub fn cmp_term(&self, a: &Term, b: &Term) -> Ordering {
        match b.pos.cmp(&a.pos) {
            Ordering::Equal => self.order.compare(&a.mono, &b.mono),
            o => o,
        }
    }

    /// Sorts and merges an arbitrary term list into canonical form.
    pub fn normalize(&self, mut terms: Vec<Term>) -> Vector {
        terms.sort_by(|a, b| self.cmp_term(b, a));
        let mut out: Vector = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => {
                    last.coeff = &last.coeff + &t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        out.push(t)
                    }
                }
            }
        }
        out
    }

    pub fn term_degree(&self, t: &Term) -> i32 {
        t.mono.degree() as i32 + self.twists[t.pos as usize]
    }

    pub fn term_parity(&self, t: &Term) -> u8 {
        (t.mono.parity() + self.parities[t.pos as usize]) & 1
    }

    /// Checks Z/2-homogeneity; returns (degree if graded, parity).
    pub fn homogeneity(&self, v: &Vector) -> Result<(Option<i32>, u8)> {
        let Some(first) = v.first() else { return Ok((Some(0), 0)) };
        let p = self.term_parity(first);
        let d = self.term_degree(first);
        let mut graded = true;
        for t in v {
            if self.term_parity(t) != p {
                return Err(Error::Inhomogeneous("mixed parities in one element".into()));
            }
            graded &= self.term_degree(t) == d;
        }
        Ok((graded.then_some(d), p))
    }

    fn sugar(&self, v: &Vector) -> i32 {
        v.iter().map(|t| self.term_degree(t)).max().unwrap_or(0)
    }

    /// `c * m * v` for a monomial `m`; order is preserved, vanishing terms dropped.
    pub fn mul_monomial(&self, m: &SuperMonomial, c: &FieldElem, v: &[Term]) -> Vector {
        v.iter()
            .filter_map(|t| {
                m.mul(&t.mono).map(|(neg, p)| Term { pos: t.pos, mono: p, coeff: (c * &t.coeff).negate_sign(neg) })
            })
            .collect()
    }

    /// `a - b`, both canonical.
    pub fn sub(&self, a: &[Term], b: &[Term]) -> Vector {
        self.combine(a, b, true)
    }

    pub fn add(&self, a: &[Term], b: &[Term]) -> Vector {
        self.combine(a, b, false)
    }

    fn combine(&self, a: &[Term], b: &[Term], subtract: bool) -> Vector {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.cmp_term(&a[i], &b[j]) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let t = &b[j];
                    out.push(Term { pos: t.pos, mono: t.mono.clone(), coeff: t.coeff.negate_sign(subtract) });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { &a[i].coeff - &b[j].coeff } else { &a[i].coeff + &b[j].coeff };
                    if !c.is_zero() {
                        out.push(Term { pos: a[i].pos, mono: a[i].mono.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term { pos: t.pos, mono: t.mono.clone(), coeff: t.coeff.negate_sign(subtract) }));
        out
    }

    pub fn scale(&self, c: &FieldElem, v: &[Term]) -> Vector {
        if c.is_zero() {
            return Vec::new();
        }
        v.iter().map(|t| Term { pos: t.pos, mono: t.mono.clone(), coeff: &t.coeff * c }).collect()
    }

    pub fn monic(&self, v: Vector) -> Vector {
        match v.first() {
            Some(t) if !t.coeff.is_one() => {
                let inv = t.coeff.inv();
                self.scale(&inv, &v)
            }
            _ => v,
        }
    }

    /// One reduction step of term `h[k]` by `g` (monic): `h - c q g` where `q lm(g) = ±lm(h[k])`.
    fn eliminate_term(&self, h: &[Term], k: usize, g: &[Term]) -> Vector {
        let t = &h[k];
        let (neg, q) = g[0].mono.quotient(&t.mono);
        let c = t.coeff.negate_sign(neg);
        let qg = self.mul_monomial(&q, &c, g);
        let mut out: Vector = h[..k].to_vec();
        out.extend(self.sub(&h[k..], &qg));
        out
    }

    fn find_divisor(&self, leads: &[Lead], t: &Term) -> Option<usize> {
        let sev = even_support(&t.mono);
        leads.iter().position(|l| l.divides(t, sev))
    }

    /// Reduces until the leading term is not divisible by any basis lead.
    fn top_reduce(&self, mut h: Vector, basis: &[Vector], leads: &[Lead]) -> Vector {
        while let Some(t) = h.first() {
            match self.find_divisor(leads, t) {
                Some(i) => h = self.eliminate_term(&h, 0, &basis[i]),
                None => break,
            }
        }
        h
    }

    /// Full normal form against monic `basis`.
    pub fn normal_form(&self, h: &[Term], basis: &[Vector]) -> Vector {
        let leads: Vec<Lead> = basis.iter().filter(|g| !g.is_empty()).map(|g| Lead::of(&g[0])).collect();
        let live: Vec<&Vector> = basis.iter().filter(|g| !g.is_empty()).collect();
        let mut h = h.to_vec();
        let mut k = 0;
        while k < h.len() {
            match self.find_divisor(&leads, &h[k]) {
                Some(i) => h = self.eliminate_term(&h, k, live[i]),
                None => k += 1,
            }
        }
        h
    }

    fn spoly(&self, f: &[Term], g: &[Term]) -> Vector {
        let l = f[0].mono.lcm(&g[0].mono);
        let (nf, qf) = f[0].mono.quotient(&l);
        let (ng, qg) = g[0].mono.quotient(&l);
        let one = FieldElem::one(self.ring.characteristic);
        let a = self.mul_monomial(&qf, &one.negate_sign(nf), f);
        let b = self.mul_monomial(&qg, &one.negate_sign(ng), g);
        self.sub(&a, &b)
    }

    /// Buchberger with sugar-degree selection. Inputs are introduced in order of
    /// degree, after all pairs of the same degree, so that `kept` identifies a
    /// minimal generating set when everything is graded.
    pub fn groebner(&self, inputs: &[Vector], opts: &GbOptions) -> Result<GbOutput> {
        let mut homogeneous = true;
        let mut queue: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (idx, v) in inputs.iter().enumerate() {
            if v.is_empty() {
                continue;
            }
            let (deg, _) = self.homogeneity(v)?;
            homogeneous &= deg.is_some();
            queue.entry(self.sugar(v)).or_default().push(idx);
        }
        if opts.degree_limit.is_some() && !homogeneous {
            return Err(Error::NotGraded("degree-truncated computations need graded input".into()));
        }
        let n_even = self.ring.n_even();
        let mut basis: Vec<Vector> = Vec::new();
        let mut sugars: Vec<i32> = Vec::new();
        let mut leads: Vec<Lead> = Vec::new();
        let mut pairs: BTreeMap<i32, Vec<Pair>> = BTreeMap::new();
        let mut kept = Vec::new();
        let mut complete = true;

        let add_to_basis = |h: Vector,
                            s: i32,
                            basis: &mut Vec<Vector>,
                            sugars: &mut Vec<i32>,
                            leads: &mut Vec<Lead>,
                            pairs: &mut BTreeMap<i32, Vec<Pair>>| {
            let h = self.monic(h);
            let n = basis.len();
            let lh = &h[0];
            for (i, g) in basis.iter().enumerate() {
                let lg = &g[0];
                if lg.pos != lh.pos {
                    continue;
                }
                if self.rank() == 1 && lg.mono.is_purely_even() && lh.mono.is_purely_even() && lg.mono.is_coprime(&lh.mono)
                {
                    continue;
                }
                let l = lg.mono.lcm(&lh.mono);
                let sg = sugars[i] + (l.degree() - lg.mono.degree()) as i32;
                let shh = s + (l.degree() - lh.mono.degree()) as i32;
                pairs.entry(sg.max(shh)).or_default().push(Pair::Spair(i, n));
            }
            for j in lh.mono.odd_set() {
                pairs.entry(s + 1).or_default().push(Pair::OddMultiple(n, j));
            }
            leads.push(Lead::of(lh));
            sugars.push(s);
            basis.push(h);
        };

        loop {
            let next_pair = pairs.keys().next().copied();
            let next_input = queue.keys().next().copied();
            let deg = match (next_pair, next_input) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if let Some(lim) = opts.degree_limit {
                if deg > lim {
                    complete = false;
                    break;
                }
            }
            if next_pair == Some(deg) {
                let batch = pairs.remove(&deg).unwrap();
                for p in batch {
                    let (s, sugar) = match p {
                        Pair::Spair(i, j) => (self.spoly(&basis[i], &basis[j]), deg),
                        Pair::OddMultiple(i, j) => {
                            let v = SuperMonomial::odd_var(n_even, j);
                            (self.mul_monomial(&v, &FieldElem::one(self.ring.characteristic), &basis[i]), deg)
                        }
                    };
                    let h = self.top_reduce(s, &basis, &leads);
                    if !h.is_empty() {
                        add_to_basis(h, sugar, &mut basis, &mut sugars, &mut leads, &mut pairs);
                    }
                }
                continue;
            }
            let batch = queue.remove(&deg).unwrap();
            for idx in batch {
                let h = self.top_reduce(inputs[idx].clone(), &basis, &leads);
                if !h.is_empty() {
                    kept.push(idx);
                    add_to_basis(h, deg, &mut basis, &mut sugars, &mut leads, &mut pairs);
                }
            }
        }
        kept.sort_unstable();
        let basis = if opts.skip_interreduce { basis } else { self.interreduce(basis) };
        Ok(GbOutput { basis, kept, complete, homogeneous })
    }

    /// Removes redundant elements, tail-reduces, makes monic, and sorts by
    /// decreasing leading term.
    pub fn interreduce(&self, basis: Vec<Vector>) -> Vec<Vector> {
        let mut keep: Vec<Vector> = Vec::new();
        'outer: for (i, g) in basis.iter().enumerate() {
            if g.is_empty() {
                continue;
            }
            let sev = even_support(&g[0].mono);
            for (j, h) in basis.iter().enumerate() {
                if i == j || h.is_empty() {
                    continue;
                }
                let lh = Lead::of(&h[0]);
                if lh.divides(&g[0], sev) && (h[0].mono != g[0].mono || j < i) {
                    continue 'outer;
                }
            }
            keep.push(g.clone());
        }
        let mut out = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let g = &keep[i];
            let others: Vec<Vector> =
                keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
            let mut tail = self.normal_form(&g[1..], &others);
            let mut v = vec![g[0].clone()];
            v.append(&mut tail);
            out.push(self.monic(v));
        }
        out.sort_by(|a, b| self.cmp_term(&b[0], &a[0]));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpoly::{RingSpec, SuperPoly};

    fn vec_of(p: &SuperPoly) -> Vector {
        p.terms().iter().map(|(m, c)| Term { pos: 0, mono: m.clone(), coeff: c.clone() }).collect()
    }

    #[test]
    fn odd_multiples_are_needed() {
        // g = x*a + y*b has leading monomial x*a, and a*g = y*a*b is not
        // divisible by it; only the odd multiple puts y*a*b in the basis.
        let r = RingSpec::new(vec!["x".into(), "y".into()], vec!["a".into(), "b".into()], 0).unwrap();
        let g = SuperPoly::parse(&r, "x*a + y*b").unwrap();
        let ctx = ModuleContext::ideal(&r, TermOrder::DegRevLex);
        let out = ctx.groebner(&[vec_of(&g)], &GbOptions::default()).unwrap();
        let target = vec_of(&SuperPoly::parse(&r, "y*a*b").unwrap());
        assert!(ctx.normal_form(&target, &out.basis).is_empty());
    }

    #[test]
    fn already_a_basis() {
        let r = RingSpec::new(vec!["x".into(), "y".into()], vec![], 0).unwrap();
        let gens: Vec<Vector> =
            ["x^2", "x*y"].iter().map(|s| vec_of(&SuperPoly::parse(&r, s).unwrap())).collect();
        let ctx = ModuleContext::ideal(&r, TermOrder::DegRevLex);
        let out = ctx.groebner(&gens, &GbOptions::default()).unwrap();
        assert_eq!(out.basis.len(), 2);
        assert_eq!(out.kept, vec![0, 1]);
    }

    #[test]
    fn kept_inputs_are_minimal() {
        let r = RingSpec::new(vec!["x".into(), "y".into()], vec![], 0).unwrap();
        let gens: Vec<Vector> =
            ["x^2*y", "x", "y^2", "x*y + y^2"].iter().map(|s| vec_of(&SuperPoly::parse(&r, s).unwrap())).collect();
        let ctx = ModuleContext::ideal(&r, TermOrder::DegRevLex);
        let out = ctx.groebner(&gens, &GbOptions::default()).unwrap();
        assert_eq!(out.kept, vec![1, 2]);
    }
}
