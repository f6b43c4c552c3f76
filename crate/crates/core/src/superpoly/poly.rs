use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::FieldElem;
use super::monomial::{SuperMonomial, TermOrder};
use super::ring::{same_ring, Ring, Var};
use crate::error::{Error, Result};

/// A sparse polynomial in a super-commutative ring. Terms are kept sorted in
/// decreasing degrevlex order with no zero coefficients.
#[derive(Clone, Debug)]
pub struct SuperPoly {
    ring: Ring,
    terms: Vec<(SuperMonomial, FieldElem)>,
}

impl PartialEq for SuperPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for SuperPoly {}

impl std::hash::Hash for SuperPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl SuperPoly {
    pub fn zero(ring: &Ring) -> Self {
        SuperPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: FieldElem) -> Self {
        Self::from_terms(ring, vec![(SuperMonomial::one(ring.n_even()), c)])
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.scalar(1))
    }

    pub fn var(ring: &Ring, v: Var) -> Self {
        let m = match v {
            Var::Even(i) => SuperMonomial::even_var(ring.n_even(), i),
            Var::Odd(j) => SuperMonomial::odd_var(ring.n_even(), j),
        };
        SuperPoly { ring: ring.clone(), terms: vec![(m, ring.scalar(1))] }
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        ring.lookup(name).map(|v| Self::var(ring, v)).ok_or_else(|| Error::UnknownVariable(name.into()))
    }

    pub fn monomial(ring: &Ring, m: SuperMonomial, c: FieldElem) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Collects like terms, drops zeros, and sorts.
    pub fn from_terms(ring: &Ring, terms: Vec<(SuperMonomial, FieldElem)>) -> Self {
        let mut acc: HashMap<SuperMonomial, FieldElem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.even_exp().len(), ring.n_even(), "monomial does not fit the ring");
            assert_eq!(c.characteristic(), ring.characteristic, "scalar of the wrong characteristic");
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = TermOrder::DegRevLex;
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        SuperPoly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(SuperMonomial, FieldElem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(SuperMonomial, FieldElem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(SuperMonomial, FieldElem)> {
        self.terms.first()
    }

    /// Constant coefficient (zero if absent).
    pub fn constant_term(&self) -> FieldElem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.scalar(0),
        }
    }

    /// Common Z/2 parity of all terms, `None` if mixed. Zero counts as even.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.iter().map(|(m, _)| m.parity());
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_parity_homogeneous(&self) -> bool {
        self.parity().is_some()
    }

    /// Common total degree of all terms, `None` if mixed or zero.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_graded(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Leading coefficient scaled to 1.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        SuperPoly { ring: self.ring.clone(), terms }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let ord = TermOrder::DegRevLex;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let pick = if i == self.terms.len() {
                std::cmp::Ordering::Less
            } else if j == other.terms.len() {
                std::cmp::Ordering::Greater
            } else {
                ord.compare(&self.terms[i].0, &other.terms[j].0)
            };
            match pick {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), c.negate_sign(subtract)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if subtract {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SuperPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut acc: HashMap<SuperMonomial, FieldElem> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((neg, m)) = ma.mul(mb) {
                    let c = (ca * cb).negate_sign(neg);
                    match acc.get_mut(&m) {
                        Some(v) => *v = &*v + &c,
                        None => {
                            acc.insert(m, c);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = TermOrder::DegRevLex;
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        Ok(SuperPoly { ring: self.ring.clone(), terms })
    }

    /// `m * self`, with the Koszul sign absorbed.
    pub fn mul_monomial_left(&self, m: &SuperMonomial, c: &FieldElem) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(t, a)| m.mul(t).map(|(neg, p)| (p, (c * a).negate_sign(neg))))
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Homogeneous component of total degree `t`.
    pub fn component(&self, t: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == t).cloned().collect();
        SuperPoly { ring: self.ring.clone(), terms }
    }

    /// Applies the ring homomorphism sending the i-th even variable to
    /// `even_images[i]` and the j-th odd variable to `odd_images[j]`.
    /// Images must be parity-homogeneous of the right parity (or zero).
    pub fn substitute(&self, target: &Ring, even_images: &[SuperPoly], odd_images: &[SuperPoly]) -> Result<Self> {
        if even_images.len() != self.ring.n_even() || odd_images.len() != self.ring.n_odd() {
            return Err(Error::DimensionMismatch("substitution needs one image per variable".into()));
        }
        for (img, want) in even_images.iter().map(|p| (p, 0u8)).chain(odd_images.iter().map(|p| (p, 1u8))) {
            if !same_ring(img.ring(), target) {
                return Err(Error::RingMismatch);
            }
            if !img.is_zero() && img.parity() != Some(want) {
                return Err(Error::Inhomogeneous("substituted image has the wrong parity".into()));
            }
        }
        if target.characteristic != self.ring.characteristic {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<SuperPoly>> = even_images.iter().map(|p| vec![SuperPoly::one(target), p.clone()]).collect();
        let mut total = SuperPoly::zero(target);
        for (m, c) in &self.terms {
            let mut acc = SuperPoly::constant(target, c.clone());
            for (i, &e) in m.even_exp().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &even_images[i];
                    powers[i].push(next);
                }
                acc = &acc * &powers[i][e as usize];
            }
            for j in m.odd_set() {
                acc = &acc * &odd_images[j];
            }
            total = &total + &acc;
        }
        Ok(total)
    }

    /// Moves the polynomial into another ring with the same characteristic by
    /// mapping variables by name. Fails if a used variable is missing.
    pub fn rename_into(&self, target: &Ring) -> Result<Self> {
        let map = |v: Var| -> Result<SuperPoly> {
            let name = self.ring.var_name(v);
            match target.lookup(name) {
                Some(w) if w.parity() == v.parity() => Ok(SuperPoly::var(target, w)),
                Some(_) => Err(Error::Inhomogeneous(format!("variable `{name}` changes parity"))),
                None => Ok(SuperPoly::zero(target)),
            }
        };
        let evens: Vec<_> = (0..self.ring.n_even()).map(|i| map(Var::Even(i))).collect::<Result<_>>()?;
        let odds: Vec<_> = (0..self.ring.n_odd()).map(|j| map(Var::Odd(j))).collect::<Result<_>>()?;
        let used_missing = self.terms.iter().any(|(m, _)| {
            m.even_exp().iter().enumerate().any(|(i, &e)| e > 0 && evens[i].is_zero())
                || m.odd_set().iter().any(|&j| odds[j].is_zero())
        });
        if used_missing {
            return Err(Error::UnknownVariable("polynomial uses a variable absent from the target ring".into()));
        }
        self.substitute(target, &evens, &odds)
    }
}

impl<'a> Add for &'a SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &'a SuperPoly) -> SuperPoly {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub for &'a SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &'a SuperPoly) -> SuperPoly {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul for &'a SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &'a SuperPoly) -> SuperPoly {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        SuperPoly { ring: self.ring.clone(), terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpoly::RingSpec;

    fn ring(ch: u64) -> Ring {
        RingSpec::new(vec!["x".into(), "y".into()], vec!["a".into(), "b".into()], ch).unwrap()
    }

    #[test]
    fn cross_terms_of_x_plus_a() {
        let r = ring(0);
        let x = SuperPoly::var_named(&r, "x").unwrap();
        let a = SuperPoly::var_named(&r, "a").unwrap();
        let p = &(&x + &a) * &(&x - &a);
        // x^2 - xa + ax - a^2 = x^2 (x and a commute since x is even)
        assert_eq!(p, &x * &x);
        let ab = &a * &(SuperPoly::var_named(&r, "b").unwrap());
        let ba = &SuperPoly::var_named(&r, "b").unwrap() * &a;
        assert_eq!(ab, -&ba);
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let r = ring(0);
        let x = SuperPoly::var_named(&r, "x").unwrap();
        let y = SuperPoly::var_named(&r, "y").unwrap();
        let a = SuperPoly::var_named(&r, "a").unwrap();
        let b = SuperPoly::var_named(&r, "b").unwrap();
        // swap a and b, send x -> x + y
        let f = &(&x * &a) * &b;
        let g = f.substitute(&r, &[&x + &y, y.clone()], &[b.clone(), a.clone()]).unwrap();
        let expect = &(&(&x + &y) * &b) * &a;
        assert_eq!(g, expect);
    }

    #[test]
    fn parity_and_degree() {
        let r = ring(5);
        let x = SuperPoly::var_named(&r, "x").unwrap();
        let a = SuperPoly::var_named(&r, "a").unwrap();
        assert_eq!((&x * &a).parity(), Some(1));
        assert_eq!((&x + &a).parity(), None);
        assert_eq!((&x * &x).degree(), Some(2));
        assert!((&a * &a).is_zero());
    }
}
