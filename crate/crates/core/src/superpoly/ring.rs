use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::{is_prime, FieldElem};
use crate::error::{Error, Result};

/// A polynomial ring over a field on even (commuting) and odd (anticommuting,
/// square-zero) variables, all of degree one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    pub even_vars: Vec<String>,
    pub odd_vars: Vec<String>,
    pub characteristic: u64,
}

pub type Ring = Arc<RingSpec>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Even(usize),
    Odd(usize),
}

impl Var {
    pub fn parity(self) -> u8 {
        match self {
            Var::Even(_) => 0,
            Var::Odd(_) => 1,
        }
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new(even_vars: Vec<String>, odd_vars: Vec<String>, characteristic: u64) -> Result<Ring> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::InvalidRing(format!("characteristic {characteristic} is neither 0 nor prime")));
        }
        if characteristic > u32::MAX as u64 {
            return Err(Error::InvalidRing("characteristic must fit in 32 bits".into()));
        }
        if odd_vars.len() > 64 {
            return Err(Error::InvalidRing("at most 64 odd variables are supported".into()));
        }
        let mut seen = HashSet::new();
        for name in even_vars.iter().chain(odd_vars.iter()) {
            if !valid_name(name) {
                return Err(Error::InvalidRing(format!("bad variable name `{name}`")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(RingSpec { even_vars, odd_vars, characteristic }))
    }

    pub fn n_even(&self) -> usize {
        self.even_vars.len()
    }

    pub fn n_odd(&self) -> usize {
        self.odd_vars.len()
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        if let Some(i) = self.even_vars.iter().position(|v| v == name) {
            return Some(Var::Even(i));
        }
        self.odd_vars.iter().position(|v| v == name).map(Var::Odd)
    }

    pub fn var_name(&self, v: Var) -> &str {
        match v {
            Var::Even(i) => &self.even_vars[i],
            Var::Odd(j) => &self.odd_vars[j],
        }
    }

    pub fn scalar(&self, n: i64) -> FieldElem {
        FieldElem::from_int(n, self.characteristic)
    }

    /// The same variables plus fresh even variables prepended, used for
    /// elimination tricks. Names are made unique by adding underscores.
    pub fn with_extra_even(&self, base: &str, count: usize) -> Result<Ring> {
        let mut extra = Vec::with_capacity(count);
        for k in 0..count {
            let mut name = if count == 1 { base.to_string() } else { format!("{base}{k}") };
            while self.lookup(&name).is_some() {
                name.insert(0, '_');
            }
            extra.push(name);
        }
        extra.extend(self.even_vars.iter().cloned());
        RingSpec::new(extra, self.odd_vars.clone(), self.characteristic)
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
