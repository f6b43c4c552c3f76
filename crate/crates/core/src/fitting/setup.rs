use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superpoly::{Ring, RingSpec, SuperPoly, Var};
use crate::supermodule::{GradedFreeModule, GradedMatrix};

/// Dimensions `dim U = (d, e)`, `dim V = (m, n)` and a characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetupSpec {
    pub d: usize,
    pub e: usize,
    pub m: usize,
    pub n: usize,
    #[serde(rename = "char")]
    pub characteristic: u64,
}

impl std::fmt::Display for SetupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(d,e,m,n)=({},{},{},{}) char {}", self.d, self.e, self.m, self.n, self.characteristic)
    }
}

/// The generic ring `S(V ⊗ U)` and the tautological map `Φ: V ⊗ R -> U* ⊗ R`.
///
/// V basis: `v_1..v_m` (even) then `v'_1..v'_n`, indices `0..m+n`.
/// U basis: `u_1..u_d` (even) then `u'_1..u'_e`, indices `0..d+e`.
/// The variable `v_c ⊗ u_r` is the entry of `Φ` in row `r`, column `c`:
///
/// ```text
///   Φ = ( X  A )    X = x_i_k, A = a_i_l  (rows u_i)
///       ( B  Y )    B = b_j_k, Y = y_j_l  (rows u'_j)
/// ```
#[derive(Clone, Debug)]
pub struct GenericSetup {
    pub spec: SetupSpec,
    pub ring: Ring,
    pub phi: GradedMatrix,
    vars: Vec<Vec<Var>>,
}

impl GenericSetup {
    pub fn new(d: usize, e: usize, m: usize, n: usize, characteristic: u64) -> Result<Self> {
        Self::from_spec(SetupSpec { d, e, m, n, characteristic })
    }

    pub fn from_spec(spec: SetupSpec) -> Result<Self> {
        let SetupSpec { d, e, m, n, characteristic } = spec;
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for i in 1..=d {
            for k in 1..=m {
                even.push(format!("x_{i}_{k}"));
            }
        }
        for j in 1..=e {
            for l in 1..=n {
                even.push(format!("y_{j}_{l}"));
            }
        }
        for i in 1..=d {
            for l in 1..=n {
                odd.push(format!("a_{i}_{l}"));
            }
        }
        for j in 1..=e {
            for k in 1..=m {
                odd.push(format!("b_{j}_{k}"));
            }
        }
        let ring = RingSpec::new(even, odd, characteristic)?;
        let mut vars = vec![Vec::with_capacity(m + n); d + e];
        for (r, row) in vars.iter_mut().enumerate() {
            for c in 0..m + n {
                let v = match (r < d, c < m) {
                    (true, true) => Var::Even(r * m + c),
                    (false, false) => Var::Even(d * m + (r - d) * n + (c - m)),
                    (true, false) => Var::Odd(r * n + (c - m)),
                    (false, true) => Var::Odd(d * n + (r - d) * m + c),
                };
                row.push(v);
            }
        }
        let entries = vars.iter().map(|row| row.iter().map(|&v| SuperPoly::var(&ring, v)).collect()).collect();
        let phi = GradedMatrix::new(
            &ring,
            GradedFreeModule::uniform(d, e, 0),
            GradedFreeModule::uniform(m, n, 1),
            entries,
        )?;
        Ok(GenericSetup { spec, ring, phi, vars })
    }

    pub fn v_dim(&self) -> usize {
        self.spec.m + self.spec.n
    }

    pub fn u_dim(&self) -> usize {
        self.spec.d + self.spec.e
    }

    pub fn v_parity(&self, c: usize) -> u8 {
        u8::from(c >= self.spec.m)
    }

    pub fn u_parity(&self, r: usize) -> u8 {
        u8::from(r >= self.spec.d)
    }

    /// The ring variable `v_c ⊗ u_r`.
    pub fn var(&self, c: usize, r: usize) -> Var {
        self.vars[r][c]
    }

    pub fn var_poly(&self, c: usize, r: usize) -> SuperPoly {
        SuperPoly::var(&self.ring, self.var(c, r))
    }

    /// Inverse of [`GenericSetup::var`].
    pub fn position_of(&self, v: Var) -> (usize, usize) {
        for (r, row) in self.vars.iter().enumerate() {
            if let Some(c) = row.iter().position(|&w| w == v) {
                return (c, r);
            }
        }
        unreachable!("every ring variable is an entry of Φ")
    }

    /// The same setup in another characteristic.
    pub fn with_characteristic(&self, characteristic: u64) -> Result<Self> {
        Self::from_spec(SetupSpec { characteristic, ..self.spec })
    }

    /// The parity-shifted setup `(e, d, n, m)` together with the images of
    /// this ring's even and odd variables under the isomorphism matching
    /// `Φ` with the shifted `Φ`.
    pub fn parity_shift(&self) -> Result<(GenericSetup, Vec<SuperPoly>, Vec<SuperPoly>)> {
        let SetupSpec { d, e, m, n, characteristic } = self.spec;
        let other = GenericSetup::new(e, d, n, m, characteristic)?;
        let rot_r = |r: usize| if r < d { e + r } else { r - d };
        let rot_c = |c: usize| if c < m { n + c } else { c - m };
        let mut evens = vec![SuperPoly::zero(&other.ring); self.ring.n_even()];
        let mut odds = vec![SuperPoly::zero(&other.ring); self.ring.n_odd()];
        for r in 0..d + e {
            for c in 0..m + n {
                let img = other.var_poly(rot_c(c), rot_r(r));
                match self.var(c, r) {
                    Var::Even(i) => evens[i] = img,
                    Var::Odd(j) => odds[j] = img,
                }
            }
        }
        Ok((other, evens, odds))
    }

    /// Images of the generic variables under the specialization `Φ -> phi`.
    pub fn specialization(&self, phi: &GradedMatrix) -> Result<(Vec<SuperPoly>, Vec<SuperPoly>)> {
        let SetupSpec { d, e, m, n, .. } = self.spec;
        if (phi.target.rank_even, phi.target.rank_odd, phi.source.rank_even, phi.source.rank_odd) != (d, e, m, n) {
            return Err(Error::DimensionMismatch(format!(
                "matrix blocks ({},{})x({},{}) do not match {}",
                phi.target.rank_even, phi.target.rank_odd, phi.source.rank_even, phi.source.rank_odd, self.spec
            )));
        }
        if phi.ring.characteristic != self.spec.characteristic {
            return Err(Error::RingMismatch);
        }
        let mut evens = vec![SuperPoly::zero(&phi.ring); self.ring.n_even()];
        let mut odds = vec![SuperPoly::zero(&phi.ring); self.ring.n_odd()];
        for r in 0..d + e {
            for c in 0..m + n {
                let img = phi.entries[r][c].clone();
                match self.var(c, r) {
                    Var::Even(i) => evens[i] = img,
                    Var::Odd(j) => odds[j] = img,
                }
            }
        }
        Ok((evens, odds))
    }
}
