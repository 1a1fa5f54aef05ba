//! Plücker-type identities for conormal varieties under the Mukai flop of
//! `T*P^n`, evaluated exactly over invariant packages.

mod corollary;
mod identity;
mod solve;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

pub use corollary::{
    classical_plucker, detect_dual_codim, dual_c0m, dual_degree_from_invariants, PluckerDualData,
};
pub use identity::{check_identity, flop_defect, quadric_pair_check, FlopCheckReport, IdentityForm};
pub use solve::{solve_unknown, Identity, Slot};

/// Invariant package of a subvariety `S` of `P^n`. `chi_slices[j]` is the
/// Euler characteristic of `S` cut by a generic `P^j`, `None` when unknown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyInvariants {
    pub label: String,
    pub n: i64,
    pub dim: i64,
    pub degree: i64,
    pub c0m: i64,
    pub chi_slices: Vec<Option<i64>>,
    #[serde(rename = "transversal")]
    pub transversality_certified: bool,
}

impl VarietyInvariants {
    fn inconsistent(&self, reason: impl Into<String>) -> Error {
        Error::InconsistentPackage {
            label: self.label.clone(),
            reason: reason.into(),
        }
    }

    /// Checks the slice conventions: length `n + 1`, zeros below the
    /// complementary dimension and `degree` points at it.
    pub fn validate(&self) -> Result<()> {
        match self.field_violation() {
            Some((_, reason)) => Err(self.inconsistent(reason)),
            None => Ok(()),
        }
    }

    /// The first field breaking the package conventions, as a field path
    /// and a reason.
    pub fn field_violation(&self) -> Option<(String, String)> {
        if self.n < 1 {
            return Some(("n".into(), format!("ambient dimension {} < 1", self.n)));
        }
        if self.dim < 0 || self.dim > self.n {
            return Some(("dim".into(), format!("dimension {} outside 0..={}", self.dim, self.n)));
        }
        if self.degree < 1 {
            return Some(("degree".into(), format!("degree {} < 1", self.degree)));
        }
        if self.chi_slices.len() as i64 != self.n + 1 {
            return Some((
                "chi_slices".into(),
                format!("chi_slices has length {}, expected {}", self.chi_slices.len(), self.n + 1),
            ));
        }
        let codim = self.n - self.dim;
        for (j, slice) in self.chi_slices.iter().enumerate() {
            let expected = match j as i64 {
                i if i < codim => 0,
                i if i == codim => self.degree,
                _ => continue,
            };
            if let Some(v) = slice {
                if *v != expected {
                    return Some((format!("chi_slices[{j}]"), format!("chi_slices[{j}] = {v}, expected {expected}")));
                }
            }
        }
        None
    }

    /// `chi(S ∩ P^j)`; a negative `j` is the empty slice.
    pub fn slice(&self, j: i64) -> Result<i64> {
        if j < 0 {
            return Ok(0);
        }
        match self.chi_slices.get(j as usize) {
            Some(Some(v)) => Ok(*v),
            _ => Err(Error::MissingSlice {
                label: self.label.clone(),
                index: j,
            }),
        }
    }

    pub fn codim(&self) -> i64 {
        self.n - self.dim
    }
}

/// Intersection numbers of conormal varieties in `T*P^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConormalNumbers {
    pub cs_dot_pn: i64,
}

impl ConormalNumbers {
    pub fn of(s: &VarietyInvariants) -> Self {
        ConormalNumbers {
            cs_dot_pn: sign(s.dim) * s.c0m,
        }
    }

    /// `C_{S1} · C_{S2}` for transversal `S1, S2` in `P^n`; zero when the
    /// intersection is empty.
    pub fn pairing(dim1: i64, dim2: i64, n: i64, chi: &Rational) -> Rational {
        let dim = dim1 + dim2 - n;
        if dim < 0 {
            Rational::zero()
        } else {
            chi * &Rational::sign_power(dim)
        }
    }
}

pub(crate) fn sign(exp: i64) -> i64 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
