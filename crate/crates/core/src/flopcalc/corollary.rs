//! Consequences of the identity with one side a generic linear space:
//! Chern-Mather classes and degrees of duals, the dual codimension, and the
//! classical Plücker formulas for plane curves.

use serde::{Deserialize, Serialize};

use super::{sign, VarietyInvariants};
use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PluckerDualData {
    pub d_dual: i64,
    pub delta_dual: i64,
    pub kappa_dual: i64,
    pub g: i64,
}

/// Dual degree, dual cusps and genus from `(d, delta, kappa)`, with the dual
/// node count fixed by genus invariance.
pub fn classical_plucker(d: i64, delta: i64, kappa: i64) -> Result<PluckerDualData> {
    if d < 2 || delta < 0 || kappa < 0 {
        return Err(Error::InvalidCounts(format!("d={d} delta={delta} kappa={kappa}")));
    }
    let g = (d - 1) * (d - 2) / 2 - delta - kappa;
    let d_dual = d * d - d - 2 * delta - 3 * kappa;
    let kappa_dual = 3 * d * (d - 2) - 6 * delta - 8 * kappa;
    let delta_dual = (d_dual - 1) * (d_dual - 2) / 2 - kappa_dual - g;
    if g < 0 || d_dual < 1 || kappa_dual < 0 || delta_dual < 0 {
        return Err(Error::InvalidCounts(format!(
            "g={g} d_dual={d_dual} delta_dual={delta_dual} kappa_dual={kappa_dual}"
        )));
    }
    Ok(PluckerDualData { d_dual, delta_dual, kappa_dual, g })
}

fn integral(value: Rational, what: &str) -> Result<i64> {
    value
        .to_i64()
        .filter(|_| value.is_integer())
        .ok_or_else(|| Error::NonIntegralResult(format!("{what} = {value}")))
}

fn check_k(k: i64, l: i64) -> Result<()> {
    if k < 0 || k > l - 1 {
        return Err(Error::KOutOfRange { k, max: l - 1 });
    }
    Ok(())
}

/// `c0m` of the dual from a transversal slice `S ∩ P^(n-k-1)`. Without an
/// explicit codimension of the dual it is detected from the package.
pub fn dual_c0m(s: &VarietyInvariants, k: i64, dual_codim: Option<i64>) -> Result<i64> {
    s.validate()?;
    let l = match dual_codim {
        Some(l) => l,
        None => detect_dual_codim(s)?,
    };
    check_k(k, l)?;
    let n = s.n;
    let dual_dim = n - l;
    let value = Rational::from(n - k) / Rational::from(k + 1) * Rational::from(s.c0m)
        - Rational::from(n + 1) / Rational::from(k + 1) * Rational::from(s.slice(n - k - 1)?);
    integral(Rational::from(sign(s.dim + dual_dim + n + 1)) * value, "c0m of the dual")
}

/// Degree of the dual, where `l` is its codimension.
pub fn dual_degree_from_invariants(s: &VarietyInvariants, k: i64, l: i64) -> Result<i64> {
    s.validate()?;
    check_k(k, l)?;
    let n = s.n;
    let (k1, c0m) = (Rational::from(k + 1), Rational::from(s.c0m));
    let value = Rational::from(l - k) / k1.clone() * c0m + Rational::from(s.slice(n - l - 1)?)
        - Rational::from(l + 1) / k1 * Rational::from(s.slice(n - k - 1)?);
    integral(Rational::from(sign(s.dim + l + 1)) * value, "degree of the dual")
}

/// Smallest `k >= 1` at which `k c0m = (k+1) chi(S∩P^(n-1)) - chi(S∩P^(n-k-1))`
/// fails, which is the codimension of the dual. The `k = 0` instance holds
/// for every package, so consistency is checked instead by the slice
/// conventions and by positivity of the resulting dual degree.
pub fn detect_dual_codim(s: &VarietyInvariants) -> Result<i64> {
    s.validate()?;
    let n = s.n;
    let hyper = s.slice(n - 1)?;
    for k in 1..=n {
        let lhs = k * s.c0m;
        let rhs = (k + 1) * hyper - s.slice(n - k - 1)?;
        if lhs != rhs {
            let degree = dual_degree_from_invariants(s, 0, k)?;
            if degree <= 0 {
                return Err(Error::InconsistentPackage {
                    label: s.label.clone(),
                    reason: format!("dual codimension {k} would give dual degree {degree}"),
                });
            }
            return Ok(k);
        }
    }
    Err(Error::NoFailureFound)
}
