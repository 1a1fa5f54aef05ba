//! Euler characteristics of projective spaces, quadrics, Grassmannians and
//! smooth complete intersections, and invariant packages of smooth
//! hypersurfaces, linear spaces and their duals.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::flopcalc::VarietyInvariants;

/// Power series in `h` truncated at degree `order - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, i: usize) -> &Rational {
        assert!(i < self.order(), "coefficient {i} beyond truncation order {}", self.order());
        &self.coeffs[i]
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                out[i + j] += &(a * b);
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = self.coeffs.first().cloned().unwrap_or_else(Rational::zero);
        let inv0 = c0.recip()?;
        let mut out = vec![Rational::zero(); self.order()];
        if !out.is_empty() {
            out[0] = inv0.clone();
        }
        for k in 1..self.order() {
            let s: Rational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out[k] = -(s * inv0.clone());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `(1 + a h)^e` for any integer `e`.
    pub fn linear_power(a: i64, e: i64, order: usize) -> TruncatedSeries {
        let base = Self::new(vec![Rational::one(), Rational::from(a)], order);
        let mut acc = Self::one(order);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        if e < 0 {
            acc.inverse().expect("constant term 1")
        } else {
            acc
        }
    }
}

fn sign(exp: i64) -> i64 {
    1 - 2 * exp.rem_euclid(2)
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    i64::try_from(acc).expect("binomial fits in i64")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StandardVariety {
    ProjectiveSpace { n: i64 },
    /// Smooth quadric of dimension `n` in `P^(n+1)`.
    Quadric { n: i64 },
    /// `k`-planes in `C^n`.
    Grassmannian { k: i64, n: i64 },
}

pub fn chi_standard(kind: StandardVariety) -> Result<i64> {
    match kind {
        StandardVariety::ProjectiveSpace { n } if n >= 0 => Ok(n + 1),
        StandardVariety::Quadric { n } if n >= 0 => Ok(n + 1 + (1 + sign(n)) / 2),
        StandardVariety::Grassmannian { k, n } if 0 < k && k < n => Ok(binomial(n, k)),
        other => Err(Error::InvalidParams(format!("{other:?}"))),
    }
}

/// `chi` of a smooth complete intersection of the given degrees in `P^n`,
/// read off `(1+h)^(n+1) / prod(1 + d_i h)`.
pub fn chi_smooth_complete_intersection(n: i64, degrees: &[i64]) -> Result<i64> {
    if n < 1 || degrees.is_empty() || degrees.len() as i64 > n || degrees.iter().any(|&d| d < 1) {
        return Err(Error::InvalidParams(format!("n={n} degrees={degrees:?}")));
    }
    let order = (n + 1) as usize;
    let mut series = TruncatedSeries::linear_power(1, n + 1, order);
    for &d in degrees {
        series = series.mul(&TruncatedSeries::linear_power(d, -1, order));
    }
    let dim = (n - degrees.len() as i64) as usize;
    let degree: i64 = degrees.iter().product();
    let value = series.coefficient(dim) * &Rational::from(degree);
    value
        .to_i64()
        .filter(|_| value.is_integer())
        .ok_or_else(|| Error::NonIntegralResult(value.to_string()))
}

/// Package of a smooth hypersurface of degree `d` in `P^n`; generic slices
/// are smooth hypersurfaces of lower dimension.
pub fn hypersurface_package(n: i64, d: i64) -> Result<VarietyInvariants> {
    if n < 2 || d < 1 {
        return Err(Error::InvalidParams(format!("n={n} d={d}")));
    }
    let mut slices = vec![Some(0)];
    for j in 1..=n {
        slices.push(Some(chi_smooth_complete_intersection(j, &[d])?));
    }
    let chi = chi_smooth_complete_intersection(n, &[d])?;
    Ok(VarietyInvariants {
        label: format!("V({d}) in P^{n}"),
        n,
        dim: n - 1,
        degree: d,
        c0m: chi,
        chi_slices: slices,
        transversality_certified: true,
    })
}

/// Package of a linear `P^k` in `P^n`.
pub fn linear_package(n: i64, k: i64) -> Result<VarietyInvariants> {
    if n < 1 || k < 0 || k > n {
        return Err(Error::InvalidParams(format!("n={n} k={k}")));
    }
    let slices = (0..=n)
        .map(|j| Some((k + j - n + 1).max(0)))
        .collect();
    Ok(VarietyInvariants {
        label: format!("P^{k} in P^{n}"),
        n,
        dim: k,
        degree: 1,
        c0m: k + 1,
        chi_slices: slices,
        transversality_certified: true,
    })
}

/// Polar degrees `mu_0..=mu_m` of a smooth hypersurface of degree `d` in
/// `P^n`, `m = n - 1`, from its Chern classes:
/// `mu_k = sum_i (-1)^i C(m-i+1, k-i) deg(c_i h^(m-i))`.
pub fn polar_degrees(n: i64, d: i64) -> Result<Vec<i64>> {
    if n < 2 || d < 1 {
        return Err(Error::InvalidParams(format!("n={n} d={d}")));
    }
    let m = n - 1;
    let order = (n + 1) as usize;
    let chern = TruncatedSeries::linear_power(1, n + 1, order)
        .mul(&TruncatedSeries::linear_power(d, -1, order));
    let e: Vec<i64> = (0..=m)
        .map(|i| {
            let v = chern.coefficient(i as usize) * &Rational::from(d);
            v.to_i64().expect("integral Chern numbers")
        })
        .collect();
    Ok((0..=m)
        .map(|k| {
            (0..=k)
                .map(|i| sign(i) * binomial(m - i + 1, k - i) * e[i as usize])
                .sum()
        })
        .collect())
}

/// `c0m` from polar degrees: `sum_i (-1)^i (m - i + 1) mu_i`.
pub fn c0m_from_polar_degrees(mu: &[i64]) -> i64 {
    let m = mu.len() as i64 - 1;
    mu.iter()
        .enumerate()
        .map(|(i, &v)| sign(i as i64) * (m - i as i64 + 1) * v)
        .sum()
}

/// Package of the dual of a smooth hypersurface of degree `d >= 2`. Its
/// polar degrees are those of the hypersurface in reverse order. Slices
/// beyond the degree are unknown unless the dual is again a smooth quadric.
pub fn dual_hypersurface_package(n: i64, d: i64) -> Result<VarietyInvariants> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("the dual of a hyperplane is a point (d={d})")));
    }
    if d == 2 {
        let mut p = hypersurface_package(n, 2)?;
        p.label = format!("V(2)* in P^{n}");
        return Ok(p);
    }
    let mut mu = polar_degrees(n, d)?;
    mu.reverse();
    let degree = mu[0];
    let mut slices = vec![None; (n + 1) as usize];
    slices[0] = Some(0);
    slices[1] = Some(degree);
    Ok(VarietyInvariants {
        label: format!("V({d})* in P^{n}"),
        n,
        dim: n - 1,
        degree,
        c0m: c0m_from_polar_degrees(&mu),
        chi_slices: slices,
        transversality_certified: true,
    })
}
