//! Plane projective curves: singular points, node and cusp classification,
//! genus, Euler characteristic and the degree-zero Chern-Mather class.

mod chart;
mod point;
mod singular;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{is_squarefree, parse_poly, resultant_in, MultiPoly, Rational, UniPoly, PRIMAL_VARS};

pub use chart::{chart, Projectivity, CHART_COUNT};
pub use point::ProjPoint;
pub use singular::{
    classify_singularity, singular_locus, singular_points, singular_points_from, SingularKind,
    SingularLocus, SingularPoint,
};

pub(crate) use chart::{affine, as_unipoly, center_off_curve};
pub(crate) use singular::analyze_chart;

/// A reduced plane curve `V(F)` given by a square-free form in three
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    form: MultiPoly,
    degree: u32,
}

impl PlaneCurve {
    pub fn new(form: MultiPoly) -> Result<Self> {
        if form.nvars() != 3 {
            return Err(Error::InvalidCurve(format!(
                "expected 3 variables, found {}",
                form.nvars()
            )));
        }
        if form.is_zero() {
            return Err(Error::InvalidCurve("zero form".into()));
        }
        if !form.is_homogeneous() {
            return Err(Error::InvalidCurve("form is not homogeneous".into()));
        }
        let degree = form.total_degree();
        if degree == 0 {
            return Err(Error::InvalidCurve("constant form".into()));
        }
        if !form_is_squarefree(&form) {
            return Err(Error::ReducibleCurve);
        }
        Ok(PlaneCurve { form, degree })
    }

    /// Parses a curve in the primal variables `x, y, z`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_poly(text, &PRIMAL_VARS)?)
    }

    pub fn form(&self) -> &MultiPoly {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.form.evaluate(&p.to_rationals()).is_zero()
    }

    /// The curve `V(F(M X))`.
    pub fn transform(&self, m: &Projectivity) -> PlaneCurve {
        PlaneCurve {
            form: m.pull_back(&self.form),
            degree: self.degree,
        }
    }
}

/// A form `z^k G` with `z` not dividing `G` is square-free exactly when
/// `k <= 1` and `G(x, y, 1)` is square-free.
fn form_is_squarefree(form: &MultiPoly) -> bool {
    let (rest, k) = form.strip_factor(&form.var_like(2));
    k <= 1 && is_squarefree(&affine(&rest))
}

/// Invariants of a curve whose singularities are nodes and cusps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub d: i64,
    pub delta: i64,
    pub kappa: i64,
    pub genus: i64,
    pub chi: i64,
    pub c0m: i64,
    pub singular_points: Vec<SingularPoint>,
    pub other_singularities: Vec<SingularPoint>,
}

/// Genus by the node/cusp count, `chi` by normalization (each node glues two
/// points, a cusp none) and `c0m` as the Euler-obstruction weighted `chi`.
pub fn curve_report(curve: &PlaneCurve) -> Result<CurveReport> {
    let points = singular_points(curve)?;
    let other: Vec<SingularPoint> = points
        .iter()
        .filter(|s| s.kind == SingularKind::Other)
        .cloned()
        .collect();
    if !other.is_empty() {
        return Err(Error::UnsupportedSingularity);
    }
    let d = curve.degree() as i64;
    let delta = points.iter().filter(|s| s.kind == SingularKind::Node).count() as i64;
    let kappa = points.iter().filter(|s| s.kind == SingularKind::Cusp).count() as i64;
    let genus = (d - 1) * (d - 2) / 2 - delta - kappa;
    if genus < 0 {
        return Err(Error::ReducibleCurve);
    }
    let chi = 2 - 2 * genus - delta;
    let c0m = chi + points.iter().map(|s| s.euler_obstruction - 1).sum::<i64>();
    assert_eq!(c0m, -d * d + 3 * d + 2 * delta + 3 * kappa, "Chern-Mather bookkeeping");
    Ok(CurveReport {
        d,
        delta,
        kappa,
        genus,
        chi,
        c0m,
        singular_points: points,
        other_singularities: other,
    })
}

/// Two points spanning the line `a x + b y + c z = 0`.
pub(crate) fn line_basis(coeffs: &[Rational; 3]) -> [[Rational; 3]; 2] {
    let [a, b, c] = coeffs.clone();
    let z = Rational::zero;
    if !a.is_zero() {
        [[-&b, a.clone(), z()], [-&c, z(), a]]
    } else if !b.is_zero() {
        [[Rational::one(), z(), z()], [z(), -&c, b]]
    } else {
        [[Rational::one(), z(), z()], [z(), Rational::one(), z()]]
    }
}

/// Coefficients of a linear form.
pub(crate) fn linear_coefficients(line: &MultiPoly) -> Result<[Rational; 3]> {
    if line.nvars() != 3 || line.is_zero() || line.total_degree() != 1 || !line.is_homogeneous() {
        return Err(Error::InvalidCurve("expected a nonzero linear form".into()));
    }
    Ok(std::array::from_fn(|i| {
        let mut e = [0u32; 3];
        e[i] = 1;
        line.coefficient(&e)
    }))
}

/// Distinct roots on `P^1` of a binary form given by its dehomogenization
/// `phi(s, 1)` and its degree.
fn binary_form_root_count(dehom: &UniPoly, degree: usize) -> usize {
    let at_infinity = usize::from(dehom.degree().unwrap_or(0) < degree);
    dehom.distinct_root_count() + at_infinity
}

/// Whether the line meets the curve in `d` distinct points. Such a line
/// automatically misses every singular point, where the intersection
/// multiplicity is at least two.
pub fn line_transversality(curve: &PlaneCurve, line: &MultiPoly) -> Result<bool> {
    let coeffs = linear_coefficients(line)?;
    let [p, q] = line_basis(&coeffs);
    let ring = MultiPoly::zero(&["s", "t"]);
    let (s, t) = (ring.var_like(0), ring.var_like(1));
    let images: Vec<MultiPoly> = (0..3)
        .map(|i| &s.scale(&p[i]) + &t.scale(&q[i]))
        .collect();
    let restricted = curve.form().substitute(&images);
    if restricted.is_zero() {
        return Ok(false);
    }
    let dehom = as_unipoly(&restricted.evaluate_var(1, &Rational::one()));
    let d = curve.degree() as usize;
    Ok(binary_form_root_count(&dehom, d) == d)
}

/// Number of distinct intersection points of two curves and whether the
/// intersection is transversal (as many points as the Bezout number).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionCount {
    pub points: usize,
    pub transversal: bool,
}

/// Runs `count` over the chart schedule. A chart whose count reaches
/// `ceiling` ends the search; otherwise the largest count is returned once a
/// second chart reproduces it.
pub(crate) fn chart_max<F>(ceiling: usize, mut count: F) -> Result<usize>
where
    F: FnMut(&Projectivity) -> Result<Option<usize>>,
{
    let mut best: Option<(usize, usize)> = None;
    for k in 0..CHART_COUNT {
        let Some(n) = count(&chart(k))? else {
            continue;
        };
        if n >= ceiling {
            return Ok(n);
        }
        best = match best {
            Some((b, seen)) if b == n => {
                if seen + 1 >= 2 {
                    return Ok(n);
                }
                Some((b, seen + 1))
            }
            Some((b, seen)) if b > n => Some((b, seen)),
            _ => Some((n, 1)),
        };
    }
    best.map(|(b, _)| b).ok_or(Error::ChartExhausted)
}

pub fn intersection_count(c1: &PlaneCurve, c2: &PlaneCurve) -> Result<IntersectionCount> {
    if !c1.form().same_ring(c2.form()) {
        return Err(Error::SharedVariableMismatch);
    }
    let bezout = (c1.degree() * c2.degree()) as usize;
    let points = chart_max(bezout, |m| {
        let (g1, g2) = (m.pull_back(c1.form()), m.pull_back(c2.form()));
        if !center_off_curve(&g1) || !center_off_curve(&g2) {
            return Ok(None);
        }
        let r = resultant_in(&affine(&g1), &affine(&g2), 1)?;
        if r.is_zero() {
            return Err(Error::ReducibleCurve);
        }
        let r = as_unipoly(&r);
        // a drop in degree means an intersection point at infinity
        if r.degree() != Some(bezout) {
            return Ok(None);
        }
        Ok(Some(r.distinct_root_count()))
    })?;
    Ok(IntersectionCount {
        points,
        transversal: points == bezout,
    })
}
