//! Projective dual curves by discriminant elimination, dual degrees by polar
//! intersection counts, and biduality.

use serde::{Serialize, Serializer};

use crate::curvelab::{
    affine, analyze_chart, as_unipoly, chart, chart_max, curve_report, singular_points_from,
    CurveReport, PlaneCurve, ProjPoint, Projectivity, CHART_COUNT,
};
use crate::error::{Error, Result};
use crate::exact::{discriminant, resultant_in, squarefree_part, MultiPoly, UniPolyView, DUAL_VARS, PRIMAL_VARS};

/// Default bound on source and dual degree for biduality and dual reports.
pub const DEFAULT_GUARDRAIL: u32 = 3;
/// No override may raise the guardrail above this.
pub const GUARDRAIL_HARD_CAP: u32 = 4;

/// Deterministic witness points for polar counts.
pub const WITNESSES: [[i64; 3]; 8] = [
    [1, 2, 3],
    [2, -1, 5],
    [3, 5, -2],
    [-4, 1, 7],
    [5, 3, 1],
    [1, -3, 4],
    [7, 2, -5],
    [-2, 9, 1],
];

/// A factor divided out of the raw discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovedFactor {
    #[serde(serialize_with = "display_string")]
    pub factor: MultiPoly,
    pub exponent: u32,
}

fn display_string<S: Serializer>(p: &MultiPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCurve {
    #[serde(serialize_with = "display_string")]
    pub equation: MultiPoly,
    pub degree: u32,
    pub removed_factors: Vec<RemovedFactor>,
}

impl DualCurve {
    pub fn curve(&self) -> Result<PlaneCurve> {
        PlaneCurve::new(self.equation.clone())
    }
}

/// Variables of the dual plane: `u, v, w` for a primal curve and `x, y, z`
/// for a curve written in `u, v, w`.
fn dual_names(form: &MultiPoly) -> [&'static str; 3] {
    if form.vars().iter().map(String::as_str).eq(DUAL_VARS) {
        PRIMAL_VARS
    } else {
        DUAL_VARS
    }
}

/// Discriminant of `G(s w, w, -(u s + v))` in `s`, which is `w^d` times the
/// restriction of `G` to the line `u x + v y + w z = 0` in the chart `y = 1`.
fn raw_discriminant(g: &MultiPoly, out: [&str; 3]) -> Result<Option<MultiPoly>> {
    let d = g.total_degree();
    let ring = MultiPoly::zero(&["s", out[0], out[1], out[2]]);
    let (s, u, v, w) = (ring.var_like(0), ring.var_like(1), ring.var_like(2), ring.var_like(3));
    let images = [&s * &w, w.clone(), -&(&(&u * &s) + &v)];
    let phi = g.substitute(&images);
    // the leading coefficient G(w, 0, -u) vanishes identically when y | G
    if phi.degree_in(0) < d {
        return Ok(None);
    }
    let disc = discriminant(&UniPolyView::new(phi, 0)?)?;
    if disc.is_zero() {
        return Ok(None);
    }
    Ok(Some(disc.restrict(&out).expect("s eliminated")))
}

/// The dual curve. Extraneous factors are removed in a fixed order: powers
/// of the chart's `w`, then the dual lines of the singular points, then
/// repeated factors.
pub fn dual_equation(curve: &PlaneCurve) -> Result<DualCurve> {
    let d = curve.degree();
    if d < 2 {
        return Err(Error::DegreeTooLow { found: d as usize, required: 2 });
    }
    let singular = singular_points_from(curve, &Projectivity::identity())?;
    let out = dual_names(curve.form());
    for k in 0..CHART_COUNT {
        let m = chart(k);
        let g = m.pull_back(curve.form());
        let Some(disc) = raw_discriminant(&g, out)? else {
            continue;
        };
        // back to the original frame: D(U) = D'(M^T U)
        let mt = m.transpose();
        let mut current = mt.pull_back(&disc);
        let mut removed = Vec::new();
        let w_line = mt.pull_back(&disc.var_like(2));
        let mut strip = |current: &mut MultiPoly, factor: MultiPoly| {
            let (rest, e) = current.strip_factor(&factor);
            if e > 0 {
                removed.push(RemovedFactor { factor: factor.primitive(), exponent: e });
                *current = rest;
            }
        };
        strip(&mut current, w_line);
        for p in &singular {
            let c = p.to_rationals();
            let line = (0..3).fold(current.zero_like(), |acc, i| &acc + &current.var_like(i).scale(&c[i]));
            strip(&mut current, line);
        }
        if current.is_constant() {
            continue;
        }
        let equation = squarefree_part(&current)?.primitive();
        let degree = equation.total_degree();
        return Ok(DualCurve { equation, degree, removed_factors: removed });
    }
    Err(Error::ChartExhausted)
}

/// Number of smooth points of the curve whose tangent passes through `p`,
/// counted as distinct `x`-coordinates of `F = P = 0` minus those of the
/// singular points, maximized over charts.
fn polar_count(curve: &PlaneCurve, p: &ProjPoint) -> Result<usize> {
    let form = curve.form();
    let c = p.to_rationals();
    let polar = (0..3).fold(form.zero_like(), |acc, i| &acc + &form.derivative(i).scale(&c[i]));
    let d = curve.degree() as usize;
    let ceiling = d * (d - 1);
    chart_max(ceiling, |m| {
        let Some(sing) = analyze_chart(form, m)? else {
            return Ok(None);
        };
        let f = affine(&m.pull_back(form));
        let q = affine(&m.pull_back(&polar));
        let r = resultant_in(&f, &q, 1)?;
        if r.is_zero() {
            return Err(Error::ReducibleCurve);
        }
        let r = as_unipoly(&r);
        if r.degree() != Some(ceiling) {
            return Ok(None);
        }
        let singular_x = sing.x_poly.degree().unwrap_or(0);
        Ok(Some(r.distinct_root_count() - singular_x))
    })
}

/// First witness of the fixed sequence that is off the curve and differs
/// from `avoid`.
pub fn default_witness(curve: &PlaneCurve, avoid: Option<&ProjPoint>) -> Option<ProjPoint> {
    WITNESSES
        .iter()
        .filter_map(|&[a, b, c]| ProjPoint::from_i64(a, b, c))
        .find(|p| !curve.contains(p) && Some(p) != avoid)
}

/// Degree of the dual curve as the number of tangent lines through a
/// witness point, confirmed with a second witness.
pub fn dual_degree_oracle(curve: &PlaneCurve, witness: &ProjPoint) -> Result<usize> {
    if curve.contains(witness) {
        return Err(Error::WitnessOnCurve);
    }
    if curve.degree() < 2 {
        return Ok(0);
    }
    let first = polar_count(curve, witness)?;
    let other = default_witness(curve, Some(witness)).ok_or(Error::ChartExhausted)?;
    let second = polar_count(curve, &other)?;
    if first != second {
        return Err(Error::NonGenericWitness { first, second });
    }
    Ok(first)
}

fn check_guardrail(degree: u32, limit: u32) -> Result<()> {
    if degree > limit {
        return Err(Error::GuardrailExceeded { degree: degree as usize, limit: limit as usize });
    }
    Ok(())
}

/// Clamps a requested guardrail to the hard cap.
pub fn effective_guardrail(requested: Option<u32>) -> u32 {
    requested.unwrap_or(DEFAULT_GUARDRAIL).min(GUARDRAIL_HARD_CAP)
}

/// Whether the dual of the dual is the curve again. When the dual itself is
/// above the guardrail, the check falls back to comparing the oracle degree
/// of the dual with the source degree.
pub fn biduality_check(curve: &PlaneCurve, max_degree: u32) -> Result<bool> {
    check_guardrail(curve.degree(), max_degree)?;
    let dual = dual_equation(curve)?;
    let dual_curve = dual.curve()?;
    if dual.degree > max_degree {
        let witness = default_witness(&dual_curve, None).ok_or(Error::ChartExhausted)?;
        return Ok(dual_degree_oracle(&dual_curve, &witness)? == curve.degree() as usize);
    }
    let bidual = dual_equation(&dual_curve)?;
    Ok(bidual.equation.is_proportional_to(curve.form()))
}

/// The curve report of the dual curve.
pub fn dual_curve_report(curve: &PlaneCurve, max_degree: u32) -> Result<CurveReport> {
    check_guardrail(curve.degree(), max_degree)?;
    let dual = dual_equation(curve)?;
    check_guardrail(dual.degree, max_degree)?;
    curve_report(&dual.curve()?)
}
