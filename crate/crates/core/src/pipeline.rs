//! Invariant packages and flop checks for plane curves, with every input
//! computed from the equations: reports by singularity analysis, duals by
//! elimination, intersection Euler characteristics by point counts.

use serde::{Deserialize, Serialize};

use crate::charclass::{chi_smooth_complete_intersection, dual_hypersurface_package, hypersurface_package, linear_package};
use crate::curvelab::{curve_report, intersection_count, linear_coefficients, line_transversality, PlaneCurve, ProjPoint};
use crate::dualgeom::dual_equation;
use crate::error::{Error, Result};
use crate::exact::{parse_poly, Rational, PRIMAL_VARS};
use crate::flopcalc::{check_identity, FlopCheckReport, IdentityForm, VarietyInvariants};

/// A plane curve or a point; the dual of a line is a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaneObject {
    Curve(PlaneCurve),
    Point(ProjPoint),
}

impl PlaneObject {
    pub fn describe(&self) -> String {
        match self {
            PlaneObject::Curve(c) => c.form().to_string(),
            PlaneObject::Point(p) => p.to_string(),
        }
    }
}

/// Lines used to certify generic line sections of curve packages.
const PROBE_LINES: [&str; 6] = [
    "x + 2*y + 3*z",
    "2*x - y + 5*z",
    "3*x + 5*y - 2*z",
    "x - 3*y + 4*z",
    "5*x + 3*y + z",
    "7*x + 2*y - 5*z",
];

/// Whether some probe line meets the curve transversally.
fn has_transversal_probe(curve: &PlaneCurve) -> Result<bool> {
    let vars: Vec<&str> = curve.form().vars().iter().map(String::as_str).collect();
    for text in PROBE_LINES {
        let line = parse_poly(text, &PRIMAL_VARS)?.rename(&vars);
        if line_transversality(curve, &line)? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn plane_package(label: &str, object: &PlaneObject) -> Result<VarietyInvariants> {
    match object {
        PlaneObject::Point(_) => Ok(VarietyInvariants {
            label: label.to_string(),
            n: 2,
            dim: 0,
            degree: 1,
            c0m: 1,
            chi_slices: vec![Some(0), Some(0), Some(1)],
            transversality_certified: true,
        }),
        PlaneObject::Curve(curve) => {
            let report = curve_report(curve)?;
            Ok(VarietyInvariants {
                label: label.to_string(),
                n: 2,
                dim: 1,
                degree: report.d,
                c0m: report.c0m,
                chi_slices: vec![Some(0), Some(report.d), Some(report.chi)],
                transversality_certified: has_transversal_probe(curve)?,
            })
        }
    }
}

/// The dual object; curves of degree at least two go through elimination.
pub fn plane_dual(curve: &PlaneCurve, max_dual_degree: u32) -> Result<PlaneObject> {
    if curve.degree() == 1 {
        let coeffs = linear_coefficients(curve.form())?;
        return Ok(PlaneObject::Point(ProjPoint::from_rationals(&coeffs).expect("nonzero line")));
    }
    let dual = dual_equation(curve)?;
    if dual.degree > max_dual_degree {
        return Err(Error::GuardrailExceeded {
            degree: dual.degree as usize,
            limit: max_dual_degree as usize,
        });
    }
    Ok(PlaneObject::Curve(dual.curve()?))
}

/// `chi` of a transversal intersection: the number of points, or zero for
/// a point missing the other object.
pub fn plane_intersection_chi(a: &PlaneObject, b: &PlaneObject) -> Result<i64> {
    let not_transversal = || Error::UncertifiedTransversality(format!("{} and {}", a.describe(), b.describe()));
    match (a, b) {
        (PlaneObject::Curve(c1), PlaneObject::Curve(c2)) => {
            let count = intersection_count(c1, c2)?;
            if !count.transversal {
                return Err(not_transversal());
            }
            Ok(count.points as i64)
        }
        (PlaneObject::Point(p), PlaneObject::Curve(c)) | (PlaneObject::Curve(c), PlaneObject::Point(p)) => {
            if c.contains(p) {
                Err(not_transversal())
            } else {
                Ok(0)
            }
        }
        (PlaneObject::Point(p), PlaneObject::Point(q)) => {
            if p == q {
                Err(not_transversal())
            } else {
                Ok(0)
            }
        }
    }
}

/// Inputs and verdicts of the flop identity for a pair of plane curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvePairOutcome {
    pub packages: [VarietyInvariants; 4],
    pub chi_s: i64,
    pub chi_d: i64,
    pub conormal: FlopCheckReport,
    pub intro: FlopCheckReport,
}

impl CurvePairOutcome {
    pub fn holds(&self) -> bool {
        self.conormal.holds && self.intro.holds
    }
}

pub fn curve_pair_check(
    labels: [&str; 2],
    curves: [&PlaneCurve; 2],
    max_dual_degree: u32,
) -> Result<CurvePairOutcome> {
    let duals = [
        plane_dual(curves[0], max_dual_degree)?,
        plane_dual(curves[1], max_dual_degree)?,
    ];
    let objects = [PlaneObject::Curve(curves[0].clone()), PlaneObject::Curve(curves[1].clone())];
    let packages = [
        plane_package(labels[0], &objects[0])?,
        plane_package(labels[1], &objects[1])?,
        plane_package(&format!("{}*", labels[0]), &duals[0])?,
        plane_package(&format!("{}*", labels[1]), &duals[1])?,
    ];
    let chi_s = plane_intersection_chi(&objects[0], &objects[1])?;
    let chi_d = plane_intersection_chi(&duals[0], &duals[1])?;
    let [s1, s2, d1, d2] = &packages;
    let run = |form| check_identity(s1, s2, d1, d2, &Rational::from(chi_s), &Rational::from(chi_d), form);
    let conormal = run(IdentityForm::Conormal)?;
    let intro = run(IdentityForm::Intro)?;
    Ok(CurvePairOutcome { packages, chi_s, chi_d, conormal, intro })
}

/// Four packages with the Euler characteristics of both intersections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PackagePair {
    pub s1: VarietyInvariants,
    pub s2: VarietyInvariants,
    pub d1: VarietyInvariants,
    pub d2: VarietyInvariants,
    pub chi_s: Rational,
    pub chi_d: Rational,
}

impl PackagePair {
    pub fn check(&self, form: IdentityForm) -> Result<FlopCheckReport> {
        check_identity(&self.s1, &self.s2, &self.d1, &self.d2, &self.chi_s, &self.chi_d, form)
    }
}

fn relabel(mut p: VarietyInvariants, label: &str) -> VarietyInvariants {
    p.label = label.to_string();
    p
}

/// Pairs of smooth hypersurfaces with linear spaces or each other, all
/// inputs from Chern class expansions. A generic point misses a
/// hypersurface, and a generic `P^1` meets a degree `e` hypersurface in `e`
/// points.
pub fn standard_package_pairs() -> Result<Vec<(String, PackagePair)>> {
    let ci = chi_smooth_complete_intersection;
    let q = || hypersurface_package(3, 2);
    let x = || hypersurface_package(5, 3);
    let x_dual = dual_hypersurface_package(5, 3)?;
    let pairs = vec![
        (
            "quadric surface / line",
            PackagePair {
                s1: q()?,
                s2: linear_package(3, 1)?,
                d1: relabel(q()?, "Q*"),
                d2: relabel(linear_package(3, 1)?, "L*"),
                chi_s: ci(1, &[2])?.into(),
                chi_d: ci(1, &[2])?.into(),
            },
        ),
        (
            "quadric surface / plane",
            PackagePair {
                s1: q()?,
                s2: linear_package(3, 2)?,
                d1: relabel(q()?, "Q*"),
                d2: relabel(linear_package(3, 0)?, "H*"),
                chi_s: ci(2, &[2])?.into(),
                chi_d: 0.into(),
            },
        ),
        (
            "quadric surface / quadric surface",
            PackagePair {
                s1: relabel(q()?, "Q"),
                s2: relabel(q()?, "Q'"),
                d1: relabel(q()?, "Q*"),
                d2: relabel(q()?, "Q'*"),
                chi_s: ci(3, &[2, 2])?.into(),
                chi_d: ci(3, &[2, 2])?.into(),
            },
        ),
        (
            "cubic fourfold / hyperplane",
            PackagePair {
                s1: x()?,
                s2: linear_package(5, 4)?,
                d1: x_dual.clone(),
                d2: relabel(linear_package(5, 0)?, "H*"),
                chi_s: ci(4, &[3])?.into(),
                chi_d: 0.into(),
            },
        ),
        (
            "cubic fourfold / P^3",
            PackagePair {
                s1: x()?,
                s2: linear_package(5, 3)?,
                chi_d: x_dual.degree.into(),
                d1: x_dual,
                d2: relabel(linear_package(5, 1)?, "P^3*"),
                chi_s: ci(3, &[3])?.into(),
            },
        ),
    ];
    Ok(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}
