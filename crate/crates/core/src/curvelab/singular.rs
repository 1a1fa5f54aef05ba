//! Singular loci by resultant elimination, and local classification of
//! singular points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{resultant_in, MultiPoly, Rational, UniPoly};

use super::chart::{affine, as_unipoly, center_off_curve, chart, Projectivity, CHART_COUNT};
use super::point::ProjPoint;
use super::PlaneCurve;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SingularKind {
    Node,
    Cusp,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub point: ProjPoint,
    pub kind: SingularKind,
    pub multiplicity: u32,
    pub euler_obstruction: i64,
}

/// Singular points together with the number of geometric singular points
/// certified by elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLocus {
    pub points: Vec<SingularPoint>,
    pub geometric_count: usize,
}

/// Elimination data of one chart. Points are in the caller's coordinates.
pub(crate) struct ChartAnalysis {
    /// Monic square-free polynomial whose roots are the x-coordinates of the
    /// singular points in this chart.
    pub x_poly: UniPoly,
    pub rational_points: Vec<ProjPoint>,
    /// Lower bound on singular points with an irrational coordinate.
    pub irrational: usize,
}

fn unipoly_in(p: &MultiPoly, var: usize) -> UniPoly {
    crate::exact::to_unipoly(p, var).expect("single remaining variable")
}

/// A chart is usable when `[0:1:0]` is off the transformed curve and no
/// singular point lies on the line at infinity.
fn singular_at_infinity(g: &MultiPoly) -> bool {
    let grad: Vec<MultiPoly> = (0..3).map(|i| g.derivative(i)).collect();
    let polys = [g, &grad[0], &grad[1], &grad[2]];
    let zero = Rational::zero();
    let one = Rational::one();
    let at_x_axis = [one.clone(), zero.clone(), zero.clone()];
    if polys.iter().all(|p| p.evaluate(&at_x_axis).is_zero()) {
        return true;
    }
    let common = polys.iter().fold(UniPoly::new(vec![]), |acc, p| {
        let restricted = p.evaluate_var(1, &one).evaluate_var(2, &zero);
        acc.gcd(&unipoly_in(&restricted, 0))
    });
    common.degree().is_some_and(|d| d > 0)
}

/// Runs the singular-locus elimination in the chart `F(M X)`, or `None` when
/// the chart is not usable.
pub(crate) fn analyze_chart(form: &MultiPoly, map: &Projectivity) -> Result<Option<ChartAnalysis>> {
    let g = map.pull_back(form);
    if !center_off_curve(&g) || singular_at_infinity(&g) {
        return Ok(None);
    }
    let d = g.total_degree() as usize;
    let f = affine(&g);
    let fx = f.derivative(0);
    let fy = f.derivative(1);

    // For fixed x0 off the singular x-coordinates, each y-root of f(x0, y)
    // kills R_t(x0) for at most one t, so d + 1 nonzero resultants suffice.
    let mut x_poly: Option<UniPoly> = None;
    let mut used = 0;
    for t in 0..(3 * d + 3) as i64 {
        if used == d + 1 {
            break;
        }
        let s = &fx + &fy.scale(&Rational::from(t));
        if s.is_zero() {
            continue;
        }
        let r = resultant_in(&f, &s, 1)?;
        if r.is_zero() {
            continue;
        }
        let r = as_unipoly(&r);
        used += 1;
        x_poly = Some(match x_poly {
            None => r.monic(),
            Some(acc) => acc.gcd(&r),
        });
    }
    if used < d + 1 {
        return Ok(None);
    }
    let x_poly = x_poly.expect("at least one resultant").squarefree();
    let xs = x_poly.rational_roots();
    let mut irrational = x_poly.degree().unwrap_or(0) - xs.len();

    let mut rational_points = Vec::new();
    for x0 in &xs {
        let restrict = |p: &MultiPoly| unipoly_in(&p.evaluate_var(0, x0), 1);
        let common = restrict(&f).gcd(&restrict(&fx)).gcd(&restrict(&fy)).squarefree();
        let ys = common.rational_roots();
        irrational += common.degree().unwrap_or(0) - ys.len();
        for y0 in ys {
            let local = [x0.clone(), y0, Rational::one()];
            rational_points.push(ProjPoint::from_rationals(&map.apply(&local)).expect("nonzero"));
        }
    }
    rational_points.sort();
    Ok(Some(ChartAnalysis {
        x_poly,
        rational_points,
        irrational,
    }))
}

/// First usable chart of the schedule, each chart composed after `base`.
pub(crate) fn first_chart(form: &MultiPoly, base: &Projectivity) -> Result<ChartAnalysis> {
    for k in 0..CHART_COUNT {
        if let Some(a) = analyze_chart(form, &base.compose(&chart(k)))? {
            return Ok(a);
        }
    }
    Err(Error::ChartExhausted)
}

/// Rational singular points computed starting from the coordinate frame
/// `base`; fails if any singular point is not rational.
pub fn singular_points_from(curve: &PlaneCurve, base: &Projectivity) -> Result<Vec<ProjPoint>> {
    let a = first_chart(curve.form(), base)?;
    if a.irrational > 0 {
        return Err(Error::IrrationalSingularity);
    }
    Ok(a.rational_points)
}

/// All singular points with their classification. The elimination runs in a
/// chart with no singular point at infinity and counts points exactly, so a
/// complete rational list is certified.
pub fn singular_locus(curve: &PlaneCurve) -> Result<SingularLocus> {
    let points = singular_points_from(curve, &Projectivity::identity())?;
    let classified = points
        .iter()
        .map(|p| classify_singularity(curve, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(SingularLocus {
        geometric_count: classified.len(),
        points: classified,
    })
}

pub fn singular_points(curve: &PlaneCurve) -> Result<Vec<SingularPoint>> {
    singular_locus(curve).map(|l| l.points)
}

/// Classifies a singular point by the quadratic and cubic parts of the local
/// equation at the point.
pub fn classify_singularity(curve: &PlaneCurve, point: &ProjPoint) -> Result<SingularPoint> {
    let form = curve.form();
    let p = point.to_rationals();
    if (0..3).any(|i| !form.derivative(i).evaluate(&p).is_zero()) || !form.evaluate(&p).is_zero() {
        return Err(Error::NotSingular(point.to_string()));
    }
    let frame = local_frame(point);
    let f = affine(&frame.pull_back(form));
    let m = f.order().expect("curve is nonzero");
    let kind = if m == 2 {
        let q = f.homogeneous_part(2);
        let (a, b, c) = (q.coefficient(&[2, 0]), q.coefficient(&[1, 1]), q.coefficient(&[0, 2]));
        let disc = &b * &b - &(&Rational::from(4) * &(&a * &c));
        if !disc.is_zero() {
            SingularKind::Node
        } else {
            // q is a square of a linear form vanishing at `zero`
            let zero = if a.is_zero() {
                [Rational::one(), Rational::zero()]
            } else {
                [-b, &Rational::from(2) * &a]
            };
            if f.homogeneous_part(3).evaluate(&zero).is_zero() {
                SingularKind::Other
            } else {
                SingularKind::Cusp
            }
        }
    } else {
        SingularKind::Other
    };
    Ok(SingularPoint {
        point: point.clone(),
        kind,
        multiplicity: m,
        euler_obstruction: m as i64,
    })
}

/// An invertible frame sending `[0:0:1]` to `point`.
fn local_frame(point: &ProjPoint) -> Projectivity {
    let p = point.to_rationals();
    let e = |i: usize| -> [Rational; 3] {
        std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() })
    };
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let m = Projectivity::from_columns([e(i), e(j), p.clone()]);
        if !m.determinant().is_zero() {
            return m;
        }
    }
    unreachable!("a nonzero vector completes to a basis")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::parse(s).unwrap()
    }

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_i64(a, b, c).unwrap()
    }

    #[test]
    fn smooth_conic_has_no_singular_points() {
        assert!(singular_points(&curve("x^2 + y^2 + z^2")).unwrap().is_empty());
    }

    #[test]
    fn nodal_and_cuspidal_cubics() {
        let nodal = singular_points(&curve("y^2*z - x^3 - x^2*z")).unwrap();
        assert_eq!(nodal.len(), 1);
        assert_eq!(nodal[0].point, pt(0, 0, 1));
        assert_eq!(nodal[0].kind, SingularKind::Node);
        assert_eq!((nodal[0].multiplicity, nodal[0].euler_obstruction), (2, 2));

        let cusp = singular_points(&curve("y^2*z - x^3")).unwrap();
        assert_eq!(cusp.len(), 1);
        assert_eq!(cusp[0].point, pt(0, 0, 1));
        assert_eq!(cusp[0].kind, SingularKind::Cusp);
    }

    #[test]
    fn tacnode_is_other() {
        let c = curve("y^2*z^2 - x^4");
        let s = classify_singularity(&c, &pt(0, 0, 1)).unwrap();
        assert_eq!(s.kind, SingularKind::Other);
        assert_eq!(s.multiplicity, 2);
    }

    #[test]
    fn ordinary_triple_point_is_other() {
        let c = curve("x^3*z - x*y^2*z + y^4");
        let s = classify_singularity(&c, &pt(0, 0, 1)).unwrap();
        assert_eq!((s.kind, s.multiplicity), (SingularKind::Other, 3));
    }

    #[test]
    fn not_singular() {
        let c = curve("y^2*z - x^3");
        assert!(matches!(
            classify_singularity(&c, &pt(1, 1, 1)),
            Err(Error::NotSingular(_))
        ));
    }

    #[test]
    fn tricuspidal_quartic_away_from_origin() {
        // x^2 y^2 + y^2 z^2 + z^2 x^2 - 2xyz(x + y + z) has cusps at the
        // coordinate points.
        let c = curve("x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x^2*y*z - 2*x*y^2*z - 2*x*y*z^2");
        let pts = singular_points(&c).unwrap();
        let got: Vec<_> = pts.iter().map(|s| (s.point.clone(), s.kind)).collect();
        assert_eq!(
            got,
            vec![
                (pt(0, 0, 1), SingularKind::Cusp),
                (pt(0, 1, 0), SingularKind::Cusp),
                (pt(1, 0, 0), SingularKind::Cusp),
            ]
        );
    }

    #[test]
    fn irrational_nodes_are_refused() {
        // nodes at [+-sqrt(2):0:1]
        let c = curve("x^4 - 4*x^2*z^2 + 4*z^4 + y^2*z^2 - y^4");
        assert_eq!(singular_points(&c), Err(Error::IrrationalSingularity));
    }

    #[test]
    fn chart_independence() {
        let c = curve("y^2*z - x^3 - x^2*z");
        let cyclic = Projectivity::from_integers([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        let swap = Projectivity::from_integers([[0, 0, 1], [0, 1, 0], [1, 0, 0]]);
        let base = singular_points_from(&c, &Projectivity::identity()).unwrap();
        assert_eq!(singular_points_from(&c, &cyclic).unwrap(), base);
        assert_eq!(singular_points_from(&c, &swap).unwrap(), base);
    }
}
