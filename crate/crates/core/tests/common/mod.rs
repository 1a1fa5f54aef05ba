#![allow(dead_code)]

use dualis::curvelab::{singular_points, PlaneCurve, ProjPoint, Projectivity};
use dualis::exact::{resultant_in, squarefree_part, MultiPoly, Rational};
use dualis::flopcalc::{check_identity, IdentityForm, VarietyInvariants};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const LINE_A: &str = "x - 2*y + z";
pub const LINE_B: &str = "3*x + y - 5*z";
pub const CONIC_A: &str = "x^2 + y^2 - z^2";
pub const CONIC_B: &str = "x^2 - x*y + 2*y^2 - 3*z^2";
pub const PARABOLA: &str = "y^2 - x*z";
/// Nodal cubic whose flexes are rational, so its dual has rational cusps.
pub const NODAL: &str = "y^2*z + 3*x^2*z - x^3";
pub const CUSP: &str = "y^2*z - x^3";
pub const FERMAT_CUBIC: &str = "x^3 + y^3 + z^3";
pub const FERMAT_QUARTIC: &str = "x^4 + y^4 + z^4";
pub const TRICUSPIDAL: &str = "x^2*y^2 + y^2*z^2 + x^2*z^2 - 2*x^2*y*z - 2*x*y^2*z - 2*x*y*z^2";

/// Every plane curve used by the corpus-level checks.
pub const CORPUS: [(&str, &str); 10] = [
    ("line A", LINE_A),
    ("line B", LINE_B),
    ("conic A", CONIC_A),
    ("conic B", CONIC_B),
    ("parabola", PARABOLA),
    ("nodal cubic", NODAL),
    ("cuspidal cubic", CUSP),
    ("Fermat cubic", FERMAT_CUBIC),
    ("Fermat quartic", FERMAT_QUARTIC),
    ("tricuspidal quartic", TRICUSPIDAL),
];

/// Curve pairs of the flop identity corpus.
pub const CURVE_PAIRS: [(&str, &str); 7] = [
    ("line A", "line B"),
    ("line A", "conic A"),
    ("conic A", "conic B"),
    ("line A", "nodal cubic"),
    ("line B", "cuspidal cubic"),
    ("conic A", "cuspidal cubic"),
    ("conic B", "nodal cubic"),
];

pub fn curve(text: &str) -> PlaneCurve {
    PlaneCurve::parse(text).expect("corpus curve")
}

pub fn corpus_curve(label: &str) -> PlaneCurve {
    let (_, text) = CORPUS.iter().find(|(l, _)| *l == label).expect("known label");
    curve(text)
}

pub fn package(label: &str, n: i64, dim: i64, degree: i64, c0m: i64, slices: &[i64]) -> VarietyInvariants {
    VarietyInvariants {
        label: label.to_string(),
        n,
        dim,
        degree,
        c0m,
        chi_slices: slices.iter().copied().map(Some).collect(),
        transversality_certified: true,
    }
}

/// `prod (x - r)` in the ring `x, y`.
pub fn from_roots(roots: &[i64]) -> MultiPoly {
    let ring = MultiPoly::zero(&["x", "y"]);
    let x = ring.var_like(0);
    roots.iter().fold(ring.one_like(), |acc, &r| {
        &acc * &(&x - &ring.constant_like(Rational::from(r)))
    })
}

/// Small dense polynomials in `x, y` with leading `x` coefficient nonzero.
pub fn poly_xy(max_deg: usize) -> impl Strategy<Value = MultiPoly> {
    (1..=max_deg).prop_flat_map(|deg| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, 2), deg + 1).prop_map(move |rows| {
            let ring = MultiPoly::zero(&["x", "y"]);
            let (x, y) = (ring.var_like(0), ring.var_like(1));
            let mut p = ring.zero_like();
            for (k, row) in rows.iter().enumerate() {
                let mut c = &ring.constant_like(Rational::from(row[0])) + &y.scale(&Rational::from(row[1]));
                if k == deg && c.is_zero() {
                    c = ring.one_like();
                }
                p = &p + &(&c * &x.pow(k as u32));
            }
            p
        })
    })
}

pub fn resultant_symmetry(f: &MultiPoly, g: &MultiPoly) -> Result<(), TestCaseError> {
    let (m, n) = (f.degree_in(0), g.degree_in(0));
    let fg = resultant_in(f, g, 0).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let gf = resultant_in(g, f, 0).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(fg, gf.scale(&Rational::sign_power((m * n) as i64)));
    Ok(())
}

pub fn resultant_multiplicativity(f: &MultiPoly, g: &MultiPoly, h: &MultiPoly) -> Result<(), TestCaseError> {
    let res = |a: &MultiPoly, b: &MultiPoly| resultant_in(a, b, 0).map_err(|e| TestCaseError::fail(e.to_string()));
    prop_assert_eq!(res(&(f * g), h)?, &res(f, h)? * &res(g, h)?);
    Ok(())
}

pub fn squarefree_idempotent(f: &MultiPoly) -> Result<(), TestCaseError> {
    let sf = |p: &MultiPoly| squarefree_part(p).map_err(|e| TestCaseError::fail(e.to_string()));
    let once = sf(f)?;
    prop_assert!(sf(&once)?.is_proportional_to(&once));
    prop_assert!(sf(&(f * f))?.is_proportional_to(&once));
    Ok(())
}

/// Random valid package in `P^n` of the given dimension.
pub fn package_strategy(n: i64, dim: i64, label: &'static str) -> impl Strategy<Value = VarietyInvariants> {
    let codim = n - dim;
    (1i64..=6, prop::collection::vec(-20i64..=20, dim as usize)).prop_map(move |(degree, rest)| {
        let mut slices = vec![0; codim as usize];
        slices.push(degree);
        slices.extend(rest);
        let c0m = slices[n as usize];
        package(label, n, dim, degree, c0m, &slices)
    })
}

/// Four packages `S1, S2, D1, D2` in a common `P^n`.
pub fn package_quad() -> impl Strategy<Value = [VarietyInvariants; 4]> {
    (2i64..7, prop::array::uniform4(0i64..6)).prop_flat_map(|(n, dims)| {
        let dims = dims.map(|d| d % n);
        (
            package_strategy(n, dims[0], "S1"),
            package_strategy(n, dims[1], "S2"),
            package_strategy(n, dims[2], "D1"),
            package_strategy(n, dims[3], "D2"),
        )
            .prop_map(|(a, b, c, d)| [a, b, c, d])
    })
}

/// The conormal and intro evaluators agree: the conormal sides are the
/// intro brackets times `(-1)^(dim1+dim2-n)`, so the verdicts coincide.
pub fn forms_agree(
    s1: &VarietyInvariants,
    s2: &VarietyInvariants,
    d1: &VarietyInvariants,
    d2: &VarietyInvariants,
    chi_s: i64,
    chi_d: i64,
) -> Result<(), TestCaseError> {
    let n = s1.n;
    let chi_s = if s1.dim + s2.dim < n { 0 } else { chi_s };
    let chi_d = if d1.dim + d2.dim < n { 0 } else { chi_d };
    let (cs, cd) = (Rational::from(chi_s), Rational::from(chi_d));
    let run = |form| check_identity(s1, s2, d1, d2, &cs, &cd, form).map_err(|e| TestCaseError::fail(e.to_string()));
    let conormal = run(IdentityForm::Conormal)?;
    let intro = run(IdentityForm::Intro)?;
    prop_assert_eq!(conormal.holds, intro.holds);
    let bracket = |a: &VarietyInvariants, b: &VarietyInvariants, chi: &Rational| {
        Rational::sign_power(a.dim + b.dim - n) * (chi - &(Rational::from(a.c0m * b.c0m) / Rational::from(n + 1)))
    };
    prop_assert_eq!(&conormal.lhs, &bracket(s1, s2, &cs));
    prop_assert_eq!(&conormal.rhs, &bracket(d1, d2, &cd));
    Ok(())
}

/// Curves with rational singular points, used for chart independence.
pub const SINGULAR_SAMPLES: [&str; 5] = [NODAL, CUSP, TRICUSPIDAL, "y^2*z^2 - x^4 - x^3*z", "x^3 - 3*x*y*z + y^3"];

/// Unimodular integer matrices: a product of elementary operations.
pub fn unimodular() -> impl Strategy<Value = Projectivity> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..5).prop_map(|ops| {
        let mut m = Projectivity::identity();
        for (i, j, a) in ops {
            if i == j {
                continue;
            }
            let mut e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
            e[i][j] = a;
            m = m.compose(&Projectivity::from_integers(e));
        }
        m
    })
}

/// Singular points of `F(M X)` are the `M^-1` images of those of `F`.
pub fn chart_independent(text: &str, m: &Projectivity) -> Result<(), TestCaseError> {
    let c = curve(text);
    let fail = |e: dualis::Error| TestCaseError::fail(e.to_string());
    let inv = m.inverse().expect("unimodular");
    let mut expected: Vec<(ProjPoint, _)> = singular_points(&c)
        .map_err(fail)?
        .into_iter()
        .map(|s| (inv.map_point(&s.point), s.kind))
        .collect();
    let mut got: Vec<(ProjPoint, _)> = singular_points(&c.transform(m))
        .map_err(fail)?
        .into_iter()
        .map(|s| (s.point, s.kind))
        .collect();
    expected.sort_by_key(|(p, _)| p.to_string());
    got.sort_by_key(|(p, _)| p.to_string());
    prop_assert_eq!(got, expected);
    Ok(())
}
