//! Projective coordinate changes and the deterministic chart schedule.

use crate::exact::{MultiPoly, Rational, UniPoly};

use super::point::ProjPoint;

/// An invertible 3x3 rational matrix acting on homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projectivity {
    m: [[Rational; 3]; 3],
}

impl Projectivity {
    pub fn identity() -> Self {
        Self::from_integers([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn from_integers(rows: [[i64; 3]; 3]) -> Self {
        Projectivity {
            m: rows.map(|row| row.map(Rational::from)),
        }
    }

    pub fn from_columns(cols: [[Rational; 3]; 3]) -> Self {
        let mut m: [[Rational; 3]; 3] = Default::default();
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[i][j] = v.clone();
            }
        }
        Projectivity { m }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.m[i][j]
    }

    pub fn determinant(&self) -> Rational {
        let m = &self.m;
        &m[0][0] * &(&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * &(&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * &(&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn transpose(&self) -> Self {
        let mut m: [[Rational; 3]; 3] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.m[j][i].clone();
            }
        }
        Projectivity { m }
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.determinant();
        if det.is_zero() {
            return None;
        }
        let m = &self.m;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        // adjugate / det
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Some(Projectivity {
            m: adj.map(|row| row.map(|v| &v / &det)),
        })
    }

    pub fn compose(&self, other: &Projectivity) -> Projectivity {
        let mut m: [[Rational; 3]; 3] = Default::default();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| &self.m[i][k] * &other.m[k][j]).sum();
            }
        }
        Projectivity { m }
    }

    /// `F(X) -> F(M X)` for a form in three variables.
    pub fn pull_back(&self, form: &MultiPoly) -> MultiPoly {
        let vars: Vec<MultiPoly> = (0..3).map(|i| form.var_like(i)).collect();
        let images: Vec<MultiPoly> = (0..3)
            .map(|i| {
                (0..3).fold(form.zero_like(), |acc, j| {
                    &acc + &vars[j].scale(&self.m[i][j])
                })
            })
            .collect();
        form.substitute(&images)
    }

    pub fn apply(&self, p: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|i| (0..3).map(|j| &self.m[i][j] * &p[j]).sum())
    }

    pub fn map_point(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::from_rationals(&self.apply(&p.to_rationals())).expect("invertible map")
    }
}

/// Number of charts in the deterministic schedule.
pub const CHART_COUNT: usize = 24;

fn small_param(k: usize, salt: u64) -> i64 {
    let h = (k as u64)
        .wrapping_mul(2_654_435_761)
        .wrapping_add(salt.wrapping_mul(40_503))
        .rotate_left(17)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15);
    ((h >> 33) % 7) as i64 - 3
}

/// The `k`-th chart: identity for `k = 0`, otherwise a unimodular product of
/// an upper and a lower unitriangular integer matrix with small entries.
pub fn chart(k: usize) -> Projectivity {
    if k == 0 {
        return Projectivity::identity();
    }
    let [a, b, c, e, f, g] = [1, 2, 3, 4, 5, 6].map(|s| small_param(k, s));
    let upper = Projectivity::from_integers([[1, a, f], [0, 1, g], [0, 0, 1]]);
    let lower = Projectivity::from_integers([[1, 0, 0], [b, 1, 0], [c, e, 1]]);
    upper.compose(&lower)
}

/// Names of the first two variables of a plane form, used for affine charts.
pub(crate) fn chart_ring(form: &MultiPoly) -> [String; 2] {
    [form.vars()[0].clone(), form.vars()[1].clone()]
}

/// Dehomogenizes a form at the third variable.
pub(crate) fn affine(form: &MultiPoly) -> MultiPoly {
    let names = chart_ring(form);
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    form.evaluate_var(2, &Rational::one())
        .restrict(&names)
        .expect("third variable eliminated")
}

/// A polynomial in the first chart variable only, as a dense polynomial.
pub(crate) fn as_unipoly(p: &MultiPoly) -> UniPoly {
    crate::exact::to_unipoly(p, 0).expect("univariate in the first chart variable")
}

/// Whether the form's coefficient of `y^deg` is nonzero, i.e. the
/// projection center `[0:1:0]` is off the curve.
pub(crate) fn center_off_curve(form: &MultiPoly) -> bool {
    let d = form.total_degree();
    !form.coefficient(&[0, d, 0]).is_zero()
}
