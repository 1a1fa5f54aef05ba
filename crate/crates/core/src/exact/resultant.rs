//! Sylvester resultants and discriminants over polynomial coefficient rings.

use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Largest Sylvester matrix the resultant code will build.
pub const SYLVESTER_LIMIT: usize = 64;

/// A polynomial viewed as univariate in one distinguished variable, with
/// coefficients in the remaining ones.
#[derive(Clone, Debug)]
pub struct UniPolyView {
    poly: MultiPoly,
    var: usize,
    coeffs: Vec<MultiPoly>,
}

impl UniPolyView {
    pub fn new(poly: MultiPoly, var: usize) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroInput);
        }
        assert!(var < poly.nvars(), "variable index out of range");
        let coeffs = poly.coefficients_in(var);
        Ok(UniPolyView { poly, var, coeffs })
    }

    pub fn by_name(poly: MultiPoly, name: &str) -> Result<Self> {
        let var = poly
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Self::new(poly, var)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `var^k`; zero above the degree.
    pub fn coefficient(&self, k: usize) -> MultiPoly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.poly.zero_like())
    }

    pub fn leading_coefficient(&self) -> &MultiPoly {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> Option<UniPolyView> {
        UniPolyView::new(self.poly.derivative(self.var), self.var).ok()
    }
}

/// Determinant by fraction-free (Bareiss) elimination; every intermediate
/// division is exact in the polynomial ring.
pub fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>, zero: &MultiPoly) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return zero.one_like();
    }
    let mut negate = false;
    let mut prev = zero.one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return zero.clone(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly");
            }
            m[i][k] = zero.clone();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Sylvester matrix with the `deg g` rows of `f` coefficients first.
pub fn sylvester_matrix(f: &UniPolyView, g: &UniPolyView) -> Result<Vec<Vec<MultiPoly>>> {
    if f.var != g.var || !f.poly.same_ring(&g.poly) {
        return Err(Error::SharedVariableMismatch);
    }
    let (m, n) = (f.degree(), g.degree());
    let size = m + n;
    if size > SYLVESTER_LIMIT {
        return Err(Error::DegreeGuardrail {
            size,
            limit: SYLVESTER_LIMIT,
        });
    }
    let zero = f.poly.zero_like();
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![zero.clone(); size];
        for k in 0..=m {
            row[shift + k] = f.coefficient(m - k);
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![zero.clone(); size];
        for k in 0..=n {
            row[shift + k] = g.coefficient(n - k);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `Res(f, g)` in the shared distinguished variable. The result lives in the
/// same ring and no longer involves that variable.
pub fn resultant(f: &UniPolyView, g: &UniPolyView) -> Result<MultiPoly> {
    if f.var != g.var || !f.poly.same_ring(&g.poly) {
        return Err(Error::SharedVariableMismatch);
    }
    match (f.degree(), g.degree()) {
        (0, 0) => Err(Error::DegenerateInput),
        (0, n) => Ok(f.leading_coefficient().pow(n as u32)),
        (m, 0) => Ok(g.leading_coefficient().pow(m as u32)),
        _ => {
            let matrix = sylvester_matrix(f, g)?;
            Ok(bareiss_determinant(matrix, &f.poly.zero_like()))
        }
    }
}

/// Convenience wrapper eliminating the named variable.
pub fn resultant_in(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly> {
    resultant(
        &UniPolyView::new(f.clone(), var)?,
        &UniPolyView::new(g.clone(), var)?,
    )
}

/// `(-1)^(d(d-1)/2) Res(f, f') / lc(f)` for `d = deg f >= 2`.
pub fn discriminant(f: &UniPolyView) -> Result<MultiPoly> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::DegreeTooLow {
            found: d,
            required: 2,
        });
    }
    let df = f.derivative().expect("degree >= 2 has a nonzero derivative");
    let res = resultant(f, &df)?;
    let quotient = res
        .div_exact(f.leading_coefficient())
        .expect("leading coefficient divides Res(f, f')");
    let sign = Rational::sign_power((d * (d - 1) / 2) as i64);
    Ok(quotient.scale(&sign))
}
