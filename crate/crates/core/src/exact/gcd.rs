//! Polynomial gcd over Q[x1, ..., xn] by recursive primitive remainder
//! sequences, and square-free parts built on it.

use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Greatest common divisor, normalized by [`MultiPoly::primitive`].
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return a.one_like();
    }
    let var = match (0..a.nvars()).find(|&v| a.uses_var(v) && b.uses_var(v)) {
        Some(v) => v,
        None => {
            // No shared variable: only the contents can have common factors.
            let v = (0..a.nvars()).find(|&v| a.uses_var(v)).expect("non-constant");
            return gcd(&content(a, v), b);
        }
    };
    let (ca, pa) = split_content(a, var);
    let (cb, pb) = split_content(b, var);
    let c = gcd(&ca, &cb);
    let g = primitive_prs(pa, pb, var);
    (&c * &g).primitive()
}

/// Gcd of a whole list; the empty list gives zero.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a MultiPoly>>(polys: I, zero: &MultiPoly) -> MultiPoly {
    let mut acc = zero.clone();
    for p in polys {
        acc = gcd(&acc, p);
        if !acc.is_zero() && acc.is_constant() {
            break;
        }
    }
    acc
}

/// Gcd of the coefficients of `p` viewed as univariate in `var`.
pub fn content(p: &MultiPoly, var: usize) -> MultiPoly {
    let coeffs = p.coefficients_in(var);
    if coeffs.iter().any(|c| !c.is_zero() && c.is_constant()) {
        return p.one_like();
    }
    gcd_all(coeffs.iter().filter(|c| !c.is_zero()), &p.zero_like())
}

fn split_content(p: &MultiPoly, var: usize) -> (MultiPoly, MultiPoly) {
    let c = content(p, var);
    let pp = p.div_exact(&c).expect("content divides");
    (c, pp)
}

/// Primitive part in `var`, with the numeric content removed as well so
/// that remainder sequences do not grow.
fn primitive_part(p: &MultiPoly, var: usize) -> MultiPoly {
    split_content(p, var).1.primitive()
}

/// Pseudo-remainder of `a` by `b` in `var`.
pub fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let db = b.degree_in(var);
    let lb = b.coefficients_in(var).pop().expect("nonzero divisor");
    let x = a.var_like(var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.coefficients_in(var).pop().expect("nonzero");
        let shift = x.pow(dr - db);
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

fn primitive_prs(a: MultiPoly, b: MultiPoly, var: usize) -> MultiPoly {
    let (mut r0, mut r1) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        if r1.degree_in(var) == 0 {
            return r1.one_like();
        }
        let r = pseudo_remainder(&r0, &r1, var);
        if r.is_zero() {
            return primitive_part(&r1, var);
        }
        r0 = r1;
        r1 = primitive_part(&r, var);
    }
}

/// Square-free part `f / gcd(f, df/dx1, ..., df/dxn)`, made primitive with a
/// positive leading coefficient. For a univariate polynomial this is
/// `f / gcd(f, f')`.
pub fn squarefree_part(f: &MultiPoly) -> Result<MultiPoly> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if f.is_constant() {
        return Ok(f.one_like());
    }
    let mut g = f.clone();
    for v in 0..f.nvars() {
        if f.uses_var(v) {
            g = gcd(&g, &f.derivative(v));
            if g.is_constant() {
                break;
            }
        }
    }
    Ok(f.div_exact(&g).expect("gcd divides f").primitive())
}

/// Whether `f` has no repeated non-constant factor.
pub fn is_squarefree(f: &MultiPoly) -> bool {
    match squarefree_part(f) {
        Ok(s) => s.total_degree() == f.total_degree(),
        Err(_) => false,
    }
}
