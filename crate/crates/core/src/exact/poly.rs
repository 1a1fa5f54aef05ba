//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a map keyed by exponent vectors ordered graded
//! lexicographically, so two equal polynomials always have the same
//! representation and print the same way.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divide(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in an ordered list of named variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self::zero_in(Arc::new(vars.iter().map(|s| s.to_string()).collect()))
    }

    pub(crate) fn zero_in(vars: Arc<Vec<String>>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// The zero polynomial in the same ring as `self`.
    pub fn zero_like(&self) -> Self {
        Self::zero_in(self.vars.clone())
    }

    pub fn constant_like(&self, c: Rational) -> Self {
        let mut p = self.zero_like();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(self.nvars()), c);
        }
        p
    }

    pub fn one_like(&self) -> Self {
        self.constant_like(Rational::one())
    }

    /// The `i`-th ring variable as a polynomial.
    pub fn var_like(&self, i: usize) -> Self {
        let mut exps = vec![0; self.nvars()];
        exps[i] = 1;
        self.monomial_like(Monomial(exps), Rational::one())
    }

    pub fn monomial_like(&self, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), self.nvars());
        let mut p = self.zero_like();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(Monomial(e), &c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn same_ring(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_ring(&self, other: &MultiPoly) {
        assert!(
            self.same_ring(other),
            "polynomial ring mismatch: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.nvars()])
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return self.zero_like();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut result = self.one_like();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut n = m.clone();
            n.0[var] -= 1;
            out.add_term(n, &(c * &Rational::from(e as i64)));
        }
        out
    }

    /// Substitutes a value for one variable; the ring is unchanged.
    pub fn evaluate_var(&self, var: usize, value: &Rational) -> MultiPoly {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut n = m.clone();
            n.0[var] = 0;
            out.add_term(n, &(c * &value.pow(e)));
        }
        out
    }

    /// Evaluates at a full point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * x.pow(e))
            })
            .sum()
    }

    /// Replaces variable `i` by `images[i]`; the result lives in the ring of
    /// the images.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars());
        let target = images[0].zero_like();
        for img in images {
            target.check_ring(img);
        }
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![p.one_like()]).collect();
        let mut out = target;
        for (m, c) in &self.terms {
            let mut term = out.constant_like(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Same exponents, new variable names.
    pub fn rename(&self, names: &[&str]) -> MultiPoly {
        assert_eq!(names.len(), self.nvars());
        MultiPoly {
            vars: Arc::new(names.iter().map(|s| s.to_string()).collect()),
            terms: self.terms.clone(),
        }
    }

    /// Moves the polynomial into a ring with more (or reordered) variables.
    /// Every used variable must exist in `names`.
    pub fn embed(&self, names: &[&str]) -> Option<MultiPoly> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| names.iter().position(|n| n == v))
            .collect::<Option<_>>()?;
        let mut out = MultiPoly::zero(names);
        for (m, c) in &self.terms {
            let mut e = vec![0; names.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial(e), c);
        }
        Some(out)
    }

    /// Restricts to a subset of variables, failing if a dropped variable is used.
    pub fn restrict(&self, names: &[&str]) -> Option<MultiPoly> {
        let keep: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| names.iter().position(|n| n == v))
            .collect();
        let mut out = MultiPoly::zero(names);
        for (m, c) in &self.terms {
            let mut e = vec![0; names.len()];
            for (i, &k) in m.0.iter().enumerate() {
                match keep[i] {
                    Some(j) => e[j] = k,
                    None if k == 0 => {}
                    None => return None,
                }
            }
            out.add_term(Monomial(e), c);
        }
        Some(out)
    }

    /// Coefficients with respect to one variable: entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![self.zero_like(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut n = m.clone();
            n.0[var] = 0;
            out[k].terms.insert(n, c.clone());
        }
        out
    }

    /// Homogeneous component of total degree `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lowest total degree among the terms.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.check_ring(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        if divisor.terms.len() == 1 {
            let mut q = self.zero_like();
            for (m, c) in &self.terms {
                q.terms.insert(m.divide(&lm)?, c / &lc);
            }
            return Some(q);
        }
        let mut rem = self.clone();
        let mut quotient = self.zero_like();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.divide(&lm)?;
            let qc = c / &lc;
            let step = divisor.mul_term(&qm, &qc);
            rem = &rem - &step;
            quotient.add_term(qm, &qc);
        }
        Some(quotient)
    }

    pub fn is_divisible_by(&self, divisor: &MultiPoly) -> bool {
        self.div_exact(divisor).is_some()
    }

    /// Divides out `factor` as often as possible; returns the cofactor and
    /// the multiplicity removed.
    pub fn strip_factor(&self, factor: &MultiPoly) -> (MultiPoly, u32) {
        let mut current = self.clone();
        let mut count = 0;
        if factor.is_constant() || self.is_zero() {
            return (current, 0);
        }
        while let Some(q) = current.div_exact(factor) {
            current = q;
            count += 1;
        }
        (current, count)
    }

    /// Positive rational multiple with coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&lcm / c.denom());
            g = g.gcd(&n);
        }
        let mut scale = Rational::new(lcm, g).expect("nonzero content");
        if self.leading_coefficient().is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Whether `self = c * other` for some nonzero rational `c`.
    pub fn is_proportional_to(&self, other: &MultiPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.same_ring(other) && self.monic() == other.monic()
    }

    /// Dense coefficient list (low degree first) when only `var` is used.
    pub fn to_dense(&self, var: usize) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            out[m.0[var] as usize] = c.clone();
        }
        if self.is_zero() {
            out.clear();
        }
        Some(out)
    }

    pub fn from_dense(&self, var: usize, coeffs: &[Rational]) -> MultiPoly {
        let mut out = self.zero_like();
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; self.nvars()];
            e[var] = k as u32;
            out.add_term(Monomial(e), c);
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.vars.join(","))
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.zero_like();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), &(a * b));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &XYZ).unwrap()
    }

    #[test]
    fn grlex_order_puts_higher_degree_last() {
        let a = Monomial(vec![0, 0, 2]);
        let b = Monomial(vec![1, 0, 0]);
        let c = Monomial(vec![0, 1, 1]);
        let d = Monomial(vec![1, 0, 1]);
        assert!(b < a);
        assert!(c < d);
    }

    #[test]
    fn arithmetic_and_printing() {
        let f = p("x + y");
        let g = p("x - y");
        assert_eq!((&f * &g).to_string(), "x^2 - y^2");
        assert_eq!((&f - &f).to_string(), "0");
        assert_eq!(p("2*x*y - 1/2*z^3").to_string(), "-1/2*z^3 + 2*x*y");
    }

    #[test]
    fn exact_division() {
        let f = p("x^3 - y^3");
        let g = p("x - y");
        assert_eq!(f.div_exact(&g).unwrap(), p("x^2 + x*y + y^2"));
        assert!(p("x^2 + 1").div_exact(&g).is_none());
        let (rest, k) = p("x^3*z^2 + x*z^4").strip_factor(&p("z"));
        assert_eq!((rest, k), (p("x^3 + x*z^2"), 2));
    }

    #[test]
    fn substitution_and_derivative() {
        let f = p("x^2*y + z");
        let images = [p("y"), p("x + z"), p("1")];
        assert_eq!(f.substitute(&images), p("x*y^2 + y^2*z + 1"));
        assert_eq!(f.derivative(0), p("2*x*y"));
        assert_eq!(f.evaluate_var(1, &Rational::from(3)), p("3*x^2 + z"));
    }

    #[test]
    fn primitive_normalization() {
        let f = p("-3/2*x^2 + 9/4*y");
        assert_eq!(f.primitive(), p("2*x^2 - 3*y"));
        assert!(f.is_proportional_to(&p("4*x^2 - 6*y")));
    }

    #[test]
    fn coefficient_split_round_trips() {
        let f = p("x^2*y + 3*x*z - y^2 + 4");
        let coeffs = f.coefficients_in(0);
        assert_eq!(coeffs.len(), 3);
        let x = f.var_like(0);
        let rebuilt = coeffs
            .iter()
            .enumerate()
            .fold(f.zero_like(), |acc, (k, c)| &acc + &(c * &x.pow(k as u32)));
        assert_eq!(rebuilt, f);
    }
}
