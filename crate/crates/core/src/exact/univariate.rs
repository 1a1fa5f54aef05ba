//! Dense univariate polynomials over Q: Euclidean gcd, square-free parts,
//! and exact rational root finding by Sturm-sequence isolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;

/// Coefficients low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from(k as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        UniPoly(self.0.iter().map(|c| c / &lc).collect())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UniPoly::new(vec![]), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                let t = &c * dc;
                r[k - dd + j] -= &t;
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Monic square-free part.
    pub fn squarefree(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UniPoly::new(vec![Rational::one()]);
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> usize {
        self.squarefree().degree().unwrap_or(0)
    }

    /// Integer multiple with coprime integer coefficients.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.0 {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.0.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// All distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let mut roots = Vec::new();
        // Pull out the root at zero so the remaining constant term is nonzero.
        let mut f = self.squarefree();
        if f.0[0].is_zero() {
            roots.push(Rational::zero());
            f = UniPoly::new(f.0[1..].to_vec());
        }
        if f.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let ints = UniPoly::new(f.integer_coefficients().into_iter().map(Rational::from).collect());
        let lead = ints.leading().abs();
        let sturm = sturm_sequence(&ints);
        let bound = root_bound(&ints);
        // A rational root p/q has q | lead, so lead * root is an integer and
        // isolating intervals narrower than 1/lead contain at most one
        // candidate per root.
        let width_target = Rational::one() / lead.clone();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &hi);
            if count == 0 {
                continue;
            }
            if count == 1 && &hi - &lo < width_target {
                for m in integer_range(&(&lo * &lead), &(&hi * &lead)) {
                    let cand = Rational::from(m) / lead.clone();
                    if cand > lo && cand <= hi && ints.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
                continue;
            }
            let mid = (&lo + &hi) / Rational::from(2);
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

fn integer_range(lo: &Rational, hi: &Rational) -> impl Iterator<Item = BigInt> {
    let start = lo.floor();
    let end = hi.floor() + BigInt::one();
    num_iter_range(start, end)
}

fn num_iter_range(start: BigInt, end: BigInt) -> impl Iterator<Item = BigInt> {
    let mut cur = start;
    std::iter::from_fn(move || {
        if cur > end {
            None
        } else {
            let out = cur.clone();
            cur += 1;
            Some(out)
        }
    })
}

fn sturm_sequence(f: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(UniPoly::new(r.0.iter().map(|c| -c).collect()));
    }
    seq
}

/// Sign changes of the Sturm sequence at `x`, evaluating in (x, x + eps) at
/// zeros so that half-open intervals `(lo, hi]` count correctly.
fn sign_changes(seq: &[UniPoly], x: &Rational) -> i64 {
    let mut last = 0i32;
    let mut changes = 0;
    for p in seq {
        let s = p.eval(x).signum();
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Cauchy bound: every root has absolute value below it.
fn root_bound(f: &UniPoly) -> Rational {
    let lc = f.leading().abs();
    let max = f.0.iter().map(|c| c.abs() / lc.clone()).max().unwrap_or_else(Rational::zero);
    max + Rational::from(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let f = up(&[2, -3, 0, 1]);
        assert_eq!(f.squarefree(), up(&[-2, 1, 1]));
        assert_eq!(f.gcd(&up(&[-1, 1])), up(&[-1, 1]));
        assert_eq!(f.distinct_root_count(), 2);
    }

    #[test]
    fn rational_roots_mixed() {
        // (2x - 3)(x + 5)(x^2 + 1)(3x)
        let f = up(&[0, -45, 21, -39, 21, 6]);
        let check: Vec<Rational> = [r(-5, 1), r(0, 1), r(3, 2)].into();
        assert_eq!(f.rational_roots(), check);
        assert!(up(&[-2, 0, 1]).rational_roots().is_empty());
        assert!(up(&[7]).rational_roots().is_empty());
    }

    #[test]
    fn rational_roots_close_together() {
        // (100x - 1)(101x - 1)
        let f = up(&[1, -201, 10100]);
        assert_eq!(f.rational_roots(), vec![r(1, 101), r(1, 100)]);
    }

    #[test]
    fn rational_roots_with_repeats() {
        // (x - 4)^3 (x + 1/3)
        let mut f = up(&[1]);
        for _ in 0..3 {
            f = mul(&f, &up(&[-4, 1]));
        }
        f = mul(&f, &UniPoly::new(vec![r(1, 3), r(1, 1)]));
        assert_eq!(f.rational_roots(), vec![r(-1, 3), r(4, 1)]);
    }

    fn mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut out = vec![Rational::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        UniPoly::new(out)
    }
}
