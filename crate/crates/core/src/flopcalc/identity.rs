//! The flop identity for a pair of subvarieties and their duals, and its
//! quadric specialization.

use serde::{Deserialize, Serialize};

use super::{ConormalNumbers, VarietyInvariants};
use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityForm {
    /// Conormal intersection numbers with the flop defect on both sides.
    Conormal,
    /// Signed Euler characteristics with the `c0m` products over `n + 1`.
    Intro,
    /// Pairing against a smooth quadric hypersurface.
    Quadric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlopCheckReport {
    pub form: IdentityForm,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    pub inputs: Vec<String>,
}

impl FlopCheckReport {
    fn new(form: IdentityForm, lhs: Rational, rhs: Rational, inputs: Vec<String>) -> Self {
        let holds = lhs == rhs;
        FlopCheckReport { form, lhs, rhs, holds, inputs }
    }
}

/// `a b / ((-1)^(n+1) (n+1))`.
pub fn flop_defect(a: i64, b: i64, n: i64) -> Result<Rational> {
    if n < 2 {
        return Err(Error::AmbientTooSmall(n));
    }
    let denom = Rational::sign_power(n + 1) * Rational::from(n + 1);
    Ok(Rational::from(a) * Rational::from(b) / denom)
}

fn require_certified(p: &VarietyInvariants, n: i64) -> Result<()> {
    if p.n != n {
        return Err(Error::AmbientMismatch(n, p.n));
    }
    // the whole space is never transversal to another subvariety in the
    // sense required here
    if !p.transversality_certified || p.dim >= p.n {
        return Err(Error::UncertifiedTransversality(p.label.clone()));
    }
    p.validate()
}

fn echo(packages: &[&VarietyInvariants], extra: &[(&str, &Rational)]) -> Vec<String> {
    packages
        .iter()
        .map(|p| format!("{}: n={} dim={} deg={} c0m={}", p.label, p.n, p.dim, p.degree, p.c0m))
        .chain(extra.iter().map(|(k, v)| format!("{k}={v}")))
        .collect()
}

/// Both sides of the flop identity for `S1, S2` with duals `D1, D2`.
pub fn check_identity(
    s1: &VarietyInvariants,
    s2: &VarietyInvariants,
    d1: &VarietyInvariants,
    d2: &VarietyInvariants,
    chi_s: &Rational,
    chi_d: &Rational,
    form: IdentityForm,
) -> Result<FlopCheckReport> {
    let n = s1.n;
    if n < 2 {
        return Err(Error::AmbientTooSmall(n));
    }
    for p in [s1, s2, d1, d2] {
        require_certified(p, n)?;
    }
    if s1.label == s2.label {
        return Err(Error::UncertifiedTransversality(format!("{} paired with itself", s1.label)));
    }
    let (lhs, rhs) = match form {
        IdentityForm::Conormal => {
            let side = |a: &VarietyInvariants, b: &VarietyInvariants, chi: &Rational| -> Result<Rational> {
                let pair = ConormalNumbers::pairing(a.dim, b.dim, n, chi);
                let defect = flop_defect(ConormalNumbers::of(a).cs_dot_pn, ConormalNumbers::of(b).cs_dot_pn, n)?;
                Ok(pair + defect)
            };
            (side(s1, s2, chi_s)?, side(d1, d2, chi_d)?)
        }
        IdentityForm::Intro => {
            let bracket = |a: &VarietyInvariants, b: &VarietyInvariants, chi: &Rational| {
                chi - &(Rational::from(a.c0m * b.c0m) / Rational::from(n + 1))
            };
            let star = s1.dim + s2.dim + d1.dim + d2.dim;
            (Rational::sign_power(star) * bracket(s1, s2, chi_s), bracket(d1, d2, chi_d))
        }
        IdentityForm::Quadric => {
            return Err(Error::InvalidParams("use quadric_pair_check for the quadric form".into()));
        }
    };
    Ok(FlopCheckReport::new(
        form,
        lhs,
        rhs,
        echo(&[s1, s2, d1, d2], &[("chi(S1∩S2)", chi_s), ("chi(D1∩D2)", chi_d)]),
    ))
}

/// The identity paired against a smooth quadric `Q`, whose dual is again a
/// smooth quadric.
pub fn quadric_pair_check(
    s: &VarietyInvariants,
    sd: &VarietyInvariants,
    chi_s_cap_q: &Rational,
    chi_sd_cap_qd: &Rational,
) -> Result<FlopCheckReport> {
    let n = s.n;
    if n < 2 {
        return Err(Error::AmbientTooSmall(n));
    }
    require_certified(s, n)?;
    require_certified(sd, n)?;
    let weight = Rational::one()
        - Rational::from(1 + super::sign(n)) / Rational::from(2 * (n + 1));
    let lhs = chi_s_cap_q - &(&weight * &Rational::from(s.c0m));
    let rhs = Rational::sign_power(s.dim + sd.dim)
        * (chi_sd_cap_qd - &(&weight * &Rational::from(sd.c0m)));
    Ok(FlopCheckReport::new(
        IdentityForm::Quadric,
        lhs,
        rhs,
        echo(&[s, sd], &[("chi(S∩Q)", chi_s_cap_q), ("chi(S'∩Q')", chi_sd_cap_qd)]),
    ))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn defect_values() {
        assert_eq!(flop_defect(-2, -2, 2).unwrap(), r(-4, 3));
        assert_eq!(flop_defect(0, 7, 5).unwrap(), r(0, 1));
        assert_eq!(flop_defect(1, 1, 1), Err(Error::AmbientTooSmall(1)));
        // Beauville-Donagi dual side: 15 * 9 / -15
        assert_eq!(flop_defect(15, 9, 14).unwrap(), r(-9, 1));
    }

    #[test]
    fn two_lines_both_forms() {
        let (l1, l2, p1, p2) = (line("L1"), line("L2"), point("p1"), point("p2"));
        for form in [IdentityForm::Conormal, IdentityForm::Intro] {
            let rep = check_identity(&l1, &l2, &p1, &p2, &r(1, 1), &r(0, 1), form).unwrap();
            assert_eq!(rep.lhs, r(-1, 3));
            assert_eq!(rep.rhs, r(-1, 3));
            assert!(rep.holds);
        }
    }

    #[test]
    fn line_and_conic_intro_form() {
        let rep = check_identity(
            &line("L"),
            &conic("C"),
            &point("p"),
            &conic("C*"),
            &r(2, 1),
            &r(0, 1),
            IdentityForm::Intro,
        )
        .unwrap();
        assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (r(-2, 3), r(-2, 3)));
    }

    #[test]
    fn precondition_errors() {
        let l = line("L");
        let whole = package("P2", 2, 2, 1, 3, &[0, 1, 3]);
        assert!(matches!(
            check_identity(&whole, &whole, &point("a"), &point("b"), &r(3, 1), &r(0, 1), IdentityForm::Conormal),
            Err(Error::UncertifiedTransversality(_))
        ));
        assert!(matches!(
            check_identity(&l, &l, &point("a"), &point("a"), &r(2, 1), &r(1, 1), IdentityForm::Conormal),
            Err(Error::UncertifiedTransversality(_))
        ));
        let mut uncertified = line("M");
        uncertified.transversality_certified = false;
        assert!(matches!(
            check_identity(&l, &uncertified, &point("a"), &point("b"), &r(1, 1), &r(0, 1), IdentityForm::Intro),
            Err(Error::UncertifiedTransversality(_))
        ));
        let far = package("P3line", 3, 1, 1, 2, &[0, 0, 1, 2]);
        assert_eq!(
            check_identity(&l, &far, &point("a"), &point("b"), &r(1, 1), &r(0, 1), IdentityForm::Intro),
            Err(Error::AmbientMismatch(2, 3))
        );
    }

    #[test]
    fn quadric_pairs() {
        let rep = quadric_pair_check(&line("L"), &point("p"), &r(2, 1), &r(0, 1)).unwrap();
        assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (r(2, 3), r(2, 3)));
        let rep = quadric_pair_check(&conic("C"), &conic("C*"), &r(4, 1), &r(4, 1)).unwrap();
        assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (r(8, 3), r(8, 3)));
    }

    #[test]
    fn quadric_formula_from_hyperplane_pair() {
        // S1 = P^{n-1}, S2 = Q_{n-1}: solving the identity for chi(Q ∩ P^{n-1})
        // gives the Euler characteristic of a quadric of dimension n - 2.
        for n in 3..10i64 {
            let q_dim = n - 1;
            let chi_q = |m: i64| m + 1 + (1 + super::super::sign(m)) / 2;
            let hyper = package("H", n, n - 1, 1, n, &(0..=n).map(|j| j.max(0)).collect::<Vec<_>>());
            let mut quad_slices = vec![0];
            quad_slices.extend((1..=n).map(|j| if j == 1 { 2 } else { chi_q(j - 1) }));
            let quad = package("Q", n, q_dim, 2, chi_q(q_dim), &quad_slices);
            let point = {
                let mut s = vec![0; n as usize];
                s.push(1);
                package("h", n, 0, 1, 1, &s)
            };
            let mut dual_q = quad.clone();
            dual_q.label = "Q*".into();
            // the dual point misses the dual quadric
            let rep = check_identity(
                &hyper,
                &quad,
                &point,
                &dual_q,
                &Rational::from(chi_q(n - 2)),
                &Rational::zero(),
                IdentityForm::Conormal,
            )
            .unwrap();
            assert!(rep.holds, "n = {n}");
        }
    }
}
