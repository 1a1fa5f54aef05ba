//! Solving an identity for a single unknown field.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::identity::IdentityForm;
use super::ConormalNumbers;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// A field of an identity: a known value or the unknown, written `"?"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot {
    Known(Rational),
    Unknown,
}

impl From<i64> for Slot {
    fn from(v: i64) -> Self {
        Slot::Known(Rational::from(v))
    }
}

impl Serialize for Slot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Slot::Known(v) => v.serialize(serializer),
            Slot::Unknown => serializer.serialize_str("?"),
        }
    }
}

impl<'de> Deserialize<'de> for Slot {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(Slot::from(v)),
            Raw::Text(s) if s.trim() == "?" => Ok(Slot::Unknown),
            Raw::Text(s) => s.parse().map(Slot::Known).map_err(serde::de::Error::custom),
        }
    }
}

/// Identities that can be solved for one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "identity", rename_all = "snake_case", deny_unknown_fields)]
pub enum Identity {
    /// The flop identity; `dims` and `c0m` list `S1, S2, S1∨, S2∨`.
    Flop {
        n: i64,
        form: IdentityForm,
        dims: [i64; 4],
        chi_s: Slot,
        chi_d: Slot,
        c0m: [Slot; 4],
    },
    /// Pairing with a smooth quadric.
    Quadric {
        n: i64,
        dim_s: i64,
        dim_d: i64,
        chi_s_cap_q: Slot,
        c0m_s: Slot,
        chi_d_cap_qd: Slot,
        c0m_d: Slot,
    },
    /// `(n+1)(chi(C) - chi(C∨)) = (C·P^n)^2 - (C∨·P^n*)^2` for a Lagrangian
    /// `C` in a hyper-Kähler manifold.
    HyperKahler {
        n: i64,
        chi_c: Slot,
        chi_c_dual: Slot,
        c_dot_pn: Slot,
        c_dual_dot_pn: Slot,
    },
}

impl Identity {
    fn slots(&self) -> Vec<&Slot> {
        match self {
            Identity::Flop { chi_s, chi_d, c0m, .. } => {
                let mut v = vec![chi_s, chi_d];
                v.extend(c0m.iter());
                v
            }
            Identity::Quadric { chi_s_cap_q, c0m_s, chi_d_cap_qd, c0m_d, .. } => {
                vec![chi_s_cap_q, c0m_s, chi_d_cap_qd, c0m_d]
            }
            Identity::HyperKahler { chi_c, chi_c_dual, c_dot_pn, c_dual_dot_pn, .. } => {
                vec![chi_c, chi_c_dual, c_dot_pn, c_dual_dot_pn]
            }
        }
    }

    fn ambient(&self) -> i64 {
        match self {
            Identity::Flop { n, .. } | Identity::Quadric { n, .. } | Identity::HyperKahler { n, .. } => *n,
        }
    }

    /// `lhs - rhs` with the unknown set to `x`.
    fn residual(&self, x: &Rational) -> Result<Rational> {
        let val = |s: &Slot| match s {
            Slot::Known(v) => v.clone(),
            Slot::Unknown => x.clone(),
        };
        let n = self.ambient();
        if n < 2 {
            return Err(Error::AmbientTooSmall(n));
        }
        let n1 = Rational::from(n + 1);
        Ok(match self {
            Identity::Flop { form, dims, chi_s, chi_d, c0m, .. } => {
                let c: Vec<Rational> = c0m.iter().map(val).collect();
                match form {
                    IdentityForm::Conormal => {
                        let side = |i: usize, chi: &Rational| {
                            let a = &c[i] * &Rational::sign_power(dims[i]);
                            let b = &c[i + 1] * &Rational::sign_power(dims[i + 1]);
                            ConormalNumbers::pairing(dims[i], dims[i + 1], n, chi)
                                + a * b / (Rational::sign_power(n + 1) * n1.clone())
                        };
                        side(0, &val(chi_s)) - side(2, &val(chi_d))
                    }
                    IdentityForm::Intro => {
                        let star: i64 = dims.iter().sum();
                        let lhs = Rational::sign_power(star) * (val(chi_s) - &c[0] * &c[1] / n1.clone());
                        lhs - (val(chi_d) - &c[2] * &c[3] / n1)
                    }
                    IdentityForm::Quadric => {
                        return Err(Error::InvalidParams("flop identity needs conormal or intro form".into()))
                    }
                }
            }
            Identity::Quadric { dim_s, dim_d, chi_s_cap_q, c0m_s, chi_d_cap_qd, c0m_d, .. } => {
                let weight = Rational::one() - Rational::from(1 + super::sign(n)) / Rational::from(2 * (n + 1));
                let lhs = val(chi_s_cap_q) - &weight * &val(c0m_s);
                let rhs = Rational::sign_power(dim_s + dim_d) * (val(chi_d_cap_qd) - &weight * &val(c0m_d));
                lhs - rhs
            }
            Identity::HyperKahler { chi_c, chi_c_dual, c_dot_pn, c_dual_dot_pn, .. } => {
                let lhs = n1 * (val(chi_c) - val(chi_c_dual));
                lhs - (val(c_dot_pn).pow(2) - val(c_dual_dot_pn).pow(2))
            }
        })
    }
}

/// The unique value of the unknown making the identity hold.
pub fn solve_unknown(identity: &Identity) -> Result<Rational> {
    match identity.slots().iter().filter(|s| matches!(s, Slot::Unknown)).count() {
        0 => return Err(Error::NoUnknown),
        1 => {}
        _ => return Err(Error::Overdetermined),
    }
    let [r0, r1, r2] = [0, 1, 2].map(|x| identity.residual(&Rational::from(x)));
    let (r0, r1, r2) = (r0?, r1?, r2?);
    let slope = &r1 - &r0;
    if &r2 - &r1 != slope {
        return Err(Error::NonLinear);
    }
    if slope.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    Ok(-r0 / slope)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beauville_donagi(form: IdentityForm) -> Identity {
        Identity::Flop {
            n: 14,
            form,
            dims: [13, 5, 8, 8],
            chi_s: 27.into(),
            chi_d: 24.into(),
            c0m: [Slot::Unknown, 6.into(), 15.into(), 9.into()],
        }
    }

    #[test]
    fn beauville_donagi_gives_thirty() {
        for form in [IdentityForm::Conormal, IdentityForm::Intro] {
            assert_eq!(solve_unknown(&beauville_donagi(form)).unwrap(), Rational::from(30));
        }
    }

    #[test]
    fn two_lines_intersection() {
        let id = Identity::Flop {
            n: 2,
            form: IdentityForm::Conormal,
            dims: [1, 1, 0, 0],
            chi_s: Slot::Unknown,
            chi_d: 0.into(),
            c0m: [2.into(), 2.into(), 1.into(), 1.into()],
        };
        assert_eq!(solve_unknown(&id).unwrap(), Rational::one());
    }

    #[test]
    fn error_cases() {
        // the dual intersection has empty dimension, so chi_d never enters
        let cancel = Identity::Flop {
            n: 2,
            form: IdentityForm::Conormal,
            dims: [1, 1, 0, 0],
            chi_s: 1.into(),
            chi_d: Slot::Unknown,
            c0m: [2.into(), 2.into(), 1.into(), 1.into()],
        };
        assert_eq!(solve_unknown(&cancel), Err(Error::ZeroCoefficient));
        let two = Identity::Flop {
            n: 2,
            form: IdentityForm::Conormal,
            dims: [1, 1, 0, 0],
            chi_s: Slot::Unknown,
            chi_d: Slot::Unknown,
            c0m: [2.into(), 2.into(), 1.into(), 1.into()],
        };
        assert_eq!(solve_unknown(&two), Err(Error::Overdetermined));
        let hk = Identity::HyperKahler {
            n: 2,
            chi_c: 4.into(),
            chi_c_dual: 4.into(),
            c_dot_pn: Slot::Unknown,
            c_dual_dot_pn: 2.into(),
        };
        assert_eq!(solve_unknown(&hk), Err(Error::NonLinear));
        let hk = Identity::HyperKahler {
            n: 2,
            chi_c: Slot::Unknown,
            chi_c_dual: 4.into(),
            c_dot_pn: 3.into(),
            c_dual_dot_pn: 0.into(),
        };
        assert_eq!(solve_unknown(&hk).unwrap(), Rational::from(7));
    }

    #[test]
    fn quadric_solve() {
        // line against a conic: chi(L ∩ Q) = 2
        let id = Identity::Quadric {
            n: 2,
            dim_s: 1,
            dim_d: 0,
            chi_s_cap_q: Slot::Unknown,
            c0m_s: 2.into(),
            chi_d_cap_qd: 0.into(),
            c0m_d: 1.into(),
        };
        assert_eq!(solve_unknown(&id).unwrap(), Rational::from(2));
    }

    #[test]
    fn json_round_trip() {
        let id = beauville_donagi(IdentityForm::Conormal);
        let text = serde_json::to_string(&id).unwrap();
        assert!(text.contains("\"?\""));
        assert_eq!(serde_json::from_str::<Identity>(&text).unwrap(), id);
    }
}
