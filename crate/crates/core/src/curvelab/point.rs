//! Rational points of the projective plane in normalized integer form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::Rational;

/// `[a:b:c]` with coprime integer coordinates, first nonzero one positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint([BigInt; 3]);

impl ProjPoint {
    /// Normalizes a nonzero triple; `None` for `(0, 0, 0)`.
    pub fn new(coords: [BigInt; 3]) -> Option<Self> {
        let g = coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return None;
        }
        let first = coords.iter().find(|c| !c.is_zero()).expect("nonzero");
        let g = if first.is_negative() { -g } else { g };
        Some(ProjPoint(coords.map(|c| c / &g)))
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Option<Self> {
        Self::new([a.into(), b.into(), c.into()])
    }

    pub fn from_rationals(coords: &[Rational; 3]) -> Option<Self> {
        let mut lcm = BigInt::one();
        for c in coords {
            lcm = lcm.lcm(c.denom());
        }
        Self::new(std::array::from_fn(|i| {
            coords[i].numer() * (&lcm / coords[i].denom())
        }))
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn to_rationals(&self) -> [Rational; 3] {
        self.0.clone().map(Rational::from)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

/// JSON form is an array of three integers; coordinates too large for `i64`
/// are written as decimal strings.
impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(3))?;
        for c in &self.0 {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coord {
            Int(i64),
            Text(String),
        }
        let raw: [Coord; 3] = Deserialize::deserialize(deserializer)?;
        let mut coords: [BigInt; 3] = Default::default();
        for (slot, c) in coords.iter_mut().zip(raw) {
            *slot = match c {
                Coord::Int(v) => v.into(),
                Coord::Text(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
        }
        ProjPoint::new(coords).ok_or_else(|| serde::de::Error::custom("point [0:0:0]"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let p = ProjPoint::from_i64(0, -4, 6).unwrap();
        assert_eq!(p.to_string(), "[0:2:-3]");
        assert!(ProjPoint::from_i64(0, 0, 0).is_none());
        let q = ProjPoint::from_rationals(&[
            Rational::new(1, 2).unwrap(),
            Rational::new(-1, 3).unwrap(),
            Rational::zero(),
        ])
        .unwrap();
        assert_eq!(q, ProjPoint::from_i64(3, -2, 0).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let p = ProjPoint::from_i64(1, -2, 7).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, "[1,-2,7]");
        assert_eq!(serde_json::from_str::<ProjPoint>(&text).unwrap(), p);
    }
}
