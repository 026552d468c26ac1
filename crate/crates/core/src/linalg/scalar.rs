//! Exact rational scalars.
//!
//! Every coefficient in the crate is an arbitrary-precision rational kept in
//! canonical form (positive denominator, reduced). On the wire a scalar is a
//! JSON integer or a `"p/q"` string.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;

use crate::error::{Error, Result};

/// The ground field element.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"7"`, `"-3/4"` or `" 2 / 6 "` into a reduced rational.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(p, q))
        }
        None => Ok(Scalar::from_integer(BigInt::from_str(text).map_err(|_| bad())?)),
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Integers that fit in an `i64` serialize as JSON numbers, everything else
/// as a `"p/q"` string.
pub fn serialize<S: Serializer>(s: &Scalar, ser: S) -> std::result::Result<S::Ok, S::Error> {
    if s.is_integer() {
        if let Ok(n) = i64::try_from(s.numer()) {
            return ser.serialize_i64(n);
        }
    }
    ser.serialize_str(&format_scalar(s))
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Scalar, D::Error> {
    de.deserialize_any(ScalarVisitor)
}

struct ScalarVisitor;

impl Visitor<'_> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("an integer or a \"p/q\" string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Scalar, E> {
        Ok(int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Scalar, E> {
        Ok(Scalar::from_integer(BigInt::from(v)))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Scalar, E> {
        Err(E::custom(format!(
            "floating-point value {v} is not allowed; write it as \"p/q\""
        )))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Scalar, E> {
        parse_scalar(v).map_err(E::custom)
    }
}

/// Serde adapter for a [`Scalar`] nested inside containers.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct JsonScalar(#[serde(with = "self")] pub Scalar);

/// Serde adapter for `Vec<Scalar>` fields.
pub mod seq {
    use super::{JsonScalar, Scalar};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Scalar], ser: S) -> Result<S::Ok, S::Error> {
        v.iter().cloned().map(JsonScalar).collect::<Vec<_>>().serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Scalar>, D::Error> {
        Ok(Vec::<JsonScalar>::deserialize(de)?.into_iter().map(|s| s.0).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_to_canonical_form() {
        let s = parse_scalar("6/-4").unwrap();
        assert_eq!(s, frac(-3, 2));
        assert!(s.denom() > &BigInt::zero());
        assert_eq!(format_scalar(&s), "-3/2");
        assert_eq!(format_scalar(&parse_scalar(" 8 / 4 ").unwrap()), "2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1.5").is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(frac(1, 3) + frac(1, 6), frac(1, 2));
        assert_eq!(frac(2, 3) * frac(3, 2), one());
    }

    #[test]
    fn json_forms() {
        #[derive(serde::Serialize, serde::Deserialize)]
        struct W(#[serde(with = "super")] Scalar);
        assert_eq!(serde_json::to_string(&W(int(-5))).unwrap(), "-5");
        assert_eq!(serde_json::to_string(&W(frac(1, 2))).unwrap(), "\"1/2\"");
        let w: W = serde_json::from_str("\"-2/4\"").unwrap();
        assert_eq!(w.0, frac(-1, 2));
        assert!(serde_json::from_str::<W>("0.5").is_err());
    }
}
