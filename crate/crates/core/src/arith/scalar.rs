use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::field::Field;
use super::quadratic::{is_squarefree, Quadratic};
use super::rational::Rational;
use crate::error::{Error, Result};

/// The field an arrangement is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Rational,
    /// ℚ(√m), `m` squarefree and at least 2.
    Quadratic(u32),
}

impl FieldTag {
    pub fn quadratic(m: u32) -> Result<Self> {
        if !is_squarefree(m) {
            return Err(Error::InvalidField(format!(
                "sqrt({m}): radicand must be squarefree and at least 2"
            )));
        }
        Ok(FieldTag::Quadratic(m))
    }

    pub fn zero(self) -> FieldScalar {
        FieldScalar::from_rational_in(Rational::zero(), self)
    }

    pub fn one(self) -> FieldScalar {
        FieldScalar::from_rational_in(Rational::one(), self)
    }

    pub fn integer(self, n: i64) -> FieldScalar {
        FieldScalar::from_rational_in(Rational::from_integer(n), self)
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "Q"),
            FieldTag::Quadratic(m) => write!(f, "Q(sqrt({m}))"),
        }
    }
}

impl Serialize for FieldTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FieldTag::Rational => serializer.serialize_str("Q"),
            FieldTag::Quadratic(m) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("sqrt", m)?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for FieldTag {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TagVisitor;

        impl<'de> Visitor<'de> for TagVisitor {
            type Value = FieldTag;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str(r#""Q" or {"sqrt": m}"#)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<FieldTag, E> {
                match v {
                    "Q" | "QQ" => Ok(FieldTag::Rational),
                    other => Err(E::custom(format!("unknown field {other:?}"))),
                }
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<FieldTag, A::Error> {
                let mut m = None;
                while let Some(key) = map.next_key::<String>()? {
                    if key == "sqrt" {
                        m = Some(map.next_value::<u32>()?);
                    } else {
                        return Err(de::Error::unknown_field(&key, &["sqrt"]));
                    }
                }
                let m = m.ok_or_else(|| de::Error::missing_field("sqrt"))?;
                FieldTag::quadratic(m).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_any(TagVisitor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroTest {
    Zero,
    Nonzero,
}

/// An exact element of ℚ or of a real quadratic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(Rational),
    Quadratic(Quadratic),
}

impl FieldScalar {
    pub fn from_rational_in(r: Rational, field: FieldTag) -> Self {
        match field {
            FieldTag::Rational => FieldScalar::Rational(r),
            FieldTag::Quadratic(m) => FieldScalar::Quadratic(Quadratic::from_rational_unchecked(r, m)),
        }
    }

    pub fn field(&self) -> FieldTag {
        match self {
            FieldScalar::Rational(_) => FieldTag::Rational,
            FieldScalar::Quadratic(x) => FieldTag::Quadratic(x.radicand()),
        }
    }

    pub fn compare_zero(&self) -> ZeroTest {
        let zero = match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Quadratic(x) => x.is_zero(),
        };
        if zero {
            ZeroTest::Zero
        } else {
            ZeroTest::Nonzero
        }
    }

    pub fn is_zero(&self) -> bool {
        self.compare_zero() == ZeroTest::Zero
    }

    /// Sign under the real embedding (√m positive).
    pub fn signum(&self) -> i32 {
        match self {
            FieldScalar::Rational(r) => r.signum(),
            FieldScalar::Quadratic(x) => x.signum(),
        }
    }

    /// Re-expresses the value in `field`. Rationals lift into any quadratic
    /// field; quadratic values with a nonzero irrational part only convert
    /// to their own field.
    pub fn convert_to(&self, field: FieldTag) -> Result<Self> {
        match (self, field) {
            (FieldScalar::Rational(r), f) => Ok(FieldScalar::from_rational_in(r.clone(), f)),
            (FieldScalar::Quadratic(x), FieldTag::Quadratic(m)) if x.radicand() == m => Ok(self.clone()),
            (FieldScalar::Quadratic(x), FieldTag::Rational) if x.irrational_part().is_zero() => {
                Ok(FieldScalar::Rational(x.rational_part().clone()))
            }
            _ => Err(Error::FieldMismatch {
                left: self.field().to_string(),
                right: field.to_string(),
            }),
        }
    }

    fn binary(
        &self,
        other: &Self,
        on_q: impl Fn(&Rational, &Rational) -> Result<Rational>,
        on_quad: impl Fn(&Quadratic, &Quadratic) -> Result<Quadratic>,
    ) -> Result<Self> {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => Ok(FieldScalar::Rational(on_q(a, b)?)),
            (FieldScalar::Quadratic(a), FieldScalar::Quadratic(b)) => {
                Ok(FieldScalar::Quadratic(on_quad(a, b)?))
            }
            _ => Err(Error::FieldMismatch {
                left: self.field().to_string(),
                right: other.field().to_string(),
            }),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.binary(other, |a, b| Ok(a.add(b)), |a, b| a.checked_add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.binary(other, |a, b| Ok(a.sub(b)), |a, b| a.checked_sub(b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.binary(other, |a, b| Ok(a.mul(b)), |a, b| a.checked_mul(b))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.binary(other, |a, b| a.checked_div(b), |a, b| a.checked_div(b))
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.neg()),
            FieldScalar::Quadratic(x) => FieldScalar::Quadratic(x.neg()),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.inv()),
            FieldScalar::Quadratic(x) => FieldScalar::Quadratic(x.inv()),
        })
    }

    /// Parses a scalar and places it in `field`.
    pub fn parse_in(text: &str, field: FieldTag) -> Result<Self> {
        text.parse::<FieldScalar>()?.convert_to(field).map_err(|e| match e {
            Error::FieldMismatch { .. } => Error::ParseScalar {
                text: text.to_string(),
                reason: format!("not an element of {field}"),
            },
            other => other,
        })
    }
}

/// Concrete field types the kernels are instantiated with.
///
/// `from_scalar` expects a value already converted to the kernel's field;
/// arrangements guarantee this at construction.
pub trait ScalarField: Field {
    fn from_scalar(x: &FieldScalar) -> Self;
    fn to_scalar(&self) -> FieldScalar;
}

impl ScalarField for Rational {
    fn from_scalar(x: &FieldScalar) -> Self {
        match x {
            FieldScalar::Rational(r) => r.clone(),
            FieldScalar::Quadratic(q) => {
                assert!(q.irrational_part().is_zero(), "irrational value {q} in a rational kernel");
                q.rational_part().clone()
            }
        }
    }

    fn to_scalar(&self) -> FieldScalar {
        FieldScalar::Rational(self.clone())
    }
}

impl ScalarField for Quadratic {
    fn from_scalar(x: &FieldScalar) -> Self {
        match x {
            FieldScalar::Quadratic(q) => q.clone(),
            FieldScalar::Rational(_) => panic!("rational value {x} in a quadratic kernel without radicand"),
        }
    }

    fn to_scalar(&self) -> FieldScalar {
        FieldScalar::Quadratic(self.clone())
    }
}

fn split_signed_tail(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/')
}

impl FromStr for FieldScalar {
    type Err = Error;

    /// Grammar: an integer, `a/b`, or `a+b*sqrt(m)` with rational `a`, `b`.
    /// The rational part and the coefficient `b` may be omitted
    /// (`sqrt(5)`, `-sqrt(5)`, `1-sqrt(5)`, `3/2*sqrt(5)`).
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParseScalar {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(pos) = compact.find("sqrt(") else {
            return compact.parse::<Rational>().map(FieldScalar::Rational).map_err(|_| err("expected a rational"));
        };
        let tail = &compact[pos + 5..];
        let radicand = tail.strip_suffix(')').ok_or_else(|| err("expected ')' at end"))?;
        let m: u32 = radicand.parse().map_err(|_| err("radicand must be a positive integer"))?;
        if !is_squarefree(m) {
            return Err(err("radicand must be squarefree and at least 2"));
        }
        let prefix = &compact[..pos];
        let (rational_text, coeff_text) = match prefix.strip_suffix('*') {
            Some(head) => match split_signed_tail(head) {
                Some(i) => (&head[..i], head[i..].to_string()),
                None => ("", head.to_string()),
            },
            None => match prefix.chars().last() {
                None => ("", "1".to_string()),
                Some('+') => (&prefix[..prefix.len() - 1], "1".to_string()),
                Some('-') => (&prefix[..prefix.len() - 1], "-1".to_string()),
                Some(_) => return Err(err("expected '*' before sqrt")),
            },
        };
        let p = if rational_text.is_empty() {
            Rational::zero()
        } else {
            rational_text.parse::<Rational>().map_err(|_| err("bad rational part"))?
        };
        let q = coeff_text.parse::<Rational>().map_err(|_| err("bad sqrt coefficient"))?;
        Ok(FieldScalar::Quadratic(Quadratic::new(p, q, m)?))
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => write!(f, "{r}"),
            FieldScalar::Quadratic(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Rational> for FieldScalar {
    fn from(r: Rational) -> Self {
        FieldScalar::Rational(r)
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        FieldScalar::Rational(Rational::from_integer(n))
    }
}

impl From<Quadratic> for FieldScalar {
    fn from(x: Quadratic) -> Self {
        FieldScalar::Quadratic(x)
    }
}

impl Serialize for FieldScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldScalar {
    /// Accepts the textual grammar as a string, or a plain JSON integer.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;

        impl<'de> Visitor<'de> for ScalarVisitor {
            type Value = FieldScalar;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a scalar string such as \"1/2\" or \"1+1*sqrt(5)\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<FieldScalar, E> {
                Ok(FieldScalar::from(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<FieldScalar, E> {
                v.to_string().parse().map_err(E::custom)
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<FieldScalar, E> {
                Err(E::custom(format!(
                    "floating-point value {v} is not exact; write it as a fraction string"
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<FieldScalar, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(ScalarVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> FieldScalar {
        text.parse().unwrap()
    }

    #[test]
    fn trivial_examples() {
        assert_eq!(s("1/2").add(&s("1/3")).unwrap(), s("5/6"));
        assert_eq!(s("0+1*sqrt(5)").mul(&s("sqrt(5)")).unwrap(), s("5+0*sqrt(5)"));
        assert_eq!(s("1/2+1/2*sqrt(5)").inv().unwrap(), s("-1/2+1/2*sqrt(5)"));
    }

    #[test]
    fn compare_zero_examples() {
        assert_eq!(s("0/1").compare_zero(), ZeroTest::Zero);
        assert_eq!(s("2").sub(&s("2")).unwrap().compare_zero(), ZeroTest::Zero);
        assert_eq!(s("1+1*sqrt(5)").compare_zero(), ZeroTest::Nonzero);
    }

    #[test]
    fn grammar_variants() {
        assert_eq!(s("sqrt(5)"), s("0+1*sqrt(5)"));
        assert_eq!(s("-sqrt(5)"), s("0-1*sqrt(5)"));
        assert_eq!(s("1-sqrt(5)"), s("1-1*sqrt(5)"));
        assert_eq!(s("-1/2-3/4*sqrt(2)").to_string(), "-1/2-3/4*sqrt(2)");
        assert_eq!(s(" 3 / 6 ").to_string(), "1/2");
        assert!("1+2*sqrt(4)".parse::<FieldScalar>().is_err());
        assert!("1+2sqrt(5)".parse::<FieldScalar>().is_err());
        assert!("sqrt(5".parse::<FieldScalar>().is_err());
    }

    #[test]
    fn errors() {
        assert_eq!(s("1").div(&s("0")), Err(Error::DivisionByZero));
        assert!(matches!(s("1").add(&s("sqrt(5)")), Err(Error::FieldMismatch { .. })));
        assert!(matches!(s("sqrt(2)").mul(&s("sqrt(5)")), Err(Error::FieldMismatch { .. })));
        assert!(FieldScalar::parse_in("sqrt(5)", FieldTag::Rational).is_err());
        assert_eq!(
            FieldScalar::parse_in("3", FieldTag::Quadratic(5)).unwrap(),
            s("3+0*sqrt(5)")
        );
    }

    #[test]
    fn field_tag_json() {
        let q: FieldTag = serde_json::from_str("\"Q\"").unwrap();
        assert_eq!(q, FieldTag::Rational);
        let k: FieldTag = serde_json::from_str(r#"{"sqrt": 5}"#).unwrap();
        assert_eq!(k, FieldTag::Quadratic(5));
        assert!(serde_json::from_str::<FieldTag>(r#"{"sqrt": 9}"#).is_err());
        assert_eq!(serde_json::to_string(&k).unwrap(), r#"{"sqrt":5}"#);
    }
}
