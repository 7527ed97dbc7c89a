use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Count;
use crate::error::{Error, Result};

/// Whitney numbers `b_0, …, b_d` of an arrangement in `K^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WhitneyVector {
    b: Vec<Count>,
}

impl WhitneyVector {
    pub fn new(b: Vec<Count>) -> Self {
        WhitneyVector { b }
    }

    /// `(1, 0, …, 0)` of length `dim + 1`.
    pub fn empty_arrangement(dim: usize) -> Self {
        let mut b = vec![Count::zero(); dim + 1];
        b[0] = Count::one();
        WhitneyVector { b }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        WhitneyVector {
            b: values.iter().map(|&v| Count::from(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.b.len() - 1
    }

    pub fn entries(&self) -> &[Count] {
        &self.b
    }

    pub fn get(&self, i: usize) -> Count {
        self.b.get(i).cloned().unwrap_or_else(Count::zero)
    }

    /// `Σ b_i`, the number of chambers over the reals.
    pub fn chambers(&self) -> Count {
        self.b.iter().sum()
    }

    /// Entries as `u64`, if they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.b.iter().map(|c| c.to_u64()).collect()
    }

    /// Entries without trailing zeros, the form used in published tables.
    pub fn trimmed(&self) -> &[Count] {
        let end = self.b.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
        &self.b[..end]
    }

    pub fn char_poly(&self) -> CharPoly {
        CharPoly::from_whitney(self)
    }
}

impl fmt::Display for WhitneyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.b.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `χ(t) = Σ (-1)^i b_i t^{d-i}`, stored by descending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharPoly {
    #[serde(with = "bigint_strings")]
    coeffs: Vec<BigInt>,
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

impl CharPoly {
    pub fn from_whitney(w: &WhitneyVector) -> Self {
        let coeffs = w
            .b
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let v = BigInt::from(c.as_biguint().clone());
                if i % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect();
        CharPoly { coeffs }
    }

    /// Coefficients from `t^d` down to `t^0`.
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        CharPoly { coeffs }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Recovers the Whitney numbers; fails if the signs do not alternate.
    pub fn to_whitney(&self) -> Result<WhitneyVector> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let v = if i % 2 == 0 { c.clone() } else { -c };
                if v.is_negative() {
                    return Err(Error::Format(format!("coefficient of t^{} has the wrong sign", self.degree() - i)));
                }
                Ok(Count::from(v.magnitude().clone()))
            })
            .collect::<Result<Vec<_>>>()
            .map(WhitneyVector::new)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for CharPoly {
    /// `t^2 - 4*t + 5`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = d - i;
            let mag = c.magnitude();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match power {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if power == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{power}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_zaslavsky() {
        let w = WhitneyVector::from_u64s(&[1, 4, 5]);
        let chi = w.char_poly();
        assert_eq!(chi.to_string(), "t^2 - 4*t + 5");
        assert_eq!(w.to_string(), "1 4 5");
        assert_eq!(w.chambers(), Count::from(10u64));
        // (-1)^d χ(-1) = Σ b_i
        assert_eq!(chi.eval(&BigInt::from(-1)), BigInt::from(10));
        assert_eq!(WhitneyVector::empty_arrangement(2).char_poly().to_string(), "t^2");
        assert_eq!(WhitneyVector::from_u64s(&[1, 4, 6, 3]).char_poly().to_string(), "t^3 - 4*t^2 + 6*t - 3");
        assert_eq!(WhitneyVector::from_u64s(&[1, 1]).char_poly().to_string(), "t - 1");
    }

    #[test]
    fn json_round_trip() {
        let w = WhitneyVector::from_u64s(&[1, 63, 1652, 22435]);
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(serde_json::from_str::<WhitneyVector>(&text).unwrap(), w);
        let chi = w.char_poly();
        let text = serde_json::to_string(&chi).unwrap();
        assert_eq!(serde_json::from_str::<CharPoly>(&text).unwrap(), chi);
        assert_eq!(chi.to_whitney().unwrap(), w);
    }

    #[test]
    fn trimmed() {
        let w = WhitneyVector::from_u64s(&[1, 2, 1, 0]);
        assert_eq!(w.trimmed().len(), 3);
    }
}
