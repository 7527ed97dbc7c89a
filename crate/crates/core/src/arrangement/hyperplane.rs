use crate::arith::{FieldScalar, FieldTag};
use crate::error::{Error, Result};

/// The affine hyperplane `{x : coeffs · x = constant}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub coeffs: Vec<FieldScalar>,
    pub constant: FieldScalar,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<FieldScalar>, constant: FieldScalar) -> Self {
        Hyperplane { coeffs, constant }
    }

    /// Integer coefficients over ℚ.
    pub fn from_integers(coeffs: &[i64], constant: i64) -> Self {
        Hyperplane {
            coeffs: coeffs.iter().map(|&c| FieldScalar::from(c)).collect(),
            constant: FieldScalar::from(constant),
        }
    }

    /// A linear hyperplane through the origin.
    pub fn linear(coeffs: Vec<FieldScalar>) -> Self {
        let field = coeffs.first().map(|c| c.field()).unwrap_or(FieldTag::Rational);
        Hyperplane {
            coeffs,
            constant: field.zero(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub(crate) fn convert_to(&self, field: FieldTag) -> Result<Hyperplane> {
        Ok(Hyperplane {
            coeffs: self.coeffs.iter().map(|c| c.convert_to(field)).collect::<Result<_>>()?,
            constant: self.constant.convert_to(field)?,
        })
    }

    pub(crate) fn check(&self, index: usize, dim: usize) -> Result<()> {
        if self.coeffs.len() != dim {
            return Err(Error::DimensionMismatch {
                index,
                expected: dim,
                found: self.coeffs.len(),
            });
        }
        if self.coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroNormal(index));
        }
        Ok(())
    }
}
