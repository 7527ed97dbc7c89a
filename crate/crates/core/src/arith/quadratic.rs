use std::cmp::Ordering;
use std::fmt;

use super::field::Field;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Element `p + q·√m` of the real quadratic field ℚ(√m).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quadratic {
    p: Rational,
    q: Rational,
    m: u32,
}

pub(crate) fn is_squarefree(m: u32) -> bool {
    if m < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= m as u64 {
        if (m as u64).is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

impl Quadratic {
    pub fn new(p: Rational, q: Rational, m: u32) -> Result<Self> {
        if !is_squarefree(m) {
            return Err(Error::InvalidField(format!(
                "sqrt({m}): radicand must be squarefree and at least 2"
            )));
        }
        Ok(Quadratic { p, q, m })
    }

    /// Embeds a rational into ℚ(√m); `m` must already be validated.
    pub(crate) fn from_rational_unchecked(p: Rational, m: u32) -> Self {
        Quadratic {
            p,
            q: Rational::zero(),
            m,
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> u32 {
        self.m
    }

    /// Field norm `p² − m·q²`; nonzero for nonzero elements since √m ∉ ℚ.
    pub fn norm(&self) -> Rational {
        let m = Rational::from_integer(self.m as i64);
        self.p.mul(&self.p).sub(&m.mul(&self.q).mul(&self.q))
    }

    /// Sign of the real embedding with √m > 0.
    pub fn signum(&self) -> i32 {
        let sp = self.p.signum();
        let sq = self.q.signum();
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // opposite signs: compare p² with m·q²
        match self.norm().signum() {
            1 => sp,
            -1 => sq,
            _ => unreachable!("nonzero element with zero norm"),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::FieldMismatch {
                left: format!("Q(sqrt({}))", self.m),
                right: format!("Q(sqrt({}))", other.m),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Field::add(self, other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Field::sub(self, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Field::mul(self, other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Field::div(self, other))
    }
}

impl Field for Quadratic {
    fn zero_like(&self) -> Self {
        Quadratic::from_rational_unchecked(Rational::zero(), self.m)
    }

    fn one_like(&self) -> Self {
        Quadratic::from_rational_unchecked(Rational::one(), self.m)
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn is_one(&self) -> bool {
        self.p.is_one() && self.q.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        Quadratic {
            p: self.p.add(&other.p),
            q: self.q.add(&other.q),
            m: self.m,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        Quadratic {
            p: self.p.sub(&other.p),
            q: self.q.sub(&other.q),
            m: self.m,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        if self.q.is_zero() && other.q.is_zero() {
            return Quadratic::from_rational_unchecked(self.p.mul(&other.p), self.m);
        }
        let m = Rational::from_integer(self.m as i64);
        Quadratic {
            p: self.p.mul(&other.p).add(&m.mul(&self.q.mul(&other.q))),
            q: self.p.mul(&other.q).add(&self.q.mul(&other.p)),
            m: self.m,
        }
    }

    fn neg(&self) -> Self {
        Quadratic {
            p: self.p.neg(),
            q: self.q.neg(),
            m: self.m,
        }
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.q.is_zero() {
            return Quadratic::from_rational_unchecked(self.p.inv(), self.m);
        }
        let n = self.norm().inv();
        Quadratic {
            p: self.p.mul(&n),
            q: self.q.neg().mul(&n),
            m: self.m,
        }
    }
}

impl PartialOrd for Quadratic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.m != other.m {
            return None;
        }
        Some(Field::sub(self, other).signum().cmp(&0))
    }
}

impl fmt::Debug for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.signum() < 0 {
            write!(f, "{}-{}*sqrt({})", self.p, self.q.neg(), self.m)
        } else {
            write!(f, "{}+{}*sqrt({})", self.p, self.q, self.m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn sqrt5(p: Rational, qq: Rational) -> Quadratic {
        Quadratic::new(p, qq, 5).unwrap()
    }

    #[test]
    fn sqrt5_squared() {
        let r = sqrt5(q(0, 1), q(1, 1));
        assert_eq!(r.mul(&r), sqrt5(q(5, 1), q(0, 1)));
    }

    #[test]
    fn golden_ratio_inverse() {
        let phi = sqrt5(q(1, 2), q(1, 2));
        assert_eq!(phi.inv(), sqrt5(q(-1, 2), q(1, 2)));
        assert!(phi.mul(&phi.inv()).is_one());
    }

    #[test]
    fn signs_of_real_embedding() {
        assert_eq!(sqrt5(q(1, 1), q(1, 1)).signum(), 1);
        assert_eq!(sqrt5(q(3, 1), q(-1, 1)).signum(), 1); // 3 - 2.236
        assert_eq!(sqrt5(q(2, 1), q(-1, 1)).signum(), -1); // 2 - 2.236
        assert_eq!(sqrt5(q(-9, 4), q(1, 1)).signum(), -1);
        assert_eq!(sqrt5(q(0, 1), q(0, 1)).signum(), 0);
    }

    #[test]
    fn rejects_bad_radicands_and_mixed_fields() {
        assert!(Quadratic::new(q(1, 1), q(1, 1), 4).is_err());
        assert!(Quadratic::new(q(1, 1), q(1, 1), 1).is_err());
        assert!(Quadratic::new(q(1, 1), q(1, 1), 12).is_err());
        let a = sqrt5(q(1, 1), q(1, 1));
        let b = Quadratic::new(q(1, 1), q(1, 1), 2).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
        assert_eq!(a.checked_div(&a.zero_like()), Err(Error::DivisionByZero));
    }

    #[test]
    fn nonzero_is_exact() {
        assert!(!sqrt5(q(1, 1), q(1, 1)).is_zero());
        assert!(sqrt5(q(2, 1), q(0, 1)).sub(&sqrt5(q(2, 1), q(0, 1))).is_zero());
    }
}
