//! Exact scalars over ℚ and ℚ(√m), and arbitrary-precision counters.

mod count;
mod field;
mod quadratic;
mod rational;
mod scalar;

pub use count::Count;
pub use field::Field;
pub use quadratic::Quadratic;
pub use rational::Rational;
pub use scalar::{FieldScalar, FieldTag, ScalarField, ZeroTest};


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn quadratic() -> impl Strategy<Value = Quadratic> {
        (small_rational(), small_rational(), prop::sample::select(vec![2u32, 3, 5, 7, 10]))
            .prop_map(|(p, q, m)| Quadratic::new(p, q, m).unwrap())
    }

    fn scalar() -> impl Strategy<Value = FieldScalar> {
        prop_oneof![rational().prop_map(FieldScalar::from), quadratic().prop_map(FieldScalar::from)]
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&b).add(&b), a.clone());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv()).is_one());
            }
        }

        #[test]
        fn quadratic_field_axioms(
            m in prop::sample::select(vec![2u32, 3, 5, 7, 10]),
            a in (small_rational(), small_rational()),
            b in (small_rational(), small_rational()),
            c in (small_rational(), small_rational()),
        ) {
            let q = |(p, r): (Rational, Rational)| Quadratic::new(p, r, m).unwrap();
            let (a, b, c) = (q(a), q(b), q(c));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv()).is_one());
            }
        }

        #[test]
        fn scalar_text_round_trip(x in scalar()) {
            let text = x.to_string();
            prop_assert_eq!(text.parse::<FieldScalar>().unwrap(), x);
        }

        #[test]
        fn counters_are_exact_at_2_127(a in any::<u128>(), b in any::<u128>()) {
            let a = a | (1u128 << 127);
            let sum = Count::from(a) + Count::from(b);
            let expected = num_bigint::BigUint::from(a) + num_bigint::BigUint::from(b);
            prop_assert_eq!(sum.as_biguint(), &expected);
        }
    }
}
