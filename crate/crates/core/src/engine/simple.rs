use crate::arith::{Count, Field};
use crate::arrangement::{rows, with_rows, Arrangement};

use super::WhitneyVector;

/// Whitney numbers by plain deletion–restriction on explicit arrangements:
/// `b(A) = b(A ∖ H) + (0 | b(A^H))` with `H` the last hyperplane.
pub fn whitney_simple(arr: &Arrangement) -> WhitneyVector {
    let b = with_rows!(arr, r => recurse(rows::dedup(r.clone()), arr.dim()));
    WhitneyVector::new(b)
}

/// `rows` must be free of duplicates; restriction keeps that property.
fn recurse<F: Field>(mut rows: Vec<Vec<F>>, dim: usize) -> Vec<Count> {
    let mut b = vec![Count::zero(); dim + 1];
    b[0] = Count::one();
    // peel hyperplanes off the end; each restriction adds a shifted vector
    while let Some(last) = rows.len().checked_sub(1) {
        let restricted = rows::restrict(&rows, last);
        let sub = recurse(restricted, dim - 1);
        for (i, c) in sub.into_iter().enumerate() {
            b[i + 1] += c;
        }
        rows.pop();
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldTag;

    #[test]
    fn examples() {
        assert_eq!(
            whitney_simple(&Arrangement::empty(3, FieldTag::Rational)),
            WhitneyVector::from_u64s(&[1, 0, 0, 0])
        );
        let running =
            Arrangement::from_integer_rows(2, &[vec![-1, 1, 1], vec![1, 0, 0], vec![1, 1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(whitney_simple(&running), WhitneyVector::from_u64s(&[1, 4, 5]));
        let boolean =
            Arrangement::from_integer_rows(3, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        assert_eq!(whitney_simple(&boolean), WhitneyVector::from_u64s(&[1, 3, 3, 1]));
    }

    #[test]
    fn duplicates_are_merged() {
        let a = Arrangement::from_integer_rows(1, &[vec![1, 0], vec![2, 0], vec![1, 1]]).unwrap();
        assert_eq!(whitney_simple(&a), WhitneyVector::from_u64s(&[1, 2]));
    }
}
