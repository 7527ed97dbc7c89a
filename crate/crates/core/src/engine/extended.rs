use crate::arith::{Count, Field};
use crate::arrangement::{with_rows, Arrangement};
use crate::error::{Error, Result};
use crate::perm::IndexSet;

use super::node::leading_unique;
use super::WhitneyVector;

/// Whitney numbers by deletion–restriction on pairs `(I, J)`: the flat `L_I`
/// is never rewritten, a hyperplane of `J` is restricted to only when its
/// trace on `L_I` is proper and not repeated later in `J`.
pub fn whitney_extended(arr: &Arrangement) -> WhitneyVector {
    whitney_from_node(arr, &IndexSet::new(), 0).expect("the root node is always valid")
}

/// Whitney numbers of the arrangement represented by `(I, {k, …, n-1})`,
/// shifted by `|I|` so entry `i` counts rank `i` flats of the original
/// ambient space.
pub fn whitney_from_node(arr: &Arrangement, set: &IndexSet, k: usize) -> Result<WhitneyVector> {
    if k > arr.len() {
        return Err(Error::IndexOutOfRange { index: k, n: arr.len() });
    }
    if !arr.flat_basis(set)?.consistent {
        return Err(Error::InconsistentFlat);
    }
    let b = with_rows!(arr, rows => walk(rows, arr.dim(), set.clone(), k));
    Ok(WhitneyVector::new(b))
}

fn walk<F: Field>(rows: &[Vec<F>], dim: usize, set: IndexSet, k: usize) -> Vec<Count> {
    let mut b = vec![Count::zero(); dim + 1];
    let mut stack = vec![(set, k)];
    let one = Count::one();
    while let Some((set, k)) = stack.pop() {
        match leading_unique(rows, &set, k) {
            None => b[set.len()] += &one,
            Some((j, _)) => {
                stack.push((set.with(j), j + 1));
                stack.push((set, j + 1));
            }
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let running =
            Arrangement::from_integer_rows(2, &[vec![-1, 1, 1], vec![1, 0, 0], vec![1, 1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(whitney_extended(&running), WhitneyVector::from_u64s(&[1, 4, 5]));
        let one = Arrangement::from_integer_rows(3, &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(whitney_extended(&one), WhitneyVector::from_u64s(&[1, 1, 0, 0]));
        let res2 = Arrangement::from_integer_rows(2, &[vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 0]]).unwrap();
        assert_eq!(whitney_extended(&res2), WhitneyVector::from_u64s(&[1, 3, 2]));
    }

    #[test]
    fn from_node_matches_restriction() {
        let running =
            Arrangement::from_integer_rows(2, &[vec![-1, 1, 1], vec![1, 0, 0], vec![1, 1, 1], vec![0, 1, 0]]).unwrap();
        // restricting to x = 0 leaves the two points y = 1 and y = 0
        let w = whitney_from_node(&running, &IndexSet::from_unsorted([1]), 0).unwrap();
        assert_eq!(w, WhitneyVector::from_u64s(&[0, 1, 2]));
    }
}
