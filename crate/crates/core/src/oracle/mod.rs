//! Slow, independent reference computations used to check the engines.
//!
//! [`whitney_bruteforce`] sums over all subsets of hyperplanes;
//! [`charpoly_by_interpolation`] counts points over prime fields. Neither
//! shares code with the deletion–restriction engines.

mod finite;
mod random;

use crate::arith::Count;
use crate::arrangement::Arrangement;
use crate::engine::WhitneyVector;
use crate::error::{Error, Result};
use crate::perm::IndexSet;

pub use finite::{charpoly_by_interpolation, count_points_mod_p, FIRST_PRIME, MAX_FINITE_DIM};
pub use random::{random_arrangement, random_symmetric, RandomConfig};

pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Whitney numbers from the subset expansion
/// `χ(t) = Σ_{I : L_I ≠ ∅} (-1)^{|I|} t^{d - r(I)}`.
pub fn whitney_bruteforce(arr: &Arrangement) -> Result<WhitneyVector> {
    whitney_bruteforce_bounded(arr, BRUTE_FORCE_LIMIT)
}

pub fn whitney_bruteforce_bounded(arr: &Arrangement, limit: usize) -> Result<WhitneyVector> {
    let n = arr.len();
    if n > limit {
        return Err(Error::BruteForceBound { n, limit });
    }
    let d = arr.dim();
    // coefficient of t^{d-r}, signed
    let mut coeff = vec![0i64; d + 1];
    for mask in 0u64..1 << n {
        let set = IndexSet::from_unsorted((0..n).filter(|&i| mask >> i & 1 == 1));
        let flat = arr.flat_basis(&set)?;
        if !flat.consistent {
            continue;
        }
        coeff[flat.rank] += if set.len().is_multiple_of(2) { 1 } else { -1 };
    }
    let b = coeff
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let v = if i % 2 == 0 { c } else { -c };
            u64::try_from(v)
                .map(Count::from)
                .map_err(|_| Error::Format(format!("subset sum gives negative b_{i} = {v}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WhitneyVector::new(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldTag;
    use crate::families;

    #[test]
    fn bruteforce_examples() {
        let a = Arrangement::from_integer_rows(2, &[vec![-1, 1, 1], vec![1, 0, 0], vec![1, 1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(whitney_bruteforce(&a).unwrap().to_u64s().unwrap(), vec![1, 4, 5]);
        let r4 = families::resonance(4).unwrap().arrangement;
        assert_eq!(whitney_bruteforce(&r4).unwrap().to_u64s().unwrap(), vec![1, 15, 80, 170, 104]);
        assert_eq!(whitney_bruteforce(&Arrangement::empty(3, FieldTag::Rational)).unwrap().to_u64s().unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn bruteforce_bound() {
        let r5 = families::resonance(5).unwrap().arrangement;
        assert_eq!(
            whitney_bruteforce_bounded(&r5, 20),
            Err(Error::BruteForceBound { n: 31, limit: 20 })
        );
    }
}
