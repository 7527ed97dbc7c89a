use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::echelon::Echelon;
use super::{with_rows, Arrangement};
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Largest arrangement checked by [`ValidationMode::Exhaustive`] by default.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    /// Every generator against every `I` with `|I| ≤ rank + 1`. Refuses
    /// arrangements with more than `limit` hyperplanes.
    Exhaustive { limit: usize },
    /// Every generator against `samples` random subsets of size at most
    /// `rank + 1`.
    Sampled { samples: usize, seed: u64 },
}

impl Default for ValidationMode {
    fn default() -> Self {
        ValidationMode::Exhaustive {
            limit: DEFAULT_EXHAUSTIVE_LIMIT,
        }
    }
}

/// Checks that each generator `g` preserves emptiness and rank of flats:
/// `L_I = ∅ ⇔ L_{gI} = ∅`, and `r(I) = r(gI)` otherwise.
pub fn validate_subgroup_of_aut(arr: &Arrangement, group: &PermGroup, mode: ValidationMode) -> Result<bool> {
    let n = arr.len();
    if group.degree() != n {
        return Err(Error::DegreeMismatch {
            group: group.degree(),
            expected: n,
        });
    }
    if group.generators().is_empty() {
        return Ok(true);
    }
    let max_size = (arr.rank() + 1).min(n);
    Ok(with_rows!(arr, rows => {
        let checker = Checker { rows, gens: group.generators(), cols: arr.dim() + 1 };
        match mode {
            ValidationMode::Exhaustive { limit } => {
                if n > limit {
                    return Err(Error::ExhaustiveBound { n, limit });
                }
                let mut set = Vec::new();
                checker.exhaustive(&Echelon::new(checker.cols), &mut set, 0, max_size)
            }
            ValidationMode::Sampled { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..samples).all(|_| {
                    let size = rng.gen_range(1..=max_size.max(1));
                    let set = sample(&mut rng, n, size.min(n)).into_vec();
                    let e = Echelon::from_rows(checker.cols, set.iter().map(|&i| &rows[i]));
                    checker.images_agree(&set, signature(&e))
                })
            }
        }
    }))
}

struct Checker<'a, F> {
    rows: &'a [Vec<F>],
    gens: &'a [Permutation],
    cols: usize,
}

impl<F: Field> Checker<'_, F> {
    fn images_agree(&self, set: &[usize], sig: Option<usize>) -> bool {
        self.gens.iter().all(|g| {
            let e = Echelon::from_rows(self.cols, set.iter().map(|&i| &self.rows[g.apply(i)]));
            signature(&e) == sig
        })
    }

    /// Depth-first over subsets in increasing index order. Supersets of an
    /// empty flat are skipped: once `I` and every `gI` are empty, so are all
    /// their supersets.
    fn exhaustive(&self, flat: &Echelon<F>, set: &mut Vec<usize>, start: usize, max_size: usize) -> bool {
        if set.len() == max_size {
            return true;
        }
        for j in start..self.rows.len() {
            let mut e = flat.clone();
            e.insert(&self.rows[j]);
            set.push(j);
            let ok = self.images_agree(set, signature(&e))
                && (!e.is_consistent() || self.exhaustive(&e, set, j + 1, max_size));
            set.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

fn signature<F: Field>(e: &Echelon<F>) -> Option<usize> {
    e.is_consistent().then(|| e.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::tests::running_example;

    #[test]
    fn running_example_symmetric_group() {
        let a = running_example();
        let g = PermGroup::from_one_line(4, &[vec![2, 3, 1, 4], vec![2, 1, 3, 4]]).unwrap();
        assert!(validate_subgroup_of_aut(&a, &g, ValidationMode::default()).unwrap());
        let sampled = ValidationMode::Sampled { samples: 200, seed: 3 };
        assert!(validate_subgroup_of_aut(&a, &g, sampled).unwrap());
        assert!(validate_subgroup_of_aut(&a, &PermGroup::trivial(4), ValidationMode::default()).unwrap());
    }

    #[test]
    fn swapping_parallel_with_transversal_fails() {
        // x = 0 and x = 1 are parallel, y = 0 crosses both
        let a = Arrangement::from_integer_rows(2, &[vec![1, 0, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        let g = PermGroup::from_one_line(3, &[vec![1, 3, 2]]).unwrap();
        assert!(!validate_subgroup_of_aut(&a, &g, ValidationMode::default()).unwrap());
        let ok = PermGroup::from_one_line(3, &[vec![2, 1, 3]]).unwrap();
        assert!(validate_subgroup_of_aut(&a, &ok, ValidationMode::default()).unwrap());
    }

    #[test]
    fn errors() {
        let a = running_example();
        let g = PermGroup::trivial(5);
        assert!(matches!(
            validate_subgroup_of_aut(&a, &g, ValidationMode::default()),
            Err(Error::DegreeMismatch { group: 5, expected: 4 })
        ));
        let g = PermGroup::from_one_line(4, &[vec![2, 1, 3, 4]]).unwrap();
        assert!(matches!(
            validate_subgroup_of_aut(&a, &g, ValidationMode::Exhaustive { limit: 3 }),
            Err(Error::ExhaustiveBound { n: 4, limit: 3 })
        ));
    }
}
