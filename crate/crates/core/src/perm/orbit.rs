use std::collections::{BTreeSet, HashSet};

use super::{IndexSet, PermGroup, Permutation};
use crate::error::{Error, Result};

/// Default cap on orbit size for [`minimal_image_exact`].
pub const DEFAULT_ORBIT_BUDGET: usize = 100_000;

/// The orbit `G·I` of an index set, by closure under the generators.
pub fn orbit_of_set(group: &PermGroup, set: &IndexSet) -> BTreeSet<IndexSet> {
    let mut seen: HashSet<IndexSet> = HashSet::new();
    seen.insert(set.clone());
    let mut stack = vec![set.clone()];
    while let Some(s) = stack.pop() {
        for g in group.generators() {
            let t = g.apply_set(&s);
            if !seen.contains(&t) {
                seen.insert(t.clone());
                stack.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// Greedy descent: whenever some `g` in `elems` maps the current set to a
/// lexicographically smaller one, move there and restart the sweep.
///
/// The result lies in the orbit of `set` under any group containing `elems`
/// and is never larger than `set`. It is not canonical: two sets of one orbit
/// can receive different keys, which only costs a missed identification.
pub fn pseudo_minimal_image(set: &IndexSet, elems: &[Permutation]) -> IndexSet {
    let mut current = set.clone();
    'sweep: loop {
        for g in elems {
            let image = g.apply_set(&current);
            if image < current {
                current = image;
                continue 'sweep;
            }
        }
        return current;
    }
}

/// The lexicographically least element of `G·I`, by enumerating the orbit.
/// Fails once the orbit grows past `budget` sets.
pub fn minimal_image_exact(group: &PermGroup, set: &IndexSet, budget: usize) -> Result<IndexSet> {
    let mut seen: HashSet<IndexSet> = HashSet::new();
    seen.insert(set.clone());
    let mut stack = vec![set.clone()];
    let mut best = set.clone();
    while let Some(s) = stack.pop() {
        for g in group.generators() {
            let t = g.apply_set(&s);
            if !seen.contains(&t) {
                if seen.len() >= budget {
                    return Err(Error::OrbitBudgetExceeded { budget });
                }
                if t < best {
                    best = t.clone();
                }
                seen.insert(t.clone());
                stack.push(t);
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&[usize]]) -> PermGroup {
        PermGroup::from_one_line(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn set(one_based: &[usize]) -> IndexSet {
        IndexSet::from_unsorted(one_based.iter().map(|x| x - 1))
    }

    fn perm(one_line: &[usize]) -> Permutation {
        Permutation::from_one_line(one_line).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let c3 = group(4, &[&[2, 3, 1, 4]]);
        let o = orbit_of_set(&c3, &set(&[1]));
        assert_eq!(o, [set(&[1]), set(&[2]), set(&[3])].into_iter().collect());
        assert_eq!(orbit_of_set(&c3, &IndexSet::new()).len(), 1);
        let s3 = group(4, &[&[2, 3, 1, 4], &[2, 1, 3, 4]]);
        let o = orbit_of_set(&s3, &set(&[1, 4]));
        assert_eq!(o, [set(&[1, 4]), set(&[2, 4]), set(&[3, 4])].into_iter().collect());
    }

    #[test]
    fn pseudo_minimal_examples() {
        assert_eq!(pseudo_minimal_image(&set(&[3]), &[perm(&[3, 2, 1])]), set(&[1]));
        assert_eq!(pseudo_minimal_image(&set(&[1, 2]), &[]), set(&[1, 2]));
        let elems = [perm(&[2, 1, 3, 4]), perm(&[1, 2, 4, 3])];
        assert_eq!(pseudo_minimal_image(&set(&[2, 4]), &elems), set(&[1, 3]));
    }

    #[test]
    fn exact_minimal_examples() {
        let s3 = group(4, &[&[2, 3, 1, 4], &[2, 1, 3, 4]]);
        assert_eq!(minimal_image_exact(&s3, &set(&[3]), 100).unwrap(), set(&[1]));
        let triv = PermGroup::trivial(4);
        assert_eq!(minimal_image_exact(&triv, &set(&[2, 4]), 100).unwrap(), set(&[2, 4]));
        let c4 = group(4, &[&[2, 3, 4, 1]]);
        assert_eq!(minimal_image_exact(&c4, &set(&[2, 3]), 100).unwrap(), set(&[1, 2]));
    }

    #[test]
    fn exact_minimal_budget() {
        let s8 = group(8, &[&[2, 3, 4, 5, 6, 7, 8, 1], &[2, 1, 3, 4, 5, 6, 7, 8]]);
        assert!(matches!(
            minimal_image_exact(&s8, &set(&[1, 2, 3, 4]), 10),
            Err(Error::OrbitBudgetExceeded { budget: 10 })
        ));
    }
}
