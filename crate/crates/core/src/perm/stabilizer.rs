use super::group::StabChain;
use super::{IndexSet, PermGroup, Permutation};
use crate::error::{Error, Result};

/// Default ceiling on `|G|` for [`PermGroup::setwise_stabilizer_by_enumeration`].
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

impl PermGroup {
    /// `{g ∈ G : gS = S}` by backtrack search down the stabilizer chain.
    ///
    /// Levels are processed bottom-up. At level `i`, for every point `γ` of
    /// the basic orbit not yet reached by the stabilizer found so far, the
    /// coset of elements sending the base point to `γ` is searched depth
    /// first. A partial product `p` is abandoned as soon as it sends some
    /// orbit `O` of the remaining subgroup to a set meeting `S` in a
    /// different number of points than `O` does.
    pub fn setwise_stabilizer(&self, set: &IndexSet) -> PermGroup {
        let n = self.degree();
        let chain = &self.chain;
        let in_set: Vec<bool> = (0..n).map(|x| set.contains(x)).collect();
        let depth = chain.levels.len();

        // orbit ids and |O ∩ S| per orbit for G^(l), l = 0..=depth
        let orbit_data: Vec<(Vec<usize>, Vec<usize>)> = (0..=depth)
            .map(|l| {
                let ids = chain.orbit_ids(l);
                let mut count = vec![0usize; n];
                for x in 0..n {
                    if in_set[x] {
                        count[ids[x]] += 1;
                    }
                }
                (ids, count)
            })
            .collect();

        let search = Search {
            n,
            chain,
            in_set: &in_set,
            orbit_data: &orbit_data,
        };

        let mut found: Vec<Permutation> = Vec::new();
        for i in (0..depth).rev() {
            let level = &chain.levels[i];
            let beta = level.base;
            let mut reached = point_orbit(n, beta, &found);
            let mut failed = vec![false; n];
            for &gamma in &level.orbit {
                if reached[gamma] || failed[gamma] {
                    continue;
                }
                if in_set[gamma] != in_set[beta] {
                    failed[gamma] = true;
                    continue;
                }
                let prefix = level.transversal[gamma].clone().unwrap();
                match search.extend(prefix, i + 1) {
                    Some(g) => {
                        found.push(g);
                        reached = point_orbit(n, beta, &found);
                    }
                    None => {
                        for (x, hit) in point_orbit(n, gamma, &found).into_iter().enumerate() {
                            if hit {
                                failed[x] = true;
                            }
                        }
                    }
                }
            }
        }
        PermGroup::new(n, found).expect("stabilizer elements have the group degree")
    }

    /// Same subgroup as [`setwise_stabilizer`](Self::setwise_stabilizer), by
    /// listing every element of `G`. Refuses groups larger than `limit`.
    pub fn setwise_stabilizer_by_enumeration(&self, set: &IndexSet, limit: u64) -> Result<PermGroup> {
        match self.order().to_u64() {
            Some(order) if order <= limit => {}
            _ => {
                return Err(Error::Unsupported(format!(
                    "group of order {} exceeds the enumeration limit {limit}",
                    self.order()
                )))
            }
        }
        let n = self.degree();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut sub = StabChain::build(n, &gens);
        for g in self.elements() {
            if g.apply_set(set) == *set && !sub.contains(&g) {
                gens.push(g);
                sub = StabChain::build(n, &gens);
            }
        }
        PermGroup::new(n, gens)
    }
}

struct Search<'a> {
    n: usize,
    chain: &'a StabChain,
    in_set: &'a [bool],
    orbit_data: &'a [(Vec<usize>, Vec<usize>)],
}

impl Search<'_> {
    /// Looks for `h ∈ G^(l)` with `prefix ∘ h` stabilizing the set.
    fn extend(&self, prefix: Permutation, l: usize) -> Option<Permutation> {
        if !self.feasible(&prefix, l) {
            return None;
        }
        if l == self.chain.levels.len() {
            return Some(prefix);
        }
        let level = &self.chain.levels[l];
        for &x in &level.orbit {
            let next = prefix.compose(level.transversal[x].as_ref().unwrap());
            if let Some(g) = self.extend(next, l + 1) {
                return Some(g);
            }
        }
        None
    }

    /// Whether `p` maps each orbit of `G^(l)` onto a set with the right
    /// number of points in `S`.
    fn feasible(&self, p: &Permutation, l: usize) -> bool {
        let (ids, target) = &self.orbit_data[l];
        let mut count = vec![0usize; self.n];
        for x in 0..self.n {
            if self.in_set[p.apply(x)] {
                count[ids[x]] += 1;
            }
        }
        count == *target
    }
}

/// Orbit of a point under the group generated by `gens`, as a mask.
fn point_orbit(n: usize, start: usize, gens: &[Permutation]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Setwise stabilizers `G_k` of the suffixes `{k, …, n-1}` for `k = 0..=n`.
/// `G_n` stabilizes the empty suffix and equals `G`.
pub fn suffix_stabilizers(group: &PermGroup) -> Vec<PermGroup> {
    let n = group.degree();
    (0..=n)
        .map(|k| {
            if k == n || k == 0 {
                group.clone()
            } else {
                group.setwise_stabilizer(&IndexSet::from_unsorted(k..n))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Count;

    fn group(n: usize, gens: &[&[usize]]) -> PermGroup {
        PermGroup::from_one_line(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn set(one_based: &[usize]) -> IndexSet {
        IndexSet::from_unsorted(one_based.iter().map(|x| x - 1))
    }

    #[test]
    fn examples() {
        let s3 = group(4, &[&[2, 3, 1, 4], &[2, 1, 3, 4]]);
        assert_eq!(s3.setwise_stabilizer(&set(&[4])).order(), Count::from(6u64));
        let swap = group(4, &[&[2, 1, 4, 3]]);
        assert_eq!(swap.setwise_stabilizer(&set(&[1, 2])).order(), Count::from(2u64));
        let s4 = group(4, &[&[2, 3, 4, 1], &[2, 1, 3, 4]]);
        let st = s4.setwise_stabilizer(&set(&[1, 2]));
        assert_eq!(st.order(), Count::from(4u64));
        for g in st.generators() {
            assert_eq!(g.apply_set(&set(&[1, 2])), set(&[1, 2]));
        }
    }

    #[test]
    fn backtrack_matches_enumeration() {
        let groups = [
            group(6, &[&[2, 1, 3, 4, 5, 6], &[2, 3, 4, 5, 6, 1]]),
            group(8, &[&[2, 1, 4, 3, 6, 5, 8, 7], &[3, 4, 1, 2, 7, 8, 5, 6], &[1, 2, 3, 4, 6, 5, 8, 7]]),
            group(7, &[&[2, 3, 4, 5, 6, 7, 1], &[1, 7, 6, 5, 4, 3, 2]]),
        ];
        for g in &groups {
            let n = g.degree();
            for mask in 0u32..(1 << n) {
                let s = IndexSet::from_unsorted((0..n).filter(|i| mask >> i & 1 == 1));
                let a = g.setwise_stabilizer(&s);
                let b = g.setwise_stabilizer_by_enumeration(&s, ENUMERATION_LIMIT).unwrap();
                assert_eq!(a.order(), b.order(), "set {s:?}");
                for x in a.generators() {
                    assert!(b.contains(x));
                }
            }
        }
    }

    #[test]
    fn enumeration_refuses_large_groups() {
        let s10 = group(10, &[&[2, 3, 4, 5, 6, 7, 8, 9, 10, 1], &[2, 1, 3, 4, 5, 6, 7, 8, 9, 10]]);
        assert!(s10.setwise_stabilizer_by_enumeration(&set(&[1]), 1000).is_err());
        assert_eq!(s10.setwise_stabilizer(&set(&[1, 2, 3])).order(), Count::from(6u64 * 5040));
    }

    #[test]
    fn suffix_stabilizers_fix_their_suffix() {
        let g = group(6, &[&[2, 1, 3, 4, 5, 6], &[2, 3, 4, 5, 6, 1]]);
        let stabs = suffix_stabilizers(&g);
        assert_eq!(stabs.len(), 7);
        assert_eq!(stabs[6].order(), Count::from(720u64));
        assert_eq!(stabs[0].order(), Count::from(720u64));
        assert_eq!(stabs[4].order(), Count::from(48u64));
        for (k, st) in stabs.iter().enumerate() {
            let suffix = IndexSet::from_unsorted(k..6);
            for x in st.generators() {
                assert_eq!(x.apply_set(&suffix), suffix);
            }
        }
    }
}
