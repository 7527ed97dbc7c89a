use std::fmt;

use smallvec::SmallVec;

/// A sorted set of hyperplane indices (0-based).
///
/// Ordering is lexicographic on the sorted sequence, which is the order used
/// by minimal images.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(SmallVec<[u16; 8]>);

impl IndexSet {
    pub fn new() -> Self {
        IndexSet(SmallVec::new())
    }

    pub fn from_unsorted(items: impl IntoIterator<Item = usize>) -> Self {
        let mut v: SmallVec<[u16; 8]> = items.into_iter().map(|x| x as u16).collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&(i as u16)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().map(|&x| x as usize)
    }

    /// `self ∪ {i}`.
    pub fn with(&self, i: usize) -> IndexSet {
        let mut v = self.0.clone();
        match v.binary_search(&(i as u16)) {
            Ok(_) => {}
            Err(pos) => v.insert(pos, i as u16),
        }
        IndexSet(v)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based rendering, as used in reports and the CLI.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.iter().map(|x| x + 1).collect()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        IndexSet::from_unsorted(iter)
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
