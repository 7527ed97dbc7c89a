use std::fmt;

use super::IndexSet;
use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}` stored by images.
///
/// Composition follows function notation: `a.compose(&b)` maps `x` to
/// `a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u16).collect(),
        }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection on 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds from one-line notation with entries `1..=n`, e.g. `[2, 3, 1, 4]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::InvalidPermutation(format!(
                "{one_line:?}: one-line notation uses entries 1..=n"
            )));
        }
        Self::from_images(one_line.iter().map(|&x| x - 1).collect()).map_err(|_| {
            Error::InvalidPermutation(format!("{one_line:?} is not a permutation of 1..={}", one_line.len()))
        })
    }

    pub fn to_one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Largest point not fixed, if any.
    pub fn largest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .rev()
            .find(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    /// Image `gI` of an index set.
    pub fn apply_set(&self, set: &IndexSet) -> IndexSet {
        IndexSet::from_unsorted(set.iter().map(|i| self.images[i] as usize))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_one_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line_round_trip_and_validation() {
        let p = Permutation::from_one_line(&[2, 3, 1, 4]).unwrap();
        assert_eq!(p.to_one_line(), vec![2, 3, 1, 4]);
        assert_eq!(p.apply(0), 1);
        assert!(Permutation::from_one_line(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_line(&[0, 1, 2]).is_err());
        assert!(Permutation::from_one_line(&[1, 5, 2]).is_err());
    }

    #[test]
    fn composition_is_function_composition() {
        let a = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        let b = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        let ab = a.compose(&b);
        for x in 0..3 {
            assert_eq!(ab.apply(x), a.apply(b.apply(x)));
        }
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.largest_moved_point(), Some(2));
        assert_eq!(Permutation::identity(4).largest_moved_point(), None);
    }
}
