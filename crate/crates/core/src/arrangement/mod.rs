//! Arrangements, flats and the classification of hyperplanes modulo a flat.

mod automorphism;
pub(crate) mod echelon;
mod hyperplane;
pub(crate) mod rows;

use std::collections::HashSet;

use crate::arith::{Count, Field, FieldScalar, FieldTag, Quadratic, Rational, ScalarField};
use crate::error::{Error, Result};
use crate::perm::IndexSet;
use echelon::{Echelon, Reduced};

pub use automorphism::{validate_subgroup_of_aut, ValidationMode, DEFAULT_EXHAUSTIVE_LIMIT};
pub use hyperplane::Hyperplane;

/// Augmented rows in the concrete field of the arrangement.
#[derive(Clone, Debug)]
pub(crate) enum TypedRows {
    Rational(Vec<Vec<Rational>>),
    Quadratic(Vec<Vec<Quadratic>>),
}

/// Calls a generic function on the arrangement's rows in their concrete
/// field: `with_rows!(arr, rows => body)` binds `rows: &[Vec<F>]`.
macro_rules! with_rows {
    ($arr:expr, $rows:ident => $body:expr) => {
        match $arr.typed_rows() {
            $crate::arrangement::TypedRows::Rational($rows) => $body,
            $crate::arrangement::TypedRows::Quadratic($rows) => $body,
        }
    };
}
pub(crate) use with_rows;

/// An ordered list of affine hyperplanes in `K^d`.
#[derive(Clone, Debug)]
pub struct Arrangement {
    dim: usize,
    field: FieldTag,
    hyperplanes: Vec<Hyperplane>,
    rows: TypedRows,
}

impl PartialEq for Arrangement {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.field == other.field && self.hyperplanes == other.hyperplanes
    }
}

impl Eq for Arrangement {}

impl Arrangement {
    /// Validates dimensions and normals and moves every scalar into `field`.
    pub fn new(dim: usize, field: FieldTag, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let hyperplanes = hyperplanes
            .iter()
            .enumerate()
            .map(|(i, h)| {
                h.check(i, dim)?;
                h.convert_to(field)
            })
            .collect::<Result<Vec<_>>>()?;
        let rows = match field {
            FieldTag::Rational => TypedRows::Rational(typed(&hyperplanes)),
            FieldTag::Quadratic(_) => TypedRows::Quadratic(typed(&hyperplanes)),
        };
        Ok(Arrangement {
            dim,
            field,
            hyperplanes,
            rows,
        })
    }

    /// Rational arrangement from integer rows `(a_1, …, a_d, c)`.
    pub fn from_integer_rows(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let hyperplanes = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != dim + 1 {
                    return Err(Error::DimensionMismatch {
                        index: i,
                        expected: dim,
                        found: r.len().saturating_sub(1),
                    });
                }
                Ok(Hyperplane::from_integers(&r[..dim], r[dim]))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, FieldTag::Rational, hyperplanes)
    }

    pub fn empty(dim: usize, field: FieldTag) -> Self {
        Self::new(dim, field, Vec::new()).expect("no hyperplanes to validate")
    }

    fn from_typed<F: ScalarField>(dim: usize, field: FieldTag, rows: &[Vec<F>]) -> Self {
        let hyperplanes = rows
            .iter()
            .map(|r| Hyperplane::new(r[..dim].iter().map(|x| x.to_scalar()).collect(), r[dim].to_scalar()))
            .collect();
        Self::new(dim, field, hyperplanes).expect("rows come from a valid arrangement")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub(crate) fn typed_rows(&self) -> &TypedRows {
        &self.rows
    }

    fn check_set(&self, set: &IndexSet) -> Result<()> {
        match set.max() {
            Some(m) if m >= self.len() => Err(Error::IndexOutOfRange {
                index: m,
                n: self.len(),
            }),
            _ => Ok(()),
        }
    }

    /// Pairs `(i, j)`, `i < j`, of hyperplanes that coincide.
    pub fn duplicates(&self) -> Vec<(usize, usize)> {
        with_rows!(self, rows => {
            let normal: Vec<_> = rows.iter().map(|r| rows::normalized(r)).collect();
            let mut out = Vec::new();
            for j in 0..normal.len() {
                for i in 0..j {
                    if normal[i] == normal[j] {
                        out.push((i, j));
                    }
                }
            }
            out
        })
    }

    /// Same arrangement with repeated hyperplanes removed (first copy kept).
    pub fn without_duplicates(&self) -> Arrangement {
        with_rows!(self, rows => {
            Arrangement::from_typed(self.dim, self.field, &rows::dedup(rows.clone()))
        })
    }

    /// Whether all hyperplanes share a common point.
    pub fn is_central(&self) -> bool {
        with_rows!(self, rows => Echelon::from_rows(self.dim + 1, rows.iter()).is_consistent())
    }

    /// Rank of the coefficient matrix, an upper bound for every `r(I)`.
    pub fn rank(&self) -> usize {
        with_rows!(self, rows => {
            let coeffs: Vec<_> = rows.iter().map(|r| {
                let mut c = r.clone();
                let last = c.len() - 1;
                c[last] = c[0].zero_like();
                c
            }).collect();
            Echelon::from_rows(self.dim + 1, coeffs.iter()).rank()
        })
    }

    /// Canonical basis of `L_I`.
    pub fn flat_basis(&self, set: &IndexSet) -> Result<FlatBasis> {
        self.check_set(set)?;
        Ok(with_rows!(self, rows => {
            let e = Echelon::from_rows(self.dim + 1, set.iter().map(|i| &rows[i]));
            FlatBasis {
                rows: e.rows().iter().map(|r| r.iter().map(|x| x.to_scalar()).collect()).collect(),
                rank: e.rank(),
                consistent: e.is_consistent(),
            }
        }))
    }

    /// Classifies hyperplanes `k, …, n-1` against `L_I`.
    pub fn classify(&self, set: &IndexSet, k: usize) -> Result<Classification> {
        self.check_set(set)?;
        if k > self.len() {
            return Err(Error::IndexOutOfRange { index: k, n: self.len() });
        }
        with_rows!(self, rows => {
            let e = Echelon::from_rows(self.dim + 1, set.iter().map(|i| &rows[i]));
            if !e.is_consistent() {
                return Err(Error::InconsistentFlat);
            }
            let reduced: Vec<_> = rows[k..].iter().map(|r| e.classify(r)).collect();
            let unique: Vec<usize> = unique_in_suffix(&reduced).into_iter().map(|j| j + k).collect();
            let statuses = reduced
                .into_iter()
                .map(|r| match r {
                    Reduced::Proper(v) => Status::Proper(v.iter().map(|x| x.to_scalar()).collect()),
                    Reduced::Redundant => Status::Redundant,
                    Reduced::Empty => Status::Empty,
                })
                .collect();
            Ok(Classification {
                k,
                statuses,
                j_min: unique.first().copied(),
                unique,
            })
        })
    }

    /// The arrangement with hyperplane `j` removed.
    pub fn deletion(&self, j: usize) -> Result<Arrangement> {
        if j >= self.len() {
            return Err(Error::IndexOutOfRange { index: j, n: self.len() });
        }
        let mut hyperplanes = self.hyperplanes.clone();
        hyperplanes.remove(j);
        Arrangement::new(self.dim, self.field, hyperplanes)
    }

    /// The arrangement induced on hyperplane `j`, in `d-1` coordinates
    /// (the coordinate of the first nonzero coefficient of `H_j` is
    /// eliminated). Hyperplanes containing or missing `H_j` are dropped and
    /// coinciding ones merged.
    pub fn restriction(&self, j: usize) -> Result<Arrangement> {
        if j >= self.len() {
            return Err(Error::IndexOutOfRange { index: j, n: self.len() });
        }
        Ok(with_rows!(self, rows => {
            Arrangement::from_typed(self.dim - 1, self.field, &rows::restrict(rows, j))
        }))
    }

    /// Hyperplanes listed in a new order: entry `i` of the result is
    /// hyperplane `order[i]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> Result<Arrangement> {
        let mut seen = HashSet::new();
        let mut hyperplanes = Vec::with_capacity(order.len());
        for &i in order {
            if i >= self.len() || !seen.insert(i) {
                return Err(Error::IndexOutOfRange { index: i, n: self.len() });
            }
            hyperplanes.push(self.hyperplanes[i].clone());
        }
        Arrangement::new(self.dim, self.field, hyperplanes)
    }
}

fn typed<F: ScalarField>(hyperplanes: &[Hyperplane]) -> Vec<Vec<F>> {
    hyperplanes
        .iter()
        .map(|h| {
            h.coeffs
                .iter()
                .chain(std::iter::once(&h.constant))
                .map(F::from_scalar)
                .collect()
        })
        .collect()
}

/// Positions whose reduced row is proper and does not recur later.
pub(crate) fn unique_in_suffix<F: std::hash::Hash + Eq>(reduced: &[Reduced<F>]) -> Vec<usize> {
    let mut later: HashSet<&Vec<F>> = HashSet::new();
    let mut out = Vec::new();
    for (j, r) in reduced.iter().enumerate().rev() {
        if let Reduced::Proper(v) = r {
            if later.insert(v) {
                out.push(j);
            }
        }
    }
    out.reverse();
    out
}

/// Reduced row echelon basis of the augmented rows of `L_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatBasis {
    pub rows: Vec<Vec<FieldScalar>>,
    /// Codimension of `L_I` (meaningful when consistent).
    pub rank: usize,
    /// `L_I ≠ ∅`.
    pub consistent: bool,
}

/// Status of a hyperplane modulo a flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    /// `H_j ∩ L_I` is a hyperplane of `L_I`; the canonical reduced row.
    Proper(Vec<FieldScalar>),
    /// `H_j ⊇ L_I`.
    Redundant,
    /// `H_j ∩ L_I = ∅`.
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub k: usize,
    /// Status of hyperplane `k + i` at position `i`.
    pub statuses: Vec<Status>,
    /// Indices that are proper and unique among `j, …, n-1`, ascending.
    pub unique: Vec<usize>,
    pub j_min: Option<usize>,
}

impl Classification {
    pub fn status(&self, j: usize) -> &Status {
        &self.statuses[j - self.k]
    }
}

/// A node `(I, J)` of extended deletion–restriction with `J = {level, …, n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RestrictionRep {
    pub set: IndexSet,
    pub level: usize,
    pub multiplicity: Count,
}

impl RestrictionRep {
    /// `(∅, {0, …, n-1})` with multiplicity 1.
    pub fn root() -> Self {
        RestrictionRep {
            set: IndexSet::new(),
            level: 0,
            multiplicity: Count::one(),
        }
    }

    /// Drops the first hyperplane of `J`.
    pub fn delete(&self) -> Self {
        RestrictionRep {
            set: self.set.clone(),
            level: self.level + 1,
            multiplicity: self.multiplicity.clone(),
        }
    }

    /// Restricts to hyperplane `j ≥ level`; `j` must be proper and unique
    /// among `j, …, n-1` modulo `L_I`.
    pub fn restrict(&self, arr: &Arrangement, j: usize) -> Result<Self> {
        if j < self.level || j >= arr.len() {
            return Err(Error::NotRestrictable(j));
        }
        let c = arr.classify(&self.set, j)?;
        if c.j_min != Some(j) {
            return Err(Error::NotRestrictable(j));
        }
        Ok(RestrictionRep {
            set: self.set.with(j),
            level: j + 1,
            multiplicity: self.multiplicity.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn running_example() -> Arrangement {
        Arrangement::from_integer_rows(2, &[vec![-1, 1, 1], vec![1, 0, 0], vec![1, 1, 1], vec![0, 1, 0]]).unwrap()
    }

    fn set(one_based: &[usize]) -> IndexSet {
        IndexSet::from_unsorted(one_based.iter().map(|x| x - 1))
    }

    #[test]
    fn flat_examples() {
        let a = running_example();
        let f = a.flat_basis(&set(&[2, 4])).unwrap();
        assert!(f.consistent);
        assert_eq!(f.rank, 2);
        let f = a.flat_basis(&set(&[1, 2, 3])).unwrap();
        assert!(f.consistent);
        assert_eq!(f.rank, 2);
        assert_eq!(f.rows[1][2], FieldScalar::from(1));
        assert!(!a.flat_basis(&set(&[1, 2, 3, 4])).unwrap().consistent);
        assert!(a.flat_basis(&set(&[5])).is_err());
    }

    #[test]
    fn classify_examples() {
        let a = running_example();
        let c = a.classify(&set(&[2]), 2).unwrap();
        assert!(matches!(c.status(2), Status::Proper(_)));
        assert!(matches!(c.status(3), Status::Proper(_)));
        assert_ne!(c.status(2), c.status(3));
        assert_eq!(c.j_min, Some(2));

        let c = a.classify(&set(&[1, 2]), 2).unwrap();
        assert_eq!(c.status(2), &Status::Redundant);
        assert_eq!(c.status(3), &Status::Empty);
        assert_eq!(c.j_min, None);

        let c = a.classify(&IndexSet::new(), 0).unwrap();
        assert!(c.statuses.iter().all(|s| matches!(s, Status::Proper(_))));
        assert_eq!(c.j_min, Some(0));

        assert_eq!(a.classify(&set(&[1, 2, 3, 4]), 0), Err(Error::InconsistentFlat));
    }

    #[test]
    fn restriction_reps() {
        let a = running_example();
        let root = RestrictionRep::root();
        let r = root.restrict(&a, 0).unwrap();
        assert_eq!((r.set.to_vec(), r.level), (vec![0], 1));
        let d = root.delete();
        assert_eq!((d.set.len(), d.level), (0, 1));
        let leaf = root.delete().delete().delete().delete();
        assert_eq!((leaf.set.len(), leaf.level), (0, 4));
        // H2 ∩ H1 coincides with H3 ∩ H1, so H2 is not restrictable below {1}
        let n1 = root.restrict(&a, 0).unwrap();
        assert_eq!(n1.restrict(&a, 1), Err(Error::NotRestrictable(1)));
        assert!(n1.restrict(&a, 2).is_ok());
    }

    #[test]
    fn validation_errors() {
        let bad = Arrangement::new(2, FieldTag::Rational, vec![Hyperplane::from_integers(&[0, 0], 1)]);
        assert_eq!(bad.unwrap_err(), Error::ZeroNormal(0));
        let bad = Arrangement::new(2, FieldTag::Rational, vec![Hyperplane::from_integers(&[1, 0, 0], 1)]);
        assert!(matches!(bad.unwrap_err(), Error::DimensionMismatch { index: 0, .. }));
        let sqrt5: FieldScalar = "sqrt(5)".parse().unwrap();
        let bad = Arrangement::new(1, FieldTag::Rational, vec![Hyperplane::new(vec![sqrt5], FieldScalar::from(0))]);
        assert!(matches!(bad.unwrap_err(), Error::FieldMismatch { .. }));
    }

    #[test]
    fn duplicates_and_centrality() {
        let a = Arrangement::from_integer_rows(2, &[vec![1, 0, 0], vec![2, 0, 0], vec![0, 1, 0], vec![1, 1, 3]]).unwrap();
        assert_eq!(a.duplicates(), vec![(0, 1)]);
        assert_eq!(a.without_duplicates().len(), 3);
        assert!(!running_example().is_central());
        assert!(a.deletion(3).unwrap().is_central());
    }

    #[test]
    fn explicit_restriction() {
        let a = running_example();
        let r = a.restriction(1).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.len(), 2);
    }
}
