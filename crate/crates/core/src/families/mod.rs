//! Arrangement families with symmetry groups acting on their hyperplanes.
//!
//! Hyperplanes are listed in lexicographic order of their defining data
//! (points for separability arrangements, normal vectors for resonance,
//! index subsets for discriminantal arrangements).

mod discriminantal;
mod platonic;

use std::collections::HashMap;

use crate::arith::{FieldScalar, FieldTag};
use crate::arrangement::{Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

pub use discriminantal::discriminantal;
pub use platonic::{platonic, Platonic};

/// An arrangement together with a subgroup of its automorphism group.
#[derive(Clone, Debug)]
pub struct Family {
    pub arrangement: Arrangement,
    pub group: PermGroup,
}

/// A finite point set in `K^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    field: FieldTag,
    points: Vec<Vec<FieldScalar>>,
}

impl PointSet {
    /// Rejects empty sets, ragged dimensions, mixed fields and repeated
    /// points.
    pub fn new(field: FieldTag, points: Vec<Vec<FieldScalar>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidFamily("point set is empty".into()));
        };
        let dim = first.len();
        let mut index = HashMap::new();
        let mut converted = Vec::with_capacity(points.len());
        for (i, p) in points.into_iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    index: i,
                    expected: dim,
                    found: p.len(),
                });
            }
            let p = p.iter().map(|x| x.convert_to(field)).collect::<Result<Vec<_>>>()?;
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::InvalidFamily(format!("point {i} is repeated")));
            }
            converted.push(p);
        }
        Ok(PointSet {
            field,
            points: converted,
        })
    }

    pub fn from_integers(points: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            FieldTag::Rational,
            points.iter().map(|p| p.iter().map(|&x| FieldScalar::from(x)).collect()).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<FieldScalar>] {
        &self.points
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    /// The permutation `i ↦ j` with `f(p_i) = p_j`, if `f` maps the set to
    /// itself.
    pub fn induced(&self, f: impl Fn(&[FieldScalar]) -> Vec<FieldScalar>) -> Option<Permutation> {
        let index: HashMap<&Vec<FieldScalar>, usize> = self.points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let images = self
            .points
            .iter()
            .map(|p| index.get(&f(p)).copied())
            .collect::<Option<Vec<_>>>()?;
        Permutation::from_images(images).ok()
    }

    /// Induced permutations of the adjacent coordinate swaps that preserve
    /// the set.
    pub fn coordinate_symmetries(&self) -> Vec<Permutation> {
        (0..self.dim().saturating_sub(1))
            .filter_map(|i| {
                self.induced(|p| {
                    let mut q = p.to_vec();
                    q.swap(i, i + 1);
                    q
                })
            })
            .collect()
    }
}

/// The separability arrangement of `V`: hyperplanes `a_0 + a·v = 0` in
/// `K^{d+1}`, one per point, in the order of `V`. Its group is generated by
/// the coordinate swaps preserving `V`.
pub fn separability(points: &PointSet) -> Result<Family> {
    let gens = points.coordinate_symmetries();
    separability_with_group(points, gens)
}

fn separability_with_group(points: &PointSet, gens: Vec<Permutation>) -> Result<Family> {
    let field = points.field();
    let hyperplanes = points
        .points()
        .iter()
        .map(|v| {
            let mut coeffs = Vec::with_capacity(v.len() + 1);
            coeffs.push(field.one());
            coeffs.extend(v.iter().cloned());
            Hyperplane::new(coeffs, field.zero())
        })
        .collect();
    let arrangement = Arrangement::new(points.dim() + 1, field, hyperplanes)?;
    let group = PermGroup::new(points.len(), gens)?;
    Ok(Family { arrangement, group })
}

/// All 0/1 vectors of length `d` in lexicographic order.
fn cube(d: usize) -> Vec<Vec<i64>> {
    (0..1u64 << d)
        .map(|m| (0..d).map(|i| (m >> (d - 1 - i) & 1) as i64).collect())
        .collect()
}

fn at_least(name: &str, d: usize, min: usize) -> Result<()> {
    if d < min {
        return Err(Error::InvalidFamily(format!("{name} needs d >= {min}, got {d}")));
    }
    Ok(())
}

fn flip(p: &[FieldScalar], coords: &[usize]) -> Vec<FieldScalar> {
    let one = FieldScalar::from(1);
    let mut q = p.to_vec();
    for &i in coords {
        q[i] = one.sub(&q[i]).expect("rational coordinates");
    }
    q
}

/// Threshold arrangement `T_d`: separability arrangement of `{0,1}^d`, with
/// the hyperoctahedral group (coordinate swaps and `x_1 ↦ 1 - x_1`).
pub fn threshold(d: usize) -> Result<Family> {
    at_least("threshold", d, 1)?;
    let v = PointSet::from_integers(&cube(d))?;
    let mut gens = v.coordinate_symmetries();
    gens.extend(v.induced(|p| flip(p, &[0])));
    separability_with_group(&v, gens)
}

/// Resonance arrangement `R_d`: hyperplanes `Σ c_i x_i = 0` for nonzero
/// `c ∈ {0,1}^d`, with coordinate permutations.
pub fn resonance(d: usize) -> Result<Family> {
    at_least("resonance", d, 1)?;
    let normals: Vec<Vec<i64>> = cube(d).into_iter().skip(1).collect();
    let v = PointSet::from_integers(&normals)?;
    let gens = v.coordinate_symmetries();
    let hyperplanes = normals.iter().map(|c| Hyperplane::from_integers(c, 0)).collect();
    Ok(Family {
        arrangement: Arrangement::new(d, FieldTag::Rational, hyperplanes)?,
        group: PermGroup::new(normals.len(), gens)?,
    })
}

/// Cross-polytope arrangement: separability arrangement of
/// `e_1, -e_1, e_2, -e_2, …`, with the hyperoctahedral group.
pub fn crosspolytope(d: usize) -> Result<Family> {
    at_least("crosspolytope", d, 1)?;
    let mut pts = Vec::with_capacity(2 * d);
    for i in 0..d {
        for s in [1, -1] {
            let mut p = vec![0i64; d];
            p[i] = s;
            pts.push(p);
        }
    }
    let v = PointSet::from_integers(&pts)?;
    let mut gens = v.coordinate_symmetries();
    gens.extend(v.induced(|p| {
        let mut q = p.to_vec();
        q[0] = q[0].neg();
        q
    }));
    separability_with_group(&v, gens)
}

/// Permutohedron arrangement: separability arrangement of all permutations
/// of `(1, …, d)` in lexicographic order, with `S_d` permuting positions.
pub fn permutohedron(d: usize) -> Result<Family> {
    at_least("permutohedron", d, 1)?;
    let mut pts: Vec<Vec<i64>> = vec![(1..=d as i64).collect()];
    loop {
        let mut p = pts.last().unwrap().clone();
        // next permutation in lexicographic order
        let Some(i) = (0..d.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..d).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        pts.push(p);
    }
    separability(&PointSet::from_integers(&pts)?)
}

/// Demicube arrangement `D_d`: separability arrangement of the cube
/// vertices with an odd number of ones, with coordinate swaps and the
/// simultaneous flip of the first two coordinates.
pub fn demicube(d: usize) -> Result<Family> {
    at_least("demicube", d, 2)?;
    let pts: Vec<Vec<i64>> = cube(d).into_iter().filter(|p| p.iter().sum::<i64>() % 2 == 1).collect();
    let v = PointSet::from_integers(&pts)?;
    let mut gens = v.coordinate_symmetries();
    gens.extend(v.induced(|p| flip(p, &[0, 1])));
    separability_with_group(&v, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{validate_subgroup_of_aut, ValidationMode};

    fn order(f: &Family) -> u64 {
        f.group.order().to_u64().unwrap()
    }

    #[test]
    fn sizes_and_group_orders() {
        let t = threshold(3).unwrap();
        assert_eq!((t.arrangement.len(), t.arrangement.dim(), order(&t)), (8, 4, 48));
        let r = resonance(3).unwrap();
        assert_eq!((r.arrangement.len(), r.arrangement.dim(), order(&r)), (7, 3, 6));
        let c = crosspolytope(3).unwrap();
        assert_eq!((c.arrangement.len(), order(&c)), (6, 48));
        let p = permutohedron(3).unwrap();
        assert_eq!((p.arrangement.len(), order(&p)), (6, 6));
        let d = demicube(4).unwrap();
        assert_eq!((d.arrangement.len(), order(&d)), (8, 192));
        assert!(threshold(0).is_err());
        assert!(demicube(1).is_err());
    }

    #[test]
    fn groups_are_automorphisms() {
        for f in [
            threshold(3).unwrap(),
            resonance(3).unwrap(),
            crosspolytope(3).unwrap(),
            permutohedron(3).unwrap(),
            demicube(4).unwrap(),
        ] {
            assert!(validate_subgroup_of_aut(&f.arrangement, &f.group, ValidationMode::default()).unwrap());
            assert!(f.arrangement.is_central());
        }
    }

    #[test]
    fn separability_examples() {
        let v = PointSet::from_integers(&[vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]).unwrap();
        let f = separability(&v).unwrap();
        assert_eq!(f.arrangement, threshold(2).unwrap().arrangement);
        let v = PointSet::from_integers(&[vec![1], vec![-1]]).unwrap();
        assert_eq!(separability(&v).unwrap().arrangement.len(), 2);
        assert!(PointSet::from_integers(&[vec![1], vec![1]]).is_err());
        assert!(PointSet::from_integers(&[]).is_err());
        assert_eq!(order(&separability(&PointSet::from_integers(&[vec![3, 4]]).unwrap()).unwrap()), 1);
    }
}
