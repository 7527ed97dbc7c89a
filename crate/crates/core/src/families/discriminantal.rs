use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Family;
use crate::arith::{Field, FieldScalar, FieldTag, Rational};
use crate::arrangement::echelon::Echelon;
use crate::arrangement::{validate_subgroup_of_aut, Arrangement, Hyperplane, ValidationMode};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

const ATTEMPTS: usize = 64;
const COORDINATE_RANGE: i64 = 1000;
const SAMPLES: usize = 4000;

/// Discriminantal arrangement `Disc_{d,n}`: the `C(n, d)` hyperplanes of
/// `ℚ^d` spanned by `d`-subsets of `n` points, in lexicographic order of the
/// subsets, with `S_n` acting on the points.
///
/// Points are drawn from `[-1000, 1000]^d` with the given seed and redrawn
/// until `S_n` passes the automorphism check (exhaustive up to 24
/// hyperplanes, sampled beyond). Integer points on the moment curve are not
/// used: already for `d = 2, n = 4` the lines `14` and `23` through
/// `t ↦ (t, t²)` at `t = 1..4` are parallel while `12` and `34` are not.
pub fn discriminantal(d: usize, n: usize, seed: u64) -> Result<Family> {
    if d < 1 || n <= d {
        return Err(Error::InvalidFamily(format!("discriminantal needs n > d >= 1, got d = {d}, n = {n}")));
    }
    let subsets = k_subsets(n, d);
    let group = symmetric_on_subsets(n, &subsets)?;
    let mode = if subsets.len() <= 24 {
        ValidationMode::Exhaustive { limit: 24 }
    } else {
        ValidationMode::Sampled { samples: SAMPLES, seed }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let points: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..d).map(|_| rng.gen_range(-COORDINATE_RANGE..=COORDINATE_RANGE)).collect())
            .collect();
        let Ok(arrangement) = from_points(d, &points, &subsets) else {
            continue;
        };
        if validate_subgroup_of_aut(&arrangement, &group, mode)? {
            return Ok(Family { arrangement, group });
        }
    }
    Err(Error::DegenerateConfiguration(format!(
        "no generic configuration of {n} points in dimension {d} found after {ATTEMPTS} attempts"
    )))
}

/// Hyperplanes through the given `d`-subsets of explicit points.
pub(crate) fn from_points(d: usize, points: &[Vec<i64>], subsets: &[Vec<usize>]) -> Result<Arrangement> {
    let hyperplanes = subsets
        .iter()
        .map(|s| through(d, s.iter().map(|&i| &points[i])))
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(d, FieldTag::Rational, hyperplanes)
}

/// The hyperplane `a·x = c` through `d` affinely independent points: the
/// kernel vector `(a, -c)` of the rows `(p, 1)`.
fn through<'a>(d: usize, points: impl Iterator<Item = &'a Vec<i64>>) -> Result<Hyperplane> {
    let rows: Vec<Vec<Rational>> = points
        .map(|p| p.iter().chain(std::iter::once(&1)).map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let e = Echelon::from_rows(d + 1, rows.iter());
    if e.rows().len() != d {
        return Err(Error::DegenerateConfiguration("points are affinely dependent".into()));
    }
    let free = (0..=d).find(|c| !e.pivots().contains(c)).expect("rank d leaves one free column");
    let mut kernel = vec![Rational::zero(); d + 1];
    kernel[free] = Rational::one();
    for (row, &p) in e.rows().iter().zip(e.pivots()) {
        kernel[p] = row[free].neg();
    }
    if kernel[..d].iter().all(|x| x.is_zero()) {
        return Err(Error::DegenerateConfiguration("points span no hyperplane".into()));
    }
    Ok(Hyperplane::new(
        kernel[..d].iter().cloned().map(FieldScalar::from).collect(),
        FieldScalar::from(kernel[d].neg()),
    ))
}

pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// `S_n` (a transposition and an `n`-cycle) acting on `subsets`.
fn symmetric_on_subsets(n: usize, subsets: &[Vec<usize>]) -> Result<PermGroup> {
    let index: std::collections::HashMap<&Vec<usize>, usize> = subsets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let induced = |f: &dyn Fn(usize) -> usize| {
        let images = subsets
            .iter()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|&x| f(x)).collect();
                t.sort_unstable();
                index[&t]
            })
            .collect();
        Permutation::from_images(images)
    };
    let swap = induced(&|x| match x {
        0 => 1,
        1 => 0,
        x => x,
    })?;
    let cycle = induced(&|x| (x + 1) % n)?;
    PermGroup::new(subsets.len(), vec![swap, cycle])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moment_curve_is_not_generic_enough() {
        let points: Vec<Vec<i64>> = (1..=4).map(|t| vec![t, t * t]).collect();
        let subsets = k_subsets(4, 2);
        let a = from_points(2, &points, &subsets).unwrap();
        let g = symmetric_on_subsets(4, &subsets).unwrap();
        assert!(!validate_subgroup_of_aut(&a, &g, ValidationMode::default()).unwrap());
    }

    #[test]
    fn generated_groups_validate() {
        let f = discriminantal(2, 4, 7).unwrap();
        assert_eq!(f.arrangement.len(), 6);
        assert_eq!(f.group.order().to_u64(), Some(24));
        assert_eq!(discriminantal(3, 4, 0).unwrap().arrangement.len(), 4);
        assert!(discriminantal(2, 2, 0).is_err());
        assert!(discriminantal(0, 3, 0).is_err());
    }
}
