use std::cmp::Ordering;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{separability_with_group, Family, PointSet};
use crate::arith::{FieldScalar, FieldTag};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Platonic {
    /// 12 vertices, cyclic permutations of `(0, ±1, ±φ)`, over ℚ(√5).
    Icosahedron,
    /// 20 vertices `(±1, ±1, ±1)` and cyclic permutations of
    /// `(0, ±1/φ, ±φ)`, over ℚ(√5).
    Dodecahedron,
    /// The cube `(±1, ±1, ±1)` with cyclic permutations of `(0, ±φ, ±φ²)`:
    /// the twelve non-cube dodecahedron vertices scaled by `φ`. Not regular:
    /// the two vertex orbits lie on different spheres, and the symmetry group
    /// drops to the 24 elements fixing the cube.
    DodecahedronPhiScaled,
    /// 24 vertices, permutations of `(±1, ±1, 0, 0)`, over ℚ.
    Cell24,
}

impl FromStr for Platonic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "icosahedron" => Ok(Platonic::Icosahedron),
            "dodecahedron" => Ok(Platonic::Dodecahedron),
            "dodecahedron-phi" => Ok(Platonic::DodecahedronPhiScaled),
            "cell24" | "24-cell" => Ok(Platonic::Cell24),
            other => Err(Error::InvalidFamily(format!(
                "unknown polytope {other:?}; expected icosahedron, dodecahedron, dodecahedron-phi or cell24"
            ))),
        }
    }
}

/// Separability arrangement of the vertices of a polytope, with its full
/// symmetry group acting on the vertices.
pub fn platonic(which: Platonic) -> Result<Family> {
    let points = match which {
        Platonic::Icosahedron => icosahedron(),
        Platonic::Dodecahedron => dodecahedron("-1/2+1/2*sqrt(5)", "1/2+1/2*sqrt(5)"),
        Platonic::DodecahedronPhiScaled => dodecahedron("1/2+1/2*sqrt(5)", "3/2+1/2*sqrt(5)"),
        Platonic::Cell24 => cell24(),
    }?;
    let gens = gram_symmetries(&points);
    separability_with_group(&points, gens)
}

fn s(text: &str) -> FieldScalar {
    text.parse().expect("valid literal")
}

fn cyclic(p: &[FieldScalar]) -> Vec<Vec<FieldScalar>> {
    (0..3).map(|r| (0..3).map(|i| p[(i + 3 - r) % 3].clone()).collect()).collect()
}

fn signs(values: &[FieldScalar]) -> Vec<Vec<FieldScalar>> {
    let mut out = vec![Vec::new()];
    for v in values {
        let mut next = Vec::new();
        for prefix in &out {
            let choices: Vec<FieldScalar> = if v.is_zero() { vec![v.clone()] } else { vec![v.clone(), v.neg()] };
            for c in choices {
                let mut p: Vec<FieldScalar> = prefix.clone();
                p.push(c);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn sorted(field: FieldTag, pts: Vec<Vec<FieldScalar>>) -> Result<PointSet> {
    let mut pts = pts
        .into_iter()
        .map(|p| p.iter().map(|x| x.convert_to(field)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    pts.sort_by(|a, b| lex(a, b));
    PointSet::new(field, pts)
}

fn lex(a: &[FieldScalar], b: &[FieldScalar]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.sub(y).expect("same field").signum() {
            0 => continue,
            s if s < 0 => return Ordering::Less,
            _ => return Ordering::Greater,
        }
    }
    Ordering::Equal
}

fn icosahedron() -> Result<PointSet> {
    let phi = s("1/2+1/2*sqrt(5)");
    let pts = signs(&[s("0"), s("1"), phi]).iter().flat_map(|p| cyclic(p)).collect();
    sorted(FieldTag::Quadratic(5), pts)
}

/// The cube together with cyclic permutations of `(0, ±a, ±b)`.
fn dodecahedron(a: &str, b: &str) -> Result<PointSet> {
    let mut pts = signs(&[s("1"), s("1"), s("1")]);
    pts.extend(signs(&[s("0"), s(a), s(b)]).iter().flat_map(|p| cyclic(p)));
    sorted(FieldTag::Quadratic(5), pts)
}

fn cell24() -> Result<PointSet> {
    let mut pts = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut base = vec![s("0"); 4];
            base[i] = s("1");
            base[j] = s("1");
            pts.extend(signs(&base));
        }
    }
    sorted(FieldTag::Rational, pts)
}

/// Generators of the group of vertex permutations preserving all inner
/// products. For a centrally symmetric vertex set spanning the space, these
/// are exactly the restrictions of orthogonal symmetries.
fn gram_symmetries(points: &PointSet) -> Vec<Permutation> {
    let pts = points.points();
    let n = pts.len();
    let dot = |a: &[FieldScalar], b: &[FieldScalar]| {
        a.iter()
            .zip(b)
            .fold(points.field().zero(), |acc, (x, y)| acc.add(&x.mul(y).unwrap()).unwrap())
    };
    let gram: Vec<Vec<FieldScalar>> = pts.iter().map(|a| pts.iter().map(|b| dot(a, b)).collect()).collect();

    let mut elements = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(&gram, &mut image, &mut used, &mut elements);

    // keep only elements that enlarge the group generated so far
    let mut gens: Vec<Permutation> = Vec::new();
    let mut group = PermGroup::trivial(n);
    for g in elements {
        if !group.contains(&g) {
            gens.push(g);
            group = PermGroup::new(n, gens.clone()).expect("same degree");
        }
    }
    gens
}

fn extend(gram: &[Vec<FieldScalar>], image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    let i = image.len();
    let n = gram.len();
    if i == n {
        out.push(Permutation::from_images(image.clone()).expect("bijection by construction"));
        return;
    }
    for c in 0..n {
        if used[c] || gram[c][c] != gram[i][i] {
            continue;
        }
        if (0..i).all(|j| gram[c][image[j]] == gram[i][j]) {
            used[c] = true;
            image.push(c);
            extend(gram, image, used, out);
            image.pop();
            used[c] = false;
        }
    }
}
