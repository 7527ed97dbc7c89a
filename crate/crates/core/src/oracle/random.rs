use std::collections::HashMap;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::families::Family;
use crate::perm::{PermGroup, Permutation};

/// Shape of a random rational arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomConfig {
    pub dim: usize,
    pub n: usize,
    /// Coefficients are drawn from `-range..=range`.
    pub range: i64,
    /// All constants zero.
    pub central: bool,
}

/// Small-integer arrangement in which roughly one hyperplane in six repeats
/// an earlier one (rescaled) and, when affine, one in six is parallel to an
/// earlier one.
pub fn random_arrangement(rng: &mut impl Rng, cfg: &RandomConfig) -> Arrangement {
    let d = cfg.dim;
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(cfg.n);
    while rows.len() < cfg.n {
        let roll = rng.gen_range(0..6);
        let row = match (roll, rows.choose(rng)) {
            (0, Some(prev)) => {
                let s = *[-2i64, -1, 2, 3].choose(rng).unwrap();
                prev.iter().map(|x| x * s).collect()
            }
            (1, Some(prev)) if !cfg.central => {
                let mut r = prev.clone();
                r[d] += rng.gen_range(1..=cfg.range.max(1));
                r
            }
            _ => {
                let mut r: Vec<i64> = (0..d).map(|_| rng.gen_range(-cfg.range..=cfg.range)).collect();
                if r.iter().all(|&x| x == 0) {
                    continue;
                }
                r.push(if cfg.central { 0 } else { rng.gen_range(-cfg.range..=cfg.range) });
                r
            }
        };
        rows.push(row);
    }
    Arrangement::from_integer_rows(d, &rows).expect("nonzero normals of the right length")
}

/// A signed permutation of coordinates: `(w a)_i = sign_i · a_{perm_i}`.
#[derive(Debug, Clone)]
struct Signed {
    perm: Vec<usize>,
    sign: Vec<i64>,
}

impl Signed {
    fn random(rng: &mut impl Rng, d: usize) -> Self {
        let mut perm: Vec<usize> = (0..d).collect();
        let mut sign = vec![1; d];
        match rng.gen_range(0..3) {
            0 if d >= 2 => {
                let i = rng.gen_range(0..d - 1);
                perm.swap(i, i + 1);
            }
            1 => sign[rng.gen_range(0..d)] = -1,
            _ => {
                perm.rotate_left(1);
                if rng.gen_bool(0.5) {
                    sign[0] = -1;
                }
            }
        }
        Signed { perm, sign }
    }

    /// Image of the hyperplane `a·x = c`; the constant is unchanged.
    fn apply(&self, row: &[i64]) -> Vec<i64> {
        let d = self.perm.len();
        let mut out: Vec<i64> = (0..d).map(|i| self.sign[i] * row[self.perm[i]]).collect();
        out.push(row[d]);
        out
    }
}

/// Primitive integer row with positive leading coefficient.
fn canonical(row: &[i64]) -> Vec<i64> {
    let g = row.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    let lead = row.iter().find(|&&x| x != 0).copied().unwrap_or(1);
    let s = if lead < 0 { -g } else { g };
    row.iter().map(|x| x / s).collect()
}

/// An arrangement closed under a small group `W` of signed coordinate
/// permutations, with `W` acting on its hyperplanes. Base hyperplanes are
/// redrawn until the union of their orbits has between 1 and `max_n`
/// members.
pub fn random_symmetric(rng: &mut impl Rng, dim: usize, max_n: usize) -> Result<Family> {
    loop {
        let gens: Vec<Signed> = (0..rng.gen_range(1..=2)).map(|_| Signed::random(rng, dim)).collect();
        let central = rng.gen_bool(0.5);
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        for _ in 0..rng.gen_range(1..=3) {
            let mut base: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
            if base.iter().all(|&x| x == 0) {
                base[0] = 1;
            }
            base.push(if central { 0 } else { rng.gen_range(-2..=2) });
            let base = canonical(&base);
            if index.contains_key(&base) {
                continue;
            }
            // orbit closure by breadth-first search
            let mut frontier = vec![base];
            while let Some(r) = frontier.pop() {
                if index.contains_key(&r) || rows.len() > max_n {
                    continue;
                }
                index.insert(r.clone(), rows.len());
                rows.push(r.clone());
                frontier.extend(gens.iter().map(|w| canonical(&w.apply(&r))));
            }
        }
        if rows.is_empty() || rows.len() > max_n {
            continue;
        }
        let perms = gens
            .iter()
            .map(|w| Permutation::from_images(rows.iter().map(|r| index[&canonical(&w.apply(r))]).collect()))
            .collect::<Result<Vec<_>>>()?;
        let arrangement = Arrangement::from_integer_rows(dim, &rows)?;
        let group = PermGroup::new(rows.len(), perms)?;
        return Ok(Family { arrangement, group });
    }
}
