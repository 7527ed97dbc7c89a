#![allow(dead_code)]

use chambers::arrangement::{validate_subgroup_of_aut, Arrangement, ValidationMode};
use chambers::engine::{whitney_extended, whitney_simple, whitney_symmetry, OrbitId, SymmetryOptions, WhitneyVector};
use chambers::oracle::{whitney_bruteforce, RandomConfig};
use chambers::perm::{IndexSet, PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

/// Shapes drawn for the random corpus: `d ≤ 4`, `n ≤ 10`, coefficients in
/// `-3..=3`, about a third of them central.
pub fn random_config(rng: &mut impl Rng) -> RandomConfig {
    RandomConfig {
        dim: rng.gen_range(1..=4),
        n: rng.gen_range(0..=10),
        range: 3,
        central: rng.gen_bool(0.35),
    }
}

/// The group generated by transpositions of coinciding hyperplanes.
pub fn duplicate_swaps(arr: &Arrangement) -> PermGroup {
    let n = arr.len();
    let gens = arr
        .duplicates()
        .into_iter()
        .map(|(i, j)| {
            let mut images: Vec<usize> = (0..n).collect();
            images.swap(i, j);
            Permutation::from_images(images).unwrap()
        })
        .collect();
    PermGroup::new(n, gens).unwrap()
}

fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// A mix of cyclic, dihedral, intransitive and (usually) full symmetric or
/// alternating groups.
pub fn random_group(rng: &mut impl Rng, n: usize) -> PermGroup {
    let gens = match rng.gen_range(0..4) {
        0 => vec![random_permutation(rng, n)],
        1 => vec![random_permutation(rng, n), random_permutation(rng, n)],
        2 => {
            // act only on a random block of points
            let k = rng.gen_range(2..=n.max(2)).min(n);
            let mut points: Vec<usize> = (0..n).collect();
            points.shuffle(rng);
            let block = &points[..k];
            (0..2)
                .map(|_| {
                    let mut shuffled = block.to_vec();
                    shuffled.shuffle(rng);
                    let mut images: Vec<usize> = (0..n).collect();
                    for (&from, &to) in block.iter().zip(&shuffled) {
                        images[from] = to;
                    }
                    Permutation::from_images(images).unwrap()
                })
                .collect()
        }
        _ => {
            let rotation = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
            let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
            vec![rotation, reflection]
        }
    };
    PermGroup::new(n, gens).unwrap()
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = IndexSet> {
    (0u32..1 << n).map(move |m| IndexSet::from_unsorted((0..n).filter(|&i| m >> i & 1 == 1)))
}

pub fn options(orbit_id: OrbitId, seed: u64) -> SymmetryOptions {
    SymmetryOptions {
        orbit_id,
        seed,
        ..SymmetryOptions::default()
    }
}

/// Runs every engine on `arr`, using `group` (which must validate) for the
/// symmetry engine, and returns the common Whitney vector.
pub fn engines_agree(arr: &Arrangement, group: &PermGroup, seed: u64) -> Result<WhitneyVector, String> {
    if !validate_subgroup_of_aut(arr, group, ValidationMode::default()).map_err(|e| e.to_string())? {
        return Err("group does not validate".into());
    }
    let expected = whitney_bruteforce(arr).map_err(|e| e.to_string())?;
    let trivial = PermGroup::trivial(arr.len());
    let mut results = vec![
        ("simple", whitney_simple(arr)),
        ("extended", whitney_extended(arr)),
    ];
    for (name, g, opts) in [
        ("symmetry/trivial", &trivial, SymmetryOptions::default()),
        ("symmetry/pseudo", group, options(OrbitId::Pseudo, seed)),
        ("symmetry/exact", group, options(OrbitId::Exact { budget: 100_000 }, seed)),
        (
            "symmetry/literal",
            group,
            SymmetryOptions {
                skip_levels: false,
                ..options(OrbitId::Pseudo, seed)
            },
        ),
    ] {
        results.push((name, whitney_symmetry(arr, g, &opts).map_err(|e| e.to_string())?));
    }
    for (name, w) in results {
        if w != expected {
            return Err(format!("{name} gave ({w}), brute force ({expected}) on {:?}", rows(arr)));
        }
    }
    Ok(expected)
}

/// Compact description of an arrangement for failure messages.
pub fn rows(arr: &Arrangement) -> Vec<String> {
    arr.hyperplanes()
        .iter()
        .map(|h| {
            let c: Vec<String> = h.coeffs.iter().map(|x| x.to_string()).collect();
            format!("{}|{}", c.join(","), h.constant)
        })
        .collect()
}
