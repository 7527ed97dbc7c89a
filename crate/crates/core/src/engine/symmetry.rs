use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{Count, Field};
use crate::arrangement::{with_rows, Arrangement};
use crate::error::{Error, Result};
use crate::perm::{minimal_image_exact, pseudo_minimal_image, suffix_stabilizers, IndexSet, PermGroup, Permutation};

use super::node::leading_unique;
use super::WhitneyVector;

/// How nodes of one level are merged into orbit representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitId {
    /// Greedy descent through random stabilizer elements.
    Pseudo,
    /// Lexicographically least orbit element, with a cap on orbit size.
    Exact { budget: usize },
    /// No identification.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryOptions {
    pub orbit_id: OrbitId,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub seed: u64,
    /// Random elements per level for [`OrbitId::Pseudo`]; `None` means `n`.
    pub pool_size: Option<usize>,
    /// For central arrangements, settle a node with a single remaining
    /// hyperplane immediately.
    pub central_shortcut: bool,
    /// Send each deletion child straight to the next restrictable index and
    /// fold finished nodes into the result as they appear. When off, every
    /// level decides exactly one hyperplane and all nodes reach level `n`.
    pub skip_levels: bool,
}

impl Default for SymmetryOptions {
    fn default() -> Self {
        SymmetryOptions {
            orbit_id: OrbitId::Pseudo,
            threads: None,
            seed: 0,
            pool_size: None,
            central_shortcut: true,
            skip_levels: true,
        }
    }
}

/// Deterministic statistics of a run: identical for every thread count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunStats {
    /// Number of orbit nodes held in `T_k` when level `k` was processed.
    pub level_sizes: Vec<usize>,
    /// Child insertions that landed on an existing key.
    pub identifications: u64,
    /// `Σ ω` over all contributions to the Whitney vector.
    pub terminal_multiplicity: Count,
    /// Orders of the level stabilizers `G_0, …, G_n`.
    pub stabilizer_orders: Vec<Count>,
}

impl RunStats {
    pub fn peak_level_size(&self) -> usize {
        self.level_sizes.iter().copied().max().unwrap_or(0)
    }

    pub fn total_nodes(&self) -> usize {
        self.level_sizes.iter().sum()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub stats: RunStats,
    #[serde(with = "millis")]
    pub level_times: Vec<Duration>,
    #[serde(with = "millis_one")]
    pub stabilizer_time: Duration,
    #[serde(with = "millis_one")]
    pub total_time: Duration,
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Duration], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|d| d.as_secs_f64() * 1e3))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Duration>, D::Error> {
        Ok(Vec::<f64>::deserialize(d)?.into_iter().map(|ms| Duration::from_secs_f64(ms / 1e3)).collect())
    }
}

mod millis_one {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(v.as_secs_f64() * 1e3)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs_f64(f64::deserialize(d)? / 1e3))
    }
}

/// Whitney numbers by breadth-first deletion–restriction in which nodes of
/// level `k` are identified up to the setwise stabilizer of `{k, …, n-1}`.
///
/// `group` must act on the hyperplane indices by automorphisms; see
/// [`validate_subgroup_of_aut`](crate::arrangement::validate_subgroup_of_aut).
pub fn whitney_symmetry(arr: &Arrangement, group: &PermGroup, opts: &SymmetryOptions) -> Result<WhitneyVector> {
    run_report(arr, group, opts).map(|(w, _)| w)
}

/// [`whitney_symmetry`] together with per-level statistics.
pub fn run_report(arr: &Arrangement, group: &PermGroup, opts: &SymmetryOptions) -> Result<(WhitneyVector, RunReport)> {
    let n = arr.len();
    if group.degree() != n {
        return Err(Error::DegreeMismatch {
            group: group.degree(),
            expected: n,
        });
    }
    let start = Instant::now();
    let stabilizers = if group.is_trivial() || opts.orbit_id == OrbitId::None {
        vec![PermGroup::trivial(n); n + 1]
    } else {
        suffix_stabilizers(group)
    };
    let pool_size = opts.pool_size.unwrap_or(n);
    let keyers: Vec<Keyer> = stabilizers
        .iter()
        .enumerate()
        .map(|(k, g)| Keyer::new(g, opts.orbit_id, pool_size, level_seed(opts.seed, k)))
        .collect();
    let stabilizer_time = start.elapsed();

    let ctx = Context {
        keyers: &keyers,
        skip_levels: opts.skip_levels,
        shortcut: opts.central_shortcut && opts.skip_levels && arr.is_central(),
    };
    let run = || with_rows!(arr, rows => ctx.run(rows, arr.dim()));
    let outcome = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }?;

    let stats = RunStats {
        level_sizes: outcome.level_sizes,
        identifications: outcome.identifications,
        terminal_multiplicity: outcome.terminal,
        stabilizer_orders: stabilizers.iter().map(|g| g.order()).collect(),
    };
    let report = RunReport {
        stats,
        level_times: outcome.level_times,
        stabilizer_time,
        total_time: start.elapsed(),
    };
    Ok((WhitneyVector::new(outcome.b), report))
}

fn level_seed(seed: u64, k: usize) -> u64 {
    seed ^ (k as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Orbit identification for one level.
enum Keyer {
    Identity,
    Pseudo(Vec<Permutation>),
    Exact(PermGroup, usize),
}

impl Keyer {
    fn new(group: &PermGroup, mode: OrbitId, pool_size: usize, seed: u64) -> Keyer {
        if group.is_trivial() {
            return Keyer::Identity;
        }
        match mode {
            OrbitId::None => Keyer::Identity,
            OrbitId::Pseudo => {
                let mut elems = group.random_elements(pool_size, seed);
                elems.retain(|g| !g.is_identity());
                Keyer::Pseudo(elems)
            }
            OrbitId::Exact { budget } => Keyer::Exact(group.clone(), budget),
        }
    }

    fn key(&self, set: IndexSet) -> Result<IndexSet> {
        match self {
            Keyer::Identity => Ok(set),
            Keyer::Pseudo(elems) => Ok(pseudo_minimal_image(&set, elems)),
            Keyer::Exact(g, budget) => minimal_image_exact(g, &set, *budget),
        }
    }
}

struct Context<'a> {
    keyers: &'a [Keyer],
    skip_levels: bool,
    shortcut: bool,
}

struct Outcome {
    b: Vec<Count>,
    level_sizes: Vec<usize>,
    level_times: Vec<Duration>,
    identifications: u64,
    terminal: Count,
}

/// What one node turns into, before multiplicities are applied.
#[derive(Default)]
struct Children {
    /// Whitney entries to increment by the node's multiplicity.
    settle: Vec<usize>,
    /// `(level, key)` of child nodes.
    nodes: Vec<(usize, IndexSet)>,
}

impl Context<'_> {
    fn run<F: Field>(&self, rows: &[Vec<F>], dim: usize) -> Result<Outcome> {
        let n = rows.len();
        let mut levels: Vec<HashMap<IndexSet, Count>> = vec![HashMap::new(); n + 1];
        levels[0].insert(IndexSet::new(), Count::one());
        let mut out = Outcome {
            b: vec![Count::zero(); dim + 1],
            level_sizes: Vec::with_capacity(n + 1),
            level_times: Vec::with_capacity(n + 1),
            identifications: 0,
            terminal: Count::zero(),
        };
        for k in 0..=n {
            let started = Instant::now();
            let mut nodes: Vec<(IndexSet, Count)> = std::mem::take(&mut levels[k]).into_iter().collect();
            nodes.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            out.level_sizes.push(nodes.len());

            let children: Vec<Children> = nodes
                .par_iter()
                .map(|(set, _)| self.expand(rows, set, k))
                .collect::<Result<_>>()?;

            for ((_, omega), ch) in nodes.iter().zip(children) {
                for i in ch.settle {
                    out.b[i] += omega;
                    out.terminal += omega;
                }
                for (level, key) in ch.nodes {
                    match levels[level].get_mut(&key) {
                        Some(m) => {
                            *m += omega;
                            out.identifications += 1;
                        }
                        None => {
                            levels[level].insert(key, omega.clone());
                        }
                    }
                }
            }
            out.level_times.push(started.elapsed());
        }
        Ok(out)
    }

    fn expand<F: Field>(&self, rows: &[Vec<F>], set: &IndexSet, k: usize) -> Result<Children> {
        let n = rows.len();
        let mut ch = Children::default();
        if !self.skip_levels {
            if k == n {
                ch.settle.push(set.len());
                return Ok(ch);
            }
            if let Some((j, _)) = leading_unique(rows, set, k) {
                if j == k {
                    ch.nodes.push((k + 1, self.keyers[k + 1].key(set.with(k))?));
                }
            }
            ch.nodes.push((k + 1, self.keyers[k + 1].key(set.clone())?));
            return Ok(ch);
        }
        match leading_unique(rows, set, k) {
            None => ch.settle.push(set.len()),
            Some((_, None)) if self.shortcut => {
                ch.settle.push(set.len());
                ch.settle.push(set.len() + 1);
            }
            Some((u1, u2)) => {
                ch.nodes.push((u1 + 1, self.keyers[u1 + 1].key(set.with(u1))?));
                match u2 {
                    Some(u2) => ch.nodes.push((u2, self.keyers[u2].key(set.clone())?)),
                    None => ch.settle.push(set.len()),
                }
            }
        }
        Ok(ch)
    }
}
