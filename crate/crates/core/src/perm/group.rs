use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Permutation;
use crate::arith::Count;
use crate::error::{Error, Result};

/// One level of a stabilizer chain: the orbit of `base` under `G^(i)` with a
/// transversal, plus bookkeeping for which Schreier generators were sifted.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base: usize,
    pub(crate) orbit: Vec<usize>,
    /// `transversal[x]` maps `base` to `x` for `x` in the orbit.
    pub(crate) transversal: Vec<Option<Permutation>>,
    pub(crate) transversal_inv: Vec<Option<Permutation>>,
    /// Indices into the strong generating set; these generate `G^(i)`.
    pub(crate) gens: Vec<usize>,
    /// Per orbit position: how many of `gens` have been processed.
    processed: Vec<usize>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut transversal = vec![None; n];
        let mut transversal_inv = vec![None; n];
        transversal[base] = Some(Permutation::identity(n));
        transversal_inv[base] = Some(Permutation::identity(n));
        Level {
            base,
            orbit: vec![base],
            transversal,
            transversal_inv,
            gens: Vec::new(),
            processed: vec![0],
        }
    }
}

/// Base and strong generating set built by deterministic Schreier–Sims.
///
/// New base points are the largest point moved by the element that forces
/// the extension, so the base tends to run `n-1, n-2, …`.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    n: usize,
    pub(crate) strong: Vec<Permutation>,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub(crate) fn build(n: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain {
            n,
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in gens {
            let (residue, depth) = chain.sift(g.clone(), 0);
            if !residue.is_identity() {
                chain.add_strong(residue, depth);
            }
        }
        for l in (0..chain.levels.len()).rev() {
            chain.complete(l);
        }
        chain
    }

    /// Strips `g` through levels `start..`; returns the residue and the level
    /// at which stripping stopped.
    pub(crate) fn sift(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let x = g.apply(level.base);
            match &level.transversal_inv[x] {
                None => return (g, l),
                Some(u_inv) => g = u_inv.compose(&g),
            }
        }
        (g, self.levels.len())
    }

    fn add_strong(&mut self, g: Permutation, depth: usize) {
        if depth == self.levels.len() {
            let base = g
                .largest_moved_point()
                .expect("non-identity residue moves a point");
            self.levels.push(Level::new(base, self.n));
        }
        let idx = self.strong.len();
        self.strong.push(g);
        for level in &mut self.levels[..=depth] {
            level.gens.push(idx);
        }
    }

    /// Sifts every pending Schreier generator of level `i`.
    fn complete(&mut self, i: usize) {
        let mut pos = 0;
        while pos < self.levels[i].orbit.len() {
            while self.levels[i].processed[pos] < self.levels[i].gens.len() {
                let gi = self.levels[i].gens[self.levels[i].processed[pos]];
                self.levels[i].processed[pos] += 1;
                self.process_pair(i, pos, gi);
            }
            pos += 1;
        }
    }

    fn process_pair(&mut self, i: usize, pos: usize, gi: usize) {
        let level = &self.levels[i];
        let gamma = level.orbit[pos];
        let s = &self.strong[gi];
        let img = s.apply(gamma);
        let u_gamma = level.transversal[gamma].as_ref().expect("orbit point has transversal");
        if level.transversal[img].is_none() {
            let u = s.compose(u_gamma);
            let u_inv = u.inverse();
            let level = &mut self.levels[i];
            level.transversal[img] = Some(u);
            level.transversal_inv[img] = Some(u_inv);
            level.orbit.push(img);
            level.processed.push(0);
            return;
        }
        let h = level.transversal_inv[img]
            .as_ref()
            .unwrap()
            .compose(&s.compose(u_gamma));
        let (residue, depth) = self.sift(h, i + 1);
        if residue.is_identity() {
            return;
        }
        self.add_strong(residue, depth);
        for l in (i + 1..=depth).rev() {
            self.complete(l);
        }
    }

    pub(crate) fn order(&self) -> Count {
        let mut c = Count::one();
        for level in &self.levels {
            c = c * Count::from(level.orbit.len());
        }
        c
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        let (residue, _) = self.sift(g.clone(), 0);
        residue.is_identity()
    }

    pub(crate) fn random_element(&self, rng: &mut impl Rng) -> Permutation {
        let mut g = Permutation::identity(self.n);
        for level in &self.levels {
            let x = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.compose(level.transversal[x].as_ref().unwrap());
        }
        g
    }

    /// Orbit partition of `{0..n}` under `G^(l)`; `l == levels.len()` gives
    /// singletons. Returned as an orbit id per point.
    pub(crate) fn orbit_ids(&self, l: usize) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        if l < self.levels.len() {
            for &gi in &self.levels[l].gens {
                let g = &self.strong[gi];
                for x in 0..self.n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        (0..self.n).map(|x| find(&mut parent, x)).collect()
    }
}

/// A permutation group on `{0, …, n-1}` given by generators, with a
/// stabilizer chain built at construction.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    pub(crate) chain: StabChain,
}

impl PermGroup {
    pub fn new(n: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != n {
                return Err(Error::DegreeMismatch {
                    group: g.degree(),
                    expected: n,
                });
            }
        }
        let generators: Vec<Permutation> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = StabChain::build(n, &generators);
        Ok(PermGroup {
            n,
            generators,
            chain,
        })
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup::new(n, Vec::new()).expect("no generators to validate")
    }

    /// Generators in one-line notation (entries `1..=n`).
    pub fn from_one_line(n: usize, gens: &[Vec<usize>]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| Permutation::from_one_line(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generators_one_line(&self) -> Vec<Vec<usize>> {
        self.generators.iter().map(|g| g.to_one_line()).collect()
    }

    pub fn order(&self) -> Count {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.n && self.chain.contains(g)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.base).collect()
    }

    /// `m` uniformly random elements: one random transversal representative
    /// per chain level, composed. Deterministic in `seed`.
    pub fn random_elements(&self, m: usize, seed: u64) -> Vec<Permutation> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..m).map(|_| self.chain.random_element(&mut rng)).collect()
    }

    /// Every element, in chain order. Intended for small groups and tests.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.n)];
        for level in self.chain.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &x in &level.orbit {
                let u = level.transversal[x].as_ref().unwrap();
                for g in &out {
                    next.push(u.compose(g));
                }
            }
            out = next;
        }
        out
    }
}
