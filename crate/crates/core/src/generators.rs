//! Seeded random instances.
//!
//! All randomness comes from ChaCha8 seeded with a `u64`, so a seed fully
//! determines the output on every platform.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{ColouredGraph, Colour};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("{m} edges requested but a simple graph on {n} vertices has at most {max}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("colour count must be at least 1")]
    NoColours,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeTarget {
    /// Exactly this many distinct edges, uniformly.
    Count(usize),
    /// Each pair independently with this probability.
    Probability(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub edges: EdgeTarget,
    pub colour_count: u32,
    pub seed: u64,
}

impl RandomSpec {
    pub fn validate(&self) -> Result<(), GenError> {
        let max = max_edges(self.n);
        match self.edges {
            EdgeTarget::Count(m) if m > max => return Err(GenError::TooManyEdges { n: self.n, m, max }),
            EdgeTarget::Probability(p) if !(0.0..=1.0).contains(&p) => return Err(GenError::InvalidProbability(p)),
            _ => {}
        }
        if self.colour_count == 0 {
            return Err(GenError::NoColours);
        }
        Ok(())
    }

    /// Erdős–Rényi graph coloured with `colour_count` colours; the colour
    /// stream is seeded independently of the edge stream.
    pub fn build(&self) -> Result<ColouredGraph, GenError> {
        self.validate()?;
        let g = gen_erdos_renyi(self)?;
        assign_random_colours(&g, self.colour_count, self.seed.wrapping_add(0x9E37_79B9_7F4A_7C15))
    }
}

pub fn max_edges(n: usize) -> usize {
    n.saturating_mul(n.saturating_sub(1)) / 2
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    loop {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            return (u.min(v), u.max(v));
        }
    }
}

/// Uniform G(n, m) by rejection over pair draws, or G(n, p) by per-pair
/// Bernoulli trials. Colours are all 0.
pub fn gen_erdos_renyi(spec: &RandomSpec) -> Result<ColouredGraph, GenError> {
    let n = spec.n;
    let max = max_edges(n);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let edges: Vec<(usize, usize)> = match spec.edges {
        EdgeTarget::Count(m) if m > max => return Err(GenError::TooManyEdges { n, m, max }),
        EdgeTarget::Count(m) if m > max / 2 => {
            // draw the complement instead
            let mut missing = HashSet::with_capacity(max - m);
            while missing.len() < max - m {
                missing.insert(random_pair(&mut rng, n));
            }
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|e| !missing.contains(e))
                .collect()
        }
        EdgeTarget::Count(m) => {
            // Top up with fresh draws until m distinct pairs remain: the
            // result is the first m distinct pairs of the draw stream.
            let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m + m / 8);
            while edges.len() < m {
                let missing = m - edges.len();
                edges.extend((0..missing).map(|_| random_pair(&mut rng, n)));
                edges.sort_unstable();
                edges.dedup();
            }
            edges
        }
        EdgeTarget::Probability(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(GenError::InvalidProbability(p));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            edges
        }
    };
    Ok(ColouredGraph::new(n, &edges, vec![0; n]).expect("generated edges are simple and in range"))
}

/// Recolours every vertex with an independent uniform colour in `[0, c)`.
pub fn assign_random_colours(g: &ColouredGraph, c: u32, seed: u64) -> Result<ColouredGraph, GenError> {
    if c == 0 {
        return Err(GenError::NoColours);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colours: Vec<Colour> = (0..g.n()).map(|_| rng.gen_range(0..c)).collect();
    Ok(g.with_colours(colours).expect("one colour per vertex"))
}

/// Relabels `g` by a uniform random permutation. Returns the relabelled
/// graph and `perm` with `perm[old] = new`.
pub fn permute_enumeration(g: &ColouredGraph, seed: u64) -> (ColouredGraph, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng);
    (relabel(g, &perm), perm)
}

/// Applies `perm[old] = new` to a graph.
pub fn relabel(g: &ColouredGraph, perm: &[usize]) -> ColouredGraph {
    let mut colours = vec![0; g.n()];
    for (old, &new) in perm.iter().enumerate() {
        colours[new] = g.colour(old);
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    ColouredGraph::new(g.n(), &edges, colours).expect("permutation preserves simplicity")
}

/// Inverse of a permutation given as `perm[old] = new`.
pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0; perm.len()];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    inverse
}
