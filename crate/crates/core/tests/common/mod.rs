#![allow(dead_code)]

use colour_contraction::{ColouredGraph, EdgeTarget, RandomSpec};

/// Path 0-2-3-1, single colour: one beta step splits it into two clusters.
pub fn p4() -> ColouredGraph {
    ColouredGraph::new(4, &[(0, 2), (1, 3), (2, 3)], vec![0; 4]).unwrap()
}

const A: u32 = 0;
const B: u32 = 1;
const C: u32 = 2;

/// 24-vertex, 3-colour example that contracts in a single step.
pub fn figure_graph() -> ColouredGraph {
    let colours = vec![
        B, B, B, A, B, A, B, C, C, C, A, A, // 0..11
        A, B, B, B, B, B, B, C, C, C, A, B, // 12..23
    ];
    let edges = [
        (0, 1), (0, 6), (1, 2), (2, 3), (2, 12), (3, 4), (3, 15), (4, 16), (4, 18),
        (5, 21), (5, 22), (6, 7), (6, 23), (7, 8), (8, 9), (9, 10), (10, 11), (11, 12),
        (13, 14), (14, 15), (16, 17), (17, 18), (18, 19), (19, 20), (20, 21), (21, 22), (22, 23),
    ];
    ColouredGraph::new(24, &edges, colours).unwrap()
}

/// Parent array of the figure graph's functional digraph, read off its arrows.
pub const FIGURE_PARENTS: [usize; 24] =
    [0, 0, 1, 3, 4, 5, 0, 7, 7, 8, 10, 10, 11, 13, 13, 14, 4, 16, 4, 19, 19, 20, 5, 6];

/// Roots of the figure graph in the order they are numbered on the figure.
pub const FIGURE_ROOTS: [usize; 8] = [0, 3, 4, 5, 7, 10, 13, 19];

/// The contracted graph drawn next to the figure graph.
pub fn figure_contracted() -> ColouredGraph {
    let edges = [(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 6), (2, 7), (3, 7), (4, 5)];
    ColouredGraph::new(8, &edges, vec![B, A, B, A, C, A, B, C]).unwrap()
}

pub const PROBABILITIES: [f64; 4] = [0.05, 0.1, 0.3, 0.5];

/// Seeded random graphs covering n in [1, 64], every edge probability and
/// 1 to 4 colours: `per_cell` graphs for each (p, colours) pair.
pub fn random_corpus(per_cell: u64) -> Vec<(RandomSpec, ColouredGraph)> {
    let mut out = Vec::new();
    for (pi, &p) in PROBABILITIES.iter().enumerate() {
        for colours in 1..=4u32 {
            for k in 0..per_cell {
                let seed = 1_000_003 * pi as u64 + 10_007 * colours as u64 + k;
                let n = 1 + (seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 32) as usize % 64;
                let spec = RandomSpec { n, edges: EdgeTarget::Probability(p), colour_count: colours, seed };
                out.push((spec, spec.build().unwrap()));
            }
        }
    }
    out
}
