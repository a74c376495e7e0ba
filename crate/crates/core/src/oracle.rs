//! Reference colour-component machinery.
//!
//! Components are grown by repeated frontier expansion over colour
//! neighbourhoods and the quotient is assembled from an explicit edge list.
//! Nothing here shares code with the beta engine; it exists to check it.

use crate::graph::{ColouredGraph, Colour, GraphError};

/// The colour partition of a graph: its colour components in discovery order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourPartition {
    pub blocks: Vec<Vec<usize>>,
    pub block_colour: Vec<Colour>,
}

impl ColourPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of every vertex.
    pub fn assignment(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                out[v] = i;
            }
        }
        out
    }

    /// Blocks as sorted member lists, sorted, for comparison as a set of sets.
    pub fn canonical_blocks(&self) -> Vec<Vec<usize>> {
        canonical_set_of_sets(self.blocks.iter().cloned())
    }
}

/// Sorts each block and then the list of blocks.
pub fn canonical_set_of_sets(blocks: impl IntoIterator<Item = Vec<usize>>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = blocks
        .into_iter()
        .map(|mut b| {
            b.sort_unstable();
            b
        })
        .collect();
    out.sort();
    out
}

/// The colour component containing `v`, ascending.
///
/// Starts from `{v}` and keeps absorbing the colour neighbourhood of the
/// current set until it is empty.
pub fn eval_colour_component(g: &ColouredGraph, v: usize) -> Result<Vec<usize>, GraphError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { v, n: g.n() });
    }
    let mut component = Vec::new();
    let mut frontier = vec![v];
    while !frontier.is_empty() {
        component.extend_from_slice(&frontier);
        component.sort_unstable();
        frontier = g.colour_neighbourhood_set(&component)?;
    }
    Ok(component)
}

/// All colour components, each grown from the lowest-index uncovered vertex.
pub fn eval_colour_partition(g: &ColouredGraph) -> ColourPartition {
    let mut covered = vec![false; g.n()];
    let mut blocks = Vec::new();
    let mut block_colour = Vec::new();
    for v in 0..g.n() {
        if covered[v] {
            continue;
        }
        let block = eval_colour_component(g, v).expect("vertex in range");
        for &u in &block {
            covered[u] = true;
        }
        block_colour.push(g.colour(v));
        blocks.push(block);
    }
    ColourPartition { blocks, block_colour }
}

/// Quotient of `g` by a partition: one vertex per block in block order,
/// inheriting adjacency between blocks and the block colour.
pub fn quotient_by_partition(g: &ColouredGraph, partition: &ColourPartition) -> Result<ColouredGraph, GraphError> {
    let block_of = partition.assignment(g.n());
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(GraphError::Invariant(format!("vertex {v} not covered by the partition")));
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (block_of[u], block_of[v]))
        .filter(|(a, b)| a != b)
        .collect();
    ColouredGraph::new(partition.len(), &edges, partition.block_colour.clone())
}

/// One-shot colour contraction: the quotient by the colour partition, plus
/// the original-vertex to block-index map.
pub fn simple_gamma_contraction(g: &ColouredGraph) -> (ColouredGraph, Vec<usize>) {
    let partition = eval_colour_partition(g);
    let contracted = quotient_by_partition(g, &partition).expect("colour partition covers every vertex");
    (contracted, partition.assignment(g.n()))
}

/// Colour components via union-find over monochromatic edges, as a sorted
/// set of sorted blocks. Independent of the frontier expansion above.
pub fn colour_components_union_find(g: &ColouredGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if g.colour(u) == g.colour(v) {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let r = find(&mut parent, v);
        groups[r].push(v);
    }
    canonical_set_of_sets(groups.into_iter().filter(|b| !b.is_empty()))
}
