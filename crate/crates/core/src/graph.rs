//! Vertex-coloured simple undirected graphs.
//!
//! Adjacency is stored in compressed sparse row form: the neighbours of `v`
//! are `targets[offsets[v]..offsets[v + 1]]`, kept strictly ascending. Both
//! orientations of every edge are stored.

use std::fmt;

use thiserror::Error;

/// Opaque colour identifier. Only equality is ever inspected.
pub type Colour = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {{{u}, {v}}} has an endpoint outside [0, {n})")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} colours, found {found}")]
    ColourCountMismatch { expected: usize, found: usize },
    #[error("vertex {v} outside [0, {n})")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex set is not monochromatic")]
    NotMonochromatic,
    #[error("graph invariant violated: {0}")]
    Invariant(String),
}

/// A simple undirected graph with one colour per vertex.
///
/// Values are immutable once built; every constructor leaves the graph in
/// canonical form (sorted adjacency, no duplicates, no self-loops), so the
/// derived `PartialEq` is labelled equality.
#[derive(Clone, PartialEq, Eq)]
pub struct ColouredGraph {
    m: usize,
    colours: Vec<Colour>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl ColouredGraph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Pairs may come in either orientation and may repeat; repeats are
    /// collapsed. Self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)], colours: Vec<Colour>) -> Result<Self, GraphError> {
        if colours.len() != n {
            return Err(GraphError::ColourCountMismatch { expected: n, found: colours.len() });
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            pairs.push(if u < v { (u, v) } else { (v, u) });
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &pairs {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0usize; 2 * pairs.len()];
        // Sorted pair order puts every smaller neighbour of x (pairs (w, x))
        // before every larger one (pairs (x, y)), each run ascending.
        for &(u, v) in &pairs {
            targets[cursor[u]] = v;
            cursor[u] += 1;
            targets[cursor[v]] = u;
            cursor[v] += 1;
        }
        Ok(Self { m: pairs.len(), colours, offsets, targets })
    }

    /// Assembles a graph from per-vertex sorted adjacency lists produced by
    /// the contraction engine. Invariants are checked in debug builds.
    pub(crate) fn from_sorted_lists(colours: Vec<Colour>, lists: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(colours.len(), lists.len());
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let total: usize = lists.iter().map(Vec::len).sum();
        let mut targets = Vec::with_capacity(total);
        for list in lists {
            targets.extend_from_slice(&list);
            offsets.push(targets.len());
        }
        let g = Self { m: total / 2, colours, offsets, targets };
        debug_assert_eq!(g.validate(), Ok(()));
        g
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Self { m: 0, colours: Vec::new(), offsets: vec![0], targets: Vec::new() }
    }

    /// Order (number of vertices).
    pub fn n(&self) -> usize {
        self.colours.len()
    }

    /// Size (number of undirected edges).
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v]
    }

    /// Neighbours of `v`, ascending.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbours(u).iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Whether some edge joins two vertices of the same colour.
    pub fn has_monochromatic_edge(&self) -> bool {
        self.edges().any(|(u, v)| self.colours[u] == self.colours[v])
    }

    /// Returns a copy of the graph with a new colouring.
    pub fn with_colours(&self, colours: Vec<Colour>) -> Result<Self, GraphError> {
        if colours.len() != self.n() {
            return Err(GraphError::ColourCountMismatch { expected: self.n(), found: colours.len() });
        }
        Ok(Self { colours, ..self.clone() })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::VertexOutOfRange { v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Adjacent vertices of `v` sharing its colour, ascending.
    pub fn colour_neighbourhood(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        let c = self.colours[v];
        Ok(self.neighbours(v).iter().copied().filter(|&u| self.colours[u] == c).collect())
    }

    /// Union of the colour neighbourhoods of a monochromatic set, minus the set.
    pub fn colour_neighbourhood_set(&self, set: &[usize]) -> Result<Vec<usize>, GraphError> {
        for &v in set {
            self.check_vertex(v)?;
        }
        let Some(&first) = set.first() else {
            return Ok(Vec::new());
        };
        let c = self.colours[first];
        if set.iter().any(|&v| self.colours[v] != c) {
            return Err(GraphError::NotMonochromatic);
        }
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut out: Vec<usize> = set
            .iter()
            .flat_map(|&v| self.neighbours(v).iter().copied())
            .filter(|&u| !inside[u] && self.colours[u] == c)
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Checks the structural invariants: symmetric, simple, in-range
    /// adjacency, strictly ascending lists, and a consistent edge count.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.n();
        let bad = |msg: String| Err(GraphError::Invariant(msg));
        if self.offsets.len() != n + 1 || self.offsets[0] != 0 || self.offsets[n] != self.targets.len() {
            return bad("offset table inconsistent with vertex count".into());
        }
        if self.targets.len() != 2 * self.m {
            return bad(format!("degree sum {} != 2m = {}", self.targets.len(), 2 * self.m));
        }
        for v in 0..n {
            if self.offsets[v] > self.offsets[v + 1] {
                return bad(format!("negative degree at {v}"));
            }
            let list = self.neighbours(v);
            for (i, &u) in list.iter().enumerate() {
                if u >= n {
                    return bad(format!("neighbour {u} of {v} out of range"));
                }
                if u == v {
                    return bad(format!("self-loop at {v}"));
                }
                if i > 0 && list[i - 1] >= u {
                    return bad(format!("adjacency of {v} not strictly ascending"));
                }
                if self.neighbours(u).binary_search(&v).is_err() {
                    return bad(format!("edge {v}->{u} has no reverse"));
                }
            }
        }
        Ok(())
    }
}

/// Labelled equality: same order, size, colours and adjacency index by index.
pub fn graphs_equal(a: &ColouredGraph, b: &ColouredGraph) -> bool {
    a == b
}

impl fmt::Debug for ColouredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColouredGraph")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("colours", &self.colours)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
