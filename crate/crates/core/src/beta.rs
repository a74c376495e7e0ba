//! Iterated beta-contraction.
//!
//! One iteration builds a contraction mapping from purely local information
//! and collapses each of its fibres into a single vertex:
//!
//! 1. every vertex points at the smallest vertex among itself and its colour
//!    neighbourhood, giving a functional digraph that is a forest whose edges
//!    always point to smaller indices;
//! 2. one ascending sweep redirects every vertex to the root of its tree;
//! 3. roots are renumbered `0..n'` in ascending order and the fibres, their
//!    sizes and the forward map are materialised;
//! 4. edge endpoints are relabelled, adjacency lists of each fibre are merged
//!    (dropping self-loops and parallel edges) and colours are carried over.
//!
//! Iterating until the mapping is a bijection yields the colour contraction.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::ColouredGraph;
use crate::invariants;
use crate::oracle::{canonical_set_of_sets, quotient_by_partition, ColourPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("parent of vertex {v} is {parent}, expected a value <= {v}")]
    ParentAboveVertex { v: usize, parent: usize },
    #[error("vertex {v} is not mapped to a root")]
    NotRootProjected { v: usize },
    #[error("mapping covers {mapping} vertices but the graph has {graph}")]
    SizeMismatch { mapping: usize, graph: usize },
    #[error("invalid contraction mapping: {0}")]
    InvalidMapping(String),
    #[error("no fixpoint after {limit} iterations")]
    IterationLimit { limit: usize },
    #[error("iteration {iteration} maps {found} vertices but the previous one produced {expected}")]
    ChainMismatch { iteration: usize, expected: usize, found: usize },
}

/// How adjacency lists of a fibre are merged into one list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MergeStrategy {
    /// Dense boolean scratchpad of length n', cleared for every target
    /// vertex and scanned to emit the list. O(n'^2 + m) per iteration.
    #[default]
    Faithful,
    /// Scratchpad entries are stamped with the current target index, so it
    /// is never cleared; collected neighbours are sorted. O(n + m log d).
    Epoch,
}

/// A contraction mapping together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionMapping {
    becomes: Vec<usize>,
    fibres: Vec<Vec<usize>>,
}

impl ContractionMapping {
    pub fn identity(n: usize) -> Self {
        Self { becomes: (0..n).collect(), fibres: (0..n).map(|v| vec![v]).collect() }
    }

    /// Builds a mapping from its forward array. Target indices must cover
    /// `0..n'` exactly; fibres are listed in ascending member order.
    pub fn from_becomes(becomes: Vec<usize>) -> Result<Self, ContractionError> {
        let n_prime = becomes.iter().max().map_or(0, |&t| t + 1);
        let mut fibres = vec![Vec::new(); n_prime];
        for (v, &t) in becomes.iter().enumerate() {
            fibres[t].push(v);
        }
        if let Some(t) = fibres.iter().position(Vec::is_empty) {
            return Err(ContractionError::InvalidMapping(format!("target {t} has an empty fibre")));
        }
        Ok(Self { becomes, fibres })
    }

    /// Order of the source graph.
    pub fn n(&self) -> usize {
        self.becomes.len()
    }

    /// Order of the contracted graph.
    pub fn n_prime(&self) -> usize {
        self.fibres.len()
    }

    pub fn becomes(&self) -> &[usize] {
        &self.becomes
    }

    pub fn fibres(&self) -> &[Vec<usize>] {
        &self.fibres
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        self.fibres.iter().map(Vec::len).collect()
    }

    /// True when no two vertices are merged.
    pub fn is_trivial(&self) -> bool {
        self.n() == self.n_prime()
    }

    /// Checks the mapping against a source graph: matching order,
    /// monochromatic connected fibres, fibres enumerated in root order.
    pub fn validate_for(&self, g: &ColouredGraph) -> Result<(), ContractionError> {
        if self.n() != g.n() {
            return Err(ContractionError::SizeMismatch { mapping: self.n(), graph: g.n() });
        }
        for (t, fibre) in self.fibres.iter().enumerate() {
            if fibre.iter().any(|&v| self.becomes[v] != t) {
                return Err(ContractionError::InvalidMapping(format!("fibre {t} disagrees with the forward map")));
            }
        }
        match invariants::mapping_violations(g, self).into_iter().next() {
            Some(v) => Err(ContractionError::InvalidMapping(v.to_string())),
            None => Ok(()),
        }
    }
}

/// Parent array of the functional digraph: each vertex points at the
/// minimum of itself and its colour neighbourhood.
pub fn build_functional_digraph(g: &ColouredGraph) -> Vec<usize> {
    (0..g.n())
        .map(|v| {
            let c = g.colour(v);
            // adjacency is ascending, so the first same-coloured neighbour is the minimum
            match g.neighbours(v).iter().find(|&&u| g.colour(u) == c) {
                Some(&u) if u < v => u,
                _ => v,
            }
        })
        .collect()
}

/// Redirects every vertex to the root of its tree with a single ascending
/// sweep. Requires `parents[v] <= v`; the sweep order is load-bearing.
pub fn project_to_roots(mut parents: Vec<usize>) -> Result<Vec<usize>, ContractionError> {
    if let Some((v, &parent)) = parents.iter().enumerate().find(|&(v, &p)| p > v) {
        return Err(ContractionError::ParentAboveVertex { v, parent });
    }
    for v in 0..parents.len() {
        parents[v] = parents[parents[v]];
    }
    Ok(parents)
}

/// Renumbers the roots of a root-projected array to `0..n'` in ascending
/// order and materialises fibres and cluster sizes.
pub fn compact_mapping(g: &ColouredGraph, roots: &[usize]) -> Result<ContractionMapping, ContractionError> {
    let n = roots.len();
    if n != g.n() {
        return Err(ContractionError::SizeMismatch { mapping: n, graph: g.n() });
    }
    for (v, &r) in roots.iter().enumerate() {
        if r > v {
            return Err(ContractionError::ParentAboveVertex { v, parent: r });
        }
        if roots[r] != r {
            return Err(ContractionError::NotRootProjected { v });
        }
    }

    // cluster sizes, indexed by root
    let mut size = vec![0usize; n];
    for &r in roots {
        size[r] += 1;
    }

    // inverse projection, indexed by root
    let mut members: Vec<Vec<usize>> = size.iter().map(|&s| Vec::with_capacity(s)).collect();
    for (v, &r) in roots.iter().enumerate() {
        members[r].push(v);
    }

    // compaction: ascending scan keeps root order
    let fibres: Vec<Vec<usize>> = members.into_iter().filter(|f| !f.is_empty()).collect();

    let mut becomes = vec![0usize; n];
    for (t, fibre) in fibres.iter().enumerate() {
        for &v in fibre {
            becomes[v] = t;
        }
    }
    Ok(ContractionMapping { becomes, fibres })
}

/// The contraction mapping of one beta-contraction step on `g`.
pub fn evaluate_contraction_mapping(g: &ColouredGraph) -> ContractionMapping {
    let roots = project_to_roots(build_functional_digraph(g)).expect("functional digraph points downwards");
    compact_mapping(g, &roots).expect("roots are projected")
}

/// Contracts every fibre of `map` into one vertex, using the faithful merge.
pub fn apply_contraction(g: &ColouredGraph, map: &ContractionMapping) -> Result<ColouredGraph, ContractionError> {
    apply_contraction_with(g, map, MergeStrategy::Faithful)
}

pub fn apply_contraction_with(
    g: &ColouredGraph,
    map: &ContractionMapping,
    strategy: MergeStrategy,
) -> Result<ColouredGraph, ContractionError> {
    map.validate_for(g)?;
    Ok(contract_unchecked(g, map, strategy))
}

fn contract_unchecked(g: &ColouredGraph, map: &ContractionMapping, strategy: MergeStrategy) -> ColouredGraph {
    let n_prime = map.n_prime();
    let becomes = &map.becomes;
    let mut lists: Vec<Vec<usize>> = Vec::with_capacity(n_prime);
    match strategy {
        MergeStrategy::Faithful => {
            let mut mark = vec![false; n_prime];
            for (target, fibre) in map.fibres.iter().enumerate() {
                mark.fill(false);
                let mut degree = 0;
                for &w in fibre {
                    for &k in g.neighbours(w) {
                        let k = becomes[k];
                        if k != target && !mark[k] {
                            mark[k] = true;
                            degree += 1;
                        }
                    }
                }
                let mut list = Vec::with_capacity(degree);
                list.extend(mark.iter().enumerate().filter(|(_, &hit)| hit).map(|(a, _)| a));
                lists.push(list);
            }
        }
        MergeStrategy::Epoch => {
            let mut stamp = vec![usize::MAX; n_prime];
            for (target, fibre) in map.fibres.iter().enumerate() {
                let mut list = Vec::new();
                for &w in fibre {
                    for &k in g.neighbours(w) {
                        let k = becomes[k];
                        if k != target && stamp[k] != target {
                            stamp[k] = target;
                            list.push(k);
                        }
                    }
                }
                list.sort_unstable();
                lists.push(list);
            }
        }
    }
    let colours = map.fibres.iter().map(|f| g.colour(f[0])).collect();
    ColouredGraph::from_sorted_lists(colours, lists)
}

/// `floor(log_phi(n))` for `n >= 1`, with `phi` the golden ratio; 0 for `n = 0`.
///
/// Computed exactly: `phi^k = (L_k + F_k sqrt 5) / 2` with Lucas numbers
/// `L_k`, so `phi^k <= n` iff `5 F_k^2 <= (2n - L_k)^2` and `L_k <= 2n`.
pub fn iteration_bound(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let two_n = 2 * n as u128;
    let fits = |fib: u128, lucas: u128| -> bool {
        if lucas > two_n {
            return false;
        }
        let gap = two_n - lucas;
        match (gap.checked_mul(gap), fib.checked_mul(fib).and_then(|f| f.checked_mul(5))) {
            (Some(g2), Some(f2)) => f2 <= g2,
            (None, _) => true,
            (Some(_), None) => false,
        }
    };
    // (F_k, L_k) and (F_{k+1}, L_{k+1}), starting at k = 0
    let (mut f0, mut l0, mut f1, mut l1) = (0u128, 2u128, 1u128, 1u128);
    let mut k = 0;
    while fits(f1, l1) {
        (f0, l0, f1, l1) = (f1, l1, f0 + f1, l0 + l1);
        k += 1;
    }
    k
}

/// Knobs for [`contract_to_fixpoint`].
#[derive(Debug, Clone, Default)]
pub struct ContractOptions {
    /// Defaults to `iteration_bound(n) + 2`.
    pub max_iterations: Option<usize>,
    pub merge: MergeStrategy,
    /// Keep every intermediate graph in the trace.
    pub keep_graphs: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationRecord {
    pub n: usize,
    pub m: usize,
    pub n_prime: usize,
    pub mapping: ContractionMapping,
}

/// Record of a fixpoint run. Equality ignores wall times.
#[derive(Debug, Clone)]
pub struct ContractionTrace {
    pub initial_order: usize,
    pub iterations: usize,
    pub per_iteration: Vec<IterationRecord>,
    pub total_map: Vec<usize>,
    /// `G_0, ..., G_k` when graphs were kept.
    pub graphs: Option<Vec<ColouredGraph>>,
    /// Wall time of each executed iteration, mapping evaluation included.
    pub wall_times: Vec<Duration>,
}

impl PartialEq for ContractionTrace {
    fn eq(&self, other: &Self) -> bool {
        self.initial_order == other.initial_order
            && self.iterations == other.iterations
            && self.per_iteration == other.per_iteration
            && self.total_map == other.total_map
            && self.graphs == other.graphs
    }
}

/// Applies beta-contraction until the mapping is trivial.
///
/// `iterations` counts graph contractions only; the final mapping that
/// detects the fixpoint is not counted.
pub fn contract_to_fixpoint(
    g: &ColouredGraph,
    options: &ContractOptions,
) -> Result<(ColouredGraph, ContractionTrace), ContractionError> {
    let n0 = g.n();
    let limit = options.max_iterations.unwrap_or_else(|| iteration_bound(n0) + 2);
    let mut current = g.clone();
    let mut graphs = options.keep_graphs.then(|| vec![g.clone()]);
    let mut per_iteration = Vec::new();
    let mut wall_times = Vec::new();
    let mut total_map: Vec<usize> = (0..n0).collect();

    let mut started = Instant::now();
    let mut map = evaluate_contraction_mapping(&current);
    while !map.is_trivial() {
        if per_iteration.len() == limit {
            return Err(ContractionError::IterationLimit { limit });
        }
        let next = contract_unchecked(&current, &map, options.merge);
        for t in total_map.iter_mut() {
            *t = map.becomes[*t];
        }
        per_iteration.push(IterationRecord { n: current.n(), m: current.m(), n_prime: map.n_prime(), mapping: map });
        wall_times.push(started.elapsed());
        if let Some(graphs) = graphs.as_mut() {
            graphs.push(next.clone());
        }
        current = next;
        started = Instant::now();
        map = evaluate_contraction_mapping(&current);
    }

    let trace = ContractionTrace {
        initial_order: n0,
        iterations: per_iteration.len(),
        per_iteration,
        total_map,
        graphs,
        wall_times,
    };
    Ok((current, trace))
}

/// Composes the per-iteration forward maps into the original-vertex to
/// final-vertex map.
pub fn compose_total_mapping(trace: &ContractionTrace) -> Result<Vec<usize>, ContractionError> {
    let mut total: Vec<usize> = (0..trace.initial_order).collect();
    let mut order = trace.initial_order;
    for (i, record) in trace.per_iteration.iter().enumerate() {
        let becomes = record.mapping.becomes();
        if becomes.len() != order {
            return Err(ContractionError::ChainMismatch { iteration: i + 1, expected: order, found: becomes.len() });
        }
        for t in total.iter_mut() {
            *t = becomes[*t];
        }
        order = record.mapping.n_prime();
    }
    Ok(total)
}

/// Whether a fixpoint run realises the same colour contraction as the
/// reference partition: identical fibres, identical quotient edges under the
/// block correspondence, and matching colours.
pub fn equivalent_contractions(
    g: &ColouredGraph,
    result: &ColouredGraph,
    trace: &ContractionTrace,
    oracle: &ColourPartition,
) -> bool {
    let n_final = result.n();
    if trace.total_map.len() != g.n() || trace.total_map.iter().any(|&t| t >= n_final) {
        return false;
    }
    let mut fibres = vec![Vec::new(); n_final];
    for (v, &t) in trace.total_map.iter().enumerate() {
        fibres[t].push(v);
    }
    if fibres.iter().any(Vec::is_empty) {
        return false;
    }
    if canonical_set_of_sets(fibres.iter().cloned()) != oracle.canonical_blocks() {
        return false;
    }

    let block_of = oracle.assignment(g.n());
    // final vertex -> oracle block
    let correspondence: Vec<usize> = fibres.iter().map(|f| block_of[f[0]]).collect();
    if correspondence.iter().enumerate().any(|(f, &b)| result.colour(f) != oracle.block_colour[b]) {
        return false;
    }
    let Ok(reference) = quotient_by_partition(g, oracle) else {
        return false;
    };
    let mut ours: Vec<(usize, usize)> = result
        .edges()
        .map(|(u, v)| {
            let (a, b) = (correspondence[u], correspondence[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    ours.sort_unstable();
    let theirs: Vec<(usize, usize)> = reference.edges().collect();
    ours == theirs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> ColouredGraph {
        ColouredGraph::new(4, &[(0, 2), (1, 3), (2, 3)], vec![0; 4]).unwrap()
    }

    fn path4() -> ColouredGraph {
        ColouredGraph::new(4, &[(0, 1), (1, 2), (2, 3)], vec![0; 4]).unwrap()
    }

    /// Iterated parent lookup per vertex.
    fn roots_by_chasing(parents: &[usize]) -> Vec<usize> {
        (0..parents.len())
            .map(|mut v| {
                while parents[v] != v {
                    v = parents[v];
                }
                v
            })
            .collect()
    }

    #[test]
    fn functional_digraph() {
        let lonely = ColouredGraph::new(3, &[(0, 1), (1, 2)], vec![0, 1, 2]).unwrap();
        assert_eq!(build_functional_digraph(&lonely), vec![0, 1, 2]);
        assert_eq!(build_functional_digraph(&p4()), vec![0, 1, 0, 1]);
        assert_eq!(build_functional_digraph(&path4()), vec![0, 0, 1, 2]);
    }

    #[test]
    fn projection() {
        assert_eq!(project_to_roots(vec![0, 1, 2]).unwrap(), vec![0, 1, 2]);
        assert_eq!(project_to_roots(vec![0, 0, 1, 2]).unwrap(), roots_by_chasing(&[0, 0, 1, 2]));
        assert_eq!(project_to_roots(vec![0, 0, 1, 2]).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(project_to_roots(vec![0, 1, 0, 1]).unwrap(), vec![0, 1, 0, 1]);
        assert_eq!(
            project_to_roots(vec![0, 2, 2]),
            Err(ContractionError::ParentAboveVertex { v: 1, parent: 2 })
        );
    }

    #[test]
    fn compaction() {
        let m = compact_mapping(&p4(), &[0, 1, 0, 1]).unwrap();
        assert_eq!(m.n_prime(), 2);
        assert_eq!(m.becomes(), &[0, 1, 0, 1]);
        assert_eq!(m.fibres(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(m.cluster_sizes(), vec![2, 2]);

        let proper = ColouredGraph::new(3, &[(0, 1), (1, 2)], vec![0, 1, 0]).unwrap();
        let id = compact_mapping(&proper, &[0, 1, 2]).unwrap();
        assert_eq!(id, ContractionMapping::identity(3));

        let all = compact_mapping(&path4(), &[0, 0, 0, 0]).unwrap();
        assert_eq!(all.fibres(), &[vec![0, 1, 2, 3]]);
        assert_eq!(all.becomes(), &[0, 0, 0, 0]);

        assert_eq!(compact_mapping(&path4(), &[0, 0, 1, 2]), Err(ContractionError::NotRootProjected { v: 2 }));
        assert!(matches!(compact_mapping(&path4(), &[0, 0]), Err(ContractionError::SizeMismatch { .. })));
    }

    #[test]
    fn skipped_root_indices_compact_in_order() {
        // roots 0, 2, 5 -> 0, 1, 2
        let g = ColouredGraph::new(6, &[(0, 1), (2, 3), (3, 4)], vec![0; 6]).unwrap();
        let m = evaluate_contraction_mapping(&g);
        assert_eq!(m.becomes(), &[0, 0, 1, 1, 1, 2]);
        assert_eq!(m.cluster_sizes(), vec![2, 3, 1]);
    }

    #[test]
    fn application() {
        let g = p4();
        let id = ContractionMapping::identity(4);
        assert_eq!(apply_contraction(&g, &id).unwrap(), g);

        let m = evaluate_contraction_mapping(&g);
        let c = apply_contraction(&g, &m).unwrap();
        assert_eq!(c, ColouredGraph::new(2, &[(0, 1)], vec![0, 0]).unwrap());

        let tri = ColouredGraph::new(3, &[(0, 1), (1, 2), (0, 2)], vec![0, 0, 1]).unwrap();
        let m = ContractionMapping::from_becomes(vec![0, 0, 1]).unwrap();
        for strategy in [MergeStrategy::Faithful, MergeStrategy::Epoch] {
            let c = apply_contraction_with(&tri, &m, strategy).unwrap();
            assert_eq!(c, ColouredGraph::new(2, &[(0, 1)], vec![0, 1]).unwrap());
        }
    }

    #[test]
    fn application_rejects_bad_mappings() {
        let g = path4();
        assert!(matches!(
            apply_contraction(&g, &ContractionMapping::identity(3)),
            Err(ContractionError::SizeMismatch { .. })
        ));
        // fibre {0, 2} is not connected
        let m = ContractionMapping::from_becomes(vec![0, 1, 0, 1]).unwrap();
        assert!(matches!(apply_contraction(&g, &m), Err(ContractionError::InvalidMapping(_))));
        // fibres out of root order
        let m = ContractionMapping::from_becomes(vec![1, 1, 0, 0]).unwrap();
        assert!(matches!(apply_contraction(&g, &m), Err(ContractionError::InvalidMapping(_))));
        let mixed = ColouredGraph::new(2, &[(0, 1)], vec![0, 1]).unwrap();
        let m = ContractionMapping::from_becomes(vec![0, 0]).unwrap();
        assert!(matches!(apply_contraction(&mixed, &m), Err(ContractionError::InvalidMapping(_))));
        assert!(ContractionMapping::from_becomes(vec![0, 2]).is_err());
    }

    #[test]
    fn empty_and_single() {
        for n in [0, 1] {
            let g = ColouredGraph::new(n, &[], vec![0; n]).unwrap();
            let m = evaluate_contraction_mapping(&g);
            assert_eq!(m.n_prime(), n);
            let (c, trace) = contract_to_fixpoint(&g, &ContractOptions::default()).unwrap();
            assert_eq!(c, g);
            assert_eq!(trace.iterations, 0);
        }
    }

    #[test]
    fn p4_fixpoint() {
        let opts = ContractOptions { keep_graphs: true, ..Default::default() };
        let (c, trace) = contract_to_fixpoint(&p4(), &opts).unwrap();
        assert_eq!(c, ColouredGraph::new(1, &[], vec![0]).unwrap());
        assert_eq!(trace.iterations, 2);
        assert_eq!(trace.total_map, vec![0, 0, 0, 0]);
        assert_eq!(compose_total_mapping(&trace).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(trace.per_iteration[0].mapping.becomes(), &[0, 1, 0, 1]);
        assert_eq!(trace.per_iteration[1].mapping.becomes(), &[0, 0]);
        let graphs = trace.graphs.as_ref().unwrap();
        assert_eq!(graphs.len(), 3);
        assert_eq!(graphs[1], ColouredGraph::new(2, &[(0, 1)], vec![0, 0]).unwrap());
    }

    #[test]
    fn properly_coloured_fixpoint() {
        let g = ColouredGraph::new(3, &[(0, 1), (1, 2)], vec![0, 1, 0]).unwrap();
        let (c, trace) = contract_to_fixpoint(&g, &ContractOptions::default()).unwrap();
        assert_eq!(c, g);
        assert_eq!(trace.iterations, 0);
        assert_eq!(compose_total_mapping(&trace).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn single_iteration_composition() {
        let g = ColouredGraph::new(3, &[(0, 1), (1, 2)], vec![0, 0, 1]).unwrap();
        let (_, trace) = contract_to_fixpoint(&g, &ContractOptions::default()).unwrap();
        assert_eq!(trace.iterations, 1);
        assert_eq!(compose_total_mapping(&trace).unwrap(), trace.per_iteration[0].mapping.becomes());
    }

    #[test]
    fn chain_mismatch() {
        let (_, mut trace) = contract_to_fixpoint(&p4(), &ContractOptions::default()).unwrap();
        trace.per_iteration[1].mapping = ContractionMapping::identity(3);
        assert_eq!(
            compose_total_mapping(&trace),
            Err(ContractionError::ChainMismatch { iteration: 2, expected: 2, found: 3 })
        );
    }

    #[test]
    fn iteration_limit() {
        let opts = ContractOptions { max_iterations: Some(1), ..Default::default() };
        assert_eq!(contract_to_fixpoint(&p4(), &opts), Err(ContractionError::IterationLimit { limit: 1 }));
    }

    #[test]
    fn bound_matches_float_log_away_from_boundaries() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert_eq!(iteration_bound(0), 0);
        assert_eq!(iteration_bound(1), 0);
        assert_eq!(iteration_bound(2), 1);
        assert_eq!(iteration_bound(3), 2);
        assert_eq!(iteration_bound(377), 12);
        assert_eq!(iteration_bound(50_000), 22);
        for n in 1..100_000usize {
            let x = (n as f64).ln() / phi.ln();
            if (x - x.round()).abs() > 1e-9 {
                assert_eq!(iteration_bound(n), x.floor() as usize, "n = {n}");
            }
        }
        assert!(iteration_bound(usize::MAX) >= 92);
    }

    #[test]
    fn equivalence_detects_tampering() {
        let g = ColouredGraph::new(4, &[(0, 1), (1, 2), (2, 3)], vec![0, 0, 1, 1]).unwrap();
        let (c, mut trace) = contract_to_fixpoint(&g, &ContractOptions::default()).unwrap();
        let oracle = crate::oracle::eval_colour_partition(&g);
        assert!(equivalent_contractions(&g, &c, &trace, &oracle));
        trace.total_map = vec![0, 0, 0, 0];
        assert!(!equivalent_contractions(&g, &c, &trace, &oracle));
    }
}

