//! Structural checks on contraction mappings and fixpoint traces.
//!
//! These never panic; they collect every violation found so a test or the
//! `verify` command can report all of them at once.

use std::collections::VecDeque;
use std::fmt;

use crate::beta::{evaluate_contraction_mapping, iteration_bound, ContractionMapping, ContractionTrace};
use crate::graph::ColouredGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Graph { iteration: usize, detail: String },
    FibreNotMonochromatic { fibre: usize },
    FibreDisconnected { fibre: usize },
    FibreOutOfRootOrder { fibre: usize },
    AdjacentRoots { u: usize, v: usize },
    IsolatedTwice { vertex: usize },
    NoDecrease { iteration: usize, n: usize, n_prime: usize },
    MonochromaticEdgeInResult { u: usize, v: usize },
    BoundExceeded { iterations: usize, bound: usize },
    TraceMismatch(String),
    /// Wraps a violation with the iteration it was found in.
    AtIteration { iteration: usize, inner: Box<Violation> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Graph { iteration, detail } => write!(f, "graph {iteration} invalid: {detail}"),
            Violation::FibreNotMonochromatic { fibre } => write!(f, "fibre {fibre} is not monochromatic"),
            Violation::FibreDisconnected { fibre } => write!(f, "fibre {fibre} is not connected"),
            Violation::FibreOutOfRootOrder { fibre } => write!(f, "fibre {fibre} breaks ascending root order"),
            Violation::AdjacentRoots { u, v } => write!(f, "roots {u} and {v} share a colour and an edge"),
            Violation::IsolatedTwice { vertex } => {
                write!(f, "singleton fibre of {vertex} maps to a singleton fibre again")
            }
            Violation::NoDecrease { iteration, n, n_prime } => {
                write!(f, "iteration {iteration} went from {n} to {n_prime} vertices")
            }
            Violation::MonochromaticEdgeInResult { u, v } => write!(f, "result keeps monochromatic edge {{{u}, {v}}}"),
            Violation::BoundExceeded { iterations, bound } => {
                write!(f, "{iterations} iterations exceed the bound {bound}")
            }
            Violation::TraceMismatch(detail) => write!(f, "trace inconsistent: {detail}"),
            Violation::AtIteration { iteration, inner } => write!(f, "iteration {iteration}: {inner}"),
        }
    }
}

/// Fibres must be monochromatic, connected in `g`, and enumerated by
/// ascending minimum.
pub fn mapping_violations(g: &ColouredGraph, map: &ContractionMapping) -> Vec<Violation> {
    let mut out = Vec::new();
    let becomes = map.becomes();
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    let mut previous_min = None;
    for (t, fibre) in map.fibres().iter().enumerate() {
        let Some(&min) = fibre.iter().min() else {
            out.push(Violation::FibreDisconnected { fibre: t });
            continue;
        };
        if previous_min.is_some_and(|p| p >= min) {
            out.push(Violation::FibreOutOfRootOrder { fibre: t });
        }
        previous_min = Some(min);

        let c = g.colour(min);
        if fibre.iter().any(|&v| g.colour(v) != c) {
            out.push(Violation::FibreNotMonochromatic { fibre: t });
        }

        // breadth-first search restricted to the fibre
        let mut reached = 1;
        seen[min] = true;
        queue.push_back(min);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbours(v) {
                if becomes[u] == t && !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        if reached != fibre.len() {
            out.push(Violation::FibreDisconnected { fibre: t });
        }
    }
    out
}

/// Checks for a mapping produced by one beta step on `g`: the generic
/// mapping checks plus non-adjacency of same-coloured roots.
pub fn step_violations(g: &ColouredGraph, map: &ContractionMapping) -> Vec<Violation> {
    let mut out = mapping_violations(g, map);
    let mut is_root = vec![false; g.n()];
    for fibre in map.fibres() {
        if let Some(&min) = fibre.iter().min() {
            is_root[min] = true;
        }
    }
    for (u, v) in g.edges() {
        if is_root[u] && is_root[v] && g.colour(u) == g.colour(v) {
            out.push(Violation::AdjacentRoots { u, v });
        }
    }
    out
}

/// A singleton fibre `{v}` whose vertex has a same-coloured neighbour must
/// land in a non-singleton fibre at the next step.
pub fn progress_violations(g: &ColouredGraph, map: &ContractionMapping, next: &ContractionMapping) -> Vec<Violation> {
    let mut out = Vec::new();
    for fibre in map.fibres() {
        let &[v] = fibre.as_slice() else { continue };
        let c = g.colour(v);
        if !g.neighbours(v).iter().any(|&u| g.colour(u) == c) {
            continue;
        }
        let image = map.becomes()[v];
        if next.fibres().get(next.becomes().get(image).copied().unwrap_or(usize::MAX)).is_none_or(|f| f.len() == 1)
        {
            out.push(Violation::IsolatedTwice { vertex: v });
        }
    }
    out
}

/// Every check over a fixpoint run recorded with intermediate graphs.
pub fn trace_violations(g: &ColouredGraph, result: &ColouredGraph, trace: &ContractionTrace) -> Vec<Violation> {
    let mut out = Vec::new();
    let Some(graphs) = trace.graphs.as_ref() else {
        out.push(Violation::TraceMismatch("intermediate graphs were not kept".into()));
        return out;
    };
    if graphs.len() != trace.iterations + 1 || trace.per_iteration.len() != trace.iterations {
        out.push(Violation::TraceMismatch("record counts disagree with the iteration count".into()));
        return out;
    }
    if graphs[0] != *g || graphs[trace.iterations] != *result {
        out.push(Violation::TraceMismatch("first or last graph differs from the run endpoints".into()));
    }
    for (k, graph) in graphs.iter().enumerate() {
        if let Err(e) = graph.validate() {
            out.push(Violation::Graph { iteration: k, detail: e.to_string() });
        }
    }
    let final_map = evaluate_contraction_mapping(result);
    for (k, record) in trace.per_iteration.iter().enumerate() {
        let source = &graphs[k];
        let map = &record.mapping;
        let at = |inner: Violation| Violation::AtIteration { iteration: k + 1, inner: Box::new(inner) };
        if record.n != source.n() || record.m != source.m() || record.n_prime != map.n_prime() || map.n() != source.n()
        {
            out.push(at(Violation::TraceMismatch("record does not describe its source graph".into())));
            continue;
        }
        if map.n_prime() >= map.n() {
            out.push(Violation::NoDecrease { iteration: k + 1, n: map.n(), n_prime: map.n_prime() });
        }
        if graphs[k + 1].n() != map.n_prime() {
            out.push(at(Violation::TraceMismatch("next graph order differs from n'".into())));
        }
        out.extend(step_violations(source, map).into_iter().map(at));
        let next = trace.per_iteration.get(k + 1).map_or(&final_map, |r| &r.mapping);
        out.extend(progress_violations(source, map, next).into_iter().map(at));
    }
    out.extend(
        result
            .edges()
            .filter(|&(u, v)| result.colour(u) == result.colour(v))
            .map(|(u, v)| Violation::MonochromaticEdgeInResult { u, v }),
    );
    let bound = iteration_bound(g.n());
    if g.n() >= 1 && trace.iterations > bound {
        out.push(Violation::BoundExceeded { iterations: trace.iterations, bound });
    }
    out
}
