//! Worst-case instances for iterated beta-contraction.
//!
//! `G_0` is a single vertex. `G_{i+1}` hangs a new leaf off every root of the
//! functional digraph of `G_i` and renumbers: the leaf attached to the root
//! numbered `j` takes index `j`, the root moves to `n_i + j`, every other
//! vertex keeps its index. One beta step on `G_{i+1}` gives back `G_i`
//! exactly, so `G_i` needs `i` iterations while having only `F_{i+2}`
//! vertices.

use std::fmt;

use thiserror::Error;

use crate::beta::{
    apply_contraction, contract_to_fixpoint, evaluate_contraction_mapping, iteration_bound, ContractOptions,
};
use crate::graph::ColouredGraph;

/// Highest level the generator accepts (`F_32` = 2,178,309 vertices).
pub const MAX_LEVEL: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibError {
    #[error("level {0} exceeds the supported maximum {MAX_LEVEL}")]
    LevelTooLarge(usize),
}

/// Role of a vertex in the functional digraph of its instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Root of a two-vertex tree: a leaf added at this level.
    P,
    /// Non-root vertex.
    Q,
    /// Root of a single-vertex tree.
    RootOnly,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::P => "P",
            Role::Q => "Q",
            Role::RootOnly => "R\\P",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibInstance {
    pub graph: ColouredGraph,
    pub level: usize,
    pub roles: Vec<Role>,
    /// Order of the previous instance (0 at level 0).
    pub prev_order: usize,
    /// Number of roots of the previous instance (0 at level 0).
    pub prev_roots: usize,
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = 1`. Saturates at `u128::MAX`.
pub fn fib_number(j: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..j {
        (a, b) = (b, a.saturating_add(b));
    }
    a
}

fn roles_for(n: usize, prev_order: usize, prev_roots: usize) -> Vec<Role> {
    (0..n)
        .map(|v| {
            if v < prev_roots {
                Role::P
            } else if prev_order > 0 && v >= prev_order {
                Role::Q
            } else {
                Role::RootOnly
            }
        })
        .collect()
}

pub fn generate_fib_instance(level: usize) -> Result<FibInstance, FibError> {
    if level > MAX_LEVEL {
        return Err(FibError::LevelTooLarge(level));
    }
    let mut graph = ColouredGraph::new(1, &[], vec![0]).expect("single vertex");
    let (mut prev_order, mut prev_roots) = (0, 0);
    for _ in 0..level {
        let n = graph.n();
        let mapping = evaluate_contraction_mapping(&graph);
        let roots: Vec<usize> = mapping.fibres().iter().map(|f| f[0]).collect();
        assert!(
            roots.iter().enumerate().all(|(j, &r)| r == j),
            "roots of a generated instance occupy a prefix of the enumeration"
        );
        let relabel = |v: usize| if v < roots.len() { n + v } else { v };
        let mut edges: Vec<(usize, usize)> = graph.edges().map(|(u, v)| (relabel(u), relabel(v))).collect();
        edges.extend((0..roots.len()).map(|j| (j, n + j)));
        let order = n + roots.len();
        prev_order = n;
        prev_roots = roots.len();
        graph = ColouredGraph::new(order, &edges, vec![0; order]).expect("construction stays simple");
    }
    let roles = roles_for(graph.n(), prev_order, prev_roots);
    Ok(FibInstance { graph, level, roles, prev_order, prev_roots })
}

/// Outcome of [`verify_fib_instance`]; `failures` is empty on success.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FibReport {
    pub level: usize,
    pub order: usize,
    pub iterations: Option<usize>,
    pub failures: Vec<String>,
}

impl FibReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks an instance against its defining properties: Fibonacci order,
/// one step giving back the previous instance through the closed-form map,
/// the role windows, tree orders of one or two, and exactly `level`
/// iterations to the fixpoint.
pub fn verify_fib_instance(inst: &FibInstance) -> FibReport {
    let g = &inst.graph;
    let i = inst.level;
    let mut report = FibReport { level: i, order: g.n(), ..Default::default() };
    let mut fail = |msg: String| report.failures.push(msg);

    if g.n() as u128 != fib_number(i + 2) {
        fail(format!("order {} != F_{} = {}", g.n(), i + 2, fib_number(i + 2)));
    }
    if g.colours().iter().any(|&c| c != g.colours()[0]) {
        fail("instance is not monochromatic".into());
    }

    let mapping = evaluate_contraction_mapping(g);
    if mapping.cluster_sizes().iter().any(|&s| s > 2) {
        fail("functional digraph has a tree with more than two vertices".into());
    }
    if i >= 1 {
        let prev_n = inst.prev_order;
        let closed_form: Vec<usize> = (0..g.n()).map(|j| if j < prev_n { j } else { j - prev_n }).collect();
        if mapping.becomes() != closed_form.as_slice() {
            fail("beta differs from the closed form j -> j (j < n_prev), j - n_prev otherwise".into());
        }
        match (generate_fib_instance(i - 1), apply_contraction(g, &mapping)) {
            (Ok(prev), Ok(contracted)) if contracted == prev.graph => {}
            (Ok(_), Ok(_)) => fail(format!("one step does not yield G_{}", i - 1)),
            (Err(e), _) => fail(e.to_string()),
            (_, Err(e)) => fail(e.to_string()),
        }

        // role windows: R = [0, n_prev), P = [0, roots_prev), Q = [n_prev, n_prev + roots_prev)
        let roots: Vec<usize> = mapping.fibres().iter().map(|f| f[0]).collect();
        if roots != (0..prev_n).collect::<Vec<_>>() {
            fail("roots are not the prefix [0, n_prev)".into());
        }
        if g.n() != prev_n + inst.prev_roots {
            fail("non-root window does not end at n_prev + roots_prev".into());
        }
        for (v, role) in inst.roles.iter().enumerate() {
            let size = mapping.cluster_sizes()[mapping.becomes()[v]];
            let is_root = mapping.fibres()[mapping.becomes()[v]][0] == v;
            let expected = match (is_root, size) {
                (true, 2) => Role::P,
                (true, _) => Role::RootOnly,
                (false, _) => Role::Q,
            };
            if *role != expected || *role != roles_for(g.n(), prev_n, inst.prev_roots)[v] {
                fail(format!("vertex {v} labelled {role}, digraph says {expected}"));
                break;
            }
        }
    }

    match contract_to_fixpoint(g, &ContractOptions::default()) {
        Ok((result, trace)) => {
            report.iterations = Some(trace.iterations);
            if trace.iterations != i {
                report.failures.push(format!("converged in {} iterations, expected {i}", trace.iterations));
            }
            if result.n() != 1 {
                report.failures.push(format!("fixpoint has {} vertices", result.n()));
            }
        }
        Err(e) => report.failures.push(e.to_string()),
    }
    if iteration_bound(g.n()) != i {
        report.failures.push(format!("floor(log_phi({})) = {} != {i}", g.n(), iteration_bound(g.n())));
    }
    report
}
