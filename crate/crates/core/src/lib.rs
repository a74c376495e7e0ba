//! Colour contraction of vertex-coloured graphs.
//!
//! The colour contraction of a graph merges every maximal connected
//! monochromatic vertex set into a single vertex. [`beta`] computes it by
//! iterating a purely local contraction step to a fixpoint; [`oracle`] is a
//! straightforward traversal-based reference used to check it, and [`fib`]
//! builds the inputs on which the iteration count is largest.

pub mod beta;
pub mod fib;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod oracle;

pub use beta::{
    apply_contraction, apply_contraction_with, build_functional_digraph, compact_mapping, compose_total_mapping,
    contract_to_fixpoint, equivalent_contractions, evaluate_contraction_mapping, iteration_bound, project_to_roots,
    ContractOptions, ContractionError, ContractionMapping, ContractionTrace, IterationRecord, MergeStrategy,
};
pub use fib::{fib_number, generate_fib_instance, verify_fib_instance, FibError, FibInstance, FibReport, Role};
pub use generators::{
    assign_random_colours, gen_erdos_renyi, permute_enumeration, EdgeTarget, GenError, RandomSpec,
};
pub use graph::{graphs_equal, Colour, ColouredGraph, GraphError};
pub use io::{export_dot, parse_graph, parse_graph_str, serialize_graph, ParseError, RunStats, StatsRecord};
pub use oracle::{eval_colour_component, eval_colour_partition, simple_gamma_contraction, ColourPartition};
