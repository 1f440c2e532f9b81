//! Exact computation of generalized k-independence numbers, cycle-space
//! structure and the extremal graphs of the bound
//! `alpha_4(G) >= 3/4 * (n - omega(G))`.
//!
//! * [`graph`]: validated simple graphs, deletions, vertex classes.
//! * [`cycles`]: blocks, vertex-disjoint cycles, pendant cycles, shrinking.
//! * [`alpha`]: brute-force, tree and branch-and-reduce solvers.
//! * [`extremal`]: the `R_i` tree families and good-graph generation.
//! * [`characterization`]: direct and structural goodness verdicts.
//! * [`conjecture`]: exhaustive sweeps for general `k`.

pub mod alpha;
pub mod canon;
pub mod characterization;
pub mod conjecture;
pub mod cycles;
pub mod extremal;
pub mod families;
pub mod format;
pub mod graph;

pub use alpha::{
    alpha_bruteforce, alpha_exact, alpha_number, alpha_tree, is_gen_k_independent, AlphaError, AlphaResult,
};
pub use canon::{canonical_form, enumerate_graphs, enumerate_trees, tree_code, CanonicalForm, CanonicalTreeCode};
pub use characterization::{
    check_bound, check_good, check_good_structural, decompose_alpha, lower_bound, GoodnessReport, Rational,
};
pub use conjecture::{report_render, sweep, ConjectureReport, ReportFormat, SweepConfig};
pub use cycles::{disjoint_cycles, pendant_cycles, shrink, CycleList, NotDisjoint, ShrinkResult};
pub use extremal::{build_o_gadget, generate_good_graphs, generate_r, is_in_r, RCertificate};
pub use format::{from_graph6_line, parse_edge_list, read_graph6, to_graph6, write_edge_list, FormatError};
pub use graph::{Graph, GraphError, Induced, VertexClasses, VertexSet};
