//! Exact tools for generalized Turán problems on linear forests: graphs on
//! at most 64 vertices, clique counting, disjoint-path containment,
//! isomorph-free enumeration, extremal search and structural classification.

pub mod canon;
pub mod cliques;
pub mod constructions;
pub mod disintegration;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod paths;
pub(crate) mod serde_big;
pub mod structure;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm, Labeling};
pub use cliques::{
    binomial, count_cliques, count_cliques_u64, gf_formula, luo_bound, path_turan_lower,
    theorem_value, threshold_n, CountReport, CountSource,
};
pub use constructions::{
    apex_cliques, apex_mixed, apex_over_cliques, base_plus_k4, build_gf, build_gf_i,
    clique_union, path_union, paths_graph, Attachment, Base, ConstructionId,
};
pub use error::{Error, Result};
pub use forest::LinearForest;
pub use graph::{DegreeSum, Graph, VertexSet, MAX_ORDER};
pub use paths::{
    contains_linear_forest, find_disjoint_paths, has_hamiltonian_path, longest_path_order,
    path_union_contains, strong_dominating_path, ForestWitness,
};
pub use disintegration::{
    disintegrate, disintegrate_below, verify_step_bound, DisintegrationTrace, Step, TieBreak,
};
pub use enumerate::{enumerate_graphs, enumerate_with, EnumFilter, EnumOptions, Enumerated};
pub use extremal::{brute_force_ex, brute_force_path_ex, reconcile, ExtremalRecord};
pub use structure::{
    audit_structure, classify, classify_with, is_subgraph_of_gf, sample_apex_mixed_audit, verify,
    AuditReport, Case, ClassificationVerdict, Witness,
};
pub use lemmas::{
    chvatal_erdos_report, claw2_report, claw_report, dirac_report, LemmaReport, LemmaRow,
};
