//! Exact algorithms for multistage s-t path problems on temporal graphs.
//!
//! A temporal graph is a vertex set with a sequence of edge sets (snapshots).
//! An instance asks for one short s-t path per snapshot such that consecutive
//! paths are close under one of four measures: vertex or edge symmetric
//! difference (similarity) or vertex or edge intersection (dissimilarity).

pub mod bench;
pub mod cli;
pub mod distance;
pub mod error;
pub mod format;
pub mod kernels;
pub mod model;
pub mod reductions;
pub mod repsets;
pub mod solvers;
pub mod structure;
pub mod verify;

pub use distance::{distance, PathProfile};
pub use error::{Error, Result};
pub use format::{parse_instance, parse_solution, write_instance, write_solution};
pub use kernels::{
    kernelize_dissimilarity, kernelize_similarity, shrink_temporal_twins, KernelResult,
    KernelStats,
};
pub use model::{
    validate_instance, Adjacency, Edge, Measure, PathSequence, ProblemInstance, StPath,
    StaticGraph, TemporalGraph, ValidationReport, VertexId, Violation,
};
pub use reductions::{
    gen_from_3sat, gen_from_clique, gen_from_clique_vc, gen_from_hampath, has_hamiltonian_path,
    lift_witness, permutation_schedule,
    random_instance, reduce_ede_to_vdv, reduce_eie_to_viv, CnfFormula, Literal,
    MulticoloredGraph, ReductionArtifact,
};
pub use repsets::{
    compute_representative, pad_with_dummies, rep_dp, robust_paths, solve_fpt_dissimilar,
    vandermonde_matroid, PrimeField, RobustPathFamily, UniformMatroidRep, WitnessedSet,
};
pub use solvers::{
    enumerate_short_paths, enumerate_short_paths_capped, solve_naive, solve_xp, DEFAULT_CATALOG_CAP,
};
pub use structure::{
    graph_stats, greedy_vertex_cover, temporal_twin_partition, underlying_graph, GraphStats,
    TwinPartition,
};
pub use verify::{verify_solution, VerifyFailure, VerifyReport};
