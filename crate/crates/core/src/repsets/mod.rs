//! Representative families over uniform matroids and the fixed-parameter
//! solver for the intersection measures.

mod dp;
mod field;
mod fpt;
mod matroid;
mod representative;

pub use dp::{pad_with_dummies, rep_dp, robust_paths, PaddedGraph, RepTable, RobustPathFamily};
pub use field::{find_field_prime, is_prime, PrimeField};
pub use fpt::solve_fpt_dissimilar;
pub use matroid::{vandermonde_matroid, UniformMatroidRep};
pub use representative::{compute_representative, WitnessedSet};

pub(crate) use representative::binomial;
