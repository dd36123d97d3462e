//! Transformations between the measures and generators of hard instances.

mod clique;
mod hampath;
mod random;
mod sat;
mod transform;

pub use clique::{gen_from_clique, gen_from_clique_vc, permutation_schedule, MulticoloredGraph};
pub use hampath::{gen_from_hampath, has_hamiltonian_path};
pub use random::random_instance;
pub use sat::{gen_from_3sat, CnfFormula, Literal};
pub use transform::{lift_witness, reduce_ede_to_vdv, reduce_eie_to_viv, ReductionArtifact};
