//! Representation-theoretic counts: Weyl dimensions, tableaux, the invariant
//! Hilbert function, section decompositions and Plücker straightening.

pub mod generation;
pub mod hilbert;
pub mod partition;
pub mod sections;
pub mod ssyt;
pub mod straighten;

pub use generation::{generation_checks, generation_in_degree_one, plucker_dependencies, GenerationCheck};
pub use hilbert::{hilbert_function, invariant_hilbert, least_invariant_degree};
pub use partition::{weyl_dim, Partition};
pub use sections::{
    calibrate_descent, cauchy_sections, decompose_sections, is_multiplicity_free, total_dim, Calibration,
    HighestWeightPair,
};
pub use ssyt::{ssyt_count, ssyt_count_skew};
