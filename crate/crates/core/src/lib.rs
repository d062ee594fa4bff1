//! Workbench for multi-graded cluster algebras.
//!
//! Gradings of a seed are classified as the integer kernel of the transposed
//! exchange matrix, propagated through mutation, verified against brute-force
//! enumeration of finite-type exchange graphs, realized as tropical friezes
//! on combinatorial models of cluster categories, and manufactured for
//! ungraded seeds by homogenisation.

pub mod cluster;
pub mod coeff;
pub mod distribution;
pub mod error;
pub mod explore;
pub mod frieze;
pub mod homog;
pub mod laurent;
pub mod report;
pub mod roots;
pub mod zlinalg;

pub use cluster::{
    b_vectors, change_of_basis, degree, e_matrix, mutate_grading, mutate_pattern, mutate_seed,
    standard_grading, DegVec, ExchangePattern, GradedSeed, GradingMatrix,
};
pub use distribution::DegreeDistribution;
pub use error::Error;
pub use explore::{enumerate, EnumerationResult, Limits, SeedKey};
pub use laurent::LaurentPoly;
pub use roots::{bipartite_seed, cartan_matrix, positive_roots, DynkinType, Family, Root};
pub use zlinalg::{hermite_normal_form, kernel_basis, rank, IntMatrix};
