//! Quotients S/d = {x : dx ∈ S} of numerical semigroups.
//!
//! The crate builds the d-partition generating set Γ(S/d), checks it
//! against a direct membership computation of the quotient, evaluates the
//! two upper bounds on the embedding dimension of S/d together with the
//! families that attain them, and constructs symmetric semigroups T with
//! T/d = S.

pub mod applications;
pub mod dpartition;
pub mod error;
pub mod gamma;
pub mod limits;
pub mod sample;
pub mod semigroup;
pub mod strategy;

pub use applications::{
    admissible_rhos, quotient_two_gens_d3, symmetric_closure, symmetric_cover, CoverParameters,
    CoverReport,
};
pub use dpartition::{
    count_d_partitions, decompose, enumerate_d_partitions, is_d_partition, DPartition,
    ResidueSequence,
};
pub use error::{Error, Result};
pub use gamma::{
    bound_binomial, bound_partitioned, gamma, gamma_lambda, quotient_via_gamma, BoundReport,
    GammaSet, ResidueClasses, Witness,
};
pub use limits::Limits;
pub use semigroup::{
    make_semigroup, quotient_oracle, GeneratorSet, NumericalSemigroup, SemigroupJson,
};
pub use strategy::{QuotientRegistry, QuotientStrategy};
