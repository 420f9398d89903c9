//! PBW engine for `U(g)` of `gl(1|2)` and `pe(2)`, explicit realizations of
//! the standard Whittaker modules `M̃(λ,ζ) = Λ(g₋₁) ⊗ M(λ,ζ)` for regular `ζ`,
//! and their Whittaker vectors.
//!
//! This engine does not use any Kazhdan–Lusztig data; it is the independent
//! check on [`crate::whittaker`].

pub mod coeff;
pub mod linalg;
pub mod model;
pub mod solve;
pub mod structure;

pub use coeff::{Coeff, Laurent};
pub use model::{ActionModel, Elem, HPoly, ModelKind, Params};
pub use solve::{
    casimir_identity_check, composition_series_from_space, composition_series_pbw, singular_vector_gl12, whittaker_space_specialized, whittaker_vectors, Scope, WhittakerSpace,
    DEFAULT_DEGREE_BOUND,
};
pub use structure::{pbw_reduce, GenKind, SuperStructure, UeaElement};

#[cfg(test)]
mod tests;
