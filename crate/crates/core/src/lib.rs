//! Exact composition multiplicities of standard Whittaker modules over the
//! type I Lie superalgebras `gl(m|n)`, `osp(2|2n)` and `pe(n)`.
//!
//! The crate has two independent engines:
//!
//! * [`whittaker`] reduces multiplicities of standard Whittaker modules to
//!   Verma-module multiplicities (Kazhdan–Lusztig combinatorics from
//!   [`klpoly`], plus the `gl(1|2)` atypical tables);
//! * [`uea`] builds the modules explicitly for `gl(1|2)` and `pe(2)` with a
//!   PBW rewriting engine and finds their Whittaker vectors by exact linear
//!   algebra.
//!
//! [`verify`] runs the two against each other. Everything is exact rational
//! arithmetic.

pub mod klpoly;
pub mod par;
pub mod rational;
pub mod rootdata;
pub mod uea;
pub mod verify;
pub mod weylgroup;
pub mod whittaker;

pub use rational::Q;
pub use rootdata::{AlgebraKind, RootSystem, Weight};
pub use weylgroup::{WeylElement, WeylSubgroup};
pub use whittaker::{CompositionSeries, Multiplicity, Outcome, WhittakerCharacter, WhittakerParam};



use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid algebra parameters: {0}")]
    InvalidAlgebra(String),
    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("operation needs a superalgebra, got the even part {0}")]
    EvenPartGiven(String),
    #[error("{0} is not an even simple root index")]
    NotSimpleRoot(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
