//! Noncommutative finite sets, the PROP of bialgebras they generate through
//! the Q-construction, and exact evaluation of its morphisms on concrete
//! finite-dimensional bialgebras over the rationals.
//!
//! * [`ncset`]: finite sets, permutations and maps with ordered fibers.
//! * [`doublecat`]: the four double categories of such maps and their pullbacks.
//! * [`qprop`]: spans, their composition, the endomorphism monoid `(n, sigma)`
//!   and combinatorial encodings.
//! * [`bialg`]: structure constants, evaluation functors, Mackey squares and
//!   generalized Adams operations.
//! * [`groupword`]: free groups, evaluation on cocommutative Hopf algebras and
//!   symmetric-group actions on tensor powers.
//! * [`operad`]: set operads and the categories `F(P)`.
//! * [`verify`]: the exhaustive verification suites behind `ncprop check`.
//! * [`cli`]: the `ncprop` command line.

pub mod bialg;
pub mod cli;
pub mod doublecat;
pub mod enumerate;
pub mod error;
pub mod groupword;
pub mod ncset;
pub mod operad;
pub mod qprop;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
