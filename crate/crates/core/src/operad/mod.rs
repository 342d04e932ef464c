//! Set operads `P`, the categories `F(P)` of maps whose fibers carry
//! operations of `P`, the double category `F(P)_2` and the free `P`-algebras
//! named by its spans out of `1`.
//!
//! For the associative operad, `F(P)` is the category of noncommutative
//! sets; [`nc_to_fp`] and [`fp_to_nc`] are the isomorphism.

mod fp;
mod fp2;
mod set_operad;

pub use fp::{compose_fp, fiber_permutation, fp_to_nc, nc_to_fp, FPMorphism};
pub use fp2::{compose_span_fp2, pullback_fp2, span_to_free, FpBimorphism, FpSpan, FreeElement};
pub use set_operad::{as_operad, com_operad, Op, SetOperad};
