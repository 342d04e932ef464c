//! Finite-dimensional bialgebras over the rationals and the exact evaluation
//! of noncommutative sets, spans and squares on them.

mod builtin;
mod eval;
mod linmap;
mod structure;
mod tensor;

pub use builtin::{
    builtin, dual_group_algebra, group_algebra, nonbialg_counterexample, sweedler4, FiniteGroup,
    BUILTIN_NAMES,
};
pub use eval::{
    eval_horiz, eval_legs, eval_span, eval_vert, iterated_coproduct, iterated_product,
    mackey_check, mackey_sides, permute_tensor, psi, psi_literal, psi_power, Nesting, EvalStrategy,
};
pub use linmap::LinMap;
pub use structure::{AxiomReport, Bialgebra, BialgebraData};
pub use tensor::SparseVec;

pub(crate) use tensor::{add_scaled, add_term, basis, digits};
