//! Free groups, their homomorphisms evaluated on cocommutative Hopf algebras,
//! and the symmetric-group actions on tensor powers they induce.

mod hom;
mod whitehouse;
mod word;

pub use hom::{compose_hom, eval_hom_on_hopf, eval_hom_routed, hom_equal, GroupHom};
pub use whitehouse::{
    adjacent_factorization, pair_gen, pair_group_map, pair_group_mul, symmetric_action, xi,
    xi_generator, PairGroupElement,
};
pub use word::{GroupWord, Letter};
