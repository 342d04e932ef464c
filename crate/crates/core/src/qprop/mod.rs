//! The Q-construction: spans `T <-phi- U -f-> S` of a double category, up to
//! isomorphism of the apex, composed through pullbacks.
//!
//! For the kind `Fas` this is the PROP whose algebras are bialgebras. Its
//! endomorphisms of `1` form the monoid of pairs `(n, sigma)` with
//! composition `Phi`.

mod encode;
mod endo;
mod span;

use std::collections::BTreeSet;

use crate::doublecat::DoubleKind;
use crate::enumerate::{nc_maps, plain_maps};

pub use encode::{
    mon_span_of_words, mon_words_of_span, qf_from_matrix, qf_to_matrix, qfas_decode, qfas_encode,
    shuffle_to_word, word_to_shuffle, NatMatrix, QfasEncoding, QfasEntry, Shuffle, WordTuple,
};
pub use endo::{
    block_perm, endo_from_span, endo_to_span, gamma_perm, phi_compose, transpose_perm, EndoPair,
};
pub use span::{
    compose_span, i_costar, i_star, normalize, span_disjoint_union, zero_object_morphisms, Span,
};

/// Every span `src -> dst` with apex of size `mid`, each listed once.
pub fn all_spans(kind: DoubleKind, src: usize, dst: usize, mid: usize) -> Vec<Span> {
    let verticals = if kind.vertical_ordered() {
        nc_maps(mid, src)
    } else {
        plain_maps(mid, src)
    };
    let horizontals = if kind.horizontal_ordered() {
        nc_maps(mid, dst)
    } else {
        plain_maps(mid, dst)
    };
    let mut out = BTreeSet::new();
    for phi in &verticals {
        for f in &horizontals {
            out.insert(Span::new(kind, phi.clone(), f.clone()).expect("same apex"));
        }
    }
    out.into_iter().collect()
}

/// Every span `src -> dst` with apex of size at most `max_mid`.
pub fn all_spans_up_to(kind: DoubleKind, src: usize, dst: usize, max_mid: usize) -> Vec<Span> {
    (0..=max_mid)
        .flat_map(|mid| all_spans(kind, src, dst, mid))
        .collect()
}
