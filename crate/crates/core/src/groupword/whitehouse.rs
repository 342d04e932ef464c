use crate::bialg::{Bialgebra, LinMap};
use crate::error::{Error, Result};
use crate::ncset::{FinSetMap, Permutation};

use super::hom::{eval_hom_on_hopf, GroupHom};
use super::word::GroupWord;

/// The automorphism of the free group of rank `k` attached to the adjacent
/// transposition `sigma_i = (i, i+1)` of `{1, ..., k+1}`.
pub fn xi_generator(k: usize, i: usize) -> Result<GroupHom> {
    if k == 0 || i == 0 || i > k {
        return Err(Error::invalid(
            "adjacent transposition",
            format!("sigma_{i} is not a generator of S_{}", k + 1),
        ));
    }
    let x = GroupWord::generator;
    let mut images: Vec<GroupWord> = (1..=k).map(x).collect();
    images[i - 1] = x(i).inverse();
    if i > 1 {
        images[i - 2] = x(i - 1).mul(&x(i));
    }
    if i < k {
        images[i] = x(i).mul(&x(i + 1));
    }
    GroupHom::new(k, k, images)
}

/// Indices `t_1, ..., t_r` with `perm = sigma_{t_r} ∘ ... ∘ sigma_{t_1}`,
/// found by bubble sort of the one-line notation.
pub fn adjacent_factorization(perm: &Permutation) -> Vec<usize> {
    let mut line = perm.images().to_vec();
    let mut swaps = Vec::new();
    let n = line.len();
    for pass in 0..n {
        for j in 0..n.saturating_sub(pass + 1) {
            if line[j] > line[j + 1] {
                line.swap(j, j + 1);
                swaps.push(j + 1);
            }
        }
    }
    swaps
}

/// `xi_k(perm)`, an automorphism of the free group of rank `k` for a
/// permutation of `k + 1` letters. The assignment is multiplicative:
/// `xi(k, a ∘ b) = xi(k, a) ∘ xi(k, b)`.
pub fn xi(k: usize, perm: &Permutation) -> Result<GroupHom> {
    if perm.len() != k + 1 {
        return Err(Error::Arity(format!(
            "xi_{k} needs a permutation of {} letters, got {}",
            k + 1,
            perm.len()
        )));
    }
    let mut acc = GroupHom::identity(k);
    for t in adjacent_factorization(perm) {
        acc = xi_generator(k, t)?.after(&acc)?;
    }
    Ok(acc)
}

/// The left action of a permutation of `k + 1` letters on `H^{⊗k}`,
/// `perm ↦ eval(xi_k(perm^{-1}))`.
pub fn symmetric_action(k: usize, perm: &Permutation, b: &Bialgebra) -> Result<LinMap> {
    eval_hom_on_hopf(&xi(k, &perm.inverse())?, b)
}

/// An element of the group presented by symbols `<x, y>` for `x, y` in
/// `{1, ..., size}` subject to `<x, y><y, z> = <x, z>`. It is stored in the
/// free basis `g_x = <x, 1>`, `x ≥ 2`, as a reduced word whose generator
/// indices are the points `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairGroupElement {
    size: usize,
    word: GroupWord,
}

impl PairGroupElement {
    pub fn identity(size: usize) -> PairGroupElement {
        PairGroupElement {
            size,
            word: GroupWord::identity(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basepoint(&self) -> usize {
        1
    }

    pub fn word(&self) -> &GroupWord {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

fn point_generator(x: usize) -> GroupWord {
    if x == 1 {
        GroupWord::identity()
    } else {
        GroupWord::generator(x)
    }
}

/// `<x, y> = g_x g_y^{-1}`.
pub fn pair_gen(size: usize, x: usize, y: usize) -> Result<PairGroupElement> {
    if x == 0 || y == 0 || x > size || y > size {
        return Err(Error::invalid("pair generator", format!("<{x}, {y}> outside 1..={size}")));
    }
    Ok(PairGroupElement {
        size,
        word: point_generator(x).mul(&point_generator(y).inverse()),
    })
}

pub fn pair_group_mul(a: &PairGroupElement, b: &PairGroupElement) -> Result<PairGroupElement> {
    if a.size != b.size {
        return Err(Error::invalid(
            "pair group product",
            format!("base sets of sizes {} and {} differ", a.size, b.size),
        ));
    }
    Ok(PairGroupElement {
        size: a.size,
        word: a.word.mul(&b.word),
    })
}

/// The induced homomorphism `<x, y> ↦ <alpha(x), alpha(y)>`, computed on
/// the free basis as `g_x ↦ <alpha(x), alpha(1)>`.
pub fn pair_group_map(alpha: &FinSetMap, e: &PairGroupElement) -> Result<PairGroupElement> {
    if alpha.source_size() != e.size {
        return Err(Error::Arity(format!(
            "map from {} points applied to an element over {} points",
            alpha.source_size(),
            e.size
        )));
    }
    let m = alpha.target_size();
    if e.word.is_empty() {
        return Ok(PairGroupElement::identity(m));
    }
    let base = alpha.apply(1);
    let word = e.word.substitute(|x| {
        pair_gen(m, alpha.apply(x), base).expect("image inside the target").word
    });
    Ok(PairGroupElement { size: m, word })
}
