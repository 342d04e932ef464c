use serde::{Deserialize, Serialize};

use crate::bialg::{add_scaled, add_term, basis, digits, iterated_coproduct, Bialgebra, LinMap, Nesting, SparseVec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::word::GroupWord;

/// A homomorphism from the free group of rank `source_rank` to the free
/// group of rank `target_rank`, given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHom")]
pub struct GroupHom {
    source_rank: usize,
    target_rank: usize,
    images: Vec<GroupWord>,
}

#[derive(Deserialize)]
struct RawHom {
    source_rank: usize,
    target_rank: usize,
    images: Vec<GroupWord>,
}

impl TryFrom<RawHom> for GroupHom {
    type Error = Error;
    fn try_from(raw: RawHom) -> Result<Self> {
        GroupHom::new(raw.source_rank, raw.target_rank, raw.images)
    }
}

impl GroupHom {
    pub fn new(source_rank: usize, target_rank: usize, images: Vec<GroupWord>) -> Result<GroupHom> {
        if images.len() != source_rank {
            return Err(Error::invalid(
                "group homomorphism",
                format!("{} images for source rank {source_rank}", images.len()),
            ));
        }
        if let Some(w) = images.iter().find(|w| w.max_gen() > target_rank) {
            return Err(Error::invalid(
                "group homomorphism",
                format!("image {w} leaves the free group of rank {target_rank}"),
            ));
        }
        Ok(GroupHom {
            source_rank,
            target_rank,
            images,
        })
    }

    /// Parse one word per generator, e.g. `["x1 x2"]` for `x_1 ↦ x_1 x_2`.
    pub fn parse(source_rank: usize, target_rank: usize, images: &[&str]) -> Result<GroupHom> {
        let words = images.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?;
        GroupHom::new(source_rank, target_rank, words)
    }

    pub fn identity(rank: usize) -> GroupHom {
        GroupHom {
            source_rank: rank,
            target_rank: rank,
            images: (1..=rank).map(GroupWord::generator).collect(),
        }
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &GroupWord {
        &self.images[gen - 1]
    }

    pub fn apply(&self, w: &GroupWord) -> GroupWord {
        w.substitute(|g| self.image(g).clone())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.target_rank != self.source_rank {
            return Err(Error::Arity(format!(
                "cannot compose F_{} -> F_{} after F_{} -> F_{}",
                self.source_rank, self.target_rank, first.source_rank, first.target_rank
            )));
        }
        Ok(GroupHom {
            source_rank: first.source_rank,
            target_rank: self.target_rank,
            images: first.images.iter().map(|w| self.apply(w)).collect(),
        })
    }

    /// Number of occurrences of each target generator across all images.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.target_rank];
        for w in &self.images {
            for l in w.letters() {
                counts[l.gen - 1] += 1;
            }
        }
        counts
    }

    /// The routing that sends the `k`-th Sweedler copy of each generator to
    /// its `k`-th occurrence in scan order.
    pub fn scan_routing(&self) -> Vec<Vec<usize>> {
        self.occurrence_counts().iter().map(|&c| (0..c).collect()).collect()
    }
}

pub fn compose_hom(second: &GroupHom, first: &GroupHom) -> Result<GroupHom> {
    second.after(first)
}

/// Equality of reduced images; words are kept reduced, so this is equality
/// of homomorphisms.
pub fn hom_equal(a: &GroupHom, b: &GroupHom) -> bool {
    a == b
}

fn is_cocommutative_hopf(b: &Bialgebra) -> Result<()> {
    let r = b.report();
    if !r.is_bialgebra() {
        return Err(Error::Precondition(format!("{} is not a bialgebra", b.name())));
    }
    if !r.has_antipode() {
        return Err(Error::Precondition(format!("{} has no valid antipode", b.name())));
    }
    if !r.cocommutative {
        return Err(Error::Precondition(format!("{} is not cocommutative", b.name())));
    }
    Ok(())
}

/// The value of a homomorphism `F_m -> F_n` of free groups as a linear map
/// `H^{⊗n} -> H^{⊗m}` on a cocommutative Hopf algebra: each generator `x_i`
/// is comultiplied into one copy per occurrence, inverted letters receive
/// the antipode, and each image word multiplies its letters in order.
pub fn eval_hom_on_hopf(h: &GroupHom, b: &Bialgebra) -> Result<LinMap> {
    is_cocommutative_hopf(b)?;
    eval_hom_routed(h, b, &h.scan_routing())
}

/// The same construction for any algebra and coalgebra, without checking
/// the Hopf axioms, with an explicit routing: `routing[i][k]` is the index,
/// among the scan-order occurrences of `x_{i+1}`, that receives the `k`-th
/// Sweedler copy.
pub fn eval_hom_routed(h: &GroupHom, b: &Bialgebra, routing: &[Vec<usize>]) -> Result<LinMap> {
    let counts = h.occurrence_counts();
    if routing.len() != counts.len()
        || routing.iter().zip(&counts).any(|(r, &c)| {
            let mut sorted = r.clone();
            sorted.sort_unstable();
            sorted != (0..c).collect::<Vec<_>>()
        })
    {
        return Err(Error::invalid("routing", "not a permutation of the occurrences of each generator"));
    }
    let needs_antipode = h.images.iter().flat_map(|w| w.letters()).any(|l| l.inverse);
    if needs_antipode && !b.has_antipode_data() {
        return Err(Error::Precondition(format!("{} has no antipode", b.name())));
    }

    // slot[i][k]: (word index, letter position) of the k-th scan occurrence of x_{i+1}
    let mut slots: Vec<Vec<(usize, usize)>> = vec![Vec::new(); h.target_rank];
    for (wi, w) in h.images.iter().enumerate() {
        for (pos, l) in w.letters().iter().enumerate() {
            slots[l.gen - 1].push((wi, pos));
        }
    }
    let d = b.dim();
    let copowers: Vec<Vec<Vec<(Vec<usize>, Scalar)>>> = counts
        .iter()
        .map(|&c| {
            (0..d)
                .map(|a| {
                    iterated_coproduct(b, &basis(a as u64), c, Nesting::Left)
                        .into_iter()
                        .map(|(key, coeff)| (digits(key, d, c), coeff))
                        .collect()
                })
                .collect()
        })
        .collect();

    LinMap::from_fn(d, h.target_rank, h.source_rank, |input| {
        // assignment[wi][pos]: basis element placed on that letter
        let mut assignment: Vec<Vec<usize>> = h.images.iter().map(|w| vec![0; w.len()]).collect();
        let mut out = SparseVec::new();
        expand(
            h,
            b,
            &copowers,
            &slots,
            routing,
            input,
            0,
            Scalar::one(),
            &mut assignment,
            &mut out,
        );
        out
    })
}

#[allow(clippy::too_many_arguments)]
fn expand(
    h: &GroupHom,
    b: &Bialgebra,
    copowers: &[Vec<Vec<(Vec<usize>, Scalar)>>],
    slots: &[Vec<(usize, usize)>],
    routing: &[Vec<usize>],
    input: &[usize],
    gen: usize,
    coeff: Scalar,
    assignment: &mut Vec<Vec<usize>>,
    out: &mut SparseVec,
) {
    if gen == slots.len() {
        let value = multiply_words(h, b, assignment);
        add_scaled(out, &value, &coeff);
        return;
    }
    for (copies, c) in &copowers[gen][input[gen]] {
        for (k, &a) in copies.iter().enumerate() {
            let (wi, pos) = slots[gen][routing[gen][k]];
            assignment[wi][pos] = a;
        }
        expand(h, b, copowers, slots, routing, input, gen + 1, &coeff * c, assignment, out);
    }
}

fn multiply_words(h: &GroupHom, b: &Bialgebra, assignment: &[Vec<usize>]) -> SparseVec {
    let d = b.dim();
    let mut acc = SparseVec::from([(0u64, Scalar::one())]);
    for (w, letters) in h.images.iter().zip(assignment) {
        let mut prod = b.unit().clone();
        for (l, &a) in w.letters().iter().zip(letters) {
            let factor = if l.inverse {
                b.antipode(a).expect("checked").clone()
            } else {
                basis(a as u64)
            };
            prod = b.mul(&prod, &factor);
        }
        let mut next = SparseVec::new();
        for (&x, cx) in &acc {
            for (&y, cy) in &prod {
                add_term(&mut next, x * d as u64 + y, cx * cy);
            }
        }
        acc = next;
    }
    acc
}
