use serde::{Deserialize, Serialize};

use crate::enumerate::{perm_rank, perm_unrank};
use crate::error::{Error, Result};
use crate::ncset::{FinSetMap, NcMap, Permutation};

use super::set_operad::{Op, SetOperad};

/// A morphism `(f, omega)` of `F(P)`: a map `f: n -> m` and, for every
/// `i` in `m`, an operation `omega_i` of arity `|f^{-1}(i)|`, given by its
/// index in `P(|f^{-1}(i)|)`.
///
/// Fibers are read in increasing order; a relabeling of the source acts on
/// `omega_i` through the symmetric-group action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFp")]
pub struct FPMorphism {
    f: FinSetMap,
    omega: Vec<usize>,
}

#[derive(Deserialize)]
struct RawFp {
    f: FinSetMap,
    omega: Vec<usize>,
}

impl TryFrom<RawFp> for FPMorphism {
    type Error = Error;
    fn try_from(raw: RawFp) -> Result<Self> {
        if raw.omega.len() != raw.f.target_size() {
            return Err(Error::invalid("F(P) morphism", "one operation per target point is required"));
        }
        Ok(FPMorphism {
            f: raw.f,
            omega: raw.omega,
        })
    }
}

impl FPMorphism {
    pub fn new(op: &SetOperad, f: FinSetMap, omega: Vec<usize>) -> Result<FPMorphism> {
        let m = FPMorphism { f, omega };
        m.validate(op)?;
        Ok(m)
    }

    /// Check the arities of the twist against `op`.
    pub fn validate(&self, op: &SetOperad) -> Result<()> {
        if self.omega.len() != self.f.target_size() {
            return Err(Error::invalid("F(P) morphism", "one operation per target point is required"));
        }
        for (i, &w) in self.omega.iter().enumerate() {
            let arity = self.fiber_size(i + 1);
            if arity > op.n_max() {
                return Err(Error::NotCovered(format!("fiber of size {arity} in {}", op.name())));
            }
            if w >= op.size(arity) {
                return Err(Error::invalid(
                    "F(P) morphism",
                    format!("operation {w} does not exist in arity {arity}"),
                ));
            }
        }
        Ok(())
    }

    /// Arities are the caller's responsibility.
    pub(crate) fn from_parts(f: FinSetMap, omega: Vec<usize>) -> FPMorphism {
        FPMorphism { f, omega }
    }

    pub fn identity(op: &SetOperad, n: usize) -> FPMorphism {
        FPMorphism {
            f: FinSetMap::identity(n),
            omega: vec![op.unit().1; n],
        }
    }

    pub fn map(&self) -> &FinSetMap {
        &self.f
    }

    pub fn omega(&self) -> &[usize] {
        &self.omega
    }

    pub fn source_size(&self) -> usize {
        self.f.source_size()
    }

    pub fn target_size(&self) -> usize {
        self.f.target_size()
    }

    pub fn fiber_size(&self, i: usize) -> usize {
        self.f.values().iter().filter(|&&v| v == i).count()
    }

    /// The operation over `i`, as `(arity, index)`.
    pub fn operation(&self, i: usize) -> Op {
        (self.fiber_size(i), self.omega[i - 1])
    }

    /// `self ∘ first`; see [`compose_fp`].
    pub fn after(&self, op: &SetOperad, first: &FPMorphism) -> Result<FPMorphism> {
        compose_fp(op, self, first)
    }
}

/// The permutation `theta` with `theta(k) = rank, in increasing order of
/// the whole list, of its `k`-th entry`.
fn ranks_of(list: &[usize]) -> Permutation {
    let mut sorted = list.to_vec();
    sorted.sort_unstable();
    let images = list
        .iter()
        .map(|u| sorted.binary_search(u).expect("present") + 1)
        .collect();
    Permutation::new(images).expect("distinct entries")
}

/// `(g, omega^g) ∘ (f, omega^f) = (g f, omega^h)` with
/// `omega^h_i = gamma(omega^g_i; omega^f_{j_1}, ..., omega^f_{j_s}) · theta_i^{-1}`,
/// where `j_1 < ... < j_s` is `g^{-1}(i)` and `theta_i` sends the position of
/// an element of `(gf)^{-1}(i)` in the concatenation of the increasing fibers
/// `f^{-1}(j_1), ..., f^{-1}(j_s)` to its rank in `(gf)^{-1}(i)`.
pub fn compose_fp(op: &SetOperad, g: &FPMorphism, f: &FPMorphism) -> Result<FPMorphism> {
    let h = g.f.compose(&f.f).map_err(|_| {
        Error::Arity(format!(
            "F(P) morphism into {} followed by one out of {}",
            f.target_size(),
            g.source_size()
        ))
    })?;
    let mut omega = Vec::with_capacity(g.target_size());
    for i in 1..=g.target_size() {
        let js = g.f.fiber(i);
        let inner: Vec<Op> = js.iter().map(|&j| f.operation(j)).collect();
        let raw = op.gamma(g.operation(i), &inner)?;
        let concatenated: Vec<usize> = js.iter().flat_map(|&j| f.f.fiber(j)).collect();
        let theta = ranks_of(&concatenated);
        omega.push(op.act(raw, &theta.inverse())?.1);
    }
    Ok(FPMorphism { f: h, omega })
}

/// The operation attached to an ordered fiber of an [`NcMap`]: the
/// permutation `omega` with `omega(k)` the position, in the ordered fiber,
/// of its `k`-th smallest element.
///
/// For the fiber `(2, 4, 1)` this is `3 1 2`.
pub fn fiber_permutation(fiber: &[usize]) -> Permutation {
    ranks_of(fiber).inverse()
}

/// The isomorphism `F(as) -> F(as-operad)`.
pub fn nc_to_fp(f: &NcMap) -> FPMorphism {
    FPMorphism {
        f: f.underlying(),
        omega: f.fibers().iter().map(|fiber| perm_rank(&fiber_permutation(fiber))).collect(),
    }
}

/// The inverse of [`nc_to_fp`]. `m` must be a morphism over [`super::as_operad`].
pub fn fp_to_nc(m: &FPMorphism) -> Result<NcMap> {
    let fibers = (1..=m.target_size())
        .map(|i| {
            let increasing = m.f.fiber(i);
            let s = increasing.len();
            if m.omega[i - 1] >= crate::enumerate::factorial(s) {
                return Err(Error::invalid("F(as) morphism", format!("no permutation {} of {s}", m.omega[i - 1])));
            }
            let omega = perm_unrank(s, m.omega[i - 1]);
            let mut ordered = vec![0; s];
            for (k, &u) in increasing.iter().enumerate() {
                ordered[omega.apply(k + 1) - 1] = u;
            }
            Ok(ordered)
        })
        .collect::<Result<Vec<_>>>()?;
    NcMap::new(m.source_size(), fibers)
}
