use serde::{Deserialize, Serialize};

use crate::doublecat::DoubleKind;
use crate::error::{Error, Result};
use crate::ncset::{NcMap, Permutation};

use super::span::Span;

/// The endomorphism `(n, sigma)` of `1` in `Q(F(as))`, i.e. the span
/// `1 <-[sigma]- n -[id]-> 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EndoPair {
    pub n: usize,
    pub sigma: Permutation,
}

impl EndoPair {
    pub fn new(sigma: Permutation) -> EndoPair {
        EndoPair {
            n: sigma.len(),
            sigma,
        }
    }

    pub fn identity() -> EndoPair {
        EndoPair::new(Permutation::identity(1))
    }

    /// `self ∘ other = (nm, Phi(sigma, tau))`.
    pub fn after(&self, other: &EndoPair) -> EndoPair {
        EndoPair::new(phi_compose(&self.sigma, &other.sigma))
    }
}

pub fn endo_to_span(e: &EndoPair) -> Span {
    Span::new(
        DoubleKind::Fas,
        NcMap::fold(&e.sigma),
        NcMap::fold(&Permutation::identity(e.n)),
    )
    .expect("both folds have source n")
}

/// Read off `sigma(k)` as the position in the horizontal fiber of the `k`-th
/// element of the vertical fiber.
pub fn endo_from_span(s: &Span) -> Result<EndoPair> {
    if s.kind() != DoubleKind::Fas {
        return Err(Error::Kind {
            expected: DoubleKind::Fas,
            found: s.kind(),
        });
    }
    if s.src() != 1 || s.dst() != 1 {
        return Err(Error::Endpoints(format!(
            "endomorphisms of 1 only, got a span {} -> {}",
            s.src(),
            s.dst()
        )));
    }
    let f_ranks = s.f().ranks();
    let images = s.phi().fiber(1).iter().map(|&u| f_ranks[u - 1]).collect();
    Ok(EndoPair::new(Permutation::new(images)?))
}

/// `Phi(sigma, tau)(x) = tau(p + 1) + m (sigma(q) - 1)` where `x = pn + q`,
/// `1 <= q <= n`.
pub fn phi_compose(sigma: &Permutation, tau: &Permutation) -> Permutation {
    let (n, m) = (sigma.len(), tau.len());
    let images = (1..=n * m)
        .map(|x| {
            let q = (x - 1) % n + 1;
            let p = (x - 1) / n;
            tau.apply(p + 1) + m * (sigma.apply(q) - 1)
        })
        .collect();
    Permutation::new(images).expect("closed form is a bijection")
}

/// Permute `n` consecutive blocks of sizes `sizes` so that block `j` lands in
/// slot `sigma(j)`, keeping the order inside each block.
pub fn block_perm(sigma: &Permutation, sizes: &[usize]) -> Result<Permutation> {
    if sigma.len() != sizes.len() {
        return Err(Error::Arity(format!(
            "{} block sizes for a permutation of {}",
            sizes.len(),
            sigma.len()
        )));
    }
    let inverse = sigma.inverse();
    let mut slot_start = vec![0; sizes.len() + 1];
    for slot in 1..=sizes.len() {
        slot_start[slot] = slot_start[slot - 1] + sizes[inverse.apply(slot) - 1];
    }
    let mut images = Vec::with_capacity(sizes.iter().sum());
    for (j, &size) in sizes.iter().enumerate() {
        let start = slot_start[sigma.apply(j + 1) - 1];
        images.extend((1..=size).map(|i| start + i));
    }
    Ok(Permutation::new(images).expect("blocks tile the target"))
}

/// The composition of the permutation operad:
/// `gamma(sigma; tau_1, ..., tau_n) = block_perm(sigma) ∘ (tau_1 ⊔ ... ⊔ tau_n)`.
pub fn gamma_perm(sigma: &Permutation, parts: &[Permutation]) -> Result<Permutation> {
    let sizes: Vec<usize> = parts.iter().map(Permutation::len).collect();
    let blocks = block_perm(sigma, &sizes)?;
    let union = parts
        .iter()
        .fold(Permutation::identity(0), |acc, p| acc.disjoint_union(p));
    blocks.compose(&union)
}

/// `II^{-1} ∘ I` for the two lexicographic enumerations of `n × m`:
/// `I(i, j) = (j - 1) n + i` and `II(i, j) = (i - 1) m + j`.
pub fn transpose_perm(n: usize, m: usize) -> Permutation {
    let mut images = vec![0; n * m];
    for i in 1..=n {
        for j in 1..=m {
            images[(j - 1) * n + i - 1] = (i - 1) * m + j;
        }
    }
    Permutation::new(images).expect("both enumerations are bijections")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn units_of_the_monoid() {
        let sigma = p(&[3, 1, 2]);
        assert_eq!(phi_compose(&sigma, &Permutation::identity(1)), sigma);
        assert_eq!(phi_compose(&Permutation::identity(1), &sigma), sigma);
        assert_eq!(phi_compose(&p(&[1, 2]), &p(&[1, 2])), p(&[1, 3, 2, 4]));
    }

    #[test]
    fn endo_span_examples() {
        let e = EndoPair::new(p(&[2, 1]));
        let raw = Span::new(
            DoubleKind::Fas,
            NcMap::new(2, vec![vec![2, 1]]).unwrap(),
            NcMap::new(2, vec![vec![1, 2]]).unwrap(),
        )
        .unwrap();
        assert_eq!(endo_to_span(&e), raw);
        assert_eq!(endo_from_span(&raw).unwrap(), e);
        assert_eq!(
            endo_to_span(&EndoPair::identity()),
            Span::identity(DoubleKind::Fas, 1)
        );
    }

    #[test]
    fn endo_from_span_rejects_other_endpoints() {
        assert!(matches!(
            endo_from_span(&Span::identity(DoubleKind::Fas, 2)),
            Err(Error::Endpoints(_))
        ));
        assert!(matches!(
            endo_from_span(&Span::identity(DoubleKind::F, 1)),
            Err(Error::Kind { .. })
        ));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            gamma_perm(&p(&[1, 2]), &[p(&[1]), p(&[1])]).unwrap(),
            Permutation::identity(2)
        );
        // block 1 (size 1) goes to slot 2, block 2 (size 2) to slot 1
        assert_eq!(block_perm(&p(&[2, 1]), &[1, 2]).unwrap(), p(&[3, 1, 2]));
        assert_eq!(
            gamma_perm(&p(&[2, 1]), &[p(&[1]), p(&[2, 1])]).unwrap(),
            p(&[3, 2, 1])
        );
        assert!(matches!(
            gamma_perm(&p(&[1, 2]), &[p(&[1])]),
            Err(Error::Arity(_))
        ));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose_perm(2, 2), p(&[1, 3, 2, 4]));
        assert_eq!(transpose_perm(1, 3), Permutation::identity(3));
        assert_eq!(transpose_perm(2, 3), p(&[1, 4, 2, 5, 3, 6]));
    }
}
