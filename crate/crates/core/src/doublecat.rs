//! The four double categories `F`, `F(as)`, `F(as)_1`, `F(as)_2`: squares of
//! finite-set maps in which some legs carry fiber orderings.
//!
//! Every leg is stored as an [`NcMap`]. Legs that the kind treats as plain set
//! maps are kept with increasing fibers, and their orderings are ignored when
//! validating.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncset::NcMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DoubleKind {
    /// Plain sets in both directions.
    F,
    /// Ordered fibers in both directions.
    Fas,
    /// Plain vertical legs, ordered horizontal legs.
    Fas1,
    /// Ordered vertical legs, plain horizontal legs.
    Fas2,
}

impl DoubleKind {
    pub const ALL: [DoubleKind; 4] = [DoubleKind::F, DoubleKind::Fas, DoubleKind::Fas1, DoubleKind::Fas2];

    pub fn horizontal_ordered(self) -> bool {
        matches!(self, DoubleKind::Fas | DoubleKind::Fas1)
    }

    pub fn vertical_ordered(self) -> bool {
        matches!(self, DoubleKind::Fas | DoubleKind::Fas2)
    }

    /// Bring a horizontal leg into the form this kind stores.
    pub fn horizontal(self, f: &NcMap) -> NcMap {
        if self.horizontal_ordered() {
            f.clone()
        } else {
            f.with_sorted_fibers()
        }
    }

    /// Bring a vertical leg into the form this kind stores.
    pub fn vertical(self, phi: &NcMap) -> NcMap {
        if self.vertical_ordered() {
            phi.clone()
        } else {
            phi.with_sorted_fibers()
        }
    }
}

/// A square
///
/// ```text
///   U --f1--> S
///   |         |
///  phi1      phi
///   v         v
///   T --f---> V
/// ```
///
/// with horizontal legs `f1`, `f` and vertical legs `phi1`, `phi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bimorphism {
    pub kind: DoubleKind,
    pub f1: NcMap,
    pub phi1: NcMap,
    pub f: NcMap,
    pub phi: NcMap,
}

/// Pull back a horizontal `f: T -> V` along a vertical `phi: S -> V`.
///
/// The apex `U = {(t, s) : f(t) = phi(s)}` is enumerated by `s` first and then
/// by the position of `t` in the fiber of `f` over `phi(s)`. The fiber orders
/// of `phi1` are transported from `phi`, those of `f1` from `f`.
pub fn pullback(kind: DoubleKind, f: &NcMap, phi: &NcMap) -> Result<Bimorphism> {
    if f.target_size() != phi.target_size() {
        return Err(Error::Endpoints(format!(
            "pullback of maps into {} and {} elements",
            f.target_size(),
            phi.target_size()
        )));
    }
    let f = kind.horizontal(f);
    let phi = kind.vertical(phi);
    let t_size = f.source_size();
    let s_size = phi.source_size();
    let f_values = f.values();
    let phi_values = phi.values();

    // label[(t-1) * s_size + (s-1)] for pairs in the pullback
    let mut label = vec![0usize; t_size * s_size];
    let mut f1_fibers = Vec::with_capacity(s_size);
    let mut next = 1;
    for s in 1..=s_size {
        let mut fiber = Vec::new();
        for &t in f.fiber(phi_values[s - 1]) {
            label[(t - 1) * s_size + (s - 1)] = next;
            fiber.push(next);
            next += 1;
        }
        f1_fibers.push(fiber);
    }
    let u_size = next - 1;
    let phi1_fibers = (1..=t_size)
        .map(|t| {
            phi.fiber(f_values[t - 1])
                .iter()
                .map(|&s| label[(t - 1) * s_size + (s - 1)])
                .collect()
        })
        .collect();
    let f1 = NcMap::from_fibers_unchecked(u_size, f1_fibers);
    let phi1 = NcMap::from_fibers_unchecked(u_size, phi1_fibers);
    Ok(Bimorphism {
        kind,
        f1: kind.horizontal(&f1),
        phi1: kind.vertical(&phi1),
        f,
        phi,
    })
}

impl Bimorphism {
    /// Conditions i)-iii): the underlying square is a pullback of sets, and the
    /// induced maps between fibers preserve order on every leg the kind orders.
    pub fn is_valid(&self) -> bool {
        let (u, t, s, v) = (
            self.f1.source_size(),
            self.f.source_size(),
            self.phi.source_size(),
            self.f.target_size(),
        );
        if self.phi1.source_size() != u
            || self.f1.target_size() != s
            || self.phi1.target_size() != t
            || self.phi.target_size() != v
        {
            return false;
        }
        let f1 = self.f1.values();
        let phi1 = self.phi1.values();
        let f = self.f.values();
        let phi = self.phi.values();

        // i) commutes and U -> T x_V S is a bijection
        let mut hit = vec![false; t * s];
        for x in 0..u {
            let (tx, sx) = (phi1[x], f1[x]);
            if f[tx - 1] != phi[sx - 1] {
                return false;
            }
            if std::mem::replace(&mut hit[(tx - 1) * s + (sx - 1)], true) {
                return false;
            }
        }
        let pullback_size: usize = (1..=v)
            .map(|w| self.f.fiber(w).len() * self.phi.fiber(w).len())
            .sum();
        if pullback_size != u {
            return false;
        }

        // ii) phi1-fiber(x) -> phi-fiber(f x) is an isomorphism of ordered sets
        if self.kind.vertical_ordered() {
            for x in 1..=t {
                let image: Vec<usize> = self.phi1.fiber(x).iter().map(|&y| f1[y - 1]).collect();
                if image != self.phi.fiber(f[x - 1]) {
                    return false;
                }
            }
        }
        // iii) f1-fiber(y) -> f-fiber(phi y) is an isomorphism of ordered sets
        if self.kind.horizontal_ordered() {
            for y in 1..=s {
                let image: Vec<usize> = self.f1.fiber(y).iter().map(|&x| phi1[x - 1]).collect();
                if image != self.f.fiber(phi[y - 1]) {
                    return false;
                }
            }
        }
        true
    }

    /// Both `f` and `phi` are elementary surjections.
    pub fn is_elementary(&self) -> bool {
        self.f.is_elementary_surjection() && self.phi.is_elementary_surjection()
    }
}

pub fn is_bimorphism(b: &Bimorphism) -> bool {
    b.is_valid()
}

pub fn is_elementary_bimorphism(b: &Bimorphism) -> bool {
    b.is_elementary()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncset::Permutation;

    fn nc(n: usize, fibers: &[&[usize]]) -> NcMap {
        NcMap::new(n, fibers.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    #[test]
    fn multiplication_against_comultiplication_square() {
        let f = nc(2, &[&[1, 2]]);
        let b = pullback(DoubleKind::Fas, &f, &f).unwrap();
        assert_eq!(b.f1, nc(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(b.phi1, nc(4, &[&[1, 3], &[2, 4]]));
        assert!(b.is_valid());
        assert!(b.is_elementary());
        // the square does not commute in F(as)
        assert_ne!(b.f.compose(&b.phi1).unwrap(), b.phi.compose(&b.f1).unwrap());
    }

    #[test]
    fn swapped_fiber_breaks_condition_ii() {
        let f = nc(2, &[&[1, 2]]);
        let mut b = pullback(DoubleKind::Fas, &f, &f).unwrap();
        b.phi1 = nc(4, &[&[1, 3], &[4, 2]]);
        assert!(!b.is_valid());
    }

    #[test]
    fn diagonal_square_is_not_a_pullback() {
        let c = nc(2, &[&[1, 2]]);
        let b = Bimorphism {
            kind: DoubleKind::F,
            f1: NcMap::identity(2),
            phi1: NcMap::identity(2),
            f: c.clone(),
            phi: c,
        };
        assert!(!b.is_valid());
    }

    #[test]
    fn block_square_for_endomorphisms() {
        let (m, n) = (3, 2);
        let sigma = Permutation::new(vec![2, 1]).unwrap();
        let b = pullback(
            DoubleKind::Fas,
            &NcMap::fold(&Permutation::identity(m)),
            &NcMap::fold(&sigma),
        )
        .unwrap();
        let f_fibers: Vec<Vec<usize>> = (1..=n).map(|j| ((j - 1) * m + 1..=j * m).collect()).collect();
        let g_fibers: Vec<Vec<usize>> = (1..=m)
            .map(|i| sigma.images().iter().map(|&s| i + (s - 1) * m).collect())
            .collect();
        assert_eq!(b.f1, NcMap::new(n * m, f_fibers).unwrap());
        assert_eq!(b.phi1, NcMap::new(n * m, g_fibers).unwrap());
        assert!(b.is_valid());
        assert!(!b.is_elementary());
    }

    #[test]
    fn pullback_along_identity() {
        let phi = nc(3, &[&[3, 1], &[2]]);
        for kind in DoubleKind::ALL {
            let b = pullback(kind, &NcMap::identity(2), &phi).unwrap();
            assert_eq!(b.f1, NcMap::identity(3));
            assert_eq!(b.phi1, kind.vertical(&phi));
            assert!(b.is_valid());
        }
    }

    #[test]
    fn identity_square_is_elementary() {
        let id = NcMap::identity(2);
        let b = pullback(DoubleKind::Fas, &id, &id).unwrap();
        assert!(b.is_elementary());
    }

    #[test]
    fn target_mismatch() {
        assert!(matches!(
            pullback(DoubleKind::Fas, &NcMap::identity(1), &NcMap::identity(2)),
            Err(Error::Endpoints(_))
        ));
    }

    #[test]
    fn empty_fibers_contribute_nothing() {
        let f = nc(1, &[&[1], &[]]);
        let phi = nc(2, &[&[], &[1, 2]]);
        let b = pullback(DoubleKind::Fas, &f, &phi).unwrap();
        assert_eq!(b.f1.source_size(), 0);
        assert!(b.is_valid());
    }
}
