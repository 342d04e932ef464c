use std::fmt;

use serde::{Deserialize, Serialize};

use crate::doublecat::DoubleKind;
use crate::enumerate::permutations;
use crate::error::{Error, Result};
use crate::ncset::{FinSetMap, NcMap, Permutation};
use crate::qprop::Span;

use super::fp::{compose_fp, fiber_permutation, fp_to_nc, nc_to_fp, FPMorphism};
use super::set_operad::{Op, SetOperad};

/// A square of `F(P)_2`
///
/// ```text
///   U --f1--> S
///   |         |
///  phi1      phi
///   v         v
///   T --f---> V
/// ```
///
/// with set maps `f1`, `f` and morphisms `phi1`, `phi` of `F(P)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpBimorphism {
    pub f1: FinSetMap,
    pub phi1: FPMorphism,
    pub f: FinSetMap,
    pub phi: FPMorphism,
}

impl FpBimorphism {
    /// The square is a pullback of sets, `f1` maps each fiber of `phi1`
    /// increasingly onto the fiber of `phi` below it, and
    /// `omega^{phi1}_t = omega^{phi}_{f(t)}` for every `t`.
    pub fn is_valid(&self) -> bool {
        let (u, t, s) = (self.f1.source_size(), self.f.source_size(), self.phi.source_size());
        if self.phi1.source_size() != u
            || self.phi1.target_size() != t
            || self.f1.target_size() != s
            || self.f.target_size() != self.phi.target_size()
        {
            return false;
        }
        let commutes = (1..=u).all(|x| self.f.apply(self.phi1.map().apply(x)) == self.phi.map().apply(self.f1.apply(x)));
        let pairs: std::collections::BTreeSet<(usize, usize)> =
            (1..=u).map(|x| (self.phi1.map().apply(x), self.f1.apply(x))).collect();
        let expected = (1..=t)
            .map(|ti| self.phi.fiber_size(self.f.apply(ti)))
            .sum::<usize>();
        if !commutes || pairs.len() != u || u != expected {
            return false;
        }
        (1..=t).all(|ti| {
            let lower = self.phi1.map().fiber(ti);
            let images: Vec<usize> = lower.iter().map(|&x| self.f1.apply(x)).collect();
            images.windows(2).all(|w| w[0] < w[1]) && self.phi1.omega()[ti - 1] == self.phi.omega()[self.f.apply(ti) - 1]
        })
    }
}

/// The pullback of a set map `f: T -> V` and a morphism `phi: S -> V` of
/// `F(P)`, the apex enumerated with `s` varying slowest. The twist of the
/// new vertical leg over `t` is the twist of `phi` over `f(t)`.
pub fn pullback_fp2(f: &FinSetMap, phi: &FPMorphism) -> Result<FpBimorphism> {
    if f.target_size() != phi.target_size() {
        return Err(Error::Endpoints(format!(
            "pullback of maps into {} and {} elements",
            f.target_size(),
            phi.target_size()
        )));
    }
    let mut f1_values = Vec::new();
    let mut phi1_values = Vec::new();
    for s in 1..=phi.source_size() {
        for t in f.fiber(phi.map().apply(s)) {
            f1_values.push(s);
            phi1_values.push(t);
        }
    }
    let omega = (1..=f.source_size()).map(|t| phi.omega()[f.apply(t) - 1]).collect();
    let phi1 = FPMorphism::from_parts(FinSetMap::new(f.source_size(), phi1_values)?, omega);
    Ok(FpBimorphism {
        f1: FinSetMap::new(phi.source_size(), f1_values)?,
        phi1,
        f: f.clone(),
        phi: phi.clone(),
    })
}

/// A span `src <-phi- U -f-> dst` of `F(P)_2`: `phi` a morphism of `F(P)`,
/// `f` a set map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpSpan {
    pub phi: FPMorphism,
    pub f: FinSetMap,
}

impl FpSpan {
    pub fn new(phi: FPMorphism, f: FinSetMap) -> Result<FpSpan> {
        if phi.source_size() != f.source_size() {
            return Err(Error::Endpoints(format!(
                "legs out of {} and {} elements",
                phi.source_size(),
                f.source_size()
            )));
        }
        Ok(FpSpan { phi, f })
    }

    pub fn identity(op: &SetOperad, n: usize) -> FpSpan {
        FpSpan {
            phi: FPMorphism::identity(op, n),
            f: FinSetMap::identity(n),
        }
    }

    pub fn src(&self) -> usize {
        self.phi.target_size()
    }

    pub fn dst(&self) -> usize {
        self.f.target_size()
    }

    pub fn mid(&self) -> usize {
        self.f.source_size()
    }

    /// The same span with apex element `u` renamed `pi(u)`.
    pub fn relabel(&self, op: &SetOperad, pi: &Permutation) -> Result<FpSpan> {
        if pi.len() != self.mid() {
            return Err(Error::Arity(format!("relabeling of {} points on an apex of {}", pi.len(), self.mid())));
        }
        let inv = pi.inverse();
        let moved = |m: &FinSetMap| {
            FinSetMap::new(m.target_size(), (1..=pi.len()).map(|x| m.apply(inv.apply(x))).collect())
        };
        let mut omega = Vec::with_capacity(self.src());
        for i in 1..=self.src() {
            let images: Vec<usize> = self.phi.map().fiber(i).iter().map(|&u| pi.apply(u)).collect();
            omega.push(op.act(self.phi.operation(i), &fiber_permutation(&images))?.1);
        }
        Ok(FpSpan {
            phi: FPMorphism::new(op, moved(self.phi.map())?, omega)?,
            f: moved(&self.f)?,
        })
    }

    /// `self ∘ first`.
    pub fn after(&self, op: &SetOperad, first: &FpSpan) -> Result<FpSpan> {
        compose_span_fp2(op, self, first)
    }

    /// For spans over the associative operad: the corresponding span of
    /// `Q(Fas2)`.
    pub fn to_span(&self) -> Result<Span> {
        Span::new(DoubleKind::Fas2, fp_to_nc(&self.phi)?, NcMap::lift(&self.f))
    }

    pub fn from_span(s: &Span) -> Result<FpSpan> {
        if s.kind() != DoubleKind::Fas2 {
            return Err(Error::Kind {
                expected: DoubleKind::Fas2,
                found: s.kind(),
            });
        }
        FpSpan::new(nc_to_fp(s.phi()), s.f().underlying())
    }
}

/// `second ∘ first`: pull back `first.f` along `second.phi`, then compose
/// the vertical legs in `F(P)` and the horizontal legs as set maps.
pub fn compose_span_fp2(op: &SetOperad, second: &FpSpan, first: &FpSpan) -> Result<FpSpan> {
    if first.dst() != second.src() {
        return Err(Error::Arity(format!(
            "span into {} followed by span out of {}",
            first.dst(),
            second.src()
        )));
    }
    let square = pullback_fp2(&first.f, &second.phi)?;
    let phi = compose_fp(op, &first.phi, &square.phi1)?;
    let f = second.f.compose(&square.f1)?;
    FpSpan::new(phi, f)
}

/// A point of `F_P(X) = ⊔_n P(n) ×_{S_n} X^n`, stored as the smallest pair
/// `(omega · s, t ∘ s)` over all permutations `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeElement {
    pub alphabet: usize,
    pub omega: Op,
    pub tuple: Vec<usize>,
}

impl FreeElement {
    pub fn canonical(op: &SetOperad, alphabet: usize, omega: Op, tuple: &[usize]) -> Result<FreeElement> {
        if omega.0 != tuple.len() {
            return Err(Error::Arity(format!("operation of arity {} on {} letters", omega.0, tuple.len())));
        }
        if tuple.iter().any(|&x| x == 0 || x > alphabet) {
            return Err(Error::invalid("free element", format!("letters outside 1..={alphabet}")));
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for s in permutations(omega.0) {
            let candidate = (op.act(omega, &s)?.1, (1..=s.len()).map(|k| tuple[s.apply(k) - 1]).collect());
            if best.as_ref().map_or(true, |b| candidate < *b) {
                best = Some(candidate);
            }
        }
        let (index, tuple) = best.expect("at least the identity");
        Ok(FreeElement {
            alphabet,
            omega: (omega.0, index),
            tuple,
        })
    }

    pub fn arity(&self) -> usize {
        self.omega.0
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.tuple.iter().map(usize::to_string).collect();
        write!(f, "[{}; {}]({})", self.omega.0, self.omega.1, letters.join(", "))
    }
}

/// The element of `F_P(X)` named by a span `1 <-(m, omega)- m -f-> X`.
pub fn span_to_free(op: &SetOperad, s: &FpSpan) -> Result<FreeElement> {
    if s.src() != 1 {
        return Err(Error::Endpoints(format!("span out of {} instead of 1", s.src())));
    }
    let tuple: Vec<usize> = (1..=s.mid()).map(|u| s.f.apply(u)).collect();
    FreeElement::canonical(op, s.dst(), s.phi.operation(1), &tuple)
}
