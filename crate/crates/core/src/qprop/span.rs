use serde::{Deserialize, Serialize};

use crate::doublecat::{pullback, DoubleKind};
use crate::error::{Error, Result};
use crate::ncset::NcMap;

/// A morphism `T -> S` of the Q-construction: a span `T <-phi- U -f-> S`
/// with `phi` vertical and `f` horizontal, kept in normal form.
///
/// Two spans are identified when an isomorphism of the apex carries one
/// onto the other; [`Span::new`] picks a canonical labeling of the apex so
/// that identified spans are equal as values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpan", into = "RawSpan")]
pub struct Span {
    kind: DoubleKind,
    phi: NcMap,
    f: NcMap,
}

#[derive(Serialize, Deserialize)]
struct RawSpan {
    kind: DoubleKind,
    src: usize,
    dst: usize,
    mid: usize,
    phi: NcMap,
    f: NcMap,
}

impl TryFrom<RawSpan> for Span {
    type Error = Error;
    fn try_from(raw: RawSpan) -> Result<Self> {
        if raw.phi.target_size() != raw.src
            || raw.f.target_size() != raw.dst
            || raw.phi.source_size() != raw.mid
        {
            return Err(Error::invalid(
                "span",
                "src/dst/mid disagree with the legs",
            ));
        }
        Span::new(raw.kind, raw.phi, raw.f)
    }
}

impl From<Span> for RawSpan {
    fn from(s: Span) -> Self {
        RawSpan {
            kind: s.kind,
            src: s.src(),
            dst: s.dst(),
            mid: s.mid(),
            phi: s.phi,
            f: s.f,
        }
    }
}

impl Span {
    /// Normalize a raw span `T <-phi- U -f-> S`.
    ///
    /// The apex is relabeled by a key that every isomorphism of spans preserves:
    /// `(phi-target, rank in phi-fiber)` for `Fas` and `Fas2`,
    /// `(phi-target, f-target, rank in f-fiber)` for `Fas1`, and
    /// `(phi-target, f-target)` for `F`, where tied elements are interchangeable.
    pub fn new(kind: DoubleKind, phi: NcMap, f: NcMap) -> Result<Span> {
        if phi.source_size() != f.source_size() {
            return Err(Error::invalid(
                "span",
                format!(
                    "legs have sources of size {} and {}",
                    phi.source_size(),
                    f.source_size()
                ),
            ));
        }
        let phi = kind.vertical(&phi);
        let f = kind.horizontal(&f);
        let (phi_values, phi_ranks) = (phi.values(), phi.ranks());
        let (f_values, f_ranks) = (f.values(), f.ranks());
        let key = |u: usize| -> (usize, usize, usize) {
            let i = u - 1;
            match kind {
                DoubleKind::Fas | DoubleKind::Fas2 => (phi_values[i], phi_ranks[i], 0),
                DoubleKind::Fas1 => (phi_values[i], f_values[i], f_ranks[i]),
                DoubleKind::F => (phi_values[i], f_values[i], 0),
            }
        };
        let mut order: Vec<usize> = (1..=phi.source_size()).collect();
        order.sort_by_key(|&u| (key(u), u));
        let mut relabel = vec![0; order.len()];
        for (pos, &u) in order.iter().enumerate() {
            relabel[u - 1] = pos + 1;
        }
        Ok(Span {
            kind,
            phi: kind.vertical(&phi.relabel_source(&relabel)),
            f: kind.horizontal(&f.relabel_source(&relabel)),
        })
    }

    pub fn identity(kind: DoubleKind, n: usize) -> Span {
        Span {
            kind,
            phi: NcMap::identity(n),
            f: NcMap::identity(n),
        }
    }

    pub fn kind(&self) -> DoubleKind {
        self.kind
    }

    pub fn src(&self) -> usize {
        self.phi.target_size()
    }

    pub fn dst(&self) -> usize {
        self.f.target_size()
    }

    pub fn mid(&self) -> usize {
        self.phi.source_size()
    }

    /// The vertical leg `U -> T`.
    pub fn phi(&self) -> &NcMap {
        &self.phi
    }

    /// The horizontal leg `U -> S`.
    pub fn f(&self) -> &NcMap {
        &self.f
    }

    /// `self ∘ first`: pull back `first.f` along `self.phi` and compose legs.
    pub fn after(&self, first: &Span) -> Result<Span> {
        if self.kind != first.kind {
            return Err(Error::Kind {
                expected: first.kind,
                found: self.kind,
            });
        }
        if first.dst() != self.src() {
            return Err(Error::Arity(format!(
                "span into {} followed by span out of {}",
                first.dst(),
                self.src()
            )));
        }
        let square = pullback(self.kind, &first.f, &self.phi)?;
        let phi = first.phi.compose(&square.phi1)?;
        let f = self.f.compose(&square.f1)?;
        Span::new(self.kind, phi, f)
    }

    /// Monoidal product, placing `other` after `self`.
    pub fn disjoint_union(&self, other: &Span) -> Result<Span> {
        if self.kind != other.kind {
            return Err(Error::Kind {
                expected: self.kind,
                found: other.kind,
            });
        }
        Span::new(
            self.kind,
            self.phi.disjoint_union(&other.phi),
            self.f.disjoint_union(&other.f),
        )
    }

    /// Rebuild as a span of another kind, forgetting or keeping orderings
    /// according to that kind.
    pub fn forget_to(&self, kind: DoubleKind) -> Span {
        Span::new(kind, self.phi.clone(), self.f.clone()).expect("legs already agree")
    }
}

/// `compose_span(second, first) = second ∘ first`.
pub fn compose_span(second: &Span, first: &Span) -> Result<Span> {
    second.after(first)
}

pub fn normalize(kind: DoubleKind, phi: NcMap, f: NcMap) -> Result<Span> {
    Span::new(kind, phi, f)
}

/// `S <-1- S -f-> T` for a horizontal morphism `f`.
pub fn i_star(kind: DoubleKind, f: &NcMap) -> Span {
    Span::new(kind, NcMap::identity(f.source_size()), f.clone()).expect("legs share a source")
}

/// `T <-phi- S -1-> S` for a vertical morphism `phi`.
pub fn i_costar(kind: DoubleKind, phi: &NcMap) -> Span {
    Span::new(kind, phi.clone(), NcMap::identity(phi.source_size())).expect("legs share a source")
}

pub fn span_disjoint_union(a: &Span, b: &Span) -> Result<Span> {
    a.disjoint_union(b)
}

/// The unique spans `n -> 0` and `0 -> m`; both pass through the empty apex.
pub fn zero_object_morphisms(kind: DoubleKind, n: usize, m: usize) -> (Span, Span) {
    let to_zero = Span::new(kind, NcMap::from_empty(n), NcMap::from_empty(0)).unwrap();
    let from_zero = Span::new(kind, NcMap::from_empty(0), NcMap::from_empty(m)).unwrap();
    (to_zero, from_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nc(n: usize, fibers: &[&[usize]]) -> NcMap {
        NcMap::new(n, fibers.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    #[test]
    fn normal_form_relabels_by_vertical_rank() {
        let s = Span::new(DoubleKind::Fas, nc(2, &[&[2, 1]]), nc(2, &[&[1, 2]])).unwrap();
        assert_eq!(s.phi(), &nc(2, &[&[1, 2]]));
        assert_eq!(s.f(), &nc(2, &[&[2, 1]]));
        // explicit isomorphism h = (1 2) carries the raw span onto the normal form
        let h = [2, 1];
        assert_eq!(nc(2, &[&[2, 1]]).relabel_source(&h), *s.phi());
        assert_eq!(nc(2, &[&[1, 2]]).relabel_source(&h), *s.f());
        let again = Span::new(DoubleKind::Fas, s.phi().clone(), s.f().clone()).unwrap();
        assert_eq!(again, s);
    }

    #[test]
    fn identity_is_neutral() {
        let s = Span::new(DoubleKind::Fas, nc(3, &[&[3, 1], &[2]]), nc(3, &[&[2, 3, 1]])).unwrap();
        assert_eq!(Span::identity(DoubleKind::Fas, 1).after(&s).unwrap(), s);
        assert_eq!(s.after(&Span::identity(DoubleKind::Fas, 2)).unwrap(), s);
    }

    #[test]
    fn plain_composition_multiplies_apex_sizes() {
        let two = Span::new(DoubleKind::F, nc(2, &[&[1, 2]]), nc(2, &[&[1, 2]])).unwrap();
        let three = Span::new(DoubleKind::F, nc(3, &[&[1, 2, 3]]), nc(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(two.after(&three).unwrap().mid(), 6);
    }

    #[test]
    fn composition_errors() {
        let a = Span::identity(DoubleKind::Fas, 1);
        let b = Span::identity(DoubleKind::F, 1);
        assert!(matches!(a.after(&b), Err(Error::Kind { .. })));
        let c = Span::identity(DoubleKind::Fas, 2);
        assert!(matches!(a.after(&c), Err(Error::Arity(_))));
        assert!(Span::new(DoubleKind::Fas, NcMap::identity(1), NcMap::identity(2)).is_err());
    }

    #[test]
    fn zero_object() {
        let (to, from) = zero_object_morphisms(DoubleKind::Fas, 3, 2);
        assert_eq!((to.src(), to.dst(), to.mid()), (3, 0, 0));
        assert_eq!((from.src(), from.dst(), from.mid()), (0, 2, 0));
        let a = Span::new(DoubleKind::Fas, nc(2, &[&[2, 1]]), nc(2, &[&[1], &[2]])).unwrap();
        let empty = Span::identity(DoubleKind::Fas, 0);
        assert_eq!(a.disjoint_union(&empty).unwrap(), a);
    }

    #[test]
    fn json_round_trip_normalizes() {
        let text = r#"{"kind":"Fas","src":1,"dst":1,"mid":2,"phi":{"n":2,"m":1,"fibers":[[2,1]]},"f":{"n":2,"m":1,"fibers":[[1,2]]}}"#;
        let s: Span = serde_json::from_str(text).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"kind":"Fas","src":1,"dst":1,"mid":2,"phi":{"n":2,"m":1,"fibers":[[1,2]]},"f":{"n":2,"m":1,"fibers":[[2,1]]}}"#
        );
    }
}
