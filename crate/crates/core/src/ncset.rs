//! Finite sets `{1..n}`, their maps and permutations, and noncommutative
//! sets: maps whose fibers carry a total order.
//!
//! All elements are 1-based. A [`NcMap`] stores each fiber as an explicit
//! ordered sequence, including empty fibers, so composition is just
//! concatenation of fibers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A map `{1..n} -> {1..m}` of plain finite sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFinSetMap", into = "RawFinSetMap")]
pub struct FinSetMap {
    target: usize,
    values: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawFinSetMap {
    n: usize,
    m: usize,
    values: Vec<usize>,
}

impl TryFrom<RawFinSetMap> for FinSetMap {
    type Error = Error;
    fn try_from(raw: RawFinSetMap) -> Result<Self> {
        if raw.values.len() != raw.n {
            return Err(Error::invalid(
                "set map",
                format!("{} values for a source of size {}", raw.values.len(), raw.n),
            ));
        }
        FinSetMap::new(raw.m, raw.values)
    }
}

impl From<FinSetMap> for RawFinSetMap {
    fn from(f: FinSetMap) -> Self {
        RawFinSetMap {
            n: f.values.len(),
            m: f.target,
            values: f.values,
        }
    }
}

impl FinSetMap {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self> {
        if let Some(&v) = values.iter().find(|&&v| v == 0 || v > target) {
            return Err(Error::invalid(
                "set map",
                format!("value {v} outside 1..={target}"),
            ));
        }
        Ok(FinSetMap { target, values })
    }

    pub fn identity(n: usize) -> Self {
        FinSetMap {
            target: n,
            values: (1..=n).collect(),
        }
    }

    pub fn source_size(&self) -> usize {
        self.values.len()
    }

    pub fn target_size(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FinSetMap) -> Result<FinSetMap> {
        if other.target != self.source_size() {
            return Err(Error::Arity(format!(
                "set map with target {} followed by set map with source {}",
                other.target,
                self.source_size()
            )));
        }
        Ok(FinSetMap {
            target: self.target,
            values: other.values.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    /// Elements of the fiber over `j`, increasing.
    pub fn fiber(&self, j: usize) -> Vec<usize> {
        (1..=self.values.len())
            .filter(|&u| self.values[u - 1] == j)
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target + 1];
        self.values.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target + 1];
        for &v in &self.values {
            hit[v] = true;
        }
        hit[1..].iter().all(|&h| h)
    }
}

/// A permutation of `{1..n}` in one-line notation `[σ(1), ..., σ(n)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation")]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Deserialize)]
struct RawPermutation {
    images: Vec<usize>,
}

impl TryFrom<RawPermutation> for Permutation {
    type Error = Error;
    fn try_from(raw: RawPermutation) -> Result<Self> {
        Permutation::new(raw.images)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.images {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    /// Whitespace-separated one-line notation, e.g. `"2 3 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid(
                    "permutation",
                    format!("{images:?} is not a bijection of 1..={n}"),
                ));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::Arity(format!(
                "permutations of {} and {} letters",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Block sum: `self` on the first `len` letters, `other` shifted after it.
    pub fn disjoint_union(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&v| v + shift));
        Permutation { images }
    }

    pub fn as_set_map(&self) -> FinSetMap {
        FinSetMap {
            target: self.len(),
            values: self.images.clone(),
        }
    }
}

/// A morphism `n -> m` of noncommutative sets: a set map together with a
/// total order on every fiber.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawNcMap", into = "RawNcMap")]
pub struct NcMap {
    source: usize,
    fibers: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawNcMap {
    n: usize,
    m: usize,
    fibers: Vec<Vec<usize>>,
}

impl TryFrom<RawNcMap> for NcMap {
    type Error = Error;
    fn try_from(raw: RawNcMap) -> Result<Self> {
        if raw.fibers.len() != raw.m {
            return Err(Error::invalid(
                "noncommutative map",
                format!("{} fibers for a target of size {}", raw.fibers.len(), raw.m),
            ));
        }
        NcMap::new(raw.n, raw.fibers)
    }
}

impl From<NcMap> for RawNcMap {
    fn from(f: NcMap) -> Self {
        RawNcMap {
            n: f.source,
            m: f.fibers.len(),
            fibers: f.fibers,
        }
    }
}

impl fmt::Debug for NcMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcMap({}->{}: {:?})", self.source, self.fibers.len(), self.fibers)
    }
}

impl NcMap {
    /// Checks that the fibers partition `{1..source}` without repeats.
    pub fn new(source: usize, fibers: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; source + 1];
        for fiber in &fibers {
            for &u in fiber {
                if u == 0 || u > source {
                    return Err(Error::invalid(
                        "noncommutative map",
                        format!("element {u} outside 1..={source}"),
                    ));
                }
                if std::mem::replace(&mut seen[u], true) {
                    return Err(Error::invalid(
                        "noncommutative map",
                        format!("element {u} appears twice"),
                    ));
                }
            }
        }
        if let Some(u) = (1..=source).find(|&u| !seen[u]) {
            return Err(Error::invalid(
                "noncommutative map",
                format!("element {u} lies in no fiber"),
            ));
        }
        Ok(NcMap { source, fibers })
    }

    pub(crate) fn from_fibers_unchecked(source: usize, fibers: Vec<Vec<usize>>) -> Self {
        debug_assert!(NcMap::new(source, fibers.clone()).is_ok());
        NcMap { source, fibers }
    }

    pub fn identity(n: usize) -> Self {
        NcMap {
            source: n,
            fibers: (1..=n).map(|u| vec![u]).collect(),
        }
    }

    /// The unique map out of the empty set.
    pub fn from_empty(m: usize) -> Self {
        NcMap {
            source: 0,
            fibers: vec![Vec::new(); m],
        }
    }

    pub fn source_size(&self) -> usize {
        self.source
    }

    pub fn target_size(&self) -> usize {
        self.fibers.len()
    }

    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    pub fn fiber(&self, j: usize) -> &[usize] {
        &self.fibers[j - 1]
    }

    /// `values()[u-1]` is the target of `u`.
    pub fn values(&self) -> Vec<usize> {
        let mut values = vec![0; self.source];
        for (j, fiber) in self.fibers.iter().enumerate() {
            for &u in fiber {
                values[u - 1] = j + 1;
            }
        }
        values
    }

    /// Position (1-based) of each element within its own fiber.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.source];
        for fiber in &self.fibers {
            for (r, &u) in fiber.iter().enumerate() {
                ranks[u - 1] = r + 1;
            }
        }
        ranks
    }

    /// The underlying set map `|f|`.
    pub fn underlying(&self) -> FinSetMap {
        FinSetMap {
            target: self.target_size(),
            values: self.values(),
        }
    }

    /// Canonical lifting: every fiber in increasing order. For injections this
    /// is the only lifting.
    pub fn lift(map: &FinSetMap) -> NcMap {
        let mut fibers = vec![Vec::new(); map.target_size()];
        for (i, &v) in map.values().iter().enumerate() {
            fibers[v - 1].push(i + 1);
        }
        NcMap {
            source: map.source_size(),
            fibers,
        }
    }

    /// Canonical lifting of the map `u -> values[u - 1]` into `{1..target}`.
    ///
    /// # Panics
    /// If a value lies outside `1..=target`.
    pub fn from_values(target: usize, values: &[usize]) -> NcMap {
        let mut fibers = vec![Vec::new(); target];
        for (i, &v) in values.iter().enumerate() {
            fibers[v - 1].push(i + 1);
        }
        NcMap {
            source: values.len(),
            fibers,
        }
    }

    /// Forget the orderings, i.e. re-sort every fiber.
    pub fn with_sorted_fibers(&self) -> NcMap {
        let mut fibers = self.fibers.clone();
        for fiber in &mut fibers {
            fiber.sort_unstable();
        }
        NcMap {
            source: self.source,
            fibers,
        }
    }

    pub fn has_sorted_fibers(&self) -> bool {
        self.fibers.iter().all(|f| f.windows(2).all(|w| w[0] < w[1]))
    }

    /// `self ∘ other`. The fiber over `i` is the ordered union of `other`'s
    /// fibers over the elements of `self`'s fiber over `i`, in that order.
    pub fn compose(&self, other: &NcMap) -> Result<NcMap> {
        if other.target_size() != self.source {
            return Err(Error::Arity(format!(
                "map with target {} followed by map with source {}",
                other.target_size(),
                self.source
            )));
        }
        let fibers = self
            .fibers
            .iter()
            .map(|fiber| {
                fiber
                    .iter()
                    .flat_map(|&j| other.fibers[j - 1].iter().copied())
                    .collect()
            })
            .collect();
        Ok(NcMap {
            source: other.source,
            fibers,
        })
    }

    /// Monoidal product: `other` placed after `self`, elements and targets shifted.
    pub fn disjoint_union(&self, other: &NcMap) -> NcMap {
        let shift = self.source;
        let mut fibers = self.fibers.clone();
        fibers.extend(
            other
                .fibers
                .iter()
                .map(|fiber| fiber.iter().map(|&u| u + shift).collect()),
        );
        NcMap {
            source: self.source + other.source,
            fibers,
        }
    }

    /// `[σ] : n -> 1`, the single fiber ordered `σ(1) < σ(2) < ... < σ(n)`.
    pub fn fold(sigma: &Permutation) -> NcMap {
        NcMap {
            source: sigma.len(),
            fibers: vec![sigma.images().to_vec()],
        }
    }

    /// Relabel the source along a bijection: element `u` becomes `relabel[u-1]`.
    pub fn relabel_source(&self, relabel: &[usize]) -> NcMap {
        NcMap {
            source: self.source,
            fibers: self
                .fibers
                .iter()
                .map(|fiber| fiber.iter().map(|&u| relabel[u - 1]).collect())
                .collect(),
        }
    }

    pub fn is_surjection(&self) -> bool {
        self.fibers.iter().all(|f| !f.is_empty())
    }

    /// A surjection `n -> m` with `n - m <= 1`.
    pub fn is_elementary_surjection(&self) -> bool {
        self.is_surjection() && self.source <= self.target_size() + 1
    }

    pub fn is_injective(&self) -> bool {
        self.fibers.iter().all(|f| f.len() <= 1)
    }
}

/// `compose_nc(g, f) = g ∘ f`.
pub fn compose_nc(g: &NcMap, f: &NcMap) -> Result<NcMap> {
    g.compose(f)
}

pub fn lift_set_map(f: &FinSetMap) -> NcMap {
    NcMap::lift(f)
}

pub fn disjoint_union_nc(f: &NcMap, g: &NcMap) -> NcMap {
    f.disjoint_union(g)
}

pub fn perm_to_fold(sigma: &Permutation) -> NcMap {
    NcMap::fold(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nc(n: usize, fibers: &[&[usize]]) -> NcMap {
        NcMap::new(n, fibers.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    #[test]
    fn ordered_union_composition() {
        let f = nc(4, &[&[3], &[], &[2, 4, 1]]);
        let g = nc(3, &[&[3, 1, 2]]);
        assert_eq!(g.compose(&f).unwrap(), nc(4, &[&[2, 4, 1, 3]]));
    }

    #[test]
    fn identity_is_neutral() {
        let f = nc(4, &[&[3], &[], &[2, 4, 1]]);
        assert_eq!(NcMap::identity(3).compose(&f).unwrap(), f);
        assert_eq!(f.compose(&NcMap::identity(4)).unwrap(), f);
    }

    #[test]
    fn composition_checks_arity() {
        let f = nc(2, &[&[1, 2]]);
        assert!(matches!(f.compose(&f), Err(Error::Arity(_))));
    }

    #[test]
    fn block_fold_composes_to_identity_fold() {
        // f^{-1}(j) = [1+(j-1)m, ..., jm] followed by [id_n] gives [id_nm].
        let (n, m) = (3, 2);
        let blocks: Vec<Vec<usize>> = (1..=n)
            .map(|j| ((j - 1) * m + 1..=j * m).collect())
            .collect();
        let f = NcMap::new(n * m, blocks).unwrap();
        let folded = NcMap::fold(&Permutation::identity(n)).compose(&f).unwrap();
        assert_eq!(folded, NcMap::fold(&Permutation::identity(n * m)));
    }

    #[test]
    fn lifting() {
        assert_eq!(NcMap::lift(&FinSetMap::identity(3)), NcMap::identity(3));
        let inj = FinSetMap::new(3, vec![3, 1]).unwrap();
        assert_eq!(NcMap::lift(&inj), nc(2, &[&[2], &[], &[1]]));
        let constant = FinSetMap::new(1, vec![1, 1, 1]).unwrap();
        assert_eq!(NcMap::lift(&constant), nc(3, &[&[1, 2, 3]]));
    }

    #[test]
    fn disjoint_union_blocks() {
        let id1 = NcMap::identity(1);
        assert_eq!(id1.disjoint_union(&id1), NcMap::identity(2));
        let f = nc(2, &[&[2, 1]]);
        assert_eq!(f.disjoint_union(&NcMap::from_empty(0)), f);
        assert_eq!(f.disjoint_union(&id1), nc(3, &[&[2, 1], &[3]]));
    }

    #[test]
    fn folds() {
        let s = |v: &[usize]| Permutation::new(v.to_vec()).unwrap();
        assert_eq!(NcMap::fold(&Permutation::identity(3)), nc(3, &[&[1, 2, 3]]));
        assert_eq!(NcMap::fold(&s(&[2, 1])), nc(2, &[&[2, 1]]));
        assert_eq!(NcMap::fold(&s(&[3, 1, 2])), nc(3, &[&[3, 1, 2]]));
    }

    #[test]
    fn surjections() {
        assert!(NcMap::identity(3).is_surjection());
        assert!(NcMap::identity(3).is_elementary_surjection());
        assert!(!nc(4, &[&[3], &[], &[2, 4, 1]]).is_surjection());
        let e = nc(3, &[&[1], &[3, 2]]);
        assert!(e.is_surjection() && e.is_elementary_surjection());
        assert!(!nc(3, &[&[1, 2, 3]]).is_elementary_surjection());
    }

    #[test]
    fn rejects_malformed_maps() {
        assert!(NcMap::new(2, vec![vec![1, 1], vec![2]]).is_err());
        assert!(NcMap::new(2, vec![vec![1]]).is_err());
        assert!(NcMap::new(1, vec![vec![2]]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(FinSetMap::new(2, vec![3]).is_err());
    }

    #[test]
    fn json_wire_format() {
        let f = nc(4, &[&[3], &[], &[2, 4, 1]]);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"n":4,"m":3,"fibers":[[3],[],[2,4,1]]}"#);
        assert_eq!(serde_json::from_str::<NcMap>(&text).unwrap(), f);
        assert!(serde_json::from_str::<NcMap>(r#"{"n":2,"m":1,"fibers":[[1]]}"#).is_err());
        let p: Permutation = serde_json::from_str(r#"{"images":[2,1]}"#).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"images":[2,1]}"#);
    }

    #[test]
    fn permutation_algebra() {
        let s: Permutation = "2 3 1".parse().unwrap();
        assert_eq!(s.compose(&s.inverse()).unwrap(), Permutation::identity(3));
        assert_eq!(s.to_string(), "2 3 1");
        let t: Permutation = "2 1".parse().unwrap();
        assert_eq!(t.disjoint_union(&s).images(), &[2, 1, 4, 5, 3]);
    }
}
