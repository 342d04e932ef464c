//! Exhaustive enumeration of small morphisms, used by the verification
//! suites and tests.

use itertools::Itertools;

use crate::ncset::{FinSetMap, NcMap, Permutation};

/// All permutations of `{1..n}` in lexicographic order (identity first).
pub fn permutations(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(|p| Permutation::new(p).expect("itertools yields bijections"))
        .collect()
}

/// Lexicographic rank of a permutation among [`permutations`] of its size.
pub fn perm_rank(p: &Permutation) -> usize {
    let n = p.len();
    let mut rank = 0;
    let mut remaining: Vec<usize> = (1..=n).collect();
    for (i, &v) in p.images().iter().enumerate() {
        let pos = remaining.iter().position(|&r| r == v).expect("bijection");
        rank += pos * factorial(n - 1 - i);
        remaining.remove(pos);
    }
    rank
}

/// Inverse of [`perm_rank`].
pub fn perm_unrank(n: usize, mut rank: usize) -> Permutation {
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        images.push(remaining.remove(rank / f));
        rank %= f;
    }
    Permutation::new(images).expect("unrank yields a bijection")
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All set maps `n -> m`.
pub fn set_maps(n: usize, m: usize) -> Vec<FinSetMap> {
    if n == 0 {
        return vec![FinSetMap::new(m, Vec::new()).unwrap()];
    }
    if m == 0 {
        return Vec::new();
    }
    (0..n)
        .map(|_| 1..=m)
        .multi_cartesian_product()
        .map(|values| FinSetMap::new(m, values).unwrap())
        .collect()
}

pub fn injections(n: usize, m: usize) -> Vec<FinSetMap> {
    set_maps(n, m)
        .into_iter()
        .filter(FinSetMap::is_injective)
        .collect()
}

/// Every ordering of every fiber of `map`.
pub fn liftings(map: &FinSetMap) -> Vec<NcMap> {
    let base = NcMap::lift(map);
    let per_fiber: Vec<Vec<Vec<usize>>> = base
        .fibers()
        .iter()
        .map(|fiber| fiber.iter().copied().permutations(fiber.len()).collect())
        .collect();
    if per_fiber.is_empty() {
        return vec![base];
    }
    per_fiber
        .into_iter()
        .multi_cartesian_product()
        .map(|fibers| NcMap::from_fibers_unchecked(map.source_size(), fibers))
        .collect()
}

/// All noncommutative maps `n -> m`.
pub fn nc_maps(n: usize, m: usize) -> Vec<NcMap> {
    set_maps(n, m).iter().flat_map(liftings).collect()
}

/// Noncommutative maps with canonical (increasing) fibers only.
pub fn plain_maps(n: usize, m: usize) -> Vec<NcMap> {
    set_maps(n, m).iter().map(NcMap::lift).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(set_maps(3, 2).len(), 8);
        assert_eq!(set_maps(0, 0).len(), 1);
        assert_eq!(set_maps(2, 0).len(), 0);
        // rising factorial m(m+1)...(m+n-1)
        assert_eq!(nc_maps(3, 3).len(), 3 * 4 * 5);
        assert_eq!(nc_maps(4, 2).len(), 2 * 3 * 4 * 5);
        assert_eq!(injections(2, 4).len(), 12);
    }

    #[test]
    fn rank_round_trip() {
        for n in 0..=5 {
            for (i, p) in permutations(n).iter().enumerate() {
                assert_eq!(perm_rank(p), i);
                assert_eq!(&perm_unrank(n, i), p);
            }
        }
    }
}
