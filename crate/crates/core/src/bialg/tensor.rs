//! Sparse vectors in tensor powers `H^{⊗n}` of a `d`-dimensional space.
//!
//! A basis tensor `e_{a_1} ⊗ ... ⊗ e_{a_n}` (0-based `a_k`) has index
//! `a_1 d^{n-1} + ... + a_n`: the first tensor factor is the most significant
//! digit. Zero coefficients are never stored.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

pub type SparseVec = BTreeMap<u64, Scalar>;

pub(crate) fn add_term(v: &mut SparseVec, key: u64, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match v.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub(crate) fn add_scaled(v: &mut SparseVec, w: &SparseVec, c: &Scalar) {
    for (&k, x) in w {
        add_term(v, k, x * c);
    }
}

pub(crate) fn basis(key: u64) -> SparseVec {
    SparseVec::from([(key, Scalar::one())])
}

pub(crate) fn scalar_vec(c: Scalar) -> SparseVec {
    let mut v = SparseVec::new();
    add_term(&mut v, 0, c);
    v
}

/// `d^n`, or `None` on overflow.
pub(crate) fn power(d: usize, n: usize) -> Option<u64> {
    (d as u64).checked_pow(n as u32)
}

/// Digits `a_1, ..., a_n` of a basis index.
pub(crate) fn digits(mut key: u64, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = (key % d as u64) as usize;
        key /= d as u64;
    }
    out
}

pub(crate) fn encode(digits: &[usize], d: usize) -> u64 {
    digits.iter().fold(0, |acc, &a| acc * d as u64 + a as u64)
}

/// `x ⊗ y` where `y` lives in a tensor power of dimension `y_size`.
pub(crate) fn kron(x: &SparseVec, y: &SparseVec, y_size: u64) -> SparseVec {
    let mut out = SparseVec::new();
    for (&i, a) in x {
        for (&j, b) in y {
            out.insert(i * y_size + j, a * b);
        }
    }
    out
}

/// Cartesian combination of independent parts: each part lists
/// `(index contribution, coefficient)` pairs; contributions from different
/// parts are added and coefficients multiplied.
pub(crate) fn combine(parts: &[Vec<(u64, Scalar)>]) -> SparseVec {
    let mut acc: Vec<(u64, Scalar)> = vec![(0, Scalar::one())];
    for part in parts {
        let mut next = Vec::with_capacity(acc.len() * part.len());
        for (k, c) in &acc {
            for (k2, c2) in part {
                next.push((k + k2, c * c2));
            }
        }
        acc = next;
    }
    let mut out = SparseVec::new();
    for (k, c) in acc {
        add_term(&mut out, k, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_factor_is_most_significant() {
        assert_eq!(encode(&[1, 0, 2], 3), 9 + 2);
        assert_eq!(digits(11, 3, 3), vec![1, 0, 2]);
        assert_eq!(digits(0, 4, 0), Vec::<usize>::new());
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut v = basis(3);
        add_term(&mut v, 3, Scalar::from_int(-1));
        assert!(v.is_empty());
        assert!(scalar_vec(Scalar::zero()).is_empty());
    }

    #[test]
    fn kron_and_combine_agree() {
        let x = SparseVec::from([(0, Scalar::from_int(2)), (1, Scalar::one())]);
        let y = SparseVec::from([(1, Scalar::from_int(3))]);
        let via_kron = kron(&x, &y, 2);
        let parts = vec![
            x.iter().map(|(&k, c)| (k * 2, c.clone())).collect(),
            y.iter().map(|(&k, c)| (k, c.clone())).collect(),
        ];
        assert_eq!(combine(&parts), via_kron);
    }
}
