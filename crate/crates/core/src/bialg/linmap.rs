use std::fmt;

use rayon::prelude::*;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::tensor::{add_scaled, basis, digits, kron, power, SparseVec};

/// Largest number of columns a [`LinMap`] will materialize.
const MAX_COLUMNS: u64 = 1 << 24;

/// An exact linear map `H^{⊗dom} -> H^{⊗cod}` for a `dim`-dimensional `H`,
/// stored column by column.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    dim: usize,
    dom: usize,
    cod: usize,
    cols: Vec<SparseVec>,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap(dim {}, {} -> {})", self.dim, self.dom, self.cod)?;
        for (j, col) in self.cols.iter().enumerate() {
            if !col.is_empty() {
                writeln!(f, "  col {j}: {col:?}")?;
            }
        }
        Ok(())
    }
}

fn checked_size(dim: usize, n: usize) -> Result<u64> {
    match power(dim, n) {
        Some(s) => Ok(s),
        None => Err(Error::Precondition(format!(
            "tensor power {n} of a {dim}-dimensional space is too large"
        ))),
    }
}

impl LinMap {
    /// Build from the images of the basis tensors, computed in parallel.
    pub fn from_fn<F>(dim: usize, dom: usize, cod: usize, image: F) -> Result<LinMap>
    where
        F: Fn(&[usize]) -> SparseVec + Sync,
    {
        let ncols = checked_size(dim, dom)?;
        checked_size(dim, cod)?;
        if ncols > MAX_COLUMNS {
            return Err(Error::Precondition(format!(
                "refusing to materialize {ncols} columns"
            )));
        }
        let cols = (0..ncols)
            .into_par_iter()
            .map(|j| image(&digits(j, dim, dom)))
            .collect();
        Ok(LinMap {
            dim,
            dom,
            cod,
            cols,
        })
    }

    pub fn from_columns(dim: usize, dom: usize, cod: usize, cols: Vec<SparseVec>) -> Result<LinMap> {
        let nrows = checked_size(dim, cod)?;
        if cols.len() as u64 != checked_size(dim, dom)? {
            return Err(Error::invalid("linear map", "wrong number of columns"));
        }
        if cols
            .iter()
            .any(|c| c.iter().any(|(&k, x)| k >= nrows || x.is_zero()))
        {
            return Err(Error::invalid("linear map", "row index out of range or explicit zero"));
        }
        Ok(LinMap {
            dim,
            dom,
            cod,
            cols,
        })
    }

    /// A `rows × cols` dense matrix, rows indexed by `H^{⊗cod}`.
    pub fn from_dense(dim: usize, dom: usize, cod: usize, rows: &[Vec<Scalar>]) -> Result<LinMap> {
        let nrows = checked_size(dim, cod)? as usize;
        let ncols = checked_size(dim, dom)? as usize;
        if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::invalid("linear map", "dense matrix has the wrong shape"));
        }
        let mut cols = vec![SparseVec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    cols[j].insert(i as u64, x.clone());
                }
            }
        }
        Ok(LinMap {
            dim,
            dom,
            cod,
            cols,
        })
    }

    pub fn identity(dim: usize, n: usize) -> LinMap {
        let size = power(dim, n).expect("identity on a representable power");
        LinMap {
            dim,
            dom: n,
            cod: n,
            cols: (0..size).map(basis).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn nrows(&self) -> u64 {
        power(self.dim, self.cod).expect("checked at construction")
    }

    pub fn ncols(&self) -> u64 {
        self.cols.len() as u64
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn entry(&self, i: u64, j: usize) -> Scalar {
        self.cols[j].get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, c) in v {
            add_scaled(&mut out, &self.cols[j as usize], c);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> Result<LinMap> {
        if self.dim != other.dim || self.dom != other.cod {
            return Err(Error::Arity(format!(
                "linear map from power {} after one into power {}",
                self.dom, other.cod
            )));
        }
        let cols = other.cols.par_iter().map(|c| self.apply(c)).collect();
        Ok(LinMap {
            dim: self.dim,
            dom: other.dom,
            cod: self.cod,
            cols,
        })
    }

    /// `self ⊗ other`, with `self` acting on the first factors.
    pub fn tensor(&self, other: &LinMap) -> Result<LinMap> {
        if self.dim != other.dim {
            return Err(Error::Arity("tensor of maps over different spaces".into()));
        }
        let right = other.ncols() as usize;
        let right_rows = other.nrows();
        LinMap::from_fn(self.dim, self.dom + other.dom, self.cod + other.cod, |d| {
            let key = super::tensor::encode(d, self.dim) as usize;
            kron(&self.cols[key / right], &other.cols[key % right], right_rows)
        })
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.cols.iter().enumerate().all(|(j, c)| *c == basis(j as u64))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.cols.len()]; self.nrows() as usize];
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, x) in col {
                rows[i as usize][j] = x.clone();
            }
        }
        rows
    }

    /// Row-major nested arrays of rational strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.to_dense()
                .into_iter()
                .map(|row| Value::Array(row.into_iter().map(|x| Value::String(x.to_string())).collect()))
                .collect(),
        )
    }

    /// Row-major comma-separated values, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.to_dense() {
            let line: Vec<String> = row.iter().map(Scalar::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> LinMap {
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        LinMap::from_dense(2, 1, 1, &rows).unwrap()
    }

    #[test]
    fn composition_is_matrix_product() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.compose(&b).unwrap(), m(&[&[2, 1], &[1, 0]]));
        assert!(LinMap::identity(2, 1).compose(&a).unwrap() == a);
    }

    #[test]
    fn tensor_is_kronecker_product() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let ab = a.tensor(&b).unwrap();
        assert_eq!(ab.entry(0, 3), Scalar::from_int(2));
        assert_eq!(ab.entry(1, 2), Scalar::from_int(2));
        assert_eq!(ab.entry(3, 2), Scalar::from_int(1));
        assert_eq!(ab.entry(0, 0), Scalar::zero());
        assert_eq!(ab.to_csv(), "0,1,0,2\n1,0,2,0\n0,0,0,1\n0,0,1,0\n");
    }

    #[test]
    fn json_uses_rational_strings() {
        let rows = vec![vec![Scalar::ratio(1, 2)]];
        let x = LinMap::from_dense(1, 0, 0, &rows).unwrap();
        assert_eq!(x.to_json().to_string(), r#"[["1/2"]]"#);
    }
}
