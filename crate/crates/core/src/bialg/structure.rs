use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::tensor::{add_scaled, add_term, basis, digits, kron, SparseVec};

/// Which of the structure axioms a [`Bialgebra`] satisfies. Every flag is
/// computed from the structure constants, never asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub associative: bool,
    pub unital: bool,
    pub coassociative: bool,
    pub counital: bool,
    pub comult_multiplicative: bool,
    pub counit_multiplicative: bool,
    pub comult_of_unit: bool,
    pub counit_of_unit: bool,
    /// `None` when no antipode is given.
    pub antipode: Option<bool>,
    pub commutative: bool,
    pub cocommutative: bool,
}

impl AxiomReport {
    pub fn is_algebra(&self) -> bool {
        self.associative && self.unital
    }

    pub fn is_coalgebra(&self) -> bool {
        self.coassociative && self.counital
    }

    /// `Delta` and `epsilon` are algebra maps.
    pub fn is_compatible(&self) -> bool {
        self.comult_multiplicative
            && self.counit_multiplicative
            && self.comult_of_unit
            && self.counit_of_unit
    }

    pub fn is_bialgebra(&self) -> bool {
        self.is_algebra() && self.is_coalgebra() && self.is_compatible()
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode == Some(true)
    }

    /// `(name, value)` pairs in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, Option<bool>)> {
        vec![
            ("associative", Some(self.associative)),
            ("unital", Some(self.unital)),
            ("coassociative", Some(self.coassociative)),
            ("counital", Some(self.counital)),
            ("comult_multiplicative", Some(self.comult_multiplicative)),
            ("counit_multiplicative", Some(self.counit_multiplicative)),
            ("comult_of_unit", Some(self.comult_of_unit)),
            ("counit_of_unit", Some(self.counit_of_unit)),
            ("antipode", self.antipode),
            ("commutative", Some(self.commutative)),
            ("cocommutative", Some(self.cocommutative)),
        ]
    }
}

/// A finite-dimensional algebra and coalgebra on the same space, given by
/// structure constants over the rationals.
///
/// * `mult[a][b][c]`: coefficient of `e_c` in `e_a e_b`;
/// * `comult[c][a][b]`: coefficient of `e_a ⊗ e_b` in `Delta(e_c)`;
/// * `antipode[i][j]`: coefficient of `e_i` in `S(e_j)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "BialgebraData", into = "BialgebraData")]
pub struct Bialgebra {
    data: BialgebraData,
    products: Vec<SparseVec>,
    coproducts: Vec<SparseVec>,
    unit_vec: SparseVec,
    antipode_cols: Option<Vec<SparseVec>>,
    report: AxiomReport,
}

/// The JSON wire format of a [`Bialgebra`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraData {
    #[serde(default)]
    pub name: String,
    pub dim: usize,
    pub unit: Vec<Scalar>,
    pub counit: Vec<Scalar>,
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub comult: Vec<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<Scalar>>>,
}

impl TryFrom<BialgebraData> for Bialgebra {
    type Error = Error;
    fn try_from(data: BialgebraData) -> Result<Self> {
        Bialgebra::new(data)
    }
}

impl From<Bialgebra> for BialgebraData {
    fn from(b: Bialgebra) -> Self {
        b.data
    }
}

fn cube_ok(t: &[Vec<Vec<Scalar>>], d: usize) -> bool {
    t.len() == d && t.iter().all(|m| m.len() == d && m.iter().all(|r| r.len() == d))
}

impl Bialgebra {
    pub fn new(data: BialgebraData) -> Result<Bialgebra> {
        let d = data.dim;
        let shape = |what: &str| Error::invalid("structure constants", format!("{what} has the wrong shape"));
        if data.unit.len() != d {
            return Err(shape("unit"));
        }
        if data.counit.len() != d {
            return Err(shape("counit"));
        }
        if !cube_ok(&data.mult, d) {
            return Err(shape("mult"));
        }
        if !cube_ok(&data.comult, d) {
            return Err(shape("comult"));
        }
        if let Some(s) = &data.antipode {
            if s.len() != d || s.iter().any(|r| r.len() != d) {
                return Err(shape("antipode"));
            }
        }
        let to_sparse = |row: &[Scalar]| -> SparseVec {
            let mut v = SparseVec::new();
            for (i, x) in row.iter().enumerate() {
                add_term(&mut v, i as u64, x.clone());
            }
            v
        };
        let products = (0..d * d).map(|ab| to_sparse(&data.mult[ab / d][ab % d])).collect();
        let coproducts = (0..d)
            .map(|c| {
                let mut v = SparseVec::new();
                for a in 0..d {
                    for b in 0..d {
                        add_term(&mut v, (a * d + b) as u64, data.comult[c][a][b].clone());
                    }
                }
                v
            })
            .collect();
        let unit_vec = to_sparse(&data.unit);
        let antipode_cols = data.antipode.as_ref().map(|s| {
            (0..d)
                .map(|j| {
                    let col: Vec<Scalar> = (0..d).map(|i| s[i][j].clone()).collect();
                    to_sparse(&col)
                })
                .collect()
        });
        let mut b = Bialgebra {
            data,
            products,
            coproducts,
            unit_vec,
            antipode_cols,
            report: AxiomReport {
                associative: false,
                unital: false,
                coassociative: false,
                counital: false,
                comult_multiplicative: false,
                counit_multiplicative: false,
                comult_of_unit: false,
                counit_of_unit: false,
                antipode: None,
                commutative: false,
                cocommutative: false,
            },
        };
        b.report = b.compute_report();
        Ok(b)
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn data(&self) -> &BialgebraData {
        &self.data
    }

    pub fn report(&self) -> &AxiomReport {
        &self.report
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit_vec
    }

    pub fn counit(&self, a: usize) -> &Scalar {
        &self.data.counit[a]
    }

    /// `e_a e_b`.
    pub fn product(&self, a: usize, b: usize) -> &SparseVec {
        &self.products[a * self.dim() + b]
    }

    /// `Delta(e_c)` in `H ⊗ H`.
    pub fn coproduct(&self, c: usize) -> &SparseVec {
        &self.coproducts[c]
    }

    /// `S(e_j)`, if an antipode is present.
    pub fn antipode(&self, j: usize) -> Option<&SparseVec> {
        self.antipode_cols.as_ref().map(|cols| &cols[j])
    }

    pub fn has_antipode_data(&self) -> bool {
        self.antipode_cols.is_some()
    }

    /// `x y` for vectors of `H`.
    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&a, ca) in x {
            for (&b, cb) in y {
                add_scaled(&mut out, self.product(a as usize, b as usize), &(ca * cb));
            }
        }
        out
    }

    /// `Delta(x)`.
    pub fn comul(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&c, cc) in x {
            add_scaled(&mut out, self.coproduct(c as usize), cc);
        }
        out
    }

    pub fn eps(&self, x: &SparseVec) -> Scalar {
        x.iter().map(|(&a, c)| c * &self.data.counit[a as usize]).sum()
    }

    /// Apply a linear map `H -> H^{⊗out}` to factor `pos` (0-based) of a
    /// vector in `H^{⊗n}`.
    pub(crate) fn map_factor<F>(&self, v: &SparseVec, n: usize, pos: usize, out: usize, image: F) -> SparseVec
    where
        F: Fn(usize) -> SparseVec,
    {
        let d = self.dim() as u64;
        let tail = d.pow((n - pos - 1) as u32);
        let out_size = d.pow(out as u32);
        let mut result = SparseVec::new();
        for (&k, c) in v {
            let head = k / (tail * d);
            let a = ((k / tail) % d) as usize;
            let rest = k % tail;
            for (&img, ci) in &image(a) {
                add_term(&mut result, (head * out_size + img) * tail + rest, c * ci);
            }
        }
        result
    }

    /// Factorwise product in `H^{⊗n}`.
    pub(crate) fn mul_tensor(&self, x: &SparseVec, y: &SparseVec, n: usize) -> SparseVec {
        let d = self.dim();
        let size = d as u64;
        let mut out = SparseVec::new();
        for (&i, ci) in x {
            let di = digits(i, d, n);
            for (&j, cj) in y {
                let dj = digits(j, d, n);
                let mut acc = super::tensor::scalar_vec(ci * cj);
                for k in 0..n {
                    acc = kron(&acc, self.product(di[k], dj[k]), size);
                }
                add_scaled(&mut out, &acc, &Scalar::one());
            }
        }
        out
    }

    fn compute_report(&self) -> AxiomReport {
        let d = self.dim();
        let e = |a: usize| basis(a as u64);
        let swap = |v: &SparseVec| -> SparseVec {
            v.iter()
                .map(|(&k, c)| ((k % d as u64) * d as u64 + k / d as u64, c.clone()))
                .collect()
        };

        let associative = (0..d).all(|a| {
            (0..d).all(|b| {
                (0..d).all(|c| self.mul(self.product(a, b), &e(c)) == self.mul(&e(a), self.product(b, c)))
            })
        });
        let unital = (0..d).all(|a| self.mul(&self.unit_vec, &e(a)) == e(a) && self.mul(&e(a), &self.unit_vec) == e(a));
        let coassociative = (0..d).all(|c| {
            let delta = self.coproduct(c);
            self.map_factor(delta, 2, 0, 2, |a| self.coproduct(a).clone())
                == self.map_factor(delta, 2, 1, 2, |a| self.coproduct(a).clone())
        });
        let eps_vec = |a: usize| super::tensor::scalar_vec(self.data.counit[a].clone());
        let counital = (0..d).all(|c| {
            let delta = self.coproduct(c);
            self.map_factor(delta, 2, 0, 0, eps_vec) == e(c) && self.map_factor(delta, 2, 1, 0, eps_vec) == e(c)
        });
        let comult_multiplicative = (0..d).all(|a| {
            (0..d).all(|b| {
                self.comul(self.product(a, b)) == self.mul_tensor(self.coproduct(a), self.coproduct(b), 2)
            })
        });
        let counit_multiplicative = (0..d).all(|a| {
            (0..d).all(|b| self.eps(self.product(a, b)) == &self.data.counit[a] * &self.data.counit[b])
        });
        let comult_of_unit = self.comul(&self.unit_vec) == kron(&self.unit_vec, &self.unit_vec, d as u64);
        let counit_of_unit = self.eps(&self.unit_vec).is_one();
        let antipode = self.antipode_cols.as_ref().map(|s| {
            (0..d).all(|c| {
                let delta = self.coproduct(c);
                let expected = {
                    let mut v = SparseVec::new();
                    add_scaled(&mut v, &self.unit_vec, &self.data.counit[c]);
                    v
                };
                let left = self.map_factor(delta, 2, 0, 1, |a| s[a].clone());
                let right = self.map_factor(delta, 2, 1, 1, |a| s[a].clone());
                self.mul_pairs(&left) == expected && self.mul_pairs(&right) == expected
            })
        });
        let commutative = (0..d).all(|a| (0..d).all(|b| self.product(a, b) == self.product(b, a)));
        let cocommutative = (0..d).all(|c| swap(self.coproduct(c)) == *self.coproduct(c));
        AxiomReport {
            associative,
            unital,
            coassociative,
            counital,
            comult_multiplicative,
            counit_multiplicative,
            comult_of_unit,
            counit_of_unit,
            antipode,
            commutative,
            cocommutative,
        }
    }

    /// `mu: H ⊗ H -> H` applied to a vector.
    pub(crate) fn mul_pairs(&self, v: &SparseVec) -> SparseVec {
        let d = self.dim() as u64;
        let mut out = SparseVec::new();
        for (&k, c) in v {
            add_scaled(&mut out, self.product((k / d) as usize, (k % d) as usize), c);
        }
        out
    }
}
