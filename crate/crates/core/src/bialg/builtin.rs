//! Concrete bialgebras used as test subjects: group algebras, their duals,
//! the four-dimensional Sweedler algebra and an algebra-coalgebra whose
//! counit is not multiplicative.

use crate::enumerate::permutations;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::structure::{Bialgebra, BialgebraData};

/// A finite group given by its Cayley table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    /// `table[g][h] = g h`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FiniteGroup {
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        let bad = |reason: &str| Error::invalid("Cayley table", reason.to_string());
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("not a square table on 0..order"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| bad("no identity"))?;
        for g in 0..n {
            if !(0..n).any(|h| table[g][h] == identity) {
                return Err(bad("an element has no inverse"));
            }
            for h in 0..n {
                for k in 0..n {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            table,
            identity,
        })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect();
        FiniteGroup::from_table(&format!("C{n}"), table).expect("cyclic group")
    }

    /// The symmetric group on three letters, elements listed in lexicographic
    /// order of one-line notation, multiplied by composition `g ∘ h`.
    pub fn s3() -> FiniteGroup {
        let perms = permutations(3);
        let table = perms
            .iter()
            .map(|g| {
                perms
                    .iter()
                    .map(|h| {
                        let gh = g.compose(h).expect("same size");
                        perms.iter().position(|p| *p == gh).expect("closed")
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table("S3", table).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order())
            .find(|&h| self.table[g][h] == self.identity)
            .expect("validated group")
    }
}

fn zeros3(d: usize) -> Vec<Vec<Vec<Scalar>>> {
    vec![vec![vec![Scalar::zero(); d]; d]; d]
}

fn zeros2(d: usize) -> Vec<Vec<Scalar>> {
    vec![vec![Scalar::zero(); d]; d]
}

/// `k[G]`: basis the group elements, `Delta(g) = g ⊗ g`, `S(g) = g^{-1}`.
pub fn group_algebra(g: &FiniteGroup) -> Bialgebra {
    let d = g.order();
    let mut mult = zeros3(d);
    let mut comult = zeros3(d);
    let mut antipode = zeros2(d);
    for a in 0..d {
        for b in 0..d {
            mult[a][b][g.mul(a, b)] = Scalar::one();
        }
        comult[a][a][a] = Scalar::one();
        antipode[g.inverse(a)][a] = Scalar::one();
    }
    let mut unit = vec![Scalar::zero(); d];
    unit[g.identity] = Scalar::one();
    Bialgebra::new(BialgebraData {
        name: format!("k[{}]", g.name),
        dim: d,
        unit,
        counit: vec![Scalar::one(); d],
        mult,
        comult,
        antipode: Some(antipode),
    })
    .expect("well-shaped")
}

/// `k[G]^*`: basis the delta functions `delta_g`, with pointwise product
/// and `Delta(delta_g) = sum over hk = g of delta_h ⊗ delta_k`.
pub fn dual_group_algebra(g: &FiniteGroup) -> Bialgebra {
    let d = g.order();
    let mut mult = zeros3(d);
    let mut comult = zeros3(d);
    let mut antipode = zeros2(d);
    for a in 0..d {
        mult[a][a][a] = Scalar::one();
        for h in 0..d {
            for k in 0..d {
                if g.mul(h, k) == a {
                    comult[a][h][k] = Scalar::one();
                }
            }
        }
        antipode[g.inverse(a)][a] = Scalar::one();
    }
    let mut counit = vec![Scalar::zero(); d];
    counit[g.identity] = Scalar::one();
    Bialgebra::new(BialgebraData {
        name: format!("k[{}]^*", g.name),
        dim: d,
        unit: vec![Scalar::one(); d],
        counit,
        mult,
        comult,
        antipode: Some(antipode),
    })
    .expect("well-shaped")
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `Delta(g) = g ⊗ g`,
/// `Delta(x) = x ⊗ 1 + g ⊗ x`, `S(x) = -gx`.
///
/// Over a field of characteristic 2 it would be commutative; the rationals
/// keep it genuinely noncommutative and noncocommutative.
pub fn sweedler4() -> Bialgebra {
    // basis index = a + 2b for the monomial g^a x^b
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mult = zeros3(4);
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (c, e) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if b + e < 2 {
                // x^b g^c = (-1)^{bc} g^c x^b
                let sign = if b * c == 1 { -1 } else { 1 };
                mult[idx(a, b)][idx(c, e)][idx((a + c) % 2, b + e)] = Scalar::from_int(sign);
            }
        }
    }
    let one = Scalar::one;
    let mut comult = zeros3(4);
    comult[0][0][0] = one();
    comult[1][1][1] = one();
    comult[2][2][0] = one();
    comult[2][1][2] = one();
    comult[3][3][1] = one();
    comult[3][0][3] = one();
    let mut antipode = zeros2(4);
    antipode[0][0] = one();
    antipode[1][1] = one();
    antipode[3][2] = Scalar::from_int(-1);
    antipode[2][3] = one();
    Bialgebra::new(BialgebraData {
        name: "sweedler4".into(),
        dim: 4,
        unit: vec![one(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
        counit: vec![one(), one(), Scalar::zero(), Scalar::zero()],
        mult,
        comult,
        antipode: Some(antipode),
    })
    .expect("well-shaped")
}

/// `span{1, x}` with `x^2 = 0`, `Delta(x) = x ⊗ x`, `epsilon(x) = 1`: an
/// algebra and a coalgebra with multiplicative `Delta` whose counit fails to
/// be multiplicative.
pub fn nonbialg_counterexample() -> Bialgebra {
    let one = Scalar::one;
    let mut mult = zeros3(2);
    mult[0][0][0] = one();
    mult[0][1][1] = one();
    mult[1][0][1] = one();
    let mut comult = zeros3(2);
    comult[0][0][0] = one();
    comult[1][1][1] = one();
    Bialgebra::new(BialgebraData {
        name: "nonbialg_counterexample".into(),
        dim: 2,
        unit: vec![one(), Scalar::zero()],
        counit: vec![one(), one()],
        mult,
        comult,
        antipode: None,
    })
    .expect("well-shaped")
}

/// Names accepted by [`builtin`], in a fixed order.
pub const BUILTIN_NAMES: [&str; 8] = [
    "c2",
    "c3",
    "s3",
    "c2dual",
    "c3dual",
    "s3dual",
    "sweedler",
    "nonbialg",
];

pub fn builtin(name: &str) -> Result<Bialgebra> {
    let key = name.to_ascii_lowercase();
    Ok(match key.as_str() {
        "c2" | "group_algebra(c2)" => group_algebra(&FiniteGroup::cyclic(2)),
        "c3" | "group_algebra(c3)" => group_algebra(&FiniteGroup::cyclic(3)),
        "s3" | "group_algebra(s3)" => group_algebra(&FiniteGroup::s3()),
        "c2dual" | "dual_group_algebra(c2)" => dual_group_algebra(&FiniteGroup::cyclic(2)),
        "c3dual" | "dual_group_algebra(c3)" => dual_group_algebra(&FiniteGroup::cyclic(3)),
        "s3dual" | "dual_group_algebra(s3)" => dual_group_algebra(&FiniteGroup::s3()),
        "sweedler" | "sweedler4" => sweedler4(),
        "nonbialg" | "nonbialg_counterexample" => nonbialg_counterexample(),
        _ => return Err(Error::UnknownAlgebra(name.to_string())),
    })
}
