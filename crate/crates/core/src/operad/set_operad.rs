use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::enumerate::{perm_rank, perm_unrank, permutations};
use crate::error::{Error, Result};
use crate::ncset::Permutation;
use crate::qprop::{block_perm, gamma_perm};

/// `(arity, index)` of an operation.
pub type Op = (usize, usize);

/// A set operad truncated at arity `n_max`: finite sets `P(0), ..., P(n_max)`
/// with `P(0)` a point, a unit in `P(1)`, the composition
/// `gamma(x; y_1, ..., y_n)` whenever the total arity is at most `n_max`,
/// and a right action of the symmetric groups.
///
/// The action and composition satisfy
/// `gamma(x · s; y_1, ..., y_n) = gamma(x; y_{s^{-1}(1)}, ..., y_{s^{-1}(n)}) · block_perm(s, m)`
/// and `gamma(x; y_1 · t_1, ..., y_n · t_n) = gamma(x; y) · (t_1 ⊔ ... ⊔ t_n)`,
/// where `m_i` is the arity of `y_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawOperad", into = "RawOperad")]
pub struct SetOperad {
    name: String,
    elements: Vec<Vec<String>>,
    unit: usize,
    gamma: HashMap<(Op, Vec<Op>), usize>,
    /// `action[n][x][perm_rank(s)] = x · s`
    action: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
struct RawOperad {
    name: String,
    elements: Vec<Vec<String>>,
    unit: usize,
    /// `[n, x, [[m_1, y_1], ...], result]`, sorted.
    gamma: Vec<(usize, usize, Vec<Op>, usize)>,
    action: Vec<Vec<Vec<usize>>>,
}

impl TryFrom<RawOperad> for SetOperad {
    type Error = Error;
    fn try_from(raw: RawOperad) -> Result<Self> {
        let gamma = raw
            .gamma
            .into_iter()
            .map(|(n, x, inner, r)| (((n, x), inner), r))
            .collect();
        let op = SetOperad {
            name: raw.name,
            elements: raw.elements,
            unit: raw.unit,
            gamma,
            action: raw.action,
        };
        op.check_shape()?;
        op.check_axioms()?;
        Ok(op)
    }
}

impl From<SetOperad> for RawOperad {
    fn from(op: SetOperad) -> Self {
        let mut gamma: Vec<_> = op
            .gamma
            .into_iter()
            .map(|(((n, x), inner), r)| (n, x, inner, r))
            .collect();
        gamma.sort();
        RawOperad {
            name: op.name,
            elements: op.elements,
            unit: op.unit,
            gamma,
            action: op.action,
        }
    }
}

/// Every sequence of operations whose arities sum to at most `budget`.
fn inner_tuples(sizes: &[usize], n: usize, budget: usize) -> Vec<Vec<Op>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in 0..=budget {
        for y in 0..sizes[m] {
            for rest in inner_tuples(sizes, n - 1, budget - m) {
                let mut t = vec![(m, y)];
                t.extend(rest);
                out.push(t);
            }
        }
    }
    out
}

impl SetOperad {
    /// Tabulate an operad from its composition and action, then check the
    /// operad axioms on every covered arity.
    pub fn from_fn<G, A>(name: &str, elements: Vec<Vec<String>>, unit: usize, gamma: G, act: A) -> Result<SetOperad>
    where
        G: Fn(Op, &[Op]) -> usize,
        A: Fn(Op, &Permutation) -> usize,
    {
        let n_max = elements.len().checked_sub(1).ok_or_else(|| Error::invalid("operad", "no arities"))?;
        let sizes: Vec<usize> = elements.iter().map(Vec::len).collect();
        let mut table = HashMap::new();
        for n in 0..=n_max {
            for x in 0..sizes[n] {
                for inner in inner_tuples(&sizes, n, n_max) {
                    let r = gamma((n, x), &inner);
                    table.insert(((n, x), inner), r);
                }
            }
        }
        let action = (0..=n_max)
            .map(|n| {
                let perms = permutations(n);
                (0..sizes[n])
                    .map(|x| perms.iter().map(|s| act((n, x), s)).collect())
                    .collect()
            })
            .collect();
        let op = SetOperad {
            name: name.to_string(),
            elements,
            unit,
            gamma: table,
            action,
        };
        op.check_shape()?;
        op.check_axioms()?;
        Ok(op)
    }

    fn check_shape(&self) -> Result<()> {
        let bad = |reason: String| Error::invalid("operad", reason);
        if self.elements.first().map(Vec::len) != Some(1) {
            return Err(bad("P(0) must be a single point".into()));
        }
        if self.elements.get(1).map_or(true, |p1| self.unit >= p1.len()) {
            return Err(bad("the unit must lie in P(1)".into()));
        }
        let sizes = self.sizes();
        for (((n, x), inner), &r) in &self.gamma {
            let total: usize = inner.iter().map(|&(m, _)| m).sum();
            if *n > self.n_max()
                || *x >= sizes[*n]
                || inner.len() != *n
                || inner.iter().any(|&(m, y)| m > self.n_max() || y >= sizes[m])
                || total > self.n_max()
                || r >= sizes[total]
            {
                return Err(bad(format!("composition entry out of range at arity {n}")));
            }
        }
        for n in 0..=self.n_max() {
            for x in 0..sizes[n] {
                for inner in inner_tuples(&sizes, n, self.n_max()) {
                    if !self.gamma.contains_key(&((n, x), inner)) {
                        return Err(bad(format!("composition table incomplete at arity {n}")));
                    }
                }
            }
        }
        if self.action.len() != sizes.len()
            || self.action.iter().zip(&sizes).enumerate().any(|(n, (rows, &size))| {
                rows.len() != size
                    || rows
                        .iter()
                        .any(|row| row.len() != crate::enumerate::factorial(n) || row.iter().any(|&y| y >= size))
            })
        {
            return Err(bad("action table has the wrong shape".into()));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_max(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.elements.iter().map(Vec::len).collect()
    }

    /// `|P(n)|`, zero beyond the truncation.
    pub fn size(&self, n: usize) -> usize {
        self.elements.get(n).map_or(0, Vec::len)
    }

    pub fn label(&self, (n, x): Op) -> &str {
        &self.elements[n][x]
    }

    pub fn unit(&self) -> Op {
        (1, self.unit)
    }

    fn cover(&self, n: usize, what: &str) -> Result<()> {
        if n > self.n_max() {
            Err(Error::NotCovered(format!("{what} in arity {n} of {} (truncated at {})", self.name, self.n_max())))
        } else {
            Ok(())
        }
    }

    /// `gamma(x; y_1, ..., y_n)`.
    pub fn gamma(&self, outer: Op, inner: &[Op]) -> Result<Op> {
        self.cover(outer.0, "composition")?;
        let total = inner.iter().map(|&(m, _)| m).sum();
        self.cover(total, "composition")?;
        if inner.len() != outer.0 {
            return Err(Error::Arity(format!(
                "{} inputs for an operation of arity {}",
                inner.len(),
                outer.0
            )));
        }
        self.gamma
            .get(&(outer, inner.to_vec()))
            .map(|&r| (total, r))
            .ok_or_else(|| Error::invalid("operation", format!("{outer:?} or {inner:?} not in the tables")))
    }

    /// `x · s`.
    pub fn act(&self, (n, x): Op, s: &Permutation) -> Result<Op> {
        self.cover(n, "action")?;
        if s.len() != n {
            return Err(Error::Arity(format!("permutation of {} acting in arity {n}", s.len())));
        }
        Ok((n, self.action[n][x][perm_rank(s)]))
    }

    /// Unit, associativity and equivariance on every covered arity.
    pub fn check_axioms(&self) -> Result<()> {
        let sizes = self.sizes();
        let n_max = self.n_max();
        let fail = |law: &str, n: usize| Err(Error::invalid("operad", format!("{law} fails in arity {n}")));
        let g = |outer: Op, inner: &[Op]| self.gamma[&(outer, inner.to_vec())];
        let e = self.unit();

        for n in 0..=n_max {
            for x in 0..sizes[n] {
                if g(e, &[(n, x)]) != x || g((n, x), &vec![e; n]) != x {
                    return fail("unit law", n);
                }
                for inner in inner_tuples(&sizes, n, n_max) {
                    let middle: usize = inner.iter().map(|&(m, _)| m).sum();
                    let left = (middle, g((n, x), &inner));
                    for outer_inputs in inner_tuples(&sizes, middle, n_max) {
                        let total: usize = outer_inputs.iter().map(|&(l, _)| l).sum();
                        let lhs = g(left, &outer_inputs);
                        let mut start = 0;
                        let grouped: Vec<Op> = inner
                            .iter()
                            .map(|&(m, y)| {
                                let block = &outer_inputs[start..start + m];
                                start += m;
                                let arity = block.iter().map(|&(l, _)| l).sum();
                                (arity, g((m, y), block))
                            })
                            .collect();
                        if lhs != g((n, x), &grouped) {
                            return fail("associativity", total);
                        }
                    }
                    let total = middle;
                    let arities: Vec<usize> = inner.iter().map(|&(m, _)| m).collect();
                    let composite = g((n, x), &inner);
                    for (rank, s) in permutations(n).iter().enumerate() {
                        let xs = (n, self.action[n][x][rank]);
                        let s_inv = s.inverse();
                        let permuted: Vec<Op> = (1..=n).map(|k| inner[s_inv.apply(k) - 1]).collect();
                        let blocks = block_perm(s, &arities).expect("sizes match");
                        let rhs = self.action[total][g((n, x), &permuted)][perm_rank(&blocks)];
                        if g(xs, &inner) != rhs {
                            return fail("equivariance in the outer operation", n);
                        }
                    }
                    for (i, &(m, y)) in inner.iter().enumerate() {
                        for (rank, t) in permutations(m).iter().enumerate() {
                            let mut twisted = inner.clone();
                            twisted[i] = (m, self.action[m][y][rank]);
                            let mut union = Permutation::identity(0);
                            for (k, &(mk, _)) in inner.iter().enumerate() {
                                union = union.disjoint_union(&if k == i { t.clone() } else { Permutation::identity(mk) });
                            }
                            if g((n, x), &twisted) != self.action[total][composite][perm_rank(&union)] {
                                return fail("equivariance in the inner operations", total);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The associative operad: `P(n)` is the symmetric group on `n` letters,
/// element `x` of arity `n` being the `x`-th permutation in lexicographic
/// order, composed by [`gamma_perm`] and acted on by `x · s = x ∘ s`.
pub fn as_operad(n_max: usize) -> SetOperad {
    let elements = (0..=n_max.max(1))
        .map(|n| {
            permutations(n)
                .iter()
                .map(|p| p.images().iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                .collect()
        })
        .collect();
    SetOperad::from_fn(
        "as",
        elements,
        0,
        |(n, x), inner| {
            let parts: Vec<Permutation> = inner.iter().map(|&(m, y)| perm_unrank(m, y)).collect();
            perm_rank(&gamma_perm(&perm_unrank(n, x), &parts).expect("arities match"))
        },
        |(n, x), s| perm_rank(&perm_unrank(n, x).compose(s).expect("same size")),
    )
    .expect("the permutation operad satisfies the axioms")
}

/// The commutative operad: every `P(n)` is a point.
pub fn com_operad(n_max: usize) -> SetOperad {
    let elements = (0..=n_max.max(1)).map(|_| vec!["*".to_string()]).collect();
    SetOperad::from_fn("com", elements, 0, |_, _| 0, |_, _| 0).expect("the terminal operad")
}
