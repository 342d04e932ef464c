//! The evaluation functors on noncommutative sets, spans and bimorphisms.
//!
//! `eval_horiz(f)` multiplies, in fiber order, the tensor factors lying over
//! each target point; an empty fiber contributes the unit. `eval_vert(phi)`
//! comultiplies each input factor into as many copies as its fiber has
//! elements and sends the `k`-th Sweedler copy to the `k`-th element of the
//! ordered fiber; an empty fiber applies the counit.

use std::borrow::Cow;
use std::collections::BTreeMap;

use crate::doublecat::{Bimorphism, DoubleKind};
use crate::error::{Error, Result};
use crate::ncset::{NcMap, Permutation};
use crate::qprop::Span;
use crate::scalar::Scalar;

use super::linmap::LinMap;
use super::structure::Bialgebra;
use super::tensor::{add_scaled, add_term, basis, combine, digits, encode, power, scalar_vec, SparseVec};

/// How iterated (co)multiplications are bracketed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nesting {
    /// `Delta^k = (Delta^{k-1} ⊗ id) Delta`, `mu^k = mu (mu^{k-1} ⊗ id)`.
    Left,
    /// `Delta^k = (id ⊗ Delta^{k-1}) Delta`, `mu^k = mu (id ⊗ mu^{k-1})`.
    Right,
}

fn require_algebra(b: &Bialgebra) -> Result<()> {
    if b.report().is_algebra() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not an associative unital algebra", b.name())))
    }
}

fn require_coalgebra(b: &Bialgebra) -> Result<()> {
    if b.report().is_coalgebra() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not a coassociative counital coalgebra", b.name())))
    }
}

fn require_bialgebra(b: &Bialgebra) -> Result<()> {
    if b.report().is_bialgebra() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not a bialgebra", b.name())))
    }
}

/// `Delta^k(x)` in `H^{⊗k}`; `k = 0` gives the counit, `k = 1` the identity.
pub fn iterated_coproduct(b: &Bialgebra, x: &SparseVec, k: usize, nesting: Nesting) -> SparseVec {
    match k {
        0 => scalar_vec(b.eps(x)),
        1 => x.clone(),
        _ => {
            let mut v = b.comul(x);
            for p in 2..k {
                let pos = match nesting {
                    Nesting::Left => 0,
                    Nesting::Right => p - 1,
                };
                v = b.map_factor(&v, p, pos, 2, |a| b.coproduct(a).clone());
            }
            v
        }
    }
}

/// `mu^k: H^{⊗k} -> H`; `k = 0` gives the unit.
pub fn iterated_product(b: &Bialgebra, v: &SparseVec, k: usize, nesting: Nesting) -> SparseVec {
    let d = b.dim();
    let mut out = SparseVec::new();
    for (&key, c) in v {
        let factors = digits(key, d, k);
        let prod = match nesting {
            Nesting::Left => ordered_product(b, factors.iter().copied()),
            Nesting::Right => factors
                .iter()
                .rev()
                .fold(b.unit().clone(), |acc, &a| b.mul(&basis(a as u64), &acc)),
        };
        add_scaled(&mut out, &prod, c);
    }
    out
}

/// Left-to-right product of basis elements, the unit when empty.
fn ordered_product(b: &Bialgebra, factors: impl Iterator<Item = usize>) -> SparseVec {
    let mut acc: Option<SparseVec> = None;
    for a in factors {
        acc = Some(match acc {
            None => basis(a as u64),
            Some(v) => {
                let mut out = SparseVec::new();
                for (&x, c) in &v {
                    add_scaled(&mut out, b.product(x as usize, a), c);
                }
                out
            }
        });
    }
    acc.unwrap_or_else(|| b.unit().clone())
}

/// Left-nested `Delta^k(e_a)` for every needed `k` and basis element `a`, as
/// lists of digit vectors.
struct CopowerTable {
    table: BTreeMap<(usize, usize), Vec<(Vec<usize>, Scalar)>>,
}

impl CopowerTable {
    fn new(b: &Bialgebra, ks: impl IntoIterator<Item = usize>) -> CopowerTable {
        let mut table = BTreeMap::new();
        for k in ks {
            for a in 0..b.dim() {
                table.entry((k, a)).or_insert_with(|| {
                    iterated_coproduct(b, &basis(a as u64), k, Nesting::Left)
                        .into_iter()
                        .map(|(key, c)| (digits(key, b.dim(), k), c))
                        .collect()
                });
            }
        }
        CopowerTable { table }
    }

    fn get(&self, k: usize, a: usize) -> &[(Vec<usize>, Scalar)] {
        &self.table[&(k, a)]
    }
}

fn weights(d: usize, n: usize) -> Vec<u64> {
    (0..n).map(|p| power(d, n - 1 - p).expect("representable")).collect()
}

fn horiz_basis(b: &Bialgebra, f: &NcMap, input: &[usize]) -> SparseVec {
    let w = weights(b.dim(), f.target_size());
    let parts: Vec<Vec<(u64, Scalar)>> = f
        .fibers()
        .iter()
        .enumerate()
        .map(|(j, fiber)| {
            ordered_product(b, fiber.iter().map(|&u| input[u - 1]))
                .into_iter()
                .map(|(x, c)| (x * w[j], c))
                .collect()
        })
        .collect();
    combine(&parts)
}

fn vert_basis(b: &Bialgebra, table: &CopowerTable, phi: &NcMap, input: &[usize]) -> SparseVec {
    let w = weights(b.dim(), phi.source_size());
    let parts: Vec<Vec<(u64, Scalar)>> = phi
        .fibers()
        .iter()
        .enumerate()
        .map(|(j, fiber)| {
            table
                .get(fiber.len(), input[j])
                .iter()
                .map(|(copies, c)| {
                    let key = fiber.iter().zip(copies).map(|(&u, &a)| a as u64 * w[u - 1]).sum();
                    (key, c.clone())
                })
                .collect()
        })
        .collect();
    combine(&parts)
}

fn fiber_sizes(phi: &NcMap) -> Vec<usize> {
    phi.fibers().iter().map(Vec::len).collect()
}

/// The covariant functor on `F(as)`: `H^{⊗n} -> H^{⊗m}` for `f: n -> m`.
pub fn eval_horiz(f: &NcMap, b: &Bialgebra) -> Result<LinMap> {
    require_algebra(b)?;
    LinMap::from_fn(b.dim(), f.source_size(), f.target_size(), |input| horiz_basis(b, f, input))
}

/// The contravariant functor on `F(as)`: `H^{⊗m} -> H^{⊗n}` for `phi: n -> m`.
pub fn eval_vert(phi: &NcMap, b: &Bialgebra) -> Result<LinMap> {
    require_coalgebra(b)?;
    let table = CopowerTable::new(b, fiber_sizes(phi));
    LinMap::from_fn(b.dim(), phi.target_size(), phi.source_size(), |input| {
        vert_basis(b, &table, phi, input)
    })
}

/// How [`eval_legs`] computes `eval_horiz(f) ∘ eval_vert(phi)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalStrategy {
    /// Expand into the full tensor power of the apex, then multiply.
    Expanded,
    /// Process the source factors one at a time, keeping running products
    /// per target factor, when the fiber orders allow it; otherwise expand.
    Streaming,
}

/// One source factor `t`: comultiply it `copies` times and append the copies
/// listed in `routes[s]` (in horizontal order) to the running product of `s`.
struct Step {
    t: usize,
    copies: usize,
    routes: Vec<(usize, Vec<usize>)>,
}

/// An order of the source factors such that, for every target `s`, the
/// elements of the horizontal fiber of `s` arrive in their fiber order.
fn stream_plan(phi: &NcMap, f: &NcMap) -> Option<Vec<Step>> {
    let t_size = phi.target_size();
    let phi_values = phi.values();
    let mut succ = vec![Vec::new(); t_size + 1];
    let mut indegree = vec![0usize; t_size + 1];
    for fiber in f.fibers() {
        let mut seq: Vec<usize> = fiber.iter().map(|&u| phi_values[u - 1]).collect();
        seq.dedup();
        let mut seen = vec![false; t_size + 1];
        for &t in &seq {
            if std::mem::replace(&mut seen[t], true) {
                return None;
            }
        }
        for pair in seq.windows(2) {
            succ[pair[0]].push(pair[1]);
            indegree[pair[1]] += 1;
        }
    }
    let mut order = Vec::with_capacity(t_size);
    let mut ready: std::collections::BTreeSet<usize> = (1..=t_size).filter(|&t| indegree[t] == 0).collect();
    while let Some(t) = ready.pop_first() {
        order.push(t);
        for &n in &succ[t] {
            indegree[n] -= 1;
            if indegree[n] == 0 {
                ready.insert(n);
            }
        }
    }
    if order.len() != t_size {
        return None;
    }
    let f_values = f.values();
    let f_ranks = f.ranks();
    Some(
        order
            .into_iter()
            .map(|t| {
                let fiber = phi.fiber(t);
                let mut by_target: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
                for (i, &u) in fiber.iter().enumerate() {
                    by_target.entry(f_values[u - 1]).or_default().push((f_ranks[u - 1], i));
                }
                let routes = by_target
                    .into_iter()
                    .map(|(s, mut v)| {
                        v.sort_unstable();
                        (s, v.into_iter().map(|(_, i)| i).collect())
                    })
                    .collect();
                Step {
                    t,
                    copies: fiber.len(),
                    routes,
                }
            })
            .collect(),
    )
}

/// An ordered product of basis elements, borrowed from the structure
/// constants when it has at most two factors.
enum Prod<'a> {
    Basis(u64),
    Sum(Cow<'a, SparseVec>),
}

impl<'a> Prod<'a> {
    fn of(b: &'a Bialgebra, factors: &[usize]) -> Prod<'a> {
        match factors {
            [] => Prod::Sum(Cow::Borrowed(b.unit())),
            [a] => Prod::Basis(*a as u64),
            [a, c] => Prod::Sum(Cow::Borrowed(b.product(*a, *c))),
            _ => Prod::Sum(Cow::Owned(ordered_product(b, factors.iter().copied()))),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Prod::Sum(v) if v.is_empty())
    }
}

/// Add `coeff` times the tensor product of `prods` (each placed at its
/// weight) to `out`, shifted by `key`.
fn accumulate(out: &mut SparseVec, prods: &[(u64, Prod<'_>)], key: u64, coeff: Scalar) {
    match prods.split_first() {
        None => add_term(out, key, coeff),
        Some(((w, Prod::Basis(a)), rest)) => accumulate(out, rest, key + a * w, coeff),
        Some(((w, Prod::Sum(v)), rest)) => {
            for (x, cx) in v.iter() {
                accumulate(out, rest, key + x * w, &coeff * cx);
            }
        }
    }
}

/// Running products are keyed in base `d + 1`, the digit `d` marking a
/// target that has received no factor yet; such targets become the unit
/// only at the end.
fn stream_column(b: &Bialgebra, table: &CopowerTable, plan: &[Step], s_size: usize, input: &[usize]) -> SparseVec {
    let d = b.dim();
    let w: Vec<u64> = (0..s_size)
        .map(|p| power(d + 1, s_size - 1 - p).expect("representable"))
        .collect();
    let empty: u64 = w.iter().map(|&x| x * d as u64).sum();
    let mut state = SparseVec::new();
    add_term(&mut state, empty, Scalar::one());
    let mut prods: Vec<(u64, Prod<'_>)> = Vec::new();
    for step in plan {
        let mut next = SparseVec::new();
        let terms = table.get(step.copies, input[step.t - 1]);
        for (key, c) in &state {
            let partial = digits(*key, d + 1, s_size);
            let mut base = *key;
            for (s, _) in &step.routes {
                base -= partial[s - 1] as u64 * w[s - 1];
            }
            'terms: for (copies, c2) in terms {
                prods.clear();
                for (s, idxs) in &step.routes {
                    let start = (partial[s - 1] < d).then_some(partial[s - 1]);
                    let factors: Vec<usize> = start.into_iter().chain(idxs.iter().map(|&i| copies[i])).collect();
                    let prod = Prod::of(b, &factors);
                    if prod.is_zero() {
                        continue 'terms;
                    }
                    prods.push((w[s - 1], prod));
                }
                accumulate(&mut next, &prods, base, c * c2);
            }
        }
        state = next;
    }
    let out_w = weights(d, s_size);
    let mut out = SparseVec::new();
    for (key, c) in state {
        let parts: Vec<Vec<(u64, Scalar)>> = digits(key, d + 1, s_size)
            .into_iter()
            .enumerate()
            .map(|(s, a)| {
                if a < d {
                    vec![(a as u64 * out_w[s], Scalar::one())]
                } else {
                    b.unit().iter().map(|(&x, cx)| (x * out_w[s], cx.clone())).collect()
                }
            })
            .chain(std::iter::once(vec![(0, c)]))
            .collect();
        for (k, v) in combine(&parts) {
            add_term(&mut out, k, v);
        }
    }
    out
}

fn expanded_column(b: &Bialgebra, table: &CopowerTable, phi: &NcMap, f: &NcMap, input: &[usize]) -> SparseVec {
    let mut out = SparseVec::new();
    for (key, c) in vert_basis(b, table, phi, input) {
        let apex = digits(key, b.dim(), phi.source_size());
        add_scaled(&mut out, &horiz_basis(b, f, &apex), &c);
    }
    out
}

/// `eval_horiz(f) ∘ eval_vert(phi)` for legs `T <-phi- U -f-> S`, without
/// any (co)commutativity requirement.
pub fn eval_legs(phi: &NcMap, f: &NcMap, b: &Bialgebra, strategy: EvalStrategy) -> Result<LinMap> {
    require_algebra(b)?;
    require_coalgebra(b)?;
    if phi.source_size() != f.source_size() {
        return Err(Error::Arity("span legs with different sources".into()));
    }
    let table = CopowerTable::new(b, fiber_sizes(phi));
    let plan = match strategy {
        EvalStrategy::Streaming => stream_plan(phi, f),
        EvalStrategy::Expanded => None,
    };
    let (t_size, s_size) = (phi.target_size(), f.target_size());
    match plan {
        Some(plan) => LinMap::from_fn(b.dim(), t_size, s_size, |input| {
            stream_column(b, &table, &plan, s_size, input)
        }),
        None => LinMap::from_fn(b.dim(), t_size, s_size, |input| {
            expanded_column(b, &table, phi, f, input)
        }),
    }
}

/// The value of a span on `b`. The kind dictates what `b` must satisfy:
/// a bialgebra for `Fas`, cocommutative for `Fas1`, commutative for `Fas2`,
/// both for `F`.
pub fn eval_span(s: &Span, b: &Bialgebra) -> Result<LinMap> {
    require_bialgebra(b)?;
    let r = b.report();
    let kind = s.kind();
    if kind.vertical_ordered() && !kind.horizontal_ordered() && !r.commutative {
        return Err(Error::Precondition(format!(
            "spans of kind {kind:?} need a commutative bialgebra, {} is not commutative",
            b.name()
        )));
    }
    if !kind.vertical_ordered() && kind.horizontal_ordered() && !r.cocommutative {
        return Err(Error::Precondition(format!(
            "spans of kind {kind:?} need a cocommutative bialgebra, {} is not cocommutative",
            b.name()
        )));
    }
    if kind == DoubleKind::F && !(r.commutative && r.cocommutative) {
        return Err(Error::Precondition(format!(
            "spans of kind F need a commutative and cocommutative bialgebra, {} is not",
            b.name()
        )));
    }
    eval_legs(s.phi(), s.f(), b, EvalStrategy::Streaming)
}

/// Both sides of the exchange law `eval_vert(phi) eval_horiz(f) =
/// eval_horiz(f1) eval_vert(phi1)`.
pub fn mackey_sides(bm: &Bimorphism, b: &Bialgebra) -> Result<(LinMap, LinMap)> {
    require_algebra(b)?;
    require_coalgebra(b)?;
    let table = CopowerTable::new(b, fiber_sizes(&bm.phi));
    let v_size = bm.f.target_size();
    let lhs = LinMap::from_fn(b.dim(), bm.f.source_size(), bm.phi.source_size(), |input| {
        let mut out = SparseVec::new();
        for (key, c) in horiz_basis(b, &bm.f, input) {
            let mid = digits(key, b.dim(), v_size);
            add_scaled(&mut out, &vert_basis(b, &table, &bm.phi, &mid), &c);
        }
        out
    })?;
    let rhs = eval_legs(&bm.phi1, &bm.f1, b, EvalStrategy::Streaming)?;
    Ok((lhs, rhs))
}

pub fn mackey_check(bm: &Bimorphism, b: &Bialgebra) -> Result<bool> {
    let (lhs, rhs) = mackey_sides(bm, b)?;
    Ok(lhs == rhs)
}

/// `sigma_*(x_1 ⊗ ... ⊗ x_n) = x_{sigma(1)} ⊗ ... ⊗ x_{sigma(n)}`.
pub fn permute_tensor(sigma: &Permutation, dim: usize) -> Result<LinMap> {
    let n = sigma.len();
    LinMap::from_fn(dim, n, n, |input| {
        let out: Vec<usize> = (1..=n).map(|i| input[sigma.apply(i) - 1]).collect();
        basis(encode(&out, dim))
    })
}

/// The generalized Adams operation `Psi^(n, sigma)`: the value of the span
/// `1 <-[sigma]- n -[id]-> 1`. The `k`-th Sweedler copy of `Delta^n(h)` is
/// multiplied in position `sigma(k)`, so
/// `Psi^(n, sigma)(h) = sum h_{sigma^{-1}(1)} ... h_{sigma^{-1}(n)}`.
pub fn psi(n: usize, sigma: &Permutation, b: &Bialgebra) -> Result<LinMap> {
    if sigma.len() != n {
        return Err(Error::Arity(format!("permutation of {} letters for n = {n}", sigma.len())));
    }
    require_bialgebra(b)?;
    if sigma.is_identity() {
        return Ok(psi_power(n, b));
    }
    Ok(psi_expanded(sigma, b))
}

/// `mu^n ∘ sigma_* ∘ Delta^n` read literally with [`permute_tensor`].
pub fn psi_literal(sigma: &Permutation, b: &Bialgebra) -> Result<LinMap> {
    require_bialgebra(b)?;
    Ok(psi_expanded(&sigma.inverse(), b))
}

fn psi_expanded(sigma: &Permutation, b: &Bialgebra) -> LinMap {
    let n = sigma.len();
    let table = CopowerTable::new(b, [n]);
    let inverse = sigma.inverse();
    LinMap::from_fn(b.dim(), 1, 1, |input| {
        let mut out = SparseVec::new();
        for (copies, c) in table.get(n, input[0]) {
            let prod = ordered_product(b, (1..=n).map(|j| copies[inverse.apply(j) - 1]));
            add_scaled(&mut out, &prod, c);
        }
        out
    })
    .expect("a d x d matrix")
}

/// `Psi^n = mu ∘ (Psi^{n-1} ⊗ id) ∘ Delta`, with `Psi^0 = eta epsilon`.
pub fn psi_power(n: usize, b: &Bialgebra) -> LinMap {
    let d = b.dim();
    let mut current = LinMap::identity(d, 1);
    if n == 0 {
        return LinMap::from_fn(d, 1, 1, |input| {
            let mut out = SparseVec::new();
            add_scaled(&mut out, b.unit(), b.counit(input[0]));
            out
        })
        .expect("a d x d matrix");
    }
    for _ in 1..n {
        current = LinMap::from_fn(d, 1, 1, |input| {
            let mut out = SparseVec::new();
            for (&key, c) in b.coproduct(input[0]) {
                let (x, y) = ((key / d as u64) as usize, (key % d as u64) as usize);
                let left = current.column(x);
                add_scaled(&mut out, &b.mul(left, &basis(y as u64)), c);
            }
            out
        })
        .expect("a d x d matrix");
    }
    current
}
