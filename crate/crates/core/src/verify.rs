//! The twelve verification criteria, grouped into the suites run by
//! `ncprop check`. Every criterion is an exact comparison over an exhaustive
//! (or seeded random) family of cases; a report counts the cases whose
//! observed outcome matches the expected one.

use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bialg::{
    builtin, eval_horiz, eval_vert, mackey_check, psi, psi_power, Bialgebra, LinMap, BUILTIN_NAMES,
};
use crate::doublecat::{pullback, Bimorphism, DoubleKind};
use crate::enumerate::{injections, nc_maps, permutations, set_maps};
use crate::error::{Error, Result};
use crate::groupword::{
    eval_hom_on_hopf, hom_equal, symmetric_action, xi, xi_generator, GroupHom, GroupWord, Letter,
};
use crate::ncset::{FinSetMap, NcMap, Permutation};
use crate::operad::{
    as_operad, com_operad, compose_fp, compose_span_fp2, fp_to_nc, nc_to_fp, span_to_free, FPMorphism,
    FpSpan,
};
use crate::qprop::{
    all_spans, all_spans_up_to, compose_span, endo_from_span, endo_to_span, gamma_perm, mon_span_of_words,
    mon_words_of_span, phi_compose, qf_from_matrix, qf_to_matrix, qfas_decode, qfas_encode, transpose_perm,
    word_to_shuffle, EndoPair,
};

/// Suite names, in report order.
pub const SUITES: [&str; 7] = ["phi", "psi", "mackey", "encodings", "xi", "operad", "axioms"];

/// `(id, suite, title)` of every criterion.
pub const CRITERIA: [(u8, &str, &str); 12] = [
    (1, "phi", "endomorphism composition matches the closed form"),
    (2, "phi", "closed form factors through the transposition"),
    (3, "psi", "Adams operations compose through the closed form"),
    (4, "mackey", "Mackey squares characterize bialgebras"),
    (5, "mackey", "Mackey property from injections and elementary squares"),
    (6, "encodings", "matrix functor on plain spans"),
    (7, "encodings", "word and shuffle encodings"),
    (8, "xi", "braid generators act through free-group automorphisms"),
    (9, "xi", "free-group homomorphisms evaluate contravariantly"),
    (10, "psi", "orderings are invisible to (co)commutative structure"),
    (11, "operad", "operadic categories of finite sets"),
    (12, "axioms", "axiom profiles of the builtin algebras"),
];

const SHOWN_FAILURES: usize = 5;

/// Size parameters of the verification families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest `n`, `m` in the exhaustive closed-form checks.
    pub phi_n: usize,
    pub phi_random: usize,
    pub phi_random_n: usize,
    pub psi_n: usize,
    /// Largest `|T|`, `|S|`, `|V|` of an enumerated square.
    pub mackey_size: usize,
    pub injection_m: usize,
    pub matrix_objects: usize,
    pub matrix_mid: usize,
    pub word_objects: usize,
    pub word_mid: usize,
    pub xi_k: usize,
    pub hom_pairs: usize,
    pub ordering_n: usize,
    pub operad_objects: usize,
    pub fp_span_objects: usize,
    pub fp_span_mid: usize,
    pub free_mid: usize,
    pub operad_arity: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            phi_n: 3,
            phi_random: 200,
            phi_random_n: 5,
            psi_n: 3,
            mackey_size: 3,
            injection_m: 4,
            matrix_objects: 3,
            matrix_mid: 4,
            word_objects: 2,
            word_mid: 4,
            xi_k: 5,
            hom_pairs: 20,
            ordering_n: 4,
            operad_objects: 3,
            fp_span_objects: 2,
            fp_span_mid: 3,
            free_mid: 4,
            operad_arity: 4,
            seed: 2016,
        }
    }
}

impl Bounds {
    pub const KEYS: [&'static str; 19] = [
        "phi_n",
        "phi_random",
        "phi_random_n",
        "psi_n",
        "mackey_size",
        "injection_m",
        "matrix_objects",
        "matrix_mid",
        "word_objects",
        "word_mid",
        "xi_k",
        "hom_pairs",
        "ordering_n",
        "operad_objects",
        "fp_span_objects",
        "fp_span_mid",
        "free_mid",
        "operad_arity",
        "seed",
    ];

    /// Override one bound by name.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let parsed: u64 = value
            .parse()
            .map_err(|_| Error::Parse(format!("bound {key} needs a non-negative integer, got {value:?}")))?;
        let n = parsed as usize;
        match key {
            "phi_n" => self.phi_n = n,
            "phi_random" => self.phi_random = n,
            "phi_random_n" => self.phi_random_n = n.max(1),
            "psi_n" => self.psi_n = n,
            "mackey_size" => self.mackey_size = n,
            "injection_m" => self.injection_m = n,
            "matrix_objects" => self.matrix_objects = n,
            "matrix_mid" => self.matrix_mid = n,
            "word_objects" => self.word_objects = n,
            "word_mid" => self.word_mid = n,
            "xi_k" => self.xi_k = n,
            "hom_pairs" => self.hom_pairs = n,
            "ordering_n" => self.ordering_n = n,
            "operad_objects" => self.operad_objects = n,
            "fp_span_objects" => self.fp_span_objects = n,
            "fp_span_mid" => self.fp_span_mid = n,
            "free_mid" => self.free_mid = n,
            "operad_arity" => self.operad_arity = n.max(1),
            "seed" => self.seed = parsed,
            _ => {
                return Err(Error::Parse(format!(
                    "unknown bound {key:?}; expected one of {}",
                    Self::KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }
}

/// The outcome of one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub suite: &'static str,
    pub title: &'static str,
    pub passed: usize,
    pub total: usize,
    /// The first few mismatching cases.
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl CriterionReport {
    pub fn ok(&self) -> bool {
        self.total > 0 && self.passed == self.total
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CRITERION {:>2} {} {} ({}/{} cases) {}",
            self.id,
            self.suite,
            if self.ok() { "PASS" } else { "FAIL" },
            self.passed,
            self.total,
            self.title
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub criteria: Vec<CriterionReport>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.criteria.iter().all(CriterionReport::ok)
    }

    pub fn passed(&self) -> usize {
        self.criteria.iter().map(|c| c.passed).sum()
    }

    pub fn total(&self) -> usize {
        self.criteria.iter().map(|c| c.total).sum()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SUITE {} {} ({}/{} cases)",
            self.name,
            if self.ok() { "PASS" } else { "FAIL" },
            self.passed(),
            self.total()
        )
    }
}

/// Run every criterion of `suite`.
pub fn run_suite(suite: &str, bounds: &Bounds) -> Result<SuiteReport> {
    let name = SUITES
        .iter()
        .copied()
        .find(|s| *s == suite)
        .ok_or_else(|| Error::Parse(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))))?;
    let criteria = CRITERIA
        .iter()
        .filter(|(_, s, _)| *s == name)
        .map(|&(id, _, _)| run_criterion(id, bounds))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { name, criteria })
}

pub fn run_criterion(id: u8, bounds: &Bounds) -> Result<CriterionReport> {
    let &(_, suite, title) = CRITERIA
        .iter()
        .find(|(i, _, _)| *i == id)
        .ok_or_else(|| Error::Parse(format!("no criterion {id}")))?;
    let start = Instant::now();
    let tally = match id {
        1 => c1(bounds),
        2 => c2(bounds),
        3 => c3(bounds),
        4 => c4(bounds),
        5 => c5(bounds),
        6 => c6(bounds),
        7 => c7(bounds),
        8 => c8(bounds),
        9 => c9(bounds),
        10 => c10(bounds),
        11 => c11(bounds),
        _ => c12(bounds),
    };
    Ok(CriterionReport {
        id,
        suite,
        title,
        passed: tally.passed,
        total: tally.total,
        failures: tally.failures,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Matching cases out of all cases, with a few mismatches kept for display.
#[derive(Default)]
struct Tally {
    passed: usize,
    total: usize,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, outcome: Option<String>) {
        self.total += 1;
        match outcome {
            None => self.passed += 1,
            Some(what) if self.failures.len() < SHOWN_FAILURES => self.failures.push(what),
            Some(_) => {}
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.passed += other.passed;
        self.total += other.total;
        let room = SHOWN_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.record(if ok { None } else { Some(what()) });
    }

    fn outcome(&mut self, result: Result<bool>, what: impl FnOnce() -> String) {
        self.record(mismatch(result, what));
    }

    /// Check every case in parallel; the tally does not depend on scheduling.
    fn run<T, C, L>(&mut self, cases: &[T], check: C, label: L)
    where
        T: Sync,
        C: Fn(&T) -> Result<bool> + Sync,
        L: Fn(&T) -> String + Sync,
    {
        let outcomes: Vec<Option<String>> = cases.par_iter().map(|c| mismatch(check(c), || label(c))).collect();
        for o in outcomes {
            self.record(o);
        }
    }
}

fn mismatch(result: Result<bool>, what: impl FnOnce() -> String) -> Option<String> {
    match result {
        Ok(true) => None,
        Ok(false) => Some(what()),
        Err(e) => Some(format!("{}: {e}", what())),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).unwrap_or_else(|e| format!("<{e}>"))
}

fn perm_pairs(max: usize) -> Vec<(Permutation, Permutation)> {
    let mut pairs = Vec::new();
    for n in 0..=max {
        for m in 0..=max {
            for s in permutations(n) {
                for t in permutations(m) {
                    pairs.push((s.clone(), t));
                }
            }
        }
    }
    pairs
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("a shuffled identity")
}

fn load(name: &str) -> Bialgebra {
    builtin(name).expect("builtin names are fixed")
}


/// Every square of `Fas` obtained by pulling back `f: T -> V` along
/// `phi: S -> V` with `|T|, |S|, |V| <= size`.
pub fn mackey_family(size: usize) -> Vec<Bimorphism> {
    let mut family = Vec::new();
    for v in 0..=size {
        for t in 0..=size {
            for s in 0..=size {
                let verticals = nc_maps(s, v);
                for f in nc_maps(t, v) {
                    for phi in &verticals {
                        family.push(pullback(DoubleKind::Fas, &f, phi).expect("common target"));
                    }
                }
            }
        }
    }
    family
}

/// The square whose two sides are `epsilon ∘ mu` and `mu ∘ (epsilon ⊗ epsilon)`.
pub fn counit_product_square() -> Bimorphism {
    let mu = NcMap::new(2, vec![vec![1, 2]]).expect("one fiber");
    pullback(DoubleKind::Fas, &mu, &NcMap::from_empty(1)).expect("common target")
}

fn c1(b: &Bounds) -> Tally {
    let mut cases = perm_pairs(b.phi_n);
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    for _ in 0..b.phi_random {
        let n = rng.gen_range(1..=b.phi_random_n);
        let m = rng.gen_range(1..=b.phi_random_n);
        let sigma = random_perm(&mut rng, n);
        let tau = random_perm(&mut rng, m);
        cases.push((sigma, tau));
    }
    let mut tally = Tally::default();
    tally.run(
        &cases,
        |(s, t)| {
            let first = endo_to_span(&EndoPair::new(t.clone()));
            let composite = endo_to_span(&EndoPair::new(s.clone())).after(&first)?;
            Ok(endo_from_span(&composite)? == EndoPair::new(phi_compose(s, t)))
        },
        |(s, t)| format!("sigma = [{s}], tau = [{t}]"),
    );
    tally
}

fn c2(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for n in 0..=b.phi_n {
        for m in 0..=b.phi_n {
            let ids = phi_compose(&Permutation::identity(n), &Permutation::identity(m));
            tally.check(transpose_perm(n, m) == ids, || format!("transposition of {n} x {m}"));
        }
    }
    tally.run(
        &perm_pairs(b.phi_n),
        |(s, t)| {
            let copies = vec![s.clone(); t.len()];
            let factored = transpose_perm(s.len(), t.len()).compose(&gamma_perm(t, &copies)?)?;
            Ok(phi_compose(s, t) == factored)
        },
        |(s, t)| format!("sigma = [{s}], tau = [{t}]"),
    );
    tally
}

fn c3(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for name in ["sweedler", "s3"] {
        let h = load(name);
        tally.run(
            &perm_pairs(b.psi_n),
            |(s, t)| {
                let lhs = psi(s.len(), s, &h)?.compose(&psi(t.len(), t, &h)?)?;
                Ok(lhs == psi(s.len() * t.len(), &phi_compose(s, t), &h)?)
            },
            |(s, t)| format!("{name}: sigma = [{s}], tau = [{t}]"),
        );
    }
    tally
}

fn c4(b: &Bounds) -> Tally {
    let family = mackey_family(b.mackey_size);
    let mut tally = Tally::default();
    for name in ["sweedler", "s3", "s3dual"] {
        let h = load(name);
        tally.run(
            &family,
            |square| mackey_check(square, &h),
            |square| format!("{name}: f = {}, phi = {}", json(&square.f), json(&square.phi)),
        );
    }
    let nonbialg = load("nonbialg");
    let square = counit_product_square();
    tally.outcome(mackey_check(&square, &nonbialg).map(|holds| !holds), || {
        "nonbialg: the counit-product square commutes".into()
    });
    if b.mackey_size >= 2 {
        tally.check(family.contains(&square), || "the counit-product square is not enumerated".into());
    }
    tally
}

fn retracts(g: &NcMap, h: &Bialgebra) -> Result<bool> {
    Ok(eval_vert(g, h)?.compose(&eval_horiz(g, h)?)?.is_identity())
}

fn c5(b: &Bounds) -> Tally {
    let family = mackey_family(b.mackey_size);
    let elementary: Vec<Bimorphism> = family.iter().filter(|s| s.is_elementary()).cloned().collect();
    let mut injective = Vec::new();
    for n in 0..=b.injection_m {
        for m in n..=b.injection_m {
            injective.extend(injections(n, m).iter().map(NcMap::lift));
        }
    }
    let mut tally = Tally::default();
    for name in BUILTIN_NAMES {
        let h = load(name);
        let before = tally.passed;
        tally.run(&injective, |g| retracts(g, &h), |g| format!("{name}: injection {}", json(g)));
        let condition_i = tally.passed - before == injective.len();
        let all_hold = |squares: &[Bimorphism]| squares.par_iter().all(|s| mackey_check(s, &h).unwrap_or(false));
        let full = all_hold(&family);
        let elementary_only = all_hold(&elementary);
        tally.check(full == (condition_i && elementary_only), || {
            format!(
                "{name}: all {} squares commute = {full}, but (i) = {condition_i} and all {} elementary squares commute = {elementary_only}",
                family.len(),
                elementary.len()
            )
        });
    }
    tally
}

fn c6(b: &Bounds) -> Tally {
    let objects = 0..=b.matrix_objects;
    let spans: Vec<Vec<Vec<_>>> = objects
        .clone()
        .map(|a| objects.clone().map(|c| all_spans_up_to(DoubleKind::F, a, c, b.matrix_mid)).collect())
        .collect();
    let mut tally = Tally::default();
    let mut matrices = Vec::new();
    for row in &spans {
        let mut mrow = Vec::new();
        for list in row {
            let mut mats = Vec::new();
            for s in list {
                match qf_to_matrix(s) {
                    Ok(mat) => {
                        tally.check(qf_from_matrix(&mat) == *s, || format!("round trip of {}", json(s)));
                        mats.push(Some(mat));
                    }
                    Err(e) => {
                        tally.record(Some(format!("matrix of {}: {e}", json(s))));
                        mats.push(None);
                    }
                }
            }
            mrow.push(mats);
        }
        matrices.push(mrow);
    }
    for a in objects.clone() {
        for m in objects.clone() {
            for c in objects.clone() {
                let (firsts, seconds) = (&spans[a][m], &spans[m][c]);
                let (fm, sm) = (&matrices[a][m], &matrices[m][c]);
                let part = (0..firsts.len())
                    .into_par_iter()
                    .map(|i| {
                        let mut local = Tally::default();
                        for j in 0..seconds.len() {
                            let outcome = match (&fm[i], &sm[j]) {
                                (Some(x), Some(y)) => seconds[j]
                                    .after(&firsts[i])
                                    .and_then(|gf| Ok(qf_to_matrix(&gf)? == y.mul(x)?)),
                                _ => Ok(false),
                            };
                            local.outcome(outcome, || {
                                format!("{} after {}", json(&seconds[j]), json(&firsts[i]))
                            });
                        }
                        local
                    })
                    .reduce(Tally::default, Tally::merge);
                tally = tally.merge(part);
            }
        }
    }
    tally
}

/// The word `x^2 y x y^3 x^2` as letter indices.
pub const EXAMPLE_WORD: [usize; 9] = [1, 1, 2, 1, 2, 2, 2, 1, 1];

fn c7(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    let printed = word_to_shuffle(&EXAMPLE_WORD, 2).map(|sh| {
        let images: Vec<String> = sh.images().iter().map(usize::to_string).collect();
        format!("({})", images.join(","))
    });
    tally.check(printed.as_deref().ok() == Some("(1,2,4,8,9,3,5,6,7)"), || {
        format!("shuffle of x^2 y x y^3 x^2 printed as {printed:?}")
    });
    for n in 0..=b.word_objects {
        for m in 0..=b.word_objects {
            let ordered = all_spans_up_to(DoubleKind::Fas2, n, m, b.word_mid);
            tally.run(
                &ordered,
                |s| Ok(mon_span_of_words(&mon_words_of_span(s)?) == *s),
                |s| format!("words of {}", json(s)),
            );
            let spans = all_spans_up_to(DoubleKind::Fas, n, m, b.word_mid);
            tally.run(
                &spans,
                |s| Ok(qfas_decode(&qfas_encode(s)?)? == *s),
                |s| format!("qfas code of {}", json(s)),
            );
            let codes: std::collections::HashSet<_> = spans.iter().filter_map(|s| qfas_encode(s).ok()).collect();
            tally.check(codes.len() == spans.len(), || format!("qfas codes collide for {n} -> {m}"));
        }
    }
    tally
}

fn transposition(n: usize, i: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.swap(i - 1, i);
    Permutation::new(images).expect("adjacent transposition")
}

fn c8(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for k in 1..=b.xi_k {
        let id = GroupHom::identity(k);
        let s: Vec<GroupHom> = (1..=k).map(|i| xi_generator(k, i).expect("i <= k")).collect();
        let equal = |x: Result<GroupHom>, y: Result<GroupHom>| Ok(hom_equal(&x?, &y?));
        for i in 0..k {
            let inverse = xi(k, &transposition(k + 1, i + 1).inverse());
            let invertible = inverse.and_then(|inv| Ok(hom_equal(&s[i].after(&inv)?, &id) && hom_equal(&inv.after(&s[i])?, &id)));
            tally.outcome(invertible, || format!("xi_{k}(sigma_{}) is not invertible", i + 1));
            tally.outcome(equal(s[i].after(&s[i]), Ok(id.clone())), || format!("sigma_{} squared, k = {k}", i + 1));
            if i + 1 < k {
                let lhs = s[i].after(&s[i + 1]).and_then(|x| x.after(&s[i]));
                let rhs = s[i + 1].after(&s[i]).and_then(|x| x.after(&s[i + 1]));
                tally.outcome(equal(lhs, rhs), || format!("braid relation at {}, k = {k}", i + 1));
            }
            for j in i + 2..k {
                tally.outcome(equal(s[i].after(&s[j]), s[j].after(&s[i])), || {
                    format!("sigma_{} and sigma_{} commute, k = {k}", i + 1, j + 1)
                });
            }
        }
    }
    let s3 = load("s3");
    let perms = permutations(3);
    let action: Vec<Result<LinMap>> = perms.iter().map(|p| symmetric_action(2, p, &s3)).collect();
    let mut pairs = Vec::new();
    for a in 0..perms.len() {
        for c in 0..perms.len() {
            pairs.push((a, c));
        }
    }
    tally.run(
        &pairs,
        |&(a, c)| {
            let product = symmetric_action(2, &perms[a].compose(&perms[c])?, &s3)?;
            let (pa, pc) = (action[a].as_ref().map_err(clone_err)?, action[c].as_ref().map_err(clone_err)?);
            Ok(product == pa.compose(pc)?)
        },
        |&(a, c)| format!("action of [{}] after [{}]", perms[a], perms[c]),
    );
    tally
}

fn clone_err(e: &Error) -> Error {
    Error::Precondition(e.to_string())
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize) -> GroupWord {
    let len = rng.gen_range(0..=4);
    GroupWord::reduce((0..len).map(|_| {
        let letter = Letter::new(rng.gen_range(1..=rank));
        if rng.gen_bool(0.5) {
            letter.inv()
        } else {
            letter
        }
    }))
}

fn random_hom(rng: &mut ChaCha8Rng, m: usize, n: usize) -> GroupHom {
    let images = (0..m).map(|_| random_word(rng, n)).collect();
    GroupHom::new(m, n, images).expect("letters within the rank")
}

fn c9(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    let s3 = load("s3");
    let parse = |m, n, images: &[&str]| GroupHom::parse(m, n, images).expect("fixed assignments");
    let two_to_one = NcMap::new(2, vec![vec![1, 2]]).expect("one fiber");
    let antipode = LinMap::from_fn(s3.dim(), 1, 1, |input| s3.antipode(input[0]).cloned().unwrap_or_default());
    let basic: [(&str, Result<bool>); 3] = [
        ("mu", eval_hom_on_hopf(&parse(1, 2, &["x1 x2"]), &s3).and_then(|x| Ok(x == eval_horiz(&two_to_one, &s3)?))),
        ("Delta", eval_hom_on_hopf(&parse(2, 1, &["x1", "x1"]), &s3).and_then(|x| Ok(x == eval_vert(&two_to_one, &s3)?))),
        ("S", eval_hom_on_hopf(&parse(1, 1, &["x1^-1"]), &s3).and_then(|x| Ok(x == antipode?))),
    ];
    for (what, outcome) in basic {
        tally.outcome(outcome, || format!("{what} on s3"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    let mut pairs = Vec::new();
    for _ in 0..b.hom_pairs {
        let (m, n, p) = (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3));
        let first = random_hom(&mut rng, m, n);
        let second = random_hom(&mut rng, n, p);
        pairs.push((first, second));
    }
    for name in ["c2", "s3"] {
        let h = load(name);
        tally.run(
            &pairs,
            |(first, second)| {
                let lhs = eval_hom_on_hopf(&second.after(first)?, &h)?;
                Ok(lhs == eval_hom_on_hopf(first, &h)?.compose(&eval_hom_on_hopf(second, &h)?)?)
            },
            |(first, second)| format!("{name}: {} then {}", json(first), json(second)),
        );
    }
    tally
}

fn c10(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    let mut maps = Vec::new();
    for n in 0..=b.ordering_n {
        for m in 0..=b.ordering_n {
            maps.extend(nc_maps(n, m));
        }
    }
    let s3 = load("s3");
    let s3dual = load("s3dual");
    tally.run(
        &maps,
        |phi| Ok(eval_vert(phi, &s3)? == eval_vert(&phi.with_sorted_fibers(), &s3)?),
        |phi| format!("s3: coproduct along {}", json(phi)),
    );
    tally.run(
        &maps,
        |f| Ok(eval_horiz(f, &s3dual)? == eval_horiz(&f.with_sorted_fibers(), &s3dual)?),
        |f| format!("s3dual: product along {}", json(f)),
    );
    for h in [&s3, &s3dual] {
        let mut perms = Vec::new();
        for n in 0..=b.ordering_n {
            perms.extend(permutations(n));
        }
        tally.run(
            &perms,
            |s| Ok(psi(s.len(), s, h)? == psi_power(s.len(), h)),
            |s| format!("{}: Psi^(n, [{s}])", h.name()),
        );
        let mut degrees = Vec::new();
        for n in 0..=b.ordering_n {
            for m in 0..=b.ordering_n {
                degrees.push((n, m));
            }
        }
        tally.run(
            &degrees,
            |&(n, m)| Ok(psi_power(n, h).compose(&psi_power(m, h))? == psi_power(n * m, h)),
            |&(n, m)| format!("{}: Psi^{n} after Psi^{m}", h.name()),
        );
    }
    tally
}

fn c11(b: &Bounds) -> Tally {
    let mut tally = Tally::default();
    let op = as_operad(b.operad_arity);
    let com = com_operad(b.operad_arity);
    let objects = b.operad_objects;

    let mut triples = Vec::new();
    for n in 0..=objects {
        for m in 0..=objects {
            for k in 0..=objects {
                let seconds = nc_maps(m, k);
                for f in nc_maps(n, m) {
                    for g in &seconds {
                        triples.push((f.clone(), g.clone()));
                    }
                }
            }
        }
    }
    tally.run(
        &triples,
        |(f, g)| {
            let fp = compose_fp(&op, &nc_to_fp(g), &nc_to_fp(f))?;
            Ok(fp == nc_to_fp(&g.compose(f)?) && fp_to_nc(&fp)? == g.compose(f)?)
        },
        |(f, g)| format!("as: {} after {}", json(g), json(f)),
    );

    let mut plain = Vec::new();
    for n in 0..=objects {
        for m in 0..=objects {
            for k in 0..=objects {
                let seconds = set_maps(m, k);
                for f in set_maps(n, m) {
                    for g in &seconds {
                        plain.push((f.clone(), g.clone()));
                    }
                }
            }
        }
    }
    let lift = |h: &FinSetMap| FPMorphism::new(&com, h.clone(), vec![0; h.target_size()]);
    tally.run(
        &plain,
        |(f, g)| Ok(compose_fp(&com, &lift(g)?, &lift(f)?)? == lift(&g.compose(f)?)?),
        |(f, g)| format!("com: {} after {}", json(g), json(f)),
    );

    for a in 0..=b.fp_span_objects {
        for m in 0..=b.fp_span_objects {
            for c in 0..=b.fp_span_objects {
                let firsts = all_spans_up_to(DoubleKind::Fas2, a, m, b.fp_span_mid);
                let seconds = all_spans_up_to(DoubleKind::Fas2, m, c, b.fp_span_mid);
                let part = firsts
                    .par_iter()
                    .map(|first| {
                        let mut local = Tally::default();
                        for second in &seconds {
                            let outcome = compose_span(second, first).and_then(|expected| {
                                let wide = expected.phi().fibers().iter().any(|f| f.len() > op.n_max());
                                let fp = compose_span_fp2(&op, &FpSpan::from_span(second)?, &FpSpan::from_span(first)?);
                                match fp {
                                    Ok(fp) => Ok(!wide && fp.to_span()? == expected),
                                    Err(Error::NotCovered(_)) => Ok(wide),
                                    Err(e) => Err(e),
                                }
                            });
                            local.outcome(outcome, || format!("{} after {}", json(second), json(first)));
                        }
                        local
                    })
                    .reduce(Tally::default, Tally::merge);
                tally = tally.merge(part);
            }
        }
    }

    for x in 0..=b.fp_span_objects {
        let mut spans = Vec::new();
        for mid in 0..=b.free_mid.min(op.n_max()) {
            spans.extend(all_spans(DoubleKind::Fas2, 1, x, mid));
        }
        let free: Vec<_> = spans
            .par_iter()
            .map(|s| {
                let fp = FpSpan::from_span(s)?;
                let base = span_to_free(&op, &fp)?;
                let invariant = permutations(s.mid())
                    .iter()
                    .map(|pi| Ok(span_to_free(&op, &fp.relabel(&op, pi)?)? == base))
                    .collect::<Result<Vec<bool>>>()?
                    .into_iter()
                    .all(|same| same);
                Ok((base, invariant))
            })
            .collect();
        let mut seen = std::collections::HashSet::new();
        for (s, outcome) in spans.iter().zip(free) {
            let outcome = outcome.map(|(base, invariant)| invariant && seen.insert(base));
            tally.outcome(outcome, || format!("free element of {}", json(s)));
        }
    }
    tally
}

/// The axiom profile every builtin is documented to have.
pub fn expected_profile(name: &str) -> Option<crate::bialg::AxiomReport> {
    let (commutative, cocommutative) = match name {
        "c2" | "c3" | "c2dual" | "c3dual" => (true, true),
        "s3" => (false, true),
        "s3dual" => (true, false),
        "sweedler" => (false, false),
        "nonbialg" => (true, true),
        _ => return None,
    };
    let bialgebra = name != "nonbialg";
    Some(crate::bialg::AxiomReport {
        associative: true,
        unital: true,
        coassociative: true,
        counital: true,
        comult_multiplicative: true,
        counit_multiplicative: bialgebra,
        comult_of_unit: true,
        counit_of_unit: true,
        antipode: bialgebra.then_some(true),
        commutative,
        cocommutative,
    })
}

fn c12(_: &Bounds) -> Tally {
    let mut tally = Tally::default();
    for name in BUILTIN_NAMES {
        let report = load(name).report().clone();
        let expected = expected_profile(name).expect("every builtin is documented");
        for ((axiom, got), (_, want)) in report.entries().into_iter().zip(expected.entries()) {
            tally.check(got == want, || format!("{name}: {axiom} is {got:?}, expected {want:?}"));
        }
    }
    let nonbialg = load("nonbialg").report().clone();
    tally.check(
        nonbialg.is_algebra() && nonbialg.is_coalgebra() && !nonbialg.is_compatible(),
        || "nonbialg fails more than the compatibility axioms".into(),
    );
    tally
}
