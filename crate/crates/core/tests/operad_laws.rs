use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use ncprop::doublecat::DoubleKind;
use ncprop::enumerate::{nc_maps, perm_rank, perm_unrank, permutations, set_maps};
use ncprop::ncset::{FinSetMap, NcMap, Permutation};
use ncprop::operad::*;
use ncprop::qprop::{all_spans, all_spans_up_to, compose_span, mon_words_of_span};

fn as4() -> &'static SetOperad {
    static OP: OnceLock<SetOperad> = OnceLock::new();
    OP.get_or_init(|| as_operad(4))
}

fn perm(images: &[usize]) -> Permutation {
    Permutation::new(images.to_vec()).unwrap()
}

fn rank(images: &[usize]) -> usize {
    perm_rank(&perm(images))
}

fn nc(n: usize, fibers: &[&[usize]]) -> NcMap {
    NcMap::new(n, fibers.iter().map(|f| f.to_vec()).collect()).unwrap()
}

#[test]
fn associative_operad_tables() {
    let op = as4();
    assert_eq!(op.sizes(), vec![1, 1, 2, 6, 24]);
    assert_eq!(op.gamma((2, 0), &[(1, 0), (1, 0)]).unwrap(), (2, 0));
    // gamma(21; 12, 1) swaps the blocks
    assert_eq!(op.gamma((2, 1), &[(2, 0), (1, 0)]).unwrap(), (3, rank(&[2, 3, 1])));
    assert_eq!(op.label((3, rank(&[2, 3, 1]))), "2 3 1");
    assert!(matches!(op.gamma((4, 0), &[(1, 0), (1, 0), (1, 0), (2, 0)]), Err(ncprop::Error::NotCovered(_))));
    let small = as_operad(1);
    assert_eq!(small.sizes(), vec![1, 1]);
    op.check_axioms().unwrap();
}

#[test]
fn operad_json_round_trip() {
    let op = as_operad(3);
    let json = serde_json::to_string(&op).unwrap();
    let back: SetOperad = serde_json::from_str(&json).unwrap();
    assert_eq!(back, op);
    assert_eq!(serde_json::to_string(&back).unwrap(), json);

    let mut value: serde_json::Value = serde_json::from_str(&json).unwrap();
    // break equivariance by swapping the action of the two elements of P(2)
    value["action"][2] = serde_json::json!([[0, 0], [1, 1]]);
    assert!(serde_json::from_value::<SetOperad>(value).is_err());
}

#[test]
fn fiber_translation() {
    let f = nc(4, &[&[3], &[], &[2, 4, 1]]);
    let m = nc_to_fp(&f);
    assert_eq!(m.omega()[2], rank(&[3, 1, 2]));
    assert_eq!(m.map().values(), &[3, 3, 1, 3]);
    assert_eq!(fp_to_nc(&m).unwrap(), f);
    assert_eq!(nc_to_fp(&NcMap::identity(3)), FPMorphism::identity(as4(), 3));
    for n in 0..=3 {
        for m in 0..=3 {
            for f in nc_maps(n, m) {
                assert_eq!(fp_to_nc(&nc_to_fp(&f)).unwrap(), f);
            }
        }
    }
}

/// The other candidate convention: `omega(k)` is the rank of the `k`-th
/// element of the ordered fiber.
fn nc_to_fp_ranks(f: &NcMap) -> FPMorphism {
    let as_op = as4();
    let omega = f
        .fibers()
        .iter()
        .map(|fiber| perm_rank(&fiber_permutation(fiber).inverse()))
        .collect();
    FPMorphism::new(as_op, f.underlying(), omega).unwrap()
}

#[test]
fn composition_agrees_with_noncommutative_sets() {
    let op = as4();
    let mut positions_convention_failures = 0;
    let mut ranks_convention_failures = 0;
    let mut cases = 0;
    for n in 0..=3 {
        for m in 0..=3 {
            for k in 0..=3 {
                for f in nc_maps(n, m) {
                    for g in nc_maps(m, k) {
                        let gf = g.compose(&f).unwrap();
                        if compose_fp(op, &nc_to_fp(&g), &nc_to_fp(&f)).unwrap() != nc_to_fp(&gf) {
                            positions_convention_failures += 1;
                        }
                        if compose_fp(op, &nc_to_fp_ranks(&g), &nc_to_fp_ranks(&f)).unwrap() != nc_to_fp_ranks(&gf) {
                            ranks_convention_failures += 1;
                        }
                        cases += 1;
                    }
                }
            }
        }
    }
    assert!(cases > 1000);
    assert_eq!(positions_convention_failures, 0);
    assert!(ranks_convention_failures > 0);
}

#[test]
fn commutative_operad_gives_plain_maps() {
    let com = com_operad(3);
    for n in 0..=3 {
        for m in 0..=3 {
            for k in 0..=3 {
                for f in set_maps(n, m) {
                    for g in set_maps(m, k) {
                        let lift = |h: &FinSetMap| FPMorphism::new(&com, h.clone(), vec![0; h.target_size()]).unwrap();
                        let composite = compose_fp(&com, &lift(&g), &lift(&f)).unwrap();
                        assert_eq!(composite, lift(&g.compose(&f).unwrap()));
                    }
                }
            }
        }
    }
}

#[test]
fn identities_and_coverage() {
    let op = as4();
    let f = nc_to_fp(&nc(3, &[&[2, 1], &[3]]));
    assert_eq!(compose_fp(op, &FPMorphism::identity(op, 2), &f).unwrap(), f);
    assert_eq!(compose_fp(op, &f, &FPMorphism::identity(op, 3)).unwrap(), f);
    let small = as_operad(2);
    let wide = FPMorphism::new(&small, FinSetMap::new(1, vec![1, 1]).unwrap(), vec![1]).unwrap();
    let wider = FPMorphism::new(&small, FinSetMap::new(2, vec![1, 1, 2]).unwrap(), vec![0, 0]).unwrap();
    assert!(matches!(compose_fp(&small, &wide, &wider), Err(ncprop::Error::NotCovered(_))));
    assert!(FPMorphism::new(&small, FinSetMap::new(1, vec![1, 1]).unwrap(), vec![2]).is_err());
}

#[test]
fn pullback_transports_twists() {
    let op = as4();
    let phi = nc_to_fp(&nc(3, &[&[3, 1], &[2]]));
    let id = FinSetMap::identity(2);
    let square = pullback_fp2(&id, &phi).unwrap();
    assert!(square.is_valid());
    assert_eq!(square.phi1.omega(), phi.omega());
    for t in 0..=3 {
        for f in set_maps(t, 2) {
            let square = pullback_fp2(&f, &phi).unwrap();
            assert!(square.is_valid());
            for ti in 1..=t {
                assert_eq!(square.phi1.fiber_size(ti), phi.fiber_size(f.apply(ti)));
            }
            square.phi1.validate(op).unwrap();
        }
    }
    assert!(pullback_fp2(&FinSetMap::identity(3), &phi).is_err());
}

#[test]
fn span_composition_agrees_with_fas2() {
    let op = as4();
    let mut checked = 0;
    for a in 0..=2 {
        for b in 0..=2 {
            for c in 0..=2 {
                let firsts = all_spans_up_to(DoubleKind::Fas2, a, b, 3);
                let seconds = all_spans_up_to(DoubleKind::Fas2, b, c, 3);
                for first in &firsts {
                    for second in &seconds {
                        let expected = compose_span(second, first).unwrap();
                        let fp = compose_span_fp2(op, &FpSpan::from_span(second).unwrap(), &FpSpan::from_span(first).unwrap());
                        let too_wide = expected.phi().fibers().iter().any(|f| f.len() > op.n_max());
                        let fp = match fp {
                            Ok(fp) => fp,
                            Err(ncprop::Error::NotCovered(_)) if too_wide => continue,
                            Err(e) => panic!("{e}"),
                        };
                        assert_eq!(fp.to_span().unwrap(), expected);
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 1000, "{checked}");
}

#[test]
fn free_elements_recover_words() {
    let op = as4();
    for x in 1..=2 {
        let mut seen = BTreeSet::new();
        for mid in 0..=4 {
            for s in all_spans(DoubleKind::Fas2, 1, x, mid) {
                let free = span_to_free(op, &FpSpan::from_span(&s).unwrap()).unwrap();
                let words = mon_words_of_span(&s).unwrap();
                assert_eq!(free.omega, (mid, 0));
                assert_eq!(free.tuple, words.words()[0]);
                assert!(seen.insert(free));
            }
        }
    }
    let e = FpSpan::identity(op, 1);
    assert_eq!(span_to_free(op, &e).unwrap().tuple, vec![1]);
    assert!(span_to_free(op, &FpSpan::identity(op, 2)).is_err());
}

#[test]
fn free_elements_over_the_commutative_operad_are_multisets() {
    let com = com_operad(4);
    let mut seen = BTreeSet::new();
    for mid in 0..=4 {
        for f in set_maps(mid, 2) {
            let s = FpSpan::new(
                FPMorphism::new(&com, FinSetMap::new(1, vec![1; mid]).unwrap(), vec![0]).unwrap(),
                f.clone(),
            )
            .unwrap();
            let free = span_to_free(&com, &s).unwrap();
            let mut sorted = f.values().to_vec();
            sorted.sort_unstable();
            assert_eq!(free.tuple, sorted);
            seen.insert(free);
        }
    }
    // multisets of size <= 4 over two letters
    assert_eq!(seen.len(), 1 + 2 + 3 + 4 + 5);
}

fn fp_map(n: usize, m: usize) -> impl Strategy<Value = FPMorphism> {
    (prop::collection::vec(1..=m.max(1), n), any::<prop::sample::Index>()).prop_map(move |(values, salt)| {
        let values: Vec<usize> = if m == 0 { Vec::new() } else { values };
        let f = FinSetMap::new(m, values).unwrap();
        let omega = (1..=m)
            .map(|i| {
                let s = f.fiber(i).len();
                salt.index(ncprop::enumerate::factorial(s))
            })
            .collect();
        FPMorphism::new(as4(), f, omega).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fp_composition_is_associative(
        (a, b, c) in (0usize..=2, 1usize..=2, 1usize..=2, 1usize..=2)
            .prop_flat_map(|(n, m, k, l)| (fp_map(n, m), fp_map(m, k), fp_map(k, l)))
    ) {
        let op = as4();
        let left = compose_fp(op, &compose_fp(op, &c, &b).unwrap(), &a).unwrap();
        let right = compose_fp(op, &c, &compose_fp(op, &b, &a).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn free_element_ignores_apex_labels(mid in 0usize..=4, values in prop::collection::vec(1usize..=3, 4), omega in 0usize..24, pi in 0usize..24) {
        let op = as4();
        let values = values[..mid].to_vec();
        let phi = FPMorphism::new(op, FinSetMap::new(1, vec![1; mid]).unwrap(), vec![omega % ncprop::enumerate::factorial(mid)]).unwrap();
        let s = FpSpan::new(phi, FinSetMap::new(3, values).unwrap()).unwrap();
        let relabeled = s.relabel(op, &perm_unrank(mid, pi % ncprop::enumerate::factorial(mid))).unwrap();
        prop_assert_eq!(span_to_free(op, &s).unwrap(), span_to_free(op, &relabeled).unwrap());
        prop_assert_eq!(s.to_span().unwrap(), relabeled.to_span().unwrap());
    }
}

#[test]
fn every_orbit_representative_is_reached() {
    let op = as4();
    for w in permutations(3) {
        let fe = FreeElement::canonical(op, 2, (3, perm_rank(&w)), &[1, 2, 2]).unwrap();
        assert_eq!(fe.omega, (3, 0));
    }
}
