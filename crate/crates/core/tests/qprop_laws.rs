use itertools::Itertools;
use proptest::prelude::*;

use ncprop::doublecat::{pullback, DoubleKind};
use ncprop::enumerate::{nc_maps, permutations, plain_maps};
use ncprop::ncset::{NcMap, Permutation};
use ncprop::qprop::*;

/// Brute-force canonical form: the smallest relabeling of the apex over all
/// `mid!` bijections, after forgetting the orderings the kind ignores.
fn brute_normal_form(kind: DoubleKind, phi: &NcMap, f: &NcMap) -> (NcMap, NcMap) {
    let phi = kind.vertical(phi);
    let f = kind.horizontal(f);
    permutations(phi.source_size())
        .iter()
        .map(|h| {
            (
                kind.vertical(&phi.relabel_source(h.images())),
                kind.horizontal(&f.relabel_source(h.images())),
            )
        })
        .min()
        .unwrap()
}

fn legs(kind: DoubleKind, mid: usize, src: usize, dst: usize) -> (Vec<NcMap>, Vec<NcMap>) {
    let v = if kind.vertical_ordered() { nc_maps(mid, src) } else { plain_maps(mid, src) };
    let h = if kind.horizontal_ordered() { nc_maps(mid, dst) } else { plain_maps(mid, dst) };
    (v, h)
}

#[test]
fn normal_form_is_a_complete_invariant() {
    for kind in DoubleKind::ALL {
        for (src, dst, mid) in [(1, 1, 3), (2, 1, 3), (1, 2, 3), (2, 2, 3), (1, 1, 4), (2, 1, 4)] {
            let (vs, hs) = legs(kind, mid, src, dst);
            let mut fast = std::collections::BTreeMap::new();
            let mut slow = std::collections::BTreeMap::new();
            for (i, phi) in vs.iter().enumerate() {
                for (j, f) in hs.iter().enumerate() {
                    let s = Span::new(kind, phi.clone(), f.clone()).unwrap();
                    let b = brute_normal_form(kind, phi, f);
                    let class_fast = fast.entry(s).or_insert((i, j)).clone();
                    let class_slow = slow.entry(b).or_insert((i, j)).clone();
                    assert_eq!(class_fast, class_slow, "{kind:?} {phi:?} {f:?}");
                }
            }
            assert_eq!(fast.len(), slow.len());
        }
    }
}

#[test]
fn normalization_is_idempotent() {
    for kind in DoubleKind::ALL {
        for s in all_spans_up_to(kind, 2, 2, 3) {
            assert_eq!(Span::new(kind, s.phi().clone(), s.f().clone()).unwrap(), s);
        }
    }
}

#[test]
fn normal_form_relabeling_example() {
    let phi = NcMap::new(2, vec![vec![2, 1]]).unwrap();
    let f = NcMap::new(2, vec![vec![1, 2]]).unwrap();
    let s = normalize(DoubleKind::Fas, phi.clone(), f.clone()).unwrap();
    assert_eq!(s.phi().fibers(), &[vec![1, 2]]);
    assert_eq!(s.f().fibers(), &[vec![2, 1]]);
    assert_eq!(brute_normal_form(DoubleKind::Fas, &phi, &f), (s.phi().clone(), s.f().clone()));
}

#[test]
fn composition_is_associative() {
    for kind in DoubleKind::ALL {
        let spans: Vec<Vec<Vec<Span>>> = (0..=2)
            .map(|a| (0..=2).map(|b| all_spans_up_to(kind, a, b, 2)).collect())
            .collect();
        for v in (0..4).map(|_| 1..=2usize).multi_cartesian_product() {
            let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
            for x in &spans[a][b] {
                for y in &spans[b][c] {
                    let yx = y.after(x).unwrap();
                    for z in spans[c][d].iter().step_by(5) {
                        assert_eq!(z.after(&yx).unwrap(), z.after(y).unwrap().after(x).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn identity_spans_are_neutral() {
    for kind in DoubleKind::ALL {
        for s in all_spans_up_to(kind, 2, 2, 3) {
            assert_eq!(s.after(&Span::identity(kind, 2)).unwrap(), s);
            assert_eq!(Span::identity(kind, 2).after(&s).unwrap(), s);
        }
    }
}

#[test]
fn plain_composition_multiplies_matrices() {
    let two = qf_from_matrix(&NatMatrix::new(1, 1, vec![vec![2]]).unwrap());
    let three = qf_from_matrix(&NatMatrix::new(1, 1, vec![vec![3]]).unwrap());
    let six = two.after(&three).unwrap();
    assert_eq!(six.mid(), 6);
    assert_eq!(qf_to_matrix(&six).unwrap().entries(), &[vec![6]]);
}

#[test]
fn i_star_is_covariant_and_i_costar_contravariant() {
    for kind in DoubleKind::ALL {
        for (n, m, k) in (1..=3).map(|_| 1..=3).multi_cartesian_product().map(|v| (v[0], v[1], v[2])) {
            let hf = if kind.horizontal_ordered() { nc_maps(n, m) } else { plain_maps(n, m) };
            let hg = if kind.horizontal_ordered() { nc_maps(m, k) } else { plain_maps(m, k) };
            for f in hf.iter().step_by(3) {
                for g in hg.iter().step_by(3) {
                    let gf = g.compose(f).unwrap();
                    assert_eq!(
                        i_star(kind, &gf),
                        compose_span(&i_star(kind, g), &i_star(kind, f)).unwrap()
                    );
                }
            }
            let vf = if kind.vertical_ordered() { nc_maps(n, m) } else { plain_maps(n, m) };
            let vg = if kind.vertical_ordered() { nc_maps(m, k) } else { plain_maps(m, k) };
            for f in vf.iter().step_by(3) {
                for g in vg.iter().step_by(3) {
                    let gf = g.compose(f).unwrap();
                    assert_eq!(
                        i_costar(kind, &gf),
                        compose_span(&i_costar(kind, f), &i_costar(kind, g)).unwrap()
                    );
                }
            }
        }
        let id = NcMap::identity(2);
        assert_eq!(i_star(kind, &id), Span::identity(kind, 2));
        assert_eq!(i_costar(kind, &id), Span::identity(kind, 2));
    }
}

#[test]
fn zero_object_hom_sets_are_singletons() {
    for kind in DoubleKind::ALL {
        for n in 0..=3 {
            assert_eq!(all_spans_up_to(kind, n, 0, 3).len(), 1);
            assert_eq!(all_spans_up_to(kind, 0, n, 3).len(), 1);
            let (to, from) = zero_object_morphisms(kind, n, n);
            assert_eq!(all_spans_up_to(kind, n, 0, 3), vec![to]);
            assert_eq!(all_spans_up_to(kind, 0, n, 3), vec![from]);
        }
    }
}

#[test]
fn interchange_law() {
    for kind in [DoubleKind::Fas, DoubleKind::F] {
        let a11 = all_spans_up_to(kind, 1, 1, 2);
        let a12 = all_spans_up_to(kind, 1, 2, 2);
        let a21 = all_spans_up_to(kind, 2, 1, 2);
        for c in &a12 {
            for a in &a21 {
                for d in &a11 {
                    for b in &a11 {
                        let lhs = span_disjoint_union(a, b)
                            .unwrap()
                            .after(&span_disjoint_union(c, d).unwrap())
                            .unwrap();
                        let rhs = span_disjoint_union(&a.after(c).unwrap(), &b.after(d).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn endomorphism_round_trip() {
    for n in 1..=4 {
        for sigma in permutations(n) {
            let e = EndoPair::new(sigma);
            assert_eq!(endo_from_span(&endo_to_span(&e)).unwrap(), e);
        }
    }
    // every endomorphism of 1 is of the form (n, sigma)
    for mid in 0..=4 {
        for s in all_spans(DoubleKind::Fas, 1, 1, mid) {
            assert_eq!(endo_to_span(&endo_from_span(&s).unwrap()), s);
        }
    }
}

#[test]
fn phi_matches_span_composition_exhaustively() {
    for n in 1..=3 {
        for m in 1..=3 {
            for sigma in permutations(n) {
                for tau in permutations(m) {
                    let (a, b) = (EndoPair::new(sigma.clone()), EndoPair::new(tau.clone()));
                    let via_spans = endo_to_span(&a).after(&endo_to_span(&b)).unwrap();
                    assert_eq!(endo_from_span(&via_spans).unwrap(), a.after(&b));
                }
            }
        }
    }
}

#[test]
fn phi_alternative_description() {
    for n in 1..=3 {
        for m in 1..=3 {
            assert_eq!(
                transpose_perm(n, m),
                phi_compose(&Permutation::identity(n), &Permutation::identity(m))
            );
            for sigma in permutations(n) {
                for tau in permutations(m) {
                    let copies = vec![sigma.clone(); m];
                    let gamma = gamma_perm(&tau, &copies).unwrap();
                    assert_eq!(
                        phi_compose(&sigma, &tau),
                        transpose_perm(n, m).compose(&gamma).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn endo_monoid_is_associative() {
    let all: Vec<EndoPair> = (1..=3).flat_map(permutations).map(EndoPair::new).collect();
    for a in &all {
        assert_eq!(a.after(&EndoPair::identity()), *a);
        assert_eq!(EndoPair::identity().after(a), *a);
        for b in all.iter().filter(|b| b.n <= 2) {
            for c in all.iter().filter(|c| c.n <= 2) {
                assert_eq!(a.after(b).after(c), a.after(&b.after(c)));
            }
        }
    }
}

#[test]
fn block_square_for_endomorphisms_is_the_composition_pullback() {
    let sigma = Permutation::new(vec![2, 3, 1]).unwrap();
    let b = pullback(
        DoubleKind::Fas,
        &NcMap::fold(&Permutation::identity(2)),
        &NcMap::fold(&sigma),
    )
    .unwrap();
    assert_eq!(NcMap::fold(&Permutation::identity(3)).compose(&b.f1).unwrap(), NcMap::fold(&Permutation::identity(6)));
}

#[test]
fn matrix_functor_on_plain_spans() {
    for (n, m, k) in (1..=3).map(|_| 1..=3).multi_cartesian_product().map(|v| (v[0], v[1], v[2])) {
        let first = all_spans_up_to(DoubleKind::F, n, m, 2);
        let second = all_spans_up_to(DoubleKind::F, m, k, 2);
        for a in &first {
            let ma = qf_to_matrix(a).unwrap();
            assert_eq!(qf_from_matrix(&ma), *a);
            for b in &second {
                let mb = qf_to_matrix(b).unwrap();
                assert_eq!(qf_to_matrix(&b.after(a).unwrap()).unwrap(), mb.mul(&ma).unwrap());
            }
        }
    }
}

#[test]
fn forgetting_orders_is_compatible_with_matrices() {
    let spans = all_spans_up_to(DoubleKind::Fas, 2, 2, 3);
    let mut hit = std::collections::BTreeSet::new();
    for a in &spans {
        let ma = qf_to_matrix(&a.forget_to(DoubleKind::F)).unwrap();
        assert_eq!(ma, qfas_encode(a).unwrap().counts());
        hit.insert(ma.entries().to_vec());
        for b in spans.iter().step_by(7) {
            let mb = qf_to_matrix(&b.forget_to(DoubleKind::F)).unwrap();
            let composite = b.after(a).unwrap().forget_to(DoubleKind::F);
            assert_eq!(qf_to_matrix(&composite).unwrap(), mb.mul(&ma).unwrap());
        }
    }
    // every 2x2 matrix with entry sum at most 3 is reached
    let expected = (0..4).map(|_| 0..=3usize).multi_cartesian_product().filter(|v| v.iter().sum::<usize>() <= 3).count();
    assert_eq!(hit.len(), expected);
}

#[test]
fn word_and_qfas_encodings_round_trip() {
    for (n, m) in [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)] {
        for s in all_spans_up_to(DoubleKind::Fas2, n, m, 4) {
            assert_eq!(mon_span_of_words(&mon_words_of_span(&s).unwrap()), s);
        }
        let spans = all_spans_up_to(DoubleKind::Fas, n, m, 4);
        let mut codes = std::collections::HashSet::new();
        for s in &spans {
            let enc = qfas_encode(s).unwrap();
            assert_eq!(qfas_decode(&enc).unwrap(), *s);
            codes.insert(enc);
        }
        assert_eq!(codes.len(), spans.len());
    }
}

proptest! {
    #[test]
    fn shuffle_round_trip(word in prop::collection::vec(1usize..=3, 0..=8)) {
        let sh = word_to_shuffle(&word, 3).unwrap();
        prop_assert_eq!(shuffle_to_word(&sh), word);
        prop_assert!(Shuffle::new(sh.block_type().to_vec(), sh.images().to_vec()).is_ok());
    }

    #[test]
    fn relabeling_the_apex_does_not_change_the_normal_form(
        seed in 0usize..1000, kind_idx in 0usize..4, mid in 0usize..=5,
    ) {
        let kind = DoubleKind::ALL[kind_idx];
        let (vs, hs) = legs(kind, mid, 2, 2);
        let phi = &vs[seed % vs.len()];
        let f = &hs[(seed / 7) % hs.len()];
        let base = Span::new(kind, phi.clone(), f.clone()).unwrap();
        let perms = permutations(mid);
        let h = &perms[(seed / 3) % perms.len()];
        let moved = Span::new(kind, phi.relabel_source(h.images()), f.relabel_source(h.images())).unwrap();
        prop_assert_eq!(moved, base);
    }

    #[test]
    fn phi_closed_form_on_larger_pairs(
        n in 1usize..=5, m in 1usize..=5, a in any::<u64>(), b in any::<u64>(),
    ) {
        let sigma = ncprop::enumerate::perm_unrank(n, (a % ncprop::enumerate::factorial(n) as u64) as usize);
        let tau = ncprop::enumerate::perm_unrank(m, (b % ncprop::enumerate::factorial(m) as u64) as usize);
        let (x, y) = (EndoPair::new(sigma), EndoPair::new(tau));
        let via_spans = endo_to_span(&x).after(&endo_to_span(&y)).unwrap();
        prop_assert_eq!(endo_from_span(&via_spans).unwrap(), x.after(&y));
    }
}
