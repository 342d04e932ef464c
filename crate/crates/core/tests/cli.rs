use std::path::PathBuf;

use serde::Serialize;
use tempfile::TempDir;

use ncprop::cli::run;
use ncprop::doublecat::DoubleKind;
use ncprop::ncset::{FinSetMap, NcMap, Permutation};
use ncprop::operad::nc_to_fp;
use ncprop::qprop::{all_spans, endo_to_span, EndoPair, Span, WordTuple};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn ncprop(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ncprop").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write_json<T: Serialize>(dir: &TempDir, name: &str, value: &T) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path
}

fn write_text(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

fn nc(n: usize, fibers: &[&[usize]]) -> NcMap {
    NcMap::new(n, fibers.iter().map(|f| f.to_vec()).collect()).unwrap()
}

#[test]
fn phi_prints_one_line() {
    let r = ncprop(&["phi", "--sigma", "1 2", "--tau", "1 2"]);
    assert_eq!((r.code, r.out.as_str()), (0, "1 3 2 4\n"));
    let r = ncprop(&["phi", "--sigma", "2 1", "--tau", "1 3 2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out.split_whitespace().count(), 6);
}

#[test]
fn psi_squares_the_group_element_of_c2() {
    let r = ncprop(&["psi", "--algebra", "c2", "-n", "2", "--sigma", "1 2"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "1 1\n0 0\n");
    let r = ncprop(&["psi", "--algebra", "c2", "-n", "2", "--format", "json"]);
    assert_eq!(r.out, "[[\"1\",\"1\"],[\"0\",\"0\"]]\n");
    let r = ncprop(&["psi", "--algebra", "c2", "-n", "3", "--sigma", "1 2"]);
    assert_eq!(r.code, 2);
    assert!(r.err.starts_with("error:"));
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = write_text(&dir, "bad.json", "{\"n\": 2");
    for args in [
        vec!["phi", "--sigma", "1 1", "--tau", "1"],
        vec!["phi", "--sigma", "a", "--tau", "1"],
        vec!["psi", "--algebra", "nope", "-n", "2"],
        vec!["eval", "--algebra", "c2", s(&bad)],
        vec!["compose", "--cat", "fas", s(&bad), s(&bad)],
        vec!["check", "--suite", "nope"],
        vec!["check", "--bound", "phi_n"],
        vec!["check", "--bound", "depth=3"],
        vec!["frobnicate"],
    ] {
        let r = ncprop(&args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(!r.err.is_empty());
        assert!(r.out.is_empty());
    }
}

#[test]
fn compose_in_every_category() {
    let dir = TempDir::new().unwrap();
    let f = nc(3, &[&[2, 1], &[3]]);
    let g = nc(2, &[&[], &[2, 1]]);
    let (a, b) = (write_json(&dir, "a.json", &f), write_json(&dir, "b.json", &g));
    let r = ncprop(&["compose", "--cat", "fas", s(&a), s(&b)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.trim(), serde_json::to_string(&g.compose(&f).unwrap()).unwrap());
    assert_eq!(ncprop(&["compose", "--cat", "fas", s(&b), s(&a)]).code, 2);

    let (pa, pb) = (f.underlying(), g.underlying());
    let (a, b) = (write_json(&dir, "pa.json", &pa), write_json(&dir, "pb.json", &pb));
    let r = ncprop(&["compose", "--cat", "f", s(&a), s(&b)]);
    let composite: FinSetMap = serde_json::from_str(&r.out).unwrap();
    assert_eq!(composite, pb.compose(&pa).unwrap());

    let (x, y) = (nc_to_fp(&f), nc_to_fp(&g));
    let (a, b) = (write_json(&dir, "fa.json", &x), write_json(&dir, "fb.json", &y));
    let r = ncprop(&["compose", "--cat", "fp", s(&a), s(&b)]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.trim(), serde_json::to_string(&nc_to_fp(&g.compose(&f).unwrap())).unwrap());

    let e1 = EndoPair::new(Permutation::new(vec![2, 1]).unwrap());
    let e2 = EndoPair::new(Permutation::new(vec![1, 3, 2]).unwrap());
    let (a, b) = (write_json(&dir, "ea.json", &e1), write_json(&dir, "eb.json", &e2));
    let r = ncprop(&["compose", "--cat", "mon", s(&a), s(&b)]);
    let composite: EndoPair = serde_json::from_str(&r.out).unwrap();
    assert_eq!(composite, e2.after(&e1));

    let (a, b) = (
        write_json(&dir, "sa.json", &endo_to_span(&e1)),
        write_json(&dir, "sb.json", &endo_to_span(&e2)),
    );
    let r = ncprop(&["compose", "--cat", "q-fas", s(&a), s(&b)]);
    let composite: Span = serde_json::from_str(&r.out).unwrap();
    assert_eq!(composite, endo_to_span(&e2.after(&e1)));
    let r = ncprop(&["compose", "--cat", "q-f", s(&a), s(&b)]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("kind"), "{}", r.err);
}

#[test]
fn eval_writes_json_and_csv() {
    let dir = TempDir::new().unwrap();
    let mult = Span::new(DoubleKind::Fas, NcMap::identity(2), nc(2, &[&[1, 2]])).unwrap();
    let path = write_json(&dir, "mu.json", &mult);
    let r = ncprop(&["eval", "--algebra", "c2", s(&path), "--format", "csv"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "1,0,0,1\n0,1,1,0\n");
    let r = ncprop(&["eval", "--algebra", "c2", s(&path)]);
    assert_eq!(r.out, "[[\"1\",\"0\",\"0\",\"1\"],[\"0\",\"1\",\"1\",\"0\"]]\n");
    let r = ncprop(&["eval", "--algebra", "nonbialg", s(&path)]);
    assert_eq!(r.code, 2);
}

#[test]
fn encodings_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("matrix", DoubleKind::F),
        ("words", DoubleKind::Fas2),
        ("qfas", DoubleKind::Fas),
    ];
    for (scheme, kind) in cases {
        for span in all_spans(kind, 1, 2, 3).into_iter().step_by(5) {
            let input = write_json(&dir, "span.json", &span);
            let enc = ncprop(&["encode", "--scheme", scheme, s(&input)]);
            assert_eq!(enc.code, 0, "{scheme}: {}", enc.err);
            let encoded = write_text(&dir, "enc.json", &enc.out);
            let dec = ncprop(&["decode", "--scheme", scheme, s(&encoded)]);
            assert_eq!(dec.code, 0, "{scheme}: {}", dec.err);
            let back: Span = serde_json::from_str(&dec.out).unwrap();
            assert_eq!(back, span, "{scheme}");
        }
    }
}

#[test]
fn shuffle_scheme_reproduces_the_example_word() {
    let dir = TempDir::new().unwrap();
    let words = WordTuple::new(2, vec![vec![1, 1, 2, 1, 2, 2, 2, 1, 1]]).unwrap();
    let input = write_json(&dir, "words.json", &words);
    let r = ncprop(&["encode", "--scheme", "shuffle", s(&input)]);
    assert_eq!(r.out, "[{\"type\":[5,4],\"images\":[1,2,4,8,9,3,5,6,7]}]\n");
    let encoded = write_text(&dir, "shuffles.json", &r.out);
    let r = ncprop(&["decode", "--scheme", "shuffle", s(&encoded)]);
    let back: WordTuple = serde_json::from_str(&r.out).unwrap();
    assert_eq!(back, words);
}

#[test]
fn check_reports_one_line_per_suite() {
    let r = ncprop(&["check", "--suite", "phi"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "SUITE phi PASS (416/416 cases)\n");
    let r = ncprop(&["check", "--suite", "axioms", "--verbose"]);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("SUITE axioms PASS"));
    assert!(r.out.contains("CRITERION 12 axioms PASS"));
    let again = ncprop(&["check", "--suite", "axioms", "--verbose"]);
    assert_eq!(again.out.lines().next(), r.out.lines().next());
}

#[test]
fn check_exits_with_one_when_a_suite_fails() {
    let r = ncprop(&[
        "check",
        "--suite",
        "mackey",
        "--bound",
        "mackey_size=2",
        "--bound",
        "injection_m=2",
        "-v",
    ]);
    assert_eq!(r.code, 1, "{}", r.out);
    assert!(r.out.starts_with("SUITE mackey FAIL"));
    assert!(r.out.contains("CRITERION  4 mackey PASS"));
    assert!(r.out.contains("mismatch: nonbialg"));
}

#[test]
fn output_is_deterministic() {
    let a = ncprop(&["psi", "--algebra", "s3", "-n", "3", "--sigma", "2 3 1", "--format", "csv"]);
    let b = ncprop(&["psi", "--algebra", "s3", "-n", "3", "--sigma", "2 3 1", "--format", "csv"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
}
