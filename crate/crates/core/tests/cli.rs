use std::path::PathBuf;

use planarlat::cli::{parse_lattice, run, EXIT_INPUT, EXIT_OK, EXIT_PROPERTY};
use planarlat::fixtures;
use planarlat::lattice::is_isomorphic;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn planarlat(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("planarlat").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("planarlat-cli-{}-{name}", std::process::id()))
}

#[test]
fn check_s7() {
    let (code, out, _) = planarlat(&["check", &fixture("s7.lat")]);
    assert_eq!(code, EXIT_OK);
    for token in ["semimodular=true", "modular=false", "slim=true", "pairs=1"] {
        assert!(out.split_whitespace().any(|t| t == token), "{out}");
    }
}

#[test]
fn check_grid_is_all_true() {
    let (code, out, _) = planarlat(&["check", &fixture("c3xc3.lat")]);
    assert_eq!(code, EXIT_OK);
    assert!(!out.contains("=false"), "{out}");
    assert!(out.trim_end().ends_with("pairs=0"));
}

#[test]
fn check_require_fails_with_one() {
    let (code, _, err) = planarlat(&["check", &fixture("n5.lat"), "--require", "planar,semimodular"]);
    assert_eq!(code, EXIT_PROPERTY);
    assert!(err.contains("semimodular"));
    let (code, _, _) = planarlat(&["check", &fixture("n5.lat"), "--require", "shiny"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn expand_s7_gives_grid() {
    let (code, out, _) = planarlat(&["expand", &fixture("s7.lat")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("# final: 9 elements"));
    assert!(out.contains("# recognized: 3x3 grid"));
    let d = parse_lattice(&out).unwrap();
    assert!(is_isomorphic(&d, &fixtures::grid(3, 3)));
}

#[test]
fn expand_two_pair_both_orders() {
    let (_, first, _) = planarlat(&["expand", &fixture("two_pair.lat")]);
    let (code, second, _) = planarlat(&["expand", &fixture("two_pair.lat"), "--seed-order", "1"]);
    assert_eq!(code, EXIT_OK);
    for out in [&first, &second] {
        assert_eq!(out.matches("# step ").count(), 2);
        assert!(out.contains("# recognized: 5x5 grid"), "{out}");
    }
    let step0 = |s: &str| s.lines().next().unwrap().to_string();
    assert_ne!(step0(&first), step0(&second));
}

#[test]
fn expand_single_step() {
    let (code, out, _) = planarlat(&["expand", &fixture("two_pair.lat"), "--steps", "1"]);
    assert_eq!(code, EXIT_OK);
    let d = parse_lattice(&out).unwrap();
    assert_eq!(planarlat::cells::count_pairs(&d), 1);
}

#[test]
fn expand_rejects_non_slim() {
    let (code, _, err) = planarlat(&["expand", &fixture("s7_plus.lat")]);
    assert_eq!(code, EXIT_PROPERTY);
    assert!(err.contains("slim"));
}

#[test]
fn decompose_s7() {
    let (code, out, _) = planarlat(&["decompose", &fixture("s7.lat")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("B: 0,a1,a2,m\n"));
    assert!(out.contains("I-bridges: a1<b1 m<1\n"));
    let (code, _, _) = planarlat(&["decompose", &fixture("c3xc3.lat")]);
    assert_eq!(code, EXIT_PROPERTY);
}

#[test]
fn recognize() {
    let (code, out, _) = planarlat(&["recognize", &fixture("c3xc3.lat")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("grid: 3x3\n"));
    let (code, _, _) = planarlat(&["recognize", &fixture("s7.lat")]);
    assert_eq!(code, EXIT_PROPERTY);
}

#[test]
fn slim_and_add_eye() {
    let (code, out, _) = planarlat(&["slim", &fixture("s7_plus.lat")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("# eye ").count(), 3);
    assert!(is_isomorphic(&parse_lattice(&out).unwrap(), &fixtures::s7()));

    let (code, out, _) = planarlat(&["add-eye", &fixture("c3xc3.lat"), "--cell", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_lattice(&out).unwrap().len(), 10);
    let (code, _, err) = planarlat(&["add-eye", &fixture("c3xc3.lat"), "--cell", "9"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("4 cells"));
}

#[test]
fn export_dot() {
    let (code, out, _) = planarlat(&["export", &fixture("s7.lat")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("[label=").count(), 7);
    assert_eq!(out.matches("arrowhead=none").count(), 9);
    let (_, again, _) = planarlat(&["export", &fixture("s7.lat")]);
    assert_eq!(out, again);
    let (code, out, _) = planarlat(&["export", "--expand", &fixture("s7.lat")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("subgraph cluster").count(), 1);
}

#[test]
fn corpus_and_crosscheck() {
    let dir = temp("corpus");
    let (code, out, _) = planarlat(&["corpus", "--max", "6", "--out", dir.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("wrote 17 entries"), "{out}");
    assert!(dir.join("index.tsv").exists());
    std::fs::remove_dir_all(&dir).unwrap();

    let json = temp("crosscheck.json");
    let (code, out, _) = planarlat(&["crosscheck", "--n", "5", "--out", json.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("missing_from_corpus=0 extra_in_corpus=0"));
    assert!(std::fs::read_to_string(&json)
        .unwrap()
        .contains("\"planar_semimodular\""));
    std::fs::remove_file(json).unwrap();

    let (code, _, _) = planarlat(&["crosscheck", "--n", "99"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn input_errors_exit_two() {
    let bad = temp("bad.lat");
    std::fs::write(&bad, "n=3\n0: up=[1]\n1: up=[2\n2: up=[]\n").unwrap();
    let (code, _, err) = planarlat(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 3"), "{err}");
    std::fs::remove_file(bad).unwrap();

    let (code, _, err) = planarlat(&["check", "/nonexistent/x.lat"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("x.lat"));

    let (code, _, err) = planarlat(&["frobnicate"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("Usage"));

    let (code, _, err) = planarlat(&["check", "--colour", &fixture("s7.lat")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("Usage"));

    let (code, out, _) = planarlat(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("crosscheck"));
}
