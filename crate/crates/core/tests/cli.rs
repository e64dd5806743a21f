use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

static COUNTER: AtomicUsize = AtomicUsize::new(0);

const PATH: &str = "# a path on three vertices\nvertices: a b c\nedges: a-b\n";

fn graph_file(text: &str) -> PathBuf {
    let n = COUNTER.fetch_add(1, Ordering::SeqCst);
    let path = std::env::temp_dir().join(format!("raag-cli-{}-{n}.graph", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn run_on(graph: &str, args: &[&str]) -> (i32, String, String) {
    let path = graph_file(graph);
    let mut argv = vec!["raag".to_string(), "--graph".into(), path.display().to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = raag::cli::run(argv, &mut out, &mut err);
    std::fs::remove_file(&path).ok();
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_on(PATH, args)
}

#[test]
fn normalize_group_word() {
    assert_eq!(run(&["normalize", "+a +b -a"]), (0, "b^1\n".into(), String::new()));
    assert_eq!(run(&["normalize", "+c +a -c"]).1, "c^1.a^1.c^-1\n");
    assert_eq!(run(&["normalize", "1"]).1, "1\n");
    assert_eq!(run(&["normalize", "+b +a +a"]).1, "a^2.b^1\n");
}

#[test]
fn normalize_singular_word_succeeds() {
    let (code, out, _) = run(&["normalize", "~b ~a"]);
    assert_eq!(code, 0);
    assert!(!out.trim().is_empty());
    assert_eq!(out, run(&["normalize", "~a ~b"]).1);
}

#[test]
fn equality_decisions() {
    assert_eq!(run(&["eq", "~a ~b", "~b ~a"]), (0, "true\n".into(), String::new()));
    assert_eq!(run(&["eq", "~a ~c", "~c ~a"]), (1, "false\n".into(), String::new()));
    assert_eq!(run(&["eq", "+a ~a -a", "~a"]).0, 0);
    assert_eq!(run(&["eq", "+c ~a -c", "~a"]).0, 1);
}

#[test]
fn commute_decisions() {
    assert_eq!(run(&["commute", "+a", "~b"]).1, "true\n");
    assert_eq!(run(&["commute", "~a", "+c"]), (1, "false\n".into(), String::new()));
}

#[test]
fn theta_and_ord() {
    assert_eq!(run(&["theta", "~a -b"]).1, "a^1.b^-1\n");
    assert_eq!(run(&["ord", "~a +b ~c ~c"]).1, "3\n");
    assert_eq!(run(&["ord", "+a"]).1, "0\n");
}

#[test]
fn eta_outputs() {
    assert_eq!(run(&["eta", "~a"]).1, "+1*[a^1] -1*[a^-1]\n");
    assert_eq!(run(&["eta", "~a ~a"]).1, "-2*[1] +1*[a^2] +1*[a^-2]\n");
    assert_eq!(run(&["eta-trunc", "--cutoff", "5", "!a"]).1, "1: -1*[a^1]\n3: -1*[a^3]\n5: -1*[a^5]\n");
    assert_eq!(run(&["eta-trunc", "--cutoff", "4", "~a !a"]).1, "0: +1*[1]\n");
    assert_eq!(run(&["eta-trunc", "--cutoff", "3", "~a"]).1, "-1: -1*[a^-1]\n1: +1*[a^1]\n");
}

#[test]
fn ribbon_and_frz() {
    assert_eq!(run(&["ribbon", "--s", "a", "--t", "a", "+b"]).1, "true\n");
    assert_eq!(run(&["ribbon", "--s", "a", "--t", "b", "+c"]).0, 1);
    assert_eq!(run(&["frz", "--family", "tau", "--s", "c", "--t", "c", "--k", "2", "+c"]).1, "true\n");
    assert_eq!(run(&["frz", "--family", "sigma", "--s", "a", "--t", "a", "--k", "-2", "+c"]).0, 1);
}

#[test]
fn scans() {
    assert_eq!(run(&["birman-scan", "--max-len", "1"]), (0, "words: 10\ndistinct: 10\ncollisions: 0\n".into(), String::new()));
    let (code, out, _) = run(&["nf-orbit-check", "--max-syll", "2", "--max-exp", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.ends_with("violations 0")));
    assert_eq!(run(&["lemma42-scan", "--max-l", "2", "--max-p", "2"]).0, 0);
}

#[test]
fn errors_exit_two() {
    let (code, _, err) = run_on("vertices: a b\nedges: a-c\n", &["normalize", "+a"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2: undeclared endpoint c"), "{err}");
    assert_eq!(run(&["normalize", "+z"]).0, 2);
    assert_eq!(run(&["eq", "!a", "1"]).0, 2);
    assert_eq!(run(&["eta-trunc", "--cutoff", "1", "!a !a"]).0, 2);
    assert_eq!(run(&["ribbon", "--s", "a", "--t", "a", "~b"]).0, 2);
    assert_eq!(run(&["frz", "--family", "tau", "--s", "a", "--t", "a", "--k", "-1", "1"]).0, 2);
    assert_eq!(run(&["lemma42-scan", "--max-l", "2", "--max-p", "0"]).0, 2);
    assert_eq!(run(&["nf-orbit-check", "--max-syll", "7", "--max-exp", "1"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let mut err = Vec::new();
    let code = raag::cli::run(["raag", "--graph", "/nonexistent/g", "ord", "1"], &mut Vec::new(), &mut err);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_zero() {
    let mut out = Vec::new();
    assert_eq!(raag::cli::run(["raag", "--help"], &mut out, &mut Vec::new()), 0);
    assert!(String::from_utf8(out).unwrap().contains("normalize"));
}
