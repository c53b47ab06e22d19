use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

const SIX: &str = "elements: x y z a b c
x > a
x > b
y > b
y > c
z > a
z > c
";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_posetdim"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dim_prints_a_checkable_realizer() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.txt", SIX);
    let out = run(&["dim", &p]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("dimension: 3"));
    let orders: Vec<String> = lines
        .enumerate()
        .map(|(i, l)| {
            write(
                &dir,
                &format!("l{i}.txt"),
                &format!("elements: x y z a b c\n{l}\n"),
            )
        })
        .collect();
    assert_eq!(orders.len(), 3);

    // the printed orders feed straight back into `decompose`
    let mut args = vec!["decompose", p.as_str()];
    args.extend(orders.iter().map(String::as_str));
    let out = run(&args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout(&out).matches("---").count(), 2);
}

#[test]
fn fold_output_realizes_back_through_stdin() {
    let fold = run_stdin(&["fold", "-"], SIX);
    assert_eq!(fold.status.code(), Some(0));
    let text = stdout(&fold);
    assert!(text.starts_with("# fold number: 3\n"));

    let realized = run_stdin(&["realize", "-"], &text);
    assert_eq!(realized.status.code(), Some(0));
    assert!(stdout(&realized).lines().count() <= 3);
}

#[test]
fn dim2_reports_none_without_a_conjugate() {
    let out = run_stdin(&["dim2", "-"], SIX);
    assert_eq!(stdout(&out), "none\n");
    let out = run_stdin(&["dim2", "-"], "elements: x y z\nx > y\n");
    assert_eq!(stdout(&out), "elements: x y z\nx > z\ny > z\n");
}

#[test]
fn closure_flag_and_closure_command() {
    let chain = "elements: x y z\nx > y\ny > z\n";
    assert_eq!(run_stdin(&["dim", "-"], chain).status.code(), Some(2));
    let out = run_stdin(&["--close", "dim", "-"], chain);
    assert_eq!(stdout(&out), "dimension: 1\nx > y > z\n");
    let out = run_stdin(&["closure", "-"], chain);
    assert_eq!(stdout(&out), "elements: x y z\nx > y\nx > z\ny > z\n");
}

#[test]
fn check_classifies_without_validating() {
    let out = run_stdin(&["check", "-"], "elements: x y\nx > y\ny > x\n");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("antisymmetric: no\n"));
    assert!(text.contains("quasi-order: yes\n"));
    assert!(text.contains("partial order: no\n"));
}

#[test]
fn pareto_and_min_profile_round_trip() {
    let profile = "elements: x y z\nagent 1: x y z\nagent 2: z x y\n";
    let dom = run_stdin(&["pareto", "-"], profile);
    assert_eq!(stdout(&dom), "elements: x y z\nx > y\n");
    let min = run_stdin(&["min-profile", "-"], &stdout(&dom));
    let back = run_stdin(&["pareto", "-"], &stdout(&min));
    assert_eq!(stdout(&back), stdout(&dom));

    let ties = run_stdin(&["pareto", "-"], "elements: x y\nagent 1: x = y\n");
    assert_eq!(ties.status.code(), Some(2));
}

#[test]
fn dot_lists_hasse_edges() {
    let out = run_stdin(&["--close", "dot", "-"], "elements: x y z\nx > y > z\n");
    assert_eq!(
        stdout(&out),
        "digraph poset {\n    rankdir=TB;\n    \"x\";\n    \"y\";\n    \"z\";\n    \"x\" -> \"y\";\n    \"y\" -> \"z\";\n}\n"
    );
}

#[test]
fn input_errors_exit_two() {
    let out = run_stdin(&["dim", "-"], "elements: x\nx > q\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("absent.txt");
    assert_eq!(run(&["dim", path_str(&missing)]).status.code(), Some(2));
    assert_eq!(run(&["verify", "9"]).status.code(), Some(2));
}

#[test]
fn invalid_sequence_is_a_check_failure() {
    // (x > y) then (y > x): the union is not an order
    let out = run_stdin(&["realize", "-"], "elements: x y\nx > y\n---\ny > x\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_is_byte_identical_across_runs_and_workers() {
    let a = run(&["verify", "4", "--workers", "1"]);
    let b = run(&["verify", "4", "--workers", "1"]);
    let c = run(&["verify", "4", "--workers", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(stdout(&a).contains("posets: 219\n"));
    assert!(stdout(&a).ends_with("result: pass\n"));
}
