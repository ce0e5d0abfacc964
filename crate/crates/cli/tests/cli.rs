use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const EDGE_BW: &str = "n 2\nc BW\ne 1 2\n";
const TRIANGLE: &str = "n 3\nc BBB\ne 1 2\ne 1 3\ne 2 3\n";

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Self {
            dir: TempDir::new().unwrap(),
        }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pressing-lab"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_all_on_edge() {
    let ws = Workspace::new();
    let g = ws.file("g.bcg", EDGE_BW);
    let o = run(&["verify", g.to_str().unwrap(), "1,2", "--method", "all"]);
    assert_eq!(stdout(&o), "true\ntrue\ntrue\ntrue\ntrue\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_rejects_with_witness() {
    let ws = Workspace::new();
    let g = ws.file("g.bcg", EDGE_BW);
    let o = run(&["verify", g.to_str().unwrap(), "2,1"]);
    assert_eq!(stdout(&o), "false witness=1\n");
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["verify", g.to_str().unwrap(), "2,1", "--method", "all"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().all(|l| l.starts_with("false")));
}

#[test]
fn verify_all_marks_inapplicable_psi() {
    let ws = Workspace::new();
    let g = ws.file("g.bcg", TRIANGLE);
    let o = run(&["verify", g.to_str().unwrap(), "2", "--method", "all"]);
    assert_eq!(stdout(&o), "true\ntrue\ntrue\ntrue\nn/a\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn count_enumerate_and_pi() {
    let ws = Workspace::new();
    let g = ws.file("t.bcg", TRIANGLE);
    let g = g.to_str().unwrap();
    let o = run(&["count", g]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("3\n", Some(0)));
    assert_eq!(stdout(&run(&["enumerate", g])), "1\n2\n3\n");
    assert_eq!(stdout(&run(&["enumerate", g, "--limit", "2"])), "1\n2\n");
    assert_eq!(stdout(&run(&["enumerate", g, "--count-only"])), "3\n");
    assert_eq!(
        stdout(&run(&["pi", g])),
        "0: 1\n1: 2\n2: 3\n0 1\n0 2\n1 2\n"
    );
    assert_eq!(stdout(&run(&["pi", g, "--count-only"])), "3 3\n");
    assert_eq!(stdout(&run(&["pi", g, "--check-connected"])), "true\n");
    let o = run(&["pi", g, "--max-edit", "1", "--check-connected"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("false\n", Some(1)));
}

#[test]
fn matrix_verbs() {
    let ws = Workspace::new();
    let e = ws.file("e.bcg", EDGE_BW);
    let e = e.to_str().unwrap();
    assert_eq!(stdout(&run(&["rank", e])), "2\n");
    assert_eq!(stdout(&run(&["minors", e])), "11\n");
    assert_eq!(stdout(&run(&["cholesky", e])), "2 2\n10\n11\n");
    let o = run(&["cholesky", e, "2"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("none\n", Some(1)));
}

#[test]
fn press_prints_resulting_graph() {
    let ws = Workspace::new();
    let e = ws.file("e.bcg", EDGE_BW);
    let e = e.to_str().unwrap();
    assert_eq!(stdout(&run(&["press", e, "1"])), "n 2\nc WB\n");
    assert_eq!(stdout(&run(&["press", e, "1,2"])), "n 2\nc WW\n");
    let o = run(&["press", e, "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("white vertex"));
}

#[test]
fn coloring_average_and_walk() {
    let ws = Workspace::new();
    let t = ws.file("t.bcg", TRIANGLE);
    let t = t.to_str().unwrap();
    let p = ws.file("p.bcg", "n 2\nc WW\ne 1 2\n");
    let p = p.to_str().unwrap();
    assert_eq!(stdout(&run(&["unique-coloring", p, "1,2"])), "BW\n");
    assert_eq!(stdout(&run(&["unique-coloring", p, "2,1"])), "WB\n");
    assert_eq!(stdout(&run(&["average", t])), "3/4\n");
    assert_eq!(stdout(&run(&["average", p])), "1/2\n");
    assert_eq!(stdout(&run(&["walk", t, "--steps", "0"])), "1\n");
    let a = stdout(&run(&["walk", t, "--steps", "40", "--seed", "5"]));
    assert_eq!(
        a,
        stdout(&run(&["walk", t, "--steps", "40", "--seed", "5"]))
    );
    let o = run(&["walk", p]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("none\n", Some(1)));
}

#[test]
fn uniquely_pressable_verb() {
    assert_eq!(
        stdout(&run(&["uniquely-pressable", "--n", "1"])),
        "n 1\nc B\n"
    );
    let o = run(&["uniquely-pressable", "--n", "4", "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    let count: usize = stdout(&o).trim().parse().unwrap();
    let listed = stdout(&run(&["uniquely-pressable", "--n", "4"]));
    assert_eq!(listed.matches("n 4\n").count(), count);
    assert_eq!(
        run(&["uniquely-pressable", "--n", "8"]).status.code(),
        Some(2)
    );
}

#[test]
fn bench_is_deterministic_apart_from_timings() {
    let strip = |s: String| -> Vec<String> {
        s.lines()
            .map(|l| l.split(" ns=").next().unwrap().to_owned())
            .collect()
    };
    let a = run(&["bench", "--n", "300", "--seed", "4"]);
    let b = run(&["bench", "--n", "300", "--seed", "4"]);
    assert_eq!(a.status.code(), Some(0));
    let lines = strip(stdout(&a));
    assert_eq!(lines, strip(stdout(&b)));
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("rank rank="));
    assert_eq!(lines[3], "cholesky ok");
    assert_eq!(run(&["bench", "--n", "1"]).status.code(), Some(0));
    assert_eq!(run(&["bench", "--n", "16385"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_2_with_line_numbers() {
    let ws = Workspace::new();
    let bad = ws.file("bad.bcg", "n 2\nc BW\ne 1 3\n");
    let o = run(&["count", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let missing = ws.dir.path().join("missing.bcg");
    assert_eq!(
        run(&["count", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let g = ws.file("g.bcg", EDGE_BW);
    let g = g.to_str().unwrap();
    assert_eq!(run(&["verify", g, "1,1"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", g, "1,2", "--method", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn flags_are_validated_before_reading_files() {
    let o = run(&["count", "/nonexistent/g.bcg", "--steps", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!stderr(&o).contains("No such file"));
}

#[test]
fn thread_cap_is_honored_and_validated() {
    let ws = Workspace::new();
    let t = ws.file("t.bcg", TRIANGLE);
    let out = Command::new(env!("CARGO_BIN_EXE_pressing-lab"))
        .args(["pi", t.to_str().unwrap(), "--count-only"])
        .env("PRESSING_LAB_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "3 3\n");
    let bad = Command::new(env!("CARGO_BIN_EXE_pressing-lab"))
        .args(["count", t.to_str().unwrap()])
        .env("PRESSING_LAB_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
