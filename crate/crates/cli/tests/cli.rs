use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mrank"))
}

fn graph(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../graphs")
        .join(name);
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn rank_p4_json_golden() {
    let out = run(&["rank", &graph("p4.el"), "--json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"rank":2,"method":"tree","witness":[0,3]}"#
    );
}

#[test]
fn hull_c5_golden() {
    let out = run(&["hull", &graph("c5.el"), "-s", "0,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0 1 2 3 4");
}

#[test]
fn decompose_k3pendant_golden() {
    let out = run(&["decompose", &graph("k3pendant.el")]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.contains("border:")));
    assert!(lines[0].contains("0 1 2"));
    assert!(lines[1].contains("0 3"));
}

#[test]
fn decompose_json_schema() {
    let out = run(&["decompose", &graph("k3pendant.el"), "--json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let atoms = doc["atoms"].as_array().unwrap();
    assert_eq!(atoms.len(), 2);
    for a in atoms {
        assert!(a["vertices"].is_array());
        assert!(a["border"].is_array());
        assert!(a["petal"].is_boolean());
    }
}

#[test]
fn interval_differs_from_hull_on_c5_pendant() {
    // one interval step of {5,2} picks up the chordless paths, the hull
    // closes all the way to V
    let dir = std::env::temp_dir().join("mrank-cli-test-c5p");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("c5p.el");
    std::fs::write(&file, "6 6\n0 1\n0 4\n0 5\n1 2\n2 3\n3 4\n").unwrap();
    let f = file.to_str().unwrap();
    let one = run(&["interval", f, "-s", "2,5"]);
    let all = run(&["hull", f, "-s", "2,5"]);
    assert_eq!(stdout(&one).trim(), "0 1 2 3 4 5");
    assert_eq!(stdout(&all).trim(), "0 1 2 3 4 5");
    let pair = run(&["interval", f, "-s", "0,2"]);
    assert_eq!(stdout(&pair).trim(), "0 1 2 3 4");
}

#[test]
fn convex_and_independent_checks() {
    let out = run(&["convex-check", &graph("c5.el"), "-s", "0,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "true");
    let out = run(&["convex-check", &graph("c5.el"), "-s", "0,2"]);
    assert_eq!(stdout(&out).trim(), "false");
    let out = run(&["check-independent", &graph("c5.el"), "-s", "0,2", "--json"]);
    assert_eq!(stdout(&out).trim(), r#"{"independent":true}"#);
}

#[test]
fn rank_methods_agree_on_c5() {
    for method in ["auto", "brute", "flower", "gamma1", "line"] {
        let out = run(&["rank", &graph("c5.el"), "--method", method, "--quiet"]);
        assert!(out.status.success(), "{method}");
        assert_eq!(stdout(&out).trim(), "2", "{method}");
    }
}

#[test]
fn wrong_class_is_a_domain_error() {
    let out = run(&["rank", &graph("c5.el"), "--method", "tree"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["rank", &graph("c5.el"), "--method", "split"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["hull", &graph("c5.el"), "-s", "0,x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["rank", &graph("c5.el"), "--method", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_and_bad_vertex_exit_1() {
    let out = run(&["rank", "/nonexistent/g.el"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["hull", &graph("c5.el"), "-s", "0,9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_random_is_deterministic() {
    let args = ["gen", "random", "tree", "--n", "12", "--seed", "7", "--count", "3"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("12 11"));
}

#[test]
fn gen_npc_gadget_shape() {
    let dir = std::env::temp_dir().join("mrank-cli-test-k2");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("k2.el");
    std::fs::write(&file, "2 1\n0 1\n").unwrap();
    let out = run(&["gen", "npc-gadget", file.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["n"], 18);
    assert_eq!(doc["threshold"], 16);
    assert_eq!(doc["legend"].as_object().unwrap().len(), 18);
}

#[test]
fn gen_split_reduction_plain_output_parses_back() {
    let dir = std::env::temp_dir().join("mrank-cli-test-split");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("split.el");
    // C = {0,1}, I = {2,3}
    std::fs::write(&file, "4 3\n0 1\n0 2\n1 3\n").unwrap();
    let out = run(&["gen", "split-reduction", file.to_str().unwrap(), "--quiet"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4 2\n0 2\n1 3\n");
}

#[test]
fn selftest_single_suite() {
    let out = run(&["selftest", "--suite", "meta", "--max-n", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("suite meta: PASS"));
    let out = run(&["selftest", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}
