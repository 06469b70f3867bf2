use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const M3: &str = r#"{"name": "m3", "elements": ["0", "a", "b", "c", "1"],
  "covers": [["0","a"], ["0","b"], ["0","c"], ["a","1"], ["b","1"], ["c","1"]]}"#;

const CHAIN3: &str = r#"{"name": "chain3", "elements": ["0", "1", "2"], "covers": [["0","1"], ["1","2"]]}"#;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }
}

fn run(args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuzzy-lattice"))
        .args(args.iter().map(|a| a.as_ref()))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn fuzzy(lattice: &str, pairs: &[(&str, &str)]) -> String {
    let body: Vec<String> = pairs.iter().map(|(k, v)| format!("\"{k}\": \"{v}\"")).collect();
    format!("{{\"lattice\": \"{lattice}\", \"memberships\": {{{}}}}}", body.join(", "))
}

#[test]
fn validate_reports_distributivity() {
    let ws = Workspace::new();
    let m3 = ws.file("m3.json", M3);
    let out = run(&[&"validate", &m3]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("distributive: false, witness: (a,b,c)"));

    let chain4 = ws.file(
        "chain4.json",
        r#"{"name":"chain4","elements":["0","1","2","3"],"covers":[["0","1"],["1","2"],["2","3"]]}"#,
    );
    let out = run(&[&"validate", &chain4]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("distributive: true"));
    assert!(stdout(&out).contains("elements: 4"));
}

#[test]
fn validate_rejects_cycles_and_bad_json() {
    let ws = Workspace::new();
    let cyclic = ws.file(
        "cyclic.json",
        r#"{"name":"c","elements":["0","x","y","1"],"covers":[["0","x"],["x","y"],["y","x"],["y","1"]]}"#,
    );
    let out = run(&[&"validate", &cyclic]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cycle"));

    let broken = ws.file("broken.json", "{\"name\": ");
    assert_eq!(code(&run(&[&"validate", &broken])), 2);
    assert_eq!(code(&run(&[&"validate", &Path::new("/nonexistent/x.json")])), 2);
}

#[test]
fn classify_ladder() {
    let ws = Workspace::new();
    let m3 = ws.file("m3.json", M3);

    let upper = ws.file("upper.json", &fuzzy("m3", &[("0", "0"), ("a", "1"), ("b", "0"), ("c", "0"), ("1", "1")]));
    let out = run(&[&"classify", &m3, &upper]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "fuzzy-interval");

    let gap = ws.file("gap.json", &fuzzy("m3", &[("0", "1"), ("a", "1"), ("b", "1"), ("c", "0"), ("1", "1")]));
    let out = run(&[&"classify", &m3, &gap]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "fuzzy-sublattice\nnot fuzzy-convex-sublattice: witness (a,b,z=c)\n"
    );
    let out = run(&[&"classify", &"--format", &"json", &m3, &gap]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["class"], "fuzzy-sublattice");
    assert_eq!(v["witness"], "(a,b,z=c)");

    let spread = ws.file(
        "spread.json",
        &fuzzy("boolean2", &[("0", "0"), ("a", "1/3"), ("b", "2/3"), ("1", "1/5")]),
    );
    let out = run(&[&"classify", &"--fixture", &"boolean2", &spread]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "none\nnot fuzzy-sublattice: witness (a,b)\n");
}

#[test]
fn classify_rejects_mismatched_lattice() {
    let ws = Workspace::new();
    let m3 = ws.file("m3.json", M3);
    let other = ws.file("other.json", &fuzzy("chain3", &[("0", "1"), ("1", "1"), ("2", "1")]));
    assert_eq!(code(&run(&[&"classify", &m3, &other])), 2);
}

#[test]
fn op_join_of_chain_endpoints_is_constant_one() {
    let ws = Workspace::new();
    let chain3 = ws.file("chain3.json", CHAIN3);
    let low = ws.file("low.json", &fuzzy("chain3", &[("0", "1"), ("1", "0"), ("2", "0")]));
    let high = ws.file("high.json", &fuzzy("chain3", &[("0", "0"), ("1", "0"), ("2", "1")]));
    let out = run(&[&"op", &"join", &chain3, &low, &high]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"lattice": "chain3", "memberships": {"0": "1", "1": "1", "2": "1"}})
    );

    let out = run(&[&"op", &"join", &"--cuts", &chain3, &low, &high]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cuts"][0]["threshold"], "0");
    assert_eq!(v["cuts"].as_array().unwrap().last().unwrap()["cut"], "[0,2]");
}

#[test]
fn op_meet_with_constant_one_echoes_and_round_trips() {
    let ws = Workspace::new();
    let m3 = ws.file("m3.json", M3);
    let m = ws.file("m.json", &fuzzy("m3", &[("0", "0.25"), ("a", "1/2"), ("b", "1/4"), ("c", "1/4"), ("1", "2/4")]));
    let one = ws.file("one.json", &fuzzy("m3", &[("0", "1"), ("a", "1"), ("b", "1"), ("c", "1"), ("1", "1")]));
    let out = run(&[&"op", &"meet", &m3, &m, &one]);
    assert_eq!(code(&out), 0);
    let first = stdout(&out);
    assert!(first.contains("\"0\": \"1/4\""));
    assert!(first.contains("\"1\": \"1/2\""));

    let echoed = ws.file("echoed.json", &first);
    let again = run(&[&"op", &"meet", &m3, &echoed, &one]);
    assert_eq!(stdout(&again), first);
}

#[test]
fn op_rejects_non_intervals_and_mismatches() {
    let ws = Workspace::new();
    let m3 = ws.file("m3.json", M3);
    let gap = ws.file("gap.json", &fuzzy("m3", &[("0", "1"), ("a", "1"), ("b", "1"), ("c", "0"), ("1", "1")]));
    let one = ws.file("one.json", &fuzzy("m3", &[("0", "1"), ("a", "1"), ("b", "1"), ("c", "1"), ("1", "1")]));
    let out = run(&[&"op", &"meet", &m3, &gap, &one]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("fuzzy-sublattice"));

    let other = ws.file("other.json", &fuzzy("chain3", &[("0", "1"), ("1", "1"), ("2", "1")]));
    assert_eq!(code(&run(&[&"op", &"join", &m3, &one, &other])), 2);
}

#[test]
fn laws_exit_status_follows_asserted_laws() {
    let out = run(&[&"laws", &"--fixture", &"m3", &"--grades", &"0,1/2,1", &"--suite", &"axioms"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let out = run(&[&"laws", &"--fixture", &"n5", &"--grades", &"0,1", &"--suite", &"distributivity", &"--format", &"json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "distributivity");
    assert_eq!(v["checks"][0]["status"], "fail");
    assert_eq!(v["checks"][0]["asserted"], false);
    assert!(v["checks"][0]["witness"].is_array());

    // asserted on a distributive reference lattice, where a counterexample exists
    let out = run(&[&"laws", &"--fixture", &"chain3", &"--grades", &"0,1/2,1", &"--suite", &"distributivity"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("asserted law failures"));
}

#[test]
fn laws_sampling_is_reported() {
    let out = run(&[
        &"laws", &"--fixture", &"chain3", &"--suite", &"axioms", &"--budget", &"1000", &"--format", &"json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let assoc = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["law"] == "associativity(meet)")
        .unwrap();
    assert_eq!(assoc["mode"], "sampled");
    assert_eq!(assoc["checked"], 1000);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&[&"laws", &"--fixture", &"m3", &"--bogus"])), 2);
    assert_eq!(code(&run(&[&"laws", &"--fixture", &"m3", &"--suite", &"nope"])), 2);
    assert_eq!(code(&run(&[&"laws", &"--fixture", &"m3", &"--grades", &"1/2,1"])), 2);
    assert_eq!(code(&run(&[&"laws", &"--fixture", &"m3", &"--budget", &"0"])), 2);
    assert_eq!(code(&run(&[&"validate", &"--fixture", &"m4"])), 2);
    assert_eq!(code(&run(&[&"validate"])), 2);
}

#[test]
fn enumerate_lists_intervals() {
    let out = run(&[&"enumerate", &"--fixture", &"chain2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "count: 4\n∅\n[0,0]\n[0,1]\n[1,1]\n");

    let out = run(&[&"enumerate", &"--fixture", &"chain2", &"--grades", &"0,1/2,1", &"--format", &"json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 9);
    assert_eq!(v["grades"], serde_json::json!(["0", "1/2", "1"]));
}
