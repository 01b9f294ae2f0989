use std::path::{Path, PathBuf};
use std::process::Command;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/fixtures")
        .join(name)
}

/// `(stdout, stderr, status)`
fn lring(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_lring")).args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn write_instance(dir: &tempfile::TempDir, json: &str) -> String {
    let path = dir.path().join("inst.json");
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn validate_setup_a() {
    let f = fixture("setup_a.json");
    let (out, _, code) = lring(&["validate", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "lattice chain3: chain, Heyting\n\
         ring Z4: 4 elements\n\
         mu: 0↦t 1↦t 2↦t 3↦t\n\
         eta0: ideal, not prime, not semiprime, primary\n\
         eta2: ideal, prime, semiprime, primary\n\
         pair (eta0, eta2): summable\n"
    );
}

#[test]
fn compute_setup_a() {
    let f = fixture("setup_a.json");
    let f = f.to_str().unwrap();
    let (out, _, code) = lring(&["compute", f, "radical", "--ideal", "eta0"]);
    assert_eq!((out.as_str(), code), ("0↦t 1↦m 2↦t 3↦m\n", 0));
    let (out, _, _) = lring(&["compute", f, "cut", "--ideal", "eta2", "--level", "t"]);
    assert_eq!(out, "{0, 2}\n");
    let (out, _, _) = lring(&["compute", f, "cut", "--ideal", "eta2", "--level", "m", "--strong"]);
    assert_eq!(out, "{0, 2}\n");
    let (out, _, _) = lring(&["compute", f, "prime-radical", "--ideal", "mu"]);
    assert_eq!(out, "0↦t 1↦t 2↦t 3↦t\n");
    let (out, _, _) = lring(&["compute", f, "sum", "--ideal", "eta0", "--other", "eta2"]);
    assert_eq!(out, "0↦t 1↦m 2↦t 3↦m\n");
}

#[test]
fn decompose_setup_b_is_reduced() {
    let f = fixture("setup_b.json");
    let (out, _, code) = lring(&["decompose", f.to_str().unwrap(), "--ideal", "eta", "--require-reduced"]);
    assert_eq!(code, 0);
    assert!(out.starts_with(
        "target eta: 0↦t 1↦b 2↦b 3↦b 4↦b 5↦b\n\
         factor 1: 0↦t 1↦b 2↦b 3↦t 4↦b 5↦b\n\
         factor 2: 0↦t 1↦b 2↦t 3↦b 4↦t 5↦b\n\
         intersection: equals target\n\
         reduced: yes\n"
    ));
}

#[test]
fn decompose_mu_is_unavailable() {
    let f = fixture("setup_b.json");
    let (_, err, code) = lring(&["decompose", f.to_str().unwrap(), "--ideal", "mu"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn subset_outside_mu_names_the_element() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_instance(
        &dir,
        r#"{"lattice":{"chain":["b","t"]},"ring":{"zn":4},
            "subsets":{"mu":["t","b","t","b"],"eta":["t","t","b","b"]}}"#,
    );
    let (_, err, code) = lring(&["validate", &f]);
    assert_eq!(code, 1);
    assert!(err.contains("eta") && err.contains('1'), "{err}");
}

#[test]
fn bad_lattice_names_the_pair() {
    let dir = tempfile::tempdir().unwrap();
    // a and b have two incomparable upper bounds and no least one
    let f = write_instance(
        &dir,
        r#"{"lattice":{"elements":["0","a","b","c","d"],
                       "leq":[["0","a"],["0","b"],["a","c"],["a","d"],["b","c"],["b","d"]]},
            "ring":"Z2","subsets":{}}"#,
    );
    let (_, err, code) = lring(&["validate", &f]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: lattice"), "{err}");
    assert!(err.contains('a') && err.contains('b'), "{err}");
}

#[test]
fn decompose_on_m3_needs_a_chain() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_instance(
        &dir,
        r#"{"lattice":"m3","ring":"Z4","subsets":{"eta":["1","0","a","0"]}}"#,
    );
    let (_, err, code) = lring(&["decompose", &f, "--ideal", "eta"]);
    assert_eq!(code, 2);
    assert!(err.contains("chain hypothesis"), "{err}");
}

#[test]
fn unknown_theorem_lists_valid_ids() {
    let (_, err, code) = lring(&["verify", "--theorems", "T9.99"]);
    assert_eq!(code, 1);
    assert!(
        err.contains("T9.99") && err.contains("T2.13") && err.contains("C3.17"),
        "{err}"
    );
}

#[test]
fn unknown_flag_exits_one() {
    assert_eq!(lring(&["verify", "--bogus"]).2, 1);
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |k: usize| {
        let json = dir.path().join(format!("{k}.jsonl"));
        let (out, _, code) = lring(&[
            "verify",
            "--seed",
            "11",
            "--limit",
            "40",
            "--json",
            json.to_str().unwrap(),
        ]);
        (out, code, std::fs::read_to_string(json).unwrap())
    };
    let a = run(0);
    assert_eq!(a, run(1));
    assert_eq!(a.1, 0);
    for line in a.2.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["status"].is_string() && v["theorem"].is_string());
    }
}

#[test]
fn verify_failure_exits_three() {
    let (out, _, code) = lring(&[
        "verify",
        "--exhaustive",
        "--rings",
        "Z4",
        "--lattices",
        "chain3",
        "--mu",
        "all",
        "--theorems",
        "T2.20",
    ]);
    assert_eq!(code, 3);
    assert!(
        out.lines()
            .nth(1)
            .is_some_and(|l| l.starts_with("T2.20") && l.contains("FAIL")),
        "{out}"
    );
}
