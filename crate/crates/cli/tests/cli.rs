use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidaut")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eq_exit_codes() {
    let o = run(&["eq", "3", "s1 s2 s1", "s2 s1 s2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "equal");
    let o = run(&["eq", "3", "s1 s2", "s2 s1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn nf_perm_and_comb() {
    let o = run(&["--json", "nf", "3", "s1 s2 s1 s2^-1 s1^-1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["word"], "s2");
    let o = run(&["perm", "4", "s1 s2 s3"]);
    assert_eq!(stdout(&o).trim(), "(1 4 3 2)");
    let o = run(&["comb", "3", "s1^2"]);
    assert!(stdout(&o).contains("level 2: A1.2"));
    let o = run(&["comb", "3", "s1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simplify_and_mono_eq() {
    let o = run(&["simplify", "3", "A1.2 A1.3 A2.3 Z^-1 A1.2"]);
    assert_eq!(stdout(&o).trim(), "A1.2");
    let o = run(&["mono-eq", "2", "2", "C1 A1.2.1 C2 A1.2.2", "Zrn"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_reports_and_errors() {
    let o = run(&["verify", "purebraid", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 fail, 0 indeterminate"));
    let o = run(&["verify", "thm32", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid parameters"));
    let o = run(&["verify", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tight_budget_is_indeterminate() {
    let o = run(&["--max-len", "1", "verify", "oracle-agreement", "--n", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("INDETERMINATE"));
}

#[test]
fn json_replay_with_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nf.cache");
    let cache = cache.to_str().unwrap();
    let untimed = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_str(&stdout(o)).unwrap();
        for c in v["cases"].as_array_mut().unwrap() {
            c["elapsed_ms"] = 0.into();
        }
        v
    };
    let cold = run(&["--json", "verify", "center", "--r", "2", "--n", "3"]);
    let warm1 = run(&["--json", "--cache", cache, "verify", "center", "--r", "2", "--n", "3"]);
    assert!(std::path::Path::new(cache).exists());
    let warm2 = run(&["--json", "--cache", cache, "verify", "center", "--r", "2", "--n", "3"]);
    assert_eq!(untimed(&cold), untimed(&warm1));
    assert_eq!(untimed(&cold), untimed(&warm2));
    std::fs::write(cache, "garbage").unwrap();
    let corrupt = run(&["--json", "--cache", cache, "verify", "center", "--r", "2", "--n", "3"]);
    assert_eq!(untimed(&cold), untimed(&corrupt));
}
