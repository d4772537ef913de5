use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_perm1324"));
    c.env_remove("PERM1324_CACHE");
    c
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn encode_and_decode() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["encode", "3612745"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "ABABBCD ABACDBB\n");

    let o = run_in(dir.path(), &["encode", "3,6,1,2,7,4,5"]);
    assert_eq!(stdout(&o), "ABABBCD ABACDBB\n");

    let o = run_in(dir.path(), &["decode", "ABABBCD", "ABACDBB"]);
    assert_eq!(stdout(&o), "3612745\n");

    let o = run_in(dir.path(), &["decode", "A", "A"]);
    assert_eq!(stdout(&o), "1\n");

    let o = run_in(dir.path(), &["decode", "AB", "BA"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("stage greedy"));

    let o = run_in(dir.path(), &["decode", "CD", "CD"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("stage verification"));
    let o = run_in(dir.path(), &["decode", "--unverified", "CD", "CD"]);
    assert_eq!(stdout(&o), "12\n");
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["count", "--pattern", "1324", "--max", "0"][..],
        &["count", "--max", "12"],
        &["encode", "1123"],
        &["encode", "12345678910"],
        &["decode", "AX", "AB"],
        &["frobnicate"],
    ] {
        let o = run_in(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn count_and_words_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["--no-cache", "count", "--pattern", "1324", "--max", "6"]);
    let text = stdout(&o);
    assert!(text.starts_with("n,count\n"));
    assert!(text.ends_with("6,513\n"));

    let o = run_in(dir.path(), &["--no-cache", "count", "--pattern", "123", "--max", "5"]);
    let counts: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().to_string()).collect();
    assert_eq!(counts, ["1", "2", "5", "14", "42"]);

    let o = run_in(dir.path(), &["words", "--max", "4"]);
    assert_eq!(stdout(&o), "n,h_n\n0,1\n1,4\n2,15\n3,56\n4,209\n");

    let o = run_in(dir.path(), &["words", "--max", "40", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[40]["h_n"], "81331508195051142796769");
}

#[test]
fn enumerate_lists_avoiders() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["enumerate", "--pattern", "1324", "4"]);
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 23);
    assert!(!lines.contains(&"1324"));
    let o = run_in(dir.path(), &["enumerate", "--pattern", "123", "3"]);
    assert_eq!(stdout(&o), "132\n213\n231\n312\n321\n");
}

#[test]
fn verify_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["--no-cache", "verify", "--max", "8", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 8);
    assert_eq!(arr[7]["s_n"], "15793");
    assert_eq!(arr[7]["h_prev"], "10864");
    assert_eq!(arr[0]["corollary_holds"], false);
    assert_eq!(arr[0]["corollary_asserted"], false);
    assert!(arr.iter().all(|r| r["passed"] == true));

    let o = run_in(dir.path(), &["--no-cache", "verify", "--max", "5", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("n,s_n,h_prev,h_prev_sq,bound_16"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn cache_is_written_atomically_and_changes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("sub").join("counts.json");
    let cache_arg = cache.to_str().unwrap();

    let cold = run_in(dir.path(), &["--cache", cache_arg, "verify", "--max", "7"]);
    assert!(cache.exists());
    let stored: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    assert_eq!(stored["version"], 1);
    assert_eq!(stored["counts"]["1324:6"], "513");

    let warm = run_in(dir.path(), &["--cache", cache_arg, "verify", "--max", "7"]);
    let none = run_in(dir.path(), &["--no-cache", "verify", "--max", "7"]);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, none.stdout);

    // Environment variable and default location.
    let env =
        bin().current_dir(dir.path()).env("PERM1324_CACHE", &cache).args(["count", "--max", "5"]).output().unwrap();
    assert!(env.status.success());
    let default = run_in(dir.path(), &["count", "--max", "3"]);
    assert!(default.status.success());
    assert!(dir.path().join(".perm1324-cache.json").exists());
}

#[test]
fn report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run_in(dir.path(), &["--no-cache", "report", path.to_str().unwrap(), "--max", "6"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 6);
    assert_eq!(v["growth"][3]["s_n"], "23");
    assert_eq!(v["reference_lower_growth"], 9.42);
}
