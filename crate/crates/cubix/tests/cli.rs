use std::process::{Command, Output};

fn cubix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubix")).args(args).env_remove("CUBIX_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = cubix(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn betti_column(v: &serde_json::Value) -> Vec<u64> {
    v["rows"].as_array().unwrap().iter().map(|r| r["betti"].as_u64().unwrap()).collect()
}

#[test]
fn betti_examples() {
    let full = json(&["betti", "--family", "full", "--n", "2", "--mmax", "4", "--format", "json"]);
    assert_eq!(full["family"], "full");
    assert_eq!(betti_column(&full), [0, 1, 0, 0]);
    let sder = json(&["betti", "--family", "sder", "--n", "2", "--mmax", "5", "--format", "json"]);
    assert_eq!(betti_column(&sder), [0, 0, 1, 0, 0]);
    let lie = json(&["betti", "--family", "lie", "--n", "1", "--mmax", "3", "--format", "json"]);
    assert_eq!(betti_column(&lie), [1, 0, 0]);
}

#[test]
fn nmax_gives_one_table_per_n() {
    let v = json(&["betti", "--family", "tr", "--nmax", "3", "--format", "json"]);
    let tables = v.as_array().unwrap();
    assert_eq!(tables.len(), 3);
    assert_eq!(betti_column(&tables[2]), [0, 0, 1, 0, 0]);
}

#[test]
fn formats_carry_the_same_rows() {
    let csv = stdout(&cubix(&["betti", "--family", "ass", "--n", "2", "--format", "csv"]));
    assert_eq!(csv.lines().next().unwrap(), "family,n,m,dim,rank_d,betti");
    assert!(csv.lines().any(|l| l.starts_with("ass,2,2,") && l.ends_with(",1")));
    let table = stdout(&cubix(&["betti", "--family", "ass", "--n", "2"]));
    assert!(table.starts_with("# ass n=2  H = k[-2]"), "{table}");
}

#[test]
fn verify_suites() {
    let o = cubix(&["verify", "--suite", "cor4", "--nmax", "5"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS cor4")).count(), 5);
    let summary: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(summary["failed"], 0);
    for suite in ["harrison", "oracles"] {
        assert!(cubix(&["verify", "--suite", suite, "--nmax", "3"]).status.success(), "{suite}");
    }
}

#[test]
fn verify_all_is_the_acceptance_entry_point() {
    let o = cubix(&["verify", "--suite", "all", "--nmax", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn module_info_examples() {
    let lie = json(&["module-info", "--family", "lie", "--n", "3", "--format", "json"]);
    assert_eq!((lie["dim"].as_u64(), lie["sgn_coinvariants_dim"].as_u64()), (Some(2), Some(0)));
    let tr = stdout(&cubix(&["module-info", "--family", "tr", "--n", "3"]));
    assert!(tr.contains("dim 2") && tr.contains("sgn-coinvariants 1"), "{tr}");
}

#[test]
fn custom_modules() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"name":"bad","N":3,"dim":1,"basis_labels":["v"],"generators":[[["-1"]],[["1/2"]]]}"#)
        .unwrap();
    let o = cubix(&["module-info", "--custom", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("s2^2 = 1"));

    let sign = dir.path().join("sign.json");
    std::fs::write(&sign, r#"{"name":"sgn","N":3,"dim":1,"basis_labels":["v"],"generators":[[[-1]],[[-1]]]}"#)
        .unwrap();
    let v = json(&["betti", "--family", "custom", "--custom", sign.to_str().unwrap(), "--format", "json"]);
    assert_eq!(betti_column(&v), [0, 0, 1, 0, 0]);
    let v = json(&["betti", "--family", "custom", "--custom", sign.to_str().unwrap(), "--group", "cyclic", "--format", "json"]);
    assert_eq!(betti_column(&v), [0, 0, 1, 0, 0]);

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    assert_eq!(cubix(&["module-info", "--custom", garbage.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(cubix(&["module-info", "--custom", "/nonexistent/m.json"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(cubix(&["betti", "--family", "lie", "--n", "3", "--mmax", "1"]).status.code(), Some(2));
    assert_eq!(cubix(&["betti", "--family", "lie", "--n", "0"]).status.code(), Some(2));
    assert_eq!(cubix(&["betti", "--family", "lie", "--n", "2", "--cap", "0"]).status.code(), Some(2));
    assert_eq!(cubix(&["betti", "--family", "custom", "--n", "2"]).status.code(), Some(2));
    assert_eq!(cubix(&["betti", "--family", "lie", "--n", "7"]).status.code(), Some(3));
    assert_eq!(cubix(&["betti", "--family", "lie", "--n", "5", "--mode", "naive"]).status.code(), Some(3));
    assert_eq!(cubix(&["betti", "--family", "ass", "--n", "3", "--mode", "naive", "--cap", "10"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_cubix"))
        .args(["betti", "--family", "ass", "--n", "3", "--mode", "naive"])
        .env("CUBIX_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_independent_of_worker_count() {
    let args = ["verify", "--suite", "cor3", "--nmax", "4"];
    let one = cubix(&[&["--jobs", "1"], &args[..]].concat());
    let four = cubix(&[&["--jobs", "4"], &args[..]].concat());
    assert_eq!(one.stdout, four.stdout);
    let a = cubix(&["betti", "--family", "tr", "--nmax", "4", "--format", "json", "--jobs", "3"]);
    let b = cubix(&["betti", "--family", "tr", "--nmax", "4", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
