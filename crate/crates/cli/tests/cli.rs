//! The binary end to end: outputs, determinism and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use dgcyc::catalog::NEGATIVE_CONTROLS;

fn dgcyc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgcyc"))
        .args(args)
        .env_remove("DGCYC_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = dgcyc(&all);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)))
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn hc_of_the_ground_field() {
    let o = dgcyc(&["hc", "--max-degree", "2", "ground_field"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["hc", "--max-degree", "2", "ground_field"]);
    assert_eq!(v["tables"][0]["rows"][0][1], serde_json::json!(["1", "0", "1"]));
    assert!(stdout(&o).contains("dim  1  0  1"), "{}", stdout(&o));
}

#[test]
fn methods_agree_from_the_command_line() {
    for m in ["tricomplex", "lambda", "bicomplex"] {
        let v = json(&["hc", "--max-degree", "3", "--method", m, "dual_numbers"]);
        assert_eq!(
            v["tables"][0]["rows"][0][1],
            serde_json::json!(["2", "0", "2", "0"]),
            "{m}"
        );
    }
}

#[test]
fn spectral_grid() {
    let v = json(&["ss", "--filtration", "f1", "--page", "2", "--max-total", "3", "koszul"]);
    let rows = v["tables"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    // Total degree 0 holds HC^0 = HH^0.
    assert_eq!(rows[0][1][0], "1");
    let o = dgcyc(&[
        "ss",
        "--filtration",
        "f13",
        "--page",
        "inf",
        "--format",
        "csv",
        "exterior",
    ]);
    assert!(stdout(&o).starts_with("# E_inf^(p,q) of exterior filtered by f13"));
}

#[test]
fn verify_passes_on_valid_input() {
    let o = dgcyc(&["verify", "--trials", "5", "--seed", "42", "koszul"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&["verify", "--trials", "2", "--seed", "42", "a2_path"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 20);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn json_reports_are_deterministic() {
    let args = [
        "verify",
        "--trials",
        "3",
        "--seed",
        "7",
        "--max-degree",
        "2",
        "exterior",
    ];
    let with = |extra: &[&'static str]| {
        let mut v = args.to_vec();
        v.extend(["--format", "json"]);
        v.extend(extra);
        dgcyc(&v).stdout
    };
    let a = with(&[]);
    assert_eq!(a, with(&[]));
    assert!(a.windows(9).all(|w| w != b"timing_ms"));
    // Worker count changes nothing but the echoed command line.
    let strip = |bytes: Vec<u8>| {
        let mut v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        v["command"] = serde_json::Value::Null;
        v
    };
    assert_eq!(strip(with(&["--jobs", "1"])), strip(with(&["--jobs", "4"])));
}

#[test]
fn les_table() {
    let v = json(&["les", "--max-degree", "2", "ground_field"]);
    assert_eq!(v["data"]["nodes"][1]["connecting_rank"], 1);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn categories() {
    let v = json(&["cat-hh", "a2_path"]);
    assert_eq!(v["tables"][0]["rows"][0][1], serde_json::json!(["2", "0", "0", "0"]));
    let v = json(&["cat-hc", "a2_path"]);
    assert_eq!(v["tables"][0]["rows"][0][1], serde_json::json!(["2", "0", "2", "0"]));
    let o = dgcyc(&["cat-ss", "--page", "1", "a2_path"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    // A dga is a one-object category.
    let v = json(&["cat-hh", "--max-degree", "2", "dual_numbers"]);
    assert_eq!(v["tables"][0]["rows"][0][1], serde_json::json!(["2", "1", "1"]));
}

#[test]
fn partial_cohomology_tables() {
    let v = json(&["hhp", "--max-degree", "1", "--max-internal", "1", "koszul"]);
    assert_eq!(v["tables"][0]["rows"][0][1][0], "2");
    let o = dgcyc(&["hcp", "truncated"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn catalog_lists_and_prints() {
    let o = dgcyc(&["catalog"]);
    let s = stdout(&o);
    for name in [
        "ground_field",
        "dual_numbers",
        "exterior",
        "truncated",
        "koszul",
        "a2_path",
    ] {
        assert!(s.contains(name));
    }
    let v = json(&["catalog", "koszul"]);
    assert!(v["data"].as_str().unwrap().starts_with("[algebra]"));
}

#[test]
fn printed_builtins_reload_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let src = json(&["catalog", "koszul"])["data"].as_str().unwrap().to_string();
    let p = write_temp(&dir, "k.dga", &src);
    let from_file = json(&["hc", p.to_str().unwrap()]);
    let builtin = json(&["hc", "koszul"]);
    assert_eq!(from_file["tables"], builtin["tables"]);
    assert_eq!(from_file["input"]["sha256"], builtin["input"]["sha256"]);
    assert_eq!(from_file["input"]["origin"], "file");
}

#[test]
fn negative_controls_fail_validation_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    for c in NEGATIVE_CONTROLS {
        let p = write_temp(&dir, &format!("{}.dga", c.name), c.source);
        let o = dgcyc(&["validate", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(1), "{}", c.name);
        let v = json(&["validate", p.to_str().unwrap()]);
        let failed: Vec<&str> = v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|x| x["pass"] == false)
            .map(|x| x["name"].as_str().unwrap())
            .collect();
        assert_eq!(failed, vec![c.broken.to_string()], "{}", c.name);
        // Computations refuse invalid input outright.
        assert_eq!(dgcyc(&["hh", p.to_str().unwrap()]).status.code(), Some(2));
    }
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = write_temp(
        &dir,
        "unknown.dga",
        "[algebra]\nname = u\nbasis = 1:0, x:0\nunit = 1\n\n[mult]\nx*x = z\n",
    );
    let o = dgcyc(&["hh", unknown.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("`z`") && stderr(&o).contains("line 7"),
        "{}",
        stderr(&o)
    );

    let bad_rat = write_temp(
        &dir,
        "rat.dga",
        "[algebra]\nname = r\nbasis = 1:0, x:0\nunit = 1\n\n[mult]\nx*x = 1/0 x\n",
    );
    assert_eq!(dgcyc(&["hh", bad_rat.to_str().unwrap()]).status.code(), Some(2));

    let no_unit = write_temp(&dir, "nounit.dga", "[algebra]\nname = n\nbasis = x:0\n");
    assert_eq!(dgcyc(&["validate", no_unit.to_str().unwrap()]).status.code(), Some(2));

    let dup = write_temp(
        &dir,
        "dup.dga",
        "[algebra]\nname = d\nbasis = 1:0, x:0\nunit = 1\n\n[mult]\nx*x = 0\nx*x = x\n",
    );
    assert_eq!(dgcyc(&["hh", dup.to_str().unwrap()]).status.code(), Some(2));

    assert_eq!(dgcyc(&["hh", "no_such_builtin"]).status.code(), Some(2));
    assert_eq!(dgcyc(&["hh", "a2_path"]).status.code(), Some(2));
    assert_eq!(dgcyc(&["ss", "--filtration", "f7", "koszul"]).status.code(), Some(2));
    assert_eq!(dgcyc(&["ss", "--page", "two", "koszul"]).status.code(), Some(2));
}

#[test]
fn oversized_cells_are_refused() {
    let o = dgcyc(&["hh", "--max-degree", "6", "--max-cell", "10", "dual_numbers"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--max-cell"), "{}", stderr(&o));
    assert_eq!(
        dgcyc(&["hh", "--max-degree", "2", "--max-cell", "16", "dual_numbers"])
            .status
            .code(),
        Some(0)
    );
}
