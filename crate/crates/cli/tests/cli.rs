use std::path::PathBuf;
use std::process::{Command, Output};

fn lieforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieforge"))
        .args(args)
        .env_remove("LIEFORGE_TOL")
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lieforge-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn json_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

#[test]
fn verify_passes_by_default() {
    let out = lieforge(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 17);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_with_reversed_time() {
    assert_eq!(
        lieforge(&["verify", "--alpha", "-1"]).status.code(),
        Some(0)
    );
}

#[test]
fn perturbation_gives_nonzero_exit() {
    let out = lieforge(&["verify", "--perturb", "1e-6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let reports = json_lines(&out);
    assert!(reports
        .iter()
        .any(|r| r["passed"] == false && r["witness"].is_object()));
}

#[test]
fn json_is_byte_identical() {
    let dir = scratch("det");
    let d = dir.to_str().unwrap();
    let args = [
        "all",
        "--seed",
        "7",
        "--trials",
        "25",
        "--format",
        "json",
        "--artifact-dir",
        d,
    ];
    let a = lieforge(&args);
    let b = lieforge(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn seed_changes_trial_output() {
    let run = |seed: &str| {
        lieforge(&[
            "invariants",
            "--seed",
            seed,
            "--trials",
            "1",
            "--format",
            "json",
        ])
        .stdout
    };
    assert_eq!(run("3"), run("3"));
    assert_ne!(run("3"), run("4"));
}

#[test]
fn report_schema() {
    let out = lieforge(&["verify", "--format", "json"]);
    for r in json_lines(&out) {
        for key in [
            "identity",
            "relation",
            "max_residual",
            "tolerance",
            "passed",
        ] {
            assert!(r.get(key).is_some(), "missing {key} in {r}");
        }
    }
}

#[test]
fn transfer_writes_coefficients() {
    let dir = scratch("transfer");
    let out = lieforge(&[
        "transfer",
        "--format",
        "json",
        "--artifact-dir",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let coeffs: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("coeffs_j.json")).unwrap()).unwrap();
    assert_eq!(coeffs["source_kind"], "FromJ");
    assert!(dir.join("coeffs_k.json").exists());
}

#[test]
fn transfer_text_prints_matrices() {
    let text = String::from_utf8(lieforge(&["transfer"]).stdout).unwrap();
    for name in ["J4^1", "J4^3", "K4^1", "K4^3"] {
        assert!(text.contains(name), "{name}");
    }
}

#[test]
fn sun_reports_obstruction() {
    let dir = scratch("sun");
    let out = lieforge(&[
        "sun",
        "--format",
        "json",
        "--artifact-dir",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let read = |f: &str| -> serde_json::Value {
        serde_json::from_str(&std::fs::read_to_string(dir.join(f)).unwrap()).unwrap()
    };
    assert_eq!(read("su2_obstruction.json")["max_abs_d"], 0.0);
    let su3 = read("su3_obstruction.json");
    assert!(su3["max_abs_d"].as_f64().unwrap() > 0.5);
    assert_eq!(su3["argmax"], serde_json::json!([1, 1, 8]));
    assert_eq!(read("su3_structure.json")["n"], 3);
}

#[test]
fn out_flag_writes_file() {
    let dir = scratch("out");
    let path = dir.join("report.jsonl");
    let out = lieforge(&[
        "exercises",
        "--trials",
        "10",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
        "--artifact-dir",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(path).unwrap().lines().count() > 10);
}

#[test]
fn bad_inputs_are_rejected() {
    assert_eq!(
        lieforge(&["verify", "--trials", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(lieforge(&["verify", "--alpha", "0"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_lieforge"))
        .args(["verify"])
        .env("LIEFORGE_TOL", "nope")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_override_applies() {
    let out = Command::new(env!("CARGO_BIN_EXE_lieforge"))
        .args(["verify", "--format", "json"])
        .env("LIEFORGE_TOL", "1e-8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let first = &json_lines(&out)[0];
    assert_eq!(first["tolerance"], 1e-8);
}
