//! End-to-end tests of the binary: exit codes, report files, determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_hamverify")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(dir)
        .env_remove("HAMVERIFY_OUT")
        .output()
        .expect("binary runs")
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hamverify-test-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn criteria_plate_passes_with_reports() {
    let dir = tmp_dir("criteria");
    let out = run_in(
        &dir,
        &[
            "criteria", "--builtin", "plate", "--modes", "8", "--lambda", "i", "--out", "rep",
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json_path = dir.join("rep/criteria.json");
    let text = std::fs::read_to_string(&json_path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["pass"], true);
    // diag-domain deviations at lambda = i stay at rounding level
    let rows = v["results"].as_array().unwrap();
    let diag = rows
        .iter()
        .find(|r| r["criterion"] == "diag_domain_criterion")
        .unwrap();
    for m in diag["metrics"].as_array().unwrap() {
        assert!(m["value"].as_f64().unwrap() <= 1e-12);
    }
    assert!(dir.join("rep/criteria.csv").exists());
}

#[test]
fn check_failure_exits_one_but_writes_reports() {
    let dir = tmp_dir("fail");
    // lambda with a thin but accepted resolvent margin: the factorization
    // residual blows past its fixed threshold while the margin guard passes
    let out = run_in(
        &dir,
        &[
            "criteria", "--builtin", "plate", "--modes", "4", "--lambda", "3.14160265358979+0i",
            "--out", "rep",
        ],
    );
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(dir.join("rep/criteria.json").exists(), "reports written on failure");
}

#[test]
fn config_error_exits_two() {
    let dir = tmp_dir("config");
    // missing input entirely
    let out = run_in(&dir, &["criteria", "--out", "rep"]);
    assert_eq!(out.status.code(), Some(2));
    // lambda in the spectrum is an input error
    let out = run_in(
        &dir,
        &[
            "criteria", "--builtin", "plate", "--modes", "4", "--lambda", "0", "--out", "rep",
        ],
    );
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    // both builtin and files
    let out = run_in(
        &dir,
        &[
            "criteria", "--builtin", "plate", "--a", "nope.mtx", "--out", "rep",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    // non-positive tolerance
    let out = run_in(
        &dir,
        &[
            "criteria", "--builtin", "plate", "--modes", "2", "--tol", "-1e-10", "--out", "rep",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_are_deterministic_apart_from_timestamp() {
    let dir = tmp_dir("determinism");
    for tag in ["r1", "r2"] {
        let out = run_in(
            &dir,
            &[
                "criteria", "--builtin", "random", "--modes", "5", "--seed", "7", "--out", tag,
            ],
        );
        assert_eq!(out.status.code(), Some(0));
    }
    let strip = |path: PathBuf| -> String {
        let text = std::fs::read_to_string(path).unwrap();
        text.lines()
            .filter(|l| !l.trim_start().starts_with("\"timestamp\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(
        strip(dir.join("r1/criteria.json")),
        strip(dir.join("r2/criteria.json")),
        "identical config and seed must give byte-identical JSON apart from the timestamp"
    );
}

#[test]
fn file_inputs_roundtrip_through_matrix_market() {
    let dir = tmp_dir("files");
    // export the plate blocks as files, reload them, and validate
    let n = 3usize;
    let h = plate_blocks_to_files(&dir, n);
    let out = run_in(
        &dir,
        &[
            "validate", "--a", h[0].to_str().unwrap(), "--b", h[1].to_str().unwrap(), "--c",
            h[2].to_str().unwrap(), "--out", "rep",
        ],
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    // inconsistent d is rejected as a config error
    let bad_d = dir.join("bad_d.mtx");
    std::fs::copy(&h[1], &bad_d).unwrap();
    let out = run_in(
        &dir,
        &[
            "validate", "--a", h[0].to_str().unwrap(), "--b", h[1].to_str().unwrap(), "--c",
            h[2].to_str().unwrap(), "--d", bad_d.to_str().unwrap(), "--out", "rep",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

fn plate_blocks_to_files(dir: &Path, n: usize) -> [PathBuf; 3] {
    let h = plate_elasticity::build_plate_hamiltonian(n);
    let paths = [dir.join("a.mtx"), dir.join("b.mtx"), dir.join("c.mtx")];
    operator_core::write_matrix_market(h.a(), &paths[0]).unwrap();
    operator_core::write_matrix_market(h.b(), &paths[1]).unwrap();
    operator_core::write_matrix_market(h.c(), &paths[2]).unwrap();
    paths
}

#[test]
fn render_missing_reports_exits_two() {
    let dir = tmp_dir("render");
    std::fs::create_dir_all(dir.join("empty")).unwrap();
    let out = run_in(&dir, &["render", "--reports", "empty", "--out", "tables"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("missing report"), "{err}");
}

#[test]
fn render_regenerates_tables() {
    let dir = tmp_dir("render-ok");
    let out = run_in(
        &dir,
        &["plate-spectrum", "--modes", "4", "--out", "rep"],
    );
    assert_eq!(out.status.code(), Some(0));
    let out = run_in(&dir, &["render", "--reports", "rep", "--out", "tables"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let table = std::fs::read_to_string(dir.join("tables/render_spectrum.csv")).unwrap();
    assert!(table.lines().count() > 4 * 4 + 2);
}

#[test]
fn bounds_mirror_classifies_band_at_one() {
    let dir = tmp_dir("bounds-mirror");
    let out = run_in(
        &dir,
        &[
            "bounds", "--builtin", "mirror", "--N", "8,64,256", "--lambda-schedule",
            "10,100,1000", "--witness-schedule", "50,100", "--out", "rep",
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("rep/bounds.json")).unwrap())
            .unwrap();
    let report = &v["results"]["hypothesis_report"];
    // every relative bound of the mirrored family sits in the band at 1:
    // at most 1, not strictly below
    for tag in ["bound_c_on_a", "bound_b_on_astar", "bound_a_on_c", "bound_astar_on_b"] {
        assert_eq!(
            report[tag]["classification"], "approx_one",
            "{tag}: {}",
            report[tag]["extrapolated_bound"]
        );
    }
    assert!(dir.join("rep/bounds_c_on_a.csv").exists());
    assert!(dir.join("rep/bounds_witness.csv").exists());
}

#[test]
fn bounds_requires_family_builtin() {
    let dir = tmp_dir("bounds-config");
    let out = run_in(&dir, &["bounds", "--builtin", "random", "--out", "rep"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_selects_default_output_dir() {
    let dir = tmp_dir("envvar");
    let out = Command::new(bin())
        .args(["plate-spectrum", "--modes", "2"])
        .current_dir(&dir)
        .env("HAMVERIFY_OUT", dir.join("from-env"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.join("from-env/spectrum.json").exists());
}
