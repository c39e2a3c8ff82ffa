use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_convexdiff"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("convexdiff-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn report_without_timing(path: &Path) -> serde_json::Value {
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v["timing_ms"] = serde_json::json!(0);
    v
}

#[test]
fn demo_fig1_writes_report_scenario_and_svg() {
    let dir = scratch("fig1");
    let out = bin().args(["demo", "fig1", "--out"]).arg(&dir).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    for f in ["fig1.scenario.json", "fig1.report.json", "fig1.svg"] {
        assert!(dir.join(f).exists(), "missing {f}");
    }
    let report = report_without_timing(&dir.join("fig1.report.json"));
    assert_eq!(report["schema_version"], 1);
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["pass"].as_bool().unwrap()));
}

#[test]
fn run_executes_a_scenario_file() {
    let dir = scratch("run");
    // Reuse the demo's emitted scenario as a run input.
    bin().args(["demo", "lipschitz", "--out"]).arg(&dir).status().unwrap();
    let sc = dir.join("lipschitz.scenario.json");
    let out_dir = scratch("run-out");
    let out = bin()
        .args(["run"])
        .arg(&sc)
        .args(["--jobs", "2", "--out"])
        .arg(&out_dir)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out_dir.join("lipschitz.report.json").exists());
}

#[test]
fn validate_accepts_good_and_rejects_bad() {
    let dir = scratch("validate");
    bin().args(["demo", "fig1", "--out"]).arg(&dir).status().unwrap();
    let good = dir.join("fig1.scenario.json");
    let status = bin().args(["validate"]).arg(&good).status().unwrap();
    assert_eq!(status.code(), Some(0));

    // Mixed arithmetic: a float vertex in a rational scenario.
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    v["inputs"]["x"]["vertices"][0][0] = serde_json::json!(0.5);
    let bad = dir.join("bad.scenario.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let status = bin().args(["validate"]).arg(&bad).status().unwrap();
    assert_eq!(status.code(), Some(2));

    // Unparseable file.
    let garbage = dir.join("garbage.json");
    std::fs::write(&garbage, "{").unwrap();
    let status = bin().args(["run"]).arg(&garbage).status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn seed_env_var_overrides_scenario_seed() {
    let dir = scratch("seed");
    let out = bin()
        .args(["demo", "lemmas", "--out"])
        .arg(&dir)
        .env("CONVEXDIFF_SEED", "99")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = report_without_timing(&dir.join("lemmas.report.json"));
    assert_eq!(report["scenario"]["seed"], 99);

    let status = bin()
        .args(["demo", "lemmas", "--out"])
        .arg(&dir)
        .env("CONVEXDIFF_SEED", "not-a-number")
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn repeated_demo_runs_are_identical_excluding_timing() {
    let a = scratch("det-a");
    let b = scratch("det-b");
    for dir in [&a, &b] {
        let out = bin().args(["demo", "fig1", "--out"]).arg(dir).output().unwrap();
        assert!(out.status.success());
    }
    assert_eq!(
        report_without_timing(&a.join("fig1.report.json")),
        report_without_timing(&b.join("fig1.report.json"))
    );
    assert_eq!(
        std::fs::read(a.join("fig1.svg")).unwrap(),
        std::fs::read(b.join("fig1.svg")).unwrap()
    );
}
