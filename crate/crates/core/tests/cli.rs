use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn raycensus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raycensus"))
        .args(args)
        .env_remove("RAYCENSUS_THREADS")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn config_file_supplies_defaults_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "# hyperbolic\nc = -2,0\nmax_period = 1\nwindow = 2\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let out = raycensus(&["audit", "--config", cfg]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["run_config"]["max_period"], 1);
    assert_eq!(report["run_config"]["window"], 2);
    assert_eq!(report["run_config"]["config_file"], cfg);
    assert!(report["cycles"].as_array().unwrap().iter().all(|c| c["period"] == 1));

    let out = raycensus(&["audit", "--config", cfg, "--max-period", "2"]);
    assert_eq!(json(&out)["run_config"]["max_period"], 2);
}

#[test]
fn bad_config_files_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "colour = blue\n").unwrap();
    let out = raycensus(&["cycles", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cycles.json");
    let out = raycensus(&["cycles", "--c", "-2,0", "--max-period", "1", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["run_config"]["command"], "cycles");
}

#[test]
fn plot_writes_ray_and_cycle_tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = raycensus(&["plot", "--c", "-2,0", "--p", "1", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rays = fs::read_to_string(dir.path().join("rays.csv")).unwrap();
    let cycles = fs::read_to_string(dir.path().join("cycles.csv")).unwrap();
    assert!(rays.lines().count() > 100);
    assert!(cycles.lines().count() >= 3);
}

#[test]
fn thread_count_falls_back_to_the_environment() {
    let run = |env: &str| {
        Command::new(env!("CARGO_BIN_EXE_raycensus"))
            .args(["cycles", "--c", "-2,0"])
            .env("RAYCENSUS_THREADS", env)
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("3");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn land_exit_codes() {
    assert_eq!(raycensus(&["land", "--c", "-2,0", "--address", "1"]).status.code(), Some(0));
    assert_eq!(raycensus(&["land", "--c", "0,0", "--address", "0"]).status.code(), Some(4));
    assert_eq!(raycensus(&["land", "--c", "-2,0", "--address", "x"]).status.code(), Some(2));
}

#[test]
fn audit_csv_lists_every_cycle() {
    let out = raycensus(&["audit", "--c", "-2,0", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("index,period"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().any(|r| r.contains("attracting")));
}

#[test]
fn tails_report_levels_and_mapping() {
    let out = raycensus(&[
        "tails", "--c", "-2,0", "--cycle", "1.146,0", "--address", "0", "--levels", "4", "--mapping",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let levels = report["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 4);
    assert!(levels.iter().all(|l| l["exists"] == true));
    let mapping = report["mapping"].as_array().unwrap();
    assert_eq!(mapping.len(), 3);
    assert!(mapping.iter().all(|m| m["passed"] == true));
}
