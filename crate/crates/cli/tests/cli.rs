use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsinfer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(out.status.success(), "{}", stderr(&out));
    serde_json::from_slice(&out.stdout).unwrap()
}

/// A single "CODE: message" line on stderr and a non-zero exit.
fn assert_error(out: &Output, code: &str) {
    assert!(!out.status.success());
    let err = stderr(out);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with(&format!("{code}: ")), "{err}");
}

#[test]
fn fit_fatigue_matches_reference() {
    let v = json(&["fit", "--builtin", "fatigue-31000psi", "--form", "published", "--json"]);
    let est = v["estimates"].as_array().unwrap();
    let alpha = |i: usize| est[i]["alpha"].as_f64().unwrap();
    assert!((alpha(0) - 0.17038).abs() < 1e-4);
    assert!((alpha(1) - 0.17125).abs() < 1e-4);
    assert!((alpha(2) - 0.17122).abs() < 1e-4);
    assert_eq!(est[1]["estimator"], "ProfileCR_alpha");
}

#[test]
fn fit_mccool_beta() {
    let v = json(&["fit", "--builtin", "mccool-sustainers", "--estimator", "MLE", "--json"]);
    let beta = v["estimates"][0]["beta"].as_f64().unwrap();
    assert!((beta - 212.05).abs() < 5e-3, "{beta}");
}

#[test]
fn fit_all_estimators_as_csv() {
    let out = run(&["fit", "--builtin", "mccool-sustainers", "--estimator", "all", "--csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 11);
    assert!(text.starts_with("estimator,alpha,beta\n"));
}

#[test]
fn test_fatigue_beta() {
    let v = json(&["test", "--builtin", "fatigue-31000psi", "--interest", "beta", "--null", "125", "--form", "published", "--json"]);
    let expect = [(9.4279, 0.00214), (9.3338, 0.00225), (9.2397, 0.00237)];
    let results = v.as_array().unwrap();
    assert_eq!(results.len(), 3);
    for (r, (stat, p)) in results.iter().zip(expect) {
        assert!((r["statistic"].as_f64().unwrap() - stat).abs() < 1e-3);
        assert!((r["p_value"].as_f64().unwrap() - p).abs() < 1e-5);
    }
}

#[test]
fn test_mccool_alpha() {
    let v = json(&["test", "--builtin", "mccool-sustainers", "--interest", "alpha", "--null", "0.21", "--stat", "lr,cr,bn", "--form", "published", "--json"]);
    let expect = [(2.1646, 0.1412), (2.8438, 0.0917), (2.7963, 0.0945)];
    for (r, (stat, p)) in v.as_array().unwrap().iter().zip(expect) {
        assert!((r["statistic"].as_f64().unwrap() - stat).abs() < 1e-3, "{r}");
        assert!((r["p_value"].as_f64().unwrap() - p).abs() < 2e-4, "{r}");
    }
}

#[test]
fn null_at_mle_gives_zero() {
    let fit = json(&["fit", "--builtin", "mccool-sustainers", "--estimator", "MLE", "--json"]);
    let beta = fit["estimates"][0]["beta"].as_f64().unwrap().to_string();
    let v = json(&["test", "--builtin", "mccool-sustainers", "--interest", "beta", "--null", &beta, "--stat", "lr", "--json"]);
    assert!(v[0]["statistic"].as_f64().unwrap().abs() < 1e-9);
    assert!((v[0]["p_value"].as_f64().unwrap() - 1.0).abs() < 1e-4);
}

#[test]
fn data_files_and_columns() {
    let dir = tempfile::tempdir().unwrap();
    let plain = dir.path().join("plain.txt");
    fs::write(&plain, "# hours\n1.5\n\n2.5 # second\n4\n").unwrap();
    let v = json(&["fit", "--data", plain.to_str().unwrap(), "--estimator", "MME", "--json"]);
    assert_eq!(v["n"], 3);
    let delimited = dir.path().join("d.csv");
    fs::write(&delimited, "unit,hours\na,1.5\nb,2.5\nc,4\n").unwrap();
    let w = json(&["fit", "--data", delimited.to_str().unwrap(), "--column", "hours", "--estimator", "MME", "--json"]);
    assert_eq!(v["estimates"], w["estimates"]);
}

#[test]
fn negative_value_names_its_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "1\n2\n-1\n").unwrap();
    let out = run(&["fit", "--data", path.to_str().unwrap()]);
    assert_error(&out, "E_CONFIG");
    assert!(stderr(&out).contains("line 3"));
}

#[test]
fn error_paths_are_single_line() {
    assert_error(&run(&["fit", "--builtin", "nope"]), "E_CONFIG");
    assert_error(&run(&["fit"]), "E_USAGE");
    assert_error(&run(&["fit", "--data", "/nonexistent/file"]), "E_IO");
    assert_error(&run(&["fit", "--builtin", "mccool-sustainers", "--estimator", "bogus"]), "E_CONFIG");
    assert_error(&run(&["test", "--builtin", "mccool-sustainers", "--interest", "alpha", "--null", "0.3", "--stat", "bartlett"]), "E_UNSUPPORTED_NULL");
    assert_error(&run(&["test", "--builtin", "mccool-sustainers", "--interest", "alpha", "--null", "-1"]), "E_DOMAIN");
    assert_error(&run(&["simulate", "--table", "9"]), "E_USAGE");
    assert_error(&run(&["simulate", "--table", "2", "--reps", "0"]), "E_CONFIG");
    assert_error(&run(&["simulate", "--table", "2", "--levels", "0.05,2"]), "E_CONFIG");
    assert_error(&run(&["bogus"]), "E_USAGE");
}

#[test]
fn simulate_is_deterministic() {
    let args = ["simulate", "--table", "2", "--alpha", "0.5", "--n", "10", "--seed", "42", "--reps", "2000", "--csv"];
    let a = run(&args);
    let b = run(&[&args[..], &["--sequential"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("table2,LR_CR,rejection_percent,0.05,"));
}

#[test]
fn simulate_table2_rates_in_band() {
    let v = json(&["simulate", "--table", "2", "--alpha", "0.5", "--n", "10", "--seed", "42", "--json"]);
    let rate = |stat: &str| {
        v["statistics"][stat]["rejection_percent"]
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p[0].as_f64() == Some(0.05))
            .unwrap()[1]
            .as_f64()
            .unwrap()
    };
    assert!((rate("LR") - 7.60).abs() <= 0.8, "{}", rate("LR"));
    assert!((rate("LR_CR") - 5.18).abs() <= 0.7);
    assert!((rate("LR_BN") - 5.20).abs() <= 0.7);
    assert!((rate("LR_Bartlett") - 3.96).abs() <= 0.7);
}

#[test]
fn table3_runs_size_study_first() {
    let v = json(&["simulate", "--table", "3", "--reps", "500", "--seed", "1", "--json"]);
    assert_eq!(v["size"]["kind"], "size");
    let power = v["power"].as_array().unwrap();
    assert_eq!(power.len(), 9);
    assert!((power[0]["truth"]["alpha"].as_f64().unwrap() - 0.12).abs() < 1e-12);
}

#[test]
fn point_study_csv() {
    let out = run(&["simulate", "--table", "1", "--reps", "200", "--csv"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("table1,ProfileBN_alpha,mse,,"));
}

#[test]
fn custom_power_study() {
    let v = json(&["simulate", "--study", "power", "--interest", "beta", "--alpha", "1", "--null", "1", "--grid", "1.5,2", "--stat", "lr", "--reps", "300", "--json"]);
    assert_eq!(v["power"].as_array().unwrap().len(), 2);
}

#[test]
fn figure_series_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["figure", "--kind", "size", "--reps", "500", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = fs::read_to_string(dir.path().join("size-distortion_LR.csv")).unwrap();
    assert!(text.starts_with("nominal_level,relative_distortion\n"));
    assert_eq!(text.lines().count(), 101);
    let out = run(&["figure", "--reps", "300"]);
    assert!(stdout(&out).starts_with("statistic,asymptotic_quantile,relative_discrepancy\n"));
}
