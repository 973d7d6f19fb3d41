use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maclaurin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

/// Data rows of a CSV table (skips the units comment and the header).
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn family_default_table() {
    let o = run(&["family"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("# units: G=1 rho0=0.318309886184"));
    let header = text.lines().nth(1).unwrap();
    assert_eq!(header, "e,omega2,mu_hat,A1,A2,S1,S2,eta1_sq,eta2_sq,stable");
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 99);
    let flips: Vec<usize> = (1..rows.len())
        .filter(|&i| rows[i][9] != rows[i - 1][9])
        .collect();
    assert_eq!(flips.len(), 1);
    let (before, after): (f64, f64) = (
        rows[flips[0] - 1][0].parse().unwrap(),
        rows[flips[0]][0].parse().unwrap(),
    );
    assert!(before < 0.952887 && 0.952887 < after);
    for row in &rows {
        let stable = row[9] == "true";
        assert_eq!(row[8].is_empty(), !stable);
    }
}

#[test]
fn family_grid_edges() {
    let text = stdout(&run(&[
        "family", "--emin", "0.5", "--emax", "0.51", "--step", "0.01",
    ]));
    assert_eq!(csv_rows(&text).len(), 2);
    for bad in [["--step", "0"], ["--step", "-0.1"]] {
        let o = run(&["family", bad[0], bad[1]]);
        assert_eq!(o.status.code(), Some(2));
    }
    let o = run(&["family", "--emin", "0.6", "--emax", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spectrum_at_stable_point() {
    let v = json(&["spectrum", "--e", "0.5", "--eta", "0"]);
    assert_eq!(v["stable"], Value::Bool(true));
    assert_eq!(v["closed_form_agrees"], Value::Bool(true));
    let eig = v["numeric_eigenvalues"].as_array().unwrap();
    assert_eq!(eig.len(), 10);
    assert!(eig.iter().all(|x| x.as_f64().unwrap() > 0.0));
    assert!(v["kernel"].as_array().unwrap().is_empty());
}

#[test]
fn spectrum_on_type_i_locus() {
    for locus in ["eta1", "-eta1"] {
        let v = json(&["spectrum", "--e", "0.5", "--locus", locus]);
        assert_eq!(v["kernel"].as_array().unwrap().len(), 2);
        assert!(v["sigma1_minus"].as_f64().unwrap().abs() < 1e-10);
    }
    let v = json(&["spectrum", "--e", "0.5", "--locus", "eta2"]);
    assert_eq!(v["kernel"].as_array().unwrap().len(), 2);
}

#[test]
fn spectrum_domain_errors() {
    let o = run(&["spectrum", "--e", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("eccentricity"));
    let o = run(&["spectrum", "--e", "0.97", "--locus", "eta2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bifurcation_events() {
    let v = json(&["bifurcations", "--e", "0.5"]);
    let events = v["events"].as_array().unwrap();
    let summary: Vec<(&str, &str)> = events
        .iter()
        .map(|e| {
            (
                e["branch"].as_str().unwrap(),
                e["stabilizer"].as_str().unwrap(),
            )
        })
        .collect();
    assert_eq!(summary, vec![("TypeI", "TRIVIAL"), ("TypeS", "Z2_DIAG_E3")]);
    assert_eq!(events[0]["sides"].as_array().unwrap().len(), 2);

    let v = json(&["bifurcations", "--e", "0.97"]);
    let events = v["events"].as_array().unwrap();
    assert_eq!(events.len(), 1);
    assert_eq!(events[0]["branch"], "TypeI");
}

#[test]
fn bifurcation_scan_constants() {
    let v = json(&["bifurcations", "--scan"]);
    assert!((v["e_crit"].as_f64().unwrap() - 0.952887).abs() < 5e-6);
    assert!((v["jacobi_dedekind"].as_f64().unwrap() - 0.8126700).abs() < 5e-7);
    assert_eq!(v["adjoint"]["stabilizer"], "D2_TILDE_E3");
    assert_eq!(v["rows"].as_array().unwrap().len(), 99);
}

#[test]
fn figures() {
    let dir = tempfile::tempdir().unwrap();
    let mu_path = dir.path().join("mu.csv");
    let o = run(&["figure", "mu", "--out", mu_path.to_str().unwrap()]);
    assert!(o.status.success());
    let rows = csv_rows(&std::fs::read_to_string(&mu_path).unwrap());
    let mu: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert!(mu.windows(2).all(|w| w[1] > w[0]));

    let eta_path = dir.path().join("eta.csv");
    assert!(run(&["figure", "eta", "--out", eta_path.to_str().unwrap()])
        .status
        .success());
    for row in csv_rows(&std::fs::read_to_string(&eta_path).unwrap()) {
        let e: f64 = row[0].parse().unwrap();
        assert_eq!(row[2].is_empty(), e > 0.952887, "e = {e}");
    }

    assert_eq!(run(&["figure", "bogus"]).status.code(), Some(2));
    let o = run(&["figure", "mu", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_outcomes() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
    let names: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);

    let o = run(&["verify", "--grid-points", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));

    let o = run(&["verify", "--inject-fault", "s2-sign"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let crit = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == "critical_eccentricity")
        .unwrap();
    assert_eq!(crit["passed"], Value::Bool(false));
}

#[test]
fn classify_examples() {
    let cases = [
        (vec!["--axes", "1,1.2,2", "--plane", "12"], "TypeI"),
        (vec!["--axes", "3,0.9,0.95", "--plane", "12"], "TypeII"),
        (vec!["--axes", "3,1,0.5", "--plane", "12"], "TypeIII"),
        (vec!["--axes", "1,1,1"], "Sphere-case"),
        (vec!["--axes", "1,1,0.5", "--axis", "3"], "Spheroid-case"),
        (vec!["--axes", "2,1,0.5", "--axis", "3"], "S-ellipsoid-case"),
    ];
    for (args, want) in cases {
        let mut full = vec!["classify"];
        full.extend(args);
        let o = run(&full);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), want);
    }
    for bad in [
        vec!["classify", "--axes", "1,2"],
        vec!["classify", "--axes", "-1,1,1"],
        vec!["classify", "--axes", "2,1,0.5", "--plane", "14"],
    ] {
        assert_eq!(run(&bad).status.code(), Some(2));
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["family"],
        vec!["bifurcations", "--scan"],
        vec!["verify"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn units_thread_through() {
    let base = json(&["bifurcations", "--scan"]);
    let alt = json(&["--G", "2.5", "--rho0", "0.7", "bifurcations", "--scan"]);
    assert_eq!(base["e_crit"], alt["e_crit"]);
    assert_eq!(base["jacobi_dedekind"], alt["jacobi_dedekind"]);
    assert_eq!(alt["units"]["G"].as_f64(), Some(2.5));
    let o = run(&["--G", "-1", "family"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--tol", "0.1", "family"]);
    assert_eq!(o.status.code(), Some(2));
}
