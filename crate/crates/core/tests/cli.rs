//! End-to-end runs of the `cdlaplace` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdlaplace")).args(args).output().expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("not JSON: {l:?}: {e}")))
        .collect()
}

fn coeffs(v: &Value) -> Vec<f64> {
    serde_json::from_value(v.clone()).unwrap()
}

fn config(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/configs").join(name).display().to_string()
}

fn temp_config(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(format!("cdlaplace-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn transform_of_sin() {
    let out = bin(&["transform", "--pair", "sin", "--omega", "1", "--p", "1+1i1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    let v = coeffs(&r["value"]);
    for (got, want) in v.iter().zip([0.2, -0.4, 0.0, 0.0]) {
        assert!((got - want).abs() < 1e-9, "{v:?}");
    }
    assert!(r["err_estimate"].as_f64().unwrap() < 1e-6);
    assert_eq!(r["meta"]["kernel"], "linear");
}

#[test]
fn residue_inversion_of_third_order_image() {
    let out = bin(&["invert", "--method", "residue", "--num", "1", "--den", "0 1 0 0 1", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = coeffs(&records(&out)[0]["value"]);
    let want = 1.0 - (-1.0f64).exp() / 3.0 - 2.0 / 3.0 * 0.5f64.exp() * (3f64.sqrt() / 2.0).cos();
    assert!((v[0] - want).abs() < 1e-12 && (v[0] - 0.165_280_531).abs() < 1e-9);
}

#[test]
fn three_inversion_methods_agree() {
    let mut values = Vec::new();
    for m in ["residue", "series", "bromwich"] {
        let out = bin(&["invert", "--method", m, "--num", "0 1", "--den", "1 0 1", "--t", "0.5,1.5"]);
        assert_eq!(out.status.code(), Some(0), "{m}");
        values.push(records(&out).iter().map(|r| coeffs(&r["value"])[0]).collect::<Vec<_>>());
    }
    for v in &values {
        assert!((v[0] - 0.5f64.cos()).abs() < 1e-3 && (v[1] - 1.5f64.cos()).abs() < 1e-3, "{values:?}");
    }
}

#[test]
fn pair_inversion_reports_the_original() {
    let out = bin(&["invert", "--pair", "damped_sin", "--b", "0.3", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert!(r["dev"].as_f64().unwrap() < 1e-3);
}

#[test]
fn algebra_suite_passes() {
    let out = bin(&["verify", "--suite", "algebra", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    let summary = recs.last().unwrap();
    assert_eq!(summary["pass"], true);
    assert!(recs[..recs.len() - 1].iter().all(|r| r["name"].is_string() && r["dev"].is_number() && r["pass"].is_boolean()));
}

#[test]
fn spherical_suite_reports_the_kernel_identity_failure() {
    let out = bin(&["verify", "--suite", "spherical", "--failures-only"]);
    assert_eq!(out.status.code(), Some(1));
    let recs = records(&out);
    assert_eq!(recs[0]["name"], "kernel derivative identity");
    assert_eq!(recs.last().unwrap()["failed"], 1);
}

#[test]
fn runs_are_bit_identical() {
    let args = ["verify", "--suite", "catalog", "--seed", "7"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let single = Command::new(env!("CARGO_BIN_EXE_cdlaplace")).args(args).env("HCT_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, single.stdout);
}

#[test]
fn ode_configs() {
    let out = bin(&["ode", "--config", &config("forced_oscillator.toml")]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    let summary = recs.last().unwrap();
    assert_eq!(summary["pass"], true);
    assert!(summary["defect"]["max_defect"].as_f64().unwrap() <= 1e-4);
    // x(t) = sin(2t)/8 i2 + cos(2t) - t cos(2t)/4 i2
    for r in &recs[..recs.len() - 1] {
        let t = r["t"].as_f64().unwrap();
        let x = coeffs(&r["x"]);
        let want = [(2.0 * t).cos(), 0.0, (2.0 * t).sin() / 8.0 - t * (2.0 * t).cos() / 4.0, 0.0];
        assert!(x.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-9), "t={t}: {x:?}");
    }

    let out = bin(&["ode", "--config", &config("third_order.toml"), "--method", "bromwich"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    let at_one = recs.iter().find(|r| r["t"] == 1.0).unwrap();
    assert!((coeffs(&at_one["x"])[0] - 0.165_280_531).abs() < 1e-3);
}

#[test]
fn quaternion_coefficients_on_one_axis() {
    let path = temp_config(
        "coaxial.toml",
        r#"
order = 1
coeffs = ["1", "1 + 1i2"]
ics = ["1"]
method = "bromwich"
[t]
start = 0.5
stop = 1.0
step = 0.5
"#,
    );
    let out = bin(&["ode", "--config", &path]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let recs = records(&out);
    assert_eq!(recs.last().unwrap()["value_domain"], "quaternion_coeffs");
    // x = exp(-(1 + i2) t)
    let x = coeffs(&recs[1]["x"]);
    let e = (-1.0f64).exp();
    assert!((x[0] - e * 1f64.cos()).abs() < 1e-4 && (x[2] + e * 1f64.sin()).abs() < 1e-4, "{x:?}");
}

#[test]
fn usage_errors() {
    assert_eq!(bin(&["transform", "--pair", "sin", "--p", "2i9", "--level", "3"]).status.code(), Some(2));
    assert_eq!(bin(&["transform", "--pair", "nope", "--p", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["transform", "--pair", "sin", "--p", "-1"]).status.code(), Some(2));
    assert_eq!(bin(&["invert", "--num", "1 1", "--den", "1 1", "--t", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "--suite", "everything"]).status.code(), Some(2));

    let strict = temp_config(
        "strict.toml",
        "order = 1\ncoeffs = [\"1\", \"1\"]\nics = [\"0\"]\nextra = 3\n[t]\nstart = 0\nstop = 1\nstep = 0.5\n",
    );
    let out = bin(&["ode", "--config", &strict]);
    assert_eq!(out.status.code(), Some(2));
    assert!(records(&out)[0]["error"].as_str().unwrap().contains("extra"));

    let mixed = temp_config(
        "mixed.toml",
        "order = 2\ncoeffs = [\"1\", \"1i1\", \"1i2\"]\nics = [\"0\", \"1\"]\n[t]\nstart = 0\nstop = 1\nstep = 0.5\n",
    );
    assert_eq!(bin(&["ode", "--config", &mixed]).status.code(), Some(2));
}

#[test]
fn tolerance_is_honored() {
    let loose = records(&bin(&["invert", "--pair", "sin", "--t", "1", "--tol", "1e-3"]))[0].clone();
    let tight = records(&bin(&["invert", "--pair", "sin", "--t", "1", "--tol", "1e-8"]))[0].clone();
    assert!(tight["err_estimate"].as_f64().unwrap() < 1e-7);
    assert!(tight["theta_max"].as_f64().unwrap() > loose["theta_max"].as_f64().unwrap());
}

#[test]
fn table_lists_the_catalog() {
    let out = bin(&["table", "--rules"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert!(recs.iter().filter(|r| r["name"].is_string()).count() >= 18);
    assert!(recs.iter().all(|r| r["provenance"].is_string() || r["rule"].is_string()));
}
