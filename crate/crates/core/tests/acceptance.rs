//! Acceptance gate. Prints one PASS/FAIL line per criterion. It runs
//! without the libtest harness, so the lines show up in `cargo test`
//! output; any unexpected outcome panics and fails the target.
//!
//! Criteria 3 and 5 fail on the identities that do not hold for a full
//! quaternion `p` (the spherical-kernel derivative identity and the rules
//! built on it, and the sign of the Mellin integration rules). The test
//! asserts that those are the only failures.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use cdlaplace::catalog::verify::{
    algebra_suite, catalog_suite, gamma_round_trip, rules_suite, spherical_suite, verify_rule, INSTANCE_CLASSES,
};
use cdlaplace::catalog::{build_pair, catalog_list, lookup, rules::lookup_rule, CheckRecord, ProbeClass, RuleFamily};
use cdlaplace::inversion::{bromwich_invert, residue_invert_rational, BromwichOptions, RationalImage};
use cdlaplace::ode::{grid, solve_ode, Forcing, Method, ODEProblem, SolveOptions};
use cdlaplace::{CDNumber, KernelSpec};

const SEED: u64 = 42;

/// Rules that fail for a full quaternion `p` and hold on the `i1` slice.
const SPHERICAL_DEFECTS: &[&str] = &[
    "spherical_derivative",
    "spherical_image_derivative",
    "spherical_initial_value",
    "spherical_final_value",
    "ts_spherical_derivative",
    "ts_spherical_image_derivative",
    "mellin_spherical_derivative",
    "mellin_spherical_log_derivative",
    "mellin_spherical_image_derivative",
];

/// Rules whose stated sign is wrong; the negated forms pass.
const SIGN_DEFECTS: &[&str] = &["mellin_integration", "mellin_integration_right"];

struct Verdict {
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn report(n: u32, title: &str, v: &Verdict) {
    let word = if v.pass { "PASS" } else { "FAIL" };
    println!("criterion {n} {word}: {title} ({:.1} s) {}", v.elapsed.as_secs_f64(), v.detail);
}

fn timed(budget: f64, f: impl FnOnce() -> (bool, String)) -> Verdict {
    let start = Instant::now();
    let (pass, detail) = f();
    let elapsed = start.elapsed();
    let in_time = elapsed.as_secs_f64() < budget;
    let detail = if in_time { detail } else { format!("{detail}; over the {budget} s budget") };
    Verdict { pass: pass && in_time, detail, elapsed }
}

fn failures(records: &[CheckRecord]) -> Vec<&CheckRecord> {
    records.iter().filter(|r| r.gating() && !r.pass).collect()
}

fn rule_of(record: &CheckRecord) -> &str {
    record.name.split('/').next().unwrap_or("")
}

fn summarize(records: &[CheckRecord]) -> String {
    let gating = records.iter().filter(|r| r.gating()).count();
    let bad = failures(records);
    let mut names: Vec<&str> = bad.iter().map(|r| r.name.as_str()).collect();
    names.dedup();
    if bad.is_empty() {
        format!("{gating} checks")
    } else {
        format!("{} of {gating} checks failed: {}", bad.len(), names.join(", "))
    }
}

fn criterion_1() -> Verdict {
    timed(10.0, || {
        let r = algebra_suite(SEED);
        (failures(&r).is_empty(), summarize(&r))
    })
}

fn criterion_2() -> Verdict {
    timed(60.0, || {
        let pairs = catalog_list().len();
        let r = catalog_suite(SEED, None);
        let named = ["logistic_twosided at -0.5", "gauss_twosided at 1"]
            .iter()
            .all(|n| r.iter().any(|c| c.name == *n && c.pass));
        (pairs >= 18 && named && failures(&r).is_empty(), format!("{pairs} pairs, {}", summarize(&r)))
    })
}

fn criterion_3() -> (Verdict, Vec<CheckRecord>) {
    let mut records = Vec::new();
    let v = timed(120.0, || {
        records = rules_suite(&[RuleFamily::OneSided, RuleFamily::TwoSided, RuleFamily::Mellin], SEED, None);
        let mut rules: Vec<&str> = records.iter().map(rule_of).collect();
        rules.dedup();
        let mut bad: Vec<&str> = failures(&records).iter().map(|r| rule_of(r)).collect();
        bad.sort();
        bad.dedup();
        let shape = cdlaplace::catalog::rule_list().iter().all(|r| r.bases.len() >= 3);
        (
            shape && bad.is_empty(),
            format!("{} rules x bases x {} instances; failing rules: {}", rules.len(), INSTANCE_CLASSES.len(), bad.join(", ")),
        )
    });
    (v, records)
}

fn criterion_4() -> Verdict {
    timed(f64::INFINITY, || {
        let k = KernelSpec::linear(2);
        let i1 = CDNumber::unit(2, 1).unwrap();
        let exp_minus = build_pair(
            "exp_zeta",
            &[("zeta0", -1.0), ("zeta1", 0.0), ("zeta2", 0.0), ("zeta3", 0.0)].map(|(k, v)| (k.to_string(), v)).into(),
        )
        .unwrap();
        let t1 = build_pair("tn", &[("n".to_string(), 1.0)].into()).unwrap();
        let t2 = build_pair("tn", &[("n".to_string(), 2.0)].into()).unwrap();
        let pairs = [lookup("step").unwrap(), exp_minus, lookup("sin").unwrap(), t1, t2];
        // the same originals as rational images, ascending coefficients
        let rationals = [
            RationalImage::real(vec![1.0], vec![0.0, 1.0]),
            RationalImage::real(vec![1.0], vec![1.0, 1.0]),
            RationalImage::real(vec![1.0], vec![1.0, 0.0, 1.0]),
            RationalImage::real(vec![1.0], vec![0.0, 0.0, 1.0]),
            RationalImage::real(vec![2.0], vec![0.0, 0.0, 0.0, 1.0]),
        ]
        .map(Result::unwrap);
        let mut worst_bromwich = 0.0f64;
        let mut worst_residue = 0.0f64;
        let mut worst_agree = 0.0f64;
        let mut worst_negative = 0.0f64;
        for (pair, rational) in pairs.iter().zip(&rationals) {
            let image = |p: &CDNumber| pair.image(p).unwrap();
            let opts = BromwichOptions::one_sided(pair.strip.0);
            let a = pair.strip.0 + 0.5;
            for t in [0.5, 1.0, 2.0] {
                let exact = pair.original.eval(t);
                let b = bromwich_invert(image, a, &i1, t, k, 1e-6, &opts).unwrap().value;
                let r = residue_invert_rational(rational, t).unwrap();
                worst_bromwich = worst_bromwich.max(b.dist_max(&exact));
                worst_residue = worst_residue.max(r.dist_max(&exact));
                worst_agree = worst_agree.max(b.dist_max(&r));
            }
            let neg = bromwich_invert(image, a, &i1, -1.0, k, 1e-6, &opts).unwrap().value;
            worst_negative = worst_negative.max(neg.norm()).max(residue_invert_rational(rational, -1.0).unwrap().norm());
        }
        let step = lookup("step").unwrap();
        let mid = bromwich_invert(|p: &CDNumber| step.image(p).unwrap(), 0.5, &i1, 0.0, k, 1e-4, &BromwichOptions::one_sided(0.0))
            .unwrap();
        let mid_dev = (mid.value.re() - 0.5).abs();
        let pass = worst_bromwich <= 1e-3 && worst_residue <= 1e-9 && worst_agree <= 1e-3 && worst_negative <= 1e-3 && mid_dev <= 5e-2;
        (
            pass,
            format!(
                "bromwich {worst_bromwich:.1e}, residue {worst_residue:.1e}, agreement {worst_agree:.1e}, t<0 {worst_negative:.1e}, midpoint {mid_dev:.1e}"
            ),
        )
    })
}

fn criterion_5() -> (Verdict, Vec<CheckRecord>) {
    let mut records = Vec::new();
    let v = timed(f64::INFINITY, || {
        records = spherical_suite(SEED);
        (failures(&records).is_empty(), summarize(&records))
    });
    (v, records)
}

fn q(c: [f64; 4]) -> CDNumber {
    CDNumber::from_slice(2, &c)
}

fn criterion_6() -> Verdict {
    timed(f64::INFINITY, || {
        let r = |x: f64| CDNumber::real(2, x);
        // x'' + x a^2 = b sin(at), a = 2, b = i2, x0 = 1, x1 = 0
        let (a, b, x0, x1) = (2.0, q([0.0, 0.0, 1.0, 0.0]), r(1.0), r(0.0));
        let forcing = Forcing::Pair { name: "sin".into(), params: [("omega".to_string(), a)].into(), coeff: b.clone() };
        let p1 = ODEProblem::new(vec![r(1.0), r(0.0), r(a * a)], vec![x0.clone(), x1.clone()], forcing).unwrap();
        let ts = grid(0.0, 5.0, 0.05).unwrap();
        let s1 = solve_ode(&p1, &ts, Method::Residue, SolveOptions::default()).unwrap();
        let e1 = ts
            .iter()
            .zip(&s1.x)
            .map(|(&t, x)| {
                let want = (&x1 + &b.scale(0.5 / a)).scale((a * t).sin() / a) + (&x0 - &b.scale(t / (2.0 * a))).scale((a * t).cos());
                x.dist_max(&want)
            })
            .fold(0.0, f64::max);

        // x''' + x = 1 with zero data
        let step = Forcing::Pair { name: "step".into(), params: Default::default(), coeff: r(1.0) };
        let p2 = ODEProblem::new(vec![r(1.0), r(0.0), r(0.0), r(1.0)], vec![r(0.0); 3], step).unwrap();
        let s2 = solve_ode(&p2, &ts, Method::Residue, SolveOptions::default()).unwrap();
        let closed = |t: f64| 1.0 - (-t).exp() / 3.0 - 2.0 / 3.0 * (t / 2.0).exp() * (3f64.sqrt() * t / 2.0).cos();
        let e2 = ts.iter().zip(&s2.x).map(|(&t, x)| x.dist_max(&r(closed(t)))).fold(0.0, f64::max);
        let x0_err = s2.x[0].norm();

        let coarse = grid(0.0, 2.0, 0.5).unwrap();
        let mut agree = 0.0f64;
        for p in [&p1, &p2] {
            let res = solve_ode(p, &coarse, Method::Residue, SolveOptions::default()).unwrap();
            let bro = solve_ode(p, &coarse, Method::Bromwich, SolveOptions::default()).unwrap();
            agree = res.x.iter().zip(&bro.x).map(|(u, v)| u.dist_max(v)).fold(agree, f64::max);
        }
        let defect = s1.defect.max_defect.max(s2.defect.max_defect);
        let pass = e1 <= 1e-6 && e2 <= 1e-6 && x0_err <= 1e-9 && !s1.defect.flagged && !s2.defect.flagged && agree <= 1e-3;
        (
            pass,
            format!("example 1 {e1:.1e}, example 2 {e2:.1e}, x(0) {x0_err:.1e}, defect {defect:.1e}, residue vs bromwich {agree:.1e}"),
        )
    })
}

fn criterion_7() -> Verdict {
    timed(f64::INFINITY, || {
        let pair = lookup("mellin_rational").unwrap();
        let p = CDNumber::real(2, 0.5);
        let forward = pair.forward(&p, &CDNumber::zero(2), 1e-10).unwrap().value;
        let point = (forward.re() - PI).abs().max(forward.imag_norm()) / PI;
        let mut records: Vec<CheckRecord> = Vec::new();
        for name in ["mellin_derivative", "mellin_convolution"] {
            let rule = lookup_rule(name).unwrap();
            for base in rule.bases {
                records.extend(verify_rule(rule, base, SEED, INSTANCE_CLASSES.len(), None));
            }
        }
        let gamma = gamma_round_trip();
        let pass = point <= 1e-6 && failures(&records).is_empty() && failures(&gamma).is_empty();
        (pass, format!("M[1/(1+tau)](0.5) rel {point:.1e}; rules {}; Gamma round trip {}", summarize(&records), summarize(&gamma)))
    })
}

/// Every failing record of a known spherical defect passes again when `p`
/// is real or on the `i1` slice. The image-derivative rules are left out:
/// their direction `h` is a full quaternion in every instance.
fn spherical_defects_confined_to_full_quaternions() {
    for name in SPHERICAL_DEFECTS.iter().filter(|n| !n.ends_with("image_derivative")) {
        let rule = lookup_rule(name).unwrap();
        for base in rule.bases {
            let recs = verify_rule(rule, base, SEED, INSTANCE_CLASSES.len(), None);
            for (rec, class) in recs.iter().zip(INSTANCE_CLASSES) {
                if class != ProbeClass::Full && rec.gating() {
                    assert!(rec.pass, "{} failed on a {class:?} instance: {rec:?}", rec.name);
                }
            }
        }
    }
}

fn main() {
    let c1 = criterion_1();
    report(1, "algebra suite", &c1);
    let c2 = criterion_2();
    report(2, "catalog forward suite", &c2);
    let (c3, rules) = criterion_3();
    report(3, "operational-rule suite", &c3);
    let c4 = criterion_4();
    report(4, "inversion round trip", &c4);
    let (c5, spherical) = criterion_5();
    report(5, "spherical-kernel suite", &c5);
    let c6 = criterion_6();
    report(6, "ODE suite", &c6);
    let c7 = criterion_7();
    report(7, "Mellin suite", &c7);

    for (n, c) in [(1, &c1), (2, &c2), (4, &c4), (6, &c6), (7, &c7)] {
        assert!(c.pass, "criterion {n}: {}", c.detail);
    }

    // Criterion 3 fails only on the known defects, and each of them is
    // actually reproduced.
    let bad: Vec<&str> = failures(&rules).iter().map(|r| rule_of(r)).collect();
    for rule in &bad {
        assert!(SPHERICAL_DEFECTS.contains(rule) || SIGN_DEFECTS.contains(rule), "unexpected rule failure: {rule}");
    }
    for rule in SPHERICAL_DEFECTS.iter().chain(SIGN_DEFECTS) {
        assert!(bad.contains(rule), "defect in {rule} was not reproduced");
    }
    assert!(!c3.pass);
    for corrected in ["mellin_integration_corrected", "mellin_integration_right_corrected"] {
        let recs: Vec<&CheckRecord> = rules.iter().filter(|r| rule_of(r) == corrected).collect();
        assert!(!recs.is_empty() && recs.iter().all(|r| r.pass), "{corrected}");
    }
    spherical_defects_confined_to_full_quaternions();

    // Criterion 5 fails only on the kernel derivative identity; the same
    // identity holds with p on the i1 slice.
    let bad: Vec<&str> = failures(&spherical).iter().map(|r| r.name.as_str()).collect();
    assert_eq!(bad, ["kernel derivative identity"]);
    assert!(spherical.iter().any(|r| r.name.ends_with("p in R + i1 R") && r.pass));
    assert!(!c5.pass);
    println!("acceptance: outcome matches the expected pattern");
}
