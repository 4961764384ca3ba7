//! Algebraic and numerical invariants checked on random inputs.

use std::f64::consts::PI;

use proptest::prelude::*;

use cdlaplace::catalog::{catalog_list, lookup, PairKind};
use cdlaplace::inversion::{bromwich_invert, residue_invert_rational, series_invert, BromwichOptions, RationalImage};
use cdlaplace::kernel::{eval_m, eval_u};
use cdlaplace::ode::{grid, solve_ode, Forcing, Method, ODEProblem, SolveOptions};
use cdlaplace::quadrature::{integrate_interval, integrate_semi_axis};
use cdlaplace::transforms::{laplace_one_sided, laplace_two_sided, Original, Support, TransformRequest};
use cdlaplace::{parse_literal, CDNumber, Error, IntegrandProfile, KernelSpec};

fn cd(level: u8, scale: f64) -> impl Strategy<Value = CDNumber> {
    prop::collection::vec(-scale..scale, 1usize << level).prop_map(move |c| CDNumber::from_slice(level, &c))
}

fn unit_imaginary(level: u8) -> impl Strategy<Value = CDNumber> {
    prop::collection::vec(-1.0..1.0f64, (1usize << level) - 1)
        .prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-2)
        .prop_map(move |v| {
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            let mut c = vec![0.0];
            c.extend(v.iter().map(|x| x / n));
            CDNumber::from_slice(level, &c)
        })
}

fn level_and<S: Strategy>(levels: std::ops::RangeInclusive<u8>, f: impl Fn(u8) -> S + Clone) -> impl Strategy<Value = S::Value> {
    levels.prop_flat_map(f)
}

#[test]
fn generator_table_to_level_five() {
    for r in 1..=5u8 {
        let n = 1usize << r;
        let one = CDNumber::one(r);
        for j in 1..n {
            let ij = CDNumber::unit(r, j).unwrap();
            assert_eq!(&ij * &ij, -&one, "i{j}^2 at r={r}");
            for k in 1..n {
                if j != k {
                    let ik = CDNumber::unit(r, k).unwrap();
                    assert_eq!(&ij * &ik, -&(&ik * &ij), "i{j} i{k} at r={r}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alternative_up_to_octonions((x, y) in level_and(1..=3, |r| (cd(r, 2.0), cd(r, 2.0)))) {
        let scale = (x.norm() * x.norm() * y.norm()).max(1.0);
        prop_assert!((&x * &(&x * &y)).dist_max(&(&(&x * &x) * &y)) <= 1e-12 * scale);
        prop_assert!((&(&y * &x) * &x).dist_max(&(&y * &(&x * &x))) <= 1e-12 * scale);
    }

    #[test]
    fn power_associative(z in level_and(1..=5, |r| cd(r, 1.2)), n in 0i64..=6, m in 0i64..=6) {
        prop_assume!(n + m <= 6);
        let lhs = &z.powi(n).unwrap() * &z.powi(m).unwrap();
        let rhs = z.powi(n + m).unwrap();
        prop_assert!(lhs.dist(&rhs) <= 1e-12 * z.norm().powi((n + m) as i32).max(1.0));
    }

    #[test]
    fn norm_multiplicative((x, y) in level_and(1..=3, |r| (cd(r, 3.0), cd(r, 3.0)))) {
        prop_assert!(((&x * &y).norm() - x.norm() * y.norm()).abs() <= 1e-12 * (x.norm() * y.norm()).max(1.0));
    }

    #[test]
    fn exp_of_negation_is_inverse(z in level_and(1..=4, |r| cd(r, 10.0))) {
        let z = if z.norm() > 10.0 { z.scale(10.0 / z.norm()) } else { z };
        let prod = &z.exp() * &(-&z).exp();
        prop_assert!(prod.dist_max(&CDNumber::one(z.level())) <= 1e-10);
    }

    #[test]
    fn components_recovered(z in level_and(2..=4, |r| cd(r, 5.0))) {
        for j in 0..z.dim() {
            prop_assert!((z.component(j).unwrap() - z.coeff(j)).abs() <= 1e-12);
        }
    }

    #[test]
    fn literals_round_trip(z in level_and(2..=4, |r| cd(r, 100.0))) {
        let back = parse_literal(&z.to_string(), Some(z.level())).unwrap();
        prop_assert_eq!(back, z);
    }

    #[test]
    fn m_is_purely_imaginary(p in cd(2, 3.0), zeta in cd(2, 3.0), t in 0.0..5.0f64) {
        prop_assert_eq!(eval_m(&p, t, &zeta).unwrap().re(), 0.0);
    }

    #[test]
    fn spherical_equals_linear_on_the_slice(a in -3.0..3.0f64, b in -3.0..3.0f64, z0 in -1.0..1.0f64, z1 in -1.0..1.0f64, t in 0.0..4.0f64) {
        let p = CDNumber::from_slice(2, &[a, b, 0.0, 0.0]);
        let zeta = CDNumber::from_slice(2, &[z0, z1, 0.0, 0.0]);
        let lin = eval_u(KernelSpec::linear(2), &p, t, &zeta).unwrap();
        let sph = eval_u(KernelSpec::spherical(2), &p, t, &zeta).unwrap();
        prop_assert!(lin.dist_max(&sph) <= 1e-14 * lin.norm().max(1.0));
    }

    #[test]
    fn phase_shift(p in cd(2, 2.0), zeta in cd(2, 1.0), t in 0.0..3.0f64, tau in 0.0..2.0f64) {
        let k = KernelSpec::spherical(2);
        let shifted = eval_u(k, &p, t, &(&zeta + &p.scale(tau))).unwrap();
        let later = eval_u(k, &p, t + tau, &zeta).unwrap();
        prop_assert!(shifted.dist_max(&later) <= 1e-12 * later.norm().max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn gauss_kronrod_panels_integrate_polynomials(coeffs in prop::collection::vec(-2.0..2.0f64, 1..=12), a in -2.0..0.0f64, w in 0.1..2.0f64) {
        let b = a + w;
        let poly = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
        let anti = |x: f64| coeffs.iter().enumerate().rev().fold(0.0, |acc, (k, c)| acc * x + c / (k + 1) as f64) * x;
        let got = integrate_interval(|x| CDNumber::real(1, poly(x)), a, b, 1e-3).unwrap();
        let want = anti(b) - anti(a);
        prop_assert!((got.value.re() - want).abs() <= 1e-13 * want.abs().max(1.0));
    }

    #[test]
    fn tail_bound_is_sound(d in 0.3..3.0f64, omega in 0.0..5.0f64, c in 0.5..4.0f64) {
        let profile = IntegrandProfile::new(d, omega, c);
        let got = integrate_semi_axis(|t| CDNumber::real(1, c * (-d * t).exp() * (omega * t).cos()), profile, 1e-8).unwrap();
        let want = c * d / (d * d + omega * omega);
        prop_assert!((got.value.re() - want).abs() <= got.err_estimate.max(1e-15));
    }

    #[test]
    fn slice_equivariance(a in 0.2..3.0f64, theta in -3.0..3.0f64, s in level_and(2..=3, unit_imaginary)) {
        for name in ["sin", "damped_cos", "one_minus_exp"] {
            let pair = lookup(name).unwrap();
            let complex = laplace_one_sided(&TransformRequest::new(pair.original.clone(), KernelSpec::linear(1), CDNumber::from_slice(1, &[a, theta])).with_tol(1e-11)).unwrap().value;
            let p = CDNumber::from_slice_pair(a, theta, &s);
            let hyper = laplace_one_sided(&TransformRequest::new(pair.original.clone(), KernelSpec::linear(s.level()), p).with_tol(1e-11)).unwrap().value;
            let want = CDNumber::from_slice_pair(complex.coeff(0), complex.coeff(1), &s);
            prop_assert!(hyper.dist_max(&want) <= 1e-9, "{} {} {}", name, hyper, want);
        }
    }

    #[test]
    fn linear_with_quaternion_scalars(alpha in cd(2, 2.0), beta in cd(2, 2.0), p in cd(2, 1.5)) {
        let p = p.add_real(1.0 - p.re() + 0.7);
        let f = lookup("sin").unwrap().original;
        let g = lookup("damped_cos").unwrap().original;
        let (ff, gf) = (f.formula_fn(), g.formula_fn());
        let (al, be) = (alpha.clone(), beta.clone());
        let combo = Original::right("alpha sin + beta damped_cos", 0.0, move |t| &(&al * &ff(t)) + &(&be * &gf(t)));
        let tr = |o: Original| laplace_one_sided(&TransformRequest::new(o, KernelSpec::linear(2), p.clone()).with_tol(1e-11)).unwrap().value;
        let lhs = tr(combo);
        let rhs = &(&alpha * &tr(f)) + &(&beta * &tr(g));
        prop_assert!(lhs.dist_max(&rhs) <= 1e-8 * rhs.norm().max(1.0));
    }

    #[test]
    fn two_sided_is_the_sum_of_reflected_halves(x in -0.8..0.8f64, y in -2.0..2.0f64, z in -2.0..2.0f64) {
        let pair = lookup("abs_exp").unwrap();
        let o = pair.original.clone();
        let p = CDNumber::from_slice(2, &[x, y, z, 0.3]);
        let whole = laplace_two_sided(&TransformRequest::new(o.clone(), KernelSpec::linear(2), p.clone()).with_tol(1e-11)).unwrap().value;
        let fo = o.formula_fn();
        let fr = o.formula_fn();
        let right = Original::new("right", Support::RightAxis, o.s0, f64::INFINITY, move |t| fo(t));
        let left = Original::new("left", Support::RightAxis, -o.s1, f64::INFINITY, move |t| fr(-t));
        let r = laplace_one_sided(&TransformRequest::new(right, KernelSpec::linear(2), p.clone()).with_tol(1e-11)).unwrap().value;
        let l = laplace_one_sided(&TransformRequest::new(left, KernelSpec::linear(2), -&p).with_tol(1e-11)).unwrap().value;
        prop_assert!(whole.dist_max(&(&r + &l)) <= 1e-9);
    }

    #[test]
    fn damped_oscillators_solve_cleanly(c1 in 0.2..3.0f64, c2 in 0.5..6.0f64, x0 in -2.0..2.0f64, x1 in -2.0..2.0f64) {
        let r = |x: f64| CDNumber::real(2, x);
        let prob = ODEProblem::new(vec![r(1.0), r(c1), r(c2)], vec![r(x0), r(x1)], Forcing::Zero).unwrap();
        match solve_ode(&prob, &grid(0.0, 3.0, 0.5).unwrap(), Method::Residue, SolveOptions::default()) {
            Ok(sol) => {
                prop_assert!(sol.initial_error.unwrap() <= 1e-6);
                prop_assert!(!sol.defect.flagged, "{:?}", sol.defect);
            }
            // a nearly double root is reported rather than mis-resolved
            Err(Error::Conditioning(_)) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}

#[test]
fn images_vanish_along_the_real_axis() {
    for pair in catalog_list().into_iter().filter(|p| p.kind == PairKind::OneSided) {
        let sizes: Vec<f64> = [10.0, 100.0, 1000.0]
            .iter()
            .map(|&rho| pair.image(&CDNumber::real(2, rho)).unwrap().norm())
            .collect();
        assert!(sizes[0] > sizes[1] && sizes[1] > sizes[2] && sizes[2] <= 0.1 * sizes[0], "{}: {sizes:?}", pair.name);
    }
}

#[test]
fn residue_round_trip_on_rational_pairs() {
    let mut seen = 0;
    for pair in catalog_list().into_iter().filter(|p| p.rational.is_some()) {
        let r = pair.rational.as_ref().unwrap();
        for t in [0.1, 0.5, 1.0, 2.0, 5.0] {
            let want = pair.original.eval(t);
            let got = residue_invert_rational(r, t).unwrap();
            assert!(got.dist_max(&want) <= 1e-9 * want.norm().max(1.0), "{} at {t}: {got} vs {want}", pair.name);
        }
        seen += 1;
    }
    assert!(seen >= 8);
}

#[test]
fn bromwich_agrees_with_residues_on_rational_pairs() {
    let i1 = CDNumber::unit(2, 1).unwrap();
    for pair in catalog_list().into_iter().filter(|p| p.rational.is_some()) {
        let r = pair.rational.as_ref().unwrap();
        let a = pair.strip.0.max(0.0) + 0.5;
        for t in [0.5, 1.0, 2.0] {
            let b = bromwich_invert(|p: &CDNumber| r.eval(p), a, &i1, t, KernelSpec::linear(2), 1e-6, &BromwichOptions::one_sided(pair.strip.0))
                .unwrap()
                .value;
            let res = residue_invert_rational(r, t).unwrap();
            assert!(b.dist_max(&res) <= 1e-3, "{} at {t}: {b} vs {res}", pair.name);
        }
    }
}

#[test]
fn step_line_integral_converges_at_first_order() {
    // 1/p at t = 1 with theta_max doubled each time; a tolerance that is
    // never met forces the full ladder.
    let i1 = CDNumber::unit(2, 1).unwrap();
    let errs: Vec<f64> = [256.0, 512.0, 1024.0, 2048.0]
        .iter()
        .map(|&theta_max| {
            let opts = BromwichOptions { theta_max, ..BromwichOptions::one_sided(0.0) };
            match bromwich_invert(|p: &CDNumber| p.inverse().unwrap(), 0.5, &i1, 1.0, KernelSpec::linear(2), 1e-300, &opts) {
                Err(Error::Accuracy { best, .. }) => (best[0] - 1.0).abs(),
                other => panic!("{other:?}"),
            }
        })
        .collect();
    for w in errs.windows(2) {
        assert!(w[1] <= 0.6 * w[0] || w[1] < 1e-12, "{errs:?}");
    }
}

#[test]
fn series_of_exponential_within_bound() {
    let r = RationalImage::real(vec![1.0], vec![1.0, 1.0]).unwrap();
    for terms in [5, 10, 20] {
        let tail = r.laurent_tail(terms).unwrap();
        for t in [0.1, 0.5, 1.0] {
            let s = series_invert(&tail, t).unwrap();
            assert!((s.value.re() - (-t).exp()).abs() <= s.remainder_bound + 1e-15, "{terms} {t}");
        }
    }
}

#[test]
fn gauss_point_value() {
    let g = lookup("gauss_twosided").unwrap();
    let v = g.image(&CDNumber::real(2, 1.0)).unwrap();
    assert!((v.re() - PI.sqrt() * 0.25f64.exp()).abs() < 1e-12);
}
