//! The shipped transform pairs.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use super::spherical::spherical_tn_image;
use super::{PairKind, Params, TransformPair};
use crate::algebra::CDNumber;
use crate::error::{Error, Result};
use crate::inversion::RationalImage;
use crate::kernel::KernelSpec;
use crate::special::{erfc, gamma, sine_integral, slice_apply};
use crate::transforms::{Original, Support};

pub struct Entry {
    pub name: &'static str,
    pub defaults: &'static [(&'static str, f64)],
    /// Sampling ranges used for randomized rule instances.
    pub ranges: &'static [(&'static str, f64, f64)],
    pub validate: fn(&Params) -> Result<()>,
    pub build: fn(&Params) -> TransformPair,
}

impl Entry {
    pub fn defaults(&self) -> Params {
        self.defaults.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }
}

pub fn entry(name: &str) -> Result<&'static Entry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::NotFound(format!("no catalog pair named {name:?}")))
}

fn re(x: f64) -> CDNumber {
    CDNumber::real(1, x)
}

fn get(p: &Params, k: &str) -> f64 {
    p[k]
}

fn any(_: &Params) -> Result<()> {
    Ok(())
}

fn positive(keys: &'static [&'static str]) -> impl Fn(&Params) -> Result<()> {
    move |p: &Params| {
        for k in keys {
            if !(get(p, k) > 0.0) {
                return Err(Error::Input(format!("parameter {k} must be positive")));
            }
        }
        Ok(())
    }
}

fn omega_positive(p: &Params) -> Result<()> {
    positive(&["omega"])(p)
}

fn alpha_positive(p: &Params) -> Result<()> {
    positive(&["alpha"])(p)
}

fn a_positive(p: &Params) -> Result<()> {
    positive(&["a"])(p)
}

fn b_positive(p: &Params) -> Result<()> {
    positive(&["b"])(p)
}

fn damped_ok(p: &Params) -> Result<()> {
    if p.contains_key("omega") {
        omega_positive(p)?;
    }
    if p.contains_key("n") {
        order_ok(p)?;
    }
    Ok(())
}

fn order_ok(p: &Params) -> Result<()> {
    let n = get(p, "n");
    if n.fract() != 0.0 || !(0.0..=8.0).contains(&n) {
        return Err(Error::Input("n must be an integer in 0..=8".into()));
    }
    Ok(())
}

fn power_ok(p: &Params) -> Result<()> {
    if !(get(p, "a") > -1.0) {
        return Err(Error::Input("exponent a must exceed -1".into()));
    }
    Ok(())
}

fn distinct_rates(p: &Params) -> Result<()> {
    if get(p, "b") == get(p, "c") {
        return Err(Error::Input("b and c must differ".into()));
    }
    Ok(())
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Coefficients of `(p + b)^m`.
fn shifted_power(b: f64, m: u32) -> Vec<f64> {
    let mut c = vec![1.0];
    for _ in 0..m {
        let mut next = vec![0.0; c.len() + 1];
        for (i, x) in c.iter().enumerate() {
            next[i] += b * x;
            next[i + 1] += x;
        }
        c = next;
    }
    c
}

/// Base pair with a `zeta = 0` closed form.
fn base(
    name: &str,
    kind: PairKind,
    params: &Params,
    original: Original,
    strip: (f64, f64),
    provenance: &str,
    image: impl Fn(&CDNumber) -> CDNumber + Send + Sync + 'static,
) -> TransformPair {
    TransformPair {
        name: name.into(),
        kind,
        kernel: KernelSpec::linear(2),
        params: params.clone(),
        original,
        strip,
        provenance: provenance.into(),
        rational: None,
        exceptional: false,
        entire: true,
        real_valued: true,
        initial_value: None,
        final_value: None,
        tol: 1e-6,
        image: Arc::new(move |p: &CDNumber, zeta: &CDNumber| {
            if zeta.norm() != 0.0 {
                return Err(Error::Unsupported("closed form only at zeta = 0".into()));
            }
            Ok(image(p))
        }),
    }
}

fn rational_pair(
    name: &str,
    params: &Params,
    original: Original,
    s0: f64,
    provenance: &str,
    num: Vec<f64>,
    den: Vec<f64>,
) -> TransformPair {
    let r = RationalImage::real(num, den).expect("catalog rational image is proper");
    let img = r.clone();
    let mut pair = base(name, PairKind::OneSided, params, original, (s0, f64::INFINITY), provenance, move |p| img.eval(p));
    pair.rational = Some(r);
    pair
}

fn one(x: f64) -> Option<CDNumber> {
    Some(re(x))
}

fn step(p: &Params) -> TransformPair {
    let o = Original::right("1", 0.0, |_| re(1.0));
    let mut pair = rational_pair("step", p, o, 0.0, "unit step; one-sided, linear kernel", vec![1.0], vec![0.0, 1.0]);
    pair.initial_value = one(1.0);
    pair.final_value = one(1.0);
    pair
}

fn sin(p: &Params) -> TransformPair {
    let w = get(p, "omega");
    let o = Original::right("sin(omega t)", 0.0, move |t| re((w * t).sin())).with_osc(w);
    let mut pair = rational_pair("sin", p, o, 0.0, "sine; one-sided, linear kernel", vec![w], vec![w * w, 0.0, 1.0]);
    pair.initial_value = one(0.0);
    pair
}

fn cos(p: &Params) -> TransformPair {
    let w = get(p, "omega");
    let o = Original::right("cos(omega t)", 0.0, move |t| re((w * t).cos())).with_osc(w);
    let mut pair = rational_pair("cos", p, o, 0.0, "cosine; one-sided, linear kernel", vec![0.0, 1.0], vec![w * w, 0.0, 1.0]);
    pair.initial_value = one(1.0);
    pair
}

fn sh(p: &Params) -> TransformPair {
    let w = get(p, "omega");
    let o = Original::right("sh(omega t)", w, move |t| re((w * t).sinh()));
    let mut pair = rational_pair("sh", p, o, w, "hyperbolic sine; one-sided, linear kernel", vec![w], vec![-w * w, 0.0, 1.0]);
    pair.initial_value = one(0.0);
    pair
}

fn ch(p: &Params) -> TransformPair {
    let w = get(p, "omega");
    let o = Original::right("ch(omega t)", w, move |t| re((w * t).cosh()));
    let mut pair =
        rational_pair("ch", p, o, w, "hyperbolic cosine; one-sided, linear kernel", vec![0.0, 1.0], vec![-w * w, 0.0, 1.0]);
    pair.initial_value = one(1.0);
    pair
}

fn zeta_of(p: &Params) -> CDNumber {
    CDNumber::from_slice(2, &[get(p, "zeta0"), get(p, "zeta1"), get(p, "zeta2"), get(p, "zeta3")])
}

/// `int_0^inf exp(zeta t) exp(-p t) dt` for general `zeta` and `p`, from
/// the polar forms `exp(zeta t) = e^(zeta0 t)(cos at + N sin at)` and
/// `exp(-p t) = e^(-p0 t)(cos bt - P sin bt)`.
pub fn exp_zeta_image(p: &CDNumber, zeta: &CDNumber) -> CDNumber {
    let level = p.level().max(zeta.level());
    let c = p.re() - zeta.re();
    let a = zeta.imag_norm();
    let b = p.imag_norm();
    let n = zeta.axis().unwrap_or_else(|| CDNumber::zero(level));
    let pa = p.axis().unwrap_or_else(|| CDNumber::zero(level));
    let l = |w: f64| c / (c * c + w * w);
    let k = |w: f64| w / (c * c + w * w);
    let i_cc = 0.5 * (l(a - b) + l(a + b));
    let i_cs = 0.5 * (k(b + a) + k(b - a));
    let i_sc = 0.5 * (k(a + b) + k(a - b));
    let i_ss = 0.5 * (l(a - b) - l(a + b));
    let np = &n * &pa;
    let mut out = pa.scale(-i_cs) + n.scale(i_sc) - np.scale(i_ss);
    out = out.add_real(i_cc);
    out.embed(level).expect("level within range")
}

/// A long componentwise quaternion expression for the same image, kept for
/// comparison only.
pub fn expanded_exp_zeta_image(p: &CDNumber, zeta: &CDNumber) -> Result<CDNumber> {
    let pim = p.imag();
    let zim = zeta.imag();
    let pn = pim.norm();
    let zn = zim.norm();
    if pn == 0.0 || zn == 0.0 {
        return Err(Error::Unsupported("expanded formula needs non-real p and zeta".into()));
    }
    let n1 = zim.scale(1.0 / zn);
    let p1: f64 = pim.coeffs().iter().zip(n1.coeffs()).map(|(x, y)| x * y).sum();
    let rest = &pim - &n1.scale(p1);
    let p2 = rest.norm();
    let n2 = if p2 > 0.0 { rest.scale(1.0 / p2) } else { CDNumber::zero(rest.level()) };
    let c = zeta.re() - p.re();
    let a = pn + zn;
    let b = pn - zn;
    let ia = 1.0 / (c * c + a * a);
    let ib = 1.0 / (c * c + b * b);
    let v = a * ia + b * ib;
    let real = c * (ia * (1.0 - p1 / pn) + ib * (1.0 + p1 / pn));
    let out = n1.scale(v * (1.0 - p1 / pn)) - n2.scale(v * p2 / pn) - (&n1 * &n2).scale(c * (ia - ib) * p2 / pn);
    Ok(out.add_real(real).scale(0.5))
}

fn exp_zeta(p: &Params) -> TransformPair {
    let z = zeta_of(p);
    let zf = z.clone();
    let o = Original::right("exp(zeta t)", z.re(), move |t| zf.scale(t).exp()).with_osc(z.imag_norm());
    let zi = z.clone();
    let mut pair = base(
        "exp_zeta",
        PairKind::OneSided,
        p,
        o,
        (z.re(), f64::INFINITY),
        "exponential with a general quaternion rate; one-sided, linear kernel",
        move |q| exp_zeta_image(q, &zi),
    );
    pair.real_valued = false;
    pair.initial_value = Some(CDNumber::one(2));
    pair
}

fn tn(p: &Params) -> TransformPair {
    let n = get(p, "n") as u32;
    let o = Original::right("t^n", 0.0, move |t| re(t.powi(n as i32))).with_bound(factorial(n).max(1.0));
    let mut den = vec![0.0; n as usize + 2];
    den[n as usize + 1] = 1.0;
    let mut pair = rational_pair("tn", p, o, 0.0, "integer power; one-sided, linear kernel", vec![factorial(n)], den);
    pair.initial_value = one(if n == 0 { 1.0 } else { 0.0 });
    pair
}

fn t_sin(p: &Params) -> TransformPair {
    let w = get(p, "omega");
    let o = Original::right("t sin(omega t)", 0.0, move |t| re(t * (w * t).sin())).with_osc(w).with_bound(2.0);
    let den = vec![w.powi(4), 0.0, 2.0 * w * w, 0.0, 1.0];
    let mut pair = rational_pair("t_sin", p, o, 0.0, "t times sine; one-sided, linear kernel", vec![0.0, 2.0 * w], den);
    pair.initial_value = one(0.0);
    pair
}

fn t_cos(p: &Params) -> TransformPair {
    let w = get(p, "omega");
    let o = Original::right("t cos(omega t)", 0.0, move |t| re(t * (w * t).cos())).with_osc(w).with_bound(2.0);
    let den = vec![w.powi(4), 0.0, 2.0 * w * w, 0.0, 1.0];
    let mut pair = rational_pair("t_cos", p, o, 0.0, "t times cosine; one-sided, linear kernel", vec![-w * w, 0.0, 1.0], den);
    pair.initial_value = one(0.0);
    pair
}

fn damped_sin(p: &Params) -> TransformPair {
    let (b, w) = (get(p, "b"), get(p, "omega"));
    let o = Original::right("exp(-b t) sin(omega t)", -b, move |t| re((-b * t).exp() * (w * t).sin())).with_osc(w);
    let den = vec![b * b + w * w, 2.0 * b, 1.0];
    let mut pair = rational_pair("damped_sin", p, o, -b, "damped sine; one-sided, linear kernel", vec![w], den);
    pair.initial_value = one(0.0);
    pair.final_value = if b > 0.0 { one(0.0) } else { None };
    pair
}

fn damped_cos(p: &Params) -> TransformPair {
    let (b, w) = (get(p, "b"), get(p, "omega"));
    let o = Original::right("exp(-b t) cos(omega t)", -b, move |t| re((-b * t).exp() * (w * t).cos())).with_osc(w);
    let den = vec![b * b + w * w, 2.0 * b, 1.0];
    let mut pair = rational_pair("damped_cos", p, o, -b, "damped cosine; one-sided, linear kernel", vec![b, 1.0], den);
    pair.initial_value = one(1.0);
    pair.final_value = if b > 0.0 { one(0.0) } else { None };
    pair
}

fn damped_tn(p: &Params) -> TransformPair {
    let (b, n) = (get(p, "b"), get(p, "n") as u32);
    let o = Original::right("t^n exp(-b t)", -b, move |t| re(t.powi(n as i32) * (-b * t).exp())).with_bound(factorial(n).max(1.0));
    let den = shifted_power(b, n + 1);
    let mut pair = rational_pair("damped_tn", p, o, -b, "damped integer power; one-sided, linear kernel", vec![factorial(n)], den);
    pair.initial_value = one(if n == 0 { 1.0 } else { 0.0 });
    pair.final_value = if b > 0.0 { one(0.0) } else { None };
    pair
}

fn one_minus_exp(p: &Params) -> TransformPair {
    let b = get(p, "b");
    let o = Original::right("1 - exp(-b t)", 0.0, move |t| re(-(-b * t).exp_m1()));
    let mut pair =
        rational_pair("one_minus_exp", p, o, 0.0, "saturating exponential; one-sided, linear kernel", vec![b], vec![0.0, b, 1.0]);
    pair.initial_value = one(0.0);
    pair.final_value = one(1.0);
    pair
}

fn power(p: &Params) -> TransformPair {
    let a = get(p, "a");
    let mut o = Original::right("t^a", 0.0, move |t| re(t.powf(a)));
    if a < 0.0 {
        o = o.singular();
    }
    let g = gamma(Complex64::new(a + 1.0, 0.0)).re;
    let mut pair = base(
        "power",
        PairKind::OneSided,
        p,
        o,
        (0.0, f64::INFINITY),
        "real power with gamma-function image; exceptional for -1 < a < 0",
        move |q| slice_apply(q, |z| g * z.powf(-a - 1.0)),
    );
    pair.entire = false;
    if a < 0.0 {
        pair.exceptional = true;
        pair.tol = 1e-4;
    } else {
        pair.initial_value = one(if a == 0.0 { 1.0 } else { 0.0 });
    }
    pair
}

fn erfc_pair(p: &Params) -> TransformPair {
    let a = get(p, "a");
    let o = Original::right("erfc(a / (2 sqrt t))", 0.0, move |t| re(erfc(a / (2.0 * t.sqrt()))));
    let mut pair = base(
        "erfc",
        PairKind::OneSided,
        p,
        o,
        (0.0, f64::INFINITY),
        "complementary error function of a/(2 sqrt t); one-sided, linear kernel",
        move |q| slice_apply(q, |z| (-a * z.sqrt()).exp() / z),
    );
    pair.entire = false;
    pair.initial_value = one(0.0);
    pair.final_value = one(1.0);
    pair
}

fn arccot(z: Complex64) -> Complex64 {
    Complex64::new(0.5 * PI, 0.0) - z.atan()
}

fn sinc(p: &Params) -> TransformPair {
    let o = Original::right("sin(t)/t", 0.0, |t| re(if t == 0.0 { 1.0 } else { t.sin() / t })).with_osc(1.0);
    let mut pair = base("sinc", PairKind::OneSided, p, o, (0.0, f64::INFINITY), "sin t / t; image arccot p", |q| {
        slice_apply(q, arccot)
    });
    pair.initial_value = one(1.0);
    pair.final_value = one(0.0);
    pair
}

fn si(p: &Params) -> TransformPair {
    let o = Original::right("si(t)", 0.0, |t| re(sine_integral(t))).with_osc(1.0).with_bound(2.0);
    let mut pair = base("si", PairKind::OneSided, p, o, (0.0, f64::INFINITY), "sine integral; image arccot(p)/p", |q| {
        slice_apply(q, |z| arccot(z) / z)
    });
    pair.initial_value = one(0.0);
    pair.final_value = one(0.5 * PI);
    pair
}

fn exp_diff(p: &Params) -> TransformPair {
    let (b, c) = (get(p, "b"), get(p, "c"));
    let o = Original::right("(exp(b t) - exp(c t))/t", b.max(c), move |t| {
        re(if t == 0.0 { b - c } else { ((b * t).exp_m1() - (c * t).exp_m1()) / t })
    })
    .with_bound((b - c).abs());
    let mut pair = base(
        "exp_diff",
        PairKind::OneSided,
        p,
        o,
        (b.max(c), f64::INFINITY),
        "difference of exponentials over t; logarithmic image",
        move |q| slice_apply(q, |z| ((z - c) / (z - b)).ln()),
    );
    pair.initial_value = one(b - c);
    pair
}

fn two_sided(
    name: &str,
    p: &Params,
    original: Original,
    provenance: &str,
    image: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
) -> TransformPair {
    let strip = (original.s0, original.s1);
    base(name, PairKind::TwoSided, p, original, strip, provenance, move |q| slice_apply(q, &image))
}

fn abs_exp(p: &Params) -> TransformPair {
    let a = get(p, "alpha");
    let o = Original::new("exp(-alpha |t|)/2", Support::TwoSided, -a, a, move |t| re(0.5 * (-a * t.abs()).exp()));
    let mut pair = two_sided("abs_exp", p, o, "two-sided exponential; strip (-alpha, alpha)", move |z| a / (a * a - z * z));
    pair.entire = false;
    pair
}

fn gauss(p: &Params) -> TransformPair {
    let a = get(p, "alpha");
    let o = Original::new("exp(-alpha t^2)", Support::TwoSided, f64::NEG_INFINITY, f64::INFINITY, move |t| {
        re((-a * t * t).exp())
    })
    .with_bound(1.0);
    two_sided("gauss_twosided", p, o, "gaussian; entire two-sided image", move |z| (PI / a).sqrt() * (z * z / (4.0 * a)).exp())
}

fn logistic(p: &Params) -> TransformPair {
    let o = Original::new("1/(1+exp t)", Support::TwoSided, -1.0, 0.0, |t| {
        re(if t > 0.0 { (-t).exp() / (1.0 + (-t).exp()) } else { 1.0 / (1.0 + t.exp()) })
    });
    two_sided("logistic_twosided", p, o, "logistic function; strip (-1, 0)", |z| -PI / (PI * z).sin())
}

fn sech(p: &Params) -> TransformPair {
    let o = Original::new("1/ch t", Support::TwoSided, -1.0, 1.0, |t| {
        let e = (-t.abs()).exp();
        re(2.0 * e / (1.0 + e * e))
    })
    .with_bound(2.0);
    two_sided("sech_twosided", p, o, "hyperbolic secant; strip (-1, 1)", |z| PI / (0.5 * PI * z).cos())
}

fn spherical_tn(p: &Params) -> TransformPair {
    let n = get(p, "n") as u32;
    let o = Original::right("t^n", 0.0, move |t| re(t.powi(n as i32))).with_bound(factorial(n).max(1.0));
    TransformPair {
        name: "spherical_tn".into(),
        kind: PairKind::OneSided,
        kernel: KernelSpec::spherical(2),
        params: p.clone(),
        original: o,
        strip: (0.0, f64::INFINITY),
        provenance: "integer power under the spherical kernel; binomial T_n/S_n sums".into(),
        rational: None,
        exceptional: false,
        entire: true,
        real_valued: true,
        initial_value: one(if n == 0 { 1.0 } else { 0.0 }),
        final_value: None,
        tol: 1e-6,
        image: Arc::new(move |q: &CDNumber, zeta: &CDNumber| spherical_tn_image(n, q, zeta)),
    }
}

fn mellin(
    name: &str,
    p: &Params,
    label: &str,
    strip: (f64, f64),
    provenance: &str,
    g: impl Fn(f64) -> f64 + Send + Sync + 'static,
    image: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
) -> TransformPair {
    let o = Original::new(label, Support::PositiveAxisMultiplicative, strip.0, strip.1, move |x| re(g(x)));
    let mut pair = base(name, PairKind::Mellin, p, o, strip, provenance, move |q| slice_apply(q, &image));
    pair.entire = false;
    pair
}

fn mellin_rational(p: &Params) -> TransformPair {
    mellin("mellin_rational", p, "1/(1+tau)", (0.0, 1.0), "Mellin: 1/(1+tau) to pi/sin(pi p)", |x| 1.0 / (1.0 + x), |z| {
        PI / (PI * z).sin()
    })
}

fn mellin_rational_sq(p: &Params) -> TransformPair {
    mellin(
        "mellin_rational_sq",
        p,
        "1/(1+tau)^2",
        (0.0, 2.0),
        "Mellin: 1/(1+tau)^2 to (1-p) pi/sin(pi p)",
        |x| 1.0 / ((1.0 + x) * (1.0 + x)),
        |z| (1.0 - z) * PI / (PI * z).sin(),
    )
}

fn mellin_exp(p: &Params) -> TransformPair {
    mellin("mellin_exp", p, "exp(-tau)", (0.0, f64::INFINITY), "Mellin: exp(-tau) to Gamma(p)", |x| (-x).exp(), gamma)
}

fn mellin_gauss(p: &Params) -> TransformPair {
    mellin(
        "mellin_gauss",
        p,
        "exp(-tau^2)",
        (0.0, f64::INFINITY),
        "Mellin: exp(-tau^2) to Gamma(p/2)/2",
        |x| (-x * x).exp(),
        |z| 0.5 * gamma(0.5 * z),
    )
}

fn mellin_exp_shifted(p: &Params) -> TransformPair {
    mellin(
        "mellin_exp_shifted",
        p,
        "tau exp(-tau)",
        (-1.0, f64::INFINITY),
        "Mellin: tau exp(-tau) to Gamma(p+1)",
        |x| x * (-x).exp(),
        |z| gamma(z + 1.0),
    )
}

fn mellin_rational_sq_shifted(p: &Params) -> TransformPair {
    mellin(
        "mellin_rational_sq_shifted",
        p,
        "tau/(1+tau)^2",
        (-1.0, 1.0),
        "Mellin: tau/(1+tau)^2 to pi p/sin(pi p)",
        |x| x / ((1.0 + x) * (1.0 + x)),
        |z| if z.norm() < 1e-300 { Complex64::new(1.0, 0.0) } else { PI * z / (PI * z).sin() },
    )
}

fn mellin_gauss_shifted(p: &Params) -> TransformPair {
    mellin(
        "mellin_gauss_shifted",
        p,
        "tau exp(-tau^2)",
        (-1.0, f64::INFINITY),
        "Mellin: tau exp(-tau^2) to Gamma((p+1)/2)/2",
        |x| x * (-x * x).exp(),
        |z| 0.5 * gamma(0.5 * (z + 1.0)),
    )
}

pub static ENTRIES: &[Entry] = &[
    Entry { name: "step", defaults: &[], ranges: &[], validate: any, build: step },
    Entry { name: "sin", defaults: &[("omega", 1.0)], ranges: &[("omega", 0.5, 2.0)], validate: omega_positive, build: sin },
    Entry { name: "cos", defaults: &[("omega", 1.0)], ranges: &[("omega", 0.5, 2.0)], validate: omega_positive, build: cos },
    Entry { name: "sh", defaults: &[("omega", 1.0)], ranges: &[("omega", 0.3, 1.5)], validate: omega_positive, build: sh },
    Entry { name: "ch", defaults: &[("omega", 1.0)], ranges: &[("omega", 0.3, 1.5)], validate: omega_positive, build: ch },
    Entry {
        name: "exp_zeta",
        defaults: &[("zeta0", 0.2), ("zeta1", 0.5), ("zeta2", -0.3), ("zeta3", 0.4)],
        ranges: &[("zeta0", -0.5, 0.5), ("zeta1", -1.0, 1.0), ("zeta2", -1.0, 1.0), ("zeta3", -1.0, 1.0)],
        validate: any,
        build: exp_zeta,
    },
    Entry { name: "tn", defaults: &[("n", 2.0)], ranges: &[], validate: order_ok, build: tn },
    Entry { name: "t_sin", defaults: &[("omega", 1.0)], ranges: &[("omega", 0.5, 2.0)], validate: omega_positive, build: t_sin },
    Entry { name: "t_cos", defaults: &[("omega", 1.0)], ranges: &[("omega", 0.5, 2.0)], validate: omega_positive, build: t_cos },
    Entry {
        name: "damped_sin",
        defaults: &[("b", 0.5), ("omega", 1.0)],
        ranges: &[("b", 0.1, 1.5), ("omega", 0.5, 2.0)],
        validate: damped_ok,
        build: damped_sin,
    },
    Entry {
        name: "damped_cos",
        defaults: &[("b", 0.5), ("omega", 1.0)],
        ranges: &[("b", 0.1, 1.5), ("omega", 0.5, 2.0)],
        validate: damped_ok,
        build: damped_cos,
    },
    Entry {
        name: "damped_tn",
        defaults: &[("b", 0.5), ("n", 2.0)],
        ranges: &[("b", 0.1, 1.5)],
        validate: damped_ok,
        build: damped_tn,
    },
    Entry { name: "one_minus_exp", defaults: &[("b", 1.0)], ranges: &[("b", 0.3, 2.0)], validate: b_positive, build: one_minus_exp },
    Entry { name: "power", defaults: &[("a", -0.5)], ranges: &[], validate: power_ok, build: power },
    Entry { name: "erfc", defaults: &[("a", 1.0)], ranges: &[("a", 0.3, 2.0)], validate: a_positive, build: erfc_pair },
    Entry { name: "sinc", defaults: &[], ranges: &[], validate: any, build: sinc },
    Entry { name: "si", defaults: &[], ranges: &[], validate: any, build: si },
    Entry {
        name: "exp_diff",
        defaults: &[("b", -1.0), ("c", -2.0)],
        ranges: &[("b", -1.5, -0.2), ("c", -3.0, -1.6)],
        validate: distinct_rates,
        build: exp_diff,
    },
    Entry { name: "abs_exp", defaults: &[("alpha", 1.0)], ranges: &[("alpha", 0.5, 2.0)], validate: alpha_positive, build: abs_exp },
    Entry {
        name: "gauss_twosided",
        defaults: &[("alpha", 1.0)],
        ranges: &[("alpha", 0.5, 2.0)],
        validate: alpha_positive,
        build: gauss,
    },
    Entry { name: "logistic_twosided", defaults: &[], ranges: &[], validate: any, build: logistic },
    Entry { name: "sech_twosided", defaults: &[], ranges: &[], validate: any, build: sech },
    Entry { name: "spherical_tn", defaults: &[("n", 1.0)], ranges: &[], validate: order_ok, build: spherical_tn },
    Entry { name: "mellin_rational", defaults: &[], ranges: &[], validate: any, build: mellin_rational },
    Entry { name: "mellin_rational_sq", defaults: &[], ranges: &[], validate: any, build: mellin_rational_sq },
    Entry { name: "mellin_exp", defaults: &[], ranges: &[], validate: any, build: mellin_exp },
    Entry { name: "mellin_gauss", defaults: &[], ranges: &[], validate: any, build: mellin_gauss },
    Entry { name: "mellin_exp_shifted", defaults: &[], ranges: &[], validate: any, build: mellin_exp_shifted },
    Entry { name: "mellin_rational_sq_shifted", defaults: &[], ranges: &[], validate: any, build: mellin_rational_sq_shifted },
    Entry { name: "mellin_gauss_shifted", defaults: &[], ranges: &[], validate: any, build: mellin_gauss_shifted },
];
