//! Operational rules as data: each rule builds both sides of an identity
//! from a base pair and a random instance, so every pair added to the
//! catalog widens the coverage of every rule that accepts it.

use std::f64::consts::FRAC_PI_2;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{forward_original, random_pair, sample_re, PairKind, ProbeClass, TransformPair};
use crate::algebra::CDNumber;
use crate::error::{Error, Result};
use crate::kernel::{KernelSpec, KernelVariant};
use crate::quadrature::integrate_interval;
use crate::transforms::{Original, TimeFn};

/// Forward quadrature tolerance for rule sides.
const QTOL: f64 = 1e-10;
/// Tighter tolerance for values that feed a finite difference.
const QTOL_FD: f64 = 1e-12;
const INNER_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleFamily {
    OneSided,
    TwoSided,
    Mellin,
}

/// One evaluated instance of a rule.
#[derive(Clone, Debug)]
pub struct RuleInstance {
    pub base: String,
    pub class: ProbeClass,
    pub params: String,
    pub p: CDNumber,
    pub lhs: CDNumber,
    pub rhs: CDNumber,
}

pub struct Ctx<'a> {
    pub pair: &'a TransformPair,
    pub kernel: KernelSpec,
    pub class: ProbeClass,
}

pub type BuildFn = fn(&Ctx, &mut ChaCha8Rng) -> Result<RuleInstance>;
pub type HypothesisFn = fn(&TransformPair) -> std::result::Result<(), String>;

pub struct OperationalRule {
    pub name: &'static str,
    pub family: RuleFamily,
    pub kernel: KernelVariant,
    pub statement: &'static str,
    pub bases: &'static [&'static str],
    pub tol: f64,
    /// Bases checked at the looser conditional-convergence tolerance.
    pub relaxed: &'static [&'static str],
    /// Reported but kept out of the pass/fail gate.
    pub informational: bool,
    pub hypothesis: HypothesisFn,
    pub build: BuildFn,
}

impl OperationalRule {
    pub fn tol_for(&self, base: &str) -> f64 {
        if self.relaxed.contains(&base) {
            1e-4
        } else {
            self.tol
        }
    }

    /// Draws a random instance of `base` and evaluates both sides.
    pub fn instance(&self, base: &str, class: ProbeClass, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
        let pair = random_pair(base, rng)?;
        (self.hypothesis)(&pair).map_err(|why| Error::Contract(format!("hypothesis not met: {why}")))?;
        let ctx = Ctx { pair: &pair, kernel: KernelSpec { variant: self.kernel, level: 2 }, class };
        (self.build)(&ctx, rng)
    }
}

pub fn rule_list() -> &'static [OperationalRule] {
    RULES
}

pub fn lookup_rule(name: &str) -> Result<&'static OperationalRule> {
    RULES
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::NotFound(format!("no rule named {name:?}")))
}

impl Ctx<'_> {
    fn instance(&self, params: String, p: CDNumber, lhs: CDNumber, rhs: CDNumber) -> RuleInstance {
        RuleInstance { base: self.pair.name.clone(), class: self.class, params, p, lhs, rhs }
    }

    /// Random `p` with the given real part and the imaginary pattern of
    /// the probe class.
    fn p_with_re(&self, x: f64, rng: &mut ChaCha8Rng) -> CDNumber {
        let mut p = CDNumber::real(2, x);
        let n = match self.class {
            ProbeClass::Real => 0,
            ProbeClass::Slice => 1,
            ProbeClass::Full => 3,
        };
        for j in 1..=n {
            p.set_coeff(j, rng.gen_range(-1.5..1.5));
        }
        p
    }

    fn p_in(&self, strip: (f64, f64), rng: &mut ChaCha8Rng) -> CDNumber {
        let x = sample_re(strip, rng);
        self.p_with_re(x, rng)
    }

    fn zero(&self) -> CDNumber {
        CDNumber::zero(2)
    }

    /// Zero for the linear kernel, random for the spherical one.
    fn free_zeta(&self, rng: &mut ChaCha8Rng) -> CDNumber {
        let mut z = CDNumber::zero(2);
        if self.kernel.variant == KernelVariant::Spherical {
            for j in 0..4 {
                z.set_coeff(j, rng.gen_range(-0.5..0.5));
            }
        }
        z
    }

    /// Image of the base pair under the rule's kernel.
    fn image(&self, p: &CDNumber, zeta: &CDNumber) -> Result<CDNumber> {
        self.image_tol(p, zeta, QTOL)
    }

    fn image_tol(&self, p: &CDNumber, zeta: &CDNumber, tol: f64) -> Result<CDNumber> {
        if self.kernel.variant == self.pair.kernel.variant {
            self.pair.value(p, zeta, tol)
        } else {
            Ok(forward_original(self.pair.kind, &self.pair.original, self.kernel, p, zeta, tol)?.value)
        }
    }

    /// Forward transform of a derived original of the same kind.
    fn fwd(&self, o: &Original, p: &CDNumber, zeta: &CDNumber) -> Result<CDNumber> {
        self.fwd_tol(o, p, zeta, QTOL)
    }

    /// Finite-difference integrands carry noise near `1e-11`, so an
    /// unreachable tolerance is retried once at `1e-8`.
    fn fwd_tol(&self, o: &Original, p: &CDNumber, zeta: &CDNumber, tol: f64) -> Result<CDNumber> {
        match forward_original(self.pair.kind, o, self.kernel, p, zeta, tol) {
            Err(Error::Accuracy { .. }) if tol < 1e-8 => Ok(forward_original(self.pair.kind, o, self.kernel, p, zeta, 1e-8)?.value),
            r => Ok(r?.value),
        }
    }

    fn f(&self) -> TimeFn {
        self.pair.original.formula_fn()
    }
}

/// Same bounds and flags as `o`, new expression and growth strip.
fn reshape(o: &Original, label: &str, s0: f64, s1: f64, f: impl Fn(f64) -> CDNumber + Send + Sync + 'static) -> Original {
    let mut out = o.derive(label, f);
    out.s0 = s0;
    out.s1 = s1;
    out
}

/// `f^(n)(t)` by the five-point stencil.
fn fd(f: &TimeFn, t: f64, n: usize, h: f64) -> CDNumber {
    let v = |k: f64| f(t + k * h);
    match n {
        0 => f(t),
        1 => (v(-2.0) - v(2.0) + (v(1.0) - v(-1.0)).scale(8.0)).scale(1.0 / (12.0 * h)),
        2 => (-(v(2.0) + v(-2.0)) + (v(1.0) + v(-1.0)).scale(16.0) - f(t).scale(30.0)).scale(1.0 / (12.0 * h * h)),
        _ => panic!("derivative order above 2"),
    }
}

fn fd_step(n: usize) -> f64 {
    if n == 1 {
        1e-3
    } else {
        1e-2
    }
}

/// Original of `f^(n)` on a time axis.
fn derivative_original(o: &Original, n: usize) -> Original {
    let f = o.formula_fn();
    let h = fd_step(n);
    let mut d = o.derive(format!("d^{n} {}", o.label), move |t| fd(&f, t, n, h));
    d.bound_const *= (1.0 + o.osc + o.s0.abs().min(10.0)).powi(n as i32);
    d
}

/// Original of `g^(n)(tau)` on the multiplicative axis, relative step.
fn mellin_derivative_fn(g: TimeFn, n: usize) -> impl Fn(f64) -> CDNumber + Send + Sync + 'static {
    let h = fd_step(n);
    move |x: f64| fd(&g, x, n, h * x)
}

/// Directional derivative of `F` at `p` along `h`, five-point stencil.
fn directional(f: impl Fn(&CDNumber) -> Result<CDNumber>, p: &CDNumber, h: &CDNumber, eps: f64) -> Result<CDNumber> {
    let at = |k: f64| f(&(p + &h.scale(k * eps)));
    let d = at(-2.0)? - at(2.0)? + (at(1.0)? - at(-1.0)?).scale(8.0);
    Ok(d.scale(1.0 / (12.0 * eps)))
}

fn unit(j: usize) -> CDNumber {
    CDNumber::unit(2, j).expect("quaternion unit")
}

fn random_imag_unit(rng: &mut ChaCha8Rng) -> CDNumber {
    loop {
        let v: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 0.1 {
            return CDNumber::from_slice(2, &[0.0, v[0] / n, v[1] / n, v[2] / n]);
        }
    }
}

/// `int_a^b f` to a tolerance relative to the size of the integrand, so
/// that tiny tail values keep their relative accuracy.
fn integrate_rel(f: impl Fn(f64) -> CDNumber, a: f64, b: f64) -> Result<CDNumber> {
    let m = (0..=16)
        .map(|k| f(a + (b - a) * (k as f64 + 0.5) / 17.5).norm())
        .fold(0.0, f64::max)
        * (b - a);
    if m == 0.0 {
        return Ok(CDNumber::zero(2));
    }
    Ok(integrate_interval(f, a, b, (INNER_TOL * m).max(f64::MIN_POSITIVE))?.value)
}

/// `int_{-inf}^t f(x) dx`, finite part `[0, t]` split off so that the
/// mapped tail `x = -s / (1 - s)` starts where `f` is concentrated.
fn left_tail(f: &TimeFn, t: f64) -> Result<CDNumber> {
    if t > 0.0 {
        return Ok(integrate_rel(|x| f(x), 0.0, t)? + left_tail(f, 0.0)?);
    }
    let g = |s: f64| {
        let w = 1.0 - s;
        f(t - s / w).scale(1.0 / (w * w))
    };
    integrate_rel(g, 0.0, 1.0)
}

/// `int_t^{+inf} f(x) dx`.
fn right_tail(f: &TimeFn, t: f64) -> Result<CDNumber> {
    if t < 0.0 {
        return Ok(integrate_rel(|x| f(x), t, 0.0)? + right_tail(f, 0.0)?);
    }
    let g = |s: f64| {
        let w = 1.0 - s;
        f(t + s / w).scale(1.0 / (w * w))
    };
    integrate_rel(g, 0.0, 1.0)
}

fn or_nan(r: Result<CDNumber>) -> CDNumber {
    r.unwrap_or_else(|_| CDNumber::from_slice(2, &[f64::NAN; 4]))
}

fn shift_zeta(zeta: &CDNumber, j: usize, angle: f64) -> CDNumber {
    let mut z = zeta.clone();
    z.set_coeff(j, z.coeff(j) + angle);
    z
}

// ---------------------------------------------------------------- hypotheses

fn any(_: &TransformPair) -> std::result::Result<(), String> {
    Ok(())
}

fn needs_entire(p: &TransformPair) -> std::result::Result<(), String> {
    if p.entire {
        Ok(())
    } else {
        Err("derivatives at the origin need a formula smooth across t = 0".into())
    }
}

fn needs_initial(p: &TransformPair) -> std::result::Result<(), String> {
    p.initial_value.as_ref().map(|_| ()).ok_or_else(|| "f(0+) unknown".into())
}

fn needs_final(p: &TransformPair) -> std::result::Result<(), String> {
    p.final_value.as_ref().map(|_| ()).ok_or_else(|| "f(inf) does not exist".into())
}

fn vanishes_at_origin(p: &TransformPair) -> std::result::Result<(), String> {
    match &p.initial_value {
        Some(v) if v.norm() == 0.0 => Ok(()),
        _ => Err("f(t)/t needs f(0) = 0".into()),
    }
}

fn left_integrable(p: &TransformPair) -> std::result::Result<(), String> {
    if p.strip.0.max(0.0) < p.strip.1 {
        Ok(())
    } else {
        Err("empty domain max(s0, 0) < Re p < s1".into())
    }
}

fn right_integrable(p: &TransformPair) -> std::result::Result<(), String> {
    if p.strip.0 < p.strip.1.min(0.0) {
        Ok(())
    } else {
        Err("empty domain s0 < Re p < min(s1, 0)".into())
    }
}

// ---------------------------------------------------------------- builders

/// `f(b t) <-> F(p/b)/|b|`; also `g(tau^b)` for Mellin pairs.
fn scaling(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let pair = ctx.pair;
    let mut b = rng.gen_range(0.5..2.5);
    if pair.kind != PairKind::OneSided && rng.gen_bool(0.5) {
        b = -b;
    }
    let (lo, hi) = pair.strip;
    let strip = if b > 0.0 { (b * lo, b * hi) } else { (b * hi, b * lo) };
    let p = ctx.p_in(strip, rng);
    let zeta = ctx.free_zeta(rng);
    let f = ctx.f();
    let o = &pair.original;
    let scaled = if pair.kind == PairKind::Mellin {
        reshape(o, "g(tau^b)", strip.0, strip.1, move |x| f(x.powf(b)))
    } else {
        let (s0, s1) = if b > 0.0 { (b * o.s0, b * o.s1) } else { (b * o.s1, b * o.s0) };
        let mut s = reshape(o, "f(b t)", s0, s1, move |t| f(b * t));
        s.osc *= b.abs();
        s
    };
    let lhs = ctx.fwd(&scaled, &p, &zeta)?;
    let rhs = ctx.image(&p.scale(1.0 / b), &zeta)?.scale(1.0 / b.abs());
    Ok(ctx.instance(format!("b={b:.4}"), p, lhs, rhs))
}

/// One-sided `F(f^(n)) = F p^n - f(0) p^(n-1) - ...`, two-sided `F p^n`.
fn derivative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let n = rng.gen_range(1..=2usize);
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let lhs = ctx.fwd(&derivative_original(&ctx.pair.original, n), &p, &z)?;
    let mut rhs = &ctx.image(&p, &z)? * &p.powi(n as i64)?;
    if ctx.pair.kind == PairKind::OneSided {
        let f = ctx.f();
        for k in 0..n {
            let fk = fd(&f, 0.0, k, fd_step(k.max(1)));
            rhs = rhs - &fk * &p.powi((n - 1 - k) as i64)?;
        }
    }
    Ok(ctx.instance(format!("n={n}"), p, lhs, rhs))
}

/// `F'(p).h` against the transform of `(-t) f(t) h` (or `ln(tau) g h`),
/// with `h` in `R + p' R`.
fn image_derivative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let h = p.imag().scale(rng.gen_range(-1.0..1.0)).add_real(rng.gen_range(-1.0..1.0));
    let lhs = directional(|q| ctx.image_tol(q, &z, QTOL_FD), &p, &h, 1e-3)?;
    let f = ctx.f();
    let hh = h.clone();
    let o = &ctx.pair.original;
    let weighted = if ctx.pair.kind == PairKind::Mellin {
        reshape(o, "ln(tau) g h", o.s0, o.s1, move |x| (f(x) * &hh).scale(x.ln()))
    } else {
        reshape(o, "-t f h", o.s0, o.s1, move |t| (f(t) * &hh).scale(-t))
    };
    let rhs = ctx.fwd(&weighted, &p, &z)?;
    Ok(ctx.instance(format!("h={h}"), p, lhs, rhs))
}

/// `F(f') = [-f(0)] + p0 F(p; zeta) + sum_j p_j F(p; zeta - i_j pi/2)`.
fn spherical_derivative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let lhs = ctx.fwd(&derivative_original(&ctx.pair.original, 1), &p, &z)?;
    let mut rhs = ctx.image(&p, &z)?.scale(p.re());
    for j in 1..4 {
        rhs = rhs + ctx.image(&p, &shift_zeta(&z, j, -FRAC_PI_2))?.scale(p.coeff(j));
    }
    if ctx.pair.kind == PairKind::OneSided {
        rhs = rhs - ctx.f()(0.0);
    }
    Ok(ctx.instance(String::new(), p, lhs, rhs))
}

/// `dF/dp . h = -sum_j F(t f; zeta - i_j pi/2) h_j` (`j = 0` unshifted).
fn spherical_image_derivative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let h = CDNumber::from_slice(2, &[0; 4].map(|_: i32| rng.gen_range(-1.0..1.0)));
    let lhs = directional(|q| ctx.image_tol(q, &z, QTOL_FD), &p, &h, 2e-3)?;
    let f = ctx.f();
    let o = &ctx.pair.original;
    let tf = reshape(o, "t f", o.s0, o.s1, move |t| f(t).scale(t));
    let mut rhs = CDNumber::zero(2);
    for j in 0..4 {
        let zj = if j == 0 { z.clone() } else { shift_zeta(&z, j, -FRAC_PI_2) };
        rhs = rhs - ctx.fwd(&tf, &p, &zj)?.scale(h.coeff(j));
    }
    Ok(ctx.instance(format!("h={h}"), p, lhs, rhs))
}

/// `F(int_0^t f) p = F(f)`.
fn integration(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let strip = (ctx.pair.strip.0.max(0.0), ctx.pair.strip.1);
    let p = ctx.p_in(strip, rng);
    let z = ctx.zero();
    let f = ctx.f();
    let g = reshape(o, "int_0^t f", o.s0.max(0.0), o.s1, move |t| {
        if t <= 0.0 {
            CDNumber::zero(2)
        } else {
            or_nan(integrate_interval(|x| f(x), 0.0, t, INNER_TOL).map(|r| r.value))
        }
    });
    let lhs = &ctx.fwd(&g, &p, &z)? * &p;
    let rhs = ctx.image(&p, &z)?;
    Ok(ctx.instance(String::new(), p, lhs, rhs))
}

/// `F(f/t) = int_p^inf F(z) dz` along `z = p + s`.
fn image_integration(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let f = ctx.f();
    let g = reshape(o, "f/t", o.s0, o.s1, move |t| if t == 0.0 { fd(&f, 0.0, 1, 1e-3) } else { f(t).scale(1.0 / t) });
    let lhs = ctx.fwd(&g, &p, &z)?;
    let path = |x: f64| {
        let w = 1.0 - x;
        or_nan(ctx.image(&p.add_real(x / w), &z)).scale(1.0 / (w * w))
    };
    let rhs = integrate_interval(path, 0.0, 1.0, QTOL)?.value;
    Ok(ctx.instance(String::new(), p, lhs, rhs))
}

fn delay(ctx: &Ctx, rng: &mut ChaCha8Rng) -> (f64, Original) {
    let o = &ctx.pair.original;
    let tau = if ctx.pair.kind == PairKind::OneSided { rng.gen_range(0.2..1.5) } else { rng.gen_range(-1.0..1.0) };
    let oo = o.clone();
    let shifted = reshape(o, "f(t - tau)", o.s0, o.s1, move |t| oo.eval(t - tau));
    (tau, shifted)
}

/// `F(f(t - tau)) = F(p) e^(-p tau)`.
fn shift_exp(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let (tau, shifted) = delay(ctx, rng);
    let lhs = ctx.fwd(&shifted, &p, &z)?;
    let rhs = &ctx.image(&p, &z)? * &(-p.scale(tau)).exp();
    Ok(ctx.instance(format!("tau={tau:.4}"), p, lhs, rhs))
}

/// `F(f(t - tau); zeta) = F(f; zeta + p tau)`.
fn shift_zeta_rule(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let p = ctx.p_in(ctx.pair.strip, rng);
    let zeta = ctx.free_zeta(rng);
    let (tau, shifted) = delay(ctx, rng);
    let lhs = ctx.fwd(&shifted, &p, &zeta)?;
    let rhs = ctx.image(&p, &(&zeta + &p.scale(tau)))?;
    Ok(ctx.instance(format!("tau={tau:.4}"), p, lhs, rhs))
}

/// `F(e^(bt) f; p; zeta) = F(f; p - b; zeta)`.
fn damping(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let (lo, hi) = ctx.pair.strip;
    let b = if ctx.pair.kind == PairKind::OneSided || !(hi - lo).is_finite() {
        rng.gen_range(-1.0..1.0)
    } else {
        (hi - lo) * rng.gen_range(-0.3..0.3)
    };
    let p = ctx.p_in((lo + b, hi + b), rng);
    let zeta = ctx.free_zeta(rng);
    let f = ctx.f();
    let damped = reshape(o, "e^(bt) f", o.s0 + b, o.s1 + b, move |t| f(t).scale((b * t).exp()));
    let lhs = ctx.fwd(&damped, &p, &zeta)?;
    let rhs = ctx.image(&p.add_real(-b), &zeta)?;
    Ok(ctx.instance(format!("b={b:.4}"), p, lhs, rhs))
}

const REAL_PARTNERS: &[&str] = &["step", "sin", "cos", "damped_cos", "one_minus_exp"];

/// `F(f * g) = F(f) F(g)` with real-valued `g`.
fn convolution(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let g = random_pair(REAL_PARTNERS.choose(rng).expect("non-empty"), rng)?;
    let s0 = o.s0.max(g.original.s0);
    let p = ctx.p_in((s0, f64::INFINITY), rng);
    let z = ctx.zero();
    let (f, gf) = (ctx.f(), g.original.formula_fn());
    let mut conv = reshape(o, "f * g", s0, f64::INFINITY, move |t| {
        if t <= 0.0 {
            return CDNumber::zero(2);
        }
        or_nan(integrate_interval(|x| f(x).scale(gf(t - x).re()), 0.0, t, INNER_TOL).map(|r| r.value))
    });
    conv.osc += g.original.osc;
    conv.bound_const *= 2.0;
    let lhs = ctx.fwd(&conv, &p, &z)?;
    let rhs = &ctx.image(&p, &z)? * &g.image(&p)?;
    Ok(ctx.instance(format!("g={}", g.name), p, lhs, rhs))
}

fn ray(ctx: &Ctx, rng: &mut ChaCha8Rng) -> CDNumber {
    let a: f64 = rng.gen_range(-1.2..1.2);
    let s = match ctx.class {
        ProbeClass::Real => return CDNumber::one(2),
        ProbeClass::Slice => unit(1),
        ProbeClass::Full => random_imag_unit(rng),
    };
    s.scale(a.sin()).add_real(a.cos())
}

/// Richardson extrapolation of `v(rho)` towards `rho -> inf` (`grow`) or
/// `rho -> 0`, cancelling the leading `1/rho` or `rho` error term.
fn limit_along(v: impl Fn(f64) -> Result<CDNumber>, rho: f64, grow: bool, levels: usize) -> Result<CDNumber> {
    let q = if grow { 2.0 } else { 0.5 };
    match levels {
        2 => Ok(v(q * rho)?.scale(2.0) - v(rho)?),
        3 => Ok((v(q * q * rho)?.scale(8.0) - v(q * rho)?.scale(6.0) + v(rho)?).scale(1.0 / 3.0)),
        _ => v(rho),
    }
}

fn initial_value(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let u = ray(ctx, rng);
    let z = ctx.zero();
    let v = |rho: f64| {
        let p = u.scale(rho);
        Ok(&ctx.image(&p, &z)? * &p)
    };
    let lhs = limit_along(v, 1e4, true, 2)?;
    let rhs = ctx.pair.initial_value.clone().expect("hypothesis");
    Ok(ctx.instance(format!("direction={u}"), u, lhs, rhs))
}

fn final_value(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let u = ray(ctx, rng);
    let z = ctx.zero();
    let v = |rho: f64| {
        let p = u.scale(rho);
        Ok(&ctx.image(&p, &z)? * &p)
    };
    let lhs = limit_along(v, 2e-4, false, 2)?;
    let rhs = ctx.pair.final_value.clone().expect("hypothesis");
    Ok(ctx.instance(format!("direction={u}"), u, lhs, rhs))
}

/// `p0 F(p; 0) + sum_j p_j F(p; -i_j pi/2)`.
fn spherical_combination(ctx: &Ctx, p: &CDNumber) -> Result<CDNumber> {
    let z = ctx.zero();
    let mut out = ctx.image(p, &z)?.scale(p.re());
    for j in 1..4 {
        if p.coeff(j) != 0.0 {
            out = out + ctx.image(p, &shift_zeta(&z, j, -FRAC_PI_2))?.scale(p.coeff(j));
        }
    }
    Ok(out)
}

fn spherical_initial_value(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let u = ray(ctx, rng);
    let lhs = limit_along(|rho| spherical_combination(ctx, &u.scale(rho)), 1e3, true, 3)?;
    let rhs = ctx.pair.initial_value.clone().expect("hypothesis");
    Ok(ctx.instance(format!("direction={u}"), u, lhs, rhs))
}

fn spherical_final_value(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let u = ray(ctx, rng);
    let lhs = limit_along(|rho| spherical_combination(ctx, &u.scale(rho)), 4e-3, false, 3)?;
    let rhs = ctx.pair.final_value.clone().expect("hypothesis");
    Ok(ctx.instance(format!("direction={u}"), u, lhs, rhs))
}

const TWO_SIDED_PARTNERS: &[&str] = &["gauss_twosided", "abs_exp"];

/// `F(int f(x) g(t - x) dx) = F(f) F(g)` over the whole line.
fn ts_convolution(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let mut g = random_pair(TWO_SIDED_PARTNERS.choose(rng).expect("non-empty"), rng)?;
    if g.name == "abs_exp" {
        let mut params = g.params.clone();
        params.insert("alpha".into(), rng.gen_range(1.5..3.0));
        g = super::build_pair("abs_exp", &params)?;
    }
    let strip = (ctx.pair.strip.0.max(g.strip.0), ctx.pair.strip.1.min(g.strip.1));
    let p = ctx.p_in(strip, rng);
    let z = ctx.zero();
    let reach = if g.name == "abs_exp" { 40.0 / g.param("alpha") } else { (40.0 / g.param("alpha")).sqrt() };
    let (f, gf) = (ctx.f(), g.original.formula_fn());
    let conv = reshape(o, "f * g", strip.0, strip.1, move |t| {
        let term = |s: f64| f(t - s).scale(gf(s).re());
        let a = integrate_rel(term, -reach, 0.0);
        let b = integrate_rel(term, 0.0, reach);
        or_nan(a) + or_nan(b)
    });
    let lhs = ctx.fwd(&conv, &p, &z)?;
    let rhs = &ctx.image(&p, &z)? * &g.image(&p)?;
    Ok(ctx.instance(format!("g={} {:?}", g.name, g.params), p, lhs, rhs))
}

/// `F(int_{-inf}^t f) p = F(f)` on `max(s0, 0) < Re p < s1`.
fn ts_integration_left(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let strip = (ctx.pair.strip.0.max(0.0), ctx.pair.strip.1);
    let p = ctx.p_in(strip, rng);
    let z = ctx.zero();
    let f = ctx.f();
    let g = reshape(o, "int_-inf^t f", strip.0, strip.1, move |t| or_nan(left_tail(&f, t)));
    let lhs = &ctx.fwd(&g, &p, &z)? * &p;
    let rhs = ctx.image(&p, &z)?;
    Ok(ctx.instance(String::new(), p, lhs, rhs))
}

/// `F(int_{+inf}^t f) p = F(f)` on `s0 < Re p < min(s1, 0)`.
fn ts_integration_right(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let strip = (ctx.pair.strip.0, ctx.pair.strip.1.min(0.0));
    let p = ctx.p_in(strip, rng);
    let z = ctx.zero();
    let f = ctx.f();
    let g = reshape(o, "int_+inf^t f", strip.0, strip.1, move |t| -or_nan(right_tail(&f, t)));
    let lhs = &ctx.fwd(&g, &p, &z)? * &p;
    let rhs = ctx.image(&p, &z)?;
    Ok(ctx.instance(String::new(), p, lhs, rhs))
}

/// `M(g(a tau); p; zeta) = M(g; p; zeta - p ln a)`.
fn mellin_dilation(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let a = rng.gen_range(0.5..2.0);
    let p = ctx.p_in(ctx.pair.strip, rng);
    let zeta = ctx.free_zeta(rng);
    let f = ctx.f();
    let g = reshape(o, "g(a tau)", o.s0, o.s1, move |x| f(a * x));
    let lhs = ctx.fwd(&g, &p, &zeta)?;
    let rhs = ctx.image(&p, &(&zeta - &p.scale(a.ln())))?;
    Ok(ctx.instance(format!("a={a:.4}"), p, lhs, rhs))
}

/// `M(g(a tau); p) = M(g; p) a^(-p)`.
fn mellin_dilation_power(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let a = rng.gen_range(0.5..2.0);
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let f = ctx.f();
    let g = reshape(o, "g(a tau)", o.s0, o.s1, move |x| f(a * x));
    let lhs = ctx.fwd(&g, &p, &z)?;
    let rhs = &ctx.image(&p, &z)? * &(-p.scale(a.ln())).exp();
    Ok(ctx.instance(format!("a={a:.4}"), p, lhs, rhs))
}

/// `M(tau^b g; p; zeta) = M(g; p + b; zeta)`.
fn mellin_power_shift(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let b = rng.gen_range(-0.5..0.5);
    let strip = (ctx.pair.strip.0 - b, ctx.pair.strip.1 - b);
    let p = ctx.p_in(strip, rng);
    let zeta = ctx.free_zeta(rng);
    let f = ctx.f();
    let g = reshape(o, "tau^b g", strip.0, strip.1, move |x| f(x).scale(x.powf(b)));
    let lhs = ctx.fwd(&g, &p, &zeta)?;
    let rhs = ctx.image(&p.add_real(b), &zeta)?;
    Ok(ctx.instance(format!("b={b:.4}"), p, lhs, rhs))
}

/// `M(g^(n); p) = (-1)^n M(g; p - n)(p - 1)...(p - n)`.
fn mellin_derivative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let n = rng.gen_range(1..=2usize);
    let strip = (ctx.pair.strip.0 + n as f64, ctx.pair.strip.1 + n as f64);
    let p = ctx.p_in(strip, rng);
    let z = ctx.zero();
    let g = reshape(o, "g^(n)", strip.0, strip.1, mellin_derivative_fn(ctx.f(), n));
    let lhs = ctx.fwd(&g, &p, &z)?;
    let mut rhs = ctx.image(&p.add_real(-(n as f64)), &z)?;
    for k in 1..=n {
        rhs = &rhs * &p.add_real(-(k as f64));
    }
    if n % 2 == 1 {
        rhs = -rhs;
    }
    Ok(ctx.instance(format!("n={n}"), p, lhs, rhs))
}

/// `M(g^(n) tau^n; p) = (-1)^n M(g; p) p (p + 1)...(p + n - 1)`.
fn mellin_log_derivative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let n = rng.gen_range(1..=2usize);
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let d = mellin_derivative_fn(ctx.f(), n);
    let g = reshape(o, "g^(n) tau^n", o.s0, o.s1, move |x| d(x).scale(x.powi(n as i32)));
    let lhs = ctx.fwd(&g, &p, &z)?;
    let mut rhs = ctx.image(&p, &z)?;
    for k in 0..n {
        rhs = &rhs * &p.add_real(k as f64);
    }
    if n % 2 == 1 {
        rhs = -rhs;
    }
    Ok(ctx.instance(format!("n={n}"), p, lhs, rhs))
}

/// `M(g') = -(p0 - 1) M(p - 1; zeta) - sum_j p_j M(p - 1; zeta + i_j pi/2)`.
fn mellin_spherical_derivative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let strip = (ctx.pair.strip.0 + 1.0, ctx.pair.strip.1 + 1.0);
    let p = ctx.p_in(strip, rng);
    let z = ctx.zero();
    let g = reshape(o, "g'", strip.0, strip.1, mellin_derivative_fn(ctx.f(), 1));
    let lhs = ctx.fwd(&g, &p, &z)?;
    let q = p.add_real(-1.0);
    let mut rhs = ctx.image(&q, &z)?.scale(-(p.re() - 1.0));
    for j in 1..4 {
        rhs = rhs - ctx.image(&q, &shift_zeta(&z, j, FRAC_PI_2))?.scale(p.coeff(j));
    }
    Ok(ctx.instance(String::new(), p, lhs, rhs))
}

/// `M(g' tau) = -p0 M(p; zeta) - sum_j p_j M(p; zeta + i_j pi/2)`.
fn mellin_spherical_log_derivative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let d = mellin_derivative_fn(ctx.f(), 1);
    let g = reshape(o, "g' tau", o.s0, o.s1, move |x| d(x).scale(x));
    let lhs = ctx.fwd(&g, &p, &z)?;
    let mut rhs = ctx.image(&p, &z)?.scale(-p.re());
    for j in 1..4 {
        rhs = rhs - ctx.image(&p, &shift_zeta(&z, j, FRAC_PI_2))?.scale(p.coeff(j));
    }
    Ok(ctx.instance(String::new(), p, lhs, rhs))
}

/// `dM/dp . h = sum_j M(g ln tau; zeta + i_j pi/2) h_j`.
fn mellin_spherical_image_derivative(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let p = ctx.p_in(ctx.pair.strip, rng);
    let z = ctx.zero();
    let h = CDNumber::from_slice(2, &[0; 4].map(|_: i32| rng.gen_range(-1.0..1.0)));
    let lhs = directional(|q| ctx.image_tol(q, &z, QTOL_FD), &p, &h, 2e-3)?;
    let f = ctx.f();
    let gl = reshape(o, "g ln tau", o.s0, o.s1, move |x| f(x).scale(x.ln()));
    let mut rhs = CDNumber::zero(2);
    for j in 0..4 {
        let zj = if j == 0 { z.clone() } else { shift_zeta(&z, j, FRAC_PI_2) };
        rhs = rhs + ctx.fwd(&gl, &p, &zj)?.scale(h.coeff(j));
    }
    Ok(ctx.instance(format!("h={h}"), p, lhs, rhs))
}

const MELLIN_PARTNERS: &[&str] = &["mellin_exp", "mellin_rational", "mellin_gauss", "mellin_rational_sq"];

/// `M(int g(a) w(b/a) da/a) = M(g) M(w)` with real `w`.
fn mellin_convolution(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let partners: Vec<&str> = MELLIN_PARTNERS.iter().copied().filter(|n| *n != ctx.pair.name).collect();
    let w = random_pair(partners.choose(rng).expect("non-empty"), rng)?;
    let strip = (ctx.pair.strip.0.max(w.strip.0), ctx.pair.strip.1.min(w.strip.1));
    let p = ctx.p_in(strip, rng);
    let z = ctx.zero();
    let (g, wf) = (ctx.f(), w.original.formula_fn());
    let conv = reshape(o, "g *^ w", strip.0, strip.1, move |b: f64| {
        let lb = b.ln();
        let (g, wf) = (g.clone(), wf.clone());
        let integrand: TimeFn = Arc::new(move |x: f64| g(x.exp()).scale(wf((lb - x).exp()).re()));
        or_nan(left_tail(&integrand, lb)) + or_nan(right_tail(&integrand, lb))
    });
    let lhs = ctx.fwd(&conv, &p, &z)?;
    let rhs = &ctx.image(&p, &z)? * &w.image(&p)?;
    Ok(ctx.instance(format!("w={}", w.name), p, lhs, rhs))
}

fn mellin_integral(ctx: &Ctx, rng: &mut ChaCha8Rng, from_zero: bool, sign: f64) -> Result<RuleInstance> {
    let o = &ctx.pair.original;
    let (lo, hi) = ctx.pair.strip;
    let strip = if from_zero { (lo, hi.min(0.0)) } else { (lo.max(0.0), hi) };
    let p = ctx.p_in(strip, rng);
    let z = ctx.zero();
    let f = ctx.f();
    let log_axis: TimeFn = Arc::new(move |x: f64| f(x.exp()));
    let w = reshape(o, "w", strip.0, strip.1, move |tau: f64| {
        let t = tau.ln();
        if from_zero {
            or_nan(left_tail(&log_axis, t))
        } else {
            -or_nan(right_tail(&log_axis, t))
        }
    });
    let lhs = &ctx.fwd(&w, &p, &z)? * &p;
    let rhs = ctx.image(&p, &z)?.scale(sign);
    Ok(ctx.instance(String::new(), p, lhs, rhs))
}

/// `M(int_0^tau g(a)/a da) p = M(g)` as stated.
fn mellin_integration(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    mellin_integral(ctx, rng, true, 1.0)
}

/// `M(int_+inf^tau g(a)/a da) p = M(g)` as stated.
fn mellin_integration_right(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    mellin_integral(ctx, rng, false, 1.0)
}

/// Same integral with the sign that integration by parts produces.
fn mellin_integration_corrected(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    mellin_integral(ctx, rng, true, -1.0)
}

fn mellin_integration_right_corrected(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<RuleInstance> {
    mellin_integral(ctx, rng, false, -1.0)
}

fn mellin_left_integrable(p: &TransformPair) -> std::result::Result<(), String> {
    if p.strip.0 < p.strip.1.min(0.0) {
        Ok(())
    } else {
        Err("empty domain s0 < Re p < min(s1, 0)".into())
    }
}

fn mellin_right_integrable(p: &TransformPair) -> std::result::Result<(), String> {
    if p.strip.0.max(0.0) < p.strip.1 {
        Ok(())
    } else {
        Err("empty domain max(s0, 0) < Re p < s1".into())
    }
}

// ---------------------------------------------------------------- table

use KernelVariant::{Linear, Spherical};
use RuleFamily::{Mellin, OneSided, TwoSided};

const TS_ALL: &[&str] = &["abs_exp", "gauss_twosided", "logistic_twosided", "sech_twosided"];
const TS_SMOOTH: &[&str] = &["gauss_twosided", "logistic_twosided", "sech_twosided"];
const M_ALL: &[&str] = &["mellin_rational", "mellin_rational_sq", "mellin_exp", "mellin_gauss"];
const M_WIDE: &[&str] = &["mellin_rational_sq", "mellin_exp", "mellin_gauss"];
const M_SHIFTED: &[&str] = &["mellin_exp_shifted", "mellin_rational_sq_shifted", "mellin_gauss_shifted"];

macro_rules! rule {
    ($name:expr, $fam:expr, $k:expr, $stmt:expr, $bases:expr, $hyp:expr, $build:expr) => {
        OperationalRule {
            name: $name,
            family: $fam,
            kernel: $k,
            statement: $stmt,
            bases: $bases,
            tol: 1e-6,
            relaxed: &[],
            informational: false,
            hypothesis: $hyp,
            build: $build,
        }
    };
}

static RULES: &[OperationalRule] = &[
    rule!("scaling", OneSided, Linear, "F(f(at)) = F(p/a)/a", &["sin", "cos", "exp_zeta", "damped_sin", "erfc"], any, scaling),
    rule!("scaling_spherical", OneSided, Spherical, "F(f(at); zeta) = F(p/a; zeta)/a", &["spherical_tn", "sin", "damped_cos"], any, scaling),
    rule!(
        "derivative",
        OneSided,
        Linear,
        "F(f^(n)) = F p^n - f(0) p^(n-1) - ... - f^(n-1)(0)",
        &["sin", "cos", "exp_zeta", "damped_cos", "t_sin"],
        needs_entire,
        derivative
    ),
    rule!("image_derivative", OneSided, Linear, "F'(p).h = F(-t f h), h in R + p'R", &["sin", "cos", "step", "damped_sin", "exp_zeta"], any, image_derivative),
    rule!(
        "spherical_derivative",
        OneSided,
        Spherical,
        "F(f') = -f(0) + p0 F + sum_j p_j F(zeta - i_j pi/2)",
        &["spherical_tn", "sin", "cos"],
        needs_entire,
        spherical_derivative
    ),
    rule!(
        "spherical_image_derivative",
        OneSided,
        Spherical,
        "dF/dp.h = -sum_j F(t f; zeta - i_j pi/2) h_j",
        &["spherical_tn", "sin", "damped_cos"],
        any,
        spherical_image_derivative
    ),
    rule!("integration", OneSided, Linear, "F(int_0^t f) p = F(f)", &["sin", "cos", "exp_zeta", "damped_sin", "step"], any, integration),
    OperationalRule {
        relaxed: &["sin"],
        ..rule!("image_integration", OneSided, Linear, "F(f/t) = int_p^inf F(z) dz", &["sin", "sh", "t_sin", "damped_sin"], vanishes_at_origin, image_integration)
    },
    rule!("shift_exp", OneSided, Linear, "F(f(t - tau)) = F(p) e^(-p tau)", &["sin", "cos", "damped_cos", "exp_zeta"], any, shift_exp),
    rule!("shift_zeta", OneSided, Linear, "F(f(t - tau); zeta) = F(f; zeta + p tau)", &["sin", "cos", "step"], any, shift_zeta_rule),
    rule!(
        "shift_zeta_spherical",
        OneSided,
        Spherical,
        "F(f(t - tau); zeta) = F(f; zeta + p tau)",
        &["spherical_tn", "sin", "cos"],
        any,
        shift_zeta_rule
    ),
    rule!("damping", OneSided, Linear, "F(e^(bt) f; p; zeta) = F(f; p - b; zeta)", &["sin", "cos", "tn", "exp_zeta", "step"], any, damping),
    rule!("convolution", OneSided, Linear, "F(f * g) = F(f) F(g), g real", &["sin", "exp_zeta", "damped_sin", "step", "t_cos"], any, convolution),
    rule!(
        "initial_value",
        OneSided,
        Linear,
        "lim_{p -> inf} F(p) p = f(0)",
        &["sin", "cos", "step", "exp_zeta", "damped_cos", "erfc"],
        needs_initial,
        initial_value
    ),
    rule!(
        "final_value",
        OneSided,
        Linear,
        "lim_{p -> 0} F(p) p = f(inf)",
        &["step", "one_minus_exp", "damped_cos", "sinc", "si"],
        needs_final,
        final_value
    ),
    rule!(
        "spherical_initial_value",
        OneSided,
        Spherical,
        "lim_{p -> inf} p0 F + sum_j p_j F(zeta - i_j pi/2) = f(0)",
        &["step", "cos", "spherical_tn", "damped_cos"],
        needs_initial,
        spherical_initial_value
    ),
    rule!(
        "spherical_final_value",
        OneSided,
        Spherical,
        "lim_{p -> 0} p0 F + sum_j p_j F(zeta - i_j pi/2) = f(inf)",
        &["step", "one_minus_exp", "damped_cos"],
        needs_final,
        spherical_final_value
    ),
    rule!("ts_scaling", TwoSided, Linear, "F(f(bt)) = F(p/b)/|b|", TS_ALL, any, scaling),
    rule!("ts_shift_exp", TwoSided, Linear, "F(f(t - tau)) = F(p) e^(-p tau)", TS_ALL, any, shift_exp),
    rule!("ts_shift_zeta_spherical", TwoSided, Spherical, "F(f(t - tau); zeta) = F(f; zeta + p tau)", TS_SMOOTH, any, shift_zeta_rule),
    rule!("ts_damping", TwoSided, Linear, "F(e^(bt) f; p) = F(f; p - b)", TS_ALL, any, damping),
    rule!(
        "ts_damping_spherical",
        TwoSided,
        Spherical,
        "F(e^(bt) f; p; zeta) = F(f; p - b; zeta)",
        &["gauss_twosided", "sech_twosided", "abs_exp"],
        any,
        damping
    ),
    rule!("ts_derivative", TwoSided, Linear, "F(f^(n)) = F p^n", TS_SMOOTH, needs_entire, derivative),
    rule!(
        "ts_spherical_derivative",
        TwoSided,
        Spherical,
        "F(f') = p0 F + sum_j p_j F(zeta - i_j pi/2)",
        TS_SMOOTH,
        needs_entire,
        spherical_derivative
    ),
    rule!("ts_image_derivative", TwoSided, Linear, "F'(p).h = F(-t f h)", TS_ALL, any, image_derivative),
    rule!(
        "ts_spherical_image_derivative",
        TwoSided,
        Spherical,
        "dF/dp.h = -sum_j F(t f; zeta - i_j pi/2) h_j",
        TS_SMOOTH,
        any,
        spherical_image_derivative
    ),
    rule!("ts_convolution", TwoSided, Linear, "F(f * g) = F(f) F(g), g real", TS_ALL, any, ts_convolution),
    rule!(
        "ts_integration_left",
        TwoSided,
        Linear,
        "F(int_-inf^t f) p = F(f)",
        &["abs_exp", "gauss_twosided", "sech_twosided"],
        left_integrable,
        ts_integration_left
    ),
    rule!("ts_integration_right", TwoSided, Linear, "F(int_+inf^t f) p = F(f)", TS_ALL, right_integrable, ts_integration_right),
    rule!("mellin_dilation", Mellin, Linear, "M(g(a tau); zeta) = M(g; zeta - p ln a)", &["mellin_rational", "mellin_exp", "mellin_gauss"], any, mellin_dilation),
    rule!(
        "mellin_dilation_spherical",
        Mellin,
        Spherical,
        "M(g(a tau); zeta) = M(g; zeta - p ln a)",
        &["mellin_rational", "mellin_exp", "mellin_gauss"],
        any,
        mellin_dilation
    ),
    rule!("mellin_dilation_power", Mellin, Linear, "M(g(a tau)) = M(g) a^(-p)", M_ALL, any, mellin_dilation_power),
    rule!("mellin_power_shift", Mellin, Linear, "M(tau^b g; p) = M(g; p + b)", M_WIDE, any, mellin_power_shift),
    rule!("mellin_power_shift_spherical", Mellin, Spherical, "M(tau^b g; p; zeta) = M(g; p + b; zeta)", M_WIDE, any, mellin_power_shift),
    rule!("mellin_power_substitution", Mellin, Linear, "M(g(tau^b)) = M(g; p/b)/|b|", M_ALL, any, scaling),
    rule!("mellin_derivative", Mellin, Linear, "M(g^(n)) = (-1)^n M(p - n)(p - 1)...(p - n)", M_ALL, any, mellin_derivative),
    rule!("mellin_log_derivative", Mellin, Linear, "M(g^(n) tau^n) = (-1)^n M p (p + 1)...(p + n - 1)", M_ALL, any, mellin_log_derivative),
    rule!(
        "mellin_spherical_derivative",
        Mellin,
        Spherical,
        "M(g') = -(p0 - 1) M(p - 1) - sum_j p_j M(p - 1; zeta + i_j pi/2)",
        M_WIDE,
        any,
        mellin_spherical_derivative
    ),
    rule!(
        "mellin_spherical_log_derivative",
        Mellin,
        Spherical,
        "M(g' tau) = -p0 M - sum_j p_j M(zeta + i_j pi/2)",
        M_WIDE,
        any,
        mellin_spherical_log_derivative
    ),
    rule!("mellin_image_derivative", Mellin, Linear, "M'(p).h = M(ln(tau) g h)", &["mellin_rational", "mellin_exp", "mellin_gauss"], any, image_derivative),
    rule!(
        "mellin_spherical_image_derivative",
        Mellin,
        Spherical,
        "dM/dp.h = sum_j M(g ln tau; zeta + i_j pi/2) h_j",
        M_WIDE,
        any,
        mellin_spherical_image_derivative
    ),
    rule!("mellin_convolution", Mellin, Linear, "M(g *^ w) = M(g) M(w), w real", M_ALL, any, mellin_convolution),
    rule!("mellin_integration", Mellin, Linear, "M(int_0^tau g/a da) p = M(g)", M_SHIFTED, mellin_left_integrable, mellin_integration),
    rule!("mellin_integration_right", Mellin, Linear, "M(int_+inf^tau g/a da) p = M(g)", M_ALL, mellin_right_integrable, mellin_integration_right),
    OperationalRule {
        informational: true,
        ..rule!(
            "mellin_integration_corrected",
            Mellin,
            Linear,
            "M(int_0^tau g/a da) p = -M(g)",
            M_SHIFTED,
            mellin_left_integrable,
            mellin_integration_corrected
        )
    },
    OperationalRule {
        informational: true,
        ..rule!(
            "mellin_integration_right_corrected",
            Mellin,
            Linear,
            "M(int_+inf^tau g/a da) p = -M(g)",
            M_ALL,
            mellin_right_integrable,
            mellin_integration_right_corrected
        )
    },
];
