//! Forward transforms: one-sided Laplace, two-sided Laplace and Mellin.
//!
//! The integrand is always `f(t) * exp(-u(p, t; zeta))` in that order.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::CDNumber;
use crate::error::{Error, Result};
use crate::kernel::{kernel_weight, oscillation_rate, KernelSpec};
use crate::quadrature::{integrate_semi_axis, IntegrandProfile, QuadratureResult};

/// Distance kept from the boundary of a convergence domain.
pub const DOMAIN_MARGIN: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Support {
    /// Vanishes for `t < 0`.
    RightAxis,
    TwoSided,
    /// Defined on `tau > 0`; the argument is `tau`.
    PositiveAxisMultiplicative,
}

pub type TimeFn = Arc<dyn Fn(f64) -> CDNumber + Send + Sync>;

/// A time function together with its growth indices.
///
/// For `RightAxis` and `TwoSided` supports `|f(t)| <= C exp(s0 t)` for
/// `t >= 0` and `|f(t)| <= C exp(s1 t)` for `t < 0`, so the two-sided
/// transform converges on `s0 < Re p < s1`. For
/// `PositiveAxisMultiplicative` the pair `(s0, s1)` is the Mellin strip.
#[derive(Clone)]
pub struct Original {
    pub label: String,
    pub support: Support,
    pub s0: f64,
    pub s1: f64,
    pub bound_const: f64,
    /// Intrinsic angular frequency of the original.
    pub osc: f64,
    /// Integrable singularity at the origin.
    pub singular_origin: bool,
    formula: TimeFn,
}

impl fmt::Debug for Original {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Original")
            .field("label", &self.label)
            .field("support", &self.support)
            .field("s0", &self.s0)
            .field("s1", &self.s1)
            .finish()
    }
}

impl Original {
    pub fn new(
        label: impl Into<String>,
        support: Support,
        s0: f64,
        s1: f64,
        formula: impl Fn(f64) -> CDNumber + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            support,
            s0,
            s1,
            bound_const: 1.0,
            osc: 0.0,
            singular_origin: false,
            formula: Arc::new(formula),
        }
    }

    /// Right-supported original with `s1 = +inf`.
    pub fn right(label: impl Into<String>, s0: f64, formula: impl Fn(f64) -> CDNumber + Send + Sync + 'static) -> Self {
        Self::new(label, Support::RightAxis, s0, f64::INFINITY, formula)
    }

    pub fn with_bound(mut self, c: f64) -> Self {
        self.bound_const = c;
        self
    }

    pub fn with_osc(mut self, w: f64) -> Self {
        self.osc = w;
        self
    }

    pub fn singular(mut self) -> Self {
        self.singular_origin = true;
        self
    }

    /// Value honouring the support (zero off the support).
    pub fn eval(&self, t: f64) -> CDNumber {
        let off = match self.support {
            Support::RightAxis => t < 0.0,
            Support::TwoSided => false,
            Support::PositiveAxisMultiplicative => t <= 0.0,
        };
        if off {
            CDNumber::zero(1)
        } else {
            (self.formula)(t)
        }
    }

    /// The defining expression without the support cut-off.
    pub fn formula(&self, t: f64) -> CDNumber {
        (self.formula)(t)
    }

    pub fn formula_fn(&self) -> TimeFn {
        self.formula.clone()
    }

    /// Same bounds and support, different expression.
    pub fn derive(&self, label: impl Into<String>, formula: impl Fn(f64) -> CDNumber + Send + Sync + 'static) -> Self {
        Self { label: label.into(), formula: Arc::new(formula), ..self.clone() }
    }
}

#[derive(Clone, Debug)]
pub struct TransformRequest {
    pub original: Original,
    pub kernel: KernelSpec,
    pub p: CDNumber,
    pub zeta: CDNumber,
    pub tol: f64,
}

impl TransformRequest {
    pub fn new(original: Original, kernel: KernelSpec, p: CDNumber) -> Self {
        let zeta = CDNumber::zero(kernel.level.max(p.level()));
        Self { original, kernel, p, zeta, tol: 1e-10 }
    }

    pub fn with_zeta(mut self, zeta: CDNumber) -> Self {
        self.zeta = zeta;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }
}

/// `int_0^inf f(t) exp(-u(p, t; zeta)) dt` for an arbitrary integrand
/// bounded by `C exp(s0 t)`.
#[allow(clippy::too_many_arguments)]
fn half_line(
    f: &(dyn Fn(f64) -> CDNumber + Sync),
    s0: f64,
    bound: f64,
    osc: f64,
    singular: bool,
    kernel: KernelSpec,
    p: &CDNumber,
    zeta: &CDNumber,
    tol: f64,
) -> Result<QuadratureResult> {
    let level = kernel.level.max(p.level()).max(zeta.level());
    let p = p.embed(level)?;
    let zeta = zeta.embed(level)?;
    let decay = p.re() - s0;
    let profile = IntegrandProfile {
        decay_rate: decay,
        osc_rate: oscillation_rate(kernel, &p) + osc,
        bound_const: bound * (-zeta.re()).exp(),
        singular_origin: singular,
    };
    let kernel = KernelSpec { level, ..kernel };
    integrate_semi_axis(|t| &f(t) * &kernel_weight(kernel, &p, t, &zeta), profile, tol)
}

/// One-sided transform `int_0^inf f(t) exp(-u(p, t; zeta)) dt`.
pub fn laplace_one_sided(req: &TransformRequest) -> Result<QuadratureResult> {
    let o = &req.original;
    if !(req.p.re() > o.s0 + DOMAIN_MARGIN) {
        return Err(Error::Domain(format!("Re p = {} must exceed s0 = {}", req.p.re(), o.s0)));
    }
    let f = |t: f64| o.formula(t);
    half_line(&f, o.s0, o.bound_const, o.osc, o.singular_origin, req.kernel, &req.p, &req.zeta, req.tol)
}

/// Two-sided transform, split at `t = 0`. The left half is the one-sided
/// transform of `f(-t)` at `-p`, since `u(p, -t; zeta) = u(-p, t; zeta)`.
pub fn laplace_two_sided(req: &TransformRequest) -> Result<QuadratureResult> {
    let o = &req.original;
    if !(o.s0 < o.s1) {
        return Err(Error::Divergence(format!("empty strip ({}, {})", o.s0, o.s1)));
    }
    let x = req.p.re();
    if !(x > o.s0 + DOMAIN_MARGIN && x < o.s1 - DOMAIN_MARGIN) {
        return Err(Error::Domain(format!("Re p = {x} outside ({}, {})", o.s0, o.s1)));
    }
    let right = |t: f64| o.formula(t);
    let left = |t: f64| o.formula(-t);
    let tol = 0.5 * req.tol;
    let pos = half_line(&right, o.s0, o.bound_const, o.osc, false, req.kernel, &req.p, &req.zeta, tol)?;
    let neg = half_line(&left, -o.s1, o.bound_const, o.osc, false, req.kernel, &-&req.p, &req.zeta, tol)?;
    Ok(QuadratureResult {
        value: &pos.value + &neg.value,
        err_estimate: pos.err_estimate + neg.err_estimate,
        panels_used: pos.panels_used + neg.panels_used,
        truncation_point: pos.truncation_point.max(neg.truncation_point),
    })
}

/// The two-sided original `t -> g(e^t)` behind a Mellin original.
pub fn mellin_to_two_sided(g: &Original) -> Original {
    let f = g.formula_fn();
    Original {
        label: format!("{}(exp t)", g.label),
        support: Support::TwoSided,
        s0: -g.s1,
        s1: -g.s0,
        bound_const: g.bound_const,
        osc: g.osc,
        singular_origin: false,
        formula: Arc::new(move |t: f64| f(t.exp())),
    }
}

/// `int_0^inf g(tau) exp(-u(-p, ln tau; -zeta)) dtau / tau`, evaluated as
/// the two-sided transform of `g(e^t)` at `-p`, `-zeta`.
pub fn mellin_forward(g: &Original, kernel: KernelSpec, p: &CDNumber, zeta: &CDNumber, tol: f64) -> Result<QuadratureResult> {
    if g.support != Support::PositiveAxisMultiplicative {
        return Err(Error::Contract("Mellin transform needs a multiplicative original".into()));
    }
    let x = p.re();
    if !(g.s0 < g.s1) {
        return Err(Error::Divergence(format!("empty strip ({}, {})", g.s0, g.s1)));
    }
    if !(x > g.s0 + DOMAIN_MARGIN && x < g.s1 - DOMAIN_MARGIN) {
        return Err(Error::Domain(format!("Re p = {x} outside Mellin strip ({}, {})", g.s0, g.s1)));
    }
    let req = TransformRequest { original: mellin_to_two_sided(g), kernel, p: -p, zeta: -zeta, tol };
    laplace_two_sided(&req)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GrowthEstimate {
    pub s0: f64,
    pub s1: f64,
    pub bound_const: f64,
    pub heuristic: bool,
}

fn fit_slope(f: &dyn Fn(f64) -> CDNumber, sign: f64) -> Result<Option<f64>> {
    let n = 40;
    let (lo, hi) = (1f64.ln(), 30f64.ln());
    let mut pts = Vec::new();
    for k in 0..n {
        let t = (lo + (hi - lo) * k as f64 / (n - 1) as f64).exp();
        let v = f(sign * t);
        if v.coeffs().iter().any(|c| !c.is_finite()) {
            return Err(Error::Input(format!("non-finite sample at t = {}", sign * t)));
        }
        let m = v.norm();
        if m > 0.0 {
            pts.push((t, m.ln()));
        }
    }
    if pts.len() < 2 {
        return Ok(None);
    }
    let k = pts.len() as f64;
    let mt = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mt) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mt).powi(2)).sum();
    Ok(Some(sxy / sxx))
}

/// Heuristic growth indices from a least-squares fit of `ln|f|` on
/// `t in [1, 30]`, padded by a margin of 0.5.
pub fn estimate_growth(f: &dyn Fn(f64) -> CDNumber, support: Support) -> Result<GrowthEstimate> {
    let margin = 0.5;
    let two = |f: &dyn Fn(f64) -> CDNumber| -> Result<(f64, f64)> {
        let s0 = fit_slope(f, 1.0)?.unwrap_or(0.0) + margin;
        let s1 = -fit_slope(f, -1.0)?.unwrap_or(0.0) - margin;
        Ok((s0, s1))
    };
    let (s0, s1) = match support {
        Support::RightAxis => (fit_slope(f, 1.0)?.unwrap_or(0.0) + margin, f64::INFINITY),
        Support::TwoSided => two(f)?,
        Support::PositiveAxisMultiplicative => {
            let (a, b) = two(&|t: f64| f(t.exp()))?;
            (-b, -a)
        }
    };
    let mut c: f64 = 0.0;
    for k in 0..=60 {
        let t = k as f64 * 0.5;
        let (tp, tn) = match support {
            Support::PositiveAxisMultiplicative => (t.exp(), (-t).exp()),
            _ => (t, -t),
        };
        c = c.max(f(tp).norm() * (-s0_for(support, s0, s1) * t).exp());
        if support != Support::RightAxis {
            c = c.max(f(tn).norm() * (s1_for(support, s0, s1) * t).exp());
        }
    }
    Ok(GrowthEstimate { s0, s1, bound_const: c.max(f64::MIN_POSITIVE), heuristic: true })
}

fn s0_for(support: Support, s0: f64, s1: f64) -> f64 {
    match support {
        Support::PositiveAxisMultiplicative => -s1,
        _ => s0,
    }
}

fn s1_for(support: Support, s0: f64, s1: f64) -> f64 {
    match support {
        Support::PositiveAxisMultiplicative => -s0,
        _ => s1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::KernelSpec;

    fn re(x: f64) -> CDNumber {
        CDNumber::real(1, x)
    }

    #[test]
    fn one_sided_examples() {
        let step = Original::right("step", 0.0, |_| re(1.0));
        let r = laplace_one_sided(&TransformRequest::new(step.clone(), KernelSpec::linear(2), CDNumber::real(2, 2.0))).unwrap();
        assert!((r.value.re() - 0.5).abs() < 1e-10);
        let sin = Original::right("sin", 0.0, |t| re(t.sin())).with_osc(1.0);
        let p = CDNumber::from_slice(2, &[1.0, 1.0, 0.0, 0.0]);
        let r = laplace_one_sided(&TransformRequest::new(sin, KernelSpec::linear(2), p)).unwrap();
        assert!(r.value.dist_max(&CDNumber::from_slice(2, &[0.2, -0.4, 0.0, 0.0])) < 1e-9);
        let r = laplace_one_sided(&TransformRequest::new(step.clone(), KernelSpec::spherical(2), CDNumber::real(2, 2.0))).unwrap();
        assert!((r.value.re() - 0.5).abs() < 1e-10);
        let bad = TransformRequest::new(step, KernelSpec::linear(2), CDNumber::real(2, 0.0));
        assert!(matches!(laplace_one_sided(&bad), Err(Error::Domain(_))));
    }

    #[test]
    fn two_sided_examples() {
        let f = Original::new("e^-|t|/2", Support::TwoSided, -1.0, 1.0, |t| re(0.5 * (-t.abs()).exp()));
        let r = laplace_two_sided(&TransformRequest::new(f, KernelSpec::linear(2), CDNumber::real(2, 0.3))).unwrap();
        assert!((r.value.re() - 1.0 / 0.91).abs() < 1e-9);
        let empty = Original::new("x", Support::TwoSided, 1.0, 0.0, |_| re(1.0));
        let r = laplace_two_sided(&TransformRequest::new(empty, KernelSpec::linear(2), CDNumber::real(2, 0.5)));
        assert!(matches!(r, Err(Error::Divergence(_))));
    }

    #[test]
    fn mellin_examples() {
        let g = Original::new("1/(1+tau)", Support::PositiveAxisMultiplicative, 0.0, 1.0, |x| re(1.0 / (1.0 + x)));
        let z = CDNumber::zero(2);
        let r = mellin_forward(&g, KernelSpec::linear(2), &CDNumber::real(2, 0.5), &z, 1e-10).unwrap();
        assert!((r.value.re() - std::f64::consts::PI).abs() < 1e-8);
        let e = Original::new("e^-tau", Support::PositiveAxisMultiplicative, 0.0, f64::INFINITY, |x| re((-x).exp()));
        let r = mellin_forward(&e, KernelSpec::linear(2), &CDNumber::real(2, 0.5), &z, 1e-10).unwrap();
        assert!((r.value.re() - std::f64::consts::PI.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn growth_fits() {
        let g = estimate_growth(&|t| if t < 0.0 { re(0.0) } else { re((3.0 * t).exp()) }, Support::RightAxis).unwrap();
        assert!(g.s0 >= 3.0 && g.s0 <= 3.5 + 1e-9, "{g:?}");
        let g = estimate_growth(&|t| if t < 0.0 { re(0.0) } else { re(1.0) }, Support::RightAxis).unwrap();
        assert!(g.s0 >= 0.0 && g.s0 <= 0.5 + 1e-9);
        let g = estimate_growth(&|t| re((-t.abs()).exp()), Support::TwoSided).unwrap();
        assert!((g.s0 + 1.0).abs() <= 0.5 + 1e-9 && (g.s1 - 1.0).abs() <= 0.5 + 1e-9, "{g:?}");
        assert!(estimate_growth(&|_| re(f64::NAN), Support::RightAxis).is_err());
    }
}
