//! Recovering originals from images: Bromwich lines, residues of rational
//! images and Laurent tails.
//!
//! An image of `f = sum_j f_j i_j` with real `f_j` under the linear kernel
//! splits as `F(p) = sum_j i_j F_j(p)` where each `F_j` maps the slice of
//! `p` into itself. Evaluating `F` at `p` and at its conjugate separates
//! the `F_j`, and each one is inverted as an ordinary complex image.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::CDNumber;
use crate::error::{Error, Result};
use crate::kernel::{KernelSpec, KernelVariant};
use crate::poly::RealPoly;
use crate::quadrature::integrate_line_segment;
use crate::special::slice_apply;

/// Default cap of the `theta` ladder.
pub const THETA_MAX: f64 = 16384.0;
const THETA_START: f64 = 64.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BromwichOptions {
    pub theta_max: f64,
    /// Convergence strip `(s0, s1)` of the image; `a` must lie inside.
    pub strip: (f64, f64),
}

impl Default for BromwichOptions {
    fn default() -> Self {
        Self { theta_max: THETA_MAX, strip: (f64::NEG_INFINITY, f64::INFINITY) }
    }
}

impl BromwichOptions {
    pub fn one_sided(s0: f64) -> Self {
        Self { strip: (s0, f64::INFINITY), ..Self::default() }
    }

    pub fn strip(s0: f64, s1: f64) -> Self {
        Self { strip: (s0, s1), ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Inversion {
    pub value: CDNumber,
    pub err_estimate: f64,
    pub theta_max: f64,
    /// Set at `t = 0`, where the line integral converges to the midpoint of
    /// the jump rather than to a one-sided limit.
    pub jump_midpoint: bool,
}

/// `theta` cut-offs with `theta |t|` an odd multiple of `pi / 2`, which
/// cancels the leading oscillatory truncation error.
fn ladder(t: f64, cap: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    let mut th = THETA_START.min(cap);
    loop {
        let adj = if t == 0.0 {
            th
        } else {
            let w = PI / t.abs();
            ((th / w - 0.5).round().max(0.0) + 0.5) * w
        };
        if out.last().is_none_or(|&l| adj > l) {
            out.push(adj);
        }
        if th >= cap {
            break;
        }
        th = (2.0 * th).min(cap);
    }
    out
}

/// Line inversion along `p = a + theta S`.
pub fn bromwich_invert<F>(
    image: F,
    a: f64,
    s: &CDNumber,
    t: f64,
    kernel: KernelSpec,
    tol: f64,
    opts: &BromwichOptions,
) -> Result<Inversion>
where
    F: Fn(&CDNumber) -> CDNumber + Sync,
{
    if (s.norm() - 1.0).abs() > 1e-12 || s.re() != 0.0 {
        return Err(Error::Contract("S must be a unit purely imaginary number".into()));
    }
    if kernel.variant == KernelVariant::Spherical && s.imag().dist_max(&CDNumber::unit(s.level(), 1)?.scale(s.coeff(1))) > 0.0 {
        return Err(Error::Unsupported("spherical inversion only along the i1 slice".into()));
    }
    if !(a > opts.strip.0 && a < opts.strip.1) {
        return Err(Error::Domain(format!("a = {a} outside ({}, {})", opts.strip.0, opts.strip.1)));
    }
    if !(tol > 0.0) || !(opts.theta_max > 0.0) {
        return Err(Error::Contract("tol and theta_max must be positive".into()));
    }

    let probe = image(&CDNumber::from_slice_pair(a, 1.0, s));
    let level = probe.level().max(s.level());
    let s = s.embed(level)?;
    let n = 1usize << level;
    // Columns are the coefficients of i_j S.
    let mut cols = DMatrix::<f64>::zeros(n, n);
    for j in 0..n {
        let v = CDNumber::unit(level, j)?.try_mul(&s)?;
        for k in 0..n {
            cols[(k, j)] = v.coeff(k);
        }
    }
    let lu = cols.lu();
    if !lu.is_invertible() {
        return Err(Error::Singular("right multiplication by S"));
    }

    let integrand = |theta: f64| {
        let p = CDNumber::from_slice_pair(a, theta, &s);
        let fp = image(&p).embed(level).unwrap_or_else(|_| CDNumber::from_slice(level, &vec![f64::NAN; n]));
        let fq = image(&p.conj()).embed(level).unwrap_or_else(|_| CDNumber::from_slice(level, &vec![f64::NAN; n]));
        let odd = DVector::from_iterator(n, (0..n).map(|k| 0.5 * (fp.coeff(k) - fq.coeff(k))));
        let y = lu.solve(&odd).unwrap_or_else(|| DVector::from_element(n, f64::NAN));
        let (c, sn) = ((theta * t).cos(), (theta * t).sin());
        let v: Vec<f64> = (0..n).map(|k| 0.5 * (fp.coeff(k) + fq.coeff(k)) * c - y[k] * sn).collect();
        CDNumber::from_slice(level, &v)
    };

    let pre = (a * t).exp() / PI;
    let steps = ladder(t, opts.theta_max);
    let ring_tol = 0.05 * tol / pre.max(1e-300);
    let mut acc = vec![0.0; n];
    let mut quad_err = 0.0;
    let mut lo = 0.0;
    let mut prev: Option<Vec<f64>> = None;
    let mut last_diff = f64::INFINITY;
    for &hi in &steps {
        let (v, e, _) = integrate_line_segment(&integrand, lo, hi, t, ring_tol);
        for (x, y) in acc.iter_mut().zip(&v) {
            *x += y;
        }
        quad_err += e;
        lo = hi;
        let cur: Vec<f64> = acc.iter().map(|x| pre * x).collect();
        if cur.iter().any(|x| !x.is_finite()) {
            return Err(Error::Accuracy { best: cur, err: f64::INFINITY, tol });
        }
        if let Some(p) = &prev {
            last_diff = cur.iter().zip(p).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            if last_diff < tol {
                return Ok(Inversion {
                    value: CDNumber::from_slice(level, &cur),
                    err_estimate: last_diff + pre * quad_err,
                    theta_max: hi,
                    jump_midpoint: t == 0.0,
                });
            }
        }
        prev = Some(cur);
    }
    Err(Error::Accuracy { best: prev.unwrap_or_default(), err: last_diff, tol })
}

/// `sum_k n_k p^k / D(p)` with `A_r` numerator coefficients on the left and
/// a real denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalImage {
    num: Vec<CDNumber>,
    den: RealPoly,
    pub kernel: KernelSpec,
}

impl RationalImage {
    pub fn new(num: Vec<CDNumber>, den: Vec<f64>, kernel: KernelSpec) -> Result<Self> {
        let den = RealPoly::new(den);
        if den.degree() < 1 || den.is_zero() {
            return Err(Error::Contract("denominator degree must be at least 1".into()));
        }
        let mut num = num;
        while num.len() > 1 && num.last().is_some_and(|c| c.norm() == 0.0) {
            num.pop();
        }
        if num.len() > den.degree() {
            return Err(Error::Contract("numerator degree must be below denominator degree".into()));
        }
        if num.is_empty() {
            num.push(CDNumber::zero(1));
        }
        Ok(Self { num, den, kernel })
    }

    pub fn real(num: Vec<f64>, den: Vec<f64>) -> Result<Self> {
        Self::new(num.into_iter().map(|x| CDNumber::real(1, x)).collect(), den, KernelSpec::linear(2))
    }

    pub fn level(&self) -> u8 {
        self.num.iter().map(|c| c.level()).max().unwrap_or(1)
    }

    pub fn numerator(&self) -> &[CDNumber] {
        &self.num
    }

    pub fn denominator(&self) -> &RealPoly {
        &self.den
    }

    /// Real numerator polynomial of component `j`.
    pub fn component_numerator(&self, j: usize) -> RealPoly {
        RealPoly::new(self.num.iter().map(|c| c.coeff(j)).collect())
    }

    pub fn eval(&self, p: &CDNumber) -> CDNumber {
        let level = self.level().max(p.level());
        let mut out = CDNumber::zero(level);
        for j in 0..(1usize << self.level()) {
            let nj = self.component_numerator(j);
            if nj.is_zero() {
                continue;
            }
            let v = slice_apply(p, |z| nj.eval(z) / self.den.eval(z));
            let unit = CDNumber::unit(level, j).expect("index within level");
            out = &out + &unit.mul_embed(&v);
        }
        out
    }

    /// First `terms` coefficients of the expansion in `p^(-1)` at infinity,
    /// valid outside the largest root of the denominator.
    pub fn laurent_tail(&self, terms: usize) -> Result<LaurentTail> {
        let m = self.den.degree();
        let d = self.den.coeffs();
        let level = self.level();
        let mut c: Vec<CDNumber> = Vec::with_capacity(terms);
        for l in 1..=terms {
            let mut v = match m.checked_sub(l) {
                Some(k) => self.num.get(k).cloned().unwrap_or_else(|| CDNumber::zero(level)),
                None => CDNumber::zero(level),
            };
            // D(p) sum_l c_l p^(-l) = N(p), matched at the power p^(m-l)
            for (i, ci) in c.iter().enumerate() {
                if let Some(j) = (m + i + 1).checked_sub(l).filter(|j| *j < m) {
                    v = &v - &ci.scale(d[j]);
                }
            }
            c.push(v.scale(1.0 / d[m]));
        }
        let radius = self.den.roots()?.iter().map(|r| r.value.norm()).fold(0.0, f64::max);
        Ok(LaurentTail { coeffs: c, radius: radius.max(f64::MIN_POSITIVE) })
    }
}

fn series_mul(a: &[Complex64], b: &[Complex64], m: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); m];
    for i in 0..m.min(a.len()) {
        for j in 0..(m - i).min(b.len()) {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

fn series_div(a: &[Complex64], b: &[Complex64], m: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); m];
    for k in 0..m {
        let mut v = a.get(k).copied().unwrap_or_default();
        for i in 0..k {
            v -= out[i] * b.get(k - i).copied().unwrap_or_default();
        }
        out[k] = v / b[0];
    }
    out
}

/// Residue sum of `F(p) e^(pt)` over the poles of `F`. Vanishes for `t < 0`.
pub fn residue_invert_rational(r: &RationalImage, t: f64) -> Result<CDNumber> {
    if r.kernel.variant != KernelVariant::Linear {
        return Err(Error::Unsupported("residue inversion uses the linear kernel".into()));
    }
    let level = r.level().max(2);
    if t < 0.0 {
        return Ok(CDNumber::zero(level));
    }
    let roots = r.den.roots()?;
    let mut out = CDNumber::zero(level);
    for j in 0..(1usize << r.level()) {
        let nj = r.component_numerator(j);
        if nj.is_zero() {
            continue;
        }
        let mut sum = Complex64::new(0.0, 0.0);
        for root in &roots {
            let m = root.multiplicity;
            let c = root.value;
            let dt = r.den.taylor_at(c);
            let q: Vec<Complex64> = dt[m..].to_vec();
            let nt = nj.taylor_at(c);
            let mut e = Vec::with_capacity(m);
            let mut term = (c * t).exp();
            for k in 0..m {
                e.push(term);
                term *= t / (k + 1) as f64;
            }
            let top = series_mul(&nt, &e, m);
            sum += series_div(&top, &q, m)[m - 1];
        }
        if !sum.re.is_finite() {
            return Err(Error::Divergence("residue sum overflowed".into()));
        }
        out.set_coeff(j, sum.re);
    }
    Ok(out)
}

/// Coefficients `c_1, c_2, ...` of `p^(-l)`, valid for `|p| > radius`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentTail {
    pub coeffs: Vec<CDNumber>,
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesInversion {
    pub value: CDNumber,
    pub remainder_bound: f64,
}

/// `sum_l c_l t^(l-1) / (l-1)!`. The remainder bound uses
/// `|c_l| <= C R^l` with `C = max |c_l| / R^l` over the given terms.
pub fn series_invert(tail: &LaurentTail, t: f64) -> Result<SeriesInversion> {
    let level = tail.coeffs.iter().map(|c| c.level()).max().unwrap_or(1);
    if t < 0.0 {
        return Ok(SeriesInversion { value: CDNumber::zero(level), remainder_bound: 0.0 });
    }
    if !(tail.radius > 0.0) {
        return Err(Error::Contract("radius must be positive".into()));
    }
    let mut sum = CDNumber::zero(level);
    let mut w = 1.0;
    let mut c_max: f64 = 0.0;
    let mut rl = 1.0;
    for (l, c) in tail.coeffs.iter().enumerate() {
        if l > 0 {
            w *= t / l as f64;
        }
        rl *= tail.radius;
        c_max = c_max.max(c.norm() / rl);
        sum = &sum + &c.scale(w);
    }
    let len = tail.coeffs.len() as i32;
    let rt = tail.radius * t;
    let ln_fact: f64 = (1..=len).map(|k| (k as f64).ln()).sum();
    let bound = if c_max == 0.0 {
        0.0
    } else {
        c_max * tail.radius * (len as f64 * rt.ln() - ln_fact + rt).exp()
    };
    let bound = if t == 0.0 { 0.0 } else { bound };
    if sum.coeffs().iter().any(|x| !x.is_finite()) {
        return Err(Error::Divergence("series overflowed".into()));
    }
    Ok(SeriesInversion { value: sum, remainder_bound: bound })
}

/// Mellin inversion on the line `Re p = w`: the original `g(tau)` is the
/// two-sided original of `q -> G(-q)` at `t = ln tau`.
pub fn mellin_invert<G>(image: G, w: f64, s: &CDNumber, tau: f64, tol: f64, mellin_strip: (f64, f64)) -> Result<Inversion>
where
    G: Fn(&CDNumber) -> CDNumber + Sync,
{
    if !(tau > 0.0) {
        return Err(Error::Contract("tau must be positive".into()));
    }
    if !(w > mellin_strip.0 && w < mellin_strip.1) {
        return Err(Error::Domain(format!("w = {w} outside Mellin strip ({}, {})", mellin_strip.0, mellin_strip.1)));
    }
    let opts = BromwichOptions::strip(-mellin_strip.1, -mellin_strip.0);
    let kernel = KernelSpec::linear(s.level().max(2));
    let mut r = bromwich_invert(|q: &CDNumber| image(&-q), -w, s, tau.ln(), kernel, tol, &opts)?;
    r.jump_midpoint = false;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma;

    fn i1() -> CDNumber {
        CDNumber::unit(2, 1).unwrap()
    }

    fn inv(p: &CDNumber) -> CDNumber {
        p.inverse().unwrap()
    }

    #[test]
    fn ladder_is_increasing() {
        let l = ladder(0.7, THETA_MAX);
        assert!(l.windows(2).all(|w| w[1] > w[0]));
        let k = l[0] * 0.7 / PI - 0.5;
        assert!((k - k.round()).abs() < 1e-9);
    }

    #[test]
    fn bromwich_examples() {
        let k = KernelSpec::linear(2);
        let o = BromwichOptions::one_sided(-1.0);
        let r = bromwich_invert(|p| inv(&p.add_real(1.0)), 0.5, &i1(), 0.7, k, 1e-4, &o).unwrap();
        assert!((r.value.re() - (-0.7f64).exp()).abs() < 1e-3, "{:?}", r.value);
        let o = BromwichOptions::one_sided(0.0);
        let r = bromwich_invert(|p| inv(&(p * p)), 1.0, &i1(), 2.0, k, 1e-4, &o).unwrap();
        assert!((r.value.re() - 2.0).abs() < 1e-3);
        let r = bromwich_invert(|p| inv(&p.add_real(1.0)), 0.5, &i1(), -1.0, k, 1e-4, &o).unwrap();
        assert!(r.value.norm() < 1e-3);
        let r = bromwich_invert(inv, 0.5, &i1(), 0.0, k, 1e-3, &o).unwrap();
        assert!(r.jump_midpoint && (r.value.re() - 0.5).abs() < 5e-2);
        assert!(matches!(bromwich_invert(inv, -0.5, &i1(), 1.0, k, 1e-4, &o), Err(Error::Domain(_))));
    }

    #[test]
    fn bromwich_quaternion_original() {
        // f = i2 e^(-t) + i3 sin t has image i2/(p+1) + i3/(p^2+1).
        let k = KernelSpec::linear(2);
        let i2 = CDNumber::unit(2, 2).unwrap();
        let i3 = CDNumber::unit(2, 3).unwrap();
        let img = |p: &CDNumber| &(&i2 * &inv(&p.add_real(1.0))) + &(&i3 * &inv(&(p * p).add_real(1.0)));
        let r = bromwich_invert(img, 0.5, &i1(), 1.3, k, 1e-5, &BromwichOptions::one_sided(0.0)).unwrap();
        let want = CDNumber::from_slice(2, &[0.0, 0.0, (-1.3f64).exp(), 1.3f64.sin()]);
        assert!(r.value.dist_max(&want) < 1e-3, "{:?}", r.value);
    }

    #[test]
    fn laurent_tail_of_rationals() {
        // 1/(p^2 + 1) = p^-2 - p^-4 + ..., whose original is sin t
        let r = RationalImage::real(vec![1.0], vec![1.0, 0.0, 1.0]).unwrap();
        let tail = r.laurent_tail(6).unwrap();
        let got: Vec<f64> = tail.coeffs.iter().map(|c| c.re()).collect();
        assert_eq!(got, vec![0.0, 1.0, 0.0, -1.0, 0.0, 1.0]);
        assert!((tail.radius - 1.0).abs() < 1e-12);
        let s = series_invert(&r.laurent_tail(40).unwrap(), 1.0).unwrap();
        assert!((s.value.re() - 1f64.sin()).abs() < 1e-12);
        // (p + 2)/(p^2 + 3p + 2) = 1/(p + 1)
        let r = RationalImage::real(vec![2.0, 1.0], vec![2.0, 3.0, 1.0]).unwrap();
        let got: Vec<f64> = r.laurent_tail(4).unwrap().coeffs.iter().map(|c| c.re()).collect();
        assert_eq!(got, vec![1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn residue_examples() {
        let r = RationalImage::real(vec![1.0], vec![0.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
        let v = residue_invert_rational(&r, 1.0).unwrap();
        let want = 1.0 - (-1.0f64).exp() / 3.0 - 2.0 / 3.0 * 0.5f64.exp() * (3f64.sqrt() / 2.0).cos();
        assert!((v.re() - want).abs() < 1e-12);
        let r = RationalImage::real(vec![2.0], vec![4.0, 0.0, 1.0]).unwrap();
        assert!((residue_invert_rational(&r, PI / 4.0).unwrap().re() - 1.0).abs() < 1e-12);
        let r = RationalImage::real(vec![1.0], vec![-3.0, 1.0]).unwrap();
        assert!((residue_invert_rational(&r, 0.5).unwrap().re() - 1.5f64.exp()).abs() < 1e-12);
        // 2 / p^3 <-> t^2
        let r = RationalImage::real(vec![2.0], vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!((residue_invert_rational(&r, 1.7).unwrap().re() - 1.7f64.powi(2)).abs() < 1e-12);
        assert!(RationalImage::real(vec![1.0, 1.0], vec![1.0, 1.0]).is_err());
    }

    #[test]
    fn residue_component_numerator() {
        let i2 = CDNumber::unit(2, 2).unwrap();
        let r = RationalImage::new(vec![i2.clone()], vec![1.0, 1.0], KernelSpec::linear(2)).unwrap();
        let v = residue_invert_rational(&r, 2.0).unwrap();
        assert!(v.dist_max(&i2.scale((-2.0f64).exp())) < 1e-14);
        let p = CDNumber::from_slice(2, &[1.0, 0.3, 0.2, -0.4]);
        assert!(r.eval(&p).dist_max(&(&i2 * &inv(&p.add_real(1.0)))) < 1e-15);
    }

    #[test]
    fn series_examples() {
        let tail = LaurentTail { coeffs: vec![CDNumber::real(2, 1.0); 20], radius: 1.0 };
        let s = series_invert(&tail, 1.0).unwrap();
        assert!((s.value.re() - std::f64::consts::E).abs() <= s.remainder_bound + 1e-15);
        let tail = LaurentTail { coeffs: vec![CDNumber::real(2, 1.0)], radius: 1.0 };
        assert_eq!(series_invert(&tail, 3.3).unwrap().value, CDNumber::real(2, 1.0));
        let i3 = CDNumber::unit(2, 3).unwrap();
        let tail = LaurentTail { coeffs: vec![CDNumber::zero(2), i3.clone()], radius: 1.0 };
        assert_eq!(series_invert(&tail, 2.0).unwrap().value, i3.scale(2.0));
    }

    #[test]
    fn mellin_examples() {
        let g = |p: &CDNumber| slice_apply(p, |z| PI / (z * PI).sin());
        let r = mellin_invert(g, 0.5, &i1(), 1.0, 1e-4, (0.0, 1.0)).unwrap();
        assert!((r.value.re() - 0.5).abs() < 1e-3);
        assert!(r.value.imag_norm() < 1e-9);
        let g = |p: &CDNumber| slice_apply(p, gamma);
        let r = mellin_invert(g, 0.5, &i1(), 2.0, 1e-5, (0.0, f64::INFINITY)).unwrap();
        assert!((r.value.re() - (-2.0f64).exp()).abs() < 1e-3);
    }
}
