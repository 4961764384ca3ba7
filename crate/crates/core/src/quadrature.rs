//! Adaptive Gauss-Kronrod (7/15) quadrature for `A_r`-valued integrands on
//! finite intervals, exponentially damped half-lines and truncated Bromwich
//! lines.

use rayon::prelude::*;

use crate::algebra::CDNumber;
use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_INTERVALS: usize = 4000;
const GRADING_LEVELS: usize = 40;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: CDNumber,
    pub err_estimate: f64,
    pub panels_used: usize,
    pub truncation_point: f64,
}

/// What is known about `f(t) * kernel` on `[0, inf)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegrandProfile {
    /// Lower bound on the exponential decay rate, `Re p - s0`.
    pub decay_rate: f64,
    /// Dominant angular frequency.
    pub osc_rate: f64,
    /// `C` in `|f(t)| <= C exp(s0 t)`.
    pub bound_const: f64,
    /// Integrable singularity at `t = 0` (graded mesh there).
    pub singular_origin: bool,
}

impl IntegrandProfile {
    pub fn new(decay_rate: f64, osc_rate: f64, bound_const: f64) -> Self {
        Self { decay_rate, osc_rate, bound_const, singular_origin: false }
    }
}

#[derive(Clone, Debug)]
struct Segment {
    a: f64,
    b: f64,
    value: Vec<f64>,
    err: f64,
    /// Roundoff floor of `err`.
    floor: f64,
}

fn gk15<F: Fn(f64) -> CDNumber>(f: &F, a: f64, b: f64) -> Segment {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let n = fc.dim();
    let mut k = vec![0.0; n];
    let mut g = vec![0.0; n];
    let mut abs_k = vec![0.0; n];
    let mut samples: Vec<(f64, CDNumber)> = Vec::with_capacity(15);
    for j in 0..n {
        k[j] = WGK[7] * fc.coeff(j);
        g[j] = WG[3] * fc.coeff(j);
        abs_k[j] = WGK[7] * fc.coeff(j).abs();
    }
    samples.push((WGK[7], fc));
    for i in 0..7 {
        let dx = h * XGK[i];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        let m = n.max(f1.dim()).max(f2.dim());
        if m > n {
            k.resize(m, 0.0);
            g.resize(m, 0.0);
            abs_k.resize(m, 0.0);
        }
        for j in 0..k.len() {
            let s = f1.coeff(j) + f2.coeff(j);
            k[j] += WGK[i] * s;
            abs_k[j] += WGK[i] * (f1.coeff(j).abs() + f2.coeff(j).abs());
            if i % 2 == 1 {
                g[j] += WG[i / 2] * s;
            }
        }
        samples.push((WGK[i], f1));
        samples.push((WGK[i], f2));
    }
    let mut err2 = 0.0;
    let mut floor2 = 0.0;
    let mut value = vec![0.0; k.len()];
    for j in 0..k.len() {
        let mean = 0.5 * k[j];
        let resasc: f64 = samples.iter().map(|(w, s)| w * (s.coeff(j) - mean).abs()).sum::<f64>() * h.abs();
        let resabs = abs_k[j] * h.abs();
        let diff = ((k[j] - g[j]) * h).abs();
        let mut e = diff;
        if resasc != 0.0 && diff != 0.0 {
            e = resasc * (200.0 * diff / resasc).powf(1.5).min(1.0);
        }
        let floor = 50.0 * f64::EPSILON * resabs;
        floor2 += floor * floor;
        if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) && e < floor {
            e = floor;
        }
        err2 += e * e;
        value[j] = k[j] * h;
    }
    Segment { a, b, value, err: err2.sqrt(), floor: floor2.sqrt() }
}

fn to_cd(v: &[f64]) -> CDNumber {
    let level = (v.len().max(2) as f64).log2().ceil() as u8;
    let mut z = CDNumber::zero(level);
    for (j, x) in v.iter().enumerate() {
        z.set_coeff(j, *x);
    }
    z
}

fn add_into(acc: &mut Vec<f64>, v: &[f64]) {
    if v.len() > acc.len() {
        acc.resize(v.len(), 0.0);
    }
    acc.iter_mut().zip(v).for_each(|(a, x)| *a += x);
}

/// Adaptive bisection of a single interval. Returns the sum in a fixed
/// left-to-right order, the error estimate and the number of segments.
fn adapt<F: Fn(f64) -> CDNumber>(f: &F, a: f64, b: f64, tol: f64) -> (Vec<f64>, f64, usize, bool) {
    let mut segs = vec![gk15(f, a, b)];
    let mut total_err = segs[0].err;
    while total_err > tol && segs.len() < MAX_INTERVALS {
        let (idx, _) = segs
            .iter()
            .enumerate()
            .filter(|(_, s)| s.err > 1.01 * s.floor && (s.b - s.a).abs() > 1e-13 * (1.0 + s.a.abs().max(s.b.abs())))
            .fold((usize::MAX, -1.0), |best, (i, s)| if s.err > best.1 { (i, s.err) } else { best });
        if idx == usize::MAX {
            break;
        }
        let s = segs.swap_remove(idx);
        let m = 0.5 * (s.a + s.b);
        let l = gk15(f, s.a, m);
        let r = gk15(f, m, s.b);
        segs.push(l);
        segs.push(r);
        total_err = segs.iter().map(|s| s.err).sum();
    }
    segs.sort_by(|x, y| x.a.partial_cmp(&y.a).expect("finite endpoints"));
    let mut acc = Vec::new();
    for s in &segs {
        add_into(&mut acc, &s.value);
    }
    let floor: f64 = segs.iter().map(|s| s.floor).sum();
    (acc, total_err, segs.len(), total_err <= tol.max(1.01 * floor))
}

fn finish(acc: Vec<f64>, err: f64, panels: usize, trunc: f64, ok: bool, tol: f64) -> Result<QuadratureResult> {
    if !ok {
        return Err(Error::Accuracy { best: acc, err, tol });
    }
    Ok(QuadratureResult { value: to_cd(&acc), err_estimate: err, panels_used: panels, truncation_point: trunc })
}

/// Adaptive integration over `[a, b]`.
pub fn integrate_interval<F: Fn(f64) -> CDNumber>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    if !(a < b) || !(tol > 0.0) {
        return Err(Error::Contract(format!("need a < b and tol > 0 (a={a}, b={b}, tol={tol})")));
    }
    let (acc, err, n, ok) = adapt(&f, a, b, tol);
    finish(acc, err, n, b, ok, tol)
}

/// Integration over `[a, b]` with an integrable singularity at `a`, using a
/// geometric mesh with ratio 1/4 toward the singular endpoint.
pub fn integrate_interval_graded<F: Fn(f64) -> CDNumber>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    if !(a < b) || !(tol > 0.0) {
        return Err(Error::Contract("need a < b and tol > 0".into()));
    }
    let share = tol / (GRADING_LEVELS + 1) as f64;
    let mut acc = Vec::new();
    let mut err = 0.0;
    let mut panels = 0;
    let mut ok = true;
    let mut hi = b;
    for _ in 0..GRADING_LEVELS {
        let lo = a + 0.25 * (hi - a);
        let (v, e, n, good) = adapt(&f, lo, hi, share);
        add_into(&mut acc, &v);
        err += e;
        panels += n;
        ok &= good;
        hi = lo;
    }
    let last = gk15(&f, a, hi);
    add_into(&mut acc, &last.value);
    err += last.err;
    finish(acc, err, panels + 1, b, ok && err <= tol, tol)
}

fn panel_grid(lo: f64, hi: f64, width: f64) -> Vec<(f64, f64)> {
    let n = ((hi - lo) / width).ceil().max(1.0) as usize;
    let w = (hi - lo) / n as f64;
    (0..n).map(|k| (lo + k as f64 * w, if k + 1 == n { hi } else { lo + (k + 1) as f64 * w })).collect()
}

fn run_panels<F>(f: &F, panels: &[(f64, f64)], share: f64, graded_first: bool) -> (Vec<f64>, f64, usize, bool, Vec<f64>)
where
    F: Fn(f64) -> CDNumber + Sync,
{
    let work = |(k, &(a, b)): (usize, &(f64, f64))| {
        if k == 0 && graded_first {
            match integrate_interval_graded(f, a, b, share) {
                Ok(r) => (r.value.coeffs().to_vec(), r.err_estimate, r.panels_used, true),
                Err(Error::Accuracy { best, err, .. }) => (best, err, GRADING_LEVELS + 1, false),
                Err(_) => (vec![f64::NAN], f64::INFINITY, 1, false),
            }
        } else {
            adapt(f, a, b, share)
        }
    };
    let results: Vec<_> = if panels.len() >= 32 {
        panels.par_iter().enumerate().map(work).collect()
    } else {
        panels.iter().enumerate().map(work).collect()
    };
    let mut acc = Vec::new();
    let mut err = 0.0;
    let mut n = 0;
    let mut ok = true;
    let mut mags = Vec::with_capacity(results.len());
    for (v, e, k, good) in results {
        mags.push(v.iter().map(|x| x * x).sum::<f64>().sqrt());
        add_into(&mut acc, &v);
        err += e;
        n += k;
        ok &= good;
    }
    (acc, err, n, ok, mags)
}

/// Integration over `[0, inf)` of an exponentially damped integrand.
///
/// The half-line is truncated at `T = ln(C / (tol d)) / d` and `[0, T]` is
/// split into panels no wider than `min(1, pi / max(1, osc))`. When the
/// declared bound turns out to be optimistic the grid is extended until
/// the last panel is negligible.
pub fn integrate_semi_axis<F>(f: F, profile: IntegrandProfile, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> CDNumber + Sync,
{
    let d = profile.decay_rate;
    if !(d > 0.0) {
        return Err(Error::Divergence(format!("decay rate {d} is not positive")));
    }
    if !(tol > 0.0) {
        return Err(Error::Contract("tol must be positive".into()));
    }
    let c = profile.bound_const.max(f64::MIN_POSITIVE);
    let width = (std::f64::consts::PI / profile.osc_rate.max(1.0)).min(1.0);
    let mut t_end = ((2.0 * c / (tol * d)).ln() / d).max(4.0 / d).max(width);
    let tail = |t: f64| c * (-d * t).exp() / d;
    let panels = panel_grid(0.0, t_end, width);
    let share = 0.5 * tol / (panels.len() + 1) as f64;
    let (mut acc, mut err, mut n, mut ok, mags) = run_panels(&f, &panels, share, profile.singular_origin);
    let mut last = mags.last().copied().unwrap_or(0.0);
    let cap = 8.0 * t_end;
    while last > 1e-3 * tol && t_end < cap {
        let next = t_end * 1.5;
        let more = panel_grid(t_end, next, width);
        let (v, e, k, good, m) = run_panels(&f, &more, share, false);
        add_into(&mut acc, &v);
        err += e;
        n += k;
        ok &= good;
        last = m.last().copied().unwrap_or(0.0);
        t_end = next;
    }
    err += tail(t_end);
    if last > 1e-3 * tol {
        err += last;
    }
    finish(acc, err, n, t_end, ok && err <= tol * 1.0001 + 1e-300, tol)
}

fn check_axis(s: &CDNumber) -> Result<()> {
    if (s.norm() - 1.0).abs() > 1e-12 || s.re() != 0.0 {
        return Err(Error::Contract("Bromwich axis S must be a unit purely imaginary number".into()));
    }
    Ok(())
}

/// Integral over `theta in [lo, hi]` of a line integrand, in panels whose
/// width follows the oscillation of `exp(S theta t)`.
pub(crate) fn integrate_line_segment<G>(g: &G, lo: f64, hi: f64, t: f64, tol: f64) -> (Vec<f64>, f64, usize)
where
    G: Fn(f64) -> CDNumber + Sync,
{
    let width = (std::f64::consts::PI / t.abs().max(1.0)).min(1.0);
    let panels = panel_grid(lo, hi, width);
    let share = tol / panels.len() as f64;
    let (acc, err, n, _, _) = run_panels(g, &panels, share, false);
    (acc, err, n)
}

/// Symmetric principal-value integral of
/// `theta -> F(a + S theta) exp((a + S theta) t) S` over
/// `[-theta_max, theta_max]` (linear kernel, `zeta = 0`).
pub fn integrate_bromwich_line<F>(
    image: F,
    a: f64,
    s: &CDNumber,
    t: f64,
    theta_max: f64,
    tol: f64,
) -> Result<QuadratureResult>
where
    F: Fn(&CDNumber) -> CDNumber + Sync,
{
    check_axis(s)?;
    if !(theta_max > 0.0) {
        return Err(Error::Contract("theta_max must be positive".into()));
    }
    let g = |theta: f64| {
        let p = CDNumber::from_slice_pair(a, theta, s);
        &(&image(&p) * &p.scale(t).exp()) * s
    };
    let (acc, err, n) = integrate_line_segment(&g, -theta_max, theta_max, t, tol);
    Ok(QuadratureResult { value: to_cd(&acc), err_estimate: err, panels_used: n, truncation_point: theta_max })
}
