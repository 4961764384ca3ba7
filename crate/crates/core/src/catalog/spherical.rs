//! Closed forms for `t^n` under the spherical kernel.

use crate::algebra::CDNumber;
use crate::error::{Error, Result};

/// Largest level for which the product-to-sum expansion is attempted.
pub const MAX_EXPANSION_LEVEL: u8 = 4;

fn binom(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// `T_n = int_0^inf t^n e^(-a0 t) cos(a1 t + b) dt` and the sine analogue
/// `S_n`, from the binomial expansion of `(a0 + i a1)^(n+1)`.
pub fn eval_tn_sn(n: u32, alpha0: f64, alpha1: f64, beta: f64) -> Result<(f64, f64)> {
    if !(alpha0 > 0.0) {
        return Err(Error::Divergence(format!("alpha0 = {alpha0} must be positive")));
    }
    let m = (n + 1) as u64;
    let mut a = 0.0;
    let mut b = 0.0;
    let mut sign = 1.0;
    for q in 0..=m / 2 {
        a += sign * binom(m, 2 * q) * alpha0.powi((m - 2 * q) as i32) * alpha1.powi((2 * q) as i32);
        if 2 * q < m {
            b += sign * binom(m, 2 * q + 1) * alpha0.powi((m - 2 * q - 1) as i32) * alpha1.powi((2 * q + 1) as i32);
        }
        sign = -sign;
    }
    let scale = factorial(n) / (alpha0 * alpha0 + alpha1 * alpha1).powi(n as i32 + 1);
    let (s, c) = beta.sin_cos();
    Ok((scale * (a * c - b * s), scale * (a * s + b * c)))
}

#[derive(Clone, Copy, Debug)]
enum Trig {
    Cos,
    Sin,
}

/// `amp * trig(omega t + beta)`.
#[derive(Clone, Copy, Debug)]
struct Term {
    amp: f64,
    trig: Trig,
    omega: f64,
    beta: f64,
}

fn times(terms: &[Term], trig: Trig, omega: f64, beta: f64) -> Vec<Term> {
    let mut out = Vec::with_capacity(2 * terms.len());
    for t in terms {
        let (wp, bp) = (t.omega + omega, t.beta + beta);
        let (wm, bm) = (t.omega - omega, t.beta - beta);
        let h = 0.5 * t.amp;
        let pair = match (t.trig, trig) {
            (Trig::Cos, Trig::Cos) => [(h, Trig::Cos, wm, bm), (h, Trig::Cos, wp, bp)],
            (Trig::Sin, Trig::Cos) => [(h, Trig::Sin, wp, bp), (h, Trig::Sin, wm, bm)],
            (Trig::Cos, Trig::Sin) => [(h, Trig::Sin, wp, bp), (-h, Trig::Sin, wm, bm)],
            (Trig::Sin, Trig::Sin) => [(h, Trig::Cos, wm, bm), (-h, Trig::Cos, wp, bp)],
        };
        out.extend(pair.iter().map(|&(amp, trig, omega, beta)| Term { amp, trig, omega, beta }));
    }
    out
}

/// Image of `t^n` under the spherical kernel, by expanding every component
/// of `exp(-M)` into single sinusoids and applying `T_n`, `S_n` term-wise.
pub fn spherical_tn_image(n: u32, p: &CDNumber, zeta: &CDNumber) -> Result<CDNumber> {
    let level = p.level().max(zeta.level()).max(2);
    if level > MAX_EXPANSION_LEVEL {
        return Err(Error::Unsupported(format!("spherical t^n expansion capped at level {MAX_EXPANSION_LEVEL}")));
    }
    let dim = 1usize << level;
    let a0 = p.re();
    let phase = |k: usize| (p.coeff(k), zeta.coeff(k));
    let integrate = |terms: &[Term]| -> Result<f64> {
        let mut acc = 0.0;
        for t in terms {
            let (tn, sn) = eval_tn_sn(n, a0, t.omega, t.beta)?;
            acc += t.amp * match t.trig {
                Trig::Cos => tn,
                Trig::Sin => sn,
            };
        }
        Ok(acc)
    };

    let mut out = CDNumber::zero(level);
    let (w1, b1) = phase(1);
    out.set_coeff(0, eval_tn_sn(n, a0, w1, b1)?.0);
    // Component k carries -sin(phi1) sin(phi2)...sin(phi_k) cos(phi_{k+1}),
    // the last one has no trailing cosine.
    let mut sines = vec![Term { amp: -1.0, trig: Trig::Sin, omega: w1, beta: b1 }];
    for k in 1..dim {
        let comp = if k + 1 < dim {
            let (w, b) = phase(k + 1);
            let c = integrate(&times(&sines, Trig::Cos, w, b))?;
            sines = times(&sines, Trig::Sin, w, b);
            c
        } else {
            integrate(&sines)?
        };
        out.set_coeff(k, comp);
    }
    Ok(out.scale((-zeta.re()).exp()))
}

/// A componentwise quaternion `t^n` image whose `i2` part has the opposite sign,
/// kept for comparison against [`spherical_tn_image`].
pub fn alternate_quaternion_tn_image(n: u32, p: &CDNumber, zeta: &CDNumber) -> Result<CDNumber> {
    let c = |k: usize| (p.coeff(k), zeta.coeff(k));
    let (p0, _) = c(0);
    let ((p1, z1), (p2, z2), (p3, z3)) = (c(1), c(2), c(3));
    let mut out = CDNumber::zero(2);
    out.set_coeff(0, eval_tn_sn(n, p0, p1, z1)?.0);
    let mut c1 = 0.0;
    let mut c2 = 0.0;
    let mut c3 = 0.0;
    for v in [1.0f64, 2.0] {
        let sv = (-1f64).powf(v);
        c1 += eval_tn_sn(n, p0, p1 + sv * p2, z1 + sv * z2)?.1;
        for u in [1.0f64, 2.0] {
            let su = (-1f64).powf(u);
            let w = p3 + su * (p1 + sv * p2);
            let b = z3 + su * (z1 + sv * z2);
            c2 += sv * eval_tn_sn(n, p0, w, b)?.0;
            c3 += -sv * eval_tn_sn(n, p0, w, b)?.1;
        }
    }
    out.set_coeff(1, -0.5 * c1);
    out.set_coeff(2, -0.25 * c2);
    out.set_coeff(3, -0.25 * c3);
    Ok(out.scale((-zeta.re()).exp()))
}
