//! Transform kernels: the linear phase `u = p t + zeta` and the spherical
//! phase `u = p0 t + zeta0 + M(p, t; zeta)`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::algebra::CDNumber;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelVariant {
    Linear,
    Spherical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelSpec {
    pub variant: KernelVariant,
    pub level: u8,
}

impl KernelSpec {
    pub fn new(variant: KernelVariant, level: u8) -> Result<Self> {
        if variant == KernelVariant::Spherical && level < 2 {
            return Err(Error::Contract("spherical kernel needs level >= 2".into()));
        }
        if level == 0 || level > crate::algebra::MAX_LEVEL {
            return Err(Error::LevelOutOfRange(level as u32));
        }
        Ok(Self { variant, level })
    }

    pub fn linear(level: u8) -> Self {
        Self { variant: KernelVariant::Linear, level }
    }

    pub fn spherical(level: u8) -> Self {
        assert!(level >= 2, "spherical kernel needs level >= 2");
        Self { variant: KernelVariant::Spherical, level }
    }
}

fn reduce(x: f64) -> f64 {
    x.rem_euclid(TAU)
}

/// Radial angle `p1 t + zeta1` and the unit axis of `M`.
fn spherical_axis(p: &CDNumber, t: f64, zeta: &CDNumber, level: u8) -> (f64, CDNumber) {
    let n = 1usize << level;
    let phi = |k: usize| reduce(p.coeff(k) * t + zeta.coeff(k));
    let mut axis = CDNumber::zero(level);
    let mut sines = 1.0;
    for k in 1..n - 1 {
        let a = phi(k + 1);
        axis.set_coeff(k, sines * a.cos());
        sines *= a.sin();
    }
    axis.set_coeff(n - 1, sines);
    (p.coeff(1) * t + zeta.coeff(1), axis)
}

fn common_level(p: &CDNumber, zeta: &CDNumber) -> u8 {
    p.level().max(zeta.level())
}

/// `M(p, t; zeta)`, purely imaginary with `|M| = |p1 t + zeta1|`.
pub fn eval_m(p: &CDNumber, t: f64, zeta: &CDNumber) -> Result<CDNumber> {
    let level = common_level(p, zeta);
    if level < 2 {
        return Err(Error::Contract("M needs level >= 2".into()));
    }
    let (theta, axis) = spherical_axis(p, t, zeta, level);
    Ok(axis.scale(theta))
}

pub fn eval_u(spec: KernelSpec, p: &CDNumber, t: f64, zeta: &CDNumber) -> Result<CDNumber> {
    match spec.variant {
        KernelVariant::Linear => Ok(&p.scale(t) + zeta),
        KernelVariant::Spherical => Ok(eval_m(p, t, zeta)?.add_real(p.re() * t + zeta.re())),
    }
}

/// `exp(-u(p, t; zeta))`.
pub fn kernel_weight(spec: KernelSpec, p: &CDNumber, t: f64, zeta: &CDNumber) -> CDNumber {
    match spec.variant {
        KernelVariant::Linear => (-(&p.scale(t) + zeta)).exp(),
        KernelVariant::Spherical => {
            let level = common_level(p, zeta).max(spec.level);
            let (theta, axis) = spherical_axis(p, t, zeta, level);
            let th = reduce(theta);
            let damp = (-(p.re() * t + zeta.re())).exp();
            let mut w = axis.scale(-damp * th.sin());
            w.set_coeff(0, damp * th.cos());
            w
        }
    }
}

/// Componentwise trigonometric form of `exp(M)`:
/// `cos phi1 + i1 sin phi1 cos phi2 + i2 sin phi1 sin phi2 cos phi3 + ...`.
pub fn expand_exp_m(p: &CDNumber, t: f64, zeta: &CDNumber) -> CDNumber {
    let level = common_level(p, zeta).max(2);
    let n = 1usize << level;
    let phi = |k: usize| reduce(p.coeff(k) * t + zeta.coeff(k));
    let mut out = CDNumber::zero(level);
    out.set_coeff(0, phi(1).cos());
    let mut sines = phi(1).sin();
    for k in 1..n - 1 {
        let a = phi(k + 1);
        out.set_coeff(k, sines * a.cos());
        sines *= a.sin();
    }
    out.set_coeff(n - 1, sines);
    out
}

/// Angular frequency bound of the kernel along `t`.
pub fn oscillation_rate(spec: KernelSpec, p: &CDNumber) -> f64 {
    match spec.variant {
        KernelVariant::Linear => p.imag_norm(),
        KernelVariant::Spherical => p.coeffs()[1..].iter().map(|c| c.abs()).sum(),
    }
}
