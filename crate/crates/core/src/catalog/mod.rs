//! Closed-form transform pairs and operational rules, each machine-checked
//! against forward quadrature.

pub mod pairs;
pub mod rules;
pub mod spherical;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::CDNumber;
use crate::error::{Error, Result};
use crate::inversion::RationalImage;
use crate::kernel::{KernelSpec, KernelVariant};
use crate::quadrature::QuadratureResult;
use crate::transforms::{laplace_one_sided, laplace_two_sided, mellin_forward, Original, TransformRequest};

pub use rules::{rule_list, OperationalRule, RuleFamily, RuleInstance};
pub use spherical::eval_tn_sn;
pub use verify::{all_pass, verify_pair, verify_rule, CheckRecord};

pub const DEFAULT_SEED: u64 = 42;

pub type Params = BTreeMap<String, f64>;

/// `(p, zeta) -> F(p; zeta)`.
pub type ImageFn = Arc<dyn Fn(&CDNumber, &CDNumber) -> Result<CDNumber> + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    OneSided,
    TwoSided,
    Mellin,
}

#[derive(Clone)]
pub struct TransformPair {
    pub name: String,
    pub kind: PairKind,
    pub kernel: KernelSpec,
    pub params: Params,
    pub original: Original,
    /// Convergence half-plane or strip of the image (the Mellin strip for
    /// Mellin pairs).
    pub strip: (f64, f64),
    pub provenance: String,
    pub rational: Option<RationalImage>,
    /// Integral converges although the growth bounds fail.
    pub exceptional: bool,
    /// Formula analytic across `t = 0`, so derivatives there may be taken
    /// from both sides.
    pub entire: bool,
    pub real_valued: bool,
    pub initial_value: Option<CDNumber>,
    pub final_value: Option<CDNumber>,
    pub tol: f64,
    image: ImageFn,
}

impl fmt::Debug for TransformPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TransformPair")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("params", &self.params)
            .field("strip", &self.strip)
            .finish()
    }
}

/// Serializable summary for listings.
#[derive(Clone, Debug, Serialize)]
pub struct PairDescriptor {
    pub name: String,
    pub kind: PairKind,
    pub kernel: KernelVariant,
    pub params: Params,
    pub strip: (Option<f64>, Option<f64>),
    pub original: String,
    pub provenance: String,
    pub rational: bool,
    pub exceptional: bool,
    pub tol: f64,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

impl TransformPair {
    /// Closed-form image at `zeta = 0`.
    pub fn image(&self, p: &CDNumber) -> Result<CDNumber> {
        self.image_at(p, &CDNumber::zero(p.level()))
    }

    /// Closed-form image; `Unsupported` when the pair has no closed form
    /// for this `zeta`.
    pub fn image_at(&self, p: &CDNumber, zeta: &CDNumber) -> Result<CDNumber> {
        self.check_domain(p)?;
        (self.image)(p, zeta)
    }

    pub fn in_strip(&self, x: f64) -> bool {
        x > self.strip.0 && x < self.strip.1
    }

    fn check_domain(&self, p: &CDNumber) -> Result<()> {
        if self.in_strip(p.re()) {
            Ok(())
        } else {
            Err(Error::Domain(format!("Re p = {} outside ({}, {})", p.re(), self.strip.0, self.strip.1)))
        }
    }

    /// Forward quadrature under the pair's own kernel.
    pub fn forward(&self, p: &CDNumber, zeta: &CDNumber, tol: f64) -> Result<QuadratureResult> {
        forward_original(self.kind, &self.original, self.kernel, p, zeta, tol)
    }

    /// Closed form when available, quadrature otherwise.
    pub fn value(&self, p: &CDNumber, zeta: &CDNumber, tol: f64) -> Result<CDNumber> {
        match self.image_at(p, zeta) {
            Err(Error::Unsupported(_)) => Ok(self.forward(p, zeta, tol)?.value),
            other => other,
        }
    }

    pub fn descriptor(&self) -> PairDescriptor {
        PairDescriptor {
            name: self.name.clone(),
            kind: self.kind,
            kernel: self.kernel.variant,
            params: self.params.clone(),
            strip: (finite(self.strip.0), finite(self.strip.1)),
            original: self.original.label.clone(),
            provenance: self.provenance.clone(),
            rational: self.rational.is_some(),
            exceptional: self.exceptional,
            tol: self.tol,
        }
    }

    pub fn param(&self, key: &str) -> f64 {
        self.params.get(key).copied().unwrap_or(f64::NAN)
    }
}

/// Forward transform of an original of the given kind.
pub fn forward_original(
    kind: PairKind,
    original: &Original,
    kernel: KernelSpec,
    p: &CDNumber,
    zeta: &CDNumber,
    tol: f64,
) -> Result<QuadratureResult> {
    match kind {
        PairKind::Mellin => mellin_forward(original, kernel, p, zeta, tol),
        _ => {
            let req = TransformRequest::new(original.clone(), kernel, p.clone())
                .with_zeta(zeta.clone())
                .with_tol(tol);
            if kind == PairKind::OneSided {
                laplace_one_sided(&req)
            } else {
                laplace_two_sided(&req)
            }
        }
    }
}

/// Every shipped pair at its default parameters.
pub fn catalog_list() -> Vec<TransformPair> {
    pairs::ENTRIES.iter().map(|e| (e.build)(&e.defaults())).collect()
}

pub fn pair_names() -> Vec<&'static str> {
    pairs::ENTRIES.iter().map(|e| e.name).collect()
}

pub fn lookup(name: &str) -> Result<TransformPair> {
    build_pair(name, &Params::new())
}

/// Builds a pair with some parameters overridden; unknown keys are rejected.
pub fn build_pair(name: &str, overrides: &Params) -> Result<TransformPair> {
    let entry = pairs::entry(name)?;
    let mut params = entry.defaults();
    for (k, v) in overrides {
        if !params.contains_key(k) {
            return Err(Error::Input(format!("pair {name} has no parameter {k:?}")));
        }
        if !v.is_finite() {
            return Err(Error::Input(format!("parameter {k} must be finite")));
        }
        params.insert(k.clone(), *v);
    }
    (entry.validate)(&params)?;
    Ok((entry.build)(&params))
}

/// Pair with parameters drawn from their admissible sampling ranges.
pub fn random_pair(name: &str, rng: &mut ChaCha8Rng) -> Result<TransformPair> {
    let entry = pairs::entry(name)?;
    let mut params = entry.defaults();
    for &(k, lo, hi) in entry.ranges {
        params.insert(k.to_string(), rng.gen_range(lo..hi));
    }
    Ok((entry.build)(&params))
}

/// Uniform real part inside the strip, away from its edges.
pub fn sample_re(strip: (f64, f64), rng: &mut ChaCha8Rng) -> f64 {
    match (strip.0.is_finite(), strip.1.is_finite()) {
        (true, true) => strip.0 + (strip.1 - strip.0) * rng.gen_range(0.15..0.85),
        (true, false) => strip.0 + 0.5 + rng.gen_range(0.0..2.0),
        (false, true) => strip.1 - 0.5 - rng.gen_range(0.0..2.0),
        (false, false) => rng.gen_range(-1.5..1.5),
    }
}

/// Which part of `A_r` a probe point occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeClass {
    Real,
    Slice,
    Full,
}

/// `(p, zeta)` sample points: four real, four on the `i1` slice and four
/// with all quaternion components, all inside the strip.
pub fn probes(pair: &TransformPair, seed: u64) -> Vec<(ProbeClass, CDNumber, CDNumber)> {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fxhash(&pair.name));
    let level = pair.kernel.level.max(2);
    let mut out = Vec::with_capacity(12);
    for class in [ProbeClass::Real, ProbeClass::Slice, ProbeClass::Full] {
        for _ in 0..4 {
            let mut p = CDNumber::real(level, sample_re(pair.strip, &mut rng));
            let imag = match class {
                ProbeClass::Real => 0,
                ProbeClass::Slice => 1,
                ProbeClass::Full => 3,
            };
            for j in 1..=imag {
                p.set_coeff(j, rng.gen_range(-1.5..1.5));
            }
            let mut zeta = CDNumber::zero(level);
            if class == ProbeClass::Full && pair.kernel.variant == KernelVariant::Spherical {
                for j in 0..4 {
                    zeta.set_coeff(j, rng.gen_range(-0.5..0.5));
                }
            }
            out.push((class, p, zeta));
        }
    }
    out
}

/// Stable per-name seed offset.
pub(crate) fn fxhash(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}
