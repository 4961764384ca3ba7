//! Constant-coefficient linear ODEs `x^(n) a_0 + ... + x a_n = f` solved
//! through the image equation `X(p) A(p) = F(p) + B(p)`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::CDNumber;
use crate::catalog::{build_pair, PairKind, Params};
use crate::error::{Error, Result};
use crate::inversion::{bromwich_invert, residue_invert_rational, BromwichOptions, RationalImage, THETA_MAX};
use crate::kernel::{KernelSpec, KernelVariant};
use crate::poly::RealPoly;
use crate::transforms::{laplace_one_sided, Original, TransformRequest};

/// Threshold on `|L[x] - f| / (1 + |f|)`.
pub const DEFECT_THRESHOLD: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueDomain {
    /// `a_j` quaternions (`r = 2`).
    QuaternionCoeffs,
    /// `a_j` real, any level.
    RealCoeffs,
}

#[derive(Clone)]
pub enum Forcing {
    Zero,
    /// `coeff * f(t)` for a one-sided catalog pair `f`.
    Pair { name: String, params: Params, coeff: CDNumber },
    /// Arbitrary original; its image is computed by quadrature.
    Original(Original),
}

impl std::fmt::Debug for Forcing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Forcing::Zero => write!(f, "Zero"),
            Forcing::Pair { name, params, coeff } => write!(f, "Pair({name}, {params:?}, {coeff})"),
            Forcing::Original(o) => write!(f, "Original({})", o.label),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ODEProblem {
    /// `a_0, ..., a_n`, multiplied on the right of the derivatives.
    pub coeffs: Vec<CDNumber>,
    pub value_domain: ValueDomain,
    /// `x(0), x'(0), ..., x^(n-1)(0)`.
    pub initial_values: Vec<CDNumber>,
    pub forcing: Forcing,
}

impl ODEProblem {
    pub fn new(coeffs: Vec<CDNumber>, initial_values: Vec<CDNumber>, forcing: Forcing) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Input("need a_0 and at least one more coefficient".into()));
        }
        if coeffs[0].norm() == 0.0 {
            return Err(Error::Input("a_0 must be nonzero".into()));
        }
        let n = coeffs.len() - 1;
        if initial_values.len() != n {
            return Err(Error::Input(format!("order {n} needs {n} initial values, got {}", initial_values.len())));
        }
        let value_domain = if coeffs.iter().all(CDNumber::is_real) {
            ValueDomain::RealCoeffs
        } else if coeffs.iter().all(|c| c.level() <= 2 || c.coeffs()[4..].iter().all(|x| *x == 0.0)) {
            ValueDomain::QuaternionCoeffs
        } else {
            return Err(Error::Input("non-real coefficients are admitted only in the quaternions".into()));
        };
        let prob = Self { coeffs, value_domain, initial_values, forcing };
        if prob.value_domain == ValueDomain::QuaternionCoeffs && prob.level() > 2 {
            return Err(Error::Input("quaternion coefficients need quaternion data".into()));
        }
        Ok(prob)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn level(&self) -> u8 {
        let forcing = match &self.forcing {
            Forcing::Pair { coeff, .. } => coeff.level(),
            _ => 2,
        };
        self.coeffs.iter().chain(&self.initial_values).map(CDNumber::level).fold(forcing, u8::max).max(2)
    }

    /// `f(t)`.
    pub fn forcing_at(&self, t: f64) -> Result<CDNumber> {
        Ok(match &self.forcing {
            Forcing::Zero => CDNumber::zero(self.level()),
            Forcing::Pair { name, params, coeff } => coeff * &build_pair(name, params)?.original.eval(t),
            Forcing::Original(o) => o.eval(t),
        })
    }

    /// Common imaginary axis of the coefficients, if they have one.
    fn coefficient_axis(&self) -> Result<Option<CDNumber>> {
        let mut axis: Option<CDNumber> = None;
        for c in &self.coeffs {
            if let Some(n) = c.axis() {
                match &axis {
                    None => axis = Some(n),
                    Some(m) if m.dist_max(&n) < 1e-12 || m.dist_max(&-&n) < 1e-12 => {}
                    Some(_) => {
                        return Err(Error::Unsupported(
                            "quaternion coefficients on different axes do not commute with p; the image equation does not hold".into(),
                        ))
                    }
                }
            }
        }
        Ok(axis)
    }
}

/// Image of the forcing term.
#[derive(Clone)]
pub enum ForcingImage {
    Zero,
    Rational(RationalImage),
    Numeric(Arc<dyn Fn(&CDNumber) -> CDNumber + Send + Sync>),
}

#[derive(Clone)]
pub struct ImageEquation {
    /// Ascending: `A(p) = sum_m p^m A[m]`.
    pub a_poly: Vec<CDNumber>,
    /// Ascending: `B(p) = sum_m B[m] p^m`.
    pub b_poly: Vec<CDNumber>,
    pub forcing: ForcingImage,
    /// Abscissa of convergence of the forcing image.
    pub forcing_abscissa: f64,
    pub level: u8,
}

fn horner(coeffs: &[CDNumber], p: &CDNumber) -> CDNumber {
    coeffs.iter().rev().fold(CDNumber::zero(p.level()), |acc, c| &(&acc * p) + c)
}

impl ImageEquation {
    pub fn a_at(&self, p: &CDNumber) -> CDNumber {
        horner(&self.a_poly, p)
    }

    pub fn b_at(&self, p: &CDNumber) -> CDNumber {
        horner(&self.b_poly, p)
    }

    pub fn forcing_at(&self, p: &CDNumber) -> CDNumber {
        match &self.forcing {
            ForcingImage::Zero => CDNumber::zero(self.level),
            ForcingImage::Rational(r) => r.eval(p),
            ForcingImage::Numeric(f) => f(p),
        }
    }

    /// Real `A` as a polynomial, when every coefficient is real.
    pub fn real_a(&self) -> Option<RealPoly> {
        self.a_poly.iter().all(CDNumber::is_real).then(|| RealPoly::new(self.a_poly.iter().map(CDNumber::re).collect()))
    }
}

/// `A(p) = p^n a_0 + ... + a_n`,
/// `B(p) = x_0 (p^(n-1) a_0 + ... + a_(n-1)) + ... + x_(n-1) a_0`.
pub fn build_image_equation(prob: &ODEProblem) -> Result<ImageEquation> {
    let n = prob.order();
    let level = prob.level();
    let a = &prob.coeffs;
    let a_poly: Vec<CDNumber> = (0..=n).map(|m| a[n - m].embed(level)).collect::<Result<_>>()?;
    let mut b_poly = vec![CDNumber::zero(level); n];
    for (j, x) in prob.initial_values.iter().enumerate() {
        for (m, slot) in b_poly.iter_mut().enumerate().take(n - j) {
            *slot = &*slot + &(x * &a[n - 1 - j - m]);
        }
    }
    let (forcing, forcing_abscissa) = match &prob.forcing {
        Forcing::Zero => (ForcingImage::Zero, f64::NEG_INFINITY),
        Forcing::Pair { name, params, coeff } => {
            let pair = build_pair(name, params)?;
            if pair.kind != PairKind::OneSided || pair.kernel.variant != KernelVariant::Linear {
                return Err(Error::Input(format!("forcing pair {name} must be a one-sided linear-kernel pair")));
            }
            let image = match &pair.rational {
                Some(r) => {
                    let num = r.numerator().iter().map(|c| coeff * c).collect();
                    ForcingImage::Rational(RationalImage::new(num, r.denominator().coeffs().to_vec(), KernelSpec::linear(level))?)
                }
                None => {
                    let coeff = coeff.clone();
                    let zero = CDNumber::zero(level);
                    ForcingImage::Numeric(Arc::new(move |p: &CDNumber| {
                        let v = pair.value(p, &zero, 1e-10).unwrap_or_else(|_| CDNumber::from_slice(level, &vec![f64::NAN; 1 << level]));
                        &coeff * &v
                    }))
                }
            };
            (image, pair_abscissa(&build_pair(name, params)?.strip))
        }
        Forcing::Original(o) => {
            let o = o.clone();
            let s0 = o.s0;
            let image = move |p: &CDNumber| {
                let req = TransformRequest::new(o.clone(), KernelSpec::linear(p.level().max(2)), p.clone()).with_tol(1e-10);
                laplace_one_sided(&req).map(|r| r.value).unwrap_or_else(|_| CDNumber::from_slice(2, &[f64::NAN; 4]))
            };
            (ForcingImage::Numeric(Arc::new(image)), s0)
        }
    };
    Ok(ImageEquation { a_poly, b_poly, forcing, forcing_abscissa, level })
}

fn pair_abscissa(strip: &(f64, f64)) -> f64 {
    strip.0
}

/// Solved image `X(p) = (F(p) + B(p)) A(p)^(-1)`.
#[derive(Clone)]
pub enum SolvedImage {
    Rational(RationalImage),
    Function(Arc<dyn Fn(&CDNumber) -> CDNumber + Send + Sync>),
}

impl SolvedImage {
    pub fn eval(&self, p: &CDNumber) -> CDNumber {
        match self {
            SolvedImage::Rational(r) => r.eval(p),
            SolvedImage::Function(f) => f(p),
        }
    }
}

/// Rational when `A` is real and the forcing image is rational or zero:
/// `X = (N + B D) / (D A)`; a right division by `A(p)` otherwise.
pub fn solve_image(eq: &ImageEquation) -> Result<SolvedImage> {
    if let Some(a) = eq.real_a() {
        let rational = match &eq.forcing {
            ForcingImage::Zero => Some((vec![CDNumber::zero(eq.level)], RealPoly::new(vec![1.0]))),
            ForcingImage::Rational(r) => Some((r.numerator().to_vec(), r.denominator().clone())),
            ForcingImage::Numeric(_) => None,
        };
        if let Some((num, d)) = rational {
            let mut top = vec![CDNumber::zero(eq.level); (eq.b_poly.len() + d.degree()).max(num.len())];
            for (k, c) in num.iter().enumerate() {
                top[k] = &top[k] + c;
            }
            for (i, b) in eq.b_poly.iter().enumerate() {
                for (j, dj) in d.coeffs().iter().enumerate() {
                    top[i + j] = &top[i + j] + &b.scale(*dj);
                }
            }
            let den = d.mul(&a);
            return Ok(SolvedImage::Rational(RationalImage::new(top, den.coeffs().to_vec(), KernelSpec::linear(eq.level))?));
        }
    }
    let eq = eq.clone();
    Ok(SolvedImage::Function(Arc::new(move |p: &CDNumber| {
        let rhs = &eq.forcing_at(p) + &eq.b_at(p);
        match eq.a_at(p).inverse() {
            Ok(inv) => &rhs * &inv,
            Err(_) => CDNumber::from_slice(rhs.level(), &vec![f64::NAN; rhs.dim()]),
        }
    })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Residue,
    Bromwich,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub tol: f64,
    pub theta_max: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { tol: 1e-6, theta_max: THETA_MAX }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DefectReport {
    /// Largest `|L[x] - f| / (1 + |f|)` over the checked points.
    pub max_defect: f64,
    /// Inversion error propagated through the difference stencils; zero on
    /// the residue path.
    pub noise_allowance: f64,
    pub points: usize,
    pub step: f64,
    pub threshold: f64,
    pub flagged: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OdeSolution {
    pub method: Method,
    pub t: Vec<f64>,
    pub x: Vec<CDNumber>,
    pub err_estimate: Vec<f64>,
    /// `|x(0+) - x_0|` when the grid starts at zero.
    pub initial_error: Option<f64>,
    pub defect: DefectReport,
}

/// Grid points sampled for the defect on the Bromwich path.
pub const BROMWICH_DEFECT_POINTS: usize = 8;

/// Largest Bromwich error estimate accepted when the tolerance is missed.
pub const ACCEPT_ERR: f64 = 1e-4;

fn image_level(coeffs: &[f64]) -> u8 {
    coeffs.len().trailing_zeros() as u8
}

/// Pointwise inverter built from a solved image.
struct Inverter {
    image: SolvedImage,
    method: Method,
    abscissa: f64,
    axis: CDNumber,
    /// `x(0)`; `X(p) - x_0 / p` decays like `1/p^2`, which the line
    /// integral handles much faster.
    x0: CDNumber,
    opts: SolveOptions,
}

impl Inverter {
    fn at(&self, t: f64) -> Result<(CDNumber, f64)> {
        match (self.method, &self.image) {
            (Method::Residue, SolvedImage::Rational(r)) => Ok((residue_invert_rational(r, t)?, 0.0)),
            (Method::Residue, SolvedImage::Function(_)) => Err(Error::Unsupported(
                "residue inversion needs real coefficients and a rational forcing image".into(),
            )),
            (Method::Bromwich, image) => {
                if t == 0.0 {
                    // one-sided limit: the line integral gives the midpoint of the jump at 0
                    let h = 1e-2;
                    let v: Vec<(CDNumber, f64)> = (1..=3).map(|k| self.at(k as f64 * h)).collect::<Result<_>>()?;
                    let x = v[0].0.scale(3.0) - v[1].0.scale(3.0) + &v[2].0;
                    return Ok((x, 7.0 * v.iter().map(|e| e.1).fold(0.0, f64::max)));
                }
                let opts = BromwichOptions { theta_max: self.opts.theta_max, ..BromwichOptions::one_sided(self.abscissa - 0.5) };
                let kernel = KernelSpec::linear(self.axis.level());
                let reduced = |p: &CDNumber| match p.inverse() {
                    Ok(inv) => &image.eval(p) - &(&self.x0 * &inv),
                    Err(_) => CDNumber::from_slice(self.x0.level(), &vec![f64::NAN; self.x0.dim()]),
                };
                let (value, err) = match bromwich_invert(reduced, self.abscissa, &self.axis, t, kernel, self.opts.tol, &opts) {
                    Ok(r) => (r.value, r.err_estimate),
                    // keep a near miss and report its error
                    Err(Error::Accuracy { best, err, .. }) if err <= ACCEPT_ERR && !best.is_empty() => {
                        (CDNumber::from_slice(image_level(&best), &best), err)
                    }
                    Err(e) => return Err(e),
                };
                Ok((&value + &self.x0, err))
            }
        }
    }
}

/// Largest real part among the zeros of `A` (and of the rational forcing
/// denominator).
fn pole_abscissa(eq: &ImageEquation, image: &SolvedImage) -> Result<f64> {
    let den = match image {
        SolvedImage::Rational(r) => r.denominator().clone(),
        SolvedImage::Function(_) => {
            // A(z) conj(A)(z) has real coefficients and the zeros of A on any slice.
            let n = eq.a_poly.len();
            let mut c = vec![0.0; 2 * n - 1];
            for (i, x) in eq.a_poly.iter().enumerate() {
                for (j, y) in eq.a_poly.iter().enumerate() {
                    c[i + j] += (x * &y.conj()).re();
                }
            }
            RealPoly::new(c)
        }
    };
    let roots = den.roots()?;
    Ok(roots.iter().map(|r| r.value.re).fold(eq.forcing_abscissa, f64::max))
}

/// Central-difference weights for derivative `order` on `offsets`
/// (in units of the step), by Fornberg's recursion.
pub fn fd_weights(order: usize, offsets: &[f64]) -> Vec<f64> {
    let n = offsets.len();
    let mut c = vec![vec![0.0; order + 1]; n];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    for i in 1..n {
        let mut c2 = 1.0;
        for j in 0..i {
            let c3 = offsets[i] - offsets[j];
            c2 *= c3;
            for k in (0..=order.min(i)).rev() {
                let prev = if k > 0 { c[i - 1][k - 1] } else { 0.0 };
                if j == i - 1 {
                    c[i][k] = c1 * (k as f64 * prev - offsets[i - 1] * c[i - 1][k]) / c2;
                }
                let prevj = if k > 0 { c[j][k - 1] } else { 0.0 };
                c[j][k] = (offsets[i] * c[j][k] - k as f64 * prevj) / c3;
            }
        }
        c1 = c2;
    }
    c.iter().map(|row| row[order]).collect()
}

/// `max |L[x] - f| / (1 + |f|)` from finite differences of accuracy
/// order four at each interior grid point. A point is flagged when its
/// defect exceeds the threshold plus the propagated inversion error.
fn defect(prob: &ODEProblem, inv: &Inverter, grid: &[f64], h: f64, max_points: Option<usize>) -> Result<DefectReport> {
    let n = prob.order();
    let half = (n + 3) / 2;
    let offsets: Vec<f64> = (-(half as i64)..=half as i64).map(|k| k as f64).collect();
    let weights: Vec<Vec<f64>> = (0..=n).map(|k| fd_weights(k, &offsets)).collect();
    let mut points: Vec<f64> = grid.iter().copied().filter(|&t| t - half as f64 * h > 0.0).collect();
    if let Some(cap) = max_points {
        if points.len() > cap {
            let stride = points.len() as f64 / cap as f64;
            points = (0..cap).map(|k| points[(k as f64 * stride) as usize]).collect();
        }
    }
    let rows: Vec<(f64, f64)> = points
        .par_iter()
        .map(|&t| -> Result<(f64, f64)> {
            let xs: Vec<(CDNumber, f64)> = offsets.iter().map(|k| inv.at(t + k * h)).collect::<Result<_>>()?;
            let err = xs.iter().map(|x| x.1).fold(0.0, f64::max);
            let mut lx = CDNumber::zero(prob.level());
            let mut noise = 0.0;
            for (k, a) in prob.coeffs.iter().enumerate() {
                let order = n - k;
                let d = xs
                    .iter()
                    .zip(&weights[order])
                    .fold(CDNumber::zero(prob.level()), |acc, ((x, _), w)| &acc + &x.scale(*w))
                    .scale(h.powi(-(order as i32)));
                lx = &lx + &(&d * a);
                noise += a.norm() * weights[order].iter().map(|w| w.abs()).sum::<f64>() * err * h.powi(-(order as i32));
            }
            let f = prob.forcing_at(t)?;
            let scale = 1.0 + f.norm();
            Ok(((&lx - &f).norm() / scale, noise / scale))
        })
        .collect::<Result<_>>()?;
    let max_defect = rows.iter().map(|r| r.0).fold(0.0, f64::max);
    let noise_allowance = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    let flagged = rows.iter().any(|(d, e)| !(*d <= DEFECT_THRESHOLD + e));
    Ok(DefectReport { max_defect, noise_allowance, points: points.len(), step: h, threshold: DEFECT_THRESHOLD, flagged })
}

/// Samples `x(t)` on the grid and checks the result against the equation.
pub fn solve_ode(prob: &ODEProblem, t_grid: &[f64], method: Method, opts: SolveOptions) -> Result<OdeSolution> {
    if t_grid.iter().any(|t| !t.is_finite() || *t < 0.0) {
        return Err(Error::Input("grid points must be finite and nonnegative".into()));
    }
    let eq = build_image_equation(prob)?;
    let image = solve_image(&eq)?;
    let axis = match prob.value_domain {
        ValueDomain::QuaternionCoeffs => prob.coefficient_axis()?,
        ValueDomain::RealCoeffs => None,
    }
    .unwrap_or_else(|| CDNumber::unit(prob.level(), 1).expect("level >= 2"));
    let abscissa = pole_abscissa(&eq, &image)?.max(0.0) + 0.5;
    let x0 = prob.initial_values[0].embed(prob.level())?;
    let inv = Inverter { image, method, abscissa, axis, x0, opts };

    let values: Vec<(CDNumber, f64)> = t_grid.par_iter().map(|&t| inv.at(t)).collect::<Result<_>>()?;
    let (x, err_estimate): (Vec<CDNumber>, Vec<f64>) = values.into_iter().unzip();
    let initial_error = match t_grid.first() {
        Some(0.0) => Some(x[0].dist_max(&prob.initial_values[0])),
        _ => None,
    };
    let (h, max_points) = match method {
        Method::Residue => (1e-2, None),
        Method::Bromwich => (5e-2, Some(BROMWICH_DEFECT_POINTS)),
    };
    let defect = defect(prob, &inv, t_grid, h, max_points)?;
    Ok(OdeSolution { method, t: t_grid.to_vec(), x, err_estimate, initial_error, defect })
}

/// `start, start + step, ...` up to `stop` inclusive.
pub fn grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(stop >= start) {
        return Err(Error::Input("grid needs step > 0 and stop >= start".into()));
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|k| start + k as f64 * step).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: [f64; 4]) -> CDNumber {
        CDNumber::from_slice(2, &c)
    }

    fn r(x: f64) -> CDNumber {
        CDNumber::real(2, x)
    }

    #[test]
    fn image_equation_examples() {
        let p = ODEProblem::new(vec![r(1.0), r(0.0), r(4.0)], vec![r(0.0), r(0.0)], Forcing::Zero).unwrap();
        let eq = build_image_equation(&p).unwrap();
        assert_eq!(eq.real_a().unwrap().coeffs(), &[4.0, 0.0, 1.0]);
        assert!(eq.b_poly.iter().all(|b| b.norm() == 0.0));

        let p = ODEProblem::new(vec![r(1.0), r(0.0), r(0.0), r(1.0)], vec![r(0.0); 3], Forcing::Zero).unwrap();
        assert_eq!(build_image_equation(&p).unwrap().real_a().unwrap().coeffs(), &[1.0, 0.0, 0.0, 1.0]);

        let c = CDNumber::from_slice(3, &[0.0, 0.0, 0.0, 0.0, 0.0, 5.0, 0.0, 0.0]);
        let p = ODEProblem::new(vec![r(1.0), r(0.0)], vec![c.clone()], Forcing::Zero).unwrap();
        let eq = build_image_equation(&p).unwrap();
        assert_eq!(eq.real_a().unwrap().coeffs(), &[0.0, 1.0]);
        assert_eq!(eq.b_poly, vec![c]);
    }

    #[test]
    fn solved_image_of_the_forced_oscillator() {
        let (a, b, x0, x1) = (2.0, q([0.0, 0.0, 1.0, 0.0]), r(1.0), q([0.0, 0.3, 0.0, -0.2]));
        let forcing = Forcing::Pair { name: "sin".into(), params: [("omega".to_string(), a)].into(), coeff: b.clone() };
        let p = ODEProblem::new(vec![r(1.0), r(0.0), r(a * a)], vec![x0.clone(), x1.clone()], forcing).unwrap();
        let x = solve_image(&build_image_equation(&p).unwrap()).unwrap();
        assert!(matches!(x, SolvedImage::Rational(_)));
        let s = q([0.7, 0.4, -0.2, 0.5]);
        let d = (&s * &s).add_real(a * a).inverse().unwrap();
        let want = b.scale(a) * &d * &d + &x0 * &s * &d + &x1 * &d;
        assert!(x.eval(&s).dist_max(&want) < 1e-14);
    }

    #[test]
    fn zero_data_gives_zero() {
        let p = ODEProblem::new(vec![r(1.0), r(3.0)], vec![r(0.0)], Forcing::Zero).unwrap();
        let x = solve_image(&build_image_equation(&p).unwrap()).unwrap();
        assert_eq!(x.eval(&q([1.0, 1.0, 0.0, 0.0])).norm(), 0.0);
    }

    #[test]
    fn fornberg_weights() {
        let w = fd_weights(1, &[-2.0, -1.0, 0.0, 1.0, 2.0]);
        let want = [1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0];
        assert!(w.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-14));
        let w = fd_weights(2, &[-1.0, 0.0, 1.0]);
        assert!(w.iter().zip([1.0, -2.0, 1.0]).all(|(a, b)| (a - b).abs() < 1e-14));
    }

    #[test]
    fn constant_solution_in_octonions() {
        let c = CDNumber::from_slice(3, &[0.0, 0.0, 0.0, 0.0, 0.0, 5.0, 0.0, 0.0]);
        let p = ODEProblem::new(vec![r(1.0), r(0.0)], vec![c.clone()], Forcing::Zero).unwrap();
        let sol = solve_ode(&p, &grid(0.0, 2.0, 0.5).unwrap(), Method::Residue, SolveOptions::default()).unwrap();
        assert!(sol.x.iter().all(|x| x.dist_max(&c) < 1e-12));
        assert!(!sol.defect.flagged);
    }

    #[test]
    fn mixed_axis_quaternion_coefficients_are_rejected() {
        let p = ODEProblem::new(vec![r(1.0), q([0.0, 1.0, 0.0, 0.0]), q([1.0, 0.0, 1.0, 0.0])], vec![r(1.0), r(0.0)], Forcing::Zero).unwrap();
        let e = solve_ode(&p, &[0.5], Method::Bromwich, SolveOptions::default()).unwrap_err();
        assert!(matches!(e, Error::Unsupported(_)));
    }

    #[test]
    fn coaxial_quaternion_coefficients() {
        // x' + x (1 + i2) = 0, x(0) = 1: x = exp(-(1 + i2) t).
        let a1 = q([1.0, 0.0, 1.0, 0.0]);
        let p = ODEProblem::new(vec![r(1.0), a1.clone()], vec![r(1.0)], Forcing::Zero).unwrap();
        assert_eq!(p.value_domain, ValueDomain::QuaternionCoeffs);
        let sol = solve_ode(&p, &[0.5, 1.0], Method::Bromwich, SolveOptions::default()).unwrap();
        for (t, x) in sol.t.iter().zip(&sol.x) {
            assert!(x.dist_max(&(-a1.scale(*t)).exp()) < 1e-4, "{t} {x}");
        }
    }

    fn oscillator(a: f64, b: &CDNumber, x0: &CDNumber, x1: &CDNumber) -> ODEProblem {
        let forcing = Forcing::Pair { name: "sin".into(), params: [("omega".to_string(), a)].into(), coeff: b.clone() };
        ODEProblem::new(vec![r(1.0), r(0.0), r(a * a)], vec![x0.clone(), x1.clone()], forcing).unwrap()
    }

    #[test]
    fn forced_oscillator_matches_closed_form() {
        let (a, b, x0, x1) = (1.5, q([0.2, 0.0, 1.0, -0.5]), q([1.0, 0.0, 0.3, 0.0]), q([0.0, 0.3, 0.0, -0.2]));
        let prob = oscillator(a, &b, &x0, &x1);
        let ts = grid(0.0, 3.0, 0.25).unwrap();
        let res = solve_ode(&prob, &ts, Method::Residue, SolveOptions::default()).unwrap();
        let bro = solve_ode(&prob, &ts, Method::Bromwich, SolveOptions::default()).unwrap();
        for (k, &t) in ts.iter().enumerate() {
            let want = (&x1 + &b.scale(0.5 / a)).scale((a * t).sin() / a) + (&x0 - &b.scale(t / (2.0 * a))).scale((a * t).cos());
            assert!(res.x[k].dist_max(&want) < 1e-10, "residue t={t}");
            assert!(bro.x[k].dist_max(&want) < 1e-3, "bromwich t={t}");
        }
        assert!(res.initial_error.unwrap() < 1e-12);
        assert!(!res.defect.flagged && !bro.defect.flagged);
    }

    #[test]
    fn third_order_with_unit_forcing() {
        let step = Forcing::Pair { name: "step".into(), params: Params::new(), coeff: r(1.0) };
        let prob = ODEProblem::new(vec![r(1.0), r(0.0), r(0.0), r(1.0)], vec![r(0.0); 3], step).unwrap();
        let ts = grid(0.0, 2.0, 0.5).unwrap();
        let res = solve_ode(&prob, &ts, Method::Residue, SolveOptions::default()).unwrap();
        let bro = solve_ode(&prob, &ts, Method::Bromwich, SolveOptions::default()).unwrap();
        let exact = |t: f64| 1.0 - (-t).exp() / 3.0 - 2.0 / 3.0 * (t / 2.0).exp() * (3f64.sqrt() * t / 2.0).cos();
        for (k, &t) in ts.iter().enumerate() {
            assert!((res.x[k].re() - exact(t)).abs() < 1e-12);
            assert!(res.x[k].imag_norm() < 1e-14);
            assert!((bro.x[k].re() - exact(t)).abs() < 1e-3, "t={t} {}", bro.x[k]);
        }
        assert!((res.x[2].re() - 0.165_280_531_422_789).abs() < 1e-12);
        assert!(!res.defect.flagged && !bro.defect.flagged);
    }

    #[test]
    fn residue_needs_a_rational_image() {
        let prob = ODEProblem::new(vec![r(1.0), q([1.0, 0.0, 1.0, 0.0])], vec![r(1.0)], Forcing::Zero).unwrap();
        assert!(matches!(solve_ode(&prob, &[1.0], Method::Residue, SolveOptions::default()), Err(Error::Unsupported(_))));
    }
}
