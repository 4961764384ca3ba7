//! Special functions used by the catalog images and originals.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::CDNumber;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Complex Gamma function (Lanczos approximation plus reflection).
pub fn gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return Complex64::new(PI, 0.0) / (s * gamma(1.0 - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

pub fn gamma_real(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

pub fn erfc(x: f64) -> f64 {
    statrs::function::erf::erfc(x)
}

/// Sine integral `Si(x) = int_0^x sin(s)/s ds`.
pub fn sine_integral(x: f64) -> f64 {
    let ax = x.abs();
    let v = if ax < 2.0 {
        let mut term = ax;
        let mut sum = ax;
        let mut k = 0.0;
        loop {
            k += 1.0;
            term *= -ax * ax / ((2.0 * k) * (2.0 * k + 1.0));
            let add = term / (2.0 * k + 1.0);
            sum += add;
            if add.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        sum
    } else {
        let tiny = 1e-300;
        let mut b = Complex64::new(1.0, ax);
        let mut c = Complex64::new(1.0 / tiny, 0.0);
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 2..10_000 {
            let a = -((i - 1) as f64).powi(2);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).norm() < 1e-16 {
                break;
            }
        }
        h *= Complex64::new(ax.cos(), -ax.sin());
        0.5 * PI + h.im
    };
    v.copysign(x)
}

/// Applies a real-analytic complex function on the slice of `p`:
/// `p = x + y S` with `y >= 0` maps to `f(x + iy)` read back along `S`.
/// Real `p` uses `S = i1`.
pub fn slice_apply(p: &CDNumber, f: impl Fn(Complex64) -> Complex64) -> CDNumber {
    let level = p.level().max(1);
    let y = p.imag_norm();
    let w = f(Complex64::new(p.re(), y));
    match p.axis() {
        Some(s) => CDNumber::from_slice_pair(w.re, w.im, &s),
        None => {
            let mut z = CDNumber::real(level, w.re);
            z.set_coeff(1, w.im);
            z
        }
    }
}

/// Reads `z` as a slice value `x + y S`.
pub fn slice_value(z: Complex64, axis: &CDNumber) -> CDNumber {
    CDNumber::from_slice_pair(z.re, z.im, axis)
}
