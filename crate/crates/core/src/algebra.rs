//! Cayley-Dickson algebras `A_r` of dimension `2^r`.
//!
//! Multiplication follows the doubling rule
//! `(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))`, where the element
//! `(x, y)` at level `r + 1` stands for `x + y i_{2^r}`. With this rule
//! `i_j i_{2^r} = i_{2^r + j}` and the quaternion units satisfy
//! `i1 i2 = i3`, `i2 i3 = i1`, `i3 i1 = i2`.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub const MAX_LEVEL: u8 = 8;

type Coeffs = SmallVec<[f64; 16]>;

/// An element of `A_r` stored as `2^r` real coordinates.
#[derive(Clone, PartialEq)]
pub struct CDNumber {
    level: u8,
    coeffs: Coeffs,
}

/// Polar decomposition `a = modulus * exp(axis_angle)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarForm {
    pub modulus: f64,
    pub axis_angle: CDNumber,
}

fn check_level(level: u8) -> Result<()> {
    if level == 0 || level > MAX_LEVEL {
        return Err(Error::LevelOutOfRange(level as u32));
    }
    Ok(())
}

fn conj_slice(a: &[f64]) -> Coeffs {
    let mut out: Coeffs = a.iter().map(|x| -x).collect();
    out[0] = a[0];
    out
}

fn mul_slices(a: &[f64], b: &[f64], out: &mut [f64]) {
    let n = a.len();
    match n {
        1 => out[0] = a[0] * b[0],
        2 => {
            out[0] = a[0] * b[0] - a[1] * b[1];
            out[1] = a[0] * b[1] + a[1] * b[0];
        }
        _ => {
            let h = n / 2;
            let (a1, a2) = a.split_at(h);
            let (c, d) = b.split_at(h);
            let mut tmp: Coeffs = smallvec::smallvec![0.0; h];
            let (lo, hi) = out.split_at_mut(h);

            mul_slices(a1, c, lo);
            mul_slices(&conj_slice(d), a2, &mut tmp);
            lo.iter_mut().zip(&tmp).for_each(|(o, t)| *o -= t);

            mul_slices(d, a1, hi);
            mul_slices(a2, &conj_slice(c), &mut tmp);
            hi.iter_mut().zip(&tmp).for_each(|(o, t)| *o += t);
        }
    }
}

impl CDNumber {
    pub fn new(level: u8, coeffs: Vec<f64>) -> Result<Self> {
        check_level(level)?;
        if coeffs.len() != 1usize << level {
            return Err(Error::Contract(format!(
                "level {level} needs {} coefficients, got {}",
                1usize << level,
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Input("non-finite coefficient".into()));
        }
        Ok(Self { level, coeffs: Coeffs::from_vec(coeffs) })
    }

    /// Builds from a coordinate slice; panics on a bad level or length.
    pub fn from_slice(level: u8, coeffs: &[f64]) -> Self {
        assert!((1..=MAX_LEVEL).contains(&level) && coeffs.len() == 1usize << level);
        Self { level, coeffs: Coeffs::from_slice(coeffs) }
    }

    pub fn zero(level: u8) -> Self {
        assert!((1..=MAX_LEVEL).contains(&level));
        Self { level, coeffs: smallvec::smallvec![0.0; 1usize << level] }
    }

    pub fn real(level: u8, x: f64) -> Self {
        let mut z = Self::zero(level);
        z.coeffs[0] = x;
        z
    }

    pub fn one(level: u8) -> Self {
        Self::real(level, 1.0)
    }

    /// The generator `i_j` (with `i_0 = 1`).
    pub fn unit(level: u8, j: usize) -> Result<Self> {
        check_level(level)?;
        if j >= 1usize << level {
            return Err(Error::IndexOutOfRange { index: j, level });
        }
        let mut z = Self::zero(level);
        z.coeffs[j] = 1.0;
        Ok(z)
    }

    /// `x + y S` for a real pair and a unit imaginary axis `S`.
    pub fn from_slice_pair(x: f64, y: f64, axis: &CDNumber) -> Self {
        let mut z = axis.scale(y);
        z.coeffs[0] = x;
        z
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs.get(j).copied().unwrap_or(0.0)
    }

    pub fn set_coeff(&mut self, j: usize, v: f64) {
        self.coeffs[j] = v;
    }

    pub fn re(&self) -> f64 {
        self.coeffs[0]
    }

    /// The purely imaginary part `a - Re(a)`.
    pub fn imag(&self) -> Self {
        let mut z = self.clone();
        z.coeffs[0] = 0.0;
        z
    }

    pub fn imag_norm(&self) -> f64 {
        self.coeffs[1..].iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0.0)
    }

    /// Embeds into a level `>= self.level` (zero padding).
    pub fn embed(&self, level: u8) -> Result<Self> {
        check_level(level)?;
        if level < self.level {
            return Err(Error::Contract(format!(
                "cannot embed level {} into level {level}",
                self.level
            )));
        }
        let mut z = Self::zero(level);
        z.coeffs[..self.dim()].copy_from_slice(&self.coeffs);
        Ok(z)
    }

    fn lift(&self, level: u8) -> std::borrow::Cow<'_, Self> {
        if self.level == level {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.embed(level).expect("lift to a higher level"))
        }
    }

    /// Product requiring equal levels.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::Contract(format!(
                "level mismatch {} vs {}",
                self.level, other.level
            )));
        }
        Ok(self.mul_same(other))
    }

    fn mul_same(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.level);
        mul_slices(&self.coeffs, &other.coeffs, &mut out.coeffs);
        out
    }

    /// Product with the lower-level operand embedded.
    pub fn mul_embed(&self, other: &Self) -> Self {
        let level = self.level.max(other.level);
        self.lift(level).mul_same(&other.lift(level))
    }

    fn zip(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        let level = self.level.max(other.level);
        let mut out = Self::zero(level);
        for (j, o) in out.coeffs.iter_mut().enumerate() {
            *o = f(self.coeff(j), other.coeff(j));
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { level: self.level, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn add_real(&self, x: f64) -> Self {
        let mut z = self.clone();
        z.coeffs[0] += x;
        z
    }

    pub fn conj(&self) -> Self {
        Self { level: self.level, coeffs: conj_slice(&self.coeffs) }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Max-norm distance, handy for tolerance checks.
    pub fn dist_max(&self, other: &Self) -> f64 {
        let n = self.dim().max(other.dim());
        (0..n).map(|j| (self.coeff(j) - other.coeff(j)).abs()).fold(0.0, f64::max)
    }

    pub fn dist(&self, other: &Self) -> f64 {
        (self - other).norm()
    }

    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::Singular("inverse of zero"));
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    /// `self * other^{-1}`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn exp(&self) -> Self {
        let v = self.imag_norm();
        let e = self.re().exp();
        if v == 0.0 {
            return Self::real(self.level, e);
        }
        let mut z = self.scale(e * v.sin() / v);
        z.coeffs[0] = e * v.cos();
        z
    }

    /// Principal logarithm with angle in `[0, pi]`.
    pub fn ln(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::Singular("logarithm of zero"));
        }
        let v = self.imag_norm();
        if v == 0.0 {
            if self.re() > 0.0 {
                return Ok(Self::real(self.level, n.ln()));
            }
            return Err(Error::Branch);
        }
        let theta = v.atan2(self.re());
        let mut z = self.scale(theta / v);
        z.coeffs[0] = n.ln();
        Ok(z)
    }

    /// Integer power by repeated squaring (valid by power associativity).
    pub fn powi(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one(self.level);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_same(&sq);
            }
        }
        Ok(acc)
    }

    pub fn pow_real(&self, s: f64) -> Result<Self> {
        if s.fract() == 0.0 && s.abs() < 1e9 {
            return self.powi(s as i64);
        }
        Ok(self.ln()?.scale(s).exp())
    }

    pub fn polar(&self) -> Result<PolarForm> {
        let modulus = self.norm();
        if modulus == 0.0 {
            return Err(Error::Singular("polar form of zero"));
        }
        let axis_angle = match self.ln() {
            Ok(l) => l.imag(),
            Err(Error::Branch) => Self::unit(self.level, 1)?.scale(PI),
            Err(e) => return Err(e),
        };
        Ok(PolarForm { modulus, axis_angle })
    }

    /// Unit imaginary axis `a'/|a'|`, or `None` when `a` is real.
    pub fn axis(&self) -> Option<Self> {
        let v = self.imag_norm();
        (v > 0.0).then(|| self.imag().scale(1.0 / v))
    }

    /// Coordinate `h_j` recovered purely algebraically:
    /// `h_j = (-h i_j + i_j C) / 2`, `h_0 = (h + C) / 2`, with
    /// `C = (2^r - 2)^{-1} (-h + sum_k i_k (h conj(i_k)))`.
    pub fn component(&self, j: usize) -> Result<f64> {
        if self.level < 2 {
            return Err(Error::Contract("component extraction needs level >= 2".into()));
        }
        let n = self.dim();
        if j >= n {
            return Err(Error::IndexOutOfRange { index: j, level: self.level });
        }
        let mut sum = -self;
        for k in 1..n {
            let ik = Self::unit(self.level, k)?;
            sum = &sum + &ik.mul_same(&self.mul_same(&ik.conj()));
        }
        let c = sum.scale(1.0 / (n as f64 - 2.0));
        let v = if j == 0 {
            (self + &c).scale(0.5)
        } else {
            let ij = Self::unit(self.level, j)?;
            (&ij.mul_same(&c) - &self.mul_same(&ij)).scale(0.5)
        };
        Ok(v.re())
    }
}

/// Checks that the doubling rule reproduces the quaternion table.
pub fn self_test() -> Result<()> {
    let i = |j| CDNumber::unit(2, j).expect("valid unit");
    let checks = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];
    for (a, b, c) in checks {
        if i(a).mul_same(&i(b)) != i(c) || i(b).mul_same(&i(a)) != -&i(c) {
            return Err(Error::Contract(format!("quaternion table broken at i{a} i{b}")));
        }
    }
    for l in 1..=4u8 {
        let h = 1usize << (l - 1);
        for j in 1..h {
            let lhs = CDNumber::unit(l, j)?.mul_same(&CDNumber::unit(l, h)?);
            if lhs != CDNumber::unit(l, h + j)? {
                return Err(Error::Contract(format!("i{j} i{h} != i{} at level {l}", h + j)));
            }
        }
    }
    Ok(())
}

impl fmt::Debug for CDNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CD{}{:?}", self.level, self.coeffs.as_slice())
    }
}

/// Serialized as the plain coefficient list.
impl serde::Serialize for CDNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.as_slice().serialize(s)
    }
}

impl fmt::Display for CDNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 && !(j == 0 && self.coeffs.iter().all(|&x| x == 0.0)) {
                continue;
            }
            let unit = if j == 0 { String::new() } else { format!("i{j}") };
            if first {
                write!(f, "{c}{unit}")?;
                first = false;
            } else if c < 0.0 {
                write!(f, " - {}{unit}", -c)?;
            } else {
                write!(f, " + {c}{unit}")?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CDNumber> for &CDNumber {
            type Output = CDNumber;
            fn $m(self, rhs: &CDNumber) -> CDNumber {
                let f: fn(&CDNumber, &CDNumber) -> CDNumber = $body;
                f(self, rhs)
            }
        }
        impl $tr<CDNumber> for CDNumber {
            type Output = CDNumber;
            fn $m(self, rhs: CDNumber) -> CDNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CDNumber> for CDNumber {
            type Output = CDNumber;
            fn $m(self, rhs: &CDNumber) -> CDNumber {
                (&self).$m(rhs)
            }
        }
        impl $tr<CDNumber> for &CDNumber {
            type Output = CDNumber;
            fn $m(self, rhs: CDNumber) -> CDNumber {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.zip(b, |x, y| x + y));
binop!(Sub, sub, |a, b| a.zip(b, |x, y| x - y));
binop!(Mul, mul, |a, b| a.mul_embed(b));

impl Neg for &CDNumber {
    type Output = CDNumber;
    fn neg(self) -> CDNumber {
        self.scale(-1.0)
    }
}

impl Neg for CDNumber {
    type Output = CDNumber;
    fn neg(self) -> CDNumber {
        self.scale(-1.0)
    }
}

/// Parses `1.5 + 2i1 - 0.25i7`. The level is the smallest `r >= 2` that
/// covers the largest unit index unless `level` is given.
pub fn parse_literal(text: &str, level: Option<u8>) -> Result<CDNumber> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty literal".into()));
    }
    let mut terms: Vec<(usize, f64)> = Vec::new();
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let start = pos;
        let mut sign = 1.0;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1.0;
            }
            pos += 1;
        } else if start != 0 {
            return Err(Error::Parse(format!("expected sign at offset {pos} in {text:?}")));
        }
        let num_start = pos;
        while pos < bytes.len() {
            let c = bytes[pos];
            let exp_sign = (c == b'+' || c == b'-') && pos > num_start && matches!(bytes[pos - 1], b'e' | b'E');
            if c.is_ascii_digit() || c == b'.' || c == b'e' || c == b'E' || exp_sign {
                pos += 1;
            } else {
                break;
            }
        }
        let num_text = &s[num_start..pos];
        let mut index = 0usize;
        if pos < bytes.len() && bytes[pos] == b'i' {
            pos += 1;
            let idx_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if idx_start == pos {
                return Err(Error::Parse(format!("unit token without index in {text:?}")));
            }
            index = s[idx_start..pos]
                .parse()
                .map_err(|_| Error::Parse(format!("bad unit index in {text:?}")))?;
        } else if num_text.is_empty() {
            return Err(Error::Parse(format!("malformed term in {text:?}")));
        }
        let value = if num_text.is_empty() {
            1.0
        } else {
            num_text
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("malformed number {num_text:?}")))?
        };
        if !value.is_finite() {
            return Err(Error::Parse(format!("non-finite coefficient in {text:?}")));
        }
        terms.push((index, sign * value));
    }
    let max_index = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let needed = (2..=MAX_LEVEL).find(|&r| max_index < 1usize << r);
    let level = match (level, needed) {
        (Some(l), _) => {
            check_level(l)?;
            if max_index >= 1usize << l {
                return Err(Error::IndexOutOfRange { index: max_index, level: l });
            }
            l
        }
        (None, Some(r)) => r,
        (None, None) => return Err(Error::IndexOutOfRange { index: max_index, level: MAX_LEVEL }),
    };
    let mut z = CDNumber::zero(level);
    for (j, v) in terms {
        z.coeffs[j] += v;
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_table_and_self_test() {
        self_test().unwrap();
        let i1 = CDNumber::unit(2, 1).unwrap();
        let i2 = CDNumber::unit(2, 2).unwrap();
        assert_eq!(&i1 * &i2, CDNumber::unit(2, 3).unwrap());
    }

    #[test]
    fn elementary_values() {
        let i1 = CDNumber::unit(2, 1).unwrap();
        assert!((CDNumber::from_slice(1, &[1.0, 1.0]).norm() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(i1.inverse().unwrap(), -&i1);
        assert!((i1.scale(PI / 2.0).exp().dist_max(&i1)) < 1e-15);
        assert!((CDNumber::real(2, 1f64.exp()).ln().unwrap().re() - 1.0).abs() < 1e-15);
        assert!(i1.ln().unwrap().dist_max(&i1.scale(PI / 2.0)) < 1e-15);
        assert!(CDNumber::real(2, 4.0).pow_real(0.5).unwrap().dist_max(&CDNumber::real(2, 2.0)) < 1e-15);
        assert_eq!(i1.pow_real(2.0).unwrap(), CDNumber::real(2, -1.0));
        assert_eq!(CDNumber::real(2, -2.0).ln(), Err(Error::Branch));
        assert!(matches!(CDNumber::zero(2).ln(), Err(Error::Singular(_))));
        assert!(matches!(CDNumber::zero(3).inverse(), Err(Error::Singular(_))));
    }

    #[test]
    fn polar_branch_convention() {
        let p = CDNumber::real(2, -1.0).polar().unwrap();
        assert_eq!(p.modulus, 1.0);
        assert_eq!(p.axis_angle, CDNumber::unit(2, 1).unwrap().scale(PI));
        let p = CDNumber::unit(2, 1).unwrap().scale(2.0).polar().unwrap();
        assert!(p.axis_angle.dist_max(&CDNumber::unit(2, 1).unwrap().scale(PI / 2.0)) < 1e-15);
        assert_eq!(CDNumber::real(2, 3.0).polar().unwrap().axis_angle, CDNumber::zero(2));
    }

    #[test]
    fn component_examples() {
        let h = parse_literal("2+3i1", None).unwrap();
        assert!((h.component(1).unwrap() - 3.0).abs() < 1e-15);
        assert_eq!(CDNumber::unit(3, 5).unwrap().component(0).unwrap(), 0.0);
        assert!(matches!(h.component(4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn literals() {
        assert_eq!(parse_literal("1+2i1", None).unwrap().coeffs(), &[1.0, 2.0, 0.0, 0.0]);
        let z = parse_literal("-0.5i7", None).unwrap();
        assert_eq!(z.level(), 3);
        assert_eq!(z.coeff(7), -0.5);
        assert!(parse_literal("2i9", Some(3)).is_err());
        let z = parse_literal("1.5 + 2i1 - 0.25i7", None).unwrap();
        assert_eq!(z.coeff(0), 1.5);
        assert_eq!(z.coeff(7), -0.25);
        assert_eq!(parse_literal("1e-3i2", None).unwrap().coeff(2), 1e-3);
        assert_eq!(parse_literal("i3", None).unwrap().coeff(3), 1.0);
        assert!(parse_literal("1i2i3", None).is_err());
        assert!(parse_literal("1+", None).is_err());
        assert!(parse_literal("abc", None).is_err());
    }

    #[test]
    fn mixed_levels_embed() {
        let a = CDNumber::from_slice(1, &[1.0, 2.0]);
        let b = CDNumber::unit(3, 4).unwrap();
        let c = &a * &b;
        assert_eq!(c.level(), 3);
        assert!(a.try_mul(&b).is_err());
        assert_eq!(c.coeff(4), 1.0);
        assert_eq!(c.coeff(5), 2.0);
    }
}
