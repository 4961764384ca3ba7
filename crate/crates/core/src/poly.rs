//! Real polynomials evaluated over the complex slice, with root finding
//! through companion-matrix eigenvalues.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_MULTIPLICITY: usize = 6;

/// Ascending coefficients, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0.0)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    pub fn eval_real(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::new(vec![0.0]);
        }
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Taylor coefficients of `P(c + h)` in powers of `h`.
    pub fn taylor_at(&self, c: Complex64) -> Vec<Complex64> {
        let mut work: Vec<Complex64> = self.coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let n = work.len();
        for k in 0..n {
            for j in (k..n - 1).rev() {
                let next = work[j + 1];
                work[j] += c * next;
            }
        }
        work
    }

    /// Complex roots with multiplicities.
    ///
    /// Eigenvalues of the companion matrix are grouped when they fall within
    /// `1e-3` of each other (relative to the root scale); a group is kept as
    /// one multiple root only when the lower Taylor coefficients at its
    /// centre vanish. Otherwise the members are polished separately.
    pub fn roots(&self) -> Result<Vec<Root>> {
        let n = self.degree();
        if n == 0 {
            return Ok(Vec::new());
        }
        if self.coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Input("non-finite polynomial coefficient".into()));
        }
        let zeros = self.coeffs.iter().take_while(|c| **c == 0.0).count();
        if zeros > 0 {
            let rest = Self::new(self.coeffs[zeros..].to_vec());
            let mut out = rest.roots()?;
            if out.iter().any(|r| r.value.norm() < 1e-8) {
                return Err(Error::Conditioning("root too close to the zero root".into()));
            }
            if zeros > MAX_MULTIPLICITY {
                return Err(Error::Unsupported(format!("root multiplicity {zeros} exceeds {MAX_MULTIPLICITY}")));
            }
            out.push(Root { value: Complex64::new(0.0, 0.0), multiplicity: zeros });
            out.sort_by(|a, b| a.value.re.total_cmp(&b.value.re).then(a.value.im.total_cmp(&b.value.im)));
            return Ok(out);
        }
        let raw = self.companion_eigenvalues()?;
        let scale = raw.iter().map(|z| z.norm()).fold(1.0, f64::max);

        let mut groups: Vec<Vec<Complex64>> = Vec::new();
        for z in raw {
            match groups.iter_mut().find(|g| g.iter().any(|w| (w - z).norm() < 1e-3 * scale)) {
                Some(g) => g.push(z),
                None => groups.push(vec![z]),
            }
        }

        let mut out = Vec::new();
        for g in groups {
            let k = g.len();
            let centre = g.iter().sum::<Complex64>() / k as f64;
            let spread = g.iter().map(|z| (z - centre).norm()).fold(0.0, f64::max);
            if k > 1 && self.is_multiple_root(centre, k, spread) {
                if k > MAX_MULTIPLICITY {
                    return Err(Error::Unsupported(format!("root multiplicity {k} exceeds {MAX_MULTIPLICITY}")));
                }
                let mut d = self.clone();
                for _ in 0..k - 1 {
                    d = d.derivative();
                }
                out.push(Root { value: newton(&d, centre), multiplicity: k });
            } else {
                for z in g {
                    out.push(Root { value: newton(self, z), multiplicity: 1 });
                }
            }
        }
        for (i, a) in out.iter().enumerate() {
            for b in &out[i + 1..] {
                if (a.value - b.value).norm() < 1e-8 * scale {
                    return Err(Error::Conditioning(format!(
                        "roots {} and {} are too close to separate",
                        a.value, b.value
                    )));
                }
            }
        }
        for r in &mut out {
            if r.value.im.abs() < 1e-12 * scale {
                r.value.im = 0.0;
            }
        }
        out.sort_by(|a, b| a.value.re.total_cmp(&b.value.re).then(a.value.im.total_cmp(&b.value.im)));
        Ok(out)
    }

    /// Eigenvalues of the companion matrix. Spectra symmetric about the
    /// imaginary axis can stall the QR iteration; a small real shift of the
    /// variable breaks the symmetry.
    fn companion_eigenvalues(&self) -> Result<Vec<Complex64>> {
        let n = self.degree();
        for shift in [0.0, 0.123_456_7, -0.271_828_2] {
            let q = self.taylor_at(Complex64::new(shift, 0.0));
            let lead = q[n].re;
            let mut m = DMatrix::<f64>::zeros(n, n);
            for i in 1..n {
                m[(i, i - 1)] = 1.0;
            }
            for i in 0..n {
                m[(i, n - 1)] = -q[i].re / lead;
            }
            if let Some(schur) = Schur::try_new(m, f64::EPSILON, 50 * n.max(10)) {
                return Ok(schur.complex_eigenvalues().iter().map(|z| z + shift).collect());
            }
        }
        Err(Error::Conditioning("companion eigenvalues did not converge".into()))
    }

    /// A k-fold root splits by about `eps^(1/k)` under roundoff, so the lower
    /// Taylor coefficients at the group centre shrink like powers of the
    /// observed spread, which itself cannot exceed that roundoff bound.
    fn is_multiple_root(&self, c: Complex64, k: usize, spread: f64) -> bool {
        let tay = self.taylor_at(c);
        let bound = 100.0 * f64::EPSILON.powf(1.0 / k as f64) * c.norm().max(1.0);
        let d = (10.0 * spread).min(bound);
        let lead = tay[k].norm();
        tay[..k].iter().enumerate().all(|(j, z)| z.norm() <= lead * d.powi((k - j) as i32))
    }
}

fn newton(p: &RealPoly, mut z: Complex64) -> Complex64 {
    let dp = p.derivative();
    for _ in 0..50 {
        let d = dp.eval(z);
        if d.norm() == 0.0 {
            break;
        }
        let step = p.eval(z) / d;
        z -= step;
        if step.norm() <= 1e-16 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_roots() {
        let p = RealPoly::new(vec![1.0, 0.0, 0.0, 1.0, 0.0]);
        assert_eq!(p.degree(), 3);
        let r = p.roots().unwrap();
        assert_eq!(r.len(), 3);
        for root in &r {
            assert_eq!(root.multiplicity, 1);
            assert!(p.eval(root.value).norm() < 1e-14);
        }
        assert!((r[0].value.re + 1.0).abs() < 1e-15);
    }

    #[test]
    fn multiple_roots() {
        // (p - 1)^3 (p + 2)
        let p = RealPoly::new(vec![-1.0, 3.0, -3.0, 1.0]).mul(&RealPoly::new(vec![2.0, 1.0]));
        let r = p.roots().unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[1].multiplicity, 3);
        assert!((r[1].value - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let sq = RealPoly::new(vec![0.0, 0.0, 1.0]);
        assert_eq!(sq.roots().unwrap(), vec![Root { value: Complex64::new(0.0, 0.0), multiplicity: 2 }]);
    }

    #[test]
    fn close_but_distinct() {
        let p = RealPoly::new(vec![1.0, -1.0]).mul(&RealPoly::new(vec![1.0001, -1.0]));
        let r = p.roots().unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[1].value.re - 1.0001).abs() < 1e-10);
        let bad = RealPoly::new(vec![1.0, -1.0]).mul(&RealPoly::new(vec![1.0 + 1e-10, -1.0]));
        assert!(matches!(bad.roots(), Err(Error::Conditioning(_))) || bad.roots().unwrap().len() == 1);
    }

    #[test]
    fn nilpotent_companion() {
        let p = RealPoly::new(vec![0.0, 0.0, 0.0, 1.0]);
        assert_eq!(p.roots().unwrap().len(), 1);
    }

    #[test]
    fn taylor_shift() {
        let p = RealPoly::new(vec![1.0, 2.0, 3.0]);
        let t = p.taylor_at(Complex64::new(1.0, 0.0));
        assert_eq!(t, vec![6.0.into(), 8.0.into(), 3.0.into()]);
    }

    #[test]
    fn double_imaginary_pair() {
        // (p^2 + 9/4)^2 stalls an unshifted QR sweep
        let q = RealPoly::new(vec![2.25, 0.0, 1.0]);
        let r = q.mul(&q).roots().unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| x.multiplicity == 2 && (x.value.norm() - 1.5).abs() < 1e-12 && x.value.re == 0.0));
    }
}
