//! Truncated power series in `x = e²` used to evaluate closed forms whose
//! leading terms cancel near the sphere.

use std::ops::{Add, Mul};

#[derive(Debug, Clone, PartialEq)]
pub struct Series(pub Vec<f64>);

impl Series {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Polynomial with the given ascending coefficients, padded to `n` terms.
    pub fn poly(coeffs: &[f64], n: usize) -> Self {
        let mut c = vec![0.0; n];
        for (dst, src) in c.iter_mut().zip(coeffs) {
            *dst = *src;
        }
        Self(c)
    }

    /// `√(1 − x)`.
    pub fn sqrt_one_minus(n: usize) -> Self {
        let mut c = vec![0.0; n];
        if n > 0 {
            c[0] = 1.0;
        }
        for k in 1..n {
            c[k] = -c[k - 1] * (0.5 - (k as f64 - 1.0)) / k as f64;
        }
        Self(c)
    }

    /// `arcsin(√x)/√x`.
    pub fn arcsin_ratio(n: usize) -> Self {
        let mut c = vec![0.0; n];
        if n > 0 {
            c[0] = 1.0;
        }
        for k in 1..n {
            let kf = k as f64;
            c[k] = c[k - 1] * (2.0 * kf - 1.0).powi(2) / (2.0 * kf * (2.0 * kf + 1.0));
        }
        Self(c)
    }

    pub fn scale(mut self, s: f64) -> Self {
        self.0.iter_mut().for_each(|c| *c *= s);
        self
    }

    /// Evaluate `Σ_{k ≥ shift} c_k x^{k − shift}`, i.e. the series divided by
    /// `x^shift` with the leading `shift` coefficients taken as exactly zero.
    pub fn eval_shifted(&self, x: f64, shift: usize) -> f64 {
        self.0[shift..].iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_shifted(x, 0)
    }
}

impl Add for Series {
    type Output = Series;

    fn add(self, rhs: Series) -> Series {
        let n = self.len().min(rhs.len());
        Series((0..n).map(|k| self.0[k] + rhs.0[k]).collect())
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let n = self.len().min(rhs.len());
        let mut out = vec![0.0; n];
        for (i, a) in self.0.iter().enumerate().take(n) {
            for (j, b) in rhs.0.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        Series(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_series_matches_libm() {
        let s = Series::sqrt_one_minus(40);
        for x in [0.0, 0.01, 0.04, 0.2] {
            assert!((s.eval(x) - (1.0 - x).sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn arcsin_series_matches_libm() {
        let s = Series::arcsin_ratio(40);
        for e in [0.05_f64, 0.1, 0.2] {
            let x = e * e;
            assert!((s.eval(x) - e.asin() / e).abs() < 1e-15);
        }
    }

    #[test]
    fn product_truncates() {
        let a = Series::poly(&[1.0, 1.0], 3);
        let p = &a * &a;
        assert_eq!(p.0, vec![1.0, 2.0, 1.0]);
    }
}
