//! Bracketing root finders: a grid scan for a sign change followed by Brent.

use crate::error::{Error, Result};

/// Scan `n` equal subintervals of `[lo, hi]` and return the first one on
/// which `f` changes sign.
pub fn scan_bracket<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    n: usize,
    what: &'static str,
) -> Result<(f64, f64)> {
    let n = n.max(1);
    let step = (hi - lo) / n as f64;
    let mut a = lo;
    let mut fa = f(a);
    for i in 1..=n {
        let b = if i == n { hi } else { lo + step * i as f64 };
        let fb = f(b);
        if fa == 0.0 {
            return Ok((a, a));
        }
        if fa * fb <= 0.0 {
            return Ok((a, b));
        }
        a = b;
        fa = fb;
    }
    Err(Error::NoBracket { what, lo, hi })
}

/// Brent's method on a sign-changing bracket `[a, b]`, stopping when the
/// bracket is narrower than `xtol` (plus a few ulps of the root).
pub fn brent<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    xtol: f64,
    what: &'static str,
) -> Result<f64> {
    let (mut a, mut b) = (a, b);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(Error::NoBracket { what, lo: a, hi: b });
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..200 {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }

        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }

        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }

        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
    }
    Ok(b)
}

/// Scan for a bracket, then refine with Brent.
pub fn find_root<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    scan: usize,
    xtol: f64,
    what: &'static str,
) -> Result<f64> {
    let (a, b) = scan_bracket(&f, lo, hi, scan, what)?;
    if a == b {
        return Ok(a);
    }
    brent(&f, a, b, xtol, what)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = find_root(|x| x * x - 2.0, 0.0, 2.0, 4, 1e-14, "x^2-2").unwrap();
        assert!((r - 2.0_f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn handles_flat_cubic() {
        let r = brent(&|x: f64| (x - 0.3).powi(3), 0.0, 1.0, 1e-12, "cubic").unwrap();
        assert!((r - 0.3).abs() < 1e-4);
    }

    #[test]
    fn missing_sign_change_is_an_error() {
        let err = find_root(|x| x * x + 1.0, -1.0, 1.0, 8, 1e-12, "x^2+1").unwrap_err();
        assert!(matches!(err, Error::NoBracket { .. }));
    }
}
