use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};
use crate::C64;

/// Series truncation tolerance used when none is given explicitly.
pub const DEFAULT_SERIES_TOL: f64 = 1e-14;
/// Hard cap on the number of terms of a non-terminating series.
pub const MAX_SERIES_TERMS: usize = 10_000;

const ZERO_TOL: f64 = 1e-14;

/// Minimal arithmetic needed to build hypergeometric coefficients in any of
/// the scalar types used by the crate (f64, complex, double-double).
pub(crate) trait Field:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Add<f64, Output = Self>
    + From<f64>
{
    fn magnitude(self) -> f64;
}

impl Field for f64 {
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl Field for C64 {
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

impl Field for Dd {
    fn magnitude(self) -> f64 {
        self.to_f64().abs()
    }
}

/// Coefficients `(-n)_k (b)_k / ((c)_k k!)`, `k = 0..=n`, of the terminating
/// series. Once a numerator factor vanishes the remaining entries are zero.
pub(crate) fn terminating_coeffs<T: Field>(n: usize, b: T, c: T) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(n + 1);
    let mut term = T::from(1.0);
    out.push(term);
    let mut dead = false;
    for k in 0..n {
        if dead {
            out.push(T::from(0.0));
            continue;
        }
        let num = T::from(k as f64 - n as f64) * (b + k as f64);
        if num.magnitude() == 0.0 {
            dead = true;
            out.push(T::from(0.0));
            continue;
        }
        let ck = c + k as f64;
        if ck.magnitude() <= ZERO_TOL {
            return Err(Error::Degenerate {
                what: "(c)_k",
                index: k + 1,
            });
        }
        term = term * num / (ck * T::from((k + 1) as f64));
        out.push(term);
    }
    Ok(out)
}

/// Terminating Gauss series `2F1(-n, b; c; z)` by one forward pass.
pub fn hyp2f1_terminating(n: usize, b: C64, c: C64, z: C64) -> Result<C64> {
    let mut sum = C64::new(1.0, 0.0);
    let mut term = C64::new(1.0, 0.0);
    for k in 0..n {
        let num = (k as f64 - n as f64) * (b + k as f64);
        if num.norm() == 0.0 {
            break;
        }
        let ck = c + k as f64;
        if ck.norm() <= ZERO_TOL {
            return Err(Error::Degenerate {
                what: "(c)_k",
                index: k + 1,
            });
        }
        term = term * num / (ck * (k + 1) as f64) * z;
        sum += term;
    }
    Ok(sum)
}

fn nonpositive_integer(x: C64) -> Option<usize> {
    if x.im.abs() <= ZERO_TOL && x.re <= ZERO_TOL && (x.re - x.re.round()).abs() <= ZERO_TOL {
        Some((-x.re.round()) as usize)
    } else {
        None
    }
}

/// Gauss series `2F1(a, b; c; z)` for `|z| < 1`.
///
/// Summation stops once the geometric majorant of the tail falls below
/// `tol * |partial sum|`. The majorant uses `max(|ratio|, |z|)`, which bounds
/// every later term ratio once the ratio sequence has become monotone.
pub fn hyp2f1_series(a: C64, b: C64, c: C64, z: C64, tol: f64) -> Result<C64> {
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!("|z| = {} >= 1", z.norm())));
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::Domain(format!("c = {c} is a non-positive integer")));
    }
    let zabs = z.norm();
    let settle = 2.0 * (a.norm() + b.norm() + c.norm() + 1.0);
    let mut sum = C64::new(1.0, 0.0);
    let mut term = C64::new(1.0, 0.0);
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        let ratio = (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        term *= ratio;
        if term.norm() == 0.0 {
            return Ok(sum);
        }
        sum += term;
        if kf >= settle {
            let rho = ratio.norm().max(zabs);
            if rho < 1.0 && term.norm() * rho / (1.0 - rho) <= tol * sum.norm() {
                return Ok(sum);
            }
        }
    }
    Err(Error::NoConvergence {
        terms: MAX_SERIES_TERMS,
    })
}

/// Double-double Gauss series with real parameters, summed to about 30
/// digits with the same stopping rule as [`hyp2f1_series`].
pub(crate) fn hyp2f1_series_dd(a: Dd, b: Dd, c: Dd, z: CDd) -> Result<CDd> {
    let zabs = z.abs_f64();
    if zabs >= 1.0 {
        return Err(Error::Domain(format!("|z| = {zabs} >= 1")));
    }
    if nonpositive_integer(C64::new(c.to_f64(), 0.0)).is_some() {
        return Err(Error::Domain(format!("c = {} is a non-positive integer", c.to_f64())));
    }
    let settle = 2.0 * (a.to_f64().abs() + b.to_f64().abs() + c.to_f64().abs() + 1.0);
    let mut sum = CDd::ONE;
    let mut term = CDd::ONE;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        let ratio = (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
        term = (term * z).scale(ratio);
        if term.re.hi == 0.0 && term.im.hi == 0.0 {
            return Ok(sum);
        }
        sum = sum + term;
        if kf >= settle {
            let rho = (ratio.to_f64().abs() * zabs).max(zabs);
            if rho < 1.0 && term.abs_f64() * rho / (1.0 - rho) <= 1e-32 * sum.abs_f64() {
                return Ok(sum);
            }
        }
    }
    Err(Error::NoConvergence {
        terms: MAX_SERIES_TERMS,
    })
}

/// `2F1(a, b; c; z)` that terminates when `a` or `b` is a non-positive
/// integer (any `z`) and otherwise sums the power series (`|z| < 1`).
pub fn hyp2f1(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    if let Some(n) = nonpositive_integer(a) {
        return hyp2f1_terminating(n, b, c, z);
    }
    if let Some(n) = nonpositive_integer(b) {
        return hyp2f1_terminating(n, a, c, z);
    }
    hyp2f1_series(a, b, c, z, DEFAULT_SERIES_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn terminating_examples() {
        assert_eq!(hyp2f1_terminating(0, c(3.0), c(2.0), c(9.0)).unwrap(), c(1.0));
        assert_relative_eq!(hyp2f1_terminating(1, c(2.0), c(4.0), c(1.0)).unwrap().re, 0.5);
        let v = hyp2f1_terminating(2, c(1.0), c(2.0), c(1.0)).unwrap();
        assert_relative_eq!(v.re, 1.0 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn terminating_degenerate_denominator() {
        // c = -1 vanishes at k = 1 while (-3)_2 (1)_2 does not
        let e = hyp2f1_terminating(3, c(1.0), c(-1.0), c(0.5));
        assert!(matches!(e, Err(Error::Degenerate { .. })));
        // numerator dies first: b = -1 stops the sum before (c)_3 = 0
        assert!(hyp2f1_terminating(4, c(-1.0), c(-2.0), c(0.5)).is_ok());
    }

    #[test]
    fn series_at_zero() {
        assert_eq!(hyp2f1_series(c(0.3), c(1.1), c(2.2), c(0.0), 1e-14).unwrap(), c(1.0));
    }

    #[test]
    fn series_binomial_case() {
        let v = hyp2f1_series(c(0.5), c(1.7), c(1.7), c(0.3), 1e-14).unwrap();
        assert_relative_eq!(v.re, 0.7f64.powf(-0.5), max_relative = 1e-14);
    }

    #[test]
    fn series_matches_terminating() {
        let a = hyp2f1_series(c(-3.0), c(0.4), c(1.6), c(0.8), 1e-14).unwrap();
        let b = hyp2f1_terminating(3, c(0.4), c(1.6), c(0.8)).unwrap();
        assert!((a - b).norm() < 1e-15);
    }

    #[test]
    fn series_domain_errors() {
        assert!(matches!(
            hyp2f1_series(c(0.3), c(0.2), c(1.5), c(1.0), 1e-14),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            hyp2f1_series(c(0.3), c(0.2), c(-2.0), c(0.5), 1e-14),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn series_log_one_minus() {
        // z 2F1(1, 1; 2; z) = -ln(1 - z)
        let z = C64::new(-0.4, 0.7);
        let v = hyp2f1_series(c(1.0), c(1.0), c(2.0), z, 1e-15).unwrap() * z;
        let want = -(C64::new(1.0, 0.0) - z).ln();
        assert!((v - want).norm() < 1e-14);
    }

    #[test]
    fn series_slow_convergence_hits_cap() {
        let e = hyp2f1_series(c(1.0), c(1.0), c(1.0), c(0.999_99), 1e-16);
        assert!(matches!(e, Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn coefficient_builder_matches_sum() {
        let z = 0.37;
        let coeffs = terminating_coeffs(5, 1.7f64, -4.3).unwrap();
        let direct: f64 = coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c);
        let v = hyp2f1_terminating(5, c(1.7), c(-4.3), c(z)).unwrap();
        assert_relative_eq!(direct, v.re, max_relative = 1e-14);
    }

    #[test]
    fn double_double_series() {
        let z = CDd::from(C64::new(-0.5, 0.2));
        let f = hyp2f1_series_dd(Dd::new(3.0), Dd::new(0.3), Dd::new(4.7), z).unwrap();
        let re = (f.re - Dd { hi: 0.919_647_077_264_218_5, lo: 4.489_700_436_755_169_5e-17 }).to_f64();
        let im = (f.im - Dd { hi: 0.025_943_351_491_571_197, lo: 1.709_607_671_162_942_9e-18 }).to_f64();
        assert!(re.abs() < 1e-30 && im.abs() < 1e-30, "{re:e} {im:e}");
    }
}
