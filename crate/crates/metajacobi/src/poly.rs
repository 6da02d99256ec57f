//! The polynomial families as dense coefficient vectors: the Askey
//! polynomials `P_n`, their partners `Q_n`, the monic Jacobi polynomials
//! `P̂_n`, and the three-term recurrence generating `P_n`.

use crate::error::{Error, Result};
use crate::scalar::{terminating_coeffs, Field};
use crate::{Params, C64};

/// Dense coefficients of a polynomial in `z`; entry `j` multiplies `z^j`.
///
/// Trailing zeros are stripped on construction, so the last entry is nonzero
/// unless the polynomial is identically zero (stored as `[0]`).
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCoeffs(Vec<C64>);

impl PolyCoeffs {
    pub fn new(mut coeffs: Vec<C64>) -> PolyCoeffs {
        while coeffs.len() > 1 && coeffs.last() == Some(&C64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(C64::new(0.0, 0.0));
        }
        PolyCoeffs(coeffs)
    }

    pub fn from_real(coeffs: &[f64]) -> PolyCoeffs {
        PolyCoeffs::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn leading(&self) -> C64 {
        self.0[self.0.len() - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.len() == 1 && self.0[0] == C64::new(0.0, 0.0)
    }

    pub fn eval(&self, z: C64) -> C64 {
        eval_poly(self, z)
    }
}

/// Horner evaluation.
pub fn eval_poly(p: &PolyCoeffs, z: C64) -> C64 {
    p.0.iter().rev().fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn ratio_product<T: Field>(num: T, den: T, n: usize, what: &'static str) -> Result<T> {
    let mut acc = T::from(1.0);
    for j in 0..n {
        let d = den + j as f64;
        if d.magnitude() == 0.0 {
            return Err(Error::DivisionByZero(what));
        }
        acc = acc * (num + j as f64) / d;
    }
    Ok(acc)
}

/// Real coefficients of `P_n(z; alpha, beta)` in any field type.
pub(crate) fn askey_p_real<T: Field>(n: usize, alpha: T, beta: T) -> Result<Vec<T>> {
    let one = T::from(1.0);
    let series = terminating_coeffs(n, alpha + 1.0, one - beta - T::from(n as f64))?;
    let pref = ratio_product(beta, alpha + 1.0, n, "(alpha + 1)_n")?;
    Ok(series.into_iter().map(|c| c * pref).collect())
}

/// Real coefficients of the monic Jacobi polynomial `P̂_n` in any field type.
pub(crate) fn jacobi_phat_real<T: Field>(n: usize, alpha: T, beta: T) -> Result<Vec<T>> {
    let one = T::from(1.0);
    let series = terminating_coeffs(n, alpha + (n as f64 + 1.0), one - beta)?;
    let mut pref = ratio_product(one - beta, alpha + (n as f64 + 1.0), n, "(1 + alpha + n)_n")?;
    if n % 2 == 1 {
        pref = -pref;
    }
    Ok(series.into_iter().map(|c| c * pref).collect())
}

/// The monic Askey polynomial `P_n(z; alpha, beta)`.
pub fn askey_p(n: usize, params: &Params) -> Result<PolyCoeffs> {
    let c = askey_p_real(n, params.alpha(), params.beta())?;
    Ok(PolyCoeffs::from_real(&c))
}

/// The partner `Q_n(z; alpha, beta) = P_n(z; beta, alpha)`.
pub fn askey_q(n: usize, params: &Params) -> Result<PolyCoeffs> {
    askey_p(n, &params.swapped())
}

/// The monic Jacobi polynomial `P̂_n(x; alpha, beta)`.
pub fn jacobi_phat(n: usize, params: &Params) -> Result<PolyCoeffs> {
    let c = jacobi_phat_real(n, params.alpha(), params.beta())?;
    Ok(PolyCoeffs::from_real(&c))
}

/// The pair `(b_n, g_n)` of the recurrence
/// `P_{n+1} = z (P_n + g_n P_{n-1}) - b_n P_n`.
pub fn recurrence_coeffs(n: usize, params: &Params) -> Result<(f64, f64)> {
    let (a, b) = (params.alpha(), params.beta());
    let nf = n as f64;
    let d1 = a + nf + 1.0;
    if d1 == 0.0 {
        return Err(Error::DivisionByZero("alpha + n + 1"));
    }
    let bn = -(b + nf) / d1;
    if n == 0 {
        return Ok((bn, 0.0));
    }
    let d0 = a + nf;
    if d0 == 0.0 {
        return Err(Error::DivisionByZero("alpha + n"));
    }
    Ok((bn, -nf * (nf + a + b) / (d0 * d1)))
}

/// `P_n(z)` by running the recurrence from `P_{-1} = 0`, `P_0 = 1`.
pub fn askey_p_by_recurrence(n: usize, params: &Params, z: C64) -> Result<C64> {
    let mut prev = C64::new(0.0, 0.0);
    let mut cur = C64::new(1.0, 0.0);
    for k in 0..n {
        let (b, g) = recurrence_coeffs(k, params)?;
        let next = z * (cur + prev * g) - cur * b;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
