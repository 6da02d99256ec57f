use std::f64::consts::PI;

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::scalar::params::near_integer;
use crate::C64;

// Lanczos approximation with g = 671/128 and fourteen terms; relative error
// below 1e-15 for Re x >= 1/2.
const LANCZOS_G: f64 = 5.242_187_5;
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048_8e-4,
    2.174_396_181_152_126_4e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_141e-5,
    3.689_918_265_953_162_5e-6,
];
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

fn lanczos(x: C64) -> C64 {
    let t = x + LANCZOS_G;
    let head = (x + 0.5) * t.ln() - t;
    let mut y = x;
    let mut ser = C64::new(LANCZOS_C0, 0.0);
    for c in LANCZOS_COEFFS {
        y += 1.0;
        ser += c / y;
    }
    head + (ser * SQRT_2PI / x).ln()
}

/// `sin(pi x)` with the real part reduced modulo 2 first.
pub fn sin_pi(x: C64) -> C64 {
    let r = x.re - 2.0 * (x.re / 2.0).round();
    (C64::new(r, x.im) * PI).sin()
}

fn is_pole(x: C64) -> bool {
    x.im == 0.0 && x.re <= 0.5 && (x.re - x.re.round()).abs() <= 1e-14 * x.re.abs().max(1.0)
}

/// Logarithm of the gamma function, defined up to a multiple of `2 pi i`
/// (the principal logarithm is used in every factor), so `exp` of the
/// result is always the gamma value itself.
pub fn log_gamma(x: C64) -> Result<C64> {
    if is_pole(x) {
        return Err(Error::Pole(format!("{x}")));
    }
    if x.re < 0.5 {
        let s = sin_pi(x);
        Ok(C64::new(PI.ln(), 0.0) - s.ln() - lanczos(C64::new(1.0, 0.0) - x))
    } else {
        Ok(lanczos(x))
    }
}

pub fn gamma(x: C64) -> Result<C64> {
    Ok(log_gamma(x)?.exp())
}

/// `(ln|Gamma(x)|, sign Gamma(x))` for real `x`.
pub fn ln_gamma_sign(x: f64) -> Result<(f64, f64)> {
    let lg = log_gamma(C64::new(x, 0.0))?;
    let sign = if x > 0.0 || ((-x).floor() as i64) % 2 == 1 {
        1.0
    } else {
        -1.0
    };
    Ok((lg.re, sign))
}

/// `prod Gamma(num) / prod Gamma(den)` for real arguments, evaluated through
/// log-gamma sums so widely scaled factors never overflow on their own.
pub fn gamma_ratio(num: &[f64], den: &[f64]) -> Result<f64> {
    let mut log = 0.0;
    let mut sign = 1.0;
    for &x in num {
        let (l, s) = ln_gamma_sign(x)?;
        log += l;
        sign *= s;
    }
    for &x in den {
        // 1/Gamma vanishes at the poles
        if x <= 0.0 && near_integer(x) {
            return Ok(0.0);
        }
        let (l, s) = ln_gamma_sign(x)?;
        log -= l;
        sign *= s;
    }
    Ok(sign * log.exp())
}

/// Complex analogue of [`gamma_ratio`].
pub fn gamma_ratio_complex(num: &[C64], den: &[C64]) -> Result<C64> {
    let mut log = C64::new(0.0, 0.0);
    for &x in num {
        log += log_gamma(x)?;
    }
    for &x in den {
        if is_pole(x) {
            return Ok(C64::new(0.0, 0.0));
        }
        log -= log_gamma(x)?;
    }
    Ok(log.exp())
}

// B_2k / (2k (2k - 1)) as exact ratios, k = 1..=12
const STIRLING: [(f64, f64); 12] = [
    (1.0, 12.0),
    (-1.0, 360.0),
    (1.0, 1260.0),
    (-1.0, 1680.0),
    (1.0, 1188.0),
    (-691.0, 360_360.0),
    (1.0, 156.0),
    (-3617.0, 122_400.0),
    (43_867.0, 244_188.0),
    (-174_611.0, 125_400.0),
    (77_683.0, 5796.0),
    (-236_364_091.0, 1_506_960.0),
];
const HALF_LN_2PI: Dd = Dd {
    hi: 0.918_938_533_204_672_8,
    lo: -3.878_294_158_067_241_4e-17,
};

/// Gamma function of a real double-double argument, to about 30 digits.
/// The argument is shifted up past 40 and Stirling's series is summed there.
pub(crate) fn gamma_dd(x: Dd) -> Result<Dd> {
    let xf = x.to_f64();
    if xf <= 0.0 && near_integer(xf) {
        return Err(Error::Pole(format!("{xf}")));
    }
    let shift = (40.0 - xf).ceil().max(0.0) as usize;
    let y = x + shift as f64;
    let inv = y.recip();
    let inv2 = inv.sqr();
    let mut series = Dd::ZERO;
    let mut pow = inv;
    for (num, den) in STIRLING {
        series = series + pow * (Dd::new(num) / den);
        pow = pow * inv2;
    }
    let lg = (y - 0.5) * y.ln() - y + HALF_LN_2PI + series;
    Ok(lg.exp() / rising(x, shift))
}

/// Double-double analogue of [`gamma_ratio`]; a pole in the denominator
/// makes the ratio vanish.
pub(crate) fn gamma_ratio_dd(num: &[Dd], den: &[Dd]) -> Result<Dd> {
    let mut acc = Dd::ONE;
    for &x in num {
        acc = acc * gamma_dd(x)?;
    }
    for &x in den {
        let xf = x.to_f64();
        if xf <= 0.0 && near_integer(xf) {
            return Ok(Dd::ZERO);
        }
        acc = acc / gamma_dd(x)?;
    }
    Ok(acc)
}

/// Rising factorial `(x)_k`.
pub fn pochhammer(x: C64, k: usize) -> C64 {
    rising(x, k)
}

pub(crate) fn rising<T>(x: T, k: usize) -> T
where
    T: Copy + std::ops::Mul<Output = T> + std::ops::Add<f64, Output = T> + From<f64>,
{
    let mut acc = T::from(1.0);
    for j in 0..k {
        acc = acc * (x + j as f64);
    }
    acc
}
