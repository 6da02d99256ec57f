//! Double-double arithmetic.
//!
//! A [`Dd`] is an unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`,
//! giving roughly 32 significant digits. Only the handful of operations the
//! contour quadrature needs are provided: field arithmetic, `exp`, `ln`,
//! `sin_cos` and real powers of positive numbers.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };
    pub const FRAC_PI_2: Dd = Dd {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123_233_995_736_766e-17,
    };
    pub const LN_2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };

    pub const fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    /// Exact multiplication by `2^k`.
    pub fn ldexp(self, k: i32) -> Dd {
        let s = pow2(k);
        Dd {
            hi: self.hi * s,
            lo: self.lo * s,
        }
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn exp(self) -> Dd {
        if self.hi > 709.7 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let m = (self.hi / Dd::LN_2.hi).round();
        // |r| <= ln2/2, scaled down by 2^9 so the series converges in ~10 terms
        let r = (self - Dd::LN_2 * m).ldexp(-9);
        let mut s = r;
        let mut term = r;
        let mut k = 2.0;
        loop {
            term = term * r / k;
            s = s + term;
            if term.hi.abs() <= 1e-36 * s.hi.abs().max(1e-300) {
                break;
            }
            k += 1.0;
        }
        // (1 + s)^(2^9) - 1 by repeated squaring of the excess
        for _ in 0..9 {
            s = s.ldexp(1) + s.sqr();
        }
        let one_plus = s + 1.0;
        // split the scaling so 2^m never overflows on its own
        let m = m as i32;
        let half = m / 2;
        one_plus.ldexp(half).ldexp(m - half)
    }

    /// Natural logarithm of a positive value; NaN otherwise.
    pub fn ln(self) -> Dd {
        if self.hi <= 0.0 || !self.hi.is_finite() {
            return Dd::new(f64::NAN);
        }
        // each Newton step on exp(y) = x doubles the number of correct digits;
        // the absolute error after one step scales like |y|^2 * 1e-32
        let mut y = Dd::new(self.hi.ln());
        y = y + self * (-y).exp() - 1.0;
        if y.hi.abs() > 2.0 {
            y = y + self * (-y).exp() - 1.0;
        }
        y
    }

    /// `self^t` for positive `self`.
    pub fn powf(self, t: f64) -> Dd {
        if t == 0.0 {
            return Dd::ONE;
        }
        (self.ln() * t).exp()
    }

    /// Four-quadrant arctangent of `y / x`.
    pub fn atan2(y: Dd, x: Dd) -> Dd {
        let mut t = Dd::new(y.to_f64().atan2(x.to_f64()));
        // one Newton step on y cos t - x sin t = 0 from a double-precision start
        let (s, c) = t.sin_cos();
        let den = x * c + y * s;
        if den.hi != 0.0 {
            t = t + (y * c - x * s) / den;
        }
        t
    }

    pub fn sin_cos(self) -> (Dd, Dd) {
        let j = (self.hi / Dd::FRAC_PI_2.hi).round();
        let t = self - Dd::FRAC_PI_2 * j;
        let t2 = t.sqr();
        let mut sin = t;
        let mut term = t;
        let mut k = 1.0;
        loop {
            term = -(term * t2 / ((k + 1.0) * (k + 2.0)));
            sin = sin + term;
            k += 2.0;
            if term.hi.abs() <= 1e-36 {
                break;
            }
        }
        let mut cos = Dd::ONE;
        let mut term = Dd::ONE;
        let mut k = 0.0;
        loop {
            term = -(term * t2 / ((k + 1.0) * (k + 2.0)));
            cos = cos + term;
            k += 2.0;
            if term.hi.abs() <= 1e-36 {
                break;
            }
        }
        match (j as i64).rem_euclid(4) {
            0 => (sin, cos),
            1 => (cos, -sin),
            2 => (-sin, -cos),
            _ => (-cos, sin),
        }
    }
}

fn pow2(k: i32) -> f64 {
    if (-1022..=1023).contains(&k) {
        f64::from_bits(((k + 1023) as u64) << 52)
    } else {
        2f64.powi(k)
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::new(x)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    fn add(self, b: f64) -> Dd {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    fn sub(self, b: f64) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    fn mul(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + q3
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    fn div(self, b: f64) -> Dd {
        self / Dd::new(b)
    }
}

/// Complex number with double-double parts.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    pub const ZERO: CDd = CDd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: CDd = CDd {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    pub fn new(re: Dd, im: Dd) -> CDd {
        CDd { re, im }
    }

    pub fn real(re: Dd) -> CDd {
        CDd { re, im: Dd::ZERO }
    }

    /// `r * e^{i phase}`.
    pub fn from_polar(r: Dd, phase: Dd) -> CDd {
        let (s, c) = phase.sin_cos();
        CDd { re: r * c, im: r * s }
    }

    pub fn conj(self) -> CDd {
        CDd {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.sqr() + self.im.sqr()
    }

    pub fn recip(self) -> CDd {
        let d = self.norm_sqr();
        CDd {
            re: self.re / d,
            im: -self.im / d,
        }
    }

    pub fn scale(self, s: Dd) -> CDd {
        CDd {
            re: self.re * s,
            im: self.im * s,
        }
    }

    /// Principal logarithm; NaN at zero.
    pub fn ln(self) -> CDd {
        CDd {
            re: self.norm_sqr().ln().ldexp(-1),
            im: Dd::atan2(self.im, self.re),
        }
    }

    /// Principal power `self^t` for real `t`.
    pub fn powf(self, t: Dd) -> CDd {
        if t.hi == 0.0 {
            return CDd::ONE;
        }
        let l = self.ln();
        CDd::from_polar((l.re * t).exp(), l.im * t)
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn abs_f64(self) -> f64 {
        self.to_c64().norm()
    }
}

impl From<Complex64> for CDd {
    fn from(z: Complex64) -> CDd {
        CDd {
            re: Dd::new(z.re),
            im: Dd::new(z.im),
        }
    }
}

impl Add for CDd {
    type Output = CDd;
    fn add(self, b: CDd) -> CDd {
        CDd {
            re: self.re + b.re,
            im: self.im + b.im,
        }
    }
}

impl Sub for CDd {
    type Output = CDd;
    fn sub(self, b: CDd) -> CDd {
        CDd {
            re: self.re - b.re,
            im: self.im - b.im,
        }
    }
}

impl Neg for CDd {
    type Output = CDd;
    fn neg(self) -> CDd {
        CDd {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for CDd {
    type Output = CDd;
    fn mul(self, b: CDd) -> CDd {
        CDd {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for CDd {
    type Output = CDd;
    fn div(self, b: CDd) -> CDd {
        self * b.recip()
    }
}

/// Horner evaluation of a real-coefficient polynomial at a complex point.
pub fn horner(coeffs: &[Dd], z: CDd) -> CDd {
    let mut acc = CDd::ZERO;
    for &c in coeffs.iter().rev() {
        acc = acc * z;
        acc.re = acc.re + c;
    }
    acc
}
