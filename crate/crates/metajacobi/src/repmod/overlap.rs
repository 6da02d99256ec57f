use std::fmt;
use std::str::FromStr;

use super::coeffs::{d_n0, j_series, jt_series, p_series, q_series, GaugeChoice};
use crate::error::{Error, Result};
use crate::dd::{horner, CDd, Dd};
use crate::poly::{askey_p_real, jacobi_phat_real};
use crate::scalar::{gamma_ratio_dd, hyp2f1_series_dd};
use crate::{Params, C64};

/// Default number of terms summed before the tail test of an infinite overlap.
pub const DEFAULT_LMAX: usize = 400;
/// Relative size of the estimated tail at which an infinite overlap stops.
pub const OVERLAP_TAIL_TOL: f64 = 1e-13;
/// Hard limit on the number of terms of an infinite overlap.
pub const MAX_OVERLAP_TERMS: usize = 200_000;

/// The four overlaps between the module eigenvectors and the eigenvectors of `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverlapKind {
    /// `sum_k d_n(k) (z - 1)^k`: the Askey polynomial `P_n(z)`.
    P,
    /// `sum_l d*_m(m + l) (m + l + alpha + 1) (z - 1)^(-m-l-1)`: pairs with `LT Q_m`.
    QLT,
    /// `sum_k f_n(k) (z - 1)^k`: a multiple of the Jacobi polynomial.
    J,
    /// `sum_l f~_m(m + l) (z - 1)^(-m-l-1)`.
    JTilde,
}

impl OverlapKind {
    pub const ALL: [OverlapKind; 4] = [OverlapKind::P, OverlapKind::QLT, OverlapKind::J, OverlapKind::JTilde];

    pub fn name(self) -> &'static str {
        match self {
            OverlapKind::P => "P",
            OverlapKind::QLT => "QLT",
            OverlapKind::J => "J",
            OverlapKind::JTilde => "JTILDE",
        }
    }

    fn infinite(self) -> bool {
        matches!(self, OverlapKind::QLT | OverlapKind::JTilde)
    }
}

impl fmt::Display for OverlapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OverlapKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OverlapKind::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown overlap {s}")))
    }
}

/// Sums `sum_l c_l w^l` for coefficients produced in growing batches,
/// extending past `lmax` until the geometric tail bound is small.
fn sum_infinite<F>(coeffs: F, w: C64, lmax: usize) -> Result<C64>
where
    F: Fn(usize) -> Result<Vec<f64>>,
{
    let wabs = w.norm();
    let mut len = lmax.max(8);
    loop {
        let c = coeffs(len)?;
        let mut sum = C64::new(0.0, 0.0);
        let mut pow = C64::new(1.0, 0.0);
        let mut biggest: f64 = 0.0;
        for &cl in &c {
            let t = pow * cl;
            biggest = biggest.max(t.norm());
            sum += t;
            pow *= w;
        }
        let last = c[len].abs() * wabs.powi(len as i32);
        let ratio = if c[len - 1] != 0.0 { (c[len] / c[len - 1]).abs() * wabs } else { 0.0 };
        let rho = ratio.max(wabs);
        if last == 0.0 || (rho < 1.0 && last * rho / (1.0 - rho) <= OVERLAP_TAIL_TOL * sum.norm().max(biggest * 1e-3)) {
            return Ok(sum);
        }
        if len >= MAX_OVERLAP_TERMS {
            return Err(Error::NoConvergence { terms: len });
        }
        len = (2 * len).min(MAX_OVERLAP_TERMS);
    }
}

/// Evaluates an overlap at `z`. `P` and `J` are polynomials in `z - 1`
/// (times `(z - 1)^a_tilde`); `QLT` and `JTilde` are series in `1/(z - 1)`
/// and need `|1 - z| > 1`. Infinite series start with `lmax + 1` terms and
/// are extended until the tail falls below [`OVERLAP_TAIL_TOL`].
pub fn overlap(kind: OverlapKind, index: usize, z: C64, params: &Params, gauge: &GaugeChoice, lmax: usize) -> Result<C64> {
    gauge.validate()?;
    let (al, be) = (params.alpha(), params.beta());
    let s = z - 1.0;
    if kind.infinite() && s.norm() <= 1.0 {
        return Err(Error::Domain(format!("|1 - z| = {} must exceed 1", s.norm())));
    }
    let power = |e: f64| if e == 0.0 { C64::new(1.0, 0.0) } else { s.powf(e) };
    match kind {
        OverlapKind::P => {
            let d0 = d_n0(index, al, be, gauge.d_n0)?;
            let c = p_series(index, al, be)?;
            let poly = c.iter().rev().fold(C64::new(0.0, 0.0), |acc, &v| acc * s + v);
            Ok(gauge.gamma_tilde * power(gauge.a_tilde) * poly * d0)
        }
        OverlapKind::J => {
            let c = j_series(index, al, be)?;
            let poly = c.iter().rev().fold(C64::new(0.0, 0.0), |acc, &v| acc * s + v);
            Ok(gauge.gamma_tilde * gauge.f_n0 * power(gauge.a_tilde) * poly)
        }
        OverlapKind::QLT => {
            let m = index as f64;
            let coeffs = |len: usize| {
                let q = q_series(index, al, be, len)?;
                Ok(q.iter().enumerate().map(|(l, &v)| v * (m + l as f64 + al + 1.0)).collect())
            };
            let w = s.inv();
            let sum = sum_infinite(coeffs, w, lmax)?;
            Ok(gauge.gamma * gauge.dstar_mm * power(-m - gauge.a) * sum)
        }
        OverlapKind::JTilde => {
            let m = index as f64;
            let w = s.inv();
            let sum = sum_infinite(|len| jt_series(index, al, be, len), w, lmax)?;
            Ok(gauge.gamma * gauge.ftilde_nn * power(-m - gauge.a) * sum)
        }
    }
}

/// `(n + alpha + 1)_n / (alpha + beta + 1)_n`: the leading coefficient of
/// the `J` overlap, so that dividing by it gives the monic Jacobi polynomial.
pub fn jacobi_overlap_scale(n: usize, params: &Params) -> Result<f64> {
    let (al, be) = (params.alpha(), params.beta());
    super::coeffs::poch_ratio(al + n as f64 + 1.0, al + be + 1.0, n, "(alpha + beta + 1)_n")
}

/// The closed forms of the two infinite overlaps inside `|z| < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    QltSplit,
    JTildeSplit,
}

impl SplitKind {
    pub fn name(self) -> &'static str {
        match self {
            SplitKind::QltSplit => "QLT_SPLIT",
            SplitKind::JTildeSplit => "JTILDE_SPLIT",
        }
    }
}

/// Closed form of an infinite overlap, split into a Gauss series in `z`
/// (`regular`) and a term carrying the weight `(-z)^s (1 - z)^(alpha + beta)`
/// times a polynomial (`weighted`).
///
/// Both parts are evaluated in double-double. `sum` is rounded once from the
/// extended-precision total; the two parts can be many orders of magnitude
/// larger than it, so `regular + weighted` in f64 may lose digits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedForm {
    pub regular: C64,
    pub weighted: C64,
    pub sum: C64,
}

/// The closed form of the `QLT` or `JTilde` overlap under the default gauge,
/// valid for `0 < |z| < 1`. Its sum equals [`overlap`] where both converge.
pub fn overlap_closed_form(kind: SplitKind, index: usize, z: C64, params: &Params) -> Result<ClosedForm> {
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!("|z| = {} must be below 1", z.norm())));
    }
    if z.norm() == 0.0 {
        return Err(Error::Domain("z = 0 is a branch point".into()));
    }
    let (al, be) = (Dd::new(params.alpha()), Dd::new(params.beta()));
    let m = Dd::new(index as f64);
    let zd = CDd::from(z);
    let weight = |s: Dd| (-zd).powf(s) * (CDd::ONE - zd).powf(al + be);
    let (regular, weighted) = match kind {
        SplitKind::QltSplit => {
            let a = gamma_ratio_dd(&[m + al + 1.0, be + 1.0], &[m + be + 2.0, al])?;
            let b = gamma_ratio_dd(&[m + al + 1.0, m + be + 1.0], &[m + 1.0, m + al + be + 1.0])?;
            let f = hyp2f1_series_dd(m + 1.0, -al + 1.0, m + be + 2.0, zd)?;
            let q = horner(&askey_p_real(index, be, al)?, zd.recip());
            let k = m + al + 1.0;
            (f.scale(k * a), -(weight(-be - 1.0) * q).scale(k * b))
        }
        SplitKind::JTildeSplit => {
            let two_m = m * 2.0;
            let c1 = gamma_ratio_dd(&[two_m + al + 2.0, -be], &[m + al + 1.0, m - be + 1.0])?;
            let c2 = gamma_ratio_dd(
                &[two_m + al + 2.0, be, two_m + al + 1.0, -be + 1.0],
                &[m + 1.0, m + al + be + 1.0, m + al + 1.0, m - be + 1.0],
            )?;
            let f = hyp2f1_series_dd(m + 1.0, -m - al, be + 1.0, zd)?;
            let p = horner(&jacobi_phat_real(index, al, be)?, zd);
            let c1 = if index % 2 == 0 { -c1 } else { c1 };
            (f.scale(c1), -(weight(-be) * p).scale(c2))
        }
    };
    Ok(ClosedForm {
        regular: regular.to_c64(),
        weighted: weighted.to_c64(),
        sum: (regular + weighted).to_c64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{askey_p, jacobi_phat};
    use crate::scalar::hyp2f1_series;
    use crate::repmod::coeffs::InitialValue;

    fn pr() -> Params {
        Params::new(0.7, 0.3).unwrap()
    }

    fn g() -> GaugeChoice {
        GaugeChoice::default()
    }

    #[test]
    fn p_overlap_is_the_polynomial() {
        let z = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 7.0);
        assert_eq!(overlap(OverlapKind::P, 0, z, &pr(), &g(), 0).unwrap(), C64::new(1.0, 0.0));
        let v = overlap(OverlapKind::P, 4, z, &pr(), &g(), 0).unwrap();
        assert!((v - askey_p(4, &pr()).unwrap().eval(z)).norm() < 1e-12);
    }

    #[test]
    fn j_overlap_is_the_scaled_jacobi_polynomial() {
        let z = C64::new(0.3, 0.8);
        for n in 0..8 {
            let v = overlap(OverlapKind::J, n, z, &pr(), &g(), 0).unwrap() / jacobi_overlap_scale(n, &pr()).unwrap();
            assert!((v - jacobi_phat(n, &pr()).unwrap().eval(z)).norm() < 1e-11);
        }
    }

    #[test]
    fn qlt_overlap_against_gauss_series() {
        // (m + alpha + 1) (z - 1)^(-m-1) 2F1(m + 1, m + alpha + beta + 1; m + alpha + 1; 1/(1 - z))
        let z = C64::new(-1.0, 0.0);
        let v = overlap(OverlapKind::QLT, 2, z, &pr(), &g(), 200).unwrap();
        let c = |x: f64| C64::new(x, 0.0);
        let f = hyp2f1_series(c(3.0), c(4.0), c(3.7), (c(1.0) - z).inv(), 1e-15).unwrap();
        let want = (z - 1.0).powi(-3) * f * 3.7;
        assert!((v - want).norm() < 1e-11);
    }

    #[test]
    fn split_forms_reference_values() {
        // 40-digit references
        let z = C64::new(-0.5, 0.0);
        let c = overlap_closed_form(SplitKind::QltSplit, 0, z, &pr()).unwrap();
        assert!((c.regular.re - 0.865_032_779_527_877_6).abs() < 1e-15);
        assert!((c.weighted.re + 5.120_244_475_247_982).abs() < 1e-14);
        let c = overlap_closed_form(SplitKind::JTildeSplit, 1, z, &pr()).unwrap();
        assert!((c.regular.re + 123.249_450_962_310_9).abs() < 1e-12);
        assert!((c.weighted.re - 124.833_388_965_286_97).abs() < 1e-12);
        // the parts of m = 5 are near 6.5e6 and cancel to about 2
        let c = overlap_closed_form(SplitKind::JTildeSplit, 5, z, &pr()).unwrap();
        assert!(c.regular.norm() > 1e6);
        assert!((c.sum.re - 2.153_428_509_271_986_7).abs() < 1e-14);
        let c = overlap_closed_form(SplitKind::JTildeSplit, 4, z, &pr()).unwrap();
        assert!((c.sum.re + 2.002_686_268_402_114_7).abs() < 1e-14);
        let c = overlap_closed_form(SplitKind::QltSplit, 5, z, &pr()).unwrap();
        assert!((c.sum.re - 583.007_249_215_466_7).abs() < 1e-11);
        let c = overlap_closed_form(SplitKind::JTildeSplit, 5, C64::new(-0.3, 0.4), &pr()).unwrap();
        assert!((c.sum - C64::new(-3.322_538_665_263_978, -0.944_756_693_084_951_5)).norm() < 1e-14);
    }

    #[test]
    fn split_forms_match_series() {
        let z = C64::new(-0.3, 0.4);
        for m in 0..=5 {
            let c = overlap_closed_form(SplitKind::QltSplit, m, z, &pr()).unwrap();
            let s = overlap(OverlapKind::QLT, m, z, &pr(), &g(), DEFAULT_LMAX).unwrap();
            assert!((c.sum - s).norm() < 1e-10 * (1.0 + s.norm()), "QLT m={m}");
            let c = overlap_closed_form(SplitKind::JTildeSplit, m, z, &pr()).unwrap();
            let s = overlap(OverlapKind::JTilde, m, z, &pr(), &g(), DEFAULT_LMAX).unwrap();
            assert!((c.sum - s).norm() < 1e-10 * (1.0 + s.norm()), "JT m={m}");
        }
    }

    #[test]
    fn domain_errors() {
        let z = C64::new(0.5, 0.0);
        assert!(matches!(
            overlap(OverlapKind::QLT, 1, z, &pr(), &g(), 10),
            Err(Error::Domain(_))
        ));
        assert!(overlap_closed_form(SplitKind::QltSplit, 1, C64::new(-2.0, 0.0), &pr()).is_err());
    }

    #[test]
    fn gauge_offsets_enter_as_powers() {
        let mut gauge = g();
        gauge.a_tilde = 0.5;
        gauge.a = 1.5;
        gauge.d_n0 = InitialValue::Unit;
        let z = C64::new(-1.2, 0.7);
        let v = overlap(OverlapKind::P, 3, z, &pr(), &gauge, 0).unwrap();
        let base = overlap(OverlapKind::P, 3, z, &pr(), &g(), 0).unwrap();
        let d0 = d_n0(3, 0.7, 0.3, InitialValue::Natural).unwrap();
        assert!((v - base * (z - 1.0).powf(0.5) / d0).norm() < 1e-13);
    }
}
