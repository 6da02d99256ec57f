use super::vector::ModuleVector;
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::{Params, C64};

/// How `d_n(0)`, the free initial value of the `P_n` expansion, is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InitialValue {
    /// `(alpha + beta + 1)_n / (alpha + 1)_n`, which makes the overlap with
    /// the eigenvectors of `X` exactly the monic `P_n`.
    #[default]
    Natural,
    /// `d_n(0) = 1`.
    Unit,
}

/// The free normalizations of the eigenvector expansions and overlaps.
///
/// `gamma` and `gamma_tilde` scale the overlaps, `a` and `a_tilde` are the
/// exponent offsets of `(z - 1)`, and the remaining fields fix the initial
/// value of each coefficient recurrence.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaugeChoice {
    pub gamma: C64,
    pub gamma_tilde: C64,
    pub a: f64,
    pub a_tilde: f64,
    pub d_n0: InitialValue,
    pub dstar_mm: C64,
    pub f_n0: C64,
    pub ftilde_nn: C64,
}

impl Default for GaugeChoice {
    fn default() -> Self {
        let one = C64::new(1.0, 0.0);
        GaugeChoice {
            gamma: one,
            gamma_tilde: one,
            a: 1.0,
            a_tilde: 0.0,
            d_n0: InitialValue::Natural,
            dstar_mm: one,
            f_n0: one,
            ftilde_nn: one,
        }
    }
}

impl GaugeChoice {
    /// Rejects choices violating `a = a_tilde + 1`.
    pub fn validate(&self) -> Result<()> {
        if (self.a - self.a_tilde - 1.0).abs() > 1e-14 * self.a.abs().max(1.0) {
            return Err(Error::Domain(format!(
                "gauge needs a = a_tilde + 1, got a = {}, a_tilde = {}",
                self.a, self.a_tilde
            )));
        }
        Ok(())
    }
}

fn check_den<T: Field>(x: T, what: &'static str, index: usize) -> Result<()> {
    if x.magnitude() <= 1e-14 {
        Err(Error::Degenerate { what, index })
    } else {
        Ok(())
    }
}

/// `(num)_n / (den)_n`.
pub(crate) fn poch_ratio<T: Field>(num: T, den: T, n: usize, what: &'static str) -> Result<T> {
    let mut acc = T::from(1.0);
    for j in 0..n {
        let d = den + j as f64;
        check_den(d, what, j)?;
        acc = acc * (num + j as f64) / d;
    }
    Ok(acc)
}

/// `c_0 = 1` and `c_{l+1} = c_l * (-1) (x1 + l)(x2 + l) / ((l + 1)(y + l))`,
/// the shape shared by every coefficient family of the module.
fn alternating_series<T: Field>(x1: T, x2: T, y: T, len: usize, what: &'static str) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(len);
    let mut c = T::from(1.0);
    for l in 0..len {
        out.push(c);
        if l + 1 == len {
            break;
        }
        let lf = l as f64;
        let num = (x1 + lf) * (x2 + lf);
        if num.magnitude() == 0.0 {
            out.resize(len, T::from(0.0));
            break;
        }
        let den = y + lf;
        check_den(den, what, l)?;
        c = -(c * num / (den * T::from(lf + 1.0)));
    }
    Ok(out)
}

/// `d_n(k) / d_n(0)` for `k = 0..=n`.
pub(crate) fn p_series<T: Field>(n: usize, al: T, be: T) -> Result<Vec<T>> {
    let nf = T::from(n as f64);
    alternating_series(-nf, al + 1.0, al + be + 1.0, n + 1, "(alpha + beta + 1)_k")
}

/// `d*_m(m + l)` with `d*_m(m) = 1`, `l = 0..=lmax`.
pub(crate) fn q_series<T: Field>(m: usize, al: T, be: T, lmax: usize) -> Result<Vec<T>> {
    let mf = m as f64;
    alternating_series(
        T::from(mf + 1.0),
        al + be + (mf + 1.0),
        al + (mf + 2.0),
        lmax + 1,
        "(m + alpha + 2)_l",
    )
}

/// `f_n(k)` with `f_n(0) = 1`, `k = 0..=n`.
pub(crate) fn j_series<T: Field>(n: usize, al: T, be: T) -> Result<Vec<T>> {
    let nf = n as f64;
    alternating_series(T::from(-nf), al + (nf + 1.0), al + be + 1.0, n + 1, "(alpha + beta + 1)_k")
}

/// `f~_n(n + l)` with `f~_n(n) = 1`, `l = 0..=lmax`.
pub(crate) fn jt_series<T: Field>(n: usize, al: T, be: T, lmax: usize) -> Result<Vec<T>> {
    let nf = n as f64;
    alternating_series(
        T::from(nf + 1.0),
        al + be + (nf + 1.0),
        al + (2.0 * nf + 2.0),
        lmax + 1,
        "(2n + alpha + 2)_l",
    )
}

/// `d_n(0)` under the chosen rule.
pub(crate) fn d_n0<T: Field>(n: usize, al: T, be: T, rule: InitialValue) -> Result<T> {
    match rule {
        InitialValue::Unit => Ok(T::from(1.0)),
        InitialValue::Natural => poch_ratio(al + be + 1.0, al + 1.0, n, "(alpha + 1)_n"),
    }
}

fn to_vector(start: i64, vals: &[f64], scale: C64) -> ModuleVector {
    ModuleVector::from_pairs(vals.iter().enumerate().map(|(j, &c)| (start + j as i64, scale * c)))
}

/// Solution `d_n` of `M d = n L d`, supported on `0..=n`.
pub fn gevp_p_coeffs(n: usize, params: &Params, gauge: &GaugeChoice) -> Result<ModuleVector> {
    let (al, be) = (params.alpha(), params.beta());
    let d0 = d_n0(n, al, be, gauge.d_n0)?;
    let s = p_series(n, al, be)?;
    Ok(to_vector(0, &s, C64::new(d0, 0.0)))
}

/// Solution `d*_m` of `MT d* = m LT d*`, truncated to `m..=m + lmax`.
pub fn gevp_q_coeffs(m: usize, params: &Params, gauge: &GaugeChoice, lmax: usize) -> Result<ModuleVector> {
    let s = q_series(m, params.alpha(), params.beta(), lmax)?;
    Ok(to_vector(m as i64, &s, gauge.dstar_mm))
}

/// Eigenvectors of `M` (`dual = false`, support `0..=n`) or of `MT`
/// (`dual = true`, support `n..=n + lmax`) for the eigenvalue `n (n + alpha + 1)`.
pub fn evp_j_coeffs(n: usize, params: &Params, gauge: &GaugeChoice, dual: bool, lmax: usize) -> Result<ModuleVector> {
    let (al, be) = (params.alpha(), params.beta());
    if dual {
        let s = jt_series(n, al, be, lmax)?;
        Ok(to_vector(n as i64, &s, gauge.ftilde_nn))
    } else {
        let s = j_series(n, al, be)?;
        Ok(to_vector(0, &s, gauge.f_n0))
    }
}

/// The two families of eigenvectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Solutions of `M d = n L d`.
    P,
    /// Solutions of `MT d* = m LT d*`.
    Q,
}

/// Eigenvectors at a negative index `-s-1`.
///
/// For `P` the support runs downward from `-s-1` and is truncated after
/// `lmax + 1` entries; for `Q` it is `-s-1..=-1`. Only the denominators the
/// chosen family divides by are checked.
pub fn negative_index_coeffs(index: i64, family: Family, params: &Params, lmax: usize) -> Result<ModuleVector> {
    if index > -1 {
        return Err(Error::Domain(format!("index {index} is not negative")));
    }
    let s = (-index - 1) as usize;
    let sf = s as f64;
    let (al, be) = (params.alpha(), params.beta());
    match family {
        Family::P => {
            let c = alternating_series(sf + 1.0, sf - al - be + 1.0, sf - al + 1.0, lmax + 1, "(s - alpha + 1)_l")?;
            Ok(ModuleVector::from_pairs(
                c.iter().enumerate().map(|(l, &v)| (index - l as i64, C64::new(v, 0.0))),
            ))
        }
        Family::Q => {
            let c = alternating_series(-sf, -al, 1.0 - al - be, s + 1, "(1 - alpha - beta)_l")?;
            Ok(ModuleVector::from_pairs(
                c.iter().enumerate().map(|(l, &v)| (-(l as i64) - 1, C64::new(v, 0.0))),
            ))
        }
    }
}

/// Normalizations of the two pairings at index `n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Norms {
    /// `<P_n, LT Q_n>`.
    pub biorth: C64,
    /// `<J_n, J~_n>`.
    pub evp: C64,
}

/// `N_n = d_n(0) d*_n(n) (alpha + 1)_{n+1} / (alpha + beta + 1)_n` and
/// `f_n(0) f~_n(n) (n + alpha + 1)_n / (alpha + beta + 1)_n`.
pub fn biorth_norm(n: usize, params: &Params, gauge: &GaugeChoice) -> Result<Norms> {
    let (al, be) = (params.alpha(), params.beta());
    let d0 = d_n0(n, al, be, gauge.d_n0)?;
    let ratio = poch_ratio(al + 1.0, al + be + 1.0, n, "(alpha + beta + 1)_n")?;
    let biorth = gauge.dstar_mm * (d0 * ratio * (al + n as f64 + 1.0));
    let evp = poch_ratio(al + n as f64 + 1.0, al + be + 1.0, n, "(alpha + beta + 1)_n")?;
    Ok(Norms {
        biorth,
        evp: gauge.f_n0 * gauge.ftilde_nn * evp,
    })
}

/// Pairings between the two eigenvector families, computed with
/// double-double coefficients so that the cancellation between large terms
/// leaves a result accurate far below double precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyPairing {
    /// `<P_n, LT Q_m>`.
    Biorth,
    /// `<J_n, J~_m>`.
    Evp,
}

// the pairing without the complex gauge constants, in double-double
fn pairing_dd(kind: FamilyPairing, n: usize, m: usize, params: &Params, rule: InitialValue) -> Result<Dd> {
    if m > n {
        return Ok(Dd::ZERO);
    }
    let al = Dd::new(params.alpha());
    let be = Dd::new(params.beta());
    let span = n - m;
    let mut sum = Dd::ZERO;
    match kind {
        FamilyPairing::Biorth => {
            let d = p_series(n, al, be)?;
            let q = q_series(m, al, be, span)?;
            for (l, &ql) in q.iter().enumerate().take(span + 1) {
                let k = m + l;
                sum = sum + d[k] * ql * (al + (k as f64 + 1.0));
            }
            Ok(sum * d_n0(n, al, be, rule)?)
        }
        FamilyPairing::Evp => {
            let f = j_series(n, al, be)?;
            let g = jt_series(m, al, be, span)?;
            for l in 0..=span {
                sum = sum + f[m + l] * g[l];
            }
            Ok(sum)
        }
    }
}

/// `<P_n, LT Q_m>` or `<J_n, J~_m>`. Both vectors overlap on `m..=n`, so the
/// sum is finite and empty when `m > n`. The sum is formed in double-double;
/// its terms are far larger than the result once `n` exceeds a few units.
pub fn family_pairing(kind: FamilyPairing, n: usize, m: usize, params: &Params, gauge: &GaugeChoice) -> Result<C64> {
    let v = pairing_dd(kind, n, m, params, gauge.d_n0)?.to_f64();
    Ok(match kind {
        FamilyPairing::Biorth => gauge.dstar_mm * v,
        FamilyPairing::Evp => gauge.f_n0 * gauge.ftilde_nn * v,
    })
}

/// `|pairing - norm_n delta_{nm}|` under the default gauge, with both terms
/// kept in double-double until the difference is taken. This resolves the
/// residual below the spacing of doubles near large norms.
pub fn family_pairing_residual(kind: FamilyPairing, n: usize, m: usize, params: &Params) -> Result<f64> {
    let v = pairing_dd(kind, n, m, params, InitialValue::Natural)?;
    if m != n {
        return Ok(v.to_f64().abs());
    }
    let (al, be) = (Dd::new(params.alpha()), Dd::new(params.beta()));
    let expected = match kind {
        FamilyPairing::Biorth => al + (n as f64 + 1.0),
        FamilyPairing::Evp => poch_ratio(al + (n as f64 + 1.0), al + be + 1.0, n, "(alpha + beta + 1)_n")?,
    };
    Ok((v - expected).to_f64().abs())
}
