use super::circle::{circle_integrals_dd, CirclePoint};
use super::interval::{interval_integrals, IntervalPoint};
use super::QuadratureSpec;
use crate::dd::{horner, CDd, Dd};
use crate::error::{Error, Result};
use crate::poly::{askey_p_real, jacobi_phat_real};
use crate::scalar::{gamma_ratio, near_integer, sin_pi};
use crate::{Params, C64};

/// Relative tolerance of a diagonal entry against its closed form.
pub const DIAGONAL_REL_TOL: f64 = 1e-7;
/// Tolerance of an off-diagonal entry, relative to the geometric mean of
/// the two diagonal norms it sits between.
pub const OFF_DIAGONAL_REL_TOL: f64 = 1e-8;

/// One entry of an orthogonality relation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthogonalityReport {
    pub m: usize,
    pub n: usize,
    pub computed: C64,
    pub expected: C64,
    pub abs_residual: f64,
    /// `abs_residual` over `|expected|` on the diagonal and over
    /// `sqrt(norm_m norm_n)` off it.
    pub rel_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl OrthogonalityReport {
    fn new(m: usize, n: usize, computed: C64, norms: &[f64]) -> OrthogonalityReport {
        let (expected, reference, tolerance) = if m == n {
            (norms[m], norms[m].abs(), DIAGONAL_REL_TOL)
        } else {
            (0.0, (norms[m] * norms[n]).abs().sqrt(), OFF_DIAGONAL_REL_TOL)
        };
        let expected = C64::new(expected, 0.0);
        let abs_residual = (computed - expected).norm();
        let rel_residual = abs_residual / reference;
        OrthogonalityReport {
            m,
            n,
            computed,
            expected,
            abs_residual,
            rel_residual,
            tolerance,
            pass: rel_residual < tolerance,
        }
    }
}

/// Squared norm `h_n` of the monic Jacobi polynomial for the weight
/// `x^(-beta) (1 - x)^(alpha + beta)` on `[0, 1]`.
pub fn h_norm(n: usize, params: &Params) -> Result<f64> {
    let (a, b) = (params.alpha(), params.beta());
    let nf = n as f64;
    gamma_ratio(
        &[nf + 1.0, nf - b + 1.0, nf + a + 1.0, nf + a + b + 1.0],
        &[2.0 * nf + a + 1.0, 2.0 * nf + a + 2.0],
    )
}

/// Diagonal of the Askey biorthogonality relation:
/// `m! Gamma(m + alpha + beta + 1) / (Gamma(m + alpha + 1) Gamma(m + beta + 1))`.
pub fn askey_biorth_norm(m: usize, params: &Params) -> Result<f64> {
    let (a, b) = (params.alpha(), params.beta());
    let mf = m as f64;
    gamma_ratio(&[mf + 1.0, mf + a + b + 1.0], &[mf + a + 1.0, mf + b + 1.0])
}

fn check_weight(params: &Params) -> Result<()> {
    if params.alpha() + params.beta() <= -1.0 {
        return Err(Error::InvalidParams(format!(
            "alpha + beta = {} must exceed -1",
            params.alpha() + params.beta()
        )));
    }
    Ok(())
}

fn check_jacobi(params: &Params, circle: bool) -> Result<()> {
    check_weight(params)?;
    let b = params.beta();
    if b >= 1.0 {
        return Err(Error::InvalidParams(format!("beta = {b} must be below 1")));
    }
    if circle && near_integer(b) {
        return Err(Error::InvalidParams(format!("beta = {b} is an integer")));
    }
    Ok(())
}

fn dd_polys<F>(max_deg: usize, build: F) -> Result<Vec<Vec<Dd>>>
where
    F: Fn(usize) -> Result<Vec<Dd>>,
{
    (0..=max_deg).map(build).collect()
}

fn reports(pairs: &[(usize, usize)], values: &[C64], norms: &[f64]) -> Vec<OrthogonalityReport> {
    pairs
        .iter()
        .zip(values)
        .map(|(&(m, n), &v)| OrthogonalityReport::new(m, n, v, norms))
        .collect()
}

fn all_pairs(nmax: usize) -> Vec<(usize, usize)> {
    (0..=nmax).flat_map(|m| (0..=nmax).map(move |n| (m, n))).collect()
}

fn askey_values(pairs: &[(usize, usize)], params: &Params, spec: &QuadratureSpec) -> Result<Vec<C64>> {
    check_weight(params)?;
    let (a, b) = (params.alpha(), params.beta());
    let top = pairs.iter().map(|&(m, n)| m.max(n)).max().unwrap_or(0);
    let (ad, bd) = (Dd::new(a), Dd::new(b));
    let p = dd_polys(top, |k| askey_p_real(k, ad, bd))?;
    let q = dd_polys(top, |k| askey_p_real(k, bd, ad))?;
    let integrand = |pt: &CirclePoint, out: &mut [CDd]| {
        let w = -(pt.neg_z_pow(-1.0 - b) * pt.one_minus_z_pow(a + b));
        let zi = pt.z_inv();
        let pv: Vec<CDd> = p.iter().map(|c| horner(c, pt.z)).collect();
        let qv: Vec<CDd> = q.iter().map(|c| horner(c, zi)).collect();
        for (slot, &(m, n)) in out.iter_mut().zip(pairs) {
            *slot = w * pv[m] * qv[n];
        }
    };
    let v = circle_integrals_dd(pairs.len(), integrand, spec)?;
    Ok(v.into_iter().map(CDd::to_c64).collect())
}

fn askey_norms(top: usize, params: &Params) -> Result<Vec<f64>> {
    (0..=top).map(|k| askey_biorth_norm(k, params)).collect()
}

/// `-(1/2 pi i) \oint (-z)^(-1-beta) (1-z)^(alpha+beta) P_m(z) Q_n(1/z) dz`
/// over the unit circle, against its expected value.
pub fn verify_askey_biorthogonality(
    m: usize,
    n: usize,
    params: &Params,
    spec: &QuadratureSpec,
) -> Result<OrthogonalityReport> {
    let v = askey_values(&[(m, n)], params, spec)?;
    let norms = askey_norms(m.max(n), params)?;
    Ok(OrthogonalityReport::new(m, n, v[0], &norms))
}

/// All entries `0 <= m, n <= nmax` of [`verify_askey_biorthogonality`],
/// row-major, from one shared set of nodes.
pub fn askey_biorthogonality_matrix(
    nmax: usize,
    params: &Params,
    spec: &QuadratureSpec,
) -> Result<Vec<OrthogonalityReport>> {
    let pairs = all_pairs(nmax);
    let v = askey_values(&pairs, params, spec)?;
    Ok(reports(&pairs, &v, &askey_norms(nmax, params)?))
}

fn jacobi_polys(top: usize, params: &Params) -> Result<Vec<Vec<Dd>>> {
    let (ad, bd) = (Dd::new(params.alpha()), Dd::new(params.beta()));
    dd_polys(top, |k| jacobi_phat_real(k, ad, bd))
}

fn jacobi_norms(top: usize, params: &Params) -> Result<Vec<f64>> {
    (0..=top).map(|k| h_norm(k, params)).collect()
}

fn jacobi_circle_values(pairs: &[(usize, usize)], params: &Params, spec: &QuadratureSpec) -> Result<Vec<C64>> {
    check_jacobi(params, true)?;
    let (a, b) = (params.alpha(), params.beta());
    let top = pairs.iter().map(|&(m, n)| m.max(n)).max().unwrap_or(0);
    let polys = jacobi_polys(top, params)?;
    // Gamma(beta) Gamma(1 - beta) = pi / sin(pi beta)
    let pref = -std::f64::consts::PI / sin_pi(C64::new(b, 0.0)).re;
    let integrand = |pt: &CirclePoint, out: &mut [CDd]| {
        let w = pt.neg_z_pow(-b) * pt.one_minus_z_pow(a + b);
        let pv: Vec<CDd> = polys.iter().map(|c| horner(c, pt.z)).collect();
        for (slot, &(m, n)) in out.iter_mut().zip(pairs) {
            *slot = w * pv[m] * pv[n];
        }
    };
    let v = circle_integrals_dd(pairs.len(), integrand, spec)?;
    Ok(v.into_iter().map(|x| x.to_c64() * pref).collect())
}

fn jacobi_interval_values(pairs: &[(usize, usize)], params: &Params, spec: &QuadratureSpec) -> Result<Vec<C64>> {
    check_jacobi(params, false)?;
    let (a, b) = (params.alpha(), params.beta());
    let top = pairs.iter().map(|&(m, n)| m.max(n)).max().unwrap_or(0);
    let polys: Vec<Vec<f64>> = jacobi_polys(top, params)?
        .into_iter()
        .map(|c| c.into_iter().map(Dd::to_f64).collect())
        .collect();
    let integrand = |pt: &IntervalPoint, out: &mut [f64]| {
        let w = pt.x.powf(-b) * pt.one_minus_x.powf(a + b);
        let pv: Vec<f64> = polys
            .iter()
            .map(|c| c.iter().rev().fold(0.0, |acc, &v| acc * pt.x + v))
            .collect();
        for (slot, &(m, n)) in out.iter_mut().zip(pairs) {
            *slot = w * pv[m] * pv[n];
        }
    };
    let v = interval_integrals(pairs.len(), integrand, spec)?;
    Ok(v.into_iter().map(|x| C64::new(x, 0.0)).collect())
}

/// `-(1/2 pi i) (pi / sin(pi beta)) \oint (-z)^(-beta) (1-z)^(alpha+beta)
/// P̂_n(z) P̂_m(z) dz` over the unit circle, expected `h_n delta_{mn}`.
pub fn verify_jacobi_circle(m: usize, n: usize, params: &Params, spec: &QuadratureSpec) -> Result<OrthogonalityReport> {
    let v = jacobi_circle_values(&[(m, n)], params, spec)?;
    Ok(OrthogonalityReport::new(m, n, v[0], &jacobi_norms(m.max(n), params)?))
}

/// `\int_0^1 x^(-beta) (1-x)^(alpha+beta) P̂_m(x) P̂_n(x) dx`, expected
/// `h_n delta_{mn}`.
pub fn verify_jacobi_interval(
    m: usize,
    n: usize,
    params: &Params,
    spec: &QuadratureSpec,
) -> Result<OrthogonalityReport> {
    let v = jacobi_interval_values(&[(m, n)], params, spec)?;
    Ok(OrthogonalityReport::new(m, n, v[0], &jacobi_norms(m.max(n), params)?))
}

/// Which form of the Jacobi orthogonality relation a matrix is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiForm {
    Circle,
    Interval,
}

/// All entries `0 <= m, n <= nmax` of the Jacobi relation in the given form.
pub fn jacobi_orthogonality_matrix(
    form: JacobiForm,
    nmax: usize,
    params: &Params,
    spec: &QuadratureSpec,
) -> Result<Vec<OrthogonalityReport>> {
    let pairs = all_pairs(nmax);
    let v = match form {
        JacobiForm::Circle => jacobi_circle_values(&pairs, params, spec)?,
        JacobiForm::Interval => jacobi_interval_values(&pairs, params, spec)?,
    };
    Ok(reports(&pairs, &v, &jacobi_norms(nmax, params)?))
}

/// `|circle form - interval form|` of the `(m, n)` Jacobi integral.
pub fn contour_equivalence(m: usize, n: usize, params: &Params, spec: &QuadratureSpec) -> Result<f64> {
    let c = jacobi_circle_values(&[(m, n)], params, spec)?[0];
    let i = jacobi_interval_values(&[(m, n)], params, spec)?[0];
    Ok((c - i).norm())
}

/// `e^{i pi beta} (1 - e^{-2 pi i beta}) / (2 i sin(pi beta))`, the factor
/// left over when the circle is collapsed onto the cut `[0, 1]`; it is 1.
pub fn contour_prefactor(beta: f64) -> Result<C64> {
    let s = sin_pi(C64::new(beta, 0.0));
    if s.norm() == 0.0 {
        return Err(Error::InvalidParams(format!("beta = {beta} is an integer")));
    }
    let i = C64::new(0.0, 1.0);
    let pi = std::f64::consts::PI;
    Ok((i * pi * beta).exp() * (1.0 - (-2.0 * pi * beta * i).exp()) / (2.0 * i * s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr() -> Params {
        Params::new(0.7, 0.3).unwrap()
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn h_norm_examples() {
        let h0 = h_norm(0, &pr()).unwrap();
        assert!((h0 - gamma_ratio(&[0.7, 2.0], &[2.7]).unwrap()).abs() < 1e-15);
        assert!((h_norm(0, &Params::relaxed(0.0, 0.0).unwrap()).unwrap() - 1.0).abs() < 1e-15);
        // 40-digit value
        assert!((h_norm(2, &pr()).unwrap() - 0.002_578_359_448_965_729_9).abs() < 1e-17);
    }

    #[test]
    fn askey_examples() {
        let r = verify_askey_biorthogonality(0, 0, &pr(), &spec()).unwrap();
        let want = gamma_ratio(&[2.0], &[1.7, 1.3]).unwrap();
        assert!((r.expected.re - want).abs() < 1e-15);
        assert!(r.pass, "{r:?}");
        let r = verify_askey_biorthogonality(2, 5, &pr(), &spec()).unwrap();
        assert!(r.computed.norm() < 1e-9 && r.pass);
        let r = verify_askey_biorthogonality(3, 3, &pr(), &spec()).unwrap();
        assert!(r.rel_residual < 1e-8, "{r:?}");
    }

    #[test]
    fn jacobi_examples() {
        let r = verify_jacobi_circle(1, 2, &pr(), &spec()).unwrap();
        assert!(r.computed.norm() < 1e-9);
        let r = verify_jacobi_circle(0, 0, &pr(), &spec()).unwrap();
        assert!(r.rel_residual < 1e-8);
        let r = verify_jacobi_circle(1, 1, &Params::new(0.0, 0.5).unwrap(), &spec()).unwrap();
        assert!(r.rel_residual < 1e-8, "{r:?}");
        let r = verify_jacobi_interval(0, 3, &pr(), &spec()).unwrap();
        assert!(r.computed.norm() < 1e-10);
        let r = verify_jacobi_interval(0, 0, &pr(), &spec()).unwrap();
        assert!(r.abs_residual < 1e-9);
        let r = verify_jacobi_interval(4, 4, &pr(), &spec()).unwrap();
        assert!(r.abs_residual < 1e-8 && r.pass);
    }

    #[test]
    fn contour_examples() {
        assert!(contour_equivalence(0, 0, &pr(), &spec()).unwrap() < 1e-8);
        assert!(contour_equivalence(1, 2, &pr(), &spec()).unwrap() < 1e-9);
        assert!((contour_prefactor(0.3).unwrap() - 1.0).norm() < 1e-14);
    }

    #[test]
    fn guards() {
        let p = Params::relaxed(-0.5, -0.7).unwrap();
        assert!(matches!(
            verify_askey_biorthogonality(0, 0, &p, &spec()),
            Err(Error::InvalidParams(_))
        ));
        let p = Params::new(0.2, 1.5).unwrap();
        assert!(verify_jacobi_interval(0, 0, &p, &spec()).is_err());
        assert!(contour_prefactor(2.0).is_err());
    }
}
