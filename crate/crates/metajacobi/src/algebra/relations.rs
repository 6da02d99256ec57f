use std::fmt;
use std::str::FromStr;

use super::diffop::{poly_distance, DiffOp};
use super::realize::{embed_from_su11, realize, su11_images, GeneratorTag as G};
use crate::error::{Error, Result};
use crate::poly::{askey_p, PolyCoeffs};
use crate::{Params, C64};

/// Operator identities of the algebra that can be checked in the
/// differential realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `[L, M] = L^2 - (alpha + 1) L - M`.
    ComLM,
    /// `[L, X] = X - 1`.
    ComLX,
    /// `[M, X] = {X, L} - (alpha + 1) X + beta`.
    ComMX,
    /// `[J0, J+] = J+` for the images of the su(1,1) generators.
    Su11ZeroPlus,
    /// `[J0, J-] = -J-`.
    Su11ZeroMinus,
    /// `[J+, J-] = -2 J0`.
    Su11PlusMinus,
    /// Mapping `L, M, X` to su(1,1) and back is the identity.
    RoundTrip,
    /// The su(1,1) images coincide with the Barut-Ghirardello operators.
    BgRealization,
    /// `[K1, K2] = K3`.
    JacobiK1,
    /// `[K2, K3] = a K2^2 + b K2`.
    JacobiK2,
    /// `[K3, K1] = a {K1, K2} + b K1 + c K2 + d` with `d = (alpha + 1) beta - Q - 1`.
    JacobiK3,
    /// `Q` acts as the scalar `2 alpha beta - alpha + beta - 1`.
    CasimirValue,
    /// `Q = 2 J^2 - (alpha - beta + 1)^2 / 2`.
    CasimirSu11,
    /// `(alpha + 1) beta - Q - 1 = alpha (1 - beta)` at the value of `Q`.
    JacobiD,
}

impl Relation {
    pub const ALL: [Relation; 14] = [
        Relation::ComLM,
        Relation::ComLX,
        Relation::ComMX,
        Relation::Su11ZeroPlus,
        Relation::Su11ZeroMinus,
        Relation::Su11PlusMinus,
        Relation::RoundTrip,
        Relation::BgRealization,
        Relation::JacobiK1,
        Relation::JacobiK2,
        Relation::JacobiK3,
        Relation::CasimirValue,
        Relation::CasimirSu11,
        Relation::JacobiD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::ComLM => "COM_LM",
            Relation::ComLX => "COM_LX",
            Relation::ComMX => "COM_MX",
            Relation::Su11ZeroPlus => "SU11_J0_JPLUS",
            Relation::Su11ZeroMinus => "SU11_J0_JMINUS",
            Relation::Su11PlusMinus => "SU11_JPLUS_JMINUS",
            Relation::RoundTrip => "ROUND_TRIP",
            Relation::BgRealization => "BG_REALIZATION",
            Relation::JacobiK1 => "JACOBI_K1",
            Relation::JacobiK2 => "JACOBI_K2",
            Relation::JacobiK3 => "JACOBI_K3",
            Relation::CasimirValue => "CASIMIR_VALUE",
            Relation::CasimirSu11 => "CASIMIR_SU11",
            Relation::JacobiD => "JACOBI_D",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown relation {s}")))
    }
}

fn anti(a: &DiffOp, b: &DiffOp) -> DiffOp {
    &(a * b) + &(b * a)
}

fn com(a: &DiffOp, b: &DiffOp) -> DiffOp {
    &(a * b) - &(b * a)
}

/// Largest coefficient of `LHS - RHS` for the chosen relation.
pub fn relation_residual(relation: Relation, params: &Params) -> f64 {
    let (a, b) = (params.alpha(), params.beta());
    let l = realize(G::L, params);
    let m = realize(G::M, params);
    let x = realize(G::X, params);
    let diff = match relation {
        Relation::ComLM => {
            let rhs = &(&(&l * &l) - &l.scale_real(a + 1.0)) - &m;
            &com(&l, &m) - &rhs
        }
        Relation::ComLX => &com(&l, &x) - &x.plus_scalar(-1.0),
        Relation::ComMX => {
            let rhs = (&anti(&x, &l) - &x.scale_real(a + 1.0)).plus_scalar(b);
            &com(&m, &x) - &rhs
        }
        Relation::Su11ZeroPlus => {
            let [j0, jp, _] = su11_images(params);
            &com(&j0, &jp) - &jp
        }
        Relation::Su11ZeroMinus => {
            let [j0, _, jm] = su11_images(params);
            &com(&j0, &jm) + &jm
        }
        Relation::Su11PlusMinus => {
            let [j0, jp, jm] = su11_images(params);
            &com(&jp, &jm) + &j0.scale_real(2.0)
        }
        Relation::RoundTrip => {
            let back = embed_from_su11(&su11_images(params), params);
            let worst = [&back[0] - &l, &back[1] - &m, &back[2] - &x]
                .iter()
                .map(DiffOp::max_coeff)
                .fold(0.0, f64::max);
            return worst;
        }
        Relation::BgRealization => {
            let img = su11_images(params);
            let bg = [realize(G::J0, params), realize(G::JPlus, params), realize(G::JMinus, params)];
            return img
                .iter()
                .zip(&bg)
                .map(|(p, q)| (p - q).max_coeff())
                .fold(0.0, f64::max);
        }
        Relation::JacobiK1 => {
            let k3 = realize(G::K3, params);
            &com(&realize(G::K1, params), &realize(G::K2, params)) - &k3
        }
        Relation::JacobiK2 => {
            let k2 = realize(G::K2, params);
            let k3 = realize(G::K3, params);
            let rhs = &(&k2 * &k2).scale_real(2.0) - &k2.scale_real(2.0);
            &com(&k2, &k3) - &rhs
        }
        Relation::JacobiK3 => {
            let k1 = realize(G::K1, params);
            let k2 = realize(G::K2, params);
            let k3 = realize(G::K3, params);
            let q = realize(G::CasimirQ, params);
            let d = (-&q).plus_scalar((a + 1.0) * b - 1.0);
            let c = -a * (a + 2.0);
            let rhs = &(&(&anti(&k1, &k2).scale_real(2.0) - &k1.scale_real(2.0)) + &k2.scale_real(c)) + &d;
            &com(&k3, &k1) - &rhs
        }
        Relation::CasimirValue => realize(G::CasimirQ, params).plus_scalar(-params.casimir()),
        Relation::CasimirSu11 => {
            let [j0, jp, jm] = su11_images(params);
            let j2 = &(&(&j0 * &j0) - &j0) - &(&jp * &jm);
            let rhs = j2.scale_real(2.0).plus_scalar(-0.5 * (a - b + 1.0).powi(2));
            &realize(G::CasimirQ, params) - &rhs
        }
        Relation::JacobiD => {
            let d = (a + 1.0) * b - params.casimir() - 1.0;
            return (d - a * (1.0 - b)).abs();
        }
    };
    diff.max_coeff()
}

/// The polynomial identities tying `P_n` to the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BispectralIdentity {
    /// `M P_n = n L P_n`.
    Gevp,
    /// `R P_n = z L P_n`.
    RFactor,
    /// `L P_n = (n + alpha + 1) P_n - n (alpha + beta + n)/(alpha + n) P_{n-1}`.
    LOnP,
    /// `M P_n = n (n + alpha + 1) P_n - n^2 (alpha + beta + n)/(alpha + n) P_{n-1}`.
    MOnP,
    /// `R P_n = (n + alpha + 1) P_{n+1} - (beta + n) P_n`.
    ROnP,
    /// `R~ P_n = n (n + alpha + 1) P_{n+1} - n (beta + n) P_n`.
    RTildeOnP,
}

impl BispectralIdentity {
    pub const ALL: [BispectralIdentity; 6] = [
        BispectralIdentity::Gevp,
        BispectralIdentity::RFactor,
        BispectralIdentity::LOnP,
        BispectralIdentity::MOnP,
        BispectralIdentity::ROnP,
        BispectralIdentity::RTildeOnP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BispectralIdentity::Gevp => "M_EQ_NL",
            BispectralIdentity::RFactor => "R_EQ_ZL",
            BispectralIdentity::LOnP => "L_ON_P",
            BispectralIdentity::MOnP => "M_ON_P",
            BispectralIdentity::ROnP => "R_ON_P",
            BispectralIdentity::RTildeOnP => "RTILDE_ON_P",
        }
    }
}

fn combo(terms: &[(f64, &PolyCoeffs)]) -> PolyCoeffs {
    let len = terms.iter().map(|(_, p)| p.coeffs().len()).max().unwrap_or(1);
    let mut out = vec![C64::new(0.0, 0.0); len];
    for (w, p) in terms {
        for (o, c) in out.iter_mut().zip(p.coeffs()) {
            *o += c * *w;
        }
    }
    PolyCoeffs::new(out)
}

/// Residual of each identity in [`BispectralIdentity`] at degree `n`.
pub fn bispectral_residuals(n: usize, params: &Params) -> Result<Vec<(BispectralIdentity, f64)>> {
    let (a, b) = (params.alpha(), params.beta());
    let nf = n as f64;
    let p = askey_p(n, params)?;
    let next = askey_p(n + 1, params)?;
    let prev = if n == 0 { PolyCoeffs::new(vec![]) } else { askey_p(n - 1, params)? };
    // the P_{n-1} weights carry a factor n, so alpha + n = 0 only matters for n > 0
    let w = if n == 0 {
        0.0
    } else {
        if a + nf == 0.0 {
            return Err(Error::DivisionByZero("alpha + n"));
        }
        nf * (a + b + nf) / (a + nf)
    };
    let lp = realize(G::L, params).apply(&p)?;
    let mp = realize(G::M, params).apply(&p)?;
    let rp = realize(G::R, params).apply(&p)?;
    let rtp = realize(G::RTilde, params).apply(&p)?;
    let zlp = realize(G::X, params).apply(&lp)?;
    let shift = nf + a + 1.0;
    let mut out = Vec::with_capacity(6);
    for id in BispectralIdentity::ALL {
        let r = match id {
            BispectralIdentity::Gevp => poly_distance(&mp, &combo(&[(nf, &lp)])),
            BispectralIdentity::RFactor => poly_distance(&rp, &zlp),
            BispectralIdentity::LOnP => poly_distance(&lp, &combo(&[(shift, &p), (-w, &prev)])),
            BispectralIdentity::MOnP => {
                poly_distance(&mp, &combo(&[(nf * shift, &p), (-nf * w, &prev)]))
            }
            BispectralIdentity::ROnP => poly_distance(&rp, &combo(&[(shift, &next), (-(b + nf), &p)])),
            BispectralIdentity::RTildeOnP => {
                poly_distance(&rtp, &combo(&[(nf * shift, &next), (-nf * (b + nf), &p)]))
            }
        };
        out.push((id, r));
    }
    Ok(out)
}

/// Maximum of [`bispectral_residuals`].
pub fn bispectral_residual(n: usize, params: &Params) -> Result<f64> {
    Ok(bispectral_residuals(n, params)?
        .into_iter()
        .map(|(_, r)| r)
        .fold(0.0, f64::max))
}

/// Largest coefficient of `L P_n(alpha, beta) - (alpha + n + 1) P_n(alpha + 1, beta - 1)`
/// and of `M P_n(alpha, beta) - n (alpha + n + 1) P_n(alpha + 1, beta - 1)`.
pub fn contiguity_residual(n: usize, params: &Params) -> Result<f64> {
    let sh = params.shifted();
    let shifted = Params::new(sh.alpha(), sh.beta())?;
    let nf = n as f64;
    let k = params.alpha() + nf + 1.0;
    let p = askey_p(n, params)?;
    let ps = askey_p(n, &shifted)?;
    let lp = realize(G::L, params).apply(&p)?;
    let mp = realize(G::M, params).apply(&p)?;
    let r1 = poly_distance(&lp, &combo(&[(k, &ps)]));
    let r2 = poly_distance(&mp, &combo(&[(nf * k, &ps)]));
    Ok(r1.max(r2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr() -> Params {
        Params::new(0.7, 0.3).unwrap()
    }

    #[test]
    fn every_relation_at_reference_point() {
        for r in Relation::ALL {
            let v = relation_residual(r, &pr());
            assert!(v < 1e-13, "{r}: {v}");
        }
    }

    #[test]
    fn casimir_at_origin() {
        let p = Params::relaxed(0.0, 0.0).unwrap();
        assert!(relation_residual(Relation::CasimirValue, &p) < 1e-13);
    }

    #[test]
    fn broken_relation_is_detected() {
        // the identity itself is not a commutator; a wrong sign must show up
        let p = pr();
        let l = realize(G::L, &p);
        let x = realize(G::X, &p);
        assert!((&com(&l, &x) - &x.plus_scalar(1.0)).max_coeff() > 1.0);
    }

    #[test]
    fn bispectral_examples() {
        assert!(bispectral_residual(0, &pr()).unwrap() < 1e-13);
        assert!(bispectral_residual(1, &pr()).unwrap() < 1e-12);
        assert!(bispectral_residual(12, &pr()).unwrap() < 1e-11);
    }

    #[test]
    fn contiguity_examples() {
        assert_eq!(contiguity_residual(0, &pr()).unwrap(), 0.0);
        assert!(contiguity_residual(1, &pr()).unwrap() < 1e-13);
        assert!(contiguity_residual(10, &pr()).unwrap() < 1e-11);
    }

    #[test]
    fn contiguity_guard_on_shifted_pair() {
        // a generic pair always shifts to a generic pair; a relaxed one may not
        let q = Params::relaxed(-3.0, 0.3).unwrap();
        assert!(matches!(contiguity_residual(1, &q), Err(Error::InvalidParams(_))));
    }
}
