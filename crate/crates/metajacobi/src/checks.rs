//! Named verification suites. Each check records a residual, the tolerance
//! it is held to and whether it passed; a numeric error inside a check is
//! recorded on that check instead of aborting the suite.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{bispectral_residuals, contiguity_residual, relation_residual, Relation};
use crate::error::{Error, Result};
use crate::poly::{askey_p, askey_p_by_recurrence, jacobi_phat};
use crate::quadrature::{
    askey_biorthogonality_matrix, contour_equivalence, contour_prefactor, jacobi_orthogonality_matrix, JacobiForm,
    OrthogonalityReport, QuadratureSpec,
};
use crate::repmod::{
    act, family_pairing_residual, gevp_p_coeffs, gevp_q_coeffs, jacobi_overlap_scale, negative_index_coeffs,
    overlap, overlap_closed_form, pairing, transpose_consistency, truncated_relation_residual, Family,
    FamilyPairing, GaugeChoice, InitialValue, ModuleOp, ModuleRelation, OverlapKind, SplitKind, DEFAULT_LMAX,
};
use crate::scalar::{identity_residual, sample_identity, IdentityTag};
use crate::{Params, C64};

/// Tolerances of the non-quadrature suites.
pub const ALGEBRA_TOL: f64 = 1e-12;
pub const BISPECTRAL_TOL: f64 = 1e-11;
pub const MODULE_TOL: f64 = 1e-11;
pub const OVERLAP_SPLIT_TOL: f64 = 1e-10;
pub const KUMMER_TOL: f64 = 1e-10;
pub const NEGATIVE_INDEX_TOL: f64 = 1e-12;
/// Seeded evaluations per identity in the Kummer suite.
pub const KUMMER_SAMPLES: usize = 24;
const KUMMER_SEED: u64 = 0x6b75_6d6d;

/// Largest degree of the bispectral and recurrence checks.
pub const BISPECTRAL_NMAX: usize = 20;
/// Window size of the truncated-matrix checks.
pub const MODULE_WINDOW: usize = 30;
/// Largest index of the pairing checks.
pub const PAIRING_NMAX: usize = 12;
/// Largest index of the overlap checks.
pub const OVERLAP_MMAX: usize = 5;
pub const BIORTH_NMAX: usize = 8;
pub const JACOBI_NMAX: usize = 6;
/// Largest `|index|` of the negative-index checks.
pub const NEGATIVE_INDEX_MAX: usize = 6;

/// Points with `|z| < 1` and `|1 - z| > 1`, where both the series and the
/// closed forms of the infinite overlaps converge.
pub const OVERLAP_POINTS: [(f64, f64); 8] = [
    (-0.5, 0.0),
    (-0.3, 0.4),
    (-0.3, -0.4),
    (-0.7, 0.2),
    (-0.2, -0.1),
    (-0.6, -0.5),
    (-0.1, 0.6),
    (-0.85, 0.0),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Bispectral,
    Module,
    Biorth,
    Jacobi,
    Kummer,
    NegativeIndex,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Algebra,
        Suite::Bispectral,
        Suite::Module,
        Suite::Biorth,
        Suite::Jacobi,
        Suite::Kummer,
        Suite::NegativeIndex,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Bispectral => "bispectral",
            Suite::Module => "module",
            Suite::Biorth => "biorth",
            Suite::Jacobi => "jacobi",
            Suite::Kummer => "kummer",
            Suite::NegativeIndex => "negative-index",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s}")))
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Set when the check could not be evaluated.
    pub error: Option<String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> CheckResult {
        CheckResult {
            name: name.into(),
            residual,
            tolerance,
            pass: residual < tolerance,
            error: None,
        }
    }

    fn from_result(name: impl Into<String>, r: Result<f64>, tolerance: f64) -> CheckResult {
        match r {
            Ok(v) => CheckResult::new(name, v, tolerance),
            Err(e) => CheckResult {
                name: name.into(),
                residual: f64::NAN,
                tolerance,
                pass: false,
                error: Some(e.to_string()),
            },
        }
    }

    fn from_report(name: &str, r: &OrthogonalityReport) -> CheckResult {
        CheckResult {
            name: format!("{name}({},{})", r.m, r.n),
            residual: r.rel_residual,
            tolerance: r.tolerance,
            pass: r.pass,
            error: None,
        }
    }
}

/// The checks of one suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub params: Params,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Runs every check of `suite`; `All` concatenates the others in order.
pub fn run_suite(suite: Suite, params: &Params, spec: &QuadratureSpec) -> SuiteReport {
    let checks = match suite {
        Suite::Algebra => algebra_checks(params),
        Suite::Bispectral => bispectral_checks(params),
        Suite::Module => module_checks(params),
        Suite::Biorth => biorth_checks(params, spec),
        Suite::Jacobi => jacobi_checks(params, spec),
        Suite::Kummer => kummer_checks(),
        Suite::NegativeIndex => negative_index_checks(params),
        Suite::All => Suite::ALL[..7]
            .iter()
            .flat_map(|&s| run_suite(s, params, spec).checks)
            .collect(),
    };
    SuiteReport {
        suite,
        params: *params,
        checks,
    }
}

fn algebra_checks(params: &Params) -> Vec<CheckResult> {
    Relation::ALL
        .iter()
        .map(|&r| CheckResult::new(r.name(), relation_residual(r, params), ALGEBRA_TOL))
        .collect()
}

/// Largest `|P_n by recurrence - P_n| / (1 + |P_n|)` over `n <= nmax` and
/// `points` equispaced points of the unit circle.
pub fn recurrence_agreement(nmax: usize, points: usize, params: &Params) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for n in 0..=nmax {
        let p = askey_p(n, params)?;
        for j in 0..points {
            let z = C64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / points as f64);
            let direct = p.eval(z);
            let rec = askey_p_by_recurrence(n, params, z)?;
            worst = worst.max((rec - direct).norm() / (1.0 + direct.norm()));
        }
    }
    Ok(worst)
}

fn bispectral_checks(params: &Params) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for n in 0..=BISPECTRAL_NMAX {
        match bispectral_residuals(n, params) {
            Ok(list) => {
                for (id, r) in list {
                    out.push(CheckResult::new(format!("{}(n={n})", id.name()), r, BISPECTRAL_TOL));
                }
            }
            Err(e) => out.push(CheckResult::from_result(format!("BISPECTRAL(n={n})"), Err(e), BISPECTRAL_TOL)),
        }
        out.push(CheckResult::from_result(
            format!("CONTIGUITY(n={n})"),
            contiguity_residual(n, params),
            BISPECTRAL_TOL,
        ));
    }
    out.push(CheckResult::from_result(
        "REC_P",
        recurrence_agreement(BISPECTRAL_NMAX, 64, params),
        BISPECTRAL_TOL,
    ));
    out
}

/// Largest `|pairing(n, m) - norm_n delta_{nm}|` over `m <= PAIRING_NMAX`.
fn pairing_row(kind: FamilyPairing, n: usize, params: &Params) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for m in 0..=PAIRING_NMAX {
        worst = worst.max(family_pairing_residual(kind, n, m, params)?);
    }
    Ok(worst)
}

/// Largest `|closed form - series| / (1 + |series|)` of an infinite overlap
/// over `m <= OVERLAP_MMAX` and [`OVERLAP_POINTS`].
pub fn overlap_split_agreement(kind: SplitKind, params: &Params) -> Result<f64> {
    let series_kind = match kind {
        SplitKind::QltSplit => OverlapKind::QLT,
        SplitKind::JTildeSplit => OverlapKind::JTilde,
    };
    let gauge = GaugeChoice::default();
    let mut worst: f64 = 0.0;
    for m in 0..=OVERLAP_MMAX {
        for &(re, im) in &OVERLAP_POINTS {
            let z = C64::new(re, im);
            let s = overlap(series_kind, m, z, params, &gauge, DEFAULT_LMAX)?;
            let c = overlap_closed_form(kind, m, z, params)?;
            worst = worst.max((c.sum - s).norm() / (1.0 + s.norm()));
        }
    }
    Ok(worst)
}

/// Largest relative deviation of the `P` and `J` overlaps from the Askey
/// and monic Jacobi polynomials, over `n <= 8`, [`OVERLAP_POINTS`] and 16
/// points of the unit circle.
pub fn overlap_polynomial_agreement(kind: OverlapKind, params: &Params) -> Result<f64> {
    let gauge = GaugeChoice::default();
    let circle = (0..16).map(|j| C64::from_polar(1.0, std::f64::consts::PI * (2 * j + 1) as f64 / 16.0));
    let pts: Vec<C64> = OVERLAP_POINTS.iter().map(|&(r, i)| C64::new(r, i)).chain(circle).collect();
    let mut worst: f64 = 0.0;
    for n in 0..=8 {
        let (poly, scale) = match kind {
            OverlapKind::P => (askey_p(n, params)?, 1.0),
            OverlapKind::J => (jacobi_phat(n, params)?, jacobi_overlap_scale(n, params)?),
            _ => return Err(Error::Domain(format!("{kind} is not a polynomial overlap"))),
        };
        for &z in &pts {
            let v = overlap(kind, n, z, params, &gauge, 0)? / scale;
            let want = poly.eval(z);
            worst = worst.max((v - want).norm() / (1.0 + want.norm()));
        }
    }
    Ok(worst)
}

fn module_checks(params: &Params) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = ModuleRelation::ALL
        .iter()
        .map(|&r| {
            CheckResult::new(
                format!("TRUNC_{}(K={MODULE_WINDOW})", r.name()),
                truncated_relation_residual(r, MODULE_WINDOW, params),
                MODULE_TOL,
            )
        })
        .collect();
    out.push(CheckResult::new("TRANSPOSE(K=12)", transpose_consistency(12, params), MODULE_TOL));
    for n in 0..=PAIRING_NMAX {
        out.push(CheckResult::from_result(
            format!("PAIRING_BIORTH(n={n})"),
            pairing_row(FamilyPairing::Biorth, n, params),
            MODULE_TOL,
        ));
        out.push(CheckResult::from_result(
            format!("PAIRING_EVP(n={n})"),
            pairing_row(FamilyPairing::Evp, n, params),
            MODULE_TOL,
        ));
    }
    for kind in [SplitKind::QltSplit, SplitKind::JTildeSplit] {
        out.push(CheckResult::from_result(
            format!("OVERLAP_{}", kind.name()),
            overlap_split_agreement(kind, params),
            OVERLAP_SPLIT_TOL,
        ));
    }
    for kind in [OverlapKind::P, OverlapKind::J] {
        out.push(CheckResult::from_result(
            format!("OVERLAP_{}", kind.name()),
            overlap_polynomial_agreement(kind, params),
            MODULE_TOL,
        ));
    }
    out
}

fn biorth_checks(params: &Params, spec: &QuadratureSpec) -> Vec<CheckResult> {
    match askey_biorthogonality_matrix(BIORTH_NMAX, params, spec) {
        Ok(reports) => reports.iter().map(|r| CheckResult::from_report("BIORTH", r)).collect(),
        Err(e) => vec![CheckResult::from_result("BIORTH", Err(e), crate::quadrature::DIAGONAL_REL_TOL)],
    }
}

fn jacobi_checks(params: &Params, spec: &QuadratureSpec) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (form, name) in [(JacobiForm::Circle, "JACOBI_CIRCLE"), (JacobiForm::Interval, "JACOBI_INTERVAL")] {
        match jacobi_orthogonality_matrix(form, JACOBI_NMAX, params, spec) {
            Ok(reports) => out.extend(reports.iter().map(|r| CheckResult::from_report(name, r))),
            Err(e) => out.push(CheckResult::from_result(name, Err(e), crate::quadrature::DIAGONAL_REL_TOL)),
        }
    }
    let equivalence = (|| {
        let mut worst: f64 = 0.0;
        for m in 0..=JACOBI_NMAX {
            for n in 0..=JACOBI_NMAX {
                worst = worst.max(contour_equivalence(m, n, params, spec)?);
            }
        }
        Ok(worst)
    })();
    out.push(CheckResult::from_result("CONTOUR_EQUIVALENCE", equivalence, 1e-7));
    out.push(CheckResult::from_result(
        "CONTOUR_PREFACTOR",
        contour_prefactor(params.beta()).map(|c| (c - 1.0).norm()),
        1e-14,
    ));
    out
}

/// Largest residual of `tag` over [`KUMMER_SAMPLES`] seeded evaluations.
pub fn identity_sweep(tag: IdentityTag, samples: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let (p, args) = sample_identity(tag, &mut rng);
        worst = worst.max(identity_residual(tag, &p, &args)?);
    }
    Ok(worst)
}

fn kummer_checks() -> Vec<CheckResult> {
    IdentityTag::ALL
        .iter()
        .map(|&tag| {
            CheckResult::from_result(
                tag.name(),
                identity_sweep(tag, KUMMER_SAMPLES, KUMMER_SEED ^ tag as u64),
                KUMMER_TOL,
            )
        })
        .collect()
}

/// Largest deviation of the negative-index `P` solution at `-s-1` from the
/// partner solution at `s` for the flipped parameters `(-alpha-1, 1-beta)`,
/// over the first `lmax + 1` entries.
pub fn negative_p_flip_residual(s: usize, params: &Params, lmax: usize) -> Result<f64> {
    let neg = negative_index_coeffs(-(s as i64) - 1, Family::P, params, lmax)?;
    let flip = gevp_q_coeffs(s, &params.flipped(), &GaugeChoice::default(), lmax)?;
    let mut worst: f64 = 0.0;
    for l in 0..=lmax as i64 {
        let a = neg.coeff(-(s as i64) - 1 - l);
        let b = flip.coeff(s as i64 + l);
        worst = worst.max((a - b).norm() / (1.0 + b.norm()));
    }
    Ok(worst)
}

/// Same for the negative-index `Q` solution against the unit-normalized `P`
/// solution of the flipped parameters.
pub fn negative_q_flip_residual(s: usize, params: &Params) -> Result<f64> {
    let neg = negative_index_coeffs(-(s as i64) - 1, Family::Q, params, 0)?;
    let gauge = GaugeChoice {
        d_n0: InitialValue::Unit,
        ..GaugeChoice::default()
    };
    let flip = gevp_p_coeffs(s, &params.flipped(), &gauge)?;
    let mut worst: f64 = 0.0;
    for l in 0..=s as i64 {
        let (a, b) = (neg.coeff(-l - 1), flip.coeff(l));
        worst = worst.max((a - b).norm() / (1.0 + b.norm()));
    }
    Ok(worst)
}

/// Largest `|<P_n, LT Q_m>|` over index pairs of opposite sign with
/// `|n|, |m| <= max`. Negative-index `Q` solutions are skipped where they
/// degenerate.
pub fn cross_sign_pairing(max: usize, params: &Params) -> Result<f64> {
    let gauge = GaugeChoice::default();
    let lmax = 2 * max + 4;
    let mut worst: f64 = 0.0;
    for s in 0..max {
        let idx = -(s as i64) - 1;
        let p_neg = negative_index_coeffs(idx, Family::P, params, lmax)?;
        let q_neg = match negative_index_coeffs(idx, Family::Q, params, 0) {
            Ok(v) => Some(act(ModuleOp::LT, &v, params)),
            Err(Error::Degenerate { .. }) => None,
            Err(e) => return Err(e),
        };
        for n in 0..=max {
            let p = gevp_p_coeffs(n, params, &gauge)?;
            let q = act(ModuleOp::LT, &gevp_q_coeffs(n, params, &gauge, lmax)?, params);
            worst = worst.max(pairing(&p_neg, &q).norm());
            if let Some(qn) = &q_neg {
                worst = worst.max(pairing(&p, qn).norm());
            }
        }
    }
    Ok(worst)
}

fn negative_index_checks(params: &Params) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for s in 0..NEGATIVE_INDEX_MAX {
        let idx = -(s as i64) - 1;
        out.push(CheckResult::from_result(
            format!("NEG_P_FLIP(index={idx})"),
            negative_p_flip_residual(s, params, 8),
            NEGATIVE_INDEX_TOL,
        ));
        // the Q family at negative index degenerates when 1 - alpha - beta
        // hits a non-positive integer within its support
        match negative_q_flip_residual(s, params) {
            Err(Error::Degenerate { .. }) => {}
            r => out.push(CheckResult::from_result(
                format!("NEG_Q_FLIP(index={idx})"),
                r,
                NEGATIVE_INDEX_TOL,
            )),
        }
    }
    out.push(CheckResult::from_result(
        "NEG_CROSS_SIGN_PAIRING",
        cross_sign_pairing(NEGATIVE_INDEX_MAX, params),
        NEGATIVE_INDEX_TOL,
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr() -> Params {
        Params::new(0.7, 0.3).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn cheap_suites_pass() {
        for s in [Suite::Algebra, Suite::Kummer, Suite::NegativeIndex, Suite::Bispectral] {
            let r = run_suite(s, &pr(), &QuadratureSpec::default());
            let bad: Vec<_> = r.failures().collect();
            assert!(bad.is_empty(), "{s}: {bad:?}");
        }
    }

    #[test]
    fn q_flip_at_generic_parameters() {
        let p = Params::new(1.3, -0.4).unwrap();
        for s in 0..6 {
            assert!(negative_q_flip_residual(s, &p).unwrap() < 1e-13);
        }
        let r = run_suite(Suite::NegativeIndex, &p, &QuadratureSpec::default());
        assert_eq!(r.checks.len(), 13);
        assert!(r.pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn errors_are_recorded_per_check() {
        let c = CheckResult::from_result("X", Err(Error::Domain("bad".into())), 1.0);
        assert!(!c.pass && c.residual.is_nan() && c.error.is_some());
    }
}
