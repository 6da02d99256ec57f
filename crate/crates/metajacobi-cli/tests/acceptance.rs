//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! A criterion listed in `EXPECTED_FAILURES` still prints FAIL; it only stops
//! failing the run. If such a criterion ever passes, the run fails so the
//! list gets revisited.

use std::process::Command;
use std::time::Instant;

use metajacobi::algebra::{bispectral_residuals, contiguity_residual, relation_residual, Relation};
use metajacobi::checks::{
    cross_sign_pairing, identity_sweep, negative_p_flip_residual, negative_q_flip_residual, overlap_polynomial_agreement,
    overlap_split_agreement, recurrence_agreement,
};
use metajacobi::quadrature::{
    askey_biorth_norm, askey_biorthogonality_matrix, contour_prefactor, h_norm, jacobi_orthogonality_matrix,
    JacobiForm, QuadratureSpec,
};
use metajacobi::repmod::{
    family_pairing_residual, truncated_relation_residual, FamilyPairing, ModuleRelation, OverlapKind, SplitKind,
};
use metajacobi::scalar::{gamma_ratio, IdentityTag};
use metajacobi::{Params, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The diagonal `m! Gamma(m + alpha + beta + 1) / (Gamma(alpha + 1) Gamma(beta + 1))`
/// required by criterion 6 disagrees with the integral for every m >= 1; the
/// integral equals `askey_biorth_norm`, checked on the extra line "6c".
const EXPECTED_FAILURES: &[&str] = &["6"];

struct Line {
    id: &'static str,
    pass: bool,
    text: String,
}

fn line(id: &'static str, title: &str, measures: &[(&str, f64, f64)], secs: f64, budget: f64) -> Line {
    let mut pass = secs < budget;
    let mut parts = Vec::new();
    for &(what, value, tol) in measures {
        let ok = value < tol;
        pass &= ok;
        parts.push(format!("{what} {value:.3e} {} {tol:e}", if ok { "<" } else { ">=" }));
    }
    if budget.is_finite() {
        parts.push(format!("{secs:.3} s (budget {budget} s)"));
    } else {
        parts.push(format!("{secs:.3} s"));
    }
    Line {
        id,
        pass,
        text: format!("{title}: {}", parts.join("; ")),
    }
}

fn failed(id: &'static str, title: &str, err: impl std::fmt::Display) -> Line {
    Line {
        id,
        pass: false,
        text: format!("{title}: error: {err}"),
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> (Result<T>, f64) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed().as_secs_f64())
}

fn reference() -> Params {
    Params::new(0.7, 0.3).expect("generic")
}

fn criterion_1() -> Line {
    let title = "algebra relations at 10 seeded generic pairs";
    let (r, secs) = timed(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut worst: f64 = 0.0;
        let mut pairs = 0;
        while pairs < 10 {
            let (a, b) = (rng.random_range(-0.9..3.0), rng.random_range(-0.9..3.0));
            let Ok(p) = Params::new(a, b) else { continue };
            pairs += 1;
            for rel in Relation::ALL {
                worst = worst.max(relation_residual(rel, &p));
            }
        }
        Ok(worst)
    });
    match r {
        Ok(w) => line("1", title, &[("max residual", w, 1e-12)], secs, 1.0),
        Err(e) => failed("1", title, e),
    }
}

fn criterion_2() -> Line {
    let title = "bispectral and contiguity residuals, n <= 20";
    let p = reference();
    let (r, secs) = timed(|| {
        let (mut bis, mut con): (f64, f64) = (0.0, 0.0);
        for n in 0..=20 {
            for (_, v) in bispectral_residuals(n, &p)? {
                bis = bis.max(v);
            }
            con = con.max(contiguity_residual(n, &p)?);
        }
        Ok((bis, con))
    });
    match r {
        Ok((b, c)) => line("2", title, &[("bispectral", b, 1e-11), ("contiguity", c, 1e-11)], secs, 1.0),
        Err(e) => failed("2", title, e),
    }
}

fn criterion_3() -> Line {
    let title = "recurrence vs explicit P_n, n <= 20, 64 circle points";
    let (r, secs) = timed(|| recurrence_agreement(20, 64, &reference()));
    match r {
        Ok(w) => line("3", title, &[("max relative deviation", w, 1e-11)], secs, f64::INFINITY),
        Err(e) => failed("3", title, e),
    }
}

fn criterion_4() -> Line {
    let title = "module pairings n, m <= 12 and truncated relations at K = 30";
    let p = reference();
    let (r, secs) = timed(|| {
        let (mut bi, mut evp): (f64, f64) = (0.0, 0.0);
        for n in 0..=12 {
            for m in 0..=12 {
                bi = bi.max(family_pairing_residual(FamilyPairing::Biorth, n, m, &p)?);
                evp = evp.max(family_pairing_residual(FamilyPairing::Evp, n, m, &p)?);
            }
        }
        let trunc = ModuleRelation::ALL
            .iter()
            .map(|&rel| truncated_relation_residual(rel, 30, &p))
            .fold(0.0, f64::max);
        Ok((bi, evp, trunc))
    });
    match r {
        Ok((b, e, t)) => line(
            "4",
            title,
            &[("biorth pairing", b, 1e-11), ("evp pairing", e, 1e-11), ("truncated relations", t, 1e-11)],
            secs,
            f64::INFINITY,
        ),
        Err(e) => failed("4", title, e),
    }
}

fn criterion_5() -> Line {
    let title = "overlap closed forms at 8 points, m <= 5; polynomial overlaps";
    let p = reference();
    let (r, secs) = timed(|| {
        Ok((
            overlap_split_agreement(SplitKind::QltSplit, &p)?,
            overlap_split_agreement(SplitKind::JTildeSplit, &p)?,
            overlap_polynomial_agreement(OverlapKind::P, &p)?,
            overlap_polynomial_agreement(OverlapKind::J, &p)?,
        ))
    });
    match r {
        Ok((q, jt, op, oj)) => line(
            "5",
            title,
            &[("QLT", q, 1e-10), ("JTILDE", jt, 1e-10), ("P", op, 1e-11), ("J", oj, 1e-11)],
            secs,
            5.0,
        ),
        Err(e) => failed("5", title, e),
    }
}

fn criterion_6() -> Vec<Line> {
    let title = "Askey biorthogonality integral, m, n <= 8, stated diagonal";
    let p = reference();
    let (a, b) = (p.alpha(), p.beta());
    let (r, secs) = timed(|| askey_biorthogonality_matrix(8, &p, &QuadratureSpec::default()));
    let reports = match r {
        Ok(v) => v,
        Err(e) => return vec![failed("6", title, &e), failed("6c", "corrected diagonal", e)],
    };
    let diag: Vec<_> = reports.iter().filter(|r| r.m == r.n).collect();
    let smallest = diag.iter().map(|r| r.computed.norm()).fold(f64::INFINITY, f64::min);
    let off = reports
        .iter()
        .filter(|r| r.m != r.n)
        .map(|r| r.computed.norm() / smallest)
        .fold(0.0, f64::max);
    let mut stated: f64 = 0.0;
    let mut corrected: f64 = 0.0;
    for r in &diag {
        let m = r.m as f64;
        let want = gamma_ratio(&[m + 1.0, m + a + b + 1.0], &[a + 1.0, b + 1.0]).unwrap_or(f64::NAN);
        stated = stated.max((r.computed.re - want).abs() / want.abs());
        let fixed = askey_biorth_norm(r.m, &p).unwrap_or(f64::NAN);
        corrected = corrected.max((r.computed - fixed).norm() / fixed.abs());
    }
    vec![
        line("6", title, &[("diagonal", stated, 1e-7), ("off-diagonal", off, 1e-8)], secs, 30.0),
        line(
            "6c",
            "same integrals against m! Gamma(m+a+b+1) / (Gamma(m+a+1) Gamma(m+b+1))",
            &[("diagonal", corrected, 1e-7), ("off-diagonal", off, 1e-8)],
            secs,
            30.0,
        ),
    ]
}

fn criterion_7() -> Line {
    let title = "Jacobi orthogonality, circle and interval forms, n <= 6";
    let p = reference();
    let spec = QuadratureSpec::default();
    let (r, secs) = timed(|| {
        let c = jacobi_orthogonality_matrix(JacobiForm::Circle, 6, &p, &spec)?;
        let i = jacobi_orthogonality_matrix(JacobiForm::Interval, 6, &p, &spec)?;
        let (mut diag, mut off, mut agree): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for (rc, ri) in c.iter().zip(&i) {
            agree = agree.max((rc.computed - ri.computed).norm());
            if rc.m == rc.n {
                let h = h_norm(rc.m, &p)?;
                diag = diag.max((rc.computed.re - h).abs() / h).max((ri.computed.re - h).abs() / h);
            } else {
                off = off.max(rc.computed.norm()).max(ri.computed.norm());
            }
        }
        let pref = (contour_prefactor(p.beta())? - 1.0).norm();
        Ok((diag, off, agree, pref))
    });
    match r {
        Ok((d, o, a, pf)) => line(
            "7",
            title,
            &[("diagonal", d, 1e-7), ("off-diagonal", o, 1e-8), ("circle vs interval", a, 1e-7), ("prefactor", pf, 1e-14)],
            secs,
            30.0,
        ),
        Err(e) => failed("7", title, e),
    }
}

fn criterion_8() -> Line {
    let title = "identity registry, 24 seeded evaluations per identity";
    let (r, secs) = timed(|| {
        let mut worst: f64 = 0.0;
        for (k, tag) in IdentityTag::ALL.into_iter().enumerate() {
            worst = worst.max(identity_sweep(tag, 24, 100 + k as u64)?);
        }
        Ok(worst)
    });
    match r {
        Ok(w) => line("8", title, &[("max residual", w, 1e-10)], secs, f64::INFINITY),
        Err(e) => failed("8", title, e),
    }
}

fn criterion_9() -> Line {
    let title = "negative indices: flip oracles for |index| <= 6, cross-sign pairings";
    let (r, secs) = timed(|| {
        let (mut flip, mut cross): (f64, f64) = (0.0, 0.0);
        // the negative-index Q family needs alpha + beta off the integers
        for (a, b, with_q) in [(0.7, 0.3, false), (1.3, -0.4, true), (2.5, 0.45, true)] {
            let p = Params::new(a, b)?;
            for s in 0..6 {
                flip = flip.max(negative_p_flip_residual(s, &p, 8)?);
                if with_q {
                    flip = flip.max(negative_q_flip_residual(s, &p)?);
                }
            }
            cross = cross.max(cross_sign_pairing(6, &p)?);
        }
        Ok((flip, cross))
    });
    match r {
        Ok((f, c)) => line("9", title, &[("flip oracles", f, 1e-12), ("cross-sign pairings", c, 1e-12)], secs, f64::INFINITY),
        Err(e) => failed("9", title, e),
    }
}

fn criterion_10() -> Line {
    let title = "metajacobi verify --suite all at (0.7, 0.3)";
    let t = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_metajacobi"))
            .args(["verify", "--suite", "all", "--alpha", "0.7", "--beta", "0.3"])
            .env_remove("METAJACOBI_TOL")
            .output()
    };
    let (first, second) = match (run(), run()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return failed("10", title, e),
    };
    let secs = t.elapsed().as_secs_f64();
    let report: serde_json::Value = match serde_json::from_slice(&first.stdout) {
        Ok(v) => v,
        Err(e) => return failed("10", title, e),
    };
    let failed_checks = report["checks"]
        .as_array()
        .map(|c| c.iter().filter(|c| c["pass"] != serde_json::Value::Bool(true)).count())
        .unwrap_or(usize::MAX);
    let exit_ok = first.status.success();
    let identical = first.stdout == second.stdout;
    let pass = exit_ok && failed_checks == 0 && identical;
    Line {
        id: "10",
        pass,
        text: format!(
            "{title}: exit {:?}, {failed_checks} failed checks, outputs {}; {secs:.3} s",
            first.status.code(),
            if identical { "byte-identical" } else { "differ" }
        ),
    }
}

fn main() {
    let mut lines = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
    ];
    lines.extend(criterion_6());
    lines.extend([criterion_7(), criterion_8(), criterion_9(), criterion_10()]);

    let mut unexpected = 0;
    for l in &lines {
        let expected_failure = EXPECTED_FAILURES.contains(&l.id);
        let tag = if l.pass { "PASS" } else { "FAIL" };
        let note = match (l.pass, expected_failure) {
            (false, true) => " [expected: stated diagonal is not the value of the integral for m >= 1]",
            (true, true) => " [listed as an expected failure but passed]",
            _ => "",
        };
        println!("{tag} criterion {}: {}{note}", l.id, l.text);
        if l.pass == expected_failure {
            unexpected += 1;
        }
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("{passed}/{} lines pass, {unexpected} unexpected", lines.len());
    if unexpected > 0 {
        std::process::exit(1);
    }
}
