use metajacobi::checks::{run_suite, SuiteReport};
use metajacobi::poly::{askey_p, askey_p_by_recurrence, askey_q, jacobi_phat, recurrence_coeffs};
use metajacobi::quadrature::{
    askey_biorthogonality_matrix, jacobi_orthogonality_matrix, verify_askey_biorthogonality, verify_jacobi_circle,
    verify_jacobi_interval, JacobiForm, QuadratureSpec,
};
use metajacobi::repmod::{
    evp_j_coeffs, family_pairing, gevp_p_coeffs, gevp_q_coeffs, gevp_spectrum, negative_index_coeffs, overlap,
    overlap_closed_form, Family, FamilyPairing, GaugeChoice, ModuleVector, OverlapKind, SpectrumKind, SplitKind,
};
use metajacobi::{Params, C64};

use crate::args::{
    CoeffKind, CoeffsArgs, EvalArgs, EvalKind, Format, ParamArgs, QuadArgs, SpectrumArgs, SpectrumKindArg,
    TableArgs, TableKind, VerifyArgs,
};
use crate::output::{to_pretty, Cell, JsonCheck, JsonParams, JsonReport, Table};
use crate::CliError;

/// Text to emit and whether every verification in it passed.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, pass: true }
    }
}

pub const TOL_ENV: &str = "METAJACOBI_TOL";

pub fn params(p: &ParamArgs) -> Result<Params, CliError> {
    Params::new(p.alpha, p.beta).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn quad_spec(q: &QuadArgs) -> Result<QuadratureSpec, CliError> {
    let mut spec = QuadratureSpec::default();
    match q.tol {
        Some(t) => spec.target_tol = t,
        None => {
            if let Ok(raw) = std::env::var(TOL_ENV) {
                spec.target_tol = raw
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("{TOL_ENV}={raw} is not a number")))?;
            }
        }
    }
    if let Some(p) = q.panels {
        spec.panels = p;
    }
    if let Some(n) = q.nodes {
        spec.nodes_per_panel = n;
    }
    spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(spec)
}

fn table_text(t: &Table, format: Option<Format>) -> String {
    match format.unwrap_or(Format::Csv) {
        Format::Csv => t.to_csv(),
        Format::Json => t.to_json(),
    }
}

pub fn eval(a: &EvalArgs) -> Result<Output, CliError> {
    let p = params(&a.params)?;
    let z = C64::new(a.z_re, a.z_im);
    let g = GaugeChoice::default();
    let (n, m) = (a.n, a.m);
    let v = match a.kind {
        EvalKind::AskeyP => askey_p(n, &p)?.eval(z),
        EvalKind::AskeyQ => askey_q(n, &p)?.eval(z),
        EvalKind::Jacobi => jacobi_phat(n, &p)?.eval(z),
        EvalKind::AskeyPRec => askey_p_by_recurrence(n, &p, z)?,
        EvalKind::OverlapP => overlap(OverlapKind::P, n, z, &p, &g, a.lmax)?,
        EvalKind::OverlapQlt => overlap(OverlapKind::QLT, n, z, &p, &g, a.lmax)?,
        EvalKind::OverlapJ => overlap(OverlapKind::J, n, z, &p, &g, a.lmax)?,
        EvalKind::OverlapJtilde => overlap(OverlapKind::JTilde, n, z, &p, &g, a.lmax)?,
        EvalKind::SplitQlt => overlap_closed_form(SplitKind::QltSplit, n, z, &p)?.sum,
        EvalKind::SplitJtilde => overlap_closed_form(SplitKind::JTildeSplit, n, z, &p)?.sum,
        EvalKind::PairingBiorth => family_pairing(FamilyPairing::Biorth, n, m, &p, &g)?,
        EvalKind::PairingEvp => family_pairing(FamilyPairing::Evp, n, m, &p, &g)?,
        EvalKind::BiorthIntegral => verify_askey_biorthogonality(m, n, &p, &quad_spec(&a.quad)?)?.computed,
        EvalKind::JacobiCircle => verify_jacobi_circle(m, n, &p, &quad_spec(&a.quad)?)?.computed,
        EvalKind::JacobiInterval => verify_jacobi_interval(m, n, &p, &quad_spec(&a.quad)?)?.computed,
    };
    let text = match a.out.format.unwrap_or(Format::Csv) {
        Format::Csv => format!("{:?},{:?}\n", v.re, v.im),
        Format::Json => to_pretty(&serde_json::json!({ "re": v.re, "im": v.im })),
    };
    Ok(Output::ok(text))
}

fn vector_table(v: &ModuleVector) -> Table {
    let complex = v.iter().any(|(_, c)| c.im != 0.0);
    let mut t = Table::new(if complex { vec!["k", "coeff_re", "coeff_im"] } else { vec!["k", "coeff"] });
    for (k, c) in v.iter() {
        let mut row = vec![Cell::from(k), Cell::from(c.re)];
        if complex {
            row.push(Cell::from(c.im));
        }
        t.push(row);
    }
    t
}

fn poly_table(c: &[C64]) -> Table {
    let mut t = Table::new(vec!["k", "coeff"]);
    for (k, v) in c.iter().enumerate() {
        t.push(vec![Cell::from(k), Cell::from(v.re)]);
    }
    t
}

fn negative_index(n: usize) -> Result<i64, CliError> {
    if n == 0 {
        return Err(CliError::Usage("negative-index kinds need --n >= 1 (index -n)".into()));
    }
    Ok(-(n as i64))
}

fn coeff_table(kind: CoeffKind, n: usize, p: &Params, lmax: usize) -> Result<Table, CliError> {
    let g = GaugeChoice::default();
    Ok(match kind {
        CoeffKind::GevpP => vector_table(&gevp_p_coeffs(n, p, &g)?),
        CoeffKind::GevpQ => vector_table(&gevp_q_coeffs(n, p, &g, lmax)?),
        CoeffKind::EvpJ => vector_table(&evp_j_coeffs(n, p, &g, false, lmax)?),
        CoeffKind::EvpJtilde => vector_table(&evp_j_coeffs(n, p, &g, true, lmax)?),
        CoeffKind::NegativeP => vector_table(&negative_index_coeffs(negative_index(n)?, Family::P, p, lmax)?),
        CoeffKind::NegativeQ => vector_table(&negative_index_coeffs(negative_index(n)?, Family::Q, p, lmax)?),
        CoeffKind::AskeyP => poly_table(askey_p(n, p)?.coeffs()),
        CoeffKind::AskeyQ => poly_table(askey_q(n, p)?.coeffs()),
        CoeffKind::Jacobi => poly_table(jacobi_phat(n, p)?.coeffs()),
    })
}

pub fn coeffs(a: &CoeffsArgs) -> Result<Output, CliError> {
    let p = params(&a.params)?;
    let t = coeff_table(a.kind, a.n, &p, a.lmax)?;
    Ok(Output::ok(table_text(&t, a.out.format)))
}

pub fn spectrum(a: &SpectrumArgs) -> Result<Output, CliError> {
    let p = params(&a.params)?;
    let kind = match a.kind {
        SpectrumKindArg::Pencil => SpectrumKind::Pencil,
        SpectrumKindArg::M => SpectrumKind::M,
    };
    let mut t = Table::new(vec!["k", "value"]);
    for (k, v) in gevp_spectrum(kind, a.nmax, &p).into_iter().enumerate() {
        t.push(vec![Cell::from(k), Cell::from(v)]);
    }
    Ok(Output::ok(table_text(&t, a.out.format)))
}

fn report_json(r: &SuiteReport) -> String {
    let checks = r
        .checks
        .iter()
        .map(|c| JsonCheck {
            name: c.name.clone(),
            residual: c.residual.is_finite().then_some(c.residual),
            tolerance: c.tolerance,
            pass: c.pass,
            error: c.error.clone(),
        })
        .collect();
    to_pretty(&JsonReport {
        schema: 1,
        suite: r.suite.name().to_string(),
        params: JsonParams {
            alpha: r.params.alpha(),
            beta: r.params.beta(),
        },
        checks,
        pass: r.pass(),
    })
}

pub fn verify(a: &VerifyArgs) -> Result<Output, CliError> {
    let p = params(&a.params)?;
    let spec = quad_spec(&a.quad)?;
    let r = run_suite(a.suite, &p, &spec);
    let text = match a.out.format.unwrap_or(Format::Json) {
        Format::Json => report_json(&r),
        Format::Csv => {
            let mut s = String::from("name,residual,tolerance,pass\n");
            for c in &r.checks {
                s.push_str(&format!("{},{:?},{:?},{}\n", c.name, c.residual, c.tolerance, c.pass));
            }
            s
        }
    };
    Ok(Output { text, pass: r.pass() })
}

pub fn table(a: &TableArgs) -> Result<Output, CliError> {
    let p = params(&a.params)?;
    let t = match a.kind {
        TableKind::Coeffs => coeff_table(CoeffKind::GevpP, a.n, &p, 0)?,
        TableKind::Recurrence => {
            let mut t = Table::new(vec!["n", "b_n", "g_n"]);
            for n in 0..=a.nmax {
                let (b, g) = recurrence_coeffs(n, &p)?;
                t.push(vec![Cell::from(n), Cell::from(b), Cell::from(g)]);
            }
            t
        }
        TableKind::BiorthMatrix => {
            let spec = quad_spec(&a.quad)?;
            let mut t = Table::new(vec!["m", "n", "value_re", "value_im", "expected"]);
            for r in askey_biorthogonality_matrix(a.nmax, &p, &spec)? {
                t.push(vec![
                    Cell::from(r.m),
                    Cell::from(r.n),
                    Cell::from(r.computed.re),
                    Cell::from(r.computed.im),
                    Cell::from(r.expected.re),
                ]);
            }
            t
        }
        TableKind::JacobiMatrix => {
            let spec = quad_spec(&a.quad)?;
            let c = jacobi_orthogonality_matrix(JacobiForm::Circle, a.nmax, &p, &spec)?;
            let i = jacobi_orthogonality_matrix(JacobiForm::Interval, a.nmax, &p, &spec)?;
            let mut t = Table::new(vec!["m", "n", "circle_re", "circle_im", "interval", "expected"]);
            for (rc, ri) in c.iter().zip(&i) {
                t.push(vec![
                    Cell::from(rc.m),
                    Cell::from(rc.n),
                    Cell::from(rc.computed.re),
                    Cell::from(rc.computed.im),
                    Cell::from(ri.computed.re),
                    Cell::from(rc.expected.re),
                ]);
            }
            t
        }
    };
    Ok(Output::ok(table_text(&t, a.out.format)))
}
