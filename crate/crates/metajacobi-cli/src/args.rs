use clap::{Args, Parser, Subcommand, ValueEnum};
use metajacobi::checks::Suite;

#[derive(Parser, Debug)]
#[command(name = "metajacobi", version, about = "Askey and Jacobi polynomials through the meta-Jacobi algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one quantity and print "re,im".
    Eval(EvalArgs),
    /// Coefficient vector of a module eigenvector or polynomial.
    Coeffs(CoeffsArgs),
    /// Eigenvalues read from the truncated module matrices.
    Spectrum(SpectrumArgs),
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
    /// Tabulate coefficients, orthogonality matrices or recurrence data.
    Table(TableArgs),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct QuadArgs {
    /// Refinement agreement of the quadratures; defaults to $METAJACOBI_TOL or 1e-10.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Dyadic grading levels of the circle rule.
    #[arg(long)]
    pub panels: Option<usize>,
    /// Gauss–Legendre nodes per circle panel.
    #[arg(long)]
    pub nodes: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct OutArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalKind {
    AskeyP,
    AskeyQ,
    Jacobi,
    /// `P_n` through the three-term recurrence.
    AskeyPRec,
    OverlapP,
    OverlapQlt,
    OverlapJ,
    OverlapJtilde,
    /// Closed form of the QLT overlap (needs |z| < 1).
    SplitQlt,
    SplitJtilde,
    /// Module pairing <P_n, LT Q_m>.
    PairingBiorth,
    /// Module pairing <J_n, J~_m>.
    PairingEvp,
    /// Askey biorthogonality integral for (m, n).
    BiorthIntegral,
    JacobiCircle,
    JacobiInterval,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub kind: EvalKind,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long = "z-re", default_value_t = 0.0, allow_negative_numbers = true)]
    pub z_re: f64,
    #[arg(long = "z-im", default_value_t = 0.0, allow_negative_numbers = true)]
    pub z_im: f64,
    #[arg(long, default_value_t = metajacobi::repmod::DEFAULT_LMAX)]
    pub lmax: usize,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffKind {
    /// Solution of M d = n L d.
    GevpP,
    /// Solution of MT d* = n LT d*, truncated after lmax terms.
    GevpQ,
    EvpJ,
    EvpJtilde,
    /// Negative-index P solution at index -n.
    NegativeP,
    /// Negative-index Q solution at index -n.
    NegativeQ,
    /// Monomial coefficients of the Askey polynomial.
    AskeyP,
    AskeyQ,
    Jacobi,
}

#[derive(Args, Debug)]
pub struct CoeffsArgs {
    #[arg(long, value_enum, default_value = "gevp-p")]
    pub kind: CoeffKind,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 10)]
    pub lmax: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKindArg {
    Pencil,
    M,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[arg(long, value_enum, default_value = "pencil")]
    pub kind: SpectrumKindArg,
    #[arg(long, default_value_t = 10)]
    pub nmax: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    pub suite: Suite,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Coeffs,
    BiorthMatrix,
    JacobiMatrix,
    Recurrence,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub kind: TableKind,
    /// Largest index of the table.
    #[arg(long, default_value_t = 3)]
    pub nmax: usize,
    /// Index of the coefficient table.
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub out: OutArgs,
}
