use nalgebra::DMatrix;

use super::vector::ModuleOp;
use crate::algebra::{realize, GeneratorTag};
use crate::{Params, C64};

/// Matrix of `op` on `span{e_0, ..., e_K}`; column `k` holds the image of
/// `e_k`. Components leaving the window (such as `e_{K+1}` under `X`) are
/// dropped.
pub fn truncated_matrix(op: ModuleOp, k_max: usize, params: &Params) -> DMatrix<f64> {
    let dim = k_max + 1;
    let mut out = DMatrix::zeros(dim, dim);
    for col in 0..dim {
        for (row, w) in op.on_basis(col as i64, params) {
            if (0..dim as i64).contains(&row) {
                out[(row as usize, col)] += w;
            }
        }
    }
    out
}

/// Which spectrum [`gevp_spectrum`] reads off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumKind {
    /// Generalized eigenvalues of the pencil `M d = nu L d`.
    Pencil,
    /// Eigenvalues of `M` alone.
    M,
}

/// Eigenvalues on the window `0..=K`, read from the diagonals of the
/// (upper triangular) truncated matrices.
pub fn gevp_spectrum(kind: SpectrumKind, k_max: usize, params: &Params) -> Vec<f64> {
    let m = truncated_matrix(ModuleOp::M, k_max, params);
    match kind {
        SpectrumKind::M => (0..=k_max).map(|k| m[(k, k)]).collect(),
        SpectrumKind::Pencil => {
            let l = truncated_matrix(ModuleOp::L, k_max, params);
            (0..=k_max).map(|k| m[(k, k)] / l[(k, k)]).collect()
        }
    }
}

fn max_abs_block(a: &DMatrix<f64>, rows: usize, cols: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..rows.min(a.nrows()) {
        for c in 0..cols.min(a.ncols()) {
            worst = worst.max(a[(r, c)].abs());
        }
    }
    worst
}

/// Largest disagreement between the adjoint matrices and the transposes of
/// `L, M, X` on rows and columns `0..K`, and between the differential
/// operators acting on `(z - 1)^j` and the adjoint coefficients read row-wise.
pub fn transpose_consistency(k_max: usize, params: &Params) -> f64 {
    let mut worst: f64 = 0.0;
    let pairs = [
        (ModuleOp::L, ModuleOp::LT, GeneratorTag::L),
        (ModuleOp::M, ModuleOp::MT, GeneratorTag::M),
        (ModuleOp::X, ModuleOp::XT, GeneratorTag::X),
    ];
    for (op, adj, tag) in pairs {
        let a = truncated_matrix(op, k_max, params);
        let at = truncated_matrix(adj, k_max, params);
        worst = worst.max(max_abs_block(&(&at - a.transpose()), k_max, k_max));

        // the coefficient of (z - 1)^k in A (z - 1)^j is AT[j, k]
        let d = realize(tag, params);
        for j in 0..k_max {
            let image = d.apply_to_power(C64::new(j as f64, 0.0));
            for k in 0..k_max {
                let got = image.get(&(k as i64 - j as i64)).copied().unwrap_or_default();
                worst = worst.max((got - at[(j, k)]).norm());
            }
        }
    }
    worst
}

/// Algebra relations checked on truncated matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleRelation {
    ComLM,
    ComLX,
    ComMX,
    /// `Q` equals `2 alpha beta - alpha + beta - 1` times the identity.
    Casimir,
}

impl ModuleRelation {
    pub const ALL: [ModuleRelation; 4] = [
        ModuleRelation::ComLM,
        ModuleRelation::ComLX,
        ModuleRelation::ComMX,
        ModuleRelation::Casimir,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModuleRelation::ComLM => "COM_LM",
            ModuleRelation::ComLX => "COM_LX",
            ModuleRelation::ComMX => "COM_MX",
            ModuleRelation::Casimir => "CASIMIR",
        }
    }
}

/// Residual of a relation on the `(K+1)`-dimensional window, restricted to
/// the block the truncation of `X` cannot reach: `[L, M]` is checked on the
/// whole window, the others on columns `0..=K-2` (and rows `0..=K-1` for the
/// commutators).
pub fn truncated_relation_residual(rel: ModuleRelation, k_max: usize, params: &Params) -> f64 {
    let (a, b) = (params.alpha(), params.beta());
    let l = truncated_matrix(ModuleOp::L, k_max, params);
    let m = truncated_matrix(ModuleOp::M, k_max, params);
    let x = truncated_matrix(ModuleOp::X, k_max, params);
    let id = DMatrix::<f64>::identity(k_max + 1, k_max + 1);
    let com = |p: &DMatrix<f64>, q: &DMatrix<f64>| p * q - q * p;
    let anti = |p: &DMatrix<f64>, q: &DMatrix<f64>| p * q + q * p;
    let dim = k_max + 1;
    let inner = k_max.saturating_sub(1);
    match rel {
        ModuleRelation::ComLM => {
            let r = com(&l, &m) - (&l * &l - &l * (a + 1.0) - &m);
            max_abs_block(&r, dim, dim)
        }
        ModuleRelation::ComLX => {
            let r = com(&l, &x) - (&x - &id);
            max_abs_block(&r, k_max, inner)
        }
        ModuleRelation::ComMX => {
            let r = com(&m, &x) - (anti(&x, &l) - &x * (a + 1.0) + &id * b);
            max_abs_block(&r, k_max, inner)
        }
        ModuleRelation::Casimir => {
            let l2 = &l * &l;
            let q = anti(&l2, &x) - anti(&l, &x) * (a + 1.0) - anti(&m, &x) + &m * 2.0 + &l * (2.0 * b);
            max_abs_block(&(q - &id * params.casimir()), dim, inner)
        }
    }
}
