//! The module with basis `e_k`, `k` an integer: actions of the generators and
//! their adjoints, truncated matrices, the eigenvector expansions of the
//! generalized and ordinary eigenproblems, their pairings and norms, and the
//! overlaps with the eigenvectors of `X`.

mod coeffs;
mod matrix;
mod overlap;
mod vector;

pub use coeffs::{
    biorth_norm, evp_j_coeffs, family_pairing, family_pairing_residual, gevp_p_coeffs, gevp_q_coeffs, negative_index_coeffs, Family,
    FamilyPairing, GaugeChoice, InitialValue, Norms,
};
pub use matrix::{
    gevp_spectrum, transpose_consistency, truncated_matrix, truncated_relation_residual, ModuleRelation, SpectrumKind,
};
pub use overlap::{
    jacobi_overlap_scale, overlap, overlap_closed_form, ClosedForm, OverlapKind, SplitKind, DEFAULT_LMAX, MAX_OVERLAP_TERMS,
    OVERLAP_TAIL_TOL,
};
pub use vector::{act, pairing, ModuleOp, ModuleVector, MODULE_PRUNE_TOL};
