//! Normal-ordered differential operators realizing the algebra generated by
//! `L`, `M`, `X`, the su(1,1) isomorphism, the embedded Jacobi algebra, and
//! the operator and polynomial identities between them.

mod diffop;
mod kummer;
mod realize;
mod relations;

pub use diffop::{apply_op, poly_distance, DiffOp, DEGREE_CAP, POLY_DEGREE_CAP, PRUNE_TOL};
pub use kummer::{kummer_solution, kummer_u4_alternate, KummerParams, KummerTag};
pub use realize::{embed_from_su11, realize, su11_images, GeneratorTag};
pub use relations::{
    bispectral_residual, bispectral_residuals, contiguity_residual, relation_residual, BispectralIdentity,
    Relation,
};
