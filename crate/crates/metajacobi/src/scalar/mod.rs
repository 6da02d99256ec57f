//! Gamma function, rising factorials, Gauss hypergeometric series and a
//! registry of transformation identities between them.

mod gamma;
mod hyper;
mod identities;
mod params;

pub use gamma::{gamma, gamma_ratio, gamma_ratio_complex, ln_gamma_sign, log_gamma, pochhammer, sin_pi};
pub use hyper::{hyp2f1, hyp2f1_series, hyp2f1_terminating, DEFAULT_SERIES_TOL, MAX_SERIES_TERMS};
pub use identities::{identity_residual, identity_sides, sample_identity, IdentityArgs, IdentityTag};
pub use params::Params;

pub(crate) use gamma::gamma_ratio_dd;
pub(crate) use hyper::{hyp2f1_series_dd, terminating_coeffs, Field};
pub(crate) use params::near_integer;
