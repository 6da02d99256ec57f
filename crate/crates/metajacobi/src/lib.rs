//! Askey biorthogonal polynomials on the unit circle, their partners and
//! the Jacobi polynomials, studied through the meta-Jacobi algebra: a
//! three-generator algebra isomorphic to su(1,1) whose modules carry both
//! families.
//!
//! The crate is organised bottom up:
//!
//! * [`scalar`]: gamma, rising factorials, Gauss series and identities.
//! * [`poly`]: coefficient vectors of the polynomial families.
//! * [`algebra`]: normal-ordered differential operators realizing the algebra.
//! * [`repmod`]: the module with basis `e_k`, its eigenproblems and overlaps.
//! * [`quadrature`]: contour and interval integrals for the orthogonality relations.
//! * [`checks`]: named verification suites built from the above.

pub mod algebra;
pub mod checks;
pub mod dd;
pub mod poly;
pub mod quadrature;
pub mod repmod;
mod error;
pub mod scalar;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use scalar::Params;

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/ch1-parameters.md")]
    pub mod chapter1 {}
    #[doc = include_str!("../../../book/src/ch2-polynomials.md")]
    pub mod chapter2 {}
    #[doc = include_str!("../../../book/src/ch3-algebra.md")]
    pub mod chapter3 {}
    #[doc = include_str!("../../../book/src/ch4-module.md")]
    pub mod chapter4 {}
    #[doc = include_str!("../../../book/src/ch5-orthogonality.md")]
    pub mod chapter5 {}
}
