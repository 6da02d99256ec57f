//! Contour integrals over the unit circle, integrals over `[0, 1]`, and the
//! orthogonality relations of the Askey and Jacobi polynomials checked with
//! them.
//!
//! The circle rule runs in double-double: on `|z| = 1` the monic Jacobi
//! polynomials are far larger than on `[0, 1]`, and their products cancel
//! down to `h_n` by nine orders of magnitude already at `n = 6`.

mod circle;
mod gauss;
mod interval;
mod verify;

pub use circle::{circle_integral, circle_integrals, CirclePoint, MAX_CIRCLE_REFINEMENTS};
pub use interval::{interval_integral, interval_integrals, IntervalPoint};
pub use verify::{
    askey_biorth_norm, askey_biorthogonality_matrix, contour_equivalence, contour_prefactor, h_norm,
    jacobi_orthogonality_matrix, verify_askey_biorthogonality, verify_jacobi_circle, verify_jacobi_interval,
    JacobiForm, OrthogonalityReport, DIAGONAL_REL_TOL, OFF_DIAGONAL_REL_TOL,
};

use crate::error::{Error, Result};

/// Discretization settings shared by the circle and interval rules.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    /// Dyadic grading levels toward `z = 1` on each side of the circle.
    pub panels: usize,
    /// Gauss–Legendre order inside each circle panel.
    pub nodes_per_panel: usize,
    /// Relative agreement required between two successive refinements.
    pub target_tol: f64,
    /// Maximum number of step halvings of the tanh-sinh rule.
    pub interval_levels: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            panels: 12,
            nodes_per_panel: 16,
            target_tol: 1e-10,
            interval_levels: 10,
        }
    }
}

impl QuadratureSpec {
    pub fn new(panels: usize, nodes_per_panel: usize, target_tol: f64, interval_levels: usize) -> Result<Self> {
        let s = QuadratureSpec {
            panels,
            nodes_per_panel,
            target_tol,
            interval_levels,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.panels < 4 {
            return Err(Error::InvalidParams(format!("panels = {} must be at least 4", self.panels)));
        }
        if self.nodes_per_panel < 8 {
            return Err(Error::InvalidParams(format!(
                "nodes_per_panel = {} must be at least 8",
                self.nodes_per_panel
            )));
        }
        if self.target_tol.is_nan() || self.target_tol < 1e-13 {
            return Err(Error::InvalidParams(format!(
                "target_tol = {} must be at least 1e-13",
                self.target_tol
            )));
        }
        if self.interval_levels == 0 {
            return Err(Error::InvalidParams("interval_levels must be positive".into()));
        }
        Ok(())
    }
}
