use crate::error::{Error, Result};

const INTEGER_TOL: f64 = 1e-12;

pub(crate) fn near_integer(x: f64) -> bool {
    (x - x.round()).abs() <= INTEGER_TOL * x.abs().max(1.0)
}

pub(crate) fn near_nonpositive_integer(x: f64) -> bool {
    x < 0.5 && near_integer(x)
}

/// The real parameter pair `(alpha, beta)` shared by every family.
///
/// [`Params::new`] enforces the generic-parameter guard: `beta` is not an
/// integer, `alpha` is not a negative integer and `alpha + beta + 1` is not a
/// non-positive integer. [`Params::relaxed`] only requires finite values; the
/// individual operations then check the denominators they actually divide by.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Params {
    alpha: f64,
    beta: f64,
}

impl Params {
    pub fn new(alpha: f64, beta: f64) -> Result<Params> {
        let p = Params::relaxed(alpha, beta)?;
        if near_integer(beta) {
            return Err(Error::InvalidParams(format!("beta = {beta} is an integer")));
        }
        if alpha < 0.0 && near_integer(alpha) {
            return Err(Error::InvalidParams(format!(
                "alpha = {alpha} is a negative integer"
            )));
        }
        if near_nonpositive_integer(alpha + beta + 1.0) {
            return Err(Error::InvalidParams(format!(
                "alpha + beta + 1 = {} is a non-positive integer",
                alpha + beta + 1.0
            )));
        }
        Ok(p)
    }

    pub fn relaxed(alpha: f64, beta: f64) -> Result<Params> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::InvalidParams(format!(
                "non-finite parameters ({alpha}, {beta})"
            )));
        }
        Ok(Params { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Representation label `(alpha + beta + 1) / 2`.
    pub fn tau(&self) -> f64 {
        0.5 * (self.alpha + self.beta + 1.0)
    }

    pub fn is_generic(&self) -> bool {
        Params::new(self.alpha, self.beta).is_ok()
    }

    /// `(beta, alpha)`: the partner family uses the exchanged pair.
    pub fn swapped(&self) -> Params {
        Params {
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    /// `(alpha + 1, beta - 1)`, the pair reached by the contiguity shift.
    pub fn shifted(&self) -> Params {
        Params {
            alpha: self.alpha + 1.0,
            beta: self.beta - 1.0,
        }
    }

    /// `(-alpha - 1, 1 - beta)`, the pair that maps negative-index solutions
    /// onto non-negative ones.
    pub fn flipped(&self) -> Params {
        Params {
            alpha: -self.alpha - 1.0,
            beta: 1.0 - self.beta,
        }
    }

    /// Value of the Casimir element on the module, `2 alpha beta - alpha + beta - 1`.
    pub fn casimir(&self) -> f64 {
        2.0 * self.alpha * self.beta - self.alpha + self.beta - 1.0
    }
}
