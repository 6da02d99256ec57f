use super::QuadratureSpec;
use crate::error::{Error, Result};

// Largest |t| of the double-exponential substitution; beyond it the
// abscissae are within 1e-300 of the endpoints.
const T_MAX: f64 = 6.5;
const MIN_LEVELS: usize = 3;

/// An abscissa of `(0, 1)` together with its distance to 1, both accurate
/// near their respective endpoints.
#[derive(Clone, Copy, Debug)]
pub struct IntervalPoint {
    pub x: f64,
    pub one_minus_x: f64,
}

// x = 1 / (1 + e^{-u}), u = pi sinh t; returns the point and dx/dt
fn abscissa(t: f64) -> Option<(IntervalPoint, f64)> {
    let u = std::f64::consts::PI * t.sinh();
    let e = (-u.abs()).exp();
    let (near, far) = (e / (1.0 + e), 1.0 / (1.0 + e));
    let p = if u >= 0.0 {
        IntervalPoint { x: far, one_minus_x: near }
    } else {
        IntervalPoint { x: near, one_minus_x: far }
    };
    if p.x < 1e-300 || p.one_minus_x < 1e-300 {
        return None;
    }
    Some((p, std::f64::consts::PI * t.cosh() * near * far))
}

// adds f at t to the running sums, scaled by the substitution
fn sample<F>(t: f64, f: &F, buf: &mut [f64], sums: &mut [f64], abs_sums: &mut [f64])
where
    F: Fn(&IntervalPoint, &mut [f64]),
{
    if let Some((p, w)) = abscissa(t) {
        buf.iter_mut().for_each(|v| *v = 0.0);
        f(&p, buf);
        for k in 0..buf.len() {
            sums[k] += buf[k] * w;
            abs_sums[k] += buf[k].abs() * w;
        }
    }
}

/// Several integrals `\int_0^1 g_k(x) dx` by tanh-sinh quadrature.
///
/// The step is halved from 1 (reusing earlier samples) until two successive
/// levels agree within `target_tol` relative to `max(|I|, \int |g|)`, for
/// at most `interval_levels` halvings.
pub fn interval_integrals<F>(outputs: usize, g: F, spec: &QuadratureSpec) -> Result<Vec<f64>>
where
    F: Fn(&IntervalPoint, &mut [f64]),
{
    spec.validate()?;
    let mut buf = vec![0.0; outputs];
    let mut sums = vec![0.0; outputs];
    let mut abs_sums = vec![0.0; outputs];
    let mut h = 1.0;
    sample(0.0, &g, &mut buf, &mut sums, &mut abs_sums);
    let mut k = 1;
    while k as f64 * h <= T_MAX {
        let t = k as f64 * h;
        sample(-t, &g, &mut buf, &mut sums, &mut abs_sums);
        sample(t, &g, &mut buf, &mut sums, &mut abs_sums);
        k += 1;
    }
    let mut prev: Vec<f64> = sums.clone();
    let mut worst = f64::INFINITY;
    for level in 1..=spec.interval_levels {
        h /= 2.0;
        // only the odd multiples of the new step are new
        let mut k = 1;
        while k as f64 * h <= T_MAX {
            let t = k as f64 * h;
            sample(-t, &g, &mut buf, &mut sums, &mut abs_sums);
            sample(t, &g, &mut buf, &mut sums, &mut abs_sums);
            k += 2;
        }
        let cur: Vec<f64> = sums.iter().map(|s| s * h).collect();
        worst = 0.0;
        for j in 0..outputs {
            let scale = cur[j].abs().max(abs_sums[j] * h).max(f64::MIN_POSITIVE);
            worst = f64::max(worst, (cur[j] - prev[j]).abs() / scale);
        }
        if level >= MIN_LEVELS && worst <= spec.target_tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Quadrature(format!(
        "tanh-sinh levels still differ by {worst:e} (relative) after {} halvings",
        spec.interval_levels
    )))
}

/// Single-output form of [`interval_integrals`].
pub fn interval_integral<F>(g: F, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(&IntervalPoint) -> f64,
{
    let v = interval_integrals(1, |p: &IntervalPoint, out: &mut [f64]| out[0] = g(p), spec)?;
    Ok(v[0])
}
