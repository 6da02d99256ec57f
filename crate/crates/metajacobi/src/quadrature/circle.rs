use super::gauss::GaussLegendre;
use super::QuadratureSpec;
use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};
use crate::C64;

/// Number of additional refinements tried after the first comparison.
pub const MAX_CIRCLE_REFINEMENTS: usize = 3;

const OUTER_PANELS: usize = 8;

/// A point `z = e^{i theta}` of the unit circle, `theta` in `(-pi, pi)`.
#[derive(Clone, Copy, Debug)]
pub struct CirclePoint {
    pub theta: Dd,
    pub z: CDd,
}

impl CirclePoint {
    pub fn new(theta: Dd) -> CirclePoint {
        CirclePoint {
            theta,
            z: CDd::from_polar(Dd::ONE, theta),
        }
    }

    /// `1/z`, which on the circle is the conjugate.
    pub fn z_inv(&self) -> CDd {
        self.z.conj()
    }

    // arg(-z) = theta - pi sgn(theta)
    fn arg_neg_z(&self) -> Dd {
        if self.theta.hi > 0.0 {
            self.theta - Dd::PI
        } else {
            self.theta + Dd::PI
        }
    }

    /// Principal `(-z)^s`; the cut of `(-z)^s` sits at `theta = 0`.
    pub fn neg_z_pow(&self, s: f64) -> CDd {
        CDd::from_polar(Dd::ONE, self.arg_neg_z() * s)
    }

    /// Principal `(1 - z)^t`, computed from `|1 - z| = 2 |sin(theta/2)|` so
    /// that no cancellation occurs near `z = 1`.
    pub fn one_minus_z_pow(&self, t: f64) -> CDd {
        if t == 0.0 {
            return CDd::ONE;
        }
        let (s, _) = self.theta.ldexp(-1).sin_cos();
        let modulus = s.abs().ldexp(1).powf(t);
        CDd::from_polar(modulus, self.arg_neg_z().ldexp(-1) * t)
    }
}

// Panels on (0, pi): the first outer panel is split dyadically toward 0.
fn half_panels(levels: usize, outer: usize) -> Vec<(Dd, Dd)> {
    let width = Dd::PI / outer as f64;
    let mut out = Vec::with_capacity(levels + outer);
    out.push((Dd::ZERO, width.ldexp(-(levels as i32))));
    for j in (0..levels).rev() {
        out.push((width.ldexp(-(j as i32) - 1), width.ldexp(-(j as i32))));
    }
    for k in 1..outer {
        out.push((width * k as f64, width * (k + 1) as f64));
    }
    out
}

struct Pass {
    values: Vec<CDd>,
    absolute: Vec<f64>,
}

fn one_pass<F>(outputs: usize, f: &F, rule: &GaussLegendre, levels: usize, outer: usize) -> Pass
where
    F: Fn(&CirclePoint, &mut [CDd]),
{
    let mut values = vec![CDd::ZERO; outputs];
    let mut absolute = vec![0.0; outputs];
    let mut buf = vec![CDd::ZERO; outputs];
    let half = half_panels(levels, outer);
    // left to right: (-pi, 0) then (0, pi)
    let panels = half
        .iter()
        .rev()
        .map(|&(a, b)| (-b, -a))
        .chain(half.iter().copied());
    let two_pi = Dd::PI.ldexp(1);
    for (a, b) in panels {
        let mid = (a + b).ldexp(-1);
        let rad = (b - a).ldexp(-1);
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let p = CirclePoint::new(mid + rad * x);
            f(&p, &mut buf);
            // (1/2 pi i) dz = z dtheta / (2 pi)
            let jac = p.z.scale(rad * w / two_pi);
            let jac_abs = (rad * w / two_pi).to_f64();
            for (k, v) in buf.iter_mut().enumerate() {
                let t = *v * jac;
                absolute[k] += v.abs_f64() * jac_abs;
                values[k] = values[k] + t;
                *v = CDd::ZERO;
            }
        }
    }
    Pass { values, absolute }
}

/// Several contour integrals `(1/2 pi i) \oint f_k(z) dz` over `|z| = 1`
/// sharing their nodes. `f` writes the values `f_k(z)` into the slice.
///
/// Each pass uses Gauss–Legendre panels graded dyadically toward `z = 1`
/// from both sides; the grading depth and the number of outer panels are
/// doubled until two passes agree within `target_tol` relative to
/// `max(|I|, \int |f|)`, for every output.
pub fn circle_integrals<F>(outputs: usize, f: F, spec: &QuadratureSpec) -> Result<Vec<C64>>
where
    F: Fn(&CirclePoint, &mut [CDd]),
{
    Ok(circle_integrals_dd(outputs, f, spec)?.into_iter().map(CDd::to_c64).collect())
}

pub(crate) fn circle_integrals_dd<F>(outputs: usize, f: F, spec: &QuadratureSpec) -> Result<Vec<CDd>>
where
    F: Fn(&CirclePoint, &mut [CDd]),
{
    spec.validate()?;
    let rule = GaussLegendre::new(spec.nodes_per_panel);
    let (mut levels, mut outer) = (spec.panels, OUTER_PANELS);
    let mut prev = one_pass(outputs, &f, &rule, levels, outer);
    let mut worst = 0.0;
    for _ in 0..=MAX_CIRCLE_REFINEMENTS {
        levels *= 2;
        outer *= 2;
        let next = one_pass(outputs, &f, &rule, levels, outer);
        worst = 0.0;
        for k in 0..outputs {
            let diff = (next.values[k] - prev.values[k]).abs_f64();
            let scale = next.values[k].abs_f64().max(next.absolute[k]).max(f64::MIN_POSITIVE);
            worst = f64::max(worst, diff / scale);
        }
        if worst <= spec.target_tol {
            return Ok(next.values);
        }
        prev = next;
    }
    Err(Error::Quadrature(format!(
        "circle passes still differ by {worst:e} (relative) after {MAX_CIRCLE_REFINEMENTS} refinements"
    )))
}

/// Single-output form of [`circle_integrals`].
pub fn circle_integral<F>(f: F, spec: &QuadratureSpec) -> Result<C64>
where
    F: Fn(&CirclePoint) -> CDd,
{
    let v = circle_integrals(1, |p: &CirclePoint, out: &mut [CDd]| out[0] = f(p), spec)?;
    Ok(v[0])
}
