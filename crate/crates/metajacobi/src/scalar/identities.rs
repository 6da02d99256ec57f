use std::f64::consts::PI;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::gamma::{gamma, gamma_ratio_complex, pochhammer, sin_pi};
use crate::scalar::hyper::{hyp2f1, hyp2f1_terminating};
use crate::scalar::params::{near_integer, Params};
use crate::C64;

/// Two-sided identities between gamma values and Gauss series that the
/// overlap computations rely on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityTag {
    /// `2F1(-n,b;c;z) = (c-b)_n/(c)_n 2F1(-n,b;b+1-c-n;1-z)`, any `z`.
    Kummer1,
    /// Connection between solutions around `z = 0` and `z = 1`;
    /// needs `|z| < 1` and `|1 - z| < 1`.
    Linear35,
    /// Connection between solutions around `z = 0` and `z = infinity`;
    /// needs `|z| > 1` and `Re z < 1/2` (the left side is continued there by
    /// the Pfaff transformation).
    Linear34,
    /// `2F1(a,c-b;c;z/(z-1)) = (1-z)^a 2F1(a,b;c;z)`; needs `|z| < 1`, `Re z < 1/2`.
    PfaffZ,
    /// `2F1(a,c-b;a+1-b;1/(1-z)) = (1-z)^a (-z)^{-a} 2F1(a,a+1-c;a+1-b;1/z)`;
    /// needs `|z| > 1` and `|1 - z| > 1`.
    PfaffRecip,
    /// `Gamma(x) Gamma(1-x) = pi / sin(pi x)`.
    GammaReflection,
    /// `Gamma(-m-alpha) Gamma(m+alpha+1) = (-1)^{m+1} Gamma(alpha) Gamma(1-alpha)`.
    GammaUseful,
    /// `(e^{i pi (alpha+beta)} sin(pi alpha) + sin(pi beta)) / sin(pi (alpha+beta)) = e^{i pi alpha}`.
    PhaseLittleid,
    /// `2F1(-n,b;c;1) = (c-b)_n/(c)_n`.
    Vandermonde,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 9] = [
        IdentityTag::Kummer1,
        IdentityTag::Linear35,
        IdentityTag::Linear34,
        IdentityTag::PfaffZ,
        IdentityTag::PfaffRecip,
        IdentityTag::GammaReflection,
        IdentityTag::GammaUseful,
        IdentityTag::PhaseLittleid,
        IdentityTag::Vandermonde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityTag::Kummer1 => "KUMMER1",
            IdentityTag::Linear35 => "LINEAR35",
            IdentityTag::Linear34 => "LINEAR34",
            IdentityTag::PfaffZ => "PFAFF_Z",
            IdentityTag::PfaffRecip => "PFAFF_RECIP",
            IdentityTag::GammaReflection => "GAMMA_REFLECTION",
            IdentityTag::GammaUseful => "GAMMA_USEFUL",
            IdentityTag::PhaseLittleid => "PHASE_LITTLEID",
            IdentityTag::Vandermonde => "VANDERMONDE",
        }
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Free arguments of an identity. Each tag reads only the fields it needs:
///
/// | tag | fields |
/// |-----|--------|
/// | `Kummer1`, `Vandermonde` | `n`, `b`, `c` (+ `z` for `Kummer1`) |
/// | `Linear35`, `Linear34`, `PfaffZ`, `PfaffRecip` | `a`, `b`, `c`, `z` |
/// | `GammaReflection` | `x` |
/// | `GammaUseful` | `m` and `alpha` from the params |
/// | `PhaseLittleid` | `alpha`, `beta` from the params |
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdentityArgs {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub z: C64,
    pub x: C64,
    pub n: usize,
    pub m: usize,
}

impl Default for IdentityArgs {
    fn default() -> Self {
        let zero = C64::new(0.0, 0.0);
        IdentityArgs {
            a: zero,
            b: zero,
            c: zero,
            z: zero,
            x: zero,
            n: 0,
            m: 0,
        }
    }
}

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

fn domain(tag: IdentityTag, why: &str) -> Error {
    Error::Domain(format!("{tag}: {why}"))
}

/// Evaluates both sides of the tagged identity and returns
/// `|lhs - rhs| / (1 + |rhs|)`.
pub fn identity_residual(tag: IdentityTag, params: &Params, aux: &IdentityArgs) -> Result<f64> {
    let (lhs, rhs) = identity_sides(tag, params, aux)?;
    Ok((lhs - rhs).norm() / (1.0 + rhs.norm()))
}

/// Both sides of the tagged identity, after the validity-region check.
pub fn identity_sides(tag: IdentityTag, params: &Params, aux: &IdentityArgs) -> Result<(C64, C64)> {
    let IdentityArgs {
        a, b, c, z, x, n, m, ..
    } = *aux;
    match tag {
        IdentityTag::Kummer1 => {
            let lhs = hyp2f1_terminating(n, b, c, z)?;
            let pref = pochhammer(c - b, n) / pochhammer(c, n);
            let rhs = pref * hyp2f1_terminating(n, b, b + 1.0 - c - n as f64, one() - z)?;
            Ok((lhs, rhs))
        }
        IdentityTag::Vandermonde => {
            let lhs = hyp2f1_terminating(n, b, c, one())?;
            Ok((lhs, pochhammer(c - b, n) / pochhammer(c, n)))
        }
        IdentityTag::Linear35 => {
            if z.norm() >= 1.0 || (one() - z).norm() >= 1.0 {
                return Err(domain(tag, "needs |z| < 1 and |1 - z| < 1"));
            }
            let lhs = hyp2f1(a, b, c, z)?;
            let g1 = gamma_ratio_complex(&[a + 1.0 - c, b + 1.0 - c], &[a + b + 1.0 - c, one() - c])?;
            let g2 = gamma_ratio_complex(
                &[a + 1.0 - c, b + 1.0 - c, c - 1.0],
                &[a, b, one() - c],
            )?;
            let t1 = g1 * hyp2f1(a, b, a + b + 1.0 - c, one() - z)?;
            let t2 = g2
                * z.powc(one() - c)
                * (one() - z).powc(c - a - b)
                * hyp2f1(one() - a, one() - b, 2.0 - c, z)?;
            Ok((lhs, t1 - t2))
        }
        IdentityTag::Linear34 => {
            if z.norm() <= 1.0 || z.re >= 0.5 {
                return Err(domain(tag, "needs |z| > 1 and Re z < 1/2"));
            }
            // continue the left side into |z| > 1 through the Pfaff form
            let lhs = (one() - z).powc(-a) * hyp2f1(a, c - b, c, z / (z - 1.0))?;
            let w = one() / z;
            let g1 = gamma_ratio_complex(&[c, b - a], &[c - a, b])?;
            let g2 = gamma_ratio_complex(&[c, a - b], &[c - b, a])?;
            let t1 = g1 * (-z).powc(-a) * hyp2f1(a, a + 1.0 - c, a + 1.0 - b, w)?;
            let t2 = g2
                * (-z).powc(a - c)
                * (one() - z).powc(c - a - b)
                * hyp2f1(one() - a, c - a, b + 1.0 - a, w)?;
            Ok((lhs, t1 + t2))
        }
        IdentityTag::PfaffZ => {
            if z.norm() >= 1.0 || z.re >= 0.5 {
                return Err(domain(tag, "needs |z| < 1 and Re z < 1/2"));
            }
            let lhs = hyp2f1(a, c - b, c, z / (z - 1.0))?;
            let rhs = (one() - z).powc(a) * hyp2f1(a, b, c, z)?;
            Ok((lhs, rhs))
        }
        IdentityTag::PfaffRecip => {
            if z.norm() <= 1.0 || (one() - z).norm() <= 1.0 {
                return Err(domain(tag, "needs |z| > 1 and |1 - z| > 1"));
            }
            let lhs = hyp2f1(a, c - b, a + 1.0 - b, one() / (one() - z))?;
            let rhs = (one() - z).powc(a)
                * (-z).powc(-a)
                * hyp2f1(a, a + 1.0 - c, a + 1.0 - b, one() / z)?;
            Ok((lhs, rhs))
        }
        IdentityTag::GammaReflection => {
            let lhs = gamma(x)? * gamma(one() - x)?;
            let s = sin_pi(x);
            if s.norm() == 0.0 {
                return Err(Error::Pole(format!("{x}")));
            }
            Ok((lhs, PI / s))
        }
        IdentityTag::GammaUseful => {
            let al = C64::new(params.alpha(), 0.0);
            let mf = m as f64;
            let lhs = gamma(-al - mf)? * gamma(al + mf + 1.0)?;
            let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
            let rhs = gamma(al)? * gamma(one() - al)? * sign;
            Ok((lhs, rhs))
        }
        IdentityTag::PhaseLittleid => {
            let (al, be) = (params.alpha(), params.beta());
            if near_integer(al + be) {
                return Err(domain(tag, "alpha + beta must not be an integer"));
            }
            let num = C64::from_polar(1.0, PI * (al + be)) * (PI * al).sin() + (PI * be).sin();
            let lhs = num / (PI * (al + be)).sin();
            Ok((lhs, C64::from_polar(1.0, PI * al)))
        }
    }
}

fn away_from_integers<R: Rng>(rng: &mut R, lo: f64, hi: f64, gap: f64) -> f64 {
    loop {
        let v = rng.random_range(lo..hi);
        if (v - v.round()).abs() > gap {
            return v;
        }
    }
}

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Draws parameters and an evaluation point inside the validity region of
/// `tag`. Samples that hit a removable singularity are redrawn, so the
/// returned tuple always evaluates.
pub fn sample_identity<R: Rng>(tag: IdentityTag, rng: &mut R) -> (Params, IdentityArgs) {
    loop {
        let candidate = draw(tag, rng);
        if identity_sides(tag, &candidate.0, &candidate.1).is_ok() {
            return candidate;
        }
    }
}

fn draw<R: Rng>(tag: IdentityTag, rng: &mut R) -> (Params, IdentityArgs) {
    let base = Params::relaxed(0.5, 0.5).expect("finite");
    let mut args = IdentityArgs::default();
    match tag {
        IdentityTag::Kummer1 | IdentityTag::Vandermonde => {
            args.n = rng.random_range(0..=10);
            args.b = real(away_from_integers(rng, -2.0, 3.0, 0.05));
            args.c = real(away_from_integers(rng, 0.1, 4.0, 0.05));
            let r = rng.random_range(0.0..1.5);
            let t = rng.random_range(-PI..PI);
            args.z = C64::from_polar(r, t);
            (base, args)
        }
        IdentityTag::Linear35 => {
            args.a = real(away_from_integers(rng, -1.5, 2.5, 0.05));
            args.b = real(away_from_integers(rng, -1.5, 2.5, 0.05));
            args.c = real(away_from_integers(rng, -1.5, 2.5, 0.05));
            let r = rng.random_range(0.0..0.35);
            let t = rng.random_range(-PI..PI);
            args.z = real(0.5) + C64::from_polar(r, t);
            (base, args)
        }
        IdentityTag::Linear34 => {
            args.a = real(away_from_integers(rng, -1.5, 2.5, 0.05));
            args.b = real(away_from_integers(rng, -1.5, 2.5, 0.05));
            args.c = real(away_from_integers(rng, -1.5, 2.5, 0.05));
            let r = rng.random_range(1.3..3.0);
            let t = rng.random_range(0.5 * PI + 0.3..1.5 * PI - 0.3);
            args.z = C64::from_polar(r, t);
            (base, args)
        }
        IdentityTag::PfaffZ => {
            args.a = real(rng.random_range(-1.5..2.5));
            args.b = real(rng.random_range(-1.5..2.5));
            args.c = real(away_from_integers(rng, -1.5, 2.5, 0.05));
            loop {
                let z = C64::from_polar(rng.random_range(0.0..0.6), rng.random_range(-PI..PI));
                if z.re <= 0.35 {
                    args.z = z;
                    break;
                }
            }
            (base, args)
        }
        IdentityTag::PfaffRecip => {
            args.a = real(rng.random_range(-1.5..2.5));
            args.b = real(rng.random_range(-1.5..2.5));
            args.c = real(rng.random_range(-1.5..2.5));
            loop {
                let z = C64::from_polar(rng.random_range(1.5..4.0), rng.random_range(0.4..2.0 * PI - 0.4));
                if (one() - z).norm() > 1.3 {
                    args.z = z;
                    break;
                }
            }
            (base, args)
        }
        IdentityTag::GammaReflection => {
            args.x = real(away_from_integers(rng, -3.5, 3.5, 0.02));
            (base, args)
        }
        IdentityTag::GammaUseful => {
            args.m = rng.random_range(0..=8);
            let al = away_from_integers(rng, 0.05, 3.0, 0.02);
            (Params::relaxed(al, 0.5).expect("finite"), args)
        }
        IdentityTag::PhaseLittleid => loop {
            let al: f64 = rng.random_range(-0.9..3.0);
            let be: f64 = rng.random_range(-0.9..3.0);
            if (al + be - (al + be).round()).abs() > 0.02 {
                break (Params::relaxed(al, be).expect("finite"), args);
            }
        },
    }
}
