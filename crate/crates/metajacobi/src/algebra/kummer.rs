use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::hyp2f1;
use crate::{Params, C64};

/// Three of Kummer's solutions of the hypergeometric equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KummerTag {
    /// `2F1(a, b; c; z)`.
    U1,
    /// `(1 - z)^(-a) 2F1(a, c - b; a + 1 - b; 1/(1 - z))`.
    U3,
    /// `(1 - z)^(-b) 2F1(b, c - a; b + 1 - a; 1/(1 - z))`.
    U4,
}

impl KummerTag {
    pub fn name(self) -> &'static str {
        match self {
            KummerTag::U1 => "U1",
            KummerTag::U3 => "U3",
            KummerTag::U4 => "U4",
        }
    }
}

impl fmt::Display for KummerTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KummerTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "U1" => Ok(KummerTag::U1),
            "U3" => Ok(KummerTag::U3),
            "U4" => Ok(KummerTag::U4),
            _ => Err(Error::Domain(format!("unknown Kummer solution {s}"))),
        }
    }
}

/// Evaluates the chosen solution with principal branches. Non-terminating
/// series need their argument inside the unit disk.
pub fn kummer_solution(tag: KummerTag, a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    let one = C64::new(1.0, 0.0);
    match tag {
        KummerTag::U1 => hyp2f1(a, b, c, z),
        KummerTag::U3 => {
            let w = (one - z).inv();
            Ok((one - z).powc(-a) * hyp2f1(a, c - b, a + 1.0 - b, w)?)
        }
        KummerTag::U4 => {
            let w = (one - z).inv();
            Ok((one - z).powc(-b) * hyp2f1(b, c - a, b + 1.0 - a, w)?)
        }
    }
}

/// Second expression for `U4` through a series in `1/z`; it terminates
/// when `1 - a` is a non-positive integer.
pub fn kummer_u4_alternate(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    let one = C64::new(1.0, 0.0);
    let pre = (-z).powc(a - c) * (one - z).powc(c - a - b);
    Ok(pre * hyp2f1(one - a, c - a, b + 1.0 - a, z.inv())?)
}

/// Parameter triples `(a, b, c)` of the hypergeometric equations met by the
/// eigenproblems of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KummerParams {
    /// `(-n, alpha + 1, 1 - n - beta)`: the equation solved by `P_n`.
    Askey,
    /// `(m + 1, -alpha, 1 + beta + m)`.
    Partner,
    /// `(m + 1, 1 - alpha, 2 + beta + m)`: the equation of the partner overlap.
    PartnerShifted,
}

impl KummerParams {
    pub fn triple(self, n: usize, params: &Params) -> (C64, C64, C64) {
        let (al, be) = (params.alpha(), params.beta());
        let nf = n as f64;
        let (a, b, c) = match self {
            KummerParams::Askey => (-nf, al + 1.0, 1.0 - nf - be),
            KummerParams::Partner => (nf + 1.0, -al, 1.0 + be + nf),
            KummerParams::PartnerShifted => (nf + 1.0, 1.0 - al, 2.0 + be + nf),
        };
        (C64::new(a, 0.0), C64::new(b, 0.0), C64::new(c, 0.0))
    }
}
