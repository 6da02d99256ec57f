use std::fmt;
use std::str::FromStr;

use super::diffop::DiffOp;
use crate::error::Error;
use crate::Params;

/// Elements of the algebra that have a differential realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorTag {
    L,
    M,
    X,
    /// `XL`.
    R,
    /// `XM`.
    RTilde,
    /// Adjoint of `L` with respect to the module pairing.
    LT,
    /// Adjoint of `M` with respect to the module pairing.
    MT,
    J0,
    JPlus,
    JMinus,
    K1,
    K2,
    K3,
    CasimirQ,
    CasimirJ2,
}

impl GeneratorTag {
    pub const ALL: [GeneratorTag; 15] = [
        GeneratorTag::L,
        GeneratorTag::M,
        GeneratorTag::X,
        GeneratorTag::R,
        GeneratorTag::RTilde,
        GeneratorTag::LT,
        GeneratorTag::MT,
        GeneratorTag::J0,
        GeneratorTag::JPlus,
        GeneratorTag::JMinus,
        GeneratorTag::K1,
        GeneratorTag::K2,
        GeneratorTag::K3,
        GeneratorTag::CasimirQ,
        GeneratorTag::CasimirJ2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorTag::L => "L",
            GeneratorTag::M => "M",
            GeneratorTag::X => "X",
            GeneratorTag::R => "R",
            GeneratorTag::RTilde => "RTILDE",
            GeneratorTag::LT => "LT",
            GeneratorTag::MT => "MT",
            GeneratorTag::J0 => "J0",
            GeneratorTag::JPlus => "JPLUS",
            GeneratorTag::JMinus => "JMINUS",
            GeneratorTag::K1 => "K1",
            GeneratorTag::K2 => "K2",
            GeneratorTag::K3 => "K3",
            GeneratorTag::CasimirQ => "CASIMIR_Q",
            GeneratorTag::CasimirJ2 => "CASIMIR_J2",
        }
    }
}

impl fmt::Display for GeneratorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        GeneratorTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown generator {s}")))
    }
}

/// The normal-ordered differential realization of `tag`.
pub fn realize(tag: GeneratorTag, params: &Params) -> DiffOp {
    let (a, b) = (params.alpha(), params.beta());
    let tau = params.tau();
    match tag {
        GeneratorTag::L => DiffOp::from_real(&[((1, 1), 1.0), ((0, 1), -1.0), ((0, 0), a + 1.0)]),
        GeneratorTag::M => DiffOp::from_real(&[
            ((2, 2), 1.0),
            ((1, 2), -1.0),
            ((1, 1), a + 2.0),
            ((0, 1), b - 1.0),
        ]),
        GeneratorTag::X => DiffOp::from_real(&[((1, 0), 1.0)]),
        GeneratorTag::R => DiffOp::from_real(&[((2, 1), 1.0), ((1, 1), -1.0), ((1, 0), a + 1.0)]),
        GeneratorTag::RTilde => DiffOp::from_real(&[
            ((3, 2), 1.0),
            ((2, 2), -1.0),
            ((2, 1), a + 2.0),
            ((1, 1), b - 1.0),
        ]),
        GeneratorTag::LT => DiffOp::from_real(&[((1, 1), -1.0), ((0, 1), 1.0), ((0, 0), a)]),
        GeneratorTag::MT => DiffOp::from_real(&[
            ((2, 2), 1.0),
            ((1, 2), -1.0),
            ((1, 1), 2.0 - a),
            ((0, 1), -b - 1.0),
            ((0, 0), -a),
        ]),
        GeneratorTag::J0 => DiffOp::from_real(&[((1, 1), 1.0), ((0, 1), -1.0), ((0, 0), tau)]),
        GeneratorTag::JPlus => DiffOp::from_real(&[((1, 0), 1.0), ((0, 0), -1.0)]),
        GeneratorTag::JMinus => DiffOp::from_real(&[((1, 2), 1.0), ((0, 2), -1.0), ((0, 1), 2.0 * tau)]),
        GeneratorTag::K1 => -realize(GeneratorTag::M, params),
        GeneratorTag::K2 => realize(GeneratorTag::X, params),
        GeneratorTag::K3 => DiffOp::from_real(&[
            ((2, 1), -2.0),
            ((1, 1), 2.0),
            ((1, 0), -(a + 2.0)),
            ((0, 0), 1.0 - b),
        ]),
        GeneratorTag::CasimirQ => {
            let l = realize(GeneratorTag::L, params);
            let m = realize(GeneratorTag::M, params);
            let x = realize(GeneratorTag::X, params);
            let l2 = &l * &l;
            let anti = |p: &DiffOp, q: &DiffOp| &(p * q) + &(q * p);
            let q = &(&anti(&l2, &x) - &anti(&l, &x).scale_real(a + 1.0)) - &anti(&m, &x);
            &(&q + &m.scale_real(2.0)) + &l.scale_real(2.0 * b)
        }
        GeneratorTag::CasimirJ2 => {
            let j0 = realize(GeneratorTag::J0, params);
            let jp = realize(GeneratorTag::JPlus, params);
            let jm = realize(GeneratorTag::JMinus, params);
            &(&(&j0 * &j0) - &j0) - &(&jp * &jm)
        }
    }
}

/// Images of `J0, J+, J-` written in `L, M, X`.
pub fn su11_images(params: &Params) -> [DiffOp; 3] {
    let a = params.alpha();
    let l = realize(GeneratorTag::L, params);
    let m = realize(GeneratorTag::M, params);
    let x = realize(GeneratorTag::X, params);
    let j0 = l.plus_scalar(-(a - params.beta() + 1.0) / 2.0);
    let jp = x.plus_scalar(-1.0);
    let jm = &(&(-&(&l * &l)) + &l.scale_real(a + 1.0)) + &m;
    [j0, jp, jm]
}

/// `L, M, X` rebuilt from given `J0, J+, J-` through the inverse map.
pub fn embed_from_su11(j: &[DiffOp; 3], params: &Params) -> [DiffOp; 3] {
    let (a, b) = (params.alpha(), params.beta());
    let [j0, jp, jm] = j;
    let l = j0.plus_scalar((a - b + 1.0) / 2.0);
    let m = &(&(j0 * j0) + jm) - &j0.scale_real(b);
    let m = m.plus_scalar(-(a - b + 1.0) * (a + b + 1.0) / 4.0);
    let x = jp.plus_scalar(1.0);
    [l, m, x]
}
