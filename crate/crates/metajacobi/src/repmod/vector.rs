use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::{Params, C64};

/// Coefficients below this magnitude are dropped after every action.
pub const MODULE_PRUNE_TOL: f64 = 1e-15;

/// A finitely supported vector `sum_k v(k) e_k` over the module basis,
/// `k` ranging over all integers.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ModuleVector {
    coeffs: BTreeMap<i64, C64>,
}

impl ModuleVector {
    pub fn zero() -> ModuleVector {
        ModuleVector::default()
    }

    /// The basis vector `e_k`.
    pub fn basis(k: i64) -> ModuleVector {
        ModuleVector::from_pairs([(k, C64::new(1.0, 0.0))])
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, C64)>>(pairs: I) -> ModuleVector {
        let mut v = ModuleVector::zero();
        for (k, c) in pairs {
            v.add_at(k, c);
        }
        v.prune();
        v
    }

    /// Vector with `v(start + j) = values[j]`.
    pub fn from_slice(start: i64, values: &[C64]) -> ModuleVector {
        ModuleVector::from_pairs(values.iter().enumerate().map(|(j, &c)| (start + j as i64, c)))
    }

    fn add_at(&mut self, k: i64, c: C64) {
        *self.coeffs.entry(k).or_insert(C64::new(0.0, 0.0)) += c;
    }

    fn prune(&mut self) {
        self.coeffs.retain(|_, c| c.norm() >= MODULE_PRUNE_TOL);
    }

    pub fn coeff(&self, k: i64) -> C64 {
        self.coeffs.get(&k).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    /// Indices carrying a nonzero coefficient, in increasing order.
    pub fn support(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    pub fn min_index(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: C64) -> ModuleVector {
        ModuleVector::from_pairs(self.iter().map(|(k, c)| (k, c * s)))
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        ModuleVector::from_pairs(self.iter().chain(other.iter()))
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        ModuleVector::from_pairs(self.iter().chain(other.iter().map(|(k, c)| (k, -c))))
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// The bilinear pairing `sum_k u(k) v(k)`; no complex conjugation.
pub fn pairing(u: &ModuleVector, v: &ModuleVector) -> C64 {
    let (small, big) = if u.len() <= v.len() { (u, v) } else { (v, u) };
    small
        .iter()
        .filter_map(|(k, a)| big.coeffs.get(&k).map(|b| a * b))
        .sum()
}

/// Generators acting on the module, together with their adjoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOp {
    L,
    M,
    X,
    LT,
    MT,
    XT,
}

impl ModuleOp {
    pub const ALL: [ModuleOp; 6] = [ModuleOp::L, ModuleOp::M, ModuleOp::X, ModuleOp::LT, ModuleOp::MT, ModuleOp::XT];

    pub fn name(self) -> &'static str {
        match self {
            ModuleOp::L => "L",
            ModuleOp::M => "M",
            ModuleOp::X => "X",
            ModuleOp::LT => "LT",
            ModuleOp::MT => "MT",
            ModuleOp::XT => "XT",
        }
    }

    /// The adjoint with respect to [`pairing`].
    pub fn transpose(self) -> ModuleOp {
        match self {
            ModuleOp::L => ModuleOp::LT,
            ModuleOp::M => ModuleOp::MT,
            ModuleOp::X => ModuleOp::XT,
            ModuleOp::LT => ModuleOp::L,
            ModuleOp::MT => ModuleOp::M,
            ModuleOp::XT => ModuleOp::X,
        }
    }

    /// Image of `e_k` as a list of `(index, coefficient)` pairs.
    pub fn on_basis(self, k: i64, params: &Params) -> Vec<(i64, f64)> {
        let (a, b) = (params.alpha(), params.beta());
        let kf = k as f64;
        match self {
            ModuleOp::L | ModuleOp::LT => vec![(k, kf + a + 1.0)],
            ModuleOp::M => vec![(k, kf * (kf + a + 1.0)), (k - 1, kf * (kf + a + b))],
            ModuleOp::MT => vec![(k + 1, (kf + 1.0) * (kf + a + b + 1.0)), (k, kf * (kf + a + 1.0))],
            ModuleOp::X => vec![(k + 1, 1.0), (k, 1.0)],
            ModuleOp::XT => vec![(k, 1.0), (k - 1, 1.0)],
        }
    }
}

impl fmt::Display for ModuleOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModuleOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        ModuleOp::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown module operator {s}")))
    }
}

/// Linear extension of the basis action of `op`.
pub fn act(op: ModuleOp, v: &ModuleVector, params: &Params) -> ModuleVector {
    ModuleVector::from_pairs(
        v.iter()
            .flat_map(|(k, c)| op.on_basis(k, params).into_iter().map(move |(j, w)| (j, c * w))),
    )
}
