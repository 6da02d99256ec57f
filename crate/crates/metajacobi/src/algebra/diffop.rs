use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::PolyCoeffs;
use crate::C64;

/// Coefficients smaller than this are dropped from every operator.
pub const PRUNE_TOL: f64 = 1e-15;
/// Largest power of `z` or `d/dz` a checked composition may produce.
pub const DEGREE_CAP: usize = 64;
/// Largest polynomial degree [`DiffOp::apply`] will produce.
pub const POLY_DEGREE_CAP: usize = 256;

/// A differential operator `sum c_{p,q} z^p d^q` in normal order: all
/// powers of `z` stand to the left of all derivatives.
///
/// Keys are `(p, q)`. Products are normal-ordered with the Leibniz rule.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiffOp {
    terms: BTreeMap<(usize, usize), C64>,
}

fn falling(n: usize, k: usize) -> f64 {
    (0..k).map(|i| (n - i) as f64).product()
}

fn binom(n: usize, k: usize) -> f64 {
    falling(n, k) / falling(k, k)
}

impl DiffOp {
    pub fn zero() -> DiffOp {
        DiffOp::default()
    }

    pub fn identity() -> DiffOp {
        DiffOp::monomial(0, 0, C64::new(1.0, 0.0))
    }

    /// `c z^p d^q`.
    pub fn monomial(p: usize, q: usize, c: C64) -> DiffOp {
        let mut op = DiffOp::zero();
        op.add_term(p, q, c);
        op
    }

    pub fn from_terms<I>(terms: I) -> DiffOp
    where
        I: IntoIterator<Item = ((usize, usize), C64)>,
    {
        let mut op = DiffOp::zero();
        for ((p, q), c) in terms {
            op.add_term(p, q, c);
        }
        op
    }

    /// Real-coefficient shorthand for [`DiffOp::from_terms`].
    pub fn from_real(terms: &[((usize, usize), f64)]) -> DiffOp {
        DiffOp::from_terms(terms.iter().map(|&(k, c)| (k, C64::new(c, 0.0))))
    }

    fn add_term(&mut self, p: usize, q: usize, c: C64) {
        let e = self.terms.entry((p, q)).or_insert(C64::new(0.0, 0.0));
        *e += c;
        if e.norm() < PRUNE_TOL {
            self.terms.remove(&(p, q));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), C64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// Coefficient of `z^p d^q`.
    pub fn coeff(&self, p: usize, q: usize) -> C64 {
        self.terms.get(&(p, q)).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order.
    pub fn order(&self) -> usize {
        self.terms.keys().map(|&(_, q)| q).max().unwrap_or(0)
    }

    /// Highest power of `z`.
    pub fn z_degree(&self) -> usize {
        self.terms.keys().map(|&(p, _)| p).max().unwrap_or(0)
    }

    /// Largest coefficient magnitude; the residual of an operator identity.
    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: C64) -> DiffOp {
        DiffOp::from_terms(self.terms().map(|(k, c)| (k, c * s)))
    }

    pub fn scale_real(&self, s: f64) -> DiffOp {
        self.scale(C64::new(s, 0.0))
    }

    /// Adds `s` times the identity.
    pub fn plus_scalar(&self, s: f64) -> DiffOp {
        self + &DiffOp::identity().scale_real(s)
    }

    fn product(&self, rhs: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (&(a, b), &x) in &self.terms {
            for (&(p, q), &y) in &rhs.terms {
                // d^b z^p = sum_j C(b, j) p!/(p-j)! z^(p-j) d^(b-j)
                for j in 0..=b.min(p) {
                    let w = binom(b, j) * falling(p, j);
                    out.add_term(a + p - j, b - j + q, x * y * w);
                }
            }
        }
        out
    }

    /// Normal-ordered product `self ∘ rhs`, rejecting results whose `z`
    /// degree or derivative order exceeds `cap`.
    pub fn compose_capped(&self, rhs: &DiffOp, cap: usize) -> Result<DiffOp> {
        let degree = (self.z_degree() + rhs.z_degree()).max(self.order() + rhs.order());
        if degree > cap {
            return Err(Error::DegreeCap { degree, cap });
        }
        Ok(self.product(rhs))
    }

    /// Normal-ordered product with the default cap.
    pub fn compose(&self, rhs: &DiffOp) -> Result<DiffOp> {
        self.compose_capped(rhs, DEGREE_CAP)
    }

    /// `AB - BA`, or `AB + BA` when `anti` is set.
    pub fn bracket(&self, rhs: &DiffOp, anti: bool) -> Result<DiffOp> {
        let ab = self.compose(rhs)?;
        let ba = rhs.compose(self)?;
        Ok(if anti { &ab + &ba } else { &ab - &ba })
    }

    /// Exact action on a polynomial in `z`.
    pub fn apply(&self, p: &PolyCoeffs) -> Result<PolyCoeffs> {
        let degree = p.degree() + self.z_degree();
        if degree > POLY_DEGREE_CAP {
            return Err(Error::DegreeCap {
                degree,
                cap: POLY_DEGREE_CAP,
            });
        }
        let mut out = vec![C64::new(0.0, 0.0); degree + 1];
        for (&(a, b), &x) in &self.terms {
            for (j, &c) in p.coeffs().iter().enumerate() {
                if j >= b {
                    out[j - b + a] += x * c * falling(j, b);
                }
            }
        }
        Ok(PolyCoeffs::new(out))
    }

    /// Action on the power `(z - 1)^mu` for any complex exponent, written as
    /// `sum_i w_i (z - 1)^(mu + i)`; returns the pairs `(i, w_i)` with
    /// `-order <= i <= z_degree - order`.
    ///
    /// Uses `z = 1 + s` with `s = z - 1`, so `z^p d^q s^mu` expands as
    /// `(1 + s)^p mu (mu - 1) ... (mu - q + 1) s^(mu - q)`.
    pub fn apply_to_power(&self, mu: C64) -> BTreeMap<i64, C64> {
        let mut out = BTreeMap::new();
        for (&(p, q), &x) in &self.terms {
            let mut fall = C64::new(1.0, 0.0);
            for i in 0..q {
                fall *= mu - i as f64;
            }
            for r in 0..=p {
                let off = r as i64 - q as i64;
                *out.entry(off).or_insert(C64::new(0.0, 0.0)) += x * fall * binom(p, r);
            }
        }
        out.retain(|_, c| c.norm() >= PRUNE_TOL);
        out
    }
}

/// `A ∘ p`, the exact action of an operator on a polynomial.
pub fn apply_op(a: &DiffOp, p: &PolyCoeffs) -> Result<PolyCoeffs> {
    a.apply(p)
}

/// Max coefficient magnitude of `p - q`.
pub fn poly_distance(p: &PolyCoeffs, q: &PolyCoeffs) -> f64 {
    let (a, b) = (p.coeffs(), q.coeffs());
    let zero = C64::new(0.0, 0.0);
    (0..a.len().max(b.len()))
        .map(|j| (a.get(j).copied().unwrap_or(zero) - b.get(j).copied().unwrap_or(zero)).norm())
        .fold(0.0, f64::max)
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (&(p, q), &c) in &rhs.terms {
            out.add_term(p, q, c);
        }
        out
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (&(p, q), &c) in &rhs.terms {
            out.add_term(p, q, -c);
        }
        out
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        self.scale_real(-1.0)
    }
}

/// Uncapped product; every operator built in this crate has order at most
/// four, so the cap only matters for user-supplied compositions.
impl Mul for &DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: &DiffOp) -> DiffOp {
        self.product(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for DiffOp {
            type Output = DiffOp;
            fn $m(self, rhs: DiffOp) -> DiffOp {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        -&self
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(p, q), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({c})")?;
            }
            match p {
                0 => {}
                1 => write!(f, " z")?,
                _ => write!(f, " z^{p}")?,
            }
            match q {
                0 => {}
                1 => write!(f, " d")?,
                _ => write!(f, " d^{q}")?,
            }
        }
        Ok(())
    }
}
