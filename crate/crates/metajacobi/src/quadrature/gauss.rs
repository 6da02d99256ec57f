use crate::dd::Dd;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, in increasing node order.
#[derive(Clone, Debug)]
pub(crate) struct GaussLegendre {
    pub nodes: Vec<Dd>,
    pub weights: Vec<Dd>,
}

// (P_n(x), P_n'(x)) by the three-term recurrence
fn legendre_f64(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    (p1, n as f64 * (x * p1 - p0) / (x * x - 1.0))
}

fn legendre_dd(n: usize, x: Dd) -> (Dd, Dd) {
    let (mut p0, mut p1) = (Dd::ONE, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = (x * p1 * (2.0 * kf - 1.0) - p0 * (kf - 1.0)) / kf;
        p0 = p1;
        p1 = p2;
    }
    (p1, (x * p1 - p0) * n as f64 / (x.sqr() - 1.0))
}

impl GaussLegendre {
    pub fn new(n: usize) -> GaussLegendre {
        assert!(n >= 2, "Gauss–Legendre order must be at least 2");
        let mut nodes = vec![Dd::ZERO; n];
        let mut weights = vec![Dd::ZERO; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_f64(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let mut xd = Dd::new(x);
            for _ in 0..2 {
                let (p, dp) = legendre_dd(n, xd);
                xd = xd - p / dp;
            }
            let (_, dp) = legendre_dd(n, xd);
            let w = Dd::new(2.0) / ((Dd::ONE - xd.sqr()) * dp.sqr());
            // nodes come out in decreasing order from the cosine guess
            nodes[i] = -xd;
            nodes[n - 1 - i] = xd;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = Dd::ZERO;
        }
        GaussLegendre { nodes, weights }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        let g = GaussLegendre::new(16);
        let total = g.weights.iter().fold(Dd::ZERO, |a, &w| a + w);
        assert!((total - 2.0).to_f64().abs() < 1e-30);
        // x^30 integrates to 2/31
        let s = g
            .nodes
            .iter()
            .zip(&g.weights)
            .fold(Dd::ZERO, |a, (&x, &w)| a + w * x.sqr().powf(15.0));
        assert!((s - Dd::new(2.0) / 31.0).to_f64().abs() < 1e-29);
        assert!(g.nodes.windows(2).all(|p| p[0].hi < p[1].hi));
    }

    #[test]
    fn odd_order_has_a_central_node() {
        let g = GaussLegendre::new(9);
        assert_eq!(g.nodes[4], Dd::ZERO);
        let s = g.nodes.iter().zip(&g.weights).fold(Dd::ZERO, |a, (&x, &w)| a + w * x.sqr());
        assert!((s - Dd::new(2.0) / 3.0).to_f64().abs() < 1e-30);
    }
}
