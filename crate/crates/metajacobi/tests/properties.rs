use metajacobi::algebra::{relation_residual, DiffOp, Relation};
use metajacobi::dd::CDd;
use metajacobi::poly::{askey_p, askey_p_by_recurrence, askey_q, eval_poly, jacobi_phat};
use metajacobi::quadrature::{circle_integral, QuadratureSpec};
use metajacobi::repmod::{
    act, family_pairing_residual, gevp_p_coeffs, truncated_relation_residual, FamilyPairing, GaugeChoice,
    ModuleOp, ModuleRelation,
};
use metajacobi::scalar::{hyp2f1_series, hyp2f1_terminating, log_gamma, pochhammer, DEFAULT_SERIES_TOL};
use metajacobi::{Params, C64};
use proptest::prelude::*;

fn far_from_integers(x: f64) -> bool {
    (x - x.round()).abs() > 0.05
}

/// Generic pairs with alpha, beta in (-0.9, 3).
fn generic_params() -> impl Strategy<Value = Params> {
    (-0.9f64..3.0, -0.9f64..3.0)
        .prop_filter("near a degenerate value", |&(a, b)| {
            far_from_integers(a) && far_from_integers(b) && far_from_integers(a + b)
        })
        .prop_map(|(a, b)| Params::new(a, b).unwrap())
}

fn unit_point() -> impl Strategy<Value = C64> {
    (-std::f64::consts::PI..std::f64::consts::PI).prop_map(|t| C64::from_polar(1.0, t))
}

fn small_op() -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(((0usize..3, 0usize..3), -2.0f64..2.0), 1..5)
        .prop_map(|terms| DiffOp::from_real(&terms))
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rising_factorial_splits(x in -5.0f64..5.0, k in 0usize..12, l in 0usize..12) {
        let x = C64::new(x, 0.0);
        let whole = pochhammer(x, k + l);
        let split = pochhammer(x, k) * pochhammer(x + k as f64, l);
        prop_assert!((whole - split).norm() <= 1e-13 * whole.norm().max(split.norm()).max(1e-300));
    }

    #[test]
    fn gamma_reflection(x in -6.0f64..6.0) {
        prop_assume!(far_from_integers(x));
        let x = C64::new(x, 0.0);
        let s = C64::new((std::f64::consts::PI * x.re).sin(), 0.0);
        let lhs = (log_gamma(x).unwrap() + log_gamma(C64::new(1.0, 0.0) - x).unwrap()).exp() * s;
        prop_assert!(rel(lhs, C64::new(std::f64::consts::PI, 0.0)) < 1e-12);
    }

    #[test]
    fn terminating_series_agree(n in 0usize..=20, b in -3.0f64..3.0, c in 0.1f64..4.0,
                                r in 0.0f64..0.9, t in -3.1f64..3.1) {
        prop_assume!(far_from_integers(c));
        let (bb, cc, z) = (C64::new(b, 0.0), C64::new(c, 0.0), C64::from_polar(r, t));
        let fin = hyp2f1_terminating(n, bb, cc, z).unwrap();
        let ser = hyp2f1_series(C64::new(-(n as f64), 0.0), bb, cc, z, DEFAULT_SERIES_TOL).unwrap();
        // relative to the sum of term magnitudes: the value itself may cancel far below it
        let mut term = C64::new(1.0, 0.0);
        let mut scale = 1.0;
        for k in 0..n {
            let kf = k as f64;
            term *= (kf - n as f64) * (bb + kf) / ((cc + kf) * (kf + 1.0)) * z;
            scale += term.norm();
        }
        prop_assert!((fin - ser).norm() <= 1e-13 * scale.max(fin.norm()));
    }

    #[test]
    fn composition_is_associative(a in small_op(), b in small_op(), c in small_op()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        let diff = DiffOp::from_terms(left.terms().chain(right.terms().map(|(k, v)| (k, -v))));
        prop_assert!(diff.max_coeff() < 1e-13 * left.max_coeff().max(1.0));
    }

    #[test]
    fn algebra_relations_hold(p in generic_params()) {
        for r in Relation::ALL {
            let res = relation_residual(r, &p);
            prop_assert!(res < 1e-12, "{}: {res}", r.name());
        }
    }

    #[test]
    fn families_are_monic_of_exact_degree(p in generic_params(), n in 0usize..=30) {
        for poly in [askey_p(n, &p).unwrap(), askey_q(n, &p).unwrap(), jacobi_phat(n, &p).unwrap()] {
            prop_assert_eq!(poly.degree(), n);
            prop_assert!((poly.leading() - C64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn recurrence_matches_series(p in generic_params(), n in 0usize..=20, z in unit_point()) {
        let series = eval_poly(&askey_p(n, &p).unwrap(), z);
        let rec = askey_p_by_recurrence(n, &p, z).unwrap();
        prop_assert!((rec - series).norm() / (1.0 + series.norm()) < 1e-11);
    }

    #[test]
    fn swap_symmetry_is_exact(p in generic_params(), n in 0usize..12) {
        prop_assert_eq!(askey_q(n, &p).unwrap(), askey_p(n, &p.swapped()).unwrap());
    }

    #[test]
    fn truncated_module_relations(p in generic_params(), k in 4usize..24) {
        for r in ModuleRelation::ALL {
            let res = truncated_relation_residual(r, k, &p);
            prop_assert!(res < 1e-11, "{}: {res}", r.name());
        }
    }

    #[test]
    fn gevp_equation(p in generic_params(), n in 0usize..12) {
        let v = gevp_p_coeffs(n, &p, &GaugeChoice::default()).unwrap();
        let m = act(ModuleOp::M, &v, &p);
        let l = act(ModuleOp::L, &v, &p);
        let r = m.sub(&l.scale(C64::new(n as f64, 0.0)));
        prop_assert!(r.max_abs() < 1e-12 * v.max_abs().max(1.0) * (n as f64 + 4.0).powi(2));
    }

    #[test]
    fn pairings_are_biorthogonal(p in generic_params(), n in 0usize..=12, m in 0usize..=12) {
        prop_assume!(p.alpha() + p.beta() > -1.0);
        for kind in [FamilyPairing::Biorth, FamilyPairing::Evp] {
            let res = family_pairing_residual(kind, n, m, &p).unwrap();
            prop_assert!(res < 1e-11, "{kind:?} {n} {m}: {res}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn circle_rule_picks_out_the_residue(k in -3i32..=3) {
        let spec = QuadratureSpec::default();
        let got = circle_integral(
            |pt| {
                let base = if k < 0 { pt.z_inv() } else { pt.z };
                (0..k.unsigned_abs()).fold(CDd::real(1.0.into()), |acc, _| acc * base)
            },
            &spec,
        )
        .unwrap();
        let want = if k == -1 { 1.0 } else { 0.0 };
        prop_assert!((got - C64::new(want, 0.0)).norm() < 1e-12);
    }
}
