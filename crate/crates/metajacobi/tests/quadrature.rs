use metajacobi::quadrature::{
    askey_biorthogonality_matrix, jacobi_orthogonality_matrix, JacobiForm, QuadratureSpec,
};
use metajacobi::scalar::gamma_ratio;
use metajacobi::Params;

fn pr() -> Params {
    Params::new(0.7, 0.3).unwrap()
}

#[test]
fn askey_matrix_up_to_eight() {
    let reports = askey_biorthogonality_matrix(8, &pr(), &QuadratureSpec::default()).unwrap();
    assert_eq!(reports.len(), 81);
    let smallest = reports
        .iter()
        .filter(|r| r.m == r.n)
        .map(|r| r.computed.norm())
        .fold(f64::INFINITY, f64::min);
    for r in &reports {
        assert!(r.pass, "{r:?}");
        if r.m != r.n {
            assert!(r.computed.norm() < 1e-8 * smallest, "{r:?}");
        }
    }
    // the m = 0 entry coincides with Gamma(alpha + beta + 1) / (Gamma(alpha + 1) Gamma(beta + 1))
    let d0 = gamma_ratio(&[2.0], &[1.7, 1.3]).unwrap();
    assert!((reports[0].computed.re - d0).abs() < 1e-10);
}

#[test]
fn jacobi_forms_agree() {
    let spec = QuadratureSpec::default();
    let c = jacobi_orthogonality_matrix(JacobiForm::Circle, 6, &pr(), &spec).unwrap();
    let i = jacobi_orthogonality_matrix(JacobiForm::Interval, 6, &pr(), &spec).unwrap();
    for (a, b) in c.iter().zip(&i) {
        assert!(a.pass, "circle {a:?}");
        assert!(b.pass, "interval {b:?}");
        assert!((a.computed - b.computed).norm() < 1e-7);
        if a.m == a.n {
        } else {
            assert!(a.computed.norm() < 1e-8 && b.computed.norm() < 1e-8);
        }
    }
}
