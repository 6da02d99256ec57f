use metajacobi::checks::{run_suite, Suite};
use metajacobi::quadrature::QuadratureSpec;
use metajacobi::Params;

#[test]
fn every_suite_passes_at_the_reference_parameters() {
    let p = Params::new(0.7, 0.3).unwrap();
    let r = run_suite(Suite::All, &p, &QuadratureSpec::default());
    let bad: Vec<_> = r.failures().collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(r.checks.len() > 300);
}

#[test]
fn suites_pass_at_other_generic_parameters() {
    for (a, b) in [(1.3, -0.4), (2.5, 0.45), (-0.3, 0.6)] {
        let p = Params::new(a, b).unwrap();
        for s in [Suite::Algebra, Suite::Bispectral, Suite::Module, Suite::NegativeIndex] {
            let r = run_suite(s, &p, &QuadratureSpec::default());
            let bad: Vec<_> = r.failures().collect();
            assert!(bad.is_empty(), "({a}, {b}) {s}: {bad:#?}");
        }
    }
}

#[test]
fn repeated_runs_are_identical() {
    let p = Params::new(0.7, 0.3).unwrap();
    let a = run_suite(Suite::Jacobi, &p, &QuadratureSpec::default());
    let b = run_suite(Suite::Jacobi, &p, &QuadratureSpec::default());
    for (x, y) in a.checks.iter().zip(&b.checks) {
        assert_eq!(x.residual.to_bits(), y.residual.to_bits(), "{}", x.name);
    }
}
