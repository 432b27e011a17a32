//! Configuratrix solvability for n = 3 metrics.

use symres::finsler::{
    configuratrix_resultant, indicatrix_degenerate, Diagnostic, MetricFunction, Momentum,
};
use symres::oracle::Route;
use symres::{Scalar, SymmetricCubic};

fn metric(a1: i64, a2: i64, a3: i64) -> MetricFunction {
    MetricFunction::new(SymmetricCubic::from_ints(3, a1, a2, a3).unwrap())
}

#[test]
fn points_on_the_indicatrix_give_solvable_momenta() {
    // x^3 + y^3 + z^3 = 1 at (1, t, -t) and (9, 10, -12).
    let m = metric(1, -3, 3);
    let mut points: Vec<[Scalar; 3]> = [Scalar::frac(1, 2), Scalar::from(3), Scalar::frac(-5, 7)]
        .into_iter()
        .map(|t| [-&t, Scalar::one(), t])
        .collect();
    points.push([9.into(), 10.into(), (-12).into()]);
    for xi in points {
        assert_eq!(m.cubic().expand().eval(&xi).unwrap(), Scalar::one());
        let y = Momentum::at_point(&m, &xi).unwrap();
        let out = configuratrix_resultant(&m, &y, 1).unwrap();
        assert!(out.vanishes, "{y:?}");
        assert_eq!(out.diagnostic, None);
    }
}

#[test]
fn non_square_momenta_are_not_solvable() {
    // y_i = xi_i^2 for the power sum, and sum ±y_i^(3/2) = 1 has no solution
    // when no y_i is a rational square.
    let m = metric(1, -3, 3);
    for y in [[2, 3, 5], [-1, 2, 7], [6, -3, 8]] {
        let y = Momentum::new(y.iter().map(|&v| Scalar::from(v)).collect());
        let out = configuratrix_resultant(&m, &y, 1).unwrap();
        assert!(!out.vanishes, "{y:?}");
        assert!(matches!(out.route, Route::Direct | Route::Substitution(_)));
    }
}

#[test]
fn degenerate_metric_vanishes_everywhere() {
    let m = metric(0, 0, 1);
    assert!(indicatrix_degenerate(&m, true).unwrap().degenerate);
    for y in [[5, 7, 11], [0, 0, 0], [-2, 1, 3]] {
        let y = Momentum::new(y.iter().map(|&v| Scalar::from(v)).collect());
        let out = configuratrix_resultant(&m, &y, 1).unwrap();
        assert!(out.resultant.is_zero());
        assert_eq!(
            out.diagnostic,
            Some(Diagnostic::DegenerateMetricIdenticallyZero)
        );
    }
}

#[test]
fn seed_does_not_change_the_value() {
    let m = metric(2, -1, 3);
    let y = Momentum::new(vec![1.into(), Scalar::frac(1, 2), (-3).into()]);
    let a = configuratrix_resultant(&m, &y, 1).unwrap();
    let b = configuratrix_resultant(&m, &y, 99).unwrap();
    assert_eq!(a.resultant, b.resultant);
}
