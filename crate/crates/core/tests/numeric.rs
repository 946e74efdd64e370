//! Floating-point identities on random parameters.

use num_complex::Complex64 as C;
use proptest::prelude::*;
use sov_core::macdonald::Weight;
use sov_core::numeric::{aw_integral_check, pairwise_sum, qint_sep_poly_check, QuadratureGrid};
use sov_core::qkit::num::{dilog_num, qgamma_num, qpoch_inf_num};
use std::f64::consts::PI;

fn in_disk(r: f64) -> impl Strategy<Value = C> {
    (0.0..r, 0.0..2.0 * PI).prop_map(|(m, a)| C::from_polar(m, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn infinite_product_shift(a in in_disk(2.0), q in 0.1f64..0.9) {
        let lhs = qpoch_inf_num(a, q).unwrap();
        let rhs = (C::new(1.0, 0.0) - a) * qpoch_inf_num(a * q, q).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
    }

    #[test]
    fn gamma_q_recurrence(z in 0.2f64..4.0, q in 0.1f64..0.9) {
        let r = qgamma_num(z + 1.0, q).unwrap() / qgamma_num(z, q).unwrap();
        prop_assert!((r / ((1.0 - q.powf(z)) / (1.0 - q)) - 1.0).abs() < 1e-11);
    }

    #[test]
    fn dilogarithm_reflection(x in 0.01f64..0.99) {
        let lhs = dilog_num(x).unwrap() + dilog_num(1.0 - x).unwrap();
        let rhs = PI * PI / 6.0 - x.ln() * (1.0 - x).ln();
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn askey_wilson_inside_the_disk(p in prop::array::uniform4(in_disk(0.8)), q in 0.1f64..0.6) {
        prop_assert!(aw_integral_check(p, q, 256).unwrap() < 1e-10);
    }

    #[test]
    fn pairwise_sum_is_order_stable(xs in prop::collection::vec(-1e3f64..1e3, 1..200)) {
        let cs: Vec<C> = xs.iter().map(|&x| C::new(x, -x)).collect();
        let naive: f64 = xs.iter().sum();
        let s = pairwise_sum(&cs);
        prop_assert!((s.re - naive).abs() <= 1e-9 * xs.iter().map(|x| x.abs()).sum::<f64>().max(1.0));
        prop_assert_eq!(s.re, -s.im);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn jackson_integral_matches_exact(x in 0.3f64..3.0, q in 0.3f64..0.7, gi in 0usize..4, w in 0usize..3) {
        let g = [0.5, 0.75, 1.25, 2.0][gi];
        let l = Weight::new(&[[0, 0, 1], [0, 1, 1], [0, 1, 2]][w]).unwrap();
        prop_assert!(qint_sep_poly_check(&l, q, g, &[x]).unwrap() < 1e-8);
    }
}

#[test]
fn trapezoid_rule_is_exact_on_low_monomials() {
    let g = QuadratureGrid::new(64).unwrap();
    for k in -10i32..=10 {
        let v = g.integrate(|t| t.powi(k));
        let want = if k == 0 { 1.0 } else { 0.0 };
        assert!((v - want).norm() < 1e-14, "k = {k}");
    }
}
