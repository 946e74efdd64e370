//! The Askey–Wilson integral with all four parameters inside the unit disk.

use super::grid::QuadratureGrid;
use crate::error::{Error, Result};
use crate::qkit::num::qpoch_inf_num;
use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;

type C = Complex64;

fn check_disk(ps: &[C]) -> Result<()> {
    if let Some(p) = ps.iter().find(|p| p.norm() >= 1.0) {
        return Err(Error::Domain(format!("parameter {p} is outside the unit disk; deformed contours are not supported")));
    }
    Ok(())
}

/// `w(a,b,c,d;t) = (t^2, t^{-2})_inf / prod_{x} (x t, x/t)_inf`.
pub fn aw_weight(p: [C; 4], q: f64, t: C) -> Result<C> {
    let mut num = qpoch_inf_num(t * t, q)? * qpoch_inf_num(C::new(1.0, 0.0) / (t * t), q)?;
    for x in p {
        num /= qpoch_inf_num(x * t, q)? * qpoch_inf_num(x / t, q)?;
    }
    Ok(num)
}

/// `2 (abcd)_inf / (q, ab, ac, ad, bc, bd, cd)_inf`.
pub fn aw_closed_form(p: [C; 4], q: f64) -> Result<C> {
    let [a, b, c, d] = p;
    let mut den = qpoch_inf_num(C::new(q, 0.0), q)?;
    for x in [a * b, a * c, a * d, b * c, b * d, c * d] {
        den *= qpoch_inf_num(x, q)?;
    }
    Ok(qpoch_inf_num(a * b * c * d, q)? * 2.0 / den)
}

/// Quadrature of the weight over `|t| = 1`.
pub fn aw_quadrature(p: [C; 4], q: f64, n: usize) -> Result<C> {
    check_disk(&p)?;
    QuadratureGrid::new(n)?.try_integrate(|t| aw_weight(p, q, t))
}

/// Relative error of the quadrature against the closed form.
pub fn aw_integral_check(p: [C; 4], q: f64, n: usize) -> Result<f64> {
    let num = aw_quadrature(p, q, n)?;
    let exact = aw_closed_form(p, q)?;
    Ok((num - exact).norm() / exact.norm())
}

/// Errors at each grid size, for a convergence study.
pub fn aw_convergence(p: [C; 4], q: f64, sizes: &[usize]) -> Result<Vec<(usize, f64)>> {
    sizes.iter().map(|&n| aw_integral_check(p, q, n).map(|e| (n, e))).collect()
}

/// Parameter sets used by the default suite.
pub fn aw_default_sets() -> Vec<([C; 4], f64)> {
    let r = |x: f64| C::new(x, 0.0);
    alloc::vec![
        ([r(0.0); 4], 0.5),
        ([r(0.3), r(-0.2), C::new(0.0, 0.4), r(0.1)], 0.4),
        ([r(0.5), r(0.5), r(-0.5), r(0.25)], 0.3),
        ([C::from_polar(0.6, 0.7), C::from_polar(0.6, -0.7), r(0.2), r(-0.3)], 0.6),
        ([r(0.1), r(0.2), r(0.3), r(0.4)], 0.7),
        ([C::new(0.2, 0.3), C::new(-0.4, 0.1), C::new(0.05, -0.5), r(0.35)], 0.25),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_parameters() {
        assert!(aw_integral_check([C::new(0.0, 0.0); 4], 0.5, 256).unwrap() < 1e-10);
    }

    #[test]
    fn generic_and_symmetric() {
        let p = [C::new(0.3, 0.0), C::new(-0.2, 0.0), C::new(0.0, 0.4), C::new(0.1, 0.0)];
        assert!(aw_integral_check(p, 0.4, 512).unwrap() < 1e-10);
        let a = aw_quadrature(p, 0.4, 512).unwrap();
        let b = aw_quadrature([p[1], p[0], p[2], p[3]], 0.4, 512).unwrap();
        assert!((a - b).norm() < 1e-13 * a.norm());
    }

    #[test]
    fn spectral_convergence() {
        let p = [C::new(0.9, 0.0), C::new(0.85, 0.0), C::new(-0.8, 0.0), C::new(0.0, 0.5)];
        let errs = aw_convergence(p, 0.3, &[64, 128, 256, 512]).unwrap();
        for w in errs.windows(2) {
            let ((_, a), (_, b)) = (w[0], w[1]);
            assert!(a < 1e-12 || b < a / 4.0, "{errs:?}");
        }
        assert!(errs[0].1 > 1e-6, "the set should not start at the floor");
    }

    #[test]
    fn default_sets_pass() {
        for (p, q) in aw_default_sets() {
            assert!(aw_integral_check(p, q, 256).unwrap() < 1e-10, "{p:?}");
        }
    }

    #[test]
    fn outside_disk_rejected() {
        assert!(aw_integral_check([C::new(1.2, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0)], 0.5, 64).is_err());
    }
}
