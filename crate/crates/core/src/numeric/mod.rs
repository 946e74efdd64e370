//! Double-precision oracles: Askey–Wilson quadrature, the `M_{αβ}` kernel on
//! the unit circle, orthogonality of `P_λ` on the torus and the Jackson
//! integral form of `S_λ`.
//!
//! Every sum is a pairwise or strictly sequential reduction, so results are
//! reproducible bit for bit.

mod aw;
mod grid;
mod kernel;
mod orth;
mod qint;

pub use aw::{aw_closed_form, aw_convergence, aw_default_sets, aw_integral_check, aw_quadrature, aw_weight};
pub use grid::{pairwise_sum, roots_of_unity, QuadratureGrid};
pub use kernel::{mab_exact_consistency, mab_numeric_check, mab_r_check, MabParams};
pub use orth::{orthogonality_check, orthogonality_default_pairs, torus_inner, NumericPoly, OrthogonalityReport, TORUS_NODES};
pub use qint::{qint_sep_poly_check, sep_poly_exact, sep_poly_qint, SINGULAR_OFFSET};

use crate::error::Result;
use crate::macdonald::Weight;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Tolerance for the Askey–Wilson closed form.
pub const AW_TOL: f64 = 1e-10;
/// Tolerance for the kernel action.
pub const MAB_TOL: f64 = 1e-9;
/// Tolerance for normalized cross inner products.
pub const ORTH_TOL: f64 = 1e-8;
/// Tolerance for the Jackson integral.
pub const QINT_TOL: f64 = 1e-8;

/// One numeric check with its residual.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericCheck {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl NumericCheck {
    pub fn pass(&self) -> bool {
        self.residual.is_finite() && self.residual < self.tolerance
    }
}

/// Settings for [`numeric_suite`].
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub q: f64,
    pub g: f64,
    /// Nodes on the unit circle.
    pub grid: usize,
    /// Nodes per torus axis.
    pub torus: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { q: 0.5, g: 1.0, grid: 512, torus: TORUS_NODES }
    }
}

/// The Askey–Wilson sets, the kernel action for `ν <= 3` plus one general
/// `R` polynomial, orthogonality of the default pairs at `(q, g)` and the
/// Jackson integral at `(q, g)` on a few weights.
pub fn numeric_suite(o: &SuiteOptions) -> Result<Vec<NumericCheck>> {
    let mut out = Vec::new();
    let mut push = |name: String, residual: f64, tolerance: f64| out.push(NumericCheck { name, residual, tolerance });

    for (i, (p, q)) in aw_default_sets().into_iter().enumerate() {
        push(format!("askey-wilson set {} (q={q})", i + 1), aw_integral_check(p, q, o.grid)?, AW_TOL);
    }

    let mp = MabParams::new(1.0, 2.0, Complex64::from_polar(1.0, 0.7), Complex64::from_polar(1.0, 0.3), 0.5)?;
    for nu in 0..=3 {
        push(format!("kernel on p_{nu}"), mab_numeric_check(&mp, nu, o.grid)?, MAB_TOL);
        push(format!("kernel image of p_{nu} vs symbolic"), mab_exact_consistency(&mp, nu)?, 1e-12);
    }
    push("kernel on R_1010".into(), mab_r_check(&mp, [1, 0, 1, 0], o.grid)?, MAB_TOL);

    for (l, m) in orthogonality_default_pairs() {
        let r = orthogonality_check(&l, &m, o.g, o.q, o.torus)?;
        let res = if r.self_products_positive(1e-10) { r.normalized() } else { f64::INFINITY };
        push(format!("orthogonality {l} {m}"), res, ORTH_TOL);
    }

    let xs = [0.5, 1.0, 2.0];
    for p in [[0, 0, 0], [0, 0, 1], [0, 1, 1], [0, 1, 2], [0, 0, 2]] {
        let l = Weight::new(&p)?;
        push(format!("jackson integral {l}"), qint_sep_poly_check(&l, o.q, o.g, &xs)?, QINT_TOL);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let opts = SuiteOptions { grid: 256, ..SuiteOptions::default() };
        for c in numeric_suite(&opts).unwrap() {
            assert!(c.pass(), "{}: {:e}", c.name, c.residual);
        }
    }
}
