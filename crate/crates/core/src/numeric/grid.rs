//! Periodic trapezoid rules on the unit circle and on the torus.

use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

type C = Complex64;

/// Pairwise sum; the order depends only on the length of the input.
pub fn pairwise_sum(xs: &[C]) -> C {
    match xs.len() {
        0 => C::new(0.0, 0.0),
        1 => xs[0],
        n if n <= 8 => xs.iter().sum(),
        n => {
            let (a, b) = xs.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

/// `dt/(2πi t)` on `|t| = 1` as the mean over the `N`-th roots of unity.
#[derive(Clone, Debug)]
pub struct QuadratureGrid {
    nodes: Vec<C>,
}

impl QuadratureGrid {
    /// `N` must be a power of two and at least 64.
    pub fn new(n: usize) -> Result<Self> {
        if n < 64 || !n.is_power_of_two() {
            return Err(Error::Domain(format!("grid size {n} must be a power of two >= 64")));
        }
        Ok(QuadratureGrid { nodes: roots_of_unity(n) })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[C] {
        &self.nodes
    }

    pub fn integrate(&self, f: impl Fn(C) -> C) -> C {
        let vals: Vec<C> = self.nodes.iter().map(|&t| f(t)).collect();
        pairwise_sum(&vals) / self.nodes.len() as f64
    }

    /// Fallible integrand; the first error aborts.
    pub fn try_integrate(&self, f: impl Fn(C) -> Result<C>) -> Result<C> {
        let vals = self.nodes.iter().map(|&t| f(t)).collect::<Result<Vec<C>>>()?;
        Ok(pairwise_sum(&vals) / self.nodes.len() as f64)
    }

    /// Largest error over `t^m`, `|m| < N/2`, against the exact `δ_{m0}`.
    pub fn monomial_self_test(&self) -> f64 {
        let n = self.nodes.len() as i32;
        let mut worst: f64 = 0.0;
        for m in (1 - n / 2)..(n / 2) {
            let v = self.integrate(|t| t.powi(m));
            let want = if m == 0 { 1.0 } else { 0.0 };
            worst = worst.max((v - want).norm());
        }
        worst
    }
}

/// `e^{2πik/N}`, `k = 0..N`.
pub fn roots_of_unity(n: usize) -> Vec<C> {
    (0..n).map(|k| C::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_monomials() {
        let g = QuadratureGrid::new(64).unwrap();
        assert!(g.monomial_self_test() < 1e-14);
        assert!(QuadratureGrid::new(48).is_err());
    }
}
