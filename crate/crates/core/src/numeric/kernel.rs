//! The normalized kernel `M_{αβ}(r, s | t)` on the unit circle.
//!
//! With `A = q^{α/2}` and `B = q^{β/2}` the four Askey–Wilson parameters are
//! `A s, A/s, B r, B/r`; unimodular `r, s` and positive `α, β` keep them all
//! inside the disk.

use super::grid::QuadratureGrid;
use crate::error::{Error, Result};
use crate::exactalg::Sym;
use crate::qkit::num::{qbeta_num, qpoch_inf_num, qpoch_num};
use crate::sov::mab_on_r;
use alloc::collections::BTreeMap;
use alloc::format;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

type C = Complex64;

/// Parameters of one kernel evaluation.
#[derive(Clone, Copy, Debug)]
pub struct MabParams {
    pub alpha: f64,
    pub beta: f64,
    pub r: C,
    pub s: C,
    pub q: f64,
}

impl MabParams {
    pub fn new(alpha: f64, beta: f64, r: C, s: C, q: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::Domain(format!("q = {q} must lie in (0,1)")));
        }
        if alpha <= 0.0 || beta <= 0.0 {
            return Err(Error::Domain(format!("α = {alpha}, β = {beta} must be positive")));
        }
        if (r.norm() - 1.0).abs() > 1e-12 || (s.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::Domain("r and s must be unimodular".into()));
        }
        Ok(MabParams { alpha, beta, r, s, q })
    }

    fn a(&self) -> f64 {
        self.q.powf(self.alpha / 2.0)
    }

    fn b(&self) -> f64 {
        self.q.powf(self.beta / 2.0)
    }

    /// `(ν x y, ν x/y, ν y/x, ν/(x y); q)_inf`.
    fn lq(&self, nu: f64, x: C, y: C) -> Result<C> {
        let mut acc = C::new(1.0, 0.0);
        for arg in [x * y, x / y, y / x, C::new(1.0, 0.0) / (x * y)] {
            acc *= qpoch_inf_num(arg * nu, self.q)?;
        }
        Ok(acc)
    }

    /// The part of the kernel that does not depend on `t`.
    fn prefactor(&self) -> Result<C> {
        let q = self.q;
        let qq = qpoch_inf_num(C::new(q, 0.0), q)?;
        let top = qq * qq * (1.0 - q) * self.lq(q.powf((self.alpha + self.beta) / 2.0), self.r, self.s)?;
        Ok(top / (2.0 * qbeta_num(self.alpha, self.beta, q)?))
    }

    /// `M_{αβ}(r, s | t)`.
    pub fn kernel(&self, t: C) -> Result<C> {
        let q = self.q;
        let w = qpoch_inf_num(t * t, q)? * qpoch_inf_num(C::new(1.0, 0.0) / (t * t), q)?;
        let den = self.lq(self.a(), self.s, t)? * self.lq(self.b(), self.r, t)?;
        Ok(self.prefactor()? * w / den)
    }

    /// `∮ M_{αβ}(r, s | t) f(t) dt/(2πi t)` by the periodic trapezoid rule.
    pub fn apply(&self, f: impl Fn(C) -> Result<C>, n: usize) -> Result<C> {
        let grid = QuadratureGrid::new(n)?;
        let pre = self.prefactor()?;
        let q = self.q;
        grid.try_integrate(|t| {
            let w = qpoch_inf_num(t * t, q)? * qpoch_inf_num(C::new(1.0, 0.0) / (t * t), q)?;
            let den = self.lq(self.a(), self.s, t)? * self.lq(self.b(), self.r, t)?;
            Ok(pre * w / den * f(t)?)
        })
    }

    /// `(c z, c/z; q)_ν`.
    fn pair(&self, c: C, z: C, nu: usize) -> Result<C> {
        Ok(qpoch_num(c * z, self.q, nu as i64)? * qpoch_num(c / z, self.q, nu as i64)?)
    }

    /// `p_ν^β(t) = (B r t, B r/t; q)_ν`.
    pub fn p_beta(&self, nu: usize, t: C) -> Result<C> {
        self.pair(self.r * self.b(), t, nu)
    }

    /// `R_{j1 j2 k1 k2}(t)`.
    pub fn r_poly(&self, j: [usize; 4], t: C) -> Result<C> {
        let (a, b) = (self.a(), self.b());
        Ok(self.pair(self.s * a, t, j[0])?
            * self.pair(a / self.s, t, j[1])?
            * self.pair(self.r * b, t, j[2])?
            * self.pair(b / self.r, t, j[3])?)
    }

    /// `(q^β)_ν/(q^{α+β})_ν p_ν^{α+β}(s)`.
    pub fn p_image(&self, nu: usize) -> Result<C> {
        let q = self.q;
        let k = nu as i64;
        let ratio = qpoch_num(C::new(q.powf(self.beta), 0.0), q, k)? / qpoch_num(C::new(q.powf(self.alpha + self.beta), 0.0), q, k)?;
        Ok(ratio * self.pair(self.r * (self.a() * self.b()), self.s, nu)?)
    }

    /// The exact image of `R_j`, taken from the symbolic closed form and
    /// specialized at this point.
    pub fn r_image(&self, j: [usize; 4]) -> Result<C> {
        let point: BTreeMap<Sym, C> = [
            (Sym::A, C::new(self.a(), 0.0)),
            (Sym::B, C::new(self.b(), 0.0)),
            (Sym::R, self.r),
            (Sym::S, self.s),
            (Sym::Q, C::new(self.q, 0.0)),
        ]
        .into_iter()
        .collect();
        mab_on_r(j)?.eval_complex(&point)
    }
}

fn rel(num: C, exact: C) -> f64 {
    (num - exact).norm() / exact.norm().max(f64::MIN_POSITIVE)
}

/// Relative error of the quadrature of `M_{αβ} p_ν^β` against
/// `(q^β)_ν/(q^{α+β})_ν p_ν^{α+β}(s)`.
pub fn mab_numeric_check(p: &MabParams, nu: usize, n: usize) -> Result<f64> {
    if nu > 3 {
        return Err(Error::Domain(format!("ν = {nu} exceeds 3")));
    }
    let num = p.apply(|t| p.p_beta(nu, t), n)?;
    Ok(rel(num, p.p_image(nu)?))
}

/// Relative error of the quadrature of `M_{αβ} R_j` against the symbolic
/// closed form.
pub fn mab_r_check(p: &MabParams, j: [usize; 4], n: usize) -> Result<f64> {
    let num = p.apply(|t| p.r_poly(j, t), n)?;
    Ok(rel(num, p.r_image(j)?))
}

/// Distance between the hand-written image of `p_ν^β` and the symbolic one.
pub fn mab_exact_consistency(p: &MabParams, nu: usize) -> Result<f64> {
    Ok(rel(p.p_image(nu)?, p.r_image([0, 0, nu, 0])?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> MabParams {
        MabParams::new(1.0, 2.0, C::from_polar(1.0, 0.7), C::from_polar(1.0, 0.3), 0.5).unwrap()
    }

    #[test]
    fn preserves_constants() {
        assert!(mab_numeric_check(&sample(), 0, 512).unwrap() < 1e-10);
    }

    #[test]
    fn p_basis_action() {
        let p = sample();
        for nu in 1..=3 {
            assert!(mab_numeric_check(&p, nu, 512).unwrap() < 1e-9, "ν = {nu}");
            assert!(mab_exact_consistency(&p, nu).unwrap() < 1e-12);
        }
    }

    #[test]
    fn general_r_polynomial() {
        assert!(mab_r_check(&sample(), [1, 0, 1, 0], 512).unwrap() < 1e-9);
    }

    #[test]
    fn regime_enforced() {
        assert!(MabParams::new(-1.0, 2.0, C::new(1.0, 0.0), C::new(1.0, 0.0), 0.5).is_err());
        assert!(MabParams::new(1.0, 2.0, C::new(1.5, 0.0), C::new(1.0, 0.0), 0.5).is_err());
    }
}
