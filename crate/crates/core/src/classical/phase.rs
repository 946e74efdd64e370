//! Floating-point separation of variables at a phase-space point and the
//! finite-difference check of the dilogarithm generating function.

use crate::error::{Error, Result};
use crate::qkit::num::li2_complex;
use alloc::format;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

type C = Complex64;

/// `|t_j| = 1`, `T_j > 0`, `ℓ > 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhasePoint {
    pub t: [C; 3],
    pub big_t: [f64; 3],
    pub ell: f64,
}

impl PhasePoint {
    pub fn new(t: [C; 3], big_t: [f64; 3], ell: f64) -> Result<Self> {
        if t.iter().any(|z| (z.norm() - 1.0).abs() > 1e-12) {
            return Err(Error::Domain(format!("positions must be unimodular: {t:?}")));
        }
        if big_t.iter().any(|&x| !(x > 0.0)) {
            return Err(Error::Domain(format!("momenta must be positive: {big_t:?}")));
        }
        if !(ell > 1.0) {
            return Err(Error::Domain(format!("ℓ must exceed 1, got {ell}")));
        }
        Ok(PhasePoint { t, big_t, ell })
    }

    /// `t_j = e^{i θ_j}`.
    pub fn from_angles(theta: [f64; 3], big_t: [f64; 3], ell: f64) -> Result<Self> {
        Self::new(theta.map(|a| C::from_polar(1.0, a)), big_t, ell)
    }

    fn v(&self, j: usize, k: usize) -> C {
        let h = self.ell.sqrt();
        (self.t[j] / h - self.t[k] * h) / (self.t[j] - self.t[k])
    }

    /// `(H1, H2, H3)`.
    pub fn hamiltonians(&self) -> [C; 3] {
        let tt = self.big_t.map(|x| C::new(x, 0.0));
        let h1 = self.v(0, 1) * self.v(0, 2) * tt[0] + self.v(1, 0) * self.v(1, 2) * tt[1] + self.v(2, 0) * self.v(2, 1) * tt[2];
        let h2 = self.v(0, 2) * self.v(1, 2) * tt[0] * tt[1]
            + self.v(0, 1) * self.v(2, 1) * tt[0] * tt[2]
            + self.v(1, 0) * self.v(2, 0) * tt[1] * tt[2];
        [h1, h2, tt[0] * tt[1] * tt[2]]
    }

    /// `α_k(u)` for `k = 1, 2`.
    pub fn alpha(&self, k: usize, u: C) -> C {
        let l = self.ell;
        let (tk, to, t3) = (self.t[k - 1], self.t[2 - k], self.t[2]);
        (1.0 - l.powi(3) * u) * (l * t3 * u - to) * (tk - l * t3)
            / (l * (1.0 - u) * (l * l * t3 * u - to) * (l * tk - t3))
    }

    /// `L(u)` row-major.
    pub fn lax(&self, u: C) -> [[C; 3]; 3] {
        let l = self.ell;
        let pre = (l - 1.0) * (1.0 - l.powi(3) * u) / (2.0 * l * l * (1.0 - u));
        let d = [
            self.v(0, 1) * self.v(0, 2) * self.big_t[0],
            self.v(1, 0) * self.v(1, 2) * self.big_t[1],
            self.v(2, 0) * self.v(2, 1) * self.big_t[2],
        ];
        let base = (1.0 + l.powi(3) * u) / (1.0 - l.powi(3) * u);
        core::array::from_fn(|j| {
            core::array::from_fn(|k| pre * d[j] * (base - (self.t[j] + l * self.t[k]) / (self.t[j] - l * self.t[k])))
        })
    }
}

/// Separated coordinates `y_j` and conjugate momenta `Y_j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Separated {
    pub y: [C; 2],
    pub big_y: [C; 2],
}

fn pmul(a: &[C], b: &[C]) -> alloc::vec::Vec<C> {
    let mut out = alloc::vec![C::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Relative tolerance for `Y_j` from `k = 1` against `k = 2`.
pub const MOMENTUM_AGREEMENT: f64 = 1e-9;
/// Smallest admissible discriminant of the monic quadratic.
pub const MIN_DISCRIMINANT: f64 = 1e-10;

/// Roots of `A1(y) = A2(y)` other than `y = ℓ^{-3}` and the momenta
/// `Y_j = T_k α_k(y_j)`.
pub fn separate_numeric(p: &PhasePoint) -> Result<Separated> {
    let l = p.ell;
    let t3 = p.t[2];
    let num = |k: usize| {
        let (tk, to) = (p.t[k - 1], p.t[2 - k]);
        [-to * (tk - l * t3), l * t3 * (tk - l * t3)]
    };
    let den = |k: usize| {
        let (tk, to) = (p.t[k - 1], p.t[2 - k]);
        [-to * (l * tk - t3), l * l * t3 * (l * tk - t3)]
    };
    let a = pmul(&num(1), &den(2)).iter().map(|c| c * p.big_t[0]).collect::<alloc::vec::Vec<_>>();
    let b = pmul(&num(2), &den(1)).iter().map(|c| c * p.big_t[1]).collect::<alloc::vec::Vec<_>>();
    let quad: alloc::vec::Vec<C> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
    // cleared numerator of A1 - A2, then exact removal of the root ℓ^{-3}
    let cubic = pmul(&[C::new(1.0, 0.0), C::new(-l.powi(3), 0.0)], &quad);
    let r = 1.0 / l.powi(3);
    let mut defl = [C::new(0.0, 0.0); 3];
    let mut carry = C::new(0.0, 0.0);
    for i in (0..3).rev() {
        carry = cubic[i + 1] + carry * r;
        defl[i] = carry;
    }
    let rem = cubic[0] + carry * r;
    let scale = cubic.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if rem.norm() > 1e-12 * scale {
        return Err(Error::IdentityFailed(format!("y = ℓ^-3 is not a root (remainder {rem})")));
    }
    let (c0, c1, c2) = (defl[0] / defl[2], defl[1] / defl[2], C::new(1.0, 0.0));
    let disc = c1 * c1 - 4.0 * c0 * c2;
    if disc.norm() < MIN_DISCRIMINANT {
        return Err(Error::Domain(format!("degenerate separated coordinates (discriminant {disc})")));
    }
    let sq = disc.sqrt();
    let s = if (c1.conj() * sq).re >= 0.0 { -(c1 + sq) / 2.0 } else { -(c1 - sq) / 2.0 };
    let y = [s, c0 / s];
    let mut big_y = [C::new(0.0, 0.0); 2];
    for (j, &yj) in y.iter().enumerate() {
        let a1 = p.alpha(1, yj) * p.big_t[0];
        let a2 = p.alpha(2, yj) * p.big_t[1];
        if (a1 - a2).norm() > MOMENTUM_AGREEMENT * a1.norm().max(a2.norm()) {
            return Err(Error::IdentityFailed(format!("A1 and A2 disagree at y = {yj}: {a1} vs {a2}")));
        }
        big_y[j] = a1;
    }
    Ok(Separated { y, big_y })
}

/// Relative residual of the separated cubic in `Y` at `(y, Y)`.
pub fn separated_equation_residual(p: &PhasePoint, y: C, big_y: C) -> f64 {
    let l = p.ell;
    let h = p.hamiltonians();
    let terms = [
        big_y.powi(3) * l.powi(3) * (1.0 - y).powi(2),
        -big_y.powi(2) * l * l * (1.0 - y) * (1.0 - l * l * y) * h[0],
        big_y * l * (1.0 - l * y) * (1.0 - l.powi(3) * y) * h[1],
        -(1.0 - l.powi(3) * y).powi(2) * h[2],
    ];
    let sum: C = terms.iter().sum();
    sum.norm() / terms.iter().map(|c| c.norm()).sum::<f64>()
}

fn det3(m: &[[C; 3]; 3]) -> C {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// `|det(Y - L(y))|` relative to `(|Y| + max |L_jk|)^3`.
pub fn det_residual(p: &PhasePoint, y: C, big_y: C) -> f64 {
    let mut m = p.lax(y);
    let norm = m.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max);
    for (j, row) in m.iter_mut().enumerate() {
        for (k, c) in row.iter_mut().enumerate() {
            *c = if j == k { big_y - *c } else { -*c };
        }
    }
    det3(&m).norm() / (big_y.norm() + norm).powi(3)
}

/// Deviations of the generating-function relations at one step size.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CanonicityReport {
    /// `|y_+^2 - y1 y2| / |y1 y2|` with `y_+ = t_+ ℓ^{-3/2}`.
    pub y_plus: f64,
    /// `ln T_+` against `ln Y_+ + t_+ ∂G/∂t_+`.
    pub t_plus: f64,
    /// `ln T_-` against `t_- ∂G/∂t_-`.
    pub t_minus: f64,
    /// `ln Y_-` against `-y_- ∂G/∂y_-`.
    pub y_minus: f64,
    /// `ln y_+` against `Y_+ ∂F/∂Y_+`.
    pub y_plus_derivative: f64,
}

impl CanonicityReport {
    /// Largest of the finite-difference deviations.
    pub fn max_deviation(&self) -> f64 {
        self.t_plus.max(self.t_minus).max(self.y_minus).max(self.y_plus_derivative)
    }
}

/// Distance from the cut `[1, ∞)` below which `Li_2` is refused.
const CUT_MARGIN: f64 = 1e-6;

fn li2_checked(z: C) -> Result<C> {
    if z.re >= 1.0 - CUT_MARGIN && z.im.abs() < CUT_MARGIN {
        return Err(Error::Domain(format!("Li_2 argument {z} is on the branch cut")));
    }
    Ok(li2_complex(z))
}

fn script_l(nu: f64, x: C, y: C) -> Result<C> {
    Ok(li2_checked(nu * x * y)? + li2_checked(nu * x / y)? + li2_checked(nu * y / x)? + li2_checked(nu / (x * y))?)
}

/// `F̃ / i` as a function of `(y_-, t_+, t_-)`.
fn g_tilde(l: f64, ym: C, tp: C, tm: C) -> Result<C> {
    Ok(script_l(l.powf(-0.5), ym, tm)? + script_l(1.0 / l, tp, tm)? - script_l(l.powf(-1.5), tp, ym)?
        - li2_checked(tm * tm)?
        - li2_checked(1.0 / (tm * tm))?)
}

/// `x d/dx` by a central difference in `ln x`.
fn log_derivative(f: impl Fn(C) -> Result<C>, x: C, h: f64) -> Result<C> {
    let e = C::new(h, 0.0).exp();
    Ok((f(x * e)? - f(x / e)?) / (2.0 * h))
}

/// `|ln(a/b)|` on the principal branch; insensitive to `2πi` shifts of logs.
fn log_gap(a: C, b: C) -> f64 {
    (a / b).ln().norm()
}

pub fn genfunc_canonicity_check(p: &PhasePoint, h: f64) -> Result<CanonicityReport> {
    if !(1e-6..=1e-4).contains(&h) {
        return Err(Error::Domain(format!("finite-difference step {h} outside [1e-6, 1e-4]")));
    }
    let sep = separate_numeric(p)?;
    let l = p.ell;
    let tm = (p.t[0] / p.t[1]).sqrt();
    let tp = p.t[0] / (p.t[2] * tm);
    let yp = tp * l.powf(-1.5);
    let prod = sep.y[0] * sep.y[1];
    let y_plus = (yp * yp - prod).norm() / prod.norm();
    let ym = sep.y[0] / yp;
    let (bt1, bt2) = (p.big_t[0], p.big_t[1]);
    let big_yp = sep.big_y[0] * sep.big_y[1];
    let big_ym = sep.big_y[0] / sep.big_y[1];
    let d_tp = log_derivative(|x| g_tilde(l, ym, x, tm), tp, h)?;
    let d_tm = log_derivative(|x| g_tilde(l, ym, tp, x), tm, h)?;
    let d_ym = log_derivative(|x| g_tilde(l, x, tp, tm), ym, h)?;
    // F = i ln Y_+ ln(ℓ^{-3/2} t_+) + F̃ depends on Y_+ through the first term only
    let lt = (tp * l.powf(-1.5)).ln();
    let d_yp = log_derivative(|x| Ok(x.ln() * lt), big_yp, h)?;
    Ok(CanonicityReport {
        y_plus,
        t_plus: log_gap(C::new(bt1 * bt2, 0.0), big_yp * d_tp.exp()),
        t_minus: log_gap(C::new(bt1 / bt2, 0.0), d_tm.exp()),
        y_minus: log_gap(big_ym, (-d_ym).exp()),
        y_plus_derivative: log_gap(yp, d_yp.exp()),
    })
}

/// Step sizes of the Richardson study.
pub const RICHARDSON_STEPS: (f64, f64) = (1e-4, 5e-5);

/// `dev(h) / dev(h/2)`; close to 4 for a second-order scheme.
pub fn genfunc_richardson(p: &PhasePoint) -> Result<f64> {
    let a = genfunc_canonicity_check(p, RICHARDSON_STEPS.0)?;
    let b = genfunc_canonicity_check(p, RICHARDSON_STEPS.1)?;
    Ok(a.max_deviation() / b.max_deviation())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point() -> PhasePoint {
        PhasePoint::from_angles([0.4, 2.1, 4.0], [1.3, 0.7, 1.9], 2.3).unwrap()
    }

    #[test]
    fn constraint_and_momenta() {
        let p = point();
        let s = separate_numeric(&p).unwrap();
        let want = p.t[0] * p.t[1] / (p.t[2] * p.t[2] * p.ell.powi(3));
        assert!(((s.y[0] * s.y[1]) / want - 1.0).norm() < 1e-10);
        for j in 0..2 {
            assert!(separated_equation_residual(&p, s.y[j], s.big_y[j]) < 1e-9);
            assert!(det_residual(&p, s.y[j], s.big_y[j]) < 1e-8);
        }
    }

    #[test]
    fn generating_function() {
        let p = point();
        let r = genfunc_canonicity_check(&p, 1e-5).unwrap();
        assert!(r.y_plus < 1e-12);
        assert!(r.max_deviation() < 1e-5, "{r:?}");
        let ratio = genfunc_richardson(&p).unwrap();
        assert!((ratio / 4.0 - 1.0).abs() < 0.2, "{ratio}");
    }
}
