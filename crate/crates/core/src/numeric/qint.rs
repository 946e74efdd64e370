//! `S_λ(q^x)` as a Jackson integral over `[0, 1]`, evaluated in double
//! precision and compared with the exact polynomial.
//!
//! Every base is a real power of `q`, so all factors are written as
//! `1 - q^e = -expm1(e ln q)` with exponents `e = p - m g` kept in the form
//! `(p - m g0) - m dg`. When `n g` is an integer the representation is
//! singular. The value is then extrapolated from `g0 ± δ`, `g0 ± 2δ` and
//! `g0 ± 4δ`: the symmetric mean is even in `δ`, and two Richardson steps
//! remove the `δ^2` and `δ^4` terms. A tiny `δ` is not an option because at integer `x` the
//! Jackson sum cancels terms of size `1/δ`.

use crate::error::{Error, Result};
use crate::exactalg::Sym;
use crate::macdonald::Weight;
use crate::qkit::num::TRUNC;
use crate::sov::sep_poly;
use alloc::collections::BTreeMap;
use alloc::format;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

/// Offset in `g` used when `n g` is an integer.
pub const SINGULAR_OFFSET: f64 = 3e-3;

/// Jackson sums stop once a term is below `TRUNC` relative to the partial sum.
const MAX_TERMS: usize = 100_000;

/// `q^e` with `e = base + off`: `base` carries the integer shifts and
/// `m g0`, `off` carries `m dg`, so shifting by an integer never rounds away
/// a small offset.
#[derive(Clone, Copy)]
struct Exp {
    base: f64,
    off: f64,
}

impl Exp {
    fn shift(self, i: f64) -> Exp {
        Exp { base: self.base + i, off: self.off }
    }

    fn value(self) -> f64 {
        self.base + self.off
    }
}

struct Ctx {
    lnq: f64,
    g0: f64,
    dg: f64,
}

impl Ctx {
    /// `p - m g` for the current `g = g0 + dg`.
    fn e(&self, p: f64, m: f64) -> Exp {
        Exp { base: p - m * self.g0, off: -m * self.dg }
    }

    fn one_minus(&self, e: Exp) -> f64 {
        -(e.value() * self.lnq).exp_m1()
    }

    /// `(q^e; q)_inf`.
    fn inf(&self, e: Exp) -> f64 {
        let mut acc = 1.0;
        let mut i = 0.0;
        while (e.shift(i).value() * self.lnq).exp() >= TRUNC {
            acc *= self.one_minus(e.shift(i));
            i += 1.0;
        }
        acc
    }

    /// `(q^e; q)_k`, `k >= 0`.
    fn fin(&self, e: Exp, k: i32) -> f64 {
        (0..k).map(|i| self.one_minus(e.shift(i as f64))).product()
    }

    /// `B_q(x, b) = (1-q)(q, q^{x+b}; q)_inf / (q^x, q^b; q)_inf`.
    fn beta(&self, x: f64, b: Exp) -> f64 {
        let one = Exp { base: 1.0, off: 0.0 };
        let xe = Exp { base: x, off: 0.0 };
        -self.lnq.exp_m1() * self.inf(one) * self.inf(b.shift(x)) / (self.inf(xe) * self.inf(b))
    }
}

/// The right-hand side at `y = q^x` for one value of `g`.
fn qint_value(lam: &[i32], x: f64, q: f64, g0: f64, dg: f64) -> Result<f64> {
    let n = lam.len();
    let nf = n as f64;
    let c = Ctx { lnq: q.ln(), g0, dg };
    let (l1, ln) = (lam[0] as f64, lam[n - 1] as f64);
    let part = |j: usize| lam[j - 1] as f64;

    let mut pre = (l1 * x * c.lnq).exp();
    pre *= c.fin(c.e(1.0 + l1 - ln + x, nf), lam[n - 1] - lam[0]);
    for j in 1..n {
        let e = c.e(l1 - part(n - j + 1) + 1.0, (n - j) as f64);
        pre /= c.fin(e, lam[n - j] - lam[n - j - 1]);
    }
    // B_q(x, λ1 - λn + 1 - n g)
    pre /= c.beta(x, c.e(l1 - ln + 1.0, nf));

    let mut acc = 0.0;
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        // t^{x-1} q^k with t = q^k
        let mut term = (kf * x * c.lnq).exp();
        // (t q; q)_{λ1 - λn - n g}
        term *= c.inf(Exp { base: kf + 1.0, off: 0.0 }) / c.inf(c.e(kf + 1.0 + l1 - ln, nf));
        for j in 1..n {
            let e = c.e(kf + 1.0 + l1 - part(n - j + 1), (n - j) as f64);
            term *= c.fin(e, lam[n - j] - lam[n - j - 1]);
        }
        if !term.is_finite() {
            return Err(Error::Domain(format!("q-integrand is not finite at t = q^{k}")));
        }
        acc += term;
        if term.abs() < TRUNC * acc.abs().max(1e-300) {
            small += 1;
            if small == 3 {
                return Ok(pre * acc * -c.lnq.exp_m1());
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Domain("q-integral does not converge".into()))
}

fn singular(lam: &[i32], g: f64) -> bool {
    let b = (lam[0] - lam[lam.len() - 1]) as f64 + 1.0 - lam.len() as f64 * g;
    b <= 1e-9 && (b - b.round()).abs() < 1e-9
}

/// `S_λ(q^x)` from the Jackson integral.
pub fn sep_poly_qint(l: &Weight, x: f64, q: f64, g: f64) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!("q = {q} must lie in (0,1)")));
    }
    if x <= 0.0 || g <= 0.0 {
        return Err(Error::Domain(format!("the Jackson integral diverges for x = {x}, g = {g}")));
    }
    let lam: alloc::vec::Vec<i32> = (1..=l.n()).map(|j| l.part(j)).collect();
    if singular(&lam, g) {
        let mean = |d: f64| -> Result<f64> { Ok((qint_value(&lam, x, q, g, d)? + qint_value(&lam, x, q, g, -d)?) / 2.0) };
        let d = SINGULAR_OFFSET;
        let (m1, m2, m4) = (mean(d)?, mean(2.0 * d)?, mean(4.0 * d)?);
        let (r1, r2) = ((4.0 * m1 - m2) / 3.0, (4.0 * m2 - m4) / 3.0);
        Ok((16.0 * r1 - r2) / 15.0)
    } else {
        qint_value(&lam, x, q, g, 0.0)
    }
}

/// The exact `S_λ(q^x)` at `ℓ = q^{-g}`.
pub fn sep_poly_exact(l: &Weight, x: f64, q: f64, g: f64) -> Result<f64> {
    let ell = q.powf(-g);
    let point: BTreeMap<Sym, Complex64> = [
        (Sym::Q, Complex64::new(q, 0.0)),
        (Sym::Ell, Complex64::new(ell, 0.0)),
        (Sym::HalfEll, Complex64::new(ell.sqrt(), 0.0)),
        (Sym::Y, Complex64::new(q.powf(x), 0.0)),
    ]
    .into_iter()
    .collect();
    Ok(sep_poly(l)?.to_ratfunc().eval_complex(&point)?.re)
}

/// Largest relative error over the points `xs`.
pub fn qint_sep_poly_check(l: &Weight, q: f64, g: f64, xs: &[f64]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &x in xs {
        let num = sep_poly_qint(l, x, q, g)?;
        let exact = sep_poly_exact(l, x, q, g)?;
        worst = worst.max((num - exact).abs() / exact.abs().max(f64::MIN_POSITIVE));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[i32]) -> Weight {
        Weight::new(p).unwrap()
    }

    #[test]
    fn trivial_weight() {
        assert!(qint_sep_poly_check(&w(&[0, 0, 0]), 0.5, 1.0, &[0.5, 1.0, 2.0]).unwrap() < 1e-12);
    }

    #[test]
    fn integer_coupling() {
        assert!(qint_sep_poly_check(&w(&[0, 0, 1]), 0.5, 1.0, &[0.5, 1.0, 2.0]).unwrap() < 1e-8);
    }

    #[test]
    fn half_integer_coupling() {
        assert!(qint_sep_poly_check(&w(&[0, 1, 2]), 0.4, 1.5, &[1.0]).unwrap() < 1e-8);
    }

    #[test]
    fn divergent_slice_rejected() {
        assert!(qint_sep_poly_check(&w(&[0, 0, 1]), 0.5, 1.0, &[0.0]).is_err());
        assert!(qint_sep_poly_check(&w(&[0, 0, 1]), 0.5, 1.0, &[-1.0]).is_err());
    }
}
