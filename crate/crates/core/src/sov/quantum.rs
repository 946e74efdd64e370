//! Exact identities behind the operator equations for the kernel of `M`:
//! the first-order coefficients `α̌_k(y)`, their compositions, and the
//! commutation of shifts past the two-body factors.
//!
//! Everything lives in `Q(q, L)(y, t1, t2, t3)` with `ℓ = L^2`.

use super::pbasis::c_lambda;
use super::seppoly::sep_poly;
use crate::error::{Error, Result};
use crate::exactalg::{LaurentFrac, LaurentPoly, RatFunc, Sym};
use crate::macdonald::{QShiftOperator, Weight};
use crate::qkit::qpoch;
use alloc::format;
use alloc::vec::Vec;

fn half() -> RatFunc {
    RatFunc::var(Sym::HalfEll)
}

fn ell() -> RatFunc {
    half().pow(2)
}

fn t(k: usize) -> RatFunc {
    RatFunc::var([Sym::T1, Sym::T2, Sym::T3][k - 1])
}

fn q(e: i64) -> RatFunc {
    RatFunc::q_pow(e)
}

fn one_minus(x: RatFunc) -> RatFunc {
    RatFunc::one() - x
}

/// `α̌_k(y)` for `k = 1, 2`, as a function of `y` and `(t1, t2, t3)`.
pub fn alpha_check(k: usize, y: &RatFunc, ts: &[RatFunc; 3]) -> Result<RatFunc> {
    if k != 1 && k != 2 {
        return Err(Error::Domain(format!("α̌_k needs k in {{1, 2}}, got {k}")));
    }
    let (tk, to, t3) = (&ts[k - 1], &ts[2 - k], &ts[2]);
    let l = ell();
    let num = &(&(&one_minus(&(&q(1) * &l.pow(3)) * y) * &(tk - &(&l * t3))) * &(&(&(&l * t3) * y) - to))
        * &(&(&q(1) * tk) - to);
    let den = &(&(&(&l * &one_minus(y.clone())) * &(&(&(&q(1) * &l) * tk) - t3))
        * &(&(&(&(&q(1) * &l.pow(2)) * t3) * y) - to))
        * &(tk - to);
    num.checked_div(&den)
}

fn std_ts() -> [RatFunc; 3] {
    [t(1), t(2), t(3)]
}

/// `v_jk = (ℓ^{-1/2} t_j - ℓ^{1/2} t_k)/(t_j - t_k)`.
pub fn v(j: usize, k: usize) -> Result<RatFunc> {
    let h = half();
    (&(&h.inv()? * &t(j)) - &(&h * &t(k))).checked_div(&(&t(j) - &t(k)))
}

/// `v̌_jk = (ℓ^{-1/2} t_j - q ℓ^{1/2} t_k)/(t_j - q t_k)`.
pub fn v_check(j: usize, k: usize) -> Result<RatFunc> {
    let h = half();
    (&(&h.inv()? * &t(j)) - &(&(&q(1) * &h) * &t(k))).checked_div(&(&t(j) - &(&q(1) * &t(k))))
}

/// The two expressions for `α̌_12(y)`: `α̌_1(qy)|_{t2->q t2} α̌_2(y)` and
/// `α̌_2(qy)|_{t1->q t1} α̌_1(y)`.
pub fn alpha12_both(y: &RatFunc) -> Result<(RatFunc, RatFunc)> {
    let ts = std_ts();
    let qy = &q(1) * y;
    let shifted2 = [t(1), &q(1) * &t(2), t(3)];
    let shifted1 = [&q(1) * &t(1), t(2), t(3)];
    let a = &alpha_check(1, &qy, &shifted2)? * &alpha_check(2, y, &ts)?;
    let b = &alpha_check(2, &qy, &shifted1)? * &alpha_check(1, y, &ts)?;
    Ok((a, b))
}

/// Left-hand sides of the two α̌ identities; both should vanish.
pub fn alpha_identity_residuals() -> Result<(RatFunc, RatFunc)> {
    let y = RatFunc::var(Sym::Y);
    let ts = std_ts();
    let l = ell();
    let a1 = alpha_check(1, &y, &ts)?;
    let a2 = alpha_check(2, &y, &ts)?;
    let (a12, _) = alpha12_both(&y)?;
    let f = |c: RatFunc| one_minus(&c * &y);
    let first = &(&(&-(&(&f(q(1)) * &f(&q(2) * &l.pow(2))) * &l.pow(2)) * &(&v_check(3, 1)? * &v_check(3, 2)?))
        * &a12)
        - &(&f(&q(1) * &l.pow(3)) * &f(&q(2) * &l.pow(3)));
    let first = &first
        + &(&(&(&f(&q(1) * &l) * &f(&q(2) * &l.pow(3))) * &l)
            * &(&(&(&v_check(1, 2)? * &v_check(3, 2)?) * &a2) + &(&(&v_check(2, 1)? * &v_check(3, 1)?) * &a1)));
    let second = &(&(&(&f(RatFunc::one()) * &f(q(1))) * &l.pow(3)) * &a12)
        + &(&(&(&f(l.clone()) * &f(&q(1) * &l.pow(3))) * &l) * &(&v(1, 3)? * &v(2, 3)?));
    let second = &second
        - &(&(&(&f(RatFunc::one()) * &f(&q(1) * &l.pow(2))) * &l.pow(2))
            * &(&(&(&v_check(1, 2)? * &v(1, 3)?) * &a2) + &(&(&v_check(2, 1)? * &v(2, 3)?) * &a1)));
    Ok((first, second))
}

fn mult_op(c: &RatFunc) -> Result<QShiftOperator> {
    let vars = [Sym::T1, Sym::T2, Sym::T3];
    let num = LaurentPoly::from_intpoly_in(&vars, c.num());
    let den = LaurentPoly::from_intpoly_in(&vars, c.den());
    let mut op = QShiftOperator::zero(&vars);
    op.add_term(LaurentFrac::new(num, &[den])?, &[0, 0, 0]);
    Ok(op)
}

fn unit_shift(k: usize) -> QShiftOperator {
    let mut m = [0i32; 3];
    m[k - 1] = 1;
    QShiftOperator::shift(&[Sym::T1, Sym::T2, Sym::T3], &m)
}

/// `T_k v_jk = v̌_jk T_k` and `v_jk T_j = T_j v̌_jk` for every ordered pair.
pub fn check_shift_commutation() -> Result<bool> {
    for j in 1..=3 {
        for k in (1..=3).filter(|&k| k != j) {
            let vjk = mult_op(&v(j, k)?)?;
            let vcjk = mult_op(&v_check(j, k)?)?;
            if unit_shift(k).compose(&vjk) != vcjk.compose(&unit_shift(k)) {
                return Ok(false);
            }
            if vjk.compose(&unit_shift(j)) != unit_shift(j).compose(&vcjk) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `c_λ χ_{λ,λ1} χ_{λ,λ3} = ℓ^{λ3 + 2λ1} (ℓ^{-2};q)_{λ31}/(ℓ^{-3};q)_{λ31}`.
pub fn check_c_chi_product(l: &Weight) -> Result<bool> {
    let s = sep_poly(l)?;
    let lhs = &(&c_lambda(l)? * &s.coeff(l.part(1))) * &s.coeff(l.part(3));
    let ell = RatFunc::var(Sym::Ell);
    let k = l.diff(3, 1) as usize;
    let rhs = &ell.pow((l.part(3) + 2 * l.part(1)) as i64)
        * &(&qpoch(&ell.pow(-2), &q(1), k) / &qpoch(&ell.pow(-3), &q(1), k));
    Ok(lhs == rhs)
}

/// Outcome of the quantum identity suite.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumReport {
    pub identity_a: RatFunc,
    pub identity_b: RatFunc,
    pub alpha12_consistent: bool,
    pub shift_commutation: bool,
}

impl QuantumReport {
    pub fn holds(&self) -> bool {
        self.identity_a.is_zero() && self.identity_b.is_zero() && self.alpha12_consistent && self.shift_commutation
    }
}

pub fn verify_alpha_identities_quantum() -> Result<QuantumReport> {
    let (a, b) = alpha_identity_residuals()?;
    let (x, y) = alpha12_both(&RatFunc::var(Sym::Y))?;
    Ok(QuantumReport { identity_a: a, identity_b: b, alpha12_consistent: x == y, shift_commutation: check_shift_commutation()? })
}

/// Weights for which the `c_λ` product identity is checked by default.
pub fn default_cn_weights() -> Vec<Weight> {
    [[0, 1, 2], [0, 0, 3], [-1, 1, 1], [-2, 0, 3]].iter().map(|p| Weight::new(p).expect("dominant")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha12_orderings_agree() {
        let (a, b) = alpha12_both(&RatFunc::var(Sym::Y)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn identities_vanish() {
        let (a, b) = alpha_identity_residuals().unwrap();
        assert!(a.is_zero(), "{a}");
        assert!(b.is_zero(), "{b}");
    }

    #[test]
    fn commutation() {
        assert!(check_shift_commutation().unwrap());
    }

    #[test]
    fn c_chi_product() {
        assert!(check_c_chi_product(&Weight::new(&[0, 1, 2]).unwrap()).unwrap());
    }
}
