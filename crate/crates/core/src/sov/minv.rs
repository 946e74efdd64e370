//! `M^{-1}` as a q-difference operator of order `g` when `ℓ = q^{-g}` with
//! positive integer `g`.
//!
//! The coefficients `ξ_k(r, s)` are built factor by factor in the auxiliary
//! symbols `r, s`; each factor is then rewritten through `r s = t1/t3`,
//! `r/s = t2/t3`, `s^2 = t1/t2`. Numerator and denominator of a factor must
//! share one parity of total `(r, s)` degree; anything else would need a
//! square root and is rejected.

use super::coords::{TVARS, YVARS};
use super::pbasis::apply_minv;
use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, LaurentPoly, RatFunc, Sym};
use crate::qkit::{qbinom, qpoch};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use smallvec::smallvec;

/// Maps `r^a s^b` to `t1^{(a+b)/2} t2^{(a-b)/2} t3^{-a}` in a polynomial.
fn map_rs_poly(p: &IntPoly) -> Result<RatFunc> {
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let a = m.exp(Sym::R) as i64;
        let b = m.exp(Sym::S) as i64;
        if (a + b) % 2 != 0 {
            return Err(Error::HalfPower(format!("r^{a} s^{b}")));
        }
        let mut rest = *m;
        rest.0[Sym::R.index()] = 0;
        rest.0[Sym::S.index()] = 0;
        let mut t = RatFunc::from_poly(IntPoly::monomial(rest, c.clone()));
        t = &t * &RatFunc::var_pow(Sym::T1, (a + b) / 2);
        t = &t * &RatFunc::var_pow(Sym::T2, (a - b) / 2);
        t = &t * &RatFunc::var_pow(Sym::T3, -a);
        acc = &acc + &t;
    }
    Ok(acc)
}

/// Parity of the `(r, s)` degree, if it is the same for every monomial.
fn rs_parity(p: &IntPoly) -> Option<u16> {
    let mut it = p.terms().iter().map(|(m, _)| (m.exp(Sym::R) + m.exp(Sym::S)) % 2);
    let first = it.next().unwrap_or(0);
    it.all(|x| x == first).then_some(first)
}

/// A quotient of two odd polynomials is first multiplied through by `r`.
fn map_rs(f: &RatFunc) -> Result<RatFunc> {
    let (num, den) = match (rs_parity(f.num()), rs_parity(f.den())) {
        (Some(1), Some(1)) => {
            let r = IntPoly::var(Sym::R);
            (f.num() * &r, f.den() * &r)
        }
        (Some(0), Some(0)) => (f.num().clone(), f.den().clone()),
        _ => return Err(Error::HalfPower(format!("mixed parity in {f}"))),
    };
    map_rs_poly(&num)?.checked_div(&map_rs_poly(&den)?)
}

fn q(e: i64) -> RatFunc {
    RatFunc::q_pow(e)
}

/// The factors of `ξ_k` for `(α, β) = (-g, 3g)`, as `(numerators, denominators)`
/// in `r, s`.
pub fn xi_factors(g: u32, k: u32) -> (Vec<RatFunc>, Vec<RatFunc>) {
    let (gi, ki) = (g as i64, k as i64);
    let r = RatFunc::var(Sym::R);
    let s = RatFunc::var(Sym::S);
    let qq = q(1);
    let sign = if k.is_multiple_of(2) { RatFunc::one() } else { RatFunc::from_int(-1) };
    let qg = q(gi);
    let rs = &r * &s;
    let r_s = r.checked_div(&s).expect("s is nonzero");
    let s_r = s.checked_div(&r).expect("r is nonzero");
    let irs = rs.inv().expect("rs is nonzero");
    let s_m2 = s.pow(-2);
    let nums = alloc::vec![
        &sign * &q(-ki * (ki - 1) / 2),
        qbinom(g, ki),
        s_m2.pow(ki),
        RatFunc::one() - &q(gi - 2 * ki) * &s_m2,
        qpoch(&(&qg * &rs), &qq, k as usize),
        qpoch(&(&qg * &s_r), &qq, k as usize),
        qpoch(&(&qg * &r_s), &qq, (g - k) as usize),
        qpoch(&(&qg * &irs), &qq, (g - k) as usize),
    ];
    let dens = alloc::vec![qpoch(&q(2 * gi), &qq, g as usize), qpoch(&(&q(-ki) * &s_m2), &qq, g as usize + 1)];
    (nums, dens)
}

/// `ξ_k` in the variables `t1, t2, t3`.
pub fn xi_t(g: u32, k: u32) -> Result<RatFunc> {
    let (nums, dens) = xi_factors(g, k);
    let mut out = RatFunc::one();
    for f in &nums {
        out = &out * &map_rs(f)?;
    }
    for f in &dens {
        out = out.checked_div(&map_rs(f)?)?;
    }
    Ok(out)
}

/// `Φ -> sum_{k=0}^{g} ξ_k Φ(t3, q^{g+k} t1/t3, q^{2g-k} t2/t3)` with the
/// result as a rational function of `t1, t2, t3`.
pub struct MinvDifference {
    pub g: u32,
    pub xi: Vec<RatFunc>,
}

impl MinvDifference {
    pub fn new(g: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::Domain(String::from("g must be positive")));
        }
        let xi = (0..=g).map(|k| xi_t(g, k)).collect::<Result<Vec<_>>>()?;
        Ok(MinvDifference { g, xi })
    }

    pub fn apply(&self, phi: &LaurentPoly) -> Result<RatFunc> {
        let phi = phi.with_vars(&YVARS)?;
        let gi = self.g as i64;
        let mut acc = RatFunc::zero();
        for (k, xi) in self.xi.iter().enumerate() {
            let k = k as i64;
            let images = [
                (RatFunc::one(), smallvec![0, 0, 1]),
                (q(gi + k), smallvec![1, 0, -1]),
                (q(2 * gi - k), smallvec![0, 1, -1]),
            ];
            let shifted = phi.subst_monomial(&TVARS, &images);
            acc = &acc + &(xi * &shifted.to_ratfunc());
        }
        Ok(acc)
    }
}

/// Builds the operator for `g` and compares it on `Φ` at `ℓ = q^{-g}` with
/// the algebraic inverse specialized there. Returns the common value.
pub fn minv_difference_check(g: u32, phi: &LaurentPoly) -> Result<RatFunc> {
    let op = MinvDifference::new(g)?;
    let ell = q(-(g as i64));
    let lhs = op.apply(&phi.specialize(Sym::Ell, &ell)?)?;
    let rhs = apply_minv(phi)?.specialize(Sym::Ell, &ell)?.to_ratfunc();
    if lhs != rhs {
        return Err(Error::IdentityFailed(format!("difference form of M^-1 at g = {g} on {}", phi.render())));
    }
    Ok(lhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_laurent;

    #[test]
    fn normalization() {
        let op = MinvDifference::new(1).unwrap();
        let total = op.xi.iter().fold(RatFunc::zero(), |a, x| &a + x);
        assert!(total.is_one(), "{total}");
        // the sum must start at k = 0: dropping ξ_0 breaks M^{-1} 1 = 1
        assert!(!(&total - &op.xi[0]).is_one());
    }

    #[test]
    fn agrees_with_basis_inverse() {
        let p = parse_laurent("(1-y1)*(1-y2)", &YVARS).unwrap();
        minv_difference_check(1, &p).unwrap();
        let p = parse_laurent("x*(y1+y2)", &YVARS).unwrap();
        minv_difference_check(2, &p).unwrap();
    }

    #[test]
    fn coefficients_depending_on_ell() {
        let p = parse_laurent("l^2*x*y1*y2 + (l+1)*x*(y1+y2) + x", &YVARS).unwrap();
        minv_difference_check(1, &p).unwrap();
        minv_difference_check(2, &p).unwrap();
    }
}
