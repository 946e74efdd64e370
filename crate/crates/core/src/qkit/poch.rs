//! Finite q-shifted factorials and terminating sums.

use crate::error::{Error, Result};
use crate::exactalg::{Field, RatFunc, Ring};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// `(a;q)_k = (1-a)(1-aq)...(1-aq^{k-1})` in any ring.
pub fn qpoch<R: Ring>(a: &R, q: &R, k: usize) -> R {
    let mut acc = R::one();
    let mut x = a.clone();
    for i in 0..k {
        acc = acc * (R::one() - x.clone());
        if i + 1 < k {
            x = x * q.clone();
        }
    }
    acc
}

/// `(a;q)_k` over `Q(q,...)` for any integer `k`, using
/// `(a;q)_{-m} = 1/(aq^{-m};q)_m`.
pub fn qpoch_rf(a: &RatFunc, k: i64) -> Result<RatFunc> {
    let q = RatFunc::q_pow(1);
    if k >= 0 {
        return Ok(qpoch(a, &q, k as usize));
    }
    let m = (-k) as usize;
    let d = qpoch(&(a * &RatFunc::q_pow(k)), &q, m);
    d.inv().map_err(|_| Error::ZeroPochhammer(m))
}

/// `(q;q)_k`.
pub fn qfact(k: usize) -> RatFunc {
    let q = RatFunc::q_pow(1);
    qpoch(&q, &q, k)
}

/// Gaussian binomial `[n k]_q`; zero outside `0 <= k <= n`.
pub fn qbinom(n: u32, k: i64) -> RatFunc {
    if k < 0 || k > n as i64 {
        return RatFunc::zero();
    }
    let k = k as usize;
    let n = n as usize;
    &qfact(n) / &(&qfact(k) * &qfact(n - k))
}

/// Coefficients `c_k = prod (tops;q)_k / ((q;q)_k prod (bottoms;q)_k)` for
/// `k = 0..=num_terms`.
pub fn bhs_coeffs<F: Field>(tops: &[F], bottoms: &[F], q: &F, num_terms: usize) -> Result<Vec<F>> {
    let mut out = vec![F::one()];
    let mut c = F::one();
    let mut qk = F::one();
    for k in 1..=num_terms {
        let mut num = F::one();
        for a in tops {
            num = num * (F::one() - a.clone() * qk.clone());
        }
        let mut den = F::one() - qk.clone() * q.clone();
        for b in bottoms {
            let f = F::one() - b.clone() * qk.clone();
            if f.is_zero() {
                return Err(Error::ZeroPochhammer(k));
            }
            den = den * f;
        }
        let inv = den.try_inv().ok_or(Error::ZeroPochhammer(k))?;
        c = c * num * inv;
        out.push(c.clone());
        qk = qk * q.clone();
    }
    Ok(out)
}

/// `sum_{k=0}^{num_terms} prod (tops;q)_k / ((q;q)_k prod (bottoms;q)_k) arg^k`.
///
/// The caller supplies `num_terms`; termination is never inferred.
pub fn bhs_terminating<F: Field>(tops: &[F], bottoms: &[F], arg: &F, q: &F, num_terms: usize) -> Result<F> {
    let cs = bhs_coeffs(tops, bottoms, q, num_terms)?;
    let mut acc = F::zero();
    for c in cs.into_iter().rev() {
        acc = acc * arg.clone() + c;
    }
    Ok(acc)
}

/// Terminating `phi_D[a'; b'_1..; c; x_1..]` with `k_j <= bounds[j]`.
pub fn qlauricella_terminating<F: Field>(a: &F, bs: &[F], c: &F, xs: &[F], bounds: &[usize], q: &F) -> Result<F> {
    if bs.len() != xs.len() || bs.len() != bounds.len() {
        return Err(Error::Domain(format!(
            "lauricella arity mismatch: {} b', {} x, {} bounds",
            bs.len(),
            xs.len(),
            bounds.len()
        )));
    }
    let total: usize = bounds.iter().sum();
    let a_p: Vec<F> = (0..=total).map(|k| qpoch(a, q, k)).collect();
    let mut c_inv = Vec::with_capacity(total + 1);
    for k in 0..=total {
        let p = qpoch(c, q, k);
        c_inv.push(p.try_inv().ok_or(Error::ZeroPochhammer(k))?);
    }
    // one-variable factors (b'_j;q)_k x_j^k / (q;q)_k
    let mut single: Vec<Vec<F>> = Vec::with_capacity(bs.len());
    for (j, (b, x)) in bs.iter().zip(xs).enumerate() {
        let mut row = Vec::with_capacity(bounds[j] + 1);
        let mut xk = F::one();
        for k in 0..=bounds[j] {
            let qf = qpoch(q, q, k).try_inv().ok_or(Error::ZeroPochhammer(k))?;
            row.push(qpoch(b, q, k) * qf * xk.clone());
            xk = xk * x.clone();
        }
        single.push(row);
    }
    let mut acc = F::zero();
    let mut idx = vec![0usize; bs.len()];
    loop {
        let kk: usize = idx.iter().sum();
        let mut term = a_p[kk].clone() * c_inv[kk].clone();
        for (j, &k) in idx.iter().enumerate() {
            term = term * single[j][k].clone();
        }
        acc = acc + term;
        let mut j = 0;
        loop {
            if j == idx.len() {
                return Ok(acc);
            }
            idx[j] += 1;
            if idx[j] <= bounds[j] {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_ratfunc;
    use crate::exactalg::Sym;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        let q = RatFunc::q_pow(1);
        let a = RatFunc::var(Sym::Pa);
        assert!(qpoch(&a, &q, 0).is_one());
        assert_eq!(qpoch(&q, &q, 2), rf("(1-q)*(1-q^2)"));
        let x = RatFunc::var(Sym::X);
        let lhs = &qpoch(&(&q * &x), &q, 3) * &(&(RatFunc::one() - x.clone()) / &(RatFunc::one() - &RatFunc::q_pow(3) * &x));
        assert_eq!(lhs, qpoch(&x, &q, 3));
    }

    #[test]
    fn negative_length() {
        let a = RatFunc::var(Sym::Pa);
        let p = qpoch_rf(&a, -2).unwrap();
        assert_eq!(p, rf("1/((1-a*q^-2)*(1-a*q^-1))"));
        assert!(qpoch_rf(&RatFunc::q_pow(1), -1).is_err());
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(2, 1), rf("1+q"));
        assert!(qbinom(7, 0).is_one());
        assert_eq!(qbinom(4, 2), rf("(1+q^2)*(1+q+q^2)"));
        assert!(qbinom(3, 4).is_zero());
    }

    #[test]
    fn one_phi_zero_first_coefficient() {
        let q = RatFunc::q_pow(1);
        let a = RatFunc::var(Sym::Pa);
        let cs = bhs_coeffs(&[a], &[], &q, 2).unwrap();
        assert_eq!(cs[1], rf("(1-a)/(1-q)"));
    }

    #[test]
    fn s001_from_three_phi_two() {
        // lambda = (0,0,1), n = 3, chi_{lambda,1}
        let q = RatFunc::q_pow(1);
        let l = RatFunc::var(Sym::Ell);
        let tops = [rf("q^-1"), rf("l^3*q^0"), rf("l^2*q"), rf("q*l")];
        let bottoms = [rf("q*l^3"), rf("l^2"), rf("l*q")];
        let phi = bhs_terminating(&tops, &bottoms, &q, &q, 1).unwrap();
        let pre = &(&q * &l.pow(3)) * &(&qpoch(&rf("q^-1*l^-3"), &q, 1) / &qfact(1));
        assert_eq!(&pre * &phi, rf("l^2/(l+1)"));
    }

    #[test]
    fn zero_bottom_is_reported() {
        let q = RatFunc::q_pow(1);
        let r = bhs_terminating(&[rf("q^-2")], &[rf("q^-1")], &q, &q, 2);
        assert!(matches!(r, Err(Error::ZeroPochhammer(2))));
    }

    #[test]
    fn lauricella_trivial_bounds() {
        let q = RatFunc::q_pow(1);
        let v = qlauricella_terminating(&rf("a"), &[rf("b"), rf("c")], &rf("x"), &[rf("y"), rf("z")], &[0, 0], &q).unwrap();
        assert!(v.is_one());
    }
}
