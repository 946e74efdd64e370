//! Truncated formal power series in one variable.

use super::poch::bhs_coeffs;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use alloc::vec;
use alloc::vec::Vec;

/// `sum_{k<order} c_k y^k`, arithmetic modulo `y^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> TruncSeries<F> {
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order, F::zero());
        TruncSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut c = vec![F::zero(); order];
        if order > 0 {
            c[0] = F::one();
        }
        TruncSeries { coeffs: c }
    }

    /// `c y^k`.
    pub fn monomial(c: F, k: usize, order: usize) -> Self {
        let mut v = vec![F::zero(); order];
        if k < order {
            v[k] = c;
        }
        TruncSeries { coeffs: v }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        TruncSeries { coeffs: (0..n).map(|k| self.coeffs[k].clone() + o.coeffs[k].clone()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        TruncSeries { coeffs: (0..n).map(|k| self.coeffs[k].clone() - o.coeffs[k].clone()).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be invertible.
    pub fn inv(&self) -> Result<Self> {
        let n = self.order();
        let c0 = self.coeff(0).try_inv().ok_or(Error::DivisionByZero)?;
        let mut out = vec![F::zero(); n];
        if n == 0 {
            return Ok(TruncSeries { coeffs: out });
        }
        out[0] = c0.clone();
        for k in 1..n {
            let mut s = F::zero();
            for j in 1..=k {
                s = s + self.coeffs[j].clone() * out[k - j].clone();
            }
            out[k] = -(s * c0.clone());
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `f(y) -> f(c y)`.
    pub fn dilate(&self, c: &F) -> Self {
        let mut ck = F::one();
        let mut out = Vec::with_capacity(self.order());
        for a in &self.coeffs {
            out.push(a.clone() * ck.clone());
            ck = ck * c.clone();
        }
        TruncSeries { coeffs: out }
    }

    /// `y^k f(y)`, truncated.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = vec![F::zero(); n];
        for i in 0..n.saturating_sub(k) {
            out[i + k] = self.coeffs[i].clone();
        }
        TruncSeries { coeffs: out }
    }
}

/// `(z y; q)_inf = sum_m (-1)^m q^{m(m-1)/2} z^m y^m / (q;q)_m`.
pub fn euler_product<F: Field>(z: &F, q: &F, order: usize) -> Result<TruncSeries<F>> {
    let mut out = Vec::with_capacity(order);
    let mut c = F::one();
    let mut qm = F::one();
    for m in 0..order {
        out.push(c.clone());
        // c_{m+1} = -c_m z q^m / (1 - q^{m+1})
        let next_q = qm.clone() * q.clone();
        let d = (F::one() - next_q.clone()).try_inv().ok_or(Error::ZeroPochhammer(m + 1))?;
        c = -(c * z.clone() * qm.clone() * d);
        qm = next_q;
    }
    Ok(TruncSeries { coeffs: out })
}

/// `1/(z y; q)_inf = sum_m z^m y^m / (q;q)_m`.
pub fn euler_inverse<F: Field>(z: &F, q: &F, order: usize) -> Result<TruncSeries<F>> {
    let mut out = Vec::with_capacity(order);
    let mut c = F::one();
    let mut qm = q.clone();
    for m in 0..order {
        out.push(c.clone());
        let d = (F::one() - qm.clone()).try_inv().ok_or(Error::ZeroPochhammer(m + 1))?;
        c = c * z.clone() * d;
        qm = qm * q.clone();
    }
    Ok(TruncSeries { coeffs: out })
}

/// The series `_n phi_{n-1}[tops; bottoms; q, y]` truncated at `order`.
pub fn bhs_series<F: Field>(tops: &[F], bottoms: &[F], q: &F, order: usize) -> Result<TruncSeries<F>> {
    if order == 0 {
        return Ok(TruncSeries { coeffs: Vec::new() });
    }
    Ok(TruncSeries { coeffs: bhs_coeffs(tops, bottoms, q, order - 1)? })
}

/// `{ y prod(1 - a_k Y) - prod(1 - q^{-1} b_k Y) } f` on the truncated
/// `_n phi_{n-1}`, with `b_n = q` and `(Y f)(y) = f(q y)`.
///
/// Every coefficient of the result should vanish.
pub fn hg_diffeq_residual<F: Field>(tops: &[F], bottoms: &[F], q: &F, order: usize) -> Result<TruncSeries<F>> {
    if tops.len() != bottoms.len() + 1 {
        return Err(Error::Domain(alloc::format!(
            "need n tops and n-1 bottoms, got {} and {}",
            tops.len(),
            bottoms.len()
        )));
    }
    let f = bhs_series(tops, bottoms, q, order)?;
    let qinv = q.try_inv().ok_or(Error::DivisionByZero)?;
    let apply = |params: &[F], pre: &F| -> TruncSeries<F> {
        let mut g = f.clone();
        for p in params {
            let c = p.clone() * pre.clone();
            g = g.sub(&g.dilate(q).scale(&c));
        }
        g
    };
    let lhs = apply(tops, &F::one()).shift_up(1);
    let mut bs: Vec<F> = bottoms.to_vec();
    bs.push(q.clone());
    let rhs = apply(&bs, &qinv);
    Ok(lhs.sub(&rhs))
}

/// Truncated Andrews reduction of `phi_D` with `c = C a'`.
///
/// Both sides are formal power series in `a'`; the left is the terminating
/// Lauricella sum (`b'_j = q^{-nu_j}`), the right the `_n phi_{n-1}` form
/// with its infinite-product prefactor. Returns their difference.
pub fn andrews_residual<F: Field>(cc: &F, xs: &[F], nus: &[usize], q: &F, order: usize) -> Result<TruncSeries<F>> {
    let one = TruncSeries::<F>::one(order);
    let aprime = TruncSeries::monomial(F::one(), 1, order);
    let qinv = q.try_inv().ok_or(Error::DivisionByZero)?;
    let qpow = |k: usize| -> F { crate::exactalg::ring_pow(&qinv, k as u32) };

    // (a';q)_K / (C a';q)_K as series in a'
    let total: usize = nus.iter().sum();
    let mut ratio = vec![one.clone()];
    let mut qi = F::one();
    for _ in 0..total {
        let last = ratio.last().unwrap().clone();
        let num = one.sub(&aprime.scale(&qi));
        let den = one.sub(&aprime.scale(&(cc.clone() * qi.clone()))).inv()?;
        ratio.push(last.mul(&num).mul(&den));
        qi = qi * q.clone();
    }
    let mut lhs = TruncSeries::new(Vec::new(), order);
    let mut idx = vec![0usize; nus.len()];
    loop {
        let kk: usize = idx.iter().sum();
        let mut c = F::one();
        for (j, &k) in idx.iter().enumerate() {
            let b = qpow(nus[j]);
            let num = super::poch::qpoch(&b, q, k) * crate::exactalg::ring_pow(&xs[j], k as u32);
            let den = super::poch::qpoch(q, q, k).try_inv().ok_or(Error::ZeroPochhammer(k))?;
            c = c * num * den;
        }
        lhs = lhs.add(&ratio[kk].scale(&c));
        let mut j = 0;
        let done = loop {
            if j == idx.len() {
                break true;
            }
            idx[j] += 1;
            if idx[j] <= nus[j] {
                break false;
            }
            idx[j] = 0;
            j += 1;
        };
        if done {
            break;
        }
    }

    // (a')_inf / (C a')_inf
    let pre = euler_product(&F::one(), q, order)?.mul(&euler_inverse(cc, q, order)?);
    // prod (q^{-nu} x)_inf / (x)_inf = prod (q^{-nu} x; q)_nu
    let mut fin = F::one();
    for (j, x) in xs.iter().enumerate() {
        fin = fin * super::poch::qpoch(&(qpow(nus[j]) * x.clone()), q, nus[j]);
    }
    // _n phi_{n-1}[C, x_1..; q^{-nu_j} x_j; q; a']
    let mut tops = vec![cc.clone()];
    tops.extend(xs.iter().cloned());
    let bottoms: Vec<F> = xs.iter().enumerate().map(|(j, x)| qpow(nus[j]) * x.clone()).collect();
    let phi = bhs_series(&tops, &bottoms, q, order)?;
    let rhs = pre.mul(&phi).scale(&fin);
    Ok(lhs.sub(&rhs))
}

/// Residual of the lemma `sum_k (a)_k/(q)_k y^k P(q^k) = Q(y) (a q^N y)_inf/(y)_inf`
/// for `P(q^k) = (q^{k-nu+1};q)_nu` and `Q(y) = (a)_nu y^nu (a q^nu y)_{N-nu}`.
pub fn lemma_pq_residual<F: Field>(a: &F, q: &F, nu: usize, big_n: usize, order: usize) -> Result<TruncSeries<F>> {
    if nu > big_n {
        return Err(Error::Domain(alloc::format!("nu = {nu} exceeds N = {big_n}")));
    }
    let qinv = q.try_inv().ok_or(Error::DivisionByZero)?;
    let base = bhs_coeffs(core::slice::from_ref(a), &[], q, order.saturating_sub(1))?;
    let mut lhs = Vec::with_capacity(order);
    let mut qk = F::one();
    for c in base {
        // (q^{k-nu+1};q)_nu
        let start = qk.clone() * crate::exactalg::ring_pow(&qinv, nu as u32) * q.clone();
        lhs.push(c * super::poch::qpoch(&start, q, nu));
        qk = qk * q.clone();
    }
    let lhs = TruncSeries::new(lhs, order);

    let y = TruncSeries::monomial(F::one(), 1, order);
    let one = TruncSeries::<F>::one(order);
    let anu = super::poch::qpoch(a, q, nu);
    let mut qpoly = TruncSeries::monomial(anu, nu, order);
    let mut shift = a.clone() * crate::exactalg::ring_pow(q, nu as u32);
    for _ in nu..big_n {
        qpoly = qpoly.mul(&one.sub(&y.scale(&shift)));
        shift = shift * q.clone();
    }
    let an = a.clone() * crate::exactalg::ring_pow(q, big_n as u32);
    let rhs = qpoly.mul(&euler_product(&an, q, order)?).mul(&euler_inverse(&F::one(), q, order)?);
    Ok(lhs.sub(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{RatFunc, Sym};

    fn q() -> RatFunc {
        RatFunc::q_pow(1)
    }

    #[test]
    fn one_phi_zero_matches_product() {
        let a = RatFunc::var(Sym::Pa);
        let n = 7;
        let lhs = bhs_series(core::slice::from_ref(&a), &[], &q(), n).unwrap();
        let rhs = euler_product(&a, &q(), n).unwrap().mul(&euler_inverse(&RatFunc::one(), &q(), n).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_pair_is_inverse() {
        let z = RatFunc::var(Sym::Z);
        let p = euler_product(&z, &q(), 6).unwrap().mul(&euler_inverse(&z, &q(), 6).unwrap());
        assert_eq!(p, TruncSeries::one(6));
    }

    #[test]
    fn diffeq_residuals_vanish() {
        let a = RatFunc::var(Sym::Pa);
        assert!(hg_diffeq_residual(core::slice::from_ref(&a), &[], &q(), 6).unwrap().is_zero());
        let b = RatFunc::var(Sym::Pb);
        let c = RatFunc::var(Sym::Pc);
        assert!(hg_diffeq_residual(&[a.clone(), b], &[c], &q(), 5).unwrap().is_zero());
        assert!(hg_diffeq_residual(&[a], &[], &q(), 1).unwrap().is_zero());
    }

    #[test]
    fn series_inverse() {
        let s = TruncSeries::new(alloc::vec![RatFunc::one(), RatFunc::var(Sym::Pa)], 5);
        let i = s.inv().unwrap();
        assert_eq!(s.mul(&i), TruncSeries::one(5));
    }
}
