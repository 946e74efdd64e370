//! Separated polynomials `S_λ(y) = sum_{k=λ1}^{λn} χ_{λ,k} y^k` and their
//! alternative representations.

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFunc, Sym};
use crate::macdonald::{ell_for, Weight};
use crate::qkit::{bhs_series, bhs_terminating, qfact, qlauricella_terminating, qpoch, PochMultiset, TruncSeries};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

#[derive(Clone, Debug, PartialEq)]
pub struct SepPoly {
    pub weight: Weight,
    /// `k -> χ_{λ,k}` for `k` in `[λ1, λn]`.
    pub chi: BTreeMap<i32, RatFunc>,
}

impl SepPoly {
    pub fn coeff(&self, k: i32) -> RatFunc {
        self.chi.get(&k).cloned().unwrap_or_default()
    }

    /// `S_λ` as a Laurent polynomial in the single variable `var`.
    pub fn to_laurent_in(&self, var: Sym) -> LaurentPoly {
        let vars = [var];
        let mut out = LaurentPoly::zero_in(&vars);
        for (&k, c) in &self.chi {
            out.add_term(smallvec::smallvec![k], c.clone());
        }
        out
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        self.to_laurent_in(Sym::Y)
    }

    /// `S_λ(v)` for any rational `v`.
    pub fn eval(&self, v: &RatFunc) -> Result<RatFunc> {
        let mut acc = RatFunc::zero();
        for (&k, c) in &self.chi {
            let p = if k < 0 { v.inv()?.pow(-k as i64) } else { v.pow(k as i64) };
            acc = &acc + &(c * &p);
        }
        Ok(acc)
    }

    /// `S_λ` with `y` a symbol of the coefficient field.
    pub fn to_ratfunc(&self) -> RatFunc {
        self.eval(&RatFunc::var(Sym::Y)).expect("y is invertible")
    }

    /// Ascending powers: `1 + (l^2+l)*y`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (&k, c) in self.chi.iter().filter(|(_, c)| !c.is_zero()) {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let mono = match k {
                0 => String::new(),
                1 => String::from("y"),
                _ => format!("y^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&c.render_factor());
            } else if c.is_one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{}*{mono}", c.render_factor());
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn ell_pow(n: usize, e: i64) -> RatFunc {
    ell_for(n).pow(e)
}

/// `(a_1..a_n)` and `(b_1..b_{n-1})` with `a_j = ℓ^{n-j+1} q^{λ1-λ_{n-j+1}+1}`,
/// `b_j = a_j/ℓ`.
pub fn sep_parameters(l: &Weight) -> (Vec<RatFunc>, Vec<RatFunc>) {
    let n = l.n();
    let a: Vec<RatFunc> = (1..=n)
        .map(|j| &ell_pow(n, (n - j + 1) as i64) * &RatFunc::q_pow((l.part(1) - l.part(n - j + 1) + 1) as i64))
        .collect();
    let linv = ell_pow(n, -1);
    let b = a[..n - 1].iter().map(|x| x * &linv).collect();
    (a, b)
}

/// `χ_{λ,k}` as `(qℓ^n)^m (q^{-1}ℓ^{-n};q)_m/(q;q)_m` times a terminating
/// `_{n+1}phi_n` at argument `q`, with `m = k - λ1`.
pub fn chi(l: &Weight, k: i32) -> Result<RatFunc> {
    let n = l.n();
    let m = k - l.part(1);
    if m < 0 || k > l.part(n) {
        return Ok(RatFunc::zero());
    }
    let q = RatFunc::q_pow(1);
    let elln = ell_pow(n, n as i64);
    let (a, b) = sep_parameters(l);
    let mut tops = alloc::vec![RatFunc::q_pow(-m as i64)];
    tops.extend(a);
    let mut bottoms = alloc::vec![&RatFunc::q_pow(2 - m as i64) * &elln];
    bottoms.extend(b);
    let phi = bhs_terminating(&tops, &bottoms, &q, &q, m as usize)?;
    let base = &RatFunc::q_pow(-1) * &ell_pow(n, -(n as i64));
    let pre = &(&q * &elln).pow(m as i64) * &(&qpoch(&base, &q, m as usize) / &qfact(m as usize));
    Ok(&pre * &phi)
}

/// `S_λ` from the χ formula.
pub fn sep_poly(l: &Weight) -> Result<SepPoly> {
    let mut chis = BTreeMap::new();
    for k in l.part(1)..=l.part(l.n()) {
        let c = chi(l, k)?;
        if !c.is_zero() {
            chis.insert(k, c);
        }
    }
    Ok(SepPoly { weight: l.clone(), chi: chis })
}

/// Power series `(y;q)_{1-ng} _n phi_{n-1}[a; b; q, y]` with `q^{-g} = ℓ`,
/// truncated at `order`.
pub fn sep_series(l: &Weight, order: usize) -> Result<TruncSeries<RatFunc>> {
    let n = l.n();
    let q = RatFunc::q_pow(1);
    let elln = ell_pow(n, n as i64);
    // (y)_inf / (q ℓ^n y)_inf = 1phi0[q^{-1} ℓ^{-n}; q, q ℓ^n y]
    let base = &RatFunc::q_pow(-1) * &ell_pow(n, -(n as i64));
    let pre = bhs_series(&[base], &[], &q, order)?.dilate(&(&q * &elln));
    let (a, b) = sep_parameters(l);
    let phi = bhs_series(&a, &b, &q, order)?;
    Ok(pre.mul(&phi))
}

/// `S_λ` from the truncated product series. The `n` orders past `λn - λ1`
/// must vanish and every coefficient must match [`sep_poly`].
pub fn sep_poly_via_series(l: &Weight) -> Result<SepPoly> {
    let n = l.n();
    let width = (l.part(n) - l.part(1)) as usize;
    let s = sep_series(l, width + 1 + n)?;
    for k in width + 1..s.order() {
        if !s.coeff(k).is_zero() {
            return Err(Error::IdentityFailed(format!("series for S_{l} does not terminate at order {k}")));
        }
    }
    let mut chis = BTreeMap::new();
    for k in 0..=width {
        let c = s.coeff(k);
        if !c.is_zero() {
            chis.insert(l.part(1) + k as i32, c);
        }
    }
    let out = SepPoly { weight: l.clone(), chi: chis };
    if out != sep_poly(l)? {
        return Err(Error::IdentityFailed(format!("series and χ routes disagree for S_{l}")));
    }
    Ok(out)
}

fn ell_poch(n: usize, e: i64, k: i32) -> RatFunc {
    qpoch(&ell_pow(n, e), &RatFunc::q_pow(1), k.max(0) as usize)
}

/// Closed form of the top coefficient `χ_{λ,λn}`; checked against [`sep_poly`].
pub fn chi_endpoint(l: &Weight) -> Result<RatFunc> {
    let n = l.n();
    let p = |j: usize| l.part(j);
    let mut v = ell_pow(n, l.size() as i64 - n as i64 * p(1) as i64);
    for j in 1..n {
        let e = -(j as i64);
        let num = &ell_poch(n, e, p(j) - p(1)) * &ell_poch(n, e, p(n) - p(n - j));
        let den = &ell_poch(n, e, p(j + 1) - p(1)) * &ell_poch(n, e, p(n) - p(n - j + 1));
        v = &v * &num.checked_div(&den)?;
    }
    let direct = sep_poly(l)?.coeff(p(n));
    if direct != v {
        return Err(Error::IdentityFailed(format!("χ endpoint for {l}: closed form {v}, expansion {direct}")));
    }
    Ok(v)
}

/// Closed form of `S_λ(ℓ^{-n})`; checked against [`sep_poly`].
pub fn sep_value_at_ell_minus_n(l: &Weight) -> Result<RatFunc> {
    let n = l.n();
    let p = |j: usize| l.part(j);
    let mut v = &ell_pow(n, -(n as i64) * p(1) as i64) * &ell_poch(n, -(n as i64), p(n) - p(1));
    for j in 1..n {
        let e = -(j as i64);
        v = &v * &ell_poch(n, e, p(j) - p(1)).checked_div(&ell_poch(n, e, p(j + 1) - p(1)))?;
    }
    let direct = sep_poly(l)?.eval(&ell_pow(n, -(n as i64)))?;
    if direct != v {
        return Err(Error::IdentityFailed(format!("S_{l}(ℓ^-n): closed form {v}, expansion {direct}")));
    }
    Ok(v)
}

/// The common prefactor `1 / prod_j (q^{λ1-λ_{n-j+1}+1} ℓ^{n-j};q)_{λ_{n-j+1}-λ_{n-j}}`.
fn lauricella_denominator(l: &Weight) -> Result<RatFunc> {
    let n = l.n();
    let q = RatFunc::q_pow(1);
    let mut d = RatFunc::one();
    for j in 1..n {
        let arg = &RatFunc::q_pow((l.part(1) - l.part(n - j + 1) + 1) as i64) * &ell_pow(n, (n - j) as i64);
        d = &d * &qpoch(&arg, &q, l.diff(n - j + 1, n - j) as usize);
    }
    d.inv()
}

fn y_pow(k: i32) -> RatFunc {
    RatFunc::var_pow(Sym::Y, k as i64)
}

/// First form: a terminating `phi_D` with `a' = y`.
pub fn lauricella_form_one(l: &Weight) -> Result<RatFunc> {
    let n = l.n();
    let q = RatFunc::q_pow(1);
    let y = RatFunc::var(Sym::Y);
    let width = l.diff(n, 1);
    let c = &(&(&q * &ell_pow(n, n as i64)) * &RatFunc::q_pow(-width as i64)) * &y;
    let mut bs = Vec::with_capacity(n - 1);
    let mut xs = Vec::with_capacity(n - 1);
    let mut bounds = Vec::with_capacity(n - 1);
    for j in 1..n {
        bs.push(RatFunc::q_pow(-(l.diff(n - j + 1, n - j) as i64)));
        xs.push(&(&q * &ell_pow(n, (n - j) as i64)) * &RatFunc::q_pow((l.part(1) - l.part(n - j)) as i64));
        bounds.push(l.diff(n - j + 1, n - j) as usize);
    }
    let phi = qlauricella_terminating(&y, &bs, &c, &xs, &bounds, &q)?;
    let pre = &(&y_pow(l.part(1)) * &qpoch(&c, &q, width as usize)) * &lauricella_denominator(l)?;
    Ok(&pre * &phi)
}

/// Third form: the explicit multiple sum obtained by expanding `phi_D`.
pub fn lauricella_form_three(l: &Weight) -> Result<RatFunc> {
    let n = l.n();
    let q = RatFunc::q_pow(1);
    let y = RatFunc::var(Sym::Y);
    let width = l.diff(n, 1);
    let bounds: Vec<i32> = (1..n).map(|j| l.diff(n - j + 1, n - j)).collect();
    let mut idx = alloc::vec![0i32; n - 1];
    let mut acc = RatFunc::zero();
    loop {
        let kk: i32 = idx.iter().sum();
        let arg = &(&(&q * &ell_pow(n, n as i64)) * &RatFunc::q_pow((kk - width) as i64)) * &y;
        let mut term = &qpoch(&arg, &q, (width - kk) as usize) * &qpoch(&y, &q, kk as usize);
        for (j0, &k) in idx.iter().enumerate() {
            let j = j0 + 1;
            let b = RatFunc::q_pow(-(bounds[j0] as i64));
            let x = &(&q * &ell_pow(n, (n - j) as i64)) * &RatFunc::q_pow((l.part(1) - l.part(n - j)) as i64);
            term = &term * &(&(&qpoch(&b, &q, k as usize) * &x.pow(k as i64)) / &qfact(k as usize));
        }
        acc = &acc + &term;
        let mut j = 0;
        loop {
            if j == idx.len() {
                return Ok(&(&y_pow(l.part(1)) * &lauricella_denominator(l)?) * &acc);
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

/// Second form, checked structurally: with `a' = y`, `c = qℓy`, `b'_j = ℓ^{-1}`,
/// `x_j = a_j`, the stated prefactor times the infinite products of the
/// Andrews reduction must collapse to `(y)_inf/(qℓ^n y)_inf`, and the reduced
/// `_n phi_{n-1}` parameters must be those of the defining series.
pub fn lauricella_form_two_consistent(l: &Weight) -> Result<bool> {
    let n = l.n();
    let q = RatFunc::q_pow(1);
    let y = RatFunc::var(Sym::Y);
    let ell = ell_for(n);
    let (a, b) = sep_parameters(l);
    let qly = &(&q * &ell) * &y;
    let mut m = PochMultiset::new();
    // (qℓy)_{(1-n)g} = (qℓy)_inf / (qℓ^n y)_inf
    m.push_inf(&qly, 1)?;
    m.push_inf(&(&(&q * &ell_pow(n, n as i64)) * &y), -1)?;
    // (a_i)_g = (a_i)_inf / (b_i)_inf
    for i in 0..n - 1 {
        m.push_inf(&a[i], 1)?;
        m.push_inf(&b[i], -1)?;
    }
    // Andrews: (a')_inf prod (b'_j x_j)_inf / ((c)_inf prod (x_j)_inf)
    m.push_inf(&y, 1)?;
    m.push_inf(&qly, -1)?;
    let linv = ell.inv()?;
    for aj in &a[..n - 1] {
        m.push_inf(&(aj * &linv), 1)?;
        m.push_inf(aj, -1)?;
    }
    let mut target = PochMultiset::new();
    target.push_inf(&y, 1)?;
    target.push_inf(&(&(&q * &ell_pow(n, n as i64)) * &y), -1)?;
    m.extend(&target, -1);
    if !m.is_identity()? {
        return Ok(false);
    }
    // c/a' = qℓ = a_n, b'_j x_j = b_j
    let ca = qly.checked_div(&y)?;
    let tops_ok = ca == a[n - 1];
    let bottoms_ok = a[..n - 1].iter().zip(&b).all(|(x, bj)| &(x * &linv) == bj);
    Ok(tops_ok && bottoms_ok)
}

/// All Lauricella representations agree with [`sep_poly`].
pub fn lauricella_forms_check(l: &Weight) -> Result<bool> {
    let s = sep_poly(l)?.to_ratfunc();
    Ok(lauricella_form_one(l)? == s && lauricella_form_three(l)? == s && lauricella_form_two_consistent(l)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_ratfunc;

    fn w(p: &[i32]) -> Weight {
        Weight::new(p).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(sep_poly(&w(&[0, 0, 0])).unwrap().render(), "1");
        let s = sep_poly(&w(&[0, 0, 1])).unwrap();
        assert_eq!(s.coeff(1), parse_ratfunc("l^2/(l+1)").unwrap());
        assert_eq!(sep_poly(&w(&[0, 1, 1])).unwrap().render(), "1 + (l^2+l)*y");
        let s = sep_poly(&w(&[0, 2, 2])).unwrap();
        assert_eq!(s.coeff(1), parse_ratfunc("(l^2-1)*(q+1)*l/(l-q)").unwrap());
        assert_eq!(s.coeff(2), parse_ratfunc("(l^2-q)*(l+1)*l^2/(l-q)").unwrap());
    }

    #[test]
    fn lowest_coefficient_is_one() {
        assert!(sep_poly(&w(&[-1, 0, 3])).unwrap().coeff(-1).is_one());
    }

    #[test]
    fn series_route() {
        assert_eq!(sep_poly_via_series(&w(&[0, 0, 2])).unwrap(), sep_poly(&w(&[0, 0, 2])).unwrap());
        let s = sep_series(&w(&[0, 1, 2]), 4).unwrap();
        assert!(s.coeff(3).is_zero());
    }

    #[test]
    fn endpoints() {
        assert_eq!(chi_endpoint(&w(&[0, 1, 2])).unwrap(), RatFunc::var_pow(Sym::Ell, 3));
        assert!(sep_value_at_ell_minus_n(&w(&[0, 0, 0])).unwrap().is_one());
        assert_eq!(sep_value_at_ell_minus_n(&w(&[0, 0, 1])).unwrap(), parse_ratfunc("(1-l^-3)/(1-l^-2)").unwrap());
    }

    #[test]
    fn lauricella() {
        for p in [[0, 0, 0], [0, 0, 1], [0, 1, 1], [-1, 1, 2]] {
            assert!(lauricella_forms_check(&w(&p)).unwrap(), "{p:?}");
        }
    }
}
