//! The separated q-difference operator and the recurrence it induces on
//! Laurent coefficients.

use super::seppoly::SepPoly;
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFunc, Sym};
use crate::macdonald::{eigenvalues, ell_for, ell_half_pow, Weight};
use crate::qkit::qpoch;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use smallvec::smallvec;

const YV: [Sym; 1] = [Sym::Y];

/// `sum_k C_k(y) f(q^k y)` for `k = 0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SepOperator {
    pub n: usize,
    /// `h_0 = 1, h_1, ..., h_n`.
    pub h: Vec<RatFunc>,
    /// `C_k(y)`, Laurent polynomials in `y`.
    pub terms: Vec<LaurentPoly>,
}

fn ypoly(coeffs: &[(i32, RatFunc)]) -> LaurentPoly {
    LaurentPoly::from_terms(&YV, coeffs.iter().map(|(e, c)| (smallvec![*e], c.clone())))
}

/// `1 - c y`.
fn lin(c: RatFunc) -> LaurentPoly {
    ypoly(&[(0, RatFunc::one()), (1, -c)])
}

/// `(c y; q)_k` as a polynomial in `y`.
fn ypoch(c: &RatFunc, k: usize) -> LaurentPoly {
    let y = LaurentPoly::from_term(&YV, smallvec![1], c.clone());
    qpoch(&y, &LaurentPoly::constant_in(&YV, RatFunc::q_pow(1)), k)
}

impl SepOperator {
    /// `C_k = (-1)^k ℓ^{(n-1)k/2} (1 - q^k ℓ^k y)(y;q)_k (q^{k+1} ℓ^n y;q)_{n-k} h_{n-k}`.
    pub fn new(h: &[RatFunc]) -> Result<Self> {
        let n = h.len().checked_sub(1).filter(|&n| n >= 2).ok_or_else(|| {
            Error::Domain(format!("need h_0..h_n with n >= 2, got {} values", h.len()))
        })?;
        if !h[0].is_one() {
            return Err(Error::Domain(format!("h_0 must be 1, got {}", h[0])));
        }
        let ell = ell_for(n);
        let mut terms = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let sign = if k % 2 == 0 { RatFunc::one() } else { RatFunc::from_int(-1) };
            let pre = &(&sign * &ell_half_pow(n, ((n - 1) * k) as i64)) * &h[n - k];
            let a = lin(&RatFunc::q_pow(k as i64) * &ell.pow(k as i64));
            let b = ypoch(&RatFunc::one(), k);
            let c = ypoch(&(&RatFunc::q_pow(k as i64 + 1) * &ell.pow(n as i64)), n - k);
            terms.push((&(&a * &b) * &c).scale(&pre));
        }
        Ok(SepOperator { n, h: h.to_vec(), terms })
    }

    /// The operator for the eigenvalues `h(λ)`.
    pub fn for_weight(l: &Weight) -> Result<Self> {
        Self::new(&eigenvalues(l))
    }

    /// Applies the operator to a Laurent polynomial in `y`.
    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        apply_terms(&self.terms, f)
    }

    /// The coefficients with the common factor `1 - q^n ℓ^n y` cancelled.
    pub fn simplified(&self) -> Result<Vec<LaurentPoly>> {
        let d = lin(&RatFunc::q_pow(self.n as i64) * &ell_for(self.n).pow(self.n as i64));
        self.terms
            .iter()
            .enumerate()
            .map(|(k, c)| c.div_exact(&d).ok_or_else(|| Error::NotDivisible(format!("C_{k} by 1-q^n l^n y"))))
            .collect()
    }

    /// Recurrence coefficients `A_{K,i}`, `i = 0..=n+1`, as polynomials in
    /// `z = q^K`: `A_{K,i} = sum_k c_{k,i} q^{-ki} z^k`, where `c_{k,i}` is the
    /// `y^i` coefficient of `C_k`.
    pub fn recurrence(&self) -> Vec<LaurentPoly> {
        let zv = [Sym::Z];
        (0..=self.n + 1)
            .map(|i| {
                let mut a = LaurentPoly::zero_in(&zv);
                for (k, c) in self.terms.iter().enumerate() {
                    let cki = c.coeff_at(&[i as i32]);
                    if !cki.is_zero() {
                        a.add_term(smallvec![k as i32], &cki * &RatFunc::q_pow(-((k * i) as i64)));
                    }
                }
                a
            })
            .collect()
    }
}

fn apply_terms(terms: &[LaurentPoly], f: &LaurentPoly) -> Result<LaurentPoly> {
    let f = f.with_vars(&YV)?;
    let mut out = LaurentPoly::zero_in(&YV);
    for (k, c) in terms.iter().enumerate() {
        out = &out + &(c * &f.qshift(&[k as i32]));
    }
    Ok(out)
}

/// Applies the cancelled form of the operator.
pub fn apply_simplified(op: &SepOperator, f: &LaurentPoly) -> Result<LaurentPoly> {
    apply_terms(&op.simplified()?, f)
}

/// The three-particle equation written out term by term.
pub fn apply_sep_eq3(h: &[RatFunc], f: &LaurentPoly) -> Result<LaurentPoly> {
    if h.len() != 4 {
        return Err(Error::Domain(format!("expected h_0..h_3, got {} values", h.len())));
    }
    let l = RatFunc::var(Sym::Ell);
    let q = |e: i64| RatFunc::q_pow(e);
    let lp = |e: i64| l.pow(e);
    let terms = [
        (&lin(&q(1) * &lp(3)) * &lin(&q(2) * &lp(3))).scale(&-h[3].clone()),
        (&lin(&q(1) * &l) * &lin(&q(2) * &lp(3))).scale(&(&l * &h[2])),
        (&lin(q(1)) * &lin(&q(2) * &lp(2))).scale(&-(&lp(2) * &h[1])),
        (&lin(q(1)) * &lin(q(2))).scale(&lp(3)),
    ];
    apply_terms(&terms, f)
}

/// `A_{K,0} = (-1)^n ℓ^{n(n-1)/2} prod_j (z - q^{λj} ℓ^{1-j})`.
pub fn boundary_low_closed(l: &Weight) -> LaurentPoly {
    let n = l.n();
    let ell = ell_for(n);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let mut p = LaurentPoly::constant_in(&[Sym::Z], &RatFunc::from_int(sign) * &ell.pow((n * (n - 1) / 2) as i64));
    for j in 1..=n {
        let root = &RatFunc::q_pow(l.part(j) as i64) * &ell.pow(1 - j as i64);
        p = &p * &LaurentPoly::from_terms(&[Sym::Z], [(smallvec![1], RatFunc::one()), (smallvec![0], -root)]);
    }
    p
}

/// `A_{K,n+1} = -(ℓ/q)^{n(n+1)/2} prod_j (z - q^{λj+n+1} ℓ^{n-j})`.
pub fn boundary_high_closed(l: &Weight) -> LaurentPoly {
    let n = l.n();
    let ell = ell_for(n);
    let e = (n * (n + 1) / 2) as i64;
    let mut p = LaurentPoly::constant_in(&[Sym::Z], -(&ell.pow(e) * &RatFunc::q_pow(-e)));
    for j in 1..=n {
        let root = &RatFunc::q_pow((l.part(j) + n as i32 + 1) as i64) * &ell.pow((n - j) as i64);
        p = &p * &LaurentPoly::from_terms(&[Sym::Z], [(smallvec![1], RatFunc::one()), (smallvec![0], -root)]);
    }
    p
}

fn at_q_power(p: &LaurentPoly, k: i32) -> RatFunc {
    let z = RatFunc::q_pow(k as i64);
    p.terms().iter().fold(RatFunc::zero(), |acc, (e, c)| &acc + &(c * &z.pow(e[0] as i64)))
}

/// Checks the boundary closed forms and that `A_{K,0}`, `A_{K,n+1}` vanish
/// on a window around the support only at `K = λ1` and `K = λn + n + 1`.
pub fn check_uniqueness(l: &Weight) -> Result<bool> {
    let n = l.n();
    let rec = SepOperator::for_weight(l)?.recurrence();
    if rec[0] != boundary_low_closed(l) || rec[n + 1] != boundary_high_closed(l) {
        return Ok(false);
    }
    let lo = l.part(1) - n as i32 - 2;
    let hi = l.part(n) + 2 * n as i32 + 3;
    for k in lo..=hi {
        if at_q_power(&rec[0], k).is_zero() != (k == l.part(1)) {
            return Ok(false);
        }
        if at_q_power(&rec[n + 1], k).is_zero() != (k == l.part(n) + n as i32 + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solves the recurrence upward from `f_{λ1} = 1` and checks the `n + 1`
/// overdetermined equations past `λn`.
pub fn reconstruct_sep_by_recursion(l: &Weight) -> Result<SepPoly> {
    let n = l.n();
    let rec = SepOperator::for_weight(l)?.recurrence();
    let (lo, hi) = (l.part(1), l.part(n));
    let mut f: BTreeMap<i32, RatFunc> = BTreeMap::new();
    f.insert(lo, RatFunc::one());
    let get = |f: &BTreeMap<i32, RatFunc>, k: i32| f.get(&k).cloned().unwrap_or_default();
    let residual = |f: &BTreeMap<i32, RatFunc>, big_k: i32, from: usize| {
        (from..=n + 1).fold(RatFunc::zero(), |acc, i| {
            let fk = get(f, big_k - i as i32);
            if fk.is_zero() {
                acc
            } else {
                &acc + &(&at_q_power(&rec[i], big_k) * &fk)
            }
        })
    };
    if !residual(&f, lo, 0).is_zero() {
        return Err(Error::IdentityFailed(format!("recurrence does not start at K = {lo} for {l}")));
    }
    for big_k in lo + 1..=hi {
        let a0 = at_q_power(&rec[0], big_k);
        let rhs = -residual(&f, big_k, 1);
        f.insert(big_k, rhs.checked_div(&a0)?);
    }
    for big_k in hi + 1..=hi + n as i32 + 1 {
        if !residual(&f, big_k, 0).is_zero() {
            return Err(Error::IdentityFailed(format!("recurrence inconsistent at K = {big_k} for {l}")));
        }
    }
    f.retain(|_, c| !c.is_zero());
    Ok(SepPoly { weight: l.clone(), chi: f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_laurent;
    use crate::sov::seppoly::sep_poly;

    fn w(p: &[i32]) -> Weight {
        Weight::new(p).unwrap()
    }

    #[test]
    fn annihilates_small_cases() {
        let l = w(&[0, 0, 1]);
        let op = SepOperator::for_weight(&l).unwrap();
        assert!(op.apply(&sep_poly(&l).unwrap().to_laurent()).unwrap().is_zero());
        let z = w(&[0, 0, 0]);
        let one = LaurentPoly::constant_in(&YV, RatFunc::one());
        assert!(SepOperator::for_weight(&z).unwrap().apply(&one).unwrap().is_zero());
    }

    #[test]
    fn perturbation_is_detected() {
        let l = w(&[0, 1, 2]);
        let f = &sep_poly(&l).unwrap().to_laurent() + &parse_laurent("y", &YV).unwrap();
        assert!(!SepOperator::for_weight(&l).unwrap().apply(&f).unwrap().is_zero());
    }

    #[test]
    fn explicit_form_is_proportional() {
        let l = w(&[0, 1, 3]);
        let op = SepOperator::for_weight(&l).unwrap();
        let f = parse_laurent("y^2+3*y^-1", &YV).unwrap();
        let simp = apply_simplified(&op, &f).unwrap();
        let explicit = apply_sep_eq3(&op.h, &f).unwrap();
        let factor = parse_laurent("y-1", &YV).unwrap();
        assert_eq!(&explicit * &factor, simp);
    }

    #[test]
    fn recursion_oracle() {
        assert_eq!(reconstruct_sep_by_recursion(&w(&[0, 0, 1])).unwrap(), sep_poly(&w(&[0, 0, 1])).unwrap());
        assert_eq!(reconstruct_sep_by_recursion(&w(&[0, 0, 0])).unwrap().render(), "1");
        assert!(check_uniqueness(&w(&[-1, 0, 2])).unwrap());
    }
}
