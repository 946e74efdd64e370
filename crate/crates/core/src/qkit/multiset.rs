//! Products of infinite q-Pochhammers with monomial arguments.
//!
//! A product `prod (a_i;q)_inf^{m_i}` is stored as a multiset of arguments.
//! Arguments whose ratio is an integer power of `q` form a class; inside a
//! class `(a q^k;q)_inf = (a q^{k0};q)_inf / (a q^{k0};q)_{k-k0}` moves
//! everything onto one representative, leaving a finite rational factor.

use super::poch::qpoch_rf;
use crate::error::{Error, Result};
use crate::exactalg::{RatFunc, Sym, NSYM};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

type ClassKey = (i64, [i32; NSYM]);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PochMultiset {
    // class key (coefficient, exponents with q slot zeroed) -> q exponent -> multiplicity
    classes: BTreeMap<ClassKey, BTreeMap<i32, i64>>,
}

fn split_arg(a: &RatFunc) -> Result<(ClassKey, i32)> {
    let (nm, nc, dm, dc) = a
        .monomial_parts()
        .ok_or_else(|| Error::Domain(format!("pochhammer argument {a} is not a monomial")))?;
    let c = nc / dc.clone();
    if &c * &dc != a.num().leading().unwrap().1 || c == BigInt::from(0) {
        return Err(Error::Domain(format!("pochhammer argument {a} has a non-integer coefficient")));
    }
    let c = c.to_i64().ok_or_else(|| Error::Domain(format!("coefficient of {a} too large")))?;
    let mut e = [0i32; NSYM];
    for (i, slot) in e.iter_mut().enumerate() {
        *slot = nm.0[i] as i32 - dm.0[i] as i32;
    }
    let qe = e[Sym::Q.index()];
    e[Sym::Q.index()] = 0;
    Ok(((c, e), qe))
}

fn join_arg(key: &ClassKey, qe: i32) -> RatFunc {
    let mut r = RatFunc::from_int(key.0);
    for (i, &e) in key.1.iter().enumerate() {
        if e != 0 {
            r = &r * &RatFunc::var_pow(Sym::from_index(i), e as i64);
        }
    }
    &r * &RatFunc::q_pow(qe as i64)
}

impl PochMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Multiplies by `(a;q)_inf^mult`.
    pub fn push_inf(&mut self, a: &RatFunc, mult: i64) -> Result<()> {
        let (key, qe) = split_arg(a)?;
        let slot = self.classes.entry(key).or_default().entry(qe).or_insert(0);
        *slot += mult;
        Ok(())
    }

    /// Multiplies by `(a;q)_len^mult = ((a)_inf / (a q^len)_inf)^mult`.
    pub fn push_finite(&mut self, a: &RatFunc, len: i64, mult: i64) -> Result<()> {
        self.push_inf(a, mult)?;
        self.push_inf(&(a * &RatFunc::q_pow(len)), -mult)
    }

    pub fn extend(&mut self, other: &PochMultiset, sign: i64) {
        for (k, m) in &other.classes {
            let e = self.classes.entry(*k).or_default();
            for (qe, mult) in m {
                *e.entry(*qe).or_insert(0) += sign * mult;
            }
        }
    }

    /// Collapses each class onto its lowest argument.
    ///
    /// Returns the surviving infinite products (one per class, nonzero total
    /// multiplicity) and the finite rational factor left over.
    pub fn reduce(&self) -> Result<(Vec<(RatFunc, i64)>, RatFunc)> {
        let mut rest = Vec::new();
        let mut finite = RatFunc::one();
        for (key, m) in &self.classes {
            let live: Vec<(i32, i64)> = m.iter().filter(|(_, &v)| v != 0).map(|(&k, &v)| (k, v)).collect();
            let Some(&(k0, _)) = live.first() else { continue };
            let base = join_arg(key, k0);
            let mut total = 0;
            for &(k, mult) in &live {
                total += mult;
                if k != k0 {
                    // (base q^{k-k0})_inf = (base)_inf / (base)_{k-k0}
                    let p = qpoch_rf(&base, (k - k0) as i64)?;
                    let p = if mult > 0 { p.inv()? } else { p };
                    finite = &finite * &p.pow(mult.abs());
                }
            }
            if total != 0 {
                rest.push((base, total));
            }
        }
        Ok((rest, finite))
    }

    /// True if the product is identically 1.
    pub fn is_identity(&self) -> Result<bool> {
        let (rest, finite) = self.reduce()?;
        Ok(rest.is_empty() && finite.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_ratfunc;

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn finite_pochhammers_telescope() {
        let mut m = PochMultiset::new();
        m.push_finite(&rf("a"), 3, 1).unwrap();
        m.push_finite(&rf("a*q^3"), 2, 1).unwrap();
        m.push_finite(&rf("a"), 5, -1).unwrap();
        assert!(m.is_identity().unwrap());
    }

    #[test]
    fn class_reduction_leaves_finite_part() {
        let mut m = PochMultiset::new();
        m.push_inf(&rf("a*q^2"), 1).unwrap();
        m.push_inf(&rf("a"), -1).unwrap();
        let (rest, fin) = m.reduce().unwrap();
        assert!(rest.is_empty());
        assert_eq!(fin, rf("1/((1-a)*(1-a*q))"));
    }

    #[test]
    fn non_monomial_is_rejected() {
        let mut m = PochMultiset::new();
        assert!(m.push_inf(&rf("1+a"), 1).is_err());
    }
}
