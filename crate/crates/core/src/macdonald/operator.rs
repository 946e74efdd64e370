//! Finite sums of rational coefficients times multiplicative q-shifts.

use crate::error::{Error, Result};
use crate::exactalg::{LMono, LaurentFrac, LaurentPoly, Sym, VarSet};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

/// `sum_m a_m(t) T^m`, coefficients to the left of the shifts.
#[derive(Clone, Debug)]
pub struct QShiftOperator {
    vars: VarSet,
    terms: BTreeMap<LMono, LaurentFrac>,
}

fn shift_pairs(vars: &[Sym], m: &[i32]) -> Vec<(Sym, i32)> {
    vars.iter().copied().zip(m.iter().copied()).filter(|(_, k)| *k != 0).collect()
}

impl QShiftOperator {
    pub fn zero(vars: &[Sym]) -> Self {
        QShiftOperator { vars: vars.iter().copied().collect(), terms: BTreeMap::new() }
    }

    /// The pure shift `T^m`.
    pub fn shift(vars: &[Sym], m: &[i32]) -> Self {
        let mut op = Self::zero(vars);
        op.add_term(LaurentFrac::one(), m);
        op
    }

    pub fn vars(&self) -> &[Sym] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<LMono, LaurentFrac> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c T^m`, merging equal shifts.
    pub fn add_term(&mut self, c: LaurentFrac, m: &[i32]) {
        assert_eq!(m.len(), self.vars.len(), "shift length must match the variable count");
        let key: LMono = m.iter().copied().collect();
        let merged = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(key, merged);
        }
    }

    pub fn coeff(&self, m: &[i32]) -> Option<&LaurentFrac> {
        let key: LMono = m.iter().copied().collect();
        self.terms.get(&key)
    }

    /// `sum a_m f(q^m t)` in the fraction field.
    pub fn apply_frac(&self, f: &LaurentPoly) -> LaurentFrac {
        let f = f.with_vars(&self.vars).unwrap_or_else(|_| f.clone());
        let mut acc = LaurentFrac::zero();
        for (m, a) in &self.terms {
            acc = &acc + &a.mul_poly(&f.qshift(m));
        }
        acc
    }

    /// Applies and clears denominators; a surviving pole is an error.
    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.apply_frac(f)
            .clear()
            .map_err(|_| Error::NotDivisible(format!("operator image of {} keeps a pole", f.render())))
    }

    /// Lagrange adjoint: `a(t) T^m -> T^{-m} a(t) = a(q^{-m} t) T^{-m}`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, a) in &self.terms {
            let neg: Vec<i32> = m.iter().map(|k| -k).collect();
            out.add_term(a.qshift(&shift_pairs(&self.vars, &neg)), &neg);
        }
        out
    }

    /// `self ∘ other`, using `T^m b(t) = b(q^m t) T^m`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, a) in &self.terms {
            let pairs = shift_pairs(&self.vars, m);
            for (n, b) in &other.terms {
                let s: Vec<i32> = m.iter().zip(n.iter()).map(|(x, y)| x + y).collect();
                out.add_term(a * &b.qshift(&pairs), &s);
            }
        }
        out
    }

    pub fn scale(&self, c: &LaurentFrac) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, a) in &self.terms {
            out.add_term(c * a, m);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, a) in &o.terms {
            out.add_term(a.clone(), m);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, a) in &o.terms {
            out.add_term(-a.clone(), m);
        }
        out
    }

    /// `[self, other]`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.compose(o).sub(&o.compose(self))
    }
}

impl PartialEq for QShiftOperator {
    fn eq(&self, o: &Self) -> bool {
        self.vars == o.vars && self.sub(o).is_empty()
    }
}

/// `<f, g>`: constant term of `f g`.
pub fn ct_pairing(f: &LaurentPoly, g: &LaurentPoly) -> crate::exactalg::RatFunc {
    (f * g).constant_term()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_laurent;

    const V: [Sym; 2] = [Sym::T1, Sym::T2];

    fn lp(s: &str) -> LaurentPoly {
        parse_laurent(s, &V).unwrap()
    }

    fn sample() -> QShiftOperator {
        let mut op = QShiftOperator::zero(&V);
        op.add_term(LaurentFrac::from_poly(lp("t1+q*t2^-1")), &[1, 0]);
        op.add_term(LaurentFrac::from_poly(lp("l*t1*t2")), &[0, -1]);
        op.add_term(LaurentFrac::from_poly(lp("2")), &[1, 1]);
        op
    }

    #[test]
    fn adjoint_of_shift() {
        let t = QShiftOperator::shift(&V, &[1, 0]);
        assert_eq!(t.adjoint(), QShiftOperator::shift(&V, &[-1, 0]));
    }

    #[test]
    fn adjoint_is_involution_and_pairs() {
        let op = sample();
        assert_eq!(op.adjoint().adjoint(), op);
        let f = lp("t1^2*t2^-1 + 3*t2 + q*t1^-1*t2^-1");
        let g = lp("t1^-2*t2^2 + t2^-1*t1 + l + t1^-1");
        let lhs = ct_pairing(&f, &op.apply(&g).unwrap());
        let rhs = ct_pairing(&op.adjoint().apply(&f).unwrap(), &g);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_matches_sequential_application() {
        let op = sample();
        let f = lp("t1*t2^2 + l*t1^-1");
        let seq = op.apply(&op.apply(&f).unwrap()).unwrap();
        assert_eq!(op.compose(&op).apply(&f).unwrap(), seq);
    }
}
