//! Reduced rational functions over ℤ.

use super::gcd::gcd;
use super::intpoly::{forward_owned, IntPoly, Mono};
use super::sym::Sym;
use crate::error::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;

/// `num/den` in lowest terms with a positive leading denominator coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc { num: IntPoly::from_int(c), den: IntPoly::one() }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc { num: p, den: IntPoly::one() }
    }

    pub fn var(s: Sym) -> Self {
        Self::from_poly(IntPoly::var(s))
    }

    /// `s^e` for any integer `e`.
    pub fn var_pow(s: Sym, e: i64) -> Self {
        let p = IntPoly::var_pow(s, e.unsigned_abs() as u16);
        if e >= 0 {
            Self::from_poly(p)
        } else {
            RatFunc { num: IntPoly::one(), den: p }
        }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::var_pow(Sym::Q, e)
    }

    pub fn ratio(a: i64, b: i64) -> Self {
        Self::new(IntPoly::from_int(a), IntPoly::from_int(b)).expect("nonzero denominator")
    }

    /// Reduces `num/den`.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::fix_sign(n, d)
    }

    fn fix_sign(n: IntPoly, d: IntPoly) -> Self {
        if d.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            RatFunc { num: -n, den: -d }
        } else {
            RatFunc { num: n, den: d }
        }
    }

    /// `self / prod(factors)` where every factor is irreducible and
    /// primitive. Cancellation is found by trial division, so no gcd is
    /// computed.
    pub fn div_irreducibles(&self, factors: &[IntPoly]) -> Result<Self> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for f in factors {
            if f.is_zero() {
                return Err(Error::DivisionByZero);
            }
            match num.div_exact(f) {
                Some(n) => num = n,
                None => den = &den * f,
            }
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self::fix_sign(num, den))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn support(&self) -> u32 {
        self.num.support() | self.den.support()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::fix_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        RatFunc { num: base.num.pow(k), den: base.den.pow(k) }
    }

    /// Equality by cross-multiplication.
    pub fn eq_cross(&self, o: &RatFunc) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }

    /// Replaces `s` by `value` and re-reduces.
    pub fn specialize(&self, s: Sym, value: &RatFunc) -> Result<RatFunc> {
        let n = self.num.substitute(s, value, |c| RatFunc::from_poly(c.clone()));
        let d = self.den.substitute(s, value, |c| RatFunc::from_poly(c.clone()));
        if d.is_zero() {
            return Err(Error::VanishingDenominator(format!(
                "{} at {}={}",
                self.den.render(),
                s.name(),
                value
            )));
        }
        Ok(&n * &d.inv()?)
    }

    /// Applies several substitutions in sequence.
    pub fn specialize_all(&self, binds: &[(Sym, RatFunc)]) -> Result<RatFunc> {
        let mut r = self.clone();
        for (s, v) in binds {
            r = r.specialize(*s, v)?;
        }
        Ok(r)
    }

    /// Numeric value at a point; symbols absent from `point` evaluate to zero.
    pub fn eval_complex(&self, point: &BTreeMap<Sym, Complex64>) -> Result<Complex64> {
        let val = |s: Sym| point.get(&s).copied().unwrap_or_else(|| Complex64::new(0.0, 0.0));
        let emb = |c: &BigInt| Complex64::new(IntPoly::coeff_f64(c), 0.0);
        let d = self.den.eval(val, emb);
        if d.norm() < 1e-300 {
            return Err(Error::NearZeroDenominator);
        }
        Ok(self.num.eval(val, emb) / d)
    }

    /// Canonical text: `num` alone if the denominator is one, else `(num)/(den)`.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }

    /// Rendering suitable as a factor: bare if a single-term polynomial.
    pub fn render_factor(&self) -> String {
        if self.den.is_one() && self.num.len() == 1 {
            let s = self.num.render();
            if !s.starts_with('-') {
                return s;
            }
        }
        if self.den.is_one() {
            format!("({})", self.num.render())
        } else {
            format!("({})", self.render())
        }
    }

    /// True if the value is a single signed monomial over a constant.
    pub fn monomial_parts(&self) -> Option<(Mono, BigInt, Mono, BigInt)> {
        if self.num.is_monomial() && self.den.is_monomial() {
            let (nm, nc) = self.num.leading().unwrap().clone();
            let (dm, dc) = self.den.leading().unwrap().clone();
            Some((nm, nc, dm, dc))
        } else {
            None
        }
    }

    pub fn derivative(&self, s: Sym) -> RatFunc {
        let dn = &(&self.num.derivative(s) * &self.den) - &(&self.num * &self.den.derivative(s));
        Self::reduce(dn, &self.den * &self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::reduce(&self.num + &o.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: &(&self.num * &o.den) + &o.num, den: o.den.clone() };
        }
        if o.den.is_one() {
            return RatFunc { num: &self.num + &(&o.num * &self.den), den: self.den.clone() };
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let n = &(&self.num * &o.den) + &(&o.num * &self.den);
            if n.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc::fix_sign(n, &self.den * &o.den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let t = &(&self.num * &d1) + &(&o.num * &b1);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g2 = gcd(&t, &g);
        if g2.is_one() {
            return RatFunc::fix_sign(t, &b1 * &o.den);
        }
        let n = t.div_exact(&g2).expect("gcd divides");
        let d = &b1 * &o.den.div_exact(&g2).expect("gcd divides");
        RatFunc::fix_sign(n, d)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: IntPoly::one() };
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d = if g1.is_one() { o.den.clone() } else { o.den.div_exact(&g1).unwrap() };
        let c = if g2.is_one() { o.num.clone() } else { o.num.div_exact(&g2).unwrap() };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        RatFunc::fix_sign(&a * &c, &b * &d)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] to handle it.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o).expect("division by zero RatFunc")
    }
}

forward_owned!(RatFunc, Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl super::Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl super::Field for RatFunc {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

