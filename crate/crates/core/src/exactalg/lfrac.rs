//! Laurent-polynomial fractions with factored denominators.
//!
//! Denominators are kept as a multiset of normalised factors, so common
//! denominators are unions by maximum multiplicity and no polynomial gcd is
//! ever needed. Zero testing is exact: the numerator vanishes.

use super::laurent::{LMono, LaurentPoly};
use super::ratfunc::RatFunc;
use super::sym::Sym;
use crate::error::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct LaurentFrac {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

/// Splits `f = unit · g` with `g` a polynomial without monomial content and
/// leading coefficient one. Returns `(unit, g)`; `g` is `None` for units.
fn normalize_factor(f: &LaurentPoly) -> (LaurentPoly, Option<LaurentPoly>) {
    let f = f.trimmed();
    let m = f.min_exps();
    let neg: LMono = m.iter().map(|k| -k).collect();
    let g = f.shift_exps(&neg);
    let (_, c) = g.leading().expect("nonzero factor");
    let c = c.clone();
    let g = g.scale(&c.inv().expect("nonzero"));
    let unit = LaurentPoly::from_term(f.vars(), m, c);
    if g.as_constant().is_some() {
        (unit, None)
    } else {
        (unit, Some(g))
    }
}

impl LaurentFrac {
    pub fn from_poly(p: LaurentPoly) -> Self {
        LaurentFrac { num: p, den: Vec::new() }
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::constant(RatFunc::one())
    }

    /// `num / ∏ dens`.
    pub fn new(num: LaurentPoly, dens: &[LaurentPoly]) -> Result<Self> {
        let mut r = Self::from_poly(num);
        for d in dens {
            r = r.div_poly(d)?;
        }
        Ok(r)
    }

    /// Divides by one polynomial, recorded as a factor.
    pub fn div_poly(&self, d: &LaurentPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (unit, g) = normalize_factor(d);
        let uinv = unit.inv_monomial().expect("unit");
        let mut out = LaurentFrac { num: &self.num * &uinv, den: self.den.clone() };
        if let Some(g) = g {
            out.push_factor(g, 1);
        }
        Ok(out)
    }

    fn push_factor(&mut self, g: LaurentPoly, k: u32) {
        for (f, m) in self.den.iter_mut() {
            if *f == g {
                *m += k;
                return;
            }
        }
        self.den.push((g, k));
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn den_product(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one();
        for (f, m) in &self.den {
            for _ in 0..*m {
                d = &d * f;
            }
        }
        d
    }

    /// Cancels denominator factors that divide the numerator.
    pub fn reduced(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for (f, m) in &self.den {
            let mut k = *m;
            while k > 0 {
                match num.div_exact(f) {
                    Some(q) => {
                        num = q;
                        k -= 1;
                    }
                    None => break,
                }
            }
            if k > 0 {
                den.push((f.clone(), k));
            }
        }
        LaurentFrac { num, den }
    }

    /// The Laurent polynomial this fraction equals; errors if a pole remains.
    pub fn clear(&self) -> Result<LaurentPoly> {
        let mut num = self.num.clone();
        for (f, m) in &self.den {
            for _ in 0..*m {
                num = num
                    .div_exact(f)
                    .ok_or_else(|| Error::NotDivisible(format!("factor {} remains in the denominator", f)))?;
            }
        }
        Ok(num)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let base = LaurentFrac::from_poly(self.den_product());
        base.div_poly(&self.num)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    /// Multiplies the numerator by `∏ f^{target - own}` so both share `target`.
    fn lift(&self, target: &[(LaurentPoly, u32)]) -> LaurentPoly {
        let mut n = self.num.clone();
        for (f, m) in target {
            let own = self.den.iter().find(|(g, _)| g == f).map(|(_, k)| *k).unwrap_or(0);
            for _ in own..*m {
                n = &n * f;
            }
        }
        n
    }

    fn union_den(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> Vec<(LaurentPoly, u32)> {
        let mut u: Vec<(LaurentPoly, u32)> = a.to_vec();
        for (f, m) in b {
            match u.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => *k = (*k).max(*m),
                None => u.push((f.clone(), *m)),
            }
        }
        u
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        LaurentFrac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        LaurentFrac { num: &self.num * p, den: self.den.clone() }
    }

    fn renormalize(num: LaurentPoly, factors: Vec<(LaurentPoly, u32)>) -> Result<Self> {
        let mut out = LaurentFrac::from_poly(num);
        for (f, m) in factors {
            for _ in 0..m {
                out = out.div_poly(&f)?;
            }
        }
        Ok(out)
    }

    /// `F(q^{m} v)`.
    pub fn qshift(&self, m: &[(Sym, i32)]) -> Self {
        let num = self.num.qshift_vars(m);
        let den = self.den.iter().map(|(f, k)| (f.qshift_vars(m), *k)).collect();
        Self::renormalize(num, den).expect("shift keeps factors nonzero")
    }

    /// Monomial change of variables (see [`LaurentPoly::subst_monomial`]).
    pub fn subst_vars(&self, images: &[(Sym, RatFunc, Vec<(Sym, i32)>)], new_vars: &[Sym]) -> Result<Self> {
        let apply = |p: &LaurentPoly| -> LaurentPoly {
            let imgs: Vec<(RatFunc, LMono)> = p
                .vars()
                .iter()
                .map(|v| match images.iter().find(|(s, _, _)| s == v) {
                    Some((_, c, mono)) => {
                        let mut e: LMono = smallvec::smallvec![0; new_vars.len()];
                        for (s, k) in mono {
                            let i = new_vars.iter().position(|w| w == s).expect("target var");
                            e[i] += k;
                        }
                        (c.clone(), e)
                    }
                    None => {
                        let mut e: LMono = smallvec::smallvec![0; new_vars.len()];
                        let i = new_vars.iter().position(|w| w == v).expect("untouched var kept");
                        e[i] = 1;
                        (RatFunc::one(), e)
                    }
                })
                .collect();
            p.subst_monomial(new_vars, &imgs)
        };
        let num = apply(&self.num);
        let mut den = Vec::new();
        for (f, k) in &self.den {
            let g = apply(f);
            if g.is_zero() {
                return Err(Error::VanishingDenominator(format!("{}", f)));
            }
            den.push((g, *k));
        }
        Self::renormalize(num, den)
    }

    /// General substitution of variables by Laurent polynomials.
    pub fn subst(&self, new_vars: &[Sym], images: &dyn Fn(Sym) -> LaurentPoly) -> Result<Self> {
        let apply = |p: &LaurentPoly| -> Result<LaurentPoly> {
            let imgs: Vec<LaurentPoly> = p.vars().iter().map(|v| images(*v)).collect();
            p.subst(new_vars, &imgs)
        };
        let num = apply(&self.num)?;
        let mut den = Vec::new();
        for (f, k) in &self.den {
            let g = apply(f)?;
            if g.is_zero() {
                return Err(Error::VanishingDenominator(format!("{}", f)));
            }
            den.push((g, *k));
        }
        Self::renormalize(num, den)
    }

    /// Substitutes a coefficient symbol.
    pub fn specialize(&self, s: Sym, v: &RatFunc) -> Result<Self> {
        let num = self.num.specialize(s, v)?;
        let mut den = Vec::new();
        for (f, k) in &self.den {
            let g = f.specialize(s, v)?;
            if g.is_zero() {
                return Err(Error::VanishingDenominator(format!("{}", f)));
            }
            den.push((g, *k));
        }
        Self::renormalize(num, den)
    }

    pub fn derivative(&self, s: Sym) -> Self {
        let mut num = self.num.derivative(s);
        for (f, _) in &self.den {
            num = &num * f;
        }
        for (i, (f, m)) in self.den.iter().enumerate() {
            let df = f.derivative(s);
            if df.is_zero() {
                continue;
            }
            let mut t = (&self.num * &df).scale(&RatFunc::from_int(*m as i64));
            for (j, (g, _)) in self.den.iter().enumerate() {
                if j != i {
                    t = &t * g;
                }
            }
            num = &num - &t;
        }
        let den = self.den.iter().map(|(f, m)| (f.clone(), m + 1)).collect();
        LaurentFrac { num, den }
    }

    pub fn eval_complex(&self, point: &BTreeMap<Sym, Complex64>) -> Result<Complex64> {
        let n = self.num.eval_complex(point)?;
        let mut d = Complex64::new(1.0, 0.0);
        for (f, m) in &self.den {
            d *= f.eval_complex(point)?.powi(*m as i32);
        }
        if d.norm() < 1e-300 {
            return Err(Error::NearZeroDenominator);
        }
        Ok(n / d)
    }

    pub fn render(&self) -> String {
        if self.den.is_empty() {
            return self.num.render();
        }
        let mut s = format!("({})", self.num.render());
        for (f, m) in &self.den {
            if *m == 1 {
                s.push_str(&format!("/({})", f.render()));
            } else {
                s.push_str(&format!("/({})^{}", f.render(), m));
            }
        }
        s
    }
}

impl PartialEq for LaurentFrac {
    fn eq(&self, o: &Self) -> bool {
        (self - o).is_zero()
    }
}

impl fmt::Display for LaurentFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a LaurentFrac> for &'a LaurentFrac {
    type Output = LaurentFrac;
    fn add(self, o: &LaurentFrac) -> LaurentFrac {
        if o.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return o.clone();
        }
        let u = LaurentFrac::union_den(&self.den, &o.den);
        let n = &self.lift(&u) + &o.lift(&u);
        LaurentFrac { num: n, den: u }
    }
}

impl Neg for &LaurentFrac {
    type Output = LaurentFrac;
    fn neg(self) -> LaurentFrac {
        LaurentFrac { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Sub<&'a LaurentFrac> for &'a LaurentFrac {
    type Output = LaurentFrac;
    fn sub(self, o: &LaurentFrac) -> LaurentFrac {
        self + &(-o)
    }
}

impl<'a> Mul<&'a LaurentFrac> for &'a LaurentFrac {
    type Output = LaurentFrac;
    fn mul(self, o: &LaurentFrac) -> LaurentFrac {
        if self.num.is_zero() || o.num.is_zero() {
            return LaurentFrac::zero();
        }
        let mut out = LaurentFrac { num: &self.num * &o.num, den: self.den.clone() };
        for (f, m) in &o.den {
            out.push_factor(f.clone(), *m);
        }
        out
    }
}

super::intpoly::forward_owned!(LaurentFrac, Add add, Sub sub, Mul mul);

impl Neg for LaurentFrac {
    type Output = LaurentFrac;
    fn neg(self) -> LaurentFrac {
        -&self
    }
}

impl From<LaurentPoly> for LaurentFrac {
    fn from(p: LaurentPoly) -> Self {
        LaurentFrac::from_poly(p)
    }
}

impl From<RatFunc> for LaurentFrac {
    fn from(c: RatFunc) -> Self {
        LaurentFrac::constant(c)
    }
}

impl super::Ring for LaurentFrac {
    fn zero() -> Self {
        LaurentFrac::zero()
    }
    fn one() -> Self {
        LaurentFrac::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl super::Field for LaurentFrac {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}
