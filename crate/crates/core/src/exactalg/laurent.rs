//! Multivariate Laurent polynomials with `RatFunc` coefficients.

use super::intpoly::IntPoly;
use super::ratfunc::RatFunc;
use super::sym::Sym;
use crate::error::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};
use num_complex::Complex64;
use smallvec::SmallVec;

pub type VarSet = SmallVec<[Sym; 4]>;
pub type LMono = SmallVec<[i32; 4]>;

/// `Σ c_e v^e` over a named variable list. The variable order is whatever the
/// constructor chose; binary operations align operands by name.
#[derive(Clone, Debug, Default)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<LMono, RatFunc>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, o: &Self) -> bool {
        if self.vars == o.vars {
            return self.terms == o.terms;
        }
        (self - o).is_zero()
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero_in(vars: &[Sym]) -> Self {
        LaurentPoly { vars: vars.iter().copied().collect(), terms: BTreeMap::new() }
    }

    pub fn zero() -> Self {
        Self::zero_in(&[])
    }

    pub fn one() -> Self {
        Self::constant(RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::constant_in(&[], c)
    }

    pub fn constant_in(vars: &[Sym], c: RatFunc) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(smallvec::smallvec![0; vars.len()], c);
        }
        p
    }

    /// The variable `s` as an element of the ring over `vars`.
    pub fn var_in(vars: &[Sym], s: Sym) -> Self {
        Self::monomial_in(vars, &[(s, 1)], RatFunc::one())
    }

    /// `c · ∏ s^e` over `vars` (which must contain every listed symbol).
    pub fn monomial_in(vars: &[Sym], exps: &[(Sym, i32)], c: RatFunc) -> Self {
        let mut e: LMono = smallvec::smallvec![0; vars.len()];
        for (s, k) in exps {
            let i = vars.iter().position(|v| v == s).expect("symbol in varset");
            e[i] += *k;
        }
        Self::from_term(vars, e, c)
    }

    pub fn from_term(vars: &[Sym], e: LMono, c: RatFunc) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(vars: &[Sym], it: impl IntoIterator<Item = (LMono, RatFunc)>) -> Self {
        let mut p = Self::zero_in(vars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[Sym] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<LMono, RatFunc> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn var_index(&self, s: Sym) -> Option<usize> {
        self.vars.iter().position(|v| *v == s)
    }

    /// Adds `c · v^e` in place.
    pub fn add_term(&mut self, e: LMono, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.len(), self.vars.len());
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Same polynomial viewed over a superset of variables in the given order.
    pub fn with_vars(&self, vars: &[Sym]) -> Result<Self> {
        if self.vars.as_slice() == vars {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        let mut out = Self::zero_in(vars);
        for (e, c) in &self.terms {
            let mut ne: LMono = smallvec::smallvec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                match map[i] {
                    Some(j) => ne[j] = k,
                    None if k == 0 => {}
                    None => {
                        return Err(Error::Domain(format!("variable {} not in target varset", self.vars[i])))
                    }
                }
            }
            out.terms.insert(ne, c.clone());
        }
        Ok(out)
    }

    /// Drops variables that appear with exponent zero everywhere.
    pub fn trimmed(&self) -> Self {
        let keep: VarSet = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] != 0))
            .map(|(_, v)| *v)
            .collect();
        self.with_vars(&keep).expect("subset of own vars")
    }

    fn union_vars(a: &[Sym], b: &[Sym]) -> VarSet {
        let mut v: VarSet = a.iter().copied().collect();
        for s in b {
            if !v.contains(s) {
                v.push(*s);
            }
        }
        v
    }

    fn aligned(&self, o: &Self) -> (Self, Self) {
        let u = Self::union_vars(&self.vars, &o.vars);
        (self.with_vars(&u).unwrap(), o.with_vars(&u).unwrap())
    }

    pub fn coeff(&self, exps: &[(Sym, i32)]) -> RatFunc {
        let mut e: LMono = smallvec::smallvec![0; self.vars.len()];
        for (s, k) in exps {
            match self.var_index(*s) {
                Some(i) => e[i] = *k,
                None if *k == 0 => {}
                None => return RatFunc::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Coefficient at an exponent vector in this polynomial's variable order.
    pub fn coeff_at(&self, e: &[i32]) -> RatFunc {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> RatFunc {
        let e: LMono = smallvec::smallvec![0; self.vars.len()];
        self.coeff_at(&e)
    }

    /// The value if this is a constant.
    pub fn as_constant(&self) -> Option<RatFunc> {
        if self.terms.is_empty() {
            return Some(RatFunc::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&k| k == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.vars);
        }
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, d)| (e.clone(), d * c)).collect() }
    }

    /// Multiplies by the monomial `v^m`.
    pub fn shift_exps(&self, m: &[i32]) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m.iter()).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// `f(q^{m_1} v_1, …)`: each `v^e` gains `q^{⟨m,e⟩}`.
    pub fn qshift(&self, m: &[i32]) -> Self {
        assert_eq!(m.len(), self.vars.len(), "shift length must equal the number of variables");
        if m.iter().all(|&k| k == 0) {
            return self.clone();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let k: i64 = e.iter().zip(m.iter()).map(|(a, b)| (*a as i64) * (*b as i64)).sum();
                    (e.clone(), if k == 0 { c.clone() } else { c * &RatFunc::q_pow(k) })
                })
                .collect(),
        }
    }

    /// q-shift given by variable names; unnamed variables are not shifted.
    pub fn qshift_vars(&self, m: &[(Sym, i32)]) -> Self {
        let mut v: LMono = smallvec::smallvec![0; self.vars.len()];
        for (s, k) in m {
            if let Some(i) = self.var_index(*s) {
                v[i] += *k;
            }
        }
        self.qshift(&v)
    }

    /// Multiplies every coefficient-level argument `v_i ↦ c_i v_i`.
    pub fn scale_vars(&self, c: &[RatFunc]) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, d)| {
                    let mut f = d.clone();
                    for (k, ci) in e.iter().zip(c.iter()) {
                        if *k != 0 {
                            f = &f * &ci.pow(*k as i64);
                        }
                    }
                    (e.clone(), f)
                })
                .filter(|(_, d)| !d.is_zero())
                .collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> Result<RatFunc>) -> Result<Self> {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Substitutes a coefficient symbol in every coefficient.
    pub fn specialize(&self, s: Sym, v: &RatFunc) -> Result<Self> {
        self.map_coeffs(|c| c.specialize(s, v))
    }

    /// Monomial substitution: variable `i` becomes `c_i · w^{m_i}` over `new_vars`.
    pub fn subst_monomial(&self, new_vars: &[Sym], images: &[(RatFunc, LMono)]) -> Self {
        assert_eq!(images.len(), self.vars.len());
        let mut out = Self::zero_in(new_vars);
        for (e, c) in &self.terms {
            let mut ne: LMono = smallvec::smallvec![0; new_vars.len()];
            let mut f = c.clone();
            for (k, (ci, mi)) in e.iter().zip(images.iter()) {
                if *k == 0 {
                    continue;
                }
                f = &f * &ci.pow(*k as i64);
                for (a, b) in ne.iter_mut().zip(mi.iter()) {
                    *a += k * b;
                }
            }
            out.add_term(ne, f);
        }
        out
    }

    /// Splits a polynomial over all symbols: exponents of `vars` become
    /// monomials, everything else stays in the coefficients.
    pub fn from_intpoly_in(vars: &[Sym], p: &IntPoly) -> Self {
        let mut out = Self::zero_in(vars);
        for (m, c) in p.terms() {
            let mut rest = *m;
            let e: LMono = vars
                .iter()
                .map(|&v| {
                    let k = rest.0[v.index()];
                    rest.0[v.index()] = 0;
                    k as i32
                })
                .collect();
            out.add_term(e, RatFunc::from_poly(IntPoly::monomial(rest, c.clone())));
        }
        out
    }

    /// The same polynomial with its variables read as field symbols.
    pub fn to_ratfunc(&self) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (&v, &k) in self.vars.iter().zip(e.iter()) {
                if k != 0 {
                    t = &t * &RatFunc::var_pow(v, k as i64);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// General substitution `v_i := images[i]`; negative powers need unit images.
    pub fn subst(&self, new_vars: &[Sym], images: &[LaurentPoly]) -> Result<Self> {
        assert_eq!(images.len(), self.vars.len());
        let imgs: Vec<LaurentPoly> = images.iter().map(|p| p.with_vars(new_vars)).collect::<Result<_>>()?;
        let mut cache: BTreeMap<(usize, i32), LaurentPoly> = BTreeMap::new();
        let mut out = Self::zero_in(new_vars);
        for (e, c) in &self.terms {
            let mut t = Self::constant_in(new_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if let alloc::collections::btree_map::Entry::Vacant(e) = cache.entry((i, k)) {
                    e.insert(imgs[i].pow(k)?);
                }
                t = &t * &cache[&(i, k)];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Integer power; negative exponents require a monomial.
    pub fn pow(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            let mut acc = Self::constant_in(&self.vars, RatFunc::one());
            let mut base = self.clone();
            let mut e = k as u32;
            while e > 0 {
                if e & 1 == 1 {
                    acc = &acc * &base;
                }
                e >>= 1;
                if e > 0 {
                    base = &base * &base;
                }
            }
            return Ok(acc);
        }
        let inv = self.inv_monomial().ok_or_else(|| Error::NotDivisible(format!("negative power of {}", self)))?;
        inv.pow(-k)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn inv_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let ne: LMono = e.iter().map(|k| -k).collect();
        Some(Self::from_term(&self.vars, ne, c.inv().ok()?))
    }

    /// Componentwise minimum exponent (zero vector for the zero polynomial).
    pub fn min_exps(&self) -> LMono {
        let mut m: LMono = smallvec::smallvec![0; self.vars.len()];
        let mut first = true;
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e.iter()) {
                *a = if first { *b } else { (*a).min(*b) };
            }
            first = false;
        }
        m
    }

    pub fn max_exps(&self) -> LMono {
        let mut m: LMono = smallvec::smallvec![0; self.vars.len()];
        let mut first = true;
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e.iter()) {
                *a = if first { *b } else { (*a).max(*b) };
            }
            first = false;
        }
        m
    }

    pub fn degree_in(&self, s: Sym) -> Option<(i32, i32)> {
        let i = self.var_index(s)?;
        let lo = self.terms.keys().map(|e| e[i]).min()?;
        let hi = self.terms.keys().map(|e| e[i]).max()?;
        Some((lo, hi))
    }

    /// Coefficients in `s`, as polynomials over the remaining variables.
    pub fn coeffs_in(&self, s: Sym) -> BTreeMap<i32, LaurentPoly> {
        let i = self.var_index(s).expect("variable present");
        let rest: VarSet = self.vars.iter().copied().filter(|v| *v != s).collect();
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne.remove(i);
            out.entry(k).or_insert_with(|| Self::zero_in(&rest)).add_term(ne, c.clone());
        }
        out
    }

    /// Swaps the exponents of two variables.
    pub fn swap_vars(&self, a: Sym, b: Sym) -> Self {
        let (i, j) = match (self.var_index(a), self.var_index(b)) {
            (Some(i), Some(j)) => (i, j),
            _ => {
                let u = Self::union_vars(&self.vars, &[a, b]);
                return self.with_vars(&u).unwrap().swap_vars(a, b);
            }
        };
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.swap(i, j);
            out.terms.insert(ne, c.clone());
        }
        out
    }

    pub fn is_symmetric_in(&self, a: Sym, b: Sym) -> bool {
        self.swap_vars(a, b) == *self
    }

    /// Replaces each variable by its inverse.
    pub fn invert_vars(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|k| -k).collect(), c.clone())).collect(),
        }
    }

    pub fn derivative(&self, s: Sym) -> Self {
        let i = match self.var_index(s) {
            Some(i) => i,
            None => return Self::zero_in(&self.vars),
        };
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            let k = e[i];
            if k != 0 {
                let mut ne = e.clone();
                ne[i] -= 1;
                out.add_term(ne, c * &RatFunc::from_int(k as i64));
            }
        }
        out
    }

    /// Leading term in lexicographic order of exponent vectors.
    pub fn leading(&self) -> Option<(&LMono, &RatFunc)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient; `None` if `d` does not divide `self` in the Laurent ring.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        let (a, b) = self.aligned(d);
        if a.is_zero() {
            return Some(a);
        }
        let bm = b.min_exps();
        let neg_bm: LMono = bm.iter().map(|k| -k).collect();
        let b = b.shift_exps(&neg_bm);
        let am = a.min_exps();
        let neg_am: LMono = am.iter().map(|k| -k).collect();
        let mut rem = a.shift_exps(&neg_am);
        let (dl, dc) = {
            let (e, c) = b.leading().unwrap();
            (e.clone(), c.clone())
        };
        let dc_inv = dc.inv().ok()?;
        let mut quot = Self::zero_in(&rem.vars);
        while let Some((le, lc)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if le.iter().zip(dl.iter()).any(|(a, b)| a < b) {
                return None;
            }
            let qe: LMono = le.iter().zip(dl.iter()).map(|(a, b)| a - b).collect();
            let qc = &lc * &dc_inv;
            for (e, c) in &b.terms {
                let ne: LMono = e.iter().zip(qe.iter()).map(|(a, b)| a + b).collect();
                rem.add_term(ne, -(c * &qc));
            }
            debug_assert!(!rem.terms.contains_key(&le));
            quot.add_term(qe, qc);
        }
        let back: LMono = am.iter().zip(bm.iter()).map(|(a, b)| a - b).collect();
        Some(quot.shift_exps(&back))
    }

    pub fn eval_complex(&self, point: &BTreeMap<Sym, Complex64>) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = c.eval_complex(point)?;
            for (k, v) in e.iter().zip(self.vars.iter()) {
                if *k != 0 {
                    let x = point.get(v).copied().unwrap_or(Complex64::new(0.0, 0.0));
                    t *= x.powi(*k);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Canonical rendering: descending lexicographic exponent order.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mono = render_lmono(&self.vars, e);
            if mono.is_empty() {
                out.push_str(&c.render());
            } else if c.is_one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{}*{}", c.render_factor(), mono);
            }
        }
        out
    }
}

pub(crate) fn render_lmono(vars: &[Sym], e: &[i32]) -> String {
    let mut s = String::new();
    for (v, k) in vars.iter().zip(e.iter()) {
        if *k == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(v.name());
        if *k != 1 {
            let _ = write!(s, "^{}", k);
        }
    }
    s
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        if self.vars != o.vars {
            let (a, b) = self.aligned(o);
            return &a + &b;
        }
        let (mut big, small) = if self.terms.len() >= o.terms.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c.clone());
        }
        big
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        if self.vars != o.vars {
            let (a, b) = self.aligned(o);
            return &a - &b;
        }
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.vars != o.vars {
            let (a, b) = self.aligned(o);
            return &a * &b;
        }
        let mut acc: BTreeMap<LMono, RatFunc> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: LMono = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                let p = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v = &*v + &p,
                    None => {
                        acc.insert(e, p);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { vars: self.vars.clone(), terms: acc }
    }
}

super::intpoly::forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<RatFunc> for LaurentPoly {
    fn from(c: RatFunc) -> Self {
        LaurentPoly::constant(c)
    }
}

impl super::Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
