//! Sparse multivariate polynomials with big-integer coefficients.

use super::sym::{Sym, NSYM};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense exponent vector over the symbol universe.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono(pub [u16; NSYM]);

impl Mono {
    pub const ONE: Mono = Mono([0; NSYM]);

    pub fn var(s: Sym, e: u16) -> Mono {
        let mut m = Mono::ONE;
        m.0[s.index()] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, s: Sym) -> u16 {
        self.0[s.index()]
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        r
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Mono) -> Mono {
        let mut r = *o;
        for (a, b) in r.0.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        r
    }

    pub fn meet(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        r
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Bit mask of symbols with a nonzero exponent.
    pub fn support(&self) -> u32 {
        let mut m = 0u32;
        for (i, &e) in self.0.iter().enumerate() {
            if e != 0 {
                m |= 1 << i;
            }
        }
        m
    }
}

/// Multivariate polynomial over ℤ; terms sorted in descending lexicographic
/// order of exponent vectors, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            IntPoly { terms: alloc::vec![(Mono::ONE, c)] }
        }
    }

    pub fn var(s: Sym) -> Self {
        Self::monomial(Mono::var(s, 1), BigInt::one())
    }

    pub fn var_pow(s: Sym, e: u16) -> Self {
        Self::monomial(Mono::var(s, e), BigInt::one())
    }

    pub fn monomial(m: Mono, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            IntPoly { terms: alloc::vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(mut t: Vec<(Mono, BigInt)>) -> Self {
        t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(t.len());
        let mut it = t.into_iter();
        if let Some((mut cm, mut cc)) = it.next() {
            for (m, c) in it {
                if m == cm {
                    cc += c;
                } else {
                    if !cc.is_zero() {
                        out.push((cm, cc));
                    }
                    cm = m;
                    cc = c;
                }
            }
            if !cc.is_zero() {
                out.push((cm, cc));
            }
        }
        IntPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, BigInt)> {
        self.terms
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff_sign(&self) -> Ordering {
        match self.terms.first() {
            None => Ordering::Equal,
            Some((_, c)) => {
                if c.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |m, (mo, _)| m | mo.support())
    }

    pub fn degree(&self, s: Sym) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(s)).max().unwrap_or(0)
    }

    pub fn min_degree(&self, s: Sym) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(s)).min().unwrap_or(0)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.meet(m)),
        }
    }

    /// Gcd of the integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly { terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect() }
    }

    /// Exact division of every coefficient by an integer.
    pub fn div_int(&self, c: &BigInt) -> Self {
        IntPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, d)| {
                    let (qt, r) = d.div_rem(c);
                    debug_assert!(r.is_zero());
                    (*m, qt)
                })
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        IntPoly { terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect() }
    }

    /// Divides by a monomial that divides every term.
    pub fn div_mono(&self, m: &Mono) -> Self {
        IntPoly { terms: self.terms.iter().map(|(a, c)| (m.quotient_of(a), c.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients with respect to `s`, indexed by degree.
    pub fn coeffs_in(&self, s: Sym) -> Vec<IntPoly> {
        let d = self.degree(s) as usize;
        let mut buckets: Vec<Vec<(Mono, BigInt)>> = alloc::vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(s) as usize;
            let mut m2 = *m;
            m2.0[s.index()] = 0;
            buckets[e].push((m2, c.clone()));
        }
        buckets.into_iter().map(IntPoly::from_terms).collect()
    }

    /// Reassembles `Σ c_i s^i`.
    pub fn from_coeffs_in(s: Sym, cs: &[IntPoly]) -> Self {
        let mut t = Vec::new();
        for (i, c) in cs.iter().enumerate() {
            let m = Mono::var(s, i as u16);
            for (a, b) in &c.terms {
                t.push((a.mul(&m), b.clone()));
            }
        }
        IntPoly::from_terms(t)
    }

    pub fn derivative(&self, s: Sym) -> Self {
        let mut t = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(s);
            if e > 0 {
                let mut m2 = *m;
                m2.0[s.index()] -= 1;
                t.push((m2, c * BigInt::from(e)));
            }
        }
        IntPoly::from_terms(t)
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let (dm, dc) = &d.terms[0];
            let mut t = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                let (qt, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                t.push((dm.quotient_of(m), qt));
            }
            return Some(IntPoly { terms: t });
        }
        let (dm, dc) = d.terms[0].clone();
        // Remainder kept as an ordered map for cheap leading-term access.
        let mut rem: BTreeMap<core::cmp::Reverse<Mono>, BigInt> =
            self.terms.iter().map(|(m, c)| (core::cmp::Reverse(*m), c.clone())).collect();
        let mut quot: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((core::cmp::Reverse(lm), lc)) = rem.pop_first() {
            if !dm.divides(&lm) {
                return None;
            }
            let (qc, r) = lc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm = dm.quotient_of(&lm);
            for (m, c) in d.terms.iter().skip(1) {
                let key = core::cmp::Reverse(m.mul(&qm));
                let prod = c * &qc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= prod;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -prod);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(IntPoly { terms: quot })
    }

    /// Substitutes `s := value` in a commutative ring.
    pub fn substitute<R: super::Ring>(&self, s: Sym, value: &R, embed: impl Fn(&IntPoly) -> R) -> R {
        let cs = self.coeffs_in(s);
        // Horner in `value`.
        let mut acc = R::zero();
        for c in cs.iter().rev() {
            acc = acc * value.clone() + embed(c);
        }
        acc
    }

    /// Evaluates with a caller-supplied value for each symbol.
    pub fn eval<R: super::Ring>(&self, val: impl Fn(Sym) -> R, from_int: impl Fn(&BigInt) -> R) -> R {
        let mut cache: BTreeMap<(usize, u16), R> = BTreeMap::new();
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = from_int(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache
                    .entry((i, e))
                    .or_insert_with(|| super::ring_pow(&val(Sym::from_index(i)), e as u32))
                    .clone();
                t = t * p;
            }
            acc = acc + t;
        }
        acc
    }

    /// Evaluates at an `f64`-like point via `to_f64` coefficients.
    pub fn coeff_f64(c: &BigInt) -> f64 {
        c.to_f64().unwrap_or(f64::NAN)
    }

    fn write_mono(out: &mut String, m: &Mono) -> bool {
        let mut first = true;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(Sym::from_index(i).name());
            if e != 1 {
                let _ = write!(out, "^{}", e);
            }
        }
        !first
    }

    /// Canonical text: descending lex order, no spaces.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let a = c.abs();
            if m.is_one() {
                let _ = write!(out, "{}", a);
            } else {
                if !a.is_one() {
                    let _ = write!(out, "{}*", a);
                }
                Self::write_mono(&mut out, m);
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn merge(a: &[(Mono, BigInt)], b: &[(Mono, BigInt)], negate_b: bool) -> Vec<(Mono, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    out
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        IntPoly { terms: merge(&self.terms, &o.terms, false) }
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        IntPoly { terms: merge(&self.terms, &o.terms, true) }
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            // Multiplying by a monomial preserves the order.
            return IntPoly { terms: big.terms.iter().map(|(a, d)| (a.mul(m), d * c)).collect() };
        }
        let mut acc: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.mul(mb);
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        IntPoly { terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $f:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $f(self, o: $t) -> $t { (&self).$f(&o) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(IntPoly, Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl super::Ring for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
