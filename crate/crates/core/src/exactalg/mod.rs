//! Exact arithmetic: integer polynomials, their fraction field, Laurent
//! polynomials over it, and fractions with factored denominators.

mod gcd;
mod intpoly;
mod laurent;
mod lfrac;
pub mod parse;
mod ratfunc;
mod sym;

pub use gcd::{gcd, gcd_many};
pub use intpoly::{IntPoly, Mono};
pub use laurent::{LMono, LaurentPoly, VarSet};
pub use lfrac::LaurentFrac;
pub use ratfunc::RatFunc;
pub use sym::{tvar, Sym, NSYM};

use core::ops::{Add, Mul, Neg, Sub};

/// Commutative ring with unit, enough for generic Pochhammer and series code.
pub trait Ring:
    Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
}

/// Ring in which nonzero elements are invertible.
pub trait Field: Ring {
    fn try_inv(&self) -> Option<Self>;
}

pub fn ring_pow<R: Ring>(b: &R, mut e: u32) -> R {
    let mut base = b.clone();
    let mut acc = R::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Ring for num_complex::Complex64 {
    fn zero() -> Self {
        num_complex::Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        num_complex::Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

/// Shorthand constructors used throughout the crate.
pub mod sym_consts {
    use super::{RatFunc, Sym};

    pub fn q() -> RatFunc {
        RatFunc::var(Sym::Q)
    }

    pub fn ell() -> RatFunc {
        RatFunc::var(Sym::Ell)
    }

    pub fn int(c: i64) -> RatFunc {
        RatFunc::from_int(c)
    }
}

#[cfg(test)]
mod tests;
