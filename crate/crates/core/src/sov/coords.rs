//! Integer-power coordinates on polynomials symmetric in two variables.
//!
//! A Laurent polynomial in `(a, b, c)` symmetric under `a <-> b` is written
//! as a polynomial in `e1 = a + b` with Laurent coefficients in `e2 = ab`
//! and `c`. On the `t` side `(a, b, c) = (t1, t2, t3)`, on the `y` side
//! `(y1, y2, x)`.

use crate::error::{Error, Result};
use crate::exactalg::{LMono, LaurentPoly, RatFunc, Sym};
use alloc::format;
use smallvec::smallvec;

/// Variables of the `t` side.
pub const TVARS: [Sym; 3] = [Sym::T1, Sym::T2, Sym::T3];
/// Variables of the `y` side, in output order.
pub const YVARS: [Sym; 3] = [Sym::X, Sym::Y1, Sym::Y2];
/// Coordinates `(e1, e2, t3)`.
pub const TCOORDS: [Sym; 3] = [Sym::E1, Sym::E2, Sym::T3];
/// Coordinates `(ẽ1, ẽ2, x)`.
pub const YCOORDS: [Sym; 3] = [Sym::E1, Sym::E2, Sym::X];

/// Rewrites `f(a, b, c)`, symmetric in `a <-> b`, in `(e1, e2, c)`.
pub fn to_sym_coords_in(f: &LaurentPoly, a: Sym, b: Sym, c: Sym) -> Result<LaurentPoly> {
    let vars = [a, b, c];
    let f = f.with_vars(&vars)?;
    if !f.is_symmetric_in(a, b) {
        return Err(Error::NotSymmetric(format!("{} is not symmetric in {a}, {b}", f.render())));
    }
    let coords = [Sym::E1, Sym::E2, c];
    let e1 = LaurentPoly::from_terms(&vars, [(smallvec![1, 0, 0], RatFunc::one()), (smallvec![0, 1, 0], RatFunc::one())]);
    let mut rest = f;
    let mut out = LaurentPoly::zero_in(&coords);
    // peel the term with the largest a-exponent: a^i b^j c^k (i >= j) is the
    // top of e1^{i-j} e2^j c^k
    while let Some((e, coef)) = rest.leading().map(|(e, c)| (e.clone(), c.clone())) {
        let (i, j, k) = (e[0], e[1], e[2]);
        if i < j {
            return Err(Error::NotSymmetric(format!("unexpected leading exponent {e:?}")));
        }
        out.add_term(smallvec![i - j, j, k], coef.clone());
        let base = LaurentPoly::from_term(&vars, smallvec![j, j, k], coef);
        let p = e1.pow(i - j)?;
        rest = &rest - &(&base * &p);
    }
    Ok(out)
}

/// Inverse of [`to_sym_coords_in`].
pub fn from_sym_coords_in(g: &LaurentPoly, a: Sym, b: Sym, c: Sym) -> Result<LaurentPoly> {
    let vars = [a, b, c];
    let coords = [Sym::E1, Sym::E2, c];
    let g = g.with_vars(&coords)?;
    let e1 = LaurentPoly::from_terms(&vars, [(smallvec![1, 0, 0], RatFunc::one()), (smallvec![0, 1, 0], RatFunc::one())]);
    let e2 = LaurentPoly::from_term(&vars, smallvec![1, 1, 0], RatFunc::one());
    let cv = LaurentPoly::var_in(&vars, c);
    g.subst(&vars, &[e1, e2, cv])
}

pub fn t_to_coords(f: &LaurentPoly) -> Result<LaurentPoly> {
    to_sym_coords_in(f, Sym::T1, Sym::T2, Sym::T3)
}

pub fn coords_to_t(g: &LaurentPoly) -> Result<LaurentPoly> {
    from_sym_coords_in(g, Sym::T1, Sym::T2, Sym::T3)?.with_vars(&TVARS)
}

pub fn y_to_coords(f: &LaurentPoly) -> Result<LaurentPoly> {
    to_sym_coords_in(f, Sym::Y1, Sym::Y2, Sym::X)
}

pub fn coords_to_y(g: &LaurentPoly) -> Result<LaurentPoly> {
    from_sym_coords_in(g, Sym::Y1, Sym::Y2, Sym::X)?.with_vars(&YVARS)
}

pub(crate) fn lmono3(a: i32, b: i32, c: i32) -> LMono {
    smallvec![a, b, c]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_laurent;

    #[test]
    fn examples() {
        let f = parse_laurent("t1+t2", &TVARS).unwrap();
        assert_eq!(t_to_coords(&f).unwrap(), parse_laurent("e1", &TCOORDS).unwrap());
        let f = parse_laurent("t1*t2", &TVARS).unwrap();
        assert_eq!(t_to_coords(&f).unwrap(), parse_laurent("e2", &TCOORDS).unwrap());
        let f = parse_laurent("t1^2+t2^2", &TVARS).unwrap();
        assert_eq!(t_to_coords(&f).unwrap(), parse_laurent("e1^2-2*e2", &TCOORDS).unwrap());
    }

    #[test]
    fn laurent_round_trip() {
        let f = parse_laurent("t1^-2*t3 + t2^-2*t3 + q*t1*t2^-1 + q*t2*t1^-1 + l*t3^-3", &TVARS).unwrap();
        let g = t_to_coords(&f).unwrap();
        assert_eq!(coords_to_t(&g).unwrap(), f);
    }

    #[test]
    fn asymmetric_is_rejected() {
        let f = parse_laurent("t1+t3", &TVARS).unwrap();
        assert!(matches!(t_to_coords(&f), Err(Error::NotSymmetric(_))));
    }
}
