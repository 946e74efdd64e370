//! The bases `p_{jkν}`, `p̃_{jkν}` and the separating operator `M` with its
//! inverse, defined by their action on these bases.

use super::coords::{coords_to_t, coords_to_y, lmono3, t_to_coords, y_to_coords, TCOORDS, YCOORDS};
use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, LaurentPoly, RatFunc, Sym};
use num_integer::Integer;
use crate::macdonald::Weight;
use crate::qkit::qpoch;
use alloc::collections::BTreeMap;
use alloc::format;

/// Index `(j, k, ν)` of `p_{jkν}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PBasisIndex {
    pub j: i32,
    pub k: i32,
    pub nu: u32,
}

impl PBasisIndex {
    pub fn new(j: i32, k: i32, nu: u32) -> Self {
        PBasisIndex { j, k, nu }
    }
}

fn q() -> RatFunc {
    RatFunc::q_pow(1)
}

fn ell_pow(e: i64) -> RatFunc {
    RatFunc::var_pow(Sym::Ell, e)
}

/// `p_{jkν} = t3^{j-2k} e2^k prod_{i<ν} (1 - ℓ^{-1} q^i e1/t3 + ℓ^{-2} q^{2i} e2/t3^2)`
/// in `(e1, e2, t3)`.
pub fn p_basis_poly(idx: PBasisIndex) -> LaurentPoly {
    let mut out = LaurentPoly::from_term(&TCOORDS, lmono3(0, idx.k, idx.j - 2 * idx.k), RatFunc::one());
    for i in 0..idx.nu as i64 {
        let f = LaurentPoly::from_terms(
            &TCOORDS,
            [
                (lmono3(0, 0, 0), RatFunc::one()),
                (lmono3(1, 0, -1), -(&ell_pow(-1) * &RatFunc::q_pow(i))),
                (lmono3(0, 1, -2), &ell_pow(-2) * &RatFunc::q_pow(2 * i)),
            ],
        );
        out = &out * &f;
    }
    out
}

/// `p̃_{jkν} = x^j ẽ2^k prod_{i<ν} (1 - q^i ẽ1 + q^{2i} ẽ2)` in `(ẽ1, ẽ2, x)`.
pub fn ptilde_basis_poly(idx: PBasisIndex) -> LaurentPoly {
    let mut out = LaurentPoly::from_term(&YCOORDS, lmono3(0, idx.k, idx.j), RatFunc::one());
    for i in 0..idx.nu as i64 {
        let f = LaurentPoly::from_terms(
            &YCOORDS,
            [
                (lmono3(0, 0, 0), RatFunc::one()),
                (lmono3(1, 0, 0), -RatFunc::q_pow(i)),
                (lmono3(0, 1, 0), RatFunc::q_pow(2 * i)),
            ],
        );
        out = &out * &f;
    }
    out
}

/// Leading `e1^ν` coefficient of `p_{jkν}` divided by `e2^k t3^{j-2k-ν}`.
fn p_top(nu: u32) -> RatFunc {
    let nu = nu as i64;
    let sign = if nu % 2 == 0 { 1 } else { -1 };
    &RatFunc::from_int(sign) * &(&ell_pow(-nu) * &RatFunc::q_pow(nu * (nu - 1) / 2))
}

/// `p̃_{jkν}` analogue of [`p_top`].
fn ptilde_top(nu: u32) -> RatFunc {
    let nu = nu as i64;
    let sign = if nu % 2 == 0 { 1 } else { -1 };
    &RatFunc::from_int(sign) * &RatFunc::q_pow(nu * (nu - 1) / 2)
}

fn expand_generic(
    f: &LaurentPoly,
    coords: &[Sym; 3],
    top: fn(u32) -> RatFunc,
    basis: fn(PBasisIndex) -> LaurentPoly,
    index_of: fn(i32, i32, u32) -> i32,
) -> Result<BTreeMap<PBasisIndex, RatFunc>> {
    let mut rest = f.with_vars(coords)?;
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let nu = rest.degree_in(Sym::E1).map(|(_, hi)| hi).unwrap_or(0);
        if nu < 0 {
            return Err(Error::Domain(format!("negative e1 power in {}", rest.render())));
        }
        let nu = nu as u32;
        let lead = top(nu).inv()?;
        let mut sub = LaurentPoly::zero_in(coords);
        for (e, c) in rest.terms() {
            if e[0] != nu as i32 {
                continue;
            }
            let idx = PBasisIndex::new(index_of(e[2], e[1], nu), e[1], nu);
            let coef = c * &lead;
            sub = &sub + &basis(idx).scale(&coef);
            let slot = out.entry(idx).or_insert_with(RatFunc::zero);
            *slot = &*slot + &coef;
        }
        rest = &rest - &sub;
    }
    out.retain(|_, c: &mut RatFunc| !c.is_zero());
    Ok(out)
}

/// Expansion `f = sum c_{jkν} p_{jkν}` of `f(e1, e2, t3)` by peeling the
/// top power of `e1`.
pub fn expand_in_p_basis(f: &LaurentPoly) -> Result<BTreeMap<PBasisIndex, RatFunc>> {
    expand_generic(f, &TCOORDS, p_top, p_basis_poly, |m, k, nu| m + 2 * k + nu as i32)
}

/// Expansion over `p̃_{jkν}` of `g(ẽ1, ẽ2, x)`.
pub fn expand_in_ptilde_basis(g: &LaurentPoly) -> Result<BTreeMap<PBasisIndex, RatFunc>> {
    expand_generic(g, &YCOORDS, ptilde_top, ptilde_basis_poly, |m, _, _| m)
}

/// `M: p_{jkν} -> ℓ^{3k} (ℓ^{-2};q)_ν / (ℓ^{-3};q)_ν p̃_{jkν}`.
pub fn m_factor(idx: PBasisIndex) -> RatFunc {
    let nu = idx.nu as usize;
    let num = qpoch(&ell_pow(-2), &q(), nu);
    let den = qpoch(&ell_pow(-3), &q(), nu);
    &ell_pow(3 * idx.k as i64) * &(&num / &den)
}

/// Irreducible factors over ℤ of `ℓ^m - q^i` for `m` in `{2, 3}`.
fn binomial_factors(m: u16, i: u16) -> alloc::vec::Vec<IntPoly> {
    let g = i.gcd(&m);
    let a = IntPoly::var_pow(Sym::Ell, m / g);
    let b = IntPoly::var_pow(Sym::Q, i / g);
    let mut out = alloc::vec![&a - &b];
    match g {
        2 => out.push(&a + &b),
        3 => out.push(&(&(&a * &a) + &(&a * &b)) + &(&b * &b)),
        _ => {}
    }
    out
}

/// `sum_idx c_idx ℓ^{s k} (ℓ^{-a};q)_ν/(ℓ^{-b};q)_ν basis(idx)`. Every term is
/// taken over the common denominator `(ℓ^{-b};q)_{νmax}`, which is divided
/// out at the end by trial division against its known factors.
fn assemble(
    ex: &BTreeMap<PBasisIndex, RatFunc>,
    coords: &[Sym; 3],
    basis: fn(PBasisIndex) -> LaurentPoly,
    (a, b, s): (i64, u16, i64),
) -> (LaurentPoly, RatFunc, alloc::vec::Vec<IntPoly>) {
    let top = ex.keys().map(|i| i.nu).max().unwrap_or(0) as usize;
    let bi = b as i64;
    let mut acc = LaurentPoly::zero_in(coords);
    for (idx, c) in ex {
        let nu = idx.nu as usize;
        let f = &qpoch(&ell_pow(-a), &q(), nu) * &qpoch(&(&ell_pow(-bi) * &RatFunc::q_pow(nu as i64)), &q(), top - nu);
        acc = &acc + &basis(*idx).scale(&(&(c * &ell_pow(s * idx.k as i64)) * &f));
    }
    let factors = (0..top as u16).flat_map(|i| binomial_factors(b, i)).collect();
    (acc, ell_pow(bi * top as i64), factors)
}

fn finish(f: LaurentPoly, mono: &RatFunc, factors: &[IntPoly]) -> Result<LaurentPoly> {
    let terms = f
        .terms()
        .iter()
        .map(|(e, c)| Ok((e.clone(), (c * mono).div_irreducibles(factors)?)))
        .collect::<Result<alloc::vec::Vec<_>>>()?;
    Ok(LaurentPoly::from_terms(f.vars(), terms))
}

/// `M` on a Laurent polynomial in `(t1, t2, t3)` symmetric in `t1 <-> t2`;
/// the result is in `(x, y1, y2)`.
pub fn apply_m(f: &LaurentPoly) -> Result<LaurentPoly> {
    let ex = expand_in_p_basis(&t_to_coords(f)?)?;
    let (g, mono, factors) = assemble(&ex, &YCOORDS, ptilde_basis_poly, (2, 3, 3));
    finish(coords_to_y(&g)?, &mono, &factors)
}

/// `M^{-1}` on a Laurent polynomial in `(x, y1, y2)` symmetric in `y1 <-> y2`.
pub fn apply_minv(g: &LaurentPoly) -> Result<LaurentPoly> {
    let ex = expand_in_ptilde_basis(&y_to_coords(g)?)?;
    let (f, mono, factors) = assemble(&ex, &TCOORDS, p_basis_poly, (3, 2, -3));
    finish(coords_to_t(&f)?, &mono, &factors)
}

/// `c_λ` for `n = 3`.
pub fn c_lambda(l: &Weight) -> Result<RatFunc> {
    if l.n() != 3 {
        return Err(Error::InvalidWeight(format!("c_λ is defined for n = 3, got {l}")));
    }
    let p = |a: i64, k: i32| qpoch(&ell_pow(a), &q(), k as usize);
    let (l31, l32, l21) = (l.diff(3, 1), l.diff(3, 2), l.diff(2, 1));
    let num = &(&p(-2, l31) * &p(-2, l32)) * &p(-1, l21);
    let den = &(&p(-3, l31) * &p(-1, l32)) * &p(-2, l21);
    Ok(&ell_pow(4 * l.part(1) as i64 - l.part(2) as i64) * &(&num / &den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::{parse_laurent, parse_ratfunc};
    use crate::sov::coords::{TVARS, YVARS};

    #[test]
    fn basis_examples() {
        assert_eq!(p_basis_poly(PBasisIndex::new(0, 0, 0)), LaurentPoly::constant_in(&TCOORDS, RatFunc::one()));
        let p = coords_to_t(&p_basis_poly(PBasisIndex::new(2, 1, 0))).unwrap();
        assert_eq!(p, parse_laurent("t1*t2", &TVARS).unwrap());
        let pt = ptilde_basis_poly(PBasisIndex::new(0, 0, 1));
        assert_eq!(pt, parse_laurent("1-e1+e2", &YCOORDS).unwrap());
    }

    #[test]
    fn expansion_round_trip() {
        let idx = PBasisIndex::new(3, 1, 2);
        let ex = expand_in_p_basis(&p_basis_poly(idx)).unwrap();
        assert_eq!(ex.len(), 1);
        assert!(ex[&idx].is_one());
        let one = expand_in_p_basis(&LaurentPoly::constant_in(&TCOORDS, RatFunc::one())).unwrap();
        assert!(one[&PBasisIndex::new(0, 0, 0)].is_one());
    }

    #[test]
    fn m_examples() {
        let one = LaurentPoly::constant_in(&TVARS, RatFunc::one());
        assert_eq!(apply_m(&one).unwrap(), LaurentPoly::constant_in(&YVARS, RatFunc::one()));
        let p001 = coords_to_t(&p_basis_poly(PBasisIndex::new(0, 0, 1))).unwrap();
        let want = parse_laurent("(1-l^-2)/(1-l^-3)*(1-y1)*(1-y2)", &YVARS).unwrap();
        assert_eq!(apply_m(&p001).unwrap(), want);
    }

    #[test]
    fn c_examples() {
        assert!(c_lambda(&Weight::new(&[0, 0, 0]).unwrap()).unwrap().is_one());
        let c = c_lambda(&Weight::new(&[0, 1, 1]).unwrap()).unwrap();
        assert_eq!(c, parse_ratfunc("l/(l^2+l+1)").unwrap());
    }
}
