//! The factorization `M P_λ = c_λ x^{|λ|} S_λ(y1) S_λ(y2)` together with
//! the structural checks around it: triangularity of the monomial basis in
//! the `p` basis and the round trip `M^{-1} M = 1`.

use super::coords::{t_to_coords, YVARS};
use super::pbasis::{apply_m, apply_minv, c_lambda, expand_in_p_basis, PBasisIndex};
use super::seppoly::sep_poly;
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFunc, Sym};
use crate::macdonald::{macdonald_poly, monomial_sym, Weight};
use alloc::format;
use alloc::vec::Vec;
use smallvec::smallvec;

/// Both sides of the factorization for one weight.
#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub weight: Weight,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

impl FactorizationReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// `lhs - rhs`, zero when the factorization holds.
    pub fn diff(&self) -> LaurentPoly {
        &self.lhs - &self.rhs
    }
}

fn require_three(l: &Weight) -> Result<()> {
    if l.n() != 3 {
        return Err(Error::InvalidWeight(format!("the separating operator needs n = 3, got {l}")));
    }
    Ok(())
}

/// `c_λ x^{|λ|} S_λ(y1) S_λ(y2)` in `(x, y1, y2)`.
pub fn separated_product(l: &Weight) -> Result<LaurentPoly> {
    require_three(l)?;
    let s = sep_poly(l)?;
    let s1 = s.to_laurent_in(Sym::Y1).with_vars(&YVARS)?;
    let s2 = s.to_laurent_in(Sym::Y2).with_vars(&YVARS)?;
    let x = LaurentPoly::from_term(&YVARS, smallvec![l.size(), 0, 0], c_lambda(l)?);
    Ok(&(&x * &s1) * &s2)
}

/// `M P_λ` assembled by linearity from `M m_μ`.
pub fn m_on_macdonald(l: &Weight) -> Result<LaurentPoly> {
    require_three(l)?;
    let p = macdonald_poly(l)?;
    let mut acc = LaurentPoly::zero_in(&YVARS);
    for (mu, kappa) in p.expansion.iter().filter(|(_, k)| !k.is_zero()) {
        acc = &acc + &apply_m(&monomial_sym(mu))?.scale(kappa);
    }
    Ok(acc)
}

pub fn verify_factorization(l: &Weight) -> Result<FactorizationReport> {
    Ok(FactorizationReport { weight: l.clone(), lhs: m_on_macdonald(l)?, rhs: separated_product(l)? })
}

/// Dominant `λ ∈ Z^3` with `lo <= λ1` and `λ3 <= hi`.
pub fn weights_in_box(lo: i32, hi: i32) -> Vec<Weight> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in a..=hi {
            for c in b..=hi {
                out.push(Weight::new(&[a, b, c]).expect("dominant by construction"));
            }
        }
    }
    out
}

/// The expected top index of `m_λ` in the `p` basis and its coefficient
/// `(-1)^{λ31} q^{-λ31(λ31-1)/2} ℓ^{λ31}`.
pub fn triangular_top(l: &Weight) -> (PBasisIndex, RatFunc) {
    let d = l.diff(3, 1) as i64;
    let sign = if d % 2 == 0 { 1 } else { -1 };
    let c = &RatFunc::from_int(sign) * &(&RatFunc::q_pow(-d * (d - 1) / 2) * &RatFunc::var_pow(Sym::Ell, d));
    (PBasisIndex::new(l.size(), l.part(1), d as u32), c)
}

/// Checks that the expansion of `m_λ` has the expected coefficient at the
/// top index and that every other index is strictly below it in
/// `(ν, then j, then k)` order, with `j = |λ|` throughout.
pub fn check_triangularity(l: &Weight) -> Result<bool> {
    require_three(l)?;
    let ex = expand_in_p_basis(&t_to_coords(&monomial_sym(l))?)?;
    let (top, c) = triangular_top(l);
    if ex.get(&top) != Some(&c) {
        return Ok(false);
    }
    let below = ex.keys().filter(|&&i| i != top).all(|i| i.j == top.j && (i.nu, i.k) < (top.nu, top.k));
    Ok(below)
}

/// `M^{-1} M f == f`.
pub fn round_trip(f: &LaurentPoly) -> Result<bool> {
    let back = apply_minv(&apply_m(f)?)?;
    Ok(back == f.with_vars(back.vars())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[i32]) -> Weight {
        Weight::new(p).unwrap()
    }

    #[test]
    fn factorization_small() {
        for p in [[0, 0, 0], [0, 0, 1], [0, 0, 2], [-1, 0, 1], [0, 1, 1]] {
            let r = verify_factorization(&w(&p)).unwrap();
            assert!(r.holds(), "{p:?}: {}", r.diff().render());
        }
    }

    #[test]
    fn triangular_small() {
        for p in [[0, 0, 0], [0, 1, 2], [-1, 0, 2], [0, 0, 3]] {
            assert!(check_triangularity(&w(&p)).unwrap(), "{p:?}");
        }
    }

    #[test]
    fn round_trip_m012() {
        assert!(round_trip(&monomial_sym(&w(&[0, 1, 2]))).unwrap());
    }

    #[test]
    fn minv_recovers_p002() {
        let l = w(&[0, 0, 2]);
        let back = apply_minv(&separated_product(&l).unwrap()).unwrap();
        assert_eq!(back, macdonald_poly(&l).unwrap().polynomial.with_vars(back.vars()).unwrap());
    }

    #[test]
    fn box_size() {
        assert_eq!(weights_in_box(-2, 3).len(), 56);
    }
}
