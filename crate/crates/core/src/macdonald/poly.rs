//! Macdonald polynomials by triangular back-substitution.

use super::hamiltonian::{eigenvalue, hamiltonian};
use super::weight::{enumerate_lower, monomial_sym, Weight};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFunc};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

#[derive(Clone, Debug)]
pub struct MacdonaldPoly {
    pub weight: Weight,
    /// `(μ, κ_{λμ})`, highest weight first.
    pub expansion: Vec<(Weight, RatFunc)>,
    pub polynomial: LaurentPoly,
}

impl MacdonaldPoly {
    /// `m[0,0,2] + (coef)*m[0,1,1] + ...`, dominance-highest first.
    pub fn render(&self) -> String {
        render_m_basis(&self.expansion)
    }

    pub fn kappa(&self, mu: &Weight) -> RatFunc {
        self.expansion.iter().find(|(w, _)| w == mu).map(|(_, c)| c.clone()).unwrap_or_default()
    }
}

pub fn render_m_basis(terms: &[(Weight, RatFunc)]) -> String {
    let mut out = String::new();
    for (w, c) in terms.iter().filter(|(_, c)| !c.is_zero()) {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if !c.is_one() {
            let _ = write!(out, "{}*", c.render_factor());
        }
        out.push_str("m[");
        for (i, p) in w.parts().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{p}");
        }
        out.push(']');
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Coefficients of a symmetric polynomial in the monomial basis over `basis`.
pub fn m_coefficients(f: &LaurentPoly, basis: &[Weight]) -> Vec<RatFunc> {
    basis.iter().map(|mu| f.coeff_at(mu.parts())).collect()
}

/// `H_i m_μ` in the monomial basis, checked to be symmetric.
pub fn hamiltonian_on_monomial(i: usize, mu: &Weight) -> Result<BTreeMap<Weight, RatFunc>> {
    let n = mu.n();
    let img = hamiltonian(i, n)?.apply(&monomial_sym(mu))?;
    let vars = mu.vars();
    for w in vars.windows(2) {
        if !img.is_symmetric_in(w[0], w[1]) {
            return Err(Error::NotSymmetric(format!("H_{i} m_{mu}")));
        }
    }
    let mut out = BTreeMap::new();
    for (e, c) in img.terms() {
        if e.windows(2).all(|w| w[0] <= w[1]) {
            out.insert(Weight::new(e)?, c.clone());
        }
    }
    Ok(out)
}

/// Solves `(H_1 - h_1(λ)) sum κ_μ m_μ = 0`, `κ_λ = 1`, then checks every
/// `H_i P_λ = h_i(λ) P_λ` in the monomial basis.
pub fn macdonald_poly(l: &Weight) -> Result<MacdonaldPoly> {
    let n = l.n();
    let basis = enumerate_lower(l);
    let mut images: Vec<Vec<BTreeMap<Weight, RatFunc>>> = Vec::with_capacity(n);
    for i in 1..=n {
        let row: Result<Vec<_>> = basis.iter().map(|mu| hamiltonian_on_monomial(i, mu)).collect();
        images.push(row?);
    }
    let h = eigenvalue(1, l);
    let h1 = &images[0];
    let mut kappa = alloc::vec![RatFunc::zero(); basis.len()];
    kappa[0] = RatFunc::one();
    for b in 1..basis.len() {
        let mut rhs = RatFunc::zero();
        for a in 0..b {
            if let Some(c) = h1[a].get(&basis[b]) {
                if !kappa[a].is_zero() {
                    rhs = &rhs - &(&kappa[a] * c);
                }
            }
        }
        let diag = &h1[b].get(&basis[b]).cloned().unwrap_or_default() - &h;
        if diag.is_zero() {
            return Err(Error::IdentityFailed(format!(
                "eigenvalue collision between {} and {}",
                basis[b], l
            )));
        }
        kappa[b] = &rhs / &diag;
    }
    for (i, imgs) in images.iter().enumerate() {
        let hi = eigenvalue(i + 1, l);
        let mut keys: Vec<&Weight> = imgs.iter().flat_map(|m| m.keys()).collect();
        keys.sort();
        keys.dedup();
        for nu in keys {
            let mut lhs = RatFunc::zero();
            for (k, m) in kappa.iter().zip(imgs) {
                if let Some(c) = m.get(nu) {
                    lhs = &lhs + &(k * c);
                }
            }
            let rhs = basis.iter().position(|w| w == nu).map(|p| &kappa[p] * &hi).unwrap_or_default();
            if lhs != rhs {
                return Err(Error::IdentityFailed(format!("H_{} eigen-relation fails for P_{l} at m_{nu}", i + 1)));
            }
        }
    }
    let mut poly = LaurentPoly::zero_in(&l.vars());
    for (k, mu) in kappa.iter().zip(&basis) {
        if !k.is_zero() {
            poly = &poly + &monomial_sym(mu).scale(k);
        }
    }
    Ok(MacdonaldPoly { weight: l.clone(), expansion: basis.into_iter().zip(kappa).collect(), polynomial: poly })
}
