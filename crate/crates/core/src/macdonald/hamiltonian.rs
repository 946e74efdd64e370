//! Macdonald–Ruijsenaars Hamiltonians and their eigenvalues.

use super::operator::QShiftOperator;
use super::weight::{tvars, Weight};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentFrac, LaurentPoly, RatFunc, Sym};
use alloc::format;
use alloc::vec::Vec;

/// `ℓ^{e/2}`: a power of `l` for odd `n`, of `L = ℓ^{1/2}` for even `n`.
///
/// For odd `n` every exponent reaching this function is even.
pub fn ell_half_pow(n: usize, e: i64) -> RatFunc {
    if n.is_multiple_of(2) {
        RatFunc::var_pow(Sym::HalfEll, e)
    } else {
        assert!(e % 2 == 0, "odd power of ℓ^(1/2) for odd n");
        RatFunc::var_pow(Sym::Ell, e / 2)
    }
}

/// `ℓ` written in the coefficient ring used for `n` particles.
pub fn ell_for(n: usize) -> RatFunc {
    ell_half_pow(n, 2)
}

/// All `i`-element subsets of `0..n`, in lexicographic order.
pub fn subsets(n: usize, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(i);
    fn rec(start: usize, n: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for j in start..n {
            cur.push(j);
            rec(j + 1, n, i, cur, out);
            cur.pop();
        }
    }
    rec(0, n, i, &mut cur, &mut out);
    out
}

/// `H_i = sum_{|J|=i} prod_{j∈J, k∉J} v_jk prod_{j∈J} T_j` with
/// `v_jk = (ℓ^{-1/2} t_j - ℓ^{1/2} t_k)/(t_j - t_k)`.
pub fn hamiltonian(i: usize, n: usize) -> Result<QShiftOperator> {
    if i == 0 || i > n || n < 2 {
        return Err(Error::Domain(format!("hamiltonian index {i} out of range for n = {n}")));
    }
    let vars = tvars(n);
    let ell = ell_for(n);
    let mut op = QShiftOperator::zero(&vars);
    for sub in subsets(n, i) {
        let mut num = LaurentPoly::constant_in(&vars, ell_half_pow(n, -((i * (n - i)) as i64)));
        let mut dens = Vec::new();
        for &j in &sub {
            for k in (0..n).filter(|k| !sub.contains(k)) {
                let tj = LaurentPoly::var_in(&vars, vars[j]);
                let tk = LaurentPoly::var_in(&vars, vars[k]);
                num = &num * &(&tj - &tk.scale(&ell));
                dens.push(&tj - &tk);
            }
        }
        let mut m = alloc::vec![0i32; n];
        for &j in &sub {
            m[j] = 1;
        }
        op.add_term(LaurentFrac::new(num, &dens)?, &m);
    }
    Ok(op)
}

/// `μ_j = q^{λ_j} ℓ^{(n+1)/2 - j}`.
pub fn mu(l: &Weight) -> Vec<RatFunc> {
    let n = l.n();
    (1..=n)
        .map(|j| &RatFunc::q_pow(l.part(j) as i64) * &ell_half_pow(n, n as i64 + 1 - 2 * j as i64))
        .collect()
}

/// `h_k(λ) = e_k(μ_1, ..., μ_n)`; `h_0 = 1`.
pub fn eigenvalue(k: usize, l: &Weight) -> RatFunc {
    let m = mu(l);
    // e_k by the usual recurrence on prefixes
    let mut e = alloc::vec![RatFunc::zero(); m.len() + 1];
    e[0] = RatFunc::one();
    for x in &m {
        for j in (1..e.len()).rev() {
            e[j] = &e[j] + &(&e[j - 1] * x);
        }
    }
    e.get(k).cloned().unwrap_or_else(RatFunc::zero)
}

/// `(h_0, h_1, ..., h_n)`.
pub fn eigenvalues(l: &Weight) -> Vec<RatFunc> {
    (0..=l.n()).map(|k| eigenvalue(k, l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_ratfunc;

    #[test]
    fn shapes() {
        let h3 = hamiltonian(3, 3).unwrap();
        assert_eq!(h3, QShiftOperator::shift(&tvars(3), &[1, 1, 1]));
        assert_eq!(hamiltonian(1, 3).unwrap().len(), 3);
        assert_eq!(hamiltonian(1, 2).unwrap().len(), 2);
        assert!(hamiltonian(4, 3).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let z = Weight::new(&[0, 0, 0]).unwrap();
        assert_eq!(eigenvalue(1, &z), parse_ratfunc("l+1+l^-1").unwrap());
        let w = Weight::new(&[0, 1, 1]).unwrap();
        assert_eq!(eigenvalue(2, &w), parse_ratfunc("l*q+q+l^-1*q^2").unwrap());
        let v = Weight::new(&[-1, 2, 4]).unwrap();
        assert_eq!(eigenvalue(3, &v), RatFunc::q_pow(5));
    }
}
