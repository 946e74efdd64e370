//! Quantum Hamiltonians, dominance order and Macdonald polynomials.

mod hamiltonian;
mod operator;
mod poly;
mod weight;

pub use hamiltonian::{ell_for, ell_half_pow, eigenvalue, eigenvalues, hamiltonian, mu, subsets};
pub use operator::{ct_pairing, QShiftOperator};
pub use poly::{hamiltonian_on_monomial, m_coefficients, macdonald_poly, render_m_basis, MacdonaldPoly};
pub use weight::{dominance_leq, enumerate_lower, monomial_sym, tvars, Weight};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_ratfunc;

    #[test]
    fn p002_coefficient() {
        let p = macdonald_poly(&Weight::new(&[0, 0, 2]).unwrap()).unwrap();
        let k = p.kappa(&Weight::new(&[0, 1, 1]).unwrap());
        assert_eq!(k, parse_ratfunc("(1-l)*(1+q)/(q-l)").unwrap());
        assert_eq!(p.render(), "m[0,0,2] + ((-q*l+q-l+1)/(q-l))*m[0,1,1]");
    }

    #[test]
    fn p111_is_monomial() {
        let p = macdonald_poly(&Weight::new(&[1, 1, 1]).unwrap()).unwrap();
        assert_eq!(p.render(), "m[1,1,1]");
    }

    #[test]
    fn non_symmetric_input_keeps_poles() {
        let h = hamiltonian(1, 3).unwrap();
        let t1 = crate::exactalg::LaurentPoly::var_in(&tvars(3), crate::exactalg::Sym::T1);
        assert!(h.apply(&t1).is_err());
    }
}
