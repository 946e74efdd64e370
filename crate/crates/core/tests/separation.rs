//! Properties of the separating operator and the separated polynomials on
//! randomly drawn weights and symmetric polynomials.

use proptest::prelude::*;
use sov_core::exactalg::{LaurentPoly, RatFunc, Sym};
use sov_core::macdonald::{eigenvalue, hamiltonian, macdonald_poly, monomial_sym, Weight};
use sov_core::sov::{
    apply_m, apply_minv, c_lambda, reconstruct_sep_by_recursion, round_trip, sep_poly, sep_poly_via_series,
    verify_factorization, SepOperator,
};

fn weight(lo: i32, hi: i32) -> impl Strategy<Value = Weight> {
    prop::array::uniform3(lo..=hi).prop_map(|mut p| {
        p.sort();
        Weight::new(&p).unwrap()
    })
}

fn small_coeff() -> impl Strategy<Value = RatFunc> {
    (-3i64..=3, 0i64..=2).prop_map(|(c, e)| &RatFunc::from_int(c) * &RatFunc::var_pow(Sym::Ell, e))
}

/// `sum c_μ m_μ` over a few weights in `[-1, 2]`.
fn symmetric_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((weight(-1, 2), small_coeff()), 1..3).prop_map(|ts| {
        let mut acc = monomial_sym(&ts[0].0).scale(&ts[0].1);
        for (w, c) in &ts[1..] {
            acc = &acc + &monomial_sym(w).scale(c);
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn factorization_on_random_weights(l in weight(-2, 3)) {
        let r = verify_factorization(&l).unwrap();
        prop_assert!(r.holds(), "{}", l);
    }

    #[test]
    fn three_routes_to_the_separated_polynomial(l in weight(-2, 3)) {
        let s = sep_poly(&l).unwrap();
        prop_assert_eq!(&sep_poly_via_series(&l).unwrap(), &s);
        prop_assert_eq!(&reconstruct_sep_by_recursion(&l).unwrap(), &s);
        prop_assert!(SepOperator::for_weight(&l).unwrap().apply(&s.to_laurent_in(Sym::Y)).unwrap().is_zero());
    }

    #[test]
    fn separated_polynomial_is_normalized(l in weight(-2, 3)) {
        let s = sep_poly(&l).unwrap();
        prop_assert!(s.coeff(l.part(1)).is_one());
        prop_assert!(s.chi.keys().all(|&k| k >= l.part(1) && k <= l.part(3)));
    }

    #[test]
    fn first_hamiltonian_eigenvalue(l in weight(-1, 2)) {
        let p = macdonald_poly(&l).unwrap().polynomial;
        let h = hamiltonian(1, 3).unwrap();
        prop_assert_eq!(h.apply(&p).unwrap(), p.scale(&eigenvalue(1, &l)));
    }

    #[test]
    fn m_is_invertible_on_symmetric_polynomials(f in symmetric_poly()) {
        prop_assert!(round_trip(&f).unwrap());
    }

    #[test]
    fn m_is_linear(f in symmetric_poly(), g in symmetric_poly(), a in small_coeff()) {
        let lhs = apply_m(&(&f.scale(&a) + &g)).unwrap();
        let rhs = &apply_m(&f).unwrap().scale(&a) + &apply_m(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shifting_the_weight_multiplies_the_image(l in weight(-2, 2)) {
        // P_{λ+1} = t1 t2 t3 P_λ and M(t1 t2 t3 f) = ℓ^3 x^3 y1 y2 M(f)
        let up = l.shifted(1);
        let m = apply_m(&macdonald_poly(&l).unwrap().polynomial).unwrap();
        let m_up = apply_m(&macdonald_poly(&up).unwrap().polynomial).unwrap();
        let ell3 = RatFunc::var_pow(Sym::Ell, 3);
        let z = LaurentPoly::monomial_in(m.vars(), &[(Sym::X, 3), (Sym::Y1, 1), (Sym::Y2, 1)], ell3.clone());
        prop_assert_eq!(&m * &z, m_up);
        prop_assert_eq!(&c_lambda(&l).unwrap() * &ell3, c_lambda(&up).unwrap());
    }
}

#[test]
fn inverse_of_the_constant_is_the_constant() {
    let one = LaurentPoly::constant_in(&sov_core::sov::YVARS, RatFunc::one());
    let back = apply_minv(&one).unwrap();
    assert_eq!(back.as_constant(), Some(RatFunc::one()));
}
