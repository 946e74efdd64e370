//! Algebraic laws of the exact arithmetic, checked on random inputs.

use num_bigint::BigInt;
use proptest::prelude::*;
use sov_core::exactalg::parse::{parse_laurent, parse_ratfunc};
use sov_core::exactalg::{gcd, IntPoly, LaurentPoly, Mono, RatFunc, Sym};

/// Integer polynomial in `q` and `l` with degrees below 3.
fn intpoly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-3i64..=3, 9).prop_map(|cs| {
        let terms = cs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (Mono::var(Sym::Q, (i / 3) as u16).mul(&Mono::var(Sym::Ell, (i % 3) as u16)), BigInt::from(c)))
            .collect();
        IntPoly::from_terms(terms)
    })
}

fn nonzero_intpoly() -> impl Strategy<Value = IntPoly> {
    intpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (intpoly(), nonzero_intpoly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

const TV: [Sym; 3] = [Sym::T1, Sym::T2, Sym::T3];

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-2i32..=2, -2i32..=2, -2i32..=2), ratfunc()), 0..4).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero_in(&TV), |acc, ((a, b, c), k)| {
            &acc + &LaurentPoly::monomial_in(&TV, &[(Sym::T1, a), (Sym::T2, b), (Sym::T3, c)], k)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rendering_parses_back(a in ratfunc()) {
        prop_assert_eq!(parse_ratfunc(&a.render()).unwrap(), a);
    }

    #[test]
    fn specialization_is_a_homomorphism(a in ratfunc(), b in ratfunc()) {
        let v = RatFunc::q_pow(3);
        let (sa, sb) = (a.specialize(Sym::Ell, &v), b.specialize(Sym::Ell, &v));
        if let (Ok(sa), Ok(sb)) = (sa, sb) {
            prop_assert_eq!((&a * &b).specialize(Sym::Ell, &v).unwrap(), &sa * &sb);
            prop_assert_eq!((&a + &b).specialize(Sym::Ell, &v).unwrap(), &sa + &sb);
        }
    }

    #[test]
    fn gcd_divides_and_contains_common_factor(a in nonzero_intpoly(), b in nonzero_intpoly(), c in nonzero_intpoly()) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = gcd(&ac, &bc);
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c).is_some() || g.div_exact(&(-&c)).is_some());
        prop_assert_eq!(gcd(&ac, &bc), gcd(&bc, &ac));
    }

    #[test]
    fn laurent_ring_axioms(f in laurent(), g in laurent(), h in laurent()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn qshifts_compose_and_multiply(f in laurent(), g in laurent(), m in prop::array::uniform3(-2i32..=2), n in prop::array::uniform3(-2i32..=2)) {
        let mn = [m[0] + n[0], m[1] + n[1], m[2] + n[2]];
        prop_assert_eq!(f.qshift(&m).qshift(&n), f.qshift(&mn));
        prop_assert_eq!((&f * &g).qshift(&m), &f.qshift(&m) * &g.qshift(&m));
    }

    #[test]
    fn laurent_rendering_parses_back(f in laurent()) {
        prop_assert_eq!(parse_laurent(&f.render(), &TV).unwrap(), f);
    }

    #[test]
    fn swapping_twice_is_identity(f in laurent()) {
        prop_assert_eq!(f.swap_vars(Sym::T1, Sym::T2).swap_vars(Sym::T1, Sym::T2), f.clone());
        let sym = &f + &f.swap_vars(Sym::T1, Sym::T2);
        prop_assert!(sym.is_symmetric_in(Sym::T1, Sym::T2));
    }
}

#[test]
fn cancellation_to_lowest_terms() {
    let a = parse_ratfunc("(q^2-l^2)/(q-l)").unwrap();
    assert_eq!(a, parse_ratfunc("q+l").unwrap());
    assert!(a.is_polynomial());
}
