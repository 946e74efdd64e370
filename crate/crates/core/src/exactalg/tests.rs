use super::parse::{parse_laurent, parse_ratfunc};
use super::*;
use alloc::collections::BTreeMap;
use num_complex::Complex64;

fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

const T3: [Sym; 3] = [Sym::T1, Sym::T2, Sym::T3];

#[test]
fn common_denominator_sum() {
    let a = rf("q/(1-l)");
    let b = rf("q*l/(1-l)");
    assert_eq!(&a + &b, rf("q*(1+l)/(1-l)"));
    assert_eq!((&a + &b).render(), "(-q*l-q)/(l-1)");
}

#[test]
fn cancellation_and_identity() {
    assert_eq!(rf("(1-l^2)/(1-l)"), rf("1+l"));
    assert!(rf("(1-l^2)/(1-l)").eq_cross(&rf("1+l")));
    assert_eq!(rf("(1-l)/(1-l)"), RatFunc::one());
}

#[test]
fn denominator_sign_is_canonical() {
    let r = rf("1/(l-q)");
    assert_eq!(r.render(), "(-1)/(q-l)");
    assert!(r.den().leading().unwrap().1 > num_bigint::BigInt::from(0));
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(RatFunc::one().checked_div(&RatFunc::zero()).is_err());
    assert!(RatFunc::new(IntPoly::one(), IntPoly::zero()).is_err());
}

#[test]
fn specialize_examples() {
    let f = rf("1/(1-l^-3*q)");
    assert_eq!(f.specialize(Sym::Ell, &RatFunc::q_pow(-1)).unwrap(), rf("1/(1-q^4)"));
    let g = rf("l^2/(l+1)");
    assert_eq!(g.specialize(Sym::Ell, &RatFunc::q_pow(-2)).unwrap(), rf("q^-4/(q^-2+1)"));
    let h = rf("1/(1-l)");
    let e = h.specialize(Sym::Ell, &RatFunc::one()).unwrap_err();
    assert!(matches!(e, crate::Error::VanishingDenominator(ref s) if s.contains('l')));
}

#[test]
fn eval_examples() {
    let mut pt = BTreeMap::new();
    pt.insert(Sym::Ell, Complex64::new(2.0, 0.0));
    assert_eq!(rf("1+l").eval_complex(&pt).unwrap(), Complex64::new(3.0, 0.0));
    let mut pt = BTreeMap::new();
    pt.insert(Sym::Q, Complex64::new(0.5, 0.0));
    assert!((rf("q/(1-q)").eval_complex(&pt).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    let mut pt = BTreeMap::new();
    pt.insert(Sym::T1, Complex64::new(0.0, 1.0));
    pt.insert(Sym::T2, Complex64::new(0.0, -1.0));
    let p = parse_laurent("t1+t2", &T3).unwrap();
    assert_eq!(p.eval_complex(&pt).unwrap(), Complex64::new(0.0, 0.0));
    let mut pt = BTreeMap::new();
    pt.insert(Sym::Q, Complex64::new(1.0, 0.0));
    assert!(rf("1/(1-q)").eval_complex(&pt).is_err());
}

#[test]
fn laurent_examples() {
    let a = parse_laurent("t1+t2", &T3).unwrap();
    let b = parse_laurent("t1-t2", &T3).unwrap();
    assert_eq!(&a * &b, parse_laurent("t1^2-t2^2", &T3).unwrap());
    let s = parse_laurent("t1+t2+t3", &T3).unwrap();
    assert_eq!(s.coeff(&[(Sym::T1, 1)]), RatFunc::one());
    let u = parse_laurent("t1*t2^-1", &T3).unwrap();
    let v = parse_laurent("t2*t1^-1", &T3).unwrap();
    assert_eq!(&u * &v, LaurentPoly::constant_in(&T3, RatFunc::one()));
}

#[test]
fn laurent_alignment_by_name() {
    let a = parse_laurent("t1", &[Sym::T1]).unwrap();
    let b = parse_laurent("t2", &[Sym::T2]).unwrap();
    let c = parse_laurent("t1+t2", &[Sym::T2, Sym::T1]).unwrap();
    assert_eq!(&a + &b, c);
}

#[test]
fn qshift_examples() {
    let f = parse_laurent("t1*t2", &[Sym::T1, Sym::T2]).unwrap();
    assert_eq!(f.qshift(&[1, 0]), f.scale(&RatFunc::var(Sym::Q)));
    let g = parse_laurent("t1*t2*t3", &T3).unwrap();
    assert_eq!(g.qshift(&[1, 1, 1]), g.scale(&RatFunc::q_pow(3)));
    let one = LaurentPoly::constant_in(&T3, RatFunc::one());
    assert_eq!(one.qshift(&[3, -2, 5]), one);
}

#[test]
fn exact_division() {
    let f = parse_laurent("t1^3-t2^3", &T3).unwrap();
    let d = parse_laurent("t1-t2", &T3).unwrap();
    assert_eq!(f.div_exact(&d).unwrap(), parse_laurent("t1^2+t1*t2+t2^2", &T3).unwrap());
    let g = parse_laurent("t1^-1-t2^-1", &T3).unwrap();
    assert_eq!(g.div_exact(&d).unwrap(), parse_laurent("-t1^-1*t2^-1", &T3).unwrap());
    assert!(parse_laurent("t1", &T3).unwrap().div_exact(&d).is_none());
}

#[test]
fn gcd_examples() {
    let a = parse_ratfunc("(1-l)*(q-l)^2*(1+q*l)").unwrap();
    let b = parse_ratfunc("(q-l)*(1+q*l)^2*(3+l)").unwrap();
    let g = gcd(a.num(), b.num());
    assert_eq!(RatFunc::from_poly(g), parse_ratfunc("(q-l)*(1+q*l)").unwrap());
    let c = parse_ratfunc("6*q^2*l").unwrap();
    let d = parse_ratfunc("4*q*l^3").unwrap();
    assert_eq!(gcd(c.num(), d.num()).render(), "2*q*l");
}

#[test]
fn lfrac_clears_and_detects_poles() {
    let d = parse_laurent("t1-t2", &T3).unwrap();
    let n = parse_laurent("t1^2-t2^2", &T3).unwrap();
    let f = LaurentFrac::new(n, core::slice::from_ref(&d)).unwrap();
    assert_eq!(f.clear().unwrap(), parse_laurent("t1+t2", &T3).unwrap());
    let g = LaurentFrac::new(parse_laurent("t1", &T3).unwrap(), &[d]).unwrap();
    assert!(g.clear().is_err());
}

#[test]
fn parser_rejects_garbage() {
    assert!(parse_ratfunc("q+").is_err());
    assert!(parse_ratfunc("(q").is_err());
    assert!(parse_ratfunc("foo").is_err());
    assert!(parse_laurent("1/(t1+t2)", &T3).is_err());
}

#[test]
fn rendering_is_canonical() {
    assert_eq!(rf("l^2+l").render(), "l^2+l");
    assert_eq!(rf("l*q^2").render(), "q^2*l");
    assert_eq!(rf("(1-l)*(1+q)/(q-l)").render(), "(-q*l+q-l+1)/(q-l)");
}
