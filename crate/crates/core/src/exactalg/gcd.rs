//! Multivariate gcd over ℤ: content/primitive-part recursion with a
//! subresultant remainder sequence in the main variable.

use super::intpoly::IntPoly;
use super::sym::Sym;
use alloc::vec::Vec;
use num_integer::Integer;
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Gcd normalised to a positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let ca = a.content();
    let cb = b.content();
    let cg = ca.gcd(&cb);
    if a.is_constant() || b.is_constant() {
        return IntPoly::from_bigint(cg);
    }
    // Monomial part.
    let ma = a.min_mono();
    let mb = b.min_mono();
    let mg = ma.meet(&mb);
    let pa = a.div_int(&ca).div_mono(&ma);
    let pb = b.div_int(&cb).div_mono(&mb);
    let core = if pa.is_constant() || pb.is_constant() {
        IntPoly::one()
    } else {
        heuristic_gcd(&pa, &pb).unwrap_or_else(|| gcd_prim(&pa, &pb))
    };
    normalize_sign(core.mul_mono(&mg).scale(&cg))
}

/// Gcd of many polynomials.
pub fn gcd_many<'a>(it: impl IntoIterator<Item = &'a IntPoly>) -> IntPoly {
    let mut g = IntPoly::zero();
    for p in it {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    if p.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        -p
    } else {
        p
    }
}

fn vars_of(p: &IntPoly) -> u32 {
    p.support()
}

fn first_var(mask: u32) -> Option<Sym> {
    // Highest-index symbol is the main variable.
    if mask == 0 {
        None
    } else {
        Some(Sym::from_index(31 - mask.leading_zeros() as usize))
    }
}

/// Content with respect to `v`: gcd of the coefficients in `v`.
fn content_in(p: &IntPoly, v: Sym) -> IntPoly {
    let cs = p.coeffs_in(v);
    let mut g = IntPoly::zero();
    for c in cs.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_constant() {
            return IntPoly::one();
        }
    }
    g
}

/// Both inputs primitive over ℤ, free of monomial content, non-constant.
fn gcd_prim(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let va = vars_of(a);
    let vb = vars_of(b);
    // A variable present in only one argument cannot occur in the gcd.
    let only_a = va & !vb;
    if let Some(v) = first_var(only_a) {
        let c = content_in(a, v);
        return if c.is_constant() { IntPoly::one() } else { gcd(&c, b) };
    }
    let only_b = vb & !va;
    if let Some(v) = first_var(only_b) {
        let c = content_in(b, v);
        return if c.is_constant() { IntPoly::one() } else { gcd(a, &c) };
    }
    let v = match first_var(va & vb) {
        Some(v) => v,
        None => return IntPoly::one(),
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = if ca.is_constant() { a.clone() } else { a.div_exact(&ca).expect("content divides") };
    let pb = if cb.is_constant() { b.clone() } else { b.div_exact(&cb).expect("content divides") };
    let gc = if ca.is_constant() || cb.is_constant() { IntPoly::one() } else { gcd(&ca, &cb) };
    let gp = prs_gcd(&pa, &pb, v);
    &gc * &gp
}

fn max_norm(p: &IntPoly) -> BigInt {
    p.terms().iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
}

/// `p` with `v = xi`.
fn eval_at(p: &IntPoly, v: Sym, xi: &BigInt) -> IntPoly {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let e = m.exp(v);
            let mut rest = *m;
            rest.0[v.index()] = 0;
            (rest, c * num_traits::pow(xi.clone(), e as usize))
        })
        .collect();
    IntPoly::from_terms(terms)
}

/// Symmetric residue of `c` modulo `xi`.
fn smod(c: &BigInt, xi: &BigInt) -> BigInt {
    let r = c.mod_floor(xi);
    if &r * 2 > *xi {
        r - xi
    } else {
        r
    }
}

/// Reads `gamma` as the value at `v = xi` of a polynomial with coefficients
/// smaller than `xi/2` and recovers that polynomial.
fn xi_adic(gamma: &IntPoly, v: Sym, xi: &BigInt) -> IntPoly {
    let mut rest = gamma.clone();
    let mut out = Vec::new();
    let mut e: u16 = 0;
    while !rest.is_zero() {
        let digit: Vec<_> = rest.terms().iter().map(|(m, c)| (*m, smod(c, xi))).collect();
        let digit = IntPoly::from_terms(digit);
        for (m, c) in digit.terms() {
            let mut m = *m;
            m.0[v.index()] = e;
            out.push((m, c.clone()));
        }
        rest = (&rest - &digit).div_int(xi);
        e += 1;
        if e > 4096 {
            break;
        }
    }
    IntPoly::from_terms(out)
}

/// Heuristic gcd of primitive polynomials by evaluation at a large integer
/// and `ξ`-adic reconstruction. A returned value is verified by division;
/// `None` means the caller has to fall back on the remainder sequence.
fn heuristic_gcd(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let v = first_var(vars_of(a) | vars_of(b))?;
    let mut xi = max_norm(a).min(max_norm(b)) * 2 + 29;
    for _ in 0..6 {
        let ea = eval_at(a, v, &xi);
        let eb = eval_at(b, v, &xi);
        if !ea.is_zero() && !eb.is_zero() {
            let gamma = gcd(&ea, &eb);
            let g = xi_adic(&gamma, v, &xi);
            if !g.is_zero() {
                let g = g.div_int(&g.content());
                if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                    return Some(normalize_sign(g));
                }
            }
        }
        xi = &xi * 73794 / 27011 + BigInt::one();
    }
    None
}

type UPoly = Vec<IntPoly>;

fn udeg(p: &UPoly) -> usize {
    p.len() - 1
}

fn trim(mut p: UPoly) -> UPoly {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    if p.is_empty() {
        p.push(IntPoly::zero());
    }
    p
}

fn uzero(p: &UPoly) -> bool {
    p.len() == 1 && p[0].is_zero()
}

/// Pseudo-remainder `lc(b)^{deg a - deg b + 1} a mod b`.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = udeg(b);
    let lb = b[db].clone();
    let mut r = a.clone();
    let delta = udeg(a) + 1 - db;
    let mut steps = 0usize;
    while !uzero(&r) && udeg(&r) >= db {
        let dr = udeg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut nr: UPoly = r.iter().map(|c| c * &lb).collect();
        for (i, c) in b.iter().enumerate() {
            nr[i + shift] = &nr[i + shift] - &(c * &lr);
        }
        r = trim(nr);
        steps += 1;
    }
    if steps < delta {
        let f = lb.pow((delta - steps) as u32);
        r = r.iter().map(|c| c * &f).collect();
    }
    r
}

fn prim_part(p: &UPoly) -> UPoly {
    let g = gcd_many(p.iter().filter(|c| !c.is_zero()));
    if g.is_one() || g.is_zero() {
        return p.clone();
    }
    p.iter().map(|c| c.div_exact(&g).expect("content divides")).collect()
}

fn prs_gcd(a: &IntPoly, b: &IntPoly, v: Sym) -> IntPoly {
    let mut pa: UPoly = trim(a.coeffs_in(v));
    let mut pb: UPoly = trim(b.coeffs_in(v));
    if udeg(&pa) < udeg(&pb) {
        core::mem::swap(&mut pa, &mut pb);
    }
    let mut g = IntPoly::one();
    let mut h = IntPoly::one();
    loop {
        let d = udeg(&pa) - udeg(&pb);
        let r = prem(&pa, &pb);
        if uzero(&r) {
            let res = prim_part(&pb);
            return normalize_sign(IntPoly::from_coeffs_in(v, &res));
        }
        if udeg(&r) == 0 {
            return IntPoly::one();
        }
        let div = &g * &h.pow(d as u32);
        let nb: UPoly = r.iter().map(|c| c.div_exact(&div).expect("subresultant division")).collect();
        pa = core::mem::replace(&mut pb, nb);
        g = pa[udeg(&pa)].clone();
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => g.pow(d as u32).div_exact(&h.pow(d as u32 - 1)).expect("subresultant h"),
        };
    }
}
