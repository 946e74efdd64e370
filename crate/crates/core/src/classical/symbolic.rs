//! Exact statements about the classical three-particle model over
//! `Q(L)(t, T, u, z)` with `ℓ = L^2`.
//!
//! Positions are `t1, t2, t3`, momenta are the symbols `T1, T2, T3`, the
//! spectral parameter is `u` and the eigenvalue variable is `z`.

use crate::error::{Error, Result};
use crate::exactalg::{RatFunc, Sym};
use crate::macdonald::subsets;
use alloc::format;
use alloc::vec::Vec;

fn half() -> RatFunc {
    RatFunc::var(Sym::HalfEll)
}

fn ell() -> RatFunc {
    half().pow(2)
}

fn lp(e: i64) -> RatFunc {
    ell().pow(e)
}

fn t(j: usize) -> RatFunc {
    RatFunc::var(Sym::T[j])
}

fn mom(j: usize) -> RatFunc {
    RatFunc::var(Sym::MOM[j])
}

fn u() -> RatFunc {
    RatFunc::var(Sym::U)
}

fn one() -> RatFunc {
    RatFunc::one()
}

/// `1 - c u`.
fn lin(c: &RatFunc, x: &RatFunc) -> RatFunc {
    &one() - &(c * x)
}

/// `v_jk = (ℓ^{-1/2} t_j - ℓ^{1/2} t_k)/(t_j - t_k)` with 0-based indices.
pub fn v(j: usize, k: usize) -> RatFunc {
    let h = half();
    let hinv = h.inv().expect("L is nonzero");
    &(&(&hinv * &t(j)) - &(&h * &t(k))) / &(&t(j) - &t(k))
}

/// Classical `H_i`, `i = 1, 2, 3`.
pub fn hamiltonian_cl(i: usize) -> Result<RatFunc> {
    if !(1..=3).contains(&i) {
        return Err(Error::Domain(format!("classical H_i needs i in 1..=3, got {i}")));
    }
    let mut acc = RatFunc::zero();
    for sub in subsets(3, i) {
        let mut term = one();
        for &j in &sub {
            term = &term * &mom(j);
            for k in (0..3).filter(|k| !sub.contains(k)) {
                term = &term * &v(j, k);
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `{F, G} = -i C`; only the real coefficient function `C` is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonBracket {
    pub coeff: RatFunc,
}

impl PoissonBracket {
    /// The bracket always carries the factor `-i`.
    pub const MINUS_I: bool = true;

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

/// `C = sum_j T_j t_j (∂_{T_j} F ∂_{t_j} G - ∂_{t_j} F ∂_{T_j} G)`.
pub fn poisson_bracket(f: &RatFunc, g: &RatFunc) -> PoissonBracket {
    let mut acc = RatFunc::zero();
    for j in 0..3 {
        let (tj, pj) = (Sym::T[j], Sym::MOM[j]);
        let a = &f.derivative(pj) * &g.derivative(tj);
        let b = &f.derivative(tj) * &g.derivative(pj);
        let d = &a - &b;
        if !d.is_zero() {
            acc = &acc + &(&(&mom(j) * &t(j)) * &d);
        }
    }
    PoissonBracket { coeff: acc }
}

/// `{H_i, H_j}` for every pair `i < j`.
pub fn hamiltonian_brackets() -> Result<Vec<((usize, usize), PoissonBracket)>> {
    let hs = (1..=3).map(hamiltonian_cl).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            out.push(((i + 1, j + 1), poisson_bracket(&hs[i], &hs[j])));
        }
    }
    Ok(out)
}

/// The Lax matrix `L(u) = D(u) E(u)` as a row-major 3x3 array.
pub fn lax_matrix(spec: &RatFunc) -> [[RatFunc; 3]; 3] {
    let l3u = &lp(3) * spec;
    let pre = &(&(&ell() - &one()) * &lin(&lp(3), spec)) / &(&(&RatFunc::from_int(2) * &lp(2)) * &lin(&one(), spec));
    let diag = [&(&v(0, 1) * &v(0, 2)) * &mom(0), &(&v(1, 0) * &v(1, 2)) * &mom(1), &(&v(2, 0) * &v(2, 1)) * &mom(2)];
    let base = &(&one() + &l3u) / &(&one() - &l3u);
    core::array::from_fn(|j| {
        core::array::from_fn(|k| {
            let e = &base - &(&(&t(j) + &(&ell() * &t(k))) / &(&t(j) - &(&ell() * &t(k))));
            &(&pre * &diag[j]) * &e
        })
    })
}

/// `(tr L, sum of principal 2-minors, det L)`, so that
/// `det(z - L) = z^3 - c2 z^2 + c1 z - c0`.
pub fn lax_invariants(m: &[[RatFunc; 3]; 3]) -> (RatFunc, RatFunc, RatFunc) {
    let tr = &(&m[0][0] + &m[1][1]) + &m[2][2];
    let minor = |a: usize, b: usize| &(&m[a][a] * &m[b][b]) - &(&m[a][b] * &m[b][a]);
    let c1 = &(&minor(0, 1) + &minor(0, 2)) + &minor(1, 2);
    let cof = |r: usize| {
        let (a, b) = ((r + 1) % 3, (r + 2) % 3);
        &(&m[1][a] * &m[2][b]) - &(&m[1][b] * &m[2][a])
    };
    let det = &(&(&m[0][0] * &cof(0)) + &(&m[0][1] * &cof(1))) + &(&m[0][2] * &cof(2));
    (tr, c1, det)
}

/// Residuals of the characteristic polynomial identity, one per power
/// `z^2, z^1, z^0`; each is zero when the identity holds.
pub fn lax_charpoly_residuals() -> Result<[RatFunc; 3]> {
    let x = u();
    let (c2, c1, c0) = lax_invariants(&lax_matrix(&x));
    let lead = &lp(3) * &lin(&one(), &x).pow(2);
    let h1 = hamiltonian_cl(1)?;
    let h2 = hamiltonian_cl(2)?;
    let h3 = hamiltonian_cl(3)?;
    let want2 = &(&(&lp(2) * &lin(&one(), &x)) * &lin(&lp(2), &x)) * &h1;
    let want1 = &(&(&ell() * &lin(&ell(), &x)) * &lin(&lp(3), &x)) * &h2;
    let want0 = &lin(&lp(3), &x).pow(2) * &h3;
    Ok([&(&lead * &c2) - &want2, &(&lead * &c1) - &want1, &(&lead * &c0) - &want0])
}

pub fn lax_charpoly_identity_check() -> Result<bool> {
    Ok(lax_charpoly_residuals()?.iter().all(RatFunc::is_zero))
}

/// `α_k(y)` for `k = 1, 2`.
pub fn alpha_cl(k: usize, y: &RatFunc) -> Result<RatFunc> {
    if k != 1 && k != 2 {
        return Err(Error::Domain(format!("α_k needs k in {{1, 2}}, got {k}")));
    }
    let (tk, to, t3) = (t(k - 1), t(2 - k), t(2));
    let num = &(&lin(&lp(3), y) * &(&(&(&ell() * &t3) * y) - &to)) * &(&tk - &(&ell() * &t3));
    let den = &(&(&ell() * &lin(&one(), y)) * &(&(&(&lp(2) * &t3) * y) - &to)) * &(&(&ell() * &tk) - &t3);
    num.checked_div(&den)
}

/// Left-hand sides of the two classical α identities.
pub fn alpha_cl_residuals() -> Result<(RatFunc, RatFunc)> {
    let y = RatFunc::var(Sym::Y);
    let (a1, a2) = (alpha_cl(1, &y)?, alpha_cl(2, &y)?);
    let f = |c: &RatFunc| lin(c, &y);
    let a12 = &a1 * &a2;
    let first = &(&(&(&-(&f(&one()) * &f(&lp(2))) * &lp(2)) * &(&v(2, 0) * &v(2, 1))) * &a12)
        + &(&(&(&f(&ell()) * &f(&lp(3))) * &ell()) * &(&(&(&v(0, 1) * &v(2, 1)) * &a2) + &(&(&v(1, 0) * &v(2, 0)) * &a1)));
    let first = &first - &f(&lp(3)).pow(2);
    let second = &(&(&f(&one()).pow(2) * &lp(3)) * &a12)
        - &(&(&(&f(&one()) * &f(&lp(2))) * &lp(2)) * &(&(&(&v(0, 1) * &v(0, 2)) * &a2) + &(&(&v(1, 0) * &v(1, 2)) * &a1)));
    let second = &second + &(&(&(&f(&ell()) * &f(&lp(3))) * &ell()) * &(&v(0, 2) * &v(1, 2)));
    Ok((first, second))
}

/// `α1(c/u)/α2(c/u) - α1(u)/α2(u)` with `c = t1 t2 t3^{-2} L^{-e}`.
pub fn alpha_ratio_invariance_residual(e: i64) -> Result<RatFunc> {
    let x = u();
    let c = &(&(&t(0) * &t(1)) / &t(2).pow(2)) * &half().pow(-e);
    let image = c.checked_div(&x)?;
    let ratio = |y: &RatFunc| -> Result<RatFunc> { alpha_cl(1, y)?.checked_div(&alpha_cl(2, y)?) };
    Ok(&ratio(&image)? - &ratio(&x)?)
}

/// The cleared characteristic polynomial
/// `ℓ^3(1-u)^2 det(z - L(u))` written through the Hamiltonians.
pub fn charpoly_cleared(z: &RatFunc, x: &RatFunc) -> Result<RatFunc> {
    let h = [hamiltonian_cl(1)?, hamiltonian_cl(2)?, hamiltonian_cl(3)?];
    let a = &(&lp(3) * &lin(&one(), x).pow(2)) * &z.pow(3);
    let b = &(&(&(&lp(2) * &lin(&one(), x)) * &lin(&lp(2), x)) * &h[0]) * &z.pow(2);
    let c = &(&(&(&ell() * &lin(&ell(), x)) * &lin(&lp(3), x)) * &h[1]) * z;
    let d = &lin(&lp(3), x).pow(2) * &h[2];
    Ok(&(&(&a - &b) + &c) - &d)
}

/// `Z1` and `Z2` of the split `T3 Z1 + z Z2`.
pub fn z_parts(z: &RatFunc, x: &RatFunc) -> (RatFunc, RatFunc) {
    let f = |c: &RatFunc| lin(c, x);
    let (t1m, t2m) = (mom(0), mom(1));
    let z1 = &(&-(&(&(&(&f(&one()) * &f(&lp(2))) * &lp(2)) * &(&v(2, 0) * &v(2, 1))) * &z.pow(2))
        + &(&(&(&(&f(&ell()) * &f(&lp(3))) * &ell()) * z)
            * &(&(&(&v(0, 1) * &v(2, 1)) * &t1m) + &(&(&v(1, 0) * &v(2, 0)) * &t2m))))
        - &(&f(&lp(3)).pow(2) * &(&t1m * &t2m));
    let z2 = &(&(&(&f(&one()).pow(2) * &lp(3)) * &z.pow(2))
        - &(&(&(&(&f(&one()) * &f(&lp(2))) * &lp(2)) * z)
            * &(&(&(&v(0, 1) * &v(0, 2)) * &t1m) + &(&(&v(1, 0) * &v(1, 2)) * &t2m))))
        + &(&(&(&(&f(&ell()) * &f(&lp(3))) * &ell()) * &(&v(0, 2) * &v(1, 2))) * &(&t1m * &t2m));
    (z1, z2)
}

/// Outcome of the `Z1 + Z2` decomposition check.
#[derive(Clone, Debug, PartialEq)]
pub struct ZSplitReport {
    /// `T3 Z1 + z Z2 - ℓ^3(1-u)^2 det(z - L(u))`.
    pub split: RatFunc,
    /// `Z1` after `z^2 -> T1 T2 α1 α2`, `T1 z -> T1 T2 α2`, `T2 z -> T1 T2 α1`.
    pub z1: RatFunc,
    /// `Z2` after the same substitution.
    pub z2: RatFunc,
}

impl ZSplitReport {
    pub fn holds(&self) -> bool {
        self.split.is_zero() && self.z1.is_zero() && self.z2.is_zero()
    }
}

pub fn z_split_check() -> Result<ZSplitReport> {
    let (z, x) = (RatFunc::var(Sym::Z), u());
    let (z1, z2) = z_parts(&z, &x);
    let split = &(&(&mom(2) * &z1) + &(&z * &z2)) - &charpoly_cleared(&z, &x)?;
    // After the substitution every term carries T1 T2; what is left is the
    // pair of α identities in the variable u.
    let (a1, a2) = (alpha_cl(1, &x)?, alpha_cl(2, &x)?);
    let f = |c: &RatFunc| lin(c, &x);
    let t12 = &mom(0) * &mom(1);
    let s1 = &(&(&-(&(&(&(&f(&one()) * &f(&lp(2))) * &lp(2)) * &(&v(2, 0) * &v(2, 1))) * &(&a1 * &a2))
        + &(&(&(&f(&ell()) * &f(&lp(3))) * &ell()) * &(&(&(&v(0, 1) * &v(2, 1)) * &a2) + &(&(&v(1, 0) * &v(2, 0)) * &a1))))
        - &f(&lp(3)).pow(2))
        * &t12;
    let s2 = &(&(&(&(&f(&one()).pow(2) * &lp(3)) * &(&a1 * &a2))
        - &(&(&(&f(&one()) * &f(&lp(2))) * &lp(2)) * &(&(&(&v(0, 1) * &v(0, 2)) * &a2) + &(&(&v(1, 0) * &v(1, 2)) * &a1))))
        + &(&(&(&f(&ell()) * &f(&lp(3))) * &ell()) * &(&v(0, 2) * &v(1, 2))))
        * &t12;
    Ok(ZSplitReport { split, z1: s1, z2: s2 })
}

/// Outcome of the classical identity suite.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalReport {
    pub brackets: Vec<((usize, usize), PoissonBracket)>,
    pub charpoly: [RatFunc; 3],
    pub alpha_a: RatFunc,
    pub alpha_b: RatFunc,
    pub ratio_invariance: RatFunc,
    pub z_split: ZSplitReport,
}

impl ClassicalReport {
    pub fn holds(&self) -> bool {
        self.brackets.iter().all(|(_, b)| b.is_zero())
            && self.charpoly.iter().all(RatFunc::is_zero)
            && self.alpha_a.is_zero()
            && self.alpha_b.is_zero()
            && self.ratio_invariance.is_zero()
            && self.z_split.holds()
    }
}

/// The involution of the quantities `α1/α2` uses `c = t1 t2 t3^{-2} ℓ^{-3}`.
pub const RATIO_INVARIANCE_L_EXPONENT: i64 = 6;

pub fn verify_classical_identities() -> Result<ClassicalReport> {
    let (alpha_a, alpha_b) = alpha_cl_residuals()?;
    Ok(ClassicalReport {
        brackets: hamiltonian_brackets()?,
        charpoly: lax_charpoly_residuals()?,
        alpha_a,
        alpha_b,
        ratio_invariance: alpha_ratio_invariance_residual(RATIO_INVARIANCE_L_EXPONENT)?,
        z_split: z_split_check()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_pair() {
        let b = poisson_bracket(&mom(0), &t(0));
        assert_eq!(b.coeff, &mom(0) * &t(0));
        assert!(poisson_bracket(&t(0), &t(1)).is_zero());
    }

    #[test]
    fn hamiltonians_commute() {
        for (ij, b) in hamiltonian_brackets().unwrap() {
            assert!(b.is_zero(), "{ij:?}");
        }
    }

    #[test]
    fn alpha_identities() {
        let (a, b) = alpha_cl_residuals().unwrap();
        assert!(a.is_zero(), "{a}");
        assert!(b.is_zero(), "{b}");
    }

    #[test]
    fn ratio_invariance_exponent() {
        assert!(alpha_ratio_invariance_residual(6).unwrap().is_zero());
        assert!(!alpha_ratio_invariance_residual(3).unwrap().is_zero());
    }

    #[test]
    fn z_split() {
        let r = z_split_check().unwrap();
        assert!(r.split.is_zero(), "{}", r.split);
        assert!(r.holds());
    }

    #[test]
    fn charpoly() {
        for r in lax_charpoly_residuals().unwrap() {
            assert!(r.is_zero(), "{r}");
        }
    }
}
