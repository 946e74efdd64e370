//! Orthogonality of `P_λ` on the 3-torus against
//! `Δ = prod_{j≠k} (t_j/t_k;q)_inf / (ℓ^{-1} t_j/t_k;q)_inf`.
//!
//! All nodes are powers of one root of unity `ω`, so monomials and the
//! weight are table lookups indexed by exponents mod `N`.

use super::grid::{pairwise_sum, roots_of_unity};
use crate::error::{Error, Result};
use crate::exactalg::Sym;
use crate::macdonald::{macdonald_poly, Weight};
use crate::qkit::num::qpoch_inf_num;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

type C = Complex64;

/// Nodes per axis used by default.
pub const TORUS_NODES: usize = 48;

/// Numeric `P_λ`: integer exponent vectors with complex coefficients.
#[derive(Clone, Debug)]
pub struct NumericPoly {
    terms: Vec<([i32; 3], C)>,
}

impl NumericPoly {
    /// `P_λ` at `ℓ = q^{-g}`.
    pub fn macdonald(l: &Weight, q: f64, g: f64) -> Result<Self> {
        if l.n() != 3 {
            return Err(Error::InvalidWeight(format!("torus quadrature needs n = 3, got {l}")));
        }
        let p = macdonald_poly(l)?.polynomial;
        let ell = q.powf(-g);
        let point: BTreeMap<Sym, C> = [
            (Sym::Q, C::new(q, 0.0)),
            (Sym::Ell, C::new(ell, 0.0)),
            (Sym::HalfEll, C::new(ell.sqrt(), 0.0)),
        ]
        .into_iter()
        .collect();
        let idx: Vec<usize> = Sym::T
            .iter()
            .map(|s| p.vars().iter().position(|v| v == s).ok_or_else(|| Error::Domain(format!("missing variable {s:?}"))))
            .collect::<Result<_>>()?;
        let mut terms = Vec::new();
        for (e, c) in p.terms() {
            terms.push(([e[idx[0]], e[idx[1]], e[idx[2]]], c.eval_complex(&point)?));
        }
        Ok(NumericPoly { terms })
    }

    /// Value at `(ω^{a1}, ω^{a2}, ω^{a3})`, `ω` a primitive `roots.len()`-th root.
    fn at(&self, roots: &[C], a: [i64; 3]) -> C {
        let n = roots.len() as i64;
        self.terms
            .iter()
            .map(|(e, c)| {
                let k = (e[0] as i64 * a[0] + e[1] as i64 * a[1] + e[2] as i64 * a[2]).rem_euclid(n);
                *c * roots[k as usize]
            })
            .sum()
    }
}

/// `(ω^m;q)_inf / (q^g ω^m;q)_inf` for `m = 0..N`.
fn delta_table(roots: &[C], q: f64, g: f64) -> Result<Vec<C>> {
    let lg = q.powf(g);
    roots.iter().map(|&z| Ok(qpoch_inf_num(z, q)? / qpoch_inf_num(z * lg, q)?)).collect()
}

/// `(1/N^3) sum P_λ(1/t) P_μ(t) Δ(t)` over the torus grid.
pub fn torus_inner(l: &NumericPoly, m: &NumericPoly, q: f64, g: f64, n: usize) -> Result<C> {
    if n < 8 {
        return Err(Error::Domain(format!("{n} nodes per axis is too few")));
    }
    let roots = roots_of_unity(n);
    let d = delta_table(&roots, q, g)?;
    let ni = n as i64;
    let dd = |j: i64, k: i64| d[(j - k).rem_euclid(ni) as usize];
    let mut vals = Vec::with_capacity(n * n * n);
    for a in 0..ni {
        for b in 0..ni {
            for c in 0..ni {
                let w = dd(a, b) * dd(b, a) * dd(a, c) * dd(c, a) * dd(b, c) * dd(c, b);
                vals.push(l.at(&roots, [-a, -b, -c]) * m.at(&roots, [a, b, c]) * w);
            }
        }
    }
    Ok(pairwise_sum(&vals) / (n * n * n) as f64)
}

/// Inner products for one pair of weights.
#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub cross: C,
    pub self_left: C,
    pub self_right: C,
}

impl OrthogonalityReport {
    /// `|<P_λ, P_μ>| / sqrt(<P_λ,P_λ><P_μ,P_μ>)`.
    pub fn normalized(&self) -> f64 {
        self.cross.norm() / (self.self_left.norm() * self.self_right.norm()).sqrt()
    }

    /// Both self-products are real and positive up to `tol` relative.
    pub fn self_products_positive(&self, tol: f64) -> bool {
        [self.self_left, self.self_right].iter().all(|z| z.re > 0.0 && z.im.abs() <= tol * z.re)
    }
}

pub fn orthogonality_check(l: &Weight, m: &Weight, g: f64, q: f64, n: usize) -> Result<OrthogonalityReport> {
    if l == m {
        return Err(Error::Domain(format!("orthogonality needs distinct weights, got {l} twice")));
    }
    let pl = NumericPoly::macdonald(l, q, g)?;
    let pm = NumericPoly::macdonald(m, q, g)?;
    Ok(OrthogonalityReport {
        cross: torus_inner(&pl, &pm, q, g, n)?,
        self_left: torus_inner(&pl, &pl, q, g, n)?,
        self_right: torus_inner(&pm, &pm, q, g, n)?,
    })
}

/// Weight pairs used by the default suite.
pub fn orthogonality_default_pairs() -> Vec<(Weight, Weight)> {
    let w = |p: [i32; 3]| Weight::new(&p).expect("dominant");
    alloc::vec![
        (w([0, 0, 1]), w([0, 1, 1])),
        (w([0, 0, 2]), w([0, 1, 1])),
        (w([0, 1, 2]), w([1, 1, 1])),
        (w([0, 0, 3]), w([0, 1, 2])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: [i32; 3]) -> Weight {
        Weight::new(&p).unwrap()
    }

    #[test]
    fn distinct_pairs_orthogonal() {
        for (l, m) in orthogonality_default_pairs().iter().take(3) {
            let r = orthogonality_check(l, m, 1.0, 0.5, TORUS_NODES).unwrap();
            assert!(r.normalized() < 1e-8, "{l} {m}: {}", r.normalized());
            assert!(r.self_products_positive(1e-10));
        }
    }

    #[test]
    fn non_integer_coupling() {
        let r = orthogonality_check(&w([0, 1, 2]), &w([1, 1, 1]), 0.5, 0.3, TORUS_NODES).unwrap();
        assert!(r.normalized() < 1e-8, "{}", r.normalized());
    }

    #[test]
    fn same_weight_rejected() {
        assert!(orthogonality_check(&w([0, 0, 1]), &w([0, 0, 1]), 1.0, 0.5, 16).is_err());
    }
}
