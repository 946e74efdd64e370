//! Dominant weights, the dominance order and monomial symmetric functions.

use crate::error::{Error, Result};
use crate::exactalg::{tvar, LMono, LaurentPoly, RatFunc, Sym};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// `λ = (λ_1 <= ... <= λ_n)`, `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    parts: Vec<i32>,
}

impl Weight {
    pub fn new(parts: &[i32]) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidWeight(format!("need at least two parts, got {}", parts.len())));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidWeight(format!("{parts:?} is not nondecreasing")));
        }
        Ok(Weight { parts: parts.to_vec() })
    }

    /// Parses `"0,0,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v = tok
                .trim()
                .parse::<i32>()
                .map_err(|_| Error::InvalidWeight(format!("cannot read {tok:?} as an integer")))?;
            parts.push(v);
        }
        Self::new(&parts)
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i32] {
        &self.parts
    }

    pub fn part(&self, j: usize) -> i32 {
        self.parts[j - 1]
    }

    pub fn size(&self) -> i32 {
        self.parts.iter().sum()
    }

    /// `λ_{jk} = λ_j - λ_k` with one-based indices.
    pub fn diff(&self, j: usize, k: usize) -> i32 {
        self.part(j) - self.part(k)
    }

    /// `λ + (c, ..., c)`.
    pub fn shifted(&self, c: i32) -> Weight {
        Weight { parts: self.parts.iter().map(|p| p + c).collect() }
    }

    /// The variables `t_1..t_n`.
    pub fn vars(&self) -> Vec<Sym> {
        tvars(self.n())
    }

    /// Compact label such as `002`, or `-1,0,1` when a part is negative or
    /// wider than one digit.
    pub fn label(&self) -> String {
        if self.parts.iter().all(|p| (0..10).contains(p)) {
            self.parts.iter().map(|p| char::from(b'0' + *p as u8)).collect()
        } else {
            let v: Vec<String> = self.parts.iter().map(|p| format!("{p}")).collect();
            v.join(",")
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

pub fn tvars(n: usize) -> Vec<Sym> {
    (0..n).map(tvar).collect()
}

/// `m_λ = sum of t^ν` over the distinct permutations `ν` of `λ`.
pub fn monomial_sym(l: &Weight) -> LaurentPoly {
    let vars = l.vars();
    let mut perm: Vec<i32> = l.parts.clone();
    let mut out = LaurentPoly::zero_in(&vars);
    // parts are sorted ascending: walk all distinct permutations in order
    loop {
        out.add_term(perm.iter().copied().collect::<LMono>(), RatFunc::one());
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn tail_sums(l: &Weight) -> Vec<i32> {
    let mut out = Vec::with_capacity(l.n());
    let mut s = 0;
    for p in l.parts.iter().rev() {
        s += p;
        out.push(s);
    }
    out
}

/// `μ ⪯ λ`: equal size and `sum_{j>=k} μ_j <= sum_{j>=k} λ_j` for `k >= 2`.
pub fn dominance_leq(mu: &Weight, l: &Weight) -> bool {
    if mu.n() != l.n() || mu.size() != l.size() {
        return false;
    }
    tail_sums(mu).iter().zip(tail_sums(l).iter()).all(|(a, b)| a <= b)
}

/// All dominant `μ ⪯ λ`, highest first (a linear extension of the order).
pub fn enumerate_lower(l: &Weight) -> Vec<Weight> {
    let n = l.n();
    let (lo, hi) = (l.part(1), l.part(n));
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fill(&mut cur, n, lo, hi, l.size(), &mut |p| {
        let w = Weight { parts: p.to_vec() };
        if dominance_leq(&w, l) {
            out.push(w);
        }
    });
    out.sort_by(|a, b| tail_sums(b).cmp(&tail_sums(a)));
    out
}

fn fill(cur: &mut Vec<i32>, n: usize, lo: i32, hi: i32, rest: i32, emit: &mut impl FnMut(&[i32])) {
    let left = n - cur.len();
    if left == 0 {
        if rest == 0 {
            emit(cur);
        }
        return;
    }
    let start = cur.last().copied().unwrap_or(lo);
    for v in start..=hi {
        // remaining parts are all >= v
        if v * left as i32 > rest {
            break;
        }
        if hi * (left as i32) < rest {
            break;
        }
        cur.push(v);
        fill(cur, n, lo, hi, rest - v, emit);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[i32]) -> Weight {
        Weight::new(p).unwrap()
    }

    #[test]
    fn monomials() {
        let m = monomial_sym(&w(&[0, 0, 1]));
        assert_eq!(m.len(), 3);
        assert_eq!(monomial_sym(&w(&[1, 1, 1])).len(), 1);
        assert_eq!(monomial_sym(&w(&[0, 1, 2])).len(), 6);
        assert_eq!(monomial_sym(&w(&[-1, 0, 0])).len(), 3);
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&w(&[0, 1, 1]), &w(&[0, 0, 2])));
        assert!(dominance_leq(&w(&[0, 0, 2]), &w(&[0, 0, 2])));
        assert!(!dominance_leq(&w(&[0, 0, 2]), &w(&[0, 1, 1])));
        let lower = enumerate_lower(&w(&[0, 0, 3]));
        assert_eq!(lower, alloc::vec![w(&[0, 0, 3]), w(&[0, 1, 2]), w(&[1, 1, 1])]);
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(Weight::new(&[1, 0, 0]).is_err());
        assert!(Weight::new(&[0]).is_err());
        assert!(Weight::parse("0,x,1").is_err());
        assert_eq!(Weight::parse("0, 1,2").unwrap(), w(&[0, 1, 2]));
    }
}
