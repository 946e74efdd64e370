//! The verification suites behind `sov verify`.
//!
//! Per-weight work runs on the rayon pool; results are collected in input
//! order, so the report does not depend on the thread count.

use crate::args::{Suite, VerifyArgs};
use crate::golden::{computed, transcription_agrees, Table, ENTRIES};
use crate::report::Check;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sov_core::classical::{
    det_residual, genfunc_canonicity_check, genfunc_richardson, separate_numeric, separated_equation_residual,
    verify_classical_identities, PhasePoint,
};
use sov_core::exactalg::{RatFunc, Sym};
use sov_core::macdonald::{eigenvalue, eigenvalues, hamiltonian, macdonald_poly, Weight};
use sov_core::numeric::{numeric_suite, SuiteOptions, TORUS_NODES};
use sov_core::qkit::num::{asympt_dilog_check, dilog_num, qbeta_num, qgamma_num, qint_num};
use sov_core::qkit::{
    andrews_residual, bhs_series, euler_inverse, euler_product, hg_diffeq_residual, lemma_pq_residual, qpoch,
};
use sov_core::sov::{
    apply_minv, apply_sep_eq3, check_c_chi_product, check_triangularity, check_uniqueness, coords_to_t,
    default_cn_weights, inversion_round_trip, lauricella_forms_check, mab_identity_checks, minv_difference_check,
    p_basis_poly, pair_poch, reconstruct_sep_by_recursion, round_trip, sep_poly, sep_poly_via_series,
    separated_product, verify_alpha_identities_quantum, verify_factorization, weights_in_box, xi_sum_residual,
    PBasisIndex, SepOperator,
};
use sov_core::Result;
use std::f64::consts::PI;

/// Relative tolerance for the classical constraint and separated equation.
pub const CLASSICAL_TOL: f64 = 1e-9;
/// Tolerance for the normalized Lax determinant.
pub const DET_TOL: f64 = 1e-8;
/// Finite-difference step and tolerance for the generating function.
pub const GENFUNC_STEP: f64 = 1e-5;
pub const GENFUNC_TOL: f64 = 1e-5;
/// Allowed relative distance of the Richardson ratio from 4.
pub const RICHARDSON_TOL: f64 = 0.2;
/// Number of random classical phase points.
pub const PHASE_POINTS: usize = 20;
/// Weights with four parts for the general separated equation.
pub const FOUR_PARTICLE_WEIGHTS: [[i32; 4]; 3] = [[0, 0, 0, 1], [0, 0, 1, 2], [-1, 0, 1, 1]];

pub fn run_suite(a: &VerifyArgs) -> Vec<Check> {
    match a.suite {
        Suite::Tables => tables(),
        Suite::Factorization => factorization(a.min, a.max),
        Suite::SeparatedEq => separated_eq(a.min, a.max),
        Suite::Commutativity => commutativity(),
        Suite::Classical => classical(a.seed),
        Suite::AppendixA => appendix_a(),
        Suite::AppendixB => appendix_b(),
        Suite::Numeric => numeric(a.q, a.g, a.grid),
    }
}

fn label(l: &Weight) -> String {
    l.parts().iter().map(i32::to_string).collect::<Vec<_>>().join(",")
}

/// Runs `f` on every weight in parallel and flattens the checks in order.
fn per_weight(ws: &[Weight], f: impl Fn(&Weight) -> Vec<Check> + Sync + Send) -> Vec<Check> {
    ws.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

fn fold<T>(name: String, r: Result<T>, ok: impl FnOnce(T) -> bool) -> Check {
    match r {
        Ok(v) => Check::exact(name, ok(v)),
        Err(e) => Check::error(name, e),
    }
}

pub fn tables() -> Vec<Check> {
    ENTRIES
        .par_iter()
        .map(|e| {
            let l = e.weight();
            let tag = match e.table {
                Table::Macdonald => format!("P[{}]", label(&l)),
                Table::Separated => format!("S[{}]", label(&l)),
            };
            let mut out = Vec::new();
            out.push(match computed(e) {
                Ok((text, _)) => {
                    let got = format!("{text}\n");
                    let c = Check::exact(format!("{tag} golden"), got == e.canonical);
                    if got == e.canonical { c } else { c.with_detail(format!("got {text}")) }
                }
                Err(err) => Check::error(format!("{tag} golden"), err),
            });
            out.push(Check::from_result(format!("{tag} transcription"), transcription_agrees(e)));
            if e.table == Table::Separated {
                let chi = sep_poly(&l);
                let same = |r: Result<sov_core::sov::SepPoly>| Ok(chi.clone()? == r?);
                out.push(Check::from_result(format!("{tag} series route"), same(sep_poly_via_series(&l))));
                out.push(Check::from_result(format!("{tag} recursion route"), same(reconstruct_sep_by_recursion(&l))));
                out.push(Check::from_result(format!("{tag} lauricella forms"), lauricella_forms_check(&l)));
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// `M^{-1}` of the separated product returns `P_λ`.
fn inverse_holds(l: &Weight) -> Result<bool> {
    let back = apply_minv(&separated_product(l)?)?;
    let p = macdonald_poly(l)?.polynomial;
    Ok(back == p.with_vars(back.vars())?)
}

/// Indices of the `p` basis used for the round trip.
pub fn p_basis_sample() -> Vec<PBasisIndex> {
    let mut out = Vec::new();
    for j in -2..=2 {
        for k in -1..=1 {
            for nu in 0..=2 {
                out.push(PBasisIndex::new(j, k, nu));
            }
        }
    }
    out
}

pub fn factorization(min: i32, max: i32) -> Vec<Check> {
    let ws = weights_in_box(min, max);
    let mut out = per_weight(&ws, |l| {
        let s = label(l);
        vec![
            fold(format!("factorization [{s}]"), verify_factorization(l), |r| r.holds()),
            Check::from_result(format!("triangularity [{s}]"), check_triangularity(l)),
            Check::from_result(format!("inverse [{s}]"), inverse_holds(l)),
        ]
    });
    out.push(Check::exact(format!("sweep covers {} weights", ws.len()), !ws.is_empty()));
    let sample = p_basis_sample();
    let trips: Vec<Check> = sample
        .par_iter()
        .map(|&i| {
            let name = format!("round trip p[{},{},{}]", i.j, i.k, i.nu);
            Check::from_result(name, coords_to_t(&p_basis_poly(i)).and_then(|f| round_trip(&f)))
        })
        .collect();
    out.extend(trips);
    let table: Vec<Weight> = ENTRIES.iter().filter(|e| e.table == Table::Macdonald).map(|e| e.weight()).collect();
    let diffs: Vec<Check> = [1u32, 2]
        .par_iter()
        .flat_map_iter(|&g| {
            table.iter().map(move |l| {
                let r = separated_product(l).and_then(|phi| minv_difference_check(g, &phi));
                fold(format!("difference form of M^-1 at g={g} on [{}]", label(l)), r, |_| true)
            })
        })
        .collect();
    out.extend(diffs);
    out
}

fn sep_annihilated(l: &Weight) -> Result<(bool, bool)> {
    let s = sep_poly(l)?.to_laurent_in(Sym::Y);
    let direct = apply_sep_eq3(&eigenvalues(l), &s)?.is_zero();
    let op = SepOperator::for_weight(l)?.apply(&s)?.is_zero();
    Ok((direct, op))
}

pub fn separated_eq(min: i32, max: i32) -> Vec<Check> {
    let ws = weights_in_box(min, max);
    let mut out = per_weight(&ws, |l| {
        let s = label(l);
        match sep_annihilated(l) {
            Ok((a, b)) => vec![
                Check::exact(format!("three-particle equation [{s}]"), a),
                Check::exact(format!("operator form [{s}]"), b),
                Check::from_result(format!("unique polynomial solution [{s}]"), check_uniqueness(l)),
            ],
            Err(e) => vec![Check::error(format!("separated equation [{s}]"), e)],
        }
    });
    let four: Vec<Weight> = FOUR_PARTICLE_WEIGHTS.iter().map(|p| Weight::new(p).expect("dominant")).collect();
    out.extend(per_weight(&four, |l| {
        let r = sep_poly_via_series(l)
            .and_then(|s| SepOperator::for_weight(l)?.apply(&s.to_laurent_in(Sym::Y)))
            .map(|r| r.is_zero());
        vec![Check::from_result(format!("four-particle equation [{}]", label(l)), r)]
    }));
    out
}

fn eigen_equation(i: usize, l: &Weight) -> Result<bool> {
    let p = macdonald_poly(l)?.polynomial;
    let h = hamiltonian(i, l.n())?;
    Ok(h.apply(&p)? == p.scale(&eigenvalue(i, l)))
}

pub fn commutativity() -> Vec<Check> {
    let mut out = Vec::new();
    let hs: Result<Vec<_>> = (1..=3).map(|i| hamiltonian(i, 3)).collect();
    match hs {
        Ok(hs) => {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                out.push(Check::exact(format!("[H{}, H{}] = 0", i + 1, j + 1), hs[i].commutator(&hs[j]).is_empty()));
            }
        }
        Err(e) => out.push(Check::error("hamiltonians", e)),
    }
    let table: Vec<Weight> = ENTRIES.iter().filter(|e| e.table == Table::Macdonald).map(|e| e.weight()).collect();
    out.extend(per_weight(&table, |l| {
        (1..=3).map(|i| Check::from_result(format!("H{i} P[{}] = h{i} P", label(l)), eigen_equation(i, l))).collect()
    }));
    match verify_alpha_identities_quantum() {
        Ok(r) => {
            out.push(Check::exact("alpha identity (a)", r.identity_a.is_zero()));
            out.push(Check::exact("alpha identity (b)", r.identity_b.is_zero()));
            out.push(Check::exact("alpha_12 two expressions agree", r.alpha12_consistent));
            out.push(Check::exact("shift operators move past v_jk", r.shift_commutation));
        }
        Err(e) => out.push(Check::error("quantum alpha identities", e)),
    }
    out.extend(per_weight(&default_cn_weights(), |l| {
        vec![Check::from_result(format!("c times extreme chi [{}]", label(l)), check_c_chi_product(l))]
    }));
    out
}

/// Uniform phase-space points with `ℓ ∈ [1.5, 3]` and `T_k ∈ [0.5, 2]`.
pub fn random_phase_points(seed: u64, count: usize) -> Vec<Result<PhasePoint>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let theta = [0; 3].map(|_| rng.gen_range(0.0..2.0 * PI));
            let big_t = [0; 3].map(|_| rng.gen_range(0.5..2.0));
            let ell = rng.gen_range(1.5..3.0);
            PhasePoint::from_angles(theta, big_t, ell)
        })
        .collect()
}

fn phase_checks(i: usize, p: &Result<PhasePoint>) -> Vec<Check> {
    let p = match p {
        Ok(p) => p,
        Err(e) => return vec![Check::error(format!("point {i}"), e)],
    };
    let sep = match separate_numeric(p) {
        Ok(s) => s,
        Err(e) => return vec![Check::error(format!("point {i} separation"), e)],
    };
    let want = p.t[0] * p.t[1] / (p.t[2] * p.t[2] * p.ell.powi(3));
    let constraint = ((sep.y[0] * sep.y[1]) / want - 1.0).norm();
    let eq = (0..2).map(|j| separated_equation_residual(p, sep.y[j], sep.big_y[j])).fold(0.0, f64::max);
    let det = (0..2).map(|j| det_residual(p, sep.y[j], sep.big_y[j])).fold(0.0, f64::max);
    let mut out = vec![
        Check::within(format!("point {i} constraint"), constraint, CLASSICAL_TOL),
        Check::within(format!("point {i} separated equation"), eq, CLASSICAL_TOL),
        Check::within(format!("point {i} lax determinant"), det, DET_TOL),
    ];
    out.push(Check::from_residual(
        format!("point {i} generating function"),
        genfunc_canonicity_check(p, GENFUNC_STEP).map(|r| r.max_deviation().max(r.y_plus)),
        GENFUNC_TOL,
    ));
    out.push(Check::from_residual(
        format!("point {i} second-order convergence"),
        genfunc_richardson(p).map(|r| (r / 4.0 - 1.0).abs()),
        RICHARDSON_TOL,
    ));
    out
}

pub fn classical(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    match verify_classical_identities() {
        Ok(r) => {
            for ((i, j), b) in &r.brackets {
                out.push(Check::exact(format!("{{H{i}, H{j}}} = 0"), b.is_zero()));
            }
            out.push(Check::exact("lax characteristic polynomial", r.charpoly.iter().all(RatFunc::is_zero)));
            out.push(Check::exact("classical alpha identity (a)", r.alpha_a.is_zero()));
            out.push(Check::exact("classical alpha identity (b)", r.alpha_b.is_zero()));
            out.push(Check::exact("alpha ratio invariance", r.ratio_invariance.is_zero()));
            out.push(Check::exact("characteristic polynomial split", r.z_split.holds()));
        }
        Err(e) => out.push(Check::error("classical identities", e)),
    }
    let pts = random_phase_points(seed, PHASE_POINTS);
    let per: Vec<Vec<Check>> = pts.par_iter().enumerate().map(|(i, p)| phase_checks(i, p)).collect();
    out.extend(per.into_iter().flatten());
    out
}

fn q() -> RatFunc {
    RatFunc::q_pow(1)
}

/// `(qx)_k (1-x) = (1-q^k x)(x)_k` and `(x/q)_k (1-q^{k-1}x) = (1-x/q)(x)_k`.
fn shift_qx(k: usize) -> bool {
    let x = RatFunc::var(Sym::Pa);
    let one = RatFunc::one();
    let base = qpoch(&x, &q(), k);
    let up = &qpoch(&(&q() * &x), &q(), k) * &(&one - &x);
    let down = &qpoch(&(&RatFunc::q_pow(-1) * &x), &q(), k) * &(&one - &(&RatFunc::q_pow(k as i64 - 1) * &x));
    up == &(&one - &(&RatFunc::q_pow(k as i64) * &x)) * &base
        && down == &(&one - &(&RatFunc::q_pow(-1) * &x)) * &base
}

/// `(a)_{m+n} = (a)_m (a q^m)_n`.
fn splitting(m: usize, n: usize) -> bool {
    let a = RatFunc::var(Sym::Pa);
    qpoch(&a, &q(), m + n) == &qpoch(&a, &q(), m) * &qpoch(&(&a * &RatFunc::q_pow(m as i64)), &q(), n)
}

fn andrews(xs: usize, nus: &[usize], order: usize) -> Result<bool> {
    let pool = [Sym::X1, Sym::X2, Sym::X3];
    let x: Vec<RatFunc> = pool[..xs].iter().map(|&s| RatFunc::var(s)).collect();
    Ok(andrews_residual(&RatFunc::var(Sym::Pa), &x, nus, &q(), order)?.is_zero())
}

pub fn appendix_a() -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=5 {
        out.push(Check::exact(format!("shift relations k={k}"), shift_qx(k)));
    }
    let mut all = true;
    for m in 0..=5 {
        for n in 0..=5 {
            all &= splitting(m, n);
        }
    }
    out.push(Check::exact("pochhammer splitting m,n <= 5", all));
    let andrews_cases: [(usize, &[usize]); 4] = [(1, &[2]), (2, &[1, 1]), (2, &[2, 1]), (3, &[1, 1, 1])];
    out.extend(
        andrews_cases
            .par_iter()
            .map(|(xs, nus)| Check::from_result(format!("andrews reduction n={} nu={nus:?}", xs + 1), andrews(*xs, nus, 4)))
            .collect::<Vec<_>>(),
    );
    let a = RatFunc::var(Sym::Pa);
    let mut lemma = Vec::new();
    for big_n in 0..=4usize {
        for nu in 0..=big_n {
            lemma.push((nu, big_n));
        }
    }
    out.extend(
        lemma
            .par_iter()
            .map(|&(nu, big_n)| {
                let r = lemma_pq_residual(&a, &q(), nu, big_n, big_n + 4).map(|s| s.is_zero());
                Check::from_result(format!("lemma PQ nu={nu} N={big_n}"), r)
            })
            .collect::<Vec<_>>(),
    );
    let (b, c) = (RatFunc::var(Sym::Pb), RatFunc::var(Sym::Pc));
    let diffeq: [(&str, Vec<RatFunc>, Vec<RatFunc>, usize); 3] = [
        ("1phi0", vec![a.clone()], vec![], 5),
        ("2phi1", vec![a.clone(), b.clone()], vec![c.clone()], 4),
        ("3phi2", vec![a.clone(), b.clone(), c.clone()], vec![RatFunc::var(Sym::X1), RatFunc::var(Sym::X2)], 4),
    ];
    for (name, tops, bottoms, order) in &diffeq {
        let r = hg_diffeq_residual(tops, bottoms, &q(), *order).map(|s| s.is_zero());
        out.push(Check::from_result(format!("q-difference equation of {name}"), r));
    }
    let binomial = bhs_series(std::slice::from_ref(&a), &[], &q(), 7).and_then(|lhs| {
        let rhs = euler_product(&a, &q(), 7)?.mul(&euler_inverse(&RatFunc::one(), &q(), 7)?);
        Ok(lhs == rhs)
    });
    out.push(Check::from_result("q-binomial theorem to order 7", binomial));

    let (qq, z) = (0.5, 1.3);
    let gamma = qgamma_num(z + 1.0, qq).and_then(|a| Ok(a / qgamma_num(z, qq)?));
    out.push(Check::from_residual(
        "gamma_q recurrence",
        gamma.map(|r| (r / ((1.0 - qq.powf(z)) / (1.0 - qq)) - 1.0).abs()),
        1e-12,
    ));
    let beta = qbeta_num(1.0, 2.0, qq)
        .and_then(|b| Ok(b / (qgamma_num(1.0, qq)? * qgamma_num(2.0, qq)? / qgamma_num(3.0, qq)?)));
    out.push(Check::from_residual("beta_q against gamma_q", beta.map(|r| (r - 1.0).abs()), 1e-12));
    let jackson = qint_num(|_| Complex64::new(1.0, 0.0), qq);
    out.push(Check::from_residual("jackson integral of 1", jackson.map(|v| (v - 1.0).norm()), 1e-14));
    out.push(Check::from_residual("Li2(1) = pi^2/6", dilog_num(1.0).map(|v| (v - PI * PI / 6.0).abs()), 1e-12));
    let l2 = 2f64.ln();
    out.push(Check::from_residual(
        "Li2(1/2)",
        dilog_num(0.5).map(|v| (v - (PI * PI / 12.0 - 0.5 * l2 * l2)).abs()),
        1e-12,
    ));
    let ratio = asympt_dilog_check(0.3, 0.01).and_then(|a| Ok(a / asympt_dilog_check(0.3, 0.005)?));
    out.push(Check::from_residual("dilogarithm asymptotics are first order", ratio.map(|r| (r / 2.0 - 1.0).abs()), 0.15));
    out
}

pub fn appendix_b() -> Vec<Check> {
    let mut out = Vec::new();
    match mab_identity_checks() {
        Ok(r) => {
            out.push(Check::exact("kernel shift identity", r.kernel_shift));
            out.push(Check::exact("closed action agrees with basis expansion", r.basis_action));
            for (alpha, res) in &r.xi_sums {
                out.push(Check::exact(format!("xi sum at alpha={alpha}"), res.is_zero()));
            }
            out.push(Check::exact("inversion composes to identity", r.inversion));
        }
        Err(e) => out.push(Check::error("kernel family identities", e)),
    }
    let xi: Vec<Check> = (1..=3u32)
        .into_par_iter()
        .map(|m| Check::from_result(format!("xi sum recomputed at alpha=-{m}"), xi_sum_residual(m).map(|r| r.is_zero())))
        .collect();
    out.extend(xi);
    let b = RatFunc::var(Sym::B);
    let r = RatFunc::var(Sym::R);
    for nu in 0..=3 {
        let f = pair_poch(&(&b * &r), Sym::T1, nu);
        out.push(Check::from_result(format!("inversion on p_{nu}"), inversion_round_trip(&f)));
    }
    out
}

pub fn numeric(q: f64, g: f64, grid: usize) -> Vec<Check> {
    let opts = SuiteOptions { q, g, grid, torus: TORUS_NODES };
    match numeric_suite(&opts) {
        Ok(cs) => cs.into_iter().map(|c| Check::within(c.name, c.residual, c.tolerance)).collect(),
        Err(e) => vec![Check::error("numeric suite", e)],
    }
}
