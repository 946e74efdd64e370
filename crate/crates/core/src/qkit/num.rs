//! Double-precision q-analysis: infinite products, Γ_q, B_q, q-integrals and
//! the dilogarithm.

use crate::error::{Error, Result};
use alloc::format;
use core::f64::consts::PI;
use num_complex::Complex64;
use num_traits::Float;

/// Products and q-integrals stop once the next factor is below this scale.
pub const TRUNC: f64 = 1e-17;

fn check_q(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("q = {q} must lie in (0,1)")))
    }
}

/// `(a;q)_inf`, truncated once `|a| q^k < 1e-17`.
pub fn qpoch_inf_num(a: Complex64, q: f64) -> Result<Complex64> {
    check_q(q)?;
    let mut acc = Complex64::new(1.0, 0.0);
    let mut x = a;
    while x.norm() >= TRUNC {
        acc *= Complex64::new(1.0, 0.0) - x;
        x *= q;
    }
    Ok(acc)
}

/// `(a;q)_k` for any integer `k`.
pub fn qpoch_num(a: Complex64, q: f64, k: i64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    if k >= 0 {
        let mut acc = one;
        let mut x = a;
        for _ in 0..k {
            acc *= one - x;
            x *= q;
        }
        return Ok(acc);
    }
    let d = qpoch_num(a * q.powi(k as i32), q, -k)?;
    if d.norm() < 1e-300 {
        return Err(Error::ZeroPochhammer((-k) as usize));
    }
    Ok(one / d)
}

/// `Γ_q(z) = (q;q)_inf / ((q^z;q)_inf (1-q)^{z-1})`.
pub fn qgamma_num(z: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    let den = qpoch_inf_num(Complex64::new(q.powf(z), 0.0), q)?.re;
    if den.abs() < 1e-300 {
        return Err(Error::Domain(format!("Γ_q has a pole at z = {z}")));
    }
    Ok(qpoch_inf_num(Complex64::new(q, 0.0), q)?.re / den * (1.0 - q).powf(1.0 - z))
}

/// `B_q(a,b) = (1-q) (q, q^{a+b};q)_inf / (q^a, q^b;q)_inf`.
pub fn qbeta_num(a: f64, b: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    let p = |x: f64| qpoch_inf_num(Complex64::new(x, 0.0), q).map(|c| c.re);
    let den = p(q.powf(a))? * p(q.powf(b))?;
    if den.abs() < 1e-300 {
        return Err(Error::Domain(format!("B_q({a},{b}) is singular")));
    }
    Ok((1.0 - q) * p(q)? * p(q.powf(a + b))? / den)
}

/// `∫_0^1 f(t) d_q t = (1-q) sum_k f(q^k) q^k`.
///
/// Summation stops after three consecutive terms below `1e-17` relative to
/// the running sum; a sum that has not settled after 200 000 terms is an
/// error.
pub fn qint_num(f: impl Fn(f64) -> Complex64, q: f64) -> Result<Complex64> {
    check_q(q)?;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut qk = 1.0;
    let mut small = 0;
    for _ in 0..200_000 {
        let term = f(qk) * qk;
        if !term.re.is_finite() || !term.im.is_finite() {
            return Err(Error::Domain(format!("q-integrand is not finite at t = {qk}")));
        }
        acc += term;
        if term.norm() < TRUNC * acc.norm().max(1.0) {
            small += 1;
            if small == 3 {
                return Ok(acc * (1.0 - q));
            }
        } else {
            small = 0;
        }
        qk *= q;
    }
    Err(Error::Domain("q-integral does not converge".into()))
}

fn li2_series(z: f64) -> f64 {
    let mut acc = 0.0;
    let mut zk = z;
    let mut k = 1.0;
    while zk.abs() > 1e-18 * acc.abs().max(1e-300) && k < 400.0 {
        acc += zk / (k * k);
        zk *= z;
        k += 1.0;
    }
    acc
}

/// Real dilogarithm `Li_2(z)` for `z <= 1`.
pub fn dilog_num(z: f64) -> Result<f64> {
    if !(z <= 1.0) {
        return Err(Error::Domain(format!("Li_2({z}) requires z <= 1")));
    }
    if z == 1.0 {
        return Ok(PI * PI / 6.0);
    }
    if z.abs() <= 0.5 {
        return Ok(li2_series(z));
    }
    if z > 0.5 {
        // Li2(z) + Li2(1-z) = π²/6 - ln z ln(1-z)
        return Ok(PI * PI / 6.0 - z.ln() * (1.0 - z).ln() - li2_series(1.0 - z));
    }
    if z >= -1.0 {
        // Li2(z) + Li2(-z) = Li2(z²)/2, with z² in (0.25, 1]
        let z2 = z * z;
        return Ok(0.5 * dilog_num(z2)? - dilog_num(-z)?);
    }
    // z < -1: Li2(z) = -π²/6 - ln²(-z)/2 - Li2(1/z)
    let l = (-z).ln();
    Ok(-PI * PI / 6.0 - 0.5 * l * l - dilog_num(1.0 / z)?)
}

/// `B_n / (n+1)!` for the Bernoulli-number expansion of `Li_2` in `-ln(1-z)`.
fn bernoulli_weights() -> [f64; 40] {
    let mut b = [0.0f64; 40];
    b[0] = 1.0;
    for n in 1..40 {
        // B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k
        let mut s = 0.0;
        let mut binom = 1.0;
        for (k, bk) in b.iter().enumerate().take(n) {
            s += binom * bk;
            binom = binom * (n + 1 - k) as f64 / (k + 1) as f64;
        }
        b[n] = -s / (n + 1) as f64;
    }
    let mut fact = 1.0;
    let mut out = [0.0f64; 40];
    for n in 0..40 {
        fact *= (n + 1) as f64;
        out[n] = b[n] / fact;
    }
    out
}

/// Principal-branch complex dilogarithm.
pub fn li2_complex(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let zeta2 = Complex64::new(PI * PI / 6.0, 0.0);
    if z == one {
        return zeta2;
    }
    if z.norm() > 1.0 {
        // Li2(z) = -π²/6 - ln²(-z)/2 - Li2(1/z)
        let l = (-z).ln();
        return -zeta2 - l * l * 0.5 - li2_complex(one / z);
    }
    if z.re > 0.5 {
        return zeta2 - z.ln() * (one - z).ln() - li2_complex(one - z);
    }
    let u = -(one - z).ln();
    let w = bernoulli_weights();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut up = u;
    for (n, c) in w.iter().enumerate() {
        if n > 1 && n % 2 == 1 {
            up *= u;
            continue;
        }
        acc += up * *c;
        up *= u;
    }
    acc
}

/// `|ln (x;q)_inf + Li_2(x)/ħ - ln(1-x)/2|` at `q = e^{-ħ}`.
pub fn asympt_dilog_check(x: f64, hbar: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) || !(hbar > 0.0) {
        return Err(Error::Domain(format!("need x in (0,1) and ħ > 0, got x = {x}, ħ = {hbar}")));
    }
    let q = (-hbar).exp();
    let lhs = qpoch_inf_num(Complex64::new(x, 0.0), q)?.re.ln();
    Ok((lhs + dilog_num(x)? / hbar - 0.5 * (1.0 - x).ln()).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qgamma_recurrence() {
        let (q, z) = (0.5, 1.3);
        let r = qgamma_num(z + 1.0, q).unwrap() / qgamma_num(z, q).unwrap();
        let want = (1.0 - q.powf(z)) / (1.0 - q);
        assert!((r / want - 1.0).abs() < 1e-12);
    }

    #[test]
    fn qint_of_one() {
        let v = qint_num(|_| Complex64::new(1.0, 0.0), 0.5).unwrap();
        assert!((v.re - 1.0).abs() < 1e-14 && v.im == 0.0);
    }

    #[test]
    fn qbeta_two_routes() {
        let q = 0.5;
        let a = qbeta_num(1.0, 2.0, q).unwrap();
        let b = qgamma_num(1.0, q).unwrap() * qgamma_num(2.0, q).unwrap() / qgamma_num(3.0, q).unwrap();
        assert!((a / b - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dilog_values() {
        assert_eq!(dilog_num(0.0).unwrap(), 0.0);
        assert!((dilog_num(1.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        // Li2(1/2) = π²/12 - ln²2/2
        let l2 = 2f64.ln();
        assert!((dilog_num(0.5).unwrap() - (PI * PI / 12.0 - 0.5 * l2 * l2)).abs() < 1e-14);
        // Li2(-1) = -π²/12
        assert!((dilog_num(-1.0).unwrap() + PI * PI / 12.0).abs() < 1e-13);
        assert!(dilog_num(1.5).is_err());
    }

    #[test]
    fn complex_dilog_agrees_on_reals() {
        for &x in &[-3.0, -0.9, -0.3, 0.2, 0.45, 0.7, 0.95] {
            let c = li2_complex(Complex64::new(x, 0.0));
            assert!((c.re - dilog_num(x).unwrap()).abs() < 1e-12, "x = {x}");
            assert!(c.im.abs() < 1e-12);
        }
        // Li2(i) = -π²/48 + i G, G = Catalan's constant
        let v = li2_complex(Complex64::new(0.0, 1.0));
        assert!((v.re + PI * PI / 48.0).abs() < 1e-12);
        assert!((v.im - 0.915_965_594_177_219).abs() < 1e-12);
    }

    #[test]
    fn asymptotics_scale_linearly() {
        let d1 = asympt_dilog_check(0.3, 0.01).unwrap();
        let d2 = asympt_dilog_check(0.3, 0.005).unwrap();
        assert!((d1 / d2 - 2.0).abs() < 0.3);
    }
}
