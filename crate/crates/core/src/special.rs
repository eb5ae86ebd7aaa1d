//! Scalar special functions: exact Bernoulli numbers and integer zeta values,
//! floating Gamma, Hurwitz zeta, the normalized incomplete Gamma, and the
//! handful of named constants the analytic formulas need.
//!
//! Conventions. Bernoulli numbers use B_1 = −1/2; every formula that is
//! sensitive to that choice is routed through [`zeta_int`] (with ζ(0) = −1/2
//! hardcoded), so no caller ever touches B_1 directly.

use std::f64::consts::PI;
use std::sync::Mutex;
use std::sync::OnceLock;

use num::complex::Complex64;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{binomial_big, rat, rat_int, rat_to_f64, Rat};

/// Largest Bernoulli index kept exact.
pub const BERNOULLI_CAP: usize = 200;

fn bernoulli_cache() -> &'static Mutex<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![rat_int(1)]))
}

/// Exact Bernoulli number B_n (B_1 = −1/2), from the defining recurrence
/// Σ_{j=0}^{n} C(n+1,j) B_j = 0. Values are memoized in a write-once table.
pub fn bernoulli(n: usize) -> Result<Rat> {
    if n > BERNOULLI_CAP {
        return Err(Error::ResourceLimit(format!(
            "Bernoulli index {n} exceeds cap {BERNOULLI_CAP}"
        )));
    }
    let mut cache = bernoulli_cache().lock().expect("bernoulli cache poisoned");
    while cache.len() <= n {
        let m = cache.len(); // compute B_m
        if m >= 3 && m % 2 == 1 {
            cache.push(Rat::zero());
            continue;
        }
        let mut acc = Rat::zero();
        for (j, b) in cache.iter().enumerate() {
            if !b.is_zero() {
                acc += Rat::from_integer(binomial_big((m + 1) as u64, j as u64)) * b;
            }
        }
        let value = -acc / Rat::from_integer(((m + 1) as u64).into());
        cache.push(value);
    }
    Ok(cache[n].clone())
}

/// A zeta value at an integer argument, kept symbolic where it is exact.
#[derive(Debug, Clone, PartialEq)]
pub enum ZetaValue {
    /// Exact rational (nonpositive arguments).
    Rational(Rat),
    /// Exact rational multiple of π^power (positive even arguments).
    PiPower { coeff: Rat, power: u32 },
    /// Double-precision value (positive odd arguments), |error| < 1e−14.
    Numeric(f64),
}

impl ZetaValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ZetaValue::Rational(r) => rat_to_f64(r),
            ZetaValue::PiPower { coeff, power } => rat_to_f64(coeff) * PI.powi(*power as i32),
            ZetaValue::Numeric(v) => *v,
        }
    }
}

/// ζ(s) at integer s ≠ 1. Exact rational for s ≤ 0 via ζ(−n) = −B_{n+1}/(n+1)
/// (ζ(0) = −1/2 explicitly); exact rational multiple of π^s for even s ≥ 2;
/// Euler–Maclaurin numeric for odd s ≥ 3.
pub fn zeta_int(s: i64) -> Result<ZetaValue> {
    if s == 1 {
        return Err(Error::Domain("zeta has a pole at s = 1".into()));
    }
    if s <= 0 {
        if s == 0 {
            return Ok(ZetaValue::Rational(rat(-1, 2)));
        }
        let n = (-s) as usize;
        let b = bernoulli(n + 1)?;
        return Ok(ZetaValue::Rational(-b / rat_int((n + 1) as i64)));
    }
    if s % 2 == 0 {
        // ζ(2m) = (−1)^{m+1} B_{2m} (2π)^{2m} / (2 (2m)!)
        let m = (s / 2) as usize;
        let b = bernoulli(2 * m)?;
        let sign = if m % 2 == 1 { rat_int(1) } else { rat_int(-1) };
        let mut fact = Rat::one();
        for i in 1..=2 * m {
            fact *= rat_int(i as i64);
        }
        let two_pow = crate::rat::rat_pow(2, (2 * m) as i32);
        let coeff = sign * b * two_pow / (rat_int(2) * fact);
        return Ok(ZetaValue::PiPower {
            coeff,
            power: s as u32,
        });
    }
    Ok(ZetaValue::Numeric(zeta_real_em(s as f64)))
}

/// Plain summation to n = 10^4 with a 4-term Euler–Maclaurin tail; absolute
/// error far below 1e−14 for s ≥ 3.
fn zeta_real_em(s: f64) -> f64 {
    let m = 10_000u64;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for n in (1..m).rev() {
        // Kahan compensation; terms ascend in this order
        let term = (n as f64).powf(-s);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let mf = m as f64;
    let tail = mf.powf(1.0 - s) / (s - 1.0) + 0.5 * mf.powf(-s) + em_corrections_real(s, mf, 4);
    sum + tail
}

/// Σ_{j=1..terms} B_{2j}/(2j)! · s(s+1)…(s+2j−2) · M^{−s−2j+1}.
fn em_corrections_real(s: f64, m: f64, terms: usize) -> f64 {
    let mut total = 0.0;
    let mut poch = s; // s(s+1)...(s+2j−2), starts as (s) for j=1
    for j in 1..=terms {
        let b = rat_to_f64(&bernoulli(2 * j).expect("small index"));
        let fact: f64 = (1..=2 * j).map(|i| i as f64).product();
        total += b / fact * poch * m.powf(-s - 2.0 * j as f64 + 1.0);
        poch *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
    }
    total
}

/// Hurwitz zeta ζ(s, w) = Σ_{n≥0} (w+n)^{−s} for integer s ≥ 2 and Re(w) > 0,
/// absolute error < 1e−12: direct terms until |w+L| is comfortably large,
/// then an Euler–Maclaurin tail.
pub fn hurwitz_zeta(s: i64, w: Complex64) -> Result<Complex64> {
    if s < 2 {
        return Err(Error::Domain(format!(
            "hurwitz zeta needs integer s >= 2, got {s}"
        )));
    }
    if w.re <= 0.0 {
        return Err(Error::Domain(format!(
            "hurwitz zeta needs Re(w) > 0, got {w}"
        )));
    }
    Ok(hurwitz_zeta_shifted(s, w))
}

/// Internal variant without the right-half-plane restriction: any w with
/// w + n ≠ 0 for all n ≥ 0 works, since s is an integer (no branch cuts).
pub(crate) fn hurwitz_zeta_shifted(s: i64, w: Complex64) -> Complex64 {
    // Walk right until |w+L| ≥ A, then Euler–Maclaurin with J = 6 pairs.
    let a_radius = 30.0f64.max(2.0 * s as f64);
    let mut sum = Complex64::ZERO;
    let mut l = 0u64;
    loop {
        let wl = w + l as f64;
        if wl.norm() >= a_radius {
            break;
        }
        sum += wl.powi(-(s as i32));
        l += 1;
        if l > 10_000_000 {
            break; // unreachable for sane inputs; |w+n| grows with n
        }
    }
    let wl = w + l as f64;
    // ∫ + 1/2-term + Bernoulli corrections
    let mut tail = wl.powi(-(s as i32) + 1) / (s as f64 - 1.0) + 0.5 * wl.powi(-(s as i32));
    let mut poch = s as f64;
    for j in 1..=6usize {
        let b = rat_to_f64(&bernoulli(2 * j).expect("small index"));
        let fact: f64 = (1..=2 * j).map(|i| i as f64).product();
        tail += b / fact * poch * wl.powi(-(s as i32) - 2 * j as i32 + 1);
        poch *= (s as f64 + 2.0 * j as f64 - 1.0) * (s as f64 + 2.0 * j as f64);
    }
    sum + tail
}

/// Riemann zeta on the half plane Re(s) ≥ 1.25 for complex s, by the same
/// Euler–Maclaurin scheme with a cutoff that scales with |Im s|.
pub(crate) fn zeta_complex(s: Complex64) -> Complex64 {
    let m = (30.0 + 1.5 * s.im.abs()).ceil() as u64;
    let mut sum = Complex64::new(1.0, 0.0); // n = 1 term
    for n in 2..m {
        sum += (-s * (n as f64).ln()).exp();
    }
    let mf = m as f64;
    let mpow = (-s * mf.ln()).exp(); // M^{−s}
    let mut tail = mpow * mf / (s - 1.0) + 0.5 * mpow;
    let mut poch = s;
    for j in 1..=8usize {
        let b = rat_to_f64(&bernoulli(2 * j).expect("small index"));
        let fact: f64 = (1..=2 * j).map(|i| i as f64).product();
        tail += mpow * poch * (b / fact) * mf.powi(1 - 2 * j as i32);
        poch = poch * (s + (2.0 * j as f64 - 1.0)) * (s + 2.0 * j as f64);
    }
    sum + tail
}

/// ln Γ(x) for x > 0: Stirling with Bernoulli corrections at y ≥ 20, pulled
/// down by the recurrence Γ(x+1) = xΓ(x).
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma needs x > 0, got {x}")));
    }
    let shift = if x < 20.0 {
        (20.0 - x).ceil() as usize
    } else {
        0
    };
    let y = x + shift as f64;
    let mut ln_g = (y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln();
    for j in 1..=8usize {
        let b = rat_to_f64(&bernoulli(2 * j).expect("small index"));
        ln_g += b / ((2 * j * (2 * j - 1)) as f64 * y.powi(2 * j as i32 - 1));
    }
    for i in 0..shift {
        ln_g -= (x + i as f64).ln();
    }
    Ok(ln_g)
}

/// Γ(x) on (0, 100], relative error < 1e−12.
pub fn gamma_real(x: f64) -> Result<f64> {
    if !(0.0..=100.0).contains(&x) || x == 0.0 {
        return Err(Error::Domain(format!(
            "gamma_real domain is (0, 100], got {x}"
        )));
    }
    Ok(ln_gamma_real(x)?.exp())
}

/// Γ*(n, x) = Γ(n,x)/Γ(n) = e^{−x} Σ_{j<n} x^j/j! for integer n ≥ 1, x > 0.
pub fn incomplete_gamma_star(n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("incomplete_gamma_star needs n >= 1".into()));
    }
    if x <= 0.0 {
        return Err(Error::Domain(format!(
            "incomplete_gamma_star needs x > 0, got {x}"
        )));
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for j in 1..n {
        term *= x / j as f64;
        sum += term;
    }
    if x < 700.0 {
        Ok((-x).exp() * sum)
    } else {
        Ok((sum.ln() - x).exp())
    }
}

/// The named constants appearing in the weight-zero expansion.
#[derive(Debug, Clone, Copy)]
pub struct Constants {
    pub euler_gamma: f64,
    /// ζ'(2) = −Σ ln(n)/n².
    pub zeta_prime_2: f64,
    pub log2: f64,
    pub pi: f64,
}

/// γ, ζ'(2), ln 2, π — computed once, each with |error| ≤ 1e−12.
pub fn named_constants() -> Constants {
    static CONSTANTS: OnceLock<Constants> = OnceLock::new();
    *CONSTANTS.get_or_init(|| Constants {
        euler_gamma: euler_gamma_em(),
        zeta_prime_2: zeta_prime_2_em(),
        log2: std::f64::consts::LN_2,
        pi: PI,
    })
}

/// γ = H_M − ln M − 1/(2M) + 1/(12M²) − 1/(120M⁴) + 1/(252M⁶) − …
fn euler_gamma_em() -> f64 {
    let m = 1000u64;
    let mut h = 0.0f64;
    let mut comp = 0.0f64;
    for n in (1..=m).rev() {
        let term = 1.0 / n as f64;
        let y = term - comp;
        let t = h + y;
        comp = (t - h) - y;
        h = t;
    }
    let mf = m as f64;
    h - mf.ln() - 0.5 / mf + 1.0 / (12.0 * mf * mf) - 1.0 / (120.0 * mf.powi(4))
        + 1.0 / (252.0 * mf.powi(6))
}

/// ζ'(2) = −[Σ_{n<M} ln n/n² + (ln M+1)/M + ln M/(2M²) − (1−2ln M)/(12M³)
///          + (26−24 ln M)/(720 M⁵)], M = 10⁴.
fn zeta_prime_2_em() -> f64 {
    let m = 10_000u64;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for n in (2..m).rev() {
        let nf = n as f64;
        let term = nf.ln() / (nf * nf);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let mf = m as f64;
    let lnm = mf.ln();
    let tail = (lnm + 1.0) / mf + lnm / (2.0 * mf * mf) - (1.0 - 2.0 * lnm) / (12.0 * mf.powi(3))
        + (26.0 - 24.0 * lnm) / (720.0 * mf.powi(5));
    -(sum + tail)
}
