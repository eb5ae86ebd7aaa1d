//! Three independent routes to the weight 2−a cocycle
//! ψ(z) = ℰ_{2−a}(z) − z^{a−2} ℰ_{2−a}(−1/z) for odd a ≤ −1:
//!
//! 1. [`cocycle_eichler_diff`]: both Eichler values through their Lambert
//!    forms (upper half plane only);
//! 2. [`cocycle_double_sum`]: the half-lattice sum 2Σ'_{m,n≥0}(mz+n)^{−k}
//!    with k = 2−a, assembled from Hurwitz zeta inner sums and normalized by
//!    (k−1)!/(−2πi)^k, which is the exact constant relating the lattice sum
//!    to ψ (Lipschitz summation);
//! 3. [`cocycle_contour`]: the Mellin–Barnes integral on Re(s) = k/2 plus the
//!    residue term Γ(k)ζ(k)(2π)^{−k}·i^k·(1+z^{−k}) contributed by the poles
//!    at s = 0 and s = k when the two Mellin pieces are moved to the common
//!    line. All three agree on the cut plane ∖ ℝ_{≤0} intersected with their
//!    respective domains.

use num::complex::Complex64;
use num::Zero;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::modular::eval::eichler_value;
use crate::modular::point::UpperHalfPoint;
use crate::special::{hurwitz_zeta_shifted, zeta_complex, zeta_int};

fn check_odd_negative(a: i32) -> Result<u32> {
    if a > -1 || a % 2 == 0 {
        return Err(Error::Domain(format!("need odd a <= -1, got {a}")));
    }
    Ok((2 - a) as u32) // k = 2−a, odd ≥ 3
}

/// ψ(z) by direct evaluation of the two Eichler integrals; z ∈ ℍ.
pub fn cocycle_eichler_diff(a: i32, z: UpperHalfPoint) -> Result<Complex64> {
    let k = check_odd_negative(a)? as i32;
    let e1 = eichler_value(a, z)?;
    let e2 = eichler_value(a, z.inverted())?;
    Ok(e1 - z.to_complex().powi(-k) * e2)
}

/// (−2πi)^k for odd k: magnitude (2π)^k, phase ∓i by k mod 4.
fn minus_two_pi_i_pow(k: u32) -> Complex64 {
    let mag = (2.0 * PI).powi(k as i32);
    match k % 4 {
        1 => Complex64::new(0.0, -mag),
        3 => Complex64::new(0.0, mag),
        _ => unreachable!("k is odd"),
    }
}

/// ψ(z) via the half-lattice double sum. Accepts any z off the closed
/// negative real axis whose multiples mz avoid the nonpositive integers;
/// the outer m-sum is Euler–Maclaurin accelerated.
pub fn cocycle_double_sum(a: i32, z: Complex64) -> Result<Complex64> {
    let k = check_odd_negative(a)?;
    if z.is_zero() || (z.im == 0.0 && z.re <= 0.0) {
        return Err(Error::Domain(
            "double sum needs z off the cut (-inf, 0]".into(),
        ));
    }
    let ks = k as i64;
    let kf = k as f64;
    let zeta_k = zeta_int(ks)?.to_f64();
    // 2Σ' = ζ(k)(1 + z^{−k}) + 2 Σ_{m≥1} ζ(k, mz+1)
    let m_cut = 400u32;
    let mut inner = Complex64::ZERO;
    for m in 1..m_cut {
        inner += hurwitz_zeta_shifted(ks, z * m as f64 + 1.0);
    }
    // Euler–Maclaurin tail over m, derivatives of g(x) = ζ(k, xz+1)
    let w = z * m_cut as f64 + 1.0;
    let g0 = hurwitz_zeta_shifted(ks, w);
    let integral = hurwitz_zeta_shifted(ks - 1, w) / ((kf - 1.0) * z);
    let g1 = -kf * z * hurwitz_zeta_shifted(ks + 1, w);
    let g3 = -kf * (kf + 1.0) * (kf + 2.0) * z.powi(3) * hurwitz_zeta_shifted(ks + 3, w);
    inner += integral + 0.5 * g0 - g1 / 12.0 + g3 / 720.0;

    let raw = zeta_k * (1.0 + z.powi(-(k as i32))) + 2.0 * inner;
    let factorial: f64 = (1..k as u64).map(|i| i as f64).product();
    Ok(raw * factorial / minus_two_pi_i_pow(k))
}

/// i^k for odd k.
fn i_pow(k: u32) -> Complex64 {
    match k % 4 {
        1 => Complex64::new(0.0, 1.0),
        3 => Complex64::new(0.0, -1.0),
        _ => unreachable!("k is odd"),
    }
}

/// ψ(z) via the vertical-line integral on Re(s) = k/2. Converges for
/// |Arg(z)| < π; arguments too close to the cut are rejected as
/// slow-convergence (the integrand decays like e^{−(π−|Arg z|)|Im s|}).
pub fn cocycle_contour(a: i32, z: Complex64) -> Result<Complex64> {
    let k = check_odd_negative(a)?;
    if z.is_zero() {
        return Err(Error::Domain("z = 0 is outside the cut plane".into()));
    }
    let arg = z.arg();
    let decay = PI - arg.abs();
    if decay < 0.1 {
        return Err(Error::SlowConvergence(format!(
            "Arg(z) = {arg:.4} is within 0.1 of the cut"
        )));
    }
    let c = k as f64 / 2.0;
    let log_z = z.ln(); // principal
                        // Γ(s)Γ(k−s)ζ(s)ζ(s−k+1)/((2π)^s sin(πs/2)) · z^{−s} rewritten by the
                        // zeta functional equation and Γ-reflection: only ζ on Re = k/2 remains.
    let sign = if ((k - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let prefactor = 2.0 * sign * (2.0 * PI).powi(-(k as i32)) * PI;
    let integrand = |u: f64| -> Complex64 {
        let s = Complex64::new(c, u);
        let mut poly = Complex64::new(1.0, 0.0);
        for j in 1..k {
            poly *= j as f64 - s;
        }
        let sin_pi_s = (Complex64::new(0.0, PI) * s).exp() - (Complex64::new(0.0, -PI) * s).exp();
        let sin_pi_s = sin_pi_s / Complex64::new(0.0, 2.0);
        prefactor * poly / sin_pi_s
            * zeta_complex(s)
            * zeta_complex(-s + k as f64)
            * (-s * log_z).exp()
    };
    // truncation height: e^{−decay·U}·(polynomial slack) < 1e−15
    let u_max = (36.0 + 2.0 * (k as f64) * 4.0) / decay;
    let step = 0.02;
    let n_steps = (2.0 * u_max / step).ceil() as usize;
    let n_steps = n_steps + (n_steps % 2); // Simpson needs an even count
    let h = 2.0 * u_max / n_steps as f64;
    let mut acc = integrand(-u_max) + integrand(u_max);
    for i in 1..n_steps {
        let u = -u_max + i as f64 * h;
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * integrand(u);
    }
    let integral = acc * (h / 3.0);
    let line_part = Complex64::new(0.0, 1.0) / (2.0 * PI) * integral;

    // residue term from the poles at s = 0 and s = k
    let factorial: f64 = (1..k as u64).map(|i| i as f64).product();
    let zeta_k = zeta_int(k as i64)?.to_f64();
    let correction =
        factorial * zeta_k * (2.0 * PI).powi(-(k as i32)) * i_pow(k) * (1.0 + z.powi(-(k as i32)));
    Ok(line_part + correction)
}
