//! Pointwise verification of the transformation laws, with JSON-serializable
//! residual reports.
//!
//! Checks available through [`TransformCheck`]:
//! - `MShift` / `MInversion`: the z ↦ z+1 defect formula and the exact
//!   z ↦ −1/(t²z) invariance of the completed object M_{−2k,t}
//! - `HStarShift` / `HStarInversion`: the eta-quotient H* laws, the inversion
//!   defect being Ψ_{−2k}(z)/η(−1/z)
//! - `Berndt`: the classical inversion law for ℰ_{−2k}
//! - `CocyclePairwise`: agreement of the three cocycle representations
//! - `E0Inversion` / `ENegInversion`: inversion laws of the two completions
//! - `E0Laplacian` / `ENegLaplacian`: finite-difference Laplacian images
//!   (−3/π and 0 respectively)

use num::complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::modular::cocycle::{cocycle_contour, cocycle_double_sum, cocycle_eichler_diff};
use crate::modular::eval::{
    eichler_value, eta_value, h_star_value, m_value, maass_e0, maass_e_neg, period_poly_coeffs,
    psi_value,
};
use crate::modular::laplacian::{laplacian_fd, DEFAULT_FD_STEP};
use crate::modular::point::UpperHalfPoint;
use crate::rat::{rat_pow, rat_to_f64};
use crate::special::zeta_int;

/// 12-significant-digit decimal rendering, deterministic across runs.
pub fn fmt_f64(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..=11).contains(&exp) {
        let prec = (11 - exp).max(0) as usize;
        let s = format!("{v:.prec$}");
        // trim trailing zeros but keep at least one digit after the point
        if s.contains('.') {
            let t = s.trim_end_matches('0').trim_end_matches('.');
            t.to_string()
        } else {
            s
        }
    } else {
        format!("{v:.11e}")
    }
}

/// Complex values as `a+bi` / `a-bi` with [`fmt_f64`] components.
pub fn fmt_complex(v: Complex64) -> String {
    if v.im == 0.0 {
        return fmt_f64(v.re);
    }
    if v.re == 0.0 {
        return format!("{}i", fmt_f64(v.im));
    }
    if v.im < 0.0 {
        format!("{}-{}i", fmt_f64(v.re), fmt_f64(-v.im))
    } else {
        format!("{}+{}i", fmt_f64(v.re), fmt_f64(v.im))
    }
}

/// One evaluation site of a transformation check.
#[derive(Debug, Clone)]
pub struct PointResidual {
    pub z: Complex64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
}

impl Serialize for PointResidual {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PointResidual", 4)?;
        st.serialize_field("z", &fmt_complex(self.z))?;
        st.serialize_field("lhs", &fmt_complex(self.lhs))?;
        st.serialize_field("rhs", &fmt_complex(self.rhs))?;
        st.serialize_field("residual", &self.residual)?;
        st.end()
    }
}

/// Residual report for one identity over a set of points.
#[derive(Debug, Clone, Serialize)]
pub struct TransformReport {
    pub identity: String,
    pub params: std::collections::BTreeMap<String, String>,
    pub points: Vec<PointResidual>,
    pub tol: f64,
    pub pass: bool,
}

impl TransformReport {
    pub fn max_residual(&self) -> f64 {
        self.points.iter().map(|p| p.residual).fold(0.0, f64::max)
    }
}

/// A transformation identity to check pointwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformCheck {
    /// M_{−2k,t}(z+1) − M_{−2k,t}(z) against the explicit Laurent polynomial.
    MShift { k: u32, t: u32 },
    /// M_{−2k,t}(z) = (tz)^{2k} M_{−2k,t}(−1/(t²z)).
    MInversion { k: u32, t: u32 },
    /// H*(z+1) = e^{−πi/12} H*(z).
    HStarShift { k: u32 },
    /// H*(−1/z) − z^{−2k}(−iz)^{−1/2} H*(z) = Ψ_{−2k}(z)/η(−1/z).
    HStarInversion { k: u32 },
    /// ℰ_{−2k}(z) − z^{2k}ℰ_{−2k}(−1/z) + (1/2)(1−z^{2k})ζ(2k+1) + P_{−2k}(z) = 0.
    Berndt { k: u32 },
    /// Pairwise agreement of the three cocycle routes (lhs = Lambert route,
    /// rhs = contour route; residual = max pairwise distance of all three).
    CocyclePairwise { a: i32 },
    /// Weight-zero completion: F(z) = F(−1/z) at t = 1.
    E0Inversion,
    /// Weight-zero completion is invariant under z ↦ z+1 (any t; the only
    /// group check available beyond the inversion for level t > 1).
    E0Shift { t: u32 },
    /// Weight 2−2k completion: F(−1/z) = z^{2−2k} F(z) at t = 1.
    ENegInversion { k: u32 },
    /// Weight 2−2k completion is invariant under z ↦ z+1 (any t).
    ENegShift { k: u32, t: u32 },
    /// Finite-difference Δ_0 image equals −3/π.
    E0Laplacian { t: u32 },
    /// Finite-difference Δ_{2−2k} image vanishes.
    ENegLaplacian { k: u32, t: u32 },
}

impl TransformCheck {
    pub fn identity_name(&self) -> &'static str {
        match self {
            TransformCheck::MShift { .. } => "m-shift",
            TransformCheck::MInversion { .. } => "m-inversion",
            TransformCheck::HStarShift { .. } => "hstar-shift",
            TransformCheck::HStarInversion { .. } => "hstar-inversion",
            TransformCheck::Berndt { .. } => "berndt",
            TransformCheck::CocyclePairwise { .. } => "cocycle-pairwise",
            TransformCheck::E0Inversion => "e0-inversion",
            TransformCheck::E0Shift { .. } => "e0-shift",
            TransformCheck::ENegInversion { .. } => "eneg-inversion",
            TransformCheck::ENegShift { .. } => "eneg-shift",
            TransformCheck::E0Laplacian { .. } => "e0-laplacian",
            TransformCheck::ENegLaplacian { .. } => "eneg-laplacian",
        }
    }

    fn params(&self) -> std::collections::BTreeMap<String, String> {
        let mut m = std::collections::BTreeMap::new();
        match *self {
            TransformCheck::MShift { k, t } | TransformCheck::MInversion { k, t } => {
                m.insert("k".into(), k.to_string());
                m.insert("t".into(), t.to_string());
            }
            TransformCheck::HStarShift { k }
            | TransformCheck::HStarInversion { k }
            | TransformCheck::Berndt { k }
            | TransformCheck::ENegInversion { k } => {
                m.insert("k".into(), k.to_string());
            }
            TransformCheck::CocyclePairwise { a } => {
                m.insert("a".into(), a.to_string());
            }
            TransformCheck::E0Laplacian { t } | TransformCheck::E0Shift { t } => {
                m.insert("t".into(), t.to_string());
            }
            TransformCheck::ENegLaplacian { k, t } | TransformCheck::ENegShift { k, t } => {
                m.insert("k".into(), k.to_string());
                m.insert("t".into(), t.to_string());
            }
            TransformCheck::E0Inversion => {}
        }
        m
    }

    /// Evaluate both sides at one point.
    fn sides(&self, z: UpperHalfPoint) -> Result<(Complex64, Complex64, f64)> {
        match *self {
            TransformCheck::MShift { k, t } => {
                let lhs = m_value(k, t, z.translated(1.0))? - m_value(k, t, z)?;
                let rhs = m_shift_defect(k, t, z.to_complex())?;
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::MInversion { k, t } => {
                let lhs = m_value(k, t, z)?;
                let w = z.to_complex();
                let image = -((t as f64) * (t as f64) * w).inv();
                let rhs = (w * t as f64).powi(2 * k as i32)
                    * m_value(k, t, UpperHalfPoint::from_complex(image)?)?;
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::HStarShift { k } => {
                let lhs = h_star_value(k, z.translated(1.0))?;
                let rhs =
                    Complex64::from_polar(1.0, -std::f64::consts::PI / 12.0) * h_star_value(k, z)?;
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::HStarInversion { k } => {
                let w = z.to_complex();
                let root = (-Complex64::new(0.0, 1.0) * w).sqrt(); // principal √(−iz)
                let lhs = h_star_value(k, z.inverted())?
                    - h_star_value(k, z)? / (w.powi(2 * k as i32) * root);
                let rhs = psi_value(k, w)? / eta_value(z.inverted())?;
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::Berndt { k } => {
                let w = z.to_complex();
                let lhs = eichler_value(2 * k as i32 + 2, z)?
                    - w.powi(2 * k as i32) * eichler_value(2 * k as i32 + 2, z.inverted())?;
                let zeta_odd = zeta_int(2 * k as i64 + 1)?.to_f64();
                let rhs = -0.5 * (1.0 - w.powi(2 * k as i32)) * zeta_odd
                    - crate::modular::eval::period_poly(k, w)?;
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::CocyclePairwise { a } => {
                let e = cocycle_eichler_diff(a, z)?;
                let d = cocycle_double_sum(a, z.to_complex())?;
                let c = cocycle_contour(a, z.to_complex())?;
                let residual = (e - d).norm().max((e - c).norm()).max((d - c).norm());
                Ok((e, c, residual))
            }
            TransformCheck::E0Inversion => {
                let lhs = Complex64::new(maass_e0(1, z)?, 0.0);
                let rhs = Complex64::new(maass_e0(1, z.inverted())?, 0.0);
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::E0Shift { t } => {
                let lhs = Complex64::new(maass_e0(t, z.translated(1.0))?, 0.0);
                let rhs = Complex64::new(maass_e0(t, z)?, 0.0);
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::ENegShift { k, t } => {
                let lhs = maass_e_neg(k, t, z.translated(1.0))?;
                let rhs = maass_e_neg(k, t, z)?;
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::ENegInversion { k } => {
                let lhs = maass_e_neg(k, 1, z.inverted())?;
                let rhs = z.to_complex().powi(2 - 2 * k as i32) * maass_e_neg(k, 1, z)?;
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::E0Laplacian { t } => {
                let f = move |w: UpperHalfPoint| maass_e0(t, w).map(|v| Complex64::new(v, 0.0));
                let lhs = laplacian_fd(0, &f, z, DEFAULT_FD_STEP)?;
                let rhs = Complex64::new(-3.0 / std::f64::consts::PI, 0.0);
                Ok((lhs, rhs, (lhs - rhs).norm()))
            }
            TransformCheck::ENegLaplacian { k, t } => {
                let f = move |w: UpperHalfPoint| maass_e_neg(k, t, w);
                let lhs = laplacian_fd(2 - 2 * k as i32, &f, z, DEFAULT_FD_STEP)?;
                Ok((lhs, Complex64::ZERO, lhs.norm()))
            }
        }
    }
}

/// The explicit z ↦ z+1 defect of M_{−2k,t}:
/// (1/2)[P_{−2k}(tz+t) − P_{−2k}(tz)], expanded with exact rational
/// coefficients. The m ≥ 1 pieces are the binomial polynomials
/// Σ_r C(2m−1,r) z^{2m−1−r}; the m = 0 piece is the closed form
/// (z+1)^{−1} − z^{−1} (its binomial series only converges for |z| > 1).
pub fn m_shift_defect(k: u32, t: u32, z: Complex64) -> Result<Complex64> {
    let coeffs = period_poly_coeffs(k)?;
    let mut sum = Complex64::ZERO;
    for (m, c) in coeffs.iter().enumerate() {
        let tpow = rat_to_f64(&rat_pow(t as i64, 2 * m as i32 - 1));
        let diff = if m == 0 {
            (z + 1.0).inv() - z.inv()
        } else {
            // (z+1)^{2m−1} − z^{2m−1}, binomial-expanded exactly
            let mut d = Complex64::ZERO;
            let deg = 2 * m - 1;
            for r in 1..=deg {
                let binom = rat_to_f64(&crate::rat::Rat::from_integer(crate::rat::binomial_big(
                    deg as u64, r as u64,
                )));
                d += binom * z.powi((deg - r) as i32);
            }
            d
        };
        sum += rat_to_f64(c) * tpow * diff;
    }
    // −(1/4)(2πi)^{2k+1}; the +P/2 normalization of M flips the printed sign
    let mag = (2.0 * std::f64::consts::PI).powi(2 * k as i32 + 1);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let prefactor = Complex64::new(0.0, -0.25 * sign * mag);
    Ok(prefactor * sum)
}

/// Evaluate a check at each point; pass iff every residual is below `tol`.
/// Points are visited in sorted order (by x, then y) so reports are
/// byte-reproducible regardless of input order.
pub fn verify_transformations(
    check: TransformCheck,
    points: &[UpperHalfPoint],
    tol: f64,
) -> Result<TransformReport> {
    let mut pts: Vec<UpperHalfPoint> = points.to_vec();
    pts.sort_by(|a, b| {
        (a.x(), a.y())
            .partial_cmp(&(b.x(), b.y()))
            .expect("points are finite")
    });
    let mut out = Vec::with_capacity(pts.len());
    for z in pts {
        let (lhs, rhs, residual) = check.sides(z)?;
        out.push(PointResidual {
            z: z.to_complex(),
            lhs,
            rhs,
            residual,
        });
    }
    let pass = out.iter().all(|p| p.residual < tol);
    Ok(TransformReport {
        identity: check.identity_name().to_string(),
        params: check.params(),
        points: out,
        tol,
        pass,
    })
}

/// Five generic evaluation sites with y ∈ [0.4, 3], chosen so every
/// transformed image (−1/z, −1/(t²z) for t ≤ 2, z+1) stays above the
/// evaluation floor.
pub fn generic_grid() -> Vec<UpperHalfPoint> {
    [
        (0.21, 0.83),
        (-0.37, 0.54),
        (0.13, 1.10),
        (0.41, 0.47),
        (-0.29, 2.20),
    ]
    .into_iter()
    .map(|(x, y)| UpperHalfPoint::new(x, y).expect("static points are valid"))
    .collect()
}

/// The four cocycle comparison sites.
pub fn cocycle_grid() -> Vec<UpperHalfPoint> {
    [(0.0, 1.0), (1.0, 1.0), (0.0, 0.5), (1.0 / 3.0, 2.0 / 3.0)]
        .into_iter()
        .map(|(x, y)| UpperHalfPoint::new(x, y).expect("static points are valid"))
        .collect()
}
