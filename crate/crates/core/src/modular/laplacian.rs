//! Finite-difference weight-k hyperbolic Laplacian
//! Δ_k = −y²(∂²_x + ∂²_y) + iky(∂_x + i∂_y), on a 5-point central stencil.

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::modular::point::UpperHalfPoint;

/// Default stencil step; combined truncation + roundoff error ≈ 1e−4 for
/// smooth O(1) inputs.
pub const DEFAULT_FD_STEP: f64 = 1e-3;

/// Apply Δ_k to `f` at `z` by second-order central differences with step `h`.
/// The whole stencil must stay in the upper half plane.
pub fn laplacian_fd(
    weight: i32,
    f: &dyn Fn(UpperHalfPoint) -> Result<Complex64>,
    z: UpperHalfPoint,
    h: f64,
) -> Result<Complex64> {
    if !(h > 0.0) {
        return Err(Error::Domain("step h must be positive".into()));
    }
    if z.y() - h <= 0.0 {
        return Err(Error::Domain(format!(
            "stencil at {z} with h = {h} leaves the upper half plane"
        )));
    }
    let x = z.x();
    let y = z.y();
    let at = |x: f64, y: f64| -> Result<Complex64> { f(UpperHalfPoint::new(x, y)?) };
    let f0 = at(x, y)?;
    let fxp = at(x + h, y)?;
    let fxm = at(x - h, y)?;
    let fyp = at(x, y + h)?;
    let fym = at(x, y - h)?;
    let h2 = h * h;
    let fxx = (fxp - 2.0 * f0 + fxm) / h2;
    let fyy = (fyp - 2.0 * f0 + fym) / h2;
    let fx = (fxp - fxm) / (2.0 * h);
    let fy = (fyp - fym) / (2.0 * h);
    let i = Complex64::new(0.0, 1.0);
    Ok(-y * y * (fxx + fyy) + i * (weight as f64) * y * (fx + i * fy))
}
