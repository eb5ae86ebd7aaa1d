//! Points of the upper half plane and the crate's branch conventions.
//!
//! Branch conventions, all in one place:
//! - fractional powers of q are evaluated as q^c := exp(2πi·c·z), which is
//!   entire in z and restricts to the principal branch on the positive
//!   imaginary axis; this is what makes F(z+1) = e^{2πi·c}F(z) hold exactly
//!   for a series with offset c
//! - z^{−s} in contour integrands is exp(−s·Log z) with the principal Log
//! - √(−iz) and √Ω use the principal square root (positive real on the
//!   positive reals; √(−iz) is +1 at z = i)

use num::complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::rat::{rat_to_f64, Rat};

/// Default lower bound on Im(z); below it |q| > 0.73 and double-precision
/// truncation orders explode, so evaluation refuses rather than degrade.
pub const DEFAULT_Y_FLOOR: f64 = 0.05;

/// A point z = x + iy with y > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint {
    x: f64,
    y: f64,
}

impl UpperHalfPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(Error::Domain(format!(
                "point {x}+{y}i is not in the upper half plane"
            )));
        }
        Ok(UpperHalfPoint { x, y })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    /// Enforce a floor on Im(z) (see [`DEFAULT_Y_FLOOR`]).
    pub fn require_y_at_least(&self, floor: f64) -> Result<()> {
        if self.y < floor {
            return Err(Error::Domain(format!(
                "Im(z) = {} is below the evaluation floor {floor}",
                self.y
            )));
        }
        Ok(())
    }

    /// q = e^{2πiz}; |q| = e^{−2πy} < 1.
    pub fn q(&self) -> Complex64 {
        self.q_pow_f(1.0)
    }

    /// q^c = exp(2πi·c·z) for real c (entire in z; see module docs).
    pub fn q_pow_f(&self, c: f64) -> Complex64 {
        let mag = (-TAU * c * self.y).exp();
        let phase = TAU * c * self.x;
        Complex64::from_polar(mag, phase)
    }

    /// q^c for an exact rational exponent (series offsets).
    pub fn q_pow(&self, c: &Rat) -> Complex64 {
        self.q_pow_f(rat_to_f64(c))
    }

    /// The S-image −1/z, still in the upper half plane.
    pub fn inverted(&self) -> UpperHalfPoint {
        let w = -(self.to_complex().inv());
        UpperHalfPoint { x: w.re, y: w.im }
    }

    /// z + d for real d.
    pub fn translated(&self, d: f64) -> UpperHalfPoint {
        UpperHalfPoint {
            x: self.x + d,
            y: self.y,
        }
    }

    /// t·z for a positive integer t.
    pub fn scaled(&self, t: u32) -> UpperHalfPoint {
        UpperHalfPoint {
            x: self.x * t as f64,
            y: self.y * t as f64,
        }
    }
}

impl std::fmt::Display for UpperHalfPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.x == 0.0 {
            write!(f, "{}i", self.y)
        } else if self.y >= 0.0 {
            write!(f, "{}+{}i", self.x, self.y)
        } else {
            write!(f, "{}{}i", self.x, self.y)
        }
    }
}
