//! Dense univariate polynomials over exact rationals.
//!
//! One type serves both formal parameters that appear as series coefficients:
//! the α of the hook products D_α / η^α, and the x of the bivariate hook
//! generating function. Trailing zeros are always trimmed, so equality is
//! structural equality of reduced coefficient vectors.

use num::{One, Zero};

use crate::rat::{rat_int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    /// Coefficient of x^i at index i; empty vector is the zero polynomial.
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly {
            coeffs: vec![rat_int(1)],
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c·x^d.
    pub fn monomial(c: Rat, d: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Evaluate at an exact rational point.
    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiplicative inverse: exists only for nonzero constants.
    pub fn try_inv(&self) -> Option<Self> {
        if self.coeffs.len() == 1 && !self.coeffs[0].is_zero() {
            Some(Self::constant(self.coeffs[0].recip()))
        } else {
            None
        }
    }
}

impl std::fmt::Display for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", crate::rat::rat_to_string(c))?,
                1 => write!(f, "{}*x", crate::rat::rat_to_string(c))?,
                _ => write!(f, "{}*x^{}", crate::rat::rat_to_string(c), i)?,
            }
        }
        Ok(())
    }
}

impl From<Rat> for RatPoly {
    fn from(c: Rat) -> Self {
        Self::constant(c)
    }
}

impl One for RatPoly {
    fn one() -> Self {
        RatPoly::one()
    }
}

impl Zero for RatPoly {
    fn zero() -> Self {
        RatPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl std::ops::Add for RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: Self) -> Self {
        RatPoly::add(&self, &rhs)
    }
}

impl std::ops::Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: Self) -> Self {
        RatPoly::mul(&self, &rhs)
    }
}
