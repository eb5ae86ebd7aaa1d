//! Truncated formal power series in q with exact coefficients and a fractional
//! exponent offset.
//!
//! A [`QSeries<C>`] stores q^{offset} · Σ_{n=0}^{N} c_n q^n where the offset is
//! an exact rational multiple of 1/24 (the shape every eta-quotient here
//! needs) and the coefficients live in any exact ring implementing [`Coeff`].
//! One convolution engine serves three coefficient rings: plain rationals,
//! polynomials in α, and polynomials in x.
//!
//! Arithmetic rules: add/sub require equal offsets (alignment error otherwise),
//! mul adds offsets, div subtracts them, exp/log require offset 0.

use num::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rat::{rat, rat_is_zero, rat_to_string, rat_zero, Rat};

/// Exact coefficient ring for the series engine.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse when the element is a unit.
    fn try_inv(&self) -> Option<Self>;
    /// Exact division by a nonzero machine integer (for exp/log recurrences).
    fn div_int(&self, n: u64) -> Self;
    /// Embed an exact rational.
    fn from_rat(r: Rat) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn div_int(&self, n: u64) -> Self {
        self / Rat::from_integer(n.into())
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
}

impl Coeff for RatPoly {
    fn zero() -> Self {
        RatPoly::zero()
    }
    fn one() -> Self {
        RatPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        RatPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatPoly::neg(self)
    }
    fn try_inv(&self) -> Option<Self> {
        RatPoly::try_inv(self)
    }
    fn div_int(&self, n: u64) -> Self {
        self.scale(&rat(1, n as i64))
    }
    fn from_rat(r: Rat) -> Self {
        RatPoly::constant(r)
    }
}

/// Truncated q-series with exact coefficients; see the module docs.
#[derive(Debug, Clone, PartialEq)]
pub struct QSeries<C: Coeff> {
    offset: Rat,
    coeffs: Vec<C>,
}

/// Series over plain rationals, the common case.
pub type RatSeries = QSeries<Rat>;

/// Series whose q-coefficients are polynomials in a formal variable
/// (α for hook products, x for the bivariate hook generating function).
pub type PolySeries = QSeries<RatPoly>;

fn check_offset(offset: &Rat) -> Result<()> {
    if !(offset * rat(24, 1)).is_integer() {
        return Err(Error::InvalidInput(format!(
            "series offset must be a multiple of 1/24, got {}",
            rat_to_string(offset)
        )));
    }
    Ok(())
}

impl<C: Coeff> QSeries<C> {
    /// Series from raw coefficients c_0..c_N; `offset` must be a multiple of 1/24.
    pub fn from_coeffs(offset: Rat, coeffs: Vec<C>) -> Result<Self> {
        check_offset(&offset)?;
        if coeffs.is_empty() {
            return Err(Error::InvalidInput(
                "series needs at least the q^0 coefficient".into(),
            ));
        }
        Ok(QSeries { offset, coeffs })
    }

    /// The zero series to order `n`, offset 0.
    pub fn zeros(n: usize) -> Self {
        QSeries {
            offset: rat_zero(),
            coeffs: vec![C::zero(); n + 1],
        }
    }

    /// The constant series 1 to order `n`, offset 0.
    pub fn one(n: usize) -> Self {
        let mut s = Self::zeros(n);
        s.coeffs[0] = C::one();
        s
    }

    /// Truncation order N (coefficients exist for q^0..q^N).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// Coefficient of q^{n+offset}; zero above the truncation order.
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: C) {
        assert!(n < self.coeffs.len(), "coefficient index beyond order");
        self.coeffs[n] = c;
    }

    pub fn with_offset(mut self, offset: Rat) -> Result<Self> {
        check_offset(&offset)?;
        self.offset = offset;
        Ok(self)
    }

    /// Drop coefficients above order `n` (no-op if already shorter).
    pub fn truncated(mut self, n: usize) -> Self {
        self.coeffs.truncate(n + 1);
        self
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.offset != other.offset {
            return Err(Error::OffsetMismatch {
                lhs: rat_to_string(&self.offset),
                rhs: rat_to_string(&other.offset),
            });
        }
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|i| self.coeffs[i].add(&other.coeffs[i]))
            .collect();
        Ok(QSeries {
            offset: self.offset.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.clone().neg())
    }

    pub fn neg(mut self) -> Self {
        for c in &mut self.coeffs {
            *c = c.neg();
        }
        self
    }

    pub fn scale(&self, c: &C) -> Self {
        QSeries {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order; offsets add.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        QSeries {
            offset: &self.offset + &other.offset,
            coeffs: out,
        }
    }

    /// Division by a series whose constant term is a unit, by the standard
    /// coefficient recurrence; offsets subtract.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let inv0 = other.coeffs[0]
            .try_inv()
            .ok_or_else(|| Error::NotAUnit("divisor has non-invertible constant term".into()))?;
        let n = self.order().min(other.order());
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for k in 1..=i {
                if other.coeffs[k].is_zero() || out[i - k].is_zero() {
                    continue;
                }
                acc = acc.sub(&other.coeffs[k].mul(&out[i - k]));
            }
            out.push(acc.mul(&inv0));
        }
        Ok(QSeries {
            offset: &self.offset - &other.offset,
            coeffs: out,
        })
    }

    /// Nonnegative integer power (repeated multiplication; orders stay put).
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order()).with_offset(rat_zero()).unwrap();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal exponential; requires offset 0 and zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !rat_is_zero(&self.offset) {
            return Err(Error::NotAUnit("exp needs offset 0".into()));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotAUnit("exp needs zero constant term".into()));
        }
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        out[0] = C::one();
        // n·B_n = Σ_{k=1..n} k·A_k·B_{n−k}
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() || out[m - k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].mul(&out[m - k]);
                let term = term.mul(&C::from_rat(Rat::from_integer((k as u64).into())));
                acc = acc.add(&term);
            }
            out[m] = acc.div_int(m as u64);
        }
        Ok(QSeries {
            offset: rat_zero(),
            coeffs: out,
        })
    }

    /// Formal logarithm; requires offset 0 and constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !rat_is_zero(&self.offset) {
            return Err(Error::NotAUnit("log needs offset 0".into()));
        }
        if self.coeffs[0] != C::one() {
            return Err(Error::NotAUnit("log needs constant term 1".into()));
        }
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        // L_m = A_m − (1/m)·Σ_{k=1..m−1} k·L_k·A_{m−k}
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..m {
                if out[k].is_zero() || self.coeffs[m - k].is_zero() {
                    continue;
                }
                let term = out[k].mul(&self.coeffs[m - k]);
                let term = term.mul(&C::from_rat(Rat::from_integer((k as u64).into())));
                acc = acc.add(&term);
            }
            out[m] = self.coeffs[m].sub(&acc.div_int(m as u64));
        }
        Ok(QSeries {
            offset: rat_zero(),
            coeffs: out,
        })
    }

    /// Map the coefficients into another ring (used to lift rational series
    /// into polynomial-coefficient series).
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries {
            offset: self.offset.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl RatSeries {
    /// Lift a rational series into any coefficient ring.
    pub fn lift<C: Coeff>(&self) -> QSeries<C> {
        self.map(|r| C::from_rat(r.clone()))
    }
}

/// JSON wire format: `{"offset": "p/q", "order": N, "coeffs": ["p/q", ...]}`.
impl Serialize for RatSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("QSeries", 3)?;
        st.serialize_field("offset", &rat_to_string(&self.offset))?;
        st.serialize_field("order", &self.order())?;
        let coeffs: Vec<String> = self.coeffs.iter().map(rat_to_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}
