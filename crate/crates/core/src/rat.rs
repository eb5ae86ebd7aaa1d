//! Exact rational scalars: construction, parsing, and the `"p/q"` wire format.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, ToPrimitive};
use num::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, the coefficient type of every exact series.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Zero as a [`Rat`] (unambiguous where both `num::Zero` and local coefficient
/// traits are in scope).
pub fn rat_zero() -> Rat {
    Rat::from_integer(BigInt::zero())
}

/// True iff `r` is zero.
pub fn rat_is_zero(r: &Rat) -> bool {
    num::Zero::is_zero(r)
}

/// `base^exp` for integer `base` and possibly negative `exp`, exact.
pub fn rat_pow(base: i64, exp: i32) -> Rat {
    let b = BigInt::from(base);
    let p = b.pow(exp.unsigned_abs());
    if exp >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(BigInt::one(), p)
    }
}

/// Render as `"p/q"`, or just `"p"` when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad rational numerator {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad rational denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Lossy conversion to `f64` (numerator/denominator division; exact inputs of
/// moderate size convert within one ulp).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back for ratios whose parts individually overflow f64.
        let digits = |x: &BigInt| x.abs().to_string().len() as i32;
        let shift = digits(r.numer()).min(digits(r.denom())) - 1;
        let scale = BigInt::from(10u32).pow(shift.max(0) as u32);
        let n = (r.numer() / &scale).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() / &scale).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
