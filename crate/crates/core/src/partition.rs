//! Integer partitions, Ferrers–Young hook numbers, and the hook statistics
//! that feed the q-bracket machinery:
//!
//! - [`Partition`]: nonincreasing positive parts, the fundamental object
//! - [`Partition::enumerate`] / [`for_each_partition`]: all partitions of n in
//!   lexicographically decreasing order
//! - [`hook_multiset`] / [`t_hook_multiset`]: cell hook numbers via the
//!   conjugate-column formula, and their multiples-of-t restriction
//! - [`hook_function`]: f_{a,t}(λ) = t^{a−1} Σ_{h ∈ ℋ_t(λ)} h^{−a}, exact
//! - [`power_sum`]: S_{2k}(λ) = Σ_j λ_j^{2k−1}
//! - [`hook_product_poly`]: D_α(λ) = Π_{h ∈ ℋ(λ)} (1 − α/h²) expanded as an
//!   exact polynomial in α

use num::bigint::BigInt;
use num::complex::Complex64;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rat::{rat_int, rat_pow, Rat};

/// Hard default on partition size; p(60) = 966467 partitions is still desk
/// scale, beyond that memory for `enumerate` grows steeply.
pub const DEFAULT_PARTITION_CAP: u32 = 60;

/// A partition: nonincreasing sequence of positive integers. The empty
/// sequence is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    size: u64,
}

impl Partition {
    /// Build from parts, validating the nonincreasing-and-positive invariant.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidInput(
                "partition parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be nonincreasing, got {parts:?}"
            )));
        }
        let size = parts.iter().map(|&p| p as u64).sum();
        Ok(Partition { parts, size })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            size: 0,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the sum of the parts.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths λ'_j for j = 1..λ_1 (the conjugate partition).
    pub fn conjugate(&self) -> Partition {
        let parts = conjugate_parts(&self.parts);
        let size = self.size;
        Partition { parts, size }
    }

    /// All partitions of `n` in lexicographically decreasing order, so
    /// `enumerate(4)` yields (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    ///
    /// Errors with [`Error::ResourceLimit`] above [`DEFAULT_PARTITION_CAP`];
    /// use [`Partition::enumerate_capped`] to raise the cap deliberately.
    pub fn enumerate(n: u32) -> Result<Vec<Partition>> {
        Self::enumerate_capped(n, DEFAULT_PARTITION_CAP)
    }

    /// As [`Partition::enumerate`] with an explicit cap.
    pub fn enumerate_capped(n: u32, cap: u32) -> Result<Vec<Partition>> {
        if n > cap {
            return Err(Error::ResourceLimit(format!(
                "partition size {n} exceeds cap {cap}"
            )));
        }
        let mut out = Vec::new();
        for_each_partition(n, |parts| {
            let size = parts.iter().map(|&p| p as u64).sum();
            out.push(Partition {
                parts: parts.to_vec(),
                size,
            });
        });
        Ok(out)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

fn conjugate_parts(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0) as usize;
    let mut cols = vec![0u32; width];
    for &p in parts {
        for c in cols.iter_mut().take(p as usize) {
            *c += 1;
        }
    }
    cols
}

/// Stream every partition of `n` (lexicographically decreasing) to `visit`
/// without materializing the list. The slice passed to `visit` is reused.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, mut visit: F) {
    let mut buf: Vec<u32> = Vec::with_capacity(n as usize);
    descend(n, n, &mut buf, &mut visit);
}

fn descend<F: FnMut(&[u32])>(remaining: u32, max_part: u32, buf: &mut Vec<u32>, visit: &mut F) {
    if remaining == 0 {
        visit(buf);
        return;
    }
    let hi = remaining.min(max_part);
    for p in (1..=hi).rev() {
        buf.push(p);
        descend(remaining - p, p, buf, visit);
        buf.pop();
    }
}

/// Multiset of hook numbers, stored sorted ascending with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookMultiset {
    values: Vec<u32>,
}

impl HookMultiset {
    fn from_unsorted(mut values: Vec<u32>) -> Self {
        values.sort_unstable();
        HookMultiset { values }
    }

    /// The hook numbers, ascending, one entry per cell.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Total multiplicity (= number of diagram cells for a full hook multiset).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Hook numbers of every cell: h(ℓ,j) = λ_ℓ − ℓ + λ'_j − j + 1.
pub fn hook_multiset(lambda: &Partition) -> HookMultiset {
    HookMultiset::from_unsorted(hook_values(lambda.parts()))
}

/// Raw hook values (unsorted), cell by cell. Shared by the fast tallies.
pub(crate) fn hook_values(parts: &[u32]) -> Vec<u32> {
    let cols = conjugate_parts(parts);
    let mut hooks = Vec::with_capacity(parts.iter().map(|&p| p as usize).sum());
    for (l, &row) in parts.iter().enumerate() {
        for j in 0..row as usize {
            // 1-based: λ_ℓ − ℓ + λ'_j − j + 1 (signed intermediates; the
            // result is always ≥ 1)
            let h = row as i64 - (l as i64 + 1) + cols[j] as i64 - (j as i64 + 1) + 1;
            hooks.push(h as u32);
        }
    }
    hooks
}

/// Sub-multiset of hooks divisible by `t` (t = 1 gives everything).
pub fn t_hook_multiset(lambda: &Partition, t: u32) -> HookMultiset {
    let mut v = hook_values(lambda.parts());
    v.retain(|&h| h % t == 0);
    HookMultiset::from_unsorted(v)
}

/// The weighted t-hook statistic f_{a,t}(λ) = t^{a−1} Σ_{h ∈ ℋ_t(λ)} h^{−a},
/// exact for any integer `a` (a ≤ 0 makes the summand a positive power).
pub fn hook_function(lambda: &Partition, a: i32, t: u32) -> Result<Rat> {
    if t == 0 {
        return Err(Error::Domain("t must be a positive integer".into()));
    }
    let mut sum = Rat::zero();
    for &h in t_hook_multiset(lambda, t).values() {
        sum += rat_pow(h as i64, -a);
    }
    Ok(rat_pow(t as i64, a - 1) * sum)
}

/// Floating companion of [`hook_function`] for complex exponents, via
/// h^a = exp(a ln h) on the positive reals (principal logarithm; the only
/// floating path in this module).
pub fn hook_function_complex(lambda: &Partition, a: Complex64, t: u32) -> Result<Complex64> {
    if t == 0 {
        return Err(Error::Domain("t must be a positive integer".into()));
    }
    let mut sum = Complex64::ZERO;
    for &h in t_hook_multiset(lambda, t).values() {
        sum += (-a * (h as f64).ln()).exp();
    }
    Ok(((a - 1.0) * (t as f64).ln()).exp() * sum)
}

/// The odd power-sum moment S_{2k}(λ) = Σ_j λ_j^{2k−1}; S_2 = |λ|.
pub fn power_sum(lambda: &Partition, k: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Domain("k must be a positive integer".into()));
    }
    let mut sum = BigInt::zero();
    for &p in lambda.parts() {
        sum += BigInt::from(p).pow(2 * k - 1);
    }
    Ok(sum)
}

/// D_α(λ) = Π_{h ∈ ℋ(λ)} (1 − α/h²), expanded exactly as a polynomial in α
/// of degree |λ|. Specializing at α = h² for any hook h gives 0.
pub fn hook_product_poly(lambda: &Partition) -> RatPoly {
    let mut acc = RatPoly::one();
    for &h in hook_values(lambda.parts()).iter() {
        let factor = RatPoly::new(vec![
            rat_int(1),
            -Rat::new(BigInt::one(), BigInt::from(h).pow(2)),
        ]);
        acc = acc.mul(&factor);
    }
    acc
}
