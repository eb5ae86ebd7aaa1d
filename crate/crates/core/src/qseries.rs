//! Named q-series and the q-bracket operator.
//!
//! - [`euler_series`]: Σ p(n) q^n = Π 1/(1−q^n)
//! - [`eta_product_series`] / [`eta_series`]: Π(1−q^n), without and with the
//!   q^{1/24} offset
//! - [`sigma`]: divisor power sums σ_ℓ(n), exact for negative ℓ
//! - [`eichler_series`]: Σ σ_{1−a}(n) q^n, built from divisor sums and
//!   cross-checked against the Lambert-series expansion
//! - [`q_bracket`]: ⟨f⟩_q = (Σ_λ f(λ) q^{|λ|}) / (Σ_λ q^{|λ|})
//! - [`hook_histogram`]: per-size tallies of hook values across all
//!   partitions, the fast path behind the t-hook bracket identities

use crate::error::Result;
use crate::partition::{for_each_partition, hook_values, Partition};
use crate::rat::{rat_pow, rat_zero, Rat};
use crate::series::{Coeff, QSeries, RatSeries};

/// Partition generating function Σ p(n) q^n to order `n`, offset 0.
pub fn euler_series(n: usize) -> RatSeries {
    // 1/Π(1−q^m) by dividing 1 by the finite product; exact.
    RatSeries::one(n)
        .div(&eta_product_series(n))
        .expect("unit constant term")
}

/// Π_{m=1}^{n} (1−q^m) truncated to order `n`, offset 0.
pub fn eta_product_series(n: usize) -> RatSeries {
    let mut prod = RatSeries::one(n);
    for m in 1..=n {
        let mut f = RatSeries::one(n);
        f.set_coeff(m, crate::rat::rat_int(-1));
        prod = prod.mul(&f);
    }
    prod
}

/// Dedekind eta expansion: offset 1/24, coefficients of Π(1−q^n).
pub fn eta_series(n: usize) -> RatSeries {
    eta_product_series(n)
        .with_offset(crate::rat::rat(1, 24))
        .expect("1/24 is a valid offset")
}

/// Divisor power sum σ_ℓ(n) = Σ_{d|n} d^ℓ, exact (rational for ℓ < 0).
pub fn sigma(l: i32, n: u64) -> Rat {
    assert!(n >= 1, "sigma needs n >= 1");
    let mut acc = rat_zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += rat_pow(d as i64, l);
            let e = n / d;
            if e != d {
                acc += rat_pow(e as i64, l);
            }
        }
        d += 1;
    }
    acc
}

/// The Eichler-integral expansion Σ_{n≥1} σ_{1−a}(n) q^n to order `n`,
/// offset 0. Both the divisor-sum and Lambert-series constructions are
/// computed and compared; a mismatch is a bug, hence the assert.
pub fn eichler_series(a: i32, n: usize) -> RatSeries {
    let mut s = RatSeries::zeros(n);
    for m in 1..=n {
        s.set_coeff(m, sigma(1 - a, m as u64));
    }
    let lambert = eichler_series_lambert(a, n);
    assert_eq!(s, lambert, "divisor-sum and Lambert constructions disagree");
    s
}

/// Lambert-series construction: Σ_{m≥1} m^{1−a} Σ_{k≥1} q^{mk}, collected.
pub fn eichler_series_lambert(a: i32, n: usize) -> RatSeries {
    let mut s = RatSeries::zeros(n);
    for m in 1..=n {
        let w = rat_pow(m as i64, 1 - a);
        let mut e = m;
        while e <= n {
            let c = s.coeff(e) + &w;
            s.set_coeff(e, c);
            e += m;
        }
    }
    s
}

/// The q-bracket ⟨f⟩_q: numerator Σ_{|λ|≤N} f(λ) q^{|λ|} divided by the
/// partition generating function, exact in any coefficient ring.
pub fn q_bracket<C: Coeff>(f: impl Fn(&Partition) -> C, order: usize) -> Result<QSeries<C>> {
    let numer = bracket_numerator(f, order)?;
    let euler: QSeries<C> = euler_series(order).lift();
    numer.div(&euler)
}

/// Numerator of the q-bracket: Σ_{|λ| = n} f(λ) at q^n for n ≤ order.
pub fn bracket_numerator<C: Coeff>(
    f: impl Fn(&Partition) -> C,
    order: usize,
) -> Result<QSeries<C>> {
    let mut coeffs = vec![C::zero(); order + 1];
    for n in 0..=order {
        for p in Partition::enumerate_capped(n as u32, order as u32)? {
            coeffs[n] = coeffs[n].add(&f(&p));
        }
    }
    QSeries::from_coeffs(rat_zero(), coeffs)
}

/// `histogram[n][h]` counts, over all partitions of n, how many cells carry
/// hook number h (1 ≤ h ≤ n). A single enumeration pass serves every (a,t)
/// bracket of a hook statistic by linearity of the defining sums.
pub fn hook_histogram(order: usize) -> Vec<Vec<u64>> {
    let mut table: Vec<Vec<u64>> = (0..=order).map(|n| vec![0u64; n + 1]).collect();
    for n in 0..=order {
        let row = &mut table[n];
        for_each_partition(n as u32, |parts| {
            for h in hook_values(parts) {
                row[h as usize] += 1;
            }
        });
    }
    table
}

/// ⟨f_{a,t}⟩_q assembled from a hook histogram: the numerator coefficient at
/// q^n is `t^{a−1} Σ_{t|h} histogram[n][h]·h^{−a}`, exactly Σ_{|λ|=n} f_{a,t}(λ).
pub fn hook_bracket_series(a: i32, t: u32, order: usize, histogram: &[Vec<u64>]) -> RatSeries {
    assert!(t >= 1, "t must be a positive integer");
    assert!(
        histogram.len() > order,
        "histogram shorter than requested order"
    );
    let prefactor = rat_pow(t as i64, a - 1);
    let mut coeffs = Vec::with_capacity(order + 1);
    for (n, row) in histogram.iter().enumerate().take(order + 1) {
        let mut acc = rat_zero();
        let mut h = t as usize;
        while h <= n {
            if row[h] != 0 {
                acc += rat_pow(h as i64, -a) * Rat::from_integer(row[h].into());
            }
            h += t as usize;
        }
        coeffs.push(&prefactor * acc);
    }
    let numer = QSeries::from_coeffs(rat_zero(), coeffs).expect("offset 0 is valid");
    numer.div(&euler_series(order)).expect("unit constant term")
}
