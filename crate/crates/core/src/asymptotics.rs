//! The divisor-sum exponential series Ĝ_k(t) = Σ σ_{k−1}(n) e^{−nt}, its
//! divergent small-t expansion G̃_k(t), and the reference table comparing
//! them, for odd k ≥ 3.
//!
//! G̃_k(t) = Γ(k)ζ(k)/t^k + ζ(2−k)/t + Σ_{n≥0} ζ(−n)ζ(1−n−k)(−t)^n/n!.
//! The tail coefficients are assembled from zeta values rather than raw
//! Bernoulli numbers, which removes the B_1-convention ambiguity at n = 0
//! (where the term vanishes anyway for odd k ≥ 3 since ζ(1−k) = 0). A
//! redundant Bernoulli-product construction of the same coefficients is kept
//! as a cross-check.
//!
//! Truncation: the divergent tail is summed to a fixed depth of
//! [`TABLE_TERMS`] terms by default, which reproduces the reference table to
//! all ten printed decimals at every tabulated t. Optimal truncation (stop at
//! the smallest-magnitude term) is available as a policy; at t = 2 its error
//! is the size of the smallest term (≈3e−8), visibly larger than the
//! fixed-depth deviation from the tabulated values.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rat::{rat_to_f64, Rat};
use crate::special::{bernoulli, zeta_int};

/// Fixed tail depth (terms n = 0..25) used by the reference table.
pub const TABLE_TERMS: usize = 26;

/// Hard cap on the tail scan; beyond this the terms grow without bound for
/// every t in the supported range.
pub const TERM_CAP: usize = 80;

/// How to cut the divergent tail of [`g_tilde_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    /// Stop right after the smallest-magnitude nonzero term (optimal
    /// truncation); minimizes the worst-case error bound.
    SmallestTerm,
    /// Sum exactly the first n terms (n = 0..len−1) of the tail.
    FixedTerms(usize),
}

/// One row of the comparison table.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticResult {
    pub t: f64,
    pub g_hat: f64,
    pub g_tilde: f64,
    /// g_hat / g_tilde.
    pub ratio: f64,
    /// Index of the last tail term included in `g_tilde`.
    pub truncation_index: usize,
    /// Smallest |term| over the scanned range (the optimal-truncation error
    /// scale); its index is the cut under [`Truncation::SmallestTerm`].
    pub smallest_term: f64,
}

fn check_k(k: u32) -> Result<()> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::Domain(format!("need odd k >= 3, got {k}")));
    }
    Ok(())
}

fn check_t(t: f64) -> Result<()> {
    if !(t >= 0.01) {
        return Err(Error::Domain(format!("need t >= 0.01, got {t}")));
    }
    Ok(())
}

/// Ĝ_k(t) = Σ_{n≥1} n^{k−1} e^{−nt}/(1−e^{−nt}), Lambert form with a
/// geometric tail bound below 1e−12 and compensated summation.
pub fn g_hat(k: u32, t: f64) -> Result<f64> {
    check_k(k)?;
    check_t(t)?;
    let x = (-t).exp();
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut n = 1u64;
    loop {
        let xn = (-t * n as f64).exp();
        let term = (n as f64).powi(k as i32 - 1) * xn / (1.0 - xn);
        let y = term - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        // tail: Σ_{m>n} m^{k−1}x^m/(1−x) ≤ (n+1)^{k−1}x^{n+1}/((1−x)(1−ρ))
        let rho = x * ((n + 1) as f64 / n as f64).powi(k as i32 - 1);
        if rho < 1.0 {
            let head = ((n + 1) as f64).powi(k as i32 - 1) * x.powi(n as i32 + 1) / (1.0 - x);
            if head / (1.0 - rho) < 1e-12 {
                break;
            }
        }
        n += 1;
        if n > 5_000_000 {
            return Err(Error::Truncation(format!("g_hat tail too slow at t = {t}")));
        }
    }
    Ok(sum)
}

/// Exact tail coefficient ζ(−n)·ζ(1−n−k) as a rational.
fn tail_coeff(n: usize, k: u32) -> Result<Rat> {
    let zeta_a = match zeta_int(-(n as i64))? {
        crate::special::ZetaValue::Rational(r) => r,
        _ => unreachable!("nonpositive argument"),
    };
    let zeta_b = match zeta_int(1 - n as i64 - k as i64)? {
        crate::special::ZetaValue::Rational(r) => r,
        _ => unreachable!("nonpositive argument"),
    };
    Ok(zeta_a * zeta_b)
}

/// The same coefficient from the Bernoulli products B_{n+1}B_{n+k}/((n+1)(n+k));
/// redundant cross-check route, valid for odd k ≥ 3 where no B_1 enters a
/// nonzero term.
pub fn tail_coeff_bernoulli(n: usize, k: u32) -> Result<Rat> {
    let b1 = bernoulli(n + 1)?;
    let b2 = bernoulli(n + k as usize)?;
    Ok(b1 * b2
        / (crate::rat::rat_int((n + 1) as i64) * crate::rat::rat_int((n + k as usize) as i64)))
}

/// G̃_k(t) under an explicit truncation policy.
pub fn g_tilde_with(k: u32, t: f64, policy: Truncation) -> Result<AsymptoticResult> {
    check_k(k)?;
    check_t(t)?;
    let factorial: f64 = (1..k as u64).map(|i| i as f64).product();
    let head = factorial * zeta_int(k as i64)?.to_f64() / t.powi(k as i32)
        + zeta_int(2 - k as i64)?.to_f64() / t;

    // terms n = 0..TERM_CAP of the divergent tail
    let mut terms = Vec::with_capacity(TERM_CAP + 1);
    let mut t_pow_over_fact = 1.0f64; // (−t)^n / n!
    for n in 0..=TERM_CAP {
        let c = rat_to_f64(&tail_coeff(n, k)?);
        terms.push(c * t_pow_over_fact);
        t_pow_over_fact *= -t / (n + 1) as f64;
    }
    let (min_idx, smallest) = terms
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != 0.0)
        .map(|(i, v)| (i, v.abs()))
        .min_by(|a, b| a.1.partial_cmp(&b.1).expect("finite terms"))
        .expect("tail has nonzero terms");

    let cut = match policy {
        Truncation::SmallestTerm => min_idx,
        Truncation::FixedTerms(len) => len.min(TERM_CAP + 1).saturating_sub(1),
    };
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for &term in terms.iter().take(cut + 1) {
        let y = term - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    let g_tilde = head + sum;
    let gh = g_hat(k, t)?;
    Ok(AsymptoticResult {
        t,
        g_hat: gh,
        g_tilde,
        ratio: gh / g_tilde,
        truncation_index: cut,
        smallest_term: smallest,
    })
}

/// G̃_k(t) with the table convention ([`Truncation::FixedTerms`] at
/// [`TABLE_TERMS`]).
pub fn g_tilde(k: u32, t: f64) -> Result<AsymptoticResult> {
    g_tilde_with(k, t, Truncation::FixedTerms(TABLE_TERMS))
}

/// Rows of the comparison table for the given t values.
pub fn asymptotic_table(k: u32, ts: &[f64]) -> Result<Vec<AsymptoticResult>> {
    ts.iter().map(|&t| g_tilde(k, t)).collect()
}

/// CSV rendering, ten fixed decimals per value.
pub fn table_to_csv(rows: &[AsymptoticResult]) -> String {
    let mut out = String::from("t,g_hat,g_tilde,ratio,trunc_index\n");
    for r in rows {
        out.push_str(&format!(
            "{},{:.10},{:.10},{:.10},{}\n",
            crate::modular::fmt_f64(r.t),
            r.g_hat,
            r.g_tilde,
            r.ratio,
            r.truncation_index
        ));
    }
    out
}

/// Three-way comparison record for the k = 1 (a = 1) boundary case: the
/// printed-formula expansion 2γ/t + Σ B²_{n+1}/(n+1)²(−t)^n/n! (with
/// B_1 = +1/2, so the n = 0 term is 1/4), the direct divisor sum
/// Σ d(n)e^{−nt}, and the classical expansion (γ − ln t)/t + 1/4 + (same
/// n ≥ 1 tail). The record never asserts agreement; the formula expansion
/// carries no logarithmic term, and the discrepancy field makes that visible.
#[derive(Debug, Clone, Serialize)]
pub struct DivisorExpansionComparison {
    pub t: f64,
    /// The expansion as printed, 2γ/t + tail (B_1 = +1/2 at n = 0).
    pub formula_value: f64,
    /// Direct summation Σ σ_0(n) e^{−nt}.
    pub direct_sum: f64,
    /// (γ − ln t)/t + 1/4 + the same n ≥ 1 tail.
    pub classical_value: f64,
    /// formula_value − direct_sum.
    pub discrepancy: f64,
}

/// Evaluate the comparison record on t ∈ [0.05, 1].
pub fn divisor_expansion_comparison(t: f64) -> Result<DivisorExpansionComparison> {
    if !(0.05..=1.0).contains(&t) {
        return Err(Error::Domain(format!("t must lie in [0.05, 1], got {t}")));
    }
    let gamma = crate::special::named_constants().euler_gamma;

    // tail Σ_{n≥0} B²_{n+1}/(n+1)² (−t)^n/n! with B_1 = +1/2 at n = 0,
    // optimally truncated
    let mut terms = Vec::new();
    let mut t_pow_over_fact = 1.0f64;
    for n in 0..=TERM_CAP {
        let b = if n == 0 {
            crate::rat::rat(1, 2)
        } else {
            bernoulli(n + 1)?
        };
        let c = rat_to_f64(&(&b * &b)) / ((n + 1) * (n + 1)) as f64;
        terms.push(c * t_pow_over_fact);
        t_pow_over_fact *= -t / (n + 1) as f64;
    }
    let min_idx = terms
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != 0.0)
        .min_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).expect("finite"))
        .map(|(i, _)| i)
        .expect("nonzero terms");
    let tail: f64 = terms.iter().take(min_idx + 1).sum();

    let formula_value = 2.0 * gamma / t + tail;
    let classical_value = (gamma - t.ln()) / t + tail; // the n = 0 term is the 1/4

    // direct sum Σ d(n) e^{−nt}, Lambert form
    let mut direct = 0.0f64;
    let x = (-t).exp();
    let mut n = 1u64;
    loop {
        let xn = (-t * n as f64).exp();
        direct += xn / (1.0 - xn);
        if x.powi(n as i32 + 1) / ((1.0 - x) * (1.0 - x)) < 1e-13 {
            break;
        }
        n += 1;
    }

    Ok(DivisorExpansionComparison {
        t,
        formula_value,
        direct_sum: direct,
        classical_value,
        discrepancy: formula_value - direct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_hat_reference_values() {
        assert!((g_hat(3, 1.0).unwrap() - 2.3214805734).abs() < 5e-10);
        assert!((g_hat(3, 2.0).unwrap() - 0.2602861623).abs() < 5e-10);
        assert!((g_hat(3, 0.1).unwrap() - 2403.2805424358).abs() < 5e-10);
    }

    #[test]
    fn g_hat_is_strictly_decreasing() {
        let mut prev = f64::INFINITY;
        let mut t = 0.15f64;
        while t < 4.0 {
            let v = g_hat(3, t).unwrap();
            assert!(v < prev, "t={t}");
            prev = v;
            t += 0.17;
        }
    }

    #[test]
    fn g_hat_rejects_bad_arguments() {
        assert!(g_hat(4, 1.0).is_err());
        assert!(g_hat(1, 1.0).is_err());
        assert!(g_hat(3, 0.001).is_err());
    }

    #[test]
    fn g_tilde_reference_values() {
        assert!((g_tilde(3, 2.0).unwrap().g_tilde - 0.2602864321).abs() < 5e-10);
        assert!((g_tilde(3, 1.5).unwrap().g_tilde - 0.6578359052).abs() < 5e-10);
        assert!((g_tilde(3, 0.5).unwrap().g_tilde - 19.0665916994).abs() < 5e-10);
    }

    #[test]
    fn table_ratios_match_reference() {
        let rows = asymptotic_table(3, &[2.0, 1.5, 1.0, 0.5, 0.1]).unwrap();
        let want = [0.9999989634, 0.9999999998, 1.0, 1.0, 1.0];
        for (r, w) in rows.iter().zip(want) {
            assert!((r.ratio - w).abs() < 5e-10, "t={}: {} vs {w}", r.t, r.ratio);
        }
    }

    #[test]
    fn ratio_approaches_one_monotonically() {
        let d = |t: f64| (g_tilde(3, t).unwrap().ratio - 1.0).abs();
        assert!(d(0.5) < d(1.5));
        assert!(d(1.5) < d(2.0));
    }

    fn terms_argmin(k: u32, t: f64) -> usize {
        let mut best = (0usize, f64::INFINITY);
        let mut tp = 1.0f64;
        for n in 0..=TERM_CAP {
            let c = rat_to_f64(&tail_coeff(n, k).unwrap()) * tp;
            if c != 0.0 && c.abs() < best.1 {
                best = (n, c.abs());
            }
            tp *= -t / (n + 1) as f64;
        }
        best.0
    }

    #[test]
    fn optimal_truncation_error_heuristic() {
        // for t ≤ 1, |ĝ − g̃| < 10·|smallest term| under optimal truncation,
        // up to the floor set by the two 1e−12 evaluation tolerances (at
        // small t the smallest term is far below what doubles can resolve)
        for t in [0.1, 0.3, 0.5, 0.8, 1.0] {
            let r = g_tilde_with(3, t, Truncation::SmallestTerm).unwrap();
            let floor = 2.5e-12 + 32.0 * f64::EPSILON * r.g_hat.abs();
            assert!(
                (r.g_hat - r.g_tilde).abs() < (10.0 * r.smallest_term).max(floor),
                "t={t}: diff {:.3e} vs smallest {:.3e}",
                (r.g_hat - r.g_tilde).abs(),
                r.smallest_term
            );
            assert_eq!(r.truncation_index, terms_argmin(3, t));
        }
    }

    #[test]
    fn zeta_route_matches_bernoulli_route() {
        for k in [3u32, 5, 7] {
            for n in 0..=40usize {
                assert_eq!(
                    tail_coeff(n, k).unwrap(),
                    tail_coeff_bernoulli(n, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn term_zero_pattern() {
        // ζ(−n)ζ(1−n−k) vanishes whenever n+1 > 1 is odd or n+k > 1 is odd
        for n in 0..=30usize {
            let c = tail_coeff(n, 3).unwrap();
            let zero_expected = (n + 1 > 1 && (n + 1) % 2 == 1) || (n + 3) % 2 == 1;
            assert_eq!(crate::rat::rat_is_zero(&c), zero_expected, "n={n}");
        }
    }

    #[test]
    fn csv_format() {
        let rows = asymptotic_table(3, &[2.0]).unwrap();
        let csv = table_to_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "t,g_hat,g_tilde,ratio,trunc_index");
        let row = lines.next().unwrap();
        assert!(
            row.starts_with("2,0.2602861623,0.2602864321,0.9999989634,25"),
            "{row}"
        );
    }

    #[test]
    fn divisor_expansion_record_reports_without_asserting() {
        let r = divisor_expansion_comparison(0.1).unwrap();
        // the direct sum is the ground truth: d(1)e^{−0.1} + d(2)e^{−0.2} + …
        let mut oracle = 0.0f64;
        for n in 1..2000u64 {
            let d = (1..=n).filter(|i| n % i == 0).count() as f64;
            oracle += d * (-0.1 * n as f64).exp();
        }
        assert!((r.direct_sum - oracle).abs() < 1e-8);
        // the record carries a visible discrepancy (the formula lacks the
        // −ln(t)/t term); nothing here asserts the formula is right
        assert_eq!(r.discrepancy, r.formula_value - r.direct_sum);
        assert!(r.formula_value.is_finite() && r.classical_value.is_finite());
        assert!(divisor_expansion_comparison(2.0).is_err());
    }
}
