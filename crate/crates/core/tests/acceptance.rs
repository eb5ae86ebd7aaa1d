//! Acceptance gate: every release criterion as one test, each printing a
//! single pass/fail line (`cargo test --test acceptance -- --nocapture` to
//! see them). Tolerances are pinned here, in code.

use std::time::Instant;

use num::complex::Complex64;

use qbracket::asymptotics::{asymptotic_table, divisor_expansion_comparison};
use qbracket::chowla::{cm_ratio, omega_period};
use qbracket::modular::{
    cocycle_grid, eta_value, generic_grid, h_star_value, psi_value, verify_transformations,
    TransformCheck, UpperHalfPoint,
};
use qbracket::partition::{hook_function, Partition};
use qbracket::qseries::hook_histogram;
use qbracket::rat::{rat, rat_to_f64};
use qbracket::verify::{
    verify_bivariate_hook, verify_hook_bracket_with_histogram, verify_hook_product,
    verify_power_sum_bracket,
};

fn gate(number: u32, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {number:02} {name}: PASS"),
        Err(why) => {
            println!("criterion {number:02} {name}: FAIL ({why})");
            panic!("criterion {number:02} {name} failed: {why}");
        }
    }
}

fn ensure(cond: bool, why: impl Fn() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

#[test]
fn criterion_01_exact_hook_examples() {
    gate(1, "exact hook examples", || {
        let lambda = Partition::new(vec![4, 3, 1]).map_err(|e| e.to_string())?;
        // warm the allocator, then time the three evaluations
        let _ = hook_function(&lambda, 3, 1);
        let start = Instant::now();
        let f1 = hook_function(&lambda, 3, 1).map_err(|e| e.to_string())?;
        let f2 = hook_function(&lambda, 3, 2).map_err(|e| e.to_string())?;
        let f3 = hook_function(&lambda, 3, 3).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(f1 == rat(307, 96), || format!("f_(3,1) = {f1}"))?;
        ensure(f2 == rat(139, 216), || format!("f_(3,2) = {f2}"))?;
        ensure(f3 == rat(3, 8), || format!("f_(3,3) = {f3}"))?;
        ensure(elapsed.as_micros() < 1000, || {
            format!("took {elapsed:?} (budget 1 ms)")
        })
    });
}

#[test]
fn criterion_02_hook_bracket_suite_order_50() {
    gate(2, "t-hook bracket identity to q^50", || {
        let start = Instant::now();
        let order = 50;
        let hist = hook_histogram(order);
        for (a, t) in [
            (-3i32, 1u32),
            (-1, 1),
            (0, 2),
            (2, 1),
            (2, 3),
            (3, 2),
            (4, 1),
            (6, 1),
        ] {
            let r = verify_hook_bracket_with_histogram(a, t, order, &hist);
            ensure(r.pass, || {
                format!("(a={a}, t={t}) first discrepancy {:?}", r.first_discrepancy)
            })?;
        }
        let elapsed = start.elapsed();
        ensure(elapsed.as_secs_f64() < 30.0, || {
            format!("took {elapsed:?} (budget 30 s)")
        })
    });
}

#[test]
fn criterion_03_bivariate_identity_order_16() {
    gate(3, "bivariate hook identity to q^16", || {
        let start = Instant::now();
        for (k, t) in [(2i32, 1u32), (3, 2)] {
            let r = verify_bivariate_hook(k, t, 16).map_err(|e| e.to_string())?;
            ensure(r.pass, || {
                format!("(k={k}, t={t}) first discrepancy {:?}", r.first_discrepancy)
            })?;
        }
        let elapsed = start.elapsed();
        ensure(elapsed.as_secs_f64() < 60.0, || {
            format!("took {elapsed:?} (budget 60 s)")
        })
    });
}

#[test]
fn criterion_04_hook_product_identity_order_20() {
    gate(4, "hook product vs eta power to q^20", || {
        let start = Instant::now();
        let r = verify_hook_product(20).map_err(|e| e.to_string())?;
        ensure(r.pass, || {
            format!("first discrepancy {:?}", r.first_discrepancy)
        })?;
        let elapsed = start.elapsed();
        ensure(elapsed.as_secs_f64() < 60.0, || {
            format!("took {elapsed:?} (budget 60 s)")
        })
    });
}

#[test]
fn criterion_05_power_sum_bracket_order_40() {
    gate(5, "power-sum bracket vs Eisenstein to q^40", || {
        for k in [1u32, 2, 3] {
            let r = verify_power_sum_bracket(k, 40).map_err(|e| e.to_string())?;
            ensure(r.pass, || {
                format!("k={k} first discrepancy {:?}", r.first_discrepancy)
            })?;
        }
        Ok(())
    });
}

#[test]
fn criterion_06_transformation_residuals() {
    gate(6, "shift/inversion residuals below 1e-10", || {
        let grid = generic_grid();
        for k in [1u32, 2] {
            for t in [1u32, 2] {
                let r = verify_transformations(TransformCheck::MShift { k, t }, &grid, 1e-10)
                    .map_err(|e| e.to_string())?;
                ensure(r.pass, || {
                    format!("shift k={k} t={t} max residual {:.3e}", r.max_residual())
                })?;
                let r = verify_transformations(TransformCheck::MInversion { k, t }, &grid, 1e-10)
                    .map_err(|e| e.to_string())?;
                ensure(r.pass, || {
                    format!(
                        "inversion k={k} t={t} max residual {:.3e}",
                        r.max_residual()
                    )
                })?;
            }
        }
        for k in [1u32, 2, 3] {
            let r = verify_transformations(TransformCheck::Berndt { k }, &grid, 1e-10)
                .map_err(|e| e.to_string())?;
            ensure(r.pass, || {
                format!("berndt k={k} max residual {:.3e}", r.max_residual())
            })?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_printed_example_values() {
    gate(7, "printed 4-digit example values", || {
        let rel = |got: f64, printed: f64| (got - printed).abs() / printed.abs();
        let i_half = UpperHalfPoint::new(0.0, 0.5).map_err(|e| e.to_string())?;
        let two_i = UpperHalfPoint::new(0.0, 2.0).map_err(|e| e.to_string())?;
        let z2 = Complex64::new(0.0, 2.0);

        let eta = eta_value(i_half).map_err(|e| e.to_string())?;
        ensure(rel(eta.re, 0.8377) < 5e-4, || format!("eta(i/2) = {eta}"))?;

        let p1 = psi_value(1, z2).map_err(|e| e.to_string())?;
        ensure(rel(p1.re, 0.04540) < 5e-4, || format!("psi_-2(2i) = {p1}"))?;
        let p2 = psi_value(2, z2).map_err(|e| e.to_string())?;
        ensure(rel(p2.re, 0.04522) < 5e-4, || format!("psi_-4(2i) = {p2}"))?;

        let h4_2i = h_star_value(1, two_i).map_err(|e| e.to_string())?;
        ensure(rel(h4_2i.re, 5.887e-6) < 5e-4, || {
            format!("H*_4(2i) = {h4_2i}")
        })?;
        let h4_ih = h_star_value(1, i_half).map_err(|e| e.to_string())?;
        ensure(rel(h4_ih.re, 0.05420) < 5e-4, || {
            format!("H*_4(i/2) = {h4_ih}")
        })?;
        let h6_ih = h_star_value(2, i_half).map_err(|e| e.to_string())?;
        ensure(rel(h6_ih.re, 0.05398) < 5e-4, || {
            format!("H*_6(i/2) = {h6_ih}")
        })?;

        // both inversion-defect identities at z = 2i: internal residual
        // below 1e−8 and the ratio value matching the printed digits
        for (k, printed) in [(1u32, 0.05420f64), (2, 0.05398)] {
            let r = verify_transformations(TransformCheck::HStarInversion { k }, &[two_i], 1e-8)
                .map_err(|e| e.to_string())?;
            ensure(r.pass, || {
                format!("k={k} residual {:.3e}", r.max_residual())
            })?;
            let lhs = r.points[0].lhs.re;
            ensure(rel(lhs, printed) < 5e-4, || format!("k={k} defect = {lhs}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_08_chowla_selberg_values() {
    gate(8, "canonical period identities", || {
        let i_half = UpperHalfPoint::new(0.0, 0.5).map_err(|e| e.to_string())?;
        let eta = eta_value(i_half).map_err(|e| e.to_string())?;
        let omega = omega_period(-4).map_err(|e| e.to_string())?;
        let ratio = eta.re / omega.sqrt();
        let want = 2.0f64.powf(0.125);
        ensure((ratio - want).abs() < 1e-10, || {
            format!("eta(i/2)/sqrt(omega) = {ratio} vs {want}")
        })?;
        let target = 2.0f64.powf(-0.125);
        for k in [1u32, 2] {
            let r = cm_ratio(k, Complex64::new(0.0, 2.0), -4, None).map_err(|e| e.to_string())?;
            let dist =
                (Complex64::new(r.ratio_re, r.ratio_im) - Complex64::new(target, 0.0)).norm();
            ensure(dist < 1e-8, || {
                format!("k={k} ratio {}+{}i", r.ratio_re, r.ratio_im)
            })?;
        }
        Ok(())
    });
}

#[test]
fn criterion_09_asymptotic_table() {
    gate(9, "asymptotic reference table to ten decimals", || {
        let start = Instant::now();
        let rows = asymptotic_table(3, &[2.0, 1.5, 1.0, 0.5, 0.1]).map_err(|e| e.to_string())?;
        let printed: [(f64, f64, f64); 5] = [
            (0.2602861623, 0.2602864321, 0.9999989634),
            (0.6578359053, 0.6578359052, 0.9999999998),
            (2.3214805734, 2.3214805734, 1.0),
            (19.0665916994, 19.0665916994, 1.0),
            (2403.2805424358, 2403.2805424358, 1.0),
        ];
        for (row, (gh, gt, ratio)) in rows.iter().zip(printed) {
            ensure((row.g_hat - gh).abs() < 5e-10, || {
                format!("t={}: g_hat {} vs {gh}", row.t, row.g_hat)
            })?;
            ensure((row.g_tilde - gt).abs() < 5e-10, || {
                format!("t={}: g_tilde {} vs {gt}", row.t, row.g_tilde)
            })?;
            ensure((row.ratio - ratio).abs() < 5e-10, || {
                format!("t={}: ratio {} vs {ratio}", row.t, row.ratio)
            })?;
        }
        let elapsed = start.elapsed();
        ensure(elapsed.as_secs_f64() < 5.0, || {
            format!("took {elapsed:?} (budget 5 s)")
        })
    });
}

#[test]
fn criterion_10_cocycle_representations() {
    gate(10, "cocycle routes pairwise within 1e-6", || {
        for a in [-1i32, -3] {
            let r = verify_transformations(
                TransformCheck::CocyclePairwise { a },
                &cocycle_grid(),
                1e-6,
            )
            .map_err(|e| e.to_string())?;
            ensure(r.pass, || {
                format!("a={a} max pairwise residual {:.3e}", r.max_residual())
            })?;
        }
        Ok(())
    });
}

#[test]
fn criterion_11_completion_property_checks() {
    gate(11, "real-analytic completion pointwise checks", || {
        // Δ_0 image −3/π at three interior points
        let interior: Vec<UpperHalfPoint> = [(0.3, 1.0), (0.0, 1.3), (-0.4, 0.8)]
            .into_iter()
            .map(|(x, y)| UpperHalfPoint::new(x, y).unwrap())
            .collect();
        let r = verify_transformations(TransformCheck::E0Laplacian { t: 1 }, &interior, 1e-4)
            .map_err(|e| e.to_string())?;
        ensure(r.pass, || {
            format!("laplacian-0 max residual {:.3e}", r.max_residual())
        })?;

        // weight-zero inversion invariance at the documented point
        let z = UpperHalfPoint::new(1.0 / 3.0, 1.0).map_err(|e| e.to_string())?;
        let r = verify_transformations(TransformCheck::E0Inversion, &[z], 1e-8)
            .map_err(|e| e.to_string())?;
        ensure(r.pass, || {
            format!("weight-0 inversion residual {:.3e}", r.max_residual())
        })?;

        // weight −2 inversion transformation
        let z = UpperHalfPoint::new(0.2, 2.0 / 3.0).map_err(|e| e.to_string())?;
        let r = verify_transformations(TransformCheck::ENegInversion { k: 2 }, &[z], 1e-8)
            .map_err(|e| e.to_string())?;
        ensure(r.pass, || {
            format!("weight -2 inversion residual {:.3e}", r.max_residual())
        })?;

        // Δ_{−2} annihilation at i
        let z = UpperHalfPoint::new(0.0, 1.0).map_err(|e| e.to_string())?;
        let r = verify_transformations(TransformCheck::ENegLaplacian { k: 2, t: 1 }, &[z], 1e-3)
            .map_err(|e| e.to_string())?;
        ensure(r.pass, || {
            format!("laplacian -2 magnitude {:.3e}", r.max_residual())
        })
    });
}

#[test]
fn criterion_12_property_suites() {
    gate(12, "structural property suites on stated ranges", || {
        // hook count and conjugation symmetry
        for n in 0..=25u32 {
            for p in Partition::enumerate(n).map_err(|e| e.to_string())? {
                ensure(
                    qbracket::partition::hook_multiset(&p).len() as u64 == p.size(),
                    || format!("hook count off for {p}"),
                )?;
                if n <= 20 {
                    ensure(
                        qbracket::partition::hook_multiset(&p.conjugate())
                            == qbracket::partition::hook_multiset(&p),
                        || format!("conjugation asymmetry for {p}"),
                    )?;
                }
            }
        }
        // Bernoulli recurrence to 60
        for n in 1..=60usize {
            let mut acc = qbracket::rat::rat_zero();
            for j in 0..=n {
                acc += qbracket::Rat::from_integer(qbracket::rat::binomial_big(
                    (n + 1) as u64,
                    j as u64,
                )) * qbracket::special::bernoulli(j).map_err(|e| e.to_string())?;
            }
            ensure(qbracket::rat::rat_is_zero(&acc), || {
                format!("recurrence broke at {n}")
            })?;
        }
        // Hurwitz shift identity on a scatter of right-half-plane points
        for s in [2i64, 3, 5] {
            for (re, im) in [(0.7, 0.3), (2.4, -1.1), (0.2, 5.0), (3.3, 0.0)] {
                let w = Complex64::new(re, im);
                let lhs = qbracket::special::hurwitz_zeta(s, w).map_err(|e| e.to_string())?
                    - qbracket::special::hurwitz_zeta(s, w + 1.0).map_err(|e| e.to_string())?;
                let rhs = w.powi(-(s as i32));
                ensure((lhs - rhs).norm() < 1e-12, || {
                    format!("shift identity s={s} w={w}")
                })?;
            }
        }
        // character sums over a full period vanish for all fundamental D ≥ −400
        for d in (-400..0).filter(|&d| qbracket::chowla::is_fundamental(d)) {
            let sum: i64 = (1..=-d)
                .map(|j| qbracket::chowla::kronecker(d, j) as i64)
                .sum();
            ensure(sum == 0, || format!("character sum {sum} for D={d}"))?;
        }
        // series ring laws and bracket linearity live in the randomized
        // suite (tests/properties.rs); spot-check one algebraic identity
        // here so this criterion stands alone
        let e = qbracket::qseries::euler_series(20);
        let p = qbracket::qseries::eta_product_series(20);
        ensure(e.mul(&p) == qbracket::RatSeries::one(20), || {
            "euler·product != 1".to_string()
        })
    });
}

#[test]
fn divisor_expansion_record_runs() {
    // explicitly not a gate: the comparison record must come out, and no
    // agreement is asserted between the formula and the direct sum
    let r = divisor_expansion_comparison(0.1).expect("record evaluates");
    println!(
        "a=1 record: formula {} direct {} classical {} discrepancy {}",
        r.formula_value, r.direct_sum, r.classical_value, r.discrepancy
    );
    assert!(r.formula_value.is_finite());
    assert!(r.direct_sum.is_finite());
    assert!(r.classical_value.is_finite());
}

#[test]
fn hook_bracket_reference_rationals() {
    // exact spot values feeding criterion 2, pinned independently
    let hist = hook_histogram(8);
    let s = qbracket::qseries::hook_bracket_series(2, 1, 8, &hist);
    assert_eq!(s.coeff(2), rat(3, 2));
    let f = hook_function(&Partition::new(vec![2, 1]).unwrap(), 2, 1).unwrap();
    assert_eq!(f, rat(19, 9));
    assert!((rat_to_f64(&rat(307, 96)) - 3.197916666666).abs() < 1e-10);
}
