//! Acceptance suite: every criterion runs as its own test at its stated
//! exact tolerance and prints one pass line. Brute-force sweeps are cached
//! across criteria, since several share a grid.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use demchar::demazure::{apply_demazure, apply_sigma, SignedMeasure};
use demchar::formulas::{
    dimension, expected_degree, limit_ratio_len, max_degree_closed, qchar_finite, snake_expected,
    variance_finite, Family, FamilyKey,
};
use demchar::stats::{
    covariance, expectation, max_degree, moment, pushforward, total_mass, variance, Functional,
    Histogram,
};
use demchar::verify;
use demchar::weyl::Simple;
use demchar::{HighestWeight, WeightCoord};

struct Summary {
    mass: BigInt,
    e_a: BigRational,
    var_dev: BigRational,
    hist_deg: Histogram,
    hist_dev: Histogram,
    max_deg: i64,
}

fn summarize(mu: &SignedMeasure) -> Summary {
    Summary {
        mass: total_mass(mu),
        e_a: moment(mu, 1, 0).expect("family measures have positive mass"),
        var_dev: variance(mu, Functional::FiniteDev).expect("positive mass"),
        hist_deg: pushforward(mu, Functional::Degree),
        hist_dev: pushforward(mu, Functional::FiniteDev),
        max_deg: max_degree(mu).expect("nonempty support"),
    }
}

fn sweep(m: u32, n: u32, family: Family, len_max: u32) -> Vec<Summary> {
    let j = family.j();
    let mut mu = SignedMeasure::delta(HighestWeight::new(m, n));
    let mut out = Vec::with_capacity(len_max as usize + 1);
    out.push(summarize(&mu));
    for len in 1..=len_max {
        mu = if family.extended() {
            apply_sigma(&apply_demazure(j, &mu))
        } else {
            let letter = if len % 2 == 1 { j } else { j.other() };
            apply_demazure(letter, &mu)
        };
        out.push(summarize(&mu));
    }
    out
}

type SweepCache = Mutex<HashMap<(u32, u32, Family), Arc<Vec<Summary>>>>;

/// Brute-force summaries for lengths `0..=len_max`, cached per family sweep.
fn summaries(m: u32, n: u32, family: Family, len_max: u32) -> Arc<Vec<Summary>> {
    static CACHE: OnceLock<SweepCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(m, n, family)) {
        if hit.len() > len_max as usize {
            return hit.clone();
        }
    }
    let computed = Arc::new(sweep(m, n, family, len_max));
    cache
        .lock()
        .unwrap()
        .insert((m, n, family), computed.clone());
    computed
}

fn hist(pairs: &[(i64, i64)]) -> Histogram {
    Histogram::from_entries(pairs.iter().map(|&(v, p)| (v, BigInt::from(p))))
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[test]
fn criterion_01_figure_exact_histograms() {
    let sums = summaries(1, 0, Family::Std0, 18);
    assert_eq!(sums[2].hist_deg, hist(&[(0, 1), (1, 3)]));
    assert_eq!(
        sums[3].hist_deg,
        hist(&[(0, 1), (1, 3), (2, 2), (3, 1), (4, 1)])
    );
    assert_eq!(sums[17].hist_deg.get(38), Some(&BigInt::from(4770)));
    assert_eq!(sums[18].hist_deg.get(43), Some(&BigInt::from(8920)));
    println!("acceptance criterion 1 (figure-exact degree histograms): pass");
}

#[test]
fn criterion_02_sanderson_dimension() {
    let mut checked = 0u64;
    for m in 0..=6u32 {
        for n in 0..=6u32 {
            for family in [Family::Std0, Family::Std1] {
                let sums = summaries(m, n, family, 14);
                for len in 0..=14u32 {
                    let key = family.key(m, n, len);
                    assert_eq!(
                        sums[len as usize].mass,
                        dimension(&key),
                        "dimension mismatch at {key:?}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 7 * 7 * 2 * 15);
    println!("acceptance criterion 2 (Sanderson dimension, m,n<=6, N<=14): pass");
}

#[test]
fn criterion_03_expected_degree() {
    let mut checked = 0u64;
    for m in 0..=5u32 {
        for n in 0..=5u32 {
            for family in Family::ALL {
                let sums = summaries(m, n, family, 12);
                for len in 0..=12u32 {
                    let key = family.key(m, n, len);
                    let brute = &sums[len as usize].e_a;
                    assert_eq!(brute, &expected_degree(&key), "closed form at {key:?}");
                    if !family.extended() {
                        assert_eq!(brute, &snake_expected(&key), "snake at {key:?}");
                    }
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 6 * 6 * 4 * 13);
    println!("acceptance criterion 3 (expected degree, closed + snake, m,n<=5, N<=12): pass");
}

#[test]
fn criterion_04_finite_weight_variance_and_qchar() {
    let mut checked = 0u64;
    for m in 0..=5u32 {
        for n in 0..=5u32 {
            for family in Family::ALL {
                let sums = summaries(m, n, family, 12);
                for len in 0..=12u32 {
                    let key = family.key(m, n, len);
                    assert_eq!(
                        sums[len as usize].var_dev,
                        variance_finite(&key),
                        "variance at {key:?}"
                    );
                    if !family.extended() {
                        assert_eq!(
                            sums[len as usize].hist_dev,
                            qchar_finite(&key),
                            "q-integer character at {key:?}"
                        );
                    }
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 6 * 6 * 4 * 13);
    println!("acceptance criterion 4 (finite-weight variance and q-character): pass");
}

#[test]
fn criterion_05_covariance_identities() {
    let mut checked = 0u64;
    let mut skipped = 0u64;
    for mu in verify::seeded_measures(100) {
        for j in [Simple::S0, Simple::S1] {
            let image = apply_demazure(j, &mu);
            if total_mass(&image).is_zero() {
                skipped += 1;
                continue;
            }
            let var_dev = variance(&image, Functional::FiniteDev).unwrap();
            let cov_a = covariance(&image, Functional::Degree, Functional::FiniteDev).unwrap();
            let cov_b = covariance(&image, Functional::B, Functional::FiniteDev).unwrap();
            match j {
                Simple::S0 => {
                    assert_eq!(cov_b, BigRational::zero(), "Cov(b, a-b) after D0");
                    assert_eq!(cov_a, var_dev, "Cov(a, a-b) after D0");
                }
                Simple::S1 => {
                    assert_eq!(cov_a, BigRational::zero(), "Cov(a, a-b) after D1");
                    assert_eq!(cov_b, -var_dev, "Cov(b, a-b) after D1");
                }
            }
            checked += 1;
        }
    }
    assert!(checked >= 150, "too many zero-mass draws: {skipped}");
    println!(
        "acceptance criterion 5 (covariance collapse on {checked} random images, {skipped} skipped): pass"
    );
}

#[test]
fn criterion_06_mass_and_mean_anchors() {
    let mut checked = 0u64;
    for mu in verify::seeded_measures(100) {
        let hw = mu.hw();
        let mass = total_mass(&mu);
        let e_dev = expectation(&mu, Functional::FiniteDev).unwrap();
        let mass_rat = BigRational::from_integer(mass.clone());
        for j in [Simple::S0, Simple::S1] {
            let image = apply_demazure(j, &mu);
            let image_mass = BigRational::from_integer(total_mass(&image));
            let two = BigRational::from_integer(BigInt::from(2));
            let expected_mass = match j {
                Simple::S0 => {
                    &mass_rat * (BigRational::from_integer(BigInt::from(hw.m + 1)) - &two * &e_dev)
                }
                Simple::S1 => {
                    &mass_rat * (BigRational::from_integer(BigInt::from(hw.n + 1)) + &two * &e_dev)
                }
            };
            assert_eq!(image_mass, expected_mass, "mass recursion for {j:?}");
            checked += 1;

            if image_mass.is_zero() {
                continue;
            }
            let anchor = expectation(&image, Functional::FiniteDev).unwrap();
            let expected_anchor = match j {
                Simple::S0 => ratio(i64::from(hw.m), 2),
                Simple::S1 => ratio(-i64::from(hw.n), 2),
            };
            assert_eq!(anchor, expected_anchor, "finite-weight anchor for {j:?}");
            checked += 1;
        }
    }
    assert!(checked >= 300);
    println!("acceptance criterion 6 (mass recursions and finite-weight anchors): pass");
}

#[test]
fn criterion_07_max_degree() {
    let mut checked = 0u64;
    for m in 0..=5u32 {
        for n in 0..=5u32 {
            for family in Family::ALL {
                let sums = summaries(m, n, family, 12);
                for len in 0..=12u32 {
                    let key = family.key(m, n, len);
                    assert_eq!(
                        sums[len as usize].max_deg,
                        max_degree_closed(&key),
                        "max degree at {key:?}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 6 * 6 * 4 * 13);
    println!("acceptance criterion 7 (maximal degree, standard and extended): pass");
}

#[test]
fn criterion_08_asymptotic_ratios() {
    let tolerance = ratio(1, 50);
    for (m, n) in [(1u32, 0u32), (0, 1), (2, 1)] {
        let limit = limit_ratio_len(m, n);
        for j in [Simple::S0, Simple::S1] {
            let gap = |len: u32| {
                let key = FamilyKey::standard(m, n, len, j);
                let r = expected_degree(&key)
                    / BigRational::from_integer(BigInt::from(max_degree_closed(&key)));
                (r - &limit).abs()
            };
            let g200 = gap(200);
            let g400 = gap(400);
            assert!(
                g200 <= tolerance,
                "(m,n)=({m},{n}) j={j:?}: gap(200)={g200}"
            );
            assert!(
                g400 <= g200,
                "(m,n)=({m},{n}) j={j:?}: no improvement at 400"
            );
        }
    }
    println!("acceptance criterion 8 (expected/maximal degree ratio asymptotics): pass");
}

#[test]
fn criterion_09_convention_and_operator_self_tests() {
    // Gauss's formula under the extended summation convention.
    for k in -20i64..=20 {
        let (range, sign) = demchar::demazure::convention_sum_bounds(k);
        let index_sum: i64 = range.clone().sum::<i64>() * sign;
        let count = range.count() as i64 * sign;
        assert_eq!(index_sum, k * (k + 1) / 2, "index sum at k={k}");
        assert_eq!(count, k + 1, "count at k={k}");
    }

    // Idempotence on point masses covering every pairing in [-10, 10].
    let mut pairings_seen = std::collections::BTreeSet::new();
    for j in [Simple::S0, Simple::S1] {
        for hw in [
            HighestWeight::new(0, 0),
            HighestWeight::new(1, 0),
            HighestWeight::new(0, 1),
        ] {
            for a in -6i64..=6 {
                let coord = WeightCoord::new(a, 0);
                let pairing = match j {
                    Simple::S0 => coord.pairing_alpha0(hw),
                    Simple::S1 => coord.pairing_alpha1(hw),
                };
                if !(-10..=10).contains(&pairing) {
                    continue;
                }
                pairings_seen.insert(pairing);
                let mu = SignedMeasure::from_entries(hw, [(coord, BigInt::from(1))]);
                let once = apply_demazure(j, &mu);
                assert_eq!(apply_demazure(j, &once), once, "pairing {pairing}, {j:?}");
            }
        }
    }
    assert_eq!(pairings_seen.len(), 21, "pairings -10..=10 all exercised");

    // Idempotence on the criterion-5 random measures.
    for mu in verify::seeded_measures(100) {
        for j in [Simple::S0, Simple::S1] {
            let once = apply_demazure(j, &mu);
            assert_eq!(apply_demazure(j, &once), once);
        }
    }
    println!("acceptance criterion 9 (summation convention and idempotence self-tests): pass");
}

#[test]
fn criterion_10_verify_determinism() {
    let grid = verify::GridBounds::new(2, 2, 6);
    let single = verify::run(
        &grid,
        &verify::Options {
            threads: 1,
            corrupt: None,
        },
    );
    let multi = verify::run(
        &grid,
        &verify::Options {
            threads: 4,
            corrupt: None,
        },
    );
    let a = single.render();
    let b = multi.render();
    assert_eq!(
        a.as_bytes(),
        b.as_bytes(),
        "reports differ across thread counts"
    );
    assert!(single.passed(), "{a}");
    println!("acceptance criterion 10 (verification report determinism): pass");
}
