//! Reference degree histograms for small highest weights, frozen as exact
//! multiplicity tables. Every table's total matches the dimension formula,
//! which pins both the transcription and the engine.

use num_bigint::BigInt;

use demchar::demazure::{apply_demazure, SignedMeasure};
use demchar::stats::{max_degree, pushforward, total_mass, Functional, Histogram};
use demchar::weyl::Simple;
use demchar::HighestWeight;

/// Degree histograms of the `std0` sweep over `(m, n)` for lengths
/// `0..=len_max`.
fn degree_sweep(m: u32, n: u32, len_max: u32) -> Vec<(SignedMeasure, Histogram)> {
    let mut mu = SignedMeasure::delta(HighestWeight::new(m, n));
    let mut out = vec![(mu.clone(), pushforward(&mu, Functional::Degree))];
    for len in 1..=len_max {
        let letter = if len % 2 == 1 { Simple::S0 } else { Simple::S1 };
        mu = apply_demazure(letter, &mu);
        out.push((mu.clone(), pushforward(&mu, Functional::Degree)));
    }
    out
}

fn hist(pairs: &[(i64, i64)]) -> Histogram {
    Histogram::from_entries(pairs.iter().map(|&(v, p)| (v, BigInt::from(p))))
}

fn value(h: &Histogram, at: i64) -> i64 {
    h.get(at)
        .map(|p| i64::try_from(p).expect("fits i64"))
        .unwrap_or(0)
}

#[test]
fn degree_histograms_level_one() {
    let sweep = degree_sweep(1, 0, 8);
    let expected: [&[(i64, i64)]; 9] = [
        &[(0, 1)],
        &[(0, 1), (1, 1)],
        &[(0, 1), (1, 3)],
        &[(0, 1), (1, 3), (2, 2), (3, 1), (4, 1)],
        &[(0, 1), (1, 3), (2, 4), (3, 3), (4, 5)],
        &[
            (0, 1),
            (1, 3),
            (2, 4),
            (3, 5),
            (4, 7),
            (5, 5),
            (6, 3),
            (7, 2),
            (8, 1),
            (9, 1),
        ],
        &[
            (0, 1),
            (1, 3),
            (2, 4),
            (3, 7),
            (4, 9),
            (5, 11),
            (6, 9),
            (7, 8),
            (8, 5),
            (9, 7),
        ],
        &[
            (0, 1),
            (1, 3),
            (2, 4),
            (3, 7),
            (4, 11),
            (5, 13),
            (6, 15),
            (7, 15),
            (8, 14),
            (9, 15),
            (10, 11),
            (11, 7),
            (12, 5),
            (13, 3),
            (14, 2),
            (15, 1),
            (16, 1),
        ],
        &[
            (0, 1),
            (1, 3),
            (2, 4),
            (3, 7),
            (4, 13),
            (5, 15),
            (6, 21),
            (7, 23),
            (8, 26),
            (9, 27),
            (10, 29),
            (11, 23),
            (12, 21),
            (13, 15),
            (14, 12),
            (15, 7),
            (16, 9),
        ],
    ];
    for (len, table) in expected.iter().enumerate() {
        assert_eq!(sweep[len].1, hist(table), "length {len}");
        assert_eq!(
            total_mass(&sweep[len].0),
            hist(table).mass(),
            "mass at {len}"
        );
    }
}

#[test]
fn degree_histograms_level_one_long_words() {
    let sweep = degree_sweep(1, 0, 18);

    let h17 = &sweep[17].1;
    assert_eq!(total_mass(&sweep[17].0), BigInt::from(1i64 << 17));
    for (d, p) in [
        (0, 1),
        (1, 3),
        (2, 4),
        (3, 7),
        (4, 13),
        (5, 19),
        (6, 29),
        (7, 43),
        (8, 62),
        (9, 88),
        (37, 4738),
        (38, 4770),
        (39, 4766),
        (79, 2),
        (80, 1),
        (81, 1),
    ] {
        assert_eq!(value(h17, d), p, "length 17, degree {d}");
    }
    assert_eq!(max_degree(&sweep[17].0).unwrap(), 81);

    let h18 = &sweep[18].1;
    assert_eq!(total_mass(&sweep[18].0), BigInt::from(1i64 << 18));
    for (d, p) in [
        (8, 62),
        (9, 90),
        (42, 8884),
        (43, 8920),
        (44, 8856),
        (80, 17),
        (81, 19),
    ] {
        assert_eq!(value(h18, d), p, "length 18, degree {d}");
    }
    // the degree-preserving operator keeps the support maximum
    assert_eq!(max_degree(&sweep[18].0).unwrap(), 81);
}

#[test]
fn degree_histograms_level_ten() {
    let sweep = degree_sweep(10, 0, 5);

    assert_eq!(sweep[0].1, Histogram::point(0));
    assert_eq!(
        sweep[1].1,
        hist(&(0..=10).map(|d| (d, 1)).collect::<Vec<_>>())
    );
    assert_eq!(
        sweep[2].1,
        hist(&(0..=10).map(|d| (d, 2 * d + 1)).collect::<Vec<_>>())
    );

    let n3: Vec<(i64, i64)> = [
        1, 3, 7, 12, 19, 27, 37, 48, 61, 75, 91, 85, 80, 75, 70, 65, 61, 56, 52, 48, 44, 40, 37,
        33, 30, 27, 24, 21, 19, 16, 14, 12, 10, 8, 7, 5, 4, 3, 2, 1, 1,
    ]
    .into_iter()
    .enumerate()
    .map(|(d, p)| (d as i64, p))
    .collect();
    assert_eq!(sweep[3].1, hist(&n3));
    assert_eq!(total_mass(&sweep[3].0), BigInt::from(1331));

    let h4 = &sweep[4].1;
    assert_eq!(total_mass(&sweep[4].0), BigInt::from(14641));
    for (d, p) in [(2, 9), (19, 708), (38, 76), (39, 39), (40, 41)] {
        assert_eq!(value(h4, d), p, "length 4, degree {d}");
    }

    let h5 = &sweep[5].1;
    for (d, p) in [(2, 9), (29, 5306), (30, 5314), (31, 5286), (89, 1), (90, 1)] {
        assert_eq!(value(h5, d), p, "length 5, degree {d}");
    }
    assert_eq!(max_degree(&sweep[5].0).unwrap(), 90);
}
