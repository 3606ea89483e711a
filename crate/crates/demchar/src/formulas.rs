//! Closed forms and recurrences for the standard and extended word
//! families: dimension, expected degree, finite-weight variance, the
//! q-integer form of the finite-weight histogram, maximal degree, and the
//! limit ratios of expected to maximal degree. Everything the brute-force
//! engine can compute on these families is cross-checkable here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::lattice::HighestWeight;
use crate::stats::Histogram;
use crate::weyl::{extended_word, standard_word, Simple, WeylWord};

/// Formula evaluation failure modes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
pub enum FormulaError {
    /// A recurrence equation was requested for the coordinate whose
    /// displayed case does not cover this word length's parity.
    #[error("recurrence for this coordinate does not apply at this parity")]
    ParityMismatch,
    /// The displayed limit ratio has a vanishing denominator at this length.
    #[error("limit ratio denominator vanishes at this length")]
    DegenerateDenominator,
}

/// One of the four word families exposed by the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Std0,
    Std1,
    Ext0,
    Ext1,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Std0, Family::Std1, Family::Ext0, Family::Ext1];

    pub fn j(self) -> Simple {
        match self {
            Family::Std0 | Family::Ext0 => Simple::S0,
            Family::Std1 | Family::Ext1 => Simple::S1,
        }
    }

    pub fn extended(self) -> bool {
        matches!(self, Family::Ext0 | Family::Ext1)
    }

    pub fn key(self, m: u32, n: u32, len: u32) -> FamilyKey {
        FamilyKey {
            m,
            n,
            len,
            j: self.j(),
            extended: self.extended(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Std0 => "std0",
            Family::Std1 => "std1",
            Family::Ext0 => "ext0",
            Family::Ext1 => "ext1",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "std0" => Ok(Family::Std0),
            "std1" => Ok(Family::Std1),
            "ext0" => Ok(Family::Ext0),
            "ext1" => Ok(Family::Ext1),
            other => Err(format!(
                "unknown family `{other}` (expected std0, std1, ext0 or ext1)"
            )),
        }
    }
}

/// Parameters selecting one member of a word family: highest weight
/// coefficients, word length, rightmost reflection, and whether the word is
/// the sigma-extended variant. Length 0 always denotes the point mass, so
/// every closed form extends to it with the trivial value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilyKey {
    pub m: u32,
    pub n: u32,
    pub len: u32,
    pub j: Simple,
    pub extended: bool,
}

impl FamilyKey {
    pub fn standard(m: u32, n: u32, len: u32, j: Simple) -> Self {
        Self {
            m,
            n,
            len,
            j,
            extended: false,
        }
    }

    pub fn extended(m: u32, n: u32, len: u32, j: Simple) -> Self {
        Self {
            m,
            n,
            len,
            j,
            extended: true,
        }
    }

    pub fn hw(&self) -> HighestWeight {
        HighestWeight::new(self.m, self.n)
    }

    pub fn family(&self) -> Family {
        match (self.j, self.extended) {
            (Simple::S0, false) => Family::Std0,
            (Simple::S1, false) => Family::Std1,
            (Simple::S0, true) => Family::Ext0,
            (Simple::S1, true) => Family::Ext1,
        }
    }

    pub fn word(&self) -> WeylWord {
        if self.extended {
            extended_word(self.len, self.j)
        } else {
            standard_word(self.len, self.j)
        }
    }

    pub fn with_len(&self, len: u32) -> Self {
        Self { len, ..*self }
    }

    /// `m` for the `s0` family, `n` for the `s1` family: the coefficient
    /// entering the family-specific part of each closed form.
    fn lead_coeff(&self) -> i64 {
        match self.j {
            Simple::S0 => i64::from(self.m),
            Simple::S1 => i64::from(self.n),
        }
    }

    fn level(&self) -> i64 {
        i64::from(self.m) + i64::from(self.n)
    }
}

fn rat(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

fn rat_i(n: i64, d: i64) -> BigRational {
    rat(BigInt::from(n), BigInt::from(d))
}

fn floor_half(x: i64) -> i64 {
    x.div_euclid(2)
}

fn ceil_half(x: i64) -> i64 {
    -((-x).div_euclid(2))
}

/// Total mass of the family measure: 1 for length 0, otherwise
/// `(c+1)(m+n+1)^(len-1)` where `c` is `m` or `n` by family. The
/// sigma-extended variant has the same dimension, since the automorphism
/// operator permutes point masses bijectively.
pub fn dimension(key: &FamilyKey) -> BigInt {
    if key.len == 0 {
        return BigInt::one();
    }
    let base = BigInt::from(key.level() + 1);
    BigInt::from(key.lead_coeff() + 1) * Pow::pow(&base, key.len - 1)
}

/// Shared leading term of every expected-degree formula:
/// `[2(L-1)c(c+2) + (L-1)(L-2)s(s+2)] / [12(s+1)]`.
fn expected_degree_lead(key: &FamilyKey) -> BigRational {
    let l = BigInt::from(key.len);
    let c = BigInt::from(key.lead_coeff());
    let s = BigInt::from(key.level());
    let one = BigInt::one();
    let two = BigInt::from(2);
    let numer =
        &two * (&l - &one) * &c * (&c + &two) + (&l - &one) * (&l - &two) * &s * (&s + &two);
    rat(numer, BigInt::from(12) * (s + one))
}

/// Expected degree of the standard family measure.
pub fn expected_degree_closed(key: &FamilyKey) -> BigRational {
    debug_assert!(!key.extended);
    if key.len == 0 {
        return BigRational::zero();
    }
    let l = i64::from(key.len);
    let s = key.level();
    let tail = match key.j {
        Simple::S0 => rat_i(floor_half(l - 1) * s, 2) + rat_i(i64::from(key.m), 2),
        Simple::S1 => rat_i(floor_half(l) * s, 2),
    };
    expected_degree_lead(key) + tail
}

/// Expected degree of the sigma-extended family measure.
pub fn expected_degree_extended(key: &FamilyKey) -> BigRational {
    debug_assert!(key.extended);
    if key.len == 0 {
        return BigRational::zero();
    }
    let l = i64::from(key.len);
    let m = i64::from(key.m);
    let n = i64::from(key.n);
    let tail = match key.j {
        Simple::S0 => rat_i(floor_half(l - 1) * n, 2) + rat_i(floor_half(l) * m, 2),
        Simple::S1 => rat_i(ceil_half(l - 1) * m, 2) + rat_i(ceil_half(l) * n, 2),
    };
    expected_degree_lead(key) + tail
}

/// Expected degree for either variant.
pub fn expected_degree(key: &FamilyKey) -> BigRational {
    if key.extended {
        expected_degree_extended(key)
    } else {
        expected_degree_closed(key)
    }
}

/// Variance of the finite-weight deviation:
/// `[c(c+2) + (len-1)(m+n)(m+n+2)] / 12`. The automorphism negates the
/// deviation, so the extended variant shares the standard value.
pub fn variance_finite(key: &FamilyKey) -> BigRational {
    if key.len == 0 {
        return BigRational::zero();
    }
    let l = BigInt::from(key.len);
    let c = BigInt::from(key.lead_coeff());
    let s = BigInt::from(key.level());
    let two = BigInt::from(2);
    let numer = &c * (&c + &two) + (l - BigInt::one()) * &s * (&s + two);
    rat(numer, BigInt::from(12))
}

/// Closed expectation of the finite-weight deviation, determined by the
/// last operator applied: `m/2` after `D0`, `-n/2` after `D1`, and negated
/// when the normalized extended word ends with the sigma flip.
pub fn expected_finite_dev(key: &FamilyKey) -> BigRational {
    if key.len == 0 {
        return BigRational::zero();
    }
    let odd = key.len % 2 == 1;
    let standard = match key.j {
        Simple::S0 => {
            if odd {
                rat_i(i64::from(key.m), 2)
            } else {
                rat_i(-i64::from(key.n), 2)
            }
        }
        Simple::S1 => {
            if odd {
                rat_i(-i64::from(key.n), 2)
            } else {
                rat_i(i64::from(key.m), 2)
            }
        }
    };
    if key.extended && odd {
        -standard
    } else {
        standard
    }
}

/// Closed expectation of the `b` coordinate.
pub fn expected_b(key: &FamilyKey) -> BigRational {
    expected_degree(key) - expected_finite_dev(key)
}

/// The q-integer measure: unit masses at `0 .. k-1`.
pub fn q_integer(k: u32) -> Histogram {
    Histogram::from_entries((0..i64::from(k)).map(|v| (v, BigInt::one())))
}

/// The finite-weight histogram of a standard family measure in its
/// convolution form: a shift convolved with one q-integer for the first
/// operator and `len - 1` copies of the level q-integer.
pub fn qchar_finite(key: &FamilyKey) -> Histogram {
    debug_assert!(!key.extended);
    if key.len == 0 {
        return Histogram::point(0);
    }
    let l = i64::from(key.len);
    let s = key.level();
    let (shift, first) = match key.j {
        Simple::S0 => (-s * floor_half(l), q_integer(key.m + 1)),
        Simple::S1 => (
            -i64::from(key.n) - s * (ceil_half(l) - 1),
            q_integer(key.n + 1),
        ),
    };
    let level_q = q_integer((key.level() + 1) as u32);
    let mut out = first;
    for _ in 1..key.len {
        out = out.convolve(&level_q);
    }
    out.shifted(shift)
}

/// Which coordinate a recurrence step tracks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    A,
    B,
}

/// One step of the displayed recurrences: from the expectation of the
/// tracked coordinate at length `len - 1` to the same coordinate at `len`.
///
/// The `s0` family tracks `a` at even lengths and `b` at odd lengths; the
/// `s1` family tracks `b` at even lengths and `a` at odd lengths. Requesting
/// the other coordinate is a [`FormulaError::ParityMismatch`]. The mass
/// ratio is taken from [`dimension`].
pub fn recurrence_step(
    prev: &BigRational,
    key: &FamilyKey,
    axis: Axis,
) -> Result<BigRational, FormulaError> {
    assert!(key.len >= 2, "recurrence steps start at length 2");
    debug_assert!(!key.extended);
    let even = key.len.is_multiple_of(2);
    let valid = match (key.j, axis) {
        (Simple::S0, Axis::A) | (Simple::S1, Axis::B) => even,
        (Simple::S0, Axis::B) | (Simple::S1, Axis::A) => !even,
    };
    if !valid {
        return Err(FormulaError::ParityMismatch);
    }
    let mass_ratio = rat(dimension(&key.with_len(key.len - 1)), dimension(key));
    let l = BigInt::from(key.len);
    let c = BigInt::from(key.lead_coeff());
    let s = BigInt::from(key.level());
    let two = BigInt::from(2);
    let extra = rat(
        &c * (&c + &two) + (l - two) * &s * (&s + BigInt::from(2)),
        BigInt::from(6),
    );
    let level_plus_one = rat(s + BigInt::one(), BigInt::one());
    Ok(mass_ratio * (level_plus_one * prev + extra))
}

/// Expected degree of a standard family measure by the snake recursion:
/// alternating coordinate tracking with the half-integer finite-weight
/// shifts, seeded at length 1. Independent of [`expected_degree_closed`].
pub fn snake_expected(key: &FamilyKey) -> BigRational {
    debug_assert!(!key.extended);
    if key.len == 0 {
        return BigRational::zero();
    }
    let half_m = rat_i(i64::from(key.m), 2);
    let half_n = rat_i(i64::from(key.n), 2);
    let (mut ea, mut eb) = match key.j {
        Simple::S0 => (half_m.clone(), BigRational::zero()),
        Simple::S1 => (BigRational::zero(), half_n.clone()),
    };
    let level_plus_one = rat_i(key.level() + 1, 1);
    for t in 2..=key.len {
        let inc = rat_i(2, 1) * variance_finite(&key.with_len(t - 1)) / &level_plus_one;
        match (key.j, t % 2 == 0) {
            (Simple::S0, true) => {
                ea += inc;
                eb = &ea + &half_n;
            }
            (Simple::S0, false) => {
                eb += inc;
                ea = &eb + &half_m;
            }
            (Simple::S1, true) => {
                eb += inc;
                ea = &eb + &half_m;
            }
            (Simple::S1, false) => {
                ea += inc;
                eb = &ea + &half_n;
            }
        }
    }
    ea
}

/// Highest degree of a weight in the family measure.
pub fn max_degree_closed(key: &FamilyKey) -> i64 {
    let l = i64::from(key.len);
    let m = i128::from(key.m);
    let n = i128::from(key.n);
    let s = m + n;
    let h = i128::from(ceil_half(l));
    let f = i128::from(floor_half(l));
    let value = match (key.j, key.extended) {
        (Simple::S0, false) => h * m + s * (h - 1) * h,
        (Simple::S1, false) => f * (m + 2 * n) + s * (f - 1) * f,
        (Simple::S0, true) => f * m + s * i128::from(floor_half(l - 1)) * f,
        (Simple::S1, true) => h * n + s * f * h,
    };
    i64::try_from(value).expect("maximal degree exceeds machine range")
}

/// Limit of expected over maximal degree as the word length grows:
/// `(m+n+2) / (3(m+n+1))`, shared by all four families.
pub fn limit_ratio_len(m: u32, n: u32) -> BigRational {
    let s = i64::from(m) + i64::from(n);
    rat_i(s + 2, 3 * (s + 1))
}

/// Which highest-weight coefficient grows in a coefficient limit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoeffDirection {
    MLarge,
    NLarge,
}

/// Limit of expected over maximal degree as one highest-weight coefficient
/// grows, at fixed word length. Degenerate denominators (small lengths of
/// some families) are reported as errors rather than guessed.
pub fn limit_ratio_coeff(
    len: u32,
    j: Simple,
    direction: CoeffDirection,
    extended: bool,
) -> Result<BigRational, FormulaError> {
    assert!(len >= 1, "coefficient limits start at length 1");
    let l = i64::from(len);
    let h = ceil_half(l);
    let f = floor_half(l);
    let sq = l * l;
    let (numer, denom) = match (extended, j, direction) {
        (false, Simple::S0, CoeffDirection::MLarge) => (sq - l + 6 * h, 12 * h * h),
        (false, Simple::S0, CoeffDirection::NLarge) => (sq - 3 * l - 4 + 6 * h, 12 * h * (h - 1)),
        (false, Simple::S1, CoeffDirection::MLarge) => (sq - 3 * l + 2 + 6 * f, 12 * f * f),
        (false, Simple::S1, CoeffDirection::NLarge) => (sq - l + 6 * f, 12 * f * (f + 1)),
        (true, Simple::S0, CoeffDirection::MLarge) => (sq - l + 6 * f, 12 * f * h),
        (true, Simple::S0, CoeffDirection::NLarge) => (sq - 3 * l - 4 + 6 * h, 12 * f * (h - 1)),
        (true, Simple::S1, CoeffDirection::MLarge) => (sq - 3 * l + 2 + 6 * f, 12 * f * h),
        (true, Simple::S1, CoeffDirection::NLarge) => (sq - l + 6 * h, 12 * h * (f + 1)),
    };
    if denom == 0 {
        return Err(FormulaError::DegenerateDenominator);
    }
    Ok(rat_i(numer, denom))
}
