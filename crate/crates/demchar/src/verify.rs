//! Verification harness: sweeps a parameter grid, cross-checks every
//! closed form against the brute-force engine, and runs the convention,
//! operator and random-measure self-tests. Grid cells may be evaluated on
//! several threads; the report is byte-identical regardless.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::demazure::{
    apply_demazure, apply_sigma, apply_word, convention_sum_bounds, SignedMeasure,
};
use crate::formulas::{
    self, dimension, expected_degree, expected_finite_dev, limit_ratio_len, max_degree_closed,
    qchar_finite, recurrence_step, snake_expected, variance_finite, Axis, Family, FamilyKey,
};
use crate::lattice::{HighestWeight, WeightCoord};
use crate::stats::{
    covariance, expectation, max_degree, moment, pushforward, raw_moment, total_mass, variance,
    Functional,
};
use crate::weyl::Simple;

/// Inclusive bounds of the verification grid.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GridBounds {
    pub m_max: u32,
    pub n_max: u32,
    pub len_max: u32,
}

impl GridBounds {
    pub fn new(m_max: u32, n_max: u32, len_max: u32) -> Self {
        Self {
            m_max,
            n_max,
            len_max,
        }
    }
}

impl std::fmt::Display for GridBounds {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m<={},n<={},N<={}", self.m_max, self.n_max, self.len_max)
    }
}

impl std::str::FromStr for GridBounds {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut m_max = None;
        let mut n_max = None;
        let mut len_max = None;
        for part in s.split(',') {
            let part = part.trim();
            let (slot, rest) = if let Some(rest) = part.strip_prefix("m<=") {
                (&mut m_max, rest)
            } else if let Some(rest) = part.strip_prefix("n<=") {
                (&mut n_max, rest)
            } else if let Some(rest) = part.strip_prefix("N<=") {
                (&mut len_max, rest)
            } else {
                return Err(format!(
                    "bad grid component `{part}` (expected m<=A,n<=B,N<=C)"
                ));
            };
            let value: u32 = rest
                .trim()
                .parse()
                .map_err(|_| format!("bad grid bound `{rest}`"))?;
            *slot = Some(value);
        }
        match (m_max, n_max, len_max) {
            (Some(m), Some(n), Some(l)) => Ok(GridBounds::new(m, n, l)),
            _ => Err("grid must bound all of m, n and N".to_owned()),
        }
    }
}

/// The quantity a single check compares.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Quantity {
    Positivity,
    Dimension,
    ExpectedDegree,
    SnakeAgreesClosed,
    RecurrenceAgreesSnake,
    FiniteVariance,
    QChar,
    MaxDegree,
    FiniteMean,
    HistogramConsistency,
    SigmaEquivariance,
    ExtendedNormalization,
    CovarianceCollapse,
    MassRecursion,
    FiniteMeanAnchor,
    DiagonalTrick,
    Idempotence,
    GaussConvention,
    AsymptoticRatio,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Positivity => "positivity",
            Quantity::Dimension => "dimension",
            Quantity::ExpectedDegree => "expected-degree",
            Quantity::SnakeAgreesClosed => "snake-vs-closed",
            Quantity::RecurrenceAgreesSnake => "recurrence-vs-snake",
            Quantity::FiniteVariance => "finite-variance",
            Quantity::QChar => "qchar",
            Quantity::MaxDegree => "max-degree",
            Quantity::FiniteMean => "finite-mean",
            Quantity::HistogramConsistency => "histogram-consistency",
            Quantity::SigmaEquivariance => "sigma-equivariance",
            Quantity::ExtendedNormalization => "extended-normalization",
            Quantity::CovarianceCollapse => "covariance-collapse",
            Quantity::MassRecursion => "mass-recursion",
            Quantity::FiniteMeanAnchor => "finite-mean-anchor",
            Quantity::DiagonalTrick => "diagonal-trick",
            Quantity::Idempotence => "idempotence",
            Quantity::GaussConvention => "gauss-convention",
            Quantity::AsymptoticRatio => "asymptotic-ratio",
        }
    }
}

/// One failed check, locating the offending grid cell.
#[derive(Clone, Debug)]
pub struct Failure {
    pub m: u32,
    pub n: u32,
    pub len: u32,
    pub family: Option<Family>,
    pub quantity: Quantity,
    pub detail: String,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let family = self.family.map_or("-", |fam| fam.name());
        write!(
            f,
            "(m={}, n={}, N={}, family={}, quantity={}) {}",
            self.m,
            self.n,
            self.len,
            family,
            self.quantity.name(),
            self.detail
        )
    }
}

#[derive(Clone, Debug, Default)]
struct Tally {
    checks: u64,
    skipped: u64,
    counts: BTreeMap<&'static str, u64>,
    failures: Vec<Failure>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.skipped += other.skipped;
        for (name, count) in other.counts {
            *self.counts.entry(name).or_insert(0) += count;
        }
        self.failures.extend(other.failures);
    }
}

/// Report section: one named group of checks.
#[derive(Clone, Debug)]
pub struct SectionReport {
    pub name: &'static str,
    pub checks: u64,
    pub skipped: u64,
    pub failures: Vec<Failure>,
}

/// Aggregated verification report.
#[derive(Clone, Debug)]
pub struct Report {
    pub grid: GridBounds,
    pub sections: Vec<SectionReport>,
    quantity_counts: BTreeMap<&'static str, u64>,
}

impl Report {
    pub fn checks(&self) -> u64 {
        self.sections.iter().map(|s| s.checks).sum()
    }

    pub fn failure_count(&self) -> u64 {
        self.sections.iter().map(|s| s.failures.len() as u64).sum()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.sections.iter().flat_map(|s| s.failures.iter()).next()
    }

    pub fn quantity_count(&self, q: Quantity) -> u64 {
        self.quantity_counts.get(q.name()).copied().unwrap_or(0)
    }

    /// Deterministic text rendering; independent of thread count.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "verify grid: {}", self.grid).unwrap();
        for s in &self.sections {
            write!(
                out,
                "section {}: checks={} failures={}",
                s.name,
                s.checks,
                s.failures.len()
            )
            .unwrap();
            if s.skipped > 0 {
                write!(out, " skipped={}", s.skipped).unwrap();
            }
            out.push('\n');
        }
        writeln!(out, "checks by quantity:").unwrap();
        for (name, count) in &self.quantity_counts {
            writeln!(out, "  {name}={count}").unwrap();
        }
        writeln!(
            out,
            "total: checks={} failures={}",
            self.checks(),
            self.failure_count()
        )
        .unwrap();
        if let Some(f) = self.first_failure() {
            writeln!(out, "first failure: {f}").unwrap();
        }
        writeln!(
            out,
            "result: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
        .unwrap();
        out
    }
}

/// Harness options. `corrupt` perturbs the named closed form by one before
/// comparing, so tests can prove the harness actually catches mismatches.
#[derive(Clone, Debug)]
pub struct Options {
    pub threads: usize,
    pub corrupt: Option<Quantity>,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            threads: 1,
            corrupt: None,
        }
    }
}

struct Closed<'a> {
    opts: &'a Options,
}

impl Closed<'_> {
    fn corrupted(&self, q: Quantity) -> bool {
        self.opts.corrupt == Some(q)
    }

    fn dimension(&self, key: &FamilyKey) -> BigInt {
        let v = dimension(key);
        if self.corrupted(Quantity::Dimension) {
            v + 1
        } else {
            v
        }
    }

    fn expected_degree(&self, key: &FamilyKey) -> BigRational {
        let v = expected_degree(key);
        if self.corrupted(Quantity::ExpectedDegree) {
            v + BigRational::from_integer(BigInt::from(1))
        } else {
            v
        }
    }

    fn variance_finite(&self, key: &FamilyKey) -> BigRational {
        let v = variance_finite(key);
        if self.corrupted(Quantity::FiniteVariance) {
            v + BigRational::from_integer(BigInt::from(1))
        } else {
            v
        }
    }

    fn max_degree(&self, key: &FamilyKey) -> i64 {
        let v = max_degree_closed(key);
        if self.corrupted(Quantity::MaxDegree) {
            v + 1
        } else {
            v
        }
    }

    fn qchar(&self, key: &FamilyKey) -> crate::stats::Histogram {
        let v = qchar_finite(key);
        if self.corrupted(Quantity::QChar) {
            v.shifted(1)
        } else {
            v
        }
    }
}

struct UnitCtx<'a> {
    m: u32,
    n: u32,
    family: Family,
    closed: Closed<'a>,
    tally: Tally,
}

impl UnitCtx<'_> {
    fn record(&mut self, len: u32, quantity: Quantity, ok: bool, detail: impl FnOnce() -> String) {
        self.tally.checks += 1;
        *self.tally.counts.entry(quantity.name()).or_insert(0) += 1;
        if !ok {
            self.tally.failures.push(Failure {
                m: self.m,
                n: self.n,
                len,
                family: Some(self.family),
                quantity,
                detail: detail(),
            });
        }
    }
}

/// Standard-family letter newly applied when growing the word to `len`.
fn step_letter(j: Simple, len: u32) -> Simple {
    if len % 2 == 1 {
        j
    } else {
        j.other()
    }
}

fn run_unit(m: u32, n: u32, family: Family, grid: &GridBounds, opts: &Options) -> Tally {
    let mut ctx = UnitCtx {
        m,
        n,
        family,
        closed: Closed { opts },
        tally: Tally::default(),
    };
    let hw = HighestWeight::new(m, n);
    let j = family.j();
    let mut mu = SignedMeasure::delta(hw);
    // sigma-conjugate partner sweep: family s1 over the flipped weight
    let mut partner = if family == Family::Std0 {
        Some(SignedMeasure::delta(hw.flipped()))
    } else {
        None
    };
    // recurrence tracking for the standard families
    let mut rec: Option<(BigRational, BigRational)> = None;

    for len in 0..=grid.len_max {
        if len > 0 {
            if family.extended() {
                mu = apply_sigma(&apply_demazure(j, &mu));
            } else {
                mu = apply_demazure(step_letter(j, len), &mu);
            }
            if let Some(p) = partner.as_mut() {
                *p = apply_demazure(step_letter(j.other(), len), p);
            }
        }
        let key = family.key(m, n, len);
        check_cell(&mut ctx, &key, &mu);

        if !family.extended() {
            check_snake(&mut ctx, &key, &mut rec);
        }
        if let Some(p) = partner.as_ref() {
            check_sigma(&mut ctx, &key, &mu, p);
        }
    }

    if family.extended() {
        let normalized = apply_word(&family.key(m, n, grid.len_max).word(), hw);
        ctx.record(
            grid.len_max,
            Quantity::ExtendedNormalization,
            normalized == mu,
            || "normalized word measure differs from the stepwise sigma sweep".to_owned(),
        );
    }
    ctx.tally
}

fn check_cell(ctx: &mut UnitCtx<'_>, key: &FamilyKey, mu: &SignedMeasure) {
    let len = key.len;

    ctx.record(
        len,
        Quantity::Positivity,
        mu.is_positive() && !mu.is_empty(),
        || "full-word measure has nonpositive coefficients or empty support".to_owned(),
    );

    let mass = total_mass(mu);
    let dim = ctx.closed.dimension(key);
    ctx.record(len, Quantity::Dimension, mass == dim, || {
        format!("closed {dim}, brute {mass}")
    });

    let brute_ea = moment(mu, 1, 0).expect("family measures have positive mass");
    let closed_ea = ctx.closed.expected_degree(key);
    ctx.record(len, Quantity::ExpectedDegree, brute_ea == closed_ea, || {
        format!("closed {closed_ea}, brute {brute_ea}")
    });

    let brute_var = variance(mu, Functional::FiniteDev).expect("positive mass");
    let closed_var = ctx.closed.variance_finite(key);
    ctx.record(
        len,
        Quantity::FiniteVariance,
        brute_var == closed_var,
        || format!("closed {closed_var}, brute {brute_var}"),
    );

    if !key.extended {
        let brute_hist = pushforward(mu, Functional::FiniteDev);
        let closed_hist = ctx.closed.qchar(key);
        ctx.record(len, Quantity::QChar, brute_hist == closed_hist, || {
            "q-integer convolution differs from the finite-weight pushforward".to_owned()
        });
    }

    let brute_max = max_degree(mu).expect("nonempty support");
    let closed_max = ctx.closed.max_degree(key);
    ctx.record(len, Quantity::MaxDegree, brute_max == closed_max, || {
        format!("closed {closed_max}, brute {brute_max}")
    });

    let brute_dev = expectation(mu, Functional::FiniteDev).expect("positive mass");
    let closed_dev = expected_finite_dev(key);
    ctx.record(len, Quantity::FiniteMean, brute_dev == closed_dev, || {
        format!("closed {closed_dev}, brute {brute_dev}")
    });

    let deg_hist = pushforward(mu, Functional::Degree);
    let consistent = deg_hist.mass() == mass
        && deg_hist.mean().expect("positive mass") == brute_ea
        && pushforward(mu, Functional::FiniteDev).mass() == mass;
    ctx.record(len, Quantity::HistogramConsistency, consistent, || {
        "pushforward mass or mean differs from measure statistics".to_owned()
    });
}

fn check_snake(
    ctx: &mut UnitCtx<'_>,
    key: &FamilyKey,
    rec: &mut Option<(BigRational, BigRational)>,
) {
    let len = key.len;
    let snake = snake_expected(key);
    let closed = ctx.closed.expected_degree(key);
    ctx.record(len, Quantity::SnakeAgreesClosed, snake == closed, || {
        format!("snake {snake}, closed {closed}")
    });

    // advance the recurrence state and compare it with the snake value
    let half = |x: u32| BigRational::new(BigInt::from(x), BigInt::from(2));
    match len {
        0 => {}
        1 => {
            *rec = Some(match key.j {
                Simple::S0 => (half(key.m), BigRational::zero()),
                Simple::S1 => (BigRational::zero(), half(key.n)),
            });
        }
        _ => {
            let (ea, eb) = rec.as_mut().expect("seeded at length 1");
            let even = len.is_multiple_of(2);
            match (key.j, even) {
                (Simple::S0, true) => {
                    *ea = recurrence_step(ea, key, Axis::A).expect("parity");
                    *eb = &*ea + half(key.n);
                }
                (Simple::S0, false) => {
                    *eb = recurrence_step(eb, key, Axis::B).expect("parity");
                    *ea = &*eb + half(key.m);
                }
                (Simple::S1, true) => {
                    *eb = recurrence_step(eb, key, Axis::B).expect("parity");
                    *ea = &*eb + half(key.m);
                }
                (Simple::S1, false) => {
                    *ea = recurrence_step(ea, key, Axis::A).expect("parity");
                    *eb = &*ea + half(key.n);
                }
            }
            let ea = rec.as_ref().unwrap().0.clone();
            ctx.record(len, Quantity::RecurrenceAgreesSnake, ea == snake, || {
                format!("recurrence {ea}, snake {snake}")
            });
        }
    }
}

fn check_sigma(
    ctx: &mut UnitCtx<'_>,
    key: &FamilyKey,
    mu: &SignedMeasure,
    partner: &SignedMeasure,
) {
    let flipped = apply_sigma(mu);
    let measures_match = flipped == *partner;
    let swapped = FamilyKey::standard(key.n, key.m, key.len, Simple::S1);
    let closed_match = formulas::expected_degree_closed(&swapped)
        == formulas::expected_degree_closed(key) - expected_finite_dev(key);
    ctx.record(
        key.len,
        Quantity::SigmaEquivariance,
        measures_match && closed_match,
        || {
            "sigma flip of the s0 sweep differs from the s1 sweep over the flipped weight"
                .to_owned()
        },
    );
}

/// Deterministic generator for the seeded random-measure checks.
struct SplitMix64(u64);

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        Self(seed)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

const MEASURE_SEED: u64 = 0x5EED_D15C_0DE5_0001;

/// The fixed-seed nonnegative random measures used by the random-measure
/// section: up to 20 support points with coordinates in [-5, 5] and
/// coefficients in [1, 9], over small random highest weights.
pub fn seeded_measures(count: usize) -> Vec<SignedMeasure> {
    let mut rng = SplitMix64::new(MEASURE_SEED);
    (0..count)
        .map(|_| {
            let hw = HighestWeight::new(rng.below(6) as u32, rng.below(6) as u32);
            let size = 1 + rng.below(20) as usize;
            let entries = (0..size).map(|_| {
                let a = rng.below(11) as i64 - 5;
                let b = rng.below(11) as i64 - 5;
                let p = BigInt::from(1 + rng.below(9));
                (WeightCoord::new(a, b), p)
            });
            SignedMeasure::from_entries(hw, entries.collect::<Vec<_>>())
        })
        .collect()
}

fn record_global(
    tally: &mut Tally,
    hw: HighestWeight,
    quantity: Quantity,
    ok: bool,
    detail: impl FnOnce() -> String,
) {
    tally.checks += 1;
    *tally.counts.entry(quantity.name()).or_insert(0) += 1;
    if !ok {
        tally.failures.push(Failure {
            m: hw.m,
            n: hw.n,
            len: 0,
            family: None,
            quantity,
            detail: detail(),
        });
    }
}

fn raw_weighted_sum(mu: &SignedMeasure, f: impl Fn(WeightCoord) -> BigInt) -> BigInt {
    mu.iter().map(|(w, p)| p * f(*w)).sum()
}

fn random_measure_section(count: usize) -> Tally {
    let mut tally = Tally::default();
    for mu in seeded_measures(count) {
        let hw = mu.hw();
        let m = i64::from(hw.m);
        let n = i64::from(hw.n);
        let mass = total_mass(&mu);
        for j in [Simple::S0, Simple::S1] {
            let image = apply_demazure(j, &mu);

            let idempotent = apply_demazure(j, &image) == image;
            record_global(&mut tally, hw, Quantity::Idempotence, idempotent, || {
                format!("operator {j:?} is not idempotent on a random draw")
            });

            // diagonal trick in unnormalized form, valid for any masses
            for k in 0..=2u32 {
                let (lhs, rhs) = match j {
                    Simple::S1 => (
                        raw_moment(&image, k, 0),
                        raw_weighted_sum(&mu, |w| {
                            BigInt::from(w.a).pow(k)
                                * BigInt::from(n + 1 + 2 * w.finite_weight_dev())
                        }),
                    ),
                    Simple::S0 => (
                        raw_moment(&image, 0, k),
                        raw_weighted_sum(&mu, |w| {
                            BigInt::from(w.b).pow(k)
                                * BigInt::from(m + 1 - 2 * w.finite_weight_dev())
                        }),
                    ),
                };
                record_global(&mut tally, hw, Quantity::DiagonalTrick, lhs == rhs, || {
                    format!("k={k} j={j:?}: image sum {lhs}, source sum {rhs}")
                });
            }

            // mass recursion in unnormalized form
            let image_mass = total_mass(&image);
            let dev_sum = raw_weighted_sum(&mu, |w| BigInt::from(w.finite_weight_dev()));
            let expected_mass = match j {
                Simple::S0 => BigInt::from(m + 1) * &mass - BigInt::from(2) * &dev_sum,
                Simple::S1 => BigInt::from(n + 1) * &mass + BigInt::from(2) * &dev_sum,
            };
            record_global(
                &mut tally,
                hw,
                Quantity::MassRecursion,
                image_mass == expected_mass,
                || format!("j={j:?}: image mass {image_mass}, recursion {expected_mass}"),
            );

            if image_mass.is_zero() {
                tally.skipped += 1;
                continue;
            }

            // normalized mass recursion
            if !mass.is_zero() {
                let ratio = BigRational::new(image_mass.clone(), mass.clone());
                let e_dev = expectation(&mu, Functional::FiniteDev).expect("mass nonzero");
                let two = BigRational::from_integer(BigInt::from(2));
                let expected_ratio = match j {
                    Simple::S0 => BigRational::from_integer(BigInt::from(m + 1)) - &two * &e_dev,
                    Simple::S1 => BigRational::from_integer(BigInt::from(n + 1)) + &two * &e_dev,
                };
                record_global(
                    &mut tally,
                    hw,
                    Quantity::MassRecursion,
                    ratio == expected_ratio,
                    || format!("j={j:?}: normalized mass ratio {ratio} vs {expected_ratio}"),
                );
            }

            let anchor = expectation(&image, Functional::FiniteDev).expect("mass nonzero");
            let expected_anchor = match j {
                Simple::S0 => BigRational::new(BigInt::from(m), BigInt::from(2)),
                Simple::S1 => BigRational::new(BigInt::from(-n), BigInt::from(2)),
            };
            record_global(
                &mut tally,
                hw,
                Quantity::FiniteMeanAnchor,
                anchor == expected_anchor,
                || format!("j={j:?}: E[a-b] = {anchor}, anchor {expected_anchor}"),
            );

            let var_dev = variance(&image, Functional::FiniteDev).expect("mass nonzero");
            let (cov_a, cov_b) = (
                covariance(&image, Functional::Degree, Functional::FiniteDev).expect("mass"),
                covariance(&image, Functional::B, Functional::FiniteDev).expect("mass"),
            );
            let collapse_ok = match j {
                Simple::S0 => cov_a == var_dev && cov_b.is_zero(),
                Simple::S1 => cov_a.is_zero() && cov_b == -&var_dev,
            };
            record_global(
                &mut tally,
                hw,
                Quantity::CovarianceCollapse,
                collapse_ok,
                || format!("j={j:?}: Cov(a,a-b)={cov_a}, Cov(b,a-b)={cov_b}, Var(a-b)={var_dev}"),
            );
        }
    }
    tally
}

fn conventions_section() -> Tally {
    let mut tally = Tally::default();
    let origin = HighestWeight::new(0, 0);

    for k in -20i64..=20 {
        let (range, sign) = convention_sum_bounds(k);
        let index_sum: i64 = range.clone().sum::<i64>() * sign;
        let count = range.count() as i64 * sign;
        let ok = index_sum == k * (k + 1) / 2 && count == k + 1;
        record_global(&mut tally, origin, Quantity::GaussConvention, ok, || {
            format!("k={k}: signed index sum {index_sum}, signed count {count}")
        });
    }

    // point masses covering every pairing in [-10, 10] for both operators
    for j in [Simple::S0, Simple::S1] {
        for hw in [
            HighestWeight::new(0, 0),
            HighestWeight::new(1, 0),
            HighestWeight::new(0, 1),
        ] {
            for a in -6i64..=6 {
                let mu =
                    SignedMeasure::from_entries(hw, [(WeightCoord::new(a, 0), BigInt::from(1))]);
                let pairing = match j {
                    Simple::S0 => WeightCoord::new(a, 0).pairing_alpha0(hw),
                    Simple::S1 => WeightCoord::new(a, 0).pairing_alpha1(hw),
                };
                if !(-10..=10).contains(&pairing) {
                    continue;
                }
                let once = apply_demazure(j, &mu);
                let ok = apply_demazure(j, &once) == once;
                record_global(&mut tally, hw, Quantity::Idempotence, ok, || {
                    format!("point mass with pairing {pairing} under {j:?}")
                });
            }
        }
    }
    tally
}

fn asymptotics_section() -> Tally {
    let mut tally = Tally::default();
    let tolerance = BigRational::new(BigInt::from(1), BigInt::from(50));
    for (m, n) in [(1u32, 0u32), (0, 1), (2, 1)] {
        let hw = HighestWeight::new(m, n);
        let limit = limit_ratio_len(m, n);
        for j in [Simple::S0, Simple::S1] {
            let gap = |len: u32| {
                let key = FamilyKey::standard(m, n, len, j);
                let ratio = expected_degree(&key)
                    / BigRational::from_integer(BigInt::from(max_degree_closed(&key)));
                (ratio - &limit).abs()
            };
            let gap200 = gap(200);
            let gap400 = gap(400);
            record_global(
                &mut tally,
                hw,
                Quantity::AsymptoticRatio,
                gap200 <= tolerance,
                || format!("j={j:?}: |ratio(200) - limit| = {gap200} > 1/50"),
            );
            record_global(
                &mut tally,
                hw,
                Quantity::AsymptoticRatio,
                gap400 <= gap200,
                || format!("j={j:?}: gap at 400 exceeds gap at 200"),
            );
        }
    }
    tally
}

/// Runs the full verification suite over a grid.
pub fn run(grid: &GridBounds, opts: &Options) -> Report {
    let units: Vec<(u32, u32, Family)> = (0..=grid.m_max)
        .flat_map(|m| (0..=grid.n_max).flat_map(move |n| Family::ALL.map(move |f| (m, n, f))))
        .collect();

    let threads = opts.threads.max(1).min(units.len().max(1));
    let mut outcomes: Vec<Option<Tally>> = vec![None; units.len()];
    if threads <= 1 {
        for (slot, &(m, n, family)) in outcomes.iter_mut().zip(&units) {
            *slot = Some(run_unit(m, n, family, grid, opts));
        }
    } else {
        let collected: Vec<Vec<(usize, Tally)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|worker| {
                    let units = &units;
                    scope.spawn(move || {
                        units
                            .iter()
                            .enumerate()
                            .filter(|(idx, _)| idx % threads == worker)
                            .map(|(idx, &(m, n, family))| (idx, run_unit(m, n, family, grid, opts)))
                            .collect()
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verify worker"))
                .collect()
        });
        for chunk in collected {
            for (idx, tally) in chunk {
                outcomes[idx] = Some(tally);
            }
        }
    }

    let mut closed_forms = Tally::default();
    for tally in outcomes.into_iter().flatten() {
        closed_forms.merge(tally);
    }

    let random = random_measure_section(100);
    let conventions = conventions_section();
    let asymptotics = asymptotics_section();

    let mut quantity_counts = BTreeMap::new();
    let mut sections = Vec::new();
    for (name, tally) in [
        ("closed-forms", closed_forms),
        ("random-measures", random),
        ("conventions", conventions),
        ("asymptotics", asymptotics),
    ] {
        for (q, count) in &tally.counts {
            *quantity_counts.entry(*q).or_insert(0) += count;
        }
        sections.push(SectionReport {
            name,
            checks: tally.checks,
            skipped: tally.skipped,
            failures: tally.failures,
        });
    }

    Report {
        grid: *grid,
        sections,
        quantity_counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let grid: GridBounds = "m<=3,n<=2,N<=8".parse().unwrap();
        assert_eq!(grid, GridBounds::new(3, 2, 8));
        let grid: GridBounds = "N<=4, m<=1, n<=0".parse().unwrap();
        assert_eq!(grid, GridBounds::new(1, 0, 4));
        assert!("m<=3,n<=2".parse::<GridBounds>().is_err());
        assert!("m<=x,n<=2,N<=8".parse::<GridBounds>().is_err());
        assert_eq!(GridBounds::new(3, 2, 8).to_string(), "m<=3,n<=2,N<=8");
    }

    #[test]
    fn small_grid_passes() {
        let report = run(&GridBounds::new(2, 2, 5), &Options::default());
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.quantity_count(Quantity::Dimension), 9 * 4 * 6);
    }

    #[test]
    fn zero_length_grid_passes_trivially() {
        let report = run(&GridBounds::new(2, 2, 0), &Options::default());
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.quantity_count(Quantity::Dimension), 9 * 4);
    }

    #[test]
    fn corrupted_closed_forms_are_caught() {
        for q in [
            Quantity::Dimension,
            Quantity::ExpectedDegree,
            Quantity::FiniteVariance,
            Quantity::MaxDegree,
            Quantity::QChar,
        ] {
            let opts = Options {
                corrupt: Some(q),
                ..Options::default()
            };
            let report = run(&GridBounds::new(1, 1, 3), &opts);
            assert!(!report.passed(), "corruption of {q:?} went unnoticed");
            let first = report.first_failure().unwrap();
            assert_eq!(first.quantity, q);
            assert!(report.render().contains(q.name()));
        }
    }

    #[test]
    fn seeded_measures_are_reproducible_and_nonnegative() {
        let a = seeded_measures(100);
        let b = seeded_measures(100);
        assert_eq!(a.len(), 100);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
            assert!(x.is_positive());
            assert!(x.len() <= 20);
            for (w, _) in x.iter() {
                assert!((-5..=5).contains(&w.a) && (-5..=5).contains(&w.b));
            }
        }
    }

    #[test]
    fn reports_are_identical_across_thread_counts() {
        let grid = GridBounds::new(2, 1, 4);
        let single = run(
            &grid,
            &Options {
                threads: 1,
                corrupt: None,
            },
        );
        let multi = run(
            &grid,
            &Options {
                threads: 4,
                corrupt: None,
            },
        );
        assert_eq!(single.render(), multi.render());
    }
}
