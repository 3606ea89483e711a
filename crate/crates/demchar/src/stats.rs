//! Exact statistics of signed measures: total mass, mixed moments in the
//! two coordinates, covariance/variance of the coordinate functionals, and
//! pushforward histograms. All values are arbitrary-precision integers or
//! exact rationals; nothing here touches floating point.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

use crate::demazure::SignedMeasure;
use crate::lattice::WeightCoord;

/// Statistics failure modes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
pub enum StatsError {
    /// Expectations are undefined on measures of total mass zero.
    #[error("measure has zero total mass")]
    ZeroMass,
    /// The measure has empty support.
    #[error("measure has empty support")]
    EmptyMeasure,
}

/// The coordinate functionals statistics are taken against.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Functional {
    /// The degree, coordinate `a`.
    Degree,
    /// The coordinate `b`.
    B,
    /// The finite-weight deviation `a - b`.
    FiniteDev,
}

impl Functional {
    pub fn eval(self, w: WeightCoord) -> i64 {
        match self {
            Functional::Degree => w.degree(),
            Functional::B => w.b,
            Functional::FiniteDev => w.finite_weight_dev(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Functional::Degree => "a",
            Functional::B => "b",
            Functional::FiniteDev => "a-b",
        }
    }
}

/// Sum of all coefficients; zero or negative only for artificial signed
/// inputs, strictly positive for full-word measures.
pub fn total_mass(mu: &SignedMeasure) -> BigInt {
    mu.iter().map(|(_, p)| p).sum()
}

/// Unnormalized moment `sum mu({w}) * a^p * b^q` over the support.
pub fn raw_moment(mu: &SignedMeasure, p: u32, q: u32) -> BigInt {
    mu.iter()
        .map(|(w, c)| c * BigInt::from(w.a).pow(p) * BigInt::from(w.b).pow(q))
        .sum()
}

/// Exact expectation of `a^p * b^q`.
pub fn moment(mu: &SignedMeasure, p: u32, q: u32) -> Result<BigRational, StatsError> {
    let mass = total_mass(mu);
    if mass.is_zero() {
        return Err(StatsError::ZeroMass);
    }
    Ok(BigRational::new(raw_moment(mu, p, q), mass))
}

fn raw_functional_sum(mu: &SignedMeasure, f: Functional) -> BigInt {
    mu.iter().map(|(w, c)| c * BigInt::from(f.eval(*w))).sum()
}

fn raw_product_sum(mu: &SignedMeasure, f: Functional, g: Functional) -> BigInt {
    mu.iter()
        .map(|(w, c)| c * BigInt::from(f.eval(*w)) * BigInt::from(g.eval(*w)))
        .sum()
}

/// Exact expectation of a coordinate functional.
pub fn expectation(mu: &SignedMeasure, f: Functional) -> Result<BigRational, StatsError> {
    let mass = total_mass(mu);
    if mass.is_zero() {
        return Err(StatsError::ZeroMass);
    }
    Ok(BigRational::new(raw_functional_sum(mu, f), mass))
}

/// Exact covariance of two coordinate functionals.
pub fn covariance(
    mu: &SignedMeasure,
    f: Functional,
    g: Functional,
) -> Result<BigRational, StatsError> {
    let mass = total_mass(mu);
    if mass.is_zero() {
        return Err(StatsError::ZeroMass);
    }
    let sf = raw_functional_sum(mu, f);
    let sg = raw_functional_sum(mu, g);
    let sfg = raw_product_sum(mu, f, g);
    Ok(BigRational::new(&mass * sfg - sf * sg, &mass * &mass))
}

/// Exact variance of a coordinate functional.
pub fn variance(mu: &SignedMeasure, f: Functional) -> Result<BigRational, StatsError> {
    covariance(mu, f, f)
}

/// Image of the measure under a coordinate functional.
pub fn pushforward(mu: &SignedMeasure, f: Functional) -> Histogram {
    Histogram::from_entries(mu.iter().map(|(w, p)| (f.eval(*w), p.clone())))
}

/// Maximum degree over the support.
pub fn max_degree(mu: &SignedMeasure) -> Result<i64, StatsError> {
    mu.iter()
        .map(|(w, _)| w.degree())
        .max()
        .ok_or(StatsError::EmptyMeasure)
}

/// Finitely supported signed measure on the integers: the value of a
/// functional mapped to its total multiplicity. No stored value is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Histogram {
    entries: BTreeMap<i64, BigInt>,
}

impl Histogram {
    /// Accumulates `(value, multiplicity)` pairs, dropping cancellations.
    pub fn from_entries(entries: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (v, p) in entries {
            *map.entry(v).or_insert_with(BigInt::zero) += p;
        }
        map.retain(|_, p| !p.is_zero());
        Self { entries: map }
    }

    /// The unit mass at a single value.
    pub fn point(v: i64) -> Self {
        Self::from_entries([(v, BigInt::from(1))])
    }

    /// Entries in ascending value order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.entries.iter()
    }

    pub fn get(&self, v: i64) -> Option<&BigInt> {
        self.entries.get(&v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mass(&self) -> BigInt {
        self.entries.values().sum()
    }

    pub fn mean(&self) -> Result<BigRational, StatsError> {
        let mass = self.mass();
        if mass.is_zero() {
            return Err(StatsError::ZeroMass);
        }
        let sum: BigInt = self.iter().map(|(v, p)| p * BigInt::from(*v)).sum();
        Ok(BigRational::new(sum, mass))
    }

    pub fn variance(&self) -> Result<BigRational, StatsError> {
        let mass = self.mass();
        if mass.is_zero() {
            return Err(StatsError::ZeroMass);
        }
        let s1: BigInt = self.iter().map(|(v, p)| p * BigInt::from(*v)).sum();
        let s2: BigInt = self
            .iter()
            .map(|(v, p)| p * BigInt::from(*v) * BigInt::from(*v))
            .sum();
        Ok(BigRational::new(&mass * s2 - &s1 * &s1, &mass * &mass))
    }

    /// Convolution of two integer measures.
    pub fn convolve(&self, other: &Histogram) -> Histogram {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (v, p) in self.iter() {
            for (w, q) in other.iter() {
                *out.entry(v + w).or_insert_with(BigInt::zero) += p * q;
            }
        }
        out.retain(|_, p| !p.is_zero());
        Histogram { entries: out }
    }

    /// Translate every value by `offset`.
    pub fn shifted(&self, offset: i64) -> Histogram {
        Histogram {
            entries: self.iter().map(|(v, p)| (v + offset, p.clone())).collect(),
        }
    }

    /// Reflect every value through zero.
    pub fn negated(&self) -> Histogram {
        Histogram {
            entries: self.iter().map(|(v, p)| (-v, p.clone())).collect(),
        }
    }

    pub fn min_value(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn max_value(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    pub fn is_positive(&self) -> bool {
        self.entries.values().all(|p| p.is_positive())
    }
}
