//! The brute-force engine: finitely supported signed integer measures on
//! the weight lattice and the Demazure operators acting on them.
//!
//! The operator attached to a simple reflection expands every atom into the
//! sum over `i = 0 .. <lambda, alpha_j^v>` of atoms at `lambda - i*alpha_j`,
//! with the summation convention extended to negative upper bounds: the sum
//! up to `-1` is empty, and the sum up to `k < -1` is minus the sum over
//! `k+1 .. -1`. Coefficients are arbitrary-precision integers throughout.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::lattice::{diagram_flip, HighestWeight, WeightCoord};
use crate::weyl::{Generator, Simple, WeylWord};

/// Summation bounds for the extended convention: the index range of
/// `sum_{i=0}^{k}` together with its overall sign.
///
/// For `k >= 0` the range is `0..=k` with sign `+1`, for `k = -1` it is
/// empty, and for `k < -1` it is `k+1..=-1` with sign `-1`.
pub fn convention_sum_bounds(k: i64) -> (RangeInclusive<i64>, i64) {
    if k >= -1 {
        (0..=k, 1)
    } else {
        (k + 1..=-1, -1)
    }
}

/// Finitely supported signed measure on the weight lattice, tagged with its
/// ambient highest weight. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedMeasure {
    hw: HighestWeight,
    entries: BTreeMap<WeightCoord, BigInt>,
}

impl SignedMeasure {
    /// The unit point mass at the highest weight, `(a, b) = (0, 0)`.
    pub fn delta(hw: HighestWeight) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(WeightCoord::new(0, 0), BigInt::from(1));
        Self { hw, entries }
    }

    /// Builds a measure by accumulating `(coordinate, coefficient)` pairs;
    /// duplicates merge and exact cancellations are dropped.
    pub fn from_entries(
        hw: HighestWeight,
        entries: impl IntoIterator<Item = (WeightCoord, BigInt)>,
    ) -> Self {
        let mut map: BTreeMap<WeightCoord, BigInt> = BTreeMap::new();
        for (w, p) in entries {
            *map.entry(w).or_insert_with(BigInt::zero) += p;
        }
        map.retain(|_, p| !p.is_zero());
        Self { hw, entries: map }
    }

    pub fn hw(&self) -> HighestWeight {
        self.hw
    }

    /// Support size.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in lexicographic `(a, b)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&WeightCoord, &BigInt)> {
        self.entries.iter()
    }

    pub fn coefficient(&self, w: WeightCoord) -> Option<&BigInt> {
        self.entries.get(&w)
    }

    /// True when every coefficient is strictly positive, as holds for every
    /// full standard- or extended-word measure over a dominant weight.
    pub fn is_positive(&self) -> bool {
        use num_traits::Signed;
        self.entries.values().all(|p| p.is_positive())
    }
}

/// Applies the Demazure operator of the simple reflection `s_j`.
///
/// Subtracting `i*alpha0` increments `a` by `i`; subtracting `i*alpha1`
/// increments `b` by `i`. Exact cancellations are removed from the result.
pub fn apply_demazure(j: Simple, mu: &SignedMeasure) -> SignedMeasure {
    let hw = mu.hw;
    let mut out: BTreeMap<WeightCoord, BigInt> = BTreeMap::new();
    for (&w, p) in mu.iter() {
        let k = match j {
            Simple::S0 => w.pairing_alpha0(hw),
            Simple::S1 => w.pairing_alpha1(hw),
        };
        let (range, sign) = convention_sum_bounds(k);
        let contribution = p * sign;
        for i in range {
            let target = match j {
                Simple::S0 => WeightCoord::new(w.a + i, w.b),
                Simple::S1 => WeightCoord::new(w.a, w.b + i),
            };
            *out.entry(target).or_insert_with(BigInt::zero) += &contribution;
        }
    }
    out.retain(|_, p| !p.is_zero());
    SignedMeasure { hw, entries: out }
}

/// Applies the diagram-automorphism operator: every atom moves to its
/// flipped coordinates and the ambient highest weight swaps to `(n, m)`.
pub fn apply_sigma(mu: &SignedMeasure) -> SignedMeasure {
    let hw = mu.hw.flipped();
    let entries = mu
        .iter()
        .map(|(&w, p)| (diagram_flip(w, mu.hw).0, p.clone()))
        .collect();
    SignedMeasure { hw, entries }
}

/// Applies a single generator.
pub fn apply_generator(g: Generator, mu: &SignedMeasure) -> SignedMeasure {
    match g {
        Generator::S0 => apply_demazure(Simple::S0, mu),
        Generator::S1 => apply_demazure(Simple::S1, mu),
        Generator::Sigma => apply_sigma(mu),
    }
}

/// Applies the letters of `word` right-to-left to the point mass at the
/// highest weight, materializing every intermediate measure.
pub fn apply_word(word: &WeylWord, hw: HighestWeight) -> SignedMeasure {
    word.letters()
        .iter()
        .rev()
        .fold(SignedMeasure::delta(hw), |mu, &g| apply_generator(g, &mu))
}
