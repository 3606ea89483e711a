//! Coordinates on the rank-2 affine weight lattice.
//!
//! Every weight is stored relative to its ambient dominant integral highest
//! weight `Lambda = m*Lambda0 + n*Lambda1` as the pair `(a, b)` with
//! `lambda = Lambda - a*alpha0 - b*alpha1`. The two coroot pairings, the
//! degree functional `a` and the finite-weight deviation `a - b` are all
//! plain integer functions of these coordinates.

/// Dominant integral highest weight `m*Lambda0 + n*Lambda1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct HighestWeight {
    pub m: u32,
    pub n: u32,
}

impl HighestWeight {
    pub fn new(m: u32, n: u32) -> Self {
        Self { m, n }
    }

    /// Image under the diagram automorphism: `n*Lambda0 + m*Lambda1`.
    pub fn flipped(self) -> Self {
        Self {
            m: self.n,
            n: self.m,
        }
    }
}

/// Lattice point `Lambda - a*alpha0 - b*alpha1`, stored as `(a, b)`.
///
/// `a` and `b` may be any integers: intermediate signed measures leave the
/// dominant cone. The derived `Ord` is lexicographic in `(a, b)`, which fixes
/// the serialization order of measures.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeightCoord {
    pub a: i64,
    pub b: i64,
}

impl WeightCoord {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// Pairing with the coroot `alpha0^v`: `m - 2(a - b)`.
    pub fn pairing_alpha0(self, hw: HighestWeight) -> i64 {
        i64::from(hw.m) - 2 * (self.a - self.b)
    }

    /// Pairing with the coroot `alpha1^v`: `n + 2(a - b)`.
    pub fn pairing_alpha1(self, hw: HighestWeight) -> i64 {
        i64::from(hw.n) + 2 * (self.a - self.b)
    }

    /// Degree of the weight: the coordinate `a`. The highest weight has
    /// degree 0 and the degree grows away from it.
    pub fn degree(self) -> i64 {
        self.a
    }

    /// Finite-weight deviation `a - b`.
    pub fn finite_weight_dev(self) -> i64 {
        self.a - self.b
    }

    /// Coordinate part of the diagram flip: `(a, b) -> (b, a)`.
    pub fn flipped(self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }
}

/// Diagram automorphism on a weight together with its ambient highest
/// weight: coordinates swap and the highest weight swaps to `(n, m)`.
pub fn diagram_flip(w: WeightCoord, hw: HighestWeight) -> (WeightCoord, HighestWeight) {
    (w.flipped(), hw.flipped())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pairing_alpha0_examples() {
        assert_eq!(
            WeightCoord::new(0, 0).pairing_alpha0(HighestWeight::new(1, 0)),
            1
        );
        assert_eq!(
            WeightCoord::new(3, 3).pairing_alpha0(HighestWeight::new(0, 0)),
            0
        );
        assert_eq!(
            WeightCoord::new(2, 0).pairing_alpha0(HighestWeight::new(1, 0)),
            -3
        );
    }

    #[test]
    fn pairing_alpha1_examples() {
        assert_eq!(
            WeightCoord::new(0, 0).pairing_alpha1(HighestWeight::new(0, 1)),
            1
        );
        assert_eq!(
            WeightCoord::new(5, 5).pairing_alpha1(HighestWeight::new(0, 0)),
            0
        );
        assert_eq!(
            WeightCoord::new(1, 0).pairing_alpha1(HighestWeight::new(1, 0)),
            2
        );
    }

    #[test]
    fn degree_is_first_coordinate() {
        assert_eq!(WeightCoord::new(0, 0).degree(), 0);
        assert_eq!(WeightCoord::new(4, 1).degree(), 4);
        assert_eq!(WeightCoord::new(-2, 7).degree(), -2);
    }

    #[test]
    fn finite_weight_dev_examples() {
        assert_eq!(WeightCoord::new(0, 0).finite_weight_dev(), 0);
        assert_eq!(WeightCoord::new(3, 1).finite_weight_dev(), 2);
        assert_eq!(WeightCoord::new(1, 4).finite_weight_dev(), -3);
    }

    #[test]
    fn diagram_flip_examples() {
        assert_eq!(
            diagram_flip(WeightCoord::new(2, 5), HighestWeight::new(1, 0)),
            (WeightCoord::new(5, 2), HighestWeight::new(0, 1))
        );
        assert_eq!(
            diagram_flip(WeightCoord::new(0, 0), HighestWeight::new(3, 3)),
            (WeightCoord::new(0, 0), HighestWeight::new(3, 3))
        );
    }

    proptest! {
        #[test]
        fn pairings_sum_to_level(a in -1000i64..1000, b in -1000i64..1000, m in 0u32..100, n in 0u32..100) {
            let w = WeightCoord::new(a, b);
            let hw = HighestWeight::new(m, n);
            prop_assert_eq!(w.pairing_alpha0(hw) + w.pairing_alpha1(hw), i64::from(m) + i64::from(n));
        }

        #[test]
        fn flip_is_involution(a in -1000i64..1000, b in -1000i64..1000, m in 0u32..100, n in 0u32..100) {
            let w = WeightCoord::new(a, b);
            let hw = HighestWeight::new(m, n);
            let (w2, hw2) = diagram_flip(w, hw);
            prop_assert_eq!(diagram_flip(w2, hw2), (w, hw));
        }

        #[test]
        fn degree_minus_dev_is_b(a in -1000i64..1000, b in -1000i64..1000) {
            let w = WeightCoord::new(a, b);
            prop_assert_eq!(w.degree() - w.finite_weight_dev(), b);
        }
    }
}
