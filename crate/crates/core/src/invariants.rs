//! Curves, numerical bundle invariants, and the invariant-level operations on them.
//!
//! A bundle is represented only by its rank `n`, degree `d` and stability
//! degrees `s_r = r*d - n * max deg(F)` over rank-`r` subbundles `F`. Since the
//! maximum is an integer, `s_r = r*d (mod n)`; that congruence is the only
//! constraint checked here.

use crate::error::{Error, Result};

/// A smooth projective curve, known through its genus and whether it is hyperelliptic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Curve {
    genus: i64,
    hyperelliptic: bool,
}

impl Curve {
    pub fn new(genus: i64, hyperelliptic: bool) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall { genus });
        }
        Ok(Curve { genus, hyperelliptic })
    }

    pub fn hyperelliptic(genus: i64) -> Result<Self> {
        Curve::new(genus, true)
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn is_hyperelliptic(&self) -> bool {
        self.hyperelliptic
    }

    /// Degree of the canonical bundle, `2g - 2`.
    pub fn canonical_degree(&self) -> i64 {
        2 * self.genus - 2
    }
}

/// Rank, degree and stability degrees `(s_1, ..., s_{n-1})` of a bundle of rank 1, 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "repr::InvariantsRepr", into = "repr::InvariantsRepr")
)]
pub struct BundleInvariants {
    rank: u8,
    degree: i64,
    s: [i64; 2],
}

impl BundleInvariants {
    /// Builds and validates an invariant record. `s` must hold exactly `rank - 1` values.
    pub fn new(rank: u8, degree: i64, s: &[i64]) -> Result<Self> {
        if !(1..=3).contains(&rank) {
            return Err(Error::RankUnsupported { rank });
        }
        let expected = usize::from(rank) - 1;
        if s.len() != expected {
            return Err(Error::StabilityCount { rank, expected, got: s.len() });
        }
        let mut stored = [0; 2];
        stored[..expected].copy_from_slice(s);
        let inv = BundleInvariants { rank, degree, s: stored };
        inv.validate()?;
        Ok(inv)
    }

    pub fn line(degree: i64) -> Self {
        BundleInvariants { rank: 1, degree, s: [0; 2] }
    }

    pub fn rank2(degree: i64, s1: i64) -> Result<Self> {
        BundleInvariants::new(2, degree, &[s1])
    }

    pub fn rank3(degree: i64, s1: i64, s2: i64) -> Result<Self> {
        BundleInvariants::new(3, degree, &[s1, s2])
    }

    /// Checks the rank and the congruences `s_r = r*d (mod n)`.
    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.rank) {
            return Err(Error::RankUnsupported { rank: self.rank });
        }
        let n = i64::from(self.rank);
        for (idx, &s_r) in self.s().iter().enumerate() {
            let r = idx as i64 + 1;
            if (s_r - r * self.degree).rem_euclid(n) != 0 {
                return Err(Error::CongruenceViolation { r: idx + 1 });
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn n(&self) -> i64 {
        i64::from(self.rank)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// `(s_1, ..., s_{n-1})`.
    pub fn s(&self) -> &[i64] {
        &self.s[..usize::from(self.rank) - 1]
    }

    /// `s_r` for `1 <= r <= n-1`.
    pub fn s_r(&self, r: usize) -> i64 {
        self.s()[r - 1]
    }

    pub fn is_semistable(&self) -> bool {
        self.s().iter().all(|&v| v >= 0)
    }

    pub fn is_stable(&self) -> bool {
        self.s().iter().all(|&v| v > 0)
    }

    /// Maximal degree of a rank-`r` subbundle, `(r*d - s_r) / n`.
    pub fn max_subbundle_degree(&self, r: usize) -> i64 {
        (r as i64 * self.degree - self.s_r(r)) / self.n()
    }

    pub(crate) fn with_degree_and_s(&self, degree: i64, s: [i64; 2]) -> Self {
        BundleInvariants { rank: self.rank, degree, s }
    }
}

/// Invariants of `E* (x) omega_X`: degree `n(2g-2) - d`, stability degrees reversed.
pub fn serre_dual(curve: &Curve, inv: &BundleInvariants) -> BundleInvariants {
    let degree = inv.n() * curve.canonical_degree() - inv.degree;
    let s = match inv.rank {
        3 => [inv.s[1], inv.s[0]],
        _ => inv.s,
    };
    inv.with_degree_and_s(degree, s)
}

/// Invariants of `E (x) M` for a line bundle `M` of degree `a`.
pub fn twist_by_line(inv: &BundleInvariants, a: i64) -> BundleInvariants {
    inv.with_degree_and_s(inv.degree + inv.n() * a, inv.s)
}

/// `h0(h^a)` on a hyperelliptic curve, or `h0(h^a(p))` for a general point `p`
/// when `extra_general_point` is set.
pub fn h0_hyperelliptic_power(curve: &Curve, a: i64, extra_general_point: bool) -> Result<i64> {
    if !curve.is_hyperelliptic() {
        return Err(Error::NotHyperelliptic);
    }
    if a < 0 {
        return Err(Error::NegativePower { power: a });
    }
    let g = curve.genus();
    if extra_general_point {
        if a > g - 2 {
            return Err(Error::OutOfModeledRange { power: a, max: g - 2 });
        }
        return Ok(a + 1);
    }
    Ok(if a < g { a + 1 } else { 2 * a + 1 - g })
}

#[cfg(feature = "serde")]
mod repr {
    use alloc::vec::Vec;

    use super::BundleInvariants;
    use crate::error::Error;

    #[derive(serde::Serialize, serde::Deserialize)]
    pub struct InvariantsRepr {
        rank: u8,
        degree: i64,
        s: Vec<i64>,
    }

    impl From<BundleInvariants> for InvariantsRepr {
        fn from(inv: BundleInvariants) -> Self {
            InvariantsRepr { rank: inv.rank, degree: inv.degree, s: inv.s().to_vec() }
        }
    }

    impl TryFrom<InvariantsRepr> for BundleInvariants {
        type Error = Error;

        fn try_from(r: InvariantsRepr) -> Result<Self, Error> {
            BundleInvariants::new(r.rank, r.degree, &r.s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(g: i64) -> Curve {
        Curve::hyperelliptic(g).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(BundleInvariants::rank3(5, 2, 1).is_ok());
        assert_eq!(BundleInvariants::rank3(5, 1, 1), Err(Error::CongruenceViolation { r: 1 }));
        assert!(BundleInvariants::new(1, 7, &[]).is_ok());
        assert_eq!(BundleInvariants::new(4, 0, &[0, 0, 0]), Err(Error::RankUnsupported { rank: 4 }));
        assert!(matches!(BundleInvariants::new(3, 0, &[0]), Err(Error::StabilityCount { .. })));
        // s_2 = 2d (mod 3) with d = 5 forces s_2 = 1 (mod 3).
        assert_eq!(BundleInvariants::rank3(5, 2, 2), Err(Error::CongruenceViolation { r: 2 }));
    }

    #[test]
    fn genus_below_two_is_rejected() {
        assert_eq!(Curve::new(1, false), Err(Error::GenusTooSmall { genus: 1 }));
        assert_eq!(curve(4).canonical_degree(), 6);
    }

    #[test]
    fn stability_predicates() {
        let e = BundleInvariants::rank3(6, 0, 0).unwrap();
        assert!(e.is_semistable());
        assert!(!e.is_stable());
        let e = BundleInvariants::rank3(5, 2, 1).unwrap();
        assert!(e.is_stable());
        let e = BundleInvariants::rank3(6, -3, 0).unwrap();
        assert!(!e.is_semistable());
        assert_eq!(e.max_subbundle_degree(1), 3);
    }

    #[test]
    fn serre_dual_examples() {
        let e = BundleInvariants::rank3(10, 1, 2).unwrap();
        assert_eq!(serre_dual(&curve(3), &e), BundleInvariants::rank3(2, 2, 1).unwrap());
        let e = BundleInvariants::rank3(6, 0, 0).unwrap();
        assert_eq!(serre_dual(&curve(2), &e), BundleInvariants::rank3(0, 0, 0).unwrap());
        let f = BundleInvariants::rank2(7, 3).unwrap();
        assert_eq!(serre_dual(&curve(4), &f), BundleInvariants::rank2(5, 3).unwrap());
    }

    #[test]
    fn twist_examples() {
        let m = 6;
        let k = 2;
        let f = BundleInvariants::rank2(m, m).unwrap();
        assert_eq!(twist_by_line(&f, 2 * k), BundleInvariants::rank2(m + 4 * k, m).unwrap());
        assert_eq!(twist_by_line(&f, 0), f);
        let e = BundleInvariants::rank3(4, 1, 2).unwrap();
        assert_eq!(twist_by_line(&e, 2 * k), BundleInvariants::rank3(6 * k + 4, 1, 2).unwrap());
    }

    #[test]
    fn hyperelliptic_power_examples() {
        assert_eq!(h0_hyperelliptic_power(&curve(5), 3, false), Ok(4));
        assert_eq!(h0_hyperelliptic_power(&curve(2), 0, true), Ok(1));
        assert_eq!(h0_hyperelliptic_power(&curve(3), 4, false), Ok(6));
        // h^(g-1) is the canonical bundle.
        assert_eq!(h0_hyperelliptic_power(&curve(4), 3, false), Ok(4));
        assert_eq!(
            h0_hyperelliptic_power(&curve(3), 2, true),
            Err(Error::OutOfModeledRange { power: 2, max: 1 })
        );
        assert_eq!(
            h0_hyperelliptic_power(&Curve::new(3, false).unwrap(), 1, false),
            Err(Error::NotHyperelliptic)
        );
        assert_eq!(h0_hyperelliptic_power(&curve(3), -1, false), Err(Error::NegativePower { power: -1 }));
    }
}
