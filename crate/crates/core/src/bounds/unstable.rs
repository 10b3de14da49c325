use crate::bounds::Rank3Query;
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::invariants::{serre_dual, BundleInvariants};
use crate::result::{Assumption, BoundResult, Case, LinePiece, QuotientPiece};

/// Bound on `h0(E)` for unstable `E` of rank 3 as `h0(L) + h0(F)`, where `L` is
/// a maximal line subbundle (degree `(d - s1)/3`) and `F = E/L` has `s1(F) = s1f`.
///
/// Requires `s1 < 0`. When instead `s1 >= 0 > s2`, the bound is computed for
/// `E* (x) omega` (whose `s1` is negative) and transported back by
/// `h0(E) = h0(E* (x) omega) + d + 3 - 3g`; `s1f` then refers to that bundle.
pub fn h0_rank3_unstable_bound(q: &Rank3Query, quotient_semistable: bool) -> Result<BoundResult> {
    let inv = q.inv();
    if inv.is_semistable() {
        return Err(Error::NotUnstable);
    }
    let s1f = q.s1f().ok_or(Error::MissingS1F)?;
    let g = q.curve().genus();
    if inv.s_r(1) >= 0 {
        let dual = serre_dual(q.curve(), inv);
        let mut result = negative_s1_bound(g, &dual, s1f, quotient_semistable)?;
        result.value = (result.value + inv.degree() + 3 - 3 * g).max(0);
        return Ok(result.assuming(Assumption::SerreDual));
    }
    negative_s1_bound(g, inv, s1f, quotient_semistable)
}

fn negative_s1_bound(
    g: i64,
    inv: &BundleInvariants,
    s1f: i64,
    quotient_semistable: bool,
) -> Result<BoundResult> {
    if quotient_semistable != (s1f >= 0) {
        return Err(Error::QuotientStabilityMismatch { s1f });
    }
    let (d, s1, s2) = (inv.degree(), inv.s_r(1), inv.s_r(2));
    let top = 6 * g - 6;
    if d < s1 {
        return Ok(BoundResult::vanishing());
    }
    if d > top - s2 {
        return Ok(BoundResult::exact(d + 3 - 3 * g, Case::RiemannRoch));
    }

    let (line, h0_line) = if d <= top + s1 {
        (LinePiece::Clifford, (d - s1).div_euclid(6) + 1)
    } else {
        (LinePiece::RiemannRoch, (d - s1) / 3 + 1 - g)
    };
    let (quotient, h0_quotient) = if quotient_semistable {
        semistable_quotient(g, d, s1, s2, s1f)
    } else {
        unstable_quotient(g, d, s1, s2, s1f)?
    };

    let stability =
        if quotient_semistable { Assumption::QuotientSemistable } else { Assumption::QuotientUnstable };
    Ok(BoundResult::estimate(h0_line.max(0) + h0_quotient.max(0), Case::Rank3Unstable { line, quotient })
        .assuming(Assumption::QuotientS1(s1f))
        .assuming(stability))
}

/// Semistable `F`: vanishing below `(3 s1f - s1)/2`, the rank-2 Clifford bound
/// up to `6g-6 - (3 s1f + s1)/2`, Riemann-Roch above.
fn semistable_quotient(g: i64, d: i64, s1: i64, s2: i64, s1f: i64) -> (QuotientPiece, i64) {
    let vanishing_edge = HalfInt::half(3 * s1f - s1);
    let special_edge = HalfInt::from(6 * g - 6) - HalfInt::half(3 * s1f + s1);
    if d < vanishing_edge {
        (QuotientPiece::Vanishing, 0)
    } else if d <= special_edge {
        (QuotientPiece::Rank2Clifford, (d + s1 - s2).div_euclid(3) + 2)
    } else {
        (QuotientPiece::RiemannRoch, (2 * d + s1) / 3 + 2 - 2 * g)
    }
}

/// Unstable `F`, five ranges with edges
/// `(3 s1f - s1)/2 < -(3 s1f + s1)/2 <= 6g-6 + (3 s1f - s1)/2 < 6g-6 - (3 s1f + s1)/2`.
///
/// When `s1f < -(2g-2)` the middle range is empty and the second and fourth
/// overlap; degrees in the overlap are reported as uncovered.
fn unstable_quotient(g: i64, d: i64, s1: i64, s2: i64, s1f: i64) -> Result<(QuotientPiece, i64)> {
    let top = HalfInt::from(6 * g - 6);
    let first = HalfInt::half(3 * s1f - s1);
    let second = -HalfInt::half(3 * s1f + s1);
    let third = top + HalfInt::half(3 * s1f - s1);
    let fourth = top - HalfInt::half(3 * s1f + s1);
    if d < first {
        return Ok((QuotientPiece::Vanishing, 0));
    }
    if third < d && d < second {
        return Err(Error::RangeUncovered { degree: d });
    }
    Ok(if d < second {
        (QuotientPiece::MaximalLine, (d + s1 - s2).div_euclid(6) + 1)
    } else if d <= third {
        (QuotientPiece::BothClifford, (2 * d + s1).div_euclid(6) + 2)
    } else if d <= fourth {
        (QuotientPiece::MixedRiemannRoch, (6 * d + 4 * s1 - 2 * s2).div_euclid(12) - g + 2)
    } else {
        (QuotientPiece::RiemannRoch, (2 * d + s1) / 3 + 2 - 2 * g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::Curve;

    fn query(g: i64, d: i64, s1: i64, s2: i64, s1f: Option<i64>) -> Rank3Query {
        let curve = Curve::new(g, false).unwrap();
        Rank3Query::new(curve, BundleInvariants::rank3(d, s1, s2).unwrap(), s1f).unwrap()
    }

    #[test]
    fn semistable_quotient_example() {
        let b = h0_rank3_unstable_bound(&query(4, 6, -3, 0, Some(1)), true).unwrap();
        assert_eq!(b.value, 5);
        assert_eq!(
            b.case,
            Case::Rank3Unstable { line: LinePiece::Clifford, quotient: QuotientPiece::Rank2Clifford }
        );
        assert!(!b.exact);
        assert_eq!(b.assumptions, [Assumption::QuotientS1(1), Assumption::QuotientSemistable]);
    }

    #[test]
    fn guards() {
        assert_eq!(h0_rank3_unstable_bound(&query(4, 6, 0, 0, Some(0)), true), Err(Error::NotUnstable));
        assert_eq!(h0_rank3_unstable_bound(&query(4, 6, -3, 0, None), true), Err(Error::MissingS1F));
        assert_eq!(
            h0_rank3_unstable_bound(&query(4, 6, -3, 0, Some(1)), false),
            Err(Error::QuotientStabilityMismatch { s1f: 1 })
        );
    }

    #[test]
    fn outside_the_window_is_exact() {
        // d < s1.
        let b = h0_rank3_unstable_bound(&query(3, -9, -6, 0, Some(2)), true).unwrap();
        assert_eq!((b.value, b.exact), (0, true));
        // g = 2, d = 3 > 6g-6-s2 = 0.
        let b = h0_rank3_unstable_bound(&query(2, 3, -6, 6, Some(6)), true).unwrap();
        assert_eq!((b.value, b.exact, b.case), (0, true, Case::RiemannRoch));
    }

    #[test]
    fn dual_reduction() {
        // s = (0, -3), d = 12 on g = 4: the dual has d = 6, s = (-3, 0).
        let q = query(4, 12, 0, -3, Some(1));
        let b = h0_rank3_unstable_bound(&q, true).unwrap();
        // dual bound 5, plus d + 3 - 3g = 3.
        assert_eq!(b.value, 8);
        assert!(b.assumptions.contains(&Assumption::SerreDual));
    }

    #[test]
    fn unstable_quotient_ranges() {
        // g = 5, s = (-3, -9), s1(F) = -3: deg F = (2d - 3)/3 is odd, and
        // 3 s1(F) = -9 > 2 s2 - s1 = -15. Edges: -3, 6, 21, 30; window [-3, 33].
        let g = 5;
        let (s1, s2, s1f) = (-3, -9, -3);
        let mut seen = alloc::vec::Vec::new();
        for d in (s1..=24 - s2).step_by(3) {
            let b = h0_rank3_unstable_bound(&query(g, d, s1, s2, Some(s1f)), false).unwrap();
            if let Case::Rank3Unstable { quotient, .. } = b.case {
                seen.push(quotient);
            }
        }
        assert!(seen.contains(&QuotientPiece::MaximalLine));
        assert!(seen.contains(&QuotientPiece::BothClifford));
        assert!(seen.contains(&QuotientPiece::MixedRiemannRoch));
        assert!(seen.contains(&QuotientPiece::RiemannRoch));
    }

    #[test]
    fn overlapping_ranges_are_reported() {
        // g = 2, s1 = -6, s1(F) = -4 < -(2g-2): edges -3, 9, 3, 15, so 3 < d < 9 is claimed twice.
        let (s1, s1f, s2) = (-6, -4, -12);
        let g = 2;
        let d = 6;
        let q = query(g, d, s1, s2, Some(s1f));
        assert_eq!(h0_rank3_unstable_bound(&q, false), Err(Error::RangeUncovered { degree: d }));
    }
}
