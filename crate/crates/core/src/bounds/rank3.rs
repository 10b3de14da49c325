use crate::bounds::Rank3Query;
use crate::error::{Error, Hypothesis, Result};
use crate::half::HalfInt;
use crate::krawtchouk::delta_vanishes;
use crate::result::{Assumption, BoundResult, Case};

/// Bound on `h0(E)` for semistable `E` of rank 3 in terms of `(g, d, s1, s2)`.
///
/// Branches, tried in order:
/// - `d < s1`: `h0 = 0`;
/// - `d > 6g-6-s2`: `h0 = d + 3 - 3g`;
/// - `s2 > 2 s1`, `s1 <= d < s2 - s1`: `[d/2 - s1/2] + 1`;
/// - `s2 < s1/2`, `6g-6-(s1-s2) < d <= 6g-6-s2`: `[d/2 - s2/2] + 1`;
/// - otherwise `[d/2 - max(2 s2 - s1, 2 s1 - s2)/6] + 3`.
///
/// The last value drops by one under the hyperelliptic sharpening (unless
/// `s1 = s2 = 0`) or when `use_delta` is set and the Krawtchouk value for the
/// supplied `s1(F)` is nonzero.
pub fn h0_rank3_semistable_bound(q: &Rank3Query) -> Result<BoundResult> {
    let inv = q.inv();
    if !inv.is_semistable() {
        return Err(Error::NotSemistable);
    }
    let g = q.curve().genus();
    let (d, s1, s2) = (inv.degree(), inv.s_r(1), inv.s_r(2));
    let top = 6 * g - 6;

    if d < s1 {
        return Ok(BoundResult::vanishing());
    }
    if d > top - s2 {
        return Ok(BoundResult::exact(d + 3 - 3 * g, Case::RiemannRoch));
    }
    if s2 > 2 * s1 && d < s2 - s1 {
        return Ok(BoundResult::estimate((d - s1).div_euclid(2) + 1, Case::Rank3LowDegree));
    }
    if 2 * s2 < s1 && d > top - (s1 - s2) {
        return Ok(BoundResult::estimate((d - s2).div_euclid(2) + 1, Case::Rank3HighDegree));
    }

    let case = if s2 > 2 * s1 {
        Case::Rank3S2Dominant
    } else if 2 * s2 < s1 {
        Case::Rank3S1Dominant
    } else {
        Case::Rank3Balanced
    };
    let spread = (2 * s2 - s1).max(2 * s1 - s2);
    let base = (3 * d - spread).div_euclid(6) + 3;
    let mut result = BoundResult::estimate(base, case);

    if q.sharpen() && !(s1 == 0 && s2 == 0) {
        result = BoundResult::estimate(base - 1, case).assuming(Assumption::Hyperelliptic);
    }
    if q.use_delta() {
        let s1f = q.s1f().ok_or(Error::MissingS1F)?;
        if result.value == base && !delta_vanishes(g, d, s1, s1f)? {
            result = BoundResult::estimate(base - 1, case)
                .assuming(Assumption::QuotientS1(s1f))
                .assuming(Assumption::KrawtchoukNonzero);
        }
    }
    Ok(result)
}

/// Bound on `h0(E)` through a minimal-degree rank-2 quotient `F`:
/// `[d/2 - s1(F)/2] + 3`, valid when `s1 <= 2 s2` and
/// `max(s1, (3 s1(F) - s1)/2) <= d <= 6g-6 - (3 s1(F) + s1)/2`.
///
/// Refinements: with `use_delta`, `[d/2 - s1(F)/2] + 2 + delta`; with the
/// hyperelliptic sharpening and `s1(F) > 0`, `[d/2 - s1(F)/2] + 2`.
pub fn h0_quotient_bound(q: &Rank3Query) -> Result<BoundResult> {
    let s1f = q.s1f().ok_or(Error::MissingS1F)?;
    let inv = q.inv();
    if !inv.is_semistable() {
        return Err(Error::NotSemistable);
    }
    let g = q.curve().genus();
    let (d, s1, s2) = (inv.degree(), inv.s_r(1), inv.s_r(2));
    if s1 > 2 * s2 {
        return Err(Error::HypothesisFailed(Hypothesis::StabilityOrdering));
    }
    let lower = HalfInt::from(s1).max(HalfInt::half(3 * s1f - s1));
    let upper = HalfInt::from(6 * g - 6) - HalfInt::half(3 * s1f + s1);
    if d < lower || d > upper {
        return Err(Error::HypothesisFailed(Hypothesis::QuotientDegreeWindow));
    }

    let floor_part = (HalfInt::half(d) - HalfInt::half(s1f)).floor();
    let mut result =
        BoundResult::estimate(floor_part + 3, Case::Rank3Quotient).assuming(Assumption::QuotientS1(s1f));
    if q.sharpen() && s1f > 0 {
        result.value = floor_part + 2;
        result = result.assuming(Assumption::Hyperelliptic);
    }
    if q.use_delta() && result.value == floor_part + 3 && !delta_vanishes(g, d, s1, s1f)? {
        result.value = floor_part + 2;
        result = result.assuming(Assumption::KrawtchoukNonzero);
    }
    Ok(result)
}
