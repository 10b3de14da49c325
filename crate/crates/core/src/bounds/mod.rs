//! Upper bounds on `h0(E)` in terms of degree and stability degrees.
//!
//! Every bound first peels off the ranges where `h0` is forced: below the
//! vanishing threshold it is zero, and once `h1` vanishes it is the
//! Riemann-Roch value. Only the remaining window uses Clifford-type estimates.
//! All arithmetic is exact; floors are taken once, at the end.

mod rank3;
mod unstable;

pub use rank3::{h0_quotient_bound, h0_rank3_semistable_bound};
pub use unstable::h0_rank3_unstable_bound;

use crate::error::{Error, Result};
use crate::invariants::{serre_dual, BundleInvariants, Curve};
use crate::krawtchouk::quotient_delta_vanishes;
use crate::result::{Assumption, BoundResult, Case};

/// `h0(L)` for a line bundle of degree `d`: zero for `d < 0`, Clifford in
/// `[0, 2g-2]`, Riemann-Roch above.
pub fn h0_line_bound(curve: &Curve, d: i64) -> BoundResult {
    if d < 0 {
        BoundResult::vanishing()
    } else if d <= curve.canonical_degree() {
        BoundResult::estimate(d.div_euclid(2) + 1, Case::CliffordLine)
    } else {
        BoundResult::exact(d + 1 - curve.genus(), Case::RiemannRoch)
    }
}

/// Bound on `h0(F)` for a semistable rank-2 bundle of degree `d` with `s1(F) = s1`.
///
/// In the window `s1 <= d <= 4g-4-s1` the base value is `(d - s1)/2 + 2`. On a
/// hyperelliptic curve with `s1 > 0` it drops by one; with `use_delta` it is
/// `(d - s1)/2 + 1 + delta` where `delta = 1` exactly when
/// `K_{(d-s1)/2+1}(g, 2g-s1)` vanishes.
pub fn h0_rank2_bound(curve: &Curve, d: i64, s1: i64, use_delta: bool) -> Result<BoundResult> {
    BundleInvariants::rank2(d, s1)?;
    if s1 < 0 {
        return Err(Error::NotSemistable);
    }
    let g = curve.genus();
    if d < s1 {
        return Ok(BoundResult::vanishing());
    }
    if d > 4 * g - 4 - s1 {
        return Ok(BoundResult::exact(d + 2 - 2 * g, Case::RiemannRoch));
    }
    let half_gap = (d - s1) / 2;
    let mut result = BoundResult::estimate(half_gap + 2, Case::Rank2Clifford);
    if curve.is_hyperelliptic() && s1 > 0 {
        result = BoundResult::estimate(half_gap + 1, Case::Rank2Clifford).assuming(Assumption::Hyperelliptic);
    }
    if use_delta && result.value > half_gap + 1 && !quotient_delta_vanishes(g, d, s1)? {
        result =
            BoundResult::estimate(half_gap + 1, Case::Rank2Clifford).assuming(Assumption::KrawtchoukNonzero);
    }
    Ok(result)
}

/// Bound `h0(E) <= 3 + (d - 3)/g` for a stable rank-3 bundle of slope below 2.
pub fn slope_bound(g: i64, d: i64) -> Result<BoundResult> {
    if d >= 6 {
        return Err(Error::SlopeOutOfRange { degree: d });
    }
    if g < 2 {
        return Err(Error::GenusTooSmall { genus: g });
    }
    Ok(BoundResult::estimate(3 + (d - 3).div_euclid(g), Case::Slope).assuming(Assumption::Stable))
}

/// Input to the rank-3 bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rank3Query {
    curve: Curve,
    inv: BundleInvariants,
    s1f: Option<i64>,
    use_delta: bool,
    use_hyperelliptic_sharpening: bool,
}

impl Rank3Query {
    /// Validates the invariants and, when given, `s1(F)` of a minimal-degree
    /// rank-2 quotient `F`.
    ///
    /// `s1(F)` must have the parity of `deg F = (2d + s1)/3` and satisfy
    /// `3 s1(F) >= 2 s2 - s1`. When `s1 >= 0 > s2`, the unstable bound works on
    /// `E* (x) omega`, so `s1(F)` is checked against that bundle instead.
    pub fn new(curve: Curve, inv: BundleInvariants, s1f: Option<i64>) -> Result<Self> {
        if inv.rank() != 3 {
            return Err(Error::RankMismatch { expected: 3, got: inv.rank() });
        }
        inv.validate()?;
        let query = Rank3Query { curve, inv, s1f, use_delta: false, use_hyperelliptic_sharpening: false };
        if let Some(s1f) = s1f {
            let frame = query.quotient_frame();
            let quotient_degree = quotient_degree(&frame);
            if (s1f - quotient_degree).rem_euclid(2) != 0 {
                return Err(Error::QuotientParity { s1f, quotient_degree });
            }
            if 3 * s1f < 2 * frame.s_r(2) - frame.s_r(1) {
                return Err(Error::QuotientBelowMinimum { s1f, minimum: suggested_min_s1f(&frame) });
            }
        }
        Ok(query)
    }

    pub fn with_delta(mut self, on: bool) -> Self {
        self.use_delta = on;
        self
    }

    pub fn with_hyperelliptic_sharpening(mut self, on: bool) -> Self {
        self.use_hyperelliptic_sharpening = on;
        self
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn inv(&self) -> &BundleInvariants {
        &self.inv
    }

    pub fn s1f(&self) -> Option<i64> {
        self.s1f
    }

    pub fn use_delta(&self) -> bool {
        self.use_delta
    }

    pub fn use_hyperelliptic_sharpening(&self) -> bool {
        self.use_hyperelliptic_sharpening
    }

    /// The bundle whose quotient `s1(F)` describes: `E` itself, or its Serre
    /// dual when `s1 >= 0 > s2`.
    pub fn quotient_frame(&self) -> BundleInvariants {
        if self.inv.s_r(1) >= 0 && self.inv.s_r(2) < 0 {
            serre_dual(&self.curve, &self.inv)
        } else {
            self.inv
        }
    }

    /// True when the hyperelliptic sharpening was requested and the curve allows it.
    fn sharpen(&self) -> bool {
        self.use_hyperelliptic_sharpening && self.curve.is_hyperelliptic()
    }
}

/// Degree `(2d + s1)/3` of a rank-2 quotient of minimal degree.
pub fn quotient_degree(inv: &BundleInvariants) -> i64 {
    (2 * inv.degree() + inv.s_r(1)) / 3
}

/// Smallest value of `s1(F)` allowed for `inv`: the least integer at least
/// `(2 s2 - s1)/3` with the parity of the quotient degree.
///
/// Offered as a suggestion; the bounds never substitute it on their own.
pub fn suggested_min_s1f(inv: &BundleInvariants) -> i64 {
    let numerator = 2 * inv.s_r(2) - inv.s_r(1);
    let mut s1f = -(-numerator).div_euclid(3);
    if (s1f - quotient_degree(inv)).rem_euclid(2) != 0 {
        s1f += 1;
    }
    s1f
}
