//! Sharp example families on hyperelliptic curves.
//!
//! Each constructor returns the invariants of the bundle, its exact `h0`
//! from the hyperelliptic formulas, and the bound that applies to it.
//! Stability degrees of the constructed bundles are the asserted values for
//! each family, not recomputed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bounds::{
    h0_quotient_bound, h0_rank3_semistable_bound, h0_rank3_unstable_bound, slope_bound, Rank3Query,
};
use crate::elmtrans::s2_lower_bound_track;
use crate::error::{Error, Hypothesis, Result};
use crate::invariants::{h0_hyperelliptic_power, BundleInvariants, Curve};
use crate::result::BoundResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `h^{n+k+1} + F_{m,k}` with `s1 = s2 = 0`.
    A,
    /// `m` general transformations of `O(p1) + O(p2) + O(p3)`.
    B,
    /// `E_{1,k} = E_1 (x) h^k`.
    CFirst,
    /// `E_{2,k} = E_2 (x) h^k`.
    CSecond,
    /// Split unstable bundles `L + M + N`.
    Unstable,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::B => "b",
            Family::CFirst => "c-e1",
            Family::CSecond => "c-e2",
            Family::Unstable => "unstable",
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Which bundle of the third family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    E1,
    E2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExampleReport {
    pub family: Family,
    pub genus: i64,
    pub params: BTreeMap<&'static str, i64>,
    pub invariants: BundleInvariants,
    pub s1f: Option<i64>,
    pub exact_h0: i64,
    pub bound: BoundResult,
    pub sharp: bool,
    /// Slope bound, reported where it improves on `bound`.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub slope_bound: Option<BoundResult>,
    /// `h0` known to be attained by some bundle with these invariants.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub attainable_h0: Option<i64>,
}

impl ExampleReport {
    fn new(
        family: Family,
        curve: &Curve,
        params: &[(&'static str, i64)],
        invariants: BundleInvariants,
        s1f: Option<i64>,
        exact_h0: i64,
        bound: BoundResult,
    ) -> Self {
        debug_assert!(exact_h0 <= bound.value, "{family:?} {params:?}: {exact_h0} > {}", bound.value);
        ExampleReport {
            family,
            genus: curve.genus(),
            params: params.iter().copied().collect(),
            invariants,
            s1f,
            exact_h0,
            sharp: exact_h0 == bound.value,
            bound,
            slope_bound: None,
            attainable_h0: None,
        }
    }

    /// `bound - exact_h0`.
    pub fn gap(&self) -> i64 {
        self.bound.value - self.exact_h0
    }
}

fn hyperelliptic_curve(g: i64) -> Result<Curve> {
    Curve::hyperelliptic(g)
}

/// First family: `m = 4n+2 <= g`, `0 <= k <= g-2-m/2`, `g >= 3`.
///
/// `E = h^{n+k+1} + F_{m,k}` has degree `6(n+k+1)`, `s1 = s2 = 0` and a
/// minimal quotient with `s1(F) = m`; `h0(E) = (n+k+2) + 2(k+1)`. The bound is
/// the quotient bound with the hyperelliptic sharpening.
pub fn family_a(g: i64, n: i64, k: i64) -> Result<ExampleReport> {
    if g < 3 {
        return Err(Error::ParamsOutOfRange("family a needs g >= 3"));
    }
    if n < 0 {
        return Err(Error::ParamsOutOfRange("family a needs n >= 0"));
    }
    let m = 4 * n + 2;
    if m > g {
        return Err(Error::ParamsOutOfRange("family a needs 4n+2 <= g"));
    }
    if k < 0 || k > g - 2 - m / 2 {
        return Err(Error::ParamsOutOfRange("family a needs 0 <= k <= g-2-m/2"));
    }
    let curve = hyperelliptic_curve(g)?;
    let quotient_degree = m + 4 * k + 2;
    debug_assert!(m <= quotient_degree && quotient_degree <= 4 * g - 4 - m);

    let inv = BundleInvariants::rank3(6 * (n + k + 1), 0, 0)?;
    let exact =
        h0_hyperelliptic_power(&curve, n + k + 1, false)? + 2 * h0_hyperelliptic_power(&curve, k, true)?;
    let q = Rank3Query::new(curve, inv, Some(m))?.with_hyperelliptic_sharpening(true);
    let bound = h0_quotient_bound(&q)?;
    Ok(ExampleReport::new(Family::A, &curve, &[("n", n), ("k", k), ("m", m)], inv, Some(m), exact, bound))
}

/// Second family: `E_m` from `m` general transformations of
/// `O(p1) + O(p2) + O(p3)`, for `m = 1` or even `2 <= m <= g`.
///
/// `d = 3 + m`, `s1 = s1(F) = m`, and `s2` is recorded at its certified lower
/// bound. `h0(E_m) = 3`, and the sharpened quotient bound gives 3 whenever its
/// hypotheses hold.
pub fn family_b(g: i64, m: i64) -> Result<ExampleReport> {
    if m < 1 || m > g {
        return Err(Error::ParamsOutOfRange("family b needs 1 <= m <= g"));
    }
    let curve = hyperelliptic_curve(g)?;
    let s2 = s2_lower_bound_track(m);
    if m > 2 * s2 {
        return Err(Error::HypothesisFailed(Hypothesis::FamilyStabilityOrdering));
    }
    let inv = BundleInvariants::rank3(3 + m, m, s2)?;
    let q = Rank3Query::new(curve, inv, Some(m))?.with_hyperelliptic_sharpening(true);
    let bound = h0_quotient_bound(&q)?;
    Ok(ExampleReport::new(Family::B, &curve, &[("m", m)], inv, Some(m), 3, bound))
}

/// Third family: `E_{1,k}` (degree `6k+4`, `s = (1, 2)`) and `E_{2,k}`
/// (degree `6k+5`, `s = (2, 1)`), both with `h0 = 3k+3`, for `0 <= k <= g-2`.
///
/// For `E_{2,0}` the slope bound is attached: it gives 3 when `g >= 3`. On
/// `g = 2` it gives 4, which some stable bundle of degree 5 attains.
pub fn family_c(variant: Variant, g: i64, k: i64) -> Result<ExampleReport> {
    if k < 0 || k > g - 2 {
        return Err(Error::ParamsOutOfRange("family c needs 0 <= k <= g-2"));
    }
    let curve = hyperelliptic_curve(g)?;
    let (family, inv) = match variant {
        Variant::E1 => (Family::CFirst, BundleInvariants::rank3(6 * k + 4, 1, 2)?),
        Variant::E2 => (Family::CSecond, BundleInvariants::rank3(6 * k + 5, 2, 1)?),
    };
    let exact = 3 * h0_hyperelliptic_power(&curve, k, true)?;
    let q = Rank3Query::new(curve, inv, None)?.with_hyperelliptic_sharpening(true);
    let bound = h0_rank3_semistable_bound(&q)?;
    let mut report = ExampleReport::new(family, &curve, &[("k", k)], inv, None, exact, bound);
    if variant == Variant::E2 && k == 0 {
        let slope = slope_bound(g, inv.degree())?;
        if g == 2 {
            report.attainable_h0 = Some(slope.value);
        }
        report.slope_bound = Some(slope);
    }
    Ok(report)
}

/// Stable, congruence-valid `(s1, s2)` in degree `d` whose rank-3 bound
/// (sharpened on hyperelliptic curves) is at least `h0`.
///
/// The search uses `1 <= s_r <= 2g`, the general bound `s_r <= r(n-r)g`.
pub fn stable_pairs_reaching(curve: &Curve, d: i64, h0: i64) -> Result<Vec<(i64, i64)>> {
    let g = curve.genus();
    let mut pairs = Vec::new();
    for s1 in 1..=2 * g {
        for s2 in 1..=2 * g {
            let Ok(inv) = BundleInvariants::rank3(d, s1, s2) else { continue };
            let q = Rank3Query::new(*curve, inv, None)?.with_hyperelliptic_sharpening(true);
            if h0_rank3_semistable_bound(&q)?.value >= h0 {
                pairs.push((s1, s2));
            }
        }
    }
    Ok(pairs)
}

/// A line bundle of the given degree built from `h`: `h^{e/2}` for even `e`,
/// `h^{(e-1)/2}(p)` for odd `e`. Negative degrees have no sections.
fn line_h0(curve: &Curve, degree: i64) -> Option<i64> {
    if degree < 0 {
        return Some(0);
    }
    let power = degree.div_euclid(2);
    h0_hyperelliptic_power(curve, power, degree % 2 == 1).ok()
}

/// `E = L + M + N` with `deg L = dL` and `F = M + N` of degree `dF` with
/// `s1(F) = s1f <= 0`, so `deg M = (dF - s1f)/2 >= deg N = (dF + s1f)/2`.
///
/// `L` must be a maximal line subbundle (`dL >= deg M`) and destabilizing
/// (`3 dL > dL + dF`). For a sum of line bundles `s1 = d - 3 max` and
/// `s2 = 3 min - d` over the summand degrees.
pub fn unstable_sharpness(curve: &Curve, d_l: i64, d_f: i64, s1f: i64) -> Result<ExampleReport> {
    if !curve.is_hyperelliptic() {
        return Err(Error::NotHyperelliptic);
    }
    if s1f > 0 || (d_f - s1f).rem_euclid(2) != 0 {
        return Err(Error::UnrealizableF { degree: d_f, s1: s1f });
    }
    let (deg_m, deg_n) = ((d_f - s1f) / 2, (d_f + s1f) / 2);
    let d = d_l + d_f;
    if d_l < deg_m {
        return Err(Error::ParamsOutOfRange("L must have the largest degree"));
    }
    if 3 * d_l <= d {
        return Err(Error::ParamsOutOfRange("L must be destabilizing"));
    }
    let h0_l = line_h0(curve, d_l).ok_or(Error::UnrealizableF { degree: d_l, s1: 0 })?;
    let h0_f = match (line_h0(curve, deg_m), line_h0(curve, deg_n)) {
        (Some(a), Some(b)) => a + b,
        _ => return Err(Error::UnrealizableF { degree: d_f, s1: s1f }),
    };
    let inv = BundleInvariants::rank3(d, d - 3 * d_l, 3 * deg_n - d)?;
    let q = Rank3Query::new(*curve, inv, Some(s1f))?;
    let bound = h0_rank3_unstable_bound(&q, s1f >= 0)?;
    Ok(ExampleReport::new(
        Family::Unstable,
        curve,
        &[("dl", d_l), ("df", d_f), ("s1f", s1f)],
        inv,
        Some(s1f),
        h0_l + h0_f,
        bound,
    ))
}

/// Every valid member of the three families on genus `2..=max_genus`, plus the split
/// sums `h^a + h^b + h^c` with `0 <= c <= b <= a <= g-1` and `2a > b + c`.
///
/// Members whose hypotheses fail, such as `m = g = 2` in the second family,
/// are left out.
pub fn suite(max_genus: i64) -> Vec<ExampleReport> {
    let mut out = Vec::new();
    for g in 2..=max_genus {
        for n in 0..=(g - 2) / 4 {
            out.extend((0..=g - 3 - 2 * n).filter_map(|k| family_a(g, n, k).ok()));
        }
        out.extend((1..=g).filter_map(|m| family_b(g, m).ok()));
        for variant in [Variant::E1, Variant::E2] {
            out.extend((0..=g - 2).filter_map(|k| family_c(variant, g, k).ok()));
        }
        let Ok(curve) = Curve::hyperelliptic(g) else { continue };
        for a in 0..g {
            for b in 0..=a {
                for c in (0..=b).filter(|c| 2 * a > b + c) {
                    if let Ok(r) = unstable_sharpness(&curve, 2 * a, 2 * (b + c), 2 * (c - b)) {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}
