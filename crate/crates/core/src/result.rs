//! The record returned by every bound: a value, the branch that produced it,
//! and the optional hypotheses it consumed.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Which piece of a piecewise bound on `h0(L)` fired, `L` a line bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinePiece {
    Clifford,
    RiemannRoch,
}

/// Which piece of a piecewise bound on `h0(F)` fired, `F` the rank-2 quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuotientPiece {
    /// `deg F < s1(F)`, so `h0(F) = 0`.
    Vanishing,
    /// Rank-2 Clifford bound in terms of `s1(F)` (semistable `F`).
    Rank2Clifford,
    /// Only the maximal line subbundle of `F` contributes.
    MaximalLine,
    /// Both the maximal line subbundle and its quotient are in the Clifford range.
    BothClifford,
    /// Maximal line subbundle non-special, quotient in the Clifford range.
    MixedRiemannRoch,
    /// `h1(F) = 0`.
    RiemannRoch,
}

impl LinePiece {
    fn label(self) -> &'static str {
        match self {
            LinePiece::Clifford => "clifford",
            LinePiece::RiemannRoch => "riemann-roch",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        [LinePiece::Clifford, LinePiece::RiemannRoch].into_iter().find(|p| p.label() == s)
    }
}

impl QuotientPiece {
    const ALL: [QuotientPiece; 6] = [
        QuotientPiece::Vanishing,
        QuotientPiece::Rank2Clifford,
        QuotientPiece::MaximalLine,
        QuotientPiece::BothClifford,
        QuotientPiece::MixedRiemannRoch,
        QuotientPiece::RiemannRoch,
    ];

    fn label(self) -> &'static str {
        match self {
            QuotientPiece::Vanishing => "vanishing",
            QuotientPiece::Rank2Clifford => "rank2-clifford",
            QuotientPiece::MaximalLine => "maximal-line",
            QuotientPiece::BothClifford => "both-clifford",
            QuotientPiece::MixedRiemannRoch => "mixed-riemann-roch",
            QuotientPiece::RiemannRoch => "riemann-roch",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        QuotientPiece::ALL.into_iter().find(|p| p.label() == s)
    }

    /// True when this piece is an equality rather than an estimate.
    pub fn is_exact(self) -> bool {
        matches!(self, QuotientPiece::Vanishing | QuotientPiece::RiemannRoch)
    }
}

/// The branch of a bound that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// Degree below the vanishing threshold: `h0 = 0`.
    Vanishing,
    /// `h1 = 0`, so Riemann-Roch computes `h0`.
    RiemannRoch,
    /// Clifford's theorem for line bundles.
    CliffordLine,
    /// Rank-2 bound `(d - s1)/2 + 2` and its refinements.
    Rank2Clifford,
    /// Rank 3 with `s1/2 <= s2 <= 2 s1`.
    Rank3Balanced,
    /// Rank 3 with `s2 > 2 s1`, degree at least `s2 - s1`.
    Rank3S2Dominant,
    /// Rank 3 with `s2 < s1/2`, degree at most `6g-6-(s1-s2)`.
    Rank3S1Dominant,
    /// Rank 3 with `s2 > 2 s1` and `s1 <= d < s2 - s1`.
    Rank3LowDegree,
    /// Rank 3 with `s2 < s1/2` and `6g-6-(s1-s2) < d <= 6g-6-s2`.
    Rank3HighDegree,
    /// Rank 3 bound through a minimal-degree rank-2 quotient.
    Rank3Quotient,
    /// Rank 3 with `s1 < 0`: `h0(L) + h0(F)` with the pieces that fired.
    Rank3Unstable { line: LinePiece, quotient: QuotientPiece },
    /// Stable rank 3 of slope below 2.
    Slope,
}

impl Case {
    const SIMPLE: [(Case, &'static str); 11] = [
        (Case::Vanishing, "vanishing"),
        (Case::RiemannRoch, "riemann-roch"),
        (Case::CliffordLine, "clifford-line"),
        (Case::Rank2Clifford, "rank2-clifford"),
        (Case::Rank3Balanced, "rank3-balanced"),
        (Case::Rank3S2Dominant, "rank3-s2-dominant"),
        (Case::Rank3S1Dominant, "rank3-s1-dominant"),
        (Case::Rank3LowDegree, "rank3-low-degree"),
        (Case::Rank3HighDegree, "rank3-high-degree"),
        (Case::Rank3Quotient, "rank3-quotient"),
        (Case::Slope, "slope"),
    ];
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Case::Rank3Unstable { line, quotient } = self {
            return write!(f, "rank3-unstable/line-{}/quotient-{}", line.label(), quotient.label());
        }
        let label = Case::SIMPLE.iter().find(|(c, _)| c == self).map(|(_, l)| *l).unwrap_or("");
        f.write_str(label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseLabelError;

impl fmt::Display for ParseLabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unrecognized label")
    }
}

impl FromStr for Case {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix("rank3-unstable/line-") {
            let (line, quotient) = rest.split_once("/quotient-").ok_or(ParseLabelError)?;
            return Ok(Case::Rank3Unstable {
                line: LinePiece::parse(line).ok_or(ParseLabelError)?,
                quotient: QuotientPiece::parse(quotient).ok_or(ParseLabelError)?,
            });
        }
        Case::SIMPLE.iter().find(|(_, l)| *l == s).map(|(c, _)| *c).ok_or(ParseLabelError)
    }
}

/// An optional hypothesis a bound relied on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Assumption {
    /// A minimal-degree rank-2 quotient with the given `s1(F)`.
    QuotientS1(i64),
    /// The curve is hyperelliptic and the hyperelliptic sharpening was applied.
    Hyperelliptic,
    /// The governing Krawtchouk value is nonzero (`delta = 0`).
    KrawtchoukNonzero,
    /// The governing Krawtchouk value vanishes (`delta = 1`).
    KrawtchoukZero,
    /// The rank-2 quotient is semistable.
    QuotientSemistable,
    /// The rank-2 quotient is unstable.
    QuotientUnstable,
    /// Bound obtained for `E* (x) omega` and transported back by Riemann-Roch.
    SerreDual,
    /// The bundle is stable (asserted by the caller).
    Stable,
}

impl fmt::Display for Assumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assumption::QuotientS1(v) => write!(f, "quotient-s1={v}"),
            Assumption::Hyperelliptic => f.write_str("hyperelliptic"),
            Assumption::KrawtchoukNonzero => f.write_str("krawtchouk-nonzero"),
            Assumption::KrawtchoukZero => f.write_str("krawtchouk-zero"),
            Assumption::QuotientSemistable => f.write_str("quotient-semistable"),
            Assumption::QuotientUnstable => f.write_str("quotient-unstable"),
            Assumption::SerreDual => f.write_str("serre-dual"),
            Assumption::Stable => f.write_str("stable"),
        }
    }
}

impl FromStr for Assumption {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(v) = s.strip_prefix("quotient-s1=") {
            return v.parse().map(Assumption::QuotientS1).map_err(|_| ParseLabelError);
        }
        Ok(match s {
            "hyperelliptic" => Assumption::Hyperelliptic,
            "krawtchouk-nonzero" => Assumption::KrawtchoukNonzero,
            "krawtchouk-zero" => Assumption::KrawtchoukZero,
            "quotient-semistable" => Assumption::QuotientSemistable,
            "quotient-unstable" => Assumption::QuotientUnstable,
            "serre-dual" => Assumption::SerreDual,
            "stable" => Assumption::Stable,
            _ => return Err(ParseLabelError),
        })
    }
}

/// An upper bound on `h0(E)`, or its exact value when `exact` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundResult {
    pub value: i64,
    #[cfg_attr(feature = "serde", serde(with = "labels::one"))]
    pub case: Case,
    pub exact: bool,
    #[cfg_attr(feature = "serde", serde(with = "labels::many"))]
    pub assumptions: Vec<Assumption>,
}

impl BoundResult {
    pub(crate) fn estimate(value: i64, case: Case) -> Self {
        BoundResult { value: value.max(0), case, exact: false, assumptions: Vec::new() }
    }

    pub(crate) fn exact(value: i64, case: Case) -> Self {
        BoundResult { value: value.max(0), case, exact: true, assumptions: Vec::new() }
    }

    pub(crate) fn vanishing() -> Self {
        BoundResult::exact(0, Case::Vanishing)
    }

    pub(crate) fn assuming(mut self, assumption: Assumption) -> Self {
        if !self.assumptions.contains(&assumption) {
            self.assumptions.push(assumption);
        }
        self
    }

    pub fn assumption_labels(&self) -> Vec<String> {
        use alloc::string::ToString;
        self.assumptions.iter().map(|a| a.to_string()).collect()
    }
}

#[cfg(feature = "serde")]
mod labels {
    pub mod one {
        use alloc::string::{String, ToString};

        use serde::{de::Error, Deserialize, Deserializer, Serializer};

        use crate::result::Case;

        pub fn serialize<S: Serializer>(case: &Case, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&case.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Case, D::Error> {
            let raw = String::deserialize(d)?;
            raw.parse().map_err(|_| D::Error::custom("unknown case label"))
        }
    }

    pub mod many {
        use alloc::string::{String, ToString};
        use alloc::vec::Vec;

        use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        use crate::result::Assumption;

        pub fn serialize<S: Serializer>(items: &[Assumption], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(items.len()))?;
            for item in items {
                seq.serialize_element(&item.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Assumption>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter().map(|s| s.parse().map_err(|_| D::Error::custom("unknown assumption label"))).collect()
        }
    }
}
