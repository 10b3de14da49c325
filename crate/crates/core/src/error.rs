use thiserror::Error;

/// Named hypotheses that a bound or construction can fail to meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// `s1 <= 2 * s2`, needed by the quotient bound.
    StabilityOrdering,
    /// The degree window `max(s1, (3 s1(F) - s1)/2) <= d <= 6g-6 - (3 s1(F) + s1)/2`.
    QuotientDegreeWindow,
    /// `s1 <= 2 * s2` for a family member, via the certified lower bound on `s2`.
    FamilyStabilityOrdering,
    /// `s1(F) > 0`, needed by the hyperelliptic sharpening of the quotient bound.
    PositiveQuotientS1,
}

impl Hypothesis {
    pub fn label(self) -> &'static str {
        match self {
            Hypothesis::StabilityOrdering => "s1-at-most-twice-s2",
            Hypothesis::QuotientDegreeWindow => "quotient-degree-window",
            Hypothesis::FamilyStabilityOrdering => "family-s1-at-most-twice-s2",
            Hypothesis::PositiveQuotientS1 => "positive-quotient-s1",
        }
    }
}

impl core::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus {genus} is below 2")]
    GenusTooSmall { genus: i64 },
    #[error("rank {rank} is not supported (expected 1, 2 or 3)")]
    RankUnsupported { rank: u8 },
    #[error("rank {rank} needs {expected} stability degrees, got {got}")]
    StabilityCount { rank: u8, expected: usize, got: usize },
    #[error("s_{r} violates the congruence s_r = r*d (mod n)")]
    CongruenceViolation { r: usize },
    #[error("bundle is not semistable")]
    NotSemistable,
    #[error("bundle is semistable; the unstable bound does not apply")]
    NotUnstable,
    #[error("the operation needs s1 of a minimal-degree rank-2 quotient")]
    MissingS1F,
    #[error("s1(F) = {s1f} has the wrong parity for a quotient of degree {quotient_degree}")]
    QuotientParity { s1f: i64, quotient_degree: i64 },
    #[error("s1(F) = {s1f} is below the smallest admissible value {minimum}")]
    QuotientBelowMinimum { s1f: i64, minimum: i64 },
    #[error("s1(F) = {s1f} does not match the declared quotient stability")]
    QuotientStabilityMismatch { s1f: i64 },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(Hypothesis),
    #[error("rank {got} where rank {expected} is required")]
    RankMismatch { expected: u8, got: u8 },
    #[error("the curve is not hyperelliptic")]
    NotHyperelliptic,
    #[error("negative power {power} of the hyperelliptic bundle")]
    NegativePower { power: i64 },
    #[error("power {power} with a general point exceeds the modeled range (at most g-2 = {max})")]
    OutOfModeledRange { power: i64, max: i64 },
    #[error("invalid Krawtchouk query: need n <= N, got n = {n}, N = {big_n}")]
    InvalidKrawtchoukQuery { n: i64, big_n: i64 },
    #[error("Krawtchouk index {index} is negative")]
    IndexNegative { index: i64 },
    #[error("2d + s1 - 3 s1(F) = {value} is not divisible by 6")]
    IndexNotIntegral { value: i64 },
    #[error("Krawtchouk refinement undefined: n = {n} exceeds N = {big_n}")]
    KrawtchoukDomain { n: i64, big_n: i64 },
    #[error("oracle supports N <= 64, got N = {big_n}")]
    OracleRangeExceeded { big_n: i64 },
    #[error("slope bound needs degree below 6, got {degree}")]
    SlopeOutOfRange { degree: i64 },
    #[error("the quotient degree ranges do not partition the window at d = {degree}")]
    RangeUncovered { degree: i64 },
    #[error("parameters out of range: {0}")]
    ParamsOutOfRange(&'static str),
    #[error("no split bundle over powers of h realizes degree {degree} with s1 = {s1}")]
    UnrealizableF { degree: i64, s1: i64 },
    #[error("dimension hypotheses for rank-{r} subbundles cannot be verified")]
    HypothesisUnverifiable { r: usize },
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::GenusTooSmall { .. } => "GenusTooSmall",
            Error::RankUnsupported { .. } => "RankUnsupported",
            Error::StabilityCount { .. } => "StabilityCount",
            Error::CongruenceViolation { .. } => "CongruenceViolation",
            Error::NotSemistable => "NotSemistable",
            Error::NotUnstable => "NotUnstable",
            Error::MissingS1F => "MissingS1F",
            Error::QuotientParity { .. } => "QuotientParity",
            Error::QuotientBelowMinimum { .. } => "QuotientBelowMinimum",
            Error::QuotientStabilityMismatch { .. } => "QuotientStabilityMismatch",
            Error::HypothesisFailed(_) => "HypothesisFailed",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::NotHyperelliptic => "NotHyperelliptic",
            Error::NegativePower { .. } => "NegativePower",
            Error::OutOfModeledRange { .. } => "OutOfModeledRange",
            Error::InvalidKrawtchoukQuery { .. } => "InvalidKrawtchoukQuery",
            Error::IndexNegative { .. } => "IndexNegative",
            Error::IndexNotIntegral { .. } => "IndexNotIntegral",
            Error::KrawtchoukDomain { .. } => "KrawtchoukDomain",
            Error::OracleRangeExceeded { .. } => "OracleRangeExceeded",
            Error::SlopeOutOfRange { .. } => "SlopeOutOfRange",
            Error::RangeUncovered { .. } => "RangeUncovered",
            Error::ParamsOutOfRange(_) => "ParamsOutOfRange",
            Error::UnrealizableF { .. } => "UnrealizableF",
            Error::HypothesisUnverifiable { .. } => "HypothesisUnverifiable",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
