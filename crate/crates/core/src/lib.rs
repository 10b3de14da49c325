//! Upper bounds on `h0(E)` for vector bundles of rank at most 3 on a smooth
//! projective curve of genus `g >= 2`, as piecewise functions of the degree
//! and the degrees of stability `s_r`.
//!
//! The crate is `no_std` with `alloc`. All arithmetic is exact: half-integers
//! are carried as doubled integers and Krawtchouk values as big integers.
//!
//! ```
//! use clifford3_core::{h0_rank3_semistable_bound, BundleInvariants, Curve, Rank3Query};
//!
//! let curve = Curve::hyperelliptic(3)?;
//! let e = BundleInvariants::rank3(10, 1, 2)?;
//! let q = Rank3Query::new(curve, e, None)?.with_hyperelliptic_sharpening(true);
//! assert_eq!(h0_rank3_semistable_bound(&q)?.value, 6);
//! # Ok::<(), clifford3_core::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod elmtrans;
pub mod error;
pub mod examples;
pub mod half;
pub mod invariants;
pub mod krawtchouk;
pub mod result;

pub use bounds::{
    h0_line_bound, h0_quotient_bound, h0_rank2_bound, h0_rank3_semistable_bound, h0_rank3_unstable_bound,
    quotient_degree, slope_bound, suggested_min_s1f, Rank3Query,
};
pub use elmtrans::{
    s2_lower_bound_track, seed_split_state, split_rank3_seed, DimBound, ElmState, StepChoice,
};
pub use error::{Error, Hypothesis, Result};
pub use examples::{
    family_a, family_b, family_c, stable_pairs_reaching, suite, unstable_sharpness, ExampleReport, Family,
    Variant,
};
pub use half::HalfInt;
pub use invariants::{h0_hyperelliptic_power, serre_dual, twist_by_line, BundleInvariants, Curve};
pub use krawtchouk::{krawtchouk, krawtchouk_oracle, KrawtchoukQuery};
pub use result::{Assumption, BoundResult, Case, LinePiece, QuotientPiece};
