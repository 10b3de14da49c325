//! Krawtchouk polynomials `K_r(n, N)`, the coefficients of
//! `(1 - z)^n (1 + z)^(N - n)`, and the vanishing test behind the `delta`
//! refinement of the rank-2 Clifford bound.
//!
//! Everything is exact: a zero test is only meaningful in integer arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Index `r` and parameters `n <= N` of a Krawtchouk value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KrawtchoukQuery {
    r: i64,
    n: i64,
    big_n: i64,
}

impl KrawtchoukQuery {
    pub fn new(r: i64, n: i64, big_n: i64) -> Result<Self> {
        if r < 0 {
            return Err(Error::IndexNegative { index: r });
        }
        if n < 0 || big_n < n {
            return Err(Error::InvalidKrawtchoukQuery { n, big_n });
        }
        Ok(KrawtchoukQuery { r, n, big_n })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn big_n(&self) -> i64 {
        self.big_n
    }
}

/// `C(a, b)`, zero outside `0 <= b <= a`.
fn choose(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    binomial(BigInt::from(a), BigInt::from(b))
}

/// `K_r(n, N) = sum_j (-1)^j C(n, j) C(N - n, r - j)`.
///
/// Both binomials are stepped by their ratios along `j`, so each term costs one
/// small multiplication and one exact division.
pub fn krawtchouk(q: &KrawtchoukQuery) -> BigInt {
    let KrawtchoukQuery { r, n, big_n } = *q;
    let rest = big_n - n;
    let (first, last) = ((r - rest).max(0), r.min(n));
    if first > last {
        return BigInt::zero();
    }
    let mut left = choose(n, first);
    let mut right = choose(rest, r - first);
    let mut total = BigInt::zero();
    for j in first..=last {
        let term = &left * &right;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        if j < last {
            // C(n, j+1) = C(n, j) (n - j)/(j + 1); C(M, k-1) = C(M, k) k/(M - k + 1).
            left = left * (n - j) / (j + 1);
            let k = r - j;
            right = right * k / (rest - k + 1);
        }
    }
    total
}

/// Largest `N` accepted by [`krawtchouk_oracle`].
pub const ORACLE_MAX_N: i64 = 64;

/// The same coefficient by expanding both factors with repeated multiplication
/// by `1 - z` and `1 + z` and convolving. Uses no binomial identities.
pub fn krawtchouk_oracle(q: &KrawtchoukQuery) -> Result<BigInt> {
    let KrawtchoukQuery { r, n, big_n } = *q;
    if big_n > ORACLE_MAX_N {
        return Err(Error::OracleRangeExceeded { big_n });
    }
    let times_linear = |poly: &[i128], sign: i128| {
        let mut out = vec![0i128; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            out[i] += c;
            out[i + 1] += sign * c;
        }
        out
    };
    let mut minus: Vec<i128> = vec![1];
    for _ in 0..n {
        minus = times_linear(&minus, -1);
    }
    let mut plus: Vec<i128> = vec![1];
    for _ in 0..big_n - n {
        plus = times_linear(&plus, 1);
    }
    let r = r as usize;
    let coefficient: i128 = minus
        .iter()
        .enumerate()
        .filter(|(i, _)| *i <= r)
        .map(|(i, &a)| a * plus.get(r - i).copied().unwrap_or(0))
        .sum();
    Ok(BigInt::from(coefficient))
}

/// Whether `K_{(2d + s1 - 3 s1(F))/6 + 1}(g, 2g - s1(F))` vanishes for a rank-3
/// bundle of degree `d` with `s1 = s1(E)` and a rank-2 quotient with `s1(F) = s1f`.
///
/// When it vanishes, `delta = 1` and the refined bound gains nothing.
pub fn delta_vanishes(g: i64, d: i64, s1: i64, s1f: i64) -> Result<bool> {
    let numerator = 2 * d + s1 - 3 * s1f;
    if numerator.rem_euclid(6) != 0 {
        return Err(Error::IndexNotIntegral { value: numerator });
    }
    krawtchouk_index_vanishes(g, numerator / 6 + 1, s1f)
}

/// The rank-2 form of [`delta_vanishes`]: for `F` of degree `deg_f`, the index
/// is `(deg_f - s1(F))/2 + 1`. Requires `deg_f = s1(F) (mod 2)`.
pub fn quotient_delta_vanishes(g: i64, deg_f: i64, s1f: i64) -> Result<bool> {
    let numerator = deg_f - s1f;
    if numerator.rem_euclid(2) != 0 {
        return Err(Error::IndexNotIntegral { value: 3 * numerator });
    }
    krawtchouk_index_vanishes(g, numerator / 2 + 1, s1f)
}

fn krawtchouk_index_vanishes(g: i64, index: i64, s1f: i64) -> Result<bool> {
    if index < 0 {
        return Err(Error::IndexNegative { index });
    }
    let big_n = 2 * g - s1f;
    if big_n < g {
        return Err(Error::KrawtchoukDomain { n: g, big_n });
    }
    let q = KrawtchoukQuery::new(index, g, big_n)?;
    Ok(krawtchouk(&q).is_zero())
}

/// `sum_r K_r(n, N) z^r` evaluated at `z = 1` and `z = -1`; used by tests and
/// the CLI to sanity-check a row of values.
pub fn row_sums(n: i64, big_n: i64) -> Result<(BigInt, BigInt)> {
    let mut at_one = BigInt::zero();
    let mut at_minus_one = BigInt::zero();
    let mut sign = BigInt::one();
    for r in 0..=big_n {
        let k = krawtchouk(&KrawtchoukQuery::new(r, n, big_n)?);
        at_one += &k;
        at_minus_one += &sign * &k;
        sign = -sign;
    }
    Ok((at_one, at_minus_one))
}
