//! Elementary transformations at the level of invariants.
//!
//! An elementary transformation `0 -> E -> E' -> C_x -> 0` raises the degree
//! by one and moves each `s_r` by `-(n-r)` when the chosen line `l_x` lies in
//! the fibre of a maximal rank-`r` subbundle, and by `+r` otherwise.
//!
//! The families `SB^i_r(E)` of rank-`r` subbundles of degree `d^r_max(E) - i`
//! are tracked only through upper bounds on their dimension. A missing entry
//! means nothing is known. A step on the `+r` branch with a general line
//! gives `dim SB^i_r(E') <= max(dim SB^i_r(E), dim SB^{i+1}_r(E) - (n-r))`,
//! since containing a fixed line imposes `n-r` conditions. After a `-(n-r)`
//! step nothing is known about rank `r`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::invariants::{BundleInvariants, Curve};

/// Upper bound on the dimension of a family; negative means empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DimBound {
    Known(i64),
    Unknown,
}

impl DimBound {
    fn join(self, other: DimBound) -> DimBound {
        match (self, other) {
            (DimBound::Known(a), DimBound::Known(b)) => DimBound::Known(a.max(b)),
            _ => DimBound::Unknown,
        }
    }

    fn minus(self, k: i64) -> DimBound {
        match self {
            DimBound::Known(a) => DimBound::Known(a - k),
            DimBound::Unknown => DimBound::Unknown,
        }
    }

    /// True when the bound is known and strictly below `limit`.
    pub fn is_below(self, limit: i64) -> bool {
        matches!(self, DimBound::Known(a) if a < limit)
    }
}

/// For each `r`, whether the line of the next step lies in the fibre of a
/// maximal rank-`r` subbundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StepChoice {
    hits: [bool; 2],
}

impl StepChoice {
    /// A general line: no `r` is hit.
    pub fn general() -> Self {
        StepChoice::default()
    }

    pub fn new(hits_r1: bool, hits_r2: bool) -> Self {
        StepChoice { hits: [hits_r1, hits_r2] }
    }

    pub fn hits(&self, r: usize) -> bool {
        self.hits[r - 1]
    }

    pub fn set(&mut self, r: usize, hit: bool) {
        self.hits[r - 1] = hit;
    }
}

/// Invariants of `E_m` after `m` elementary transformations, plus dimension
/// bounds on `SB^i_r(E_m)` and, per `r`, whether every step so far was
/// realizable for a general line (so `s_r` is certified rather than assumed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElmState {
    curve: Curve,
    inv: BundleInvariants,
    sb_dim_upper: BTreeMap<(usize, i64), i64>,
    step_count: u32,
    certified: [bool; 2],
}

impl ElmState {
    pub fn new(curve: Curve, inv: BundleInvariants) -> Self {
        ElmState { curve, inv, sb_dim_upper: BTreeMap::new(), step_count: 0, certified: [true; 2] }
    }

    /// Records `dim SB^i_r <= bound`, keeping the tighter of old and new.
    pub fn with_dim_bound(mut self, r: usize, i: i64, bound: i64) -> Self {
        let entry = self.sb_dim_upper.entry((r, i)).or_insert(bound);
        *entry = (*entry).min(bound);
        self
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn inv(&self) -> &BundleInvariants {
        &self.inv
    }

    pub fn step_count(&self) -> u32 {
        self.step_count
    }

    pub fn dim_upper(&self, r: usize, i: i64) -> DimBound {
        self.sb_dim_upper.get(&(r, i)).map_or(DimBound::Unknown, |&v| DimBound::Known(v))
    }

    /// Known entries as `(r, i, upper)`, ordered by `r` then `i`.
    pub fn dim_bounds(&self) -> Vec<(usize, i64, i64)> {
        self.sb_dim_upper.iter().map(|(&(r, i), &v)| (r, i, v)).collect()
    }

    /// Whether `s_r` follows from general choices only.
    pub fn is_certified(&self, r: usize) -> bool {
        self.certified[r - 1]
    }

    /// True when a general line avoids every maximal rank-`r` subbundle, i.e.
    /// `dim SB^0_r < n - r` is known.
    pub fn general_line_avoids(&self, r: usize) -> bool {
        self.dim_upper(r, 0).is_below(self.inv.n() - r as i64)
    }

    /// One elementary transformation.
    pub fn step(&self, choice: StepChoice) -> ElmState {
        let n = self.inv.n();
        let ranks = usize::from(self.inv.rank()) - 1;
        let mut s = [0i64; 2];
        let mut certified = self.certified;
        let mut sb = BTreeMap::new();
        for r in 1..=ranks {
            let co_rank = n - r as i64;
            if choice.hits(r) {
                s[r - 1] = self.inv.s_r(r) - co_rank;
                continue;
            }
            s[r - 1] = self.inv.s_r(r) + r as i64;
            certified[r - 1] &= self.general_line_avoids(r);
            for (&(rr, i), &old) in self.sb_dim_upper.range((r, i64::MIN)..=(r, i64::MAX)) {
                debug_assert_eq!(rr, r);
                let next = DimBound::Known(old).join(self.dim_upper(r, i + 1).minus(co_rank));
                if let DimBound::Known(v) = next {
                    sb.insert((r, i), v);
                }
            }
        }
        let inv = self.inv.with_degree_and_s(self.inv.degree() + 1, s);
        let mut next =
            ElmState { curve: self.curve, inv, sb_dim_upper: sb, step_count: self.step_count + 1, certified };
        next.apply_finiteness();
        next
    }

    /// Rank 3: a maximal rank-2 subbundle `G` with `H0(G* (x) E/G) != 0` would
    /// force `s1(G) <= s2`, while `s1(G) >= (2 s1 - s2)/3` always. So
    /// `s2 < s1/2` leaves finitely many maximal rank-2 subbundles, and dually
    /// `s1 < s2/2` finitely many maximal line subbundles.
    fn apply_finiteness(&mut self) {
        if self.inv.rank() != 3 {
            return;
        }
        let (s1, s2) = (self.inv.s_r(1), self.inv.s_r(2));
        let mut mark = |r: usize| {
            let entry = self.sb_dim_upper.entry((r, 0)).or_insert(0);
            *entry = (*entry).min(0);
        };
        if 2 * s1 < s2 {
            mark(1);
        }
        if 2 * s2 < s1 {
            mark(2);
        }
    }

    /// Applies `steps` transformations with the given choices in order.
    pub fn run<I: IntoIterator<Item = StepChoice>>(&self, steps: I) -> Vec<ElmState> {
        let mut trajectory = Vec::new();
        let mut current = self.clone();
        for choice in steps {
            current = current.step(choice);
            trajectory.push(current.clone());
        }
        trajectory
    }

    /// `m` general elementary transformations.
    ///
    /// For each `r` whose recorded bounds satisfy `dim SB^i_r < (i+1)(n-r)` for
    /// `i = 0, ..., m-1`, the result has `s_r = s_r(start) + m*r`, certified.
    /// Ranks whose bounds are missing or too weak still move by `+r` but are
    /// left uncertified. Fails when no rank can be certified.
    pub fn generic_sequence(&self, m: u32) -> Result<ElmState> {
        if m == 0 {
            return Ok(self.clone());
        }
        let ranks = usize::from(self.inv.rank()) - 1;
        let n = self.inv.n();
        let verified =
            |r: usize| (0..i64::from(m)).all(|i| self.dim_upper(r, i).is_below((i + 1) * (n - r as i64)));
        if ranks > 0 && !(1..=ranks).any(verified) {
            return Err(Error::HypothesisUnverifiable { r: 1 });
        }
        let mut current = self.clone();
        for _ in 0..m {
            current = current.step(StepChoice::general());
        }
        Ok(current)
    }
}

/// `E_0 = O(p_1) + ... + O(p_n)` for general points, `n = 2` or `3`: degree
/// `n`, all `s_r = 0`, and `dim SB^i_1(E_0) <= (i+1)(n-1) - 1` for
/// `i = 0, ..., g-1`.
pub fn seed_split_state(curve: &Curve, n: u8) -> Result<ElmState> {
    if !(2..=3).contains(&n) {
        return Err(Error::RankUnsupported { rank: n });
    }
    let zeros = [0i64; 2];
    let inv = BundleInvariants::new(n, i64::from(n), &zeros[..usize::from(n) - 1])?;
    let mut state = ElmState::new(*curve, inv);
    for i in 0..curve.genus() {
        state = state.with_dim_bound(1, i, (i + 1) * (i64::from(n) - 1) - 1);
    }
    Ok(state)
}

/// The rank-3 seed with rank-2 data added: `E_0` has exactly three maximal
/// rank-2 subbundles (`dim SB^0_2 = 0`). On a hyperelliptic curve its rank-2
/// subbundles of degree 1 form a family of dimension 2, the quotients `h`
/// contributing a plane of them.
pub fn split_rank3_seed(curve: &Curve) -> Result<ElmState> {
    let seed = seed_split_state(curve, 3)?.with_dim_bound(2, 0, 0);
    Ok(if curve.is_hyperelliptic() { seed.with_dim_bound(2, 1, 2) } else { seed })
}

/// Lower bound on `s2(E_m)` for `E_m` from `m` general transformations of the
/// split rank-3 seed: the least integer `>= (m-3)/2` that is `= 2m (mod 3)`.
///
/// For `m = 1` the value is 2: the seed has only three maximal rank-2
/// subbundles, so the first step is on the `+2` branch.
pub fn s2_lower_bound_track(m: i64) -> i64 {
    if m == 1 {
        return 2;
    }
    let mut t = -(-(m - 3)).div_euclid(2);
    while (t - 2 * m).rem_euclid(3) != 0 {
        t += 1;
    }
    t
}
