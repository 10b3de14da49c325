use clifford3_core::{
    h0_line_bound, h0_quotient_bound, h0_rank2_bound, h0_rank3_semistable_bound, krawtchouk,
    krawtchouk_oracle, serre_dual, twist_by_line, BundleInvariants, Curve, KrawtchoukQuery, Rank3Query,
};
use proptest::prelude::*;

fn rank3_value(curve: Curve, d: i64, s1: i64, s2: i64) -> i64 {
    let inv = BundleInvariants::rank3(d, s1, s2).unwrap();
    h0_rank3_semistable_bound(&Rank3Query::new(curve, inv, None).unwrap()).unwrap().value
}

/// `(d, s1, s2)` with valid congruences: `s1 = d (mod 3)`, `s2 = 2d (mod 3)`.
fn congruent(d: i64, a: i64, b: i64) -> (i64, i64) {
    (3 * a + d.rem_euclid(3), 3 * b + (2 * d).rem_euclid(3))
}

proptest! {
    #[test]
    fn serre_duality_mirrors_the_rank3_bound(g in 2i64..9, rho in 0i64..3, a in 0i64..9, b in 0i64..9, u in 0i64..64) {
        let (s1, s2) = (3 * (a % g) + rho, 3 * (b % g) + (2 * rho) % 3);
        let span = (6 * g - 6 - s2 - s1).div_euclid(3);
        prop_assume!(span >= 0);
        let d = s1 + 3 * (u % (span + 1));
        let curve = Curve::new(g, false).unwrap();
        let dual = 6 * g - 6 - d;
        prop_assert_eq!(rank3_value(curve, d, s1, s2), d + 3 - 3 * g + rank3_value(curve, dual, s2, s1));
    }

    #[test]
    fn serre_dual_is_an_involution(g in 2i64..12, d in -40i64..80, a in -5i64..8, b in -5i64..8) {
        let (s1, s2) = congruent(d, a, b);
        let curve = Curve::new(g, false).unwrap();
        let e = BundleInvariants::rank3(d, s1, s2).unwrap();
        let dual = serre_dual(&curve, &e);
        prop_assert_eq!(dual.degree(), 3 * (2 * g - 2) - d);
        prop_assert_eq!(dual.s(), &[s2, s1][..]);
        prop_assert_eq!(serre_dual(&curve, &dual), e);
    }

    #[test]
    fn twisting_keeps_stability_degrees(d in -40i64..80, a in -5i64..8, b in -5i64..8, t in -10i64..10) {
        let (s1, s2) = congruent(d, a, b);
        let e = BundleInvariants::rank3(d, s1, s2).unwrap();
        let twisted = twist_by_line(&e, t);
        prop_assert_eq!(twisted.degree(), d + 3 * t);
        prop_assert_eq!(twisted.s(), e.s());
        prop_assert!(twisted.validate().is_ok());
    }

    #[test]
    fn rank2_bound_is_monotone_in_degree(g in 2i64..10, s1 in 0i64..12, d in -4i64..60, hyp in any::<bool>()) {
        let curve = Curve::new(g, hyp).unwrap();
        let d = if (d - s1).rem_euclid(2) == 0 { d } else { d + 1 };
        let here = h0_rank2_bound(&curve, d, s1, false).unwrap().value;
        let next = h0_rank2_bound(&curve, d + 2, s1, false).unwrap().value;
        prop_assert!(here <= next);
    }

    #[test]
    fn line_bound_never_exceeds_degree_plus_one(g in 2i64..12, d in 0i64..60) {
        prop_assert!(h0_line_bound(&Curve::new(g, false).unwrap(), d).value <= d + 1);
    }

    #[test]
    fn rank3_bound_drops_by_at_most_one_when_sharpened(g in 2i64..9, d in 0i64..50, a in 0i64..6, b in 0i64..6) {
        let (s1, s2) = congruent(d, a, b);
        let curve = Curve::hyperelliptic(g).unwrap();
        let inv = BundleInvariants::rank3(d, s1, s2).unwrap();
        let q = Rank3Query::new(curve, inv, None).unwrap();
        let base = h0_rank3_semistable_bound(&q).unwrap().value;
        let sharp = h0_rank3_semistable_bound(&q.with_hyperelliptic_sharpening(true)).unwrap().value;
        prop_assert!(base - 1 <= sharp && sharp <= base);
    }

    #[test]
    fn quotient_bound_refinements_never_raise(g in 2i64..9, d in 0i64..50, a in 0i64..6, b in 0i64..6, c in 0i64..8) {
        let (s1, s2) = congruent(d, a, b);
        let inv = BundleInvariants::rank3(d, s1, s2).unwrap();
        let deg_f = (2 * d + s1) / 3;
        let s1f = 2 * c + deg_f.rem_euclid(2);
        let Ok(q) = Rank3Query::new(Curve::hyperelliptic(g).unwrap(), inv, Some(s1f)) else {
            return Ok(());
        };
        let Ok(base) = h0_quotient_bound(&q) else { return Ok(()) };
        if let Ok(refined) = h0_quotient_bound(&q.with_delta(true)) {
            prop_assert!(refined.value <= base.value && refined.value >= base.value - 1);
        }
        let sharp = h0_quotient_bound(&q.with_hyperelliptic_sharpening(true)).unwrap();
        prop_assert!(sharp.value <= base.value);
    }

    #[test]
    fn krawtchouk_matches_oracle_up_to_64(big_n in 0i64..=64, n in 0i64..=64, r in 0i64..=64) {
        prop_assume!(n <= big_n && r <= big_n);
        let q = KrawtchoukQuery::new(r, n, big_n).unwrap();
        prop_assert_eq!(krawtchouk(&q), krawtchouk_oracle(&q).unwrap());
    }
}
