//! Randomized invariants over exact rational instances. Everything here is
//! checked with exact arithmetic; square roots only ever appear through the
//! sqrt-free comparison helper.

use convexdiff_core::collection::{uniform_directions, Collection};
use convexdiff_core::polytope::Polytope;
use convexdiff_core::scalar::{sqrt_leq_sqrt_sum, Arithmetic, Scalar};
use convexdiff_core::vector::Vector;
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = Scalar> {
    (-16i64..=16).prop_map(|n| Scalar::ratio(n, 8))
}

fn point() -> impl Strategy<Value = Vector> {
    prop::collection::vec(coord(), 2).prop_map(Vector)
}

fn polytope() -> impl Strategy<Value = Polytope> {
    prop::collection::vec(point(), 1..=7).prop_map(|pts| Polytope::hull(pts).unwrap())
}

fn direction() -> impl Strategy<Value = Vector> {
    ((-8i64..=8), (-8i64..=8))
        .prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0)
        .prop_map(|(a, b)| Vector::from_ints(&[a, b]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_is_idempotent_and_order_free(pts in prop::collection::vec(point(), 1..=7), seed in 0u64..1000) {
        let hull = Polytope::hull(pts.clone()).unwrap();
        let rehull = Polytope::hull(hull.vertices().to_vec()).unwrap();
        prop_assert_eq!(&rehull, &hull);
        // Any permutation gives the same canonical form.
        let mut shuffled = pts;
        let n = shuffled.len();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            shuffled.swap(i, (state % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(Polytope::hull(shuffled).unwrap(), hull);
    }

    #[test]
    fn support_is_additive_over_minkowski_sum(x in polytope(), y in polytope(), p in direction()) {
        let sum = x.minkowski_sum(&y).unwrap();
        prop_assert_eq!(sum.support_value(&p), x.support_value(&p) + y.support_value(&p));
    }

    #[test]
    fn minkowski_cancellation(x in polytope(), y in polytope(), z in polytope()) {
        let xz = x.minkowski_sum(&z).unwrap();
        let yz = y.minkowski_sum(&z).unwrap();
        prop_assert_eq!(xz == yz, x == y);
    }

    #[test]
    fn hausdorff_is_a_metric(x in polytope(), y in polytope(), z in polytope()) {
        prop_assert_eq!(x.hausdorff_sq(&x).unwrap(), Scalar::zero());
        let xy = x.hausdorff_sq(&y).unwrap();
        prop_assert_eq!(&xy, &y.hausdorff_sq(&x).unwrap());
        prop_assert!(xy.sign() >= 0);
        prop_assert_eq!(xy.sign() == 0, x == y);
        // Triangle inequality, sqrt-free.
        let xz = x.hausdorff_sq(&z).unwrap();
        let zy = z.hausdorff_sq(&y).unwrap();
        prop_assert!(sqrt_leq_sqrt_sum(&xy, &xz, &zy));
    }

    #[test]
    fn support_gap_is_bounded_by_hausdorff(x in polytope(), y in polytope(), p in direction()) {
        // |(X)_p - (Y)_p| <= d_H(X, Y) * |p|, compared on squares.
        let gap = x.support_value(&p) - y.support_value(&p);
        let lhs = &gap * &gap;
        let rhs = x.hausdorff_sq(&y).unwrap() * p.norm_sq();
        prop_assert!(lhs.cmp_val(&rhs) != std::cmp::Ordering::Greater);
    }

    #[test]
    fn scaling_composes_and_negation_involutes(x in polytope(), a in -4i64..=4, b in -4i64..=4) {
        let sa = Scalar::ratio(a, 2);
        let sb = Scalar::ratio(b, 2);
        prop_assert_eq!(x.scale(&sa).scale(&sb), x.scale(&(&sa * &sb)));
        prop_assert_eq!(x.neg().neg(), x);
    }

    #[test]
    fn polytope_serde_round_trip(x in polytope()) {
        let json = serde_json::to_string(&x).unwrap();
        let back: Polytope = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn collection_linear_space_sanity(x in polytope(), y in polytope(), z in polytope(), w in polytope()) {
        let c1 = Collection::make(x.clone(), y.clone()).unwrap();
        let c2 = Collection::make(z, w).unwrap();
        let ab = c1.add(&c2).unwrap();
        let ba = c2.add(&c1).unwrap();
        prop_assert!(ab.is_equivalent(&ba).unwrap());
        // Additive inverse collapses to the zero collection.
        let inv = Collection::make(y, x).unwrap();
        prop_assert!(c1.add(&inv).unwrap().is_zero());
        // Scaling distributes over addition up to equivalence.
        let alpha = Scalar::ratio(3, 2);
        let lhs = ab.scale(&alpha);
        let rhs = c1.scale(&alpha).add(&c2.scale(&alpha)).unwrap();
        prop_assert!(lhs.is_equivalent(&rhs).unwrap());
    }

    #[test]
    fn equivalent_collections_share_supports(x in polytope(), y in polytope(), t in point()) {
        let c1 = Collection::make(x.clone(), y.clone()).unwrap();
        let c2 = Collection::make(
            x.translate(&t).unwrap().minkowski_sum(&y).unwrap(),
            y.translate(&t).unwrap().minkowski_sum(&y).unwrap(),
        ).unwrap();
        prop_assert!(c1.is_equivalent(&c2).unwrap());
        for p in uniform_directions(8, Arithmetic::Rational) {
            prop_assert_eq!(c1.support(&p).unwrap(), c2.support(&p).unwrap());
        }
    }

    #[test]
    fn norm_triangle_inequality(x in polytope(), y in polytope()) {
        let c = Collection::make(x, y).unwrap();
        prop_assert!(c.norm_triangle_holds());
    }
}

/// For nested Y ⊂ X the Hausdorff distance is the supremum over unit
/// directions of the direction-wise support gap (X)_p − (Y)_p. The variant
/// sup_p (X)_p − inf_p (Y)_p is not an identity: already at Y = X it is
/// positive while the distance is zero.
#[test]
fn nested_distance_matches_directionwise_support_gap() {
    let x = Polytope::hull(vec![
        Vector::from_ints(&[0, 0]),
        Vector::from_ints(&[2, 0]),
        Vector::from_ints(&[2, 2]),
        Vector::from_ints(&[0, 2]),
    ])
    .unwrap();
    let y = Polytope::hull(vec![
        Vector::from_ints(&[0, 0]),
        Vector::from_ints(&[1, 0]),
        Vector::from_ints(&[1, 1]),
        Vector::from_ints(&[0, 1]),
    ])
    .unwrap();
    assert!(x.contains_set(&y).unwrap());
    let d_sq = x.hausdorff_sq(&y).unwrap();
    assert_eq!(d_sq, Scalar::from_int(2)); // farthest point (2,2), distance sqrt(2)

    // Direction-wise form: gap^2 <= d^2 |p|^2 for every direction, with
    // equality attained at p = (1, 1).
    let mut attained = false;
    for p in uniform_directions(64, Arithmetic::Rational) {
        let gap = x.support_value(&p) - y.support_value(&p);
        assert!(gap.sign() >= 0);
        let lhs = &gap * &gap;
        let rhs = &d_sq * &p.norm_sq();
        assert!(lhs.cmp_val(&rhs) != std::cmp::Ordering::Greater);
    }
    let diag = Vector::from_ints(&[1, 1]);
    let gap = x.support_value(&diag) - y.support_value(&diag);
    if &gap * &gap == &d_sq * &diag.norm_sq() {
        attained = true;
    }
    assert!(attained, "supremum attained at the diagonal direction");

    // The sup-minus-inf variant overshoots even for Y = X: sup_p (X)_p with
    // |p| = 1 is ||X|| > 0 while inf_p (X)_p is negative, so the difference
    // cannot equal d(X, X) = 0.
    let p = Vector::from_ints(&[1, 1]);
    let sup_term = x.support_value(&p);
    let inf_term = -x.support_value(&p.neg());
    assert_eq!(x.hausdorff_sq(&x).unwrap(), Scalar::zero());
    assert!((sup_term - inf_term).sign() > 0);
}
