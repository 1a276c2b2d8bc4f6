//! Property tests for the structural invariants of the geometry layer.

use mixvol::{convex_hull, mixed_volume, LaurentPolynomial, PointSet, Polytope};
use num::{BigInt, BigRational, One, Signed, Zero};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn qr(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int_points(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, dim), 1..=7)
}

fn to_polytope(dim: usize, pts: &[Vec<i64>]) -> Polytope {
    let rational: Vec<Vec<BigRational>> = pts
        .iter()
        .map(|p| p.iter().map(|&c| q(c)).collect())
        .collect();
    Polytope::from_points(dim, rational).unwrap()
}

fn to_pointset(dim: usize, pts: &[Vec<i64>]) -> PointSet {
    PointSet::new(
        dim,
        pts.iter()
            .map(|p| p.iter().map(|&c| BigInt::from(c)).collect())
            .collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_idempotent(pts in int_points(3)) {
        let p = to_polytope(3, &pts);
        let again = convex_hull(p.vertices(), 3).unwrap();
        prop_assert_eq!(p, again);
    }

    #[test]
    fn hull_contains_all_inputs(pts in int_points(3)) {
        let p = to_polytope(3, &pts);
        for raw in &pts {
            let x: Vec<BigRational> = raw.iter().map(|&c| q(c)).collect();
            prop_assert!(p.contains(&x));
        }
    }

    #[test]
    fn semigroup_homomorphism(a in int_points(2), b in int_points(2)) {
        let sa = to_pointset(2, &a);
        let sb = to_pointset(2, &b);
        let lhs = sa.sum(&sb).unwrap().hull();
        let rhs = sa.hull().minkowski_sum(&sb.hull()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn volume_integrality(pts in int_points(3)) {
        let p = to_polytope(3, &pts);
        let normalized = p.volume() * q(6);
        prop_assert!(normalized.is_integer());
        prop_assert!(!normalized.is_negative());
    }

    #[test]
    fn dilation_homogeneity(pts in int_points(2), num in 0i64..=5, den in 1i64..=3) {
        let p = to_polytope(2, &pts);
        let k = qr(num, den);
        let scaled = p.dilate(&k).unwrap();
        prop_assert_eq!(scaled.volume().clone(), p.volume() * &k * &k);
    }

    #[test]
    fn translation_invariance(pts in int_points(2), tx in -5i64..=5, ty in -5i64..=5) {
        let p = to_polytope(2, &pts);
        let t = p.translate(&[q(tx), q(ty)]).unwrap();
        prop_assert_eq!(t.volume(), p.volume());
    }

    #[test]
    fn volume_monotone_under_inclusion(pts in int_points(2), extra in int_points(2)) {
        let p = to_polytope(2, &pts);
        let mut all = pts.clone();
        all.extend(extra);
        let bigger = to_polytope(2, &all);
        prop_assert!(p.volume() <= bigger.volume());
    }

    #[test]
    fn completion_contains_and_idempotent(pts in int_points(2)) {
        let a = to_pointset(2, &pts);
        let c = a.completion();
        for p in a.points() {
            prop_assert!(c.contains(p));
        }
        prop_assert_eq!(c.completion(), c);
    }

    #[test]
    fn mixed_volume_symmetry_and_diagonal(a in int_points(2), b in int_points(2)) {
        let pa = to_polytope(2, &a);
        let pb = to_polytope(2, &b);
        let ab = mixed_volume(&[pa.clone(), pb.clone()]).unwrap();
        let ba = mixed_volume(&[pb.clone(), pa.clone()]).unwrap();
        prop_assert_eq!(&ab, &ba);
        prop_assert!(!ab.is_negative());
        let diag = mixed_volume(&[pa.clone(), pa.clone()]).unwrap();
        prop_assert_eq!(&diag, pa.volume());
    }

    #[test]
    fn mixed_volume_multilinearity(a in int_points(2), b in int_points(2), c in int_points(2)) {
        let pa = to_polytope(2, &a);
        let pb = to_polytope(2, &b);
        let pc = to_polytope(2, &c);
        let sum = pa.minkowski_sum(&pb).unwrap();
        let lhs = mixed_volume(&[sum, pc.clone()]).unwrap();
        let rhs = mixed_volume(&[pa, pc.clone()]).unwrap()
            + mixed_volume(&[pb, pc]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_volume_translation_per_slot(a in int_points(2), b in int_points(2), tx in -4i64..=4) {
        let pa = to_polytope(2, &a);
        let pb = to_polytope(2, &b);
        let before = mixed_volume(&[pa.clone(), pb.clone()]).unwrap();
        let moved = pa.translate(&[q(tx), q(1)]).unwrap();
        let after = mixed_volume(&[moved, pb]).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn laurent_print_parse_fixed_point(
        terms in prop::collection::btree_map(
            (-3i64..=3, -3i64..=3),
            (-9i64..=9).prop_filter("nonzero", |&c| c != 0),
            1..=5,
        )
    ) {
        let map: BTreeMap<Vec<i64>, BigRational> = terms
            .into_iter()
            .map(|((x, y), c)| (vec![x, y], q(c)))
            .collect();
        let f = LaurentPolynomial::from_terms(vec!["x".into(), "y".into()], map).unwrap();
        let printed = f.to_string();
        let reparsed = LaurentPolynomial::parse(&printed, &["x", "y"]).unwrap();
        prop_assert_eq!(&f, &reparsed);
        prop_assert_eq!(printed, reparsed.to_string());
    }

    #[test]
    fn polytope_doc_round_trip(pts in int_points(3)) {
        let p = to_polytope(3, &pts);
        let doc = mixvol::io::polytope_to_doc(&p);
        let json = serde_json::to_string(&doc).unwrap();
        let back: mixvol::io::PointsDoc = serde_json::from_str(&json).unwrap();
        let p2 = mixvol::io::polytope_from_doc(&back).unwrap();
        prop_assert_eq!(p, p2);
    }

    #[test]
    fn kushnirenko_equals_bkk_on_equal_supports(pts in int_points(2)) {
        let a = to_pointset(2, &pts);
        let k = mixvol::kushnirenko_count(&a);
        let b = mixvol::bkk_count(&[a.clone(), a]).unwrap();
        prop_assert_eq!(k.value, b.value);
    }

    #[test]
    fn bkk_monotone_under_support_growth(pts in int_points(2), extra in int_points(2)) {
        let small = to_pointset(2, &pts);
        let mut all = pts.clone();
        all.extend(extra);
        let big = to_pointset(2, &all);
        let other = to_pointset(2, &[vec![0, 0], vec![1, 0], vec![0, 1]]);
        let small_count = mixvol::bkk_count(&[small, other.clone()]).unwrap();
        let big_count = mixvol::bkk_count(&[big, other]).unwrap();
        prop_assert!(small_count.value <= big_count.value);
    }

    #[test]
    fn virtual_volume_of_embedding(pts in int_points(2)) {
        let p = to_polytope(2, &pts);
        let v = mixvol::VirtualPolytope::embed(p.clone());
        prop_assert_eq!(&mixvol::virtual_volume(&v).unwrap(), p.volume());
    }

    #[test]
    fn one_is_zero_polytope_identity(pts in int_points(2)) {
        let p = to_polytope(2, &pts);
        let zero = Polytope::origin(2).unwrap();
        prop_assert_eq!(p.minkowski_sum(&zero).unwrap(), p);
    }
}

#[test]
fn criterion_equivalence_on_sampled_completions() {
    // dependent <=> every completion has zero mixed volume, sampled.
    use rand::{Rng, SeedableRng};
    let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let seg = |a: [i64; 2], b: [i64; 2]| Polytope::from_int_points(2, &[&a, &b]).unwrap();
    let dependent_pair = [seg([0, 0], [2, 1]), seg([1, 1], [5, 3])];
    let witness = mixvol::minkowski_zero_criterion(&dependent_pair).unwrap();
    assert!(witness.dependent);
    assert_eq!(
        mixed_volume(&dependent_pair).unwrap(),
        BigRational::zero()
    );

    let square = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
    for _ in 0..20 {
        let dx = r.gen_range(1i64..=4);
        let dy = r.gen_range(1i64..=4);
        let body = Polytope::from_int_points(2, &[&[0, 0], &[dx, 0], &[0, dy]]).unwrap();
        let w = mixvol::minkowski_zero_criterion(&[square.clone(), body.clone()]).unwrap();
        assert!(!w.dependent);
        assert!(mixed_volume(&[square.clone(), body]).unwrap() > BigRational::zero());
    }
    let _ = BigRational::one();
}
