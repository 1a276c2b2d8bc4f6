//! Mixed volumes by inclusion-exclusion, their agreement with the generic
//! polarization engine, virtual polytopes, and Minkowski's vanishing
//! criterion.
//!
//! Run with `cargo run --example mixed_volumes`.

use mixvol::{
    minkowski_zero_criterion, mixed_volume, polarize, virtual_mixed_volume, virtual_volume,
    HomogeneousForm, Polytope, VirtualPolytope, VolumeForm,
};
use num::{BigInt, BigRational};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn main() {
    // MV(e1-segment, e2-segment) = 1/2: half the unit square.
    let e1 = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
    let e2 = Polytope::from_int_points(2, &[&[0, 0], &[0, 1]]).unwrap();
    println!(
        "MV(e1, e2) = {}",
        mixed_volume(&[e1.clone(), e2.clone()]).unwrap()
    );

    // Diagonal: MV(P, ..., P) = V(P).
    let p = Polytope::from_int_points(3, &[&[0, 0, 0], &[2, 0, 1], &[1, 3, 0], &[0, 1, 2]])
        .unwrap();
    let diag = mixed_volume(&[p.clone(), p.clone(), p.clone()]).unwrap();
    println!("MV(P, P, P) = {} = V(P) = {}", diag, p.volume());

    // Bilinearity in dilations: MV(aS, bS) = a b V(S).
    let simplex = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
    let a = simplex.dilate(&q(2)).unwrap();
    let b = simplex.dilate(&q(3)).unwrap();
    println!("MV(2S, 3S) = {} (= 2 * 3 * 1/2)", mixed_volume(&[a, b]).unwrap());

    // The very same number comes out of the generic polarization engine
    // applied to the volume form on the Minkowski semigroup.
    let bodies = [
        Polytope::from_int_points(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap(),
        Polytope::from_int_points(3, &[&[0, 0, 0], &[1, 1, 0], &[0, 1, 1]]).unwrap(),
        Polytope::from_int_points(3, &[&[0, 0, 0], &[2, 0, 1], &[1, 2, 0], &[0, 0, 2]]).unwrap(),
    ];
    let form = VolumeForm::new(3).unwrap();
    let via_engine = polarize(&form, &bodies, &form.zero()).unwrap();
    let via_formula = mixed_volume(&bodies).unwrap();
    println!("engine {via_engine} == formula {via_formula}");
    assert_eq!(via_engine, via_formula);

    // Virtual polytopes: volume extends to formal differences.
    let square = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
    let two_square = square.dilate(&q(2)).unwrap();
    let v = VirtualPolytope::new(two_square, square.clone()).unwrap();
    println!(
        "virtual volume of (2S - S) = {} (representative of S itself)",
        virtual_volume(&v).unwrap()
    );
    assert_eq!(v, VirtualPolytope::embed(square.clone()));

    // Virtual mixed volumes reduce to plain ones on embedded bodies.
    let vs = [
        VirtualPolytope::embed(e1.clone()),
        VirtualPolytope::embed(e2.clone()),
    ];
    println!("virtual MV(e1 - 0, e2 - 0) = {}", virtual_mixed_volume(&vs).unwrap());

    // Minkowski's criterion: two parallel segments kill every mixed volume.
    let s1 = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
    let s2 = Polytope::from_int_points(2, &[&[0, 0], &[3, 0]]).unwrap();
    let w = minkowski_zero_criterion(&[s1.clone(), s2.clone()]).unwrap();
    println!(
        "parallel segments: dependent = {}, MV = {}",
        w.dependent,
        mixed_volume(&[s1, s2]).unwrap()
    );
}
