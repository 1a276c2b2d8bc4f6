//! Exact polytope arithmetic: hulls, Minkowski sums, dilation, volume,
//! lattice points, completion, and the affine-dependence test.
//!
//! Run with `cargo run --example polytope_arithmetic`.

use mixvol::{affinely_dependent, convex_hull, PointSet, Polytope};
use num::{BigInt, BigRational};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn qr(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn show(label: &str, p: &Polytope) {
    let verts: Vec<String> = p
        .vertices()
        .iter()
        .map(|v| {
            let coords: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            format!("({})", coords.join(", "))
        })
        .collect();
    println!(
        "{label}: dim {} (intrinsic {}), volume {}, vertices {}",
        p.ambient_dim(),
        p.intrinsic_dim(),
        p.volume(),
        verts.join(" ")
    );
}

fn main() {
    // Hulls drop interior points and keep exact rational coordinates.
    let square = convex_hull(
        &[
            vec![q(0), q(0)],
            vec![q(1), q(0)],
            vec![q(0), q(1)],
            vec![q(1), q(1)],
            vec![qr(1, 2), qr(1, 2)], // interior, will vanish
        ],
        2,
    )
    .unwrap();
    show("unit square", &square);

    // Minkowski sum of orthogonal segments is the square again.
    let e1 = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
    let e2 = Polytope::from_int_points(2, &[&[0, 0], &[0, 1]]).unwrap();
    let sum = e1.minkowski_sum(&e2).unwrap();
    show("e1 + e2", &sum);
    assert_eq!(sum, square);

    // Dilation scales volume by k^n; dilate(P, 2) = P + P.
    let tripled = square.dilate(&q(3)).unwrap();
    show("3 * square", &tripled);
    assert_eq!(
        square.dilate(&q(2)).unwrap(),
        square.minkowski_sum(&square).unwrap()
    );

    // The standard 3-simplex has volume 1/6.
    let simplex =
        Polytope::from_int_points(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
    show("standard 3-simplex", &simplex);

    // Lattice points by exact bounding-box scan.
    let big = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1]])
        .unwrap()
        .dilate(&q(4))
        .unwrap();
    println!(
        "4 * simplex contains {} lattice points (binomial(6,2) = 15)",
        big.lattice_points().unwrap().len()
    );

    // Completion saturates a support inside its own hull.
    let sparse = PointSet::from_coords(2, &[&[0, 0], &[1, 1], &[2, 0]]).unwrap();
    let completed = sparse.completion();
    println!(
        "completion of {{(0,0),(1,1),(2,0)}} has {} points (gains (1,0))",
        completed.len()
    );

    // Affine dependence: two parallel segments sum to a segment, so the
    // pair is dependent with witness {0, 1}.
    let s1 = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
    let s2 = Polytope::from_int_points(2, &[&[0, 0], &[3, 0]]).unwrap();
    let witness = affinely_dependent(&[s1, s2]).unwrap();
    println!(
        "parallel segments dependent = {}, witness J = {:?}",
        witness.dependent, witness.subset
    );
}
