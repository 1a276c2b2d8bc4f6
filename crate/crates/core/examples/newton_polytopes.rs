//! From Laurent polynomials to root counts: parsing, Newton polytopes,
//! Koushnirenko and BKK numbers, the Newton-Okounkov inclusion-exclusion
//! index, and the empty-intersection criterion.
//!
//! Run with `cargo run --example newton_polytopes`.

use mixvol::{
    bkk_count, generic_empty_intersection, kushnirenko_count, no_body_index, LaurentPolynomial,
    PointSet,
};

fn main() {
    // Parsing: exact rational coefficients, negative (Laurent) exponents.
    let f = LaurentPolynomial::parse("3*x^2*y^-1 - y + 5", &["x", "y"]).unwrap();
    println!("f = {f}");
    println!("support of f: {:?}", f.support().points());

    // Newton polytope: hull of the support.
    let g = LaurentPolynomial::parse("x^2*y + y^2*x + 1", &["x", "y"]).unwrap();
    let newton = g.newton_polytope();
    println!(
        "newton polytope of {g}: {} vertices, volume {}",
        newton.vertices().len(),
        newton.volume()
    );

    // Koushnirenko: n! V(hull(A)) counts the torus roots of n generic
    // equations sharing the support A.
    let square = PointSet::from_coords(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
    println!(
        "koushnirenko(unit square support) = {}",
        kushnirenko_count(&square).value
    );

    // BKK for mixed supports; dense degrees (2, 3) give Bezout 6.
    let dense = |d: i64| {
        let mut pts: Vec<Vec<i64>> = Vec::new();
        for i in 0..=d {
            for j in 0..=(d - i) {
                pts.push(vec![i, j]);
            }
        }
        let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
        PointSet::from_coords(2, &refs).unwrap()
    };
    let bezout = bkk_count(&[dense(2), dense(3)]).unwrap();
    println!("bkk(dense deg 2, dense deg 3) = {} (Bezout)", bezout.value);

    // The Newton-Okounkov route computes the same number through sums of
    // supports rather than sums of polytopes.
    let simplex = PointSet::from_coords(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
    let supports = [square.clone(), simplex];
    let b = bkk_count(&supports).unwrap();
    let nb = no_body_index(&supports).unwrap();
    println!(
        "bkk = {} == no-body index = {} (two routes, one number)",
        b.value, nb.value
    );

    // Dependent supports force generic systems to have no common torus
    // zeros at all.
    let diag1 = PointSet::from_coords(2, &[&[0, 0], &[1, 1]]).unwrap();
    let diag2 = PointSet::from_coords(2, &[&[0, 0], &[2, 2]]).unwrap();
    let witness = generic_empty_intersection(&[diag1.clone(), diag2.clone()]).unwrap();
    println!(
        "diagonal supports: dependent = {} (J = {:?}), bkk = {}",
        witness.dependent,
        witness.subset,
        bkk_count(&[diag1, diag2]).unwrap().value
    );
}
