//! The classical inequalities: Alexandrov-Fenchel (exact), its power
//! corollary, Brunn-Minkowski (directed 60-digit decimals), the planar
//! isoperimetric inequality, and perimeter via mixed volume with a polygonal
//! unit ball.
//!
//! Run with `cargo run --example classical_inequalities`.

use mixvol::{
    check_af, check_af_power, check_bm, isoperimetric_check, regular_polygon,
    surface_area_estimate, Polytope,
};

fn main() {
    let bodies = [
        Polytope::from_int_points(3, &[&[0, 0, 0], &[2, 0, 0], &[0, 1, 0], &[1, 1, 2]]).unwrap(),
        Polytope::from_int_points(3, &[&[0, 0, 0], &[1, 2, 0], &[0, 0, 1]]).unwrap(),
        Polytope::from_int_points(3, &[&[0, 0, 0], &[1, 0, 1], &[0, 2, 1], &[2, 2, 0]]).unwrap(),
    ];

    // Alexandrov-Fenchel, exactly: MV(D1,D1,D3) MV(D2,D2,D3) <= MV(D1,D2,D3)^2.
    let af = check_af(&bodies).unwrap();
    println!(
        "alexandrov-fenchel: {} <= {} holds={} margin={}",
        af.lhs, af.rhs, af.holds, af.margin
    );

    // Power corollary for every admissible m.
    for m in 2..=3 {
        let pw = check_af_power(m, &bodies).unwrap();
        println!("af power m={m}: holds={} margin={}", pw.holds, pw.margin);
    }

    // Brunn-Minkowski with directed rounding: left side rounded up, right
    // side rounded down, so `holds` is a certificate.
    let a = Polytope::from_int_points(2, &[&[0, 0], &[3, 0], &[1, 2], &[0, 2]]).unwrap();
    let b = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[2, 1], &[0, 1]]).unwrap();
    let bm = check_bm(2, &a, &b, &[], 60).unwrap();
    println!(
        "brunn-minkowski: {} <= {} holds={} (certified at 60 digits)",
        bm.lhs, bm.rhs, bm.holds
    );

    // Equality case: homothetic bodies have exact roots, so the directed
    // bounds collapse and equality is certified.
    let square = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
    let eq = check_bm(2, &square, &square, &[], 60).unwrap();
    println!("homothets: margin = {} (exact equality)", eq.margin);

    // Isoperimetric inequality: V <= l^2 / (4 pi).
    let iso = isoperimetric_check(&square, 60).unwrap();
    println!(
        "isoperimetric on the unit square: {} <= {} holds={}",
        iso.lhs, iso.rhs, iso.holds
    );

    // Perimeter as a mixed volume against an inscribed regular k-gon:
    // 2 MV(D, B_k) converges to the boundary length from below.
    for k in [16usize, 64, 256, 720] {
        let est = surface_area_estimate(&square, k, 40).unwrap();
        println!("perimeter estimate with B_{k}: {est}");
    }

    // The regular 360-gon nearly achieves isoperimetric equality.
    let b360 = regular_polygon(360).unwrap();
    let near = isoperimetric_check(&b360, 60).unwrap();
    println!(
        "regular 360-gon: holds={} margin={} (near equality)",
        near.holds, near.margin
    );
}
