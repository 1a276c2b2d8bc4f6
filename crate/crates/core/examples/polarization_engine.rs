//! The generic polarization engine on a plain arithmetic semigroup.
//!
//! A homogeneous degree-n function on any commutative semigroup has a unique
//! symmetric multilinear "polarization" agreeing with it on the diagonal.
//! Here the semigroup is (N^2, +) with monomial value maps; the same engine
//! powers mixed volumes (see the mixed_volumes example).
//!
//! Run with `cargo run --example polarization_engine`.

use mixvol::{
    group_polarize, group_value, is_homogeneous, polarize, GroupElement, HomogeneousForm,
    MonomialForm,
};
use num::BigInt;

fn nat(vals: &[i64]) -> Vec<BigInt> {
    vals.iter().map(|&v| BigInt::from(v)).collect()
}

fn main() {
    // F(v) = v_0^2 on N^1: the polarization of a square is the product.
    let square = MonomialForm::new(vec![2]);
    let ab = polarize(&square, &[nat(&[3]), nat(&[5])], &nat(&[0])).unwrap();
    println!("polarization of k^2 at (3, 5) = {ab} (= 3 * 5)");

    // Base independence: any base point gives the same answer.
    let shifted = polarize(&square, &[nat(&[3]), nat(&[5])], &nat(&[11])).unwrap();
    assert_eq!(ab, shifted);

    // Diagonal recovery: all arguments equal returns the plain value.
    let f = MonomialForm::new(vec![1, 2]);
    let a = nat(&[2, 3]);
    let diag = polarize(&f, &[a.clone(), a.clone(), a.clone()], &f.zero()).unwrap();
    println!("diagonal value of x*y^2 at (2,3) = {diag} (= 2 * 9)");
    assert_eq!(diag, f.value(&a));

    // Grothendieck-group extension: formal differences. P(t) = t^3 extended
    // to pairs evaluates P(a - b).
    let cube = MonomialForm::new(vec![3]);
    let g = GroupElement::new(nat(&[2]), nat(&[1]));
    println!(
        "cube extended to the formal difference 2 - 1 = {}",
        group_value(&cube, &g)
    );

    // Representative independence: (a, b) ~ (a + c, b + c).
    let h = GroupElement::new(nat(&[5]), nat(&[2]));
    let h_shift = GroupElement::new(nat(&[9]), nat(&[6]));
    assert_eq!(group_value(&square, &h), group_value(&square, &h_shift));
    println!(
        "square extended to 5 - 2 = {} (same for 9 - 6)",
        group_value(&square, &h)
    );

    // Polarization over the group: degree 1 gives plain differences, and
    // the diagonal matches group_value.
    let linear = MonomialForm::new(vec![1]);
    let d = GroupElement::new(nat(&[7]), nat(&[3]));
    println!(
        "degree-1 group polarization of 7 - 3 = {}",
        group_polarize(&linear, &[d.clone()]).unwrap()
    );
    let diag2 = vec![h.clone(), h.clone()];
    assert_eq!(
        group_polarize(&square, &diag2).unwrap(),
        group_value(&square, &h)
    );

    // The homogeneity probe accepts k^2 with degree 2 and rejects shams.
    println!(
        "is_homogeneous(k^2, degree 2) = {}",
        is_homogeneous(&square, &[vec![nat(&[1])], vec![nat(&[2]), nat(&[5])]])
    );
    let wrong_degree = MonomialForm::new(vec![3]);
    let probe = vec![vec![nat(&[1])]];
    println!(
        "is_homogeneous(k^3 probed as written, degree 3) = {}",
        is_homogeneous(&wrong_degree, &probe)
    );
}
