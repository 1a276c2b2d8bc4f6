//! The independent verification oracle: for bivariate systems, BKK counts
//! are cross-checked by actually eliminating a variable with an exact
//! Sylvester resultant and counting distinct nonzero roots via gcd/degree
//! bookkeeping. Coefficients are redrawn per seed, so the combinatorial
//! prediction and the algebraic count come from different worlds.
//!
//! Run with `cargo run --example resultant_oracle`.

use mixvol::{bkk_count, oracle_count_2d, oracle_majority_2d, LaurentPolynomial};

fn main() {
    // Two generic lines meet in one point of the torus.
    let l1 = LaurentPolynomial::parse("1 + x + y", &["x", "y"]).unwrap();
    let l2 = LaurentPolynomial::parse("2 + x - y", &["x", "y"]).unwrap();
    println!("lines: oracle = {}", oracle_count_2d(&l1, &l2, 1).unwrap().value);

    // A bilinear pair on the unit square support has BKK number 2.
    let f = LaurentPolynomial::parse("1 + x + y + x*y", &["x", "y"]).unwrap();
    let predicted = bkk_count(&[f.support(), f.support()]).unwrap();
    println!("bilinear pair: bkk = {}", predicted.value);
    for seed in 0..5u64 {
        let c = oracle_count_2d(&f, &f, seed).unwrap();
        println!("  seed {seed}: oracle = {}", c.value);
        assert_eq!(c.value, predicted.value);
    }

    // Majority vote over 30 seeds guards against unlucky draws.
    let g1 = LaurentPolynomial::parse("3 + x^2*y - y^2 + x^-1", &["x", "y"]).unwrap();
    let g2 = LaurentPolynomial::parse("1 - x*y + y + x^2", &["x", "y"]).unwrap();
    let seeds: Vec<u64> = (0..30).collect();
    let vote = oracle_majority_2d(&g1, &g2, &seeds).unwrap();
    let predicted = bkk_count(&[g1.support(), g2.support()]).unwrap();
    println!(
        "laurent pair: majority oracle = {}, bkk = {}",
        vote.value, predicted.value
    );
    assert_eq!(vote.value, predicted.value);

    // Dependent supports: the oracle confirms zero for every seed.
    let d1 = LaurentPolynomial::parse("1 + x*y", &["x", "y"]).unwrap();
    let d2 = LaurentPolynomial::parse("1 + x^2*y^2", &["x", "y"]).unwrap();
    for seed in 0..3u64 {
        println!(
            "dependent pair, seed {seed}: oracle = {}",
            oracle_count_2d(&d1, &d2, seed).unwrap().value
        );
    }

    // Supports with even y-exponents force solutions to share x-coordinates
    // in +-y pairs; the oracle absorbs this through its sublattice reduction
    // and still lands on the BKK number.
    let e1 = LaurentPolynomial::parse("1 + x + y^2", &["x", "y"]).unwrap();
    let e2 = LaurentPolynomial::parse("1 + x^2 + y^2 + x*y^2", &["x", "y"]).unwrap();
    let predicted = bkk_count(&[e1.support(), e2.support()]).unwrap();
    let vote = oracle_majority_2d(&e1, &e2, &seeds).unwrap();
    println!(
        "even-symmetric pair: majority oracle = {}, bkk = {}",
        vote.value, predicted.value
    );
}
