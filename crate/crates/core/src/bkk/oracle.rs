//! Independent verification oracle for two-variable systems.
//!
//! Coefficients are redrawn from a seeded integer range (that is what
//! "generic" means here), the second variable is eliminated through an exact
//! Sylvester resultant, and the torus count comes out of gcd/degree
//! bookkeeping on the resultant: after the guards below pass, every simple
//! nonzero root of the eliminant corresponds to exactly one torus solution.
//! Counting happens over the complex numbers, so squarefree degrees suffice;
//! no numeric root isolation is ever needed.
//!
//! Structural coincidences (several solutions sharing an x-coordinate, as
//! forced by supports lying in a proper sublattice) are removed up front by
//! rewriting the system in a basis of its exponent-difference lattice, which
//! divides the count by the sublattice index; the oracle multiplies it back.
//! Anything left is a measure-zero coefficient event: it is detected by the
//! gates and answered with a redraw, never silently miscounted.

use super::{require_bivariate, CountMethod, RootCount};
use crate::error::{Error, Result};
use crate::hull::det_bigint;
use crate::laurent::LaurentPolynomial;
use crate::unipoly::{interpolate, IntPoly};
use num::{BigInt, BigUint, One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

const COEFF_RANGE: i64 = 1_000_000;
const MAX_ATTEMPTS: usize = 10;

type ExpMap = fn((i64, i64)) -> (i64, i64);

/// Unimodular exponent transforms (monomial changes of torus coordinates);
/// rotated through on retries to break residual coincidences.
const TRANSFORMS: [ExpMap; 6] = [
    |(a, b)| (a, b),
    |(a, b)| (b, a),
    |(a, b)| (a, a + b),
    |(a, b)| (a + b, b),
    |(a, b)| (a, b - a),
    |(a, b)| (a - b, b),
];

/// Count the torus solutions of a generic system with the supports of `f1`,
/// `f2`: coefficients are redrawn from `seed`, so only the supports of the
/// inputs matter.
pub fn oracle_count_2d(
    f1: &LaurentPolynomial,
    f2: &LaurentPolynomial,
    seed: u64,
) -> Result<RootCount> {
    require_bivariate(f1)?;
    require_bivariate(f2)?;
    let sup1 = exponents(f1);
    let sup2 = exponents(f2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_ATTEMPTS {
        let c1 = draw(&mut rng, sup1.len());
        let c2 = draw(&mut rng, sup2.len());
        let map = TRANSFORMS[attempt % TRANSFORMS.len()];
        if let Some(value) = attempt_count(&sup1, &c1, &sup2, &c2, map) {
            return Ok(RootCount {
                value,
                method: CountMethod::Oracle,
            });
        }
    }
    Err(Error::NonGeneric)
}

/// Majority vote over several seeds; non-generic seeds abstain. Ties go to
/// the smaller count, deterministically.
pub fn oracle_majority_2d(
    f1: &LaurentPolynomial,
    f2: &LaurentPolynomial,
    seeds: &[u64],
) -> Result<RootCount> {
    let mut tally: BTreeMap<BigUint, usize> = BTreeMap::new();
    for &seed in seeds {
        match oracle_count_2d(f1, f2, seed) {
            Ok(c) => *tally.entry(c.value).or_insert(0) += 1,
            Err(Error::NonGeneric) => {}
            Err(e) => return Err(e),
        }
    }
    let mut best: Option<(&BigUint, usize)> = None;
    for (value, &votes) in &tally {
        if best.map_or(true, |(_, b)| votes > b) {
            best = Some((value, votes));
        }
    }
    match best {
        Some((value, _)) => Ok(RootCount {
            value: value.clone(),
            method: CountMethod::Oracle,
        }),
        None => Err(Error::NonGeneric),
    }
}

fn exponents(f: &LaurentPolynomial) -> Vec<(i64, i64)> {
    f.terms().keys().map(|e| (e[0], e[1])).collect()
}

fn draw(rng: &mut ChaCha8Rng, k: usize) -> Vec<BigInt> {
    (0..k)
        .map(|_| loop {
            let v: i64 = rng.gen_range(-COEFF_RANGE..=COEFF_RANGE);
            if v != 0 {
                break BigInt::from(v);
            }
        })
        .collect()
}

fn attempt_count(
    sup1: &[(i64, i64)],
    c1: &[BigInt],
    sup2: &[(i64, i64)],
    c2: &[BigInt],
    map: ExpMap,
) -> Option<BigUint> {
    // A monomial never vanishes on the torus.
    if sup1.len() == 1 || sup2.len() == 1 {
        return Some(BigUint::zero());
    }
    let mut diffs = Vec::new();
    for sup in [sup1, sup2] {
        let anchor = sup[0];
        for &p in &sup[1..] {
            diffs.push((p.0 - anchor.0, p.1 - anchor.1));
        }
    }
    match difference_lattice(&diffs) {
        Lattice::Rank1(gen) => rank1_count(sup1, c1, sup2, c2, gen),
        Lattice::Rank2 { basis, index } => {
            let reduce = |sup: &[(i64, i64)], coeffs: &[BigInt]| -> Vec<((i64, i64), BigInt)> {
                let anchor = sup[0];
                sup.iter()
                    .zip(coeffs)
                    .map(|(&p, c)| {
                        let d = (p.0 - anchor.0, p.1 - anchor.1);
                        (map(in_basis(d, basis)), c.clone())
                    })
                    .collect()
            };
            let f1 = BiPoly::from_terms(reduce(sup1, c1));
            let f2 = BiPoly::from_terms(reduce(sup2, c2));
            main_count(&f1, &f2).map(|c| c * BigUint::from(index))
        }
    }
}

enum Lattice {
    Rank1((i64, i64)),
    Rank2 { basis: [(i64, i64); 2], index: u64 },
}

/// Hermite-style basis of the lattice generated by the given vectors.
fn difference_lattice(diffs: &[(i64, i64)]) -> Lattice {
    let mut pivot: Option<(i128, i128)> = None;
    let mut seconds: Vec<i128> = Vec::new();
    for &(dx, dy) in diffs {
        let mut v = (dx as i128, dy as i128);
        loop {
            if v.0 == 0 {
                if v.1 != 0 {
                    seconds.push(v.1);
                }
                break;
            }
            match pivot.as_mut() {
                None => {
                    pivot = Some(v);
                    break;
                }
                Some(p) => {
                    if v.0.abs() < p.0.abs() {
                        std::mem::swap(&mut v, p);
                    }
                    let k = v.0 / p.0;
                    v = (v.0 - k * p.0, v.1 - k * p.1);
                }
            }
        }
    }
    let mut g2: i128 = 0;
    for s in seconds {
        g2 = num::integer::gcd(g2, s.abs());
    }
    match pivot {
        None => {
            debug_assert!(g2 != 0, "caller guarantees a nonzero difference");
            Lattice::Rank1((0, g2 as i64))
        }
        Some(mut p) => {
            if p.0 < 0 {
                p = (-p.0, -p.1);
            }
            if g2 == 0 {
                Lattice::Rank1((p.0 as i64, p.1 as i64))
            } else {
                let q = p.1.rem_euclid(g2);
                Lattice::Rank2 {
                    basis: [(p.0 as i64, q as i64), (0, g2 as i64)],
                    index: (p.0 * g2) as u64,
                }
            }
        }
    }
}

/// Coordinates of a lattice vector in the triangular basis.
fn in_basis(d: (i64, i64), basis: [(i64, i64); 2]) -> (i64, i64) {
    let (p, q) = basis[0];
    let (_, r) = basis[1];
    debug_assert!(d.0 % p == 0, "vector must lie in the difference lattice");
    let alpha = d.0 / p;
    let rem = d.1 - alpha * q;
    debug_assert!(rem % r == 0, "vector must lie in the difference lattice");
    (alpha, rem / r)
}

/// Both supports on one line: the system reduces to two univariate
/// polynomials in a single monomial; generically they share no root.
fn rank1_count(
    sup1: &[(i64, i64)],
    c1: &[BigInt],
    sup2: &[(i64, i64)],
    c2: &[BigInt],
    gen: (i64, i64),
) -> Option<BigUint> {
    let line_poly = |sup: &[(i64, i64)], coeffs: &[BigInt]| -> IntPoly {
        let anchor = sup[0];
        let ks: Vec<i64> = sup
            .iter()
            .map(|&p| {
                let d = (p.0 - anchor.0, p.1 - anchor.1);
                if gen.0 != 0 {
                    debug_assert_eq!(d.0 % gen.0, 0);
                    d.0 / gen.0
                } else {
                    debug_assert_eq!(d.1 % gen.1, 0);
                    d.1 / gen.1
                }
            })
            .collect();
        let min = *ks.iter().min().expect("nonempty support");
        let max = *ks.iter().max().expect("nonempty support");
        let mut out = vec![BigInt::zero(); (max - min + 1) as usize];
        for (k, c) in ks.iter().zip(coeffs) {
            out[(k - min) as usize] = c.clone();
        }
        IntPoly::new(out)
    };
    let g1 = line_poly(sup1, c1);
    let g2 = line_poly(sup2, c2);
    if g1.gcd(&g2).is_constant() {
        Some(BigUint::zero())
    } else {
        None
    }
}

/// Dense-in-y bivariate integer polynomial; `ys[j]` is the x-polynomial
/// coefficient of `y^j`. Exponents are shifted so both minima are zero, so
/// `ys[0]` and the leading entry are nonzero.
struct BiPoly {
    ys: Vec<IntPoly>,
}

impl BiPoly {
    fn from_terms(terms: Vec<((i64, i64), BigInt)>) -> BiPoly {
        let min_x = terms.iter().map(|((x, _), _)| *x).min().expect("nonempty");
        let min_y = terms.iter().map(|((_, y), _)| *y).min().expect("nonempty");
        let max_y = terms.iter().map(|((_, y), _)| *y).max().expect("nonempty");
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); (max_y - min_y + 1) as usize];
        for ((x, y), c) in terms {
            let xi = (x - min_x) as usize;
            let yi = (y - min_y) as usize;
            if rows[yi].len() <= xi {
                rows[yi].resize(xi + 1, BigInt::zero());
            }
            rows[yi][xi] = c;
        }
        let ys: Vec<IntPoly> = rows.into_iter().map(IntPoly::new).collect();
        debug_assert!(!ys[0].is_zero() && !ys.last().unwrap().is_zero());
        BiPoly { ys }
    }

    fn deg_y(&self) -> usize {
        self.ys.len() - 1
    }

    fn max_deg_x(&self) -> usize {
        self.ys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.degree())
            .max()
            .unwrap_or(0)
    }

    fn lc_y(&self) -> &IntPoly {
        self.ys.last().expect("nonempty")
    }

    fn tc_y(&self) -> &IntPoly {
        &self.ys[0]
    }

    fn derivative_y(&self) -> BiPoly {
        let mut ys: Vec<IntPoly> = self
            .ys
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, p)| {
                let factor = IntPoly::constant(BigInt::from(j));
                p.mul(&factor)
            })
            .collect();
        while ys.len() > 1 && ys.last().unwrap().is_zero() {
            ys.pop();
        }
        BiPoly { ys }
    }
}

/// Exact `Res_y` via evaluation at integer nodes and interpolation.
fn resultant_y(f: &BiPoly, g: &BiPoly) -> IntPoly {
    let d1 = f.deg_y();
    let d2 = g.deg_y();
    if d2 == 0 {
        let mut r = IntPoly::constant(BigInt::one());
        for _ in 0..d1 {
            r = r.mul(&g.ys[0]);
        }
        return r;
    }
    if d1 == 0 {
        let mut r = IntPoly::constant(BigInt::one());
        for _ in 0..d2 {
            r = r.mul(&f.ys[0]);
        }
        return r;
    }
    let bound = d2 * f.max_deg_x() + d1 * g.max_deg_x();
    let nodes: Vec<i64> = (0..=bound as i64)
        .map(|i| {
            if i % 2 == 0 {
                i / 2
            } else {
                -(i / 2 + 1)
            }
        })
        .collect();
    let values: Vec<BigInt> = nodes
        .iter()
        .map(|&t| sylvester_det_at(f, g, &BigInt::from(t)))
        .collect();
    interpolate(&nodes, &values)
}

fn sylvester_det_at(f: &BiPoly, g: &BiPoly, t: &BigInt) -> BigInt {
    let d1 = f.deg_y();
    let d2 = g.deg_y();
    let m = d1 + d2;
    let fv: Vec<BigInt> = (0..=d1)
        .map(|j| f.ys.get(j).map_or_else(BigInt::zero, |p| p.eval(t)))
        .collect();
    let gv: Vec<BigInt> = (0..=d2)
        .map(|j| g.ys.get(j).map_or_else(BigInt::zero, |p| p.eval(t)))
        .collect();
    let mut matrix = vec![vec![BigInt::zero(); m]; m];
    for r in 0..d2 {
        for k in 0..=d1 {
            matrix[r][r + k] = fv[d1 - k].clone();
        }
    }
    for r in 0..d1 {
        for k in 0..=d2 {
            matrix[d2 + r][r + k] = gv[d2 - k].clone();
        }
    }
    det_bigint(matrix)
}

/// Torus count after lattice reduction. `None` marks a detected non-generic
/// draw (redraw and retry); `Some(c)` is exact for the drawn system.
fn main_count(f1: &BiPoly, f2: &BiPoly) -> Option<BigUint> {
    let d1 = f1.deg_y();
    let d2 = f2.deg_y();
    debug_assert!(d1 > 0 || d2 > 0, "rank-2 lattice forces a y-degree");
    if d1 == 0 {
        return fibered_count(f1.tc_y(), f2);
    }
    if d2 == 0 {
        return fibered_count(f2.tc_y(), f1);
    }

    let r = resultant_y(f1, f2);
    if r.is_zero() {
        return None; // common factor: degenerate draw
    }
    let w = r.shift_down(r.trailing_power());
    if w.is_constant() {
        return Some(BigUint::zero());
    }
    let s = w.squarefree_part();
    // Shared leading-coefficient roots would make resultant roots spurious.
    if !s.gcd(&f1.lc_y().gcd(f2.lc_y())).is_constant() {
        return None;
    }
    // Shared trailing-coefficient roots would hide y = 0 intersections.
    if !s.gcd(&f1.tc_y().gcd(f2.tc_y())).is_constant() {
        return None;
    }
    // Any multiple eliminant root means a multiple or shared-x solution.
    if w.degree() != s.degree() {
        return None;
    }
    Some(BigUint::from(s.degree()))
}

/// One polynomial depends on x alone: every one of its distinct nonzero
/// roots carries a full fiber of the other polynomial's y-roots.
fn fibered_count(base: &IntPoly, fiber: &BiPoly) -> Option<BigUint> {
    let w = base.shift_down(base.trailing_power());
    if w.is_constant() {
        return Some(BigUint::zero());
    }
    let s = w.squarefree_part();
    let d = fiber.deg_y();
    if !s.gcd(fiber.lc_y()).is_constant() {
        return None;
    }
    if !s.gcd(fiber.tc_y()).is_constant() {
        return None;
    }
    if d >= 2 {
        let disc = resultant_y(fiber, &fiber.derivative_y());
        if disc.is_zero() {
            return None;
        }
        if !s.gcd(&disc).is_constant() {
            return None;
        }
    }
    Some(BigUint::from(s.degree() * d))
}
