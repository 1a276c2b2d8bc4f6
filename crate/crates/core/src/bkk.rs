//! Generic torus root counts for Laurent polynomial systems.
//!
//! For `n` generic polynomials sharing a support `A`, the number of common
//! zeros in the torus is `n! V(hull(A))` (Koushnirenko); for mixed supports
//! it is `n! MV(hull(A_1), ..., hull(A_n))` (BKK). The Newton-Okounkov route
//! computes the same number by inclusion-exclusion over sums of supports; the
//! two must agree exactly on every input. A Sylvester-resultant oracle
//! provides an independent check for two-variable systems.

mod oracle;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::lattice::{affinely_dependent, factorial, DependenceWitness, PointSet};
use crate::mixed::mixed_volume;
use num::{BigRational, BigUint, Signed, Zero};

pub use oracle::{oracle_count_2d, oracle_majority_2d};

/// How a root count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Koushnirenko,
    Bkk,
    NoBody,
    Oracle,
}

impl CountMethod {
    pub fn name(&self) -> &'static str {
        match self {
            CountMethod::Koushnirenko => "koushnirenko",
            CountMethod::Bkk => "bkk",
            CountMethod::NoBody => "no_body",
            CountMethod::Oracle => "oracle",
        }
    }
}

/// A nonnegative generic root count together with its method tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCount {
    pub value: BigUint,
    pub method: CountMethod,
}

fn to_count(v: BigRational, method: CountMethod) -> RootCount {
    assert!(v.is_integer(), "combinatorial count must be an integer");
    assert!(!v.is_negative(), "combinatorial count must be nonnegative");
    RootCount {
        value: v.to_integer().to_biguint().expect("nonnegative"),
        method,
    }
}

/// Koushnirenko's number `n! V(hull(A))`: the generic count for `n`
/// equations sharing the support `A` in `n` variables.
pub fn kushnirenko_count(support: &PointSet) -> RootCount {
    let n = support.dim();
    let hull = support.hull();
    let v = BigRational::from_integer(factorial(n)) * hull.volume();
    to_count(v, CountMethod::Koushnirenko)
}

fn validate_supports(supports: &[PointSet]) -> Result<usize> {
    if supports.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let n = supports[0].dim();
    for s in supports {
        if s.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: s.dim(),
            });
        }
    }
    if supports.len() != n {
        return Err(Error::BodyCount {
            expected: n,
            got: supports.len(),
        });
    }
    Ok(n)
}

/// BKK number `n! MV(hull(A_1), ..., hull(A_n))`: the generic count for
/// mixed supports. Collapses to [`kushnirenko_count`] when all supports are
/// equal.
pub fn bkk_count(supports: &[PointSet]) -> Result<RootCount> {
    let n = validate_supports(supports)?;
    let hulls: Vec<_> = supports.iter().map(|s| s.hull()).collect();
    let mv = mixed_volume(&hulls)?;
    Ok(to_count(
        BigRational::from_integer(factorial(n)) * mv,
        CountMethod::Bkk,
    ))
}

/// The Newton-Okounkov inclusion-exclusion index
/// `sum over nonempty I of (-1)^(n-|I|) V(hull(sum of A_i over I))`,
/// computed on the algebra side (sums of supports, then hulls). Must equal
/// [`bkk_count`] on every input.
pub fn no_body_index(supports: &[PointSet]) -> Result<RootCount> {
    let n = validate_supports(supports)?;
    let full: u32 = (1 << n) - 1;
    let mut sums: Vec<Option<PointSet>> = vec![None; (full + 1) as usize];
    let mut total = BigRational::zero();
    for mask in 1u32..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let low_ix = low.trailing_zeros() as usize;
        let set = if rest == 0 {
            supports[low_ix].clone()
        } else {
            sums[rest as usize]
                .as_ref()
                .expect("smaller masks already built")
                .sum(&supports[low_ix])?
        };
        let volume = set.hull().volume().clone();
        if (n - mask.count_ones() as usize) % 2 == 0 {
            total += &volume;
        } else {
            total -= &volume;
        }
        sums[mask as usize] = Some(set);
    }
    Ok(to_count(total, CountMethod::NoBody))
}

/// Criterion for generic members of the monomial spaces to have no common
/// torus zero: affine dependence of the Newton polytopes. The witness `J`
/// satisfies `dim(hull of sum over J) < |J|`.
pub fn generic_empty_intersection(supports: &[PointSet]) -> Result<DependenceWitness> {
    if supports.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let hulls: Vec<_> = supports.iter().map(|s| s.hull()).collect();
    affinely_dependent(&hulls)
}

/// Convenience check used by callers of the oracle: both polynomials must be
/// bivariate.
pub(crate) fn require_bivariate(f: &LaurentPolynomial) -> Result<()> {
    if f.variables().len() != 2 {
        return Err(Error::WrongAmbient {
            expected: 2,
            got: f.variables().len(),
        });
    }
    Ok(())
}
