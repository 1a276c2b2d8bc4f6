//! Mixed volumes and the classical inequalities.
//!
//! The mixed volume of an n-tuple of bodies is the n-polarization of the
//! volume polynomial under Minkowski addition, computed by inclusion and
//! exclusion over subset sums. Virtual polytopes (formal differences) get
//! their volume and mixed volume through the Grothendieck-group extension.
//! On top of these sit checkers for Minkowski's vanishing criterion, the
//! Alexandrov-Fenchel and Brunn-Minkowski inequalities, and the planar
//! isoperimetric inequality with its polygonal surface-area estimate.

use crate::decimal::{self, Decimal};
use crate::error::{Error, Result};
use crate::lattice::{affinely_dependent, DependenceWitness, Polytope, MAX_DIM};
use crate::semigroup::{self, GroupElement, HomogeneousForm};
use num::{BigInt, BigRational, One, Zero};
use rayon::prelude::*;

/// Volume as a homogeneous form on the Minkowski semigroup of polytopes of a
/// fixed ambient dimension; the bridge into the generic polarization engine.
#[derive(Debug, Clone)]
pub struct VolumeForm {
    dim: usize,
}

impl VolumeForm {
    pub fn new(dim: usize) -> Result<Self> {
        crate::lattice::check_dim(dim)?;
        Ok(VolumeForm { dim })
    }
}

impl HomogeneousForm for VolumeForm {
    type Elem = Polytope;

    fn degree(&self) -> usize {
        self.dim
    }

    fn zero(&self) -> Polytope {
        Polytope::origin(self.dim).expect("dimension validated at construction")
    }

    fn add(&self, a: &Polytope, b: &Polytope) -> Polytope {
        a.minkowski_sum(b).expect("equal ambient dimensions")
    }

    fn eq(&self, a: &Polytope, b: &Polytope) -> bool {
        a == b
    }

    fn value(&self, a: &Polytope) -> BigRational {
        a.volume().clone()
    }
}

fn validate_tuple(bodies: &[Polytope]) -> Result<usize> {
    if bodies.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let n = bodies[0].ambient_dim();
    for b in bodies {
        if b.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: b.ambient_dim(),
            });
        }
    }
    if n > MAX_DIM {
        return Err(Error::DimensionCap { dim: n, cap: MAX_DIM });
    }
    if bodies.len() != n {
        return Err(Error::BodyCount {
            expected: n,
            got: bodies.len(),
        });
    }
    Ok(n)
}

fn subset_sum(bodies: &[Polytope], mask: u32) -> Polytope {
    let mut acc: Option<Polytope> = None;
    for (i, b) in bodies.iter().enumerate() {
        if mask >> i & 1 == 1 {
            acc = Some(match acc {
                None => b.clone(),
                Some(p) => p.minkowski_sum(b).expect("validated dimensions"),
            });
        }
    }
    acc.expect("nonempty mask")
}

/// Mixed volume of `n` polytopes in ambient dimension `n`:
/// `(1/n!) * sum over nonempty subsets I of (-1)^(n-|I|) V(sum over I)`.
pub fn mixed_volume(bodies: &[Polytope]) -> Result<BigRational> {
    mixed_volume_with(bodies, false)
}

/// Same as [`mixed_volume`]; when `parallel` is set the `2^n - 1` subset
/// volumes are evaluated concurrently and reduced in a fixed order, so the
/// result is bit-identical either way.
pub fn mixed_volume_with(bodies: &[Polytope], parallel: bool) -> Result<BigRational> {
    let n = validate_tuple(bodies)?;
    let full: u32 = (1 << n) - 1;
    let volumes: Vec<BigRational> = if parallel {
        (1..=full)
            .into_par_iter()
            .map(|mask| subset_sum(bodies, mask).volume().clone())
            .collect()
    } else {
        // Reuse each subset sum as the base of its successors.
        let mut sums: Vec<Option<Polytope>> = vec![None; (full + 1) as usize];
        let mut volumes = Vec::with_capacity(full as usize);
        for mask in 1..=full {
            let low = mask & mask.wrapping_neg();
            let rest = mask ^ low;
            let low_ix = low.trailing_zeros() as usize;
            let p = if rest == 0 {
                bodies[low_ix].clone()
            } else {
                sums[rest as usize]
                    .as_ref()
                    .expect("smaller masks already built")
                    .minkowski_sum(&bodies[low_ix])?
            };
            volumes.push(p.volume().clone());
            sums[mask as usize] = Some(p);
        }
        volumes
    };
    let mut sum = BigRational::zero();
    for mask in 1..=full {
        let v = &volumes[(mask - 1) as usize];
        if (n - mask.count_ones() as usize) % 2 == 0 {
            sum += v;
        } else {
            sum -= v;
        }
    }
    Ok(sum / BigRational::from_integer(crate::lattice::factorial(n)))
}

/// A formal difference of polytopes: an element of the Grothendieck group of
/// the Minkowski semigroup. `(P, Q)` and `(P', Q')` are equal exactly when
/// `P + Q' = P' + Q` (cancellation holds for convex bodies).
#[derive(Debug, Clone)]
pub struct VirtualPolytope {
    plus: Polytope,
    minus: Polytope,
}

impl VirtualPolytope {
    pub fn new(plus: Polytope, minus: Polytope) -> Result<Self> {
        if plus.ambient_dim() != minus.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: plus.ambient_dim(),
                got: minus.ambient_dim(),
            });
        }
        Ok(VirtualPolytope { plus, minus })
    }

    /// Embed an honest polytope as `P - {0}`.
    pub fn embed(p: Polytope) -> Self {
        let zero = Polytope::origin(p.ambient_dim()).expect("valid dimension");
        VirtualPolytope {
            plus: p,
            minus: zero,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.plus.ambient_dim()
    }

    pub fn plus(&self) -> &Polytope {
        &self.plus
    }

    pub fn minus(&self) -> &Polytope {
        &self.minus
    }
}

impl PartialEq for VirtualPolytope {
    fn eq(&self, other: &Self) -> bool {
        if self.ambient_dim() != other.ambient_dim() {
            return false;
        }
        let lhs = self.plus.minkowski_sum(&other.minus).expect("checked dims");
        let rhs = other.plus.minkowski_sum(&self.minus).expect("checked dims");
        lhs == rhs
    }
}

impl Eq for VirtualPolytope {}

/// Volume extended to virtual polytopes through the Grothendieck group.
pub fn virtual_volume(v: &VirtualPolytope) -> Result<BigRational> {
    let form = VolumeForm::new(v.ambient_dim())?;
    Ok(semigroup::group_value(
        &form,
        &GroupElement::new(v.plus.clone(), v.minus.clone()),
    ))
}

/// Mixed volume extended to virtual polytopes (polarization on the group).
pub fn virtual_mixed_volume(vs: &[VirtualPolytope]) -> Result<BigRational> {
    if vs.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let n = vs[0].ambient_dim();
    for v in vs {
        if v.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.ambient_dim(),
            });
        }
    }
    if vs.len() != n {
        return Err(Error::BodyCount {
            expected: n,
            got: vs.len(),
        });
    }
    let form = VolumeForm::new(n)?;
    let gs: Vec<GroupElement<Polytope>> = vs
        .iter()
        .map(|v| GroupElement::new(v.plus.clone(), v.minus.clone()))
        .collect();
    semigroup::group_polarize(&form, &gs)
}

/// Minkowski's vanishing criterion: the mixed volume of every completion of
/// the family vanishes exactly when the family is affinely dependent.
pub fn minkowski_zero_criterion(bodies: &[Polytope]) -> Result<DependenceWitness> {
    affinely_dependent(bodies)
}

/// One side of an inequality report: exact rational or directed decimal.
#[derive(Debug, Clone, PartialEq)]
pub enum ReportValue {
    Rational(BigRational),
    Decimal(Decimal),
}

impl std::fmt::Display for ReportValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReportValue::Rational(q) => write!(f, "{q}"),
            ReportValue::Decimal(d) => write!(f, "{d}"),
        }
    }
}

/// Outcome of an inequality check `lhs <= rhs`. When `exact` is false the
/// sides carry directed rounding: `lhs` rounded up, `rhs` rounded down, so
/// `holds` is conservative.
#[derive(Debug, Clone)]
pub struct InequalityReport {
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub holds: bool,
    pub exact: bool,
    pub margin: ReportValue,
}

impl InequalityReport {
    fn exact_pair(lhs: BigRational, rhs: BigRational) -> Self {
        let margin = &rhs - &lhs;
        InequalityReport {
            holds: lhs <= rhs,
            lhs: ReportValue::Rational(lhs),
            rhs: ReportValue::Rational(rhs),
            exact: true,
            margin: ReportValue::Rational(margin),
        }
    }
}

/// Alexandrov-Fenchel:
/// `MV(D1,D1,rest) * MV(D2,D2,rest) <= MV(D1,D2,rest)^2`, exactly.
pub fn check_af(bodies: &[Polytope]) -> Result<InequalityReport> {
    let n = validate_tuple(bodies)?;
    if n < 2 {
        return Err(Error::AmbientTooSmall { min: 2, got: n });
    }
    let with_first_two = |a: &Polytope, b: &Polytope| -> Vec<Polytope> {
        let mut v = vec![a.clone(), b.clone()];
        v.extend_from_slice(&bodies[2..]);
        v
    };
    let m11 = mixed_volume(&with_first_two(&bodies[0], &bodies[0]))?;
    let m22 = mixed_volume(&with_first_two(&bodies[1], &bodies[1]))?;
    let m12 = mixed_volume(&with_first_two(&bodies[0], &bodies[1]))?;
    Ok(InequalityReport::exact_pair(m11 * m22, &m12 * &m12))
}

/// Power corollary of Alexandrov-Fenchel: for `2 <= m <= n`,
/// `prod_{i<=m} MV(D_i repeated m, D_{m+1..n}) <= MV(D_1..D_n)^m`, exactly.
pub fn check_af_power(m: usize, bodies: &[Polytope]) -> Result<InequalityReport> {
    let n = validate_tuple(bodies)?;
    if m < 2 || m > n {
        return Err(Error::PowerRange { m, n });
    }
    let mut lhs = BigRational::one();
    for i in 0..m {
        let mut tuple = vec![bodies[i].clone(); m];
        tuple.extend_from_slice(&bodies[m..]);
        lhs *= mixed_volume(&tuple)?;
    }
    let all = mixed_volume(bodies)?;
    let mut rhs = BigRational::one();
    for _ in 0..m {
        rhs *= &all;
    }
    Ok(InequalityReport::exact_pair(lhs, rhs))
}

/// Brunn-Minkowski (power form): for `2 <= m <= n`,
/// `MV(D1 rep m, rest)^(1/m) + MV(D2 rep m, rest)^(1/m)
///    <= MV(D1+D2 rep m, rest)^(1/m)`.
/// Roots are evaluated in directed decimals (left side up, right side down),
/// so `holds` is conservative and `exact` is false. For `m = 2` the verdict
/// is cross-validated against the exact Alexandrov-Fenchel form of the same
/// degree-2 polynomial.
pub fn check_bm(
    m: usize,
    d1: &Polytope,
    d2: &Polytope,
    rest: &[Polytope],
    digits: u32,
) -> Result<InequalityReport> {
    if digits < 20 {
        return Err(Error::PrecisionTooLow { got: digits });
    }
    let n = d1.ambient_dim();
    if m < 2 || m > n {
        return Err(Error::PowerRange { m, n });
    }
    if m + rest.len() != n {
        return Err(Error::BodyCount {
            expected: n,
            got: m + rest.len(),
        });
    }
    let tuple = |body: &Polytope| -> Vec<Polytope> {
        let mut v = vec![body.clone(); m];
        v.extend_from_slice(rest);
        v
    };
    let v1 = mixed_volume(&tuple(d1))?;
    let v2 = mixed_volume(&tuple(d2))?;
    let sum_body = d1.minkowski_sum(d2)?;
    let v12 = mixed_volume(&tuple(&sum_body))?;

    let (_, r1_up) = decimal::nth_root_bounds(&v1, m as u32, digits);
    let (_, r2_up) = decimal::nth_root_bounds(&v2, m as u32, digits);
    let (r12_down, _) = decimal::nth_root_bounds(&v12, m as u32, digits);
    let lhs = r1_up.add(&r2_up);
    let holds = lhs <= r12_down;

    if m == 2 {
        // Theorem: a degree-2 homogeneous form satisfies the BM-type
        // inequality iff it satisfies the AF-type inequality. A certified
        // BM verdict must therefore never contradict the exact AF check.
        let mut t11 = vec![d1.clone(), d1.clone()];
        t11.extend_from_slice(rest);
        let mut t22 = vec![d2.clone(), d2.clone()];
        t22.extend_from_slice(rest);
        let mut t12 = vec![d1.clone(), d2.clone()];
        t12.extend_from_slice(rest);
        let q1 = mixed_volume(&t11)?;
        let q2 = mixed_volume(&t22)?;
        let b = mixed_volume(&t12)?;
        let af_holds = q1 * q2 <= &b * &b;
        assert!(
            !holds || af_holds,
            "certified BM verdict contradicts the exact AF form"
        );
    }

    let margin = r12_down.sub(&lhs);
    Ok(InequalityReport {
        lhs: ReportValue::Decimal(lhs),
        rhs: ReportValue::Decimal(r12_down),
        holds,
        exact: false,
        margin: ReportValue::Decimal(margin),
    })
}

/// Regular `k`-gon with unit circumradius and rationalized vertices, each
/// within 10^-40 of the circle.
pub fn regular_polygon(k: usize) -> Result<Polytope> {
    if k < 3 {
        return Err(Error::PolygonTooCoarse { k });
    }
    let pts: Vec<Vec<BigRational>> = decimal::circle_ring(k as u64)
        .into_iter()
        .map(|(x, y)| vec![x, y])
        .collect();
    Polytope::from_points(2, pts)
}

/// Perimeter estimate of a planar body: `2 * MV(D, B_k)` with `B_k` the
/// inscribed regular `k`-gon; converges to the boundary length as k grows.
pub fn surface_area_estimate(d: &Polytope, k: usize, digits: u32) -> Result<Decimal> {
    if d.ambient_dim() != 2 {
        return Err(Error::WrongAmbient {
            expected: 2,
            got: d.ambient_dim(),
        });
    }
    if digits < 20 {
        return Err(Error::PrecisionTooLow { got: digits });
    }
    let ball = regular_polygon(k)?;
    let mv = mixed_volume(&[d.clone(), ball])?;
    let doubled = &mv + &mv;
    Ok(Decimal::from_rational_floor(&doubled, digits))
}

/// Isoperimetric inequality for planar bodies:
/// `V(D) <= l(boundary)^2 / (4 pi)`, with the boundary length taken as a
/// directed decimal lower bound and pi as an upper bound, so `holds` is
/// conservative.
pub fn isoperimetric_check(d: &Polytope, digits: u32) -> Result<InequalityReport> {
    if d.ambient_dim() != 2 {
        return Err(Error::WrongAmbient {
            expected: 2,
            got: d.ambient_dim(),
        });
    }
    if digits < 20 {
        return Err(Error::PrecisionTooLow { got: digits });
    }
    let volume = d.volume().clone();
    let ring = d.ring2d();
    let (len_lo, _) = decimal::perimeter_bounds(&ring, digits);
    let (_, pi_hi) = decimal::pi_bounds(digits);
    // rhs lower bound: (a 10^-d)^2 / (4 b 10^-d) = (a^2 / 4b) 10^-d.
    let rhs_mantissa = num::Integer::div_floor(
        &(len_lo.mantissa() * len_lo.mantissa()),
        &(BigInt::from(4) * pi_hi.mantissa()),
    );
    let rhs = Decimal::new(rhs_mantissa, digits);
    let holds = volume <= rhs.to_rational();
    let margin = rhs.sub(&Decimal::from_rational_ceil(&volume, digits));
    Ok(InequalityReport {
        lhs: ReportValue::Rational(volume),
        rhs: ReportValue::Decimal(rhs),
        holds,
        exact: false,
        margin: ReportValue::Decimal(margin),
    })
}
