//! Exact lattice point sets and rational polytopes.
//!
//! Point sets form a semigroup under elementwise Minkowski addition; passing
//! to convex hulls realizes its Grothendieck semigroup as the semigroup of
//! convex polytopes under Minkowski sum. Everything is exact: coordinates are
//! arbitrary-precision rationals and volumes are computed by signed-simplex
//! decomposition over integers.
//!
//! Ambient dimensions 1 through 6 are supported; the inclusion-exclusion
//! formulas downstream cost `2^n` volume evaluations, so higher dimensions
//! return a capability error.

use crate::error::{Error, Result};
use crate::hull::hull_of_integer_points;
use crate::linalg;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 6;

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    if dim > MAX_DIM {
        return Err(Error::DimensionCap {
            dim,
            cap: MAX_DIM,
        });
    }
    Ok(())
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// A finite set of integer lattice points; an element of the semigroup of
/// finite subsets of `Z^n` under elementwise addition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<BigInt>>, // sorted, deduplicated, nonempty
}

impl PointSet {
    pub fn new(dim: usize, mut points: Vec<Vec<BigInt>>) -> Result<Self> {
        check_dim(dim)?;
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        points.sort();
        points.dedup();
        Ok(PointSet { dim, points })
    }

    pub fn from_coords(dim: usize, coords: &[&[i64]]) -> Result<Self> {
        Self::new(
            dim,
            coords
                .iter()
                .map(|p| p.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the invariant forbids empty sets
    }

    pub fn points(&self) -> &[Vec<BigInt>] {
        &self.points
    }

    pub fn contains(&self, p: &[BigInt]) -> bool {
        self.points.iter().any(|q| q == p)
    }

    /// Elementwise (Minkowski) sum of two sets.
    pub fn sum(&self, other: &PointSet) -> Result<PointSet> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut points = Vec::with_capacity(self.len() * other.len());
        for a in &self.points {
            for b in &other.points {
                points.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        PointSet::new(self.dim, points)
    }

    /// Convex hull of the set, i.e. its image in the Grothendieck semigroup.
    pub fn hull(&self) -> Polytope {
        let rational: Vec<Vec<BigRational>> = self
            .points
            .iter()
            .map(|p| p.iter().map(|c| BigRational::from_integer(c.clone())).collect())
            .collect();
        Polytope::from_points(self.dim, rational).expect("point set invariants hold")
    }

    /// Saturation `hull(A) ∩ Z^n`. Contains `A`, idempotent.
    pub fn completion(&self) -> PointSet {
        self.hull()
            .lattice_points()
            .expect("completion contains the original integer points")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct FacetSystem {
    /// Affine-hull equations `a . x = c`.
    eqs: Vec<(Vec<BigRational>, BigRational)>,
    /// Facet inequalities `a . x <= c`.
    ineqs: Vec<(Vec<BigRational>, BigRational)>,
}

/// A bounded convex polytope with exact rational vertices, stored in vertex
/// representation. The vertex list holds exactly the extreme points in
/// lexicographic order, so structural equality is geometric equality.
#[derive(Debug, Clone)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<BigRational>>, // extreme points, sorted lex
    intrinsic_dim: usize,
    volume: BigRational,
    facets: FacetSystem,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl std::hash::Hash for Polytope {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.vertices.hash(state);
    }
}

/// Convex hull of a finite list of rational points.
pub fn convex_hull(points: &[Vec<BigRational>], ambient_dim: usize) -> Result<Polytope> {
    Polytope::from_points(ambient_dim, points.to_vec())
}

impl Polytope {
    /// Build the hull of arbitrary rational points; drops non-extreme points.
    pub fn from_points(ambient_dim: usize, mut points: Vec<Vec<BigRational>>) -> Result<Self> {
        check_dim(ambient_dim)?;
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        for p in &points {
            if p.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: p.len(),
                });
            }
        }
        points.sort();
        points.dedup();
        if points.len() == 1 {
            return Ok(Self::single_point(ambient_dim, points.pop().unwrap()));
        }

        let n = ambient_dim;
        let base = points[0].clone();
        let diffs: Vec<linalg::Vector> = points[1..]
            .iter()
            .map(|p| linalg::sub(p, &base))
            .collect();
        let chosen = linalg::independent_subset(&diffs);
        let r = chosen.len();
        debug_assert!(r >= 1);
        // Basis columns of the affine hull direction space.
        let bcols: Vec<linalg::Vector> = chosen.iter().map(|&i| diffs[i].clone()).collect();

        // Orthogonal projection onto intrinsic coordinates: u = M (x - base).
        let proj: Option<Vec<linalg::Vector>> = if r == n {
            None
        } else {
            let gram: Vec<linalg::Vector> = (0..r)
                .map(|i| (0..r).map(|j| linalg::dot(&bcols[i], &bcols[j])).collect())
                .collect();
            let inv = linalg::invert(&gram);
            let m = (0..r)
                .map(|i| {
                    (0..n)
                        .map(|col| {
                            (0..r)
                                .map(|j| &inv[i][j] * &bcols[j][col])
                                .sum::<BigRational>()
                        })
                        .collect()
                })
                .collect();
            Some(m)
        };

        let proj_pts: Vec<linalg::Vector> = points
            .iter()
            .map(|p| match &proj {
                None => p.clone(),
                Some(m) => linalg::mat_vec(m, &linalg::sub(p, &base)),
            })
            .collect();

        // Per-axis integer scaling.
        let scales: Vec<BigInt> = (0..r)
            .map(|j| linalg::denominator_lcm(proj_pts.iter().map(|u| &u[j])))
            .collect();
        let int_pts: Vec<Vec<BigInt>> = proj_pts
            .iter()
            .map(|u| {
                (0..r)
                    .map(|j| {
                        let scaled = &u[j] * BigRational::from_integer(scales[j].clone());
                        debug_assert!(scaled.is_integer());
                        scaled.to_integer()
                    })
                    .collect()
            })
            .collect();

        let mut order: Vec<usize> = (0..int_pts.len()).collect();
        order.sort_by(|&a, &b| int_pts[a].cmp(&int_pts[b]));
        let sorted_int: Vec<Vec<BigInt>> = order.iter().map(|&i| int_pts[i].clone()).collect();

        let kern = hull_of_integer_points(&sorted_int, r);

        let mut vertices: Vec<Vec<BigRational>> = kern
            .vertices
            .iter()
            .map(|&id| points[order[id]].clone())
            .collect();
        vertices.sort();

        let volume = if r < n {
            BigRational::zero()
        } else {
            let mut denom = factorial(n);
            for s in &scales {
                denom *= s;
            }
            BigRational::new(kern.normalized_volume.clone(), denom)
        };

        // Lift facet planes back to ambient inequalities.
        let mut ineqs = Vec::with_capacity(kern.planes.len());
        for (nrm, c) in &kern.planes {
            let scaled: Vec<BigRational> = (0..r)
                .map(|j| BigRational::from_integer(&nrm[j] * &scales[j]))
                .collect();
            let c = BigRational::from_integer(c.clone());
            match &proj {
                None => ineqs.push((scaled, c)),
                Some(m) => {
                    let a: Vec<BigRational> = (0..n)
                        .map(|col| (0..r).map(|j| &scaled[j] * &m[j][col]).sum())
                        .collect();
                    let offset = &c + linalg::dot(&a, &base);
                    ineqs.push((a, offset));
                }
            }
        }
        let eqs = if r == n {
            Vec::new()
        } else {
            let bmat: Vec<linalg::Vector> = (0..n)
                .map(|row| (0..r).map(|j| bcols[j][row].clone()).collect())
                .collect();
            linalg::left_nullspace(&bmat)
                .into_iter()
                .map(|w| {
                    let rhs = linalg::dot(&w, &base);
                    (w, rhs)
                })
                .collect()
        };

        Ok(Polytope {
            dim: n,
            vertices,
            intrinsic_dim: r,
            volume,
            facets: FacetSystem { eqs, ineqs },
        })
    }

    pub fn from_int_points(ambient_dim: usize, coords: &[&[i64]]) -> Result<Self> {
        Self::from_points(
            ambient_dim,
            coords
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|&c| BigRational::from_integer(BigInt::from(c)))
                        .collect()
                })
                .collect(),
        )
    }

    fn single_point(dim: usize, p: Vec<BigRational>) -> Self {
        let eqs = (0..dim)
            .map(|j| {
                let mut a = linalg::zero_vector(dim);
                a[j] = BigRational::one();
                (a, p[j].clone())
            })
            .collect();
        Polytope {
            dim,
            vertices: vec![p],
            intrinsic_dim: 0,
            volume: BigRational::zero(),
            facets: FacetSystem {
                eqs,
                ineqs: Vec::new(),
            },
        }
    }

    /// The identity of the Minkowski semigroup: the origin singleton.
    pub fn origin(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self::single_point(dim, linalg::zero_vector(dim)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.intrinsic_dim
    }

    pub fn vertices(&self) -> &[Vec<BigRational>] {
        &self.vertices
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|c| c.is_integer()))
    }

    /// Exact ambient-dimensional Lebesgue volume (0 for degenerate bodies).
    pub fn volume(&self) -> &BigRational {
        &self.volume
    }

    /// Minkowski sum: the hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Polytope::from_points(self.dim, sums)
    }

    /// Scale about the origin by a nonnegative rational. `dilate(P, 0)` is
    /// the origin singleton, matching the semigroup identity.
    pub fn dilate(&self, k: &BigRational) -> Result<Polytope> {
        if k.is_negative() {
            return Err(Error::NegativeDilation);
        }
        if k.is_zero() {
            return Polytope::origin(self.dim);
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|c| c * k).collect())
            .collect();
        let mut scale = BigRational::one();
        for _ in 0..self.dim {
            scale *= k;
        }
        Ok(Polytope {
            dim: self.dim,
            vertices, // positive scaling preserves lexicographic order
            intrinsic_dim: self.intrinsic_dim,
            volume: &self.volume * scale,
            facets: FacetSystem {
                eqs: self
                    .facets
                    .eqs
                    .iter()
                    .map(|(a, c)| (a.clone(), c * k))
                    .collect(),
                ineqs: self
                    .facets
                    .ineqs
                    .iter()
                    .map(|(a, c)| (a.clone(), c * k))
                    .collect(),
            },
        })
    }

    pub fn translate(&self, t: &[BigRational]) -> Result<Polytope> {
        if t.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: t.len(),
            });
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(t).map(|(c, s)| c + s).collect())
            .collect();
        Ok(Polytope {
            dim: self.dim,
            vertices, // translation preserves lexicographic order
            intrinsic_dim: self.intrinsic_dim,
            volume: self.volume.clone(),
            facets: FacetSystem {
                eqs: self
                    .facets
                    .eqs
                    .iter()
                    .map(|(a, c)| (a.clone(), c + linalg::dot(a, t)))
                    .collect(),
                ineqs: self
                    .facets
                    .ineqs
                    .iter()
                    .map(|(a, c)| (a.clone(), c + linalg::dot(a, t)))
                    .collect(),
            },
        })
    }

    /// Exact membership test against the cached facet system.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        if x.len() != self.dim {
            return false;
        }
        self.facets
            .eqs
            .iter()
            .all(|(a, c)| linalg::dot(a, x) == *c)
            && self
                .facets
                .ineqs
                .iter()
                .all(|(a, c)| linalg::dot(a, x) <= *c)
    }

    /// All integer points inside or on the polytope, by bounding-box scan
    /// with exact membership tests.
    pub fn lattice_points(&self) -> Result<PointSet> {
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let min = self.vertices.iter().map(|v| &v[j]).min().unwrap();
            let max = self.vertices.iter().map(|v| &v[j]).max().unwrap();
            lo.push(min.ceil().to_integer());
            hi.push(max.floor().to_integer());
        }
        if (0..self.dim).any(|j| lo[j] > hi[j]) {
            return Err(Error::EmptyCompletion);
        }
        let mut found = Vec::new();
        let mut cursor = lo.clone();
        'scan: loop {
            let as_rational: Vec<BigRational> = cursor
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect();
            if self.contains(&as_rational) {
                found.push(cursor.clone());
            }
            // odometer increment
            for j in (0..self.dim).rev() {
                if cursor[j] < hi[j] {
                    cursor[j] = &cursor[j] + 1;
                    for (k, c) in cursor.iter_mut().enumerate().skip(j + 1) {
                        *c = lo[k].clone();
                    }
                    continue 'scan;
                }
            }
            break;
        }
        if found.is_empty() {
            return Err(Error::EmptyCompletion);
        }
        PointSet::new(self.dim, found)
    }

    /// Counterclockwise vertex ring of a planar polytope (ambient dim 2).
    pub(crate) fn ring2d(&self) -> Vec<Vec<BigRational>> {
        assert_eq!(self.dim, 2);
        if self.vertices.len() <= 2 {
            return self.vertices.clone();
        }
        let m = BigRational::from_integer(BigInt::from(self.vertices.len() as i64));
        let cx: BigRational = self.vertices.iter().map(|v| &v[0]).sum::<BigRational>() / &m;
        let cy: BigRational = self.vertices.iter().map(|v| &v[1]).sum::<BigRational>() / &m;
        let mut ring = self.vertices.clone();
        let half = |dx: &BigRational, dy: &BigRational| -> u8 {
            if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
                0
            } else {
                1
            }
        };
        ring.sort_by(|a, b| {
            let (ax, ay) = (&a[0] - &cx, &a[1] - &cy);
            let (bx, by) = (&b[0] - &cx, &b[1] - &cy);
            let (ha, hb) = (half(&ax, &ay), half(&bx, &by));
            if ha != hb {
                return ha.cmp(&hb);
            }
            // counterclockwise: a before b when cross(a, b) > 0
            let cross = &ax * &by - &ay * &bx;
            if cross.is_positive() {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
        ring
    }

    /// Direction vectors of the affine hull (differences to the first vertex).
    pub(crate) fn directions(&self) -> Vec<linalg::Vector> {
        self.vertices[1..]
            .iter()
            .map(|v| linalg::sub(v, &self.vertices[0]))
            .collect()
    }
}

/// Report of the affine-dependence test: when `dependent`, `subset` is the
/// smallest witness `J` (0-based indices) with `dim(sum over J) < |J|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependenceWitness {
    pub dependent: bool,
    pub subset: Vec<usize>,
}

fn for_each_combination(k: usize, size: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if f(&idx) {
            return true;
        }
        // next lexicographic combination
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + k - size {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Minkowski's affine-dependence test: a family is dependent when some
/// nonempty subfamily's Minkowski sum has dimension below the subfamily size.
/// Scans subsets by ascending size, then lexicographically, so the reported
/// witness is minimal.
pub fn affinely_dependent(bodies: &[Polytope]) -> Result<DependenceWitness> {
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
    if bodies.len() > n {
        return Err(Error::TooManyBodies {
            max: n,
            got: bodies.len(),
        });
    }
    let dirs: Vec<Vec<linalg::Vector>> = bodies.iter().map(|b| b.directions()).collect();
    let mut witness = None;
    for size in 1..=bodies.len() {
        let found = for_each_combination(bodies.len(), size, |subset| {
            let rows: Vec<linalg::Vector> = subset
                .iter()
                .flat_map(|&i| dirs[i].iter().cloned())
                .collect();
            // dim of a Minkowski sum is the rank of the pooled directions
            if linalg::rank(&rows) < size {
                witness = Some(subset.to_vec());
                true
            } else {
                false
            }
        });
        if found {
            break;
        }
    }
    Ok(match witness {
        Some(subset) => DependenceWitness {
            dependent: true,
            subset,
        },
        None => DependenceWitness {
            dependent: false,
            subset: Vec::new(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn hull_drops_interior_point() {
        let pts = vec![
            vec![q(0), q(0)],
            vec![q(1), q(0)],
            vec![q(0), q(1)],
            vec![q(1), q(1)],
            vec![qr(1, 2), qr(1, 2)],
        ];
        let p = convex_hull(&pts, 2).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.intrinsic_dim(), 2);
        assert_eq!(*p.volume(), q(1));
    }

    #[test]
    fn hull_of_singleton() {
        let p = convex_hull(&[vec![q(0), q(0)]], 2).unwrap();
        assert_eq!(p.vertices().len(), 1);
        assert_eq!(p.intrinsic_dim(), 0);
        assert_eq!(*p.volume(), q(0));
    }

    #[test]
    fn hull_rejects_empty_and_mixed_dims() {
        assert!(matches!(
            convex_hull(&[], 2),
            Err(Error::EmptyPointSet)
        ));
        assert!(matches!(
            convex_hull(&[vec![q(0)]], 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn hull_idempotent() {
        let p = Polytope::from_int_points(3, &[&[0, 0, 0], &[2, 0, 1], &[1, 3, 0], &[0, 1, 4]])
            .unwrap();
        let again = convex_hull(p.vertices(), 3).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn minkowski_of_orthogonal_segments_is_square() {
        let s1 = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
        let s2 = Polytope::from_int_points(2, &[&[0, 0], &[0, 1]]).unwrap();
        let sq = s1.minkowski_sum(&s2).unwrap();
        let expected =
            Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn minkowski_identity_element() {
        let p = Polytope::from_int_points(2, &[&[0, 0], &[2, 1], &[1, 3]]).unwrap();
        let zero = Polytope::origin(2).unwrap();
        assert_eq!(p.minkowski_sum(&zero).unwrap(), p);
    }

    #[test]
    fn minkowski_dimension_mismatch() {
        let p = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
        let r = Polytope::from_int_points(3, &[&[0, 0, 0], &[1, 0, 0]]).unwrap();
        assert!(p.minkowski_sum(&r).is_err());
    }

    #[test]
    fn dilate_square() {
        let sq = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let big = sq.dilate(&q(3)).unwrap();
        let expected =
            Polytope::from_int_points(2, &[&[0, 0], &[3, 0], &[0, 3], &[3, 3]]).unwrap();
        assert_eq!(big, expected);
        assert_eq!(*big.volume(), q(9));
    }

    #[test]
    fn dilate_zero_gives_origin() {
        let p = Polytope::from_int_points(2, &[&[1, 1], &[2, 3]]).unwrap();
        assert_eq!(p.dilate(&q(0)).unwrap(), Polytope::origin(2).unwrap());
    }

    #[test]
    fn dilate_negative_rejected() {
        let p = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
        assert!(matches!(p.dilate(&q(-1)), Err(Error::NegativeDilation)));
    }

    #[test]
    fn dilate_two_equals_self_sum() {
        let p = Polytope::from_int_points(3, &[&[0, 0, 0], &[1, 2, 0], &[0, 1, 3], &[2, 0, 1]])
            .unwrap();
        assert_eq!(p.dilate(&q(2)).unwrap(), p.minkowski_sum(&p).unwrap());
    }

    #[test]
    fn volume_of_standard_simplex() {
        let s =
            Polytope::from_int_points(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
                .unwrap();
        assert_eq!(*s.volume(), qr(1, 6));
    }

    #[test]
    fn volume_of_degenerate_body_is_zero() {
        let seg = Polytope::from_int_points(2, &[&[0, 0], &[5, 5]]).unwrap();
        assert_eq!(*seg.volume(), q(0));
        assert_eq!(seg.intrinsic_dim(), 1);
    }

    #[test]
    fn fractional_vertices_volume() {
        let p = convex_hull(
            &[
                vec![q(0), q(0)],
                vec![qr(3, 2), q(0)],
                vec![q(0), qr(3, 2)],
                vec![qr(3, 2), qr(3, 2)],
            ],
            2,
        )
        .unwrap();
        assert_eq!(*p.volume(), qr(9, 4));
    }

    #[test]
    fn lattice_points_of_unit_square() {
        let sq = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let pts = sq.lattice_points().unwrap();
        assert_eq!(pts.len(), 4);
    }

    #[test]
    fn lattice_points_of_segment() {
        let seg = Polytope::from_int_points(2, &[&[0, 0], &[3, 0]]).unwrap();
        let pts = seg.lattice_points().unwrap();
        assert_eq!(
            pts.points(),
            PointSet::from_coords(2, &[&[0, 0], &[1, 0], &[2, 0], &[3, 0]])
                .unwrap()
                .points()
        );
    }

    #[test]
    fn lattice_points_of_dilated_simplex() {
        let s = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let big = s.dilate(&q(4)).unwrap();
        // binomial(4 + 2, 2) = 15
        assert_eq!(big.lattice_points().unwrap().len(), 15);
    }

    #[test]
    fn lattice_points_empty_completion() {
        let p = convex_hull(&[vec![qr(1, 2), qr(1, 2)]], 2).unwrap();
        assert!(matches!(p.lattice_points(), Err(Error::EmptyCompletion)));
    }

    #[test]
    fn completion_fills_segment() {
        let a = PointSet::from_coords(1, &[&[0], &[2]]).unwrap();
        let c = a.completion();
        assert_eq!(c.len(), 3);
        assert!(c.contains(&[BigInt::from(1)]));
    }

    #[test]
    fn completion_idempotent_and_contains_original() {
        let a = PointSet::from_coords(2, &[&[0, 0], &[1, 1], &[2, 0]]).unwrap();
        let c = a.completion();
        // Pick's theorem: area 1, 4 boundary points, 0 interior points.
        assert_eq!(c.len(), 4);
        assert!(c.contains(&[BigInt::from(1), BigInt::from(0)]));
        for p in a.points() {
            assert!(c.contains(p));
        }
        assert_eq!(c.completion(), c);
    }

    #[test]
    fn dependence_of_parallel_segments() {
        let s1 = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
        let s2 = Polytope::from_int_points(2, &[&[0, 0], &[3, 0]]).unwrap();
        let w = affinely_dependent(&[s1, s2]).unwrap();
        assert!(w.dependent);
        assert_eq!(w.subset, vec![0, 1]);
    }

    #[test]
    fn dependence_of_point_body() {
        let sq = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let pt = Polytope::from_int_points(2, &[&[7, 3]]).unwrap();
        let w = affinely_dependent(&[sq, pt]).unwrap();
        assert!(w.dependent);
        assert_eq!(w.subset, vec![1]);
    }

    #[test]
    fn independent_segment_and_square() {
        let seg = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
        let sq = Polytope::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let w = affinely_dependent(&[seg, sq]).unwrap();
        assert!(!w.dependent);
        assert!(w.subset.is_empty());
    }

    #[test]
    fn too_many_bodies_rejected() {
        let seg = Polytope::from_int_points(2, &[&[0, 0], &[1, 0]]).unwrap();
        assert!(matches!(
            affinely_dependent(&[seg.clone(), seg.clone(), seg]),
            Err(Error::TooManyBodies { .. })
        ));
    }

    #[test]
    fn translation_preserves_volume_and_shifts_membership() {
        let p = Polytope::from_int_points(2, &[&[0, 0], &[2, 0], &[0, 2]]).unwrap();
        let t = p.translate(&[q(5), q(-1)]).unwrap();
        assert_eq!(t.volume(), p.volume());
        assert!(t.contains(&[q(6), qr(-1, 2)]));
        assert!(!t.contains(&[q(0), q(0)]));
    }

    #[test]
    fn dimension_cap_enforced() {
        let r = Polytope::from_points(7, vec![linalg::zero_vector(7)]);
        assert!(matches!(r, Err(Error::DimensionCap { .. })));
    }

    #[test]
    fn point_set_semigroup_homomorphism() {
        // hull(A + B) = hull(A) + hull(B)
        let a = PointSet::from_coords(2, &[&[0, 0], &[2, 1], &[1, 1]]).unwrap();
        let b = PointSet::from_coords(2, &[&[0, 0], &[0, 3], &[1, 2]]).unwrap();
        let lhs = a.sum(&b).unwrap().hull();
        let rhs = a.hull().minkowski_sum(&b.hull()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
