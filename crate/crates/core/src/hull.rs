//! Exact convex-hull kernel over integer coordinates.
//!
//! The kernel receives deduplicated, lexicographically sorted integer points
//! of full affine rank `d` (callers project lower-dimensional inputs first)
//! and produces the extreme points, the facet hyperplanes, and `d!` times the
//! Euclidean volume, all exactly.
//!
//! Dimensions 1 and 2 use direct scans; dimensions >= 3 use an incremental
//! beneath-beyond construction with strict visibility, which stays correct on
//! degenerate (coplanar) inputs because a point lying in the hyperplane of a
//! facet never treats that facet as visible: the coplanar region is covered
//! by cones over horizon ridges one dimension down.
//!
//! Arithmetic is generic over [`HullInt`]: an `i128` fast path with checked
//! operations, falling back to `BigInt` when anything overflows.

use num::{BigInt, One, Signed, Zero};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Overflow;

type R<T> = Result<T, Overflow>;

pub(crate) trait HullInt: Clone + Ord + std::fmt::Debug {
    fn nil() -> Self;
    fn unit() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn sgn(&self) -> i32;
    fn negated(&self) -> Self;
    fn checked_add(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    /// Division known to be exact (Bareiss pivots, primitive reduction).
    fn exact_div(&self, o: &Self) -> Self;
    fn gcd_with(&self, o: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl HullInt for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn sgn(&self) -> i32 {
        match self.cmp(&0) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        }
    }
    fn negated(&self) -> Self {
        -*self
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        i128::checked_add(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn exact_div(&self, o: &Self) -> Self {
        debug_assert!(*o != 0 && self % o == 0);
        self / o
    }
    fn gcd_with(&self, o: &Self) -> Self {
        num::integer::gcd(*self, *o)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl HullInt for BigInt {
    fn nil() -> Self {
        BigInt::zero()
    }
    fn unit() -> Self {
        BigInt::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sgn(&self) -> i32 {
        match BigInt::sign(self) {
            num::bigint::Sign::Minus => -1,
            num::bigint::Sign::NoSign => 0,
            num::bigint::Sign::Plus => 1,
        }
    }
    fn negated(&self) -> Self {
        -self
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn exact_div(&self, o: &Self) -> Self {
        debug_assert!(!Zero::is_zero(o) && Zero::is_zero(&(self % o)));
        self / o
    }
    fn gcd_with(&self, o: &Self) -> Self {
        num::integer::gcd(self.clone(), o.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Result of a kernel run, with plane data lifted to `BigInt`.
#[derive(Debug, Clone)]
pub(crate) struct KernelHull {
    /// Indices of extreme points into the input slice, ascending.
    pub vertices: Vec<usize>,
    /// Outward facet hyperplanes `n . x <= c` with primitive integer `n`.
    pub planes: Vec<(Vec<BigInt>, BigInt)>,
    /// `d!` times the Euclidean volume in the given coordinates.
    pub normalized_volume: BigInt,
}

/// Exact determinant of a square `BigInt` matrix (fraction-free elimination).
pub(crate) fn det_bigint(m: Vec<Vec<BigInt>>) -> BigInt {
    det(m).expect("BigInt arithmetic cannot overflow")
}

/// Hull of full-rank integer points. `points` must be sorted, deduplicated,
/// and of affine rank exactly `dim`.
pub(crate) fn hull_of_integer_points(points: &[Vec<BigInt>], dim: usize) -> KernelHull {
    if let Some(small) = to_i128(points) {
        if let Ok(h) = run(&small, dim) {
            return h;
        }
    }
    run(points, dim).expect("BigInt kernel cannot overflow")
}

fn to_i128(points: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    // Leave generous headroom: Bareiss intermediates are bounded by Hadamard
    // products of up to 7 entries, so cap inputs well below 2^127/7.
    let cap = BigInt::from(1i128 << 60);
    points
        .iter()
        .map(|p| {
            p.iter()
                .map(|c| {
                    if c.abs() < cap {
                        c.try_into().ok()
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect()
}

fn run<T: HullInt>(points: &[Vec<T>], dim: usize) -> R<KernelHull> {
    match dim {
        0 => panic!("kernel requires dim >= 1"),
        1 => Ok(hull_1d(points)),
        2 => hull_2d(points),
        _ => hull_nd(points, dim),
    }
}

fn hull_1d<T: HullInt>(points: &[Vec<T>]) -> KernelHull {
    let last = points.len() - 1;
    let min = &points[0][0];
    let max = &points[last][0];
    KernelHull {
        vertices: vec![0, last],
        planes: vec![
            (vec![BigInt::one()], max.to_bigint()),
            (vec![-BigInt::one()], -min.to_bigint()),
        ],
        normalized_volume: max.to_bigint() - min.to_bigint(),
    }
}

fn cross2<T: HullInt>(o: &[T], a: &[T], b: &[T]) -> R<T> {
    let ax = a[0].checked_sub(&o[0]).ok_or(Overflow)?;
    let ay = a[1].checked_sub(&o[1]).ok_or(Overflow)?;
    let bx = b[0].checked_sub(&o[0]).ok_or(Overflow)?;
    let by = b[1].checked_sub(&o[1]).ok_or(Overflow)?;
    let p = ax.checked_mul(&by).ok_or(Overflow)?;
    let q = ay.checked_mul(&bx).ok_or(Overflow)?;
    p.checked_sub(&q).ok_or(Overflow)
}

/// Andrew's monotone chain; returns the counterclockwise ring of extreme
/// point indices, then derives edges and the shoelace area.
fn hull_2d<T: HullInt>(points: &[Vec<T>]) -> R<KernelHull> {
    let m = points.len();
    let mut lower: Vec<usize> = Vec::new();
    for i in 0..m {
        while lower.len() >= 2 {
            let c = cross2(
                &points[lower[lower.len() - 2]],
                &points[lower[lower.len() - 1]],
                &points[i],
            )?;
            if c.sgn() <= 0 {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for i in (0..m).rev() {
        while upper.len() >= 2 {
            let c = cross2(
                &points[upper[upper.len() - 2]],
                &points[upper[upper.len() - 1]],
                &points[i],
            )?;
            if c.sgn() <= 0 {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    let ring: Vec<usize> = lower.into_iter().chain(upper).collect();
    debug_assert!(ring.len() >= 3, "rank-2 input must have a 2d hull");

    let mut area2 = BigInt::zero();
    let origin = &points[ring[0]];
    for w in 1..ring.len() - 1 {
        let c = cross2(origin, &points[ring[w]], &points[ring[w + 1]])?;
        area2 += c.to_bigint();
    }

    let mut planes = Vec::with_capacity(ring.len());
    for (k, &a) in ring.iter().enumerate() {
        let b = ring[(k + 1) % ring.len()];
        let ex = points[b][0].checked_sub(&points[a][0]).ok_or(Overflow)?;
        let ey = points[b][1].checked_sub(&points[a][1]).ok_or(Overflow)?;
        // Outward normal of a CCW edge.
        let n = vec![ey.clone(), ex.negated()];
        let c = n[0]
            .checked_mul(&points[a][0])
            .ok_or(Overflow)?
            .checked_add(&n[1].checked_mul(&points[a][1]).ok_or(Overflow)?)
            .ok_or(Overflow)?;
        planes.push(primitive_plane(&n, &c));
    }

    let mut vertices = ring;
    vertices.sort_unstable();
    Ok(KernelHull {
        vertices,
        planes,
        normalized_volume: area2,
    })
}

fn primitive_plane<T: HullInt>(n: &[T], c: &T) -> (Vec<BigInt>, BigInt) {
    let mut g = c.clone();
    for x in n {
        g = g.gcd_with(x);
    }
    if g.is_nil() || g == T::unit() {
        return (n.iter().map(|x| x.to_bigint()).collect(), c.to_bigint());
    }
    (
        n.iter().map(|x| x.exact_div(&g).to_bigint()).collect(),
        c.exact_div(&g).to_bigint(),
    )
}

/// Fraction-free (Bareiss) determinant.
fn det<T: HullInt>(mut m: Vec<Vec<T>>) -> R<T> {
    let n = m.len();
    if n == 0 {
        return Ok(T::unit());
    }
    let mut sign = 1i32;
    let mut prev = T::unit();
    for k in 0..n - 1 {
        if m[k][k].is_nil() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_nil()) else {
                return Ok(T::nil());
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[k][k].checked_mul(&m[i][j]).ok_or(Overflow)?;
                let b = m[i][k].checked_mul(&m[k][j]).ok_or(Overflow)?;
                m[i][j] = a.checked_sub(&b).ok_or(Overflow)?.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { d.negated() } else { d })
}

fn diff<T: HullInt>(a: &[T], b: &[T]) -> R<Vec<T>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(y).ok_or(Overflow))
        .collect()
}

fn dot<T: HullInt>(a: &[T], b: &[T]) -> R<T> {
    let mut acc = T::nil();
    for (x, y) in a.iter().zip(b) {
        let p = x.checked_mul(y).ok_or(Overflow)?;
        acc = acc.checked_add(&p).ok_or(Overflow)?;
    }
    Ok(acc)
}

/// Normal to the hyperplane spanned by `rows` (d-1 vectors in R^d), via
/// cofactor expansion: n_j = (-1)^j det(rows without column j).
fn cross_normal<T: HullInt>(rows: &[Vec<T>], d: usize) -> R<Vec<T>> {
    let mut n = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<T>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let m = det(minor)?;
        n.push(if j % 2 == 0 { m } else { m.negated() });
    }
    Ok(n)
}

struct Facet<T> {
    verts: Vec<usize>, // sorted
    normal: Vec<T>,
    offset: T,
    alive: bool,
}

/// Incremental row-echelon rank tracker with fraction-free updates.
struct Echelon<T> {
    rows: Vec<Vec<T>>,
}

impl<T: HullInt> Echelon<T> {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn try_insert(&mut self, mut v: Vec<T>) -> R<bool> {
        for row in &self.rows {
            let pivot_col = row.iter().position(|x| !x.is_nil()).unwrap();
            if v[pivot_col].is_nil() {
                continue;
            }
            let a = row[pivot_col].clone();
            let b = v[pivot_col].clone();
            for j in 0..v.len() {
                let x = a.checked_mul(&v[j]).ok_or(Overflow)?;
                let y = b.checked_mul(&row[j]).ok_or(Overflow)?;
                v[j] = x.checked_sub(&y).ok_or(Overflow)?;
            }
        }
        if v.iter().all(|x| x.is_nil()) {
            return Ok(false);
        }
        // Keep entries small.
        let mut g = T::nil();
        for x in &v {
            g = g.gcd_with(x);
        }
        if !g.is_nil() && g != T::unit() {
            for x in v.iter_mut() {
                *x = x.exact_div(&g);
            }
        }
        self.rows.push(v);
        self.rows.sort_by_key(|r| r.iter().position(|x| !x.is_nil()));
        Ok(true)
    }
}

fn hull_nd<T: HullInt>(points: &[Vec<T>], d: usize) -> R<KernelHull> {
    let m = points.len();

    // Initial simplex: greedily extend an affinely independent set.
    let mut simplex = vec![0usize];
    let mut ech = Echelon::new();
    for i in 1..m {
        if ech.try_insert(diff(&points[i], &points[0])?)? {
            simplex.push(i);
            if simplex.len() == d + 1 {
                break;
            }
        }
    }
    assert_eq!(simplex.len(), d + 1, "input must have affine rank d");

    // Interior reference: (d+1) times the simplex centroid.
    let mut interior = vec![T::nil(); d];
    for &i in &simplex {
        for j in 0..d {
            interior[j] = interior[j].checked_add(&points[i][j]).ok_or(Overflow)?;
        }
    }
    let scale = T::from_i64(d as i64 + 1);

    let orient = |verts: &[usize]| -> R<(Vec<T>, T)> {
        let rows: Vec<Vec<T>> = verts[1..]
            .iter()
            .map(|&v| diff(&points[v], &points[verts[0]]))
            .collect::<R<_>>()?;
        let mut n = cross_normal(&rows, d)?;
        let mut c = dot(&n, &points[verts[0]])?;
        let side = dot(&n, &interior)?
            .checked_sub(&scale.checked_mul(&c).ok_or(Overflow)?)
            .ok_or(Overflow)?;
        debug_assert!(side.sgn() != 0, "interior point on a facet hyperplane");
        if side.sgn() > 0 {
            n = n.into_iter().map(|x| x.negated()).collect();
            c = c.negated();
        }
        Ok((n, c))
    };

    let mut facets: Vec<Facet<T>> = Vec::new();
    for skip in 0..=d {
        let verts: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, &v)| v)
            .collect();
        let (normal, offset) = orient(&verts)?;
        facets.push(Facet {
            verts,
            normal,
            offset,
            alive: true,
        });
    }

    let in_simplex: Vec<bool> = {
        let mut flags = vec![false; m];
        for &i in &simplex {
            flags[i] = true;
        }
        flags
    };

    for p in 0..m {
        if in_simplex[p] {
            continue;
        }
        let mut visible = Vec::new();
        for (fi, f) in facets.iter().enumerate() {
            if !f.alive {
                continue;
            }
            let h = dot(&f.normal, &points[p])?
                .checked_sub(&f.offset)
                .ok_or(Overflow)?;
            if h.sgn() > 0 {
                visible.push(fi);
            }
        }
        if visible.is_empty() {
            continue; // inside or on the current hull; cannot be extreme
        }
        let mut ridge_count: HashMap<Vec<usize>, usize> = HashMap::new();
        for &fi in &visible {
            for skip in 0..d {
                let ridge: Vec<usize> = facets[fi]
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        for &fi in &visible {
            facets[fi].alive = false;
        }
        let mut horizon: Vec<Vec<usize>> = ridge_count
            .into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort_unstable();
        for ridge in horizon {
            let mut verts = ridge;
            verts.push(p);
            verts.sort_unstable();
            let (normal, offset) = orient(&verts)?;
            facets.push(Facet {
                verts,
                normal,
                offset,
                alive: true,
            });
        }
    }

    // Volume: cones from the lex-min point over the boundary triangulation.
    let origin = &points[0];
    let mut volume = BigInt::zero();
    for f in facets.iter().filter(|f| f.alive) {
        let rows: Vec<Vec<T>> = f
            .verts
            .iter()
            .map(|&v| diff(&points[v], origin))
            .collect::<R<_>>()?;
        volume += det(rows)?.to_bigint().abs();
    }

    // Merge coplanar simplicial facets into geometric facet hyperplanes.
    let mut plane_set: HashMap<(Vec<BigInt>, BigInt), ()> = HashMap::new();
    for f in facets.iter().filter(|f| f.alive) {
        plane_set.insert(primitive_plane(&f.normal, &f.offset), ());
    }
    let mut planes: Vec<(Vec<BigInt>, BigInt)> = plane_set.into_keys().collect();
    planes.sort();

    // A boundary point is a vertex iff its active facet normals span R^d.
    let mut candidates: Vec<usize> = facets
        .iter()
        .filter(|f| f.alive)
        .flat_map(|f| f.verts.iter().copied())
        .collect();
    candidates.sort_unstable();
    candidates.dedup();

    let big_points: Vec<Vec<BigInt>> = candidates
        .iter()
        .map(|&i| points[i].iter().map(|c| c.to_bigint()).collect())
        .collect();
    let mut vertices = Vec::new();
    for (k, &i) in candidates.iter().enumerate() {
        let active: Vec<Vec<num::BigRational>> = planes
            .iter()
            .filter(|(n, c)| crate::linalg::dot_int(n, &big_points[k]) == *c)
            .map(|(n, _)| {
                n.iter()
                    .map(|x| num::BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        if crate::linalg::rank(&active) == d {
            vertices.push(i);
        }
    }

    Ok(KernelHull {
        vertices,
        planes,
        normalized_volume: volume,
    })
}
