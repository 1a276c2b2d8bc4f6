//! Test support: independent oracles and seeded random generators.
//!
//! Everything here exists to *check* the main implementation, so it must not
//! share code paths with it: the volume oracle enumerates facets by brute
//! force and recurses through coordinate projections; the membership oracle
//! solves barycentric systems over all small vertex subsets. Slow and
//! obviously correct wins over fast here.

#![doc(hidden)]

use crate::lattice::{PointSet, Polytope};
use crate::linalg;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Exact volume by brute force: enumerate facet hyperplanes over all
/// d-subsets of the vertices, then recurse on facets through an axis
/// projection. Independent of the kernel's incremental triangulation.
pub fn oracle_volume(p: &Polytope) -> BigRational {
    if p.intrinsic_dim() < p.ambient_dim() {
        return BigRational::zero();
    }
    volume_rec(p.vertices().to_vec(), p.ambient_dim())
}

fn volume_rec(points: Vec<Vec<BigRational>>, dim: usize) -> BigRational {
    if dim == 1 {
        let min = points.iter().map(|p| &p[0]).min().unwrap();
        let max = points.iter().map(|p| &p[0]).max().unwrap();
        return max - min;
    }
    let m = points.len();
    let origin = points[0].clone();
    // facet key: normalized (normal, offset) with all points on the <= side
    let mut facets: Vec<(Vec<BigRational>, BigRational, Vec<usize>)> = Vec::new();
    let mut subset: Vec<usize> = (0..dim).collect();
    loop {
        if let Some((normal, offset)) = hyperplane_through(&points, &subset) {
            let mut side_le = true;
            let mut side_ge = true;
            for q in &points {
                let v = linalg::dot(&normal, q);
                if v > offset {
                    side_le = false;
                }
                if v < offset {
                    side_ge = false;
                }
            }
            if side_le || side_ge {
                let (normal, offset) = if side_le {
                    (normal, offset)
                } else {
                    (
                        normal.iter().map(|x| -x).collect::<Vec<_>>(),
                        -offset.clone(),
                    )
                };
                let key = normalize_plane(&normal, &offset);
                if !facets.iter().any(|(n, c, _)| (n, c) == (&key.0, &key.1)) {
                    let on: Vec<usize> = (0..m)
                        .filter(|&i| linalg::dot(&key.0, &points[i]) == key.1)
                        .collect();
                    facets.push((key.0, key.1, on));
                }
            }
        }
        // next combination
        let mut i = dim;
        loop {
            if i == 0 {
                i = usize::MAX;
                break;
            }
            i -= 1;
            if subset[i] != i + m - dim {
                break;
            }
        }
        if i == usize::MAX {
            break;
        }
        subset[i] += 1;
        for j in i + 1..dim {
            subset[j] = subset[j - 1] + 1;
        }
    }

    let mut total = BigRational::zero();
    for (normal, offset, on) in facets {
        let height = &offset - linalg::dot(&normal, &origin);
        if height.is_zero() {
            continue;
        }
        let axis = normal.iter().position(|x| !x.is_zero()).unwrap();
        let projected: Vec<Vec<BigRational>> = on
            .iter()
            .map(|&i| {
                points[i]
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != axis)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let facet_vol = volume_rec(projected, dim - 1);
        total += height * facet_vol / normal[axis].abs();
    }
    total / BigRational::from_integer(BigInt::from(dim as i64))
}

fn hyperplane_through(
    points: &[Vec<BigRational>],
    subset: &[usize],
) -> Option<(Vec<BigRational>, BigRational)> {
    let base = &points[subset[0]];
    let dim = base.len();
    // rows of coordinates: b[i][k] = (p_k - base)[i]
    let b: Vec<linalg::Vector> = (0..dim)
        .map(|i| {
            subset[1..]
                .iter()
                .map(|&k| &points[k][i] - &base[i])
                .collect()
        })
        .collect();
    let ns = linalg::left_nullspace(&b);
    if ns.len() != 1 {
        return None; // subset does not span a hyperplane
    }
    let normal = ns.into_iter().next().unwrap();
    let offset = linalg::dot(&normal, base);
    Some((normal, offset))
}

fn normalize_plane(
    normal: &[BigRational],
    offset: &BigRational,
) -> (Vec<BigRational>, BigRational) {
    // Scale by a positive factor only, so the <= orientation survives.
    let lead = normal.iter().find(|x| !x.is_zero()).unwrap().abs();
    (
        normal.iter().map(|x| x / &lead).collect(),
        offset / &lead,
    )
}

/// Membership by exhaustive simplex decomposition: `x` lies in the hull of
/// `points` iff some affinely independent subset of size at most dim+1
/// carries it with nonnegative barycentric coordinates.
pub fn oracle_contains(points: &[Vec<BigRational>], x: &[BigRational]) -> bool {
    let dim = x.len();
    for size in 1..=dim + 1 {
        if points.len() < size {
            break;
        }
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if barycentric_inside(points, &subset, x) {
                return true;
            }
            let mut i = size;
            loop {
                if i == 0 {
                    i = usize::MAX;
                    break;
                }
                i -= 1;
                if subset[i] != i + points.len() - size {
                    break;
                }
            }
            if i == usize::MAX {
                break;
            }
            subset[i] += 1;
            for j in i + 1..size {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
    false
}

fn barycentric_inside(points: &[Vec<BigRational>], subset: &[usize], x: &[BigRational]) -> bool {
    let dim = x.len();
    let s = subset.len();
    // Solve sum lambda_i p_i = x, sum lambda_i = 1 with lambda >= 0.
    let mut aug: Vec<linalg::Vector> = Vec::with_capacity(dim + 1);
    for row in 0..dim {
        let mut r: linalg::Vector = subset.iter().map(|&k| points[k][row].clone()).collect();
        r.push(x[row].clone());
        aug.push(r);
    }
    let mut ones: linalg::Vector = vec![BigRational::one(); s];
    ones.push(BigRational::one());
    aug.push(ones);

    let rank = linalg::row_reduce(&mut aug);
    // Consistency: no pivot in the last column.
    let mut pivots = Vec::new();
    let mut col = 0;
    for row in aug.iter().take(rank) {
        while col <= s && row[col].is_zero() {
            col += 1;
        }
        if col == s {
            return false; // inconsistent
        }
        pivots.push(col);
        col += 1;
    }
    if pivots.len() < s {
        // Underdetermined: only accept the affinely independent case.
        return false;
    }
    let mut lambda = vec![BigRational::zero(); s];
    for (row, &p) in pivots.iter().enumerate() {
        lambda[p] = aug[row][s].clone();
    }
    lambda.iter().all(|l| !l.is_negative())
}

/// Monte-Carlo volume estimate with its standard error, sampling a fine
/// rational grid over the bounding box and testing membership exactly.
pub fn mc_volume_estimate<R: Rng>(p: &Polytope, samples: usize, rng: &mut R) -> (f64, f64) {
    let dim = p.ambient_dim();
    let grid: i64 = 1 << 20;
    let mut lo = Vec::new();
    let mut span = Vec::new();
    let mut box_vol = 1f64;
    for j in 0..dim {
        let min = p.vertices().iter().map(|v| &v[j]).min().unwrap().clone();
        let max = p.vertices().iter().map(|v| &v[j]).max().unwrap().clone();
        let width = &max - &min;
        box_vol *= width.to_f64().unwrap_or(0.0);
        lo.push(min);
        span.push(width);
    }
    if box_vol == 0.0 {
        return (0.0, 0.0);
    }
    let mut hits = 0usize;
    for _ in 0..samples {
        let point: Vec<BigRational> = (0..dim)
            .map(|j| {
                let u = BigRational::new(BigInt::from(rng.gen_range(0..=grid)), BigInt::from(grid));
                &lo[j] + &span[j] * u
            })
            .collect();
        if p.contains(&point) {
            hits += 1;
        }
    }
    let frac = hits as f64 / samples as f64;
    let est = frac * box_vol;
    let stderr = box_vol * ((frac * (1.0 - frac)) / samples as f64).sqrt();
    (est, stderr)
}

/// Random lattice polytope: hull of `count` integer points with coordinates
/// in `0..=bound`. May be degenerate.
pub fn random_lattice_polytope<R: Rng>(
    rng: &mut R,
    dim: usize,
    bound: i64,
    count: usize,
) -> Polytope {
    let points: Vec<Vec<BigRational>> = (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(0..=bound))))
                .collect()
        })
        .collect();
    Polytope::from_points(dim, points).expect("nonempty point list")
}

/// Random lattice polytope of full intrinsic dimension.
pub fn random_full_dim_polytope<R: Rng>(
    rng: &mut R,
    dim: usize,
    bound: i64,
    count: usize,
) -> Polytope {
    loop {
        let p = random_lattice_polytope(rng, dim, bound, count);
        if p.intrinsic_dim() == dim {
            return p;
        }
    }
}

/// Random support: `count` integer points with coordinates in `lo..=hi`.
pub fn random_point_set<R: Rng>(
    rng: &mut R,
    dim: usize,
    lo: i64,
    hi: i64,
    count: usize,
) -> PointSet {
    let points: Vec<Vec<BigInt>> = (0..count)
        .map(|_| (0..dim).map(|_| BigInt::from(rng.gen_range(lo..=hi))).collect())
        .collect();
    PointSet::new(dim, points).expect("nonempty point list")
}

/// Dense support of total degree `d` in `dim` variables (all lattice points
/// of the dilated standard simplex).
pub fn dense_support(dim: usize, d: i64) -> PointSet {
    let simplex: Vec<Vec<BigRational>> = {
        let mut pts = vec![vec![BigRational::zero(); dim]];
        for j in 0..dim {
            let mut e = vec![BigRational::zero(); dim];
            e[j] = BigRational::from_integer(BigInt::from(d));
            pts.push(e);
        }
        pts
    };
    Polytope::from_points(dim, simplex)
        .expect("simplex")
        .lattice_points()
        .expect("dilated simplex has lattice points")
}
