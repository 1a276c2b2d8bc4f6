//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.
//! Every tolerance is pinned here; all comparisons are exact unless a
//! criterion explicitly involves roots or pi, in which case directed
//! decimals at 60 digits are used.

use mixvol::testkit::{
    dense_support, random_full_dim_polytope, random_lattice_polytope, random_point_set,
};
use mixvol::{
    bkk_count, check_af, check_af_power, check_bm, generic_empty_intersection, group_polarize,
    group_value, isoperimetric_check, kushnirenko_count, minkowski_zero_criterion, mixed_volume,
    no_body_index, oracle_count_2d, polarize, regular_polygon, surface_area_estimate,
    GroupElement, HomogeneousForm, MonomialForm, PointSet, Polytope, ReportValue, VolumeForm,
};
use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn factorial(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

fn assert_nonneg_integer(v: &BigRational, what: &str) {
    assert!(v.is_integer(), "{what} = {v} is not an integer");
    assert!(!v.is_negative(), "{what} = {v} is negative");
}

#[test]
fn criterion_01_integrality() {
    let mut r = rng(0xA1);
    let mut stash: Vec<Vec<Polytope>> = vec![Vec::new(); 5];
    let mut polytopes = 0usize;
    for (dim, count) in [(2usize, 170usize), (3, 170), (4, 160)] {
        for _ in 0..count {
            let p = random_lattice_polytope(&mut r, dim, 4, 6);
            let v = factorial(dim) * p.volume();
            assert_nonneg_integer(&v, "n! * volume");
            stash[dim].push(p);
            polytopes += 1;
        }
    }
    let mut tuples = 0usize;
    for (dim, count) in [(2usize, 60usize), (3, 50), (4, 30)] {
        for _ in 0..count {
            let bodies: Vec<Polytope> = (0..dim)
                .map(|_| stash[dim][r.gen_range(0..stash[dim].len())].clone())
                .collect();
            let mv = mixed_volume(&bodies).unwrap();
            let v = factorial(dim) * mv;
            assert_nonneg_integer(&v, "n! * mixed volume");
            tuples += 1;
        }
    }
    assert_eq!(polytopes, 500);
    println!("criterion 1 (integrality): PASS - 500 volumes and {tuples} mixed volumes, dims 2-4, all n!-integral");
}

fn random_nat(r: &mut ChaCha8Rng, m: usize) -> Vec<BigInt> {
    (0..m).map(|_| BigInt::from(r.gen_range(0i64..=5))).collect()
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// The four engine laws checked exactly on one form and argument list.
fn engine_laws<F: HomogeneousForm>(
    f: &F,
    args: &[F::Elem],
    other_base: &F::Elem,
    split: (&F::Elem, &F::Elem),
) {
    let n = f.degree();
    let zero = f.zero();
    let at_zero = polarize(f, args, &zero).unwrap();

    // base independence
    let at_other = polarize(f, args, other_base).unwrap();
    assert_eq!(at_zero, at_other, "base independence violated");

    // symmetry over all permutations (n <= 4)
    for perm in permutations(args) {
        assert_eq!(
            polarize(f, &perm, &zero).unwrap(),
            at_zero,
            "symmetry violated"
        );
    }

    // additivity in the first slot
    let (a1, a2) = split;
    let mut with_sum = args.to_vec();
    with_sum[0] = f.add(a1, a2);
    let mut with_a1 = args.to_vec();
    with_a1[0] = a1.clone();
    let mut with_a2 = args.to_vec();
    with_a2[0] = a2.clone();
    assert_eq!(
        polarize(f, &with_sum, &zero).unwrap(),
        polarize(f, &with_a1, &zero).unwrap() + polarize(f, &with_a2, &zero).unwrap(),
        "additivity violated"
    );

    // coefficient identity: n! * polarization is the alternating sum on the
    // grid {0,1}^n (the k_1...k_n coefficient of the interpolant)
    let mut oracle = BigRational::zero();
    for mask in 0u32..(1 << n) {
        let mut elem = f.zero();
        for (i, a) in args.iter().enumerate() {
            if mask >> i & 1 == 1 {
                elem = f.add(&elem, a);
            }
        }
        let term = f.value(&elem);
        if (n as u32 - mask.count_ones()) % 2 == 0 {
            oracle += term;
        } else {
            oracle -= term;
        }
    }
    assert_eq!(at_zero * factorial(n), oracle, "coefficient identity violated");
}

#[test]
fn criterion_02_polarization_engine() {
    let mut r = rng(0xB2);
    // 150 probes on (N^3, +) with monomial value maps
    for _ in 0..150 {
        let mut exps = [0u32; 3];
        let degree = r.gen_range(1..=4) as usize;
        for _ in 0..degree {
            exps[r.gen_range(0..3)] += 1;
        }
        let f = MonomialForm::new(exps.to_vec());
        let args: Vec<Vec<BigInt>> = (0..degree).map(|_| random_nat(&mut r, 3)).collect();
        let base = random_nat(&mut r, 3);
        let split = (random_nat(&mut r, 3), random_nat(&mut r, 3));
        engine_laws(&f, &args, &base, (&split.0, &split.1));
    }
    // 50 probes with volume on planar lattice polytopes
    let form = VolumeForm::new(2).unwrap();
    for _ in 0..50 {
        let args = vec![
            random_lattice_polytope(&mut r, 2, 4, 5),
            random_lattice_polytope(&mut r, 2, 4, 5),
        ];
        let base = random_lattice_polytope(&mut r, 2, 3, 4);
        let s1 = random_lattice_polytope(&mut r, 2, 3, 4);
        let s2 = random_lattice_polytope(&mut r, 2, 3, 4);
        engine_laws(&form, &args, &base, (&s1, &s2));
    }
    println!("criterion 2 (polarization engine): PASS - 200 probes, four laws each, exact");
}

#[test]
fn criterion_03_grothendieck_extension() {
    let mut r = rng(0xC3);
    // 150 monomial probes
    for _ in 0..150 {
        let mut exps = [0u32; 3];
        let degree = r.gen_range(1..=3) as usize;
        for _ in 0..degree {
            exps[r.gen_range(0..3)] += 1;
        }
        let f = MonomialForm::new(exps.to_vec());
        let g = GroupElement::new(random_nat(&mut r, 3), random_nat(&mut r, 3));
        let c = random_nat(&mut r, 3);
        let shifted = GroupElement::new(f.add(&g.plus, &c), f.add(&g.minus, &c));
        assert_eq!(group_value(&f, &g), group_value(&f, &shifted));

        let gs: Vec<GroupElement<Vec<BigInt>>> = (0..degree)
            .map(|_| GroupElement::new(random_nat(&mut r, 3), random_nat(&mut r, 3)))
            .collect();
        let base_val = group_polarize(&f, &gs).unwrap();
        let slot = r.gen_range(0..degree);
        let mut shifted_gs = gs.clone();
        shifted_gs[slot] =
            GroupElement::new(f.add(&gs[slot].plus, &c), f.add(&gs[slot].minus, &c));
        assert_eq!(group_polarize(&f, &shifted_gs).unwrap(), base_val);

        let diag = vec![g.clone(); degree];
        assert_eq!(group_polarize(&f, &diag).unwrap(), group_value(&f, &g));
    }
    // 50 volume probes in the plane
    let form = VolumeForm::new(2).unwrap();
    for _ in 0..50 {
        let g = GroupElement::new(
            random_lattice_polytope(&mut r, 2, 3, 4),
            random_lattice_polytope(&mut r, 2, 3, 4),
        );
        let c = random_lattice_polytope(&mut r, 2, 2, 3);
        let shifted = GroupElement::new(form.add(&g.plus, &c), form.add(&g.minus, &c));
        assert_eq!(group_value(&form, &g), group_value(&form, &shifted));
        let diag = vec![g.clone(), g.clone()];
        assert_eq!(group_polarize(&form, &diag).unwrap(), group_value(&form, &g));
    }
    println!("criterion 3 (grothendieck extension): PASS - 200 probes, representative independence and diagonal consistency, exact");
}

#[test]
fn criterion_04_formula_matches_engine() {
    let mut r = rng(0xD4);
    let form = VolumeForm::new(3).unwrap();
    let origin = form.zero();
    for _ in 0..200 {
        let bodies: Vec<Polytope> = (0..3)
            .map(|_| random_lattice_polytope(&mut r, 3, 4, 6))
            .collect();
        let formula = mixed_volume(&bodies).unwrap();
        let engine = polarize(&form, &bodies, &origin).unwrap();
        assert_eq!(formula, engine, "inclusion-exclusion differs from engine");
    }
    println!("criterion 4 (volume formula vs engine): PASS - 200 random triples in dim 3, bit-identical");
}

#[test]
fn criterion_05_alexandrov_fenchel() {
    let mut r = rng(0xE5);
    for i in 0..300 {
        let bodies: Vec<Polytope> = (0..3)
            .map(|_| random_lattice_polytope(&mut r, 3, 4, 6))
            .collect();
        let af = check_af(&bodies).unwrap();
        assert!(af.holds && af.exact, "AF violated on 3d triple {i}");
        for m in 2..=3 {
            let pw = check_af_power(m, &bodies).unwrap();
            assert!(pw.holds, "AF power m={m} violated on 3d triple {i}");
        }
    }
    for i in 0..100 {
        let bodies: Vec<Polytope> = (0..4)
            .map(|_| random_lattice_polytope(&mut r, 4, 3, 5))
            .collect();
        let af = check_af(&bodies).unwrap();
        assert!(af.holds && af.exact, "AF violated on 4d quadruple {i}");
        for m in 2..=4 {
            let pw = check_af_power(m, &bodies).unwrap();
            assert!(pw.holds, "AF power m={m} violated on 4d quadruple {i}");
        }
    }
    println!("criterion 5 (alexandrov-fenchel): PASS - 300 triples (dim 3) + 100 quadruples (dim 4), all powers, zero violations");
}

#[test]
fn criterion_06_minkowski_criterion() {
    let mut r = rng(0xF6);
    let zero = BigRational::zero();

    // 50 constructed dependent families: three construction patterns.
    for i in 0..50 {
        let bodies: Vec<Polytope> = match i % 3 {
            0 => {
                // a point body makes {that index} dependent
                let pt = vec![vec![
                    BigRational::from_integer(BigInt::from(r.gen_range(-3i64..=3))),
                    BigRational::from_integer(BigInt::from(r.gen_range(-3i64..=3))),
                    BigRational::from_integer(BigInt::from(r.gen_range(-3i64..=3))),
                ]];
                vec![
                    random_lattice_polytope(&mut r, 3, 3, 5),
                    Polytope::from_points(3, pt).unwrap(),
                    random_lattice_polytope(&mut r, 3, 3, 5),
                ]
            }
            1 => {
                // two parallel segments: dim(s1 + s2) = 1 < 2
                let dir = [r.gen_range(1i64..=3), r.gen_range(0i64..=3), r.gen_range(0i64..=2)];
                let seg = |k: i64, shift: i64| {
                    Polytope::from_int_points(
                        3,
                        &[
                            &[shift, 0, shift],
                            &[shift + k * dir[0], k * dir[1], shift + k * dir[2]],
                        ],
                    )
                    .unwrap()
                };
                vec![seg(1, 0), seg(2, 1), random_lattice_polytope(&mut r, 3, 3, 5)]
            }
            _ => {
                // three bodies flattened into the z = 0 plane: dim(sum) = 2 < 3
                (0..3)
                    .map(|_| {
                        let flat: Vec<Vec<BigRational>> = (0..5)
                            .map(|_| {
                                vec![
                                    BigRational::from_integer(BigInt::from(r.gen_range(0i64..=4))),
                                    BigRational::from_integer(BigInt::from(r.gen_range(0i64..=4))),
                                    BigRational::zero(),
                                ]
                            })
                            .collect();
                        Polytope::from_points(3, flat).unwrap()
                    })
                    .collect()
            }
        };
        let witness = minkowski_zero_criterion(&bodies).unwrap();
        assert!(witness.dependent, "constructed family {i} not flagged");
        let mv = mixed_volume(&bodies).unwrap();
        assert_eq!(mv, zero, "dependent family {i} has nonzero mixed volume");
    }

    // Dependent subfamilies stay zero under arbitrary completions.
    let s1 = Polytope::from_int_points(3, &[&[0, 0, 0], &[2, 1, 0]]).unwrap();
    let s2 = Polytope::from_int_points(3, &[&[1, 1, 1], &[5, 3, 1]]).unwrap();
    assert!(minkowski_zero_criterion(&[s1.clone(), s2.clone()])
        .unwrap()
        .dependent);
    for _ in 0..20 {
        let x = random_lattice_polytope(&mut r, 3, 4, 6);
        let mv = mixed_volume(&[s1.clone(), s2.clone(), x]).unwrap();
        assert_eq!(mv, zero, "completion of dependent pair must vanish");
    }

    // 50 independent families: positive mixed volume under cube completion.
    let cube = Polytope::from_int_points(
        3,
        &[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ],
    )
    .unwrap();
    let mut independent = 0usize;
    while independent < 50 {
        let k = r.gen_range(1..=3usize);
        let bodies: Vec<Polytope> = (0..k)
            .map(|_| random_full_dim_polytope(&mut r, 3, 4, 6))
            .collect();
        let witness = minkowski_zero_criterion(&bodies).unwrap();
        assert!(!witness.dependent, "full-dim bodies are independent");
        let mut completed = bodies.clone();
        while completed.len() < 3 {
            completed.push(cube.clone());
        }
        let mv = mixed_volume(&completed).unwrap();
        assert!(
            mv.is_positive(),
            "independent family must have positive MV under cube completion"
        );
        independent += 1;
    }
    println!("criterion 6 (minkowski criterion): PASS - 50 dependent families vanish exactly, 50 independent families positive, verdicts match");
}

#[test]
fn criterion_07_bkk_identities() {
    let mut r = rng(0x17);
    // BKK equals the Newton-Okounkov index on 200 random families, n <= 3.
    for i in 0..200 {
        let n = r.gen_range(1..=3usize);
        let supports: Vec<PointSet> = (0..n)
            .map(|_| {
                let size = r.gen_range(2..=5);
                random_point_set(&mut r, n, -3, 3, size)
            })
            .collect();
        let b = bkk_count(&supports).unwrap();
        let nb = no_body_index(&supports).unwrap();
        assert_eq!(b.value, nb.value, "family {i}: bkk != no-body index");
    }
    // Bezout numbers from dense supports.
    for d1 in 1..=3i64 {
        for d2 in 1..=3i64 {
            let b = bkk_count(&[dense_support(2, d1), dense_support(2, d2)]).unwrap();
            assert_eq!(b.value, BigInt::from(d1 * d2).to_biguint().unwrap());
        }
    }
    for d1 in 1..=3i64 {
        for d2 in 1..=3i64 {
            for d3 in 1..=3i64 {
                let b = bkk_count(&[
                    dense_support(3, d1),
                    dense_support(3, d2),
                    dense_support(3, d3),
                ])
                .unwrap();
                assert_eq!(b.value, BigInt::from(d1 * d2 * d3).to_biguint().unwrap());
            }
        }
    }
    // Completion invariance on 100 instances.
    for _ in 0..100 {
        let n = r.gen_range(1..=3usize);
        let supports: Vec<PointSet> = (0..n)
            .map(|_| {
                let size = r.gen_range(2..=5);
                random_point_set(&mut r, n, -3, 3, size)
            })
            .collect();
        let before = bkk_count(&supports).unwrap();
        let completed: Vec<PointSet> = supports.iter().map(|s| s.completion()).collect();
        let after = bkk_count(&completed).unwrap();
        assert_eq!(before.value, after.value, "completion changed the count");
    }
    println!("criterion 7 (bkk identities): PASS - 200 no-body identities, 36 Bezout numbers, 100 completion invariances, exact");
}

#[test]
fn criterion_08_oracle_agreement() {
    let mut r = rng(0x28);
    let seeds: Vec<u64> = (0..30).collect();
    for pair in 0..50 {
        let size1 = r.gen_range(2..=6);
        let s1 = random_point_set(&mut r, 2, -3, 3, size1);
        let size2 = r.gen_range(2..=6);
        let s2 = random_point_set(&mut r, 2, -3, 3, size2);
        let expected = bkk_count(&[s1.clone(), s2.clone()]).unwrap().value;
        let f1 = mixvol::LaurentPolynomial::from_support(&s1, &["x", "y"]).unwrap();
        let f2 = mixvol::LaurentPolynomial::from_support(&s2, &["x", "y"]).unwrap();
        let mut agreeing = 0usize;
        for &seed in &seeds {
            match oracle_count_2d(&f1, &f2, seed) {
                Ok(c) => {
                    assert_eq!(
                        c.value, expected,
                        "pair {pair} seed {seed}: oracle disagrees with bkk"
                    );
                    agreeing += 1;
                }
                Err(mixvol::Error::NonGeneric) => {}
                Err(e) => panic!("pair {pair} seed {seed}: unexpected error {e}"),
            }
        }
        assert!(
            agreeing * 100 >= seeds.len() * 95,
            "pair {pair}: only {agreeing}/30 seeds agreed"
        );
        let majority = mixvol::oracle_majority_2d(&f1, &f2, &seeds).unwrap();
        assert_eq!(majority.value, expected, "pair {pair}: majority vote differs");
    }
    println!("criterion 8 (oracle agreement): PASS - 50 support pairs, majority over 30 seeds matches bkk every time, >=95% of seeds individually");
}

#[test]
fn criterion_09_isoperimetric_and_surface_area() {
    let mut r = rng(0x39);
    for i in 0..100 {
        let p = random_full_dim_polytope(&mut r, 2, 5, 6);
        let report = isoperimetric_check(&p, 60).unwrap();
        assert!(report.holds, "isoperimetric inequality failed on polygon {i}");
    }
    // surface area at k = 720 within relative 1e-4 of the exact perimeter
    let tol = BigRational::new(BigInt::from(1), BigInt::from(10_000));
    for i in 0..20 {
        let p = random_full_dim_polytope(&mut r, 2, 5, 6);
        let estimate = surface_area_estimate(&p, 720, 60).unwrap().to_rational();
        let (lo, hi) = exact_perimeter_bounds(&p);
        assert!(
            estimate <= hi,
            "polygon {i}: estimate exceeds the true perimeter"
        );
        let deficit = &lo - &estimate;
        assert!(
            deficit < &tol * &hi,
            "polygon {i}: estimate off by more than 1e-4 relative ({deficit})"
        );
    }
    // near-equality for the regular 360-gon: relative margin below 1e-3
    let b360 = regular_polygon(360).unwrap();
    let report = isoperimetric_check(&b360, 60).unwrap();
    assert!(report.holds);
    let (lhs, rhs) = match (&report.lhs, &report.rhs) {
        (ReportValue::Rational(v), ReportValue::Decimal(d)) => (v.clone(), d.to_rational()),
        other => panic!("unexpected report shape {other:?}"),
    };
    let rel = (&rhs - &lhs) / &rhs;
    assert!(
        rel < BigRational::new(BigInt::from(1), BigInt::from(1000)),
        "360-gon relative margin {rel} not below 1e-3"
    );
    println!("criterion 9 (isoperimetric & surface area): PASS - 100 polygons hold, 20 perimeter estimates within 1e-4, 360-gon margin below 1e-3");
}

/// Directed rational bounds on the perimeter, via 60-digit edge roots.
fn exact_perimeter_bounds(p: &Polytope) -> (BigRational, BigRational) {
    // Reuse the library's decimal machinery indirectly: the isoperimetric
    // report exposes only l^2/(4 pi), so recompute edge roots here from the
    // vertex ring (sorted counterclockwise around the centroid).
    let verts = p.vertices();
    let m = BigRational::from_integer(BigInt::from(verts.len() as i64));
    let cx: BigRational = verts.iter().map(|v| &v[0]).sum::<BigRational>() / &m;
    let cy: BigRational = verts.iter().map(|v| &v[1]).sum::<BigRational>() / &m;
    let mut ring = verts.to_vec();
    ring.sort_by(|a, b| {
        let (ax, ay) = (&a[0] - &cx, &a[1] - &cy);
        let (bx, by) = (&b[0] - &cx, &b[1] - &cy);
        let ha = !(ay.is_positive() || (ay.is_zero() && ax.is_positive()));
        let hb = !(by.is_positive() || (by.is_zero() && bx.is_positive()));
        ha.cmp(&hb).then_with(|| {
            let cross = &ax * &by - &ay * &bx;
            if cross.is_positive() {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        })
    });
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    for (i, a) in ring.iter().enumerate() {
        let b = &ring[(i + 1) % ring.len()];
        let dx = &a[0] - &b[0];
        let dy = &a[1] - &b[1];
        let len2 = &dx * &dx + &dy * &dy;
        let (l, h) = mixvol::decimal::sqrt_bounds(&len2, 60);
        lo += l.to_rational();
        hi += h.to_rational();
    }
    (lo, hi)
}

#[test]
fn criterion_10_planar_equivalence() {
    let mut r = rng(0x4A);
    for i in 0..200 {
        let d1 = random_lattice_polytope(&mut r, 2, 4, 6);
        let d2 = random_lattice_polytope(&mut r, 2, 4, 6);
        let af = check_af(&[d1.clone(), d2.clone()]).unwrap();
        let bm = check_bm(2, &d1, &d2, &[], 60).unwrap();
        assert_eq!(
            af.holds, bm.holds,
            "pair {i}: exact AF and decimal BM verdicts disagree"
        );
        assert!(af.holds, "pair {i}: AF must hold for convex bodies");
    }
    println!("criterion 10 (planar equivalence): PASS - 200 pairs, exact AF verdict equals directed BM verdict");
}
