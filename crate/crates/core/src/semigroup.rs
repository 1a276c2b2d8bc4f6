//! Polarization of homogeneous polynomials on commutative semigroups.
//!
//! A degree-`n` homogeneous polynomial on a semigroup admits a unique
//! `n`-polarization: the symmetric function, additive in each slot, that
//! agrees with the polynomial on the diagonal. It is computed here by the
//! alternating sum over all subsets of the arguments (including the empty
//! one), which is the reading that makes the degree-one case and base-point
//! independence work. The same machinery extends the polynomial to the
//! Grothendieck group of formal differences.
//!
//! The whole engine is generic: mixed volumes arise by instantiating it with
//! Minkowski addition and the volume map, but nothing here knows about
//! polytopes.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Zero};

/// A commutative semigroup with identity, carrying a rational-valued function
/// asserted to be homogeneous of the stated degree.
pub trait HomogeneousForm {
    type Elem: Clone;

    fn degree(&self) -> usize;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn value(&self, a: &Self::Elem) -> BigRational;
}

/// A formal difference `plus - minus` of semigroup elements; an element of
/// the Grothendieck group. `(a, b)` and `(c, d)` represent the same element
/// when `a + d ~ b + c`.
#[derive(Debug, Clone)]
pub struct GroupElement<E> {
    pub plus: E,
    pub minus: E,
}

impl<E: Clone> GroupElement<E> {
    pub fn new(plus: E, minus: E) -> Self {
        GroupElement { plus, minus }
    }
}

/// `k`-fold repeated addition by doubling (semigroup elements may be
/// expensive, e.g. polytopes).
pub fn repeat_add<F: HomogeneousForm>(f: &F, a: &F::Elem, k: u64) -> F::Elem {
    if k == 0 {
        return f.zero();
    }
    let mut base = a.clone();
    let mut acc: Option<F::Elem> = None;
    let mut k = k;
    loop {
        if k & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(v) => f.add(&v, &base),
            });
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        base = f.add(&base, &base);
    }
    acc.unwrap()
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn factorial_big(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The unique `n`-polarization of `f`, evaluated at `args`:
/// `(1/n!) * sum over I of (-1)^(n-|I|) f(base + sum of args in I)`,
/// ranging over all subsets `I` of the argument positions. The result does
/// not depend on `base`.
pub fn polarize<F: HomogeneousForm>(
    f: &F,
    args: &[F::Elem],
    base: &F::Elem,
) -> Result<BigRational> {
    let n = f.degree();
    if args.len() != n {
        return Err(Error::Arity {
            expected: n,
            got: args.len(),
        });
    }
    let mut sum = BigRational::zero();
    for mask in 0u64..(1u64 << n) {
        let mut elem = base.clone();
        for (i, a) in args.iter().enumerate() {
            if mask >> i & 1 == 1 {
                elem = f.add(&elem, a);
            }
        }
        let v = f.value(&elem);
        if (n - (mask.count_ones() as usize)) % 2 == 0 {
            sum += v;
        } else {
            sum -= v;
        }
    }
    // 1/n! applied last keeps intermediate sums integral for integer-valued f.
    Ok(sum / BigRational::from_integer(factorial_big(n)))
}

/// The Grothendieck-group extension of `f` evaluated at a formal difference:
/// `(1/n!) * sum over k of (-1)^(n-k) C(n,k) f(k*a + (n-k)*b)`.
/// Invariant under replacing `(a, b)` by `(a + c, b + c)`.
pub fn group_value<F: HomogeneousForm>(f: &F, g: &GroupElement<F::Elem>) -> BigRational {
    let n = f.degree();
    let mut sum = BigRational::zero();
    for k in 0..=n {
        let ka = repeat_add(f, &g.plus, k as u64);
        let nb = repeat_add(f, &g.minus, (n - k) as u64);
        let elem = f.add(&ka, &nb);
        let term = BigRational::from_integer(binomial(n, k)) * f.value(&elem);
        if (n - k) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / BigRational::from_integer(factorial_big(n))
}

/// Polarization of the group extension at `n` formal differences
/// `g_i = a_i - b_i`:
/// `(1/n!) * sum over I of (-1)^(|J|) f(sum_{i in I} a_i + sum_{j in J} b_j)`
/// with `J` the complement of `I`. Agrees with [`polarize`] when every minus
/// part is the identity, and with [`group_value`] on the diagonal.
pub fn group_polarize<F: HomogeneousForm>(
    f: &F,
    gs: &[GroupElement<F::Elem>],
) -> Result<BigRational> {
    let n = f.degree();
    if gs.len() != n {
        return Err(Error::Arity {
            expected: n,
            got: gs.len(),
        });
    }
    let mut sum = BigRational::zero();
    for mask in 0u64..(1u64 << n) {
        let mut elem = f.zero();
        for (i, g) in gs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                elem = f.add(&elem, &g.plus);
            } else {
                elem = f.add(&elem, &g.minus);
            }
        }
        let complement = n - mask.count_ones() as usize;
        let v = f.value(&elem);
        if complement % 2 == 0 {
            sum += v;
        } else {
            sum -= v;
        }
    }
    Ok(sum / BigRational::from_integer(factorial_big(n)))
}

/// Grid check that `f` behaves as a homogeneous polynomial of its stated
/// degree on every probe tuple: evaluates `f(k_1 a_1 + ... + k_m a_m)` on the
/// grid `{0..n+1}^m`, requires all finite differences of total order `n + 1`
/// to vanish, and requires the interpolating polynomial to carry no terms of
/// total degree below `n`.
pub fn is_homogeneous<F: HomogeneousForm>(f: &F, probes: &[Vec<F::Elem>]) -> bool {
    probes.iter().all(|probe| probe_homogeneous(f, probe))
}

fn probe_homogeneous<F: HomogeneousForm>(f: &F, probe: &[F::Elem]) -> bool {
    assert!(probe.len() <= 4, "probe tuples are capped at 4 elements");
    let n = f.degree();
    let m = probe.len();
    if m == 0 {
        return true;
    }
    let side = n + 2;
    let total = side.pow(m as u32);

    // Tabulate f on the grid.
    let mut values = Vec::with_capacity(total);
    let mut idx = vec![0usize; m];
    loop {
        let mut elem = f.zero();
        for (i, a) in probe.iter().enumerate() {
            if idx[i] > 0 {
                elem = f.add(&elem, &repeat_add(f, a, idx[i] as u64));
            }
        }
        values.push(f.value(&elem));
        let mut axis = m;
        loop {
            if axis == 0 {
                break;
            }
            axis -= 1;
            idx[axis] += 1;
            if idx[axis] < side {
                break;
            }
            idx[axis] = 0;
        }
        if idx.iter().all(|&v| v == 0) {
            break;
        }
    }

    // Newton forward differences along each axis: values[alpha] becomes the
    // iterated difference at the grid origin.
    let stride = |axis: usize| side.pow((m - 1 - axis) as u32);
    for axis in 0..m {
        let s = stride(axis);
        for order in 1..side {
            // Difference in place, highest indices first.
            for flat in (0..total).rev() {
                let coord = flat / s % side;
                if coord >= order {
                    let prev = values[flat - s].clone();
                    values[flat] -= prev;
                }
            }
        }
    }

    // (i) differences of total order n + 1 and beyond vanish.
    let orders: Vec<usize> = (0..total)
        .map(|flat| (0..m).map(|axis| flat / stride(axis) % side).sum())
        .collect();
    if (0..total).any(|flat| orders[flat] > n && !values[flat].is_zero()) {
        return false;
    }

    // (ii) no monomial of total degree below n: convert the Newton form
    // sum_alpha d_alpha prod C(k_i, alpha_i) to the monomial basis.
    // binom_coeffs[j][t] is the coefficient of k^t in C(k, j).
    let mut binom_coeffs: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for j in 1..side {
        // falling factorial step: C(k, j) = C(k, j-1) * (k - (j-1)) / j
        let prev = &binom_coeffs[j - 1];
        let mut next = vec![BigRational::zero(); j + 1];
        let shift = BigRational::from_integer(BigInt::from(j as i64 - 1));
        let inv_j = BigRational::new(BigInt::one(), BigInt::from(j as i64));
        for (t, c) in prev.iter().enumerate() {
            next[t + 1] += c * &inv_j;
            next[t] -= c * &shift * &inv_j;
        }
        binom_coeffs.push(next);
    }

    // Accumulate monomial coefficients for total degree < n.
    let mut low_degree_ok = true;
    let mut mono: std::collections::HashMap<Vec<usize>, BigRational> =
        std::collections::HashMap::new();
    for flat in 0..total {
        if values[flat].is_zero() || orders[flat] > n {
            continue;
        }
        let alpha: Vec<usize> = (0..m).map(|axis| flat / stride(axis) % side).collect();
        // distribute prod_i C(k_i, alpha_i) into monomials
        let mut partial: Vec<(Vec<usize>, BigRational)> =
            vec![(Vec::new(), values[flat].clone())];
        for &aj in &alpha {
            let mut next = Vec::new();
            for (beta, coeff) in &partial {
                for (t, c) in binom_coeffs[aj].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut nb = beta.clone();
                    nb.push(t);
                    next.push((nb, coeff * c));
                }
            }
            partial = next;
        }
        for (beta, coeff) in partial {
            *mono.entry(beta).or_insert_with(BigRational::zero) += coeff;
        }
    }
    for (beta, coeff) in &mono {
        let deg: usize = beta.iter().sum();
        if deg < n && !coeff.is_zero() {
            low_degree_ok = false;
            break;
        }
    }
    low_degree_ok
}

/// Monomial form on the additive semigroup of natural vectors:
/// `value(v) = prod v_i ^ e_i`, homogeneous of degree `sum e_i`.
#[derive(Debug, Clone)]
pub struct MonomialForm {
    exponents: Vec<u32>,
}

impl MonomialForm {
    pub fn new(exponents: Vec<u32>) -> Self {
        MonomialForm { exponents }
    }
}

impl HomogeneousForm for MonomialForm {
    type Elem = Vec<BigInt>;

    fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.exponents.len()]
    }

    fn add(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn eq(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> bool {
        a == b
    }

    fn value(&self, a: &Vec<BigInt>) -> BigRational {
        let mut prod = BigInt::one();
        for (x, &e) in a.iter().zip(&self.exponents) {
            for _ in 0..e {
                prod *= x;
            }
        }
        BigRational::from_integer(prod)
    }
}
