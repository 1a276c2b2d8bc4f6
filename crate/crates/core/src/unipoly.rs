//! Dense univariate polynomials over `BigInt`: the little algebra needed by
//! the resultant oracle (pseudo-remainder gcd, squarefree parts, exact
//! interpolation from integer samples).

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Coefficients ascending; no trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Number of times `x` divides the polynomial.
    pub fn trailing_power(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Divide by `x^k`.
    pub fn shift_down(&self, k: usize) -> IntPoly {
        debug_assert!(self.trailing_power() >= k || self.is_zero());
        if self.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs[k..].to_vec())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg n - deg d + 1) * n  mod  d`.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let dd = d.degree();
        let lc = d.leading().clone();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let rl = r.leading().clone();
            let mut out = vec![BigInt::zero(); r.coeffs.len() - 1];
            for (i, c) in r.coeffs[..r.coeffs.len() - 1].iter().enumerate() {
                out[i] = c * &lc;
            }
            for (j, c) in d.coeffs[..dd].iter().enumerate() {
                out[j + shift] -= c * &rl;
            }
            r = IntPoly::new(out);
        }
        r
    }

    /// Primitive gcd (positive leading coefficient) via the primitive
    /// polynomial remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// Exact division (caller asserts divisibility over Z).
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero());
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let n = self.degree();
        assert!(n >= dd, "division must be exact");
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..q.len()).rev() {
            let lead = std::mem::take(&mut r[k + dd]);
            let (step, rem) = lead.div_rem(d.leading());
            debug_assert!(rem.is_zero(), "division must be exact");
            for (j, c) in d.coeffs[..dd].iter().enumerate() {
                let sub = c * &step;
                r[k + j] -= sub;
            }
            q[k] = step;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "division must be exact");
        IntPoly::new(q)
    }

    /// Squarefree part: `p / gcd(p, p')`, primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        assert!(!self.is_zero());
        let pp = self.primitive_part();
        if pp.is_constant() {
            return IntPoly::constant(BigInt::one());
        }
        let g = pp.gcd(&pp.derivative());
        pp.div_exact(&g).primitive_part()
    }
}

/// Exact interpolation: the unique polynomial of degree < xs.len() through
/// the integer samples. Panics if the samples do not come from an integer
/// polynomial of that degree.
pub(crate) fn interpolate(xs: &[i64], ys: &[BigInt]) -> IntPoly {
    assert_eq!(xs.len(), ys.len());
    let k = xs.len();
    // Newton divided differences over the rationals.
    let mut table: Vec<BigRational> = ys
        .iter()
        .map(|y| BigRational::from_integer(y.clone()))
        .collect();
    let mut newton: Vec<BigRational> = vec![table[0].clone()];
    for level in 1..k {
        for i in 0..k - level {
            let dx = BigRational::from_integer(BigInt::from(xs[i + level] - xs[i]));
            table[i] = (&table[i + 1] - &table[i]) / dx;
        }
        newton.push(table[0].clone());
    }
    // Expand sum_i newton[i] * prod_{j<i} (x - xs[j]).
    let mut acc = vec![BigRational::zero(); k];
    let mut basis = vec![BigRational::one()];
    for (i, coef) in newton.iter().enumerate() {
        for (a, b) in acc.iter_mut().zip(basis.iter()) {
            *a += coef * b;
        }
        if i + 1 < k {
            // basis *= (x - xs[i])
            let shift = BigRational::from_integer(BigInt::from(xs[i]));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (j, b) in basis.iter().enumerate() {
                next[j + 1] += b;
                next[j] -= &shift * b;
            }
            basis = next;
        }
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated polynomial must be integral");
            c.to_integer()
        })
        .collect();
    IntPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = poly(&[-2, 1, 1]);
        let b = poly(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let a = poly(&[1, 1]);
        let b = poly(&[2, 0, 1]);
        assert!(a.gcd(&b).is_constant());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (x-2)^2 (x+1) = x^3 - 3x^2 + 4
        let p = poly(&[4, 0, -3, 1]);
        let sf = p.squarefree_part();
        // (x-2)(x+1) = x^2 - x - 2
        assert_eq!(sf, poly(&[-2, -1, 1]));
    }

    #[test]
    fn trailing_power_and_shift() {
        let p = poly(&[0, 0, 5, 1]);
        assert_eq!(p.trailing_power(), 2);
        assert_eq!(p.shift_down(2), poly(&[5, 1]));
    }

    #[test]
    fn exact_division() {
        let a = poly(&[-2, 1, 1]); // (x-1)(x+2)
        let b = poly(&[-1, 1]);
        assert_eq!(a.div_exact(&b), poly(&[2, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = poly(&[7, -3, 0, 2]);
        let xs: Vec<i64> = (-3..=3).collect();
        let ys: Vec<BigInt> = xs.iter().map(|&x| p.eval(&BigInt::from(x))).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }

    #[test]
    fn interpolation_of_constant() {
        let xs = [0i64, 1];
        let ys = [BigInt::from(5), BigInt::from(5)];
        assert_eq!(interpolate(&xs, &ys), poly(&[5]));
    }
}
