//! Fixed-point decimals with directed rounding.
//!
//! Root-bearing inequalities cannot be decided in exact rational arithmetic,
//! so they are checked conservatively: the side that must be small is rounded
//! up, the side that must be large is rounded down, and `holds` is asserted
//! only when the conservative comparison passes. A `Decimal` is an exact
//! value `mantissa * 10^-digits`; every constructor documents its rounding
//! direction.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Decimal {
    mantissa: BigInt,
    digits: u32,
}

pub(crate) fn pow10(d: u32) -> BigInt {
    BigInt::from(10u32).pow(d)
}

impl Decimal {
    pub fn new(mantissa: BigInt, digits: u32) -> Self {
        Decimal { mantissa, digits }
    }

    pub fn zero(digits: u32) -> Self {
        Decimal::new(BigInt::zero(), digits)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn one_ulp(digits: u32) -> Self {
        Decimal::new(BigInt::one(), digits)
    }

    /// Largest decimal at this scale that is <= q.
    pub fn from_rational_floor(q: &BigRational, digits: u32) -> Self {
        let scaled = q * BigRational::from_integer(pow10(digits));
        Decimal::new(scaled.floor().to_integer(), digits)
    }

    /// Smallest decimal at this scale that is >= q.
    pub fn from_rational_ceil(q: &BigRational, digits: u32) -> Self {
        let scaled = q * BigRational::from_integer(pow10(digits));
        Decimal::new(scaled.ceil().to_integer(), digits)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), pow10(self.digits))
    }

    pub fn add(&self, other: &Decimal) -> Decimal {
        assert_eq!(self.digits, other.digits);
        Decimal::new(&self.mantissa + &other.mantissa, self.digits)
    }

    pub fn sub(&self, other: &Decimal) -> Decimal {
        assert_eq!(self.digits, other.digits);
        Decimal::new(&self.mantissa - &other.mantissa, self.digits)
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }
}

impl fmt::Display for Decimal {
    /// Fixed-point rendering with exactly `digits` fractional places.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ten = pow10(self.digits);
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        let abs = self.mantissa.abs();
        let (int, frac) = abs.div_rem(&ten);
        if self.digits == 0 {
            return write!(f, "{sign}{int}");
        }
        write!(
            f,
            "{sign}{int}.{frac:0>width$}",
            width = self.digits as usize
        )
    }
}

/// Floor of the integer square root.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    if n.is_zero() {
        return BigInt::zero();
    }
    let mut x = BigInt::one() << ((n.bits() + 1) / 2) as usize;
    loop {
        let next = (&x + n / &x) >> 1;
        if next >= x {
            break;
        }
        x = next;
    }
    debug_assert!(&x * &x <= *n && (&x + 1) * (&x + 1) > *n);
    x
}

/// Floor of the integer m-th root.
pub fn iroot(n: &BigInt, m: u32) -> BigInt {
    assert!(!n.is_negative() && m >= 1);
    if m == 1 || n.is_zero() || n.is_one() {
        return n.clone();
    }
    let pow = |x: &BigInt, e: u32| -> BigInt {
        let mut r = BigInt::one();
        for _ in 0..e {
            r *= x;
        }
        r
    };
    let mut x = BigInt::one() << (n.bits() / m as u64 + 1) as usize;
    loop {
        // Newton step for x^m = n.
        let xm1 = pow(&x, m - 1);
        let next = ((&x * BigInt::from(m - 1)) + n / &xm1) / BigInt::from(m);
        if next >= x {
            break;
        }
        x = next;
    }
    while pow(&x, m) > *n {
        x -= 1;
    }
    debug_assert!(pow(&x, m) <= *n && pow(&(&x + 1), m) > *n);
    x
}

/// Directed bounds on sqrt(q): `(floor, ceil)` at the given scale. The two
/// coincide exactly when sqrt(q) has a finite decimal expansion at that
/// scale.
pub fn sqrt_bounds(q: &BigRational, digits: u32) -> (Decimal, Decimal) {
    assert!(!q.is_negative());
    let scale2 = pow10(2 * digits);
    let scaled = (q.numer() * &scale2).div_floor(q.denom());
    let lo = isqrt(&scaled);
    let exact = {
        let back = BigRational::new(&lo * &lo, scale2);
        back == *q
    };
    let hi = if exact { lo.clone() } else { &lo + 1 };
    (Decimal::new(lo, digits), Decimal::new(hi, digits))
}

/// Directed bounds on the m-th root of q at the given scale.
pub fn nth_root_bounds(q: &BigRational, m: u32, digits: u32) -> (Decimal, Decimal) {
    assert!(!q.is_negative() && m >= 1);
    let scale_m = pow10(m * digits);
    let scaled = (q.numer() * &scale_m).div_floor(q.denom());
    let lo = iroot(&scaled, m);
    let exact = {
        let mut p = BigInt::one();
        for _ in 0..m {
            p *= &lo;
        }
        BigRational::new(p, scale_m) == *q
    };
    let hi = if exact { lo.clone() } else { &lo + 1 };
    (Decimal::new(lo, digits), Decimal::new(hi, digits))
}

/// Gregory series for arctan(1/x) at integer scale `10^s`; returns the
/// approximate mantissa and a bound on its absolute error in ulps.
fn atan_recip(x: u64, s: u32) -> (BigInt, BigInt) {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut acc = BigInt::zero();
    let mut power = pow10(s) / BigInt::from(x);
    let mut k = 0u64;
    let mut terms = 0u64;
    loop {
        let term = &power / BigInt::from(2 * k + 1);
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
        power = &power / &x2;
        k += 1;
        terms += 1;
    }
    // Every floored division costs at most one ulp; the alternating tail is
    // below one ulp once terms vanish.
    (acc, BigInt::from(2 * terms + 2))
}

/// Directed bounds on pi at the given scale (Machin's formula).
pub fn pi_bounds(digits: u32) -> (Decimal, Decimal) {
    let guard = 15u32;
    let s = digits + guard;
    let (a5, e5) = atan_recip(5, s);
    let (a239, e239) = atan_recip(239, s);
    let approx = BigInt::from(16) * &a5 - BigInt::from(4) * &a239;
    let err = BigInt::from(16) * e5 + BigInt::from(4) * e239;
    let lo = &approx - &err;
    let hi = &approx + &err;
    let down = pow10(guard);
    (
        Decimal::new(lo.div_floor(&down), digits),
        Decimal::new(hi.div_ceil(&down), digits),
    )
}

const CIRCLE_OUT: u32 = 45;
const CIRCLE_SCALE: u32 = CIRCLE_OUT + 15;

fn circle_point_with_pi(pi_mantissa: &BigInt, j: u64, k: u64) -> (BigRational, BigRational) {
    debug_assert!(j < k);
    // Quadrant reduction: 2 pi (j/k) = q * pi/2 + 2 pi t', t' in [0, 1/4).
    let q = 4 * j / k;
    let num = 4 * j - q * k; // 4k * t' = num, so t' = num / (4k)
    // theta = 2 pi t' = pi * num / (2k), at the working scale.
    let theta = (pi_mantissa * BigInt::from(num)) / BigInt::from(2 * k);
    let (c, s) = cos_sin_taylor(&theta, CIRCLE_SCALE);
    let (cx, cy) = match q {
        0 => (c, s),
        1 => (-&s, c),
        2 => (-&c, -&s),
        _ => (s, -&c),
    };
    let down = pow10(CIRCLE_SCALE - CIRCLE_OUT);
    let denom = pow10(CIRCLE_OUT);
    (
        BigRational::new(cx / &down, denom.clone()),
        BigRational::new(cy / &down, denom),
    )
}

/// Rational approximation of the circle point (cos(2 pi j / k), sin(2 pi j / k)),
/// each coordinate within 10^-40 of the exact value (fixed denominator 10^45).
#[cfg(test)]
pub(crate) fn circle_point(j: u64, k: u64) -> (BigRational, BigRational) {
    let (pi_lo, _) = pi_bounds(CIRCLE_SCALE);
    circle_point_with_pi(pi_lo.mantissa(), j, k)
}

/// All `k` rationalized vertices of the regular `k`-gon with unit
/// circumradius, sharing one pi evaluation.
pub(crate) fn circle_ring(k: u64) -> Vec<(BigRational, BigRational)> {
    let (pi_lo, _) = pi_bounds(CIRCLE_SCALE);
    (0..k)
        .map(|j| circle_point_with_pi(pi_lo.mantissa(), j, k))
        .collect()
}

/// Taylor series for cos and sin of `theta` (mantissa at scale `s`,
/// 0 <= theta <= pi/2). Absolute error stays far below the 15 guard digits
/// used by callers: a few hundred ulps from floored divisions.
fn cos_sin_taylor(theta: &BigInt, s: u32) -> (BigInt, BigInt) {
    let one = pow10(s);
    let theta2 = (theta * theta) / &one;
    let mut cos = one.clone();
    let mut sin = theta.clone();
    let mut cos_term = one.clone();
    let mut sin_term = theta.clone();
    let mut i: u64 = 1;
    loop {
        cos_term = ((&cos_term * &theta2) / &one) / BigInt::from((2 * i - 1) * (2 * i));
        sin_term = ((&sin_term * &theta2) / &one) / BigInt::from((2 * i) * (2 * i + 1));
        if cos_term.is_zero() && sin_term.is_zero() {
            break;
        }
        if i % 2 == 1 {
            cos -= &cos_term;
            sin -= &sin_term;
        } else {
            cos += &cos_term;
            sin += &sin_term;
        }
        i += 1;
    }
    (cos, sin)
}

/// Directed bounds on the perimeter of a cyclic vertex ring.
pub(crate) fn perimeter_bounds(ring: &[Vec<BigRational>], digits: u32) -> (Decimal, Decimal) {
    let mut lo = Decimal::zero(digits);
    let mut hi = Decimal::zero(digits);
    if ring.len() < 2 {
        return (lo, hi);
    }
    for (i, a) in ring.iter().enumerate() {
        let b = &ring[(i + 1) % ring.len()];
        let dx = &a[0] - &b[0];
        let dy = &a[1] - &b[1];
        let len2 = &dx * &dx + &dy * &dy;
        let (l, h) = sqrt_bounds(&len2, digits);
        lo = lo.add(&l);
        hi = hi.add(&h);
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_to_sixty_digits() {
        let (lo, hi) = pi_bounds(60);
        assert_eq!(
            lo.to_string(),
            "3.141592653589793238462643383279502884197169399375105820974944"
        );
        assert!(hi >= lo);
        assert!(hi.sub(&lo).mantissa() <= &BigInt::from(2));
    }

    #[test]
    fn sqrt_two_bounds() {
        let two = BigRational::from_integer(BigInt::from(2));
        let (lo, hi) = sqrt_bounds(&two, 50);
        assert_eq!(
            lo.to_string(),
            "1.41421356237309504880168872420969807856967187537694"
        );
        assert_eq!(hi.sub(&lo), Decimal::one_ulp(50));
        let v = lo.to_rational();
        assert!(&v * &v <= two);
        let w = hi.to_rational();
        assert!(&w * &w >= two);
    }

    #[test]
    fn exact_roots_collapse_bounds() {
        let q = BigRational::from_integer(BigInt::from(4));
        let (lo, hi) = sqrt_bounds(&q, 30);
        assert_eq!(lo, hi);
        assert_eq!(lo.to_string(), "2.000000000000000000000000000000");

        let eight = BigRational::from_integer(BigInt::from(8));
        let (lo, hi) = nth_root_bounds(&eight, 3, 25);
        assert_eq!(lo, hi);
        assert_eq!(lo.to_rational(), BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn circle_points_lie_on_the_circle() {
        for (j, k) in [(0u64, 8u64), (1, 8), (3, 8), (5, 8), (7, 8), (17, 360)] {
            let (x, y) = circle_point(j, k);
            let r2 = &x * &x + &y * &y;
            let one = BigRational::one();
            let err = (r2 - one).abs();
            // |r^2 - 1| <= 2|r - 1| + |r - 1|^2, so 1e-40 on coordinates
            // keeps this below ~3e-40.
            let bound = BigRational::new(BigInt::from(3), pow10(40));
            assert!(err < bound, "j={j} k={k} err={err}");
        }
        // Exact axis points.
        let (x, y) = circle_point(2, 8);
        assert!(x.abs() < BigRational::new(BigInt::one(), pow10(40)));
        assert!((y - BigRational::one()).abs() < BigRational::new(BigInt::one(), pow10(40)));
    }

    #[test]
    fn decimal_rendering() {
        let d = Decimal::new(BigInt::from(-12345), 3);
        assert_eq!(d.to_string(), "-12.345");
        let d = Decimal::new(BigInt::from(5), 3);
        assert_eq!(d.to_string(), "0.005");
        let d = Decimal::new(BigInt::from(42), 0);
        assert_eq!(d.to_string(), "42");
    }

    #[test]
    fn rational_rounding_directions() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(3));
        let f = Decimal::from_rational_floor(&q, 5);
        let c = Decimal::from_rational_ceil(&q, 5);
        assert_eq!(f.to_string(), "0.33333");
        assert_eq!(c.to_string(), "0.33334");
        assert!(f.to_rational() <= q && q <= c.to_rational());
    }
}
