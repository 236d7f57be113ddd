//! Exact integer and rational helpers shared across the crate.
//!
//! Everything is arbitrary precision from the start; the inputs are tiny
//! (n rarely exceeds 12) but many of the identities checked here fail
//! silently under floating point or machine-width overflow.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient C(n; parts) with the convention that unused
/// weight goes to an implicit final block.
pub fn multinomial(n: usize, parts: &[usize]) -> BigInt {
    let mut acc = BigInt::one();
    let mut rem = n;
    for &p in parts {
        if p > rem {
            return BigInt::zero();
        }
        acc *= binomial(rem, p);
        rem -= p;
    }
    acc
}

/// Double factorial k!! with the conventions (-1)!! = 0!! = 1.
///
/// Both conventions are load bearing: (2b-3)!! is evaluated at b = 1 by the
/// near-hook formulas and must come out as 1.
pub fn double_factorial(k: i64) -> BigInt {
    assert!(k >= -1, "double factorial undefined below -1, got {k}");
    let mut acc = BigInt::one();
    let mut v = k;
    while v > 1 {
        acc *= v;
        v -= 2;
    }
    acc
}

/// (2k - 1)!! = 1 * 3 * ... * (2k - 1), the number of perfect matchings of 2k points.
pub fn odd_double_factorial(k: usize) -> BigInt {
    double_factorial(2 * k as i64 - 1)
}

/// 2^k as a big integer.
pub fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

/// Wrap an integer as an exact rational.
pub fn ratio(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Exact quotient a/b as a rational; b must be nonzero.
pub fn frac(a: BigInt, b: BigInt) -> BigRational {
    BigRational::new(a, b)
}

/// Extract the integer value of a rational, panicking when the denominator
/// is not 1. Used to enforce integrality claims on sums of rationals.
pub fn expect_integer(q: &BigRational, context: &str) -> BigInt {
    assert!(
        q.is_integer(),
        "{context}: expected an integer, got {}",
        q
    );
    q.numer().clone()
}

/// Render a rational as `p/q`, or as a bare integer when the denominator is 1.
pub fn format_exact(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(q: &BigRational) -> bool {
    q.is_integer() && !q.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(multinomial(4, &[2, 1, 1]), BigInt::from(12));
    }

    #[test]
    fn double_factorial_conventions() {
        assert_eq!(double_factorial(-1), BigInt::one());
        assert_eq!(double_factorial(0), BigInt::one());
        assert_eq!(double_factorial(5), BigInt::from(15));
        assert_eq!(double_factorial(6), BigInt::from(48));
        assert_eq!(odd_double_factorial(5), BigInt::from(945));
    }

    #[test]
    fn format_round_trips() {
        let q = frac(BigInt::from(9), BigInt::from(35));
        let s = format_exact(&q);
        assert_eq!(s, "9/35");
        assert_eq!(BigRational::from_str(&s).unwrap(), q);
        let i = ratio(BigInt::from(-4));
        assert_eq!(format_exact(&i), "-4");
    }
}
