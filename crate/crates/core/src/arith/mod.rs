//! Exact arithmetic: rationals, dense univariate polynomials over Q, and the
//! cyclotomic fields Q(ζ_N).

mod cyclotomic;
mod univariate;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicField, CyclotomicNumber};
pub use univariate::UniPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Positive divisors of `|n|`, ascending. `n` must be nonzero.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    debug_assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Coefficient rings usable inside [`crate::poly::Polynomial`]: Q and Q(ζ_N).
///
/// There is no context-free zero, so callers that need one construct it
/// from an existing value via [`Coefficient::zero_like`].
pub trait Coefficient: Clone + PartialEq + Eq + std::fmt::Debug + Send + Sync {
    fn coeff_is_zero(&self) -> bool;
    fn coeff_is_one(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv_checked(&self) -> Option<Self>;
    /// Multiply by a rational scalar.
    fn scale(&self, r: &Rational) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Returns the value when it lies in Q.
    fn to_rational(&self) -> Option<Rational>;
    fn render(&self) -> String;
    /// Splits off a leading minus sign for printing: `(negative, magnitude)`.
    fn sign_split(&self) -> (bool, Self) {
        (false, self.clone())
    }
}

impl Coefficient for Rational {
    fn coeff_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn coeff_is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv_checked(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn sign_split(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_canonical() {
        let r = rat_frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat_frac(0, 7), rat(0));
        assert_eq!(rat(0).denom(), &BigInt::one());
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("-3/6"), Some(rat_frac(-1, 2)));
        assert_eq!(parse_rational("12"), Some(rat(12)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn divisors_of_twelve() {
        let ds: Vec<i64> = divisors(&BigInt::from(-12))
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 12]);
    }
}
