use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Coefficient, Rational, UniPoly};

use crate::error::{Error, Result};

/// Φ_N with integer coefficients, constant term first.
///
/// Computed by exact division of t^N − 1 by every Φ_d with d | N, d < N.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    let divs: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut known: BTreeMap<u64, UniPoly> = BTreeMap::new();
    for &d in &divs {
        let mut num = UniPoly::monomial(d as usize).sub(&UniPoly::from_i64(&[1]));
        for (&e, phi) in known.iter().filter(|(&e, _)| d % e == 0) {
            debug_assert!(e < d);
            let (q, r) = num.div_rem(phi);
            debug_assert!(r.is_zero());
            num = q;
        }
        known.insert(d, num);
    }
    known[&n]
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

#[derive(Debug)]
struct FieldInner {
    order: u64,
    modulus: Vec<BigInt>,
    modulus_q: UniPoly,
    /// ζ^e reduced mod Φ_N for e = 0..N−1.
    powers: Vec<Vec<Rational>>,
}

/// Q(ζ_N) realised as Q[t]/(Φ_N). Cheap to clone; compared by order.
#[derive(Clone)]
pub struct CyclotomicField {
    inner: Arc<FieldInner>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.order == other.inner.order
    }
}

impl Eq for CyclotomicField {}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.inner.order)
    }
}

impl CyclotomicField {
    pub fn new(order: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("cyclotomic order must be >= 1".into()));
        }
        let modulus = cyclotomic_polynomial(order);
        let modulus_q = UniPoly::new(modulus.iter().cloned().map(Rational::from_integer).collect());
        let deg = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![Rational::zero(); deg];
        cur[0] = Rational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            cur = times_t(&cur, &modulus);
        }
        Ok(CyclotomicField {
            inner: Arc::new(FieldInner {
                order,
                modulus,
                modulus_q,
                powers,
            }),
        })
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// φ(N), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CyclotomicNumber {
        self.from_rational(Rational::one())
    }

    /// Embeds Q as constant coefficient vectors.
    pub fn from_rational(&self, r: Rational) -> CyclotomicNumber {
        let mut z = self.zero();
        z.coeffs[0] = r;
        z
    }

    /// Builds an element from a coefficient vector of any length, reducing it
    /// modulo Φ_N.
    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.clone(),
            coeffs: reduce(coeffs, &self.inner.modulus),
        }
    }

    /// ζ^e for any integer exponent.
    pub fn zeta_pow(&self, e: i64) -> CyclotomicNumber {
        let idx = e.rem_euclid(self.inner.order as i64) as usize;
        CyclotomicNumber {
            field: self.clone(),
            coeffs: self.inner.powers[idx].clone(),
        }
    }

    /// Σ_{m=0}^{N−1} ζ^{me}. Computed by literal summation and checked
    /// against the closed form (N if N | e, else 0).
    pub fn geometric_sum(&self, e: i64) -> CyclotomicNumber {
        let n = self.inner.order as i64;
        let mut acc = self.zero();
        for m in 0..n {
            acc = acc.add(&self.zeta_pow((m * e).rem_euclid(n)));
        }
        let closed = if e.rem_euclid(n) == 0 {
            self.from_rational(super::rat(n))
        } else {
            self.zero()
        };
        assert_eq!(acc, closed, "geometric sum disagrees with closed form");
        acc
    }
}

fn times_t(v: &[Rational], modulus: &[BigInt]) -> Vec<Rational> {
    let deg = v.len();
    let mut out = vec![Rational::zero(); deg];
    let top = v[deg - 1].clone();
    for i in (1..deg).rev() {
        out[i] = v[i - 1].clone();
    }
    if !top.is_zero() {
        for (i, o) in out.iter_mut().enumerate() {
            *o -= &top * Rational::from_integer(modulus[i].clone());
        }
    }
    out
}

fn reduce(mut coeffs: Vec<Rational>, modulus: &[BigInt]) -> Vec<Rational> {
    let deg = modulus.len() - 1;
    let mods: Vec<Rational> = modulus.iter().cloned().map(Rational::from_integer).collect();
    for i in (deg..coeffs.len()).rev() {
        let c = std::mem::take(&mut coeffs[i]);
        if c.is_zero() {
            continue;
        }
        for j in 0..deg {
            coeffs[i - deg + j] -= &c * &mods[j];
        }
    }
    coeffs.resize(deg, Rational::zero());
    coeffs
}

/// Element of Q(ζ_N), stored as the unique remainder modulo Φ_N.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    field: CyclotomicField,
    coeffs: Vec<Rational>,
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self.render(), self.field)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl CyclotomicNumber {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Coefficients of 1, ζ, …, ζ^{φ(N)−1}.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_field(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "mixing elements of {:?} and {:?}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        let deg = self.coeffs.len();
        let mut out = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        self.field.from_coeffs(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Φ_N.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Invariant: s_i * a ≡ r_i (mod Φ_N).
        let mut r0 = self.field.inner.modulus_q.clone();
        let mut r1 = UniPoly::new(self.coeffs.clone());
        let mut s0 = UniPoly::zero();
        let mut s1 = UniPoly::constant(Rational::one());
        while r1.degree().is_some_and(|d| d > 0) {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // Φ_N is irreducible, so the final remainder is a nonzero constant.
        let c = r1.leading().cloned().ok_or(Error::DivisionByZero)?;
        Ok(self.field.from_coeffs(s1.scale(&c.recip()).into_coeffs()))
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn render(&self) -> String {
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = abs.is_one();
            match (e, unit) {
                (0, _) => out.push_str(&abs.to_string()),
                (1, true) => out.push_str("zeta"),
                (1, false) => out.push_str(&format!("{abs}*zeta")),
                (_, true) => out.push_str(&format!("zeta^{e}")),
                (_, false) => out.push_str(&format!("{abs}*zeta^{e}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Coefficient for CyclotomicNumber {
    fn coeff_is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
    fn coeff_is_one(&self) -> bool {
        self.to_rational().is_some_and(|r| r.is_one())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn inv_checked(&self) -> Option<Self> {
        self.invert().ok()
    }
    fn scale(&self, r: &Rational) -> Self {
        CyclotomicNumber::scale(self, r)
    }
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn to_rational(&self) -> Option<Rational> {
        CyclotomicNumber::to_rational(self)
    }
    fn render(&self) -> String {
        let s = CyclotomicNumber::render(self);
        if self.to_rational().is_some() {
            s
        } else {
            format!("({s})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Independent oracle: Φ_N as the product over primitive roots would need
    /// complex numbers, so use the Möbius form Π_{d|N} (t^d − 1)^{μ(N/d)}.
    fn mobius(n: u64) -> i64 {
        let mut n = n;
        let mut result = 1;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if n > 1 {
            result = -result;
        }
        result
    }

    fn mobius_cyclotomic(n: u64) -> Vec<BigInt> {
        let mut num = UniPoly::from_i64(&[1]);
        let mut den = UniPoly::from_i64(&[1]);
        for d in (1..=n).filter(|d| n % d == 0) {
            let f = UniPoly::monomial(d as usize).sub(&UniPoly::from_i64(&[1]));
            match mobius(n / d) {
                1 => num = num.mul(&f),
                -1 => den = den.mul(&f),
                _ => {}
            }
        }
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero());
        q.coeffs().iter().map(|c| c.to_integer()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(7), ints(&[1; 7]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn matches_mobius_oracle() {
        for n in 1..=60 {
            assert_eq!(cyclotomic_polynomial(n), mobius_cyclotomic(n), "N = {n}");
        }
    }

    #[test]
    fn zeta_powers() {
        let f2 = CyclotomicField::new(2).unwrap();
        assert_eq!(f2.zeta_pow(1), f2.from_rational(rat(-1)));
        let f3 = CyclotomicField::new(3).unwrap();
        assert_eq!(f3.zeta_pow(3), f3.one());
        let f4 = CyclotomicField::new(4).unwrap();
        assert_eq!(f4.zeta_pow(2), f4.from_rational(rat(-1)));
        assert_eq!(f4.zeta_pow(1).mul(&f4.zeta_pow(1)), f4.from_rational(rat(-1)));
        assert_eq!(f4.zeta_pow(-1), f4.zeta_pow(3));
    }

    #[test]
    fn inverse_in_q_zeta3() {
        let f3 = CyclotomicField::new(3).unwrap();
        let one_plus_zeta = f3.one().add(&f3.zeta_pow(1));
        let minus_zeta = f3.zeta_pow(1).neg();
        assert_eq!(one_plus_zeta.mul(&minus_zeta), f3.one());
        assert_eq!(one_plus_zeta.invert().unwrap(), minus_zeta);
        assert_eq!(f3.one().invert().unwrap(), f3.one());
        assert_eq!(f3.zero().invert(), Err(Error::DivisionByZero));
    }

    #[test]
    fn geometric_sums() {
        let f3 = CyclotomicField::new(3).unwrap();
        assert!(f3.geometric_sum(1).is_zero());
        assert_eq!(f3.geometric_sum(3), f3.from_rational(rat(3)));
        let f7 = CyclotomicField::new(7).unwrap();
        assert!(f7.geometric_sum(4).is_zero());
    }

    #[test]
    fn order_one_field() {
        let f1 = CyclotomicField::new(1).unwrap();
        assert_eq!(f1.degree(), 1);
        assert_eq!(f1.zeta_pow(5), f1.one());
        assert_eq!(f1.geometric_sum(2), f1.one());
    }

    #[test]
    fn modulus_vanishes_at_zeta() {
        for n in 1..=30u64 {
            let f = CyclotomicField::new(n).unwrap();
            let mut acc = f.zero();
            for (i, c) in f.modulus().iter().enumerate() {
                acc = acc.add(&f.zeta_pow(i as i64).scale(&Rational::from_integer(c.clone())));
            }
            assert!(acc.is_zero(), "Φ_{n}(ζ) != 0");
        }
    }
}
