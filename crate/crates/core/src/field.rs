//! Exact ground fields: arbitrary-precision rationals and prime fields.
//!
//! Every scalar carries enough information to perform arithmetic on its own;
//! mixing scalars from different fields is a programming error and panics.
//! Rationals are kept in lowest terms with a positive denominator and prime
//! field elements are canonical in `[0, p)`, so scalar equality is literal
//! equality of representatives.

use alloc::string::String;
use alloc::string::ToString;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("denominator {0} is divisible by the field characteristic")]
    NonInvertibleDenominator(u64),
}

/// A choice of exact ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// The prime field with the given number of elements.
    Fp(u64),
}

impl Field {
    /// Builds `Fp(p)`, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if is_prime_u64(p) {
            Ok(Field::Fp(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { value: 1 % *p, modulus: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { value: m, modulus: *p }
            }
        }
    }

    /// The scalar `num/den`. Over `Fp` the denominator must be invertible.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        assert!(den != 0, "zero denominator");
        match self {
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Field::Fp(p) => {
                let d = self.from_i64(den);
                let inv = d.inverse().ok_or(FieldError::NonInvertibleDenominator(*p))?;
                Ok(self.from_i64(num).mul(&inv))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of the chosen ground field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Fp { modulus, .. } => Field::Fp(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { value: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => panic!("mixed ground fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { value, modulus } => {
                Scalar::Fp { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { value: ((*a as u128 * *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => panic!("mixed ground fields"),
        }
    }

    /// Multiplicative inverse; `None` exactly on zero.
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(a.recip()))
                }
            }
            Scalar::Fp { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Fp { value: mod_inverse(*value, *modulus), modulus: *modulus })
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inverse().expect("division by zero"))
    }

    /// Renders the scalar in the file-format syntax: `a/b` or `a` over the
    /// rationals, the canonical representative over a prime field.
    pub fn literal(&self) -> String {
        match self {
            Scalar::Rat(r) => r.to_string(),
            Scalar::Fp { value, .. } => value.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit; p is prime and a != 0 mod p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "element not invertible");
    t.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // this witness set decides primality for all n < 2^64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let f = Field::Rationals;
        let x = f.from_ratio(4, -6).unwrap();
        assert_eq!(x.literal(), "-2/3");
        let y = f.from_ratio(-4, -2).unwrap();
        assert_eq!(y.literal(), "2");
    }

    #[test]
    fn field_axioms_spot_checks() {
        for field in [Field::Rationals, Field::prime(7).unwrap()] {
            for n in -5i64..=5 {
                let a = field.from_i64(n);
                assert!(a.add(&a.neg()).is_zero());
                if !a.is_zero() {
                    assert!(a.mul(&a.inverse().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn fp_canonical_range() {
        let f = Field::prime(5).unwrap();
        let x = f.from_i64(-3);
        assert_eq!(x, Scalar::Fp { value: 2, modulus: 5 });
        assert_eq!(f.from_i64(12), f.from_i64(2));
    }

    #[test]
    fn primality() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(101).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(91).is_err());
        assert!(Field::prime((1u64 << 31) - 1).is_ok());
    }

    #[test]
    fn fp_ratio_literal() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_ratio(1, 2).unwrap(), f.from_i64(3)); // 2*3 = 1 mod 5
        assert!(f.from_ratio(1, 5).is_err());
    }
}
