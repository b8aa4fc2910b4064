//! Exact field elements: rationals in lowest terms and prime-field residues.
//!
//! Every value carries its field tag. The two canonical literal forms are
//! `a` / `a/b` (lowest terms, `b >= 2`) over Q and a decimal residue in
//! `0..p-1` over GF(p). Non-canonical text is rejected, never normalized.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;

use crate::error::{Error, Result};

/// The ground field: the rationals or a prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Q,
    GF(u64),
}

impl FieldTag {
    /// Characteristic of the field (0 for Q).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldTag::Q => 0,
            FieldTag::GF(p) => *p,
        }
    }

    /// Checks the primality requirement on GF(p) tags.
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldTag::Q => Ok(()),
            FieldTag::GF(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(Error::NotPrime(*p))
                }
            }
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Q => write!(f, "Q"),
            FieldTag::GF(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of Q or of GF(p).
///
/// Rationals are kept in lowest terms with positive denominator (the
/// `BigRational` representation guarantees this); residues are kept in
/// `0..p-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Q,
            Scalar::Modular { p, .. } => FieldTag::GF(*p),
        }
    }

    pub fn zero(field: FieldTag) -> Self {
        Scalar::from_integer(field, 0)
    }

    pub fn one(field: FieldTag) -> Self {
        Scalar::from_integer(field, 1)
    }

    /// Image of an integer in the field.
    pub fn from_integer(field: FieldTag, n: i64) -> Self {
        match field {
            FieldTag::Q => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldTag::GF(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Modular { p, value: r }
            }
        }
    }

    /// Rational a/b over Q. Panics if b = 0.
    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    fn expect_same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "mixed-field scalar arithmetic; matrices must be validated at construction"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.expect_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { p, value: a }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    p: *p,
                    value: ((*a as u128 + *b as u128) % (*p as u128)) as u64,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.expect_same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { p, value: a }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    p: *p,
                    value: ((*a as u128 * *b as u128) % (*p as u128)) as u64,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { p, value } => Scalar::Modular {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    /// Multiplicative inverse; None for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Modular { p, value } => Scalar::Modular {
                p: *p,
                value: mod_inverse(*value, *p),
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        let inv = other
            .inverse()
            .ok_or_else(|| Error::DivisionByZero("scalar division".into()))?;
        Ok(self.mul(&inv))
    }

    /// Parses a canonical literal in the given field.
    ///
    /// Over Q the accepted forms are `a` and `a/b` with the fraction in
    /// lowest terms and `b >= 2`; over GF(p) a plain residue in `0..p-1`.
    /// Anything else (including `2/4`, `3/1`, `-0`, leading zeros, or an
    /// out-of-range residue) is an error.
    pub fn parse_canonical(field: FieldTag, text: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::BadLiteral {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        match field {
            FieldTag::Q => {
                let (num_text, den_text) = match text.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (text, None),
                };
                let num = parse_canonical_int(num_text).ok_or_else(|| bad("bad numerator"))?;
                match den_text {
                    None => Ok(Scalar::Rational(BigRational::from_integer(num))),
                    Some(d) => {
                        let den = parse_canonical_int(d).ok_or_else(|| bad("bad denominator"))?;
                        if den.is_negative() || den.is_zero() {
                            return Err(bad("denominator must be positive"));
                        }
                        if den.is_one() {
                            return Err(bad("denominator 1 must be written without `/`"));
                        }
                        if num.gcd(&den) != BigInt::one() {
                            return Err(bad("not in lowest terms"));
                        }
                        Ok(Scalar::Rational(BigRational::new(num, den)))
                    }
                }
            }
            FieldTag::GF(p) => {
                if text.starts_with('-') || text.starts_with('+') {
                    return Err(bad("GF(p) residues carry no sign"));
                }
                let value = parse_canonical_int(text).ok_or_else(|| bad("bad residue"))?;
                let value: u64 = value
                    .try_into()
                    .map_err(|_| bad("residue out of range"))?;
                if value >= p {
                    return Err(bad(&format!("residue must lie in 0..{}", p - 1)));
                }
                Ok(Scalar::Modular { p, value })
            }
        }
    }

    /// Re-derives the reduced form and compares; used by invariant tests.
    pub fn is_reduced(&self) -> bool {
        match self {
            Scalar::Rational(r) => {
                let renorm = BigRational::new(r.numer().clone(), r.denom().clone());
                renorm.numer() == r.numer() && renorm.denom() == r.denom() && r.denom().is_positive()
            }
            Scalar::Modular { p, value } => value < p,
        }
    }
}

/// Strict canonical integer: `0` or `[-]?[1-9][0-9]*`.
fn parse_canonical_int(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if text.starts_with('-') && digits == "0" {
        return None;
    }
    text.parse().ok()
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); p prime and a nonzero mod p
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of a non-unit mod {p}");
    s0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf_arithmetic_wraps() {
        let two = Scalar::from_integer(FieldTag::GF(3), 2);
        assert_eq!(two.add(&two), Scalar::from_integer(FieldTag::GF(3), 1));
        assert_eq!(two.mul(&two), Scalar::from_integer(FieldTag::GF(3), 1));
        assert_eq!(two.neg(), Scalar::from_integer(FieldTag::GF(3), 1));
        assert_eq!(two.inverse(), Some(Scalar::from_integer(FieldTag::GF(3), 2)));
    }

    #[test]
    fn rational_stays_reduced() {
        let x = Scalar::rational(2, 4);
        assert_eq!(x.to_string(), "1/2");
        let y = Scalar::rational(1, -2);
        assert_eq!(y.to_string(), "-1/2");
        assert!(x.is_reduced() && y.is_reduced());
    }

    #[test]
    fn canonical_literals_round_trip() {
        for text in ["0", "5", "-3", "1/2", "-7/3"] {
            let s = Scalar::parse_canonical(FieldTag::Q, text).unwrap();
            assert_eq!(s.to_string(), text);
        }
        for text in ["0", "1", "2"] {
            let s = Scalar::parse_canonical(FieldTag::GF(3), text).unwrap();
            assert_eq!(s.to_string(), text);
        }
    }

    #[test]
    fn non_canonical_literals_rejected() {
        for text in ["2/4", "3/1", "-0", "01", "1/-2", "1/0", "", "+1", "a"] {
            assert!(
                Scalar::parse_canonical(FieldTag::Q, text).is_err(),
                "accepted {text:?}"
            );
        }
        for text in ["3", "-1", "02", "1/2"] {
            assert!(Scalar::parse_canonical(FieldTag::GF(3), text).is_err());
        }
    }

    #[test]
    fn field_tag_primality() {
        assert!(FieldTag::GF(2).validate().is_ok());
        assert!(FieldTag::GF(97).validate().is_ok());
        assert!(FieldTag::GF(1).validate().is_err());
        assert!(FieldTag::GF(6).validate().is_err());
    }

    #[test]
    fn division_by_zero_reported() {
        let one = Scalar::one(FieldTag::Q);
        let zero = Scalar::zero(FieldTag::Q);
        assert!(one.div(&zero).is_err());
        assert_eq!(one.div(&one).unwrap(), one);
    }
}
