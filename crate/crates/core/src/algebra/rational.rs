use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Field, QAlgebra, Ring};
use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the integer `n` as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/m"` in base 10.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Exact `n`-th root of a rational, if it exists. For even `n` the
/// non-negative root is returned.
pub fn rational_nth_root(q: &Rational, n: u32) -> Option<Rational> {
    if q.is_negative() && n % 2 == 0 {
        return None;
    }
    let root = |z: &BigInt| -> Option<BigInt> {
        let r = z.abs().nth_root(n);
        let r = if z.is_negative() { -r } else { r };
        (num_traits::pow(r.clone(), n as usize) == *z).then_some(r)
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    rational_nth_root(q, 2)
}

/// Residue of `q` modulo the prime `p`, or `None` when `p` divides the
/// denominator.
pub(crate) fn reduce_mod(q: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let residue = |z: &BigInt| -> u64 {
        let r = z.mod_floor(&pb);
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    };
    let den = residue(q.denom());
    if den == 0 {
        return None;
    }
    let num = residue(q.numer());
    let inv = super::prime_field::inv_mod(den, p)?;
    Some(((num as u128 * inv as u128) % p as u128) as u64)
}

/// The field `Q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn from_int(&self, n: i64) -> Rational {
        rint(n)
    }
    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }
}

impl Field for RationalField {
    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

impl QAlgebra for RationalField {
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("6912/5").unwrap(), ratio(6912, 5));
        assert_eq!(parse_rational("-27").unwrap(), rint(-27));
        assert_eq!(parse_rational("4/-6").unwrap(), ratio(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn canonical_zero() {
        let z = parse_rational("0/7").unwrap();
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn roots() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&ratio(2, 1)), None);
        assert_eq!(rational_sqrt(&ratio(-4, 1)), None);
        assert_eq!(rational_nth_root(&ratio(-27, 8), 3), Some(ratio(-3, 2)));
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_mod(&rint(-27), 7), Some(1));
        assert_eq!(reduce_mod(&ratio(1, 2), 7), Some(4));
        assert_eq!(reduce_mod(&ratio(1, 7), 7), None);
    }
}
