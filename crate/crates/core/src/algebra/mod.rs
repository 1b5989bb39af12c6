//! Exact scalar and polynomial arithmetic.
//!
//! Rings are runtime objects (a prime field needs its modulus, a polynomial
//! ring its base ring) and elements are plain values. Every operation goes
//! through the ring, so the same generic code runs over `Q`, `F_p`,
//! `F_{p^k}`, `Q[A]`, `Q(A)` and nested polynomial rings such as `Q[A][t]`.

mod character;
mod ext_field;
mod fraction;
mod poly;
mod prime_field;
mod quadratic;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use character::quadratic_character;
pub use ext_field::{find_irreducible, is_irreducible, ExtField};
pub(crate) use ext_field::prime_divisors;
pub(crate) use prime_field::pow_mod;
pub use fraction::{RatFunc, RationalFunctionField};
pub use poly::{poly_gcd, reduce_mod_ideal, Poly, PolyRing};
pub use prime_field::{is_prime_u64, PrimeField};
pub use quadratic::{QuadElem, QuadraticExtension};
pub use rational::{
    parse_rational, rational_nth_root, rational_sqrt, ratio, rint, Rational, RationalField,
};

/// A commutative ring with identity.
pub trait Ring: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Elements are stored canonically, so zero-testing is an equality test.
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        let mut acc = self.zero();
        let mut base = self.one();
        let mut m = n.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            m >>= 1;
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    fn format(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    /// Wraps a value for operator-style arithmetic.
    fn el(&self, v: Self::Elem) -> El<'_, Self>
    where
        Self: Sized,
    {
        El { ring: self, val: v }
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A finite field with an explicit enumeration of its elements.
pub trait FiniteField: Field {
    fn characteristic(&self) -> u64;
    fn size(&self) -> u64;
    /// Bijection `[0, size) -> field`; index 0 is zero.
    fn element(&self, index: u64) -> Self::Elem;
    /// Embeds an integer through the prime field.
    fn from_u64(&self, n: u64) -> Self::Elem;

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.size()).map(move |i| self.element(i)))
    }
}

/// Rings containing `Q`.
pub trait QAlgebra: Ring {
    fn from_rational(&self, q: &Rational) -> Self::Elem;
}

/// A ring element bundled with its ring, for readable formulas.
pub struct El<'r, R: Ring> {
    ring: &'r R,
    val: R::Elem,
}

impl<'r, R: Ring> Clone for El<'r, R> {
    fn clone(&self) -> Self {
        El {
            ring: self.ring,
            val: self.val.clone(),
        }
    }
}

impl<'r, R: Ring> fmt::Debug for El<'r, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.format(&self.val))
    }
}

impl<'r, R: Ring> El<'r, R> {
    pub fn val(&self) -> &R::Elem {
        &self.val
    }

    pub fn into_val(self) -> R::Elem {
        self.val
    }

    pub fn pow(&self, e: u64) -> Self {
        self.ring.el(self.ring.pow(&self.val, e))
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.val)
    }

    pub fn int(&self, n: i64) -> Self {
        self.ring.el(self.ring.from_int(n))
    }
}

macro_rules! el_binop {
    ($tr:ident, $method:ident) => {
        impl<'r, R: Ring> $tr<El<'r, R>> for El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: El<'r, R>) -> El<'r, R> {
                self.ring.el(self.ring.$method(&self.val, &rhs.val))
            }
        }
        impl<'a, 'r, R: Ring> $tr<&'a El<'r, R>> for El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: &'a El<'r, R>) -> El<'r, R> {
                self.ring.el(self.ring.$method(&self.val, &rhs.val))
            }
        }
        impl<'a, 'r, R: Ring> $tr<&'a El<'r, R>> for &'a El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: &'a El<'r, R>) -> El<'r, R> {
                self.ring.el(self.ring.$method(&self.val, &rhs.val))
            }
        }
        impl<'a, 'r, R: Ring> $tr<El<'r, R>> for &'a El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: El<'r, R>) -> El<'r, R> {
                self.ring.el(self.ring.$method(&self.val, &rhs.val))
            }
        }
        impl<'r, R: Ring> $tr<i64> for El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: i64) -> El<'r, R> {
                let r = self.ring.from_int(rhs);
                self.ring.el(self.ring.$method(&self.val, &r))
            }
        }
        impl<'a, 'r, R: Ring> $tr<i64> for &'a El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: i64) -> El<'r, R> {
                let r = self.ring.from_int(rhs);
                self.ring.el(self.ring.$method(&self.val, &r))
            }
        }
    };
}

el_binop!(Add, add);
el_binop!(Sub, sub);
el_binop!(Mul, mul);

impl<'r, R: Ring> Neg for El<'r, R> {
    type Output = El<'r, R>;
    fn neg(self) -> El<'r, R> {
        self.ring.el(self.ring.neg(&self.val))
    }
}

impl<'a, 'r, R: Ring> Neg for &'a El<'r, R> {
    type Output = El<'r, R>;
    fn neg(self) -> El<'r, R> {
        self.ring.el(self.ring.neg(&self.val))
    }
}

impl<'r, R: Ring> PartialEq for El<'r, R> {
    fn eq(&self, other: &Self) -> bool {
        self.val == other.val
    }
}
