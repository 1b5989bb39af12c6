//! Dense univariate polynomials over an arbitrary ring.
//!
//! Coefficients are stored in ascending degree order; the vector never ends
//! in a zero coefficient, so the zero polynomial is the empty vector.
//! Multivariate rings are built by nesting, e.g. `Q[A][t]` is
//! `PolyRing<PolyRing<RationalField>>` with `t` the outer variable.

use std::fmt::Write as _;

use super::{Field, QAlgebra, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

#[derive(Clone, Debug)]
pub struct PolyRing<R> {
    base: R,
    var: &'static str,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: &'static str) -> Self {
        PolyRing { base, var }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var_name(&self) -> &'static str {
        self.var
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> Poly<R::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_int(c)).collect())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn monomial(&self, c: R::Elem, deg: usize) -> Poly<R::Elem> {
        let mut v = vec![self.base.zero(); deg];
        v.push(c);
        self.from_coeffs(v)
    }

    /// The variable of this ring.
    pub fn var(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, f: &Poly<R::Elem>, i: usize) -> R::Elem {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn is_monic(&self, f: &Poly<R::Elem>) -> bool {
        f.leading().is_some_and(|c| self.base.is_one(c))
    }

    pub fn scale(&self, f: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// Multiplication by `x^n`.
    pub fn shift(&self, f: &Poly<R::Elem>, n: usize) -> Poly<R::Elem> {
        if f.is_zero() {
            return f.clone();
        }
        let mut v = vec![self.base.zero(); n];
        v.extend(f.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn eval(&self, f: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        f.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| {
                self.base.add(&self.base.mul(&acc, x), c)
            })
    }

    /// Evaluates `f` at `x` in another ring `S`, mapping coefficients with
    /// `embed`.
    pub fn eval_in<S: Ring>(
        &self,
        f: &Poly<R::Elem>,
        target: &S,
        x: &S::Elem,
        embed: impl Fn(&R::Elem) -> S::Elem,
    ) -> S::Elem {
        f.coeffs.iter().rev().fold(target.zero(), |acc, c| {
            target.add(&target.mul(&acc, x), &embed(c))
        })
    }

    /// `f(g)`.
    pub fn compose(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.eval_in(f, self, g, |c| self.constant(c.clone()))
    }

    pub fn map<S: Ring>(
        &self,
        f: &Poly<R::Elem>,
        target: &PolyRing<S>,
        func: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.from_coeffs(f.coeffs.iter().map(func).collect())
    }

    /// Like [`PolyRing::map`] with a fallible coefficient map.
    pub fn try_map<S: Ring>(
        &self,
        f: &Poly<R::Elem>,
        target: &PolyRing<S>,
        func: impl Fn(&R::Elem) -> Option<S::Elem>,
    ) -> Option<Poly<S::Elem>> {
        let v = f.coeffs.iter().map(func).collect::<Option<Vec<_>>>()?;
        Some(target.from_coeffs(v))
    }

    pub fn derivative(&self, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(
            f.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(c, &self.base.from_int(i as i64)))
                .collect(),
        )
    }

    /// Division by a monic polynomial; valid over any ring.
    pub fn div_rem_monic(
        &self,
        f: &Poly<R::Elem>,
        g: &Poly<R::Elem>,
    ) -> Result<(Poly<R::Elem>, Poly<R::Elem>)> {
        if !self.is_monic(g) {
            return Err(Error::NotMonic);
        }
        let dg = g.coeffs.len() - 1;
        let mut rem = f.coeffs.clone();
        if rem.len() <= dg {
            return Ok((Poly { coeffs: vec![] }, f.clone()));
        }
        let mut quot = vec![self.base.zero(); rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            let c = rem[i].clone();
            if self.base.is_zero(&c) {
                continue;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                let sub = self.base.mul(&c, gc);
                rem[i - dg + j] = self.base.sub(&rem[i - dg + j], &sub);
            }
            quot[i - dg] = c;
        }
        rem.truncate(dg);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn format_with(&self, f: &Poly<R::Elem>, fmt_coeff: impl Fn(&R::Elem) -> String) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in f.coeffs.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let cs = fmt_coeff(c);
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            match i {
                0 => out.push_str(&cs),
                _ => {
                    if !self.base.is_one(c) {
                        let _ = write!(out, "{cs}*");
                    }
                    out.push_str(self.var);
                    if i > 1 {
                        let _ = write!(out, "^{i}");
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> PolyRing<F> {
    /// Euclidean division; `g` must be nonzero.
    pub fn div_rem(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let lc = g.leading().expect("division by the zero polynomial");
        let inv = self.base.inv(lc).expect("leading coefficient is invertible");
        let monic = self.scale(g, &inv);
        let (q, r) = self
            .div_rem_monic(f, &monic)
            .expect("scaled divisor is monic");
        (self.scale(&q, &inv), r)
    }

    pub fn rem(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.div_rem(f, g).1
    }

    pub fn make_monic(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        match f.leading() {
            None => f.clone(),
            Some(lc) => self.scale(f, &self.base.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn gcd(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = std::mem::replace(&mut b, r);
        }
        self.make_monic(&a)
    }

    pub fn is_squarefree(&self, f: &Poly<F::Elem>) -> bool {
        let d = self.gcd(f, &self.derivative(f));
        d.degree() == Some(0)
    }

    /// `base^e mod m`.
    pub fn pow_mod(&self, base: &Poly<F::Elem>, mut e: u64, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.rem(&self.one(), m);
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), m);
            }
            e >>= 1;
            if e > 0 {
                b = self.rem(&self.mul(&b, &b), m);
            }
        }
        acc
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly { coeffs: vec![] }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let v = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(v)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let v = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.sub(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => self.base.neg(y),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(v)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut v = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                let p = self.base.mul(x, y);
                v[i + j] = self.base.add(&v[i + j], &p);
            }
        }
        self.from_coeffs(v)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }

    fn format(&self, a: &Self::Elem) -> String {
        self.format_with(a, |c| self.base.format(c))
    }
}

impl<R: QAlgebra> QAlgebra for PolyRing<R> {
    fn from_rational(&self, q: &Rational) -> Self::Elem {
        self.constant(self.base.from_rational(q))
    }
}

/// Monic greatest common divisor of two polynomials over a field; `1` when
/// they are coprime and `0` only when both inputs are zero.
pub fn poly_gcd<F: Field>(ring: &PolyRing<F>, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
    ring.gcd(f, g)
}

/// Remainder of `f` under iterated division by `g` in the outer variable.
///
/// `g` must be monic in that variable (its other coefficients may involve
/// the inner variables); the remainder has degree `< deg g` and `f` minus it
/// is a multiple of `g`.
pub fn reduce_mod_ideal<R: Ring>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
) -> Result<Poly<R::Elem>> {
    Ok(ring.div_rem_monic(f, g)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, RationalField};
    use proptest::prelude::*;

    fn qx() -> PolyRing<RationalField> {
        PolyRing::new(RationalField, "x")
    }

    #[test]
    fn gcd_examples() {
        let r = qx();
        // gcd(x^2 - 1, x - 1) = x - 1
        let g = poly_gcd(&r, &r.from_ints(&[-1, 0, 1]), &r.from_ints(&[-1, 1]));
        assert_eq!(g, r.from_ints(&[-1, 1]));
        // x^3 - x is squarefree
        let f = r.from_ints(&[0, -1, 0, 1]);
        assert_eq!(poly_gcd(&r, &f, &r.from_ints(&[-1, 0, 3])), r.one());
        // gcd(x^2, x^3) = x^2
        let g = poly_gcd(&r, &r.from_ints(&[0, 0, 1]), &r.from_ints(&[0, 0, 0, 1]));
        assert_eq!(g, r.from_ints(&[0, 0, 1]));
    }

    #[test]
    fn gcd_of_zero_and_nonzero_is_monic() {
        use crate::algebra::{ratio, rint};
        let r = qx();
        let g = poly_gcd(&r, &r.zero(), &r.from_ints(&[2, 4]));
        assert_eq!(g, r.from_coeffs(vec![ratio(1, 2), rint(1)]));
    }

    #[test]
    fn zero_is_normalised() {
        let r = qx();
        let f = r.from_ints(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert_eq!(r.sub(&f, &f), r.zero());
        assert_eq!(r.zero().degree(), None);
    }

    #[test]
    fn reduce_requires_monic() {
        let r = qx();
        assert_eq!(
            reduce_mod_ideal(&r, &r.from_ints(&[1, 1, 1]), &r.from_ints(&[1, 2])),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn derivative_and_compose() {
        let r = qx();
        let f = r.from_ints(&[1, 0, 3, 1]);
        assert_eq!(r.derivative(&f), r.from_ints(&[0, 6, 3]));
        let g = r.from_ints(&[1, 1]);
        // (x+1)^2 composed: f(x+1) = 1 + 3(x+1)^2 + (x+1)^3
        let expect = r.add(
            &r.add(&r.one(), &r.scale(&r.pow(&g, 2), &crate::algebra::rint(3))),
            &r.pow(&g, 3),
        );
        assert_eq!(r.compose(&f, &g), expect);
    }

    fn fp_poly() -> impl Strategy<Value = Vec<u64>> {
        prop::collection::vec(0u64..13, 0..8)
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in fp_poly(), b in fp_poly()) {
            let r = PolyRing::new(PrimeField::new(13).unwrap(), "x");
            let f = r.from_coeffs(a);
            let g = r.from_coeffs(b);
            let d = r.gcd(&f, &g);
            if !d.is_zero() {
                prop_assert!(r.is_monic(&d));
                prop_assert!(r.rem(&f, &d).is_zero());
                prop_assert!(r.rem(&g, &d).is_zero());
            } else {
                prop_assert!(f.is_zero() && g.is_zero());
            }
        }

        #[test]
        fn division_identity(a in fp_poly(), b in fp_poly()) {
            let r = PolyRing::new(PrimeField::new(13).unwrap(), "x");
            let f = r.from_coeffs(a);
            let g = r.from_coeffs(b);
            prop_assume!(!g.is_zero());
            let (q, rem) = r.div_rem(&f, &g);
            prop_assert_eq!(r.add(&r.mul(&q, &g), &rem), f);
            prop_assert!(rem.degree() < g.degree());
        }
    }
}
