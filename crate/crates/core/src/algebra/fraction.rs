//! Rational function fields `F(x)`.

use super::{Field, Poly, PolyRing, QAlgebra, Rational, Ring};

/// `num / den` with `den` monic and coprime to `num`; zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<E> {
    num: Poly<E>,
    den: Poly<E>,
}

impl<E> RatFunc<E> {
    pub fn num(&self) -> &Poly<E> {
        &self.num
    }

    pub fn den(&self) -> &Poly<E> {
        &self.den
    }
}

#[derive(Clone, Debug)]
pub struct RationalFunctionField<F> {
    polys: PolyRing<F>,
}

impl<F: Field> RationalFunctionField<F> {
    pub fn new(base: F, var: &'static str) -> Self {
        RationalFunctionField {
            polys: PolyRing::new(base, var),
        }
    }

    pub fn polys(&self) -> &PolyRing<F> {
        &self.polys
    }

    pub fn base(&self) -> &F {
        self.polys.base()
    }

    /// Normalises `num / den`; `None` if `den` is zero.
    pub fn frac(&self, num: Poly<F::Elem>, den: Poly<F::Elem>) -> Option<RatFunc<F::Elem>> {
        let lc = den.leading()?.clone();
        if num.is_zero() {
            return Some(self.zero());
        }
        let g = self.polys.gcd(&num, &den);
        let (num, _) = self.polys.div_rem(&num, &g);
        let (den, _) = self.polys.div_rem(&den, &g);
        let lc_inv = self.base().inv(den.leading().unwrap_or(&lc))?;
        Some(RatFunc {
            num: self.polys.scale(&num, &lc_inv),
            den: self.polys.scale(&den, &lc_inv),
        })
    }

    pub fn from_poly(&self, p: Poly<F::Elem>) -> RatFunc<F::Elem> {
        RatFunc {
            num: p,
            den: self.polys.one(),
        }
    }

    pub fn constant(&self, c: F::Elem) -> RatFunc<F::Elem> {
        self.from_poly(self.polys.constant(c))
    }

    pub fn var(&self) -> RatFunc<F::Elem> {
        self.from_poly(self.polys.var())
    }

    /// Value at `x`; `None` at a pole.
    pub fn eval(&self, f: &RatFunc<F::Elem>, x: &F::Elem) -> Option<F::Elem> {
        let d = self.polys.eval(&f.den, x);
        self.base().div(&self.polys.eval(&f.num, x), &d)
    }

    /// `max(deg num, deg den)`, the degree of `f` as a map of the line.
    pub fn map_degree(&self, f: &RatFunc<F::Elem>) -> usize {
        f.num.degree().unwrap_or(0).max(f.den.degree().unwrap_or(0))
    }

    /// Applies a coefficient homomorphism to another field; `None` if the
    /// denominator maps to zero.
    pub fn try_map<G: Field>(
        &self,
        f: &RatFunc<F::Elem>,
        target: &RationalFunctionField<G>,
        func: impl Fn(&F::Elem) -> Option<G::Elem>,
    ) -> Option<RatFunc<G::Elem>> {
        let num = self.polys.try_map(&f.num, &target.polys, &func)?;
        let den = self.polys.try_map(&f.den, &target.polys, &func)?;
        target.frac(num, den)
    }
}

impl<F: Field> Ring for RationalFunctionField<F> {
    type Elem = RatFunc<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.from_poly(self.polys.zero())
    }

    fn one(&self) -> Self::Elem {
        self.from_poly(self.polys.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.den == b.den {
            return self
                .frac(self.polys.add(&a.num, &b.num), a.den.clone())
                .expect("nonzero denominator");
        }
        let p = &self.polys;
        let num = p.add(&p.mul(&a.num, &b.den), &p.mul(&b.num, &a.den));
        self.frac(num, p.mul(&a.den, &b.den)).expect("nonzero denominator")
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc {
            num: self.polys.neg(&a.num),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        let p = &self.polys;
        // cross-cancel first to keep degrees small
        let g1 = p.gcd(&a.num, &b.den);
        let g2 = p.gcd(&b.num, &a.den);
        let an = p.div_rem(&a.num, &g1).0;
        let bd = p.div_rem(&b.den, &g1).0;
        let bn = p.div_rem(&b.num, &g2).0;
        let ad = p.div_rem(&a.den, &g2).0;
        let num = p.mul(&an, &bn);
        let den = p.mul(&ad, &bd);
        let inv = self.base().inv(den.leading().unwrap()).unwrap();
        RatFunc {
            num: p.scale(&num, &inv),
            den: p.scale(&den, &inv),
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_zero()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_poly(self.polys.from_int(n))
    }

    fn format(&self, a: &Self::Elem) -> String {
        if self.polys.is_one(&a.den) {
            self.polys.format(&a.num)
        } else {
            format!(
                "({}) / ({})",
                self.polys.format(&a.num),
                self.polys.format(&a.den)
            )
        }
    }
}

impl<F: Field> Field for RationalFunctionField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.frac(a.den.clone(), a.num.clone())
    }
}

impl<F: Field + QAlgebra> QAlgebra for RationalFunctionField<F> {
    fn from_rational(&self, q: &Rational) -> Self::Elem {
        self.constant(self.base().from_rational(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, rint, RationalField};

    #[test]
    fn normal_form() {
        let k = RationalFunctionField::new(RationalField, "t");
        let p = k.polys();
        // (t^2 - 1) / (2t - 2) = (t + 1) / 2 ... with monic denominator: (t/2 + 1/2) / 1
        let f = k.frac(p.from_ints(&[-1, 0, 1]), p.from_ints(&[-2, 2])).unwrap();
        assert_eq!(f.den(), &p.one());
        assert_eq!(f.num(), &p.from_coeffs(vec![ratio(1, 2), ratio(1, 2)]));
        assert!(k.frac(p.one(), p.zero()).is_none());
    }

    #[test]
    fn field_axioms_spot() {
        let k = RationalFunctionField::new(RationalField, "t");
        let t = k.var();
        let a = k.add(&t, &k.one());
        let b = k.inv(&k.sub(&t, &k.one())).unwrap();
        let prod = k.mul(&a, &b);
        assert_eq!(k.mul(&prod, &k.sub(&t, &k.one())), a);
        assert_eq!(k.eval(&b, &rint(1)), None);
        assert_eq!(k.eval(&prod, &rint(3)), Some(rint(2)));
    }
}
