use super::{Field, QAlgebra, Rational, Ring};

/// `a + b * sqrt(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem<E> {
    pub a: E,
    pub b: E,
}

/// `K[w] / (w^2 - d)`. A field when `d` is not a square in `K`; `inv`
/// returns `None` on zero divisors otherwise.
///
/// With `K = F(t)` and `d = f(t)` this is the function field of the curve
/// `w^2 = f(t)`.
#[derive(Clone, Debug)]
pub struct QuadraticExtension<K: Ring> {
    base: K,
    d: K::Elem,
}

impl<K: Ring> QuadraticExtension<K> {
    pub fn new(base: K, d: K::Elem) -> Self {
        QuadraticExtension { base, d }
    }

    pub fn base(&self) -> &K {
        &self.base
    }

    pub fn radicand(&self) -> &K::Elem {
        &self.d
    }

    pub fn embed(&self, a: K::Elem) -> QuadElem<K::Elem> {
        QuadElem {
            a,
            b: self.base.zero(),
        }
    }

    pub fn make(&self, a: K::Elem, b: K::Elem) -> QuadElem<K::Elem> {
        QuadElem { a, b }
    }

    /// `sqrt(d)` itself.
    pub fn root(&self) -> QuadElem<K::Elem> {
        QuadElem {
            a: self.base.zero(),
            b: self.base.one(),
        }
    }

    pub fn conj(&self, x: &QuadElem<K::Elem>) -> QuadElem<K::Elem> {
        QuadElem {
            a: x.a.clone(),
            b: self.base.neg(&x.b),
        }
    }

    pub fn norm(&self, x: &QuadElem<K::Elem>) -> K::Elem {
        let k = &self.base;
        k.sub(&k.square(&x.a), &k.mul(&self.d, &k.square(&x.b)))
    }
}

impl<K: Ring> Ring for QuadraticExtension<K> {
    type Elem = QuadElem<K::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.embed(self.base.one())
    }
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        QuadElem {
            a: self.base.add(&x.a, &y.a),
            b: self.base.add(&x.b, &y.b),
        }
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        QuadElem {
            a: self.base.neg(&x.a),
            b: self.base.neg(&x.b),
        }
    }
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        QuadElem {
            a: self.base.sub(&x.a, &y.a),
            b: self.base.sub(&x.b, &y.b),
        }
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let k = &self.base;
        let bb = k.mul(&x.b, &y.b);
        QuadElem {
            a: k.add(&k.mul(&x.a, &y.a), &k.mul(&self.d, &bb)),
            b: k.add(&k.mul(&x.a, &y.b), &k.mul(&x.b, &y.a)),
        }
    }
    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.base.is_zero(&x.a) && self.base.is_zero(&x.b)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.embed(self.base.from_int(n))
    }
    fn format(&self, x: &Self::Elem) -> String {
        format!("({}) + ({})*w", self.base.format(&x.a), self.base.format(&x.b))
    }
}

impl<K: Field> Field for QuadraticExtension<K> {
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem> {
        let n = self.base.inv(&self.norm(x))?;
        let c = self.conj(x);
        Some(QuadElem {
            a: self.base.mul(&c.a, &n),
            b: self.base.mul(&c.b, &n),
        })
    }
}

impl<K: QAlgebra> QAlgebra for QuadraticExtension<K> {
    fn from_rational(&self, q: &Rational) -> Self::Elem {
        self.embed(self.base.from_rational(q))
    }
}
