use crate::algebra::{Field, Poly, RatFunc, Rational, RationalField, RationalFunctionField, Ring};
use crate::error::{Error, Result};

/// `x(t) = -(t^3 - 1) / (t^4 - 1)` and `z(t) = t x(t)`, stored unreduced
/// over the common denominator `t^4 - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametrizationData<E> {
    pub x_num: Poly<E>,
    pub z_num: Poly<E>,
    pub den: Poly<E>,
}

pub fn parametrization<F: Field>(kt: &RationalFunctionField<F>) -> ParametrizationData<F::Elem> {
    let p = kt.polys();
    ParametrizationData {
        x_num: p.from_ints(&[1, 0, 0, -1]),
        z_num: p.from_ints(&[0, 1, 0, 0, -1]),
        den: p.from_ints(&[-1, 0, 0, 0, 1]),
    }
}

impl<E: Clone + PartialEq + std::fmt::Debug> ParametrizationData<E> {
    pub fn x<F: Field<Elem = E>>(&self, kt: &RationalFunctionField<F>) -> RatFunc<E> {
        kt.frac(self.x_num.clone(), self.den.clone()).expect("t^4 - 1 != 0")
    }

    pub fn z<F: Field<Elem = E>>(&self, kt: &RationalFunctionField<F>) -> RatFunc<E> {
        kt.frac(self.z_num.clone(), self.den.clone()).expect("t^4 - 1 != 0")
    }
}

/// `F(x, z) = (x^4 - z^4)/(x - z) + (x^3 - z^3)/(x - z)`, expanded.
pub fn f_xz<R: Ring>(ring: &R, x: &R::Elem, z: &R::Elem) -> R::Elem {
    let (x2, z2, xz) = (ring.square(x), ring.square(z), ring.mul(x, z));
    let quad = ring.add(&ring.add(&x2, &xz), &z2);
    // x^3 + x^2 z + x z^2 + z^3 = (x + z)(x^2 + z^2)
    let cubic = ring.mul(&ring.add(x, z), &ring.add(&x2, &z2));
    ring.add(&cubic, &quad)
}

/// `(x(t), z(t))` at a rational `t`; a pole when `t^4 = 1`.
pub fn parametrize(t: &Rational) -> Result<(Rational, Rational)> {
    let q = RationalField;
    let kt = RationalFunctionField::new(q, "t");
    let data = parametrization(&kt);
    let p = kt.polys();
    let den = p.eval(&data.den, t);
    if q.is_zero(&den) {
        return Err(Error::Pole(t.to_string()));
    }
    let x = q.div(&p.eval(&data.x_num, t), &den).expect("den != 0");
    let z = q.div(&p.eval(&data.z_num, t), &den).expect("den != 0");
    Ok((x, z))
}
