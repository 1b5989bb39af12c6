use crate::algebra::Field;
use crate::curves::CubicModel;
use crate::error::{Error, Result};

/// The curve `C` cut out by `y^2 = x^3 - A x + B` and `x^2 + x z + z^2 = A`,
/// with the auxiliary cubic `E': y^2 = x^3 - 27 B x^2 + 27 A^3 x`.
#[derive(Clone, Debug)]
pub struct SpaceCurveC<E> {
    pub a: E,
    pub b: E,
    pub cubic: CubicModel<E>,
    pub aux_cubic: CubicModel<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> SpaceCurveC<E> {
    /// `x^2 + x z + z^2 - A`.
    pub fn conic<F: Field<Elem = E>>(&self, k: &F, x: &E, z: &E) -> E {
        let s = k.add(&k.add(&k.square(x), &k.mul(x, z)), &k.square(z));
        k.sub(&s, &self.a)
    }

    pub fn on_curve<F: Field<Elem = E>>(&self, k: &F, x: &E, y: &E, z: &E) -> bool {
        k.square(y) == self.cubic.rhs(k, x) && k.is_zero(&self.conic(k, x, z))
    }

    /// `f1(x, y, z) = (x, y)`.
    pub fn f1(&self, x: &E, y: &E, _z: &E) -> (E, E) {
        (x.clone(), y.clone())
    }

    /// `f2(x, y, z) = (z, y)`.
    pub fn f2(&self, _x: &E, y: &E, z: &E) -> (E, E) {
        (z.clone(), y.clone())
    }
}

pub fn build_thm1<F: Field>(k: &F, a: &F::Elem, b: &F::Elem) -> Result<SpaceCurveC<F::Elem>> {
    if k.is_zero(a) {
        return Err(Error::InvalidParameter("A = 0".into()));
    }
    let cubic = CubicModel::short(k, k.neg(a), b.clone())?;
    let aux_cubic = CubicModel::new(
        k,
        k.mul(&k.from_int(-27), b),
        k.mul(&k.from_int(27), &k.pow(a, 3)),
        k.zero(),
    )?;
    Ok(SpaceCurveC {
        a: a.clone(),
        b: b.clone(),
        cubic,
        aux_cubic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rint, RationalField, Ring};

    #[test]
    fn examples() {
        let q = RationalField;
        let c = build_thm1(&q, &rint(1), &rint(1)).unwrap();
        assert_eq!(
            c.aux_cubic,
            CubicModel::new(&q, rint(-27), rint(27), rint(0)).unwrap()
        );
        assert!(build_thm1(&q, &rint(0), &rint(1)).is_err());
        let c = build_thm1(&q, &rint(1), &rint(0)).unwrap();
        assert_eq!(c.cubic, CubicModel::short(&q, rint(-1), rint(0)).unwrap());
        // (1, 0, -1) lies on C for A = 1, B = 0 and both maps land on E
        let (x, y, z) = (rint(1), rint(0), rint(-1));
        assert!(c.on_curve(&q, &x, &y, &z));
        let (zx, zy) = c.f2(&x, &y, &z);
        assert_eq!(q.square(&zy), c.cubic.rhs(&q, &zx));
    }
}
