//! The covering maps `f1, f2: H -> E` as elements of the function field
//! `K(H) = K(t)[w] / (w^2 - h_A(t))`.

use super::family::{h_poly, quartic_d, reference_curve};
use super::parametrization::parametrization;
use crate::algebra::{Field, QuadElem, QuadraticExtension, RatFunc, RationalFunctionField, Ring};
use crate::curves::{add_unchecked, ec_neg, quartic_jacobian, CubicModel, EcPoint, QuarticJacobian};
use crate::error::{Error, Result};

pub type FunctionField<F> = QuadraticExtension<RationalFunctionField<F>>;
pub type FfElem<E> = QuadElem<RatFunc<E>>;

/// `K(t)[w] / (w^2 - h_A(t))`.
pub fn function_field_h<F: Field>(k: &F, a: &F::Elem) -> FunctionField<F> {
    let kt = RationalFunctionField::new(k.clone(), "t");
    let h = h_poly(kt.polys(), a);
    QuadraticExtension::new(kt.clone(), kt.from_poly(h))
}

/// `(t - 1)^2 / (2^3 (t^4 - 1)^2)`, the factor taking `w` to the
/// `y`-coordinate of `D`.
pub fn default_w_scale<F: Field>(kt: &RationalFunctionField<F>) -> RatFunc<F::Elem> {
    let p = kt.polys();
    let num = p.pow(&p.from_ints(&[-1, 1]), 2);
    let den = p.scale(&p.pow(&p.from_ints(&[-1, 0, 0, 0, 1]), 2), &kt.base().from_int(8));
    kt.frac(num, den).expect("nonzero denominator")
}

#[derive(Clone, Debug)]
pub struct CoveringMap<E> {
    pub name: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    /// `x`-coordinate on `D`, a function of `t` alone.
    pub d_x: RatFunc<E>,
    /// `y`-coordinate on `D`.
    pub d_y: FfElem<E>,
    /// Coordinates on `E` after the quartic-to-cubic map.
    pub e_x: FfElem<E>,
    pub e_y: FfElem<E>,
    /// Declared degree onto `D` (and `E`).
    pub degree: usize,
}

#[derive(Clone, Debug)]
pub struct Covering<F: Field> {
    pub ff: FunctionField<F>,
    pub e: CubicModel<F::Elem>,
    pub jacobian: QuarticJacobian<F::Elem>,
    pub f1: CoveringMap<F::Elem>,
    pub f2: CoveringMap<F::Elem>,
}

/// `f1: (t, w) -> (x(t), w s(t))` and `f2: (t, w) -> (t x(t), w s(t))` into
/// `D`, composed with the map `D -> E`; `s` is the `w`-scale.
pub fn covering_maps_with_scale<F: Field>(
    k: &F,
    a: &F::Elem,
    w_scale: &RatFunc<F::Elem>,
) -> Result<Covering<F>> {
    let ff = function_field_h(k, a);
    let kt = ff.base().clone();
    let d = quartic_d(k, a)?;
    let jacobian = quartic_jacobian(k, &d, &k.one())?;
    let e = reference_curve(k, a)?;
    if jacobian.image != e {
        return Err(Error::Singular("Jacobian of D differs from E".into()));
    }
    let par = parametrization(&kt);
    let y = ff.make(kt.zero(), w_scale.clone());
    let embed = |c: &F::Elem| ff.embed(kt.constant(c.clone()));
    let build = |name, d_x: RatFunc<F::Elem>| {
        let (e_x, e_y) = jacobian.map_in(&ff, embed, &ff.embed(d_x.clone()), &y);
        CoveringMap {
            name,
            source: "H",
            target: "E",
            degree: 3,
            d_x,
            d_y: y.clone(),
            e_x,
            e_y,
        }
    };
    let f1 = build("f1", par.x(&kt));
    let f2 = build("f2", par.z(&kt));
    Ok(Covering {
        ff,
        e,
        jacobian,
        f1,
        f2,
    })
}

pub fn covering_maps<F: Field>(k: &F, a: &F::Elem) -> Result<Covering<F>> {
    let kt = RationalFunctionField::new(k.clone(), "t");
    covering_maps_with_scale(k, a, &default_w_scale(&kt))
}

/// `P -> f(P) - f(iota P)` for the hyperelliptic involution `iota`, written
/// as `(t, w) -> (gx(t), w gy(t))`. The map is anti-invariant under `iota`,
/// so it descends to every quadratic twist: a point `(t, s)` of
/// `d s^2 = h_A(t)` goes to `(gx(t), s gy(t))` on `d y^2 = x^3 - A x + A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistMap<E> {
    pub gx: RatFunc<E>,
    pub gy: RatFunc<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> TwistMap<E> {
    /// Image of `(t, s)` on the literal twist; the point at infinity at a
    /// pole of `gx`.
    pub fn eval<F: Field<Elem = E>>(
        &self,
        kt: &RationalFunctionField<F>,
        t: &E,
        s: &E,
    ) -> Result<EcPoint<E>> {
        let Some(x) = kt.eval(&self.gx, t) else {
            return Ok(EcPoint::Infinity);
        };
        let gy = kt
            .eval(&self.gy, t)
            .ok_or_else(|| Error::Pole(kt.base().format(t)))?;
        Ok(EcPoint::Affine(x, kt.base().mul(s, &gy)))
    }
}

impl<F: Field> Covering<F> {
    fn e_over_ff(&self) -> CubicModel<FfElem<F::Elem>> {
        let kt = self.ff.base();
        let emb = |c: &F::Elem| self.ff.embed(kt.constant(c.clone()));
        CubicModel::singular(emb(self.e.a2()), emb(self.e.a4()), emb(self.e.a6()))
    }

    /// `e_y^2 - (e_x^3 + a4 e_x + a6)`; zero iff `m` lands on `E`.
    pub fn residual(&self, m: &CoveringMap<F::Elem>) -> FfElem<F::Elem> {
        let ff = &self.ff;
        ff.sub(&ff.square(&m.e_y), &self.e_over_ff().rhs(ff, &m.e_x))
    }

    pub fn twist_map(&self, f: &CoveringMap<F::Elem>) -> Result<TwistMap<F::Elem>> {
        let ff = &self.ff;
        let e = self.e_over_ff();
        let p = EcPoint::Affine(f.e_x.clone(), f.e_y.clone());
        let ip = EcPoint::Affine(ff.conj(&f.e_x), ff.conj(&f.e_y));
        match add_unchecked(ff, &e, &p, &ec_neg(ff, &ip)) {
            EcPoint::Affine(x, y) => {
                let kt = ff.base();
                if !kt.is_zero(&x.b) || !kt.is_zero(&y.a) {
                    return Err(Error::InvalidParameter("difference map is not anti-invariant".into()));
                }
                Ok(TwistMap { gx: x.a, gy: y.b })
            }
            EcPoint::Infinity => Err(Error::InvalidParameter("f is invariant under iota".into())),
        }
    }

    pub fn twist_maps(&self) -> Result<[TwistMap<F::Elem>; 2]> {
        Ok([self.twist_map(&self.f1)?, self.twist_map(&self.f2)?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rint, RationalField};
    use crate::curves::on_curve;

    #[test]
    fn maps_land_on_e_for_specialized_a() {
        let q = RationalField;
        for a in [-27, 1, 5] {
            let cov = covering_maps(&q, &rint(a)).unwrap();
            assert!(cov.ff.is_zero(&cov.residual(&cov.f1)));
            assert!(cov.ff.is_zero(&cov.residual(&cov.f2)));
            assert_eq!(cov.ff.base().map_degree(&cov.f1.d_x), 3);
        }
    }

    #[test]
    fn dropping_the_square_breaks_the_map() {
        let q = RationalField;
        let kt = RationalFunctionField::new(q, "t");
        let p = kt.polys();
        let bad = kt
            .frac(
                p.one(),
                p.scale(&p.pow(&p.from_ints(&[-1, 0, 0, 0, 1]), 2), &rint(8)),
            )
            .unwrap();
        let cov = covering_maps_with_scale(&q, &rint(-27), &bad).unwrap();
        assert!(!cov.ff.is_zero(&cov.residual(&cov.f1)));
    }

    #[test]
    fn twist_maps_at_small_t() {
        let q = RationalField;
        let cov = covering_maps(&q, &rint(-27)).unwrap();
        let [g1, g2] = cov.twist_maps().unwrap();
        let kt = cov.ff.base();
        // t = -1: h = 64 = 1 * 8^2
        assert_eq!(
            g1.eval(kt, &rint(-1), &rint(8)).unwrap(),
            EcPoint::Affine(rint(1), rint(-1))
        );
        assert_eq!(
            g2.eval(kt, &rint(-1), &rint(8)).unwrap(),
            EcPoint::Affine(rint(1), rint(-1))
        );
        // t = 0: h = -27 = -3 * 3^2; P2 = (0, 27) after (x, y) -> (dx, d^2 y)
        let d = rint(-3);
        let e = crate::curves::quadratic_twist(&q, &cov.e, &d).unwrap();
        let tp = |g: &TwistMap<_>| {
            crate::curves::twist_point(&q, &d, &g.eval(kt, &rint(0), &rint(3)).unwrap())
        };
        assert_eq!(tp(&g2), EcPoint::Affine(rint(0), rint(27)));
        assert_eq!(
            tp(&g1),
            EcPoint::Affine(crate::algebra::ratio(280, 9), crate::algebra::ratio(-5291, 27))
        );
        assert!(on_curve(&q, &e, &tp(&g1)));
    }
}
