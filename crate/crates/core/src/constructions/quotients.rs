//! The double covers `H -> H1` and `H -> H2` induced by `x -> 1/x`.

use super::family::{g_poly, h1_poly, h_poly};
use super::maps::{FfElem, FunctionField};
use crate::algebra::{Field, Poly, PolyRing, QuadraticExtension, RatFunc, RationalFunctionField, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct QuotientMaps<F: Field> {
    /// `K(x)[y] / (y^2 - h_A(x))`.
    pub ff: FunctionField<F>,
    /// `u = x + 1/x`, shared by both maps.
    pub u: RatFunc<F::Elem>,
    /// `v1 = y (x^2 - 1) / x^4` on `H1: v^2 = (u^2 - 4) g(u)`.
    pub v1: FfElem<F::Elem>,
    /// `v2 = y / x^3` on `H2: v^2 = g(u)`.
    pub v2: FfElem<F::Elem>,
    pub h1: Poly<F::Elem>,
    pub h2: Poly<F::Elem>,
}

/// Fails with [`Error::Ramified`] when `h_A(1) = 256 A - 1728` vanishes,
/// i.e. `A = 27/4`, where `(1, 0)` is fixed by the involution.
pub fn quotient_maps<F: Field>(k: &F, a: &F::Elem) -> Result<QuotientMaps<F>> {
    if k.is_zero(a) {
        return Err(Error::InvalidParameter("A = 0".into()));
    }
    let kx = RationalFunctionField::new(k.clone(), "x");
    let p = kx.polys();
    let h = h_poly(p, a);
    if k.is_zero(&p.eval(&h, &k.one())) {
        return Err(Error::Ramified);
    }
    let ff = QuadraticExtension::new(kx.clone(), kx.from_poly(h));
    let x = kx.var();
    let xinv = kx.inv(&x).expect("x != 0");
    let u = kx.add(&x, &xinv);
    let v1 = ff.make(
        kx.zero(),
        kx.frac(p.from_ints(&[-1, 0, 1]), p.from_ints(&[0, 0, 0, 0, 1])).expect("x^4 != 0"),
    );
    let v2 = ff.make(kx.zero(), kx.pow(&xinv, 3));
    let pu = PolyRing::new(k.clone(), "u");
    Ok(QuotientMaps {
        h1: h1_poly(&pu, a),
        h2: g_poly(&pu, a),
        ff,
        u,
        v1,
        v2,
    })
}

impl<F: Field> QuotientMaps<F> {
    /// `(x, y) -> (1/x, -y/x^6)` on the function field generators.
    pub fn involution(&self) -> (RatFunc<F::Elem>, FfElem<F::Elem>) {
        let kx = self.ff.base();
        let xinv = kx.inv(&kx.var()).expect("x != 0");
        let y = self.ff.make(kx.zero(), kx.neg(&kx.pow(&xinv, 6)));
        (xinv, y)
    }

    /// `v^2 - rhs(u)` for the given target; zero iff the map lands on it.
    pub fn residual(&self, v: &FfElem<F::Elem>, rhs: &Poly<F::Elem>) -> FfElem<F::Elem> {
        let kx = self.ff.base();
        let at_u = kx.polys().eval_in(rhs, kx, &self.u, |c| kx.constant(c.clone()));
        self.ff.sub(&self.ff.square(v), &self.ff.embed(at_u))
    }
}
