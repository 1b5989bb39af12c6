use crate::algebra::{Field, Poly, PolyRing};
use crate::error::{Error, Result};

/// The literal model `twist * y^2 = f(x)`; `twist = 1` for an untwisted
/// curve. The integral model is `Y^2 = twist * f(x)` with `Y = twist * y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticModel<E> {
    f: Poly<E>,
    twist: E,
    genus: usize,
}

/// `floor((deg f - 1) / 2)` for squarefree `f` of degree at least 1.
pub fn hyperelliptic_genus<F: Field>(ring: &PolyRing<F>, f: &Poly<F::Elem>) -> Result<usize> {
    let deg = match f.degree() {
        None | Some(0) => {
            return Err(Error::InvalidParameter("constant right-hand side".into()));
        }
        Some(d) => d,
    };
    if !ring.is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    Ok((deg - 1) / 2)
}

impl<E: Clone + PartialEq + std::fmt::Debug> HyperellipticModel<E> {
    pub fn new<F: Field<Elem = E>>(ring: &PolyRing<F>, f: Poly<E>) -> Result<Self> {
        let genus = hyperelliptic_genus(ring, &f)?;
        Ok(HyperellipticModel {
            f,
            twist: ring.base().one(),
            genus,
        })
    }

    pub fn f(&self) -> &Poly<E> {
        &self.f
    }

    pub fn twist(&self) -> &E {
        &self.twist
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `d * twist * y^2 = f(x)`.
    pub fn quadratic_twist<F: Field<Elem = E>>(&self, k: &F, d: &E) -> Result<Self> {
        if k.is_zero(d) {
            return Err(Error::InvalidParameter("twist by zero".into()));
        }
        Ok(HyperellipticModel {
            f: self.f.clone(),
            twist: k.mul(&self.twist, d),
            genus: self.genus,
        })
    }

    /// Right-hand side of the integral model `Y^2 = twist * f`.
    pub fn integral_rhs<F: Field<Elem = E>>(&self, ring: &PolyRing<F>) -> Poly<E> {
        ring.scale(&self.f, &self.twist)
    }

    /// Exact check of `twist * y^2 = f(x)`.
    pub fn on_curve<F: Field<Elem = E>>(&self, ring: &PolyRing<F>, x: &E, y: &E) -> bool {
        let k = ring.base();
        k.mul(&self.twist, &k.square(y)) == ring.eval(&self.f, x)
    }

    /// `(x, y)` on the literal model to `(x, twist * y)` on the integral one.
    pub fn to_integral<F: Field<Elem = E>>(&self, k: &F, x: &E, y: &E) -> (E, E) {
        (x.clone(), k.mul(&self.twist, y))
    }

    pub fn from_integral<F: Field<Elem = E>>(&self, k: &F, x: &E, y: &E) -> (E, E) {
        (x.clone(), k.div(y, &self.twist).expect("twist != 0"))
    }
}
