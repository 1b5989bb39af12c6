use crate::algebra::{Field, Poly, PolyRing, Rational, RationalField, Ring};
use crate::curves::{
    cubic_json, hyperelliptic_json, j_invariant, quartic_json, CubicModel, CurveJson,
    HyperellipticModel, QuarticModel,
};
use crate::error::{Error, Result};

/// `j` and `A = 27 j / (4 (j - 1728))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionParams {
    pub j: Rational,
    pub a: Rational,
    /// `A = 27/4`: the curve `E` degenerates and the involution behind the
    /// double cover of `H1` acquires a fixed point.
    pub ramified: bool,
}

pub fn params_from_j(j: &Rational) -> Result<ConstructionParams> {
    let q = RationalField;
    if q.is_zero(j) || *j == q.from_int(1728) {
        return Err(Error::UnsupportedJ(j.to_string()));
    }
    let a = q.mul(
        &Rational::new(27.into(), 4.into()),
        &q.div(j, &q.sub(j, &q.from_int(1728))).expect("j != 1728"),
    );
    Ok(ConstructionParams {
        j: j.clone(),
        ramified: a == Rational::new(27.into(), 4.into()),
        a,
    })
}

/// Inverse of [`params_from_j`]: `j = 6912 A / (4 A - 27)`.
pub fn params_from_a(a: &Rational) -> Result<ConstructionParams> {
    let q = RationalField;
    if q.is_zero(a) {
        return Err(Error::InvalidParameter("A = 0".into()));
    }
    let den = q.sub(&q.mul(&q.from_int(4), a), &q.from_int(27));
    match q.div(&q.mul(&q.from_int(6912), a), &den) {
        Some(j) => Ok(ConstructionParams {
            j,
            a: a.clone(),
            ramified: false,
        }),
        None => Err(Error::Ramified),
    }
}

/// `h_A(t) = A (t+1)^4 (t^2+1)^4 - 2^6 t^3 (t^2+t+1)^3` over any ring,
/// with `A` an element of the coefficient ring.
pub fn h_poly<R: Ring>(ring: &PolyRing<R>, a: &R::Elem) -> Poly<R::Elem> {
    let p = ring;
    let u = p.from_ints(&[1, 1]);
    let v = p.from_ints(&[1, 0, 1]);
    let w = p.from_ints(&[1, 1, 1]);
    let first = p.scale(&p.mul(&p.pow(&u, 4), &p.pow(&v, 4)), a);
    let second = p.scale(&p.shift(&p.pow(&w, 3), 3), &p.base().from_int(64));
    p.sub(&first, &second)
}

/// `g(u) = A (u+2)^2 u^4 - 2^6 (u+1)^3`, the right-hand side of `H2`.
pub fn g_poly<R: Ring>(ring: &PolyRing<R>, a: &R::Elem) -> Poly<R::Elem> {
    let p = ring;
    let first = p.scale(&p.shift(&p.pow(&p.from_ints(&[2, 1]), 2), 4), a);
    let second = p.scale(&p.pow(&p.from_ints(&[1, 1]), 3), &p.base().from_int(64));
    p.sub(&first, &second)
}

/// `(u^2 - 4) g(u)`, the right-hand side of `H1`.
pub fn h1_poly<R: Ring>(ring: &PolyRing<R>, a: &R::Elem) -> Poly<R::Elem> {
    ring.mul(&ring.from_ints(&[-4, 0, 1]), &g_poly(ring, a))
}

/// `E: y^2 = x^3 - A x + A`.
pub fn reference_curve<F: Field>(k: &F, a: &F::Elem) -> Result<CubicModel<F::Elem>> {
    CubicModel::short(k, k.neg(a), a.clone())
}

/// `E': y^2 = x^3 + A x^2 + 2 A x + A`.
pub fn eprime_curve<F: Field>(k: &F, a: &F::Elem) -> Result<CubicModel<F::Elem>> {
    CubicModel::new(k, a.clone(), k.mul(&k.from_int(2), a), a.clone())
}

/// `D: y^2 = x^4 + x^3 + B` with `B = A / 64`.
pub fn quartic_d<F: Field>(k: &F, a: &F::Elem) -> Result<QuarticModel<F::Elem>> {
    let b = k.div(a, &k.from_int(64)).expect("characteristic != 2");
    QuarticModel::new(k, k.one(), k.one(), k.zero(), k.zero(), b)
}

#[derive(Clone, Debug)]
pub struct Family<E> {
    pub a: E,
    pub e: CubicModel<E>,
    pub d: QuarticModel<E>,
    pub h: HyperellipticModel<E>,
    pub h1: HyperellipticModel<E>,
    pub h2: HyperellipticModel<E>,
    pub eprime: CubicModel<E>,
}

fn with_genus<F: Field>(
    ring: &PolyRing<F>,
    f: Poly<F::Elem>,
    genus: usize,
    name: &str,
) -> Result<HyperellipticModel<F::Elem>> {
    let m = HyperellipticModel::new(ring, f).map_err(|e| match e {
        Error::NotSquarefree => Error::Singular(format!("{name}: right-hand side not squarefree")),
        e => e,
    })?;
    if m.genus() != genus {
        return Err(Error::Singular(format!("{name}: genus {} instead of {genus}", m.genus())));
    }
    Ok(m)
}

/// All curves attached to `A`: `E, D, H, H1, H2, E'`. Fails on any
/// specialization where a model degenerates.
pub fn build_family<F: Field>(k: &F, a: &F::Elem) -> Result<Family<F::Elem>> {
    if k.is_zero(a) {
        return Err(Error::InvalidParameter("A = 0".into()));
    }
    let e = reference_curve(k, a)?;
    let eprime = eprime_curve(k, a)?;
    let d = quartic_d(k, a)?;
    let ring = PolyRing::new(k.clone(), "x");
    let h = with_genus(&ring, h_poly(&ring, a), 5, "H")?;
    let h1 = with_genus(&ring, h1_poly(&ring, a), 3, "H1")?;
    let h2 = with_genus(&ring, g_poly(&ring, a), 2, "H2")?;
    Ok(Family {
        a: a.clone(),
        e,
        d,
        h,
        h1,
        h2,
        eprime,
    })
}

/// Curve names in serialization order.
pub const CURVE_NAMES: [&str; 6] = ["E", "D", "H", "H1", "H2", "Eprime"];

impl Family<Rational> {
    pub fn curve_json(&self, name: &str) -> Option<CurveJson> {
        Some(match name {
            "E" => cubic_json(&self.e),
            "D" => quartic_json(&self.d),
            "H" => hyperelliptic_json(&self.h),
            "H1" => hyperelliptic_json(&self.h1),
            "H2" => hyperelliptic_json(&self.h2),
            "Eprime" => cubic_json(&self.eprime),
            _ => return None,
        })
    }

    /// `j(E)`; equals the `j` the family was built from.
    pub fn j(&self) -> Result<Rational> {
        j_invariant(&RationalField, &self.e)
    }
}
