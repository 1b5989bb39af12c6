use super::weierstrass::{CubicModel, EcPoint};
use crate::algebra::{Field, Ring};
use crate::error::{Error, Result};

/// `y^2 = c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticModel<E> {
    /// Ascending: `c[i]` multiplies `x^i`.
    c: [E; 5],
}

impl<E: Clone + PartialEq + std::fmt::Debug> QuarticModel<E> {
    /// Rejects quartics with a repeated root (`4 I^3 - J^2 = 0`).
    pub fn new<F: Field<Elem = E>>(k: &F, c4: E, c3: E, c2: E, c1: E, c0: E) -> Result<Self> {
        let q = QuarticModel {
            c: [c0, c1, c2, c3, c4],
        };
        let (i, j) = q.invariants(k);
        let disc = k.sub(&k.mul(&k.from_int(4), &k.pow(&i, 3)), &k.square(&j));
        if k.is_zero(&disc) || k.is_zero(&q.c[4]) {
            return Err(Error::Singular("quartic has a repeated root".into()));
        }
        Ok(q)
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> &E {
        &self.c[i]
    }

    pub fn coeffs(&self) -> &[E; 5] {
        &self.c
    }

    /// The classical invariants `I = 12ae - 3bd + c^2` and
    /// `J = 72ace + 9bcd - 27ad^2 - 27eb^2 - 2c^3` of
    /// `a x^4 + b x^3 + c x^2 + d x + e`.
    pub fn invariants<F: Field<Elem = E>>(&self, k: &F) -> (E, E) {
        let [e, d, c, b, a] = &self.c;
        let n = |v: i64| k.from_int(v);
        let m3 = |x: &E, y: &E, z: &E| k.mul(x, &k.mul(y, z));
        let i = k.add(
            &k.sub(&k.mul(&n(12), &k.mul(a, e)), &k.mul(&n(3), &k.mul(b, d))),
            &k.square(c),
        );
        let j = [
            k.mul(&n(72), &m3(a, c, e)),
            k.mul(&n(9), &m3(b, c, d)),
            k.mul(&n(-27), &m3(a, d, d)),
            k.mul(&n(-27), &m3(e, b, b)),
            k.mul(&n(-2), &k.pow(c, 3)),
        ]
        .iter()
        .fold(k.zero(), |acc, t| k.add(&acc, t));
        (i, j)
    }

    pub fn on_curve<F: Field<Elem = E>>(&self, k: &F, x: &E, y: &E) -> bool {
        let rhs = self.c.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c));
        k.square(y) == rhs
    }
}

/// Jacobian data for a quartic whose leading coefficient is a square.
#[derive(Clone, Debug)]
pub struct QuarticJacobian<E> {
    pub i: E,
    pub j: E,
    /// `y^2 = x^3 - 27 I x - 27 J`.
    pub jacobian: CubicModel<E>,
    /// Target of [`QuarticJacobian::map_in`]; isomorphic to `jacobian`.
    pub image: CubicModel<E>,
    /// `mu^2` with `image` (in short form) equal to `jacobian` under
    /// `x -> x / mu^2`; `None` when `I` or `J` vanishes.
    pub mu2: Option<E>,
    /// `jacobian` rescaled by `mu2`.
    pub scaled: Option<CubicModel<E>>,
    alpha: E,
    beta: E,
    c2: E,
    c1: E,
}

impl<E: Clone + PartialEq + std::fmt::Debug> QuarticJacobian<E> {
    /// The point map `(x, y) -> (8 alpha s, 8 alpha r)` with
    /// `s = alpha x^2 + beta x + y`, `r = 2 P(s) x + Q(s)`,
    /// `P = beta^2 - c2 - 2 alpha s` and `Q = -2 beta s - c1`, evaluated in any
    /// ring that receives the base field through `embed`.
    pub fn map_in<R: Ring>(
        &self,
        ring: &R,
        embed: impl Fn(&E) -> R::Elem,
        x: &R::Elem,
        y: &R::Elem,
    ) -> (R::Elem, R::Elem) {
        self.map_in_weighted(ring, embed, x, y, &ring.one())
    }

    /// [`QuarticJacobian::map_in`] in weighted coordinates: for
    /// `(x, y) = (X / tau, Y / tau^2)` returns `(tau^2 u, tau^3 v)`, using no
    /// division.
    pub fn map_in_weighted<R: Ring>(
        &self,
        ring: &R,
        embed: impl Fn(&E) -> R::Elem,
        x: &R::Elem,
        y: &R::Elem,
        tau: &R::Elem,
    ) -> (R::Elem, R::Elem) {
        let al = embed(&self.alpha);
        let be = ring.mul(&embed(&self.beta), tau);
        let c2 = ring.mul(&embed(&self.c2), &ring.square(tau));
        let c1 = ring.mul(&embed(&self.c1), &ring.pow(tau, 3));
        let two = ring.from_int(2);
        let eight_al = ring.mul(&ring.from_int(8), &al);
        let s = ring.add(
            &ring.add(&ring.mul(&al, &ring.square(x)), &ring.mul(&be, x)),
            y,
        );
        let p = ring.sub(
            &ring.sub(&ring.square(&be), &c2),
            &ring.mul(&two, &ring.mul(&al, &s)),
        );
        let q = ring.neg(&ring.add(&ring.mul(&two, &ring.mul(&be, &s)), &c1));
        let r = ring.add(&ring.mul(&two, &ring.mul(&p, x)), &q);
        (ring.mul(&eight_al, &s), ring.mul(&eight_al, &r))
    }

    pub fn map_point<F: Field<Elem = E>>(&self, k: &F, x: &E, y: &E) -> EcPoint<E> {
        let (u, v) = self.map_in(k, |c| c.clone(), x, y);
        EcPoint::Affine(u, v)
    }
}

/// Jacobian of `y^2 = q(x)` given `alpha` with `alpha^2 = c4`.
///
/// Writing the quartic as `(alpha x^2 + beta x - s)^2 - R_s(x)`, a point
/// makes `R_s` vanish at `x`, so its discriminant
/// `8 alpha s^3 + 4 c2 s^2 + (4 beta c1 - 8 alpha c0) s + c1^2 + 4 c0 (beta^2 - c2)`
/// is the square `r^2`; scaling by `8 alpha` makes the cubic monic.
pub fn quartic_jacobian<F: Field>(
    k: &F,
    q: &QuarticModel<F::Elem>,
    alpha: &F::Elem,
) -> Result<QuarticJacobian<F::Elem>> {
    let [c0, c1, c2, c3, c4] = q.coeffs().clone();
    if k.square(alpha) != c4 || k.is_zero(alpha) {
        return Err(Error::InvalidParameter("alpha^2 must equal the leading coefficient".into()));
    }
    let n = |v: i64| k.from_int(v);
    let (i, j) = q.invariants(k);
    let jacobian = CubicModel::short(k, k.mul(&n(-27), &i), k.mul(&n(-27), &j))?;

    let beta = k.div(&c3, &k.mul(&n(2), alpha)).expect("alpha != 0");
    let k1 = k.sub(
        &k.mul(&n(4), &k.mul(&beta, &c1)),
        &k.mul(&n(8), &k.mul(alpha, &c0)),
    );
    let k0 = k.add(
        &k.square(&c1),
        &k.mul(&n(4), &k.mul(&c0, &k.sub(&k.square(&beta), &c2))),
    );
    let eight_al = k.mul(&n(8), alpha);
    let image = CubicModel::new(
        k,
        k.mul(&n(4), &c2),
        k.mul(&eight_al, &k1),
        k.mul(&k.square(&eight_al), &k0),
    )?;

    // short form of the image: x -> x - a2/3
    let a2 = image.a2().clone();
    let third = k.inv(&n(3)).expect("characteristic != 3");
    let sa = k.sub(image.a4(), &k.mul(&k.square(&a2), &third));
    let sb = k.add(
        &k.sub(image.a6(), &k.mul(&k.mul(&a2, image.a4()), &third)),
        &k.mul(&k.div(&n(2), &n(27)).expect("char != 3"), &k.pow(&a2, 3)),
    );
    let mu2 = k.div(&k.mul(&j, &sa), &k.mul(&i, &sb));
    let scaled = match &mu2 {
        Some(m2) => {
            let m4 = k.square(m2);
            let m6 = k.mul(&m4, m2);
            Some(CubicModel::short(
                k,
                k.div(jacobian.a4(), &m4).expect("mu != 0"),
                k.div(jacobian.a6(), &m6).expect("mu != 0"),
            )?)
        }
        None => None,
    };
    Ok(QuarticJacobian {
        i,
        j,
        jacobian,
        image,
        mu2,
        scaled,
        alpha: alpha.clone(),
        beta,
        c2,
        c1,
    })
}
