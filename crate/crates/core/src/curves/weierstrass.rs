use crate::algebra::Field;
use crate::error::{Error, Result};

/// `y^2 = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicModel<E> {
    a2: E,
    a4: E,
    a6: E,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EcPoint<E> {
    Infinity,
    Affine(E, E),
}

impl<E> EcPoint<E> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, EcPoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&E, &E)> {
        match self {
            EcPoint::Infinity => None,
            EcPoint::Affine(x, y) => Some((x, y)),
        }
    }
}

impl<E: Clone + PartialEq + std::fmt::Debug> CubicModel<E> {
    /// Checked constructor; rejects a zero discriminant.
    pub fn new<F: Field<Elem = E>>(k: &F, a2: E, a4: E, a6: E) -> Result<Self> {
        let c = CubicModel { a2, a4, a6 };
        if k.is_zero(&discriminant(k, &c)) {
            return Err(Error::Singular(format!(
                "y^2 = x^3 + ({})x^2 + ({})x + ({})",
                k.format(&c.a2),
                k.format(&c.a4),
                k.format(&c.a6)
            )));
        }
        Ok(c)
    }

    /// `y^2 = x^3 + a x + b`.
    pub fn short<F: Field<Elem = E>>(k: &F, a: E, b: E) -> Result<Self> {
        Self::new(k, k.zero(), a, b)
    }

    /// No discriminant check. Only for degenerate inputs in tests.
    pub fn singular(a2: E, a4: E, a6: E) -> Self {
        CubicModel { a2, a4, a6 }
    }

    pub fn a2(&self) -> &E {
        &self.a2
    }

    pub fn a4(&self) -> &E {
        &self.a4
    }

    pub fn a6(&self) -> &E {
        &self.a6
    }

    /// Right-hand side at `x`.
    pub fn rhs<F: Field<Elem = E>>(&self, k: &F, x: &E) -> E {
        let t = k.add(&k.mul(&k.add(x, &self.a2), x), &self.a4);
        k.add(&k.mul(&t, x), &self.a6)
    }

    /// Coefficients of the right-hand side, ascending degree.
    pub fn rhs_coeffs<F: Field<Elem = E>>(&self, k: &F) -> Vec<E> {
        vec![self.a6.clone(), self.a4.clone(), self.a2.clone(), k.one()]
    }

    /// Coefficient-wise image under a ring map, e.g. reduction mod `p`.
    /// Fails if the image is singular.
    pub fn try_map<G: Field>(
        &self,
        target: &G,
        f: impl Fn(&E) -> Option<G::Elem>,
    ) -> Result<CubicModel<G::Elem>> {
        let bad = || Error::InvalidParameter("coefficient does not reduce".into());
        CubicModel::new(
            target,
            f(&self.a2).ok_or_else(bad)?,
            f(&self.a4).ok_or_else(bad)?,
            f(&self.a6).ok_or_else(bad)?,
        )
    }
}

fn b_invariants<F: Field>(k: &F, c: &CubicModel<F::Elem>) -> [F::Elem; 4] {
    let b2 = k.mul(&k.from_int(4), &c.a2);
    let b4 = k.mul(&k.from_int(2), &c.a4);
    let b6 = k.mul(&k.from_int(4), &c.a6);
    let b8 = k.sub(&k.mul(&k.from_int(4), &k.mul(&c.a2, &c.a6)), &k.square(&c.a4));
    [b2, b4, b6, b8]
}

pub fn discriminant<F: Field>(k: &F, c: &CubicModel<F::Elem>) -> F::Elem {
    let [b2, b4, b6, b8] = b_invariants(k, c);
    let t1 = k.neg(&k.mul(&k.square(&b2), &b8));
    let t2 = k.mul(&k.from_int(8), &k.pow(&b4, 3));
    let t3 = k.mul(&k.from_int(27), &k.square(&b6));
    let t4 = k.mul(&k.from_int(9), &k.mul(&b2, &k.mul(&b4, &b6)));
    k.add(&k.sub(&k.sub(&t1, &t2), &t3), &t4)
}

/// `c4^3 / disc`.
pub fn j_invariant<F: Field>(k: &F, c: &CubicModel<F::Elem>) -> Result<F::Elem> {
    let [b2, b4, ..] = b_invariants(k, c);
    let c4 = k.sub(&k.square(&b2), &k.mul(&k.from_int(24), &b4));
    k.div(&k.pow(&c4, 3), &discriminant(k, c))
        .ok_or_else(|| Error::Singular("zero discriminant".into()))
}

pub fn on_curve<F: Field>(k: &F, c: &CubicModel<F::Elem>, p: &EcPoint<F::Elem>) -> bool {
    match p {
        EcPoint::Infinity => true,
        EcPoint::Affine(x, y) => k.square(y) == c.rhs(k, x),
    }
}

pub fn ec_neg<F: Field>(k: &F, p: &EcPoint<F::Elem>) -> EcPoint<F::Elem> {
    match p {
        EcPoint::Infinity => EcPoint::Infinity,
        EcPoint::Affine(x, y) => EcPoint::Affine(x.clone(), k.neg(y)),
    }
}

/// Group law without the on-curve check.
pub fn add_unchecked<F: Field>(
    k: &F,
    c: &CubicModel<F::Elem>,
    p: &EcPoint<F::Elem>,
    q: &EcPoint<F::Elem>,
) -> EcPoint<F::Elem> {
    let ((x1, y1), (x2, y2)) = match (p, q) {
        (EcPoint::Infinity, _) => return q.clone(),
        (_, EcPoint::Infinity) => return p.clone(),
        (EcPoint::Affine(x1, y1), EcPoint::Affine(x2, y2)) => ((x1, y1), (x2, y2)),
    };
    let lambda = if x1 != x2 {
        k.div(&k.sub(y2, y1), &k.sub(x2, x1)).expect("x1 != x2")
    } else if k.is_zero(&k.add(y1, y2)) {
        return EcPoint::Infinity;
    } else {
        // tangent: (3x^2 + 2 a2 x + a4) / 2y
        let num = k.add(
            &k.add(
                &k.mul(&k.from_int(3), &k.square(x1)),
                &k.mul(&k.from_int(2), &k.mul(&c.a2, x1)),
            ),
            &c.a4,
        );
        k.div(&num, &k.mul(&k.from_int(2), y1)).expect("y != 0")
    };
    let x3 = k.sub(&k.sub(&k.sub(&k.square(&lambda), &c.a2), x1), x2);
    let y3 = k.neg(&k.add(y1, &k.mul(&lambda, &k.sub(&x3, x1))));
    EcPoint::Affine(x3, y3)
}

pub fn ec_add<F: Field>(
    k: &F,
    c: &CubicModel<F::Elem>,
    p: &EcPoint<F::Elem>,
    q: &EcPoint<F::Elem>,
) -> Result<EcPoint<F::Elem>> {
    if !on_curve(k, c, p) || !on_curve(k, c, q) {
        return Err(Error::OffCurve);
    }
    Ok(add_unchecked(k, c, p, q))
}

/// `n P` by double-and-add; negative `n` negates.
pub fn ec_scalar<F: Field>(
    k: &F,
    c: &CubicModel<F::Elem>,
    n: i64,
    p: &EcPoint<F::Elem>,
) -> Result<EcPoint<F::Elem>> {
    if !on_curve(k, c, p) {
        return Err(Error::OffCurve);
    }
    let mut acc = EcPoint::Infinity;
    let mut base = if n < 0 { ec_neg(k, p) } else { p.clone() };
    let mut m = n.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            acc = add_unchecked(k, c, &acc, &base);
        }
        m >>= 1;
        if m > 0 {
            base = add_unchecked(k, c, &base, &base);
        }
    }
    Ok(acc)
}

/// The twist `y^2 = x^3 + a2 d x^2 + a4 d^2 x + a6 d^3`, isomorphic to
/// `d y^2 = x^3 + a2 x^2 + a4 x + a6` via `(x, y) -> (d x, d^2 y)`.
pub fn quadratic_twist<F: Field>(
    k: &F,
    c: &CubicModel<F::Elem>,
    d: &F::Elem,
) -> Result<CubicModel<F::Elem>> {
    if k.is_zero(d) {
        return Err(Error::InvalidParameter("twist by zero".into()));
    }
    let d2 = k.square(d);
    Ok(CubicModel {
        a2: k.mul(&c.a2, d),
        a4: k.mul(&c.a4, &d2),
        a6: k.mul(&c.a6, &k.mul(&d2, d)),
    })
}

/// Maps a point of the literal model `d y^2 = x^3 + ...` to the twist
/// returned by [`quadratic_twist`].
pub fn twist_point<F: Field>(k: &F, d: &F::Elem, p: &EcPoint<F::Elem>) -> EcPoint<F::Elem> {
    match p {
        EcPoint::Infinity => EcPoint::Infinity,
        EcPoint::Affine(x, y) => EcPoint::Affine(k.mul(d, x), k.mul(&k.square(d), y)),
    }
}

/// The `d` with `a4(c2) = d^2 a4(c1)` and `a6(c2) = d^3 a6(c1)`, for
/// short models of equal `j` outside `{0, 1728}`.
pub fn twist_factor<F: Field>(
    k: &F,
    c1: &CubicModel<F::Elem>,
    c2: &CubicModel<F::Elem>,
) -> Result<F::Elem> {
    if !k.is_zero(&c1.a2) || !k.is_zero(&c2.a2) {
        return Err(Error::InvalidParameter("twist_factor needs a2 = 0".into()));
    }
    let j1 = j_invariant(k, c1)?;
    let j2 = j_invariant(k, c2)?;
    if j1 != j2 {
        return Err(Error::JMismatch(k.format(&j1), k.format(&j2)));
    }
    if k.is_zero(&c1.a4) || k.is_zero(&c1.a6) {
        return Err(Error::UnsupportedJ(k.format(&j1)));
    }
    let num = k.mul(&c1.a4, &c2.a6);
    let den = k.mul(&c2.a4, &c1.a6);
    let d = k.div(&num, &den).expect("a4, a6 nonzero away from j = 0, 1728");
    debug_assert_eq!(k.mul(&k.square(&d), &c1.a4), c2.a4);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, rint, PrimeField, Ring, RationalField};
    use proptest::prelude::*;

    fn short(a: i64, b: i64) -> CubicModel<crate::algebra::Rational> {
        CubicModel::short(&RationalField, rint(a), rint(b)).unwrap()
    }

    fn pt(x: i64, y: i64) -> EcPoint<crate::algebra::Rational> {
        EcPoint::Affine(rint(x), rint(y))
    }

    #[test]
    fn j_examples() {
        let q = RationalField;
        assert_eq!(j_invariant(&q, &short(-1, 0)).unwrap(), rint(1728));
        assert_eq!(j_invariant(&q, &short(0, 1)).unwrap(), rint(0));
        assert_eq!(j_invariant(&q, &short(-1, 1)).unwrap(), ratio(-6912, 23));
    }

    #[test]
    fn discriminant_examples() {
        let q = RationalField;
        assert_eq!(discriminant(&q, &CubicModel::singular(rint(0), rint(0), rint(0))), rint(0));
        assert_eq!(discriminant(&q, &CubicModel::singular(rint(1), rint(0), rint(0))), rint(0));
        assert_eq!(discriminant(&q, &short(-1, 0)), rint(64));
        assert!(CubicModel::new(&q, rint(1), rint(0), rint(0)).is_err());
        assert!(j_invariant(&q, &CubicModel::singular(rint(0), rint(0), rint(0))).is_err());
    }

    #[test]
    fn medium_form_j_matches_completed_cube() {
        // y^2 = x^3 + x^2 + 1; x -> x - 1/3 gives y^2 = x^3 - x/3 + 29/27
        let q = RationalField;
        let c = CubicModel::new(&q, rint(1), rint(0), rint(1)).unwrap();
        let s = CubicModel::short(&q, ratio(-1, 3), ratio(29, 27)).unwrap();
        assert_eq!(j_invariant(&q, &c).unwrap(), j_invariant(&q, &s).unwrap());
    }

    #[test]
    fn group_law_examples() {
        let q = RationalField;
        let c = short(-1, 0);
        let p = pt(0, 0);
        assert_eq!(ec_add(&q, &c, &p, &EcPoint::Infinity).unwrap(), p);
        assert_eq!(ec_add(&q, &c, &p, &pt(1, 0)).unwrap(), pt(-1, 0));
        assert_eq!(ec_scalar(&q, &c, 2, &p).unwrap(), EcPoint::Infinity);
        assert_eq!(ec_add(&q, &c, &pt(1, 1), &p), Err(Error::OffCurve));
    }

    #[test]
    fn scalar_multiples_stay_on_curve() {
        let q = RationalField;
        let c = short(-1, 1);
        let p = pt(1, 1);
        let mut acc = EcPoint::Infinity;
        for n in 0..8 {
            assert_eq!(ec_scalar(&q, &c, n, &p).unwrap(), acc);
            assert!(on_curve(&q, &c, &acc));
            acc = ec_add(&q, &c, &acc, &p).unwrap();
        }
        let m = ec_scalar(&q, &c, -3, &p).unwrap();
        assert_eq!(ec_add(&q, &c, &m, &ec_scalar(&q, &c, 3, &p).unwrap()).unwrap(), EcPoint::Infinity);
    }

    #[test]
    fn twist_examples() {
        let q = RationalField;
        let c = short(-1, 1);
        assert_eq!(quadratic_twist(&q, &c, &rint(1)).unwrap(), c);
        let c2 = quadratic_twist(&q, &c, &rint(2)).unwrap();
        assert_eq!(c2, short(-4, 8));
        assert_eq!(twist_factor(&q, &c, &c2).unwrap(), rint(2));
        assert_eq!(twist_factor(&q, &c, &c).unwrap(), rint(1));
        assert!(matches!(twist_factor(&q, &c, &short(-1, 0)), Err(Error::JMismatch(..))));
        assert!(quadratic_twist(&q, &c, &rint(0)).is_err());
        // twisting twice by d is the twist by d^2, a square
        let cc = quadratic_twist(&q, &c2, &rint(2)).unwrap();
        assert_eq!(twist_factor(&q, &c, &cc).unwrap(), rint(4));
        assert_eq!(j_invariant(&q, &cc).unwrap(), j_invariant(&q, &c).unwrap());
    }

    #[test]
    fn literal_twist_points_map_across() {
        // 7 y^2 = x^3 - x + 1 at (2, 1)
        let q = RationalField;
        let d = rint(7);
        let tw = quadratic_twist(&q, &short(-1, 1), &d).unwrap();
        assert!(on_curve(&q, &tw, &twist_point(&q, &d, &pt(2, 1))));
    }

    #[test]
    fn twist_factor_rejects_special_j() {
        let q = RationalField;
        assert!(matches!(
            twist_factor(&q, &short(0, 1), &short(0, 8)),
            Err(Error::UnsupportedJ(_))
        ));
    }

    fn all_points(f: &PrimeField, c: &CubicModel<u64>) -> Vec<EcPoint<u64>> {
        let p = f.p();
        let mut out = vec![EcPoint::Infinity];
        for x in 0..p {
            for y in 0..p {
                let pt = EcPoint::Affine(x, y);
                if on_curve(f, c, &pt) {
                    out.push(pt);
                }
            }
        }
        out
    }

    #[test]
    fn group_axioms_exhaustive_small_primes() {
        for p in [5u64, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            for (a2, a4, a6) in [(0, 1, 1), (1, 2, 3), (2, 0, 1)] {
                let Ok(c) = CubicModel::new(&f, f.elem(a2), f.elem(a4), f.elem(a6)) else {
                    continue;
                };
                let pts = all_points(&f, &c);
                for a in &pts {
                    assert_eq!(add_unchecked(&f, &c, a, &ec_neg(&f, a)), EcPoint::Infinity);
                    for b in &pts {
                        let ab = add_unchecked(&f, &c, a, b);
                        assert!(on_curve(&f, &c, &ab));
                        assert_eq!(ab, add_unchecked(&f, &c, b, a));
                        for e in &pts {
                            assert_eq!(
                                add_unchecked(&f, &c, &ab, e),
                                add_unchecked(&f, &c, a, &add_unchecked(&f, &c, b, e))
                            );
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn twist_preserves_j(a in -50i64..50, b in -50i64..50, dn in 1i64..30, dd in 1i64..30, neg: bool) {
            let q = RationalField;
            let Ok(c) = CubicModel::short(&q, rint(a), rint(b)) else { return Ok(()) };
            let d = ratio(if neg { -dn } else { dn }, dd);
            let t = quadratic_twist(&q, &c, &d).unwrap();
            prop_assert_eq!(j_invariant(&q, &t).unwrap(), j_invariant(&q, &c).unwrap());
            if a != 0 && b != 0 {
                let f = twist_factor(&q, &c, &t).unwrap();
                prop_assert_eq!(q.mul(&q.square(&f), c.a4()), t.a4().clone());
            }
        }
    }
}
