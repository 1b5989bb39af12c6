//! Moving the construction onto an arbitrary curve with `j != 0, 1728`.

use super::family::{h_poly, params_from_j, reference_curve, ConstructionParams};
use super::maps::{covering_maps, TwistMap};
use crate::algebra::{PolyRing, Rational, RationalField, RationalFunctionField, Ring};
use crate::curves::{j_invariant, twist_factor, CubicModel, EcPoint, HyperellipticModel};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Transport {
    pub params: ConstructionParams,
    /// `E_user` is the `d`-twist of `y^2 = x^3 - A x + A`.
    pub d: Rational,
    pub reference: CubicModel<Rational>,
    pub target: CubicModel<Rational>,
    /// `d y^2 = h_A(x)`.
    pub h_d: HyperellipticModel<Rational>,
    pub maps: [TwistMap<Rational>; 2],
    /// `a2 / 3` of the target; points are shifted by `-shift` in `x`.
    shift: Rational,
}

/// `(x, y) -> (x - a2/3, y)` takes `y^2 = x^3 + a x + b` to the model.
fn short_form(c: &CubicModel<Rational>) -> Result<(CubicModel<Rational>, Rational)> {
    let q = RationalField;
    let a2 = c.a2();
    let third = Rational::new(1.into(), 3.into());
    let a = c.a4() - a2 * a2 * &third;
    let b = c.a6() - a2 * c.a4() * &third + Rational::new(2.into(), 27.into()) * a2 * a2 * a2;
    Ok((CubicModel::short(&q, a, b)?, a2 * &third))
}

pub fn transport_to_curve(e_user: &CubicModel<Rational>) -> Result<Transport> {
    let q = RationalField;
    let j = j_invariant(&q, e_user)?;
    let params = params_from_j(&j)?;
    let reference = reference_curve(&q, &params.a)?;
    let (short, shift) = short_form(e_user)?;
    let d = twist_factor(&q, &reference, &short)?;
    let ring = PolyRing::new(q, "x");
    let h_d = HyperellipticModel::new(&ring, h_poly(&ring, &params.a))?.quadratic_twist(&q, &d)?;
    let maps = covering_maps(&q, &params.a)?.twist_maps()?;
    Ok(Transport {
        params,
        d,
        reference,
        target: e_user.clone(),
        h_d,
        maps,
        shift,
    })
}

impl Transport {
    /// Image on the target of a point `(x, y)` of `d y^2 = h_A(x)` under
    /// the `i`-th twisted map (`i` is 0 or 1).
    pub fn map_point(&self, i: usize, x: &Rational, y: &Rational) -> Result<EcPoint<Rational>> {
        let q = RationalField;
        let ring = PolyRing::new(q, "x");
        if !self.h_d.on_curve(&ring, x, y) {
            return Err(Error::OffCurve);
        }
        let kt = RationalFunctionField::new(q, "t");
        Ok(match self.maps[i].eval(&kt, x, y)? {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine(gx, gy) => {
                let d = &self.d;
                EcPoint::Affine(q.sub(&q.mul(d, &gx), &self.shift), q.mul(&q.square(d), &gy))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rint;
    use crate::curves::{on_curve, quadratic_twist};

    #[test]
    fn reference_curve_round_trip() {
        let q = RationalField;
        let e = reference_curve(&q, &rint(-27)).unwrap();
        let t = transport_to_curve(&e).unwrap();
        assert_eq!(t.d, rint(1));
        assert_eq!(t.params.a, rint(-27));
        let ring = PolyRing::new(q, "x");
        assert_eq!(t.h_d.f(), &h_poly(&ring, &rint(-27)));
        assert_eq!(t.h_d.twist(), &rint(1));
    }

    #[test]
    fn twisted_input() {
        let q = RationalField;
        let e = reference_curve(&q, &rint(1)).unwrap();
        let e2 = quadratic_twist(&q, &e, &rint(2)).unwrap();
        let t = transport_to_curve(&e2).unwrap();
        assert_eq!(t.d, rint(2));
        assert_eq!(t.h_d.twist(), &rint(2));
        let t1 = transport_to_curve(&e).unwrap();
        for i in 0..2 {
            let p = t1.map_point(i, &rint(-1), &rint(8)).unwrap();
            assert!(on_curve(&q, &e, &p));
        }
    }

    #[test]
    fn medium_form_target() {
        // the reference curve for A = -27 under x -> x + 1
        let q = RationalField;
        let a = rint(-27);
        // (x+1)^3 + 27(x+1) - 27 = x^3 + 3x^2 + 30x + 1
        let e = CubicModel::new(&q, rint(3), rint(30), rint(1)).unwrap();
        let t = transport_to_curve(&e).unwrap();
        assert_eq!(t.params.a, a);
        assert_eq!(t.d, rint(1));
        let p = t.map_point(0, &rint(0), &rint(0));
        assert!(matches!(p, Err(Error::OffCurve)));
        let p = t.map_point(1, &rint(-1), &rint(8)).unwrap();
        assert!(on_curve(&q, &e, &p));
    }

    #[test]
    fn special_j_rejected() {
        let q = RationalField;
        let e0 = CubicModel::short(&q, rint(0), rint(1)).unwrap();
        assert!(matches!(transport_to_curve(&e0), Err(Error::UnsupportedJ(_))));
        let e1728 = CubicModel::short(&q, rint(-1), rint(0)).unwrap();
        assert!(matches!(transport_to_curve(&e1728), Err(Error::UnsupportedJ(_))));
    }
}
