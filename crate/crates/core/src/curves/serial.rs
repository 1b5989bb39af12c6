//! JSON form of curve models: `{"model": ..., "coeffs": [[num, den], ...]}`
//! with coefficients of the right-hand side in ascending degree.

use serde::Serialize;

use super::{CubicModel, HyperellipticModel, QuarticModel};
use crate::algebra::{PolyRing, Rational, RationalField};

pub type RationalPair = [String; 2];

pub fn rational_pair(q: &Rational) -> RationalPair {
    [q.numer().to_string(), q.denom().to_string()]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveJson {
    pub model: &'static str,
    pub coeffs: Vec<RationalPair>,
}

impl CurveJson {
    fn new(model: &'static str, coeffs: &[Rational]) -> Self {
        CurveJson {
            model,
            coeffs: coeffs.iter().map(rational_pair).collect(),
        }
    }
}

pub fn cubic_json(c: &CubicModel<Rational>) -> CurveJson {
    CurveJson::new("cubic", &c.rhs_coeffs(&RationalField))
}

pub fn quartic_json(q: &QuarticModel<Rational>) -> CurveJson {
    CurveJson::new("quartic", q.coeffs())
}

/// Serializes the integral model `y^2 = twist * f`.
pub fn hyperelliptic_json(h: &HyperellipticModel<Rational>) -> CurveJson {
    let ring = PolyRing::new(RationalField, "x");
    CurveJson::new("hyperelliptic", h.integral_rhs(&ring).coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, rint};

    #[test]
    fn canonical_strings() {
        let c = CubicModel::new(&RationalField, rint(0), ratio(-4, 6), rint(1)).unwrap();
        let js = serde_json::to_string(&cubic_json(&c)).unwrap();
        assert_eq!(
            js,
            r#"{"model":"cubic","coeffs":[["1","1"],["-2","3"],["0","1"],["1","1"]]}"#
        );
    }
}
