//! Curve models, elliptic-curve arithmetic, twists and the Jacobian of a
//! genus-one quartic.

mod hyperelliptic;
mod quartic;
mod serial;
mod weierstrass;

pub use hyperelliptic::{hyperelliptic_genus, HyperellipticModel};
pub use quartic::{quartic_jacobian, QuarticJacobian, QuarticModel};
pub use serial::{cubic_json, hyperelliptic_json, quartic_json, rational_pair, CurveJson, RationalPair};
pub use weierstrass::{
    add_unchecked, discriminant, ec_add, ec_neg, ec_scalar, j_invariant, on_curve, quadratic_twist,
    twist_factor, twist_point, CubicModel, EcPoint,
};
