//! Every object of the construction, built from `j` or `A`.

mod family;
mod maps;
mod parametrization;
mod quotients;
mod thm1;
mod transport;

pub use family::{
    build_family, eprime_curve, g_poly, h1_poly, h_poly, params_from_a, params_from_j, quartic_d,
    reference_curve, ConstructionParams, Family, CURVE_NAMES,
};
pub use maps::{
    covering_maps, covering_maps_with_scale, default_w_scale, function_field_h, Covering,
    CoveringMap, FfElem, FunctionField, TwistMap,
};
pub use parametrization::{f_xz, parametrization, parametrize, ParametrizationData};
pub use quotients::{quotient_maps, QuotientMaps};
pub use thm1::{build_thm1, SpaceCurveC};
pub use transport::{transport_to_curve, Transport};
