//! Quadratic twists of the reference curve picked up by rational points
//! of `H`.

mod census;
mod factor;

pub use census::{
    census, census_tsv, growth_table, growth_tsv, independence_screen, rationals_of_height, reference_value,
    CensusSummary, GrowthRow, TwistRecord, TwistStatus, CENSUS_HEADER, RELATION_BOUND, TORSION_BOUND,
};
pub use factor::{factor, is_probable_prime, is_squarefree_by_trial, squarefree_part, RHO_ATTEMPTS, RHO_ITERATIONS, TRIAL_LIMIT};
