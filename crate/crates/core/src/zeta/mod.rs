//! Point counts over `F_{p^k}`, L-polynomials and the isogeny
//! decompositions they detect.

mod count;
mod lpoly;
mod remarks;
mod zech;

pub use count::{
    count_c, count_hyperelliptic, count_weierstrass, family_mod_p, thm1_mod_p, CountSpec, Infinity,
};
pub use lpoly::{
    lpoly_divides, lpoly_from_counts, lpoly_quotient, quartic_factor, within_weil, LPolynomial,
};
pub use remarks::{
    check_prime, check_prime_with, check_remarks, check_remarks_with, overdetermination,
    overdetermination_suite, c_count_consistency, simplicity_sample, PrimeRemarks, CCountRow,
    RemarksReport, SimplicityWitness, Skipped, DEFAULT_PRIMES, SIMPLICITY_SAMPLE_A,
};
pub use zech::{char_product_sum, ZechField, ZECH_LIMIT};
