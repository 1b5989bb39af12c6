//! Symbolic and numeric checks of the identities behind the constructions.

mod independence;
mod report;
mod symbolic;

pub use independence::{check_maps_pointwise, images_at, verify_independence, verify_specializations};
pub use report::{all_pass, Status, VerificationReport};
pub use symbolic::{
    thm1_residual, thm2_residual, verify_covering, verify_maps_cleared, verify_maps_on_curve,
    verify_maps_on_curve_symbolic, verify_quotients, verify_quotients_symbolic, verify_thm1, verify_thm1_numeric,
    verify_thm1_with, verify_thm2, verify_thm2_with, Thm1Generators,
};

use crate::algebra::{Rational, RationalField};
use crate::constructions::build_family;

/// Which group of checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// The space curve `C` and its two maps.
    One,
    /// The genus 5 family, its maps and its quotients.
    Two,
    All,
}

/// Every check for the given `A` (and `B`, used by the first theorem),
/// with numeric witnesses over `F_p`.
pub fn run_suite(theorem: Theorem, a: &Rational, b: &Rational, p: u64) -> Vec<VerificationReport> {
    let mut out = vec![];
    if matches!(theorem, Theorem::One | Theorem::All) {
        out.push(verify_thm1());
        out.push(verify_thm1_numeric(a, b, p));
    }
    if matches!(theorem, Theorem::Two | Theorem::All) {
        out.extend(verify_thm2());
        out.push(match build_family(&RationalField, a) {
            Ok(_) => VerificationReport::pass("genus-and-squarefree"),
            Err(e) => VerificationReport::fail("genus-and-squarefree", e.to_string()),
        });
        out.extend(verify_maps_on_curve_symbolic());
        out.extend(verify_maps_on_curve(a));
        out.extend(verify_independence(a, p));
        out.extend(verify_quotients_symbolic());
        out.extend(verify_quotients(&RationalField, a));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, rint};

    #[test]
    fn suite_passes_for_reference_a() {
        let reps = run_suite(Theorem::All, &rint(-27), &rint(-27), 101);
        assert!(all_pass(&reps), "{reps:?}");
        let names: std::collections::HashSet<_> = reps.iter().map(|r| r.check.as_str()).collect();
        assert_eq!(names.len(), reps.len());
    }

    #[test]
    fn suite_reports_ramification() {
        let reps = run_suite(Theorem::Two, &ratio(27, 4), &rint(1), 101);
        assert!(!all_pass(&reps));
        assert!(reps.iter().filter(|r| !r.passed()).all(|r| r.witness.is_some()));
    }

    #[test]
    fn report_json_shape() {
        let r = VerificationReport::pass("x");
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"check":"x","status":"pass"}"#);
        let r = VerificationReport::fail("x", "w");
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"check":"x","status":"fail","witness":"w"}"#
        );
    }
}
