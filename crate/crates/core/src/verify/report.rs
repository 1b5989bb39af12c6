use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check. A failing report always carries a witness: the
/// nonzero residual or the offending point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl VerificationReport {
    pub fn pass(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn pass_with(check: impl Into<String>, witness: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            status: Status::Pass,
            witness: Some(witness.into()),
        }
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    /// Pass iff `ok`; otherwise the lazily formatted witness.
    pub fn expect(check: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(check)
        } else {
            Self::fail(check, witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}
