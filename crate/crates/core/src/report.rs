//! Expected-vs-computed check reporting: the record type shared by the whole
//! verification registry plus deterministic JSON and CSV emission.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("csv output was not utf-8")]
    CsvEncoding,
}

/// Where an expected value comes from: quoted from the published reference,
/// trivial arithmetic, or derived by an independent computation here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    KnownDiscrepancy,
    SignMismatch,
    Mismatch,
    Skipped,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "paper",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        })
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::KnownDiscrepancy => "known-discrepancy",
            Status::SignMismatch => "sign-mismatch",
            Status::Mismatch => "mismatch",
            Status::Skipped => "skipped",
        })
    }
}

/// One verification record. Values are carried as canonical strings so the
/// record survives JSON and CSV round trips byte-for-byte; rationals print
/// as `p/q` (or `p` for integers) and are never converted to floats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub section: String,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
    pub status: Status,
}

impl CheckReport {
    /// Exact comparison; anything other than equality is a plain mismatch.
    pub fn compare<T: PartialEq + fmt::Display>(
        id: &str,
        section: &str,
        provenance: Provenance,
        expected: &T,
        computed: &T,
    ) -> CheckReport {
        let status = if expected == computed {
            Status::Match
        } else {
            Status::Mismatch
        };
        CheckReport {
            id: id.to_owned(),
            section: section.to_owned(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            provenance,
            status,
        }
    }

    /// Exact comparison that distinguishes an exact sign flip from a general
    /// mismatch.
    pub fn compare_signed<T>(
        id: &str,
        section: &str,
        provenance: Provenance,
        expected: &T,
        computed: &T,
    ) -> CheckReport
    where
        T: PartialEq + fmt::Display + Clone + std::ops::Neg<Output = T>,
    {
        let status = if expected == computed {
            Status::Match
        } else if *expected == -computed.clone() {
            Status::SignMismatch
        } else {
            Status::Mismatch
        };
        CheckReport {
            id: id.to_owned(),
            section: section.to_owned(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            provenance,
            status,
        }
    }

    /// A check whose published expected value is known to disagree with the
    /// computed one; passes the suite under its own status so the
    /// disagreement stays visible.
    pub fn known_discrepancy(
        id: &str,
        section: &str,
        printed: &str,
        computed: impl fmt::Display,
    ) -> CheckReport {
        CheckReport {
            id: id.to_owned(),
            section: section.to_owned(),
            expected: printed.to_owned(),
            computed: computed.to_string(),
            provenance: Provenance::Paper,
            status: Status::KnownDiscrepancy,
        }
    }

    /// Floating-point check: passes when the residual is strictly below the
    /// tolerance, and always records the residual itself.
    pub fn float_within(
        id: &str,
        section: &str,
        provenance: Provenance,
        tolerance: f64,
        residual: f64,
    ) -> CheckReport {
        let status = if residual.is_finite() && residual < tolerance {
            Status::Match
        } else {
            Status::Mismatch
        };
        CheckReport {
            id: id.to_owned(),
            section: section.to_owned(),
            expected: format!("< {tolerance:e}"),
            computed: format!("{residual:.3e}"),
            provenance,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Match | Status::KnownDiscrepancy | Status::Skipped)
    }
}

pub fn to_json(reports: &[CheckReport]) -> Result<String, ReportError> {
    let mut text = serde_json::to_string_pretty(reports)?;
    text.push('\n');
    Ok(text)
}

pub fn from_json(text: &str) -> Result<Vec<CheckReport>, ReportError> {
    Ok(serde_json::from_str(text)?)
}

pub const CSV_HEADER: &str = "id,section,expected,computed,provenance,status";

pub fn to_csv(reports: &[CheckReport]) -> Result<String, ReportError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for report in reports {
        writer.serialize(report)?;
    }
    let bytes = writer.into_inner().map_err(|e| ReportError::Csv(e.into_error().into()))?;
    let mut text = String::from_utf8(bytes).map_err(|_| ReportError::CsvEncoding)?;
    if reports.is_empty() {
        text = format!("{CSV_HEADER}\n");
    }
    Ok(text)
}

/// 0 when every report passed, 1 otherwise. The distinct exit code for an
/// empty filtered run is the caller's concern.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    i32::from(!reports.iter().all(CheckReport::passed))
}
