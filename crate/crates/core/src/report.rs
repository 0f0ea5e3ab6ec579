//! Machine-readable outcome of a verification check.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::lie::Variant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub p: u32,
    pub variant: Variant,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<u32>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{} p={}", self.variant, self.n, self.p)?;
        if let Some(d) = self.degree {
            write!(f, " D={d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: Params,
    pub status: Status,
    /// Polynomials in text format, counts, or other evidence.
    pub witness: Value,
    /// Error code for FAIL and SKIPPED entries.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub millis: u64,
}

impl Report {
    /// Turns the result of a check into a report. Precondition failures
    /// become SKIPPED, every other error is a FAIL.
    pub fn from_result(check: &str, params: Params, result: Result<Value>, millis: u64) -> Self {
        let (status, witness, reason) = match result {
            Ok(w) => (Status::Pass, w, None),
            Err(e) => {
                let status = if e.is_skip() { Status::Skipped } else { Status::Fail };
                (status, Value::String(e.to_string()), Some(e.code().to_string()))
            }
        };
        Self { check: check.to_string(), params, status, witness, reason, millis }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use serde_json::json;

    fn params() -> Params {
        Params { n: 2, p: 3, variant: Variant::Gl, degree: None }
    }

    #[test]
    fn statuses_follow_error_kinds() {
        let ok = Report::from_result("c", params(), Ok(json!({"k": 1})), 3);
        assert_eq!(ok.status, Status::Pass);
        let skip = Report::from_result("c", params(), Err(Error::UnsupportedCharacteristic("x".into())), 0);
        assert_eq!(skip.status, Status::Skipped);
        assert_eq!(skip.reason.as_deref(), Some("UnsupportedCharacteristic"));
        let fail = Report::from_result("c", params(), Err(Error::TheoremViolation("x".into())), 0);
        assert!(fail.is_fail());
    }

    #[test]
    fn json_shape() {
        let r = Report::from_result("lemma3", params(), Ok(json!(5)), 7);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["params"], json!({"n": 2, "p": 3, "variant": "gl"}));
        assert_eq!(v["status"], json!("PASS"));
        assert!(v.get("reason").is_none());
    }
}
