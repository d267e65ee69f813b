use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// One measured quantity compared against a threshold.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    /// Where the checked relation comes from, e.g. `"(A3)"` or `"derived: quadrature"`.
    pub anchor: String,
    /// Acceptance criterion this check belongs to, if any.
    pub criterion: Option<u8>,
    pub status: Status,
    pub measured: f64,
    pub threshold: f64,
    pub detail: String,
}

impl Check {
    fn new(id: &str, anchor: &str, criterion: Option<u8>, ok: bool, measured: f64, threshold: f64, detail: String) -> Self {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            criterion,
            status: if ok { Status::Pass } else { Status::Fail },
            measured,
            threshold,
            detail,
        }
    }

    /// Passes iff `measured ≤ threshold` (NaN fails).
    pub fn at_most(id: &str, anchor: &str, criterion: Option<u8>, measured: f64, threshold: f64, detail: impl Into<String>) -> Self {
        Check::new(id, anchor, criterion, measured <= threshold, measured, threshold, detail.into())
    }

    /// Passes iff `measured ≥ threshold` (NaN fails).
    pub fn at_least(id: &str, anchor: &str, criterion: Option<u8>, measured: f64, threshold: f64, detail: impl Into<String>) -> Self {
        Check::new(id, anchor, criterion, measured >= threshold, measured, threshold, detail.into())
    }

    /// Exact comparison: `measured` counts mismatches and must be zero.
    pub fn exact(id: &str, anchor: &str, criterion: Option<u8>, mismatches: usize, detail: impl Into<String>) -> Self {
        Check::new(id, anchor, criterion, mismatches == 0, mismatches as f64, 0.0, detail.into())
    }

    pub fn report_only(id: &str, anchor: &str, criterion: Option<u8>, measured: f64, detail: impl Into<String>) -> Self {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            criterion,
            status: Status::Skip,
            measured,
            threshold: f64::NAN,
            detail: detail.into(),
        }
    }

    /// A computation that raised instead of producing a value.
    pub fn errored(id: &str, anchor: &str, criterion: Option<u8>, err: impl std::fmt::Display) -> Self {
        Check::new(id, anchor, criterion, false, f64::NAN, f64::NAN, format!("error: {err}"))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

/// Seventeen significant digits; non-finite values as strings.
pub fn fmt17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(fmt17(x).parse::<f64>().unwrap_or(x))
    } else {
        json!(format!("{x}"))
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// `Some(true)` when every check of criterion `k` passes or is report-only.
    pub fn criterion_passed(&self, k: u8) -> Option<bool> {
        let mut any = false;
        let mut ok = true;
        for c in self.checks.iter().filter(|c| c.criterion == Some(k)) {
            any = true;
            ok &= c.status != Status::Fail;
        }
        any.then_some(ok)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "anchor": c.anchor,
                    "criterion": c.criterion,
                    "status": c.status.as_str(),
                    "measured": num(c.measured),
                    "threshold": num(c.threshold),
                    "detail": c.detail,
                })
            })
            .collect();
        json!({ "passed": self.passed(), "checks": checks })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,anchor,criterion,status,measured,threshold\n");
        for c in &self.checks {
            let crit = c.criterion.map(|k| k.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},\"{}\",{},{},{},{}\n",
                c.id,
                c.anchor.replace('"', "'"),
                crit,
                c.status.as_str(),
                fmt17(c.measured),
                fmt17(c.threshold)
            ));
        }
        out
    }
}
