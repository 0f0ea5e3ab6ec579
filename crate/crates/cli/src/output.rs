//! Text and JSON renderings of reports.

use serde_json::{json, Value};

use crate::catalogue::CheckInfo;
use crate::suite::Summary;
use zlab::Report;

pub fn report_line(r: &Report) -> String {
    let params = r.params.to_string();
    let detail = match &r.reason {
        Some(code) => format!("{code}: {}", r.witness.as_str().unwrap_or_default()),
        None => String::new(),
    };
    format!("{:<28} {:<18} {:<8} {:>8}ms  {}", r.check, params, r.status.to_string(), r.millis, detail)
        .trim_end()
        .to_string()
}

pub fn header() -> String {
    format!("{:<28} {:<18} {:<8} {:>10}  {}", "CHECK", "PARAMS", "STATUS", "TIME", "REASON")
}

pub fn summary_line(s: &Summary) -> String {
    let mut line = format!("pass {}  fail {}  skipped {}  ({} ms)", s.pass, s.fail, s.skipped, s.millis);
    if !s.not_applicable.is_empty() {
        line.push_str(&format!("  not applicable: {}", s.not_applicable.join(", ")));
    }
    line
}

pub fn suite_json(reports: &[Report], summary: &Summary) -> Value {
    json!({"reports": reports, "summary": summary})
}

/// The suite document with every timing field removed, for comparing runs.
pub fn without_timings(doc: &Value) -> Value {
    let mut doc = doc.clone();
    if let Some(reports) = doc.get_mut("reports").and_then(Value::as_array_mut) {
        for r in reports {
            if let Some(obj) = r.as_object_mut() {
                obj.remove("millis");
            }
        }
    }
    if let Some(obj) = doc.get_mut("summary").and_then(Value::as_object_mut) {
        obj.remove("millis");
    }
    doc
}

pub fn catalogue_text(checks: &[CheckInfo]) -> String {
    let mut out = String::new();
    for c in checks {
        out.push_str(&format!("{} [{}]\n  {}\n  default grid:", c.id, c.module, c.statement));
        for pt in c.default_points() {
            out.push_str(&format!(" {}_{}/p={}", pt.variant, pt.n, pt.p));
            if let Some(d) = pt.degree {
                out.push_str(&format!("/D={d}"));
            }
        }
        out.push('\n');
    }
    out
}

pub fn catalogue_json(checks: &[CheckInfo]) -> Value {
    json!(checks.iter().map(CheckInfo::entry).collect::<Vec<_>>())
}
