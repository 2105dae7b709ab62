//! Structured check results: a tree whose leaves are single checks.

use std::fmt::Write as _;
use std::time::Duration;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Report>,
    /// Wall time; kept out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

/// Pass, fail and skip counts over the leaves.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Report {
    pub fn leaf(name: impl Into<String>, status: Status, witness: Option<Value>) -> Report {
        Report { name: name.into(), status, witness, children: Vec::new(), elapsed: None }
    }

    pub fn check(name: impl Into<String>, ok: bool, witness: Value) -> Report {
        Report::leaf(name, if ok { Status::Pass } else { Status::Fail }, Some(witness))
    }

    pub fn skip(name: impl Into<String>, reason: impl Into<String>) -> Report {
        Report::leaf(name, Status::Skip, Some(Value::String(reason.into())))
    }

    /// A failed leaf carrying the error message.
    pub fn error(name: impl Into<String>, err: &crate::Error) -> Report {
        Report::leaf(name, Status::Fail, Some(serde_json::json!({ "error": err.to_string() })))
    }

    /// Turns an error from building the report into a failed leaf.
    pub fn catch(name: &str, f: impl FnOnce() -> Result<Report>) -> Report {
        f().unwrap_or_else(|e| Report::error(name, &e))
    }

    /// Fails if any child fails, passes if any child passes, else skips.
    pub fn group(name: impl Into<String>, children: Vec<Report>) -> Report {
        let status = if children.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if children.iter().any(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Skip
        };
        Report { name: name.into(), status, witness: None, children, elapsed: None }
    }

    pub fn timed(mut self, elapsed: Duration) -> Report {
        self.elapsed = Some(elapsed);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn find(&self, path: &[&str]) -> Option<&Report> {
        match path.split_first() {
            None => Some(self),
            Some((head, rest)) => self.children.iter().find(|c| c.name == *head)?.find(rest),
        }
    }

    pub fn tally(&self) -> Tally {
        if self.children.is_empty() {
            let mut t = Tally::default();
            match self.status {
                Status::Pass => t.pass = 1,
                Status::Fail => t.fail = 1,
                Status::Skip => t.skip = 1,
            }
            return t;
        }
        self.children.iter().map(Report::tally).fold(Tally::default(), |a, b| Tally {
            pass: a.pass + b.pass,
            fail: a.fail + b.fail,
            skip: a.skip + b.skip,
        })
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// Indented plain-text table, with timings where recorded.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        let t = self.tally();
        let _ = writeln!(out, "\n{} passed, {} failed, {} skipped", t.pass, t.fail, t.skip);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let label = format!("{}{}", "  ".repeat(depth), self.name);
        let time = self.elapsed.map(|d| format!("{:>10.3}s", d.as_secs_f64())).unwrap_or_default();
        let detail = match (&self.witness, self.children.is_empty()) {
            (Some(w), true) => summarize(w),
            _ => String::new(),
        };
        let _ = writeln!(out, "{label:<40} {:<5}{time} {detail}", self.status.label());
        for c in &self.children {
            c.render_into(out, depth + 1);
        }
    }
}

fn summarize(w: &Value) -> String {
    let s = match w {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.chars().count() > 80 {
        format!("{}...", s.chars().take(77).collect::<String>())
    } else {
        s
    }
}

/// A JSON number when the integer fits in `i64`, a decimal string otherwise.
pub fn big_json(x: &BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

pub fn bigs_json(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_status_and_tally() {
        let g = Report::group(
            "g",
            vec![Report::check("a", true, Value::Null), Report::skip("b", "n/a"), Report::check("c", false, Value::Null)],
        );
        assert_eq!(g.status, Status::Fail);
        assert_eq!(g.tally(), Tally { pass: 1, fail: 1, skip: 1 });
        assert_eq!(Report::group("s", vec![Report::skip("b", "n/a")]).status, Status::Skip);
        assert_eq!(g.find(&["c"]).unwrap().status, Status::Fail);
    }

    #[test]
    fn json_omits_timing() {
        let r = Report::check("a", true, Value::from(3)).timed(Duration::from_secs(2));
        assert_eq!(r.to_json(), serde_json::json!({"name": "a", "status": "pass", "witness": 3}));
        assert!(r.render_table().contains("2.000s"));
    }

    #[test]
    fn big_integers_fall_back_to_strings() {
        assert_eq!(big_json(&BigInt::from(-5)), Value::from(-5));
        let huge = BigInt::from(i64::MAX) * 4;
        assert_eq!(big_json(&huge), Value::String(huge.to_string()));
    }
}
