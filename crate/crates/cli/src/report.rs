//! The result document shared by every subcommand and its two renderings.

use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Value,
}

/// One named check inside a verification suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// An exact check: it holds or it does not.
    pub fn exact(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, residual: None, tolerance: None, detail: None }
    }

    /// A floating-point check against a tolerance; NaN fails.
    pub fn within(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Check { name: name.into(), pass: residual.is_finite() && residual < tolerance, residual: Some(residual), tolerance: Some(tolerance), detail: None }
    }

    /// A check that could not be evaluated.
    pub fn error(name: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Check { name: name.into(), pass: false, residual: None, tolerance: None, detail: Some(err.to_string()) }
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    /// Folds a fallible exact check.
    pub fn from_result(name: impl Into<String>, r: sov_core::Result<bool>) -> Self {
        match r {
            Ok(b) => Check::exact(name, b),
            Err(e) => Check::error(name, e),
        }
    }

    /// Folds a fallible numeric check.
    pub fn from_residual(name: impl Into<String>, r: sov_core::Result<f64>, tolerance: f64) -> Self {
        match r {
            Ok(x) => Check::within(name, x, tolerance),
            Err(e) => Check::error(name, e),
        }
    }
}

/// `{command, inputs, status, payload, residuals}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub status: Status,
    pub payload: Value,
    pub residuals: Vec<Check>,
    /// Plain-text rendering of a value payload.
    #[serde(skip)]
    pub text: Option<String>,
}

impl CommandResult {
    /// A computed value: `text` for the terminal, `payload` for `--json`.
    pub fn value(command: &str, inputs: BTreeMap<String, Value>, payload: Value, text: String) -> Self {
        CommandResult { command: command.into(), inputs, status: Status::Value, payload, residuals: Vec::new(), text: Some(text) }
    }

    /// Status is `pass` exactly when every check passed.
    pub fn verdict(command: &str, inputs: BTreeMap<String, Value>, checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let status = if passed == checks.len() { Status::Pass } else { Status::Fail };
        let payload = Value::String(format!("{passed}/{} checks passed", checks.len()));
        CommandResult { command: command.into(), inputs, status, payload, residuals: checks, text: None }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass | Status::Value => 0,
            Status::Fail => 1,
        }
    }

    /// Plain text: the rendering for value commands, one line per check
    /// followed by a summary for verification suites.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.residuals {
            let _ = write!(out, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
            if let (Some(r), Some(t)) = (c.residual, c.tolerance) {
                let _ = write!(out, "  residual={r:.3e} tol={t:.0e}");
            }
            if let Some(d) = &c.detail {
                let _ = write!(out, "  ({d})");
            }
            out.push('\n');
        }
        match (&self.text, &self.payload) {
            (Some(t), _) => out.push_str(t),
            (None, Value::String(s)) => out.push_str(s),
            (None, other) => out.push_str(&serde_json::to_string_pretty(other).unwrap_or_default()),
        }
        out.push('\n');
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("result documents always serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_and_exit_codes() {
        let ok = CommandResult::verdict("verify", BTreeMap::new(), vec![Check::exact("a", true)]);
        assert_eq!(ok.exit_code(), 0);
        let bad = CommandResult::verdict("verify", BTreeMap::new(), vec![Check::exact("a", true), Check::within("b", f64::NAN, 1.0)]);
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.exit_code(), 1);
        assert!(bad.render_text().ends_with("1/2 checks passed\n"));
    }

    #[test]
    fn json_has_the_five_fields() {
        let r = CommandResult::value("c", BTreeMap::new(), Value::String("1".into()), "1".into());
        assert_eq!(r.render_text(), "1\n");
        let v: Value = serde_json::from_str(&r.render_json()).unwrap();
        for k in ["command", "inputs", "status", "payload", "residuals"] {
            assert!(v.get(k).is_some(), "{k}");
        }
    }
}
