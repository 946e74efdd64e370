//! Dispatch from parsed arguments to result documents.

use crate::args::{ApplyMArgs, Cli, Command, SeppolyArgs, VerifyArgs, WeightArgs};
use crate::report::{Check, CommandResult};
use crate::suites::run_suite;
use serde_json::{json, Value};
use sov_core::exactalg::parse::parse_laurent;
use sov_core::exactalg::Sym;
use sov_core::macdonald::{macdonald_poly, Weight};
use sov_core::sov::{apply_m, c_lambda, sep_poly, TVARS};
use sov_core::Error;
use std::collections::BTreeMap;

/// A request the program cannot act on; reported with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn m_label(mu: &Weight) -> String {
    let parts: Vec<String> = mu.parts().iter().map(i32::to_string).collect();
    format!("m[{}]", parts.join(","))
}

fn weight_json(l: &Weight) -> Value {
    json!(l.parts())
}

fn inputs(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Bad input is a usage error; anything else means a computation failed.
fn classify(command: &str, ins: BTreeMap<String, Value>, e: Error) -> Result<CommandResult, UsageError> {
    match e {
        Error::InvalidWeight(_) | Error::Parse { .. } | Error::NotSymmetric(_) | Error::Domain(_) => {
            Err(UsageError(e.to_string()))
        }
        other => Ok(CommandResult::verdict(command, ins, vec![Check::error(command, other)])),
    }
}

fn macdonald(a: &WeightArgs) -> Result<CommandResult, UsageError> {
    let ins = inputs(&[("weight", weight_json(&a.weight))]);
    match macdonald_poly(&a.weight) {
        Ok(p) => {
            let coefficients: Vec<Value> = p
                .expansion
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(mu, c)| json!({"monomial": m_label(mu), "coefficient": c.render()}))
                .collect();
            let payload = json!({"weight": weight_json(&a.weight), "basis": "monomial symmetric", "coefficients": coefficients});
            Ok(CommandResult::value("macdonald", ins, payload, p.render()))
        }
        Err(e) => classify("macdonald", ins, e),
    }
}

fn seppoly(a: &SeppolyArgs) -> Result<CommandResult, UsageError> {
    if let Some(n) = a.n {
        if n != a.weight.n() {
            return Err(UsageError(format!("--n {n} does not match the weight {}, which has {} parts", a.weight, a.weight.n())));
        }
    }
    let ins = inputs(&[("weight", weight_json(&a.weight)), ("n", json!(a.weight.n()))]);
    match sep_poly(&a.weight) {
        Ok(s) => {
            let coefficients: Vec<Value> = s
                .chi
                .iter()
                .map(|(k, c)| json!({"power": k, "coefficient": c.render()}))
                .collect();
            let payload = json!({"weight": weight_json(&a.weight), "basis": "powers of y", "coefficients": coefficients});
            Ok(CommandResult::value("seppoly", ins, payload, s.render()))
        }
        Err(e) => classify("seppoly", ins, e),
    }
}

fn apply_m_cmd(a: &ApplyMArgs) -> Result<CommandResult, UsageError> {
    let ins = inputs(&[("expression", json!(a.expression))]);
    let f = parse_laurent(&a.expression, &TVARS).map_err(|e| UsageError(e.to_string()))?;
    if !f.is_symmetric_in(Sym::T1, Sym::T2) {
        return Err(UsageError(format!("{} is not symmetric under t1 <-> t2", a.expression)));
    }
    match apply_m(&f) {
        Ok(g) => {
            let coefficients: Vec<Value> = g
                .terms()
                .iter()
                .rev()
                .map(|(e, c)| json!({"exponents": e.as_slice(), "coefficient": c.render()}))
                .collect();
            let payload = json!({"basis": "x^a y1^b y2^c", "coefficients": coefficients});
            Ok(CommandResult::value("apply-m", ins, payload, g.render()))
        }
        Err(e) => classify("apply-m", ins, e),
    }
}

fn c_cmd(a: &WeightArgs) -> Result<CommandResult, UsageError> {
    let ins = inputs(&[("weight", weight_json(&a.weight))]);
    match c_lambda(&a.weight) {
        Ok(c) => {
            let payload = json!({"weight": weight_json(&a.weight), "basis": "scalar", "coefficients": [c.render()]});
            Ok(CommandResult::value("c", ins, payload, c.render()))
        }
        Err(e) => classify("c", ins, e),
    }
}

fn verify(a: &VerifyArgs) -> CommandResult {
    let ins = inputs(&[
        ("suite", json!(a.suite.name())),
        ("min", json!(a.min)),
        ("max", json!(a.max)),
        ("q", json!(a.q)),
        ("g", json!(a.g)),
        ("grid", json!(a.grid)),
        ("seed", json!(a.seed)),
    ]);
    CommandResult::verdict("verify", ins, run_suite(a))
}

pub fn execute(cli: &Cli) -> Result<CommandResult, UsageError> {
    match &cli.command {
        Command::Macdonald(a) => macdonald(a),
        Command::Seppoly(a) => seppoly(a),
        Command::ApplyM(a) => apply_m_cmd(a),
        Command::C(a) => c_cmd(a),
        Command::Verify(a) => {
            if a.min > a.max {
                return Err(UsageError(format!("--min {} exceeds --max {}", a.min, a.max)));
            }
            Ok(verify(a))
        }
    }
}
