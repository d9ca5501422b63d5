//! JSON instance files.
//!
//! ```json
//! {"schema": "phi-irred/1", "c": 0, "n": 2, "phi": ["5", "-1", "1"], "a_n": "1", "a": [["-3"], []]}
//! {"schema": "phi-hermite/1", "m": 4, "phi": ["0", "1"], "a_top": "1", "a": [["1"], ["-1"]]}
//! ```
//!
//! Polynomials are literal arrays of decimal strings in ascending powers; an
//! inline string such as `"x^2-x+5"` is accepted as well. Integers may be
//! JSON numbers or decimal strings.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::certifier::{
    reject_polynomial_leading_coefficient, CertError, LeadingCoefficient, ProblemInstance,
};
use crate::hermite::{HermiteError, HermiteSpec};
use crate::zpoly::{IntPoly, PolyError};

pub const INSTANCE_SCHEMA: &str = "phi-irred/1";
pub const HERMITE_SCHEMA: &str = "phi-hermite/1";

#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("instance file must be a JSON object with a \"schema\" field")]
    MissingSchema,
    #[error("unknown schema {0:?} (expected {INSTANCE_SCHEMA:?} or {HERMITE_SCHEMA:?})")]
    UnknownSchema(String),
    #[error("field {field:?}: {reason}")]
    Field { field: String, reason: String },
    #[error(transparent)]
    Cert(#[from] CertError),
    #[error(transparent)]
    Hermite(#[from] HermiteError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceFile {
    Problem(ProblemInstance),
    Hermite(HermiteSpec),
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value, InputError> {
    obj.get(name).ok_or_else(|| InputError::Field {
        field: name.to_string(),
        reason: "missing".into(),
    })
}

fn bad(name: &str, reason: impl ToString) -> InputError {
    InputError::Field {
        field: name.to_string(),
        reason: reason.to_string(),
    }
}

fn integer(v: &Value, name: &str) -> Result<BigInt, InputError> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer")),
        Value::String(s) => s.trim().parse().map_err(|_| bad(name, format!("{s:?} is not an integer"))),
        _ => Err(bad(name, "expected an integer")),
    }
}

fn small(v: &Value, name: &str) -> Result<u64, InputError> {
    u64::try_from(integer(v, name)?).map_err(|_| bad(name, "expected a nonnegative machine integer"))
}

fn poly(v: &Value, name: &str) -> Result<IntPoly, InputError> {
    let parsed: Result<IntPoly, PolyError> = match v {
        Value::String(s) => s.parse(),
        Value::Array(items) => {
            let lits: Result<Vec<String>, InputError> = items
                .iter()
                .map(|item| match item {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    _ => Err(bad(name, "literal entries must be decimal strings")),
                })
                .collect();
            IntPoly::from_literal(&lits?)
        }
        _ => return Err(bad(name, "expected a polynomial literal")),
    };
    parsed.map_err(|e| bad(name, e))
}

fn poly_list(v: &Value, name: &str) -> Result<Vec<IntPoly>, InputError> {
    match v {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(i, item)| poly(item, &format!("{name}[{i}]")))
            .collect(),
        _ => Err(bad(name, "expected an array of polynomial literals")),
    }
}

/// An integer, or a polynomial literal which is then refused unless constant.
fn leading(v: &Value, name: &str) -> Result<BigInt, InputError> {
    let lc = match v {
        Value::Array(_) => LeadingCoefficient::Polynomial(poly(v, name)?),
        Value::String(s) if s.contains('x') => LeadingCoefficient::Polynomial(poly(v, name)?),
        _ => LeadingCoefficient::Integer(integer(v, name)?),
    };
    Ok(reject_polynomial_leading_coefficient(lc)?)
}

pub fn parse_instance_file(text: &str) -> Result<InstanceFile, InputError> {
    let root: Value = serde_json::from_str(text)?;
    let obj = root.as_object().ok_or(InputError::MissingSchema)?;
    let schema = obj
        .get("schema")
        .and_then(Value::as_str)
        .ok_or(InputError::MissingSchema)?;
    match schema {
        INSTANCE_SCHEMA => {
            let c = small(field(obj, "c")?, "c")?;
            let n = small(field(obj, "n")?, "n")?;
            let phi = poly(field(obj, "phi")?, "phi")?;
            let a_n = leading(field(obj, "a_n")?, "a_n")?;
            let a = poly_list(field(obj, "a")?, "a")?;
            Ok(InstanceFile::Problem(ProblemInstance::new(c, n, phi, a_n, a)?))
        }
        HERMITE_SCHEMA => {
            let m = small(field(obj, "m")?, "m")?;
            let phi = poly(field(obj, "phi")?, "phi")?;
            let a_top = leading(field(obj, "a_top")?, "a_top")?;
            let a = poly_list(field(obj, "a")?, "a")?;
            Ok(InstanceFile::Hermite(HermiteSpec::new(m, phi, a_top, a)?))
        }
        other => Err(InputError::UnknownSchema(other.to_string())),
    }
}

pub fn instance_to_json(inst: &ProblemInstance) -> String {
    let doc = json!({
        "schema": INSTANCE_SCHEMA,
        "c": inst.c(),
        "n": inst.n(),
        "phi": inst.phi(),
        "a_n": inst.a_n().to_string(),
        "a": inst.lower(),
    });
    serde_json::to_string_pretty(&doc).expect("instance serializes")
}

pub fn hermite_to_json(spec: &HermiteSpec) -> String {
    let doc = json!({
        "schema": HERMITE_SCHEMA,
        "m": spec.m(),
        "phi": spec.phi(),
        "a_top": spec.a_top().to_string(),
        "a": spec.a_low(),
    });
    serde_json::to_string_pretty(&doc).expect("spec serializes")
}
