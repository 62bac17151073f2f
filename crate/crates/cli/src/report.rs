//! Report documents and the JSON encodings of engine values. Every encoder
//! builds maps in a fixed key order, so output is byte-deterministic.

use nlalg_core::fields::FieldElement;
use nlalg_core::linalg::{Matrix, Subspace};
use nlalg_core::poly::{Factorization, Poly};
use nlalg_core::Error;
use serde_json::{json, Value};

use crate::CliError;

pub const REPORT_SCHEMA: &str = "nlalg-report/1";

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub value: Value,
    pub exit_code: i32,
}

impl Report {
    pub fn from_error(err: &CliError) -> Report {
        let exit_code = err.exit_code();
        Report {
            value: json!({
                "schema": REPORT_SCHEMA,
                "status": "error",
                "exit_code": exit_code,
                "error": {
                    "kind": err.kind(),
                    "message": err.to_string(),
                    "line": err.line(),
                },
            }),
            exit_code,
        }
    }

    pub fn render(&self, pretty: bool) -> String {
        let mut s = if pretty {
            serde_json::to_string_pretty(&self.value)
        } else {
            serde_json::to_string(&self.value)
        }
        .expect("reports are plain JSON values");
        s.push('\n');
        s
    }
}

pub fn element(e: &FieldElement) -> Value {
    Value::String(e.to_string())
}

pub fn vector(v: &[FieldElement]) -> Value {
    v.iter().map(element).collect()
}

pub fn matrix(m: &Matrix) -> Value {
    m.to_strings().into_iter().map(|r| r.into_iter().map(Value::String).collect::<Value>()).collect()
}

/// Columns of a matrix as a list of vectors.
pub fn columns(m: &Matrix) -> Value {
    m.columns().iter().map(|c| vector(c)).collect()
}

pub fn subspace(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": columns(s.basis()),
    })
}

pub fn poly(p: &Poly) -> Value {
    Value::String(p.to_string())
}

pub fn polys(ps: &[Poly]) -> Value {
    ps.iter().map(poly).collect()
}

pub fn factorization(f: &Factorization) -> Value {
    json!({
        "unit": element(&f.unit),
        "factors": f.factors.iter().map(|x| json!({
            "poly": poly(&x.poly),
            "multiplicity": x.multiplicity,
            "certified": x.certified,
        })).collect::<Vec<_>>(),
        "complete": f.is_complete(),
    })
}

/// Structured engine error, with the payload of the variants that carry
/// one.
pub fn engine_error(e: &Error) -> Value {
    let mut v = json!({
        "kind": e.kind(),
        "message": e.to_string(),
    });
    let extra = match e {
        Error::SplitFailure { factor } => Some(("factor", poly(factor))),
        Error::FactorizationIncomplete(partial) => Some(("partial", factorization(partial))),
        Error::ContainmentViolation(i, j) | Error::NotCommuting(i, j) => Some(("components", json!([i, j]))),
        Error::NotDiagonalizable(k) => Some(("operator", json!(k))),
        _ => None,
    };
    if let (Some((k, x)), Value::Object(map)) = (extra, &mut v) {
        map.insert(k.to_string(), x);
    }
    v
}
