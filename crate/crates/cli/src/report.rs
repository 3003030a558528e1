//! Report documents. Keys keep insertion order and no field depends on the
//! run unless timing is requested, so identical inputs give identical bytes.

use std::str::FromStr;
use std::time::Duration;

use latpoly_core::{IntVector, Rat, RatVector};
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

pub const SCHEMA: u64 = 1;

#[derive(Clone, Debug)]
pub struct Report {
    pub command: Value,
    pub input_path: String,
    pub input_sha256: String,
    pub result: Value,
    /// False when `evaluate` or `verify` found a disagreement.
    pub consistent: bool,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "schema": SCHEMA,
            "command": self.command,
            "input": { "path": self.input_path, "sha256": self.input_sha256 },
            "result": self.result,
        });
        if let Some(d) = self.elapsed {
            v["timing"] = json!({ "elapsed_ms": d.as_secs_f64() * 1e3 });
        }
        v
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
        s.push('\n');
        s
    }
}

/// An exact JSON number.
pub fn int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

pub fn int_vector(v: &IntVector) -> Value {
    Value::Array(v.coords().iter().map(int).collect())
}

/// `"p/q"`, or `"p"` when the value is an integer.
pub fn rat(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn rat_vector(v: &RatVector) -> Value {
    Value::Array(v.0.iter().map(rat).collect())
}
