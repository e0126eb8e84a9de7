//! Machine-readable verification records.

use serde::Serialize;
use serde_json::Value;

use crate::coeffdomain::Scalar;

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    /// Which identity: "duality", "evaluation", "norm", ...
    pub check: String,
    pub system: String,
    pub inputs: Value,
    /// Named sides, as canonical scalar strings.
    pub values: Vec<(String, String)>,
    pub verdict: bool,
}

impl Certificate {
    pub fn new(check: &str, system: &str, inputs: Value) -> Self {
        Certificate { check: check.into(), system: system.into(), inputs, values: vec![], verdict: true }
    }

    pub fn side<S: Scalar>(mut self, name: &str, v: &S) -> Self {
        self.values.push((name.into(), v.canonical()));
        self
    }

    /// Record all sides and require them to be equal.
    pub fn all_equal<S: Scalar>(mut self, sides: &[(&str, &S)]) -> Self {
        for (n, v) in sides {
            self.values.push(((*n).into(), v.canonical()));
        }
        if let Some((_, first)) = sides.first() {
            self.verdict &= sides.iter().all(|(_, v)| v == first);
        }
        self
    }

    pub fn require(mut self, ok: bool) -> Self {
        self.verdict &= ok;
        self
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("certificate serializes")
    }
}
