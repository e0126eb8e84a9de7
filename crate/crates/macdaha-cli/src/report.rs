use macdaha::certificate::Certificate;
use macdaha::daha::RelationCheck;
use macdaha::modular::ModularCheck;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    pub system: String,
    /// Informational records do not affect the exit code.
    pub gating: bool,
    pub pass: bool,
    pub detail: Value,
}

impl Record {
    pub fn new(id: &str, system: &str, pass: bool, detail: Value) -> Self {
        Record { id: id.into(), system: system.into(), gating: true, pass, detail }
    }

    pub fn from_cert(c: Certificate) -> Self {
        let values: Vec<Value> = c.values.iter().map(|(n, v)| json!([n, v])).collect();
        Record::new(&c.check, &c.system, c.verdict, json!({"inputs": c.inputs, "values": values}))
    }

    pub fn from_relation(system: &str, cap: i64, r: RelationCheck) -> Self {
        Record::new(&r.id, system, r.pass, json!({"relation": r.detail, "instances": r.instances, "cap": cap}))
    }

    pub fn from_modular(system: &str, n: i64, k: &[i64], m: ModularCheck) -> Self {
        Record { id: m.id, system: system.into(), gating: m.gating, pass: m.pass, detail: json!({"N": n, "k": k, "detail": m.detail}) }
    }

    pub fn error(id: &str, system: &str, e: &macdaha::Error) -> Self {
        Record::new(id, system, false, json!({"error": e.to_string()}))
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub data: Option<Value>,
    pub records: Vec<Record>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.records.iter().all(|r| !r.gating || r.pass)
    }

    pub fn failed(&self) -> Vec<String> {
        self.records.iter().filter(|r| r.gating && !r.pass).map(|r| format!("{} {}", r.id, r.system)).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "config": self.config,
            "records": self.records,
            "pass": self.pass(),
            "failed": self.failed(),
        });
        if let Some(d) = &self.data {
            v["data"] = d.clone();
        }
        v
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("report serializes") + "\n",
            Format::Text => {
                let mut s = format!("{}: {}\n", self.command, if self.pass() { "pass" } else { "FAIL" });
                for r in &self.records {
                    let tag = match (r.pass, r.gating) {
                        (true, _) => "pass",
                        (false, true) => "FAIL",
                        (false, false) => "info",
                    };
                    s += &format!("  [{tag}] {:<24} {:<4} {}\n", r.id, r.system, r.detail);
                }
                if let Some(d) = &self.data {
                    s += &serde_json::to_string_pretty(d).expect("data serializes");
                    s.push('\n');
                }
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(vec![]);
                w.write_record(["id", "system", "gating", "pass", "detail"]).expect("csv header");
                for r in &self.records {
                    w.write_record([r.id.as_str(), r.system.as_str(), &r.gating.to_string(), &r.pass.to_string(), &r.detail.to_string()])
                        .expect("csv row");
                }
                String::from_utf8(w.into_inner().expect("csv flush")).expect("csv is utf-8")
            }
        }
    }
}
