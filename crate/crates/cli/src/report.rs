//! Plain-text and JSON reports.
//!
//! JSON layout:
//!
//! ```text
//! {
//!   "command": "nk-divisor",
//!   "inputs": { "file": "tetra.fol", ... },
//!   "results": { ... },
//!   "warnings": [ ... ],
//!   "verdict": "ok" | "failed",
//!   "timing_ms": 12            // only with --timing
//! }
//! ```
//!
//! Rationals are strings `"num/den"`, integers included (`"2/1"`).

use std::io::{self, Write};

use serde_json::{json, Map, Value};

use folia_core::algebra::rat::to_fraction_string;
use folia_core::algebra::{MPoly, Rat};

pub fn rat_json(r: &Rat) -> Value {
    Value::String(to_fraction_string(r))
}

pub fn rats_json(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(rat_json).collect())
}

pub fn polys_json(ps: &[MPoly]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(p.to_string())).collect())
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub lines: Vec<String>,
    pub results: Map<String, Value>,
    pub warnings: Vec<String>,
    pub ok: bool,
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            lines: Vec::new(),
            results: Map::new(),
            warnings: Vec::new(),
            ok: true,
            timing_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.to_string(), v.into());
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.to_string(), v.into());
    }

    pub fn warn(&mut self, text: impl Into<String>) {
        self.warnings.push(text.into());
    }

    pub fn fail(&mut self, text: impl Into<String>) {
        self.ok = false;
        self.lines.push(text.into());
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "results": Value::Object(self.results.clone()),
            "warnings": self.warnings,
            "verdict": if self.ok { "ok" } else { "failed" },
        });
        if let Some(t) = self.timing_ms {
            v["timing_ms"] = json!(t);
        }
        v
    }

    pub fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        for l in &self.lines {
            writeln!(out, "{l}")?;
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}")?;
        }
        if !self.ok {
            writeln!(out, "verdict: failed")?;
        }
        if let Some(t) = self.timing_ms {
            writeln!(out, "time: {t} ms")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use folia_core::algebra::{int, rat};

    #[test]
    fn rationals_keep_denominators() {
        assert_eq!(rat_json(&int(2)), json!("2/1"));
        assert_eq!(rat_json(&rat(-9, 6)), json!("-3/2"));
    }

    #[test]
    fn layout() {
        let mut r = Report::new("rrh");
        r.input("c1", 0);
        r.result("chi", rat_json(&int(2)));
        r.line("chi = 2");
        let v = r.to_json();
        assert_eq!(v["verdict"], "ok");
        assert_eq!(v["results"]["chi"], "2/1");
        assert!(v.get("timing_ms").is_none());
        let mut buf = Vec::new();
        r.write_text(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "chi = 2\n");
    }
}
