//! Versioned run reports, rendered as JSON or plain text.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Partial,
}

impl Verdict {
    pub fn from_counts(passed: usize, total: usize) -> Verdict {
        if passed == total {
            Verdict::Pass
        } else if passed == 0 {
            Verdict::Fail
        } else {
            Verdict::Partial
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            _ => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Partial => "partial",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Value,
    pub status: Verdict,
    pub timing_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, inputs: BTreeMap<String, String>, results: Value, status: Verdict) -> Self {
        RunReport { schema_version: SCHEMA_VERSION, command: command.into(), inputs, results, status, timing_ms: 0 }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.command, self.status.as_str());
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k} = {v}");
        }
        render(&self.results, 1, &mut out);
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let one_line = x.as_object().and_then(|m| {
                            m.values().map(scalar).collect::<Option<Vec<_>>>().map(|vals| {
                                m.keys().zip(vals).map(|(k, s)| format!("{k}={s}")).collect::<Vec<_>>().join("  ")
                            })
                        });
                        match one_line {
                            Some(line) => {
                                let _ = writeln!(out, "{pad}- {line}");
                            }
                            None => {
                                let _ = writeln!(out, "{pad}-");
                                render(x, depth + 1, out);
                            }
                        }
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_text() {
        let mut inputs = BTreeMap::new();
        inputs.insert("family".to_string(), "g15(3)".to_string());
        let r = RunReport::new("verify relations", inputs, json!({"passed": 9, "checks": [{"index": 1, "holds": true}]}), Verdict::Pass);
        let back: RunReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let text = r.to_text();
        assert!(text.starts_with("verify relations: pass"));
        assert!(text.contains("index=1  holds=true") || text.contains("holds=true  index=1"));
    }

    #[test]
    fn verdicts() {
        assert_eq!(Verdict::from_counts(3, 3), Verdict::Pass);
        assert_eq!(Verdict::from_counts(1, 3), Verdict::Partial);
        assert_eq!(Verdict::from_counts(0, 3), Verdict::Fail);
        assert_eq!(Verdict::Partial.exit_code(), 1);
    }
}
