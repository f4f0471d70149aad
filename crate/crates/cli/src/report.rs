//! Run reports: every command emits one, either as indented text or as a
//! single JSON object, so that a run can be reproduced from its own output.

use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub timings: Timings,
    pub version: String,
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub wall_ms: f64,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, results: Value, wall: Duration) -> Self {
        RunReport {
            command: command.to_string(),
            inputs,
            results,
            timings: Timings {
                wall_ms: sig(wall.as_secs_f64() * 1e3),
            },
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn emit(&self, format: Format) {
        match format {
            Format::Structured => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(self).expect("report serializes")
                );
            }
            Format::Text => {
                println!("{} (sandglass {})", self.command, self.version);
                let mut lines = Vec::new();
                collect_lines("", &self.inputs, &mut lines);
                for line in &lines {
                    println!("  {line}");
                }
                lines.clear();
                collect_lines("", &self.results, &mut lines);
                for line in &lines {
                    println!("{line}");
                }
                println!("wall: {} ms", self.timings.wall_ms);
            }
        }
    }
}

/// Rounds to the ten significant digits every numeric report field carries.
pub fn sig(x: f64) -> f64 {
    format_sig(x).parse().unwrap_or(x)
}

pub fn format_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let order = x.abs().log10().floor() as i32;
    let decimals = (9 - order).max(0) as usize;
    format!("{x:.decimals$}")
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn collect_lines(prefix: &str, value: &Value, out: &mut Vec<String>) {
    let label = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match value {
        Value::Object(map) => {
            if map.is_empty() && !prefix.is_empty() {
                out.push(format!("{prefix}: {{}}"));
            }
            for (key, child) in map {
                collect_lines(&label(key), child, out);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push(format!("{prefix}: []"));
            } else if items.iter().all(|v| !v.is_object() && !v.is_array()) {
                let joined = items.iter().map(scalar_text).collect::<Vec<_>>().join(", ");
                out.push(format!("{prefix}: [{joined}]"));
            } else {
                for (index, item) in items.iter().enumerate() {
                    collect_lines(&label(&index.to_string()), item, out);
                }
            }
        }
        scalar => out.push(format!("{prefix}: {}", scalar_text(scalar))),
    }
}
