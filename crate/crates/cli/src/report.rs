//! Report envelope and its JSON / CSV renderings.

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};
use crate::error::CliError;

pub const TOOL_NAME: &str = "hombound";

/// One output row. `id` names the instance (graph6 strings plus any
/// parameters) and orders the records.
#[derive(Clone, Debug)]
pub struct Record {
    pub id: String,
    pub fields: Map<String, Value>,
    pub violation: bool,
}

impl Record {
    pub fn new(id: String) -> Self {
        Record {
            id,
            fields: Map::new(),
            violation: false,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_string(), value.into());
    }
}

#[derive(Clone, Debug)]
pub struct Envelope {
    pub command: String,
    pub config: Value,
    pub generated_at: Option<String>,
    pub records: Vec<Record>,
    pub summary: Map<String, Value>,
}

pub fn config_echo(cfg: &RunConfig) -> Value {
    json!({
        "h_graph6": cfg.h_graph6,
        "g_graph6": cfg.g_graph6,
        "h_file": cfg.h_file.as_ref().map(|p| p.display().to_string()),
        "g_file": cfg.g_file.as_ref().map(|p| p.display().to_string()),
        "n": cfg.n,
        "k": cfg.k,
        "r": cfg.r,
        "max_vertices": cfg.max_vertices,
        "random": cfg.random.as_ref().map(|r| format!("{},{},{}", r.vertices, r.p, r.count)),
        "seed": cfg.seed.to_string(),
        "strict": cfg.strict,
        "guard": cfg.guard.to_string(),
    })
}

impl Envelope {
    pub fn to_json(&self) -> Value {
        let records: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                let mut m = r.fields.clone();
                m.insert("id".into(), Value::String(r.id.clone()));
                m.insert("violation".into(), Value::Bool(r.violation));
                Value::Object(m)
            })
            .collect();
        let mut top = Map::new();
        top.insert("tool".into(), TOOL_NAME.into());
        top.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        top.insert("command".into(), self.command.clone().into());
        top.insert("config".into(), self.config.clone());
        if let Some(t) = &self.generated_at {
            top.insert("generated_at".into(), t.clone().into());
        }
        top.insert("records".into(), records.into());
        top.insert("summary".into(), Value::Object(self.summary.clone()));
        Value::Object(top)
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json())
                    .map_err(|e| CliError::usage(format!("serializing report: {e}")))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.to_csv(),
        }
    }

    /// One row per record; nested values are embedded as JSON text.
    fn to_csv(&self) -> Result<String, CliError> {
        let keys: BTreeSet<&String> = self.records.iter().flat_map(|r| r.fields.keys()).collect();
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::usage(format!("writing csv: {e}"));
        let mut header = vec!["id", "violation"];
        header.extend(keys.iter().map(|k| k.as_str()));
        w.write_record(&header).map_err(io)?;
        for r in &self.records {
            let mut row = vec![r.id.clone(), r.violation.to_string()];
            row.extend(keys.iter().map(|k| match r.fields.get(*k) {
                None | Some(Value::Null) => String::new(),
                Some(Value::String(s)) => s.clone(),
                Some(v) => v.to_string(),
            }));
            w.write_record(&row).map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::usage(format!("writing csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| CliError::usage(format!("writing csv: {e}")))
    }
}
