//! Flat, ordered output records and their JSON / CSV encodings.
//!
//! Floats are written with 17 significant digits so every value round-trips;
//! non-finite floats become `null` (JSON) or an empty cell (CSV).

use std::io::Write;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(u64),
    Bool(bool),
    Str(String),
    Null,
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Num(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as u64)
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::Int(u64::from(v))
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Str(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Str(v)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Null, Into::into)
    }
}

pub fn format_float(v: f64) -> Option<String> {
    v.is_finite().then(|| format!("{v:.16e}"))
}

impl Value {
    fn json(&self) -> String {
        match self {
            Value::Num(v) => format_float(*v).unwrap_or_else(|| "null".into()),
            Value::Int(v) => v.to_string(),
            Value::Bool(v) => v.to_string(),
            Value::Str(s) => serde_json::to_string(s).expect("strings always serialize"),
            Value::Null => "null".into(),
        }
    }

    fn cell(&self) -> String {
        match self {
            Value::Num(v) => format_float(*v).unwrap_or_default(),
            Value::Int(v) => v.to_string(),
            Value::Bool(v) => v.to_string(),
            Value::Str(s) => s.clone(),
            Value::Null => String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record {
    fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    /// Appends a field, replacing an earlier one with the same key in place.
    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        let key = key.into();
        let value = value.into();
        match self.fields.iter_mut().find(|(k, _)| *k == key) {
            Some(slot) => slot.1 = value,
            None => self.fields.push((key, value)),
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.fields.iter().map(|(k, _)| k.as_str())
    }

    pub fn to_json(&self) -> String {
        let body: Vec<String> = self
            .fields
            .iter()
            .map(|(k, v)| format!("{}:{}", serde_json::to_string(k).expect("keys serialize"), v.json()))
            .collect();
        format!("{{{}}}", body.join(","))
    }
}

/// A JSON array with one record per line.
pub fn write_json<W: Write>(out: &mut W, records: &[Record]) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    writeln!(out, "[").map_err(io)?;
    for (i, record) in records.iter().enumerate() {
        let sep = if i + 1 < records.len() { "," } else { "" };
        writeln!(out, "{}{sep}", record.to_json()).map_err(io)?;
    }
    writeln!(out, "]").map_err(io)
}

/// CSV whose header is the union of keys in first-seen order.
pub fn write_csv<W: Write>(out: W, records: &[Record]) -> Result<(), CliError> {
    let mut header: Vec<&str> = Vec::new();
    for record in records {
        for key in record.keys() {
            if !header.contains(&key) {
                header.push(key);
            }
        }
    }
    let mut writer = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| CliError::Io(e.to_string());
    writer.write_record(&header).map_err(csv_err)?;
    for record in records {
        let row: Vec<String> = header
            .iter()
            .map(|key| record.get(key).map(Value::cell).unwrap_or_default())
            .collect();
        writer.write_record(&row).map_err(csv_err)?;
    }
    writer.flush().map_err(|e| CliError::Io(e.to_string()))
}
