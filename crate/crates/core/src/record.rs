//! Flat records with a fixed field order, written as JSON lines or CSV.
//!
//! Floats are printed with 17 significant digits, which round-trips every
//! `f64`.

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(i64),
    Bool(bool),
    Str(String),
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<i64> for Value {
    fn from(x: i64) -> Self {
        Value::Int(x)
    }
}

impl From<u32> for Value {
    fn from(x: u32) -> Self {
        Value::Int(x as i64)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Self {
        Value::Bool(x)
    }
}

impl From<&str> for Value {
    fn from(x: &str) -> Self {
        Value::Str(x.to_string())
    }
}

impl From<String> for Value {
    fn from(x: String) -> Self {
        Value::Str(x)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record {
    pub fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn json_value(v: &Value) -> String {
    match v {
        Value::Num(x) => format_float(*x),
        Value::Int(i) => i.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Str(s) => serde_json::to_string(s).expect("strings serialize"),
    }
}

pub fn to_json_line(r: &Record) -> String {
    let mut out = String::from("{");
    for (i, (k, v)) in r.fields.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let key = serde_json::to_string(k).expect("strings serialize");
        let _ = write!(out, "{key}:{}", json_value(v));
    }
    out.push('}');
    out
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Num(x) if x.is_finite() => format_float(*x),
        Value::Num(_) => String::new(),
        Value::Int(i) => i.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Str(s) => {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.clone()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// All records in one format. CSV takes its header from the first record
/// and starts a new header block whenever the field names change.
pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in records {
                out.push_str(&to_json_line(r));
                out.push('\n');
            }
        }
        Format::Csv => {
            let mut header: Option<Vec<&str>> = None;
            for r in records {
                let keys: Vec<&str> = r.fields.iter().map(|(k, _)| k.as_str()).collect();
                if header.as_ref() != Some(&keys) {
                    if header.is_some() {
                        out.push('\n');
                    }
                    out.push_str(&keys.join(","));
                    out.push('\n');
                    header = Some(keys);
                }
                let cells: Vec<String> = r.fields.iter().map(|(_, v)| csv_cell(v)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for x in [0.1, -1.0 / 3.0, 6.02214076e23, 5e-324, std::f64::consts::PI] {
            let s = format_float(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn json_keeps_field_order() {
        let r = Record::new().with("z", 1.0).with("a", "x\"y").with("n", 3usize);
        let line = to_json_line(&r);
        assert_eq!(line, r#"{"z":1.0000000000000000e0,"a":"x\"y","n":3}"#);
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["n"], 3);
    }

    #[test]
    fn csv_quotes_and_headers() {
        let rs = vec![
            Record::new().with("a", 1i64).with("b", "p,q"),
            Record::new().with("a", 2i64).with("b", "r"),
            Record::new().with("c", true),
        ];
        assert_eq!(render(&rs, Format::Csv), "a,b\n1,\"p,q\"\n2,r\n\nc\ntrue\n");
    }
}
