//! Versioned report records rendered as JSON, CSV or plain text.

use std::fmt;

use serde_json::{Map, Value};

pub const SCHEMA: &str = "albert-e6/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A flat record plus an optional table of rows (checks, matrix rows, points).
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    fields: Map<String, Value>,
    table: Option<(String, Vec<Map<String, Value>>)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("schema".into(), SCHEMA.into());
        fields.insert("command".into(), command.into());
        Report { fields, table: None }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.into(), value.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn set_table(&mut self, key: &str, rows: Vec<Map<String, Value>>) -> &mut Self {
        self.table = Some((key.into(), rows));
        self
    }

    pub fn to_json(&self) -> Value {
        let mut m = self.fields.clone();
        if let Some((k, rows)) = &self.table {
            m.insert(k.clone(), Value::Array(rows.iter().cloned().map(Value::Object).collect()));
        }
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.to_json()),
            Format::Text => self.render_text(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}: {}\n", scalar(v)));
        }
        if let Some((k, rows)) = &self.table {
            out.push_str(&format!("{k}:\n"));
            for row in rows {
                let cells: Vec<String> = row.values().map(scalar).collect();
                out.push_str(&format!("  {}\n", cells.join("  ")));
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let records: Vec<&Map<String, Value>> = match &self.table {
            Some((_, rows)) if !rows.is_empty() => rows.iter().collect(),
            _ => vec![&self.fields],
        };
        let mut header: Vec<&String> = Vec::new();
        for r in &records {
            for k in r.keys() {
                if !header.contains(&k) {
                    header.push(k);
                }
            }
        }
        w.write_record(header.iter().map(|k| k.as_str())).expect("in-memory writer");
        for r in records {
            w.write_record(header.iter().map(|k| r.get(*k).map(scalar).unwrap_or_default())).expect("in-memory writer");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is UTF-8")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Format::Json))
    }
}

/// Strings unquoted, everything else as JSON.
fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
pub fn big(n: &num_bigint::BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => v.into(),
        Err(_) => n.to_string().into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("verify");
        r.set("q", 2).set("passed", true);
        let rows = vec![
            json!({"name": "a", "passed": true}).as_object().unwrap().clone(),
            json!({"name": "b, c", "passed": false, "detail": "x"}).as_object().unwrap().clone(),
        ];
        r.set_table("checks", rows);
        r
    }

    #[test]
    fn json_keeps_insertion_order() {
        let s = sample().render(Format::Json);
        assert!(s.starts_with(r#"{"schema":"albert-e6/1","command":"verify","q":2,"passed":true,"checks":[{"#));
        assert!(s.ends_with("}\n"));
    }

    #[test]
    fn csv_uses_rows_and_quotes() {
        let s = sample().render(Format::Csv);
        assert_eq!(s, "name,passed,detail\na,true,\n\"b, c\",false,x\n");
        let mut plain = Report::new("order");
        plain.set("q", 4);
        assert_eq!(plain.render(Format::Csv), "schema,command,q\nalbert-e6/1,order,4\n");
    }

    #[test]
    fn text_lists_fields_then_rows() {
        let s = sample().render(Format::Text);
        assert!(s.starts_with("schema: albert-e6/1\ncommand: verify\n"));
        assert!(s.contains("checks:\n  a  true\n"));
    }

    #[test]
    fn big_numbers() {
        assert_eq!(big(&num_bigint::BigUint::from(139503u32)), json!(139503));
        let huge = num_bigint::BigUint::from(u64::MAX) + 1u32;
        assert_eq!(big(&huge), json!("18446744073709551616"));
    }
}
