use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line
    Json,
    /// Tab-separated, with a header row whenever the columns change
    Tsv,
    /// `key: value` pairs, one record per line
    Human,
}

/// Writes flat records in the chosen format. Key order follows insertion order.
pub struct Sink<W: Write> {
    format: Format,
    out: W,
    header: Option<Vec<String>>,
}

impl<W: Write> Sink<W> {
    pub fn new(format: Format, out: W) -> Self {
        Sink {
            format,
            out,
            header: None,
        }
    }

    pub fn row(&mut self, row: Map<String, Value>) -> io::Result<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{}", Value::Object(row)),
            Format::Tsv => {
                let keys: Vec<String> = row.keys().cloned().collect();
                if self.header.as_ref() != Some(&keys) {
                    writeln!(self.out, "{}", keys.join("\t"))?;
                    self.header = Some(keys);
                }
                let cells: Vec<String> = row.values().map(cell).collect();
                writeln!(self.out, "{}", cells.join("\t"))
            }
            Format::Human => {
                let pairs: Vec<String> = row
                    .iter()
                    .map(|(k, v)| format!("{k}: {}", cell(v)))
                    .collect();
                writeln!(self.out, "{}", pairs.join("  "))
            }
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Converts a serializable struct into a row.
pub fn to_row<T: serde::Serialize>(value: &T) -> Map<String, Value> {
    match serde_json::to_value(value).expect("serializable") {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn render(format: Format, rows: &[Value]) -> String {
        let mut buf = Vec::new();
        let mut sink = Sink::new(format, &mut buf);
        for r in rows {
            sink.row(r.as_object().unwrap().clone()).unwrap();
        }
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn formats() {
        let rows = [
            json!({"graph": "Bg", "value": 2, "tag": null}),
            json!({"graph": "C~", "value": 2, "tag": [1]}),
        ];
        assert_eq!(
            render(Format::Json, &rows),
            "{\"graph\":\"Bg\",\"value\":2,\"tag\":null}\n{\"graph\":\"C~\",\"value\":2,\"tag\":[1]}\n"
        );
        assert_eq!(
            render(Format::Tsv, &rows),
            "graph\tvalue\ttag\nBg\t2\t\nC~\t2\t[1]\n"
        );
        assert_eq!(
            render(Format::Human, &rows[..1]),
            "graph: Bg  value: 2  tag: \n"
        );
    }

    #[test]
    fn tsv_repeats_header_on_column_change() {
        let rows = [json!({"a": 1}), json!({"b": 2})];
        assert_eq!(render(Format::Tsv, &rows), "a\n1\nb\n2\n");
    }
}
