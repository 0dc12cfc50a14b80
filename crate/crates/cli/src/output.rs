use std::fs;
use std::io::Write;

use serde_json::Value;

use crate::args::{Common, Format};

/// Rows for CSV and plain-text rendering.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn to_csv(&self) -> Result<String, String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).map_err(|e| e.to_string())?;
        for r in &self.rows {
            w.write_record(r).map_err(|e| e.to_string())?;
        }
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        String::from_utf8(bytes).map_err(|e| e.to_string())
    }
}

/// Space-aligned rendering of a table.
pub fn plain(t: &Table) -> String {
    let mut widths: Vec<usize> = t.header.iter().map(|h| h.len()).collect();
    for r in &t.rows {
        for (i, c) in r.iter().enumerate() {
            widths[i] = widths[i].max(c.len());
        }
    }
    let line = |cells: &[String]| {
        let mut s = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(&t.header);
    for r in &t.rows {
        out.push_str(&line(r));
    }
    out
}

/// Writes the document in the requested format to `--output` or stdout.
pub fn emit(common: &Common, doc: &Value, table: &Table, text: &str) -> Result<(), String> {
    let body = match common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
        Format::Csv => table.to_csv()?,
        Format::Text => text.to_string(),
    };
    match &common.output {
        Some(path) => fs::write(path, body).map_err(|e| format!("--output {}: {e}", path.display())),
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| e.to_string()),
    }
}
