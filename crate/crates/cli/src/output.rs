//! Output documents and their markdown/csv/json renderers.
//!
//! Exact rationals travel as `p/q` strings and are kept distinguishable
//! from plain text so the CSV writer can always quote them; decimal values
//! are strings everywhere (JSON included) so no consumer rounds them.

use std::fmt;

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Markdown => "markdown",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// One table cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    /// Labels and decimal strings.
    Text(String),
    /// An exact rational as `p/q`; always quoted in CSV.
    Exact(String),
    /// Structurally empty (emitted as an empty string, never a zero).
    Empty,
}

impl Cell {
    pub fn text(value: impl Into<String>) -> Self {
        Cell::Text(value.into())
    }

    pub fn exact(value: impl ToString) -> Self {
        Cell::Exact(value.to_string())
    }

    pub fn value(&self) -> &str {
        match self {
            Cell::Text(s) | Cell::Exact(s) => s,
            Cell::Empty => "",
        }
    }
}

/// A rendered command result: a header row, data rows, the invocation
/// parameters (carried into JSON), and optional trailing notes.
#[derive(Clone, Debug, Default)]
pub struct OutputDocument {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

impl OutputDocument {
    pub fn new(command: impl Into<String>) -> Self {
        OutputDocument {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Markdown => self.render_markdown(),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| ");
        out.push_str(&self.headers.join(" | "));
        out.push_str(" |\n|");
        for _ in &self.headers {
            out.push_str(" --- |");
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str("| ");
            let cells: Vec<&str> = row.iter().map(|c| c.value()).collect();
            out.push_str(&cells.join(" | "));
            out.push_str(" |\n");
        }
        for note in &self.notes {
            out.push('\n');
            out.push_str("note: ");
            out.push_str(note);
            out.push('\n');
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        let headers: Vec<String> = self.headers.iter().map(|h| csv_field(h, false)).collect();
        out.push_str(&headers.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row
                .iter()
                .map(|c| {
                    // fractions are always quoted; exact integers need no quotes
                    let fraction = matches!(c, Cell::Exact(_)) && c.value().contains('/');
                    csv_field(c.value(), fraction)
                })
                .collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .headers
                    .iter()
                    .zip(row)
                    .map(|(h, c)| (h.clone(), Value::String(c.value().to_string())))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = json!({
            "command": self.command,
            "params": params,
            "rows": rows,
        });
        if !self.notes.is_empty() {
            doc["notes"] = json!(self.notes);
        }
        serde_json::to_string_pretty(&doc).expect("document serializes")
    }
}

/// RFC-style CSV escaping; `force_quote` wraps the field regardless (used
/// for exact rationals).
fn csv_field(value: &str, force_quote: bool) -> String {
    let needs_quote =
        force_quote || value.contains(',') || value.contains('"') || value.contains('\n');
    if needs_quote {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}
