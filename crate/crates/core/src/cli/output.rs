use std::io::{self, Write};

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Str(String),
    Num(u64),
    Bool(bool),
    List(Vec<String>),
}

impl Cell {
    fn text(&self, list_sep: &str) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::Num(x) => x.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::List(xs) => xs.join(list_sep),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Str(s) => serde_json::Value::from(s.as_str()),
            Cell::Num(x) => serde_json::Value::from(*x),
            Cell::Bool(b) => serde_json::Value::from(*b),
            Cell::List(xs) => serde_json::Value::from(xs.clone()),
        }
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Str(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Str(s.to_string())
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Num(x as u64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

/// Rows with named columns; the same data renders as text, JSON lines or CSV.
#[derive(Debug, Clone)]
pub struct Records {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Records {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Text: space-separated cells, lists comma-joined, no header.
    /// JSON: one object per line, keys in column order.
    /// CSV: header row, lists space-joined.
    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Text => {
                for row in &self.rows {
                    let line: Vec<String> = row.iter().map(|c| c.text(",")).collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
            }
            Format::Json => {
                for row in &self.rows {
                    writeln!(out, "{}", json_line(&self.columns, row))?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).map_err(io::Error::other)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(|c| c.text(" ")))
                        .map_err(io::Error::other)?;
                }
                let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
                out.write_all(&bytes)?;
            }
        }
        Ok(())
    }
}

pub fn json_line(columns: &[&str], row: &[Cell]) -> String {
    let fields: Vec<String> = columns
        .iter()
        .zip(row)
        .map(|(k, v)| {
            format!(
                "{}:{}",
                serde_json::Value::from(*k),
                v.json()
            )
        })
        .collect();
    format!("{{{}}}", fields.join(","))
}
