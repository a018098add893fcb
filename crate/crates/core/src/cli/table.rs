//! Tabular output shared by all subcommands, with stable float formatting
//! so that emitted files round-trip byte for byte.

use serde_json::{Map, Value};
use std::io::{self, Write};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

/// Shortest round-trip decimal; scientific notation outside `[1e-5, 1e16)`.
pub fn format_float(v: f64) -> String {
    let a = v.abs();
    if v != 0.0 && a.is_finite() && !(1e-5..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Float(v) => format_float(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    /// Reinterprets rendered text; floats only when re-rendering
    /// reproduces the text exactly.
    pub fn parse(raw: &str) -> Cell {
        match raw {
            "" => Cell::Empty,
            "true" => Cell::Bool(true),
            "false" => Cell::Bool(false),
            _ => match raw.parse::<f64>() {
                Ok(v) if format_float(v) == raw => Cell::Float(v),
                _ => Cell::Text(raw.to_string()),
            },
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Cell::Float(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns).map_err(io_error)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render)).map_err(io_error)?;
        }
        w.flush()
    }

    pub fn read_csv<R: io::Read>(input: R) -> csv::Result<Table> {
        let mut r = csv::Reader::from_reader(input);
        let columns = r.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for record in r.records() {
            rows.push(record?.iter().map(Cell::parse).collect());
        }
        Ok(Table { columns, rows })
    }

    pub fn rows_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let mut m = Map::new();
                    for (c, cell) in self.columns.iter().zip(row) {
                        m.insert(c.clone(), cell.to_json());
                    }
                    Value::Object(m)
                })
                .collect(),
        )
    }

    /// `{"meta": meta, "rows": [...]}`, pretty-printed with a trailing newline.
    pub fn write_json<W: Write>(&self, meta: Value, mut out: W) -> io::Result<()> {
        let mut doc = Map::new();
        doc.insert("meta".into(), meta);
        doc.insert("rows".into(), self.rows_json());
        serde_json::to_writer_pretty(&mut out, &Value::Object(doc))?;
        out.write_all(b"\n")
    }
}

/// Unwraps the underlying I/O error so callers can inspect its kind.
fn io_error(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::new(io::ErrorKind::Other, format!("{other:?}")),
    }
}
