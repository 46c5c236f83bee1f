//! Deterministic text output: 12-significant-digit number formatting and the
//! CSV / JSON record writers. Identical inputs must produce byte-identical
//! bytes, so all formatting funnels through [`fmt_g12`].

use std::io::{self, Write};

/// Format with 12 significant digits, trimming trailing zeros (printf %.12g).
pub fn fmt_g12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        let prec = (11 - exp).max(0) as usize;
        trim_decimal(format!("{x:.prec$}"))
    } else {
        let s = format!("{x:.11e}");
        match s.split_once('e') {
            Some((mantissa, e)) => format!("{}e{}", trim_decimal(mantissa.to_string()), e),
            None => s,
        }
    }
}

fn trim_decimal(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Optional cell: empty for CSV when absent.
pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_g12).unwrap_or_default()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// A rectangular record stream with fixed columns.
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

/// One CSV/JSON cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Num(f64),
    OptNum(Option<f64>),
    Text(String),
    Bool(bool),
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Header row, comma separator, LF endings, 12 significant digits.
    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(cell_csv).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }

    /// Array of objects mirroring the CSV field names.
    pub fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut arr = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut obj = serde_json::Map::new();
            for (name, cell) in self.columns.iter().zip(row) {
                obj.insert((*name).to_string(), cell_json(cell));
            }
            arr.push(serde_json::Value::Object(obj));
        }
        serde_json::to_writer_pretty(&mut *out, &serde_json::Value::Array(arr))?;
        writeln!(out)?;
        Ok(())
    }

    pub fn write(&self, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Json => self.write_json(out),
        }
    }
}

fn cell_csv(c: &Cell) -> String {
    match c {
        Cell::Int(v) => v.to_string(),
        Cell::Num(v) => fmt_g12(*v),
        Cell::OptNum(v) => fmt_opt(*v),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
    }
}

fn cell_json(c: &Cell) -> serde_json::Value {
    match c {
        Cell::Int(v) => serde_json::Value::from(*v),
        Cell::Num(v) => serde_json::Value::from(*v),
        Cell::OptNum(v) => match v {
            Some(x) => serde_json::Value::from(*x),
            None => serde_json::Value::Null,
        },
        Cell::Text(s) => serde_json::Value::from(s.as_str()),
        Cell::Bool(b) => serde_json::Value::from(*b),
    }
}
