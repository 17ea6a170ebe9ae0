//! Delimited text output with a fixed numeric format.
//!
//! Numbers are rounded to 12 significant digits and printed in the shortest
//! form that reads back to the rounded value. Magnitudes below
//! [`ZERO_SNAP`] print as `0`, so floating-point residue from exact zeros
//! does not leak into golden files.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;

pub const ZERO_SNAP: f64 = 1e-13;

pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x.abs() < ZERO_SNAP {
        return "0".into();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    format!("{rounded}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Delimiter {
    #[default]
    Csv,
    Tsv,
}

impl Delimiter {
    pub fn as_char(self) -> char {
        match self {
            Delimiter::Csv => ',',
            Delimiter::Tsv => '\t',
        }
    }
}

impl FromStr for Delimiter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "csv" => Ok(Delimiter::Csv),
            "tsv" => Ok(Delimiter::Tsv),
            other => Err(Error::Invalid(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Num(f64),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
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

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Text(v.to_string())
    }
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(v) => format_number(*v),
            Cell::Empty => String::new(),
        }
    }
}

/// A header line (`#`-prefixed) followed by data rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Sheet {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Sheet {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Sheet { columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn render(&self, delim: Delimiter) -> String {
        let sep = delim.as_char().to_string();
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.columns.join(&sep));
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::render).collect();
            let _ = writeln!(out, "{}", line.join(&sep));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(format_number(0.5), "0.5");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(1.0 - 1e-16), "1");
        assert_eq!(format_number((1.0 - 2f64.sqrt()) / 16.0), "-0.0258883476483");
        assert_eq!(format_number(2.0 * 2f64.sqrt()), "2.82842712475");
        assert_eq!(format_number(-3e-17), "0");
        assert_eq!(format_number(1e6), "1000000");
        assert_eq!(format_number(f64::NAN), "nan");
    }

    #[test]
    fn sheet_rendering() {
        let mut s = Sheet::new(["a", "b"]);
        s.push(vec!["x".into(), 0.25.into()]);
        s.push(vec![Cell::Empty, true.into()]);
        assert_eq!(s.render(Delimiter::Csv), "# a,b\nx,0.25\n,true\n");
        assert_eq!(s.render(Delimiter::Tsv), "# a\tb\nx\t0.25\n\ttrue\n");
    }
}
