//! Reading one numeric column (or a pair of Lorenz columns) from
//! CSV, TSV or whitespace-separated text.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Csv,
    Tsv,
    Whitespace,
}

impl InputFormat {
    /// `.csv` and `.tsv` by extension, whitespace otherwise.
    pub fn infer(path: &str) -> Self {
        match Path::new(path).extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => InputFormat::Csv,
            Some(ext) if ext.eq_ignore_ascii_case("tsv") => InputFormat::Tsv,
            _ => InputFormat::Whitespace,
        }
    }
}

/// Column chosen by header name or 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Column {
    Index(usize),
    Name(String),
}

impl FromStr for Column {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.parse::<usize>() {
            Ok(0) => Err("column indices start at 1".into()),
            Ok(i) => Ok(Column::Index(i)),
            Err(_) if !s.is_empty() => Ok(Column::Name(s.to_string())),
            Err(_) => Err("empty column name".into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InputSpec {
    /// File path, or `-` for standard input.
    pub path: String,
    pub format: InputFormat,
    /// `None` selects the first numeric column.
    pub column: Option<Column>,
    pub header: bool,
}

impl InputSpec {
    pub fn new(path: impl Into<String>) -> Self {
        let path = path.into();
        Self {
            format: InputFormat::infer(&path),
            path,
            column: None,
            header: false,
        }
    }

    pub fn display_name(&self) -> String {
        if self.path == "-" {
            "stdin".to_string()
        } else {
            Path::new(&self.path)
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| self.path.clone())
        }
    }
}

/// Raw bytes of an input together with its table of cells.
pub struct RawTable {
    pub bytes: Vec<u8>,
    pub header: Option<Vec<String>>,
    /// `(line number, cells)` of the data rows.
    pub rows: Vec<(u64, Vec<String>)>,
}

pub fn read_bytes(path: &str) -> Result<Vec<u8>> {
    let mut bytes = Vec::new();
    if path == "-" {
        std::io::stdin()
            .read_to_end(&mut bytes)
            .map_err(|e| CliError::io("<stdin>", e))?;
    } else {
        bytes = std::fs::read(path).map_err(|e| CliError::io(PathBuf::from(path), e))?;
    }
    Ok(bytes)
}

pub fn read_table(spec: &InputSpec) -> Result<RawTable> {
    let bytes = read_bytes(&spec.path)?;
    let mut rows = parse_rows(&bytes, spec.format)?;
    let header = if spec.header && !rows.is_empty() {
        Some(rows.remove(0).1)
    } else {
        None
    };
    Ok(RawTable {
        bytes,
        header,
        rows,
    })
}

fn parse_rows(bytes: &[u8], format: InputFormat) -> Result<Vec<(u64, Vec<String>)>> {
    let delimiter = match format {
        InputFormat::Csv => b',',
        InputFormat::Tsv => b'\t',
        InputFormat::Whitespace => {
            let text = std::str::from_utf8(bytes)
                .map_err(|e| CliError::Input(format!("input is not UTF-8: {e}")))?;
            return Ok(text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| {
                    (
                        i as u64 + 1,
                        l.split_whitespace().map(str::to_string).collect(),
                    )
                })
                .collect());
        }
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .delimiter(delimiter)
        .from_reader(bytes);
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            CliError::Parse {
                line,
                column: 0,
                message: e.to_string(),
            }
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.iter().all(|c| c.trim().is_empty()) {
            continue;
        }
        rows.push((line, record.iter().map(|c| c.trim().to_string()).collect()));
    }
    Ok(rows)
}

fn resolve_column(table: &RawTable, column: Option<&Column>) -> Result<usize> {
    match column {
        Some(Column::Index(i)) => Ok(i - 1),
        Some(Column::Name(name)) => {
            let header = table.header.as_ref().ok_or_else(|| {
                CliError::Input(format!(
                    "column '{name}' selected by name but --header not given"
                ))
            })?;
            header
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| CliError::Input(format!("no column named '{name}' in header")))
        }
        None => Ok(table
            .rows
            .first()
            .and_then(|(_, cells)| cells.iter().position(|c| c.parse::<f64>().is_ok()))
            .unwrap_or(0)),
    }
}

/// Parses a numeric cell. Only `.` is accepted as the decimal separator.
pub fn parse_cell(cell: &str, line: u64, column: usize) -> Result<f64> {
    let err = |message: String| CliError::Parse {
        line,
        column,
        message,
    };
    if cell.is_empty() {
        return Err(err("missing value".into()));
    }
    if let Some((a, b)) = cell.split_once(',') {
        let digits = |s: &str| {
            !s.is_empty()
                && s.trim_start_matches(['-', '+'])
                    .chars()
                    .all(|c| c.is_ascii_digit())
        };
        if digits(a) && b.chars().all(|c| c.is_ascii_digit()) {
            return Err(err(format!(
                "'{cell}' uses a comma as decimal separator; only '.' is accepted"
            )));
        }
    }
    cell.parse::<f64>()
        .map_err(|_| err(format!("non-numeric value '{cell}'")))
}

fn column_values(table: &RawTable, col: usize) -> Result<Vec<f64>> {
    table
        .rows
        .iter()
        .map(|(line, cells)| {
            let cell = cells.get(col).map(String::as_str).unwrap_or("");
            parse_cell(cell, *line, col + 1)
        })
        .collect()
}

/// Observations from the selected column, plus the raw input bytes.
pub fn read_values(spec: &InputSpec) -> Result<(Vec<f64>, Vec<u8>)> {
    let table = read_table(spec)?;
    let col = resolve_column(&table, spec.column.as_ref())?;
    let values = column_values(&table, col)?;
    Ok((values, table.bytes))
}

pub type Points = Vec<(f64, f64)>;

/// `(p, q)` pairs from the first two columns, plus the raw input bytes.
pub fn read_points(spec: &InputSpec) -> Result<(Points, Vec<u8>)> {
    let table = read_table(spec)?;
    let p = column_values(&table, 0)?;
    let q = column_values(&table, 1)?;
    Ok((p.into_iter().zip(q).collect(), table.bytes))
}
