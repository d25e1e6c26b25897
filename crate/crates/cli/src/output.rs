//! Tabular output in CSV or JSON.
//!
//! Reals are written with 17 significant digits in the style of C's `%.17g`,
//! which is enough to read every `f64` back bit-for-bit.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i128),
    Real(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    /// Reads a cell back from its rendered form.
    pub fn parse(raw: &str) -> Self {
        if raw == "-0" {
            Cell::Real(-0.0)
        } else if let Ok(i) = raw.parse::<i128>() {
            Cell::Int(i)
        } else if let Ok(b) = raw.parse::<bool>() {
            Cell::Bool(b)
        } else if let Ok(v) = raw.parse::<f64>() {
            Cell::Real(v)
        } else {
            Cell::Text(raw.to_owned())
        }
    }

    fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Real(v) => format_real(*v),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn render_json(&self) -> String {
        match self {
            Cell::Text(s) => serde_json::to_string(s).expect("string serializes"),
            Cell::Real(v) if !v.is_finite() => {
                serde_json::to_string(&format_real(*v)).expect("string serializes")
            }
            other => other.render(),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(i128::from(v))
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

/// A table with fixed column order plus trailing summary fields.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputRecord {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub footer: Vec<(String, Cell)>,
}

impl OutputRecord {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            ..Self::default()
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn push_footer(&mut self, key: &str, value: impl Into<Cell>) {
        self.footer.push((key.to_owned(), value.into()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    /// Header row, one line per row, then `# key=value` footer lines. LF endings.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        for (key, value) in &self.footer {
            let _ = writeln!(out, "# {key}={}", value.render());
        }
        out
    }

    /// An array of row objects; when footer fields exist, an object holding
    /// the rows under `"rows"` alongside the footer keys.
    pub fn to_json(&self) -> String {
        let mut rows = String::from("[");
        for (i, row) in self.rows.iter().enumerate() {
            rows.push_str(if i == 0 { "\n  " } else { ",\n  " });
            rows.push('{');
            for (j, (col, cell)) in self.columns.iter().zip(row).enumerate() {
                if j > 0 {
                    rows.push_str(", ");
                }
                let _ = write!(rows, "{}: {}", json_key(col), cell.render_json());
            }
            rows.push('}');
        }
        rows.push_str(if self.rows.is_empty() { "]" } else { "\n]" });

        if self.footer.is_empty() {
            rows.push('\n');
            return rows;
        }
        let mut out = String::from("{\n\"rows\": ");
        out.push_str(&rows);
        for (key, value) in &self.footer {
            let _ = write!(out, ",\n{}: {}", json_key(key), value.render_json());
        }
        out.push_str("\n}\n");
        out
    }

    /// Parses text produced by [`OutputRecord::to_csv`].
    pub fn parse_csv(text: &str) -> Option<Self> {
        let mut lines = text.lines();
        let mut record = Self::new(lines.next()?.split(','));
        for line in lines {
            if let Some(footer) = line.strip_prefix("# ") {
                let (key, value) = footer.split_once('=')?;
                record.footer.push((key.to_owned(), Cell::parse(value)));
            } else {
                let row: Vec<Cell> = line.split(',').map(Cell::parse).collect();
                if row.len() != record.columns.len() {
                    return None;
                }
                record.rows.push(row);
            }
        }
        Some(record)
    }
}

fn json_key(key: &str) -> String {
    serde_json::to_string(key).expect("string serializes")
}

/// `%.17g`: 17 significant digits, trailing zeros dropped, scientific
/// notation when the decimal exponent is below −4 or at least 17.
pub fn format_real(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0" } else { "0" }.to_owned();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".to_owned()
        } else if v > 0.0 {
            "inf".to_owned()
        } else {
            "-inf".to_owned()
        };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_owned()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
