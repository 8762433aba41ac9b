use serde_json::Value;
use unitary_charmap::Cyclotomic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// A rectangular listing, rendered as CSV or as aligned columns.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn csv(&self) -> String {
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = line.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn pretty(&self) -> String {
        let cols = self.header.len();
        let mut widths = vec![0; cols];
        for line in std::iter::once(&self.header).chain(&self.rows) {
            for (w, c) in widths.iter_mut().zip(line) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = line.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n', ' ']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// What a subcommand emits; `pretty` falls back to `table` when absent.
pub struct Doc {
    pub json: Value,
    pub table: Table,
    pub pretty: Option<Table>,
    pub preamble: Option<String>,
}

impl Doc {
    pub fn new(json: Value, table: Table) -> Self {
        Self { json, table, pretty: None, preamble: None }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.table.csv(),
            Format::Pretty => {
                let mut s = self.preamble.clone().unwrap_or_default();
                s.push_str(&self.pretty.as_ref().unwrap_or(&self.table).pretty());
                s
            }
        }
    }
}

fn trim_float(x: f64) -> String {
    let x = (x * 1e10).round() / 1e10;
    let x = if x == 0.0 { 0.0 } else { x };
    let s = format!("{x:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

/// `a+bi` with values rounded to `1e-10`, for display.
pub fn approx(c: &Cyclotomic) -> String {
    let (re, im) = c.to_complex();
    let re_s = trim_float(re);
    let im_s = trim_float(im);
    if im_s == "0" {
        re_s
    } else if re_s == "0" {
        format!("{im_s}i")
    } else if im_s.starts_with('-') {
        format!("{re_s}{im_s}i")
    } else {
        format!("{re_s}+{im_s}i")
    }
}

/// Exact text form of a cyclotomic number.
pub fn exact(c: &Cyclotomic) -> String {
    c.clone().normalize().to_string()
}
