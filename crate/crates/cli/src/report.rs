//! The report every command produces, and its three renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::input::InputInfo;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// A labelled grid of cells: `rows[i].0` labels row `i`.
#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub title: String,
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl Table {
    pub fn new(title: impl Into<String>, corner: impl Into<String>, columns: Vec<String>) -> Self {
        Table {
            title: title.into(),
            corner: corner.into(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, label: impl Into<String>, cells: Vec<String>) {
        self.rows.push((label.into(), cells));
    }

    /// One row `dim` over columns `0..values.len()`.
    pub fn series(title: impl Into<String>, values: &[usize]) -> Self {
        let mut t = Table::new(title, "n", (0..values.len()).map(|n| n.to_string()).collect());
        t.row("dim", values.iter().map(usize::to_string).collect());
        t
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    pub checks: Vec<Check>,
    pub tables: Vec<Table>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(input: Option<InputInfo>) -> Self {
        Report {
            command: Vec::new(),
            input,
            checks: Vec::new(),
            tables: Vec::new(),
            data: None,
            timing_ms: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Csv => self.csv(),
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        if let Some(i) = &self.input {
            let _ = writeln!(s, "input: {} ({}, sha256 {})\n", i.name, i.origin, &i.sha256[..16]);
        }
        for t in &self.tables {
            let _ = writeln!(s, "{}", t.title);
            let mut grid = vec![std::iter::once(t.corner.clone())
                .chain(t.columns.iter().cloned())
                .collect::<Vec<_>>()];
            grid.extend(
                t.rows
                    .iter()
                    .map(|(l, c)| std::iter::once(l.clone()).chain(c.iter().cloned()).collect()),
            );
            let ncols = grid.iter().map(Vec::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..ncols)
                .map(|j| {
                    grid.iter()
                        .filter_map(|r| r.get(j))
                        .map(|c| c.chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for row in &grid {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| {
                        let numeric = j > 0 && !c.is_empty() && c.chars().all(|ch| ch.is_ascii_digit());
                        if numeric {
                            format!("{c:>w$}", w = widths[j])
                        } else {
                            format!("{c:<w$}", w = widths[j])
                        }
                    })
                    .collect();
                let _ = writeln!(s, "{}", line.join("  ").trim_end());
            }
            s.push('\n');
        }
        if !self.checks.is_empty() {
            let w = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
            for c in &self.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                let line = format!("{tag}  {:<w$}  {}", c.name, c.detail);
                let _ = writeln!(s, "{}", line.trim_end());
            }
            let failed = self.checks.iter().filter(|c| !c.pass).count();
            let _ = writeln!(s, "\n{} checks, {failed} failed", self.checks.len());
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(s, "time: {ms} ms");
        }
        s
    }

    fn csv(&self) -> String {
        let mut out = Vec::new();
        for t in &self.tables {
            out.extend_from_slice(format!("# {}\n", t.title).as_bytes());
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            let header: Vec<&str> = std::iter::once(t.corner.as_str())
                .chain(t.columns.iter().map(String::as_str))
                .collect();
            let _ = w.write_record(&header);
            for (label, cells) in &t.rows {
                let rec: Vec<&str> = std::iter::once(label.as_str())
                    .chain(cells.iter().map(String::as_str))
                    .collect();
                let _ = w.write_record(&rec);
            }
            out.extend(w.into_inner().expect("in-memory writer"));
        }
        if !self.checks.is_empty() {
            out.extend_from_slice(b"# checks\n");
            let mut w = csv::Writer::from_writer(Vec::new());
            let _ = w.write_record(["check", "pass", "detail"]);
            for c in &self.checks {
                let _ = w.write_record([
                    c.name.as_str(),
                    if c.pass { "true" } else { "false" },
                    c.detail.as_str(),
                ]);
            }
            out.extend(w.into_inner().expect("in-memory writer"));
        }
        String::from_utf8(out).expect("csv output is UTF-8")
    }
}
