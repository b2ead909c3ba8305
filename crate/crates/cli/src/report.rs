//! Reports and their serializations.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, headers: Vec<String>) -> Self {
        Table {
            name: name.into(),
            headers,
            rows: vec![],
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub name: String,
    pub value: String,
}

/// Result of one command: tables, the reference tables they reproduce, and
/// status flags such as `theorem-backed` or `verified-instance` counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub mirrors: Vec<String>,
    pub tables: Vec<Table>,
    pub flags: Vec<Flag>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn flag(&mut self, name: &str, value: impl ToString) {
        self.flags.push(Flag {
            name: name.into(),
            value: value.to_string(),
        });
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

impl Format {
    pub fn extension(&self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Markdown => "md",
        }
    }
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(CliError::Schema(format!("unknown format `{s}`"))),
        }
    }
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => to_csv(report),
        Format::Markdown => to_markdown(report),
    }
}

pub fn markdown_table(t: &Table) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "| {} |", t.headers.join(" | "));
    let _ = writeln!(s, "|{}", "---|".repeat(t.headers.len()));
    for r in &t.rows {
        let _ = writeln!(s, "| {} |", r.join(" | "));
    }
    s
}

fn to_markdown(r: &Report) -> String {
    let mut s = format!("# {}\n", r.command);
    if !r.mirrors.is_empty() {
        let _ = write!(s, "\nmirrors: {}\n", r.mirrors.join(", "));
    }
    for t in &r.tables {
        let _ = write!(s, "\n## {}\n\n{}", t.name, markdown_table(t));
    }
    if !r.flags.is_empty() {
        s.push('\n');
        for f in &r.flags {
            let _ = writeln!(s, "- {}: {}", f.name, f.value);
        }
    }
    s
}

// CSV layout: a `#report` record with the command and mirrors, then per
// table a `#table` record, the header record and the rows, then `#flag`
// records.

fn to_csv(r: &Report) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(vec![]);
    let mut head = vec!["#report".to_string(), r.command.clone()];
    head.extend(r.mirrors.iter().cloned());
    w.write_record(&head).expect("in-memory write");
    for t in &r.tables {
        w.write_record(["#table", t.name.as_str()]).expect("in-memory write");
        w.write_record(&t.headers).expect("in-memory write");
        for row in &t.rows {
            w.write_record(row).expect("in-memory write");
        }
    }
    for f in &r.flags {
        w.write_record(["#flag", f.name.as_str(), f.value.as_str()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// Inverse of the CSV emitter.
pub fn parse_csv(text: &str) -> Result<Report, CliError> {
    let bad = |m: &str| CliError::Schema(format!("csv report: {m}"));
    let mut rd = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut report: Option<Report> = None;
    let mut expect_header = false;
    for rec in rd.records() {
        let rec = rec.map_err(|e| bad(&e.to_string()))?;
        let fields: Vec<String> = rec.iter().map(str::to_string).collect();
        let tag = fields.first().map(String::as_str).unwrap_or("");
        match (tag, report.as_mut()) {
            ("#report", None) => {
                let mut r = Report::new(fields.get(1).ok_or_else(|| bad("missing command"))?);
                r.mirrors = fields[2..].to_vec();
                report = Some(r);
            }
            (_, None) => return Err(bad("missing #report record")),
            ("#table", Some(r)) => {
                r.tables.push(Table::new(fields.get(1).ok_or_else(|| bad("missing name"))?, vec![]));
                expect_header = true;
            }
            ("#flag", Some(r)) if fields.len() == 3 => {
                r.flag(&fields[1], &fields[2]);
            }
            (_, Some(r)) => {
                let t = r.tables.last_mut().ok_or_else(|| bad("row outside a table"))?;
                if expect_header {
                    t.headers = fields;
                    expect_header = false;
                } else {
                    t.rows.push(fields);
                }
            }
        }
    }
    report.ok_or_else(|| bad("empty input"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("dims");
        r.mirrors.push("sl3-dims".into());
        let mut t = Table::new("dims", vec!["n".into(), "Gamma+".into()]);
        t.push(vec!["2".into(), "2".into()]);
        t.push(vec!["4".into(), "1/3, \"x\"".into()]);
        r.tables.push(t);
        r.tables.push(Table::new("empty", vec!["a".into()]));
        r.flag("checks", "pass");
        r
    }

    #[test]
    fn csv_round_trip() {
        let r = sample();
        assert_eq!(parse_csv(&emit(&r, Format::Csv)).unwrap(), r);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let back: Report = serde_json::from_str(&emit(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn markdown_layout() {
        let md = markdown_table(&sample().tables[0]);
        assert_eq!(md.lines().next().unwrap(), "| n | Gamma+ |");
        assert_eq!(md.lines().count(), 4);
    }
}
