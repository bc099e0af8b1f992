use std::fmt::Write as _;

use crate::{Error, Result};

use super::{ComparisonReport, ComparisonRow, TableId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "md" | "markdown" => Ok(Self::Markdown),
            other => Err(Error::Argument(format!("unknown report format `{other}`"))),
        }
    }
}

fn title(id: TableId) -> &'static str {
    match id {
        TableId::Vhp => "VHP potential (a = 1, b = -1, c = 4, d = -4, hbar = 2mu = 1)",
        TableId::Hellmann => "Hellmann potential (a = b = 0, c = 2, d = -1, hbar = 2mu = 1)",
        TableId::Varshni => "Varshni potential (a = b = -1, hbar = 2mu = 1)",
        TableId::Yukawa => "Yukawa potential (d = -sqrt(2), alpha = g sqrt(2), hbar = mu = 1)",
    }
}

fn num(v: Option<f64>) -> String {
    v.map(|v| format!("{v:.6}")).unwrap_or_default()
}

fn header(report: &ComparisonReport) -> Vec<String> {
    let setup = &report.setup;
    let mut cols: Vec<String> = vec!["state".into(), setup.key_name().into(), "e_paper".into()];
    cols.extend(setup.ref_columns.iter().map(|r| r.tag().to_owned()));
    cols.extend(["e_ansatz".into(), "e_oracle".into()]);
    for method in ["ansatz", "oracle"] {
        cols.extend(
            setup
                .deviation_columns()
                .iter()
                .map(|c| format!("dev_{method}_{c}")),
        );
    }
    cols.push("flags".into());
    cols
}

fn record(report: &ComparisonReport, row: &ComparisonRow) -> Vec<String> {
    let r = &row.reference;
    let mut out = vec![
        r.state.clone(),
        format!("{:.6}", r.key.value),
        num(Some(r.e_paper.value)),
    ];
    out.extend(
        report
            .setup
            .ref_columns
            .iter()
            .map(|&s| num(r.reference(s))),
    );
    out.push(num(row.e_ansatz));
    out.push(num(row.e_oracle));
    out.extend(row.dev_ansatz.iter().map(|&d| num(d)));
    out.extend(row.dev_oracle.iter().map(|&d| num(d)));
    out.push(row.flags().join(";"));
    out
}

/// Renders a report with a fixed column order and six decimals throughout.
pub fn render_report(report: &ComparisonReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Markdown => render_markdown(report),
    }
}

fn render_csv(report: &ComparisonReport) -> String {
    let mut out = String::new();
    for line in std::iter::once(header(report)).chain(report.rows.iter().map(|r| record(report, r)))
    {
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn render_markdown(report: &ComparisonReport) -> String {
    let mut out = String::new();
    let id = report.setup.id;
    let _ = writeln!(out, "# Table {id}: {}\n", title(id));

    let cols = header(report);
    let _ = writeln!(out, "| {} |", cols.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(cols.len()));
    for row in &report.rows {
        let _ = writeln!(out, "| {} |", record(report, row).join(" | "));
    }

    if !report.summary.is_empty() {
        let _ = writeln!(out, "\n## Deviations (non-suspect rows)\n");
        let _ = writeln!(out, "| column | max | mean | rows |");
        let _ = writeln!(out, "|---|---|---|---|");
        for s in &report.summary {
            let _ = writeln!(
                out,
                "| {} | {:.6} | {:.6} | {} |",
                s.column, s.max_abs, s.mean_abs, s.count
            );
        }
    }
    if !report.trends.is_empty() {
        let _ = writeln!(out, "\n## Trend checks\n");
        for t in &report.trends {
            let mark = if t.passed { "pass" } else { "FAIL" };
            let _ = writeln!(out, "- [{mark}] {}", t.description);
        }
    }
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "\nResult: {verdict}");
    out
}

/// A rendered CSV report read back as text cells.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedReport {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl ParsedReport {
    /// Numeric cells of `name`; empty cells are `None`.
    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let j = self.headers.iter().position(|h| h == name)?;
        Some(
            self.rows
                .iter()
                .map(|r| r.get(j).and_then(|c| c.parse().ok()))
                .collect(),
        )
    }
}

pub fn parse_report_csv(text: &str) -> Result<ParsedReport> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers()?.iter().map(str::to_owned).collect();
    let rows = reader
        .records()
        .map(|r| Ok(r?.iter().map(str::to_owned).collect()))
        .collect::<Result<Vec<Vec<String>>>>()?;
    Ok(ParsedReport { headers, rows })
}
