//! Text output for triangle tables and verification reports.
//!
//! Ascii tables print a blank cell outside a triangle's support but a real 0
//! inside it, so structural zeros and absent cells stay distinguishable.
//! All three formats are deterministic; the CLI's golden-file tests pin the
//! exact bytes.

use crate::identities::VerificationReport;
use crate::transforms::{row_sum, AnyTable, SumColumns};
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Ascii,
    Csv,
    Json,
}

/// Render rows 0..rows of a table.  Row sum columns (and the alternating sum
/// for the table that has one) are appended automatically.
pub fn render_table(table: &AnyTable, rows: i64, format: Format) -> String {
    let rows = rows.max(0);
    let ncols = (0..rows).map(|n| table.support_max(n) + 1).max().unwrap_or(0);
    let (want_sum, want_alt) = match table.sum_columns() {
        SumColumns::None => (false, false),
        SumColumns::Row => (true, false),
        SumColumns::RowAndAlternating => (true, true),
    };

    // cell text by (row, col); None marks out-of-support cells
    let mut cells: Vec<Vec<Option<String>>> = Vec::new();
    let mut sums: Vec<String> = Vec::new();
    let mut alts: Vec<String> = Vec::new();
    for n in 0..rows {
        let mut row = Vec::with_capacity(ncols as usize);
        for k in 0..ncols {
            if table.in_support(n, k) {
                row.push(Some(table.entry(n, k).to_string()));
            } else {
                row.push(None);
            }
        }
        cells.push(row);
        if want_sum {
            sums.push(row_sum(table, n, false).to_string());
        }
        if want_alt {
            alts.push(row_sum(table, n, true).to_string());
        }
    }

    match format {
        Format::Ascii => ascii_table(rows, ncols, &cells, &sums, &alts),
        Format::Csv => csv_table(rows, ncols, &cells, &sums, &alts),
        Format::Json => json_table(table, rows, &cells, &sums, &alts),
    }
}

fn ascii_table(
    rows: i64,
    ncols: i64,
    cells: &[Vec<Option<String>>],
    sums: &[String],
    alts: &[String],
) -> String {
    let mut headers: Vec<String> = vec!["n\\k".to_string()];
    for k in 0..ncols {
        headers.push(k.to_string());
    }
    if !sums.is_empty() {
        headers.push("sum".to_string());
    }
    if !alts.is_empty() {
        headers.push("alt".to_string());
    }

    let mut grid: Vec<Vec<String>> = vec![headers];
    for n in 0..rows as usize {
        let mut line = vec![n.to_string()];
        for cell in &cells[n] {
            line.push(cell.clone().unwrap_or_default());
        }
        if !sums.is_empty() {
            line.push(sums[n].clone());
        }
        if !alts.is_empty() {
            line.push(alts[n].clone());
        }
        grid.push(line);
    }

    let cols = grid[0].len();
    let mut widths = vec![0usize; cols];
    for line in &grid {
        for (i, cell) in line.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }

    let mut out = String::new();
    for line in &grid {
        let mut text = String::new();
        for (i, cell) in line.iter().enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            text.push_str(&" ".repeat(widths[i] - cell.len()));
            text.push_str(cell);
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out.pop();
    out
}

fn csv_table(
    rows: i64,
    ncols: i64,
    cells: &[Vec<Option<String>>],
    sums: &[String],
    alts: &[String],
) -> String {
    let mut lines = Vec::new();
    let mut header = vec!["n".to_string()];
    for k in 0..ncols {
        header.push(k.to_string());
    }
    if !sums.is_empty() {
        header.push("sum".to_string());
    }
    if !alts.is_empty() {
        header.push("alt".to_string());
    }
    lines.push(header.join(","));
    for n in 0..rows as usize {
        let mut line = vec![n.to_string()];
        for cell in &cells[n] {
            line.push(cell.clone().unwrap_or_default());
        }
        if !sums.is_empty() {
            line.push(sums[n].clone());
        }
        if !alts.is_empty() {
            line.push(alts[n].clone());
        }
        lines.push(line.join(","));
    }
    lines.join("\n")
}

fn json_table(
    table: &AnyTable,
    rows: i64,
    cells: &[Vec<Option<String>>],
    sums: &[String],
    alts: &[String],
) -> String {
    let mut rows_json = Vec::new();
    for n in 0..rows as usize {
        let values: Vec<String> =
            cells[n].iter().filter_map(|c| c.clone()).collect();
        let mut obj = serde_json::Map::new();
        obj.insert("n".to_string(), json!(n));
        obj.insert("values".to_string(), json!(values));
        if !sums.is_empty() {
            obj.insert("sum".to_string(), json!(sums[n]));
        }
        if !alts.is_empty() {
            obj.insert("alt".to_string(), json!(alts[n]));
        }
        rows_json.push(Value::Object(obj));
    }
    let doc = json!({ "triangle": table.letter(), "rows": rows_json });
    serde_json::to_string_pretty(&doc).expect("table json")
}

/// Render verification reports.  Ascii prints one summary line per report
/// ("N cases, pass" / "FAIL") plus counterexample detail for failures.
pub fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Ascii => {
            let mut lines = Vec::new();
            for r in reports {
                if r.pass {
                    lines.push(format!("{}: {} cases, pass", r.id, r.cases));
                } else {
                    lines.push(format!("{}: {} cases, FAIL", r.id, r.cases));
                    if let Some(cx) = &r.counterexample {
                        let params: Vec<String> =
                            cx.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        lines.push(format!("  at {}", params.join(" ")));
                        lines.push(format!("  lhs = {}", cx.lhs));
                        lines.push(format!("  rhs = {}", cx.rhs));
                    }
                }
            }
            lines.join("\n")
        }
        Format::Csv => {
            let mut lines = vec!["id,pass,cases,domain,counterexample".to_string()];
            for r in reports {
                let cx = match &r.counterexample {
                    None => String::new(),
                    Some(cx) => {
                        let params: Vec<String> =
                            cx.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        format!("{}; lhs={}; rhs={}", params.join(" "), cx.lhs, cx.rhs)
                    }
                };
                lines.push(format!(
                    "{},{},{},\"{}\",\"{}\"",
                    r.id, r.pass, r.cases, r.domain, cx
                ));
            }
            lines.join("\n")
        }
        Format::Json => serde_json::to_string_pretty(reports).expect("report json"),
    }
}
