use std::fmt::Write as _;

use ji_notation::{OutputRecord, ThreeCandidateAnalysis};
use serde_json::{json, Value};

/// Aligned `NOTATION  FRACTION  CENTS¢` lines, or the cents column alone.
pub fn records_text(records: &[OutputRecord], cents_only: bool) -> String {
    let cents: Vec<String> = records.iter().map(OutputRecord::cents_text).collect();
    let cw = width(cents.iter().map(String::as_str));
    let mut out = String::new();
    if cents_only {
        for c in &cents {
            let _ = writeln!(out, "{c:>cw$}¢");
        }
        return out;
    }
    let nw = width(records.iter().map(|r| r.notation.as_str()));
    let fw = width(records.iter().map(|r| r.fraction.as_str()));
    for (r, c) in records.iter().zip(&cents) {
        let _ = writeln!(out, "{:<nw$}  {:<fw$}  {c:>cw$}¢", r.notation, r.fraction);
    }
    out
}

pub fn records_json(records: &[OutputRecord], cents_only: bool) -> Value {
    if cents_only {
        json!(records.iter().map(|r| r.cents).collect::<Vec<_>>())
    } else {
        json!(records)
    }
}

pub fn record_json(record: &OutputRecord, cents_only: bool) -> Value {
    if cents_only {
        json!(record.cents)
    } else {
        json!(record)
    }
}

pub fn to_json(value: &Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

/// Columns separated by two spaces. A column whose body cells are all
/// numbers is right-aligned; the first row is the header.
pub fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| width(rows.iter().filter_map(|r| r.get(c).map(String::as_str))))
        .collect();
    let numeric: Vec<bool> = (0..cols)
        .map(|c| {
            rows.iter()
                .skip(1)
                .filter_map(|r| r.get(c))
                .all(|cell| cell.is_empty() || cell.parse::<f64>().is_ok())
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            let w = widths[c];
            if numeric[c] {
                let _ = write!(line, "{cell:>w$}");
            } else {
                let _ = write!(line, "{cell:<w$}");
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn csv(rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}

fn width<'a>(cells: impl Iterator<Item = &'a str>) -> usize {
    cells.map(|c| c.chars().count()).max().unwrap_or(0)
}

pub fn analysis_rows(analysis: &ThreeCandidateAnalysis) -> Vec<Vec<String>> {
    let mut rows = vec![[
        "two_exponent",
        "fraction",
        "decimal",
        "CY",
        "LCY",
        "AO",
        "CM",
        "best",
    ]
    .map(String::from)
    .to_vec()];
    for (i, c) in analysis.rows.iter().enumerate() {
        let m = &c.measures;
        rows.push(vec![
            c.two_exponent.to_string(),
            c.fraction.to_string(),
            format!("{}", c.decimal),
            m.complexity.to_string(),
            format!("{:.3}", m.log_complexity),
            format!("{:.3}", m.abs_octaves),
            format!("{:.3}", m.comma_measure),
            if analysis.best == Some(i) { "*" } else { "" }.to_string(),
        ]);
    }
    rows
}

pub fn analysis_json(analysis: &ThreeCandidateAnalysis) -> Value {
    let rows: Vec<Value> = analysis
        .rows
        .iter()
        .map(|c| {
            let m = &c.measures;
            json!({
                "two_exponent": c.two_exponent,
                "fraction": c.fraction.to_string(),
                "decimal": c.decimal,
                "complexity": m.complexity.to_string(),
                "log_complexity": m.log_complexity,
                "abs_octaves": m.abs_octaves,
                "comma_measure": m.comma_measure,
            })
        })
        .collect();
    let best = analysis.best.map(|i| analysis.rows[i].fraction.to_string());
    json!({ "rows": rows, "best": best })
}
