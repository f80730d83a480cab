//! Rendering of Betti reports as text, CSV or JSON.

use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use perfcone_core::betti::BettiReport;
use perfcone_core::Int;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown format {s:?} (expected text, csv or json)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

/// `(name, values)` for each stratum row, then the total.
fn columns(report: &BettiReport, breakdown: bool) -> Vec<(String, Vec<Int>)> {
    let degrees = 0..=report.max_deg;
    let mut cols = Vec::new();
    if breakdown {
        for r in &report.rows {
            cols.push((r.name.clone(), degrees.clone().map(|k| r.values.coeff(k)).collect()));
        }
    }
    cols.push(("total".to_string(), degrees.map(|k| report.total(k)).collect()));
    cols
}

/// Degrees shown in the text table: odd degrees only when something lives there.
fn shown_degrees(report: &BettiReport) -> Vec<usize> {
    (0..=report.max_deg).filter(|&k| k % 2 == 0 || report.rows.iter().any(|r| !r.values.coeff(k).is_zero())).collect()
}

pub fn render(report: &BettiReport, breakdown: bool, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text if breakdown => text_table(report),
        OutputFormat::Text => format!("{}\n", report.totals),
        OutputFormat::Csv => csv(report, breakdown),
        OutputFormat::Json => json_document(report, breakdown),
    }
}

fn text_table(report: &BettiReport) -> String {
    let degrees = shown_degrees(report);
    let mut lines: Vec<Vec<String>> = vec![];
    let mut head = vec!["degree".to_string()];
    head.extend(degrees.iter().map(ToString::to_string));
    lines.push(head);
    for (name, values) in columns(report, true) {
        let mut row = vec![name];
        row.extend(degrees.iter().map(|&k| values[k].to_string()));
        lines.push(row);
    }
    let first = lines.iter().map(|l| l[0].len()).max().unwrap_or(0);
    let rest = lines.iter().flat_map(|l| l[1..].iter().map(String::len)).max().unwrap_or(0);
    let mut out = String::new();
    for l in lines {
        let mut s = format!("{:<first$}", l[0]);
        for cell in &l[1..] {
            s.push_str(&format!("  {cell:>rest$}"));
        }
        out.push_str(&s);
        out.push('\n');
    }
    out
}

fn csv(report: &BettiReport, breakdown: bool) -> String {
    let cols = columns(report, breakdown);
    let mut out = String::from("degree");
    for (name, _) in &cols {
        out.push(',');
        out.push_str(&csv_field(name));
    }
    out.push('\n');
    for k in 0..=report.max_deg {
        out.push_str(&k.to_string());
        for (_, values) in &cols {
            out.push(',');
            out.push_str(&values[k].to_string());
        }
        out.push('\n');
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Integers beyond `i64` are emitted as decimal strings.
fn int_value(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn json_document(report: &BettiReport, breakdown: bool) -> String {
    let space = report.space.to_string();
    let mut records = Vec::new();
    for k in 0..=report.max_deg {
        for (name, values) in columns(report, breakdown) {
            records.push(json!({ "space": space, "degree": k, "stratum": name, "value": int_value(&values[k]) }));
        }
    }
    let mut out = serde_json::to_string_pretty(&Value::Array(records)).expect("json values serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use perfcone_core::betti::{assemble, Space};

    #[test]
    fn csv_has_degree_strata_total_columns() {
        let r = assemble(Space::MumfordPartial, 4).unwrap();
        let out = render(&r, true, OutputFormat::Csv);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "degree,A_g,beta_1^0,total");
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[2], "1,0,0,0");
    }

    #[test]
    fn json_records_carry_the_four_keys() {
        let r = assemble(Space::Satake, 2).unwrap();
        let v: Value = serde_json::from_str(&render(&r, false, OutputFormat::Json)).unwrap();
        let recs = v.as_array().unwrap();
        assert_eq!(recs.len(), 3);
        assert_eq!(recs[2], json!({ "space": "satake", "degree": 2, "stratum": "total", "value": 1 }));
    }

    #[test]
    fn big_values_become_strings() {
        let big: Int = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int_value(&big), json!("123456789012345678901234567890"));
        assert_eq!(int_value(&Int::from(7)), json!(7));
    }
}
