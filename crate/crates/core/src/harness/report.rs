//! JSON-lines and CSV reports.
//!
//! Reals are written with 17 significant digits, which round-trips every
//! `f64`. Non-finite reals are written as `NaN`, `inf` and `-inf` (quoted in
//! JSON). Parameters are `name=value` pairs joined by `;` in CSV and an
//! object in JSON-lines, in the entry's parameter order either way.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::Value as Json;

use super::VerificationRecord;
use crate::catalog::Params;
use crate::error::{Error, Result};

/// Column and key names, in emission order.
pub const FIELDS: [&str; 10] = [
    "entry_id",
    "params",
    "closed_value",
    "oracle_value",
    "abs_diff",
    "rel_diff",
    "oracle_converged",
    "pass",
    "n_evals",
    "wall_time",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    JsonLines,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json-lines" | "jsonl" => Ok(Format::JsonLines),
            "csv" => Ok(Format::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// A real in 17 significant digits, or `NaN`/`inf`/`-inf`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.16e}")
    }
}

fn json_real(x: f64) -> String {
    if x.is_finite() {
        format_real(x)
    } else {
        format!("\"{}\"", format_real(x))
    }
}

fn params_text(p: &Params) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={}", format_real(v)))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn emit_report(records: &[VerificationRecord], format: Format) -> Result<Vec<u8>> {
    match format {
        Format::JsonLines => Ok(emit_json_lines(records).into_bytes()),
        Format::Csv => emit_csv(records),
    }
}

fn emit_json_lines(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let quote = |s: &str| serde_json::to_string(s).expect("string serializes");
        let params: Vec<String> = r
            .params
            .iter()
            .map(|(k, v)| format!("{}:{}", quote(k), json_real(v)))
            .collect();
        let _ = writeln!(
            out,
            "{{\"entry_id\":{},\"params\":{{{}}},\"closed_value\":{},\"oracle_value\":{},\
             \"abs_diff\":{},\"rel_diff\":{},\"oracle_converged\":{},\"pass\":{},\
             \"n_evals\":{},\"wall_time\":{}}}",
            quote(&r.entry_id),
            params.join(","),
            json_real(r.closed_value),
            json_real(r.oracle_value),
            json_real(r.abs_diff),
            json_real(r.rel_diff),
            r.oracle_converged,
            r.pass,
            r.n_evals,
            json_real(r.wall_time),
        );
    }
    out
}

fn emit_csv(records: &[VerificationRecord]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Report(e.to_string());
    w.write_record(FIELDS).map_err(io)?;
    for r in records {
        w.write_record([
            r.entry_id.clone(),
            params_text(&r.params),
            format_real(r.closed_value),
            format_real(r.oracle_value),
            format_real(r.abs_diff),
            format_real(r.rel_diff),
            r.oracle_converged.to_string(),
            r.pass.to_string(),
            r.n_evals.to_string(),
            format_real(r.wall_time),
        ])
        .map_err(io)?;
    }
    w.into_inner().map_err(|e| Error::Report(e.to_string()))
}

/// Inverse of [`emit_report`].
pub fn parse_report(bytes: &[u8], format: Format) -> Result<Vec<VerificationRecord>> {
    match format {
        Format::JsonLines => parse_json_lines(bytes),
        Format::Csv => parse_csv(bytes),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Report(msg.into())
}

fn parse_real(s: &str) -> Result<f64> {
    s.trim().parse().map_err(|_| bad(format!("bad real `{s}`")))
}

fn parse_bool(s: &str) -> Result<bool> {
    s.parse().map_err(|_| bad(format!("bad flag `{s}`")))
}

fn json_to_real(v: &Json) -> Result<f64> {
    match v {
        Json::Number(n) => n.as_f64().ok_or_else(|| bad("bad number")),
        Json::String(s) => parse_real(s),
        _ => Err(bad(format!("expected a real, got {v}"))),
    }
}

fn parse_json_lines(bytes: &[u8]) -> Result<Vec<VerificationRecord>> {
    let text = std::str::from_utf8(bytes).map_err(|e| bad(e.to_string()))?;
    let mut out = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let v: Json = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        if obj.len() != FIELDS.len() || FIELDS.iter().any(|k| !obj.contains_key(*k)) {
            return Err(bad("keys differ from the record fields"));
        }
        let mut params = Params::new();
        for (k, x) in obj["params"].as_object().ok_or_else(|| bad("params must be an object"))? {
            params.set(k, json_to_real(x)?);
        }
        let flag = |k: &str| obj[k].as_bool().ok_or_else(|| bad(format!("{k} must be a flag")));
        out.push(VerificationRecord {
            entry_id: obj["entry_id"].as_str().ok_or_else(|| bad("entry_id must be a string"))?.to_string(),
            params,
            closed_value: json_to_real(&obj["closed_value"])?,
            oracle_value: json_to_real(&obj["oracle_value"])?,
            abs_diff: json_to_real(&obj["abs_diff"])?,
            rel_diff: json_to_real(&obj["rel_diff"])?,
            oracle_converged: flag("oracle_converged")?,
            pass: flag("pass")?,
            n_evals: obj["n_evals"].as_u64().ok_or_else(|| bad("n_evals must be a count"))?,
            wall_time: json_to_real(&obj["wall_time"])?,
        });
    }
    Ok(out)
}

fn parse_csv(bytes: &[u8]) -> Result<Vec<VerificationRecord>> {
    let mut r = csv::Reader::from_reader(bytes);
    let header = r.headers().map_err(|e| bad(e.to_string()))?;
    if header.iter().ne(FIELDS) {
        return Err(bad("header differs from the record fields"));
    }
    let mut out = Vec::new();
    for row in r.records() {
        let row = row.map_err(|e| bad(e.to_string()))?;
        let mut params = Params::new();
        for pair in row[1].split(';').filter(|s| !s.is_empty()) {
            let (k, v) = pair.split_once('=').ok_or_else(|| bad(format!("bad parameter `{pair}`")))?;
            params.set(k, parse_real(v)?);
        }
        out.push(VerificationRecord {
            entry_id: row[0].to_string(),
            params,
            closed_value: parse_real(&row[2])?,
            oracle_value: parse_real(&row[3])?,
            abs_diff: parse_real(&row[4])?,
            rel_diff: parse_real(&row[5])?,
            oracle_converged: parse_bool(&row[6])?,
            pass: parse_bool(&row[7])?,
            n_evals: row[8].parse().map_err(|_| bad("bad n_evals"))?,
            wall_time: parse_real(&row[9])?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationRecord {
        VerificationRecord {
            entry_id: "3.311.1".into(),
            params: Params::new().with("p", 0.3),
            closed_value: std::f64::consts::LN_2 / 0.3,
            oracle_value: 2.3104906018664844,
            abs_diff: 4.440892098500626e-16,
            rel_diff: f64::INFINITY,
            oracle_converged: true,
            pass: true,
            n_evals: 21,
            wall_time: 0.0,
        }
    }

    #[test]
    fn empty_csv_is_header_only() {
        let bytes = emit_report(&[], Format::Csv).unwrap();
        assert_eq!(String::from_utf8(bytes).unwrap(), format!("{}\n", FIELDS.join(",")));
    }

    #[test]
    fn single_json_line() {
        let text = String::from_utf8(emit_report(&[sample()], Format::JsonLines).unwrap()).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.contains("\"pass\":true"));
        assert!(text.contains("\"rel_diff\":\"inf\""));
        let v: Json = serde_json::from_str(text.trim()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, FIELDS);
    }

    #[test]
    fn both_formats_round_trip() {
        for f in [Format::JsonLines, Format::Csv] {
            let back = parse_report(&emit_report(&[sample()], f).unwrap(), f).unwrap();
            assert_eq!(back, vec![sample()]);
        }
    }

    #[test]
    fn unknown_format() {
        assert_eq!("xml".parse::<Format>(), Err(Error::UnknownFormat("xml".into())));
    }
}
