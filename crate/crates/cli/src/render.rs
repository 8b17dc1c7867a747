use clap::ValueEnum;
use num_bigint::BigInt;
use oddsum::bitcore::{format_rational, to_decimal};
use oddsum::ExactRational;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Exact `p/q`, or `sig` significant digits when a decimal width is set.
pub fn value(r: &ExactRational, decimal: Option<usize>) -> String {
    match decimal {
        Some(sig) => to_decimal(r, sig),
        None => format_rational(r),
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_line<S: AsRef<str>>(fields: &[S]) -> String {
    let parts: Vec<String> = fields.iter().map(|f| csv_field(f.as_ref())).collect();
    parts.join(",")
}

/// A JSON object with every value stored as a string, in insertion order.
pub fn record<K: Into<String>, V: Into<String>>(pairs: impl IntoIterator<Item = (K, V)>) -> Value {
    let map: Map<String, Value> = pairs
        .into_iter()
        .map(|(k, v)| (k.into(), Value::String(v.into())))
        .collect();
    Value::Object(map)
}

pub fn strings<S: ToString>(items: impl IntoIterator<Item = S>) -> Value {
    Value::Array(
        items
            .into_iter()
            .map(|s| Value::String(s.to_string()))
            .collect(),
    )
}

/// Header plus rows in the requested format.
pub fn table(format: Format, header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            out.push_str(&header.join(" "));
            out.push('\n');
            for row in rows {
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(&csv_line(header));
            out.push('\n');
            for row in rows {
                out.push_str(&csv_line(row));
                out.push('\n');
            }
        }
        Format::Json => {
            let records: Vec<Value> = rows
                .iter()
                .map(|row| record(header.iter().cloned().zip(row.iter().cloned())))
                .collect();
            out.push_str(&Value::Array(records).to_string());
            out.push('\n');
        }
    }
    out
}

/// `(2/3)·ln 2` to within `2^-bits`, from `ln 2 = Σ 1/(k·2^k)`.
pub fn two_thirds_ln2(bits: u64) -> ExactRational {
    let mut sum = ExactRational::from_integer(BigInt::from(0));
    for k in 1..=bits {
        sum += ExactRational::new(BigInt::from(1), BigInt::from(k) << k);
    }
    sum * ExactRational::new(BigInt::from(2), BigInt::from(3))
}
