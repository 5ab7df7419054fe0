//! Formatting and parsing helpers: 17-significant-digit floats for lossless
//! round-trips, comma-separated label and rational-length parsing, and a
//! small JSON line builder with deterministic field order.

use std::str::FromStr;

use sixj_core::geometry::EdgeLengths;
use sixj_core::labels::LabelSextuple;
use sixj_core::{BigInt, BigRational};

use crate::CliError;

/// 17 significant decimal digits: enough to reproduce any f64 exactly.
pub fn g17(x: f64) -> String {
    format!("{:.16e}", x)
}

pub fn parse_labels(s: &str) -> Result<LabelSextuple, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        return Err(CliError::BadInput(format!(
            "expected six comma-separated labels, got {}",
            parts.len()
        )));
    }
    let mut v = [0u32; 6];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot = part
            .parse::<u32>()
            .map_err(|_| CliError::BadInput(format!("label `{}` is not a natural number", part)))?;
    }
    Ok(LabelSextuple(v))
}

fn parse_rational(tok: &str) -> Option<BigRational> {
    let tok = tok.trim();
    if tok.starts_with('-') {
        return None;
    }
    if let Some((n, d)) = tok.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        Some(BigRational::new(n, d))
    } else if let Some((i, f)) = tok.split_once('.') {
        let scale = BigInt::from(10u32).pow(f.len() as u32);
        let int = if i.is_empty() {
            BigInt::from(0)
        } else {
            BigInt::from_str(i).ok()?
        };
        let frac = BigInt::from_str(f).ok()?;
        Some(BigRational::new(int * &scale + frac, scale))
    } else {
        Some(BigRational::from(BigInt::from_str(tok).ok()?))
    }
}

/// Six nonnegative rational lengths: integers, fractions `n/d` or decimals.
pub fn parse_lengths(s: &str) -> Result<EdgeLengths, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        return Err(CliError::BadInput(format!(
            "expected six comma-separated lengths, got {}",
            parts.len()
        )));
    }
    let mut v = Vec::with_capacity(6);
    for part in &parts {
        v.push(parse_rational(part).ok_or_else(|| {
            CliError::BadInput(format!("length `{}` is not a nonnegative rational", part))
        })?);
    }
    let lengths: [BigRational; 6] = v.try_into().expect("six entries");
    EdgeLengths::new(lengths).map_err(|e| CliError::Geometry(e.to_string()))
}

/// Single-line JSON object with fields in insertion order.
pub struct JsonLine {
    fields: Vec<String>,
}

impl JsonLine {
    pub fn new() -> Self {
        JsonLine { fields: Vec::new() }
    }

    pub fn raw(mut self, name: &str, value: impl AsRef<str>) -> Self {
        self.fields.push(format!("\"{}\":{}", name, value.as_ref()));
        self
    }

    pub fn str(self, name: &str, value: impl AsRef<str>) -> Self {
        let escaped = value.as_ref().replace('\\', "\\\\").replace('"', "\\\"");
        self.raw(name, format!("\"{}\"", escaped))
    }

    pub fn float(self, name: &str, value: f64) -> Self {
        self.raw(name, g17(value))
    }

    pub fn float_opt(self, name: &str, value: Option<f64>) -> Self {
        match value {
            Some(v) => self.float(name, v),
            None => self.raw(name, "null"),
        }
    }

    pub fn bool(self, name: &str, value: bool) -> Self {
        self.raw(name, if value { "true" } else { "false" })
    }

    pub fn int(self, name: &str, value: i64) -> Self {
        self.raw(name, value.to_string())
    }

    pub fn labels(self, name: &str, labels: &LabelSextuple) -> Self {
        let inner: Vec<String> = labels.0.iter().map(u32::to_string).collect();
        self.raw(name, format!("[{}]", inner.join(",")))
    }

    pub fn finish(self) -> String {
        format!("{{{}}}", self.fields.join(","))
    }
}
