//! Append-only JSONL result cache keyed by the canonical (lexicographically
//! minimal under the 24 relabelings) sextuple, so that symmetric queries
//! share one entry. Records hold the exact sign and radicand as decimal
//! strings; a hit must reproduce the record exactly when recomputed.

use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sixj_core::labels::LabelSextuple;
use sixj_core::numeric::signed_sqrt_to_f64;
use sixj_core::value::ExactValue;
use sixj_core::{BigInt, BigRational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub labels: [u32; 6],
    pub sign: i8,
    pub radicand_num: String,
    pub radicand_den: String,
}

impl CacheRecord {
    pub fn from_value(canonical: &LabelSextuple, value: &ExactValue) -> Self {
        CacheRecord {
            labels: canonical.0,
            sign: value.sign,
            radicand_num: value.radicand.numer().to_string(),
            radicand_den: value.radicand.denom().to_string(),
        }
    }

    pub fn matches(&self, value: &ExactValue) -> bool {
        self.sign == value.sign
            && self.radicand_num == value.radicand.numer().to_string()
            && self.radicand_den == value.radicand.denom().to_string()
    }

    /// `sign·√radicand` as f64; identical to a fresh evaluation by
    /// construction.
    pub fn to_f64(&self) -> f64 {
        let num = BigInt::from_str(&self.radicand_num).expect("decimal numerator");
        let den = BigInt::from_str(&self.radicand_den).expect("decimal denominator");
        signed_sqrt_to_f64(self.sign, &BigRational::new(num, den))
    }
}

#[derive(Default)]
pub struct Cache {
    map: HashMap<[u32; 6], CacheRecord>,
}

impl Cache {
    /// Load a JSONL cache. A missing file is an empty cache; a torn final
    /// line (a concurrent append in progress) is skipped.
    pub fn load(path: &Path) -> std::io::Result<Cache> {
        let mut map = HashMap::new();
        let file = match std::fs::File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Ok(Cache::default());
            }
            Err(e) => return Err(e),
        };
        let mut lines = BufReader::new(file).lines().peekable();
        while let Some(line) = lines.next() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CacheRecord>(&line) {
                Ok(rec) => {
                    map.insert(rec.labels, rec);
                }
                Err(e) if lines.peek().is_none() => {
                    // tolerate a partial trailing line only
                    let _ = e;
                }
                Err(e) => {
                    return Err(std::io::Error::new(
                        std::io::ErrorKind::InvalidData,
                        format!("corrupt cache line: {}", e),
                    ));
                }
            }
        }
        Ok(Cache { map })
    }

    pub fn lookup(&self, canonical: &LabelSextuple) -> Option<&CacheRecord> {
        self.map.get(&canonical.0)
    }
}

/// Append records to the JSONL file, creating it if needed. Single-writer
/// contract: records go out in one buffered write, in the given order.
pub fn append_records(path: &Path, records: &[CacheRecord]) -> std::io::Result<()> {
    if records.is_empty() {
        return Ok(());
    }
    let mut out = String::new();
    for rec in records {
        out.push_str(&serde_json::to_string(rec).expect("plain struct"));
        out.push('\n');
    }
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    file.write_all(out.as_bytes())
}
