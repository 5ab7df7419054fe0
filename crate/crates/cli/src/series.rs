//! Series assembly with cache support, the CSV wire format, and the
//! generated plot script.
//!
//! CSV layout: optional `# labels=…` / `# volume=…` comment headers, then
//! `k,exact,pr_theorem,pr_original,abs_err_theorem,abs_err_original` with
//! floats at 17 significant digits and absent estimates as empty fields.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rayon::prelude::*;
use sixj_core::asymptotics::{pr_original_estimate, pr_theorem_estimate, AsymptoticSample};
use sixj_core::geometry::{volume, EdgeLengths};
use sixj_core::labels::LabelSextuple;
use sixj_core::recoupling::sixj_exact;
use sixj_core::regge::canonical_form;
use sixj_core::scale_labels;

use crate::cache::{Cache, CacheRecord};
use crate::fmtutil::{g17, parse_labels};
use crate::CliError;

pub struct SeriesMeta {
    pub labels: LabelSextuple,
    /// Volume of the unscaled tetrahedron when it is Euclidean; the plot
    /// envelope `±√(2/(3πVk³))` needs it.
    pub volume: Option<f64>,
}

pub struct SeriesOutcome {
    pub rows: Vec<AsymptoticSample>,
    /// Records for sextuples that were computed this run, ordered by k.
    pub new_records: Vec<CacheRecord>,
    pub cache_hits: Vec<CacheRecord>,
}

/// Compute the series, consulting the cache for exact values.
pub fn compute(
    labels: &LabelSextuple,
    k_min: u32,
    k_max: u32,
    cache: &Cache,
) -> SeriesOutcome {
    let per_k: Vec<(AsymptoticSample, Option<CacheRecord>, Option<CacheRecord>)> = (k_min
        ..=k_max)
        .into_par_iter()
        .map(|k| {
            let scaled = scale_labels(labels, k);
            let canonical = canonical_form(&scaled);
            let (exact, fresh, hit) = match cache.lookup(&canonical) {
                Some(rec) => (rec.to_f64(), None, Some(rec.clone())),
                None => {
                    let value = sixj_exact(&canonical);
                    let rec = CacheRecord::from_value(&canonical, &value);
                    (value.to_f64(), Some(rec), None)
                }
            };
            let pr_theorem = pr_theorem_estimate(labels, k).ok();
            let pr_original = pr_original_estimate(labels, k).ok();
            let row = AsymptoticSample {
                k,
                exact,
                pr_theorem,
                pr_original,
                abs_err_theorem: pr_theorem.map(|p| (exact - p).abs()),
                abs_err_original: pr_original.map(|p| (exact - p).abs()),
            };
            (row, fresh, hit)
        })
        .collect();

    let mut rows = Vec::with_capacity(per_k.len());
    let mut new_records = Vec::new();
    let mut cache_hits = Vec::new();
    for (row, fresh, hit) in per_k {
        rows.push(row);
        if let Some(rec) = fresh {
            new_records.push(rec);
        }
        if let Some(rec) = hit {
            cache_hits.push(rec);
        }
    }
    SeriesOutcome {
        rows,
        new_records,
        cache_hits,
    }
}

/// Recompute a deterministic ~5% sample of the cache hits and require exact
/// agreement, record by record.
pub fn spot_check_hits(hits: &[CacheRecord]) -> Result<usize, CliError> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x51f3);
    let mut checked = 0usize;
    for rec in hits {
        if rng.gen::<f64>() >= 0.05 {
            continue;
        }
        checked += 1;
        let labels = LabelSextuple(rec.labels);
        let value = sixj_exact(&labels);
        if !rec.matches(&value) {
            return Err(CliError::Io(format!(
                "cache record for {} does not match recomputation",
                labels
            )));
        }
    }
    Ok(checked)
}

fn opt_field(v: Option<f64>) -> String {
    v.map(g17).unwrap_or_default()
}

pub fn write_csv(meta: &SeriesMeta, rows: &[AsymptoticSample]) -> String {
    let mut out = String::new();
    out.push_str(&format!("# labels={}\n", meta.labels));
    if let Some(v) = meta.volume {
        out.push_str(&format!("# volume={}\n", g17(v)));
    }
    out.push_str("k,exact,pr_theorem,pr_original,abs_err_theorem,abs_err_original\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.k,
            g17(r.exact),
            opt_field(r.pr_theorem),
            opt_field(r.pr_original),
            opt_field(r.abs_err_theorem),
            opt_field(r.abs_err_original),
        ));
    }
    out
}

pub fn write_jsonl(rows: &[AsymptoticSample]) -> String {
    use crate::fmtutil::JsonLine;
    let mut out = String::new();
    for r in rows {
        out.push_str(
            &JsonLine::new()
                .int("k", i64::from(r.k))
                .float("exact", r.exact)
                .float_opt("pr_theorem", r.pr_theorem)
                .float_opt("pr_original", r.pr_original)
                .float_opt("abs_err_theorem", r.abs_err_theorem)
                .float_opt("abs_err_original", r.abs_err_original)
                .finish(),
        );
        out.push('\n');
    }
    out
}

/// Parse an emitted CSV back into its metadata and rows, bit-exactly.
pub fn parse_csv(text: &str) -> Result<(SeriesMeta, Vec<AsymptoticSample>), CliError> {
    let mut labels = None;
    let mut vol = None;
    let mut rows = Vec::new();
    let bad = |line: &str| CliError::BadInput(format!("malformed series line `{}`", line));
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# labels=") {
            labels = Some(parse_labels(rest)?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("# volume=") {
            vol = Some(rest.parse::<f64>().map_err(|_| bad(line))?);
            continue;
        }
        if line.starts_with('#') || line.starts_with('k') || line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 6 {
            return Err(bad(line));
        }
        let field = |s: &str| -> Result<Option<f64>, CliError> {
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse::<f64>().map(Some).map_err(|_| bad(line))
            }
        };
        rows.push(AsymptoticSample {
            k: cells[0].parse().map_err(|_| bad(line))?,
            exact: cells[1].parse().map_err(|_| bad(line))?,
            pr_theorem: field(cells[2])?,
            pr_original: field(cells[3])?,
            abs_err_theorem: field(cells[4])?,
            abs_err_original: field(cells[5])?,
        });
    }
    let labels = labels.ok_or_else(|| CliError::BadInput("series has no labels header".into()))?;
    Ok((SeriesMeta { labels, volume: vol }, rows))
}

pub fn series_meta(labels: &LabelSextuple) -> SeriesMeta {
    let vol = EdgeLengths::from_labels(labels)
        .ok()
        .and_then(|l| volume(&l).ok())
        .filter(|v| *v > 0.0);
    SeriesMeta {
        labels: *labels,
        volume: vol,
    }
}

/// Self-contained matplotlib script drawing exact points against the
/// asymptotic envelope. Deterministic output.
pub fn plot_script(csv_path: &str, meta: &SeriesMeta) -> Result<String, CliError> {
    let volume = meta.volume.ok_or_else(|| {
        CliError::BadInput(
            "series has no Euclidean envelope (no volume header in the CSV)".into(),
        )
    })?;
    Ok(format!(
        r##"#!/usr/bin/env python3
"""Exact 6j values against the asymptotic envelope; generated by sixj."""
import csv
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

CSV = {csv:?}
VOLUME = {volume}
LABELS = "{labels}"

ks, exact, est = [], [], []
with open(CSV) as fh:
    for row in csv.reader(line for line in fh if not line.startswith("#")):
        if not row or row[0] == "k":
            continue
        ks.append(int(row[0]))
        exact.append(float(row[1]))
        est.append(float(row[2]) if row[2] else math.nan)

env = [math.sqrt(2.0 / (3.0 * math.pi * VOLUME * k**3)) for k in ks]

plt.figure(figsize=(8.0, 4.5))
plt.plot(ks, env, "k--", lw=0.8, label="envelope")
plt.plot(ks, [-e for e in env], "k--", lw=0.8)
plt.plot(ks, est, "-", color="tab:cyan", lw=0.8, label="asymptotic")
plt.plot(ks, exact, ".", color="tab:red", ms=5, label="exact")
plt.xlabel("k")
plt.ylabel("6j value")
plt.title(f"labels {{LABELS}}")
plt.legend()
plt.tight_layout()
plt.savefig(CSV + ".png", dpi=150)
print("wrote", CSV + ".png")
"##,
        csv = csv_path,
        volume = g17(volume),
        labels = meta.labels,
    ))
}
