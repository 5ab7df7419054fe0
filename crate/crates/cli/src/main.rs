//! `sixj`: exact 6j-symbols, the permutation-sum oracle, comparison series,
//! tetrahedron geometry, Regge orbits, the rotation-element warm-up and the
//! section-norm demo, from one binary.
//!
//! Exit codes: 0 success, 2 malformed input, 3 I/O failure, 4 geometric
//! precondition failure.

mod cache;
mod fmtutil;
mod series;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use sixj_core::asymptotics::{
    rotation_asymptotic, rotation_exact, rotation_rep_oracle, section_norm_exact,
    section_norm_quadrature, ROTATION_ORACLE_CAP,
};
use sixj_core::geometry::{
    cayley_menger_det, gram_matrix, hadwiger_measures, tet_metric, EdgeLengths, TetClass,
};
use sixj_core::labels::LabelSextuple;
use sixj_core::numeric::big_rational_to_f64;
use sixj_core::penrose::{penrose_evaluate_with_cap, NetError, TrivalentNet};
use sixj_core::recoupling::{sixj_exact, tet_exact, theta_exact};
use sixj_core::regge::{invariance_report, orbit_congruence_classes, ReggeError};

use fmtutil::{g17, parse_labels, parse_lengths, JsonLine};

#[derive(Debug)]
pub enum CliError {
    BadInput(String),
    Io(String),
    Geometry(String),
}

impl CliError {
    fn message(&self) -> &str {
        match self {
            CliError::BadInput(m) | CliError::Io(m) | CliError::Geometry(m) => m,
        }
    }

    fn code(&self) -> i32 {
        match self {
            CliError::BadInput(_) => 2,
            CliError::Io(_) => 3,
            CliError::Geometry(_) => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

#[derive(Parser)]
#[command(name = "sixj", version, about = "Exact classical 6j-symbols and tetrahedron geometry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact 6j-symbol of one label sextuple
    Exact {
        /// Six comma-separated natural labels A,B,C,D,E,F
        #[arg(long)]
        labels: String,
    },
    /// Check the closed forms against the permutation-sum oracle
    Oracle {
        #[arg(long)]
        labels: String,
        /// Largest label the oracle will sum over
        #[arg(long, env = "SIXJ_ORACLE_CAP", default_value_t = 6)]
        oracle_cap: u32,
    },
    /// Exact-vs-asymptotic comparison series over a range of scales
    Series {
        #[arg(long)]
        labels: String,
        #[arg(long)]
        k_min: u32,
        #[arg(long)]
        k_max: u32,
        /// Output path; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSONL result cache, shared across runs
        #[arg(long, env = "SIXJ_CACHE")]
        cache: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Classification, volume, exterior angles and Hadwiger measures
    Geom {
        /// Six comma-separated nonnegative rational lengths (n, n/d or decimals)
        #[arg(long)]
        labels: String,
    },
    /// Regge orbit: one row per congruence class plus the invariance summary
    Regge {
        #[arg(long)]
        labels: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Rotation matrix element: exact recurrence, matrix oracle, asymptotic
    Wigner {
        #[arg(long)]
        k: u32,
        /// Rotation angle in radians
        #[arg(long)]
        beta: f64,
    },
    /// Invariant-section norm: exact rational, quadrature and asymptote
    NormDemo {
        #[arg(long)]
        k: u32,
    },
    /// Emit a plot script for a series CSV
    Plotscript {
        /// Series CSV produced by `sixj series`
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli.command) {
        eprintln!("sixj: {}", e.message());
        std::process::exit(e.code());
    }
}

fn emit(out: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {}", path.display(), e))),
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Exact { labels } => cmd_exact(&labels),
        Command::Oracle { labels, oracle_cap } => cmd_oracle(&labels, oracle_cap),
        Command::Series {
            labels,
            k_min,
            k_max,
            out,
            cache,
            format,
        } => cmd_series(&labels, k_min, k_max, out.as_ref(), cache.as_deref(), format),
        Command::Geom { labels } => cmd_geom(&labels),
        Command::Regge { labels, format } => cmd_regge(&labels, format),
        Command::Wigner { k, beta } => cmd_wigner(k, beta),
        Command::NormDemo { k } => cmd_norm_demo(k),
        Command::Plotscript { csv, out } => cmd_plotscript(&csv, out.as_ref()),
    }
}

fn cmd_exact(labels: &str) -> Result<(), CliError> {
    let labels = parse_labels(labels)?;
    let value = sixj_exact(&labels);
    let line = JsonLine::new()
        .labels("labels", &labels)
        .bool("admissible", labels.is_admissible())
        .int("sign", i64::from(value.sign))
        .str("radicand_num", value.radicand.numer().to_string())
        .str("radicand_den", value.radicand.denom().to_string())
        .float("value", value.to_f64())
        .finish();
    println!("{}", line);
    Ok(())
}

fn cmd_oracle(labels: &str, cap: u32) -> Result<(), CliError> {
    let labels = parse_labels(labels)?;
    if !labels.is_admissible() {
        let line = JsonLine::new()
            .labels("labels", &labels)
            .bool("admissible", false)
            .finish();
        println!("{}", line);
        return Ok(());
    }

    let run_net = |net: &TrivalentNet| -> Result<sixj_core::BigRational, CliError> {
        penrose_evaluate_with_cap(net, cap).map_err(|e| match e {
            NetError::CapExceeded { .. } => CliError::BadInput(e.to_string()),
            NetError::Inadmissible { .. } => CliError::BadInput(e.to_string()),
        })
    };

    let tet_oracle = run_net(&TrivalentNet::mercedes(&labels))?;
    let tet_closed = tet_exact(&labels).expect("admissible");
    let mut line = JsonLine::new()
        .labels("labels", &labels)
        .bool("admissible", true)
        .str("tet_closed", tet_closed.to_string())
        .str("tet_oracle", tet_oracle.to_string())
        .bool("tet_match", tet_closed == tet_oracle);

    let mut all_match = tet_closed == tet_oracle;
    let mut theta_parts = Vec::new();
    for [a, b, c] in labels.faces() {
        let oracle = run_net(&TrivalentNet::theta(a, b, c))?;
        let closed = theta_exact(a, b, c).expect("admissible face");
        all_match &= closed == oracle;
        theta_parts.push(format!(
            "{{\"face\":[{},{},{}],\"closed\":\"{}\",\"oracle\":\"{}\",\"match\":{}}}",
            a,
            b,
            c,
            closed,
            oracle,
            closed == oracle
        ));
    }
    line = line
        .raw("thetas", format!("[{}]", theta_parts.join(",")))
        .bool("all_match", all_match);
    println!("{}", line.finish());
    Ok(())
}

fn cmd_series(
    labels: &str,
    k_min: u32,
    k_max: u32,
    out: Option<&PathBuf>,
    cache_path: Option<&std::path::Path>,
    format: Format,
) -> Result<(), CliError> {
    let labels = parse_labels(labels)?;
    if k_min < 1 || k_min > k_max {
        return Err(CliError::BadInput(format!(
            "need 1 ≤ k_min ≤ k_max, got {}..{}",
            k_min, k_max
        )));
    }

    let cache = match cache_path {
        Some(p) => cache::Cache::load(p)
            .map_err(|e| CliError::Io(format!("cannot read cache {}: {}", p.display(), e)))?,
        None => cache::Cache::default(),
    };

    let outcome = series::compute(&labels, k_min, k_max, &cache);
    series::spot_check_hits(&outcome.cache_hits)?;

    let meta = series::series_meta(&labels);
    let content = match format {
        Format::Csv => series::write_csv(&meta, &outcome.rows),
        Format::Jsonl => series::write_jsonl(&outcome.rows),
    };
    emit(out, &content)?;

    if let Some(p) = cache_path {
        cache::append_records(p, &outcome.new_records)
            .map_err(|e| CliError::Io(format!("cannot append cache {}: {}", p.display(), e)))?;
    }
    Ok(())
}

fn class_name(class: TetClass) -> &'static str {
    match class {
        TetClass::Euclidean => "euclidean",
        TetClass::Flat => "flat",
        TetClass::Minkowskian => "minkowskian",
    }
}

fn cmd_geom(lengths: &str) -> Result<(), CliError> {
    let lengths = parse_lengths(lengths)?;
    let metric = tet_metric(&lengths);
    let gram = gram_matrix(&lengths);
    let hadwiger = hadwiger_measures(&lengths).ok();

    let mut line = JsonLine::new()
        .raw(
            "lengths",
            format!(
                "[{}]",
                lengths
                    .0
                    .iter()
                    .map(|l| format!("\"{}\"", l))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        )
        .str("class", class_name(metric.class))
        .str("gram_det", gram.det().to_string())
        .str("cayley_menger", cayley_menger_det(&lengths).to_string())
        .float_opt("volume", metric.volume);
    line = match metric.exterior_angles {
        Some(angles) => line.raw(
            "exterior_angles",
            format!(
                "[{}]",
                angles.iter().map(|a| g17(*a)).collect::<Vec<_>>().join(",")
            ),
        ),
        None => line.raw("exterior_angles", "null"),
    };
    line = match hadwiger {
        Some(h) => line.raw(
            "hadwiger",
            format!(
                "[{},{},{},{}]",
                g17(h.mu0),
                g17(h.mu1),
                g17(h.mu2),
                g17(h.mu3)
            ),
        ),
        None => line.raw("hadwiger", "null"),
    };
    println!("{}", line.finish());
    Ok(())
}

fn cmd_regge(labels: &str, format: Format) -> Result<(), CliError> {
    let labels = parse_labels(labels)?;
    let report = orbit_congruence_classes(&labels).map_err(|e| match e {
        ReggeError::Inadmissible(_) => CliError::BadInput(e.to_string()),
        other => CliError::Geometry(other.to_string()),
    })?;
    let invariance = invariance_report(&labels).ok();

    let sixj = &report.sixj;
    let mu2_of = |l: &LabelSextuple| {
        EdgeLengths::from_labels(l)
            .ok()
            .and_then(|e| hadwiger_measures(&e).ok())
            .map(|h| h.mu2)
    };

    let mut out = String::new();
    match format {
        Format::Jsonl => {
            for class in &report.classes {
                let line = JsonLine::new()
                    .labels("labels", &class.canonical)
                    .str("class", class_name(class.class))
                    .float_opt("volume", class.volume)
                    .float_opt("mu1", class.mu1)
                    .float_opt("mu2", mu2_of(&class.canonical))
                    .int("total_edge_length", i64::from(class.total_edge_length))
                    .bool("chiral", class.chiral)
                    .finish();
                out.push_str(&line);
                out.push('\n');
            }
            let mut summary = JsonLine::new()
                .int("classes", report.classes.len() as i64)
                .int("congruence_classes", report.congruence_class_count() as i64)
                .int("sixj_sign", i64::from(sixj.sign))
                .str("sixj_radicand_num", sixj.radicand.numer().to_string())
                .str("sixj_radicand_den", sixj.radicand.denom().to_string())
                .float("sixj_value", sixj.to_f64());
            if let Some(inv) = &invariance {
                summary = summary
                    .bool("invariants_hold", inv.passes())
                    .float("volume_spread", inv.volume_spread)
                    .float("mu1_spread", inv.mu1_spread)
                    .float("mu2_spread", inv.mu2_spread);
            }
            out.push_str(&summary.finish());
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("labels,class,volume,mu1,mu2,total_edge_length,chiral\n");
            for class in &report.classes {
                out.push_str(&format!(
                    "\"{}\",{},{},{},{},{},{}\n",
                    class.canonical,
                    class_name(class.class),
                    class.volume.map(g17).unwrap_or_default(),
                    class.mu1.map(g17).unwrap_or_default(),
                    mu2_of(&class.canonical).map(g17).unwrap_or_default(),
                    class.total_edge_length,
                    class.chiral,
                ));
            }
            out.push_str(&format!(
                "# sixj = {} (sign {}, radicand {}/{}); {} classes, {} congruence classes\n",
                g17(sixj.to_f64()),
                sixj.sign,
                sixj.radicand.numer(),
                sixj.radicand.denom(),
                report.classes.len(),
                report.congruence_class_count(),
            ));
            match &invariance {
                Some(inv) => out.push_str(&format!(
                    "# invariance: sixj constant {}; total edge length constant {}; volume \
                     spread {}; mu1 spread {}; mu2 spread {} (not required) -> {}\n",
                    inv.sixj_constant,
                    inv.total_edge_length_constant,
                    g17(inv.volume_spread),
                    g17(inv.mu1_spread),
                    g17(inv.mu2_spread),
                    if inv.passes() { "contracts hold" } else { "CONTRACTS VIOLATED" },
                )),
                None => out.push_str(
                    "# invariance: geometric contracts not applicable (input not Euclidean)\n",
                ),
            }
        }
    }
    print!("{}", out);
    Ok(())
}

fn cmd_wigner(k: u32, beta: f64) -> Result<(), CliError> {
    if !beta.is_finite() {
        return Err(CliError::BadInput("beta must be a finite angle".into()));
    }
    let exact = rotation_exact(k, beta);
    let oracle = if k <= ROTATION_ORACLE_CAP {
        Some(rotation_rep_oracle(k, beta).expect("k within cap"))
    } else {
        None
    };
    let asymptotic = rotation_asymptotic(k, beta).ok();
    let line = JsonLine::new()
        .int("k", i64::from(k))
        .float("beta", beta)
        .float("exact", exact)
        .float_opt("rep_oracle", oracle)
        .float_opt("asymptotic", asymptotic)
        .float_opt("abs_err", asymptotic.map(|a| (exact - a).abs()))
        .finish();
    println!("{}", line);
    Ok(())
}

fn cmd_norm_demo(k: u32) -> Result<(), CliError> {
    if k < 1 {
        return Err(CliError::BadInput("k must be at least 1".into()));
    }
    let exact = section_norm_exact(k);
    let exact_f = big_rational_to_f64(&exact);
    let quadrature = section_norm_quadrature(k);
    let asymptote = (std::f64::consts::PI * f64::from(k)).sqrt() * 4f64.powi(-(k as i32));
    let line = JsonLine::new()
        .int("k", i64::from(k))
        .str("exact_num", exact.numer().abs().to_string())
        .str("exact_den", exact.denom().to_string())
        .float("exact", exact_f)
        .float("quadrature", quadrature)
        .float("rel_err", ((quadrature - exact_f) / exact_f).abs())
        .float("asymptote_ratio", exact_f / asymptote)
        .finish();
    println!("{}", line);
    Ok(())
}

fn cmd_plotscript(csv: &PathBuf, out: Option<&PathBuf>) -> Result<(), CliError> {
    let text = std::fs::read_to_string(csv)
        .map_err(|e| CliError::Io(format!("cannot read {}: {}", csv.display(), e)))?;
    let (meta, _rows) = series::parse_csv(&text)?;
    let script = series::plot_script(&csv.display().to_string(), &meta)?;
    emit(out, &script)
}
