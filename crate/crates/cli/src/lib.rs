//! Drivers behind the `greenseq` binary. Each command returns the complete
//! payload for stdout, so the binary only handles flags and files.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use greenseq::catalog::ModuleTriple;
use greenseq::count::HasseSize;
use greenseq::hasse::emit_dot;
use greenseq::oracle::enumerate_mgs;
use greenseq::pipeline::{analyze, hasse_only, Analysis, HasseStage};
use greenseq::prec::compare;
use greenseq::{Catalog, Error, ErrorKind, LengthDistribution, Quiver};

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Dot,
}

/// A failed command: the message for stderr and the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn bad_input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_BAD_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::BadInput => EXIT_BAD_INPUT,
            ErrorKind::Unsupported => EXIT_UNSUPPORTED,
            ErrorKind::Internal => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Output of a command that ran to completion. `code` is nonzero when a
/// verification command found a disagreement.
#[derive(Debug, Default)]
pub struct Report {
    pub stdout: String,
    pub stats: Option<String>,
    pub code: i32,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report {
            stdout,
            ..Report::default()
        }
    }
}

pub type Outcome = std::result::Result<Report, Failure>;

/// Reads the quiver from exactly one of a JSON file and a preset name.
pub fn load_quiver(
    file: Option<&Path>,
    preset: Option<&str>,
) -> std::result::Result<Quiver, Failure> {
    match (file, preset) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::bad_input(format!("cannot read {}: {e}", path.display())))?;
            Ok(Quiver::from_json(&text)?)
        }
        (None, Some(name)) => Ok(greenseq::preset(name)?),
        _ => Err(Failure::bad_input(
            "give exactly one of --quiver and --preset",
        )),
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(format: Format, command: &str) -> std::result::Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::bad_input(format!(
            "--format dot is not available for {command}"
        )));
    }
    Ok(())
}

fn tsv_counts(dist: &LengthDistribution) -> String {
    let mut s = String::new();
    for (len, n) in dist.iter() {
        writeln!(s, "{len}\t{n}").unwrap();
    }
    s
}

fn stats_text(a: &Analysis) -> String {
    let t = a.timings;
    format!(
        "catalog: {} entries in {:.3}s\nprec: {} compatible pairs in {:.3}s\n\
         hasse: {} vertices, {} arrows before pruning; {} vertices, {} arrows after; {:.3}s\n\
         count: {:.3}s\n",
        a.catalog.len(),
        t.catalog.as_secs_f64(),
        a.table.compatible_pairs(),
        t.prec.as_secs_f64(),
        a.raw_hasse.vertices,
        a.raw_hasse.arrows,
        a.hasse.vertex_count(),
        a.hasse.edge_count(),
        t.hasse.as_secs_f64(),
        t.count.as_secs_f64(),
    )
}

/// Full length distribution of maximal green sequences.
pub fn run_count(q: &Quiver, format: Format) -> Outcome {
    no_dot(format, "count")?;
    let a = analyze(q)?;
    let stdout = match format {
        Format::Tsv => tsv_counts(&a.distribution),
        _ => json_line(&a.summary()),
    };
    Ok(Report {
        stdout,
        stats: Some(stats_text(&a)),
        code: 0,
    })
}

/// Size of the pruned Hasse quiver, or its Graphviz rendering.
pub fn run_hasse(q: &Quiver, format: Format, emit_dot_to: Option<&Path>) -> Outcome {
    let HasseStage {
        catalog,
        table,
        raw_hasse: raw,
        hasse,
        timings,
        ..
    } = hasse_only(q)?;
    if let Some(path) = emit_dot_to {
        std::fs::write(path, emit_dot(&hasse, &catalog))
            .map_err(|e| Failure::bad_input(format!("cannot write {}: {e}", path.display())))?;
    }
    let size = HasseSize {
        vertices: hasse.vertex_count(),
        arrows: hasse.edge_count(),
    };
    let stdout = match format {
        Format::Json => json_line(&size),
        Format::Tsv => format!("vertices\t{}\narrows\t{}\n", size.vertices, size.arrows),
        Format::Dot => emit_dot(&hasse, &catalog),
    };
    let stats = format!(
        "catalog: {} entries in {:.3}s\nprec: {} compatible pairs in {:.3}s\n\
         hasse: {} vertices, {} arrows before pruning; {:.3}s\n",
        catalog.len(),
        timings.catalog.as_secs_f64(),
        table.compatible_pairs(),
        timings.prec.as_secs_f64(),
        raw.vertices,
        raw.arrows,
        timings.hasse.as_secs_f64(),
    );
    Ok(Report {
        stdout,
        stats: Some(stats),
        code: 0,
    })
}

/// The catalog with its dimension vectors and thresholds.
pub fn run_catalog(q: &Quiver, format: Format) -> Outcome {
    no_dot(format, "catalog")?;
    let cat = Catalog::for_quiver(q)?;
    let stdout = match format {
        Format::Tsv => {
            let mut s = String::new();
            for (k, t) in cat.triples().iter().enumerate() {
                writeln!(s, "{t}\t{}", cat.dim(k)).unwrap();
            }
            s
        }
        _ => json_line(&cat),
    };
    Ok(Report::ok(stdout))
}

/// Decides `X ≺ Y` and names the rule that decided it.
pub fn run_prec(q: &Quiver, x: &str, y: &str, format: Format) -> Outcome {
    no_dot(format, "prec")?;
    let cat = Catalog::for_quiver(q)?;
    let lookup = |text: &str| -> std::result::Result<(ModuleTriple, usize), Failure> {
        let t: ModuleTriple = text.parse()?;
        let idx = cat
            .index_of(&t)
            .ok_or_else(|| Failure::bad_input(Error::IndexOutOfCatalog(t).to_string()))?;
        Ok((t, idx))
    };
    let (tx, ix) = lookup(x)?;
    let (ty, iy) = lookup(y)?;
    let (holds, branch) = compare(&cat, ix, iy)?;
    let branch = format!("{branch:?}");
    let stdout = match format {
        Format::Tsv => format!("{holds}\t{branch}\n"),
        _ => json_line(&json!({
            "x": tx.to_string(),
            "y": ty.to_string(),
            "prec": holds,
            "branch": branch,
        })),
    };
    Ok(Report::ok(stdout))
}

/// Framed-quiver enumeration, capped at `max_len`.
pub fn run_oracle(q: &Quiver, max_len: usize, format: Format) -> Outcome {
    no_dot(format, "oracle")?;
    let dist = enumerate_mgs(q, max_len)?;
    let stdout = match format {
        Format::Tsv => tsv_counts(&dist),
        _ => json_line(&json!({
            "max_len": max_len,
            "counts": dist,
            "total": dist.total().to_string(),
        })),
    };
    Ok(Report::ok(stdout))
}

/// Runs both the Hasse-quiver count and the oracle and compares them length
/// by length. The oracle cap defaults to the longest length found by the
/// count.
pub fn run_oracle_check(q: &Quiver, max_len: Option<usize>, format: Format) -> Outcome {
    no_dot(format, "check")?;
    let a = analyze(q)?;
    let dp = &a.distribution;
    let cap = max_len.unwrap_or_else(|| dp.max_length().unwrap_or(0));
    let oracle = enumerate_mgs(q, cap)?;
    let mut dp_capped = LengthDistribution::new();
    for (len, n) in dp.iter().filter(|&(len, _)| len <= cap) {
        dp_capped.add(len, n.clone());
    }
    let equal = dp_capped == oracle;
    let lengths: std::collections::BTreeSet<usize> = dp_capped
        .iter()
        .chain(oracle.iter())
        .map(|(l, _)| l)
        .collect();
    let diff: Vec<(usize, String, String)> = lengths
        .into_iter()
        .map(|l| (l, dp_capped.get(l).to_string(), oracle.get(l).to_string()))
        .filter(|(_, d, o)| d != o)
        .collect();
    let stdout = match format {
        Format::Tsv => {
            let mut s = String::new();
            for (l, d, o) in &diff {
                writeln!(s, "{l}\t{d}\t{o}").unwrap();
            }
            writeln!(s, "equal\t{equal}").unwrap();
            s
        }
        _ => {
            let diff: serde_json::Map<String, Value> = diff
                .iter()
                .map(|(l, d, o)| (l.to_string(), json!({"dp": d, "oracle": o})))
                .collect();
            json_line(&json!({
                "type": a.class.to_string(),
                "max_len": cap,
                "equal": equal,
                "total": dp_capped.total().to_string(),
                "diff": diff,
            }))
        }
    };
    Ok(Report {
        stdout,
        stats: Some(stats_text(&a)),
        code: if equal { 0 } else { EXIT_MISMATCH },
    })
}

#[derive(Serialize)]
struct OrientationRow {
    mask: u32,
    arrows: Vec<(usize, usize)>,
    min_length: usize,
    max_length: usize,
    total: String,
}

/// Every acyclic orientation of the underlying graph of `q`, in mask order,
/// and whether they all have the same longest length.
pub fn run_all_orientations(q: &Quiver, format: Format) -> Outcome {
    no_dot(format, "orientations")?;
    let orientations = q.orientations()?;
    let rows: Vec<std::result::Result<OrientationRow, Failure>> = orientations
        .par_iter()
        .map(|(mask, o)| {
            let s = analyze(o)?.summary();
            Ok(OrientationRow {
                mask: *mask,
                arrows: o.arrows().to_vec(),
                min_length: s.min_length,
                max_length: s.max_length,
                total: s.total,
            })
        })
        .collect();
    let rows = rows
        .into_iter()
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let lengths: std::collections::BTreeSet<usize> = rows.iter().map(|r| r.max_length).collect();
    let constant = lengths.len() <= 1;
    let stdout = match format {
        Format::Tsv => {
            let mut s = String::new();
            for r in &rows {
                writeln!(s, "{}\t{}\t{}", r.mask, r.max_length, r.total).unwrap();
            }
            s
        }
        _ => json_line(&json!({
            "orientations": rows,
            "max_lengths": lengths,
            "constant": constant,
        })),
    };
    Ok(Report {
        stdout,
        stats: None,
        code: if constant { 0 } else { EXIT_MISMATCH },
    })
}
