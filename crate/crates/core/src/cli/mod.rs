//! Command-line surface: subcommands, JSON documents and SVG output.
//!
//! Exit codes: 0 on success, 2 when an input or a claimed partition fails
//! validation, 1 on usage, parse and I/O errors.

pub mod json;
pub mod svg;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructive::prove_sierksma;
use crate::depth::depth_region;
use crate::error::{Error, Result};
use crate::generalized::{case4_center, case4_general};
use crate::geom::{format_rational, parse_rational, PointSet};
use crate::instances::{minimize_count, GenSpec, Seed};
use crate::oracle::{enumerate_all, is_tverberg, Partition};

use json::{parse_instance, parse_partition_list, parse_result, to_json, InstanceDocument, PointText, RegionDocument, ResultDocument};

pub use json::{parse_instance_document, SCHEMA_VERSION};
pub use svg::{render_svg, svg_string};

#[derive(Debug, Parser)]
#[command(name = "tvk", version, about = "Exact Tukey depth regions and Tverberg partitions of planar point sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Random,
    Extremal,
    Case4,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a seeded instance.
    Gen {
        #[arg(long, value_enum, default_value = "random")]
        kind: GenKind,
        #[arg(long)]
        seed: u64,
        /// Number of points (random).
        #[arg(long, default_value_t = 7)]
        n: usize,
        /// Coordinate bound (random).
        #[arg(long, default_value_t = 1000)]
        bound: i64,
        /// Cluster radius as a rational (extremal).
        #[arg(long, default_value = "1/100")]
        radius: String,
        /// Number of parts (case4).
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write `<dir>/<kind>-s<seed>-<params>.json` when `--out` is absent.
        #[arg(long, env = "TVK_FIXTURES")]
        fixtures_dir: Option<PathBuf>,
    },
    /// Compute the depth region C_k.
    Depth {
        instance: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate every Tverberg 3-partition of 7 points.
    Enumerate {
        instance: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build at least four Tverberg partitions constructively.
    Prove {
        instance: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check each listed partition of an instance.
    Verify {
        instance: PathBuf,
        partitions: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sector partitions of 3r-2 points whose C_r is one input point.
    #[command(name = "case4-general")]
    Case4General {
        instance: PathBuf,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Local search for a 7-point set with few Tverberg partitions.
    Minimize {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        iterations: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw an instance and a result document as SVG.
    Plot {
        instance: PathBuf,
        result: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Serialize)]
struct VerifyEntry {
    parts: Vec<Vec<usize>>,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<PointText>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shape: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    schema_version: u32,
    all_valid: bool,
    results: Vec<VerifyEntry>,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Io(_) | Error::Precondition(_) => 1,
        _ => 2,
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read(path)?)
    }
}

fn load_instance(path: &Path) -> Result<PointSet> {
    parse_instance(&read_input(path)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn gen_spec(kind: GenKind, n: usize, bound: i64, radius: &str, r: usize) -> Result<GenSpec> {
    Ok(match kind {
        GenKind::Random => GenSpec::Random { n, bound },
        GenKind::Extremal => {
            let radius = parse_rational(radius)
                .ok_or_else(|| Error::Parse { at: "--radius".into(), msg: format!("bad rational {radius:?}") })?;
            GenSpec::ExtremalClusters { radius }
        }
        GenKind::Case4 => GenSpec::Case4 { r },
    })
}

pub fn gen_metadata(spec: &GenSpec, seed: u64) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("kind".to_string(), spec.kind().to_string());
    m.insert("seed".to_string(), seed.to_string());
    match spec {
        GenSpec::Random { n, bound } => {
            m.insert("n".into(), n.to_string());
            m.insert("bound".into(), bound.to_string());
        }
        GenSpec::ExtremalClusters { radius } => {
            m.insert("radius".into(), format_rational(radius));
        }
        GenSpec::Case4 { r } => {
            m.insert("r".into(), r.to_string());
        }
    }
    m
}

fn verify(ps: &PointSet, lists: Vec<Vec<Vec<usize>>>) -> VerifyReport {
    let results: Vec<VerifyEntry> = lists
        .into_iter()
        .map(|parts| match Partition::covering(parts.clone(), ps.len()) {
            Err(e) => VerifyEntry { parts, valid: false, witness: None, shape: None, error: Some(e.to_string()) },
            Ok(p) => {
                let w = is_tverberg(ps, &p);
                VerifyEntry {
                    parts: p.parts().to_vec(),
                    valid: w.is_some(),
                    witness: w.as_ref().map(|w| json::point_text(&w.point)),
                    shape: Some(p.shape().name().to_string()),
                    error: None,
                }
            }
        })
        .collect();
    VerifyReport { schema_version: SCHEMA_VERSION, all_valid: results.iter().all(|r| r.valid), results }
}

/// Runs one parsed command. `Ok(false)` means a partition failed `verify`.
pub fn execute(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Gen { kind, seed, n, bound, radius, r, out, fixtures_dir } => {
            let spec = gen_spec(kind, n, bound, &radius, r)?;
            let ps = spec.generate(Seed(seed))?;
            let doc = InstanceDocument::new(&ps, gen_metadata(&spec, seed));
            let target = match (out, fixtures_dir) {
                (Some(p), _) => Some(p),
                (None, Some(dir)) => {
                    std::fs::create_dir_all(&dir)?;
                    Some(dir.join(format!("{}.json", spec.file_stem(Seed(seed)))))
                }
                (None, None) => None,
            };
            emit(target.as_deref(), &to_json(&doc))?;
        }
        Command::Depth { instance, k, out } => {
            let ps = load_instance(&instance)?;
            let dr = depth_region(&ps, k)?;
            emit(out.as_deref(), &to_json(&RegionDocument::from(&dr)))?;
        }
        Command::Enumerate { instance, out } => {
            let ps = load_instance(&instance)?;
            let results = enumerate_all(&ps)?;
            emit(out.as_deref(), &to_json(&ResultDocument::from_enumeration(&ps, &results)))?;
        }
        Command::Prove { instance, out } => {
            let ps = load_instance(&instance)?;
            let trace = prove_sierksma(&ps)?;
            emit(out.as_deref(), &to_json(&ResultDocument::from_trace(&ps, &trace)))?;
        }
        Command::Verify { instance, partitions, out } => {
            let ps = load_instance(&instance)?;
            let lists = parse_partition_list(&read_input(&partitions)?)?;
            let report = verify(&ps, lists);
            emit(out.as_deref(), &to_json(&report))?;
            return Ok(report.all_valid);
        }
        Command::Case4General { instance, r, out } => {
            let ps = load_instance(&instance)?;
            let parts = case4_general(&ps, r)?;
            let x = case4_center(&ps, r)?;
            emit(out.as_deref(), &to_json(&ResultDocument::from_general(&ps, r, &parts, x)))?;
        }
        Command::Minimize { seed, iterations, out } => {
            let (ps, count) = minimize_count(Seed(seed), iterations)?;
            let mut meta = BTreeMap::new();
            meta.insert("kind".to_string(), "minimize".to_string());
            meta.insert("seed".to_string(), seed.to_string());
            meta.insert("iterations".to_string(), iterations.to_string());
            meta.insert("count".to_string(), count.to_string());
            emit(out.as_deref(), &to_json(&InstanceDocument::new(&ps, meta)))?;
        }
        Command::Plot { instance, result, out } => {
            let ps = load_instance(&instance)?;
            let doc = parse_result(&read_input(&result)?)?;
            if doc.instance.point_set()? != ps {
                return Err(Error::Precondition("result document belongs to a different instance".into()));
            }
            emit(out.as_deref(), &svg_string(&ps, &doc)?)?;
        }
    }
    Ok(true)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(true) => 0,
        Ok(false) => 2,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
