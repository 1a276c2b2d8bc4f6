//! Batch command-line front end with machine-readable output.
//!
//! Every subcommand reads its inputs (files or inline arguments), runs one
//! library operation, and prints one document: human-readable text by
//! default, or a single JSON document with `--output structured`. Identical
//! invocations (including `--seed`) produce byte-identical structured
//! output. Exit codes: 0 success, 1 domain error, 2 usage error.

use crate::error::Error;
use crate::io::{self, BodiesDoc, PointsDoc, VirtualsDoc};
use crate::laurent::LaurentPolynomial;
use crate::lattice::{DependenceWitness, PointSet, Polytope};
use crate::{bkk, mixed};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "mixvol",
    version,
    about = "Exact lattice-polytope geometry: mixed volumes, classical inequalities, BKK counts"
)]
pub struct Cli {
    /// Output style: human text or one JSON document.
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub output: OutputMode,

    /// Decimal digits for root-bearing checks (at least 20).
    #[arg(long, global = true, default_value_t = 60)]
    pub precision: u32,

    /// Seed for the resultant oracle's generic coefficient draws.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Evaluate the subset volumes of one mixed volume concurrently
    /// (outputs are identical either way).
    #[arg(long, global = true)]
    pub parallel: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convex hull of the points in FILE.
    Hull { file: PathBuf },
    /// Minkowski sum of the bodies in FILE (two or more).
    Minkowski { file: PathBuf },
    /// Dilate the polytope in FILE by a nonnegative rational factor.
    Dilate {
        file: PathBuf,
        #[arg(long)]
        factor: String,
    },
    /// Exact volume of the polytope in FILE.
    Volume { file: PathBuf },
    /// All lattice points inside the polytope in FILE.
    LatticePoints { file: PathBuf },
    /// Saturation hull(A) ∩ Z^n of the point set in FILE.
    Completion { file: PathBuf },
    /// Mixed volume of the n bodies in FILE.
    MixedVolume { file: PathBuf },
    /// Mixed volume of the n virtual (formal difference) bodies in FILE.
    VirtualMv { file: PathBuf },
    /// Alexandrov-Fenchel check on the n bodies in FILE.
    CheckAf { file: PathBuf },
    /// Power corollary of Alexandrov-Fenchel with exponent M.
    CheckAfPower {
        file: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Brunn-Minkowski check: first two bodies in FILE repeated M times.
    CheckBm {
        file: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Isoperimetric inequality for the planar body in FILE.
    Isoperimetric { file: PathBuf },
    /// Minkowski vanishing criterion for the bodies in FILE.
    Criterion { file: PathBuf },
    /// Newton polytope of an inline Laurent polynomial.
    Newton {
        /// Comma-separated variable names, e.g. `x,y`.
        #[arg(long)]
        vars: String,
        poly: String,
    },
    /// Koushnirenko count n! V(hull(A)) for the support in FILE.
    Kushnirenko { file: PathBuf },
    /// BKK count n! MV(...) for the supports in FILE.
    Bkk { file: PathBuf },
    /// Newton-Okounkov inclusion-exclusion index for the supports in FILE.
    NoBodyIndex { file: PathBuf },
    /// Criterion for generic members to have empty common zero set.
    EmptyIntersection { file: PathBuf },
    /// Resultant-based count for a generic 2-variable system.
    #[command(name = "oracle-2d")]
    Oracle2d {
        /// Comma-separated variable names, e.g. `x,y`.
        #[arg(long)]
        vars: String,
        f1: String,
        f2: String,
    },
}

pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn load<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Failure::Domain(Error::BadInput {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    })?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::Domain(Error::BadInput {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    })
}

fn structured<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("serializable document");
    s.push('\n');
    s
}

fn human_points(label: &str, doc: &PointsDoc) -> String {
    let mut out = format!("{label} in dim {} ({} points):\n", doc.dim, doc.points.len());
    for p in &doc.points {
        out.push_str(&format!("  ({})\n", p.join(", ")));
    }
    out
}

fn human_witness(w: &DependenceWitness) -> String {
    if w.dependent {
        let ids: Vec<String> = w.subset.iter().map(|i| i.to_string()).collect();
        format!("dependent: J = {{{}}} (0-based indices)\n", ids.join(", "))
    } else {
        "independent\n".to_string()
    }
}

fn emit_points(mode: OutputMode, label: &str, doc: PointsDoc) -> String {
    match mode {
        OutputMode::Structured => structured(&doc),
        OutputMode::Human => human_points(label, &doc),
    }
}

fn emit_value(mode: OutputMode, label: &str, doc: io::ValueDoc) -> String {
    match mode {
        OutputMode::Structured => structured(&doc),
        OutputMode::Human => format!("{label} = {}\n", doc.value),
    }
}

fn emit_report(mode: OutputMode, name: &str, r: &mixed::InequalityReport) -> String {
    let doc = io::report_to_doc(r);
    match mode {
        OutputMode::Structured => structured(&doc),
        OutputMode::Human => format!(
            "{name}: lhs = {}\n{pad}rhs = {}\nholds = {} ({}), margin = {}\n",
            doc.lhs,
            doc.rhs,
            doc.holds,
            if doc.exact {
                "exact comparison"
            } else {
                "directed decimal comparison"
            },
            doc.margin,
            pad = " ".repeat(name.len() + 2),
        ),
    }
}

fn emit_witness(mode: OutputMode, w: &DependenceWitness) -> String {
    match mode {
        OutputMode::Structured => structured(&io::witness_to_doc(w)),
        OutputMode::Human => human_witness(w),
    }
}

fn emit_count(mode: OutputMode, c: &bkk::RootCount) -> String {
    match mode {
        OutputMode::Structured => structured(&io::count_to_doc(c)),
        OutputMode::Human => format!("count = {} (method: {})\n", c.value, c.method.name()),
    }
}

fn split_vars(vars: &str) -> Vec<String> {
    vars.split(',').map(|s| s.trim().to_string()).collect()
}

fn load_polytope(path: &Path) -> Result<Polytope, Failure> {
    let doc: PointsDoc = load(path)?;
    Ok(io::polytope_from_doc(&doc)?)
}

fn load_bodies(path: &Path) -> Result<Vec<Polytope>, Failure> {
    let doc: BodiesDoc = load(path)?;
    Ok(io::bodies_from_doc(&doc)?)
}

fn load_supports(path: &Path) -> Result<Vec<PointSet>, Failure> {
    let doc: BodiesDoc = load(path)?;
    Ok(io::supports_from_doc(&doc)?)
}

/// Run one invocation and return its output text.
pub fn run(cli: &Cli) -> Result<String, Failure> {
    if cli.precision < 20 {
        return Err(Failure::Usage(format!(
            "--precision must be at least 20, got {}",
            cli.precision
        )));
    }
    let mode = cli.output;
    match &cli.command {
        Command::Hull { file } => {
            let p = load_polytope(file)?;
            Ok(emit_points(mode, "polytope", io::polytope_to_doc(&p)))
        }
        Command::Minkowski { file } => {
            let bodies = load_bodies(file)?;
            if bodies.len() < 2 {
                return Err(Failure::Domain(Error::BadInput {
                    path: file.display().to_string(),
                    message: "minkowski needs at least two bodies".into(),
                }));
            }
            let mut acc = bodies[0].clone();
            for b in &bodies[1..] {
                acc = acc.minkowski_sum(b)?;
            }
            Ok(emit_points(mode, "polytope", io::polytope_to_doc(&acc)))
        }
        Command::Dilate { file, factor } => {
            let p = load_polytope(file)?;
            let k = io::parse_rational(factor)?;
            Ok(emit_points(
                mode,
                "polytope",
                io::polytope_to_doc(&p.dilate(&k)?),
            ))
        }
        Command::Volume { file } => {
            let p = load_polytope(file)?;
            Ok(emit_value(
                mode,
                "volume",
                io::rational_to_value_doc(p.volume()),
            ))
        }
        Command::LatticePoints { file } => {
            let p = load_polytope(file)?;
            let pts = p.lattice_points()?;
            Ok(emit_points(mode, "lattice points", io::pointset_to_doc(&pts)))
        }
        Command::Completion { file } => {
            let doc: PointsDoc = load(file)?;
            let a = io::pointset_from_doc(&doc)?;
            Ok(emit_points(mode, "completion", io::pointset_to_doc(&a.completion())))
        }
        Command::MixedVolume { file } => {
            let bodies = load_bodies(file)?;
            let mv = mixed::mixed_volume_with(&bodies, cli.parallel)?;
            Ok(emit_value(mode, "mixed volume", io::rational_to_value_doc(&mv)))
        }
        Command::VirtualMv { file } => {
            let doc: VirtualsDoc = load(file)?;
            let vs = io::virtuals_from_doc(&doc)?;
            let mv = mixed::virtual_mixed_volume(&vs)?;
            Ok(emit_value(mode, "virtual mixed volume", io::rational_to_value_doc(&mv)))
        }
        Command::CheckAf { file } => {
            let bodies = load_bodies(file)?;
            Ok(emit_report(mode, "alexandrov-fenchel", &mixed::check_af(&bodies)?))
        }
        Command::CheckAfPower { file, m } => {
            let bodies = load_bodies(file)?;
            Ok(emit_report(
                mode,
                "alexandrov-fenchel power",
                &mixed::check_af_power(*m, &bodies)?,
            ))
        }
        Command::CheckBm { file, m } => {
            let bodies = load_bodies(file)?;
            if bodies.len() < 2 {
                return Err(Failure::Domain(Error::BadInput {
                    path: file.display().to_string(),
                    message: "check-bm needs at least two bodies".into(),
                }));
            }
            let report = mixed::check_bm(*m, &bodies[0], &bodies[1], &bodies[2..], cli.precision)?;
            Ok(emit_report(mode, "brunn-minkowski", &report))
        }
        Command::Isoperimetric { file } => {
            let p = load_polytope(file)?;
            Ok(emit_report(
                mode,
                "isoperimetric",
                &mixed::isoperimetric_check(&p, cli.precision)?,
            ))
        }
        Command::Criterion { file } => {
            let bodies = load_bodies(file)?;
            Ok(emit_witness(mode, &mixed::minkowski_zero_criterion(&bodies)?))
        }
        Command::Newton { vars, poly } => {
            let names = split_vars(vars);
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let f = LaurentPolynomial::parse(poly, &refs)?;
            Ok(emit_points(
                mode,
                "newton polytope",
                io::polytope_to_doc(&f.newton_polytope()),
            ))
        }
        Command::Kushnirenko { file } => {
            let doc: PointsDoc = load(file)?;
            let a = io::pointset_from_doc(&doc)?;
            Ok(emit_count(mode, &bkk::kushnirenko_count(&a)))
        }
        Command::Bkk { file } => {
            let supports = load_supports(file)?;
            Ok(emit_count(mode, &bkk::bkk_count(&supports)?))
        }
        Command::NoBodyIndex { file } => {
            let supports = load_supports(file)?;
            Ok(emit_count(mode, &bkk::no_body_index(&supports)?))
        }
        Command::EmptyIntersection { file } => {
            let supports = load_supports(file)?;
            Ok(emit_witness(mode, &bkk::generic_empty_intersection(&supports)?))
        }
        Command::Oracle2d { vars, f1, f2 } => {
            let names = split_vars(vars);
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let p1 = LaurentPolynomial::parse(f1, &refs)?;
            let p2 = LaurentPolynomial::parse(f2, &refs)?;
            Ok(emit_count(mode, &bkk::oracle_count_2d(&p1, &p2, cli.seed)?))
        }
    }
}

/// Entry point used by the binary; prints and maps to the exit code.
pub fn main_entry(cli: Cli) -> i32 {
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
    }
}
