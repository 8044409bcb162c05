//! The `cicodes` command line.
//!
//! Exit codes: 0 success, 1 validation failure, 2 parse or I/O error,
//! 3 distance search over the cap.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::cbtheory::{bound_report, is_cb_scheme, verify_cb_all, verify_symmetry, CISetup};
use crate::cohom::CohomologyProfile;
use crate::error::Error;
use crate::evalcode::{build_code, DEFAULT_CAP};
use crate::families::{self, FamilyKind};
use crate::projgeom::{validate_ci, variety_points, PointSet};
use crate::variety::VarietyFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cicodes", version, about = "Evaluation codes on complete intersections over finite fields")]
pub struct Cli {
    /// Worker threads for distance and subset searches (output does not depend on it)
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the rational points cut out by a variety file
    Points {
        file: PathBuf,
        /// Fail unless the file defines a split smooth complete intersection
        #[arg(long)]
        require_ci: bool,
    },
    /// Exact parameters of C(Γ)_a next to the distance bound
    Analyze {
        file: PathBuf,
        #[arg(long)]
        degree: i64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        #[arg(long)]
        emit_matrix: bool,
        /// Allow degrees outside 1..=s
        #[arg(long)]
        no_range_check: bool,
    },
    /// Check the Cayley-Bacharach identity over subset splits
    Cb {
        file: PathBuf,
        /// Inclusive degree range `a1..a2`, or a single degree; defaults to 0..s
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hilbert function, h0/h1 table, sigma, symmetry and CB-scheme checks
    Hilbert { file: PathBuf },
    /// Write the variety file of a named family
    Family {
        kind: FamilyKind,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Self { code, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::VarietyFile { .. } | Error::Syntax { .. } | Error::UnknownVariable(_) => EXIT_PARSE,
            _ => EXIT_VALIDATION,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_PARSE, e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &mut buf)),
            Err(e) => Err(Failure::new(EXIT_VALIDATION, e.to_string())),
        },
        None => dispatch(&cli.command, &mut buf),
    };
    if let Err(e) = out.write_all(&buf) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_PARSE;
    }
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Points { file, require_ci } => cmd_points(file, *require_ci, out),
        Command::Analyze { file, degree, cap, emit_matrix, no_range_check } => {
            cmd_analyze(file, *degree, *cap, *emit_matrix, *no_range_check, out)
        }
        Command::Cb { file, degrees, budget, seed } => cmd_cb(file, degrees.as_deref(), *budget, *seed, out),
        Command::Hilbert { file } => cmd_hilbert(file, out),
        Command::Family { kind, q, m, out: path } => cmd_family(*kind, *q, *m, path.as_ref(), out),
    }
}

fn load(path: &PathBuf) -> std::result::Result<VarietyFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    VarietyFile::parse(&text).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))
}

fn load_setup(path: &PathBuf) -> std::result::Result<CISetup, Failure> {
    let vf = load(path)?;
    let gamma = variety_points(&vf.polys, vf.m, &vf.field)?;
    let validation = validate_ci(&vf.polys, &gamma)?;
    if !validation.is_valid() {
        return Err(Failure::new(EXIT_VALIDATION, format!("not a split smooth complete intersection: {validation}")));
    }
    Ok(CISetup::from_validated(vf.polys, gamma, validation)?)
}

fn cmd_points(path: &PathBuf, require_ci: bool, out: &mut dyn Write) -> Outcome {
    let vf = load(path)?;
    let gamma = variety_points(&vf.polys, vf.m, &vf.field)?;
    writeln!(out, "points={}", gamma.len())?;
    for p in gamma.points() {
        writeln!(out, "{p}")?;
    }
    match validate_ci(&vf.polys, &gamma) {
        Ok(v) => {
            writeln!(out, "{v}")?;
            if require_ci && !v.is_valid() {
                return Ok(EXIT_VALIDATION);
            }
        }
        Err(Error::WrongCount { expected, got }) => {
            writeln!(out, "validation=skipped polys={got} m={expected}")?;
            if require_ci {
                return Ok(EXIT_VALIDATION);
            }
        }
        Err(e) => return Err(e.into()),
    }
    Ok(EXIT_OK)
}

fn cmd_analyze(path: &PathBuf, a: i64, cap: u128, emit_matrix: bool, no_range_check: bool, out: &mut dyn Write) -> Outcome {
    let setup = load_setup(path)?;
    if !no_range_check && (a < 1 || a > setup.s) {
        return Err(Error::DegreeOutOfRange { a, lo: 1, hi: setup.s }.into());
    }
    let degrees: Vec<String> = setup.degrees.iter().map(u32::to_string).collect();
    writeln!(out, "s={} a={a} degrees={}", setup.s, degrees.join(","))?;
    let report = bound_report(&setup, a, cap)?;
    writeln!(out, "{report}")?;
    writeln!(out, "d={} exact=true scanned={}", report.d_exact, report.scanned)?;
    if emit_matrix {
        let code = build_code(&setup.gamma, a, None)?;
        writeln!(out, "generator k={} n={}", code.k, code.n)?;
        write!(out, "{}", code.gen)?;
    }
    Ok(if report.bound_holds() { EXIT_OK } else { EXIT_VALIDATION })
}

fn parse_degree_range(spec: &str) -> std::result::Result<(i64, i64), Failure> {
    let bad = || Failure::new(EXIT_PARSE, format!("invalid degree range `{spec}` (expected a1..a2)"));
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let a = spec.trim().parse().map_err(|_| bad())?;
            (a, a)
        }
    };
    if lo < 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn cmd_cb(path: &PathBuf, degrees: Option<&str>, budget: u64, seed: u64, out: &mut dyn Write) -> Outcome {
    let range = degrees.map(parse_degree_range).transpose()?;
    let setup = load_setup(path)?;
    let (lo, hi) = range.unwrap_or((0, setup.s.max(0)));
    writeln!(out, "s={} n={} seed={seed}", setup.s, setup.n())?;
    let mut code = EXIT_OK;
    for a in lo..=hi {
        let report = verify_cb_all(&setup, a, budget, seed);
        writeln!(out, "{report}")?;
        if !report.holds() {
            code = EXIT_VALIDATION;
        }
    }
    Ok(code)
}

fn cmd_hilbert(path: &PathBuf, out: &mut dyn Write) -> Outcome {
    let vf = load(path)?;
    let gamma: PointSet = variety_points(&vf.polys, vf.m, &vf.field)?;
    let profile = CohomologyProfile::compute(&gamma, gamma.len() as i64);
    write!(out, "{profile}")?;
    let setup = validate_ci(&vf.polys, &gamma)
        .ok()
        .filter(|v| v.is_valid())
        .and_then(|v| CISetup::from_validated(vf.polys.clone(), gamma.clone(), v).ok());
    match setup {
        Some(s) => {
            writeln!(out, "s={}", s.s)?;
            writeln!(out, "symmetry={}", if verify_symmetry(&s) { "pass" } else { "fail" })?;
        }
        None => writeln!(out, "symmetry=n/a")?,
    }
    writeln!(out, "cb_scheme={}", is_cb_scheme(&gamma))?;
    Ok(EXIT_OK)
}

fn cmd_family(kind: FamilyKind, q: u32, m: usize, path: Option<&PathBuf>, out: &mut dyn Write) -> Outcome {
    let fam = families::build(kind, q, m)?;
    let degrees: Vec<String> = fam.spec.degrees.iter().map(u32::to_string).collect();
    let summary = format!(
        "kind={} q={} m={} degrees={} points={} s={}",
        fam.spec.kind,
        fam.spec.q_base,
        fam.spec.m,
        degrees.join(","),
        fam.spec.expected_points(),
        fam.spec.s()
    );
    let text = format!("# {summary}\n{}", fam.variety_file());
    match path {
        Some(p) => {
            std::fs::write(p, &text)?;
            writeln!(out, "{}", fam.field)?;
            for part in summary.split(' ') {
                writeln!(out, "{part}")?;
            }
        }
        None => write!(out, "{text}")?,
    }
    Ok(EXIT_OK)
}
