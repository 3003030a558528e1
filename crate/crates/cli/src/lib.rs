//! JSON front end for `latpoly-core`.
//!
//! [`Cli`] is the argument grammar, [`run`] executes one command and returns
//! a [`Report`], and [`CliError::exit_code`] maps failures to process exit
//! codes: 2 for invalid input, 3 when a numeric cross-check disagrees.

pub mod document;
pub mod report;

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use latpoly_core::formulas::{brion_sample_points, laurent_vertex_sums};
use latpoly_core::oracle::shoelace_area;
use latpoly_core::{
    char_series, choose_generic_zeta, count_lattice_points, decompose_chi, ehrhart,
    enumerate_points, evaluate_brion, generic_directions, orientation_from_functional, pick_check,
    volume, EhrhartMode, Error, GenericDirection, IntVector, Rat, RatVector, SimplePolytope,
    Window,
};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use report::{int, int_vector, rat, rat_vector, Report};

#[derive(Debug, Parser)]
#[command(
    name = "latpoly",
    version,
    about = "Lattice points, volumes and Ehrhart polynomials of simple lattice polytopes"
)]
pub struct Cli {
    /// Add wall-clock timing to the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of lattice points from the vertex constant terms.
    Count {
        file: PathBuf,
        /// Generic direction, e.g. `1,10` or `1/2,3`; chosen automatically if omitted.
        #[arg(long, allow_hyphen_values = true)]
        zeta: Option<String>,
    },
    /// Lattice-normalized volume from the vertex leading terms.
    Volume {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        zeta: Option<String>,
    },
    /// Counts of the dilates k = 1..=kmax and the interpolated Ehrhart polynomial.
    Ehrhart {
        file: PathBuf,
        #[arg(long)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = Mode::Formula)]
        mode: Mode,
    },
    /// Both sides of Brion's identity at a rational point.
    Evaluate {
        file: PathBuf,
        /// Comma-separated nonzero rationals t1,...,tn.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Signed vertex-cone decomposition of the characteristic series on a window.
    Decompose {
        file: PathBuf,
        /// `lo..hi` for every axis, or one `lo..hi` per axis separated by commas.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Direction defining the orientation; chosen automatically if omitted.
        #[arg(long, allow_hyphen_values = true)]
        zeta: Option<String>,
    },
    /// Brute-force enumeration (and Pick's formula in the plane).
    Oracle { file: PathBuf },
    /// Run every formula against the oracle; exit 3 on any disagreement.
    Verify { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Formula,
    Oracle,
}

impl From<Mode> for EhrhartMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Formula => EhrhartMode::Formula,
            Mode::Oracle => EhrhartMode::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    CrossCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Validation,
            message: message.into(),
        }
    }

    pub fn cross_check(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::CrossCheck,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Validation => 2,
            ErrorKind::CrossCheck => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::RouteMismatch { .. }
            | Error::NonIntegralCount(_)
            | Error::NotPolynomial { .. }
            | Error::VolumeMismatch { .. } => CliError::cross_check(e.to_string()),
            _ => CliError::validation(e.to_string()),
        }
    }
}

/// Parses `a,b,c` where each entry is an integer or `p/q`.
pub fn parse_rationals(text: &str, dim: usize, what: &str) -> Result<RatVector, CliError> {
    let coords = text
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<Rat>()
                .map_err(|_| CliError::validation(format!("{what}: `{c}` is not a rational")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != dim {
        return Err(CliError::validation(format!(
            "{what}: expected {dim} coordinates, found {}",
            coords.len()
        )));
    }
    Ok(RatVector(coords))
}

/// Parses `lo..hi` (all axes) or `lo..hi,lo..hi,...` (one per axis).
pub fn parse_window(text: &str, dim: usize) -> Result<Window, CliError> {
    let ranges = text
        .split(',')
        .map(|r| {
            let (lo, hi) = r
                .trim()
                .split_once("..")
                .ok_or_else(|| CliError::validation(format!("window: `{r}` is not lo..hi")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| CliError::validation(format!("window: `{s}` is not an integer")))
            };
            Ok((parse(lo)?, parse(hi)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let ranges = match ranges.len() {
        1 => vec![ranges[0].clone(); dim],
        n if n == dim => ranges,
        n => {
            return Err(CliError::validation(format!(
                "window: expected 1 or {dim} ranges, found {n}"
            )))
        }
    };
    let (lower, upper): (Vec<_>, Vec<_>) = ranges.into_iter().unzip();
    Ok(Window::new(IntVector(lower), IntVector(upper))?)
}

fn direction(p: &SimplePolytope, zeta: Option<&str>) -> Result<GenericDirection, CliError> {
    match zeta {
        None => Ok(choose_generic_zeta(p)),
        Some(text) => Ok(GenericDirection::certify(
            p,
            parse_rationals(text, p.dim(), "zeta")?,
        )?),
    }
}

fn sign_str(s: latpoly_core::Sign) -> &'static str {
    match s {
        latpoly_core::Sign::Plus => "+",
        latpoly_core::Sign::Minus => "-",
    }
}

/// Runs one command. A report whose cross-check disagreed comes back with
/// `consistent == false` rather than as an error.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let (name, file, mut args) = match &cli.command {
        Command::Count { file, zeta } | Command::Volume { file, zeta } => {
            let name = if matches!(cli.command, Command::Count { .. }) {
                "count"
            } else {
                "volume"
            };
            (name, file, json!({ "zeta": zeta }))
        }
        Command::Ehrhart { file, kmax, mode } => (
            "ehrhart",
            file,
            json!({ "kmax": kmax, "mode": format!("{mode:?}").to_lowercase() }),
        ),
        Command::Evaluate { file, point } => ("evaluate", file, json!({ "point": point })),
        Command::Decompose { file, window, zeta } => {
            ("decompose", file, json!({ "window": window, "zeta": zeta }))
        }
        Command::Oracle { file } => ("oracle", file, json!({})),
        Command::Verify { file } => ("verify", file, json!({})),
    };
    if let Value::Object(m) = &mut args {
        m.retain(|_, v| !v.is_null());
    }
    let loaded = document::load(file)?;
    let p = &loaded.polytope;
    let mut consistent = true;
    let result = match &cli.command {
        Command::Count { zeta, .. } => {
            let z = direction(p, zeta.as_deref())?;
            json!({ "count": int(&count_lattice_points(p, &z)?), "zeta": rat_vector(&z.zeta) })
        }
        Command::Volume { zeta, .. } => {
            let z = direction(p, zeta.as_deref())?;
            json!({ "volume": rat(&volume(p, &z)?), "zeta": rat_vector(&z.zeta) })
        }
        Command::Ehrhart { kmax, mode, .. } => {
            let e = ehrhart(p, *kmax, (*mode).into())?;
            let counts: Vec<Value> = e
                .counts
                .iter()
                .map(|(k, c)| json!({ "k": k, "count": int(c) }))
                .collect();
            json!({
                "counts": counts,
                "polynomial": e.polynomial.iter().map(rat).collect::<Vec<_>>(),
                "leading_coefficient": rat(e.leading_coefficient()),
            })
        }
        Command::Evaluate { point, .. } => {
            let t = parse_rationals(point, p.dim(), "point")?;
            let e = evaluate_brion(p, &t)?;
            consistent = e.holds();
            json!({ "point": rat_vector(&t), "lhs": rat(&e.lhs), "rhs": rat(&e.rhs), "equal": consistent })
        }
        Command::Decompose { window, zeta, .. } => {
            let w = parse_window(window, p.dim())?;
            let z = match zeta {
                Some(text) => parse_rationals(text, p.dim(), "zeta")?,
                None => choose_generic_zeta(p).zeta,
            };
            let o = orientation_from_functional(p, &z)?;
            let series = decompose_chi(p, &o, &w)?;
            let terms: Vec<Value> = series
                .terms()
                .map(|(m, c)| json!({ "point": int_vector(m), "coefficient": int(c) }))
                .collect();
            json!({
                "zeta": rat_vector(&z),
                "orientation": o.signs.iter()
                    .map(|v| v.iter().map(|s| sign_str(*s)).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "window": { "lower": int_vector(w.lower()), "upper": int_vector(w.upper()) },
                "terms": terms,
                "coefficient_sum": int(&series.sum_of_coefficients()),
            })
        }
        Command::Oracle { .. } => {
            let r = enumerate_points(p)?;
            let mut out = Map::new();
            out.insert("count".into(), int(&r.count));
            out.insert("boundary_count".into(), int(&r.boundary_count));
            out.insert("interior_count".into(), int(&r.interior_count));
            out.insert(
                "points".into(),
                Value::Array(r.points.iter().map(int_vector).collect()),
            );
            if p.dim() == 2 {
                let pick = pick_check(p)?;
                out.insert("area".into(), rat(&pick.area));
                out.insert("pick_holds".into(), Value::Bool(pick.holds));
            }
            Value::Object(out)
        }
        Command::Verify { .. } => {
            let v = verify(p)?;
            consistent = v["all_equal"] == Value::Bool(true);
            v
        }
    };
    Ok(Report {
        command: json!({ "name": name, "args": args }),
        input_path: loaded.path.clone(),
        input_sha256: loaded.sha256.clone(),
        result,
        consistent,
        elapsed: None,
    })
}

/// Number of Brion evaluation points used by `verify`.
pub const BRION_POINTS: usize = 5;

struct Checks(Vec<Value>, bool);

impl Checks {
    fn record(&mut self, name: &str, outcome: Result<bool, Error>) -> Result<(), CliError> {
        let (passed, detail) = match outcome {
            Ok(b) => (b, None),
            Err(e) if CliError::from(e.clone()).kind == ErrorKind::CrossCheck => {
                (false, Some(e.to_string()))
            }
            Err(e) => return Err(e.into()),
        };
        self.1 &= passed;
        let mut entry = json!({ "name": name, "passed": passed });
        if let Some(d) = detail {
            entry["detail"] = Value::String(d);
        }
        self.0.push(entry);
        Ok(())
    }
}

fn verify(p: &SimplePolytope) -> Result<Value, CliError> {
    let oracle = enumerate_points(p)?;
    let dirs = generic_directions(p, 3);
    let mut checks = Checks(Vec::new(), true);

    let mut formula_counts = Vec::new();
    for z in &dirs {
        match count_lattice_points(p, z) {
            Ok(c) => formula_counts.push(c),
            Err(e) => checks.record("count", Err(e))?,
        }
    }
    let formula_count = formula_counts.first().cloned();
    checks.record(
        "count under 3 generic directions",
        Ok(formula_counts.len() == dirs.len() && formula_counts.iter().all(|c| *c == oracle.count)),
    )?;

    let points = brion_sample_points(p, BRION_POINTS)?;
    let mut brion = true;
    for t in &points {
        brion &= evaluate_brion(p, t)?.holds();
    }
    checks.record("brion identity", Ok(brion))?;

    let zeta = &dirs[0];
    let vol = volume(p, zeta)?;
    checks.record(
        "volume vs Ehrhart leading coefficient",
        ehrhart(p, p.dim() + 2, EhrhartMode::Oracle).map(|e| *e.leading_coefficient() == vol),
    )?;
    checks.record(
        "Ehrhart counts, formula vs oracle",
        ehrhart(p, p.dim() + 2, EhrhartMode::Formula).and_then(|f| {
            ehrhart(p, p.dim() + 2, EhrhartMode::Oracle).map(|o| f.counts == o.counts)
        }),
    )?;
    checks.record(
        "Laurent vertex sums",
        laurent_vertex_sums(p, zeta).map(|sums| {
            let n = p.dim();
            let moment = oracle
                .points
                .iter()
                .fold(Rat::zero(), |acc, m| acc + m.pair(&zeta.zeta));
            sums[..n].iter().all(Zero::is_zero)
                && sums[n] == Rat::from_integer(oracle.count.clone())
                && sums[n + 1] == moment
        }),
    )?;
    if p.dim() == 2 {
        checks.record(
            "volume vs shoelace area",
            shoelace_area(p).map(|a| a == vol),
        )?;
        checks.record("Pick's formula", pick_check(p).map(|c| c.holds))?;
        let window = Window::around(p, 3);
        checks.record(
            "signed decomposition",
            orientation_from_functional(p, &zeta.zeta)
                .and_then(|o| decompose_chi(p, &o, &window))
                .map(|s| s == char_series(&oracle.points, &window)),
        )?;
    }

    let Checks(list, all_equal) = checks;
    Ok(json!({
        "formula_count": formula_count.as_ref().map(int),
        "oracle_count": int(&oracle.count),
        "brion_points_checked": points.len(),
        "volume": rat(&vol),
        "zeta": rat_vector(&zeta.zeta),
        "all_equal": all_equal,
        "checks": list,
    }))
}
