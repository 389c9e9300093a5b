//! `groth`: compute lattice-model Grothendieck polynomials, dump weight
//! tables and run the verification suites.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error.

use std::io::{IsTerminal, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use groth_lattice::algebra::{Rf, Var, Q};
use groth_lattice::models::{rmatrix_entry_with, Params, RMatrixFamily, WeightModel, WeightTable};
use groth_lattice::partitions::Partition;
use groth_lattice::transfer::{generalized_poly_with, lattice_poly, spec_for, xs, zs, GeneralizedKind};
use groth_lattice::Error;
use groth_lattice_cli::{json, render, verify};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "groth", version, about = "Grothendieck polynomials from solvable lattice models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one polynomial as an exact rational function.
    Compute(ComputeArgs),
    /// Run verification suites; one JSON line per check.
    Verify(VerifyArgs),
    /// Print a vertex-weight table or R-matrix as JSON.
    DumpWeights(DumpArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EncodingArg {
    Row,
    Column,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Direct,
    Dual,
}

#[derive(clap::Args, Debug)]
struct ComputeArgs {
    /// G, g or j; with --generalized also J, s_r, s_c.
    #[arg(long)]
    kind: String,
    /// Comma-separated parts, e.g. "3,1"; the empty string is the empty partition.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long)]
    nvars: usize,
    /// Vertical-line encoding for G and g.
    #[arg(long, value_enum)]
    encoding: Option<EncodingArg>,
    /// Direct or upside-down tiles for G and j.
    #[arg(long, value_enum)]
    route: Option<RouteArg>,
    /// Exact rational value for α (formal when omitted).
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Exact rational value for β (formal when omitted).
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Use the column-parameter family G(x;z), g(x;z), J, j, s_r, s_c.
    #[arg(long)]
    generalized: bool,
    /// Comma-separated exact rationals z_1,z_2,...; formal z_i when omitted.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: verify::Suite,
    /// Truncation bound D for series checks.
    #[arg(short = 'D', long = "bound", default_value_t = 4)]
    bound: u32,
    #[arg(long, default_value_t = 3)]
    sites: usize,
    #[arg(long, default_value_t = 3)]
    occ_max: u32,
    /// Bound on bosonic auxiliary labels in the RLL replays.
    #[arg(long, default_value_t = 3)]
    aux_max: u32,
    /// Bound on physical labels in the RLL replays.
    #[arg(long, default_value_t = 4)]
    phys_max: u32,
    /// Label bound for the eigenvector and unitarity checks.
    #[arg(long, default_value_t = 4)]
    max_label: u32,
    /// Number of x variables in the Cauchy checks.
    #[arg(short = 'm', default_value_t = 2)]
    m: usize,
    /// Number of y variables in the Cauchy checks.
    #[arg(short = 'n', default_value_t = 2)]
    n: usize,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(clap::Args, Debug)]
struct DumpArgs {
    /// A weight model (RowG, RowGDual, RowDualg, ColG, ColDualg, JRow, JRowDual)
    /// or an R-matrix (FiveVertexR, RowDualr, ColGR, ColDualr, JR, MixedR).
    family: String,
    #[arg(long, default_value_t = 3)]
    max_label: u32,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Usage> {
    Err(Usage(msg.into()))
}

fn parse_rational(s: &str) -> Result<Q, Usage> {
    let t = s.trim();
    if t.contains(['.', 'e', 'E']) {
        return usage(format!("{:?} is not an exact rational (use p/q)", s));
    }
    Q::from_str(t).map_err(|_| Usage(format!("{:?} is not an exact rational (use p/q)", s)))
}

fn parse_list<T>(s: &str, item: impl Fn(&str) -> Result<T, Usage>) -> Result<Vec<T>, Usage> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| item(p.trim())).collect()
}

fn parse_partition(s: &str) -> Result<Partition, Usage> {
    let parts = parse_list(s, |p| p.parse::<u32>().map_err(|_| Usage(format!("bad part {:?} in --lambda", p))))?;
    Partition::new(parts).map_err(|_| Usage(format!("{:?} is not a partition (positive, weakly decreasing)", s)))
}

fn param(s: &Option<String>, v: Var) -> Result<Rf, Usage> {
    Ok(match s {
        Some(s) => Rf::constant(parse_rational(s)?),
        None => Rf::var(v),
    })
}

fn params(alpha: &Option<String>, beta: &Option<String>) -> Result<Params, Usage> {
    Ok(Params::new(param(alpha, Var::Alpha)?, param(beta, Var::Beta)?))
}

fn compute(a: &ComputeArgs) -> Result<Rf, Usage> {
    let lambda = parse_partition(&a.lambda)?;
    if a.generalized {
        let Some(kind) = GeneralizedKind::parse(&a.kind) else {
            return usage(format!("unknown generalized kind {:?} (G, g, J, j, s_r, s_c)", a.kind));
        };
        if a.beta.is_some() || a.encoding.is_some() || a.route.is_some() {
            return usage("--beta, --encoding and --route do not apply to --generalized");
        }
        let alpha = param(&a.alpha, Var::Alpha)?;
        let z = match &a.z {
            Some(s) => parse_list(s, parse_rational)?.into_iter().map(Rf::constant).collect(),
            None => zs(lambda.width().max(lambda.len() as u32) as usize),
        };
        return Ok(generalized_poly_with(kind, &lambda, &xs(a.nvars), &z, &alpha)?);
    }
    if a.z.is_some() {
        return usage("--z needs --generalized");
    }
    let route = a.route.unwrap_or(RouteArg::Direct);
    let encoding = a.encoding.unwrap_or(EncodingArg::Row);
    let model = match (a.kind.as_str(), route, encoding) {
        ("G", RouteArg::Direct, EncodingArg::Row) => WeightModel::RowG,
        ("G", RouteArg::Direct, EncodingArg::Column) => WeightModel::ColG,
        ("G", RouteArg::Dual, EncodingArg::Row) => WeightModel::RowGDual,
        ("g", RouteArg::Direct, EncodingArg::Row) => WeightModel::RowDualg,
        ("g", RouteArg::Direct, EncodingArg::Column) => WeightModel::ColDualg,
        ("j", route, _) => {
            if a.encoding.is_some() || a.alpha.is_some() || a.beta.is_some() {
                return usage("j takes no --encoding, --alpha or --beta");
            }
            if route == RouteArg::Direct {
                WeightModel::JRow
            } else {
                WeightModel::JRowDual
            }
        }
        ("G" | "g", _, _) => return usage(format!("no {:?} route for {} with {:?} encoding", route, a.kind, encoding)),
        ("J" | "s_r" | "s_c", _, _) => return usage(format!("kind {} needs --generalized", a.kind)),
        _ => return usage(format!("unknown kind {:?} (G, g, j)", a.kind)),
    };
    let p = params(&a.alpha, &a.beta)?;
    Ok(lattice_poly(&spec_for(model, &lambda, p), &lambda, &xs(a.nvars))?)
}

#[derive(Serialize)]
struct WeightEntry {
    labels: [u32; 4],
    weight: json::RfJson,
}

#[derive(Serialize)]
struct WeightDump<'a> {
    family: &'a str,
    max_label: u32,
    entries: Vec<WeightEntry>,
}

type LabelFn = dyn FnMut(u32, u32, u32, u32) -> groth_lattice::Result<Rf>;

/// All conserving label tuples `(a, b, c, d)` with `a, b, c, d ≤ max_label`,
/// lexicographic; tuples outside a fermionic line's range are left out.
fn dump_weights(a: &DumpArgs) -> Result<String, Usage> {
    let p = params(&a.alpha, &a.beta)?;
    let x = Rf::var(Var::X(1));
    let y = Rf::var(Var::Y(1));
    let k = a.max_label;
    let mut entries = Vec::new();
    let (name, mut get): (&str, Box<LabelFn>) = if let Some(m) = WeightModel::parse(&a.family) {
        let mut t = WeightTable::new(m, x, p);
        (m.name(), Box::new(move |a, b, c, d| t.get(a, b, c, d)))
    } else if let Some(f) = RMatrixFamily::parse(&a.family) {
        (f.name(), Box::new(move |a, b, c, d| rmatrix_entry_with(f, a, b, c, d, &x, &y, &p)))
    } else {
        return usage(format!("unknown family {:?}", a.family));
    };
    for la in 0..=k {
        for lb in 0..=k {
            for lc in 0..=k {
                let Some(ld) = (la + lb).checked_sub(lc) else { continue };
                if ld > k {
                    continue;
                }
                match get(la, lb, lc, ld) {
                    Ok(w) => entries.push(WeightEntry { labels: [la, lb, lc, ld], weight: json::rf_to_json(&w) }),
                    Err(Error::LabelOutOfRange { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    let dump = WeightDump { family: name, max_label: k, entries };
    Ok(serde_json::to_string_pretty(&dump).expect("weights serialize"))
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stderr().is_terminal()
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let io = |e: std::io::Error| {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            // reader went away (e.g. `| head`); nothing left to report
            std::process::exit(0);
        }
        Usage(format!("write failed: {}", e))
    };
    match cli.command {
        Command::Compute(a) => {
            let f = compute(&a)?;
            let text = match a.format {
                Format::Plain => f.render(),
                Format::Json => serde_json::to_string(&json::rf_to_json(&f)).expect("rf serializes"),
                Format::Latex => render::latex_rf(&f),
            };
            writeln!(out, "{}", text).map_err(io)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::DumpWeights(a) => {
            writeln!(out, "{}", dump_weights(&a)?).map_err(io)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(a) => {
            let bounds = verify::Bounds {
                bound: a.bound,
                sites: a.sites,
                occ_max: a.occ_max,
                aux_max: a.aux_max,
                phys_max: a.phys_max,
                max_label: a.max_label,
                m: a.m,
                n: a.n,
            };
            let workers = a.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let (passed, failed) = verify::run(a.suite, &bounds, workers, &mut out).map_err(io)?;
            let summary = format!("{} passed, {} failed", passed, failed);
            let summary = match (color_enabled(), failed) {
                (false, _) => summary,
                (true, 0) => format!("\x1b[32m{}\x1b[0m", summary),
                (true, _) => format!("\x1b[31m{}\x1b[0m", summary),
            };
            eprintln!("{}", summary);
            Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("groth: error: {}", msg);
            ExitCode::from(2)
        }
    }
}
