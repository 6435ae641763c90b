use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fibercount::ci::{self, CiSpec};
use fibercount::ledger::{self, BudgetResult, LedgerCase};
use fibercount::polytope::{polytope_from_json, polytope_to_json};
use fibercount::toric::{self, ToricFanoInput};
use fibercount::{pencil, LaurentPolynomial, LatticePolytope, Status, VerificationReport};

const DEFAULT_MAX_AMBIENT: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "fibercount", version, about = "Count components of Landau-Ginzburg fibers at infinity")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Worker threads.
    #[arg(long, env = "LG_JOBS", global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    /// Largest polytope dimension accepted.
    #[arg(long, default_value_t = 10, global = true)]
    dim_cap: usize,

    /// Treat conditionally verified results as failures.
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Newton polytope of a Laurent polynomial file.
    Newton { file: PathBuf },
    /// Polar dual of a polytope file.
    Dual { file: PathBuf },
    /// Lattice points of a polytope file.
    Points {
        file: PathBuf,
        #[arg(long, conflicts_with = "interior")]
        boundary: bool,
        #[arg(long)]
        interior: bool,
    },
    /// Verify one complete intersection, given as "N;d1,d2,...".
    VerifyCi {
        #[arg(long)]
        spec: String,
    },
    /// Verify every complete intersection up to an ambient dimension.
    SweepCi {
        #[arg(long, default_value_t = DEFAULT_MAX_AMBIENT)]
        max_ambient: usize,
        /// Also write the reports as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify a smooth toric Fano variety from its fan polytope, or all built-in fixtures.
    VerifyToric {
        #[arg(required_unless_present = "fixtures")]
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        fixtures: bool,
    },
    /// Component counts for the threefold cases.
    Threefolds {
        #[arg(long)]
        family: Option<String>,
        /// JSON file with cases to use instead of the built-in ones.
        #[arg(long)]
        cases: Option<PathBuf>,
    },
    /// Pencil identity for the sextic double in P(1,1,1,2,2,3,3).
    X66Check,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(format: Format, table: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    match format {
        Format::Table => print!("{}", table()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value()).expect("json")),
    }
}

fn check_dim(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        return Err(fibercount::Error::DimensionCap { dim, cap }.into());
    }
    Ok(())
}

fn load_polytope(path: &Path, cap: usize, require_lattice: bool) -> Result<LatticePolytope> {
    let p = polytope_from_json(&read(path)?, require_lattice)
        .with_context(|| format!("parsing {}", path.display()))?;
    check_dim(p.dim(), cap)?;
    Ok(p)
}

/// A Laurent file holds one polynomial, optionally preceded by a `vars: x, y` line.
/// Lines starting with `#` are ignored.
fn load_laurent(path: &Path) -> Result<LaurentPolynomial> {
    let text = read(path)?;
    let mut vars = None;
    let mut body = String::new();
    for line in text.lines() {
        let t = line.trim();
        if t.starts_with('#') || t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix("vars:") {
            vars = Some(rest.split(',').map(|v| v.trim().to_string()).collect::<Vec<_>>());
        } else {
            body.push_str(t);
            body.push(' ');
        }
    }
    let p = match vars {
        Some(v) => LaurentPolynomial::parse(&body, &v)?,
        None => LaurentPolynomial::parse_infer(&body)?,
    };
    Ok(p)
}

fn point_list(points: &[fibercount::LatticePoint]) -> Value {
    Value::Array(
        points
            .iter()
            .map(|p| match p.to_i64() {
                Some(v) => json!(v),
                None => json!(p.0.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            })
            .collect(),
    )
}

fn worst(statuses: impl IntoIterator<Item = Status>) -> Status {
    statuses.into_iter().max().unwrap_or(Status::Pass)
}

fn report_all(format: Format, reports: &[VerificationReport]) {
    emit(
        format,
        || reports.iter().map(|r| format!("{}\n", r.summary_line())).collect(),
        || Value::Array(reports.iter().map(VerificationReport::to_json).collect()),
    );
}

fn run(cli: Cli) -> Result<Status> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j as usize)
            .build_global()
            .map_err(|e| anyhow!("thread pool: {e}"))?;
    }
    let format = cli.format;
    match cli.command {
        Command::Newton { file } => {
            let p = load_laurent(&file)?;
            check_dim(p.dim(), cli.dim_cap)?;
            let n = p.newton_polytope()?;
            emit(format, || format!("{n}\n"), || polytope_to_json(&n));
            Ok(Status::Pass)
        }
        Command::Dual { file } => {
            let p = load_polytope(&file, cli.dim_cap, false)?;
            let d = p.polar_dual()?;
            emit(format, || format!("{d}\n"), || polytope_to_json(&d));
            Ok(Status::Pass)
        }
        Command::Points {
            file,
            boundary,
            interior,
        } => {
            let p = load_polytope(&file, cli.dim_cap, false)?;
            let pts = if boundary || interior {
                let (inner, outer) = p.split_lattice_points()?;
                if boundary {
                    outer
                } else {
                    inner
                }
            } else {
                p.lattice_points()
            };
            emit(
                format,
                || pts.iter().map(|x| format!("{x}\n")).collect(),
                || point_list(&pts),
            );
            Ok(Status::Pass)
        }
        Command::VerifyCi { spec } => {
            let spec: CiSpec = spec.parse()?;
            if spec.k() == 0 {
                bail!("projective space has no hypersurface blocks; run verify-toric on its fan polytope");
            }
            check_dim(spec.dim(), cli.dim_cap)?;
            let rep = ci::verify_ci(&spec)?;
            emit(format, || rep.to_string(), || rep.to_json());
            Ok(rep.status())
        }
        Command::SweepCi { max_ambient, json } => {
            if max_ambient < 3 {
                bail!("--max-ambient must be at least 3");
            }
            check_dim(max_ambient, cli.dim_cap)?;
            if max_ambient > DEFAULT_MAX_AMBIENT {
                eprintln!("warning: --max-ambient {max_ambient} is above {DEFAULT_MAX_AMBIENT}; this may take a long time");
            }
            let reports = ci::sweep(max_ambient);
            report_all(format, &reports);
            if let Some(path) = json {
                let v = Value::Array(reports.iter().map(VerificationReport::to_json).collect());
                fs::write(&path, serde_json::to_string_pretty(&v)? + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(worst(reports.iter().map(VerificationReport::status)))
        }
        Command::VerifyToric { file, fixtures } => {
            let inputs = if fixtures {
                toric::toric_fixtures()
            } else {
                let path = file.expect("required by clap");
                let p = load_polytope(&path, cli.dim_cap, true)?;
                let name = path.file_stem().map_or("input".into(), |s| s.to_string_lossy().into_owned());
                vec![ToricFanoInput::from_polytope(name, p)?]
            };
            let reports: Vec<VerificationReport> = inputs.iter().map(toric::verify_toric).collect();
            if reports.len() == 1 {
                emit(format, || reports[0].to_string(), || reports[0].to_json());
            } else {
                report_all(format, &reports);
            }
            Ok(worst(reports.iter().map(VerificationReport::status)))
        }
        Command::Threefolds { family, cases } => {
            let mut all: Vec<LedgerCase> = match cases {
                Some(path) => ledger::cases_from_json(&read(&path)?)?,
                None => ledger::builtin_cases(),
            };
            if let Some(f) = family {
                let f = f.trim_start_matches("No.").to_string();
                all.retain(|c| c.family == f);
                if all.is_empty() {
                    bail!("no case for family {f}");
                }
            }
            let reports: Vec<VerificationReport> = all.iter().map(ledger::verify_ledger).collect();
            emit(
                format,
                || threefold_table(&all, &reports),
                || Value::Array(reports.iter().map(VerificationReport::to_json).collect()),
            );
            Ok(worst(reports.iter().map(VerificationReport::status)))
        }
        Command::X66Check => {
            let r = pencil::check()?;
            let v = r.to_verification();
            emit(
                format,
                || {
                    let verdict = |b: bool| if b { "holds" } else { "fails" };
                    format!(
                        "derived Q: {}  identity {}\nprinted Q: {}  identity {}\nfactors {}\nh0 - 1 = {} (target {})\n{}\n",
                        r.derived_factor,
                        verdict(r.derived_matches),
                        r.printed_factor,
                        verdict(r.printed_matches),
                        if r.factors_agree() { "agree" } else { "differ" },
                        r.h0_minus_one,
                        pencil::STATED_COMPONENTS,
                        v.status(),
                    )
                },
                || {
                    let mut j = r.to_json();
                    j["status"] = json!(v.status().as_str());
                    j
                },
            );
            Ok(v.status())
        }
    }
}

fn threefold_table(cases: &[LedgerCase], reports: &[VerificationReport]) -> String {
    let mut out = format!(
        "{:<8} {:<6} {:>6} {:>10} {:>9}  {:<9} {}\n",
        "family", "space", "(-K)^3", "components", "expected", "budget", "status"
    );
    for (c, r) in cases.iter().zip(reports) {
        let budget = match ledger::intersection_budget(c) {
            BudgetResult::Verified(_) => "verified",
            BudgetResult::Skipped(_) => "skipped",
            BudgetResult::Failed { .. } => "failed",
        };
        let ambient = match c.ambient {
            ledger::Ambient::P3 => "P3",
            ledger::Ambient::P1xP2 => "P1xP2",
        };
        let show = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
        out.push_str(&format!(
            "{:<8} {:<6} {:>6} {:>10} {:>9}  {:<9} {}\n",
            c.family,
            ambient,
            c.anticanonical_cube,
            show(r.value("components")),
            show(ledger::expected_components(c.anticanonical_cube).ok()),
            budget,
            r.status()
        ));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let strict = cli.strict;
    match run(cli) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::ConditionallyVerified) if !strict => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
