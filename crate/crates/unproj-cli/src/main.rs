//! Command line for the unproj library: end-to-end example reproductions,
//! single-operation tools over input files, and seed-database queries.
//!
//! Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error,
//! 3 input or I/O error.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use unproj::hilbert;
use unproj::ideal::Ideal;
use unproj::io::{parse_input, InputFile};
use unproj::k3db;
use unproj::order::MonomialOrder;
use unproj::pfaffian::SkewPfaffianMatrix;
use unproj::pipeline::{self, Fault};
use unproj::poly::Poly;
use unproj::resolve;

#[derive(Parser)]
#[command(name = "unproj", version, about = "weighted graded rings: Gröbner bases, resolutions, Pfaffians, Hilbert series, unprojection checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Args)]
struct OutOpts {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run a full worked example and report every check.
    Repro {
        /// Which example: `main` or `determinantal`.
        which: String,
        /// Seed for the determinantal example.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Inject a fault to prove the checks can fail (`s2sign`, `fsign`).
        #[arg(long)]
        inject_fault: Option<String>,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Reduced Gröbner basis of the polynomials in an input file.
    Gb {
        file: std::path::PathBuf,
        /// Variables (comma separated) ordered before the rest.
        #[arg(long)]
        block: Option<String>,
    },
    /// Eliminate variables from the ideal in an input file.
    Eliminate {
        file: std::path::PathBuf,
        /// Comma-separated variables to eliminate.
        #[arg(long)]
        drop: String,
    },
    /// Minimal graded free resolution of the matrix in an input file.
    Resolve {
        file: std::path::PathBuf,
        #[arg(long, default_value_t = 8)]
        max_length: usize,
    },
    /// Hilbert series and numerator of the quotient by the ideal in a file.
    Hilbert {
        file: std::path::PathBuf,
        /// Truncation bound (default: sum of weights + 5, or the
        /// UNPROJ_HILBERT_BOUND environment variable).
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Quasismoothness of the hypersurface or complete intersection in a file.
    Quasismooth { file: std::path::PathBuf },
    /// All 4x4 Pfaffians of the skew matrix in a file.
    Pfaffian { file: std::path::PathBuf },
    /// Query the K3 seed database.
    K3 {
        /// Database file (defaults to the shipped seed data).
        #[arg(long)]
        db: Option<std::path::PathBuf>,
        #[arg(long)]
        codim: Option<u32>,
        #[arg(long)]
        centre_type: Option<u8>,
        #[arg(long)]
        name: Option<String>,
        /// Print only the number of matches.
        #[arg(long, default_value_t = false)]
        count: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_input(path: &std::path::Path) -> Result<InputFile, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_input(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_vars(ring: &unproj::ring::GradedRing, list: &str) -> Result<Vec<usize>, String> {
    list.split(',')
        .map(|v| {
            let v = v.trim();
            ring.var_index(v)
                .ok_or_else(|| format!("unknown variable `{v}`"))
        })
        .collect()
}

fn emit_report(report: &pipeline::UnprojectionReport, out: &OutOpts) -> Result<ExitCode, String> {
    let rendered = match out.format {
        Format::Text => report.render_text(),
        Format::Kv => report.render_kv(),
    };
    match &out.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            f.write_all(rendered.as_bytes())
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
        None => print!("{rendered}"),
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Repro {
            which,
            seed,
            inject_fault,
            out,
        } => {
            let fault = match inject_fault.as_deref() {
                None => None,
                Some("s2sign") => Some(Fault::S2Sign),
                Some("fsign") => Some(Fault::FSign),
                Some(other) => return Err(format!("unknown fault `{other}`")),
            };
            let report = match which.as_str() {
                "main" => pipeline::run_main_example_with(fault),
                "determinantal" => {
                    if fault.is_some() {
                        return Err("fault injection applies to the main example".to_string());
                    }
                    pipeline::run_determinantal_with_retry(seed, 5)
                }
                other => return Err(format!("unknown example `{other}` (main|determinantal)")),
            };
            emit_report(&report, &out)
        }
        Command::Gb { file, block } => {
            let input = read_input(&file)?;
            let ring = input.ring().map_err(|e| e.to_string())?.clone();
            let order = match block {
                Some(list) => MonomialOrder::eliminating(&ring, &parse_vars(&ring, &list)?),
                None => MonomialOrder::grevlex(&ring),
            };
            let ideal = Ideal::new(&ring, input.polys);
            let basis = ideal.groebner_basis(&order);
            for g in basis.iter() {
                println!("{g}");
            }
            println!("# {} basis elements", basis.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Eliminate { file, drop } => {
            let input = read_input(&file)?;
            let ring = input.ring().map_err(|e| e.to_string())?.clone();
            let drop_idx = parse_vars(&ring, &drop)?;
            let ideal = Ideal::new(&ring, input.polys);
            let elim = ideal.eliminate(&drop_idx).map_err(|e| e.to_string())?;
            for g in elim.gens() {
                println!("{g}");
            }
            let mut mindegs: Vec<i64> = elim
                .gens()
                .iter()
                .filter_map(Poly::homogeneous_degree)
                .collect();
            mindegs.sort_unstable();
            println!("# minimal generator degrees: {mindegs:?}");
            let gb = elim.groebner_basis(&MonomialOrder::grevlex(elim.ring()));
            let mut gbdegs: Vec<i64> = gb.iter().filter_map(Poly::homogeneous_degree).collect();
            gbdegs.sort_unstable();
            println!("# reduced basis degrees: {gbdegs:?}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Resolve { file, max_length } => {
            let input = read_input(&file)?;
            let ring = input.ring().map_err(|e| e.to_string())?.clone();
            let rowdegs = input
                .row_degrees
                .clone()
                .ok_or("matrix input needs a rowdegs line")?;
            let matrix = match input.col_degrees.clone() {
                Some(cols) => {
                    unproj::matrix::GradedMatrix::new(&ring, input.rows, rowdegs, cols)
                }
                None => unproj::matrix::GradedMatrix::infer(&ring, input.rows, rowdegs),
            }
            .map_err(|e| e.to_string())?;
            let res = resolve::free_resolution(&matrix, max_length).map_err(|e| e.to_string())?;
            print!("{}", res.betti());
            println!("# complete: {}", res.is_complete());
            println!("# minimal: {}", res.is_minimal());
            println!("# composition-zero: {}", res.check().ok);
            Ok(ExitCode::SUCCESS)
        }
        Command::Hilbert { file, bound } => {
            let input = read_input(&file)?;
            let ring = input.ring().map_err(|e| e.to_string())?.clone();
            let bound = bound
                .or_else(|| {
                    std::env::var("UNPROJ_HILBERT_BOUND")
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or_else(|| hilbert::default_bound(&ring));
            let ideal = Ideal::new(&ring, input.polys);
            let h = hilbert::hilbert_series(&ideal, bound).map_err(|e| e.to_string())?;
            println!("series: {:?}", h.series());
            println!("numerator: {}", hilbert::format_numerator(&h.numerator()));
            let ws: Vec<String> = ring.weights().iter().map(|w| format!("(1 - t^{w})")).collect();
            println!("denominator: {}", ws.join(""));
            Ok(ExitCode::SUCCESS)
        }
        Command::Quasismooth { file } => {
            let input = read_input(&file)?;
            let qs = pipeline::quasismooth(&input.polys).map_err(|e| e.to_string())?;
            println!("quasismooth: {qs}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Pfaffian { file } => {
            let input = read_input(&file)?;
            let ring = input.ring().map_err(|e| e.to_string())?.clone();
            let skew = SkewPfaffianMatrix::from_upper_rows(&ring, input.skew_rows)
                .map_err(|e| e.to_string())?;
            let system = skew.pfaffian_system().map_err(|e| e.to_string())?;
            let n = skew.size();
            let mut idx = 0;
            for c in combinations(n) {
                println!("Pf{{{},{},{},{}}}: {}", c[0] + 1, c[1] + 1, c[2] + 1, c[3] + 1, system[idx]);
                idx += 1;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::K3 {
            db,
            codim,
            centre_type,
            name,
            count,
        } => {
            let entries = match db {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    k3db::load_db(&text).map_err(|e| e.to_string())?
                }
                None => k3db::seed_db(),
            };
            let hits: Vec<&k3db::K3Entry> = match &name {
                Some(n) => k3db::find_by_name(&entries, n).into_iter().collect(),
                None => k3db::query(&entries, codim, centre_type),
            };
            if count {
                println!("{}", hits.len());
            } else {
                for (i, e) in hits.iter().enumerate() {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", k3db::format_entry(e));
                }
                if hits.is_empty() {
                    println!("# no matches");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn combinations(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}
