//! Command-line front end: triangle tables in three formats, canonical
//! streaming enumeration of the combinatorial families, and the full
//! verification suite with a CI-friendly exit status (0 pass, 1 verification
//! failure, 2 usage error).

mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use jacobi_stirling::models::EnumBounds;
use jacobi_stirling::verify::{scope_tasks, Scope};

const MAX_TABLE_NMAX: u32 = 64;
const MAX_VERIFY_NMAX: u32 = 20;

#[derive(Parser)]
#[command(name = "jacobi-stirling", version, about = "Jacobi-Stirling triangles, models, and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a number triangle
    Table(TableArgs),
    /// Stream one combinatorial family in canonical order
    Enumerate(EnumerateArgs),
    /// Run verification suites; exit 0 only if everything passes
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TableArgs {
    /// One of JS, js, S, s, U, u, V, v, LS, ls (case-sensitive)
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 30)]
    nmax: u32,
    /// Evaluate the polynomial kinds at a rational point, e.g. 1, -1, 3/2
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Output format: json, csv, or text
    #[arg(long, default_value = "text")]
    format: String,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// One of signed, quasipair, triple, firstkind, riordan, oddpart
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    /// Statistic filter for the graded families (quasipair, triple, firstkind)
    #[arg(long)]
    i: Option<u32>,
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of all, triangles, models, bijections, series
    #[arg(long, default_value = "all")]
    scope: String,
    #[arg(long, default_value_t = 6)]
    nmax: u32,
    /// Worker threads for independent checks
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

/// Usage problems exit with status 2, verification failures with 1.
enum Failure {
    Usage(String),
    Verification,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn open_sink(path: &Option<std::path::PathBuf>) -> Result<Box<dyn Write>, Failure> {
    match path {
        Some(p) => {
            let file = std::fs::File::create(p)
                .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", p.display())))?;
            Ok(Box::new(std::io::BufWriter::new(file)))
        }
        None => Ok(Box::new(std::io::BufWriter::new(std::io::stdout()))),
    }
}

fn cmd_table(args: TableArgs) -> Result<(), Failure> {
    if args.nmax > MAX_TABLE_NMAX {
        return Err(Failure::Usage(format!(
            "nmax {} exceeds the table bound {MAX_TABLE_NMAX}",
            args.nmax
        )));
    }
    let table = match &args.z {
        Some(z) => output::build_evaluated_table(&args.kind, args.nmax, z)
            .map_err(Failure::Usage)?,
        None => output::build_table(&args.kind, args.nmax)
            .ok_or_else(|| Failure::Usage(format!("unknown table kind `{}`", args.kind)))?,
    };
    let rendered = match args.format.as_str() {
        "json" => output::table_json(&table),
        "csv" => output::table_csv(&table),
        "text" => output::table_text(&table),
        other => return Err(Failure::Usage(format!("unknown format `{other}`"))),
    };
    let mut sink = open_sink(&args.out)?;
    sink.write_all(rendered.as_bytes())
        .and_then(|_| sink.flush())
        .map_err(|e| Failure::Usage(format!("write failed: {e}")))
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let objects = output::enumerate_family(&args.family, args.n, args.k, args.i)
        .map_err(|e| Failure::Usage(e))?;
    let mut sink = open_sink(&args.out)?;
    let render = |sink: &mut Box<dyn Write>| -> std::io::Result<()> {
        match args.format.as_str() {
            "json" => {
                for obj in &objects {
                    writeln!(sink, "{obj}")?;
                }
                writeln!(sink, "{{\"count\":{}}}", objects.len())?;
            }
            "csv" => {
                for (idx, obj) in objects.iter().enumerate() {
                    writeln!(sink, "{idx},\"{obj}\"")?;
                }
                writeln!(sink, "count,{}", objects.len())?;
            }
            "text" => {
                for obj in &objects {
                    writeln!(sink, "{obj}")?;
                }
                writeln!(sink, "count {}", objects.len())?;
            }
            other => {
                return Err(std::io::Error::new(
                    std::io::ErrorKind::InvalidInput,
                    format!("unknown format `{other}`"),
                ))
            }
        }
        sink.flush()
    };
    render(&mut sink).map_err(|e| Failure::Usage(e.to_string()))
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.nmax > MAX_VERIFY_NMAX {
        return Err(Failure::Usage(format!(
            "nmax {} exceeds the verification bound {MAX_VERIFY_NMAX}",
            args.nmax
        )));
    }
    if args.jobs == 0 {
        return Err(Failure::Usage("jobs must be at least 1".into()));
    }
    let scope: Scope = args
        .scope
        .parse()
        .map_err(|e: String| Failure::Usage(e))?;
    let tasks = scope_tasks(scope, args.nmax, &EnumBounds::default());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Failure::Usage(format!("cannot build thread pool: {e}")))?;
    // indexed collection keeps the report order independent of scheduling
    let checks: Vec<jacobi_stirling::verify::Check> =
        pool.install(|| tasks.into_par_iter().map(|t| t.run()).collect());

    let mut sink = open_sink(&args.out)?;
    let mut all_passed = true;
    let total = checks.len();
    let mut passed = 0usize;
    for check in &checks {
        let status = if check.passed {
            passed += 1;
            "PASS"
        } else {
            all_passed = false;
            "FAIL"
        };
        writeln!(sink, "{status} {}: {}", check.name, check.detail)
            .map_err(|e| Failure::Usage(format!("write failed: {e}")))?;
    }
    writeln!(
        sink,
        "verify: {passed}/{total} checks passed (scope {}, nmax {})",
        args.scope, args.nmax
    )
    .map_err(|e| Failure::Usage(format!("write failed: {e}")))?;
    sink.flush()
        .map_err(|e| Failure::Usage(format!("write failed: {e}")))?;
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
