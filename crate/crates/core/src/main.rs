use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gr_elementary::catalog::{listing, lookup, registry, CatalogEntry, Params};
use gr_elementary::error::Result;
use gr_elementary::exact::{p_poly, q_poly, EulerianTable};
use gr_elementary::harness::{
    emit_report, verify_entries, Format, AMPLIFICATION_CAP, GridSpec, VerifyOptions, DEFAULT_TOL_ABS, DEFAULT_TOL_REL,
    ORACLE_TOL,
};
use gr_elementary::quadrature::{integrate, DEFAULT_MAX_EVALS};

#[derive(Parser)]
#[command(name = "grel", version, about = "Closed-form integral catalog with a quadrature oracle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form value of an entry.
    Eval {
        id: String,
        /// Parameter assignment `name=value`; repeatable.
        #[arg(long = "param", short = 'p')]
        params: Vec<String>,
    },
    /// Print the quadrature value and error estimate of an entry's integral.
    Oracle {
        id: String,
        #[arg(long = "param", short = 'p')]
        params: Vec<String>,
        #[arg(long, default_value_t = ORACLE_TOL)]
        tol: f64,
    },
    /// Compare closed forms with the oracle over parameter grids.
    Verify {
        /// Restrict to one entry.
        #[arg(long)]
        entry: Option<String>,
        /// Axis override `name=v1,v2,...` or `name=lo:hi:count[:log]`; repeatable.
        #[arg(long)]
        grid: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_TOL_ABS)]
        tol_abs: f64,
        #[arg(long, default_value_t = DEFAULT_TOL_REL)]
        tol_rel: f64,
        /// Skip points whose closed form amplifies rounding error past this factor.
        #[arg(long, default_value_t = AMPLIFICATION_CAP)]
        amplification_cap: f64,
        #[arg(long, default_value = "json-lines")]
        format: String,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-point wall time (makes reports non-reproducible).
        #[arg(long)]
        timing: bool,
        /// Print the summary table to standard error.
        #[arg(long)]
        summary: bool,
    },
    /// Print a combinatorial table.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        n: u32,
    },
    /// Print the coefficients of P_n or Q_n, constant term first.
    Poly {
        #[arg(value_enum)]
        which: PolyKind,
        #[arg(long)]
        n: u32,
    },
    /// Dump the registry, one JSON object per line.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Eulerian,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "Q", alias = "q")]
    Q,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Eval { id, params } => {
            let params = Params::parse(params.iter().map(String::as_str))?;
            let v = lookup(&id)?.evaluate(&params)?;
            let _ = writeln!(stdout, "{v:.16e}");
        }
        Command::Oracle { id, params, tol } => {
            let params = Params::parse(params.iter().map(String::as_str))?;
            let (f, domain) = lookup(&id)?.integrand(&params)?;
            let r = integrate(&f, &domain, tol, DEFAULT_MAX_EVALS)?;
            let _ = writeln!(
                stdout,
                "value {:.16e}\nerror_estimate {:.3e}\nn_evals {}\nconverged {}",
                r.value, r.abs_error_estimate, r.n_evals, r.converged
            );
        }
        Command::Verify {
            entry,
            grid,
            tol_abs,
            tol_rel,
            amplification_cap,
            format,
            out,
            timing,
            summary,
        } => {
            let format: Format = format.parse()?;
            let entries: Vec<_> = match &entry {
                Some(id) => vec![lookup(id)?],
                None => registry().iter().collect(),
            };
            let opts = VerifyOptions {
                tol_abs,
                tol_rel,
                amplification_cap,
                timing,
            };
            // Without --entry, an override applies to the entries that have the parameter.
            let scoped = entry.is_none();
            let grid_for = |e: &CatalogEntry| {
                let applies = |item: &&str| {
                    let name = item.split_once('=').map_or(*item, |(n, _)| n).trim();
                    !scoped || e.params.iter().any(|p| p.name == name)
                };
                GridSpec::default_for(e).with_overrides(grid.iter().map(String::as_str).filter(applies))
            };
            let result = verify_entries(entries.into_iter(), grid_for, &opts);
            let bytes = emit_report(&result.records, format)?;
            match out {
                Some(path) => fs::write(&path, bytes)
                    .map_err(|e| gr_elementary::error::Error::Report(format!("{}: {e}", path.display())))?,
                None => {
                    let _ = stdout.write_all(&bytes);
                }
            }
            if summary {
                eprint!("{}", result.render());
            }
            let ok = match entry {
                Some(_) => result.failures().next().is_none() && !result.records.is_empty(),
                None => result.all_passed(),
            };
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Table { kind: TableKind::Eulerian, n } => {
            let table = EulerianTable::build(n)?;
            for row in table.rows() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                let _ = writeln!(stdout, "{}", cells.join("\t"));
            }
        }
        Command::Poly { which, n } => {
            let poly = match which {
                PolyKind::P => p_poly(n)?,
                PolyKind::Q => q_poly(n)?,
            };
            let cells: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
            let _ = writeln!(stdout, "{}", cells.join(" "));
        }
        Command::List => {
            let _ = stdout.write_all(listing().as_bytes());
        }
    }
    Ok(ExitCode::SUCCESS)
}
