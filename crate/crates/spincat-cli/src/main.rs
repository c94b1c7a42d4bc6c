//! Command-line driver: named verification suites with machine-readable
//! reports, and table emitters for the symmetric-function dictionaries and
//! the block-swap data.
//!
//! Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use spincat::report::{reports_to_json, SuiteReport};
use spincat::suites::{dictionary_rows, qfun_rows, run_suite, tau_rows, SuiteParams};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "spincat",
    about = "Exact verification suites for spin groups, Clifford algebras, \
             factor systems, and supersymmetric monoidal structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite and emit a report.
    Verify(VerifyArgs),
    /// Emit a data table.
    Table(TableArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: factor-systems, spin, stilde, clifford, bott, hecke,
    /// queer, species, eversion, sergeev, qsym, or all.
    suite: String,
    /// Degree modulus for graded suites.
    #[arg(long, default_value_t = 8)]
    q: usize,
    /// Rank bound for exhaustive sweeps.
    #[arg(long, default_value_t = 6)]
    max_rank: usize,
    /// Number of seeded random trials where sampling is used.
    #[arg(long, default_value_t = 25)]
    trials: usize,
    /// Seed for all randomized exhibits.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
struct TableArgs {
    /// Table kind: qfun, tau, or dictionary.
    kind: TableKind,
    /// Degree / rank bound for the table rows.
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Qfun,
    Tau,
    Dictionary,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Table(args) => table(args),
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let params = SuiteParams {
        q: args.q,
        max_rank: args.max_rank,
        trials: args.trials,
        seed: args.seed,
    };
    let start = Instant::now();
    let reports: Vec<SuiteReport> = match run_suite(&args.suite, &params) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let all_pass = reports.iter().all(|r| r.pass());
    match args.format {
        ReportFormat::Json => {
            if reports.len() == 1 {
                println!("{}", reports[0].to_json());
            } else {
                println!("{}", reports_to_json(&reports));
            }
        }
        ReportFormat::Text => {
            for r in &reports {
                print!("{}", r.to_text());
            }
            let total: usize = reports.iter().map(|r| r.checks.len()).sum();
            eprintln!(
                "{} checks in {} suite(s), {} in {:.2?}",
                total,
                reports.len(),
                if all_pass { "all passing" } else { "FAILURES" },
                start.elapsed()
            );
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn table(args: TableArgs) -> ExitCode {
    match args.kind {
        TableKind::Qfun => {
            let rows = qfun_rows(args.max_degree);
            match args.format {
                TableFormat::Csv => {
                    println!("k,expansion");
                    for (k, f) in rows {
                        println!("{},\"{}\"", k, f);
                    }
                }
                TableFormat::Json => {
                    let v: Vec<serde_json::Value> = rows
                        .into_iter()
                        .map(|(k, f)| serde_json::json!({"k": k, "expansion": f}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
        }
        TableKind::Tau => {
            let rows = tau_rows(args.max_degree);
            match args.format {
                TableFormat::Csv => {
                    println!("n,m,word,c_power");
                    for (n, m, w, c) in rows {
                        println!("{},{},\"{}\",{}", n, m, w, c);
                    }
                }
                TableFormat::Json => {
                    let v: Vec<serde_json::Value> = rows
                        .into_iter()
                        .map(|(n, m, w, c)| {
                            serde_json::json!({"n": n, "m": m, "word": w, "c_power": c})
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
        }
        TableKind::Dictionary => {
            let rows = dictionary_rows(args.max_degree as u32);
            match args.format {
                TableFormat::Csv => {
                    println!("lambda,length,eps,l_scalar,n_scalar,queer_flag,expansion_hash");
                    for (l, len, eps, lv, nv, qf, h) in rows {
                        println!("\"{}\",{},{},\"{}\",\"{}\",{},{:016x}", l, len, eps, lv, nv, qf, h);
                    }
                }
                TableFormat::Json => {
                    let v: Vec<serde_json::Value> = rows
                        .into_iter()
                        .map(|(l, len, eps, lv, nv, qf, h)| {
                            serde_json::json!({
                                "lambda": l,
                                "length": len,
                                "eps": eps,
                                "l_scalar": lv,
                                "n_scalar": nv,
                                "queer_flag": qf,
                                "expansion_hash": format!("{:016x}", h),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
        }
    }
    ExitCode::SUCCESS
}
