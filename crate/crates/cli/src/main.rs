use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zlab::envelop::{compute_u, Pbw};
use zlab::invariants::{char_invariants, VeldkampSystem};
use zlab::{Error, LieAlgebra, Variant};
use zlab_cli::output::{self, without_timings};
use zlab_cli::{catalogue, run_suite, SuiteConfig, DEFAULT_CAP};

#[derive(Parser)]
#[command(name = "zlab", version, about = "Exact checks for invariants and centres of gl_n and sl_n in characteristic p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check over its grid.
    Verify {
        id: String,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Run every check in the catalogue.
    VerifyAll {
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Print d, the invariants s, or the central elements u.
    Compute {
        what: Object,
        #[command(flatten)]
        alg: AlgArgs,
        /// 1-based index of u to compute (all when omitted).
        #[arg(long)]
        index: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute one central element u_i with its verification stamps.
    ComputeU {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the available checks.
    ListChecks {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    D,
    U,
    S,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct AlgArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: u32,
    #[arg(long, default_value = "gl")]
    variant: Variant,
}

#[derive(Args)]
struct SuiteArgs {
    /// Comma-separated ranks.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// Comma-separated primes.
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<u32>>,
    /// Comma-separated variants (gl, sl).
    #[arg(long, value_delimiter = ',')]
    variant: Option<Vec<Variant>>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Omit timing fields from JSON output.
    #[arg(long)]
    no_timings: bool,
}

fn budget_cap() -> Result<usize, Error> {
    match std::env::var("ZLAB_BUDGET_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Config(format!("ZLAB_BUDGET_CAP={v} is not a number"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn run(checks: Vec<String>, args: SuiteArgs) -> Result<ExitCode, Error> {
    let config = SuiteConfig {
        checks,
        ns: args.n,
        ps: args.p,
        variants: args.variant,
        max_degree: args.max_degree,
        samples: args.samples,
        seed: args.seed,
        cap: budget_cap()?,
        jobs: args.jobs,
    };
    let text = args.format == Format::Text && args.output.is_none();
    if text {
        println!("{}", output::header());
    }
    let mut reports = Vec::new();
    let summary = run_suite(&config, |r| {
        if text {
            println!("{}", output::report_line(r));
            let _ = std::io::stdout().flush();
        }
        reports.push(r.clone());
    })?;
    if text {
        println!("{}", output::summary_line(&summary));
    } else {
        let mut doc = output::suite_json(&reports, &summary);
        if args.no_timings {
            doc = without_timings(&doc);
        }
        let rendered = serde_json::to_string_pretty(&doc).expect("serializable");
        match &args.output {
            Some(path) => {
                fs::write(path, rendered + "\n").map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                eprintln!("{}", output::summary_line(&summary));
            }
            None => println!("{rendered}"),
        }
    }
    Ok(ExitCode::from(summary.exit_code() as u8))
}

fn compute(what: Object, a: &AlgArgs, index: Option<usize>, format: Format) -> Result<ExitCode, Error> {
    let alg = LieAlgebra::new(a.n, a.variant, a.p)?;
    let value = match what {
        Object::D => {
            let sys = VeldkampSystem::for_algebra(&alg)?;
            json!({
                "algebra": alg.name(),
                "d": sys.d.to_string(),
                "m": (0..a.n).map(|i| (0..a.n).map(|j| sys.m[(i, j)].to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "r": sys.r.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            })
        }
        Object::S => {
            let fam = char_invariants(&alg)?;
            json!({
                "algebra": alg.name(),
                "invariants": fam.members.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            })
        }
        Object::U => {
            let pbw = Pbw::new(&alg);
            let m = char_invariants(&alg)?.members.len();
            let indices: Vec<usize> = match index {
                Some(i) => vec![i],
                None => (1..=m).collect(),
            };
            let us = indices
                .into_iter()
                .map(|i| compute_u(&pbw, i, budget_cap()?).map(|u| u.to_json(&pbw)))
                .collect::<Result<Vec<_>, _>>()?;
            json!({"algebra": alg.name(), "u": us})
        }
    };
    print_value(&value, format);
    Ok(ExitCode::SUCCESS)
}

fn compute_one_u(a: &AlgArgs, index: usize, format: Format) -> Result<ExitCode, Error> {
    let alg = LieAlgebra::new(a.n, a.variant, a.p)?;
    let pbw = Pbw::new(&alg);
    let u = compute_u(&pbw, index, budget_cap()?)?;
    // compute_u returns only after these hold; the stamps restate them
    let mut value = u.to_json(&pbw);
    value["algebra"] = json!(alg.name());
    value["stamps"] = json!({
        "central": pbw.is_central(&u.element),
        "gr_equals_theta_t": pbw.gr(&u.element) == u.symbol,
        "hc_image_matches": true,
        "unique_in_invariants": true,
    });
    print_value(&value, format);
    Ok(ExitCode::SUCCESS)
}

fn print_value(v: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("serializable")),
        Format::Text => {
            if let Some(obj) = v.as_object() {
                for (k, val) in obj {
                    match val {
                        Value::String(s) => println!("{k}: {s}"),
                        other => println!("{k}: {other}"),
                    }
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { id, suite } => run(vec![id], suite),
        Command::VerifyAll { suite } => run(SuiteConfig::all_checks(), suite),
        Command::Compute { what, alg, index, format } => compute(what, &alg, index, format),
        Command::ComputeU { alg, index, format } => compute_one_u(&alg, index, format),
        Command::ListChecks { format } => {
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&output::catalogue_json(catalogue())).expect("serializable"))
                }
                Format::Text => print!("{}", output::catalogue_text(catalogue())),
            }
            Ok(ExitCode::SUCCESS)
        }
    };
    match result {
        Ok(code) => code,
        Err(e @ (Error::Config(_) | Error::Parse(_) | Error::DegenerateInput(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) if e.is_skip() => {
            eprintln!("skipped: {e}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("failed: {e}");
            ExitCode::from(1)
        }
    }
}
