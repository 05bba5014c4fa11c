//! `dgcyc`: Hochschild and cyclic cohomology from the command line.
//!
//! Exit codes: 0 on success, 1 when a reported check fails, 2 on input
//! errors (unreadable or invalid input, refused sizes, bad flags).

mod commands;
mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use dgcyc::cyclic::Method;
use dgcyc::spectral::Filtration;

use commands::Page;
use input::{load, InputError};
use report::{Format, Report};

#[derive(Parser)]
#[command(
    name = "dgcyc",
    version,
    about = "Hochschild and cyclic cohomology of finite-dimensional dgas and dg-categories over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for independent blocks.
    #[arg(long, global = true, env = "DGCYC_JOBS")]
    jobs: Option<usize>,

    /// Largest cochain cell the tool will build.
    #[arg(long, global = true, default_value_t = 20_000)]
    max_cell: u128,

    /// Add wall-clock time to JSON reports, which are otherwise deterministic.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a presentation, one line per axiom family.
    Validate { input: String },
    /// Hochschild cohomology HH^n(A, A*).
    Hh {
        input: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Cyclic cohomology HC^n(A).
    Hc {
        input: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// tricomplex, lambda or bicomplex.
        #[arg(long, default_value = "tricomplex")]
        method: Method,
    },
    /// Partial cyclic cohomology HCP^n_m.
    Hcp {
        input: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Largest internal degree m (default: (max-degree + 1) * top degree).
        #[arg(long)]
        max_internal: Option<usize>,
    },
    /// Partial Hochschild cohomology HHP^n_m.
    Hhp {
        input: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        max_internal: Option<usize>,
    },
    /// A page of one of the spectral sequences of the cyclic tricomplex.
    Ss {
        input: String,
        /// f1, f2, f3 or f13.
        #[arg(long, default_value = "f1")]
        filtration: Filtration,
        /// Page number, or `inf`.
        #[arg(long, default_value = "inf")]
        page: Page,
        #[arg(long, default_value_t = 3)]
        max_total: usize,
    },
    /// Run every structural check on the input and on seeded random dgas.
    Verify {
        input: String,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Largest arity for the cocyclic identities.
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
    },
    /// The long exact sequence relating HC and HH.
    Les {
        input: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Hochschild cohomology of a dg-category.
    CatHh {
        input: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Cyclic cohomology of a dg-category.
    CatHc {
        input: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value = "tricomplex")]
        method: Method,
    },
    /// The arity-filtration spectral sequence of a dg-category.
    CatSs {
        input: String,
        #[arg(long, default_value = "inf")]
        page: Page,
        #[arg(long, default_value_t = 3)]
        max_total: usize,
    },
    /// List the builtin inputs, or print one of them.
    Catalog { name: Option<String> },
}

fn run(cli: &Cli) -> Result<Report, InputError> {
    let bound = cli.max_cell;
    let loaded = |s: &str| load(s);
    match &cli.command {
        Command::Validate { input } => Ok(commands::validate(&loaded(input)?)),
        Command::Hh { input, max_degree } => commands::hh(&loaded(input)?, *max_degree, bound),
        Command::Hc {
            input,
            max_degree,
            method,
        } => commands::hc(&loaded(input)?, *max_degree, *method, bound),
        Command::Hcp {
            input,
            max_degree,
            max_internal,
        } => commands::partial(&loaded(input)?, *max_degree, *max_internal, true, bound),
        Command::Hhp {
            input,
            max_degree,
            max_internal,
        } => commands::partial(&loaded(input)?, *max_degree, *max_internal, false, bound),
        Command::Ss {
            input,
            filtration,
            page,
            max_total,
        } => commands::ss(&loaded(input)?, *filtration, *page, *max_total, bound),
        Command::Verify {
            input,
            trials,
            seed,
            max_degree,
            max_arity,
        } => commands::verify(&loaded(input)?, *trials, *seed, *max_degree, *max_arity, bound),
        Command::Les { input, max_degree } => commands::les(&loaded(input)?, *max_degree, bound),
        Command::CatHh { input, max_degree } => commands::cat_hh(&loaded(input)?, *max_degree, bound),
        Command::CatHc {
            input,
            max_degree,
            method,
        } => commands::cat_hc(&loaded(input)?, *max_degree, *method, bound),
        Command::CatSs { input, page, max_total } => commands::cat_ss(&loaded(input)?, *page, *max_total, bound),
        Command::Catalog { name } => commands::list_catalog(name.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        dgcyc::par::set_jobs(j);
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            report.command = std::env::args().skip(1).collect();
            if cli.timing || cli.format == Format::Text {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            print!("{}", report.render(cli.format));
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
