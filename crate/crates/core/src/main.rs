use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use conelift::cli::commands::{self, error_outcome, Outcome, Sampling, BUDGET_ENV};
use conelift::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "conelift",
    version,
    about = "Exact lifting, cone surjections and trinomial rationality"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct SampleArgs {
    /// Number of random points to test.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Numerators and denominators are drawn from [-bound, bound].
    #[arg(long, default_value_t = 10)]
    bound: u64,
}

impl From<&SampleArgs> for Sampling {
    fn from(a: &SampleArgs) -> Self {
        Sampling {
            samples: a.samples,
            seed: a.seed,
            bound: a.bound,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lift a projective map given by [vars] and [map].
    Lift {
        #[arg(long)]
        job: PathBuf,
    },
    /// Build gamma onto the cone and sample membership.
    Cone {
        #[arg(long)]
        job: PathBuf,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Run every check the job file provides material for.
    Verify {
        #[arg(long)]
        job: PathBuf,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Interpolate a map through prescribed points.
    Interpolate {
        #[arg(long)]
        job: PathBuf,
    },
    /// Classify a trinomial hypersurface by its block exponents.
    Trinomial {
        #[arg(long, required_unless_present = "batch", requires_all = ["l1", "l2"])]
        l0: Option<String>,
        #[arg(long)]
        l1: Option<String>,
        #[arg(long)]
        l2: Option<String>,
        /// One hypersurface per line: `a,b ; c ; d`.
        #[arg(long, conflicts_with_all = ["l0", "l1", "l2"])]
        batch: Option<PathBuf>,
    },
    /// Replay the parity obstruction for P(1,1,2).
    WpsDemo {
        /// Polynomial in x1, x2, x3 to use instead of x1^2*x3.
        #[arg(long)]
        target: Option<String>,
    },
}

fn read(path: &Path) -> conelift::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn run(cmd: &Command) -> conelift::Result<Outcome> {
    let budget = || commands::step_budget(std::env::var(BUDGET_ENV).ok().as_deref());
    match cmd {
        Command::Lift { job } => commands::lift(&read(job)?, budget()?),
        Command::Cone { job, sampling } => commands::cone(&read(job)?, sampling.into(), budget()?),
        Command::Verify { job, sampling } => {
            commands::verify(&read(job)?, sampling.into(), budget()?)
        }
        Command::Interpolate { job } => commands::interpolate(&read(job)?),
        Command::Trinomial {
            batch: Some(path), ..
        } => commands::trinomial_batch(&read(path)?),
        Command::Trinomial { l0, l1, l2, .. } => commands::trinomial(
            l0.as_deref().unwrap_or_default(),
            l1.as_deref().unwrap_or_default(),
            l2.as_deref().unwrap_or_default(),
        ),
        Command::WpsDemo { target } => commands::wps_demo(target.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, failed) = match run(&cli.command) {
        Ok(out) => (out, false),
        Err(e) => (error_outcome(&e), true),
    };
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&out.json).expect("json values serialize")
        ),
        Format::Text if failed => eprint!("{}", out.text),
        Format::Text => print!("{}", out.text),
    }
    ExitCode::from(out.exit as u8)
}
