use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use loopalg::catalog::F4Variant;
use loopalg::run::{run_compute, run_report, run_verify, Domain, OutputFormat, Report, RunConfig};
use loopalg::{Error, LieFamily};

#[derive(Parser)]
#[command(name = "loopalg", version, about = "Pontrjagin rings of loop spaces on complete flag manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline and print the report.
    Compute(RunArgs),
    /// Run every check for the entry; exit 0 only if all pass.
    Verify(RunArgs),
    /// Print only the Poincaré series (dimensions or ranks).
    Series(RunArgs),
    /// Print the cached report, computing it on a miss.
    Report {
        #[command(flatten)]
        run: RunArgs,
        /// Fail instead of computing when nothing is cached.
        #[arg(long)]
        no_compute: bool,
    },
}

#[derive(Args)]
struct RunArgs {
    /// su | sp | so-odd | so-even | g2 | f4 | e6
    #[arg(long)]
    family: String,
    /// Rank n; fixed for g2, f4, e6.
    #[arg(long)]
    rank: Option<u32>,
    /// rational | integer
    #[arg(long, default_value = "rational")]
    coeffs: String,
    /// Truncation degree N (10 by default, 12 for g2).
    #[arg(long)]
    max_degree: Option<u32>,
    /// json | text
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Use x_i x_j = -x_j x_i in the F4 integral presentation.
    #[arg(long)]
    f4_anticommute: bool,
    /// Largest column count allowed in one degree.
    #[arg(long)]
    budget: Option<usize>,
    /// Also count H*(G/T;Q) for f4 and e6.
    #[arg(long)]
    full_cohomology: bool,
    #[arg(long, env = "LOOPALG_CACHE_DIR", default_value = ".loopalg-cache")]
    cache_dir: PathBuf,
    /// Print stage timings to stderr.
    #[arg(long)]
    verbose: bool,
    #[arg(long, hide = true)]
    inject_torsion: bool,
}

impl RunArgs {
    fn config(&self) -> loopalg::Result<RunConfig> {
        let family: LieFamily = self.family.parse()?;
        let rank = match (self.rank, family.fixed_rank()) {
            (Some(r), _) => r,
            (None, Some(r)) => r,
            (None, None) => return Err(Error::Parse(format!("--rank is required for {family}"))),
        };
        let mut cfg = RunConfig::new(family, rank)?.with_coeffs(self.coeffs.parse::<Domain>()?);
        if let Some(n) = self.max_degree {
            cfg = cfg.with_max_degree(n);
        }
        if let Some(b) = self.budget {
            cfg.budget = b;
        }
        if self.f4_anticommute {
            cfg.f4_variant = F4Variant::Anticommuting;
        }
        cfg.full_cohomology = self.full_cohomology;
        cfg.inject_torsion = self.inject_torsion;
        cfg.format = self.format.parse::<OutputFormat>()?;
        cfg.out = self.out.clone();
        cfg.cache_dir = Some(self.cache_dir.clone());
        cfg.verbose = self.verbose;
        Ok(cfg)
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => 3,
        Error::UnknownFamily(_) | Error::InvalidRank { .. } | Error::Parse(_) | Error::CacheMiss => 2,
        _ => 1,
    }
}

fn emit(cfg: &RunConfig, text: &str) -> loopalg::Result<()> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn execute(command: &Command) -> loopalg::Result<u8> {
    let (args, kind) = match command {
        Command::Compute(a) => (a, "compute"),
        Command::Verify(a) => (a, "verify"),
        Command::Series(a) => (a, "series"),
        Command::Report { run, .. } => (run, "report"),
    };
    let cfg = args.config()?;
    let report: Report;
    let mut code = 0;
    match command {
        Command::Verify(_) => {
            let (r, c) = run_verify(&cfg)?;
            for name in r.failing_checks() {
                eprintln!("FAIL {name}");
            }
            for name in r.skipped_mandatory() {
                eprintln!("SKIPPED {name}");
            }
            report = r;
            code = c as u8;
        }
        Command::Report { no_compute, .. } => report = run_report(&cfg, !no_compute)?,
        _ => report = run_compute(&cfg)?,
    }
    let text = if kind == "series" { report.render_series(cfg.format) } else { report.render(cfg.format) };
    emit(&cfg, &text)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
