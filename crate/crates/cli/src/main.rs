use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kostant_cli::commands::{self, parse_case, parse_group, CliError, CliResult, Settings};
use kostant_cli::report::{render, Document, Format};

#[derive(Parser)]
#[command(name = "kostant", version, about = "Principal sl(2) subalgebras, invariant forms and their verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    /// Record wall-clock runtimes (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Md,
}

#[derive(Args)]
struct GroupArgs {
    /// su, so, sp, spin7 or spin9.
    #[arg(long)]
    family: String,
    #[arg(long)]
    param: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Kostant decomposition of the adjoint representation.
    Decompose {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Gradient of a form-induced function at a Kostant component.
    Critical {
        #[command(flatten)]
        group: GroupArgs,
        /// 0-based component index, as listed by `decompose`.
        #[arg(long)]
        component: usize,
        /// cartan, euler, spin7, spin9, tr<k>, c<k> or p<k>; defaults to the
        /// component's characteristic-class form.
        #[arg(long)]
        form: Option<String>,
        #[arg(long, default_value_t = 1e-4)]
        h: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Monte Carlo average of the sphere integrand.
    Average {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Resultant proportionality and sign suites.
    ResultantCheck {
        /// su3, su4, su5, su6 or spin9.
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evidence table over all groups and components.
    Report {
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-4)]
        h: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Number of groups processed in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn group_of(g: &GroupArgs) -> CliResult<kostant_core::cases::Group> {
    parse_group(&g.family, g.param)
}

fn run(cli: &Cli) -> CliResult<Document> {
    let base = Settings { timings: cli.output.timings, ..Settings::default() };
    let suites = match &cli.command {
        Command::Decompose { group } => commands::decompose(group_of(group)?, &base)?,
        Command::Critical { group, component, form, h, tol, seed } => {
            let s = Settings { h: *h, tol: *tol, seed: *seed, ..base };
            vec![commands::critical(group_of(group)?, *component, form.as_deref(), &s)?]
        }
        Command::Average { group, samples, seed } => {
            let s = Settings { samples: *samples, seed: *seed, ..base };
            vec![commands::average(group_of(group)?, &s)?]
        }
        Command::ResultantCheck { case, samples, seed } => {
            let s = Settings { samples: *samples, seed: *seed, ..base };
            commands::resultant_check(parse_case(case)?, &s)?
        }
        Command::Report { samples, seed, h, tol, jobs } => {
            let s = Settings { samples: *samples, seed: *seed, h: *h, tol: *tol, ..base };
            commands::report(&s, *jobs)?
        }
    };
    Ok(Document::new(suites))
}

fn emit(cli: &Cli, doc: &Document) -> CliResult<()> {
    let format = match cli.output.format {
        OutFormat::Json => Format::Json,
        OutFormat::Csv => Format::Csv,
        OutFormat::Md => Format::Md,
    };
    let text = render(doc, format);
    match &cli.output.out {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&cli).and_then(|doc| emit(&cli, &doc).map(|_| doc));
    match result {
        Ok(doc) => ExitCode::from(if doc.pass() { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
