use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use parabolic_cli::{render, run_grading, run_h2, run_twistor, CliError, Format, JobSpec};

#[derive(Parser)]
#[command(
    name = "parabolic",
    version,
    about = "Gradings, harmonic curvature and twistor obstructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grading of g by a crossed node set.
    Grading {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        crossed: Vec<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Harmonic components of the chain space in one degree.
    H2 {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        crossed: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Twistor verdicts for a nested pair of crossed node sets.
    Twistor {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        crossed_q: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        crossed_p: Vec<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct AlgebraArgs {
    #[arg(long = "type")]
    letter: char,
    #[arg(long)]
    rank: usize,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn spec(alg: &AlgebraArgs, crossed: &[usize], out: &OutputArgs) -> JobSpec {
    let mut s = JobSpec::new(alg.letter.to_ascii_uppercase(), alg.rank, crossed);
    s.format = match out.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    s.output_path = out.out.clone();
    s
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("PARABOLIC_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("PARABOLIC_THREADS must be a positive integer, got {v:?}")))?;
    if n == 0 {
        return Err(CliError::Usage("PARABOLIC_THREADS must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    let (job, report) = match &cli.command {
        Command::Grading { alg, crossed, out } => {
            let job = spec(alg, crossed, out);
            let r = run_grading(&job)?;
            (job, r)
        }
        Command::H2 {
            alg,
            crossed,
            degree,
            out,
        } => {
            let mut job = spec(alg, crossed, out);
            job.degree = *degree;
            let r = run_h2(&job)?;
            (job, r)
        }
        Command::Twistor {
            alg,
            crossed_q,
            crossed_p,
            out,
        } => {
            let mut job = spec(alg, crossed_q, out);
            job.crossed_p = Some(crossed_p.clone());
            let r = run_twistor(&job)?;
            (job, r)
        }
    };
    let text = render(&report, job.format)?;
    match &job.output_path {
        Some(path) => std::fs::write(path, &text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if report.twistor.as_ref().is_some_and(|t| !t.checks_hold()) {
        return Err(CliError::Internal(
            "a twistor consistency check failed, see the report".into(),
        ));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("parabolic: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
