use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

mod commands;
mod error;
mod input;
mod output;

use error::CliError;

/// Logarithmic vector fields, Fitting ideals and generation criteria.
#[derive(Parser, Debug)]
#[command(name = "derlog", version)]
struct Cli {
    /// Emit a single canonical JSON document.
    #[arg(long, global = true)]
    json: bool,
    /// Allow long-running examples.
    #[arg(long, global = true)]
    long: bool,
    /// Abort with exit code 3 after this many seconds.
    #[arg(long, global = true, value_name = "SECONDS")]
    timeout: Option<f64>,
    /// Record wall-clock time in the report (makes JSON output vary).
    #[arg(long, global = true)]
    timings: bool,
    /// Read ring, polynomials, fields, ideals and components from a file.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Objects {
    /// Comma separated variable names.
    #[arg(long)]
    pub ring: Option<String>,
    /// A polynomial, or the name of one from the input file.
    #[arg(long)]
    pub f: Option<String>,
    /// Comma separated generators, or the name of an ideal from the input file.
    #[arg(long)]
    pub ideal: Option<String>,
    /// Vector fields such as `x*d/dx`, or names of fields or modules.
    #[arg(long, num_args = 1..)]
    pub fields: Vec<String>,
    /// A component `<name> = <generators>, dim <d>`; repeatable.
    #[arg(long = "component")]
    pub components: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generators of the module of logarithmic vector fields of --f or --ideal.
    Derlog(Objects),
    /// Fitting ideals of --fields (or of Derlog of --f / --ideal).
    Fitting {
        #[command(flatten)]
        obj: Objects,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Upper bounds from components; with a module, also checks them.
    Bound {
        #[command(flatten)]
        obj: Objects,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Saito's criterion for n fields and a reduced --f.
    CheckSaito(Objects),
    /// Saito's criterion from brackets and a reduced determinant.
    CheckSaito2(Objects),
    /// Generation criterion for the coordinate subspace of dimension --dim.
    CheckSmooth {
        #[command(flatten)]
        obj: Objects,
        #[arg(long)]
        dim: usize,
        /// Comma separated rational coordinates; the origin by default.
        #[arg(long)]
        point: Option<String>,
    },
    /// Component condition for every given component.
    CheckComponent(Objects),
    /// Hypotheses of the generalized Saito criterion.
    CheckGeneralized {
        #[command(flatten)]
        obj: Objects,
        /// Irreducible factors of --f; repeatable.
        #[arg(long = "factor")]
        factors: Vec<String>,
    },
    /// Linear free divisor check for n linear fields.
    CheckLinearFd(Objects),
    /// Run a built-in example against its expectations.
    Example { name: String },
    /// List the built-in examples.
    ListExamples,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Derlog(_) => "derlog",
            Command::Fitting { .. } => "fitting",
            Command::Bound { .. } => "bound",
            Command::CheckSaito(_) => "check-saito",
            Command::CheckSaito2(_) => "check-saito2",
            Command::CheckSmooth { .. } => "check-smooth",
            Command::CheckComponent(_) => "check-component",
            Command::CheckGeneralized { .. } => "check-generalized",
            Command::CheckLinearFd(_) => "check-linear-fd",
            Command::Example { .. } => "example",
            Command::ListExamples => "list-examples",
        }
    }
}

fn run(cli: Cli, argv: Vec<String>) -> Result<(String, u8), CliError> {
    let source = match &cli.input {
        Some(path) => Some(std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?),
        None => None,
    };
    let doc = match &source {
        Some(text) => input::InputDoc::parse(text)?,
        None => input::InputDoc::default(),
    };
    let start = Instant::now();
    let report = commands::execute(&cli.command, &doc, cli.long)?;
    let elapsed = cli.timings.then(|| start.elapsed());
    let hash = output::input_hash(&argv, source.as_deref());
    let text = if cli.json {
        output::json(cli.command.name(), &hash, &report, elapsed)
    } else {
        report.to_string()
    };
    let code = if report.is_pass() { 0 } else { 1 };
    Ok((text, code))
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let timeout = cli.timeout;
    let (tx, rx) = mpsc::channel();
    std::thread::Builder::new()
        .stack_size(64 << 20)
        .spawn(move || {
            let _ = tx.send(run(cli, argv));
        })
        .expect("spawn worker");
    let outcome = match timeout {
        Some(secs) => match rx.recv_timeout(Duration::from_secs_f64(secs.max(0.0))) {
            Ok(r) => r,
            Err(_) => {
                eprintln!("error: timed out after {secs} s");
                return ExitCode::from(3);
            }
        },
        None => rx.recv().expect("worker finished"),
    };
    match outcome {
        Ok((text, code)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
