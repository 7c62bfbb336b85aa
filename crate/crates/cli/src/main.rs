mod report;

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monosize::fuzz::{run_fuzz, FuzzConfig};
use monosize::random::InstanceBounds;
use monosize::{Error, Limits, MonomialIdeal};

use report::Report;

/// Lyubeznik size of monomial ideals, under polarization and deformation.
///
/// Ideals are written as `(x1^2*x2, x1*x3)`; decompositions as
/// `(x1^2,x2) & (x2,x3)`. INPUT is the text itself, `-` for stdin, or
/// `@path` to read a file.
#[derive(Debug, Parser)]
#[command(name = "monosize", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Ambient number of variables (default: largest index mentioned).
    #[arg(long, global = true)]
    vars: Option<usize>,

    /// Largest number of irreducible components an intermediate result may have.
    #[arg(long, global = true)]
    max_components: Option<usize>,

    /// Largest exponent accepted in input and in polarization.
    #[arg(long, global = true)]
    max_exponent: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct Input {
    /// Ideal or decomposition text, `-` for stdin, `@path` for a file.
    input: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Irredundant irreducible decomposition.
    Decompose(Input),
    /// Size of the ideal.
    Size {
        #[command(flatten)]
        input: Input,
        /// Also list every minimum cover of the associated primes.
        #[arg(long)]
        covers: bool,
    },
    /// Polarization and its variable layout.
    Polarize(Input),
    /// Top base of the power matrix.
    Topbase {
        #[command(flatten)]
        input: Input,
        /// Every top base reachable by varying tie choices.
        #[arg(long)]
        all: bool,
    },
    /// Predict whether size of the polarization equals size + c.
    PredictEq(Input),
    /// Prediction together with the computed sizes.
    VerifyEq(Input),
    /// Synthesize a generic deformation.
    Deform {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check genericity of the minimal generators.
    CheckGeneric {
        #[command(flatten)]
        input: Input,
        /// No two generators share a positive degree in any variable.
        #[arg(long)]
        strong: bool,
    },
    /// Size before and after a deformation.
    DeformSize {
        #[command(flatten)]
        input: Input,
        /// Shifts as a JSON array of arrays in canonical generator order;
        /// without it a generic deformation is synthesized from --seed.
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the property suite on seeded random ideals.
    Fuzz {
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
        #[arg(long = "max-exp", default_value_t = 3)]
        max_exp: u32,
    },
    /// Replay the built-in worked examples.
    Examples,
}

/// Failure categories and their exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Violation(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Violation(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Violation(m) | Failure::Cap(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_cap_exceeded() {
            Failure::Cap(e.to_string())
        } else if matches!(e, Error::Internal(_)) {
            Failure::Violation(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// `MONOSIZE_CAPS=components=N,exponent=N`, then command-line flags.
fn limits(cli: &Cli) -> Result<Limits, Failure> {
    let mut limits = Limits::default();
    if let Ok(caps) = std::env::var("MONOSIZE_CAPS") {
        for part in caps.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Failure::Usage(format!("MONOSIZE_CAPS: expected key=value, got {part:?}")))?;
            let bad = || Failure::Usage(format!("MONOSIZE_CAPS: {key} must be a positive integer"));
            match key.trim() {
                "components" => limits.max_components = value.trim().parse().map_err(|_| bad())?,
                "exponent" => limits.max_exponent = value.trim().parse().map_err(|_| bad())?,
                other => return Err(Failure::Usage(format!("MONOSIZE_CAPS: unknown cap {other:?}"))),
            }
        }
    }
    if let Some(c) = cli.max_components {
        limits.max_components = c;
    }
    if let Some(e) = cli.max_exponent {
        limits.max_exponent = e;
    }
    if limits.max_components == 0 || limits.max_exponent == 0 {
        return Err(Failure::Usage("caps must be positive".into()));
    }
    Ok(limits)
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(text)
    } else if let Some(path) = input.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))
    } else {
        Ok(input.to_string())
    }
}

fn parse(cli: &Cli, input: &Input, limits: &Limits) -> Result<MonomialIdeal, Failure> {
    let text = read_input(&input.input)?;
    let ideal = monosize::parse_ideal_with(&text, cli.vars, limits)?;
    ideal.ensure_proper()?;
    Ok(ideal)
}

fn parse_eps(text: &str) -> Result<monosize::DeformationVectors, Failure> {
    let shifts: Vec<Vec<u32>> =
        serde_json::from_str(text).map_err(|e| Failure::Usage(format!("--eps: {e}")))?;
    Ok(monosize::DeformationVectors { shifts })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let limits = limits(cli)?;
    match &cli.command {
        Command::Decompose(input) => report::decompose(&parse(cli, input, &limits)?, &limits),
        Command::Size { input, covers } => report::size(&parse(cli, input, &limits)?, *covers, &limits),
        Command::Polarize(input) => report::polarize(&parse(cli, input, &limits)?, &limits),
        Command::Topbase { input, all } => report::topbase(&parse(cli, input, &limits)?, *all, &limits),
        Command::PredictEq(input) => report::equality(&parse(cli, input, &limits)?, false, &limits),
        Command::VerifyEq(input) => report::equality(&parse(cli, input, &limits)?, true, &limits),
        Command::Deform { input, seed } => report::deform(&parse(cli, input, &limits)?, *seed),
        Command::CheckGeneric { input, strong } => {
            Ok(report::check_generic(&parse(cli, input, &limits)?, *strong))
        }
        Command::DeformSize { input, eps, seed } => {
            let ideal = parse(cli, input, &limits)?;
            let eps = match eps {
                Some(text) => Some(parse_eps(text)?),
                None => None,
            };
            report::deform_size(&ideal, eps, *seed, &limits)
        }
        Command::Fuzz { count, seed, max_n, max_gens, max_exp } => {
            if *count == 0 || *max_n == 0 || *max_gens == 0 {
                return Err(Failure::Usage("fuzz bounds and count must be positive".into()));
            }
            let config = FuzzConfig {
                seed: *seed,
                count: *count,
                bounds: InstanceBounds { max_n: *max_n, max_count: *max_gens, max_exponent: *max_exp },
                limits,
            };
            Ok(report::fuzz(run_fuzz(&config)?))
        }
        Command::Examples => Ok(report::examples(monosize::corpus::replay()?)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let text = match cli.format {
                Format::Json => report.json(),
                Format::Text => report.text(),
            };
            let mut out = io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            if !text.ends_with('\n') {
                let _ = out.write_all(b"\n");
            }
            match report.violation() {
                Some(reason) => {
                    eprintln!("violation: {reason}");
                    ExitCode::from(2)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
