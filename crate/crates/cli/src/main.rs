use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sasakian_cli::{
    builtin_list, parse_analyses, parse_omega, run, Analysis, Format, RunConfig, Source, EXIT_INVALID,
};

/// Hard Lefschetz, Gysin Betti numbers, Sasakian obstructions and the formality
/// obstruction for circle bundles over 6-dimensional bases.
#[derive(Parser)]
#[command(name = "sasakian", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Poincare duality algebra axioms.
    Validate(InputArgs),
    /// Run the analysis pipeline.
    Analyze(AnalyzeArgs),
    /// List the shipped algebras.
    BuiltinList,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Args)]
struct InputArgs {
    /// Algebra file (JSON).
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    input: Option<PathBuf>,
    /// Shipped algebra, or a product of projective spaces such as cp1xcp2.
    #[arg(long)]
    builtin: Option<String>,
    /// Coefficients of omega on the degree-2 basis, e.g. 1,1,1 or 1/2,0.
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Comma-separated: validate, hard-lefschetz, gysin, obstructions, formality, massey, model.
    #[arg(long)]
    analyses: Option<String>,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INVALID as u8)
}

fn execute(args: &InputArgs, analyses: Vec<Analysis>) -> ExitCode {
    let source = match (&args.input, &args.builtin) {
        (Some(p), _) => Source::File(p.clone()),
        (None, Some(b)) => Source::Builtin(b.clone()),
        (None, None) => return usage_error("one of --input or --builtin is required"),
    };
    let omega = match args.omega.as_deref().map(parse_omega).transpose() {
        Ok(w) => w,
        Err(m) => return usage_error(&m),
    };
    let config = RunConfig {
        source,
        omega,
        analyses,
        format: match args.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Structured => Format::Structured,
        },
    };
    let outcome = run(&config);
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.rendered) {
                return usage_error(&format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{}", outcome.rendered),
    }
    if outcome.exit_code != 0 {
        if let Some(e) = outcome.report.get("error").and_then(|e| e.as_str()) {
            eprintln!("error: {e}");
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match cli.command {
        Command::BuiltinList => {
            print!("{}", builtin_list());
            ExitCode::SUCCESS
        }
        Command::Validate(args) => execute(&args, vec![Analysis::Validate]),
        Command::Analyze(args) => {
            let analyses = match args.analyses.as_deref() {
                None => Analysis::ALL.to_vec(),
                Some(list) => match parse_analyses(list) {
                    Ok(a) => a,
                    Err(m) => return usage_error(&m),
                },
            };
            execute(&args.input, analyses)
        }
    }
}
