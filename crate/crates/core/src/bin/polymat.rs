use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polymat::cli::{run, Command, Method, Options, PolyKind, EXIT_INPUT};

#[derive(Parser)]
#[command(
    name = "polymat",
    version,
    about = "Interior and exterior polynomials of integer polymatroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the rank axioms
    Validate(Common),
    /// List all bases
    Bases(Common),
    /// Interior and exterior polynomials
    Poly(PolyArgs),
    /// Flats, hyperplane and circuit classes, thresholds
    Structure(Common),
    /// Closed-form coefficients against enumeration
    Coeffs(CoeffArgs),
    /// Run the identity suite
    Verify(Common),
}

#[derive(clap::Args)]
struct Common {
    /// Input document
    file: PathBuf,
    /// Emit JSON
    #[arg(long)]
    machine: bool,
    /// Largest ground set to accept
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
}

#[derive(clap::Args)]
struct PolyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = KindArg::Both)]
    kind: KindArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
    method: MethodArg,
    /// Element (from 1) to expand at with --method recursion
    #[arg(long, value_name = "T")]
    element: Option<usize>,
}

#[derive(clap::Args)]
struct CoeffArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = KindArg::Both)]
    kind: KindArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Interior,
    Exterior,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Recursion,
}

impl From<KindArg> for PolyKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Interior => PolyKind::Interior,
            KindArg::Exterior => PolyKind::Exterior,
            KindArg::Both => PolyKind::Both,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let (command, common, opts) = match cli.command {
        Cmd::Validate(c) => (Command::Validate, c, Options::default()),
        Cmd::Bases(c) => (Command::Bases, c, Options::default()),
        Cmd::Structure(c) => (Command::Structure, c, Options::default()),
        Cmd::Verify(c) => (Command::Verify, c, Options::default()),
        Cmd::Poly(a) => (
            Command::Poly,
            a.common,
            Options {
                kind: a.kind.into(),
                method: match a.method {
                    MethodArg::Direct => Method::Direct,
                    MethodArg::Recursion => Method::Recursion,
                },
                element: a.element,
                ..Options::default()
            },
        ),
        Cmd::Coeffs(a) => (
            Command::Coeffs,
            a.common,
            Options {
                kind: a.kind.into(),
                ..Options::default()
            },
        ),
    };
    let opts = Options {
        machine: common.machine,
        max_n: common.max_n,
        ..opts
    };
    let text = match std::fs::read_to_string(&common.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", common.file.display());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let outcome = run(command, &text, &opts);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status)
}
