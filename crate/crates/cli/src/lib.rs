//! The `diminish` command line: apply diminishers to instance files, verify
//! them against exhaustive oracles, solve, report parameters and drive the
//! kernelization loops.
//!
//! The binary is a thin wrapper around [`run`], which writes every report
//! through one [`report::Emitter`] so output is deterministic and can be
//! captured in tests.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

pub mod commands;
pub mod error;
pub mod mutants;
pub mod registry;
pub mod report;

pub use error::{exit, CliError, CliResult};
use registry::Registered;
use report::{Emitter, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Apply the problem's diminisher `--rounds` times.
    Diminish,
    /// Check the diminisher on `--trials` random instances.
    Verify,
    /// Decide the instance with the exact oracle.
    Solve,
    /// Print the parameter, or graph widths with `--which`.
    Param,
    /// Run the diminish/kernelize loop (`--which strict|strong`).
    Loop,
    /// Shrink the parameter with the strong diminisher, then solve.
    Accelerate,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "diminish", version, about = "Apply, verify and loop parameter diminishers")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Problem name, e.g. clique_cw, mc_path, tst, ntm_sigma, setcover.
    #[arg(long)]
    pub problem: Option<String>,
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Final instance for `diminish`, minimized counterexample for `verify`.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub rounds: u32,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Generator cap for `verify`; a hard input cap for every other command.
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_k: Option<u64>,
    /// Width for `param` (cutwidth, treewidth, bandwidth, max_degree or
    /// all), loop flavor for `loop` (strict or strong).
    #[arg(long)]
    pub which: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

macro_rules! on_target {
    ($reg:expr, $t:ident => $body:expr) => {
        match $reg {
            Registered::Graph($t) => $body,
            Registered::Ntm($t) => $body,
            Registered::Set($t) => $body,
            Registered::Unary($t) => $body,
        }
    };
}

fn lookup(cli: &Cli) -> CliResult<Registered> {
    let name = cli
        .problem
        .as_deref()
        .ok_or_else(|| CliError::usage("this command needs --problem <name>"))?;
    Ok(Registered::lookup(name)?)
}

/// Execute one parsed command line, returning the exit code on success.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    let mut em = Emitter::new(cli.format, out);
    let em = &mut em;
    match cli.command {
        Command::Diminish => on_target!(lookup(cli)?, t => commands::diminish(&t, cli, em)),
        Command::Verify => on_target!(lookup(cli)?, t => commands::verify(&t, cli, em)),
        Command::Solve => on_target!(lookup(cli)?, t => commands::solve(&t, cli, em)),
        Command::Accelerate => on_target!(lookup(cli)?, t => commands::accelerate(&t, cli, em)),
        Command::Param => match &cli.which {
            Some(which) => commands::widths(which, cli, em),
            None => on_target!(lookup(cli)?, t => commands::param(&t, cli, em)),
        },
        Command::Loop => match lookup(cli)? {
            Registered::Unary(t) => commands::kernel_loop(&t, cli, em),
            _ => Err(CliError::usage(
                "loop needs a problem with both a diminisher and a strict kernel; only unary_threshold has one",
            )),
        },
    }
}

/// Parse `args` (including the program name) and run, writing reports to
/// `out` and diagnostics to `err`.
pub fn main_with<I, A>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { exit::INPUT } else { exit::OK };
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
