//! `tlsl2`: Kauffman brackets, Jones-Wenzl tables, hom dimensions and
//! equivalence checks from the command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification fails.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tlsl2_core::Mode;
use tlsl2_diagrams::turaev::ObjectSeq;

#[derive(Parser)]
#[command(
    name = "tlsl2",
    version,
    about = "Exact Temperley-Lieb and U_q(sl_2) computations"
)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Options {
    /// `generic` or `root:<r>` with r >= 3.
    #[arg(long, global = true, default_value = "generic")]
    mode: Mode,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Kauffman bracket of a closed word file (`-` reads stdin).
    Bracket { word: PathBuf },
    /// Coefficient table of the Jones-Wenzl projector f_k.
    Jw { k: usize },
    /// Hom dimensions on both sides and the rank of the functor matrix.
    Homdim {
        #[arg(value_parser = commands::parse_object)]
        source: ObjectSeq,
        #[arg(value_parser = commands::parse_object)]
        target: ObjectSeq,
    },
    /// Runs a batch file of `s ; t ; mode` lines.
    Verify { batch: PathBuf },
    /// Gram matrix of the hom pairing, or `--check` a saved report.
    Gram {
        #[arg(required_unless_present = "check", value_parser = commands::parse_object)]
        source: Option<ObjectSeq>,
        #[arg(required_unless_present = "check", value_parser = commands::parse_object)]
        target: Option<ObjectSeq>,
        #[arg(long, conflicts_with_all = ["source", "target"])]
        check: Option<PathBuf>,
    },
}

/// What a command produced: its rendered output and whether every check held.
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let opts = &cli.opts;
    match cli.command {
        Command::Bracket { word } => commands::bracket(opts, &word),
        Command::Jw { k } => commands::jw(opts, k),
        Command::Homdim { source, target } => commands::homdim(opts, &source, &target),
        Command::Verify { batch } => commands::verify(opts, &batch),
        Command::Gram {
            source,
            target,
            check,
        } => match check {
            Some(path) => commands::gram_check(opts, &path),
            None => commands::gram(opts, &source.unwrap(), &target.unwrap()),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let out = cli.opts.out.clone();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let written = match &out {
        Some(path) => std::fs::write(path, &outcome.output)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{}", outcome.output);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
