use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lmalg::{emit_report, parse_document, parse_machine, render_document, run_check, run_construct, CliError, Format};

#[derive(Parser)]
#[command(
    name = "lmalg",
    version,
    about = "Check and construct Leibniz and Lie-Rinehart structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a checker on one entity of a definition document.
    Check {
        file: PathBuf,
        #[arg(long)]
        entity: String,
        /// Check kind; defaults to the natural check for the entity.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a construction recipe and emit the extended document.
    Construct {
        file: PathBuf,
        #[arg(long)]
        recipe: String,
        #[arg(long)]
        entity: String,
        /// Second input for binary recipes.
        #[arg(long)]
        with: Option<String>,
        /// Prefix for the names of constructed entities.
        #[arg(long)]
        name: Option<String>,
        /// Format of the report printed when a precondition fails.
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-render a machine report.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List check kinds and construction recipes.
    List,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Check {
            file,
            entity,
            kind,
            format,
            out,
        } => {
            let doc = parse_document(&read(&file)?)?;
            let r = run_check(&doc, &entity, kind.as_deref())?;
            write(out.as_deref(), &emit_report(&entity, &r, format))?;
            Ok(u8::from(!r.is_pass()))
        }
        Command::Construct {
            file,
            recipe,
            entity,
            with,
            name,
            format,
            out,
        } => {
            let doc = parse_document(&read(&file)?)?;
            match run_construct(&doc, &recipe, &entity, with.as_deref(), name.as_deref()) {
                Ok(c) => {
                    write(out.as_deref(), &render_document(&c.document))?;
                    Ok(0)
                }
                Err(CliError::Precondition(r)) => {
                    eprintln!("{recipe}: precondition failed");
                    print!("{}", emit_report(&entity, &r, format));
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Report { file, format, out } => {
            let (entity, r) = parse_machine(&read(&file)?).map_err(CliError::Usage)?;
            write(out.as_deref(), &emit_report(&entity, &r, format))?;
            Ok(u8::from(!r.is_pass()))
        }
        Command::List => {
            println!("check kinds:");
            for (k, d) in lmalg::check::CHECK_KINDS {
                println!("  {k:<24}{d}");
            }
            println!("recipes:");
            for (k, d) in lmalg::construct::RECIPES {
                println!("  {k:<24}{d}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Precondition(r)) => {
            eprintln!("precondition failed");
            print!("{}", emit_report("", &r, Format::Human));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("lmalg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
