use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hopfcoh::cohomology::cap_from_env;
use hopfcoh::commands::{self, ComputeArgs, Output};
use hopfcoh::fixtures::{fixture_workspace, FIXTURE_NAMES};
use hopfcoh::suite::SuiteOptions;
use hopfcoh::workspace::Workspace;
use hopfcoh::Error;

/// Exact computations with finite-dimensional Hopf algebras, comodules and relative Hopf modules.
#[derive(Parser)]
#[command(name = "hopfcoh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load a workspace file and report the axioms of every object.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compute one construction on a workspace object.
    Compute(ComputeCmd),
    /// Run the theorem suite on workspace files, or on the shipped fixtures by default.
    Check {
        /// `all`, a group name, or a single check name.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, num_args = 1..)]
        workspace: Vec<PathBuf>,
        #[arg(long, num_args = 1..)]
        fixture: Vec<String>,
        #[arg(long, default_value_t = 3)]
        pmax: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// List the checks and their groups instead of running them.
        #[arg(long)]
        list: bool,
    },
    /// Print or write a shipped fixture workspace.
    Fixtures {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ComputeCmd {
    /// coinvariants, cohomology, ext, isotypic, integrals, decompose or smash.
    what: String,
    #[arg(long)]
    workspace: Option<PathBuf>,
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long)]
    object: Option<String>,
    #[arg(long)]
    source: Option<String>,
    #[arg(long)]
    target: Option<String>,
    #[arg(long)]
    hopf: Option<String>,
    #[arg(long, default_value_t = 3)]
    qmax: usize,
    #[arg(long)]
    json: bool,
}

fn emit(out: &Output, json: bool) {
    if json {
        print!("{}", out.json_string());
    } else {
        print!("{}", out.text);
    }
}

fn load_one(workspace: &Option<PathBuf>, fixture: &Option<String>) -> Result<Workspace, Error> {
    match (workspace, fixture) {
        (Some(path), None) => Workspace::load(path),
        (None, Some(name)) => fixture_workspace(name),
        _ => Err(Error::Parse("give exactly one of --workspace or --fixture".into())),
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Validate { file, json } => {
            let ws = Workspace::load(&file)?;
            emit(&commands::validate(&ws), json);
            Ok(0)
        }
        Command::Compute(c) => {
            let ws = load_one(&c.workspace, &c.fixture)?;
            let args = ComputeArgs {
                object: c.object,
                source: c.source,
                target: c.target,
                hopf: c.hopf,
                qmax: c.qmax,
                cap: cap_from_env(),
            };
            emit(&commands::compute(&ws, &c.what, &args)?, c.json);
            Ok(0)
        }
        Command::Check { suite, workspace, fixture, pmax, seed, json, list } => {
            if list {
                for check in hopfcoh::suite::select(&suite)? {
                    println!("{:<36} {:<20} {}", check.name, check.group, check.summary);
                }
                return Ok(0);
            }
            let mut workspaces = Vec::new();
            for path in &workspace {
                workspaces.push((path.display().to_string(), Workspace::load_unvalidated(path)?));
            }
            let names: Vec<String> = if fixture.is_empty() && workspace.is_empty() {
                FIXTURE_NAMES.iter().map(|s| s.to_string()).collect()
            } else {
                fixture
            };
            for name in names {
                let ws = fixture_workspace(&name)?;
                workspaces.push((name, ws));
            }
            let opts = SuiteOptions { pmax, cap: cap_from_env(), seed };
            let (report, out) = commands::check(&workspaces, &suite, &opts)?;
            emit(&out, json);
            Ok(if report.all_passed() { 0 } else { 2 })
        }
        Command::Fixtures { name, emit: path } => {
            let Some(name) = name else {
                emit(&commands::fixture_list(), false);
                return Ok(0);
            };
            let text = fixture_workspace(&name)?.to_json();
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
