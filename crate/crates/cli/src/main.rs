use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use emperor_cli::commands::{self, CliError, EngineChoice};
use emperor_cli::play;
use emperor_core::Limits;

#[derive(Parser)]
#[command(
    name = "emperor",
    version,
    about = "Solve impartial games combined over a simplicial complex"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Subcommand)]
enum Command {
    /// Solve an instance file and report the outcome at its start position
    Solve {
        file: PathBuf,
        /// Engine to use; `both` cross-checks and fails on disagreement
        #[arg(long, value_enum, default_value_t = EngineChoice::Fast)]
        engine: EngineChoice,
        /// Also print a winning move when the position is an N-position
        #[arg(long = "move")]
        show_move: bool,
    },
    /// List the nim P-positions of a complex inside a bounding box
    Pset {
        complex_file: PathBuf,
        /// Per-vertex bounds, comma separated, e.g. 3,3,3
        #[arg(long, value_delimiter = ',', required = true)]
        bound: Vec<u32>,
    },
    /// Print P-position lengths at the start of an instance
    Pl {
        file: PathBuf,
        /// 1-based vertex index; omitted, the whole vector is printed
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Cross-check the fast engine against brute force on generated instances
    Verify {
        /// Largest vertex count to sweep (1 to 3)
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        /// Lower the dense-table cell cap for this run
        #[arg(long)]
        max_size: Option<u64>,
        /// Run a deliberately broken engine to prove mismatches are caught
        #[arg(long, hide = true)]
        self_test_corrupt: bool,
    },
    /// Play against the engine from an instance's start position
    Play { file: PathBuf },
}

fn limits_from_env() -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    if let Ok(text) = std::env::var("EMPEROR_MAX_CELLS") {
        let cells: u64 = text.trim().parse().map_err(|_| {
            CliError::Usage(format!("EMPEROR_MAX_CELLS must be an integer, got {text:?}"))
        })?;
        limits.max_cells = cells;
    }
    Ok(limits)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let limits = limits_from_env()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Solve {
            file,
            engine,
            show_move,
        } => commands::cmd_solve(&file, engine, show_move, &limits, &mut out),
        Command::Pset {
            complex_file,
            bound,
        } => commands::cmd_pset(&complex_file, &bound, &limits, &mut out),
        Command::Pl { file, vertex } => commands::cmd_pl(&file, vertex, &limits, &mut out),
        Command::Verify {
            max_vertices,
            max_size,
            self_test_corrupt,
        } => commands::cmd_verify(max_vertices, max_size, self_test_corrupt, &limits, &mut out),
        Command::Play { file } => {
            let stdin = io::stdin();
            let mut input = stdin.lock();
            play::cmd_play(&file, &limits, &mut input, &mut out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
