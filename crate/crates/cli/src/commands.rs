//! Command implementations. Each takes parsed arguments plus an output sink
//! so tests can drive them without spawning the binary.

use std::fmt::Display;
use std::io::Write;
use std::path::Path;

use emperor_core::sweep::{run_sweep, EngineVariant, SweepConfig};
use emperor_core::{
    BruteTable, EmperorError, EmperorSolver, Limits, NimTable, Outcome,
};
use thiserror::Error;

use crate::instance::{parse_complex, parse_instance};
use crate::report::{render_move, SolveReport};

/// Errors that reach the user. `Usage` covers bad input (exit 1), `Mismatch`
/// covers engine disagreement and failed verification (exit 2).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Mismatch(_) => 2,
        }
    }
}

pub(crate) fn usage<E: Display>(err: E) -> CliError {
    CliError::Usage(err.to_string())
}

pub(crate) fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|err| CliError::Usage(format!("cannot read {}: {err}", path.display())))
}

fn suggest_fast(err: EmperorError) -> CliError {
    match err {
        EmperorError::SizeLimitExceeded { .. } => {
            CliError::Usage(format!("{err}; use --engine fast for large instances"))
        }
        other => usage(other),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EngineChoice {
    Fast,
    Brute,
    Both,
}

impl EngineChoice {
    fn label(self) -> &'static str {
        match self {
            EngineChoice::Fast => "fast",
            EngineChoice::Brute => "brute",
            EngineChoice::Both => "both",
        }
    }
}

pub fn cmd_solve(
    path: &Path,
    engine: EngineChoice,
    want_move: bool,
    limits: &Limits,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let doc = parse_instance(&read_file(path)?).map_err(usage)?;
    let instance = doc.build(limits).map_err(usage)?;
    let start = instance.start();

    let component_outcomes: Vec<Outcome> = instance
        .components()
        .iter()
        .zip(&start)
        .map(|(graph, &x)| graph.outcome(x).map_err(usage))
        .collect::<Result<_, _>>()?;
    let pl_vector: Vec<u32> = instance
        .components()
        .iter()
        .zip(&start)
        .map(|(graph, &x)| graph.pl(x).map_err(usage))
        .collect::<Result<_, _>>()?;

    let mut fast = None;
    let mut agreement = None;
    let outcome = match engine {
        EngineChoice::Fast => {
            let solver = EmperorSolver::new(&instance, limits).map_err(usage)?;
            let o = solver.outcome(&start).map_err(usage)?;
            fast = Some(solver);
            o
        }
        EngineChoice::Brute => {
            let table = BruteTable::solve(&instance, limits).map_err(suggest_fast)?;
            table.outcome(&start).map_err(usage)?
        }
        EngineChoice::Both => {
            let solver = EmperorSolver::new(&instance, limits).map_err(usage)?;
            let fast_outcome = solver.outcome(&start).map_err(usage)?;
            let table = BruteTable::solve(&instance, limits).map_err(suggest_fast)?;
            let brute_outcome = table.outcome(&start).map_err(usage)?;
            agreement = Some(fast_outcome == brute_outcome);
            fast = Some(solver);
            brute_outcome
        }
    };

    let winning_move = if want_move && outcome == Outcome::N {
        let built;
        let solver = match fast.as_ref() {
            Some(solver) => solver,
            None => {
                built = EmperorSolver::new(&instance, limits).map_err(usage)?;
                &built
            }
        };
        solver
            .winning_move(&start)
            .map_err(usage)?
            .map(|mv| render_move(instance.complex(), &start, &mv))
    } else {
        None
    };

    let report = SolveReport {
        outcome,
        component_outcomes,
        pl_vector,
        engine: engine.label(),
        winning_move,
        agreement,
    };
    write!(out, "{}", report.render()).map_err(usage)?;

    if agreement == Some(false) {
        return Err(CliError::Mismatch(format!(
            "engines disagree at the start position {start:?}"
        )));
    }
    Ok(())
}

pub fn cmd_pset(
    path: &Path,
    bound: &[u32],
    limits: &Limits,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let doc = parse_complex(&read_file(path)?).map_err(usage)?;
    let complex = doc.to_complex().map_err(usage)?;
    let table = NimTable::solve(&complex, bound, limits).map_err(usage)?;
    for v in table.pset() {
        let parts: Vec<String> = v.iter().map(u32::to_string).collect();
        writeln!(out, "({})", parts.join(",")).map_err(usage)?;
    }
    Ok(())
}

pub fn cmd_pl(
    path: &Path,
    vertex: Option<usize>,
    limits: &Limits,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let doc = parse_instance(&read_file(path)?).map_err(usage)?;
    let instance = doc.build(limits).map_err(usage)?;
    let start = instance.start();
    let pl_vector: Vec<u32> = instance
        .components()
        .iter()
        .zip(&start)
        .map(|(graph, &x)| graph.pl(x).map_err(usage))
        .collect::<Result<_, _>>()?;
    match vertex {
        Some(i) if (1..=pl_vector.len()).contains(&i) => {
            writeln!(out, "{}", pl_vector[i - 1]).map_err(usage)?;
        }
        Some(i) => {
            return Err(CliError::Usage(format!(
                "vertex {i} out of range 1..={}",
                pl_vector.len()
            )));
        }
        None => {
            let parts: Vec<String> = pl_vector.iter().map(u32::to_string).collect();
            writeln!(out, "[{}]", parts.join(", ")).map_err(usage)?;
        }
    }
    Ok(())
}

pub fn cmd_verify(
    max_vertices: usize,
    max_size: Option<u64>,
    corrupt: bool,
    limits: &Limits,
    out: &mut impl Write,
) -> Result<(), CliError> {
    if !(1..=3).contains(&max_vertices) {
        return Err(CliError::Usage(format!(
            "--max-vertices must be between 1 and 3, got {max_vertices}"
        )));
    }
    let mut limits = *limits;
    if let Some(cells) = max_size {
        if cells > limits.max_cells {
            return Err(CliError::Usage(format!(
                "--max-size {cells} exceeds the cell cap {}",
                limits.max_cells
            )));
        }
        limits.max_cells = cells;
    }
    let config = SweepConfig {
        max_vertices,
        limits,
        ..SweepConfig::default()
    };
    let variant = if corrupt {
        EngineVariant::Inverted
    } else {
        EngineVariant::Standard
    };
    let report = run_sweep(&config, variant);
    for (name, check) in &report.sections {
        writeln!(
            out,
            "{name}: {} checks, {} mismatches",
            check.checked,
            check.mismatches()
        )
        .map_err(usage)?;
    }
    writeln!(
        out,
        "{} instances checked, {} mismatches",
        report.instances,
        report.mismatches()
    )
    .map_err(usage)?;
    if report.ok() {
        Ok(())
    } else {
        let detail = report
            .first_failure()
            .map(|text| format!(": {text}"))
            .unwrap_or_default();
        Err(CliError::Mismatch(format!(
            "verification found {} mismatches{detail}",
            report.mismatches()
        )))
    }
}
