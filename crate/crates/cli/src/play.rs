//! Interactive play against the engine. The human moves first; the engine
//! answers with a winning move whenever one exists, so from an N start the
//! engine always makes the last move. Input and output are abstract streams
//! so tests can script whole sessions.

use std::io::{BufRead, Write};
use std::path::Path;

use emperor_core::{
    EmperorInstance, EmperorMove, EmperorSolver, Limits, PositionId, VertexMove,
};

use crate::commands::{read_file, usage, CliError};
use crate::instance::parse_instance;
use crate::report::render_move;

pub fn cmd_play(
    path: &Path,
    limits: &Limits,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let doc = parse_instance(&read_file(path)?).map_err(usage)?;
    let instance = doc.build(limits).map_err(usage)?;
    let cells: u64 = instance
        .components()
        .iter()
        .map(|graph| graph.position_count() as u64)
        .try_fold(1u64, |acc, n| acc.checked_mul(n))
        .unwrap_or(u64::MAX);
    if cells > limits.max_cells {
        return Err(CliError::Usage(format!(
            "instance has {cells} product positions, above the cap {}; pick a smaller one",
            limits.max_cells
        )));
    }
    let solver = EmperorSolver::new(&instance, limits).map_err(usage)?;
    let complex = instance.complex();

    let faces: Vec<String> = complex
        .maximal_faces()
        .iter()
        .map(|&f| complex.format_face(f))
        .collect();
    writeln!(out, "complex: {}", faces.join(" ")).map_err(usage)?;
    for (i, spec) in doc.components.iter().enumerate() {
        writeln!(
            out,
            "{}: {}",
            complex.vertex_names()[i],
            spec.to_ruleset().label()
        )
        .map_err(usage)?;
    }
    writeln!(
        out,
        "you move first: pick a face, then a path for each vertex (blank = stay)"
    )
    .map_err(usage)?;

    let mut position = instance.start();
    let mut engine_moved_last = false;
    loop {
        writeln!(out, "position: {:?}", position).map_err(usage)?;
        if instance.is_terminal(&position).map_err(usage)? {
            if engine_moved_last {
                writeln!(out, "no moves remain; the engine made the last move and wins").map_err(usage)?;
            } else {
                writeln!(out, "the start position is terminal; nobody can move").map_err(usage)?;
            }
            return Ok(());
        }

        let Some(next) = read_human_move(&instance, &position, input, out)? else {
            writeln!(out, "session closed").map_err(usage)?;
            return Ok(());
        };
        position = next;
        writeln!(out, "you moved to {:?}", position).map_err(usage)?;

        if instance.is_terminal(&position).map_err(usage)? {
            writeln!(out, "no moves remain; you made the last move and win").map_err(usage)?;
            return Ok(());
        }
        match solver.winning_move(&position).map_err(usage)? {
            Some(mv) => {
                writeln!(out, "engine plays {}", render_move(complex, &position, &mv))
                    .map_err(usage)?;
                position = instance.apply_move(&position, &mv).map_err(usage)?;
            }
            None => {
                let moves = instance.moves(&position, limits).map_err(usage)?;
                position = moves[0].clone();
                writeln!(out, "engine moves to {:?}", position).map_err(usage)?;
            }
        }
        engine_moved_last = true;
    }
}

/// Prompts until a legal move is entered, returning the resulting position.
/// `None` means the input stream ended.
fn read_human_move(
    instance: &EmperorInstance,
    position: &[PositionId],
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<Option<EmperorPositionOwned>, CliError> {
    let complex = instance.complex();
    let names = complex.vertex_names();
    'retry: loop {
        let Some(line) = prompt(input, out, "face> ")? else {
            return Ok(None);
        };
        let picked: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if picked.is_empty() {
            writeln!(out, "enter at least one vertex name").map_err(usage)?;
            continue;
        }
        let face = match complex.face_from_names(&picked) {
            Ok(face) => face,
            Err(err) => {
                writeln!(out, "{err}; try again").map_err(usage)?;
                continue;
            }
        };
        if !complex.is_face(face) {
            writeln!(out, "{} is not a face of Δ; try again", complex.format_face(face))
                .map_err(usage)?;
            continue;
        }

        let mut per_vertex = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let role = if face.contains(i) { " (on face)" } else { "" };
            let text = format!("{name} at {}{role}> ", position[i]);
            let Some(line) = prompt(input, out, &text)? else {
                return Ok(None);
            };
            if line.is_empty() {
                per_vertex.push(VertexMove::Unchanged);
                continue;
            }
            let mut path = Vec::new();
            for token in line
                .replace("->", " ")
                .replace('\u{2192}', " ")
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
            {
                match token.parse::<PositionId>() {
                    Ok(id) => path.push(id),
                    Err(_) => {
                        writeln!(out, "could not read {token:?}; enter position ids").map_err(usage)?;
                        continue 'retry;
                    }
                }
            }
            let vm = if face.contains(i) || path.len() > 1 {
                VertexMove::MultiStep(path)
            } else {
                VertexMove::SingleStep(path[0])
            };
            per_vertex.push(vm);
        }

        let mv = EmperorMove { face, per_vertex };
        match instance.apply_move(position, &mv) {
            Ok(next) => return Ok(Some(next)),
            Err(err) => {
                writeln!(out, "{err}; try again").map_err(usage)?;
            }
        }
    }
}

type EmperorPositionOwned = Vec<PositionId>;

fn prompt(
    input: &mut impl BufRead,
    out: &mut impl Write,
    text: &str,
) -> Result<Option<String>, CliError> {
    write!(out, "{text}").map_err(usage)?;
    out.flush().map_err(usage)?;
    let mut line = String::new();
    let read = input.read_line(&mut line).map_err(usage)?;
    if read == 0 {
        Ok(None)
    } else {
        Ok(Some(line.trim().to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(contents: &str) -> tempfile::NamedTempFile {
        let mut file = tempfile::NamedTempFile::new().expect("temp file");
        file.write_all(contents.as_bytes()).expect("write");
        file
    }

    fn run_session(instance_json: &str, script: &str) -> (String, Result<(), CliError>) {
        let file = write_temp(instance_json);
        let mut input = script.as_bytes();
        let mut out = Vec::new();
        let result = cmd_play(file.path(), &Limits::default(), &mut input, &mut out);
        (String::from_utf8(out).unwrap(), result)
    }

    const TWO_HEAPS: &str = r#"{
        "complex": {"vertices": ["v1", "v2"], "maximal_faces": [["v1"], ["v2"]]},
        "components": [
            {"kind": "nim_heap", "size": 1},
            {"kind": "nim_heap", "size": 1}
        ]
    }"#;

    #[test]
    fn engine_answers_and_makes_the_last_move() {
        // (1,1) is a P-position of the discrete sum, so after the human takes
        // one heap the engine takes the other and wins.
        let script = "v1\n0\n\n";
        let (text, result) = run_session(TWO_HEAPS, script);
        result.expect("session");
        assert!(text.contains("you moved to [0, 1]"), "{text}");
        assert!(text.contains("v2: step 1\u{2192}0"), "{text}");
        assert!(
            text.contains("the engine made the last move and wins"),
            "{text}"
        );
    }

    #[test]
    fn non_face_is_rejected_with_a_reprompt() {
        let script = "v1 v2\nv1\n0\n\n";
        let (text, result) = run_session(TWO_HEAPS, script);
        result.expect("session");
        assert!(text.contains("not a face of Δ"), "{text}");
        assert!(text.contains("engine made the last move"), "{text}");
    }

    #[test]
    fn off_face_vertex_may_only_step_once() {
        let ladder = r#"{
            "complex": {"vertices": ["v1", "v2"], "maximal_faces": [["v1"], ["v2"]]},
            "components": [
                {"kind": "subtraction", "subtract": [1], "start": 2},
                {"kind": "subtraction", "subtract": [1], "start": 2}
            ]
        }"#;
        // First attempt moves v2 (off the chosen face) two steps; rejected.
        let script = "v1\n1\n1 0\nv1\n1\n\n\n";
        let (text, result) = run_session(ladder, script);
        result.expect("session");
        assert!(text.contains("at most one move"), "{text}");
        assert!(text.contains("you moved to [1, 2]"), "{text}");
    }

    #[test]
    fn eof_mid_session_closes_gracefully() {
        let (text, result) = run_session(TWO_HEAPS, "v1\n");
        result.expect("session");
        assert!(text.contains("session closed"), "{text}");
    }

    #[test]
    fn terminal_start_ends_immediately() {
        let zero = r#"{
            "complex": {"vertices": ["v1"], "maximal_faces": [["v1"]]},
            "components": [{"kind": "nim_heap", "size": 0}]
        }"#;
        let (text, result) = run_session(zero, "");
        result.expect("session");
        assert!(text.contains("nobody can move"), "{text}");
    }

    #[test]
    fn oversized_instance_is_refused_up_front() {
        let file = write_temp(TWO_HEAPS);
        let mut input = "".as_bytes();
        let mut out = Vec::new();
        let limits = Limits::with_max_cells(1);
        let err = cmd_play(file.path(), &limits, &mut input, &mut out).expect_err("cap");
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("cap"), "{err}");
    }
}
