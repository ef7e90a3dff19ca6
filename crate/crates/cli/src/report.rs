//! Solve reports and the human-readable move rendering.

use emperor_core::{EmperorMove, Outcome, PositionId, SimplicialComplex, VertexMove};

/// What `solve` prints: overall outcome, per-component data, and optionally
/// the winning move and the engine-agreement verdict.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub outcome: Outcome,
    pub component_outcomes: Vec<Outcome>,
    pub pl_vector: Vec<u32>,
    pub engine: &'static str,
    pub winning_move: Option<String>,
    pub agreement: Option<bool>,
}

impl SolveReport {
    pub fn render(&self) -> String {
        let comps: Vec<String> = self.component_outcomes.iter().map(|o| o.to_string()).collect();
        let pls: Vec<String> = self.pl_vector.iter().map(u32::to_string).collect();
        let mut text = format!(
            "outcome: {}\nengine: {}\ncomponent outcomes: [{}]\npl vector: [{}]\n",
            self.outcome,
            self.engine,
            comps.join(", "),
            pls.join(", ")
        );
        if let Some(mv) = &self.winning_move {
            text.push_str(&format!("winning move: {mv}\n"));
        }
        if let Some(agree) = self.agreement {
            text.push_str(&format!("agreement: {agree}\n"));
        }
        text
    }
}

/// Face first, then one entry per vertex: "stay", "step a→b" for a single
/// move, or "path a→b→…→z" for a face-vertex chain.
pub fn render_move(
    complex: &SimplicialComplex,
    from: &[PositionId],
    mv: &EmperorMove,
) -> String {
    let names = complex.vertex_names();
    let parts: Vec<String> = mv
        .per_vertex
        .iter()
        .enumerate()
        .map(|(i, vm)| match vm {
            VertexMove::Unchanged => format!("{}: stay", names[i]),
            VertexMove::SingleStep(to) => format!("{}: step {}→{}", names[i], from[i], to),
            VertexMove::MultiStep(path) => {
                let mut chain = vec![from[i].to_string()];
                chain.extend(path.iter().map(u32::to_string));
                format!("{}: path {}", names[i], chain.join("→"))
            }
        })
        .collect();
    format!(
        "face {}: {}",
        complex.format_face(mv.face),
        parts.join(", ")
    )
}
