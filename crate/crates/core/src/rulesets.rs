//! Constructors for the component games placed on the complex's vertices.

use crate::game::{GameError, GameGraph, PositionId};
use crate::Limits;

/// A buildable description of one component game.
///
/// This is the unit of the instance file format; the CLI layer owns the
/// concrete serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RulesetSpec {
    NimHeap {
        size: u32,
    },
    MultiNim {
        heaps: Vec<u32>,
    },
    Subtraction {
        subtract: Vec<u32>,
        start: u32,
    },
    Explicit {
        positions: u32,
        edges: Vec<(u32, u32)>,
        start: u32,
    },
}

impl RulesetSpec {
    /// Builds the component graph, enforcing the per-graph position cap.
    pub fn build(&self, limits: &Limits) -> Result<GameGraph, GameError> {
        let cap = limits.max_graph_positions;
        let guard = |count: u64| {
            if count > cap {
                Err(GameError::SizeLimitExceeded {
                    requested: count,
                    cap,
                })
            } else {
                Ok(())
            }
        };
        match self {
            RulesetSpec::NimHeap { size } => {
                guard(*size as u64 + 1)?;
                Ok(nim_heap(*size))
            }
            RulesetSpec::MultiNim { heaps } => multi_nim(heaps, limits),
            RulesetSpec::Subtraction { subtract, start } => {
                guard(*start as u64 + 1)?;
                subtraction_game(subtract, *start)
            }
            RulesetSpec::Explicit {
                positions,
                edges,
                start,
            } => {
                guard(*positions as u64)?;
                explicit_game(*positions, edges, *start)
            }
        }
    }

    /// Compact human-readable label, used in reports and counterexamples.
    pub fn label(&self) -> String {
        match self {
            RulesetSpec::NimHeap { size } => format!("nim_heap({size})"),
            RulesetSpec::MultiNim { heaps } => {
                let inner: Vec<String> = heaps.iter().map(u32::to_string).collect();
                format!("multi_nim({})", inner.join(","))
            }
            RulesetSpec::Subtraction { subtract, start } => {
                let inner: Vec<String> = subtract.iter().map(u32::to_string).collect();
                format!("subtraction({{{}}},{})", inner.join(","), start)
            }
            RulesetSpec::Explicit { positions, .. } => {
                format!("explicit({positions} positions)")
            }
        }
    }
}

/// Single nim heap of `n` stones: positions `0..=n`, a move removes any
/// positive number of stones, start is `n`.
pub fn nim_heap(n: u32) -> GameGraph {
    let count = n as usize + 1;
    let mut options: Vec<Vec<PositionId>> = Vec::with_capacity(count);
    let mut predecessors: Vec<Vec<PositionId>> = vec![Vec::new(); count];
    for k in 0..=n {
        options.push((0..k).rev().collect());
        for j in 0..k {
            predecessors[j as usize].push(k);
        }
    }
    GameGraph::from_adjacency(options, predecessors, n).expect("nim heap graph is acyclic")
}

/// Whole multi-heap nim packaged as one component: positions are all stone
/// vectors componentwise at most `heaps`, a move lowers exactly one
/// coordinate. Position ids are the mixed-radix encoding of the vector with
/// the first coordinate most significant.
pub fn multi_nim(heaps: &[u32], limits: &Limits) -> Result<GameGraph, GameError> {
    let mut total: u64 = 1;
    for &h in heaps {
        total = total.saturating_mul(h as u64 + 1);
    }
    if total > limits.max_graph_positions {
        return Err(GameError::SizeLimitExceeded {
            requested: total,
            cap: limits.max_graph_positions,
        });
    }
    let total = total as u32;

    // weight of coordinate i in the mixed-radix encoding
    let mut weights = vec![1u32; heaps.len()];
    for i in (0..heaps.len().saturating_sub(1)).rev() {
        weights[i] = weights[i + 1] * (heaps[i + 1] + 1);
    }

    let mut options: Vec<Vec<PositionId>> = Vec::with_capacity(total as usize);
    let mut predecessors: Vec<Vec<PositionId>> = vec![Vec::new(); total as usize];
    let mut v = vec![0u32; heaps.len()];
    for id in 0..total {
        let mut opts = Vec::new();
        for (i, &vi) in v.iter().enumerate() {
            for taken in 1..=vi {
                opts.push(id - taken * weights[i]);
            }
        }
        for &o in &opts {
            predecessors[o as usize].push(id);
        }
        options.push(opts);
        // odometer step to the next vector in lexicographic order
        for i in (0..heaps.len()).rev() {
            if v[i] < heaps[i] {
                v[i] += 1;
                break;
            }
            v[i] = 0;
        }
    }
    GameGraph::from_adjacency(options, predecessors, total - 1)
}

/// Mixed-radix id of a stone vector in the `multi_nim(heaps)` graph.
pub fn multi_nim_id(heaps: &[u32], v: &[u32]) -> Option<PositionId> {
    if v.len() != heaps.len() {
        return None;
    }
    let mut id: u32 = 0;
    for (&h, &x) in heaps.iter().zip(v) {
        if x > h {
            return None;
        }
        id = id * (h + 1) + x;
    }
    Some(id)
}

/// Inverse of [`multi_nim_id`].
pub fn multi_nim_vector(heaps: &[u32], mut id: PositionId) -> Vec<u32> {
    let mut v = vec![0u32; heaps.len()];
    for i in (0..heaps.len()).rev() {
        let radix = heaps[i] + 1;
        v[i] = id % radix;
        id /= radix;
    }
    v
}

/// Subtraction game: from `k`, a move removes some `s` in the subtraction
/// set with `s <= k`. Positions with no legal subtraction are terminal.
pub fn subtraction_game(subtract: &[u32], start: u32) -> Result<GameGraph, GameError> {
    if subtract.is_empty() {
        return Err(GameError::EmptySubtractionSet);
    }
    if subtract.contains(&0) {
        return Err(GameError::ZeroSubtraction);
    }
    let mut set: Vec<u32> = subtract.to_vec();
    set.sort_unstable();
    set.dedup();

    let count = start as usize + 1;
    let mut options: Vec<Vec<PositionId>> = Vec::with_capacity(count);
    let mut predecessors: Vec<Vec<PositionId>> = vec![Vec::new(); count];
    for k in 0..=start {
        let opts: Vec<PositionId> = set.iter().filter(|&&s| s <= k).map(|&s| k - s).collect();
        for &o in &opts {
            predecessors[o as usize].push(k);
        }
        options.push(opts);
    }
    GameGraph::from_adjacency(options, predecessors, start)
}

/// Explicit game graph; validation and solving as in [`GameGraph::new`].
pub fn explicit_game(
    position_count: u32,
    edges: &[(u32, u32)],
    start: u32,
) -> Result<GameGraph, GameError> {
    GameGraph::new(position_count, edges, start)
}
