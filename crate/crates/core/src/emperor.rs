//! The emperor sum: impartial components riding on a simplicial complex.
//!
//! One component game sits on each vertex. A move picks a non-empty face,
//! moves every component on that face any number of times (zero allowed),
//! and every component off the face at most once; at least one component
//! must actually change. [`BruteTable`] classifies the whole product space
//! by retrograde analysis straight from this move rule. [`EmperorSolver`]
//! instead combines per-component P-position lengths with a simplicial-nim
//! table, which is the closed-form characterization the brute table is used
//! to cross-check.

use crate::game::{GameError, GameGraph, Outcome, PositionId};
use crate::simplicial::{Face, NimTable, SimplicialComplex, SimplicialError};
use crate::Limits;
use std::collections::BTreeSet;
use thiserror::Error;

/// One component position per vertex, in vertex order.
pub type EmperorPosition = Vec<PositionId>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmperorError {
    #[error("{components} components supplied for {vertices} vertices")]
    ComponentCountMismatch { components: usize, vertices: usize },
    #[error("position vector has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error("product table would need {requested} cells, cap is {cap}")]
    SizeLimitExceeded { requested: u64, cap: u64 },
    #[error("illegal move: {0}")]
    Move(#[from] MoveError),
}

/// Violations of the move rule, phrased for direct display.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("the chosen vertex set is not a face of the complex")]
    NotAFace,
    #[error("vertex {vertex} is off the chosen face and may make at most one move")]
    MultiStepOffFace { vertex: usize },
    #[error("vertex {vertex}: {from} -> {to} is not a legal single move")]
    NotAnOption {
        vertex: usize,
        from: PositionId,
        to: PositionId,
    },
    #[error("vertex {vertex}: a multi-step move needs a non-empty path")]
    EmptyPath { vertex: usize },
    #[error("a move must change at least one component")]
    NoChange,
    #[error("move lists {actual} vertex entries, expected {expected}")]
    WrongVertexCount { expected: usize, actual: usize },
}

/// What one component does during a combined move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexMove {
    Unchanged,
    /// One option edge; legal on and off the chosen face.
    SingleStep(PositionId),
    /// A chain of option edges, in order; legal only on the chosen face.
    MultiStep(Vec<PositionId>),
}

impl VertexMove {
    pub fn is_change(&self) -> bool {
        !matches!(self, VertexMove::Unchanged)
    }
}

/// A combined move: the chosen face plus one action per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmperorMove {
    pub face: Face,
    pub per_vertex: Vec<VertexMove>,
}

/// A complex together with one component game per vertex.
#[derive(Debug, Clone)]
pub struct EmperorInstance {
    complex: SimplicialComplex,
    components: Vec<GameGraph>,
}

impl EmperorInstance {
    pub fn new(
        complex: SimplicialComplex,
        components: Vec<GameGraph>,
    ) -> Result<EmperorInstance, EmperorError> {
        if components.len() != complex.vertex_count() {
            return Err(EmperorError::ComponentCountMismatch {
                components: components.len(),
                vertices: complex.vertex_count(),
            });
        }
        Ok(EmperorInstance {
            complex,
            components,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn components(&self) -> &[GameGraph] {
        &self.components
    }

    /// The designated start of every component.
    pub fn start(&self) -> EmperorPosition {
        self.components.iter().map(|c| c.start()).collect()
    }

    pub fn check_position(&self, p: &[PositionId]) -> Result<(), EmperorError> {
        if p.len() != self.components.len() {
            return Err(EmperorError::LengthMismatch {
                expected: self.components.len(),
                actual: p.len(),
            });
        }
        for (c, &x) in self.components.iter().zip(p) {
            if x >= c.position_count() {
                return Err(GameError::UnknownPosition(x).into());
            }
        }
        Ok(())
    }

    /// Terminal iff no move exists, i.e. every component is terminal.
    pub fn is_terminal(&self, p: &[PositionId]) -> Result<bool, EmperorError> {
        self.check_position(p)?;
        Ok(self
            .components
            .iter()
            .zip(p)
            .all(|(c, &x)| c.is_terminal(x).unwrap()))
    }

    /// Every position reachable in one move, sorted lexicographically.
    /// Generated from maximal faces only; sub-faces add nothing because a
    /// sub-face move is also a move of any containing face.
    pub fn moves(
        &self,
        p: &[PositionId],
        limits: &Limits,
    ) -> Result<Vec<EmperorPosition>, EmperorError> {
        self.moves_over(p, self.complex.maximal_faces().to_vec(), limits)
    }

    /// Same set as [`EmperorInstance::moves`], generated from all non-empty
    /// faces. Kept as the direct transcription of the move rule so the
    /// maximal-face shortcut can be checked against it.
    pub fn moves_via_all_faces(
        &self,
        p: &[PositionId],
        limits: &Limits,
    ) -> Result<Vec<EmperorPosition>, EmperorError> {
        self.moves_over(p, self.complex.faces(), limits)
    }

    fn moves_over(
        &self,
        p: &[PositionId],
        faces: Vec<Face>,
        limits: &Limits,
    ) -> Result<Vec<EmperorPosition>, EmperorError> {
        self.check_position(p)?;
        let n = self.components.len();

        // stay-or-step and stay-or-descend candidate lists per vertex
        let mut one_step: Vec<Vec<PositionId>> = Vec::with_capacity(n);
        let mut any_steps: Vec<Vec<PositionId>> = Vec::with_capacity(n);
        for (c, &x) in self.components.iter().zip(p) {
            let mut opts: Vec<PositionId> = c.options(x).unwrap().to_vec();
            opts.push(x);
            opts.sort_unstable();
            opts.dedup();
            one_step.push(opts);
            let mut fols = c.strict_followers(x).unwrap();
            fols.push(x);
            fols.sort_unstable();
            any_steps.push(fols);
        }

        let mut requested: u64 = 0;
        for &face in &faces {
            let mut prod: u64 = 1;
            for i in 0..n {
                let len = if face.contains(i) {
                    any_steps[i].len()
                } else {
                    one_step[i].len()
                };
                prod = prod.saturating_mul(len as u64);
            }
            requested = requested.saturating_add(prod);
        }
        if requested > limits.max_cells {
            return Err(EmperorError::SizeLimitExceeded {
                requested,
                cap: limits.max_cells,
            });
        }

        let mut out: BTreeSet<EmperorPosition> = BTreeSet::new();
        for &face in &faces {
            let cands: Vec<&[PositionId]> = (0..n)
                .map(|i| {
                    if face.contains(i) {
                        any_steps[i].as_slice()
                    } else {
                        one_step[i].as_slice()
                    }
                })
                .collect();
            let mut idx = vec![0usize; n];
            loop {
                let next: EmperorPosition = (0..n).map(|i| cands[i][idx[i]]).collect();
                if next != p {
                    out.insert(next);
                }
                let mut done = true;
                for i in (0..n).rev() {
                    if idx[i] + 1 < cands[i].len() {
                        idx[i] += 1;
                        done = false;
                        break;
                    }
                    idx[i] = 0;
                }
                if done {
                    break;
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Validates a structured move against the rule and returns the
    /// resulting position.
    pub fn apply_move(
        &self,
        p: &[PositionId],
        mv: &EmperorMove,
    ) -> Result<EmperorPosition, EmperorError> {
        self.check_position(p)?;
        let n = self.components.len();
        if mv.per_vertex.len() != n {
            return Err(MoveError::WrongVertexCount {
                expected: n,
                actual: mv.per_vertex.len(),
            }
            .into());
        }
        if !self.complex.is_face(mv.face) {
            return Err(MoveError::NotAFace.into());
        }

        let mut next = p.to_vec();
        let mut changed = false;
        for (i, vm) in mv.per_vertex.iter().enumerate() {
            let comp = &self.components[i];
            match vm {
                VertexMove::Unchanged => {}
                VertexMove::SingleStep(to) => {
                    if !comp.options(p[i]).unwrap().contains(to) {
                        return Err(MoveError::NotAnOption {
                            vertex: i,
                            from: p[i],
                            to: *to,
                        }
                        .into());
                    }
                    next[i] = *to;
                    changed = true;
                }
                VertexMove::MultiStep(path) => {
                    if !mv.face.contains(i) {
                        return Err(MoveError::MultiStepOffFace { vertex: i }.into());
                    }
                    if path.is_empty() {
                        return Err(MoveError::EmptyPath { vertex: i }.into());
                    }
                    let mut cur = p[i];
                    for &step in path {
                        if !comp.options(cur).unwrap().contains(&step) {
                            return Err(MoveError::NotAnOption {
                                vertex: i,
                                from: cur,
                                to: step,
                            }
                            .into());
                        }
                        cur = step;
                    }
                    next[i] = cur;
                    changed = true;
                }
            }
        }
        if !changed {
            return Err(MoveError::NoChange.into());
        }
        Ok(next)
    }
}

/// Retrograde outcome table over the full product of component positions,
/// computed directly from the move rule over all non-empty faces. This is
/// the independent oracle the fast engine is verified against.
#[derive(Debug, Clone)]
pub struct BruteTable {
    dims: Vec<u64>,
    weights: Vec<u64>,
    rank: Vec<Vec<u32>>,
    unrank: Vec<Vec<PositionId>>,
    outcomes: Vec<Outcome>,
}

impl BruteTable {
    pub fn solve(inst: &EmperorInstance, limits: &Limits) -> Result<BruteTable, EmperorError> {
        let comps = inst.components();
        let n = comps.len();
        let dims: Vec<u64> = comps.iter().map(|c| c.position_count() as u64).collect();
        let mut cells: u64 = 1;
        for &d in &dims {
            cells = cells.saturating_mul(d);
        }
        if cells > limits.max_cells {
            return Err(EmperorError::SizeLimitExceeded {
                requested: cells,
                cap: limits.max_cells,
            });
        }

        let mut weights = vec![1u64; n];
        for i in (0..n.saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * dims[i + 1];
        }

        // cells are indexed by per-component topological ranks so that every
        // legal step strictly lowers the cell index
        let mut rank: Vec<Vec<u32>> = Vec::with_capacity(n);
        let mut unrank: Vec<Vec<PositionId>> = Vec::with_capacity(n);
        for c in comps {
            let order = c.topological_order().to_vec();
            let mut r = vec![0u32; order.len()];
            for (k, &pos) in order.iter().enumerate() {
                r[pos as usize] = k as u32;
            }
            rank.push(r);
            unrank.push(order);
        }

        // candidate rank lists: stay plus one step, stay plus any descent
        let mut one_step: Vec<Vec<Vec<u32>>> = Vec::with_capacity(n);
        let mut any_steps: Vec<Vec<Vec<u32>>> = Vec::with_capacity(n);
        for (i, c) in comps.iter().enumerate() {
            let m = c.position_count() as usize;
            let mut opts_by_rank = vec![Vec::new(); m];
            let mut fols_by_rank = vec![Vec::new(); m];
            for r in 0..m {
                let pos = unrank[i][r];
                let mut opts: Vec<u32> = c
                    .options(pos)
                    .unwrap()
                    .iter()
                    .map(|&o| rank[i][o as usize])
                    .collect();
                opts.push(r as u32);
                opts.sort_unstable();
                opts_by_rank[r] = opts;
                let mut fols: Vec<u32> = c
                    .strict_followers(pos)
                    .unwrap()
                    .iter()
                    .map(|&f| rank[i][f as usize])
                    .collect();
                fols.push(r as u32);
                fols.sort_unstable();
                fols_by_rank[r] = fols;
            }
            one_step.push(opts_by_rank);
            any_steps.push(fols_by_rank);
        }

        let faces: Vec<Face> = inst.complex().faces();
        let mut outcomes = vec![Outcome::P; cells as usize];
        let mut digits = vec![0u64; n];
        for id in 0..cells {
            let mut is_n = false;
            'faces: for &face in &faces {
                let cands: Vec<&[u32]> = (0..n)
                    .map(|i| {
                        if face.contains(i) {
                            any_steps[i][digits[i] as usize].as_slice()
                        } else {
                            one_step[i][digits[i] as usize].as_slice()
                        }
                    })
                    .collect();
                let mut idx = vec![0usize; n];
                let mut child: u64 = (0..n).map(|i| cands[i][0] as u64 * weights[i]).sum();
                loop {
                    if child != id && outcomes[child as usize] == Outcome::P {
                        is_n = true;
                        break 'faces;
                    }
                    let mut done = true;
                    for i in (0..n).rev() {
                        if idx[i] + 1 < cands[i].len() {
                            child += (cands[i][idx[i] + 1] - cands[i][idx[i]]) as u64 * weights[i];
                            idx[i] += 1;
                            done = false;
                            break;
                        }
                        child -= (cands[i][idx[i]] - cands[i][0]) as u64 * weights[i];
                        idx[i] = 0;
                    }
                    if done {
                        break;
                    }
                }
            }
            if is_n {
                outcomes[id as usize] = Outcome::N;
            }
            for i in (0..n).rev() {
                if digits[i] + 1 < dims[i] {
                    digits[i] += 1;
                    break;
                }
                digits[i] = 0;
            }
        }

        Ok(BruteTable {
            dims,
            weights,
            rank,
            unrank,
            outcomes,
        })
    }

    pub fn cells(&self) -> u64 {
        self.outcomes.len() as u64
    }

    /// Decodes a cell index back to a position vector.
    pub fn position_at(&self, id: u64) -> EmperorPosition {
        (0..self.dims.len())
            .map(|i| {
                let r = (id / self.weights[i]) % self.dims[i];
                self.unrank[i][r as usize]
            })
            .collect()
    }

    pub fn outcome(&self, p: &[PositionId]) -> Result<Outcome, EmperorError> {
        if p.len() != self.dims.len() {
            return Err(EmperorError::LengthMismatch {
                expected: self.dims.len(),
                actual: p.len(),
            });
        }
        let mut id: u64 = 0;
        for (i, &x) in p.iter().enumerate() {
            if x as u64 >= self.dims[i] {
                return Err(GameError::UnknownPosition(x).into());
            }
            id += self.rank[i][x as usize] as u64 * self.weights[i];
        }
        Ok(self.outcomes[id as usize])
    }
}

/// The fast engine: per-component outcomes and P-position lengths combined
/// through a simplicial-nim table bounded by each component's largest
/// possible length.
#[derive(Debug)]
pub struct EmperorSolver<'a> {
    instance: &'a EmperorInstance,
    nim: NimTable,
}

impl<'a> EmperorSolver<'a> {
    pub fn new(instance: &'a EmperorInstance, limits: &Limits) -> Result<Self, EmperorError> {
        let bound: Vec<u32> = instance.components().iter().map(|c| c.max_pl()).collect();
        let nim = NimTable::solve(instance.complex(), &bound, limits)?;
        Ok(EmperorSolver { instance, nim })
    }

    pub fn instance(&self) -> &EmperorInstance {
        self.instance
    }

    pub fn nim_table(&self) -> &NimTable {
        &self.nim
    }

    /// P-position lengths of the components at `p`, in vertex order.
    pub fn pl_vector(&self, p: &[PositionId]) -> Result<Vec<u32>, EmperorError> {
        self.instance.check_position(p)?;
        Ok(self
            .instance
            .components()
            .iter()
            .zip(p)
            .map(|(c, &x)| c.pl(x).unwrap())
            .collect())
    }

    /// P exactly when every component is a P-position and the length vector
    /// is a P-position of simplicial nim on the complex.
    pub fn outcome(&self, p: &[PositionId]) -> Result<Outcome, EmperorError> {
        self.instance.check_position(p)?;
        let all_p = self
            .instance
            .components()
            .iter()
            .zip(p)
            .all(|(c, &x)| c.outcome(x).unwrap() == Outcome::P);
        if !all_p {
            return Ok(Outcome::N);
        }
        Ok(self.nim.outcome(&self.pl_vector(p)?)?)
    }

    /// A winning move from an N-position, `None` from a P-position.
    ///
    /// Construction: first push every N-component down to its smallest
    /// P-option (one step each). If the resulting length vector is already a
    /// nim P-position, that is the move, filed under the smallest singleton
    /// face. Otherwise the nim table supplies a face and target lengths, and
    /// each face component walks its length-witness path down to the target.
    pub fn winning_move(&self, p: &[PositionId]) -> Result<Option<EmperorMove>, EmperorError> {
        if self.outcome(p)? == Outcome::P {
            return Ok(None);
        }
        let comps = self.instance.components();
        let n = comps.len();

        let mut starred = p.to_vec();
        for (i, c) in comps.iter().enumerate() {
            if c.outcome(p[i]).unwrap() == Outcome::N {
                starred[i] = c
                    .options(p[i])
                    .unwrap()
                    .iter()
                    .copied()
                    .filter(|&o| c.outcome(o).unwrap() == Outcome::P)
                    .min()
                    .expect("an N-position has a P-option");
            }
        }
        let q: Vec<u32> = comps
            .iter()
            .zip(&starred)
            .map(|(c, &x)| c.pl(x).unwrap())
            .collect();

        if self.nim.outcome(&q)? == Outcome::P {
            // single steps only; any face is legal, use the smallest one
            let face = self.instance.complex().faces()[0];
            let per_vertex = (0..n)
                .map(|i| {
                    if starred[i] == p[i] {
                        VertexMove::Unchanged
                    } else if face.contains(i) {
                        VertexMove::MultiStep(vec![starred[i]])
                    } else {
                        VertexMove::SingleStep(starred[i])
                    }
                })
                .collect();
            return Ok(Some(EmperorMove { face, per_vertex }));
        }

        let (face, target) = self
            .nim
            .move_to_pset(&q)?
            .expect("length vector is a nim N-position here");
        let mut per_vertex = Vec::with_capacity(n);
        for i in 0..n {
            if face.contains(i) {
                let witness = comps[i].pl_witness(starred[i], target[i])?;
                let mut path = Vec::new();
                if starred[i] != p[i] {
                    path.push(starred[i]);
                }
                path.extend(witness.path);
                per_vertex.push(VertexMove::MultiStep(path));
            } else if starred[i] != p[i] {
                per_vertex.push(VertexMove::SingleStep(starred[i]));
            } else {
                per_vertex.push(VertexMove::Unchanged);
            }
        }
        Ok(Some(EmperorMove { face, per_vertex }))
    }
}

/// Discrete-complex special case: P exactly when every component is a
/// P-position and the P-position lengths XOR to zero.
pub fn emperor_sum_outcome(
    components: &[GameGraph],
    positions: &[PositionId],
) -> Result<Outcome, EmperorError> {
    if positions.len() != components.len() {
        return Err(EmperorError::LengthMismatch {
            expected: components.len(),
            actual: positions.len(),
        });
    }
    let mut xor: u32 = 0;
    for (c, &x) in components.iter().zip(positions) {
        if c.outcome(x)? == Outcome::N {
            return Ok(Outcome::N);
        }
        xor ^= c.pl(x)?;
    }
    Ok(if xor == 0 { Outcome::P } else { Outcome::N })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rulesets::{multi_nim, multi_nim_id, nim_heap};

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn complex(vertices: &[&str], faces: &[&[&str]]) -> SimplicialComplex {
        let fs: Vec<Vec<String>> = faces.iter().map(|f| names(f)).collect();
        SimplicialComplex::from_maximal_faces(&names(vertices), &fs).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn component_count_must_match_vertex_count() {
        let c = complex(&["1", "2"], &[&["1", "2"]]);
        let err = EmperorInstance::new(c, vec![nim_heap(1)]).unwrap_err();
        assert!(matches!(
            err,
            EmperorError::ComponentCountMismatch {
                components: 1,
                vertices: 2
            }
        ));
    }

    #[test]
    fn single_vertex_moves_follow_the_descent_set() {
        let c = complex(&["1"], &[&["1"]]);
        let inst = EmperorInstance::new(c, vec![nim_heap(2)]).unwrap();
        assert_eq!(
            inst.moves(&[2], &limits()).unwrap(),
            vec![vec![0], vec![1]]
        );
        assert_eq!(inst.moves(&[0], &limits()).unwrap(), Vec::<Vec<u32>>::new());
        assert!(inst.is_terminal(&[0]).unwrap());
        assert!(!inst.is_terminal(&[2]).unwrap());
    }

    #[test]
    fn discrete_moves_allow_single_steps_everywhere() {
        let c = complex(&["1", "2"], &[&["1"], &["2"]]);
        let inst = EmperorInstance::new(c, vec![nim_heap(1), nim_heap(1)]).unwrap();
        assert_eq!(
            inst.moves(&[1, 1], &limits()).unwrap(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn face_vertices_may_take_many_steps() {
        // one-step ladders: position k only has the option k-1
        let ladder = || crate::rulesets::subtraction_game(&[1], 2).unwrap();

        let c = complex(&["1", "2"], &[&["1"], &["2"]]);
        let inst = EmperorInstance::new(c, vec![ladder(), ladder()]).unwrap();
        let moves = inst.moves(&[2, 2], &limits()).unwrap();
        // the off-face component steps at most once, so (0,0) is unreachable
        assert!(moves.contains(&vec![0, 1]));
        assert!(moves.contains(&vec![1, 0]));
        assert!(!moves.contains(&vec![0, 0]));

        let full = complex(&["1", "2"], &[&["1", "2"]]);
        let inst = EmperorInstance::new(full, vec![ladder(), ladder()]).unwrap();
        let moves = inst.moves(&[2, 2], &limits()).unwrap();
        // on the full simplex both components are face vertices
        assert!(moves.contains(&vec![0, 0]));
        assert_eq!(moves.len(), 8);
    }

    #[test]
    fn maximal_face_generation_matches_all_faces() {
        let c = complex(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let inst =
            EmperorInstance::new(c, vec![nim_heap(2), nim_heap(1), nim_heap(2)]).unwrap();
        for p in [[2, 1, 2], [1, 1, 1], [2, 0, 1], [0, 0, 0]] {
            assert_eq!(
                inst.moves(&p, &limits()).unwrap(),
                inst.moves_via_all_faces(&p, &limits()).unwrap()
            );
        }
    }

    #[test]
    fn move_budget_is_enforced() {
        let c = complex(&["1", "2"], &[&["1", "2"]]);
        let inst = EmperorInstance::new(c, vec![nim_heap(3), nim_heap(3)]).unwrap();
        let tight = Limits::with_max_cells(4);
        assert!(matches!(
            inst.moves(&[3, 3], &tight).unwrap_err(),
            EmperorError::SizeLimitExceeded { .. }
        ));
    }

    #[test]
    fn apply_move_validates_the_rule() {
        let c = complex(&["1", "2"], &[&["1"], &["2"]]);
        let inst = EmperorInstance::new(c, vec![nim_heap(2), nim_heap(2)]).unwrap();
        let p = vec![2, 2];

        let ok = EmperorMove {
            face: Face::from_bits(0b01),
            per_vertex: vec![
                VertexMove::MultiStep(vec![1, 0]),
                VertexMove::SingleStep(1),
            ],
        };
        assert_eq!(inst.apply_move(&p, &ok).unwrap(), vec![0, 1]);

        let not_a_face = EmperorMove {
            face: Face::from_bits(0b11),
            per_vertex: vec![VertexMove::Unchanged, VertexMove::Unchanged],
        };
        assert!(matches!(
            inst.apply_move(&p, &not_a_face).unwrap_err(),
            EmperorError::Move(MoveError::NotAFace)
        ));

        let off_face = EmperorMove {
            face: Face::from_bits(0b01),
            per_vertex: vec![VertexMove::Unchanged, VertexMove::MultiStep(vec![1, 0])],
        };
        assert!(matches!(
            inst.apply_move(&p, &off_face).unwrap_err(),
            EmperorError::Move(MoveError::MultiStepOffFace { vertex: 1 })
        ));

        let bad_edge = EmperorMove {
            face: Face::from_bits(0b01),
            per_vertex: vec![VertexMove::Unchanged, VertexMove::SingleStep(2)],
        };
        assert!(matches!(
            inst.apply_move(&p, &bad_edge).unwrap_err(),
            EmperorError::Move(MoveError::NotAnOption {
                vertex: 1,
                from: 2,
                to: 2
            })
        ));

        let null = EmperorMove {
            face: Face::from_bits(0b01),
            per_vertex: vec![VertexMove::Unchanged, VertexMove::Unchanged],
        };
        assert!(matches!(
            inst.apply_move(&p, &null).unwrap_err(),
            EmperorError::Move(MoveError::NoChange)
        ));

        let empty_path = EmperorMove {
            face: Face::from_bits(0b01),
            per_vertex: vec![VertexMove::MultiStep(vec![]), VertexMove::Unchanged],
        };
        assert!(matches!(
            inst.apply_move(&p, &empty_path).unwrap_err(),
            EmperorError::Move(MoveError::EmptyPath { vertex: 0 })
        ));
    }

    #[test]
    fn brute_single_heap_is_plain_nim() {
        let c = complex(&["1"], &[&["1"]]);
        let inst = EmperorInstance::new(c, vec![nim_heap(3)]).unwrap();
        let brute = BruteTable::solve(&inst, &limits()).unwrap();
        assert_eq!(brute.outcome(&[0]).unwrap(), Outcome::P);
        for h in 1..=3 {
            assert_eq!(brute.outcome(&[h]).unwrap(), Outcome::N);
        }
    }

    #[test]
    fn brute_agrees_with_xor_rule_on_discrete_complexes() {
        let c = complex(&["1", "2"], &[&["1"], &["2"]]);
        let comps = vec![nim_heap(2), multi_nim(&[1, 1], &limits()).unwrap()];
        let inst = EmperorInstance::new(c, comps).unwrap();
        let brute = BruteTable::solve(&inst, &limits()).unwrap();
        for id in 0..brute.cells() {
            let p = brute.position_at(id);
            assert_eq!(
                brute.outcome(&p).unwrap(),
                emperor_sum_outcome(inst.components(), &p).unwrap(),
                "at {p:?}"
            );
        }
    }

    #[test]
    fn triangle_boundary_with_unit_lengths_is_p() {
        // multi_nim(1,1) starts as a P-position of length 1, so the length
        // vector (1,1,1) must decide the combined outcome on the triangle
        // boundary, where it is a nim P-position
        let c = complex(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        let comp = || multi_nim(&[1, 1], &limits()).unwrap();
        let inst = EmperorInstance::new(c, vec![comp(), comp(), comp()]).unwrap();
        let start = inst.start();
        let brute = BruteTable::solve(&inst, &limits()).unwrap();
        assert_eq!(brute.outcome(&start).unwrap(), Outcome::P);
        let solver = EmperorSolver::new(&inst, &limits()).unwrap();
        assert_eq!(solver.outcome(&start).unwrap(), Outcome::P);
    }

    #[test]
    fn solver_agrees_with_brute_cell_by_cell() {
        let c = complex(&["1", "2", "3"], &[&["1", "2"], &["3"]]);
        let comps = vec![
            multi_nim(&[2, 2], &limits()).unwrap(),
            nim_heap(2),
            crate::rulesets::subtraction_game(&[1, 2], 3).unwrap(),
        ];
        let inst = EmperorInstance::new(c, comps).unwrap();
        let brute = BruteTable::solve(&inst, &limits()).unwrap();
        let solver = EmperorSolver::new(&inst, &limits()).unwrap();
        for id in 0..brute.cells() {
            let p = brute.position_at(id);
            assert_eq!(
                brute.outcome(&p).unwrap(),
                solver.outcome(&p).unwrap(),
                "at {p:?}"
            );
        }
    }

    #[test]
    fn winning_move_on_one_heap_empties_it() {
        let c = complex(&["1"], &[&["1"]]);
        let inst = EmperorInstance::new(c, vec![nim_heap(3)]).unwrap();
        let solver = EmperorSolver::new(&inst, &limits()).unwrap();
        let mv = solver.winning_move(&[3]).unwrap().unwrap();
        assert_eq!(mv.face, Face::from_bits(0b1));
        assert_eq!(mv.per_vertex, vec![VertexMove::MultiStep(vec![0])]);
        assert_eq!(inst.apply_move(&[3], &mv).unwrap(), vec![0]);
    }

    #[test]
    fn winning_move_walks_the_length_witness() {
        let c = complex(&["1", "2"], &[&["1"], &["2"]]);
        let heaps_a = [2, 2];
        let heaps_b = [1, 1];
        let comps = vec![
            multi_nim(&heaps_a, &limits()).unwrap(),
            multi_nim(&heaps_b, &limits()).unwrap(),
        ];
        let inst = EmperorInstance::new(c, comps).unwrap();
        let solver = EmperorSolver::new(&inst, &limits()).unwrap();
        let p = vec![
            multi_nim_id(&heaps_a, &[2, 2]).unwrap(),
            multi_nim_id(&heaps_b, &[1, 1]).unwrap(),
        ];
        // lengths are (2,1); the nim fix drops the first to 1 via (2,2) ->
        // (1,2) -> (1,1), the smallest witness path
        let mv = solver.winning_move(&p).unwrap().unwrap();
        assert_eq!(mv.face, Face::from_bits(0b01));
        let id12 = multi_nim_id(&heaps_a, &[1, 2]).unwrap();
        let id11 = multi_nim_id(&heaps_a, &[1, 1]).unwrap();
        assert_eq!(
            mv.per_vertex,
            vec![
                VertexMove::MultiStep(vec![id12, id11]),
                VertexMove::Unchanged
            ]
        );
        let next = inst.apply_move(&p, &mv).unwrap();
        let brute = BruteTable::solve(&inst, &limits()).unwrap();
        assert_eq!(brute.outcome(&next).unwrap(), Outcome::P);
    }

    #[test]
    fn winning_move_normalizes_n_components_with_single_steps() {
        let c = complex(&["1", "2"], &[&["1"], &["2"]]);
        let inst = EmperorInstance::new(c, vec![nim_heap(1), nim_heap(1)]).unwrap();
        let solver = EmperorSolver::new(&inst, &limits()).unwrap();
        // both heaps are N; emptying both lands on lengths (0,0), a nim P
        let mv = solver.winning_move(&[1, 1]).unwrap().unwrap();
        assert_eq!(mv.face, Face::from_bits(0b01));
        assert_eq!(
            mv.per_vertex,
            vec![VertexMove::MultiStep(vec![0]), VertexMove::SingleStep(0)]
        );
        assert_eq!(inst.apply_move(&[1, 1], &mv).unwrap(), vec![0, 0]);
    }

    #[test]
    fn p_positions_have_no_winning_move() {
        let c = complex(&["1"], &[&["1"]]);
        let inst = EmperorInstance::new(c, vec![nim_heap(3)]).unwrap();
        let solver = EmperorSolver::new(&inst, &limits()).unwrap();
        assert_eq!(solver.winning_move(&[0]).unwrap(), None);
    }

    #[test]
    fn xor_rule_examples() {
        // multi_nim(k,k) starts as a P-position of length k
        let mk = |a: u32, b: u32| multi_nim(&[a, b], &limits()).unwrap();
        let comps = vec![mk(1, 1), mk(2, 2)];
        let starts: Vec<u32> = comps.iter().map(|c| c.start()).collect();
        // lengths 1 and 2 clash
        assert_eq!(emperor_sum_outcome(&comps, &starts).unwrap(), Outcome::N);

        let comps = vec![mk(2, 2), mk(2, 2)];
        let starts: Vec<u32> = comps.iter().map(|c| c.start()).collect();
        assert_eq!(emperor_sum_outcome(&comps, &starts).unwrap(), Outcome::P);

        // any N component decides the sum regardless of lengths
        let comps = vec![nim_heap(3), nim_heap(0)];
        assert_eq!(emperor_sum_outcome(&comps, &[3, 0]).unwrap(), Outcome::N);
        // all terminal: every length is zero
        let comps = vec![nim_heap(0), nim_heap(0)];
        assert_eq!(emperor_sum_outcome(&comps, &[0, 0]).unwrap(), Outcome::P);
    }

    #[test]
    fn positions_are_validated() {
        let c = complex(&["1"], &[&["1"]]);
        let inst = EmperorInstance::new(c, vec![nim_heap(1)]).unwrap();
        assert!(matches!(
            inst.check_position(&[5]).unwrap_err(),
            EmperorError::Game(GameError::UnknownPosition(5))
        ));
        assert!(matches!(
            inst.check_position(&[0, 0]).unwrap_err(),
            EmperorError::LengthMismatch {
                expected: 1,
                actual: 2
            }
        ));
    }
}
