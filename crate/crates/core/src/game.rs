//! Finite impartial games as explicit option DAGs.
//!
//! A [`GameGraph`] is built once from a position count and an edge list,
//! validated to be loop-free, and then solved in a single reverse-topological
//! pass: outcome class, Sprague-Grundy value and P-position length are
//! memoized for every position at construction time. A solved graph is
//! immutable, so it can be shared and queried concurrently.

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Positions are dense indices `0..position_count`.
pub type PositionId = u32;

/// Strict-follower bitsets are materialized per position up to this many
/// positions; beyond it the quadratic memory is not worth it and follower
/// queries fall back to on-demand BFS.
const FOLLOWER_CACHE_LIMIT: u32 = 4096;

/// Normal-play outcome class of a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// The previous player (the one who just moved) wins.
    P,
    /// The next player (the one to move) wins.
    N,
}

impl Outcome {
    pub fn is_p(self) -> bool {
        self == Outcome::P
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Outcome::P => write!(f, "P"),
            Outcome::N => write!(f, "N"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("the option graph contains a cycle; play must be loop-free")]
    CycleDetected,
    #[error("edge {from} -> {to} references an undeclared position")]
    DanglingEdge { from: u32, to: u32 },
    #[error("a game needs at least one position")]
    EmptyPositionSet,
    #[error("position {0} is not a position of this game")]
    UnknownPosition(u32),
    #[error("game would need {requested} positions, cap is {cap}")]
    SizeLimitExceeded { requested: u64, cap: u64 },
    #[error("the subtraction set must not be empty")]
    EmptySubtractionSet,
    #[error("subtraction amounts must be positive")]
    ZeroSubtraction,
    #[error("position {position} has no P-position strict follower of length {requested}")]
    NoWitness { position: PositionId, requested: u32 },
}

/// A strict follower that realizes a requested P-position length, together
/// with one concrete move path leading to it.
///
/// `path` lists the position after each move; it is non-empty and its last
/// entry equals `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlWitness {
    pub target: PositionId,
    pub path: Vec<PositionId>,
}

/// A finite loop-free impartial game with all per-position tables solved.
#[derive(Debug, Clone)]
pub struct GameGraph {
    options: Vec<Vec<PositionId>>,
    predecessors: Vec<Vec<PositionId>>,
    start: PositionId,
    /// Positions ordered so that every option precedes its owner.
    topo: Vec<PositionId>,
    outcome: Vec<Outcome>,
    grundy: Vec<u32>,
    pl: Vec<u32>,
    /// `followers[p]` = set of positions reachable from `p` in >= 1 moves.
    /// Only materialized for small graphs.
    followers: Option<Vec<FixedBitSet>>,
}

impl GameGraph {
    /// Validates an explicit option graph and solves it.
    ///
    /// Positions are `0..position_count`. Edges are `(from, to)` pairs, `to`
    /// being an option of `from`; duplicates are dropped, order is kept.
    /// Fails with [`GameError::CycleDetected`] if play would not be loop-free.
    pub fn new(
        position_count: u32,
        edges: &[(u32, u32)],
        start: u32,
    ) -> Result<GameGraph, GameError> {
        let n = position_count as usize;
        if n == 0 {
            return Err(GameError::EmptyPositionSet);
        }
        if start >= position_count {
            return Err(GameError::UnknownPosition(start));
        }

        let mut options: Vec<Vec<PositionId>> = vec![Vec::new(); n];
        let mut predecessors: Vec<Vec<PositionId>> = vec![Vec::new(); n];
        for &(from, to) in edges {
            if from >= position_count || to >= position_count {
                return Err(GameError::DanglingEdge { from, to });
            }
            if !options[from as usize].contains(&to) {
                options[from as usize].push(to);
                predecessors[to as usize].push(from);
            }
        }

        Self::from_adjacency(options, predecessors, start)
    }

    /// Solves a graph whose adjacency is already deduplicated and in range.
    /// Used by ruleset constructors that build the lists directly.
    pub(crate) fn from_adjacency(
        options: Vec<Vec<PositionId>>,
        predecessors: Vec<Vec<PositionId>>,
        start: PositionId,
    ) -> Result<GameGraph, GameError> {
        let n = options.len();

        // Kahn's algorithm, peeling positions whose options are all
        // processed. Terminals come first, so the order is also the
        // evaluation order for every memo pass.
        let mut pending: Vec<u32> = options.iter().map(|o| o.len() as u32).collect();
        let mut topo: Vec<PositionId> = Vec::with_capacity(n);
        let mut queue: std::collections::VecDeque<PositionId> = (0..n as u32)
            .filter(|&p| pending[p as usize] == 0)
            .collect();
        while let Some(p) = queue.pop_front() {
            topo.push(p);
            for &w in &predecessors[p as usize] {
                pending[w as usize] -= 1;
                if pending[w as usize] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if topo.len() < n {
            return Err(GameError::CycleDetected);
        }

        let mut outcome = vec![Outcome::P; n];
        for &p in &topo {
            let all_n = options[p as usize]
                .iter()
                .all(|&o| outcome[o as usize] == Outcome::N);
            outcome[p as usize] = if all_n { Outcome::P } else { Outcome::N };
        }

        let mut grundy = vec![0u32; n];
        let mut seen: Vec<bool> = Vec::new();
        for &p in &topo {
            let opts = &options[p as usize];
            if seen.len() < opts.len() + 1 {
                seen.resize(opts.len() + 1, false);
            }
            for &o in opts {
                let g = grundy[o as usize] as usize;
                if g <= opts.len() {
                    seen[g] = true;
                }
            }
            let mex = (0..=opts.len()).find(|&v| !seen[v]).unwrap() as u32;
            grundy[p as usize] = mex;
            for &o in opts {
                let g = grundy[o as usize] as usize;
                if g <= opts.len() {
                    seen[g] = false;
                }
            }
        }

        // pl(p) = 0 at terminals, else 1 + max pl over P-position strict
        // followers. `best[p]` carries that max so the pass stays linear.
        let mut pl = vec![0u32; n];
        let mut best: Vec<Option<u32>> = vec![None; n];
        for &p in &topo {
            let opts = &options[p as usize];
            if opts.is_empty() {
                continue;
            }
            let mut m: Option<u32> = None;
            for &o in opts {
                let o = o as usize;
                let mut cand = best[o];
                if outcome[o] == Outcome::P {
                    cand = Some(cand.map_or(pl[o], |c| c.max(pl[o])));
                }
                if let Some(c) = cand {
                    m = Some(m.map_or(c, |x| x.max(c)));
                }
            }
            // Every non-terminal position has a terminal (hence P) strict
            // follower, so the max is over a non-empty set.
            let m = m.expect("non-terminal position with no P-position follower");
            pl[p as usize] = m + 1;
            best[p as usize] = Some(m);
        }

        let followers = if n as u32 <= FOLLOWER_CACHE_LIMIT {
            let mut sets: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n); n];
            for &p in &topo {
                let mut fb = FixedBitSet::with_capacity(n);
                for &o in &options[p as usize] {
                    fb.insert(o as usize);
                    fb.union_with(&sets[o as usize]);
                }
                sets[p as usize] = fb;
            }
            Some(sets)
        } else {
            None
        };

        Ok(GameGraph {
            options,
            predecessors,
            start,
            topo,
            outcome,
            grundy,
            pl,
            followers,
        })
    }

    pub fn position_count(&self) -> u32 {
        self.options.len() as u32
    }

    pub fn start(&self) -> PositionId {
        self.start
    }

    pub fn positions(&self) -> impl Iterator<Item = PositionId> {
        0..self.position_count()
    }

    /// Positions ordered options-first; every memo pass runs along it.
    pub fn topological_order(&self) -> &[PositionId] {
        &self.topo
    }

    fn check(&self, p: PositionId) -> Result<usize, GameError> {
        if p < self.position_count() {
            Ok(p as usize)
        } else {
            Err(GameError::UnknownPosition(p))
        }
    }

    pub fn is_terminal(&self, p: PositionId) -> Result<bool, GameError> {
        Ok(self.options[self.check(p)?].is_empty())
    }

    /// The positions reachable in exactly one move, in option order.
    pub fn options(&self, p: PositionId) -> Result<&[PositionId], GameError> {
        Ok(&self.options[self.check(p)?])
    }

    pub fn outcome(&self, p: PositionId) -> Result<Outcome, GameError> {
        Ok(self.outcome[self.check(p)?])
    }

    pub fn grundy(&self, p: PositionId) -> Result<u32, GameError> {
        Ok(self.grundy[self.check(p)?])
    }

    /// P-position length: 0 at terminals, else one more than the maximum
    /// over all P-position strict followers.
    pub fn pl(&self, p: PositionId) -> Result<u32, GameError> {
        Ok(self.pl[self.check(p)?])
    }

    /// Largest P-position length over the whole graph.
    pub fn max_pl(&self) -> u32 {
        self.pl.iter().copied().max().unwrap_or(0)
    }

    /// The positions reachable in one or more moves, ascending. Never
    /// contains `p` itself since the graph is acyclic.
    pub fn strict_followers(&self, p: PositionId) -> Result<Vec<PositionId>, GameError> {
        let i = self.check(p)?;
        match &self.followers {
            Some(sets) => Ok(sets[i].ones().map(|x| x as PositionId).collect()),
            None => {
                let set = self.descend_from(p);
                let mut out: Vec<PositionId> =
                    set.ones().map(|x| x as PositionId).collect();
                out.sort_unstable();
                Ok(out)
            }
        }
    }

    /// Whether `to` is reachable from `from` in one or more moves.
    pub fn reaches(&self, from: PositionId, to: PositionId) -> Result<bool, GameError> {
        let f = self.check(from)?;
        self.check(to)?;
        match &self.followers {
            Some(sets) => Ok(sets[f].contains(to as usize)),
            None => Ok(self.descend_from(from).contains(to as usize)),
        }
    }

    /// Forward BFS; the result excludes `from` (acyclic graph).
    fn descend_from(&self, from: PositionId) -> FixedBitSet {
        let n = self.options.len();
        let mut set = FixedBitSet::with_capacity(n);
        let mut stack: Vec<PositionId> = self.options[from as usize].clone();
        for &o in &self.options[from as usize] {
            set.insert(o as usize);
        }
        while let Some(p) = stack.pop() {
            for &o in &self.options[p as usize] {
                if !set.contains(o as usize) {
                    set.insert(o as usize);
                    stack.push(o);
                }
            }
        }
        set
    }

    /// Positions from which `to` is reachable in >= 0 moves (includes `to`).
    fn ascend_to(&self, to: PositionId) -> FixedBitSet {
        let n = self.options.len();
        let mut set = FixedBitSet::with_capacity(n);
        set.insert(to as usize);
        let mut stack = vec![to];
        while let Some(p) = stack.pop() {
            for &w in &self.predecessors[p as usize] {
                if !set.contains(w as usize) {
                    set.insert(w as usize);
                    stack.push(w);
                }
            }
        }
        set
    }

    /// Finds a P-position strict follower of `p` with P-position length
    /// exactly `m`, which exists for every `m < pl(p)`.
    ///
    /// Deterministic: the witness is the smallest qualifying position id and
    /// the returned move path is the lexicographically smallest id sequence
    /// leading to it.
    pub fn pl_witness(&self, p: PositionId, m: u32) -> Result<PlWitness, GameError> {
        let i = self.check(p)?;
        if m >= self.pl[i] {
            return Err(GameError::NoWitness {
                position: p,
                requested: m,
            });
        }

        let target = match &self.followers {
            Some(sets) => sets[i]
                .ones()
                .map(|x| x as PositionId)
                .find(|&x| self.outcome[x as usize] == Outcome::P && self.pl[x as usize] == m),
            None => {
                let set = self.descend_from(p);
                let mut ids: Vec<PositionId> = set.ones().map(|x| x as PositionId).collect();
                ids.sort_unstable();
                ids.into_iter()
                    .find(|&x| self.outcome[x as usize] == Outcome::P && self.pl[x as usize] == m)
            }
        };
        let target = target.ok_or(GameError::NoWitness {
            position: p,
            requested: m,
        })?;

        // Greedy smallest feasible step yields the lexicographically
        // smallest path; a step never revisits the target (acyclic).
        let can_reach = self.ascend_to(target);
        let mut path = Vec::new();
        let mut cur = p;
        while cur != target {
            let next = self.options[cur as usize]
                .iter()
                .copied()
                .filter(|&o| can_reach.contains(o as usize))
                .min()
                .expect("reachable target must stay reachable along some option");
            path.push(next);
            cur = next;
        }
        Ok(PlWitness { target, path })
    }
}
