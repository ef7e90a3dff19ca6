//! Exhaustive desk-scale verification sweeps.
//!
//! The sweep universe is every canonical complex on up to three labelled
//! vertices crossed with every tuple from a fixed component menu. The checks
//! here compare the fast engine against the brute-force oracle cell by cell,
//! validate the constructed winning moves, and exercise the structural
//! properties the fast engine relies on. Both the test suite and the CLI
//! `verify` command run through this module, so a mismatch surfaces in the
//! same format everywhere.

use crate::emperor::{
    emperor_sum_outcome, BruteTable, EmperorError, EmperorInstance, EmperorPosition,
    EmperorSolver,
};
use crate::game::{GameGraph, Outcome, PositionId};
use crate::rulesets::RulesetSpec;
use crate::simplicial::{bouton_outcome, nim_moves, NimTable, SimplicialComplex};
use crate::Limits;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashSet;

/// Failure messages kept per check; the rest are only counted.
const MAX_REPORTED_FAILURES: usize = 8;

/// Sweep shape and budgets. The defaults match the advertised verification
/// envelope: all complexes on up to 3 vertices, the full component menu,
/// at least 100 cell-exhaustive instance samples and 100 self-play games
/// per side, all deterministic under `seed`.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub max_vertices: usize,
    pub limits: Limits,
    /// Instances whose full product space gets the move-set checks.
    pub sampled_instances: usize,
    /// Self-play games per side (engine first and engine second).
    pub self_play_games: usize,
    /// Random explicit DAGs for the length-property check.
    pub random_dags: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_vertices: 3,
            limits: Limits::default(),
            sampled_instances: 120,
            self_play_games: 100,
            random_dags: 25,
            seed: 0x5eed,
        }
    }
}

/// One sweep instance: a complex plus one ruleset per vertex.
#[derive(Debug, Clone)]
pub struct SweepCase {
    pub complex: SimplicialComplex,
    pub specs: Vec<RulesetSpec>,
}

impl SweepCase {
    pub fn build(&self, limits: &Limits) -> Result<EmperorInstance, EmperorError> {
        let components = self
            .specs
            .iter()
            .map(|s| s.build(limits))
            .collect::<Result<Vec<_>, _>>()?;
        EmperorInstance::new(self.complex.clone(), components)
    }

    pub fn label(&self) -> String {
        let faces: Vec<String> = self
            .complex
            .maximal_faces()
            .iter()
            .map(|&f| self.complex.format_face(f))
            .collect();
        let specs: Vec<String> = self.specs.iter().map(RulesetSpec::label).collect();
        format!("Δ={{{}}} components=[{}]", faces.join(","), specs.join(", "))
    }
}

/// Which fast engine to run. `Inverted` flips every outcome and exists so
/// the verification harness can prove it catches a broken engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineVariant {
    Standard,
    Inverted,
}

impl EngineVariant {
    pub fn outcome(
        self,
        solver: &EmperorSolver<'_>,
        p: &[PositionId],
    ) -> Result<Outcome, EmperorError> {
        let o = solver.outcome(p)?;
        Ok(match self {
            EngineVariant::Standard => o,
            EngineVariant::Inverted => match o {
                Outcome::P => Outcome::N,
                Outcome::N => Outcome::P,
            },
        })
    }
}

/// Tally of one check: positions (or graphs, or games) examined and the
/// failures found, with at most [`MAX_REPORTED_FAILURES`] messages kept.
#[derive(Debug, Clone, Default)]
pub struct CheckOutcome {
    pub checked: u64,
    pub failures: Vec<String>,
    suppressed: u64,
}

impl CheckOutcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.suppressed == 0
    }

    pub fn mismatches(&self) -> u64 {
        self.failures.len() as u64 + self.suppressed
    }

    fn fail(&mut self, message: String) {
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(message);
        } else {
            self.suppressed += 1;
        }
    }

    fn merge(mut self, other: CheckOutcome) -> CheckOutcome {
        self.checked += other.checked;
        for msg in other.failures {
            self.fail(msg);
        }
        self.suppressed += other.suppressed;
        self
    }
}

/// All canonical complexes on exactly `n` labelled vertices `v1..vn`:
/// every antichain of non-empty vertex sets that covers all vertices.
/// There are 1, 2 and 9 of them for n = 1, 2, 3.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!(
        (1..=4).contains(&n),
        "complex enumeration supports 1 to 4 vertices"
    );
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let full: u16 = (1 << n) - 1;
    let masks: Vec<u16> = (1..=full).collect();
    let mut out = Vec::new();
    for family in 1u32..(1u32 << masks.len()) {
        let chosen: Vec<u16> = masks
            .iter()
            .enumerate()
            .filter(|&(i, _)| family & (1 << i) != 0)
            .map(|(_, &m)| m)
            .collect();
        if chosen.iter().fold(0, |acc, &m| acc | m) != full {
            continue;
        }
        let antichain = chosen
            .iter()
            .all(|&a| chosen.iter().all(|&b| a == b || a & !b != 0));
        if !antichain {
            continue;
        }
        let faces: Vec<Vec<String>> = chosen
            .iter()
            .map(|&m| {
                (0..n)
                    .filter(|v| m & (1 << v) != 0)
                    .map(|v| names[v].clone())
                    .collect()
            })
            .collect();
        out.push(SimplicialComplex::from_maximal_faces(&names, &faces).unwrap());
    }
    out
}

/// The 16-entry component menu: nim heaps of size at most 2, two-heap nim
/// bounded by (2,2), and the {1,2}-subtraction game from starts at most 3.
pub fn component_menu() -> Vec<RulesetSpec> {
    let mut menu = Vec::new();
    for size in 0..=2 {
        menu.push(RulesetSpec::NimHeap { size });
    }
    for a in 0..=2 {
        for b in 0..=2 {
            menu.push(RulesetSpec::MultiNim { heaps: vec![a, b] });
        }
    }
    for start in 0..=3 {
        menu.push(RulesetSpec::Subtraction {
            subtract: vec![1, 2],
            start,
        });
    }
    menu
}

/// The full sweep: every complex on 1..=`max_vertices` vertices crossed
/// with every component tuple from the menu. 37392 cases for 3 vertices.
pub fn sweep_cases(max_vertices: usize) -> Vec<SweepCase> {
    let menu = component_menu();
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        for complex in all_complexes(n) {
            let mut pick = vec![0usize; n];
            loop {
                out.push(SweepCase {
                    complex: complex.clone(),
                    specs: pick.iter().map(|&k| menu[k].clone()).collect(),
                });
                let mut done = true;
                for i in (0..n).rev() {
                    if pick[i] + 1 < menu.len() {
                        pick[i] += 1;
                        done = false;
                        break;
                    }
                    pick[i] = 0;
                }
                if done {
                    break;
                }
            }
        }
    }
    out
}

/// Deterministic choice of `count` case indices out of `len`.
pub fn sample_indices(count: usize, len: usize, seed: u64) -> HashSet<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx: Vec<usize> = (0..len).collect();
    idx.shuffle(&mut rng);
    idx.truncate(count.min(len));
    idx.into_iter().collect()
}

fn describe(case: &SweepCase, p: &[PositionId]) -> String {
    format!("{} at {:?}", case.label(), p)
}

fn par_check<F>(cases: &[SweepCase], f: F) -> CheckOutcome
where
    F: Fn(usize, &SweepCase) -> CheckOutcome + Sync,
{
    cases
        .par_iter()
        .enumerate()
        .map(|(i, c)| f(i, c))
        .reduce(CheckOutcome::default, CheckOutcome::merge)
}

/// Product positions in raw component-id order, independent of the brute
/// table's internal ranking.
fn product_positions(inst: &EmperorInstance) -> Vec<EmperorPosition> {
    let dims: Vec<u32> = inst
        .components()
        .iter()
        .map(|c| c.position_count())
        .collect();
    let mut out = Vec::new();
    let mut v: EmperorPosition = vec![0; dims.len()];
    loop {
        out.push(v.clone());
        let mut done = true;
        for i in (0..dims.len()).rev() {
            if v[i] + 1 < dims[i] {
                v[i] += 1;
                done = false;
                break;
            }
            v[i] = 0;
        }
        if done {
            break;
        }
    }
    out
}

/// On discrete complexes, simplicial-nim outcomes must match the XOR rule
/// on every vector bounded by (4,...,4).
pub fn check_bouton(max_vertices: usize, limits: &Limits) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for n in 1..=max_vertices {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let discrete = SimplicialComplex::discrete(&names).unwrap();
        let bound = vec![4u32; n];
        let table = match NimTable::solve(&discrete, &bound, limits) {
            Ok(t) => t,
            Err(e) => {
                out.fail(format!("discrete box on {n} vertices failed to solve: {e}"));
                continue;
            }
        };
        let mut v = vec![0u32; n];
        loop {
            let got = table.outcome(&v).unwrap();
            let want = bouton_outcome(&v);
            if got != want {
                out.fail(format!(
                    "discrete nim on {n} vertices at {v:?}: table={got} xor-rule={want}"
                ));
            }
            out.checked += 1;
            let mut done = true;
            for i in (0..n).rev() {
                if v[i] < bound[i] {
                    v[i] += 1;
                    done = false;
                    break;
                }
                v[i] = 0;
            }
            if done {
                break;
            }
        }
    }
    out
}

/// Every face-decrease of a nim P-position lands on an N-position, and
/// every N-position has a face-decrease onto a P-position whose returned
/// witness is shaped correctly (strict drop exactly on the face).
pub fn check_nim_lemmas(max_vertices: usize, limits: &Limits) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for n in 1..=max_vertices {
        for complex in all_complexes(n) {
            let bound = vec![3u32; n];
            let table = match NimTable::solve(&complex, &bound, limits) {
                Ok(t) => t,
                Err(e) => {
                    out.fail(format!("nim box failed to solve: {e}"));
                    continue;
                }
            };
            let faces: Vec<String> = complex
                .maximal_faces()
                .iter()
                .map(|&f| complex.format_face(f))
                .collect();
            let label = faces.join(",");
            let mut s = vec![0u32; n];
            loop {
                let moves = nim_moves(&complex, &s).unwrap();
                match table.outcome(&s).unwrap() {
                    Outcome::P => {
                        for m in &moves {
                            if table.outcome(m).unwrap() == Outcome::P {
                                out.fail(format!(
                                    "Δ={{{label}}}: P-position {s:?} has P face-decrease {m:?}"
                                ));
                            }
                        }
                    }
                    Outcome::N => {
                        if !moves.iter().any(|m| table.outcome(m).unwrap() == Outcome::P) {
                            out.fail(format!(
                                "Δ={{{label}}}: N-position {s:?} has no face-decrease to P"
                            ));
                        }
                        match table.move_to_pset(&s).unwrap() {
                            None => out.fail(format!(
                                "Δ={{{label}}}: N-position {s:?} got no witness move"
                            )),
                            Some((face, t)) => {
                                let shaped = (0..n).all(|i| {
                                    if face.contains(i) {
                                        t[i] < s[i]
                                    } else {
                                        t[i] == s[i]
                                    }
                                });
                                if !complex.is_face(face)
                                    || !shaped
                                    || moves.binary_search(&t).is_err()
                                    || table.outcome(&t).unwrap() != Outcome::P
                                {
                                    out.fail(format!(
                                        "Δ={{{label}}}: bad witness {face:?}->{t:?} from {s:?}"
                                    ));
                                }
                            }
                        }
                    }
                }
                out.checked += 1;
                let mut done = true;
                for i in (0..n).rev() {
                    if s[i] < bound[i] {
                        s[i] += 1;
                        done = false;
                        break;
                    }
                    s[i] = 0;
                }
                if done {
                    break;
                }
            }
        }
    }
    out
}

/// Fast engine versus brute oracle on every cell of every case.
pub fn check_engine_equivalence(
    cases: &[SweepCase],
    limits: &Limits,
    variant: EngineVariant,
) -> CheckOutcome {
    par_check(cases, |_, case| {
        let mut out = CheckOutcome::default();
        let inst = match case.build(limits) {
            Ok(i) => i,
            Err(e) => {
                out.fail(format!("{}: build failed: {e}", case.label()));
                return out;
            }
        };
        let brute = BruteTable::solve(&inst, limits).unwrap();
        let solver = EmperorSolver::new(&inst, limits).unwrap();
        for id in 0..brute.cells() {
            let p = brute.position_at(id);
            let fast = variant.outcome(&solver, &p).unwrap();
            let slow = brute.outcome(&p).unwrap();
            if fast != slow {
                out.fail(format!("{}: fast={fast} brute={slow}", describe(case, &p)));
            }
            out.checked += 1;
        }
        out
    })
}

/// On discrete cases the XOR specialization, the fast engine and the brute
/// oracle must agree on every cell.
pub fn check_discrete_specialization(
    cases: &[SweepCase],
    limits: &Limits,
    variant: EngineVariant,
) -> CheckOutcome {
    par_check(cases, |_, case| {
        let mut out = CheckOutcome::default();
        if !case.complex.is_discrete() {
            return out;
        }
        let inst = match case.build(limits) {
            Ok(i) => i,
            Err(e) => {
                out.fail(format!("{}: build failed: {e}", case.label()));
                return out;
            }
        };
        let brute = BruteTable::solve(&inst, limits).unwrap();
        let solver = EmperorSolver::new(&inst, limits).unwrap();
        for id in 0..brute.cells() {
            let p = brute.position_at(id);
            let xor = emperor_sum_outcome(inst.components(), &p).unwrap();
            let fast = variant.outcome(&solver, &p).unwrap();
            let slow = brute.outcome(&p).unwrap();
            if xor != fast || fast != slow {
                out.fail(format!(
                    "{}: xor-rule={xor} fast={fast} brute={slow}",
                    describe(case, &p)
                ));
            }
            out.checked += 1;
        }
        out
    })
}

/// From every N-cell the engine must produce a legal move whose successor
/// the brute oracle classifies P; from every P-cell it must produce none.
/// At the start position the successor is additionally required to be a
/// member of the generated move set.
pub fn check_winning_moves(cases: &[SweepCase], limits: &Limits) -> CheckOutcome {
    par_check(cases, |_, case| {
        let mut out = CheckOutcome::default();
        let inst = match case.build(limits) {
            Ok(i) => i,
            Err(e) => {
                out.fail(format!("{}: build failed: {e}", case.label()));
                return out;
            }
        };
        let brute = BruteTable::solve(&inst, limits).unwrap();
        let solver = EmperorSolver::new(&inst, limits).unwrap();
        let start = inst.start();
        let start_moves = inst.moves(&start, limits).unwrap();
        for id in 0..brute.cells() {
            let p = brute.position_at(id);
            let oracle = brute.outcome(&p).unwrap();
            match solver.winning_move(&p).unwrap() {
                None => {
                    if oracle == Outcome::N {
                        out.fail(format!("{}: no move offered from N", describe(case, &p)));
                    }
                }
                Some(mv) => {
                    if oracle == Outcome::P {
                        out.fail(format!("{}: move offered from P", describe(case, &p)));
                    } else {
                        match inst.apply_move(&p, &mv) {
                            Err(e) => out.fail(format!(
                                "{}: illegal winning move {mv:?}: {e}",
                                describe(case, &p)
                            )),
                            Ok(next) => {
                                if brute.outcome(&next).unwrap() != Outcome::P {
                                    out.fail(format!(
                                        "{}: winning move lands on N at {next:?}",
                                        describe(case, &p)
                                    ));
                                }
                                if p == start && start_moves.binary_search(&next).is_err() {
                                    out.fail(format!(
                                        "{}: winning move successor {next:?} not in move set",
                                        describe(case, &p)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            out.checked += 1;
        }
        out
    })
}

/// Maximal-face move generation must equal all-faces generation: at the
/// start of every case, and on every cell of the sampled cases.
pub fn check_move_dominance(
    cases: &[SweepCase],
    limits: &Limits,
    sampled: &HashSet<usize>,
) -> CheckOutcome {
    par_check(cases, |i, case| {
        let mut out = CheckOutcome::default();
        let inst = match case.build(limits) {
            Ok(inst) => inst,
            Err(e) => {
                out.fail(format!("{}: build failed: {e}", case.label()));
                return out;
            }
        };
        let positions = if sampled.contains(&i) {
            product_positions(&inst)
        } else {
            vec![inst.start()]
        };
        for p in positions {
            let maximal = inst.moves(&p, limits).unwrap();
            let all = inst.moves_via_all_faces(&p, limits).unwrap();
            if maximal != all {
                out.fail(format!(
                    "{}: maximal-face moves differ from all-faces moves",
                    describe(case, &p)
                ));
            }
            out.checked += 1;
        }
        out
    })
}

fn verify_graph_lengths(graph: &GameGraph, label: &str, out: &mut CheckOutcome) {
    for u in 0..graph.position_count() as PositionId {
        let pl = graph.pl(u).unwrap();
        if (pl == 0) != graph.is_terminal(u).unwrap() {
            out.fail(format!("{label}: position {u} has pl {pl} vs terminality"));
        }
        for f in graph.strict_followers(u).unwrap() {
            if graph.outcome(f).unwrap() == Outcome::P && graph.pl(f).unwrap() >= pl {
                out.fail(format!(
                    "{label}: follower {f} of {u} breaks strict length descent"
                ));
            }
        }
        for m in 0..pl {
            match graph.pl_witness(u, m) {
                Err(e) => out.fail(format!("{label}: no witness for ({u}, {m}): {e}")),
                Ok(w) => {
                    let mut cur = u;
                    let mut valid = !w.path.is_empty();
                    for &step in &w.path {
                        if !graph.options(cur).unwrap().contains(&step) {
                            valid = false;
                            break;
                        }
                        cur = step;
                    }
                    if !valid
                        || cur != w.target
                        || graph.outcome(w.target).unwrap() != Outcome::P
                        || graph.pl(w.target).unwrap() != m
                    {
                        out.fail(format!("{label}: bad witness {w:?} for ({u}, {m})"));
                    }
                }
            }
        }
        out.checked += 1;
    }
}

/// A random DAG on up to 200 positions with shuffled labels, so the passes
/// cannot rely on label order agreeing with topological order.
fn random_dag(seed: u64) -> GameGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n: usize = rng.gen_range(2..=200);
    let mut perm: Vec<PositionId> = (0..n as PositionId).collect();
    perm.shuffle(&mut rng);
    let density = rng.gen_range(0.05..0.4);
    let mut edges = Vec::new();
    for hi in 1..n {
        for lo in 0..hi {
            if rng.gen_bool(density) {
                edges.push((perm[hi], perm[lo]));
            }
        }
    }
    GameGraph::new(n as u32, &edges, perm[n - 1]).unwrap()
}

/// Length bookkeeping on every menu component and on random DAGs:
/// pl is zero exactly at terminals, P-followers sit at strictly smaller
/// lengths, and a witness exists for every length below pl.
pub fn check_pl_properties(limits: &Limits, random_dags: usize, seed: u64) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for spec in component_menu() {
        match spec.build(limits) {
            Ok(g) => verify_graph_lengths(&g, &spec.label(), &mut out),
            Err(e) => out.fail(format!("{}: build failed: {e}", spec.label())),
        }
    }
    let dags: Vec<CheckOutcome> = (0..random_dags as u64)
        .into_par_iter()
        .map(|k| {
            let mut local = CheckOutcome::default();
            let g = random_dag(seed.wrapping_add(k ^ 0x9e3779b9));
            verify_graph_lengths(&g, &format!("random dag #{k}"), &mut local);
            local
        })
        .collect();
    for d in dags {
        out = out.merge(d);
    }
    out
}

fn play_out(
    inst: &EmperorInstance,
    solver: &EmperorSolver<'_>,
    limits: &Limits,
    start: EmperorPosition,
    engine_first: bool,
    budget: u64,
    rng: &mut ChaCha8Rng,
) -> Result<(), String> {
    let mut p = start;
    let mut engine_turn = engine_first;
    for _ in 0..=budget {
        let moves = inst.moves(&p, limits).map_err(|e| e.to_string())?;
        if moves.is_empty() {
            // the previous mover made the last move and wins
            return if engine_turn {
                Err(format!("engine has no move at {p:?} and loses"))
            } else {
                Ok(())
            };
        }
        if engine_turn {
            let mv = solver
                .winning_move(&p)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("engine saw a P-position at {p:?} on its turn"))?;
            p = inst.apply_move(&p, &mv).map_err(|e| e.to_string())?;
        } else {
            p = moves[rng.gen_range(0..moves.len())].clone();
        }
        engine_turn = !engine_turn;
    }
    Err("game exceeded its move budget".to_string())
}

/// Scripted engine-versus-random play. Starting from N-cells the engine
/// moves first; from non-terminal P-cells it moves second. Either way it
/// must make the last move of every game.
pub fn check_self_play(
    cases: &[SweepCase],
    limits: &Limits,
    games_per_side: usize,
    seed: u64,
) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut order: Vec<usize> = (0..cases.len()).collect();
    order.shuffle(&mut rng);

    let mut out = CheckOutcome::default();
    let mut n_left = games_per_side;
    let mut p_left = games_per_side;
    for &ci in &order {
        if n_left == 0 && p_left == 0 {
            break;
        }
        let case = &cases[ci];
        let inst = match case.build(limits) {
            Ok(i) => i,
            Err(e) => {
                out.fail(format!("{}: build failed: {e}", case.label()));
                continue;
            }
        };
        let brute = BruteTable::solve(&inst, limits).unwrap();
        let solver = EmperorSolver::new(&inst, limits).unwrap();
        for _ in 0..2 {
            let id = rng.gen_range(0..brute.cells());
            let p = brute.position_at(id);
            let engine_first = match brute.outcome(&p).unwrap() {
                Outcome::N if n_left > 0 => {
                    n_left -= 1;
                    true
                }
                Outcome::P if p_left > 0 && !inst.is_terminal(&p).unwrap() => {
                    p_left -= 1;
                    false
                }
                _ => continue,
            };
            if let Err(e) = play_out(
                &inst,
                &solver,
                limits,
                p.clone(),
                engine_first,
                brute.cells(),
                &mut rng,
            ) {
                out.fail(format!("{}: self-play failed: {e}", describe(case, &p)));
            }
            out.checked += 1;
        }
    }
    out
}

/// Summary of a full sweep: named sections with their tallies.
#[derive(Debug)]
pub struct SweepReport {
    pub instances: u64,
    pub sections: Vec<(&'static str, CheckOutcome)>,
}

impl SweepReport {
    pub fn positions_checked(&self) -> u64 {
        self.sections.iter().map(|(_, c)| c.checked).sum()
    }

    pub fn mismatches(&self) -> u64 {
        self.sections.iter().map(|(_, c)| c.mismatches()).sum()
    }

    pub fn ok(&self) -> bool {
        self.mismatches() == 0
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.sections
            .iter()
            .flat_map(|(_, c)| c.failures.iter())
            .next()
            .map(String::as_str)
    }
}

/// Runs every check over the configured sweep.
pub fn run_sweep(config: &SweepConfig, variant: EngineVariant) -> SweepReport {
    let cases = sweep_cases(config.max_vertices);
    let sampled = sample_indices(config.sampled_instances, cases.len(), config.seed);
    let limits = &config.limits;
    let sections = vec![
        ("bouton conformance", check_bouton(config.max_vertices, limits)),
        ("nim lemmas", check_nim_lemmas(config.max_vertices, limits)),
        (
            "engine equivalence",
            check_engine_equivalence(&cases, limits, variant),
        ),
        (
            "discrete specialization",
            check_discrete_specialization(&cases, limits, variant),
        ),
        ("winning moves", check_winning_moves(&cases, limits)),
        (
            "move dominance",
            check_move_dominance(&cases, limits, &sampled),
        ),
        (
            "pl properties",
            check_pl_properties(limits, config.random_dags, config.seed),
        ),
        (
            "self play",
            check_self_play(&cases, limits, config.self_play_games, config.seed),
        ),
    ];
    SweepReport {
        instances: cases.len() as u64,
        sections,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_counts_match_the_antichain_census() {
        assert_eq!(all_complexes(1).len(), 1);
        assert_eq!(all_complexes(2).len(), 2);
        assert_eq!(all_complexes(3).len(), 9);
    }

    #[test]
    fn menu_has_sixteen_components() {
        assert_eq!(component_menu().len(), 16);
    }

    #[test]
    fn sweep_size_is_the_menu_power_sum() {
        assert_eq!(sweep_cases(1).len(), 16);
        assert_eq!(sweep_cases(2).len(), 16 + 2 * 256);
        assert_eq!(sweep_cases(3).len(), 16 + 2 * 256 + 9 * 4096);
    }

    #[test]
    fn bouton_check_covers_the_advertised_boxes() {
        let out = check_bouton(3, &Limits::default());
        assert!(out.ok(), "{:?}", out.failures);
        assert_eq!(out.checked, 5 + 25 + 125);
    }

    #[test]
    fn nim_lemmas_hold_on_two_vertices() {
        let out = check_nim_lemmas(2, &Limits::default());
        assert!(out.ok(), "{:?}", out.failures);
        assert_eq!(out.checked, 4 + 2 * 16);
    }

    #[test]
    fn small_sweep_is_clean() {
        let cases = sweep_cases(2);
        let limits = Limits::default();
        let out = check_engine_equivalence(&cases, &limits, EngineVariant::Standard);
        assert!(out.ok(), "{:?}", out.failures);
        let out = check_discrete_specialization(&cases, &limits, EngineVariant::Standard);
        assert!(out.ok(), "{:?}", out.failures);
        let out = check_winning_moves(&cases, &limits);
        assert!(out.ok(), "{:?}", out.failures);
    }

    #[test]
    fn inverted_engine_is_caught() {
        let cases = sweep_cases(1);
        let out = check_engine_equivalence(&cases, &Limits::default(), EngineVariant::Inverted);
        assert!(!out.ok());
        assert!(out.mismatches() > 0);
    }

    #[test]
    fn pl_properties_hold_on_menu_and_random_dags() {
        let out = check_pl_properties(&Limits::default(), 5, 7);
        assert!(out.ok(), "{:?}", out.failures);
    }

    #[test]
    fn self_play_small() {
        let cases = sweep_cases(2);
        let out = check_self_play(&cases, &Limits::default(), 10, 99);
        assert!(out.ok(), "{:?}", out.failures);
        assert!(out.checked >= 10);
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_indices(10, 500, 42);
        let b = sample_indices(10, 500, 42);
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
    }
}
