//! Property tests pitting the memoized passes against naive recursion on
//! random DAGs, plus structural cross-checks of the product game.

mod common;

use common::{adjacency, naive_followers, naive_grundy, naive_outcome, naive_pl};
use emperor_core::rulesets::{multi_nim, multi_nim_vector, nim_heap};
use emperor_core::sweep::sweep_cases;
use emperor_core::{BruteTable, GameGraph, Limits, Outcome};
use proptest::prelude::*;
use std::collections::HashMap;

/// Random DAGs with scrambled labels: edges are generated on ranks
/// (higher rank to lower, hence acyclic) and then relabelled through a
/// random permutation, so position ids carry no topological information.
fn dag_strategy() -> impl Strategy<Value = (u32, Vec<(u32, u32)>, u32)> {
    (2usize..60)
        .prop_flat_map(|n| {
            (
                Just(n),
                Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec((0..n, 0..n), 0..3 * n),
                0..n,
            )
        })
        .prop_map(|(n, perm, raw, start)| {
            let mut edges = Vec::new();
            for (a, b) in raw {
                if a != b {
                    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
                    edges.push((perm[hi], perm[lo]));
                }
            }
            (n as u32, edges, perm[start])
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn memoized_passes_match_naive_recursion((n, edges, start) in dag_strategy()) {
        let g = GameGraph::new(n, &edges, start).unwrap();
        let adj = adjacency(n, &edges);
        let mut outs = HashMap::new();
        let mut grundies = HashMap::new();
        let mut pls = HashMap::new();
        for u in 0..n {
            prop_assert_eq!(g.outcome(u).unwrap(), naive_outcome(&adj, u, &mut outs));
            prop_assert_eq!(g.grundy(u).unwrap(), naive_grundy(&adj, u, &mut grundies));
            prop_assert_eq!(g.pl(u).unwrap(), naive_pl(&adj, u, &mut outs, &mut pls));

            let mut expected: Vec<u32> = naive_followers(&adj, u).into_iter().collect();
            expected.sort_unstable();
            prop_assert_eq!(g.strict_followers(u).unwrap(), expected);
        }
    }

    #[test]
    fn normal_play_recursion_holds((n, edges, start) in dag_strategy()) {
        let g = GameGraph::new(n, &edges, start).unwrap();
        for u in 0..n {
            let has_p_option = g
                .options(u)
                .unwrap()
                .iter()
                .any(|&o| g.outcome(o).unwrap() == Outcome::P);
            prop_assert_eq!(g.outcome(u).unwrap() == Outcome::N, has_p_option);
            // grundy consistency: zero exactly at P
            prop_assert_eq!(g.grundy(u).unwrap() == 0, g.outcome(u).unwrap() == Outcome::P);
        }
    }

    #[test]
    fn witnesses_exist_below_every_length((n, edges, start) in dag_strategy()) {
        let g = GameGraph::new(n, &edges, start).unwrap();
        for u in 0..n {
            for m in 0..g.pl(u).unwrap() {
                let w = g.pl_witness(u, m).unwrap();
                let mut cur = u;
                for &step in &w.path {
                    prop_assert!(g.options(cur).unwrap().contains(&step));
                    cur = step;
                }
                prop_assert_eq!(cur, w.target);
                prop_assert_eq!(g.outcome(w.target).unwrap(), Outcome::P);
                prop_assert_eq!(g.pl(w.target).unwrap(), m);
            }
        }
    }
}

#[test]
fn multi_nim_grundy_is_the_coordinate_xor() {
    let limits = Limits::default();
    for heaps in [
        vec![4u32],
        vec![4, 4],
        vec![4, 4, 4],
        vec![2, 3],
        vec![1, 2, 3],
    ] {
        let g = multi_nim(&heaps, &limits).unwrap();
        for id in 0..g.position_count() {
            let v = multi_nim_vector(&heaps, id);
            let xor = v.iter().fold(0u32, |acc, &x| acc ^ x);
            assert_eq!(g.grundy(id).unwrap(), xor, "heaps {heaps:?} at {v:?}");
        }
    }
}

#[test]
fn nim_heap_length_is_zero_or_one() {
    for n in 0..=50 {
        let g = nim_heap(n);
        assert_eq!(g.pl(n).unwrap(), n.min(1));
    }
}

/// The product game is loop-free and its generic normal-play outcome equals
/// the dedicated brute table, on a spread of small instances.
#[test]
fn product_graph_is_acyclic_and_matches_brute() {
    let limits = Limits::default();
    for case in sweep_cases(2).iter().step_by(41) {
        let inst = case.build(&limits).unwrap();
        let dims: Vec<u32> = inst
            .components()
            .iter()
            .map(|c| c.position_count())
            .collect();
        let mut cells: Vec<Vec<u32>> = Vec::new();
        let mut v = vec![0u32; dims.len()];
        loop {
            cells.push(v.clone());
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
        let index: HashMap<Vec<u32>, u32> = cells
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let mut edges = Vec::new();
        for (i, p) in cells.iter().enumerate() {
            for m in inst.moves(p, &limits).unwrap() {
                edges.push((i as u32, index[&m]));
            }
        }
        let g = GameGraph::new(cells.len() as u32, &edges, index[&inst.start()])
            .expect("the product of DAG components without null moves is a DAG");
        let brute = BruteTable::solve(&inst, &limits).unwrap();
        for (i, p) in cells.iter().enumerate() {
            assert_eq!(
                g.outcome(i as u32).unwrap(),
                brute.outcome(p).unwrap(),
                "{} at {p:?}",
                case.label()
            );
        }
    }
}
