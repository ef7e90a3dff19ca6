//! Naive oracles computed by direct recursion over a raw adjacency list,
//! independent of the memoized passes they are used to check.

use emperor_core::Outcome;
use std::collections::{HashMap, HashSet};

/// Adjacency list from an edge list, deduplicated.
pub fn adjacency(n: u32, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); n as usize];
    let mut seen = HashSet::new();
    for &(a, b) in edges {
        if seen.insert((a, b)) {
            adj[a as usize].push(b);
        }
    }
    adj
}

pub fn naive_outcome(adj: &[Vec<u32>], u: u32, memo: &mut HashMap<u32, Outcome>) -> Outcome {
    if let Some(&o) = memo.get(&u) {
        return o;
    }
    let mut result = Outcome::P;
    for &o in &adj[u as usize] {
        if naive_outcome(adj, o, memo) == Outcome::P {
            result = Outcome::N;
            break;
        }
    }
    memo.insert(u, result);
    result
}

pub fn naive_grundy(adj: &[Vec<u32>], u: u32, memo: &mut HashMap<u32, u32>) -> u32 {
    if let Some(&g) = memo.get(&u) {
        return g;
    }
    let reached: HashSet<u32> = adj[u as usize]
        .iter()
        .map(|&o| naive_grundy(adj, o, memo))
        .collect();
    let mut mex = 0;
    while reached.contains(&mex) {
        mex += 1;
    }
    memo.insert(u, mex);
    mex
}

/// Positions reachable from `u` in one or more steps.
pub fn naive_followers(adj: &[Vec<u32>], u: u32) -> HashSet<u32> {
    let mut out = HashSet::new();
    let mut stack: Vec<u32> = adj[u as usize].clone();
    while let Some(v) = stack.pop() {
        if out.insert(v) {
            stack.extend(adj[v as usize].iter().copied());
        }
    }
    out
}

/// P-position length by definition: zero at terminals, otherwise one more
/// than the largest length among P-position strict followers.
pub fn naive_pl(
    adj: &[Vec<u32>],
    u: u32,
    out_memo: &mut HashMap<u32, Outcome>,
    pl_memo: &mut HashMap<u32, u32>,
) -> u32 {
    if let Some(&v) = pl_memo.get(&u) {
        return v;
    }
    let value = if adj[u as usize].is_empty() {
        0
    } else {
        let mut best: Option<u32> = None;
        for f in naive_followers(adj, u) {
            if naive_outcome(adj, f, out_memo) == Outcome::P {
                let v = naive_pl(adj, f, out_memo, pl_memo);
                best = Some(best.map_or(v, |b| b.max(v)));
            }
        }
        best.expect("a non-terminal position reaches a terminal P-position") + 1
    };
    pl_memo.insert(u, value);
    value
}
