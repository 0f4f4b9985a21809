#![allow(dead_code)]

use cover_pebbling::solver::enumerate_configs;
use cover_pebbling::{BinaryWeighting, Configuration, Graph};

/// Smallest relabeled edge list over all vertex permutations; equal for
/// isomorphic graphs. Only for tiny graphs.
pub fn canonical_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One representative per isomorphism class.
pub fn distinct_up_to_isomorphism(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert(canonical_edges(g)))
        .collect()
}

/// Every configuration of size `k` supported on the marked vertices of `b`.
pub fn permissible_configs(b: &BinaryWeighting, k: u32) -> Vec<Configuration> {
    let marked: Vec<usize> = b.marked().collect();
    if marked.is_empty() {
        return if k == 0 {
            vec![Configuration::zeros(b.len())]
        } else {
            vec![]
        };
    }
    enumerate_configs(marked.len(), k)
        .map(|inner| {
            let mut counts = vec![0u32; b.len()];
            for (slot, &v) in marked.iter().enumerate() {
                counts[v] = inner.get(slot);
            }
            Configuration::new(counts)
        })
        .collect()
}

/// All weightings on `n` vertices with at least one mark.
pub fn nonempty_weightings(n: usize) -> Vec<BinaryWeighting> {
    (1u32..1 << n)
        .map(|mask| BinaryWeighting::new((0..n).map(|v| mask >> v & 1 == 1).collect()))
        .collect()
}

/// Reference decision procedure: explores every reachable configuration
/// with no pruning, ordering or memo sharing.
pub fn brute_force_solvable(g: &Graph, c: &[u32], b: Option<&BinaryWeighting>) -> bool {
    let covered = |s: &[u32]| (0..s.len()).all(|v| s[v] > 0 || b.is_some_and(|b| !b.is_marked(v)));
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![c.to_vec()];
    while let Some(state) = stack.pop() {
        if covered(&state) {
            return true;
        }
        for (u, v) in g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]) {
            if state[u] >= 2 {
                let mut next = state.clone();
                next[u] -= 2;
                next[v] += 1;
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    false
}

/// Least `k` such that every size-`k` configuration passes the reference
/// procedure, scanning upward from zero.
pub fn brute_force_gamma(g: &Graph) -> u32 {
    (0..)
        .find(|&k| {
            enumerate_configs(g.order(), k).all(|c| brute_force_solvable(g, c.counts(), None))
        })
        .unwrap()
}
