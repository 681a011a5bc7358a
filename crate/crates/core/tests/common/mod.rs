#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use structio_core::{BipartiteGraph, Cost, CostVector, StateDigraph};

pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> StateDigraph {
    let mut g = StateDigraph::new(n).unwrap();
    for i in 0..n {
        for j in 0..n {
            if rng.gen::<f64>() < density {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

pub fn random_costs(rng: &mut ChaCha8Rng, n: usize, hi: u32, inf_prob: f64) -> CostVector {
    CostVector::new(
        (0..n)
            .map(|_| {
                if rng.gen::<f64>() < inf_prob {
                    Cost::Infinite
                } else {
                    Cost::from(rng.gen_range(0..=hi))
                }
            })
            .collect(),
    )
}

pub fn random_bipartite(
    rng: &mut ChaCha8Rng,
    n_left: usize,
    n_right: usize,
    density: f64,
) -> BipartiteGraph {
    let mut bg = BipartiteGraph::new(n_left, n_right);
    for l in 0..n_left {
        for r in 0..n_right {
            if rng.gen::<f64>() < density {
                bg.add_edge(l, r).unwrap();
            }
        }
    }
    bg
}

/// Every matching of `bg` (including the empty one) as sorted pairs.
pub fn all_matchings(bg: &BipartiteGraph) -> Vec<Vec<(usize, usize)>> {
    fn go(
        bg: &BipartiteGraph,
        l: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if l == bg.n_left() {
            out.push(cur.clone());
            return;
        }
        go(bg, l + 1, used, cur, out);
        for &r in bg.neighbors(l) {
            if !used[r] {
                used[r] = true;
                cur.push((l, r));
                go(bg, l + 1, used, cur, out);
                cur.pop();
                used[r] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        bg,
        0,
        &mut vec![false; bg.n_right()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

pub fn all_maximum_matchings(bg: &BipartiteGraph) -> Vec<Vec<(usize, usize)>> {
    let all = all_matchings(bg);
    let best = all.iter().map(Vec::len).max().unwrap_or(0);
    all.into_iter().filter(|m| m.len() == best).collect()
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
}
