#![allow(dead_code)]

use empire_core::graph::Graph;

/// Least number of classes in a partition of `0..n` into independent sets,
/// by enumerating every set partition (restricted growth strings).
pub fn brute_force_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let adj = g.adjacency();
    let mut best = n;
    let mut class = vec![0usize; n];
    fn go(v: usize, used: usize, class: &mut Vec<usize>, adj: &[Vec<usize>], best: &mut usize) {
        if v == class.len() {
            *best = (*best).min(used);
            return;
        }
        for c in 0..=used {
            class[v] = c;
            // only edges to earlier vertices are decided
            if adj[v].iter().any(|&u| u < v && class[u] == c) || adj[v].contains(&v) {
                continue;
            }
            go(v + 1, used.max(c + 1), class, adj, best);
        }
    }
    go(0, 0, &mut class, &adj, &mut best);
    best
}

/// Number of set partitions of an `n`-set visited by the enumeration above
/// when no edge prunes it.
pub fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

pub fn count_partitions(n: usize) -> usize {
    fn go(v: usize, n: usize, used: usize) -> usize {
        if v == n {
            return 1;
        }
        (0..=used).map(|c| go(v + 1, n, used.max(c + 1))).sum()
    }
    if n == 0 {
        1
    } else {
        go(0, n, 0)
    }
}

/// Random graph on `n` vertices with each pair present with probability
/// `num / den`.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, num: u32, den: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_ratio(num, den) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
