use std::collections::VecDeque;

use crate::graph::{KneserBGraph, Part};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

pub fn component_count(g: &KneserBGraph) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    let mut count = 0;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        count += 1;
        seen[root] = true;
        stack.push(root);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Shortest cycle length. A BFS from every vertex; a non-tree edge `(u, w)`
/// closes a cycle of length at most `d(u) + d(w) + 1`, and the minimum over
/// all roots is exact.
pub fn girth_oracle(g: &KneserBGraph) -> Girth {
    let n = g.vertex_count();
    let bipartite = g.edges().all(|(u, v)| g.part(u) != g.part(v));
    let floor = if bipartite { 4 } else { 3 };
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // no shorter cycle can be found further out from this root
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
        if best == floor {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    }
}

/// `|E| - |V| + c`.
pub fn circuit_rank_oracle(g: &KneserBGraph) -> i64 {
    g.edge_count() as i64 - g.vertex_count() as i64 + component_count(g) as i64
}

/// `Σ (deg(v) - 2)` over all vertices.
pub fn omega_oracle(g: &KneserBGraph) -> i64 {
    let omega: i64 = (0..g.vertex_count())
        .map(|v| g.neighbors(v).len() as i64 - 2)
        .sum();
    debug_assert_eq!(omega, 2 * (g.edge_count() as i64 - g.vertex_count() as i64));
    omega
}

/// Degree histogram as `(degree, multiplicity)`, non-increasing by degree.
pub fn degree_sequence_oracle(g: &KneserBGraph) -> Vec<(usize, usize)> {
    let mut counts = std::collections::BTreeMap::<usize, usize>::new();
    for v in 0..g.vertex_count() {
        *counts.entry(g.neighbors(v).len()).or_default() += 1;
    }
    counts.into_iter().rev().collect()
}

/// Vertices in the given part.
pub fn part_size(g: &KneserBGraph, part: Part) -> usize {
    (0..g.vertex_count()).filter(|&v| g.part(v) == part).count()
}
