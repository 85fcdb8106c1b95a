//! Vertex and edge connectivity: articulation points and bridges first,
//! unit-capacity max-flow when neither exists.

use std::collections::VecDeque;

use crate::graph::KneserBGraph;

use super::cycles::component_count;

/// Low-link data from one iterative DFS forest.
struct LowLink {
    articulation: Vec<bool>,
    bridges: Vec<(usize, usize)>,
}

fn low_link(g: &KneserBGraph) -> LowLink {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut articulation = vec![false; n];
    let mut bridges = Vec::new();
    let mut timer = 0;
    // (vertex, parent, next neighbor position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            let nbrs = g.neighbors(u);
            if top.2 < nbrs.len() {
                let w = nbrs[top.2] as usize;
                top.2 += 1;
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > disc[parent] {
                        bridges.push((parent.min(u), parent.max(u)));
                    }
                    if parent != root && low[u] >= disc[parent] {
                        articulation[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            articulation[root] = true;
        }
    }
    bridges.sort_unstable();
    LowLink {
        articulation,
        bridges,
    }
}

pub fn articulation_points(g: &KneserBGraph) -> Vec<usize> {
    let ll = low_link(g);
    (0..g.vertex_count())
        .filter(|&v| ll.articulation[v])
        .collect()
}

/// Bridges as `(u, v)` with `u < v`, sorted.
pub fn bridges(g: &KneserBGraph) -> Vec<(usize, usize)> {
    low_link(g).bridges
}

/// Residual network with unit capacities on directed arcs.
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// Augments along shortest paths until `limit` units flow or none remain.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.head.len()];
        while flow < limit {
            via.fill(usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'search: while let Some(u) = queue.pop_front() {
                for &e in &self.head[u] {
                    let w = self.to[e];
                    if self.cap[e] > 0 && w != s && via[w] == usize::MAX {
                        via[w] = e;
                        if w == t {
                            reached = true;
                            break 'search;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let e = via[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint paths between two
/// non-adjacent vertices, capped at `limit`.
fn local_vertex_connectivity(g: &KneserBGraph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.vertex_count();
    // v_in = 2v, v_out = 2v + 1
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.arc(
            2 * v,
            2 * v + 1,
            if v == s || v == t { n as u32 } else { 1 },
        );
        for &w in g.neighbors(v) {
            net.arc(2 * v + 1, 2 * w as usize, 1);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

fn local_edge_connectivity(g: &KneserBGraph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = FlowNetwork::new(g.vertex_count());
    for (u, v) in g.edges() {
        net.arc(u, v, 1);
        net.arc(v, u, 1);
    }
    net.max_flow(s, t, limit)
}

/// Minimum number of vertices whose removal disconnects the graph (or
/// leaves a single vertex).
pub fn vertex_connectivity_oracle(g: &KneserBGraph) -> usize {
    let n = g.vertex_count();
    if n <= 1 || component_count(g) > 1 {
        return 0;
    }
    if n > 2 && low_link(g).articulation.iter().any(|&a| a) {
        return 1;
    }
    let complete = (0..n).all(|v| g.neighbors(v).len() == n - 1);
    if complete {
        return n - 1;
    }
    // Some minimum separator misses one of the first κ + 1 vertices, so
    // sources beyond the running minimum are unnecessary.
    let mut best = n - 1;
    let mut source = 0;
    while source <= best && source < n {
        for t in source + 1..n {
            if !g.has_edge(source, t) {
                best = best.min(local_vertex_connectivity(g, source, t, best));
            }
        }
        source += 1;
    }
    best
}

/// Minimum number of edges whose removal disconnects the graph.
pub fn edge_connectivity_oracle(g: &KneserBGraph) -> usize {
    let n = g.vertex_count();
    if n <= 1 || component_count(g) > 1 {
        return 0;
    }
    if !low_link(g).bridges.is_empty() {
        return 1;
    }
    // Every minimum cut separates vertex 0 from some other vertex.
    let mut best = (0..n).map(|v| g.neighbors(v).len()).min().unwrap_or(0);
    for t in 1..n {
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, GroundParams};

    fn graph(n: u32, k: u32) -> KneserBGraph {
        build_graph(GroundParams::new(n, k).unwrap()).unwrap()
    }

    #[test]
    fn kappa_lambda_one_for_k_above_one() {
        for (n, k) in [(4, 2), (5, 3), (6, 2), (3, 2)] {
            let g = graph(n, k);
            assert_eq!(vertex_connectivity_oracle(&g), 1, "kappa {n},{k}");
            assert_eq!(edge_connectivity_oracle(&g), 1, "lambda {n},{k}");
        }
    }

    #[test]
    fn four_cycle() {
        let g = graph(2, 1);
        assert!(articulation_points(&g).is_empty());
        assert!(bridges(&g).is_empty());
        assert_eq!(vertex_connectivity_oracle(&g), 2);
        assert_eq!(edge_connectivity_oracle(&g), 2);
    }

    #[test]
    fn k_one_uses_flow() {
        // {-1,2} has exactly the neighbors {1} and {2}.
        let g = graph(3, 1);
        assert!(articulation_points(&g).is_empty());
        assert_eq!(vertex_connectivity_oracle(&g), 2);
        assert_eq!(edge_connectivity_oracle(&g), 2);
    }

    #[test]
    fn degree_one_vertices_hang_on_bridges() {
        let g = graph(4, 2);
        let b = bridges(&g);
        assert_eq!(b.len(), 6);
        for (u, v) in b {
            assert!(g.neighbors(u).len() == 1 || g.neighbors(v).len() == 1);
        }
        assert_eq!(articulation_points(&g).len(), 6);
    }
}
