//! Hopcroft–Karp maximum matching between the two parts.

use std::collections::VecDeque;

use crate::graph::KneserBGraph;

const NIL: usize = usize::MAX;
const INF: u32 = u32::MAX;

struct HopcroftKarp<'a> {
    g: &'a KneserBGraph,
    left: Vec<usize>,
    /// Left slot of each vertex that is on the left side.
    slot: Vec<usize>,
    mate_left: Vec<usize>,
    mate_right: Vec<usize>,
    layer: Vec<u32>,
}

impl<'a> HopcroftKarp<'a> {
    fn new(g: &'a KneserBGraph) -> Self {
        let left: Vec<usize> = g.part1_indices().collect();
        let mut slot = vec![NIL; g.vertex_count()];
        for (i, &v) in left.iter().enumerate() {
            slot[v] = i;
        }
        Self {
            g,
            mate_left: vec![NIL; left.len()],
            mate_right: vec![NIL; g.vertex_count()],
            layer: vec![INF; left.len()],
            left,
            slot,
        }
    }

    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for i in 0..self.left.len() {
            if self.mate_left[i] == NIL {
                self.layer[i] = 0;
                queue.push_back(i);
            } else {
                self.layer[i] = INF;
            }
        }
        let mut found = false;
        while let Some(i) = queue.pop_front() {
            for &y in self.g.neighbors(self.left[i]) {
                match self.mate_right[y as usize] {
                    NIL => found = true,
                    v => {
                        let j = self.slot[v];
                        if self.layer[j] == INF {
                            self.layer[j] = self.layer[i] + 1;
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
        found
    }

    fn dfs(&mut self, i: usize) -> bool {
        let x = self.left[i];
        for &y in self.g.neighbors(x) {
            let y = y as usize;
            let next = self.mate_right[y];
            let ok = if next == NIL {
                true
            } else {
                let j = self.slot[next];
                self.layer[j] == self.layer[i] + 1 && self.dfs(j)
            };
            if ok {
                self.mate_left[i] = y;
                self.mate_right[y] = x;
                return true;
            }
        }
        self.layer[i] = INF;
        false
    }

    fn run(mut self) -> usize {
        let mut size = 0;
        while self.bfs() {
            for i in 0..self.left.len() {
                if self.mate_left[i] == NIL && self.dfs(i) {
                    size += 1;
                }
            }
        }
        size
    }
}

/// Maximum matching cardinality. By König's theorem this is the minimum
/// vertex cover, and `|V|` minus it is the independence number.
pub fn max_matching(g: &KneserBGraph) -> usize {
    HopcroftKarp::new(g).run()
}
