use crate::graph::KneserBGraph;

/// Default vertex count up to which the minimum is searched exhaustively.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 24;

/// Exhaustive search never runs beyond this many vertices (bitmask width).
const HARD_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domination {
    /// Proven minimum.
    Exact(usize),
    /// Size of a verified dominating set; the minimum may be smaller.
    UpperBoundOnly(usize),
}

/// True when every vertex is in `set` or adjacent to a member of it.
pub fn is_dominating(g: &KneserBGraph, set: &[usize]) -> bool {
    let mut covered = vec![false; g.vertex_count()];
    for &v in set {
        covered[v] = true;
        for &w in g.neighbors(v) {
            covered[w as usize] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Minimum dominating set size for graphs up to `exhaustive_limit` vertices.
/// Larger graphs only get Part 1 checked as a dominating set (falling back to
/// a greedy set if it is not one).
pub fn min_dominating_set(g: &KneserBGraph, exhaustive_limit: usize) -> Domination {
    let n = g.vertex_count();
    if n <= exhaustive_limit.min(HARD_LIMIT) {
        return Domination::Exact(exhaustive(g));
    }
    let part1: Vec<usize> = g.part1_indices().collect();
    if is_dominating(g, &part1) {
        Domination::UpperBoundOnly(part1.len())
    } else {
        Domination::UpperBoundOnly(greedy(g).len())
    }
}

fn closed_neighborhoods(g: &KneserBGraph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |acc, &w| acc | 1u64 << w)
        })
        .collect()
}

/// Lower bound from degree counting and from leaves: every isolated vertex
/// must be chosen, and each support vertex (neighbor of a leaf) forces one
/// member among itself and its leaves.
fn lower_bound(g: &KneserBGraph) -> usize {
    let n = g.vertex_count();
    let max_deg = (0..n).map(|v| g.neighbors(v).len()).max().unwrap_or(0);
    let by_degree = n.div_ceil(max_deg + 1);
    let mut isolated = 0;
    let mut supports = vec![false; n];
    for v in 0..n {
        match g.neighbors(v) {
            [] => isolated += 1,
            [s] => {
                let s = *s as usize;
                // a K2 component counts once
                if !(g.neighbors(s).len() == 1 && s < v) {
                    supports[s] = true;
                }
            }
            _ => {}
        }
    }
    let forced = isolated + supports.iter().filter(|&&s| s).count();
    by_degree.max(forced)
}

fn greedy(g: &KneserBGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    let mut left = n;
    let mut chosen = Vec::new();
    while left > 0 {
        let gain = |v: usize| {
            usize::from(!covered[v])
                + g.neighbors(v)
                    .iter()
                    .filter(|&&w| !covered[w as usize])
                    .count()
        };
        let best = (0..n)
            .max_by_key(|&v| (gain(v), std::cmp::Reverse(v)))
            .unwrap();
        for w in std::iter::once(best).chain(g.neighbors(best).iter().map(|&w| w as usize)) {
            if !covered[w] {
                covered[w] = true;
                left -= 1;
            }
        }
        chosen.push(best);
    }
    chosen
}

/// Tries subsets in increasing cardinality, starting at the lower bound.
fn exhaustive(g: &KneserBGraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let nbhd = closed_neighborhoods(g);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let upper = greedy(g).len();
    for size in lower_bound(g)..upper {
        // Gosper's hack over n-bit masks with `size` bits set.
        let mut mask = (1u64 << size) - 1;
        loop {
            let mut cover = 0u64;
            let mut rest = mask;
            while rest != 0 {
                cover |= nbhd[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            if cover == all {
                return size;
            }
            let c = mask & mask.wrapping_neg();
            let Some(r) = mask.checked_add(c) else { break };
            if r > all {
                break;
            }
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    upper
}
