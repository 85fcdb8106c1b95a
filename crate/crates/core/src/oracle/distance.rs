//! Breadth-first distances and everything derived from all-pairs BFS.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::formulas::DistanceDistribution;
use crate::graph::{KneserBGraph, Part};

const UNSEEN: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsResult {
    pub source: usize,
    /// `None` for vertices in another component.
    pub dist: Vec<Option<u32>>,
}

pub fn bfs(g: &KneserBGraph, source: usize) -> BfsResult {
    let mut dist = vec![UNSEEN; g.vertex_count()];
    let mut queue = VecDeque::new();
    bfs_into(g, source, &mut dist, &mut queue);
    BfsResult {
        source,
        dist: dist
            .into_iter()
            .map(|d| (d != UNSEEN).then_some(d))
            .collect(),
    }
}

pub(crate) fn bfs_into(
    g: &KneserBGraph,
    source: usize,
    dist: &mut [u32],
    queue: &mut VecDeque<u32>,
) {
    dist.fill(UNSEEN);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source as u32);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        for &w in g.neighbors(u as usize) {
            if dist[w as usize] == UNSEEN {
                dist[w as usize] = du + 1;
                queue.push_back(w);
            }
        }
    }
}

/// Aggregates of one BFS per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AllPairs {
    /// Unordered pairs per distance.
    pub histogram: BTreeMap<u32, u64>,
    pub unreachable: u64,
    /// Unordered Part 1 pairs per distance.
    pub part1_pairs: BTreeMap<u32, u64>,
    /// Unordered Part 2 pairs per distance.
    pub part2_pairs: BTreeMap<u32, u64>,
    /// Unordered cross-part pairs per distance.
    pub cross_pairs: BTreeMap<u32, u64>,
    /// Part 2 pairs at distance 4 keyed by (smaller size, larger size).
    pub part2_distance4_by_class: BTreeMap<(u32, u32), u64>,
    /// `None` when some vertex is unreachable from `v`.
    pub eccentricity: Vec<Option<u32>>,
    /// Sum of distances to every reachable vertex.
    pub status: Vec<u64>,
}

#[derive(Default)]
struct SourceSummary {
    histogram: BTreeMap<u32, u64>,
    unreachable: u64,
    part1_pairs: BTreeMap<u32, u64>,
    part2_pairs: BTreeMap<u32, u64>,
    cross_pairs: BTreeMap<u32, u64>,
    by_class: BTreeMap<(u32, u32), u64>,
    eccentricity: Option<u32>,
    status: u64,
}

fn merge_into<K: Ord + Copy>(into: &mut BTreeMap<K, u64>, from: &BTreeMap<K, u64>) {
    for (k, v) in from {
        *into.entry(*k).or_default() += v;
    }
}

impl AllPairs {
    /// Runs one BFS per vertex in parallel; per-source results are merged by
    /// addition, so the outcome is independent of scheduling.
    pub fn compute(g: &KneserBGraph) -> Self {
        let n = g.vertex_count();
        let summaries: Vec<SourceSummary> = (0..n)
            .into_par_iter()
            .map_init(
                || (vec![UNSEEN; n], VecDeque::new()),
                |(dist, queue), s| summarize_source(g, s, dist, queue),
            )
            .collect();

        let mut out = AllPairs {
            eccentricity: Vec::with_capacity(n),
            status: Vec::with_capacity(n),
            ..Default::default()
        };
        for s in &summaries {
            merge_into(&mut out.histogram, &s.histogram);
            merge_into(&mut out.part1_pairs, &s.part1_pairs);
            merge_into(&mut out.part2_pairs, &s.part2_pairs);
            merge_into(&mut out.cross_pairs, &s.cross_pairs);
            merge_into(&mut out.part2_distance4_by_class, &s.by_class);
            out.unreachable += s.unreachable;
            out.eccentricity.push(s.eccentricity);
            out.status.push(s.status);
        }
        out
    }

    pub fn distribution(&self, g: &KneserBGraph) -> DistanceDistribution {
        let p = g.params();
        DistanceDistribution {
            n: p.n(),
            k: p.k(),
            counts: self
                .histogram
                .iter()
                .map(|(h, c)| (*h, BigInt::from(*c)))
                .collect(),
            unreachable: BigInt::from(self.unreachable),
        }
    }

    /// `None` for a disconnected graph.
    pub fn profile(&self) -> Option<EccentricityProfile> {
        let ecc: Vec<u32> = self.eccentricity.iter().copied().collect::<Option<_>>()?;
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let min_status = self.status.iter().copied().min().unwrap_or(0);
        let select = |pred: &dyn Fn(usize) -> bool| -> BTreeSet<usize> {
            (0..ecc.len()).filter(|&v| pred(v)).collect()
        };
        Some(EccentricityProfile {
            center: select(&|v| ecc[v] == radius),
            periphery: select(&|v| ecc[v] == diameter),
            median: select(&|v| self.status[v] == min_status),
            diameter,
            radius,
            status: self.status.clone(),
            ecc,
        })
    }
}

fn summarize_source(
    g: &KneserBGraph,
    s: usize,
    dist: &mut [u32],
    queue: &mut VecDeque<u32>,
) -> SourceSummary {
    bfs_into(g, s, dist, queue);
    let mut out = SourceSummary::default();
    let mut max = 0u32;
    let mut connected = true;
    let ps = g.part(s);
    let size_s = g.vertex(s).size();
    for (t, &d) in dist.iter().enumerate() {
        if d == UNSEEN {
            connected = false;
            if t > s {
                out.unreachable += 1;
            }
            continue;
        }
        max = max.max(d);
        out.status += d as u64;
        if t <= s {
            continue;
        }
        *out.histogram.entry(d).or_default() += 1;
        let bucket = match (ps, g.part(t)) {
            (Part::Part1, Part::Part1) => &mut out.part1_pairs,
            (Part::Part2, Part::Part2) => &mut out.part2_pairs,
            _ => &mut out.cross_pairs,
        };
        *bucket.entry(d).or_default() += 1;
        if d == 4 && ps == Part::Part2 && g.part(t) == Part::Part2 {
            let size_t = g.vertex(t).size();
            let key = (size_s.min(size_t), size_s.max(size_t));
            *out.by_class.entry(key).or_default() += 1;
        }
    }
    out.eccentricity = connected.then_some(max);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub diameter: u32,
    pub radius: u32,
    pub center: BTreeSet<usize>,
    pub periphery: BTreeSet<usize>,
    pub median: BTreeSet<usize>,
    pub status: Vec<u64>,
}

/// Exact unordered-pair counts per distance; unreachable pairs are kept separately.
pub fn distance_histogram(g: &KneserBGraph) -> DistanceDistribution {
    AllPairs::compute(g).distribution(g)
}

/// `None` if the graph is disconnected.
pub fn eccentricity_profile(g: &KneserBGraph) -> Option<EccentricityProfile> {
    AllPairs::compute(g).profile()
}

/// Part 2 pairs at distance 4 per unordered pair of vertex sizes.
pub fn distance4_class_histogram(g: &KneserBGraph) -> BTreeMap<(u32, u32), u64> {
    AllPairs::compute(g).part2_distance4_by_class
}
