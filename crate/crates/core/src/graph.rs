//! Signed-subset vertices and construction of `H_B(n,k)`.
//!
//! The ground set is `{±1, ±2, …, ±(n-1), n}` represented by magnitude
//! indices only. A vertex is a non-empty set of distinct magnitudes in which
//! every element except the largest may carry a minus sign. Part 1 holds the
//! all-positive `k`-subsets; Part 2 holds everything else. A Part 1 vertex `X`
//! is adjacent to a Part 2 vertex `Y` when `X ⊆ |Y|` or `|Y| ⊆ X`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported number of magnitudes.
pub const MAX_N: u32 = 30;

/// Default ceiling on the number of vertices a build may materialize.
pub const DEFAULT_VERTEX_CEILING: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameters n={n}, k={k}: need 2 <= n <= {MAX_N} and 1 <= k < n")]
    InvalidParams { n: u32, k: u32 },
    #[error("H_B({n},{k}) has {required} vertices, above the ceiling of {ceiling}")]
    Capacity {
        n: u32,
        k: u32,
        required: u64,
        ceiling: u64,
    },
    #[error("vertex index {index} out of range (graph has {len} vertices)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid signed vertex: {0}")]
    InvalidVertex(String),
}

/// The pair `(n, k)` defining `H_B(n,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct GroundParams {
    n: u32,
    k: u32,
}

#[derive(Deserialize)]
struct RawParams {
    n: u32,
    k: u32,
}

impl TryFrom<RawParams> for GroundParams {
    type Error = GraphError;

    fn try_from(raw: RawParams) -> Result<Self, Self::Error> {
        Self::new(raw.n, raw.k)
    }
}

impl GroundParams {
    pub fn new(n: u32, k: u32) -> Result<Self, GraphError> {
        if !(2..=MAX_N).contains(&n) || k < 1 || k >= n {
            return Err(GraphError::InvalidParams { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `(3^n - 1) / 2`, exact for every admissible `n`.
    pub fn vertex_count(&self) -> u64 {
        (3u64.pow(self.n) - 1) / 2
    }

    /// True inside the range covered by the distance and eccentricity
    /// theorems: `n > 2` and `1 < k < n`.
    pub fn in_distance_regime(&self) -> bool {
        self.n > 2 && self.k > 1
    }
}

impl fmt::Display for GroundParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_B({},{})", self.n, self.k)
    }
}

/// A signed subset encoded as two bitmasks; bit `i - 1` stands for magnitude `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedVertex {
    mag: u32,
    neg: u32,
}

impl SignedVertex {
    pub fn new(mag: u32, neg: u32) -> Result<Self, GraphError> {
        if mag == 0 {
            return Err(GraphError::InvalidVertex("empty set".into()));
        }
        if mag >> MAX_N != 0 {
            return Err(GraphError::InvalidVertex(format!(
                "magnitude above {MAX_N} in mask {mag:#x}"
            )));
        }
        if neg & !mag != 0 {
            return Err(GraphError::InvalidVertex(format!(
                "sign mask {neg:#x} not contained in magnitude mask {mag:#x}"
            )));
        }
        if neg & highest_bit(mag) != 0 {
            return Err(GraphError::InvalidVertex(
                "largest-magnitude element must be positive".into(),
            ));
        }
        Ok(Self { mag, neg })
    }

    /// Builds a vertex from signed element values such as `[-1, 2, 4]`.
    pub fn from_elements(elements: &[i32]) -> Result<Self, GraphError> {
        let mut mag = 0u32;
        let mut neg = 0u32;
        for &e in elements {
            let m = e.unsigned_abs();
            if m == 0 || m > MAX_N {
                return Err(GraphError::InvalidVertex(format!(
                    "element {e} out of range"
                )));
            }
            let bit = 1u32 << (m - 1);
            if mag & bit != 0 {
                return Err(GraphError::InvalidVertex(format!(
                    "magnitude {m} appears twice"
                )));
            }
            mag |= bit;
            if e < 0 {
                neg |= bit;
            }
        }
        Self::new(mag, neg)
    }

    /// The magnitude set, i.e. the element-wise absolute value.
    pub fn magnitude_set(&self) -> u32 {
        self.mag
    }

    pub fn neg(&self) -> u32 {
        self.neg
    }

    /// Number of elements, the `r` of an r-vertex.
    pub fn size(&self) -> u32 {
        self.mag.count_ones()
    }

    /// Signed elements in ascending order of magnitude.
    pub fn elements(&self) -> Vec<i32> {
        (0..MAX_N)
            .filter(|b| self.mag >> b & 1 == 1)
            .map(|b| {
                let v = (b + 1) as i32;
                if self.neg >> b & 1 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }

    fn sort_key(&self) -> (u32, u32, u32) {
        (self.size(), self.mag, self.neg)
    }
}

/// Renders as `{-1,2,4}`.
impl fmt::Display for SignedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for SignedVertex {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| GraphError::InvalidVertex(format!("expected braces in {s:?}")))?;
        let elements = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| GraphError::InvalidVertex(format!("bad element {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_elements(&elements)
    }
}

fn highest_bit(mask: u32) -> u32 {
    if mask == 0 {
        0
    } else {
        1 << (31 - mask.leading_zeros())
    }
}

/// Adjacency between a Part 1 vertex `x` and a Part 2 vertex `y`:
/// one magnitude set contains the other (non-strict inclusion).
pub fn is_adjacent(x: &SignedVertex, y: &SignedVertex) -> bool {
    let (a, b) = (x.mag, y.mag);
    a & b == a || a & b == b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Part {
    Part1,
    Part2,
}

impl Part {
    pub fn index(self) -> u8 {
        match self {
            Part::Part1 => 1,
            Part::Part2 => 2,
        }
    }
}

/// All valid signed subsets, split into (Part 1, Part 2), each in
/// `(size, mag, neg)` ascending order.
pub fn enumerate_vertices(
    params: GroundParams,
    ceiling: u64,
) -> Result<(Vec<SignedVertex>, Vec<SignedVertex>), GraphError> {
    check_capacity(params, ceiling)?;
    let mut part1 = Vec::new();
    let mut part2 = Vec::new();
    for v in all_vertices(params.n) {
        if v.neg == 0 && v.size() == params.k {
            part1.push(v);
        } else {
            part2.push(v);
        }
    }
    Ok((part1, part2))
}

fn check_capacity(params: GroundParams, ceiling: u64) -> Result<(), GraphError> {
    let required = params.vertex_count();
    if required > ceiling {
        return Err(GraphError::Capacity {
            n: params.n,
            k: params.k,
            required,
            ceiling,
        });
    }
    Ok(())
}

/// Every valid signed subset over `1..=n` in deterministic order.
fn all_vertices(n: u32) -> Vec<SignedVertex> {
    let full = (1u32 << n) - 1;
    let mut out = Vec::with_capacity(((3u64.pow(n) - 1) / 2) as usize);
    for size in 1..=n {
        // Gosper's hack: masks of equal popcount in ascending order.
        let mut mag = (1u32 << size) - 1;
        while mag <= full {
            let free = mag & !highest_bit(mag);
            let mut neg = 0u32;
            loop {
                out.push(SignedVertex { mag, neg });
                if neg == free {
                    break;
                }
                // next subset of `free` in ascending order
                neg = ((neg | !free).wrapping_add(1)) & free;
            }
            let c = mag & mag.wrapping_neg();
            let r = mag + c;
            if r == 0 || r > full {
                break;
            }
            mag = (((r ^ mag) >> 2) / c) | r;
        }
    }
    out
}

/// Immutable `H_B(n,k)` with CSR adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KneserBGraph {
    params: GroundParams,
    vertices: Vec<SignedVertex>,
    parts: Vec<Part>,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    edge_count: usize,
}

pub struct GraphBuilder {
    params: GroundParams,
    ceiling: u64,
}

impl GraphBuilder {
    pub fn new(params: GroundParams) -> Self {
        Self {
            params,
            ceiling: DEFAULT_VERTEX_CEILING,
        }
    }

    pub fn vertex_ceiling(mut self, ceiling: u64) -> Self {
        self.ceiling = ceiling;
        self
    }

    pub fn build(self) -> Result<KneserBGraph, GraphError> {
        check_capacity(self.params, self.ceiling)?;
        let GroundParams { n, k } = self.params;
        let vertices = all_vertices(n);
        let parts: Vec<Part> = vertices
            .iter()
            .map(|v| {
                if v.size() == k && v.neg == 0 {
                    Part::Part1
                } else {
                    Part::Part2
                }
            })
            .collect();
        debug_assert!(vertices
            .windows(2)
            .all(|w| w[0].sort_key() < w[1].sort_key()));

        // Vertices sharing a magnitude set are contiguous; index each block.
        let mut blocks: Vec<(u32, u32, usize, usize)> = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            match blocks.last_mut() {
                Some(b) if b.1 == v.mag => b.3 += 1,
                _ => blocks.push((v.size(), v.mag, i, 1)),
            }
        }
        let block_of = |mag: u32| -> (usize, usize) {
            let key = (mag.count_ones(), mag);
            let at = blocks
                .binary_search_by_key(&key, |b| (b.0, b.1))
                .expect("every non-empty mask has a block");
            (blocks[at].2, blocks[at].3)
        };

        let full = (1u32 << n) - 1;
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); vertices.len()];
        for (x, v) in vertices.iter().enumerate() {
            if parts[x] != Part::Part1 {
                continue;
            }
            let m = v.mag;
            let mut related = Vec::new();
            // non-empty subsets of m
            let mut s = m;
            while s != 0 {
                related.push(s);
                s = (s - 1) & m;
            }
            // strict supersets of m
            let rest = full & !m;
            let mut t = rest;
            while t != 0 {
                related.push(m | t);
                t = (t - 1) & rest;
            }
            for mag in related {
                let (start, len) = block_of(mag);
                for y in start..start + len {
                    if parts[y] == Part::Part2 {
                        lists[x].push(y as u32);
                        lists[y].push(x as u32);
                    }
                }
            }
        }

        let mut offsets = Vec::with_capacity(vertices.len() + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for list in &mut lists {
            list.sort_unstable();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        let edge_count = neighbors.len() / 2;
        Ok(KneserBGraph {
            params: self.params,
            vertices,
            parts,
            offsets,
            neighbors,
            edge_count,
        })
    }
}

/// Builds `H_B(n,k)` with the default vertex ceiling.
pub fn build_graph(params: GroundParams) -> Result<KneserBGraph, GraphError> {
    GraphBuilder::new(params).build()
}

impl KneserBGraph {
    pub fn params(&self) -> GroundParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> &[SignedVertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &SignedVertex {
        &self.vertices[v]
    }

    pub fn part(&self, v: usize) -> Part {
        self.parts[v]
    }

    /// Neighbors of `v`, ascending. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        if v >= self.vertices.len() {
            return Err(GraphError::IndexOutOfRange {
                index: v,
                len: self.vertices.len(),
            });
        }
        Ok(self.offsets[v + 1] - self.offsets[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertices.len() && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn index_of(&self, v: &SignedVertex) -> Option<usize> {
        self.vertices
            .binary_search_by_key(&v.sort_key(), |w| w.sort_key())
            .ok()
    }

    pub fn part1_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.parts[v] == Part::Part1)
    }

    pub fn part2_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.parts[v] == Part::Part2)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertices.len()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }
}
