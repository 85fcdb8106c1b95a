//! Closed-form invariants of `H_B(n,k)` as exact integer arithmetic.
//!
//! Every function here is a pure function of `(n, k)`. Results that only
//! hold for `n > 2, 1 < k < n` return [`FormulaError::Domain`] outside that
//! range; results stated only for `k > 1` return [`Coverage::NotCovered`]
//! for `k = 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decimal;
use crate::graph::GroundParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{op} is only defined for n > 2 and 1 < k < n (got n={n}, k={k})")]
    Domain { op: &'static str, n: u32, k: u32 },
    #[error("class pair ({i},{j}) is not admissible for n={n}, k={k}")]
    ClassPair { i: u32, j: u32, n: u32, k: u32 },
    #[error("no vertices of size {r} exist for n={n}")]
    ClassSize { r: u32, n: u32 },
}

/// Value of a result whose source statement only covers part of the parameter range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coverage<T> {
    Value(T),
    NotCovered,
}

impl<T> Coverage<T> {
    pub fn value(self) -> Option<T> {
        match self {
            Coverage::Value(v) => Some(v),
            Coverage::NotCovered => None,
        }
    }
}

/// `C(a, b)`, zero whenever `b < 0`, `b > a` or `a < 0`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

fn pow3(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(3), e as usize)
}

fn half(x: BigInt) -> BigInt {
    debug_assert!((&x % 2u32).is_zero(), "odd value {x} halved");
    x / 2
}

fn require_distance_regime(op: &'static str, p: GroundParams) -> Result<(), FormulaError> {
    if p.in_distance_regime() {
        Ok(())
    } else {
        Err(FormulaError::Domain {
            op,
            n: p.n(),
            k: p.k(),
        })
    }
}

fn nk(p: GroundParams) -> (i64, i64) {
    (p.n() as i64, p.k() as i64)
}

/// `(3^n - 1) / 2`.
pub fn order_formula(n: u32) -> BigInt {
    half(pow3(n) - 1)
}

/// Degree of every Part 1 vertex: `(3^k - 3)/2 + 2^(k-1) (3^(n-k) - 1)`.
pub fn part1_degree(p: GroundParams) -> BigInt {
    let (n, k) = (p.n(), p.k());
    half(pow3(k) - 3) + pow2(k - 1) * (pow3(n - k) - 1)
}

pub fn size_formula(p: GroundParams) -> BigInt {
    let (n, k) = nk(p);
    binom(n, k) * part1_degree(p)
}

/// `Σ_{i=1..n} 2^(i-1) C(n,i) - C(n,k)`, the size of Part 2.
pub fn independence_number(p: GroundParams) -> BigInt {
    let (n, k) = nk(p);
    let total: BigInt = (1..=p.n()).map(|i| pow2(i - 1) * binom(n, i as i64)).sum();
    total - binom(n, k)
}

pub fn covering_number(p: GroundParams) -> BigInt {
    let (n, k) = nk(p);
    binom(n, k)
}

pub fn domination_number(p: GroundParams) -> BigInt {
    let (n, k) = nk(p);
    binom(n, k)
}

pub fn vertex_connectivity(p: GroundParams) -> Coverage<BigInt> {
    if p.k() > 1 {
        Coverage::Value(BigInt::one())
    } else {
        Coverage::NotCovered
    }
}

pub fn edge_connectivity(p: GroundParams) -> Coverage<BigInt> {
    vertex_connectivity(p)
}

pub fn girth_formula(p: GroundParams) -> Coverage<BigInt> {
    if p.k() > 1 {
        Coverage::Value(BigInt::from(4))
    } else {
        Coverage::NotCovered
    }
}

/// `|E| - |V| + 1`; the graph is connected.
pub fn circuit_rank(p: GroundParams) -> BigInt {
    size_formula(p) - order_formula(p.n()) + 1
}

/// `Σ multiplicity · (degree - 2)` over a complete degree sequence.
pub fn omega_definitional(classes: &[DegreeClass]) -> BigInt {
    classes
        .iter()
        .map(|c| &c.multiplicity * (&c.degree - 2))
        .sum()
}

/// The published closed form `C(n,k) Σ C(k,i) 2^(i-1) - Σ C(n,i) 2^i`,
/// evaluated as printed. It does not agree with [`omega_definitional`].
pub fn omega_paper_closed_form(p: GroundParams) -> BigInt {
    let (n, k) = nk(p);
    let first: BigInt = (1..=p.n()).map(|i| binom(k, i as i64) * pow2(i - 1)).sum();
    let second: BigInt = (1..=p.n()).map(|i| binom(n, i as i64) * pow2(i)).sum();
    binom(n, k) * first - second
}

/// Number of closed regions `Ω/2 + c` with the definitional Ω and `c = 1`.
pub fn face_count(p: GroundParams) -> BigInt {
    half(omega_definitional(&degree_sequence_formula(p))) + 1
}

/// Which vertices a degree class describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassKind {
    /// The all-positive `k`-subsets.
    Part1KVertex,
    /// Part 2 vertices with exactly `r` elements.
    Part2RVertex(u32),
}

impl ClassKind {
    pub fn size(&self, p: GroundParams) -> u32 {
        match *self {
            ClassKind::Part1KVertex => p.k(),
            ClassKind::Part2RVertex(r) => r,
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKind::Part1KVertex => f.write_str("V1"),
            ClassKind::Part2RVertex(r) => write!(f, "V2:r={r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeClass {
    pub kind: ClassKind,
    #[serde(with = "decimal::bigint")]
    pub degree: BigInt,
    #[serde(with = "decimal::bigint")]
    pub multiplicity: BigInt,
}

/// All degree classes, non-increasing by degree. Among equal degrees the
/// class of larger vertices comes first. Empty classes are dropped.
pub fn degree_sequence_formula(p: GroundParams) -> Vec<DegreeClass> {
    let (n, k) = nk(p);
    let mut classes = vec![DegreeClass {
        kind: ClassKind::Part1KVertex,
        degree: part1_degree(p),
        multiplicity: binom(n, k),
    }];
    for r in 1..=p.n() {
        let ri = r as i64;
        let (degree, multiplicity) = match ri.cmp(&k) {
            std::cmp::Ordering::Less => (binom(n - ri, k - ri), pow2(r - 1) * binom(n, ri)),
            std::cmp::Ordering::Equal => (BigInt::one(), (pow2(r - 1) - 1) * binom(n, k)),
            std::cmp::Ordering::Greater => (binom(ri, k), pow2(r - 1) * binom(n, ri)),
        };
        if !multiplicity.is_zero() {
            classes.push(DegreeClass {
                kind: ClassKind::Part2RVertex(r),
                degree,
                multiplicity,
            });
        }
    }
    classes.sort_by(|a, b| {
        b.degree
            .cmp(&a.degree)
            .then_with(|| b.kind.size(p).cmp(&a.kind.size(p)))
            .then_with(|| a.kind.cmp(&b.kind))
    });
    classes
}

/// Merges classes of equal degree into `(degree, multiplicity)` pairs,
/// non-increasing by degree.
pub fn merge_degree_classes(classes: &[DegreeClass]) -> Vec<(BigInt, BigInt)> {
    let mut merged: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    for c in classes {
        *merged.entry(c.degree.clone()).or_default() += &c.multiplicity;
    }
    merged.into_iter().rev().collect()
}

/// Count of adjacent pairs, identical to [`size_formula`].
pub fn d1_formula(p: GroundParams) -> Result<BigInt, FormulaError> {
    require_distance_regime("d1_formula", p)?;
    Ok(size_formula(p))
}

/// Pairs of Part 1 vertices, all at distance 2.
pub fn d2_v1_formula(p: GroundParams) -> Result<BigInt, FormulaError> {
    require_distance_regime("d2_v1_formula", p)?;
    let (n, k) = nk(p);
    Ok(binom_big(&binom(n, k)))
}

/// Non-adjacent cross-part pairs, all at distance 3.
pub fn d3_formula(p: GroundParams) -> Result<BigInt, FormulaError> {
    require_distance_regime("d3_formula", p)?;
    let (n, k) = nk(p);
    let part1 = binom(n, k);
    Ok(&part1 * (order_formula(p.n()) - &part1) - size_formula(p))
}

/// `C(x, 2)` for an arbitrary-precision `x >= 0`.
fn binom_big(x: &BigInt) -> BigInt {
    half(x * (x - 1))
}

/// Pairs of Part 2 vertices: `C(|V| - C(n,k), 2)`.
pub fn part2_pair_count(p: GroundParams) -> BigInt {
    let (n, k) = nk(p);
    binom_big(&(order_formula(p.n()) - binom(n, k)))
}

/// One summand of `P_{i,j}`, before any halving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PijTerm {
    pub i: u32,
    pub j: u32,
    /// Size of the shared magnitude set.
    pub t: u32,
    #[serde(with = "decimal::bigint")]
    pub value: BigInt,
}

/// `(i, j)` with `1 <= i <= j <= n-1` and `k+1 <= i+j <= n+k-1`.
pub fn admissible_class_pairs(p: GroundParams) -> Vec<(u32, u32)> {
    let (n, k) = (p.n(), p.k());
    let mut out = Vec::new();
    for i in 1..n {
        for j in i..n {
            if k < i + j && i + j < n + k {
                out.push((i, j));
            }
        }
    }
    out
}

fn check_pair(p: GroundParams, i: u32, j: u32) -> Result<(), FormulaError> {
    require_distance_regime("p_ij", p)?;
    if !admissible_class_pairs(p).contains(&(i, j)) {
        return Err(FormulaError::ClassPair {
            i,
            j,
            n: p.n(),
            k: p.k(),
        });
    }
    Ok(())
}

/// The summands of `P_{i,j}` indexed by overlap size `t`, with
/// `max(0, i+j-n) <= t < i+j-k` and `t < min(i,k)`. The diagonal cases
/// (`i = j`) are halved afterwards by [`p_ij`].
pub fn p_ij_terms(p: GroundParams, i: u32, j: u32) -> Result<Vec<PijTerm>, FormulaError> {
    check_pair(p, i, j)?;
    let (n, k) = nk(p);
    let (ii, jj) = (i as i64, j as i64);
    let lo = (ii + jj - n).max(0);
    let hi = (ii + jj - k).min(ii.min(k)); // exclusive
    let kv2 = pow2(p.k() - 1) - 1; // Part 2 vertices per all-positive k-set
    let mut terms = Vec::new();
    for t in lo..hi {
        let value = if i == j && i == p.k() {
            binom(n, k) * &kv2 * &kv2 * binom(n - k, k - t) * binom(k, t)
        } else if i == j {
            binom(n, ii) * pow2(2 * (i - 1)) * binom(n - ii, ii - t) * binom(ii, t)
        } else if i == p.k() {
            binom(n, k) * &kv2 * pow2(j - 1) * binom(n - k, jj - t) * binom(k, t)
        } else if j == p.k() {
            binom(n, ii) * pow2(i - 1) * &kv2 * binom(n - ii, k - t) * binom(ii, t)
        } else {
            binom(n, ii) * pow2(i - 1) * pow2(j - 1) * binom(n - ii, jj - t) * binom(ii, t)
        };
        terms.push(PijTerm {
            i,
            j,
            t: t as u32,
            value,
        });
    }
    Ok(terms)
}

/// Unordered pairs of a Part 2 `i`-vertex and a Part 2 `j`-vertex at distance 4.
pub fn p_ij(p: GroundParams, i: u32, j: u32) -> Result<BigInt, FormulaError> {
    let sum: BigInt = p_ij_terms(p, i, j)?.into_iter().map(|t| t.value).sum();
    Ok(if i == j { half(sum) } else { sum })
}

/// Pairs at distance 4, all inside Part 2.
pub fn d4_v2_formula(p: GroundParams) -> Result<BigInt, FormulaError> {
    require_distance_regime("d4_v2_formula", p)?;
    admissible_class_pairs(p)
        .into_iter()
        .map(|(i, j)| p_ij(p, i, j))
        .sum()
}

/// Part 2 pairs at distance 2, as the complement of the distance-4 pairs.
pub fn d2_v2_formula(p: GroundParams) -> Result<BigInt, FormulaError> {
    Ok(part2_pair_count(p) - d4_v2_formula(p)?)
}

/// Unordered vertex-pair counts per distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceDistribution {
    pub n: u32,
    pub k: u32,
    #[serde(with = "decimal::bigint_map")]
    pub counts: BTreeMap<u32, BigInt>,
    /// Pairs in different components; never folded into `counts`.
    #[serde(with = "decimal::bigint")]
    pub unreachable: BigInt,
}

impl DistanceDistribution {
    pub fn count(&self, h: u32) -> BigInt {
        self.counts.get(&h).cloned().unwrap_or_default()
    }

    pub fn total_pairs(&self) -> BigInt {
        self.counts.values().sum::<BigInt>() + &self.unreachable
    }
}

pub fn distance_distribution_formula(
    p: GroundParams,
) -> Result<DistanceDistribution, FormulaError> {
    require_distance_regime("distance_distribution_formula", p)?;
    let d4 = d4_v2_formula(p)?;
    let d2 = d2_v1_formula(p)? + part2_pair_count(p) - &d4;
    let counts = BTreeMap::from([(1, d1_formula(p)?), (2, d2), (3, d3_formula(p)?), (4, d4)]);
    Ok(DistanceDistribution {
        n: p.n(),
        k: p.k(),
        counts,
        unreachable: BigInt::zero(),
    })
}

/// Vertex classes distinguished by the eccentricity result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EccentricityClass {
    Part1,
    /// The Part 2 vertices with all `n` magnitudes.
    Part2Full,
    /// Part 2 vertices with `r < n` elements.
    Part2Partial {
        r: u32,
    },
}

pub fn eccentricity_class(p: GroundParams, class: EccentricityClass) -> Result<u32, FormulaError> {
    require_distance_regime("eccentricity_class", p)?;
    match class {
        EccentricityClass::Part1 => Ok(3),
        EccentricityClass::Part2Full => Ok(2),
        EccentricityClass::Part2Partial { r } if (1..p.n()).contains(&r) => Ok(4),
        EccentricityClass::Part2Partial { r } => Err(FormulaError::ClassSize { r, n: p.n() }),
    }
}

pub fn diameter_radius(p: GroundParams) -> Result<(u32, u32), FormulaError> {
    require_distance_regime("diameter_radius", p)?;
    Ok((4, 2))
}

/// Vertex classes forming the center: the Part 2 `n`-vertices.
pub fn center_classes(p: GroundParams) -> Result<Vec<ClassKind>, FormulaError> {
    require_distance_regime("center_classes", p)?;
    Ok(vec![ClassKind::Part2RVertex(p.n())])
}

/// Vertex classes forming the periphery: Part 2 `r`-vertices with `r < n`.
pub fn periphery_classes(p: GroundParams) -> Result<Vec<ClassKind>, FormulaError> {
    require_distance_regime("periphery_classes", p)?;
    Ok((1..p.n()).map(ClassKind::Part2RVertex).collect())
}

/// The published median claim: the median coincides with the center.
pub fn median_classes(p: GroundParams) -> Result<Vec<ClassKind>, FormulaError> {
    require_distance_regime("median_classes", p)?;
    center_classes(p)
}

/// Number of vertices in a class.
pub fn class_size(p: GroundParams, kind: ClassKind) -> BigInt {
    let (n, k) = nk(p);
    match kind {
        ClassKind::Part1KVertex => binom(n, k),
        ClassKind::Part2RVertex(r) if r == p.k() => (pow2(r - 1) - 1) * binom(n, k),
        ClassKind::Part2RVertex(r) => pow2(r - 1) * binom(n, r as i64),
    }
}
