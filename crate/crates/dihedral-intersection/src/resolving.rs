//! Exact resolving-set machinery: representation vectors, resolving-set
//! checks, metric dimension via the twin lower bound, and the full
//! resolving polynomial by subset enumeration.
//!
//! A landmark set `W` resolves the graph when the distance vectors to `W`
//! are pairwise distinct over all vertices. The metric dimension is the
//! least resolving cardinality; the resolving polynomial counts resolving
//! sets of each cardinality.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Distance, IntersectionGraph, UNREACHABLE};
use crate::search::SearchBudget;

/// Hard default on the subset-enumeration exponent: `2^24` subsets.
pub const MAX_ENUM_BITS: usize = 24;

/// Distances are packed five bits per landmark during enumeration, so the
/// vertex count can never exceed this, whatever the configured budget.
const ENUM_HARD_CEILING: usize = 25;

/// Number of candidate sets a dimension search may test before refusing.
const CANDIDATE_CAP: u128 = 1 << 20;

/// Budget for `2^N` subset enumeration; override `max_bits` to force
/// slightly larger instances (hard ceiling 25).
#[derive(Clone, Copy, Debug)]
pub struct EnumBudget {
    pub max_bits: usize,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget { max_bits: MAX_ENUM_BITS }
    }
}

/// Distance vector from `v` to each landmark, in landmark order.
pub fn representation(g: &IntersectionGraph, v: usize, landmarks: &[usize]) -> Vec<Distance> {
    let dm = g.distance_matrix();
    landmarks.iter().map(|&w| dm.get(v, w)).collect()
}

fn validate_landmarks(g: &IntersectionGraph, landmarks: &[usize]) -> Result<()> {
    let m = g.vertex_count();
    let mut seen = vec![false; m];
    for &w in landmarks {
        if w >= m {
            return Err(Error::InvalidArgument(format!(
                "landmark {w} out of range for {m} vertices"
            )));
        }
        if seen[w] {
            return Err(Error::InvalidArgument(format!("duplicate landmark {w}")));
        }
        seen[w] = true;
    }
    Ok(())
}

/// True iff all vertices have pairwise distinct distance vectors to
/// `landmarks`. The empty set resolves only a graph with at most one
/// vertex; that is a `false` answer, not an error.
pub fn is_resolving(g: &IntersectionGraph, landmarks: &[usize]) -> Result<bool> {
    validate_landmarks(g, landmarks)?;
    let m = g.vertex_count();
    if landmarks.is_empty() {
        return Ok(m <= 1);
    }
    let dm = g.distance_matrix();
    let mut rows: Vec<Vec<u16>> = (0..m)
        .map(|v| landmarks.iter().map(|&w| dm.raw(v, w)).collect())
        .collect();
    rows.sort_unstable();
    Ok(rows.windows(2).all(|w| w[0] != w[1]))
}

/// Sum over maximal twin blocks `U` of `|U| - 1`; a lower bound on the
/// metric dimension, since a resolving set omits at most one vertex of
/// each block.
pub fn twin_lower_bound(g: &IntersectionGraph) -> usize {
    g.twin_classes().iter().map(|b| b.len() - 1).sum()
}

/// The explicit resolving set for `n = p^2`: every reflection class
/// minus its member `<s r^i>` with exponent equal to the class index,
/// plus the rotation subgroup `<r^p>`. Size `p(p-1) + 1`.
pub fn canonical_resolving_set(g: &IntersectionGraph) -> Result<Vec<usize>> {
    let p = g.p().ok_or_else(|| {
        Error::InvalidParameter(format!(
            "the explicit construction requires n = p^2, got n = {}",
            g.n()
        ))
    })?;
    let mut set = Vec::with_capacity((p * (p - 1) + 1) as usize);
    for class in 1..=p {
        for v in g.reflection_class(class) {
            if let crate::group::SubgroupKind::Reflection { i } = g.subgroup(v).kind {
                if i != class {
                    set.push(v);
                }
            }
        }
    }
    let r_p = (0..g.vertex_count())
        .find(|&v| g.subgroup(v).kind == crate::group::SubgroupKind::RotationCyclic { k: p })
        .expect("prime-square graph has <r^p>");
    set.push(r_p);
    set.sort_unstable();
    Ok(set)
}

/// How a metric-dimension certificate was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionMethod {
    /// Twin lower bound met by a transversal omitting one vertex per
    /// twin block.
    TwinTransversal,
    /// Exhaustive search over cardinalities above the twin bound.
    Exhaustive,
}

impl ResolutionMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            ResolutionMethod::TwinTransversal => "twin-transversal",
            ResolutionMethod::Exhaustive => "exhaustive",
        }
    }
}

/// Exact metric dimension with a verified witness set.
#[derive(Clone, Debug)]
pub struct MetricDimension {
    pub value: usize,
    pub witness: Vec<usize>,
    pub method: ResolutionMethod,
}

/// Exact metric dimension.
///
/// Tests candidate sets of size `L = twin_lower_bound` first: a size-`L`
/// set can meet the per-block bound `|U| - 1` only by omitting exactly
/// one vertex from every block, so enumerating those transversals is a
/// complete search at size `L`. If none resolves, escalates to
/// exhaustive search at `L + 1` and upward. Refuses with a budget error
/// rather than returning an uncertified value.
pub fn metric_dimension(g: &IntersectionGraph, budget: &SearchBudget) -> Result<MetricDimension> {
    let m = g.vertex_count();
    if m <= 1 {
        return Ok(MetricDimension {
            value: 0,
            witness: Vec::new(),
            method: ResolutionMethod::Exhaustive,
        });
    }
    let blocks = g.twin_classes();
    let bound: usize = blocks.iter().map(|b| b.len() - 1).sum();

    if bound > 0 {
        let wide: Vec<&Vec<usize>> = blocks.iter().filter(|b| b.len() > 1).collect();
        let total: u128 = wide.iter().map(|b| b.len() as u128).product();
        let mut omit = vec![0usize; wide.len()];
        let mut tried: u128 = 0;
        loop {
            let mut candidate = Vec::with_capacity(bound);
            for (block, &skip) in wide.iter().zip(&omit) {
                candidate.extend(block.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v));
            }
            candidate.sort_unstable();
            if is_resolving(g, &candidate)? {
                return Ok(MetricDimension {
                    value: bound,
                    witness: candidate,
                    method: ResolutionMethod::TwinTransversal,
                });
            }
            tried += 1;
            if tried >= CANDIDATE_CAP && tried < total {
                return Err(Error::BudgetExceeded(format!(
                    "no certificate within {CANDIDATE_CAP} transversal candidates \
                     (of {total}); metric dimension undetermined"
                )));
            }
            // Advance the mixed-radix omission counter.
            let mut advanced = false;
            for pos in (0..wide.len()).rev() {
                omit[pos] += 1;
                if omit[pos] < wide[pos].len() {
                    advanced = true;
                    break;
                }
                omit[pos] = 0;
            }
            if !advanced {
                break;
            }
        }
    }

    // No set of size `bound` resolves; search each larger cardinality.
    if m > budget.max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive dimension search refused: graph has {m} vertices, \
             budget allows {}",
            budget.max_vertices
        )));
    }
    let mut tried: u128 = 0;
    for size in bound + 1..=m {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            if is_resolving(g, &combo)? {
                return Ok(MetricDimension {
                    value: size,
                    witness: combo,
                    method: ResolutionMethod::Exhaustive,
                });
            }
            tried += 1;
            if tried >= CANDIDATE_CAP {
                return Err(Error::BudgetExceeded(format!(
                    "no certificate within {CANDIDATE_CAP} candidate sets; \
                     metric dimension undetermined"
                )));
            }
            if !next_combination(&mut combo, m) {
                break;
            }
        }
    }
    unreachable!("the full vertex set always resolves");
}

/// Advances `combo` to the next size-`|combo|` subset of `0..m` in
/// lexicographic order; false when exhausted.
fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < m - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Where a resolving-coefficient sequence came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileSource {
    /// Counted by testing every vertex subset.
    BruteForce,
    /// Evaluated from the published closed-form expressions.
    Formula,
}

/// Metric dimension plus the resolving-set counts `r_i` for each
/// cardinality `i` in `[beta, N]`.
#[derive(Clone, Debug)]
pub struct ResolvingProfile {
    pub beta: usize,
    pub n_vertices: usize,
    pub coefficients: BTreeMap<usize, BigUint>,
    pub source: ProfileSource,
}

/// Counts resolving sets of every cardinality by enumerating all `2^N`
/// subsets. Refuses when `N` exceeds the enumeration budget; the metric
/// dimension alone stays reachable through [`metric_dimension`].
pub fn resolving_polynomial(
    g: &IntersectionGraph,
    budget: &EnumBudget,
) -> Result<ResolvingProfile> {
    let m = g.vertex_count();
    let cap = budget.max_bits.min(ENUM_HARD_CEILING);
    if m > cap {
        return Err(Error::BudgetExceeded(format!(
            "enumerating 2^{m} subsets exceeds the 2^{cap} budget; \
             use metric_dimension for the dimension alone"
        )));
    }
    // Pack each vertex's distance row once, five bits per entry
    // (unreachable and anything >= 31 clamp to the sentinel 31; finite
    // distances here are < m <= 25, so the sentinel is unambiguous).
    let dm = g.distance_matrix();
    let rows: Vec<Vec<u8>> = (0..m)
        .map(|v| {
            (0..m)
                .map(|w| match dm.raw(v, w) {
                    UNREACHABLE => 31u8,
                    d => (d.min(31)) as u8,
                })
                .collect()
        })
        .collect();

    let mut counts = vec![0u64; m + 1];
    if m <= 1 {
        counts[0] = 1;
    }
    if m > 0 {
        let merged = (1u32..(1u32 << m))
            .into_par_iter()
            .fold(
                || vec![0u64; m + 1],
                |mut acc, mask| {
                    if subset_resolves(&rows, mask, m) {
                        acc[mask.count_ones() as usize] += 1;
                    }
                    acc
                },
            )
            .reduce(
                || vec![0u64; m + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        for (x, y) in counts.iter_mut().zip(merged) {
            *x += y;
        }
    }

    let beta = counts
        .iter()
        .position(|&c| c > 0)
        .expect("the full vertex set always resolves");
    let coefficients: BTreeMap<usize, BigUint> =
        (beta..=m).map(|i| (i, BigUint::from(counts[i]))).collect();
    debug_assert!(coefficients.values().all(|c| *c > BigUint::from(0u32)));
    Ok(ResolvingProfile { beta, n_vertices: m, coefficients, source: ProfileSource::BruteForce })
}

/// Resolving test specialized for enumeration: representations are
/// packed into one `u128` per vertex and checked for collisions with an
/// early exit.
fn subset_resolves(rows: &[Vec<u8>], mask: u32, m: usize) -> bool {
    let mut keys = [0u128; ENUM_HARD_CEILING];
    for (v, row) in rows.iter().enumerate().take(m) {
        let mut key = 0u128;
        let mut bits = mask;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            key = (key << 5) | u128::from(row[w]);
        }
        // Insert into the sorted prefix keys[..v]; a collision means two
        // vertices share a representation, so the subset fails.
        let mut lo = 0usize;
        let mut hi = v;
        while lo < hi {
            let mid = (lo + hi) / 2;
            if keys[mid] < key {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if lo < v && keys[lo] == key {
            return false;
        }
        keys.copy_within(lo..v, lo + 1);
        keys[lo] = key;
    }
    true
}
