//! Exact maximum clique and maximum independent set.
//!
//! Branch and bound with a greedy-coloring upper bound. Exact only: when
//! the graph exceeds the vertex budget the search is refused rather than
//! silently degraded to a heuristic.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::IntersectionGraph;

/// Default vertex cap for exact clique / independent-set search.
pub const DEFAULT_MAX_VERTICES: usize = 40;

/// Budget for exact search; override `max_vertices` to force larger
/// instances.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_vertices: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_vertices: DEFAULT_MAX_VERTICES }
    }
}

fn check_budget(g: &IntersectionGraph, budget: &SearchBudget) -> Result<()> {
    let m = g.vertex_count();
    if m > budget.max_vertices {
        return Err(Error::BudgetExceeded(format!(
            "exact search refused: graph has {m} vertices, budget allows {}; \
             raise the vertex budget to force it",
            budget.max_vertices
        )));
    }
    Ok(())
}

/// Vertices of a maximum clique, ascending.
pub fn maximum_clique(g: &IntersectionGraph, budget: &SearchBudget) -> Result<Vec<usize>> {
    check_budget(g, budget)?;
    Ok(max_clique_on(g.adjacency()))
}

/// Size of a maximum clique.
pub fn clique_number(g: &IntersectionGraph, budget: &SearchBudget) -> Result<u32> {
    Ok(maximum_clique(g, budget)?.len() as u32)
}

/// Vertices of a maximum independent set, ascending (maximum clique of
/// the complement).
pub fn maximum_independent_set(
    g: &IntersectionGraph,
    budget: &SearchBudget,
) -> Result<Vec<usize>> {
    check_budget(g, budget)?;
    let m = g.vertex_count();
    let complement: Vec<FixedBitSet> = (0..m)
        .map(|u| {
            let mut row = FixedBitSet::with_capacity(m);
            for v in 0..m {
                if v != u && !g.is_adjacent(u, v) {
                    row.insert(v);
                }
            }
            row
        })
        .collect();
    Ok(max_clique_on(&complement))
}

/// Size of a maximum independent set.
pub fn independence_number(g: &IntersectionGraph, budget: &SearchBudget) -> Result<u32> {
    Ok(maximum_independent_set(g, budget)?.len() as u32)
}

fn max_clique_on(adj: &[FixedBitSet]) -> Vec<usize> {
    let m = adj.len();
    let mut best = Vec::new();
    if m == 0 {
        return best;
    }
    let mut candidates = FixedBitSet::with_capacity(m);
    candidates.insert_range(..);
    let mut current = Vec::new();
    expand(adj, &mut current, candidates, &mut best);
    best.sort_unstable();
    best
}

/// Greedy coloring of the candidate set; returns `(vertex, color)` in
/// ascending color order. A clique inside `candidates` that contains a
/// vertex of color `c` has at most `c` vertices among the ones listed up
/// to and including it.
fn color_order(adj: &[FixedBitSet], candidates: &FixedBitSet) -> Vec<(usize, usize)> {
    let mut order = Vec::with_capacity(candidates.count_ones(..));
    let mut uncolored = candidates.clone();
    let mut color = 0;
    while uncolored.count_ones(..) > 0 {
        color += 1;
        let mut available = uncolored.clone();
        while let Some(v) = available.ones().next() {
            order.push((v, color));
            uncolored.set(v, false);
            available.set(v, false);
            available.difference_with(&adj[v]);
        }
    }
    order
}

fn expand(
    adj: &[FixedBitSet],
    current: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    best: &mut Vec<usize>,
) {
    if candidates.count_ones(..) == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let order = color_order(adj, &candidates);
    for &(v, color) in order.iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        let mut next = candidates.clone();
        next.intersect_with(&adj[v]);
        expand(adj, current, next, best);
        current.pop();
        candidates.set(v, false);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_clique(g: &IntersectionGraph, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(a, &u)| vs.iter().skip(a + 1).all(|&v| g.is_adjacent(u, v)))
    }

    fn is_independent(g: &IntersectionGraph, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(a, &u)| vs.iter().skip(a + 1).all(|&v| !g.is_adjacent(u, v)))
    }

    #[test]
    fn prime_square_clique_and_independence() {
        for p in [2u32, 3, 5] {
            let g = IntersectionGraph::build(p * p).unwrap();
            let budget = SearchBudget::default();
            let clique = maximum_clique(&g, &budget).unwrap();
            assert_eq!(clique.len() as u32, p + 2, "p={p}");
            assert!(is_clique(&g, &clique));
            let independent = maximum_independent_set(&g, &budget).unwrap();
            assert_eq!(independent.len() as u32, p * p + 1, "p={p}");
            assert!(is_independent(&g, &independent));
        }
    }

    #[test]
    fn null_graph_extremes() {
        let g = IntersectionGraph::build(5).unwrap();
        let budget = SearchBudget::default();
        assert_eq!(clique_number(&g, &budget).unwrap(), 1);
        assert_eq!(independence_number(&g, &budget).unwrap(), 6);
    }

    #[test]
    fn budget_refusal_and_override() {
        let g = IntersectionGraph::build(49).unwrap();
        assert_eq!(g.vertex_count(), 58);
        assert!(matches!(
            clique_number(&g, &SearchBudget::default()),
            Err(Error::BudgetExceeded(_))
        ));
        let wide = SearchBudget { max_vertices: 64 };
        assert_eq!(clique_number(&g, &wide).unwrap(), 9);
        assert_eq!(independence_number(&g, &wide).unwrap(), 50);
    }
}
