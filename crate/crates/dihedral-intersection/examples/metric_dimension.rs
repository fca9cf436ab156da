//! Computes the metric dimension of the intersection graph: the twin lower
//! bound, an exact search, and a verified canonical resolving set.

use dihedral_intersection::resolving::{
    canonical_resolving_set, is_resolving, metric_dimension, twin_lower_bound,
};
use dihedral_intersection::search::SearchBudget;
use dihedral_intersection::{IntersectionGraph, Result};

fn main() -> Result<()> {
    let budget = SearchBudget::default();
    for n in [4u32, 9, 25] {
        let g = IntersectionGraph::build(n)?;
        println!("n = {n} ({} vertices):", g.vertex_count());
        println!("  twin lower bound: {}", twin_lower_bound(&g));

        let dim = metric_dimension(&g, &budget)?;
        let witness: Vec<String> = dim.witness.iter().map(|&v| g.label(v)).collect();
        println!("  metric dimension: {} ({})", dim.value, dim.method.as_str());
        println!("  witness: {{{}}}", witness.join(", "));

        let canonical = canonical_resolving_set(&g)?;
        let verified = is_resolving(&g, &canonical)?;
        println!(
            "  canonical resolving set: {} landmarks, verified resolving: {verified}",
            canonical.len()
        );
    }
    Ok(())
}
