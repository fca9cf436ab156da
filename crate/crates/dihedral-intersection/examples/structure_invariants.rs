//! Computes the structural invariants of the intersection graph at n = p^2:
//! degree spectrum, diameter, eccentricities, clique and independence
//! numbers, and the split partition.

use std::collections::BTreeMap;

use dihedral_intersection::search::{maximum_clique, maximum_independent_set, SearchBudget};
use dihedral_intersection::{IntersectionGraph, Result};

fn main() -> Result<()> {
    let budget = SearchBudget::default();
    for n in [4u32, 9, 25] {
        let g = IntersectionGraph::build(n)?;
        let m = g.vertex_count();
        println!("n = {n}: {} vertices, {} edges", m, g.edge_count());

        let mut spectrum: BTreeMap<u32, usize> = BTreeMap::new();
        for v in 0..m {
            *spectrum.entry(g.degree(v)).or_default() += 1;
        }
        let spectrum: Vec<String> = spectrum
            .iter()
            .map(|(d, count)| format!("{count} of degree {d}"))
            .collect();
        println!("  degree spectrum: {}", spectrum.join(", "));
        let diameter = g.diameter().finite().expect("graph is connected");
        println!("  diameter: {diameter}");

        let clique = maximum_clique(&g, &budget)?;
        let independent = maximum_independent_set(&g, &budget)?;
        println!("  clique number: {}", clique.len());
        println!("  independence number: {}", independent.len());

        let (clique_part, independent_part) = g.split_partition()?;
        println!(
            "  split partition: clique part {} + independent part {}",
            clique_part.len(),
            independent_part.len()
        );
    }
    Ok(())
}
