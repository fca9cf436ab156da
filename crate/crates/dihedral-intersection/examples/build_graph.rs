//! Builds the subgroup intersection graph of D_18, prints its adjacency
//! structure, and emits Graphviz DOT for rendering.

use dihedral_intersection::export::dot_string;
use dihedral_intersection::{IntersectionGraph, Result};

fn main() -> Result<()> {
    let g = IntersectionGraph::build(9)?;
    println!(
        "intersection graph of D_18: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    for v in 0..g.vertex_count() {
        let neighbors: Vec<String> = (0..g.vertex_count())
            .filter(|&u| g.is_adjacent(v, u))
            .map(|u| g.label(u))
            .collect();
        println!("  {:10} -> {}", g.label(v), neighbors.join(", "));
    }
    println!();
    println!("{}", dot_string(&g));
    Ok(())
}
