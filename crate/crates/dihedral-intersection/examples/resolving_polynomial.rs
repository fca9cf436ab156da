//! Enumerates every resolving set of the intersection graph by exhaustive
//! subset search and prints the resolving polynomial coefficients.

use dihedral_intersection::resolving::{resolving_polynomial, EnumBudget};
use dihedral_intersection::{IntersectionGraph, Result};

fn main() -> Result<()> {
    let budget = EnumBudget::default();
    for n in [4u32, 9] {
        let g = IntersectionGraph::build(n)?;
        let profile = resolving_polynomial(&g, &budget)?;
        println!(
            "n = {n}: {} vertices, metric dimension {}",
            profile.n_vertices, profile.beta
        );
        let total: num_bigint::BigUint = profile.coefficients.values().sum();
        for (size, count) in &profile.coefficients {
            println!("  r_{size:<2} = {count:>6}   resolving sets of size {size}");
        }
        println!("  total resolving sets: {total}");
    }
    Ok(())
}
