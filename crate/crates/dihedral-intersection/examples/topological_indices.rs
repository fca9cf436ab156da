//! Computes seven distance- and degree-based topological indices from the
//! graph itself, and compares them with the closed-form polynomials in p
//! where those are available (n = p^2).

use dihedral_intersection::indices::index_reports;
use dihedral_intersection::{IntersectionGraph, Result};

fn main() -> Result<()> {
    for n in [4u32, 6, 9, 25] {
        let g = IntersectionGraph::build(n)?;
        println!("n = {n}:");
        for report in index_reports(&g)? {
            let formula = match (&report.formula, report.matches) {
                (Some(value), Some(true)) => format!("closed form {value} (agrees)"),
                (Some(value), _) => format!("closed form {value} (DIFFERS)"),
                (None, _) => "no closed form".to_string(),
            };
            println!(
                "  {:22} {:>8}   {}",
                report.index.as_str(),
                report.oracle.to_string(),
                formula
            );
        }
    }
    Ok(())
}
