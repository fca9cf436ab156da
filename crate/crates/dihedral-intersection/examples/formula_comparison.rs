//! Compares brute-force resolving polynomial coefficients against the
//! published combinatorial formulas under three readings of the free index,
//! printing one row per cardinality.

use dihedral_intersection::formula::compare_resolving;
use dihedral_intersection::resolving::EnumBudget;
use dihedral_intersection::Result;

fn main() -> Result<()> {
    let budget = EnumBudget::default();
    for p in [2u32, 3] {
        let comparison = compare_resolving(p, &budget)?;
        println!(
            "p = {p} (n = {}, {} vertices, beta = {})",
            p * p,
            comparison.n_vertices,
            comparison.beta
        );
        println!("{:>4}  {:>12}  formula readings", "size", "brute force");
        for row in &comparison.rows {
            let cells: Vec<String> = row
                .by_interpretation
                .iter()
                .map(|(label, cell)| {
                    let mark = if cell.agrees { "=" } else { "!" };
                    format!("{label} {mark}{}", cell.value)
                })
                .collect();
            println!(
                "{:>4}  {:>12}  {}",
                row.cardinality,
                row.brute_force,
                cells.join("  ")
            );
        }
        for note in &comparison.notes {
            println!("  note: {note}");
        }
        println!();
    }
    Ok(())
}
