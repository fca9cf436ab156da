//! Runs the complete verification battery at n = p^2 and prints the text
//! report: every structural claim checked against values recomputed from
//! scratch, plus the resolving polynomial comparison table.

use dihedral_intersection::resolving::EnumBudget;
use dihedral_intersection::search::SearchBudget;
use dihedral_intersection::verify::{run_verification, to_text};
use dihedral_intersection::Result;

fn main() -> Result<()> {
    let report = run_verification(3, &SearchBudget::default(), &EnumBudget::default())?;
    print!("{}", to_text(&report));
    std::process::exit(if report.pass { 0 } else { 1 });
}
