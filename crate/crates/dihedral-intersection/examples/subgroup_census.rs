//! Enumerates the proper nontrivial subgroups of small dihedral groups and
//! prints the census, grouped by kind.

use dihedral_intersection::group::{enumerate_subgroups, SubgroupKind};
use dihedral_intersection::Result;

fn main() -> Result<()> {
    for n in [3u32, 4, 6, 9, 12] {
        let subs = enumerate_subgroups(n)?;
        let mut rotations = Vec::new();
        let mut reflections = Vec::new();
        let mut dihedrals = Vec::new();
        for sub in &subs {
            let label = sub.label(n);
            match sub.kind {
                SubgroupKind::RotationCyclic { .. } => rotations.push(label),
                SubgroupKind::Reflection { .. } => reflections.push(label),
                SubgroupKind::DihedralSub { .. } => dihedrals.push(label),
            }
        }
        println!("D_{} ({} subgroups)", 2 * n, subs.len());
        println!("  rotation subgroups:   {}", rotations.join(", "));
        println!("  reflection subgroups: {}", reflections.join(", "));
        println!("  dihedral subgroups:   {}", dihedrals.join(", "));
    }
    Ok(())
}
