//! Cross-checks the subgroup enumerator against an independent oracle that
//! closes every one- and two-element generating set. Dihedral subgroups need
//! at most two generators, so the oracle is complete.

mod common;

use std::collections::BTreeSet;

use dihedral_intersection::group::{enumerate_subgroups, DihedralElement, Subgroup};

fn library_family(sub: &Subgroup, n: u32) -> BTreeSet<common::Element> {
    let mut family = BTreeSet::new();
    for j in 0..n {
        if sub.contains(DihedralElement::rotation(j, n), n) {
            family.insert((false, j));
        }
        if sub.contains(DihedralElement::reflection(j, n), n) {
            family.insert((true, j));
        }
    }
    family
}

fn check(n: u32) {
    let oracle: BTreeSet<BTreeSet<common::Element>> = common::two_generated_families(n)
        .into_iter()
        .map(|mask| common::mask_to_family(n, mask))
        .collect();
    let subs = enumerate_subgroups(n).unwrap();
    let library: BTreeSet<BTreeSet<common::Element>> =
        subs.iter().map(|s| library_family(s, n)).collect();
    assert_eq!(library.len(), subs.len(), "duplicate subgroups at n={n}");
    assert_eq!(library, oracle, "family sets differ at n={n}");
}

#[test]
fn matches_two_generated_oracle_on_small_orders() {
    for n in 3..=24 {
        check(n);
    }
}

#[test]
fn matches_two_generated_oracle_on_spot_orders() {
    for n in [25, 36, 49, 60] {
        check(n);
    }
}
