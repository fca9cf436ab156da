//! Independent oracles for the integration suites.
//!
//! Nothing here reuses the library's subgroup machinery: elements are
//! bare `(reflection, exponent)` pairs with their own product table, and
//! subgroups are found by closure, either over every element subset
//! (small `n`) or over all one- and two-element generating sets.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Element = (bool, u32);

/// Product in the presentation `r^n = s^2 = 1`, `s r s = r^-1`.
pub fn mult(n: u32, a: Element, b: Element) -> Element {
    match (a.0, b.0) {
        (false, false) => (false, (a.1 + b.1) % n),
        (false, true) => (true, (b.1 + n - a.1) % n),
        (true, false) => (true, (a.1 + b.1) % n),
        (true, true) => (false, (b.1 + n - a.1) % n),
    }
}

fn element(n: u32, idx: usize) -> Element {
    let n = n as usize;
    if idx < n {
        (false, idx as u32)
    } else {
        (true, (idx - n) as u32)
    }
}

fn index(n: u32, e: Element) -> usize {
    if e.0 {
        n as usize + e.1 as usize
    } else {
        e.1 as usize
    }
}

/// Number of divisors plus divisor sum, minus two: the expected count of
/// proper nontrivial subgroups of the dihedral group of order `2n`.
pub fn tau_plus_sigma_minus_2(n: u32) -> usize {
    let mut tau = 0usize;
    let mut sigma = 0usize;
    for d in 1..=n {
        if n % d == 0 {
            tau += 1;
            sigma += d as usize;
        }
    }
    tau + sigma - 2
}

/// Every proper nontrivial subgroup of the dihedral group of order `2n`,
/// found by testing all `2^(2n)` element subsets for closure. Usable up
/// to `2n = 16`.
pub fn closure_families(n: u32) -> BTreeSet<BTreeSet<Element>> {
    let order = 2 * n as usize;
    assert!(order <= 16, "subset closure oracle is bounded to 2n <= 16");
    let table = product_table(n, order);
    let mut families = BTreeSet::new();
    // Identity is element 0; only subsets containing it can be subgroups.
    for half in 0u32..(1 << (order - 1)) {
        let mask = (half << 1) | 1;
        let size = mask.count_ones() as usize;
        if size <= 1 || size >= order {
            continue;
        }
        let members: Vec<usize> = (0..order).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = members
            .iter()
            .all(|&i| members.iter().all(|&j| mask >> table[i][j] & 1 == 1));
        if closed {
            families.insert(members.into_iter().map(|i| element(n, i)).collect());
        }
    }
    families
}

fn product_table(n: u32, order: usize) -> Vec<Vec<usize>> {
    (0..order)
        .map(|i| (0..order).map(|j| index(n, mult(n, element(n, i), element(n, j)))).collect())
        .collect()
}

fn close_over(n: u32, table: &[Vec<usize>], seed: u128) -> u128 {
    let order = 2 * n as usize;
    let mut mask = seed | 1;
    loop {
        let members: Vec<usize> = (0..order).filter(|&i| mask >> i & 1 == 1).collect();
        let mut next = mask;
        for &i in &members {
            for &j in &members {
                next |= 1 << table[i][j];
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

/// Every proper nontrivial subgroup of the dihedral group of order `2n`,
/// as closures of one- and two-element generating sets. Complete because
/// every subgroup of a dihedral group is generated by at most two
/// elements. Usable up to `2n = 128`.
pub fn two_generated_families(n: u32) -> BTreeSet<u128> {
    let order = 2 * n as usize;
    assert!(order <= 128);
    let table = product_table(n, order);
    let mut families = BTreeSet::new();
    for a in 0..order {
        for b in a..order {
            let mask = close_over(n, &table, (1 << a) | (1 << b));
            let size = mask.count_ones() as usize;
            if size > 1 && size < order {
                families.insert(mask);
            }
        }
    }
    families
}

/// Element set of `mask` under the shared `(reflection, exponent)`
/// convention.
pub fn mask_to_family(n: u32, mask: u128) -> BTreeSet<Element> {
    (0..2 * n as usize).filter(|&i| mask >> i & 1 == 1).map(|i| element(n, i)).collect()
}
