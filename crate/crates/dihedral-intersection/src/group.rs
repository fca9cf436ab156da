//! The dihedral group `D_2n` and its proper nontrivial subgroups.
//!
//! Elements are canonical words `r^i` and `s r^i` under the presentation
//! `<r, s | r^n = s^2 = 1, s r s = r^-1>`. The proper nontrivial subgroups
//! fall into three families: rotation-cyclic subgroups `<r^(n/k)>` of
//! order `k` for each divisor `k != 1` of `n`, reflection subgroups
//! `<s r^i>` of order 2, and dihedral subgroups `<r^(n/k), s r^i>` of
//! order `2k` for divisors `k` of `n` with `k != 1, n`. There are
//! `tau(n) + sigma(n) - 2` of them in total.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// An element `r^i` (rotation) or `s r^i` (reflection) of `D_2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    /// Whether the word carries the `s` factor.
    pub is_reflection: bool,
    /// Exponent `i` of `r`, always reduced modulo `n`.
    pub rotation_exp: u32,
}

impl DihedralElement {
    /// The identity `r^0`.
    pub fn identity() -> Self {
        DihedralElement { is_reflection: false, rotation_exp: 0 }
    }

    /// The rotation `r^i` (exponent reduced modulo `n`).
    pub fn rotation(i: u32, n: u32) -> Self {
        DihedralElement { is_reflection: false, rotation_exp: i % n }
    }

    /// The reflection `s r^i` (exponent reduced modulo `n`).
    pub fn reflection(i: u32, n: u32) -> Self {
        DihedralElement { is_reflection: true, rotation_exp: i % n }
    }

    pub fn is_identity(&self) -> bool {
        !self.is_reflection && self.rotation_exp == 0
    }

    /// Dense index in `[0, 2n)`: rotations first by exponent, then
    /// reflections by exponent.
    pub fn index(&self, n: u32) -> usize {
        let base = if self.is_reflection { n } else { 0 };
        (base + self.rotation_exp) as usize
    }

    /// Inverse of [`DihedralElement::index`].
    pub fn from_index(idx: usize, n: u32) -> Self {
        let idx = idx as u32;
        if idx < n {
            DihedralElement { is_reflection: false, rotation_exp: idx }
        } else {
            DihedralElement { is_reflection: true, rotation_exp: idx - n }
        }
    }
}

/// Product of two canonical elements of `D_2n` under the presentation:
/// `r^i r^j = r^(i+j)`, `r^i (s r^j) = s r^(j-i)`, `(s r^i) r^j = s r^(i+j)`,
/// and `(s r^i)(s r^j) = r^(j-i)`, all exponents modulo `n`.
pub fn multiply(a: DihedralElement, b: DihedralElement, n: u32) -> DihedralElement {
    debug_assert!(a.rotation_exp < n && b.rotation_exp < n);
    let (i, j) = (a.rotation_exp, b.rotation_exp);
    match (a.is_reflection, b.is_reflection) {
        (false, false) => DihedralElement::rotation(i + j, n),
        (false, true) => DihedralElement::reflection(j + n - i, n),
        (true, false) => DihedralElement::reflection(i + j, n),
        (true, true) => DihedralElement::rotation(j + n - i, n),
    }
}

/// Inverse element: `(r^i)^-1 = r^(n-i)`, reflections are involutions.
pub fn inverse(a: DihedralElement, n: u32) -> DihedralElement {
    if a.is_reflection {
        a
    } else {
        DihedralElement::rotation(n - a.rotation_exp, n)
    }
}

/// All `2n` elements of `D_2n` in canonical order: identity first, then
/// the remaining rotations by exponent, then reflections by exponent.
pub fn group_elements(n: u32) -> Result<Vec<DihedralElement>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be at least 3, got {n}")));
    }
    Ok((0..2 * n).map(|idx| DihedralElement::from_index(idx as usize, n)).collect())
}

/// Canonical parametrization of a proper nontrivial subgroup of `D_2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupKind {
    /// `<r^(n/k)>` of order `k`, for a divisor `k != 1` of `n`.
    RotationCyclic { k: u32 },
    /// `<s r^i>` of order 2, with `i` in `[1, n]` (`i = n` denotes `<s>`).
    Reflection { i: u32 },
    /// `<r^(n/k), s r^i>` of order `2k`, for a divisor `k` of `n` with
    /// `k != 1, n` and `i` in `[1, n/k]`.
    DihedralSub { k: u32, i: u32 },
}

impl SubgroupKind {
    /// Order of the subgroup this kind denotes.
    pub fn order(&self) -> u32 {
        match *self {
            SubgroupKind::RotationCyclic { k } => k,
            SubgroupKind::Reflection { .. } => 2,
            SubgroupKind::DihedralSub { k, .. } => 2 * k,
        }
    }

    /// Coarse family name used in exports.
    pub fn family(&self) -> &'static str {
        match self {
            SubgroupKind::RotationCyclic { .. } => "rotation",
            SubgroupKind::Reflection { .. } => "reflection",
            SubgroupKind::DihedralSub { .. } => "dihedral",
        }
    }

    /// ASCII generator label, e.g. `<r^3>`, `<s r^2>`, `<r^3, s r^2>`.
    pub fn label(&self, n: u32) -> String {
        fn rot(d: u32) -> String {
            if d == 1 {
                "r".to_string()
            } else {
                format!("r^{d}")
            }
        }
        fn refl(i: u32, n: u32) -> String {
            if i % n == 0 {
                "s".to_string()
            } else {
                format!("s r^{}", i % n)
            }
        }
        match *self {
            SubgroupKind::RotationCyclic { k } => format!("<{}>", rot(n / k)),
            SubgroupKind::Reflection { i } => format!("<{}>", refl(i, n)),
            SubgroupKind::DihedralSub { k, i } => {
                format!("<{}, {}>", rot(n / k), refl(i, n))
            }
        }
    }
}

/// A classified subgroup with its materialized element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub kind: SubgroupKind,
    /// Membership bitset over element indices (see [`DihedralElement::index`]).
    pub elements: FixedBitSet,
    pub order: u32,
}

impl Subgroup {
    /// Materializes the element set of `kind` inside `D_2n`.
    pub fn new(kind: SubgroupKind, n: u32) -> Self {
        let mut elements = FixedBitSet::with_capacity(2 * n as usize);
        match kind {
            SubgroupKind::RotationCyclic { k } => {
                let step = n / k;
                for j in 0..k {
                    elements.insert(DihedralElement::rotation(j * step, n).index(n));
                }
            }
            SubgroupKind::Reflection { i } => {
                elements.insert(DihedralElement::identity().index(n));
                elements.insert(DihedralElement::reflection(i, n).index(n));
            }
            SubgroupKind::DihedralSub { k, i } => {
                let step = n / k;
                for j in 0..k {
                    elements.insert(DihedralElement::rotation(j * step, n).index(n));
                    elements.insert(DihedralElement::reflection(i + j * step, n).index(n));
                }
            }
        }
        let order = kind.order();
        debug_assert_eq!(elements.count_ones(..) as u32, order);
        Subgroup { kind, elements, order }
    }

    pub fn label(&self, n: u32) -> String {
        self.kind.label(n)
    }

    pub fn contains(&self, e: DihedralElement, n: u32) -> bool {
        self.elements.contains(e.index(n))
    }

    /// True iff the element set contains the identity and is closed under
    /// the group product (hence under inverses, the group being finite).
    pub fn is_closed(&self, n: u32) -> bool {
        if !self.elements.contains(0) {
            return false;
        }
        let members: Vec<DihedralElement> =
            self.elements.ones().map(|idx| DihedralElement::from_index(idx, n)).collect();
        members.iter().all(|&a| {
            members.iter().all(|&b| self.elements.contains(multiply(a, b, n).index(n)))
        })
    }
}

/// Every proper nontrivial subgroup of `D_2n`, exactly once, in a fixed
/// order: rotation-cyclic by `k` ascending, then reflections by `i` from 1
/// to `n`, then dihedral subgroups by `(k, i)` ascending.
pub fn enumerate_subgroups(n: u32) -> Result<Vec<Subgroup>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be at least 3, got {n}")));
    }
    let divs = divisors(n);
    let mut subs = Vec::new();
    for &k in divs.iter().filter(|&&k| k != 1) {
        subs.push(Subgroup::new(SubgroupKind::RotationCyclic { k }, n));
    }
    for i in 1..=n {
        subs.push(Subgroup::new(SubgroupKind::Reflection { i }, n));
    }
    for &k in divs.iter().filter(|&&k| k != 1 && k != n) {
        for i in 1..=n / k {
            subs.push(Subgroup::new(SubgroupKind::DihedralSub { k, i }, n));
        }
    }
    Ok(subs)
}

/// True iff distinct subgroups `h` and `k` share a non-identity element.
pub fn intersect_nontrivially(h: &Subgroup, k: &Subgroup) -> Result<bool> {
    if h == k {
        return Err(Error::InvalidArgument(
            "intersection adjacency is defined for distinct subgroups".to_string(),
        ));
    }
    Ok(h.elements.intersection(&k.elements).any(|idx| idx != 0))
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Trial-division primality test.
pub fn is_prime(x: u32) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `p` when `n = p^2` for a prime `p`.
pub fn prime_square_root(n: u32) -> Option<u32> {
    let mut p = 1;
    while p * p < n {
        p += 1;
    }
    (p * p == n && is_prime(p)).then_some(p)
}
