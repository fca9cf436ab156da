//! The intersection graph of proper nontrivial subgroups of `D_2n`.
//!
//! Vertices are the subgroups from [`crate::group::enumerate_subgroups`],
//! in that order; two vertices are adjacent iff the subgroups share a
//! non-identity element. When `n = p^2` for a prime `p`, every vertex is
//! classified: reflection subgroups split into `p` classes by exponent
//! residue mod `p`, the `p` dihedral subgroups carry their class index,
//! and the two rotation subgroups `<r>`, `<r^p>` form their own family.

use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{self, Subgroup, SubgroupKind};

/// A hop count that may be unreachable; disconnected pairs are never
/// reported as a number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "infinite"),
        }
    }
}

pub(crate) const UNREACHABLE: u16 = u16::MAX;

/// Symmetric all-pairs BFS hop counts with an explicit unreachable marker.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n_vertices: usize,
    dist: Vec<u16>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Distance {
        match self.raw(u, v) {
            UNREACHABLE => Distance::Infinite,
            d => Distance::Finite(u32::from(d)),
        }
    }

    pub(crate) fn raw(&self, u: usize, v: usize) -> u16 {
        assert!(u < self.n_vertices && v < self.n_vertices, "vertex out of range");
        self.dist[u * self.n_vertices + v]
    }

    pub(crate) fn row(&self, u: usize) -> &[u16] {
        assert!(u < self.n_vertices, "vertex out of range");
        &self.dist[u * self.n_vertices..(u + 1) * self.n_vertices]
    }

    /// Max distance from `v`; infinite when some vertex is unreachable.
    pub fn eccentricity(&self, v: usize) -> Distance {
        let m = *self.row(v).iter().max().expect("nonempty graph");
        match m {
            UNREACHABLE => Distance::Infinite,
            d => Distance::Finite(u32::from(d)),
        }
    }

    /// Max eccentricity over all vertices.
    pub fn diameter(&self) -> Distance {
        (0..self.n_vertices)
            .map(|v| self.eccentricity(v))
            .try_fold(0u32, |acc, e| e.finite().map(|d| acc.max(d)))
            .map_or(Distance::Infinite, Distance::Finite)
    }
}

/// Vertex classification at `n = p^2`; `Unclassified` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexClass {
    /// One of the two rotation subgroups `<r>`, `<r^p>`.
    Rotation,
    /// The dihedral subgroup `<r^p, s r^class>`, `class` in `[1, p]`.
    Dihedral { class: u32 },
    /// A reflection subgroup whose exponent is `class` mod `p`, `class` in `[1, p]`.
    Reflection { class: u32 },
    Unclassified,
}

impl VertexClass {
    /// Export name, `None` when unclassified.
    pub fn name(&self) -> Option<String> {
        match self {
            VertexClass::Rotation => Some("rotation".to_string()),
            VertexClass::Dihedral { class } => Some(format!("dihedral-{class}")),
            VertexClass::Reflection { class } => Some(format!("reflection-{class}")),
            VertexClass::Unclassified => None,
        }
    }
}

/// Simple undirected graph on the proper nontrivial subgroups of `D_2n`,
/// with a lazily computed all-pairs distance matrix.
#[derive(Debug)]
pub struct IntersectionGraph {
    n: u32,
    p: Option<u32>,
    vertices: Vec<Subgroup>,
    classes: Vec<VertexClass>,
    adj: Vec<FixedBitSet>,
    dist: OnceLock<DistanceMatrix>,
}

impl IntersectionGraph {
    /// Builds the graph for `D_2n`, `n >= 3`.
    pub fn build(n: u32) -> Result<Self> {
        let vertices = group::enumerate_subgroups(n)?;
        let p = group::prime_square_root(n);
        let classes = vertices
            .iter()
            .map(|s| match (p, s.kind) {
                (Some(p), SubgroupKind::Reflection { i }) => {
                    VertexClass::Reflection { class: ((i - 1) % p) + 1 }
                }
                (Some(_), SubgroupKind::DihedralSub { i, .. }) => VertexClass::Dihedral { class: i },
                (Some(_), SubgroupKind::RotationCyclic { .. }) => VertexClass::Rotation,
                (None, _) => VertexClass::Unclassified,
            })
            .collect();
        let m = vertices.len();
        let mut adj = vec![FixedBitSet::with_capacity(m); m];
        for u in 0..m {
            for v in u + 1..m {
                let joined = group::intersect_nontrivially(&vertices[u], &vertices[v])
                    .expect("distinct vertices");
                if joined {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Ok(IntersectionGraph { n, p, vertices, classes, adj, dist: OnceLock::new() })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The prime `p` when `n = p^2`.
    pub fn p(&self) -> Option<u32> {
        self.p
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn subgroup(&self, v: usize) -> &Subgroup {
        &self.vertices[v]
    }

    pub fn label(&self, v: usize) -> String {
        self.vertices[v].label(self.n)
    }

    pub fn class(&self, v: usize) -> VertexClass {
        self.classes[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones(..) as u32
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub(crate) fn adjacency(&self) -> &[FixedBitSet] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// All-pairs BFS distances, computed once and cached.
    pub fn distance_matrix(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| {
            let m = self.vertex_count();
            let rows: Vec<Vec<u16>> =
                (0..m).into_par_iter().map(|src| bfs_distances(&self.adj, src)).collect();
            DistanceMatrix { n_vertices: m, dist: rows.concat() }
        })
    }

    pub fn distance(&self, u: usize, v: usize) -> Distance {
        self.distance_matrix().get(u, v)
    }

    pub fn eccentricity(&self, v: usize) -> Distance {
        self.distance_matrix().eccentricity(v)
    }

    pub fn diameter(&self) -> Distance {
        self.distance_matrix().diameter()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.diameter() != Distance::Infinite
    }

    /// Vertices of the reflection class `i` in `[1, p]` (requires `n = p^2`).
    pub fn reflection_class(&self, i: u32) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.classes[v] == VertexClass::Reflection { class: i })
            .collect()
    }

    /// The dihedral vertex of class `i` in `[1, p]` (requires `n = p^2`).
    pub fn dihedral_vertex(&self, i: u32) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| self.classes[v] == VertexClass::Dihedral { class: i })
    }

    /// The two rotation vertices `<r^p>`, `<r>` (requires `n = p^2`).
    pub fn rotation_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.classes[v] == VertexClass::Rotation).collect()
    }

    fn require_prime_square(&self) -> Result<u32> {
        self.p.ok_or_else(|| {
            Error::InvalidParameter(format!(
                "operation requires n = p^2 for a prime p, got n = {}",
                self.n
            ))
        })
    }

    /// Splits `V` into the rotation+dihedral clique part and the
    /// reflection independent part, validating both sides.
    pub fn split_partition(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        self.require_prime_square()?;
        let (mut clique, mut independent) = (Vec::new(), Vec::new());
        for v in 0..self.vertex_count() {
            match self.classes[v] {
                VertexClass::Rotation | VertexClass::Dihedral { .. } => clique.push(v),
                VertexClass::Reflection { .. } => independent.push(v),
                VertexClass::Unclassified => unreachable!("classified graph"),
            }
        }
        for (a, &u) in clique.iter().enumerate() {
            for &v in clique.iter().skip(a + 1) {
                if !self.is_adjacent(u, v) {
                    return Err(Error::CheckFailed(format!(
                        "claimed clique part misses edge {} -- {}",
                        self.label(u),
                        self.label(v)
                    )));
                }
            }
        }
        for (a, &u) in independent.iter().enumerate() {
            for &v in independent.iter().skip(a + 1) {
                if self.is_adjacent(u, v) {
                    return Err(Error::CheckFailed(format!(
                        "claimed independent part has edge {} -- {}",
                        self.label(u),
                        self.label(v)
                    )));
                }
            }
        }
        Ok((clique, independent))
    }

    /// True iff reflection class `i` plus its dihedral vertex induce a
    /// star with `p` leaves centered at the dihedral vertex.
    pub fn star_check(&self, i: u32) -> Result<bool> {
        let p = self.require_prime_square()?;
        if i < 1 || i > p {
            return Err(Error::InvalidParameter(format!(
                "class index must lie in [1, {p}], got {i}"
            )));
        }
        let leaves = self.reflection_class(i);
        let center = self.dihedral_vertex(i).expect("one dihedral vertex per class");
        if leaves.len() as u32 != p {
            return Ok(false);
        }
        let center_covers = leaves.iter().all(|&l| self.is_adjacent(center, l));
        let leaves_independent = leaves
            .iter()
            .enumerate()
            .all(|(a, &u)| leaves.iter().skip(a + 1).all(|&v| !self.is_adjacent(u, v)));
        Ok(center_covers && leaves_independent)
    }

    /// True iff `u` and `v` are twins: equal open neighborhoods
    /// (non-adjacent twins) or equal closed neighborhoods (adjacent twins).
    /// Both reduce to equality of adjacency rows with `u, v` masked out.
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let mut a = self.adj[u].clone();
        let mut b = self.adj[v].clone();
        for row in [&mut a, &mut b] {
            row.set(u, false);
            row.set(v, false);
        }
        a == b
    }

    /// Partition of `V` into maximal pairwise-twin blocks, ordered by
    /// smallest member; singletons included.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let m = self.vertex_count();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for u in 0..m {
            for v in u + 1..m {
                if self.are_twins(u, v) {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru != rv {
                        parent[ru.max(rv)] = ru.min(rv);
                    }
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_block: Vec<Option<usize>> = vec![None; m];
        for v in 0..m {
            let r = find(&mut parent, v);
            match root_block[r] {
                Some(b) => blocks[b].push(v),
                None => {
                    root_block[r] = Some(blocks.len());
                    blocks.push(vec![v]);
                }
            }
        }
        // The twin relation need not be transitive on arbitrary graphs;
        // refine each block first-fit so every block is pairwise twins.
        let mut refined = Vec::new();
        for block in blocks {
            let mut subs: Vec<Vec<usize>> = Vec::new();
            for v in block {
                match subs.iter_mut().find(|s| s.iter().all(|&u| self.are_twins(u, v))) {
                    Some(s) => s.push(v),
                    None => subs.push(vec![v]),
                }
            }
            refined.extend(subs);
        }
        refined.sort_by_key(|b| b[0]);
        refined
    }
}

/// Test-only fixture: an arbitrary simple graph wearing the
/// `IntersectionGraph` interface (labels and classes are meaningless).
#[cfg(test)]
pub(crate) fn fixture_graph(m: usize, edges: &[(usize, usize)]) -> IntersectionGraph {
    let n = (m as u32).max(3);
    let vertices =
        (0..m).map(|v| Subgroup::new(SubgroupKind::Reflection { i: v as u32 + 1 }, n)).collect();
    let mut adj = vec![FixedBitSet::with_capacity(m); m];
    for &(u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    IntersectionGraph {
        n,
        p: None,
        vertices,
        classes: vec![VertexClass::Unclassified; m],
        adj,
        dist: OnceLock::new(),
    }
}

fn bfs_distances(adj: &[FixedBitSet], src: usize) -> Vec<u16> {
    let m = adj.len();
    let mut dist = vec![UNREACHABLE; m];
    dist[src] = 0;
    let mut frontier = vec![src];
    let mut next = Vec::new();
    let mut level: u16 = 0;
    while !frontier.is_empty() {
        level += 1;
        for &u in &frontier {
            for v in adj[u].ones() {
                if dist[v] == UNREACHABLE {
                    dist[v] = level;
                    next.push(v);
                }
            }
        }
        frontier.clear();
        std::mem::swap(&mut frontier, &mut next);
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expected_distance(g: &IntersectionGraph, u: usize, v: usize) -> u32 {
        use VertexClass::*;
        match (g.class(u), g.class(v)) {
            (Rotation | Dihedral { .. }, Rotation | Dihedral { .. }) => 1,
            (Reflection { class: i }, Dihedral { class: j })
            | (Dihedral { class: j }, Reflection { class: i }) => {
                if i == j {
                    1
                } else {
                    2
                }
            }
            (Reflection { .. }, Rotation) | (Rotation, Reflection { .. }) => 2,
            (Reflection { class: i }, Reflection { class: j }) => {
                if i == j {
                    2
                } else {
                    3
                }
            }
            (Unclassified, _) | (_, Unclassified) => unreachable!(),
        }
    }

    #[test]
    fn prime_square_structure() {
        for p in [2u32, 3, 5] {
            let g = IntersectionGraph::build(p * p).unwrap();
            assert_eq!(g.vertex_count() as u32, p * p + p + 2);
            assert_eq!(g.edge_count() as u32, (3 * p * p + 3 * p + 2) / 2);
            assert_eq!(g.diameter(), Distance::Finite(3));
            assert!(g.is_connected());
            for v in 0..g.vertex_count() {
                let expected = match g.class(v) {
                    VertexClass::Reflection { .. } => 1,
                    VertexClass::Dihedral { .. } => 2 * p + 1,
                    VertexClass::Rotation => p + 1,
                    VertexClass::Unclassified => unreachable!(),
                };
                assert_eq!(g.degree(v), expected, "p={p} v={}", g.label(v));
                let ecc = match g.class(v) {
                    VertexClass::Reflection { .. } => 3,
                    _ => 2,
                };
                assert_eq!(g.eccentricity(v), Distance::Finite(ecc));
            }
            for u in 0..g.vertex_count() {
                for v in u + 1..g.vertex_count() {
                    assert_eq!(
                        g.distance(u, v),
                        Distance::Finite(expected_distance(&g, u, v)),
                        "p={p} {} vs {}",
                        g.label(u),
                        g.label(v)
                    );
                }
            }
        }
    }

    #[test]
    fn degree_examples() {
        let g4 = IntersectionGraph::build(4).unwrap();
        let s = (0..8).find(|&v| g4.label(v) == "<s>").unwrap();
        assert_eq!(g4.degree(s), 1);
        let d = (0..8).find(|&v| g4.label(v) == "<r^2, s r^2>").unwrap();
        assert_eq!(g4.degree(d), 5);

        let g9 = IntersectionGraph::build(9).unwrap();
        let r = (0..14).find(|&v| g9.label(v) == "<r>").unwrap();
        assert_eq!(g9.degree(r), 4);
    }

    #[test]
    fn null_graph_at_prime_n() {
        let g = IntersectionGraph::build(5).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 0);
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), Distance::Infinite);
        assert_eq!(g.eccentricity(0), Distance::Infinite);
        assert_eq!(g.distance(0, 1), Distance::Infinite);
        assert_eq!(g.p(), None);
        assert_eq!(g.class(0), VertexClass::Unclassified);
    }

    #[test]
    fn general_n_is_supported() {
        let g = IntersectionGraph::build(6).unwrap();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 34);
        assert!(g.is_connected());
        assert_eq!(g.p(), None);
    }

    #[test]
    fn distance_matrix_basics() {
        let g = IntersectionGraph::build(9).unwrap();
        let m = g.distance_matrix();
        for u in 0..g.vertex_count() {
            assert_eq!(m.get(u, u), Distance::Finite(0));
            for v in 0..g.vertex_count() {
                assert_eq!(m.get(u, v), m.get(v, u));
                assert_eq!(m.get(u, v) == Distance::Finite(1), g.is_adjacent(u, v) && u != v);
            }
        }
        // triangle inequality, exhaustive
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                for w in 0..g.vertex_count() {
                    let (duw, duv, dvw) = (
                        m.get(u, w).finite().unwrap(),
                        m.get(u, v).finite().unwrap(),
                        m.get(v, w).finite().unwrap(),
                    );
                    assert!(duw <= duv + dvw);
                }
            }
        }
    }

    #[test]
    fn handshake_identity() {
        for n in [4, 6, 9, 12, 25] {
            let g = IntersectionGraph::build(n).unwrap();
            let degree_sum: u32 = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(degree_sum as usize, 2 * g.edge_count());
        }
    }

    #[test]
    fn split_partition_validates() {
        let g = IntersectionGraph::build(4).unwrap();
        let (clique, independent) = g.split_partition().unwrap();
        assert_eq!((clique.len(), independent.len()), (4, 4));

        let g = IntersectionGraph::build(9).unwrap();
        let (clique, independent) = g.split_partition().unwrap();
        assert_eq!((clique.len(), independent.len()), (5, 9));

        assert!(IntersectionGraph::build(6).unwrap().split_partition().is_err());
    }

    #[test]
    fn star_checks() {
        for p in [2u32, 3, 5] {
            let g = IntersectionGraph::build(p * p).unwrap();
            for i in 1..=p {
                assert!(g.star_check(i).unwrap(), "p={p} class={i}");
            }
            assert!(g.star_check(0).is_err());
            assert!(g.star_check(p + 1).is_err());
        }
    }

    #[test]
    fn twin_blocks_match_class_structure() {
        let g = IntersectionGraph::build(4).unwrap();
        let mut sizes: Vec<usize> = g.twin_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);

        let g = IntersectionGraph::build(9).unwrap();
        let blocks = g.twin_classes();
        let mut sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 2, 3, 3, 3]);
        // blocks are pairwise twins; distinct blocks are not
        for (a, block) in blocks.iter().enumerate() {
            for &u in block {
                for &v in block {
                    assert!(u == v || g.are_twins(u, v));
                }
            }
            for other in blocks.iter().skip(a + 1) {
                for &u in block {
                    for &v in other {
                        assert!(!g.are_twins(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_classes_and_dihedral_vertices() {
        let g = IntersectionGraph::build(9).unwrap();
        for i in 1..=3 {
            let class = g.reflection_class(i);
            assert_eq!(class.len(), 3);
            let center = g.dihedral_vertex(i).unwrap();
            for &v in &class {
                assert!(g.is_adjacent(center, v));
            }
        }
        assert_eq!(g.rotation_vertices().len(), 2);
    }
}
