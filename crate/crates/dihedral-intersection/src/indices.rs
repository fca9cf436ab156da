//! Seven topological indices, computed definitionally, plus closed-form
//! reference polynomials in `p` for the graphs at `n = p^2`.
//!
//! Every oracle is an exact integer sum over the BFS distance matrix and
//! the degree sequence; no floating point. The closed forms are evaluated
//! with exact rational arithmetic and compared against the oracles by
//! [`verify_indices`]; disagreements are reported, never patched.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{Distance, IntersectionGraph};
use crate::group::is_prime;

/// The eight verified quantities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexName {
    /// Sum of distances over unordered vertex pairs.
    Wiener,
    /// Half the Wiener index plus half the sum of squared distances.
    HyperWiener,
    /// Sum of squared degrees.
    Zagreb1,
    /// Sum of degree products over edges.
    Zagreb2,
    /// Sum over pairs of distance times degree sum.
    Schultz,
    /// Sum over pairs of distance times degree product.
    Gutman,
    /// Sum over vertices of degree times eccentricity.
    EccentricConnectivity,
    /// Number of edges.
    EdgeCount,
}

impl IndexName {
    pub const ALL: [IndexName; 8] = [
        IndexName::Wiener,
        IndexName::HyperWiener,
        IndexName::Zagreb1,
        IndexName::Zagreb2,
        IndexName::Schultz,
        IndexName::Gutman,
        IndexName::EccentricConnectivity,
        IndexName::EdgeCount,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IndexName::Wiener => "wiener",
            IndexName::HyperWiener => "hyper-wiener",
            IndexName::Zagreb1 => "zagreb-1",
            IndexName::Zagreb2 => "zagreb-2",
            IndexName::Schultz => "schultz",
            IndexName::Gutman => "gutman",
            IndexName::EccentricConnectivity => "eccentric-connectivity",
            IndexName::EdgeCount => "edge-count",
        }
    }
}

fn pair_distances(g: &IntersectionGraph) -> Result<Vec<(usize, usize, u64)>> {
    let dm = g.distance_matrix();
    let m = g.vertex_count();
    let mut out = Vec::with_capacity(m * (m - 1) / 2);
    for u in 0..m {
        for v in u + 1..m {
            match dm.get(u, v) {
                Distance::Finite(d) => out.push((u, v, u64::from(d))),
                Distance::Infinite => {
                    return Err(Error::Disconnected(format!(
                        "no path between {} and {}",
                        g.label(u),
                        g.label(v)
                    )))
                }
            }
        }
    }
    Ok(out)
}

/// Wiener index: sum of distances over unordered pairs.
pub fn wiener(g: &IntersectionGraph) -> Result<u64> {
    Ok(pair_distances(g)?.iter().map(|&(_, _, d)| d).sum())
}

/// Hyper-Wiener index: `(W + sum of d^2) / 2`; always an integer since
/// `d + d^2` is even for every pair.
pub fn hyper_wiener(g: &IntersectionGraph) -> Result<u64> {
    let total: u64 = pair_distances(g)?.iter().map(|&(_, _, d)| d + d * d).sum();
    debug_assert_eq!(total % 2, 0);
    Ok(total / 2)
}

/// First Zagreb index: sum of squared degrees.
pub fn zagreb1(g: &IntersectionGraph) -> u64 {
    (0..g.vertex_count()).map(|v| u64::from(g.degree(v)).pow(2)).sum()
}

/// Second Zagreb index: sum of degree products over edges.
pub fn zagreb2(g: &IntersectionGraph) -> u64 {
    g.edges().iter().map(|&(u, v)| u64::from(g.degree(u)) * u64::from(g.degree(v))).sum()
}

/// Schultz index: sum over unordered pairs of `d(u,v) * (deg u + deg v)`.
pub fn schultz(g: &IntersectionGraph) -> Result<u64> {
    Ok(pair_distances(g)?
        .iter()
        .map(|&(u, v, d)| d * (u64::from(g.degree(u)) + u64::from(g.degree(v))))
        .sum())
}

/// Gutman index: sum over unordered pairs of `d(u,v) * deg(u) * deg(v)`.
pub fn gutman(g: &IntersectionGraph) -> Result<u64> {
    Ok(pair_distances(g)?
        .iter()
        .map(|&(u, v, d)| d * u64::from(g.degree(u)) * u64::from(g.degree(v)))
        .sum())
}

/// Schultz index accumulated per vertex over transmissions; must agree
/// with the pairwise sum.
#[cfg(test)]
pub(crate) fn schultz_by_transmission(g: &IntersectionGraph) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::Disconnected("transmissions are undefined".to_string()));
    }
    let dm = g.distance_matrix();
    let m = g.vertex_count();
    Ok((0..m)
        .map(|v| {
            let transmission: u64 = (0..m).map(|u| u64::from(dm.raw(v, u))).sum();
            u64::from(g.degree(v)) * transmission
        })
        .sum())
}

/// Gutman index accumulated per vertex over degree-weighted
/// transmissions; must agree with the pairwise sum.
#[cfg(test)]
pub(crate) fn gutman_by_transmission(g: &IntersectionGraph) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::Disconnected("transmissions are undefined".to_string()));
    }
    let dm = g.distance_matrix();
    let m = g.vertex_count();
    let total: u64 = (0..m)
        .map(|v| {
            let weighted: u64 =
                (0..m).map(|u| u64::from(dm.raw(v, u)) * u64::from(g.degree(u))).sum();
            u64::from(g.degree(v)) * weighted
        })
        .sum();
    debug_assert_eq!(total % 2, 0);
    Ok(total / 2)
}

/// Eccentric connectivity index: sum over vertices of `deg(v) * ecc(v)`.
pub fn eccentric_connectivity(g: &IntersectionGraph) -> Result<u64> {
    let mut total = 0u64;
    for v in 0..g.vertex_count() {
        match g.eccentricity(v) {
            Distance::Finite(e) => total += u64::from(g.degree(v)) * u64::from(e),
            Distance::Infinite => {
                return Err(Error::Disconnected(format!(
                    "eccentricity of {} is infinite",
                    g.label(v)
                )))
            }
        }
    }
    Ok(total)
}

/// Evaluates one definitional oracle on `g`.
pub fn oracle(g: &IntersectionGraph, index: IndexName) -> Result<u64> {
    match index {
        IndexName::Wiener => wiener(g),
        IndexName::HyperWiener => hyper_wiener(g),
        IndexName::Zagreb1 => Ok(zagreb1(g)),
        IndexName::Zagreb2 => Ok(zagreb2(g)),
        IndexName::Schultz => schultz(g),
        IndexName::Gutman => gutman(g),
        IndexName::EccentricConnectivity => eccentric_connectivity(g),
        IndexName::EdgeCount => Ok(g.edge_count() as u64),
    }
}

/// Evaluates `(c_0 p^k + c_1 p^(k-1) + ... + c_k) / den` exactly.
fn poly_over(coeffs: &[i64], p: u32, den: i64) -> BigRational {
    let p = BigInt::from(p);
    let mut acc = BigInt::from(0);
    for &c in coeffs {
        acc = acc * &p + BigInt::from(c);
    }
    BigRational::new(acc, BigInt::from(den))
}

/// Closed-form reference value of `index` for the graph at `n = p^2`.
///
/// These are the published polynomial expressions carried by this crate
/// for comparison; [`verify_indices`] checks them against the
/// definitional oracles and reports any disagreement.
pub fn closed_form(index: IndexName, p: u32) -> Result<BigRational> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("p must be prime, got {p}")));
    }
    Ok(match index {
        IndexName::Wiener => poly_over(&[3, 3, 5, 3, 2], p, 2),
        IndexName::HyperWiener => poly_over(&[6, 3, 6, 3, 2], p, 2),
        IndexName::Zagreb1 => poly_over(&[4, 7, 5, 2], p, 1),
        IndexName::Zagreb2 => poly_over(&[4, 12, 13, 7, 2], p, 2),
        IndexName::Schultz => poly_over(&[7, 6, 5, 5, 2], p, 1),
        IndexName::Gutman => poly_over(&[15, 13, 15, 7, 2], p, 2),
        IndexName::EccentricConnectivity => poly_over(&[7, 6, 4], p, 1),
        IndexName::EdgeCount => poly_over(&[3, 3, 2], p, 2),
    })
}

/// Oracle value, closed-form value, and their agreement for one index.
#[derive(Clone, Debug)]
pub struct IndexReport {
    pub index: IndexName,
    /// Definitional value, as an exact rational (always integral).
    pub oracle: BigRational,
    /// Closed-form value at `p`, when `n = p^2`.
    pub formula: Option<BigRational>,
    /// `oracle == formula`, when a formula value is present.
    pub matches: Option<bool>,
}

/// Builds the graph at `n = p^2` and compares every oracle with its
/// closed form. The expected outcome is agreement on every row; rows
/// that disagree are reported with `matches = false`.
pub fn verify_indices(p: u32) -> Result<Vec<IndexReport>> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("p must be prime, got {p}")));
    }
    if p * p > 49 {
        return Err(Error::BudgetExceeded(format!(
            "index verification is budgeted to p^2 <= 49, got p = {p}"
        )));
    }
    let g = IntersectionGraph::build(p * p)?;
    index_reports(&g)
}

/// Index reports for an already-built graph; formulas are attached only
/// when `n = p^2`.
pub fn index_reports(g: &IntersectionGraph) -> Result<Vec<IndexReport>> {
    IndexName::ALL
        .iter()
        .map(|&index| {
            let oracle_value = BigRational::from_integer(BigInt::from(oracle(g, index)?));
            let formula = match g.p() {
                Some(p) => Some(closed_form(index, p)?),
                None => None,
            };
            let matches = formula.as_ref().map(|f| *f == oracle_value);
            Ok(IndexReport { index, oracle: oracle_value, formula, matches })
        })
        .collect()
}
