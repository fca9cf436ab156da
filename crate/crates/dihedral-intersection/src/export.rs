//! Serialization of graphs, index reports, and resolving profiles:
//! JSON (machine-readable, byte-deterministic), DOT, and CSV.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::IntersectionGraph;
use crate::indices::IndexReport;
use crate::resolving::{MetricDimension, ProfileSource, ResolvingProfile};

/// One exported vertex: stable id, display label, subgroup family, and
/// the class tag (absent when `n` is not a prime square).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub label: String,
    pub kind: String,
    pub class: Option<String>,
}

/// JSON form of the intersection graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: u32,
    pub p: Option<u32>,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<(usize, usize)>,
}

/// Exportable view of `g`; vertex ids index the vertex list, edges are
/// lexicographic with `u < v`.
pub fn graph_json(g: &IntersectionGraph) -> GraphJson {
    let vertices = (0..g.vertex_count())
        .map(|v| VertexJson {
            id: v,
            label: g.label(v),
            kind: g.subgroup(v).kind.family().to_string(),
            class: g.class(v).name(),
        })
        .collect();
    GraphJson { n: g.n(), p: g.p(), vertices, edges: g.edges() }
}

/// Pretty JSON with a trailing newline; byte-deterministic for a given
/// value.
pub fn json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

/// Parses a previously exported graph.
pub fn parse_graph_json(text: &str) -> Result<GraphJson> {
    serde_json::from_str(text)
        .map_err(|e| Error::InvalidArgument(format!("malformed graph JSON: {e}")))
}

/// Graphviz DOT rendering; vertices first (with their family as a
/// `class` attribute), then edges, both in id order.
pub fn dot_string(g: &IntersectionGraph) -> String {
    let mut out = String::from("graph intersection {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!(
            "  \"{}\" [class=\"{}\"];\n",
            g.label(v),
            g.subgroup(v).kind.family()
        ));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.label(u), g.label(v)));
    }
    out.push_str("}\n");
    out
}

fn rational_value(value: &num_rational::BigRational) -> Value {
    if value.is_integer() {
        match value.to_integer().to_u64() {
            Some(x) => json!(x),
            None => json!(value.to_string()),
        }
    } else {
        json!(value.to_string())
    }
}

/// JSON array of index rows: oracle value, closed-form value (when
/// `n = p^2`), and the agreement flag.
pub fn index_reports_json(reports: &[IndexReport]) -> String {
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "index": r.index.as_str(),
                "oracle": rational_value(&r.oracle),
                "formula": r.formula.as_ref().map(rational_value),
                "match": r.matches,
            })
        })
        .collect();
    json_string(&rows)
}

/// CSV rendering with columns `quantity,oracle,formula,match`.
pub fn index_reports_csv(reports: &[IndexReport]) -> String {
    let mut out = String::from("quantity,oracle,formula,match\n");
    for r in reports {
        let formula = r.formula.as_ref().map(|f| f.to_string()).unwrap_or_default();
        let matches = match r.matches {
            Some(true) => "yes",
            Some(false) => "no",
            None => "",
        };
        out.push_str(&format!("{},{},{formula},{matches}\n", r.index.as_str(), r.oracle));
    }
    out
}

fn biguint_value(value: &num_bigint::BigUint) -> Value {
    match value.to_u64() {
        Some(x) => json!(x),
        None => json!(value.to_string()),
    }
}

/// JSON form of a resolving profile:
/// `{"beta":3,"n_vertices":8,"source":"brute-force","coefficients":{"3":8,...}}`.
pub fn profile_json(profile: &ResolvingProfile) -> String {
    let coefficients: serde_json::Map<String, Value> = profile
        .coefficients
        .iter()
        .map(|(i, c)| (i.to_string(), biguint_value(c)))
        .collect();
    let source = match profile.source {
        ProfileSource::BruteForce => "brute-force",
        ProfileSource::Formula => "formula",
    };
    json_string(&json!({
        "beta": profile.beta,
        "n_vertices": profile.n_vertices,
        "source": source,
        "coefficients": coefficients,
    }))
}

/// JSON form of a metric-dimension certificate; the witness is listed
/// by label in vertex order.
pub fn metric_dimension_json(g: &IntersectionGraph, dim: &MetricDimension) -> String {
    let witness: Vec<String> = dim.witness.iter().map(|&v| g.label(v)).collect();
    json_string(&json!({
        "value": dim.value,
        "method": dim.method.as_str(),
        "witness": witness,
    }))
}
