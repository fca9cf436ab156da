//! Command-line surface: `graph`, `indices`, `metric-dim`, `respoly`,
//! and `verify`, each taking `--p <prime>` or `--n <int>` plus a format
//! and optional budget overrides.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 budget refusal. Identical invocations produce byte-identical
//! output.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::export;
use crate::graph::IntersectionGraph;
use crate::group::{is_prime, prime_square_root};
use crate::indices::{index_reports, IndexReport};
use crate::resolving::{
    metric_dimension, resolving_polynomial, EnumBudget, MetricDimension, ResolutionMethod,
    ResolvingProfile,
};
use crate::search::SearchBudget;
use crate::verify::run_verification;

/// Largest accepted group parameter; keeps internal `2n` arithmetic and
/// allocation sane.
const MAX_N: u32 = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "dihedral-intersection",
    version,
    about = "Intersection graphs of proper nontrivial subgroups of dihedral groups: \
             invariants, topological indices, metric dimension, and formula verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the subgroup intersection graph and export it.
    Graph(CommonArgs),
    /// Compute the topological indices, with closed-form comparison at n = p^2.
    Indices(CommonArgs),
    /// Compute the exact metric dimension with a certificate.
    MetricDim(CommonArgs),
    /// Enumerate the resolving polynomial coefficients.
    Respoly(CommonArgs),
    /// Run the full oracle-vs-formula verification for n = p^2.
    Verify(CommonArgs),
}

impl Command {
    fn common(&self) -> &CommonArgs {
        match self {
            Command::Graph(c)
            | Command::Indices(c)
            | Command::MetricDim(c)
            | Command::Respoly(c)
            | Command::Verify(c) => c,
        }
    }
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("size").required(true).args(["p", "n"])))]
struct CommonArgs {
    /// Prime p; works on the graph at n = p^2.
    #[arg(long)]
    p: Option<u32>,
    /// Group parameter n >= 3 (the group is D_2n).
    #[arg(long)]
    n: Option<u32>,
    /// Output format; not every command supports every format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the exact-search vertex budget (default 40).
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Override the subset-enumeration exponent budget (default 24).
    #[arg(long)]
    max_enum_bits: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

impl CommonArgs {
    fn resolve_n(&self) -> Result<u32> {
        let n = match (self.p, self.n) {
            (Some(p), None) => {
                if !is_prime(p) {
                    return Err(Error::InvalidParameter(format!("p must be prime, got {p}")));
                }
                p.checked_mul(p)
                    .ok_or_else(|| Error::InvalidParameter(format!("p = {p} is too large")))?
            }
            (None, Some(n)) => n,
            _ => unreachable!("clap enforces exactly one of --p / --n"),
        };
        if n > MAX_N {
            return Err(Error::InvalidParameter(format!("n = {n} exceeds the cap {MAX_N}")));
        }
        Ok(n)
    }

    fn search_budget(&self) -> SearchBudget {
        match self.max_vertices {
            Some(max_vertices) => SearchBudget { max_vertices },
            None => SearchBudget::default(),
        }
    }

    fn enum_budget(&self) -> EnumBudget {
        match self.max_enum_bits {
            Some(max_bits) => EnumBudget { max_bits },
            None => EnumBudget::default(),
        }
    }
}

fn unsupported_format(command: &str, format: Format) -> Error {
    Error::InvalidArgument(format!(
        "format {:?} is not supported by the {command} command",
        format
    ))
}

fn graph_text(g: &IntersectionGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "intersection graph of proper nontrivial subgroups of D_{} (n = {}{})",
        2 * g.n(),
        g.n(),
        match g.p() {
            Some(p) => format!(", p = {p}"),
            None => String::new(),
        }
    );
    let _ = writeln!(out, "vertices: {}", g.vertex_count());
    let _ = writeln!(out, "edges: {}", g.edge_count());
    for v in 0..g.vertex_count() {
        let class = g.class(v).name().unwrap_or_else(|| g.subgroup(v).kind.family().to_string());
        let _ = writeln!(out, "  {v}: {} ({class}, degree {})", g.label(v), g.degree(v));
    }
    out
}

fn indices_text(g: &IntersectionGraph, reports: &[IndexReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "topological indices for n = {}{}",
        g.n(),
        match g.p() {
            Some(p) => format!(" (p = {p})"),
            None => String::new(),
        }
    );
    for r in reports {
        match (&r.formula, r.matches) {
            (Some(f), Some(m)) => {
                let _ = writeln!(
                    out,
                    "{}: oracle {}, formula {f}, match {}",
                    r.index.as_str(),
                    r.oracle,
                    if m { "yes" } else { "no" }
                );
            }
            _ => {
                let _ = writeln!(out, "{}: oracle {}", r.index.as_str(), r.oracle);
            }
        }
    }
    out
}

fn metric_dim_text(g: &IntersectionGraph, dim: &MetricDimension) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "metric dimension: {}", dim.value);
    let method = match dim.method {
        ResolutionMethod::TwinTransversal => {
            "twin-transversal (lower bound met by omitting one vertex per twin block)"
        }
        ResolutionMethod::Exhaustive => "exhaustive (search over cardinalities above the twin bound)",
    };
    let _ = writeln!(out, "method: {method}");
    let labels: Vec<String> = dim.witness.iter().map(|&v| g.label(v)).collect();
    let _ = writeln!(out, "witness ({} landmarks): {}", labels.len(), labels.join(", "));
    out
}

fn respoly_text(g: &IntersectionGraph, profile: &ResolvingProfile) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "resolving polynomial for n = {} ({} vertices, brute force)",
        g.n(),
        profile.n_vertices
    );
    let _ = writeln!(out, "beta: {}", profile.beta);
    for (i, count) in &profile.coefficients {
        let _ = writeln!(out, "r_{i} = {count}");
    }
    out
}

fn execute(cli: Cli) -> Result<(String, i32)> {
    let common = cli.command.common();
    let format = common.format;
    match &cli.command {
        Command::Graph(args) => {
            let g = IntersectionGraph::build(args.resolve_n()?)?;
            let text = match format {
                Format::Json => export::json_string(&export::graph_json(&g)),
                Format::Dot => export::dot_string(&g),
                Format::Text => graph_text(&g),
                Format::Csv => return Err(unsupported_format("graph", format)),
            };
            Ok((text, 0))
        }
        Command::Indices(args) => {
            let g = IntersectionGraph::build(args.resolve_n()?)?;
            let reports = index_reports(&g)?;
            let text = match format {
                Format::Json => export::index_reports_json(&reports),
                Format::Csv => export::index_reports_csv(&reports),
                Format::Text => indices_text(&g, &reports),
                Format::Dot => return Err(unsupported_format("indices", format)),
            };
            Ok((text, 0))
        }
        Command::MetricDim(args) => {
            let g = IntersectionGraph::build(args.resolve_n()?)?;
            let dim = metric_dimension(&g, &args.search_budget())?;
            let text = match format {
                Format::Json => export::metric_dimension_json(&g, &dim),
                Format::Text => metric_dim_text(&g, &dim),
                _ => return Err(unsupported_format("metric-dim", format)),
            };
            Ok((text, 0))
        }
        Command::Respoly(args) => {
            let g = IntersectionGraph::build(args.resolve_n()?)?;
            let profile = resolving_polynomial(&g, &args.enum_budget())?;
            let text = match format {
                Format::Json => export::profile_json(&profile),
                Format::Text => respoly_text(&g, &profile),
                _ => return Err(unsupported_format("respoly", format)),
            };
            Ok((text, 0))
        }
        Command::Verify(args) => {
            let n = args.resolve_n()?;
            let p = prime_square_root(n).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "verification requires n = p^2 for a prime p, got n = {n}"
                ))
            })?;
            let report = run_verification(p, &args.search_budget(), &args.enum_budget())?;
            let text = match format {
                Format::Json => crate::verify::to_json(&report),
                Format::Csv => crate::verify::to_csv(&report),
                Format::Text => crate::verify::to_text(&report),
                Format::Dot => return Err(unsupported_format("verify", format)),
            };
            Ok((text, if report.pass { 0 } else { 1 }))
        }
    }
}

/// Parses `args` (including the program name), runs the command, writes
/// the output, and returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let out_path = cli.command.common().out.clone();
    match execute(cli) {
        Ok((text, code)) => {
            match out_path {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 2;
                    }
                }
                None => print!("{text}"),
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<(String, i32)> {
        let mut full = vec!["dihedral-intersection"];
        full.extend_from_slice(args);
        execute(Cli::try_parse_from(full).expect("arguments parse"))
    }

    #[test]
    fn graph_formats() {
        let (json, code) = exec(&["graph", "--p", "2", "--format", "json"]).unwrap();
        assert_eq!(code, 0);
        let parsed = export::parse_graph_json(&json).unwrap();
        assert_eq!(parsed.vertices.len(), 8);
        assert_eq!(parsed.edges.len(), 10);

        let (dot, _) = exec(&["graph", "--n", "6", "--format", "dot"]).unwrap();
        assert_eq!(dot.matches("[class=").count(), 14);

        let (text, _) = exec(&["graph", "--n", "9"]).unwrap();
        assert!(text.contains("vertices: 14"));
        assert!(text.contains("D_18"));

        assert!(matches!(
            exec(&["graph", "--n", "9", "--format", "csv"]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn invalid_parameters_exit_two() {
        let err = exec(&["graph", "--n", "2"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = exec(&["indices", "--p", "4"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = exec(&["graph", "--n", "200000"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(Cli::try_parse_from(["x", "graph"]).is_err());
        assert!(Cli::try_parse_from(["x", "graph", "--p", "2", "--n", "9"]).is_err());
    }

    #[test]
    fn indices_csv_has_eight_data_rows() {
        let (csv, code) = exec(&["indices", "--p", "3", "--format", "csv"]).unwrap();
        assert_eq!(code, 0);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[0], "quantity,oracle,formula,match");
        assert!(lines.contains(&"wiener,190,190,yes"));
        assert!(lines.contains(&"gutman,889,862,no"));
    }

    #[test]
    fn metric_dim_certificate_for_p5() {
        let (text, code) = exec(&["metric-dim", "--p", "5"]).unwrap();
        assert_eq!(code, 0);
        assert!(text.starts_with("metric dimension: 21\n"));
        assert!(text.contains("twin-transversal"));
        assert!(text.contains("witness (21 landmarks):"));
    }

    #[test]
    fn respoly_json_and_budget_refusal() {
        let (json, code) = exec(&["respoly", "--p", "2", "--format", "json"]).unwrap();
        assert_eq!(code, 0);
        assert!(json.contains("\"beta\": 3"));
        assert!(json.contains("\"7\": 8"));
        assert!(json.contains("\"8\": 1"));

        let err = exec(&["respoly", "--p", "5"]).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn verify_reports_and_exit_codes() {
        let (text, code) = exec(&["verify", "--p", "2"]).unwrap();
        assert_eq!(code, 1);
        assert!(text.contains("[pass] vertex-count: 8"));
        assert!(text.contains("[FAIL] index-schultz"));

        let (_, code) = exec(&["verify", "--n", "9", "--format", "csv"]).unwrap();
        assert_eq!(code, 1);

        let err = exec(&["verify", "--n", "6"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);

        let err = exec(&["verify", "--p", "7"]).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn verify_json_is_deterministic() {
        let (a, _) = exec(&["verify", "--p", "2", "--format", "json"]).unwrap();
        let (b, _) = exec(&["verify", "--p", "2", "--format", "json"]).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"resolving_comparison\""));
    }

    #[test]
    fn output_file_writing() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("graph.json");
        let code = run_from([
            "dihedral-intersection",
            "graph",
            "--p",
            "3",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = export::parse_graph_json(&text).unwrap();
        assert_eq!(parsed.vertices.len(), 14);

        let bad = dir.path().join("missing").join("graph.json");
        let code = run_from([
            "dihedral-intersection",
            "graph",
            "--p",
            "3",
            "--out",
            bad.to_str().unwrap(),
        ]);
        assert_eq!(code, 2);
    }
}
