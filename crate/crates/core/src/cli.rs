//! Command-line surface: compute, verify, construct, oracle, report, and
//! cograph analyze, with stable-ordered JSON (sorted keys) on stdout.
//!
//! Exit codes: 0 ok, 2 input error, 3 budget/ceiling, 4 self-audit failure.

use crate::cographs::{big_mu_decompose, cograph_visibility_numbers, is_cograph, CographError};
use crate::constructions::{
    cograph_witnesses, dual_set_cartesian_cliques, family_witnesses, mu_set_line_complete,
    outer_set_cartesian_cliques, total_set_direct_cliques, total_set_line_complete,
    total_witness_lk10, ConstructError, FamilyKind,
};
use crate::extremal::{ex_forbidden, zarankiewicz, ExtremalError, ForbiddenPattern};
use crate::generators::complete;
use crate::genlang::{eval, parse_spec};
use crate::graph::Graph;
use crate::io::{load_graph_file, write_graph6};
use crate::products::line_graph;
use crate::report::{run_suite, Report, ReportOptions, Suite};
use crate::solver::{max_visibility, SolveError, SolveOptions, Strategy, Symmetry};
use crate::visibility::{verify, Variant};
use crate::vset::VertexSet;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::num::NonZeroUsize;
use std::path::Path;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "mutvis",
    about = "Mutual-visibility numbers of small graphs: exact solver, verifiers, witness constructions, and Turán/Zarankiewicz oracles",
    after_help = "Graph expressions: K(n), K(m,n), C(n), petersen, T(n,r), c5(i,j), g7(i,j,k),\n\
                  line(e), cart(e,e), dir(e,e), file(path.el|path.g6), e + e (join),\n\
                  e u e (disjoint union). Join binds looser than union, so\n\
                  \"K(1) u K(2) + H\" reads as \"(K(1) u K(2)) + H\"."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Mu,
    Outer,
    Dual,
    Total,
    All,
}

impl VariantArg {
    fn variants(self) -> Vec<Variant> {
        match self {
            VariantArg::Mu => vec![Variant::Mutual],
            VariantArg::Outer => vec![Variant::Outer],
            VariantArg::Dual => vec![Variant::Dual],
            VariantArg::Total => vec![Variant::Total],
            VariantArg::All => Variant::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Descending,
    Bnb,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Descending => Strategy::Descending,
            StrategyArg::Bnb => Strategy::BranchAndBound,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SymmetryArg {
    None,
    VertexOrbits,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct CommonSolve {
    /// Graph expression or a path to a .el/.g6 file.
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    /// Worker threads for the search (defaults to the rayon pool).
    #[arg(long)]
    threads: Option<NonZeroUsize>,
    /// Time budget in seconds; exhaustion returns a lower bound and exit 3.
    #[arg(long)]
    budget: Option<f64>,
    #[arg(long, value_enum, default_value_t = SymmetryArg::None)]
    symmetry: SymmetryArg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute visibility numbers with witnesses.
    Compute {
        #[command(flatten)]
        common: CommonSolve,
        #[arg(long, value_enum, default_value_t = VariantArg::All)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check whether a vertex set is a valid set for a variant.
    Verify {
        /// Graph expression or file path.
        #[arg(long)]
        graph: String,
        /// Vertices: indices or labels ("(2,1)", "3-7"), comma/space
        /// separated, or @file.
        #[arg(long)]
        set: String,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit a closed-form witness construction.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Run an extremal oracle.
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
    /// Reproduce a result table; exits 4 if any row self-audit fails.
    Report {
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample count for the cographs suite.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Grid cap (hamming tops out at 5; direct and line-complete at 6).
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long)]
        threads: Option<NonZeroUsize>,
    },
    /// Cograph analysis.
    Cograph {
        #[command(subcommand)]
        what: CographCmd,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Dual set of size n+m-1 on K_n square K_m.
    DualCart(NmArgs),
    /// Outer set of size n+m-2 on K_n square K_m.
    OuterCart(NmArgs),
    /// Total set of size nm-4 on K_n direct-product K_m.
    TotalDir(NmArgs),
    /// Tripartition edge set: a maximum mutual-visibility set of L(K_n).
    MuLkn(NArgs),
    /// Star-plus-matching edge set: a total set of L(K_n).
    TotalLkn(NArgs),
    /// The explicit 16-edge total set of L(K_10).
    Lk10Witness {
        #[arg(long)]
        emit_graph6: bool,
    },
    /// Witnesses for a connected cograph, one per variant.
    Cograph {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        emit_graph6: bool,
    },
    /// Witnesses for the C5 duplication family.
    FamilyC5 {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        emit_graph6: bool,
    },
    /// Witnesses for the G7 duplication family.
    FamilyG7 {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        emit_graph6: bool,
    },
}

#[derive(Args)]
struct NmArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    emit_graph6: bool,
}

#[derive(Args)]
struct NArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    emit_graph6: bool,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Maximum edges of an n-vertex graph avoiding a forbidden pattern.
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid: ForbiddenPattern,
    },
    /// Maximum 1s of an m x n binary matrix with no 2x2 all-ones submatrix.
    Zarankiewicz {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

impl ValueEnum for ForbiddenPattern {
    fn value_variants<'a>() -> &'a [Self] {
        &[
            ForbiddenPattern::C4,
            ForbiddenPattern::K4,
            ForbiddenPattern::K4Minus,
            ForbiddenPattern::K4C4,
        ]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

impl ValueEnum for Suite {
    fn value_variants<'a>() -> &'a [Self] {
        &[
            Suite::Hamming,
            Suite::Direct,
            Suite::LineComplete,
            Suite::Cographs,
            Suite::FamilyG,
        ]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

#[derive(Subcommand)]
enum CographCmd {
    /// Recognition, big-mu decomposition, and the four numbers.
    Analyze {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Ceiling(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Ceiling(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Ceiling(m) => m,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::AboveCeiling { .. } => CliError::Ceiling(e.to_string()),
            SolveError::Disconnected => CliError::Input(e.to_string()),
        }
    }
}

impl From<ExtremalError> for CliError {
    fn from(e: ExtremalError) -> Self {
        match e {
            ExtremalError::AboveCeiling { .. } => CliError::Ceiling(e.to_string()),
            ExtremalError::ZarankiewiczRange { .. } => CliError::Input(e.to_string()),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Solve(s) => s.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<CographError> for CliError {
    fn from(e: CographError) -> Self {
        match e {
            CographError::Solve(s) => s.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

/// Parse a graph from a DSL expression or a file path.
fn load_graph(spec: &str) -> Result<Graph, CliError> {
    match parse_spec(spec) {
        Ok(ast) => eval(&ast).map_err(input),
        Err(perr) => {
            let p = Path::new(spec);
            if p.exists() {
                load_graph_file(p).map_err(input)
            } else {
                Err(input(format!("--graph {spec:?}: {perr}")))
            }
        }
    }
}

/// Split a set description on commas/whitespace outside parentheses.
fn set_tokens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' | ' ' | '\t' | '\n' | '\r' if depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            _ => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Resolve raw indices or vertex labels (with "b-a" normalized to "a-b").
fn resolve_set(g: &Graph, desc: &str) -> Result<VertexSet, CliError> {
    let text = if let Some(path) = desc.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| input(format!("--set @{path}: {e}")))?
    } else {
        desc.to_string()
    };
    let mut x = VertexSet::empty(g.n());
    for tok in set_tokens(&text) {
        let v = if let Ok(idx) = tok.parse::<usize>() {
            if idx >= g.n() {
                return Err(input(format!("vertex {idx} out of range (n = {})", g.n())));
            }
            idx
        } else {
            let by_label = |lbl: &str| (0..g.n()).find(|&v| g.label(v) == Some(lbl));
            let found = by_label(&tok).or_else(|| {
                tok.split_once('-').and_then(|(a, b)| {
                    if a.chars().all(|c| c.is_ascii_digit()) && b.chars().all(|c| c.is_ascii_digit())
                    {
                        by_label(&format!("{}-{}", b, a))
                    } else {
                        None
                    }
                })
            });
            found.ok_or_else(|| input(format!("no vertex with label {tok:?}")))?
        };
        x.insert(v);
    }
    Ok(x)
}

fn witness_json(g: &Graph, x: &VertexSet) -> (Value, Option<Value>) {
    let ids: Vec<usize> = x.to_vec();
    let labels = g
        .labels()
        .map(|_| Value::Array(ids.iter().map(|&v| json!(g.display_label(v))).collect()));
    (json!(ids), labels)
}

fn dispatch(cmd: Cmd) -> Result<i32, CliError> {
    match cmd {
        Cmd::Compute {
            common,
            variant,
            format,
        } => compute(common, variant, format),
        Cmd::Verify {
            graph,
            set,
            variant,
            format,
        } => cmd_verify(&graph, &set, variant, format),
        Cmd::Construct { what } => construct(what),
        Cmd::Oracle { what } => oracle(what),
        Cmd::Report {
            suite,
            format,
            seed,
            samples,
            nmax,
            threads,
        } => report(suite, format, seed, samples, nmax, threads),
        Cmd::Cograph { what } => cograph_cmd(what),
    }
}

fn compute(common: CommonSolve, variant: VariantArg, format: Format) -> Result<i32, CliError> {
    let g = load_graph(&common.graph)?;
    let variants = variant.variants();
    let mut results = Vec::new();
    for v in &variants {
        let mut opts = SolveOptions::new(*v);
        opts.strategy = common.strategy.into();
        opts.threads = common.threads;
        opts.time_budget = common.budget.map(Duration::from_secs_f64);
        opts.symmetry = match common.symmetry {
            SymmetryArg::None => Symmetry::None,
            SymmetryArg::VertexOrbits => Symmetry::VertexOrbits,
        };
        results.push(max_visibility(&g, &opts)?);
    }
    let inexact = results.iter().any(|r| !r.exact);
    match format {
        Format::Json => {
            let per = |r: &crate::solver::SolveResult| {
                let mut j = r.to_json();
                let (_, labels) = witness_json(&g, &r.witness);
                if let Some(labels) = labels {
                    j["witness_labels"] = labels;
                }
                j
            };
            if results.len() == 1 {
                println!("{}", per(&results[0]));
            } else {
                let mut obj = serde_json::Map::new();
                for r in &results {
                    obj.insert(r.variant.name().to_string(), per(r));
                }
                println!("{}", Value::Object(obj));
            }
        }
        Format::Csv => {
            println!("variant,value,witness,exact,nodes");
            for r in &results {
                let w: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
                println!(
                    "{},{},{},{},{}",
                    r.variant.name(),
                    r.value,
                    w.join(" "),
                    r.exact,
                    r.nodes
                );
            }
        }
    }
    Ok(if inexact { 3 } else { 0 })
}

fn cmd_verify(graph: &str, set: &str, variant: VariantArg, format: Format) -> Result<i32, CliError> {
    let g = load_graph(graph)?;
    let variants = variant.variants();
    if variants.len() != 1 {
        return Err(input("verify needs a single --variant (not all)"));
    }
    let x = resolve_set(&g, set)?;
    let d = g.distance_matrix();
    let report = verify(&g, &d, &x, variants[0]).map_err(input)?;
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => {
            println!("valid,failing_pair,pair_class");
            println!(
                "{},{},{}",
                report.valid,
                report
                    .failing_pair
                    .map(|(u, v)| format!("{u} {v}"))
                    .unwrap_or_default(),
                report.pair_class.map(|c| c.name()).unwrap_or_default()
            );
        }
    }
    Ok(0)
}

fn vertex_set_construct_json(
    g: &Graph,
    x: &VertexSet,
    variant: Variant,
    emit_graph6: bool,
) -> Value {
    let (witness, labels) = witness_json(g, x);
    let mut j = json!({
        "host": {"n": g.n(), "m": g.m()},
        "size": x.len(),
        "source": "construction",
        "variant": variant.name(),
        "witness": witness,
    });
    if let Some(labels) = labels {
        j["witness_labels"] = labels;
    }
    if emit_graph6 {
        j["graph6"] = json!(write_graph6(g));
    }
    j
}

fn edge_set_construct_json(
    n: usize,
    f: &[(usize, usize)],
    variant: Variant,
    emit_graph6: bool,
) -> Value {
    let edges: Vec<Value> = f.iter().map(|&(u, v)| json!([u, v])).collect();
    let mut j = json!({
        "edges": edges,
        "n": n,
        "size": f.len(),
        "source": "construction",
        "variant": variant.name(),
    });
    if emit_graph6 {
        let (lg, _) = line_graph(&complete(n)).unwrap();
        j["graph6"] = json!(write_graph6(&lg));
    }
    j
}

fn family_construct_json(
    g: &Graph,
    ws: &std::collections::BTreeMap<Variant, VertexSet>,
    emit_graph6: bool,
) -> Value {
    let mut obj = serde_json::Map::new();
    for (variant, x) in ws {
        let (witness, _) = witness_json(g, x);
        obj.insert(
            variant.name().to_string(),
            json!({"size": x.len(), "witness": witness}),
        );
    }
    let mut j = json!({
        "host": {"n": g.n(), "m": g.m()},
        "source": "construction",
        "witnesses": Value::Object(obj),
    });
    if emit_graph6 {
        j["graph6"] = json!(write_graph6(g));
    }
    j
}

fn construct(what: ConstructCmd) -> Result<i32, CliError> {
    let out = match what {
        ConstructCmd::DualCart(a) => {
            let (g, x) = dual_set_cartesian_cliques(a.n, a.m)?;
            vertex_set_construct_json(&g, &x, Variant::Dual, a.emit_graph6)
        }
        ConstructCmd::OuterCart(a) => {
            let (g, x) = outer_set_cartesian_cliques(a.n, a.m)?;
            vertex_set_construct_json(&g, &x, Variant::Outer, a.emit_graph6)
        }
        ConstructCmd::TotalDir(a) => {
            let (g, x) = total_set_direct_cliques(a.n, a.m)?;
            vertex_set_construct_json(&g, &x, Variant::Total, a.emit_graph6)
        }
        ConstructCmd::MuLkn(a) => {
            let f = mu_set_line_complete(a.n)?;
            edge_set_construct_json(a.n, &f, Variant::Mutual, a.emit_graph6)
        }
        ConstructCmd::TotalLkn(a) => {
            let f = total_set_line_complete(a.n)?;
            edge_set_construct_json(a.n, &f, Variant::Total, a.emit_graph6)
        }
        ConstructCmd::Lk10Witness { emit_graph6 } => {
            let f = total_witness_lk10();
            edge_set_construct_json(10, &f, Variant::Total, emit_graph6)
        }
        ConstructCmd::Cograph { graph, emit_graph6 } => {
            let ast = parse_spec(&graph).map_err(input)?;
            let (g, ws) = cograph_witnesses(&ast)?;
            family_construct_json(&g, &ws, emit_graph6)
        }
        ConstructCmd::FamilyC5 { i, j, emit_graph6 } => {
            let (g, ws) = family_witnesses(FamilyKind::C5 { i, j })?;
            family_construct_json(&g, &ws, emit_graph6)
        }
        ConstructCmd::FamilyG7 {
            i,
            j,
            k,
            emit_graph6,
        } => {
            let (g, ws) = family_witnesses(FamilyKind::G7 { i, j, k })?;
            family_construct_json(&g, &ws, emit_graph6)
        }
    };
    println!("{out}");
    Ok(0)
}

fn oracle(what: OracleCmd) -> Result<i32, CliError> {
    match what {
        OracleCmd::Ex { n, forbid } => {
            let r = ex_forbidden(n, forbid)?;
            println!(
                "{}",
                json!({
                    "certified": r.certified,
                    "forbid": forbid.name(),
                    "max_edges": r.max_edges,
                    "n": n,
                    "witness_graph6": write_graph6(&r.witness),
                })
            );
        }
        OracleCmd::Zarankiewicz { m, n } => {
            let r = zarankiewicz(m, n)?;
            println!(
                "{}",
                json!({
                    "m": m,
                    "n": n,
                    "rows": r.row_strings(),
                    "value": r.max_ones,
                })
            );
        }
    }
    Ok(0)
}

fn report(
    suite: Suite,
    format: Format,
    seed: u64,
    samples: usize,
    nmax: usize,
    threads: Option<NonZeroUsize>,
) -> Result<i32, CliError> {
    let opts = ReportOptions {
        seed,
        samples,
        nmax,
        threads,
    };
    let rep: Report = run_suite(suite, &opts)?;
    match format {
        Format::Json => println!("{}", rep.to_json()),
        Format::Csv => print!("{}", rep.to_csv()),
    }
    if rep.ok {
        Ok(0)
    } else {
        eprintln!("error: report self-audit failed (formula/computed mismatch)");
        Ok(4)
    }
}

fn cograph_cmd(what: CographCmd) -> Result<i32, CliError> {
    match what {
        CographCmd::Analyze { graph, format } => {
            let g = load_graph(&graph)?;
            if !g.is_connected() {
                return Err(input("cograph analyze needs a connected graph"));
            }
            let cog = is_cograph(&g);
            let big_mu = big_mu_decompose(&g).map(|dec| {
                json!({
                    "h_vertices": dec.h_vertices.to_vec(),
                    "t": dec.t,
                    "v": dec.v,
                })
            });
            let numbers = if cog {
                let nums = cograph_visibility_numbers(&g)?;
                Some(json!({
                    "mu": nums.mu,
                    "mu_d": nums.mu_d,
                    "mu_o": nums.mu_o,
                    "mu_t": nums.mu_t,
                }))
            } else {
                None
            };
            let out = json!({
                "big_mu": big_mu,
                "is_cograph": cog,
                "numbers": numbers,
            });
            match format {
                Format::Json => println!("{out}"),
                Format::Csv => {
                    println!("is_cograph,big_mu,mu,mu_o,mu_d,mu_t");
                    let nums = |k: &str| {
                        out["numbers"]
                            .get(k)
                            .map(|v| v.to_string())
                            .unwrap_or_default()
                    };
                    println!(
                        "{},{},{},{},{},{}",
                        cog,
                        out["big_mu"].is_object(),
                        nums("mu"),
                        nums("mu_o"),
                        nums("mu_d"),
                        nums("mu_t")
                    );
                }
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_token_splitting() {
        assert_eq!(set_tokens("0,1,2"), vec!["0", "1", "2"]);
        assert_eq!(set_tokens("(2,1),(0,0)"), vec!["(2,1)", "(0,0)"]);
        assert_eq!(set_tokens("3-7 0-1"), vec!["3-7", "0-1"]);
        assert_eq!(set_tokens("  "), Vec::<String>::new());
    }

    #[test]
    fn resolve_labels_and_indices() {
        let g = crate::products::cartesian_product(&complete(3), &complete(3)).unwrap();
        let x = resolve_set(&g, "(0,0), (1,1)").unwrap();
        assert_eq!(x.to_vec(), vec![0, 4]);
        let x = resolve_set(&g, "0 4").unwrap();
        assert_eq!(x.to_vec(), vec![0, 4]);
        assert!(resolve_set(&g, "(9,9)").is_err());
        assert!(resolve_set(&g, "99").is_err());
        // Line-graph labels, including reversed endpoints.
        let (lg, _) = line_graph(&complete(4)).unwrap();
        let x = resolve_set(&lg, "0-1,3-2").unwrap();
        assert_eq!(x.len(), 2);
    }

    #[test]
    fn graph_loading() {
        assert!(load_graph("petersen").is_ok());
        assert!(load_graph("cart(K(3),K(3))").is_ok());
        assert!(load_graph("file(missing.g6)").is_err());
        assert!(load_graph("definitely not a graph").is_err());
    }
}
