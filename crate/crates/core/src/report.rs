//! Desk-scale reproduction tables: every row carries both the closed-form
//! value and an independently computed one, and the report is marked failed
//! if any pair disagrees.

use crate::cographs::{big_mu_decompose, cograph_visibility_numbers};
use crate::constructions::{
    dual_set_cartesian_cliques, expected_family_size, family_witnesses,
    outer_set_cartesian_cliques, FamilyKind,
};
use crate::extremal::{ex_forbidden, turan_edge_count, ForbiddenPattern};
use crate::generators::{complete, disjoint_union, join};
use crate::graph::Graph;
use crate::products::{cartesian_product, direct_product, line_graph};
use crate::solver::{max_visibility, SolveError, SolveOptions};
use crate::visibility::Variant;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Hamming,
    Direct,
    LineComplete,
    Cographs,
    FamilyG,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Hamming => "hamming",
            Suite::Direct => "direct",
            Suite::LineComplete => "line-complete",
            Suite::Cographs => "cographs",
            Suite::FamilyG => "family-g",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hamming" => Ok(Suite::Hamming),
            "direct" => Ok(Suite::Direct),
            "line-complete" => Ok(Suite::LineComplete),
            "cographs" => Ok(Suite::Cographs),
            "family-g" => Ok(Suite::FamilyG),
            other => Err(format!(
                "unknown suite {other:?} (expected hamming|direct|line-complete|cographs|family-g)"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    /// Self-audit: all formula/computed column pairs agree.
    pub ok: bool,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut obj = serde_json::Map::new();
                for (c, v) in self.columns.iter().zip(r) {
                    obj.insert(c.to_string(), v.clone());
                }
                Value::Object(obj)
            })
            .collect();
        json!({"suite": self.suite, "ok": self.ok, "rows": rows})
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|v| match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

pub struct ReportOptions {
    pub seed: u64,
    /// Sample count for the cograph suite.
    pub samples: usize,
    /// Grid cap: hamming uses 3..=min(nmax, 5), line-complete and direct
    /// stop at min(nmax, 6).
    pub nmax: usize,
    pub threads: Option<std::num::NonZeroUsize>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            seed: 0,
            samples: 200,
            nmax: 6,
            threads: None,
        }
    }
}

fn solve(g: &Graph, variant: Variant, opts: &ReportOptions) -> Result<usize, SolveError> {
    let mut o = SolveOptions::new(variant);
    o.threads = opts.threads;
    Ok(max_visibility(g, &o)?.value)
}

pub fn run_suite(suite: Suite, opts: &ReportOptions) -> Result<Report, SolveError> {
    match suite {
        Suite::Hamming => hamming(opts),
        Suite::Direct => direct(opts),
        Suite::LineComplete => line_complete(opts),
        Suite::Cographs => cographs(opts),
        Suite::FamilyG => family_g(opts),
    }
}

/// mu_d, mu_o, mu_t of K_n □ K_m against n+m-1, n+m-2, max{n,m}, plus the
/// closed-form witness sizes.
fn hamming(opts: &ReportOptions) -> Result<Report, SolveError> {
    let columns = vec![
        "n",
        "m",
        "mu_d_formula",
        "mu_d_solved",
        "mu_o_formula",
        "mu_o_solved",
        "mu_t_formula",
        "mu_t_solved",
        "row_ok",
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    let hi = opts.nmax.min(5);
    for n in 3..=hi {
        for m in n..=hi {
            let g = cartesian_product(&complete(n), &complete(m)).unwrap();
            let mu_d = solve(&g, Variant::Dual, opts)?;
            let mu_o = solve(&g, Variant::Outer, opts)?;
            let mu_t = solve(&g, Variant::Total, opts)?;
            let (_, dual_witness) = dual_set_cartesian_cliques(n, m).unwrap();
            let (_, outer_witness) = outer_set_cartesian_cliques(n, m).unwrap();
            let row_ok = mu_d == n + m - 1
                && mu_o == n + m - 2
                && mu_t == n.max(m)
                && dual_witness.len() == mu_d
                && outer_witness.len() == mu_o;
            ok &= row_ok;
            rows.push(vec![
                json!(n),
                json!(m),
                json!(n + m - 1),
                json!(mu_d),
                json!(n + m - 2),
                json!(mu_o),
                json!(n.max(m)),
                json!(mu_t),
                json!(row_ok),
            ]);
        }
    }
    Ok(Report {
        suite: "hamming",
        columns,
        rows,
        ok,
    })
}

/// All four numbers of K_n × K_m against nm - 4 (n, m >= 5).
fn direct(opts: &ReportOptions) -> Result<Report, SolveError> {
    let columns = vec![
        "n",
        "m",
        "formula",
        "mu_solved",
        "mu_o_solved",
        "mu_d_solved",
        "mu_t_solved",
        "row_ok",
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    let hi = opts.nmax.clamp(5, 6);
    for n in 5..=hi {
        for m in n..=hi {
            let g = direct_product(&complete(n), &complete(m)).unwrap();
            let formula = n * m - 4;
            let vals: Vec<usize> = [Variant::Mutual, Variant::Outer, Variant::Dual, Variant::Total]
                .iter()
                .map(|&v| solve(&g, v, opts))
                .collect::<Result<_, _>>()?;
            let row_ok = vals.iter().all(|&v| v == formula);
            ok &= row_ok;
            rows.push(vec![
                json!(n),
                json!(m),
                json!(formula),
                json!(vals[0]),
                json!(vals[1]),
                json!(vals[2]),
                json!(vals[3]),
                json!(row_ok),
            ]);
        }
    }
    Ok(Report {
        suite: "direct",
        columns,
        rows,
        ok,
    })
}

/// The four numbers of L(K_n) against the Turán-type oracles.
fn line_complete(opts: &ReportOptions) -> Result<Report, SolveError> {
    let columns = vec![
        "n",
        "mu_turan",
        "mu_solved",
        "mu_t_ex_c4",
        "mu_t_solved",
        "mu_o_ex_k4minus",
        "mu_o_solved",
        "mu_d_ex_k4c4",
        "mu_d_solved",
        "row_ok",
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 3..=opts.nmax.clamp(3, 6) {
        let (lg, _) = line_graph(&complete(n)).unwrap();
        let mu = solve(&lg, Variant::Mutual, opts)?;
        let mu_t = solve(&lg, Variant::Total, opts)?;
        let mu_o = solve(&lg, Variant::Outer, opts)?;
        let mu_d = solve(&lg, Variant::Dual, opts)?;
        let turan = turan_edge_count(n, 3).unwrap();
        let ex_c4 = ex_forbidden(n, ForbiddenPattern::C4).unwrap().max_edges;
        let ex_k4m = ex_forbidden(n, ForbiddenPattern::K4Minus).unwrap().max_edges;
        let ex_pair = ex_forbidden(n, ForbiddenPattern::K4C4).unwrap().max_edges;
        let row_ok = mu == turan && mu_t == ex_c4 && mu_o == ex_k4m && mu_d == ex_pair;
        ok &= row_ok;
        rows.push(vec![
            json!(n),
            json!(turan),
            json!(mu),
            json!(ex_c4),
            json!(mu_t),
            json!(ex_k4m),
            json!(mu_o),
            json!(ex_pair),
            json!(mu_d),
            json!(row_ok),
        ]);
    }
    Ok(Report {
        suite: "line-complete",
        columns,
        rows,
        ok,
    })
}

/// Uniform random cotree on `n` leaves; the root is a join so the result is
/// connected.
pub fn random_connected_cograph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    fn build(rng: &mut ChaCha8Rng, n: usize, root_join: bool) -> Graph {
        if n == 1 {
            return complete(1);
        }
        let left = rng.random_range(1..n);
        let a = build(rng, left, false);
        let b = build(rng, n - left, false);
        if root_join || rng.random_bool(0.5) {
            join(&a, &b)
        } else {
            disjoint_union(&a, &b)
        }
    }
    build(rng, n, true)
}

/// Random connected cographs: closed-form numbers against four solver runs.
fn cographs(opts: &ReportOptions) -> Result<Report, SolveError> {
    let columns = vec![
        "sample",
        "n",
        "regime",
        "mu_formula",
        "mu_solved",
        "mu_o_formula",
        "mu_o_solved",
        "mu_d_formula",
        "mu_d_solved",
        "mu_t_formula",
        "mu_t_solved",
        "row_ok",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut rows = Vec::new();
    let mut ok = true;
    for sample in 0..opts.samples {
        let n = rng.random_range(2..=11);
        let g = random_connected_cograph(&mut rng, n);
        let nums = cograph_visibility_numbers(&g).expect("connected cograph by construction");
        let big = big_mu_decompose(&g).is_some() && !g.has_universal_vertex();
        let solved: Vec<usize> = [Variant::Mutual, Variant::Outer, Variant::Dual, Variant::Total]
            .iter()
            .map(|&v| solve(&g, v, opts))
            .collect::<Result<_, _>>()?;
        let row_ok = solved
            == vec![nums.mu, nums.mu_o, nums.mu_d, nums.mu_t]
            && if big {
                nums.mu == g.n() - 1 && nums.mu_t == g.n() - 2
            } else {
                nums.mu == nums.mu_t
            };
        ok &= row_ok;
        rows.push(vec![
            json!(sample),
            json!(g.n()),
            json!(if big { "big-mu" } else { "mu=mu_t" }),
            json!(nums.mu),
            json!(solved[0]),
            json!(nums.mu_o),
            json!(solved[1]),
            json!(nums.mu_d),
            json!(solved[2]),
            json!(nums.mu_t),
            json!(solved[3]),
            json!(row_ok),
        ]);
    }
    Ok(Report {
        suite: "cographs",
        columns,
        rows,
        ok,
    })
}

/// The C5 and G7 duplication families against their formulas.
fn family_g(opts: &ReportOptions) -> Result<Report, SolveError> {
    let columns = vec![
        "kind",
        "i",
        "j",
        "k",
        "mu_formula",
        "mu_solved",
        "mu_o_formula",
        "mu_o_solved",
        "mu_d_formula",
        "mu_d_solved",
        "mu_t_formula",
        "mu_t_solved",
        "row_ok",
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    let push = |kind: FamilyKind, rows: &mut Vec<Vec<Value>>, ok: &mut bool| -> Result<(), SolveError> {
        let (g, witnesses) = family_witnesses(kind).expect("family witnesses verify");
        let (name, i, j, k) = match kind {
            FamilyKind::C5 { i, j } => ("c5", i, j, Value::Null),
            FamilyKind::G7 { i, j, k } => ("g7", i, j, json!(k)),
        };
        let mut row = vec![json!(name), json!(i), json!(j), k];
        let mut row_ok = g.m() == 2 * g.n() - 5
            && g.diameter() == Some(2)
            && !g.has_universal_vertex();
        for variant in [Variant::Mutual, Variant::Outer, Variant::Dual, Variant::Total] {
            let formula = expected_family_size(kind, variant);
            let solved = solve(&g, variant, opts)?;
            row_ok &= formula == solved && witnesses[&variant].len() == formula;
            row.push(json!(formula));
            row.push(json!(solved));
        }
        row.push(json!(row_ok));
        rows.push(row);
        *ok &= row_ok;
        Ok(())
    };
    for i in 0..=3 {
        for j in 0..=(3 - i) {
            push(FamilyKind::C5 { i, j }, &mut rows, &mut ok)?;
        }
    }
    for i in 0..=3 {
        for j in 0..=(3 - i) {
            for k in 0..=(3 - i - j) {
                push(FamilyKind::G7 { i, j, k }, &mut rows, &mut ok)?;
            }
        }
    }
    Ok(Report {
        suite: "family-g",
        columns,
        rows,
        ok,
    })
}
