//! Exact computation of the four visibility numbers with a witness.
//!
//! Two strategies:
//! - `descending`: enumerate k-subsets in colexicographic order for
//!   k = n, n-1, ... until a valid set appears; sound for every variant.
//! - `branch_and_bound`: grow X vertex by vertex and cut a branch as soon as
//!   a required pair goes non-visible. Failure is monotone under supersets
//!   for Mutual/Outer/Total only, so Dual always routes to descending.
//!
//! Both return the colexicographically least maximum set, so results are
//! identical across strategies and thread counts.

use crate::graph::{DistanceMatrix, Graph};
use crate::visibility::{verify_unchecked, Variant};
use crate::vset::VertexSet;
use rayon::prelude::*;
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::OnceLock;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Exact-mode order ceiling; the largest instances in scope are 36 vertices.
pub const DEFAULT_MAX_N: usize = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Descending,
    BranchAndBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    None,
    /// Restrict the first included vertex to one representative per
    /// automorphism-orbit approximation. Best-effort speedup, off by default.
    VertexOrbits,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub variant: Variant,
    pub strategy: Strategy,
    pub threads: Option<NonZeroUsize>,
    pub time_budget: Option<Duration>,
    pub symmetry: Symmetry,
    pub max_n: usize,
}

impl SolveOptions {
    pub fn new(variant: Variant) -> Self {
        SolveOptions {
            variant,
            strategy: Strategy::Auto,
            threads: None,
            time_budget: None,
            symmetry: Symmetry::None,
            max_n: DEFAULT_MAX_N,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub variant: Variant,
    /// The visibility number when `exact`, otherwise a certified lower bound.
    pub value: usize,
    pub witness: VertexSet,
    pub exact: bool,
    pub nodes: u64,
}

impl SolveResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "variant": self.variant.name(),
            "value": self.value,
            "witness": self.witness.to_vec(),
            "exact": self.exact,
            "nodes": self.nodes,
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("order {n} above exact-mode ceiling {max}")]
    AboveCeiling { n: usize, max: usize },
}

fn binom(n: usize, k: usize) -> u64 {
    static TABLE: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut t = vec![vec![0u64; 65]; 65];
        for n in 0..65 {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            }
        }
        t
    });
    if k > n {
        0
    } else {
        t[n][k]
    }
}

/// Next k-subset mask in colexicographic order (Gosper's hack).
#[inline]
fn next_colex(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

/// Colex rank of a k-subset mask: sum of C(p_i, i+1) over ascending bits.
fn colex_rank(mask: u64) -> u64 {
    let mut rank = 0;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        m &= m - 1;
        i += 1;
        rank += binom(p, i);
    }
    rank
}

/// The k-subset mask of [0, n) with the given colex rank.
fn colex_unrank(n: usize, k: usize, rank: u64) -> u64 {
    let mut mask = 0u64;
    let mut r = rank;
    let mut i = k;
    let mut p = n;
    while i > 0 {
        p -= 1;
        while binom(p, i) > r {
            p -= 1;
        }
        mask |= 1 << p;
        r -= binom(p, i);
        i -= 1;
    }
    mask
}

struct Ctx<'a> {
    g: &'a Graph,
    d: &'a DistanceMatrix,
    variant: Variant,
    deadline: Option<Instant>,
    aborted: AtomicBool,
}

impl Ctx<'_> {
    #[inline]
    fn check_deadline(&self) -> bool {
        if let Some(dl) = self.deadline {
            if Instant::now() > dl {
                self.aborted.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }

    #[inline]
    fn valid_mask(&self, scratch: &mut VertexSet, mask: u64) -> bool {
        scratch.set_word(mask);
        verify_unchecked(self.g, self.d, scratch, self.variant).valid
    }
}

enum LevelOutcome {
    /// Colex rank of the first valid k-subset.
    Found(u64),
    NotFound,
    Aborted,
}

/// Scan one size level for the colex-first valid subset.
fn scan_level(ctx: &Ctx<'_>, n: usize, k: usize, parallel: bool) -> LevelOutcome {
    let total = binom(n, k);
    const CHUNK: u64 = 1 << 14;
    if !parallel || total <= CHUNK {
        return scan_range(ctx, n, k, 0, total);
    }
    let chunks = total.div_ceil(CHUNK);
    let hit = (0..chunks)
        .into_par_iter()
        .find_map_first(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(total);
            match scan_range(ctx, n, k, lo, hi) {
                LevelOutcome::Found(r) => Some(Ok(r)),
                LevelOutcome::Aborted => Some(Err(())),
                LevelOutcome::NotFound => None,
            }
        });
    match hit {
        Some(Ok(r)) => LevelOutcome::Found(r),
        Some(Err(())) => LevelOutcome::Aborted,
        None => {
            if ctx.aborted.load(Ordering::Relaxed) {
                LevelOutcome::Aborted
            } else {
                LevelOutcome::NotFound
            }
        }
    }
}

fn scan_range(ctx: &Ctx<'_>, n: usize, k: usize, lo: u64, hi: u64) -> LevelOutcome {
    let mut scratch = VertexSet::empty(n);
    if k == 0 {
        // The empty set is a valid set for every variant.
        return if lo == 0 { LevelOutcome::Found(0) } else { LevelOutcome::NotFound };
    }
    let mut mask = colex_unrank(n, k, lo);
    for rank in lo..hi {
        if rank.is_multiple_of(4096) && (ctx.aborted.load(Ordering::Relaxed) || ctx.check_deadline()) {
            return LevelOutcome::Aborted;
        }
        if ctx.valid_mask(&mut scratch, mask) {
            return LevelOutcome::Found(rank);
        }
        if rank + 1 < hi {
            mask = next_colex(mask);
        }
    }
    LevelOutcome::NotFound
}

struct Bnb<'a> {
    ctx: &'a Ctx<'a>,
    n: usize,
    first_candidates: Option<u64>,
    best_size: usize,
    best_mask: u64,
    have_witness: bool,
    nodes: u64,
    scratch: VertexSet,
    aborted: bool,
}

impl Bnb<'_> {
    fn record(&mut self, mask: u64, size: usize) {
        if size > self.best_size
            || (size == self.best_size && (!self.have_witness || mask < self.best_mask))
        {
            self.best_size = size;
            self.best_mask = mask;
            self.have_witness = true;
        }
    }

    fn dfs(&mut self, idx: usize, mask: u64, size: usize) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(8192) && self.ctx.check_deadline() {
            self.aborted = true;
            return;
        }
        if idx == self.n {
            self.record(mask, size);
            return;
        }
        // Weak cardinality bound: keep branches that can still tie, so every
        // maximum set is visited and the colex-least one is reported.
        if size + (self.n - idx) < self.best_size {
            return;
        }
        let include_allowed = match self.first_candidates {
            Some(reps) if mask == 0 => reps >> idx & 1 != 0,
            _ => true,
        };
        if include_allowed {
            let with = mask | 1 << idx;
            if self.ctx.valid_mask(&mut self.scratch, with) {
                self.dfs(idx + 1, with, size + 1);
            }
        }
        self.dfs(idx + 1, mask, size);
    }
}

/// Equivalence classes of (degree, sorted neighbor-signature multiset),
/// refined twice; an approximation of vertex orbits from above.
fn orbit_proxy_minima(g: &Graph) -> u64 {
    let n = g.n();
    let mut sig: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    for _ in 0..2 {
        let keys: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u64> = g.neighbors(v).iter().map(|u| sig[u]).collect();
                ns.sort_unstable();
                (sig[v], ns)
            })
            .collect();
        let mut sorted: Vec<&(u64, Vec<u64>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let ids: std::collections::HashMap<&(u64, Vec<u64>), u64> = sorted
            .iter()
            .enumerate()
            .map(|(i, k)| (*k, i as u64))
            .collect();
        sig = (0..n).map(|v| ids[&keys[v]]).collect();
    }
    let mut seen = std::collections::HashSet::new();
    let mut reps = 0u64;
    for (v, s) in sig.iter().enumerate() {
        if seen.insert(*s) {
            reps |= 1 << v;
        }
    }
    reps
}

/// Maximum valid set for the variant, exactly, with a deterministic witness.
pub fn max_visibility(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let n = g.n();
    if n > opts.max_n || n > 64 {
        return Err(SolveError::AboveCeiling {
            n,
            max: opts.max_n.min(64),
        });
    }
    let use_bnb = match opts.strategy {
        Strategy::Descending => false,
        // Superset pruning is unsound for Dual: its requirement family
        // shrinks when complement vertices enter X.
        Strategy::BranchAndBound | Strategy::Auto => opts.variant != Variant::Dual,
    };
    let deadline = opts.time_budget.map(|b| Instant::now() + b);
    let d = g.distance_matrix();
    let ctx = Ctx {
        g,
        d: &d,
        variant: opts.variant,
        deadline,
        aborted: AtomicBool::new(false),
    };

    let run = |ctx: &Ctx<'_>| -> SolveResult {
        if use_bnb {
            solve_bnb(ctx, g, n, opts)
        } else {
            solve_descending(ctx, g, n, opts)
        }
    };

    let result = match opts.threads {
        Some(t) if t.get() > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.get())
                .build()
                .expect("thread pool");
            pool.install(|| run(&ctx))
        }
        Some(_) => run(&ctx), // threads = 1: stays on the caller thread
        None => run(&ctx),
    };

    // A witness must always verify before release.
    assert!(
        verify_unchecked(g, &d, &result.witness, opts.variant).valid,
        "witness failed re-verification"
    );
    Ok(result)
}

fn solve_descending(ctx: &Ctx<'_>, g: &Graph, n: usize, opts: &SolveOptions) -> SolveResult {
    let parallel = opts.threads.is_none_or(|t| t.get() > 1);
    let mut nodes = 0u64;
    for k in (0..=n).rev() {
        match scan_level(ctx, n, k, parallel) {
            LevelOutcome::Found(rank) => {
                let mask = colex_unrank(n, k, rank);
                debug_assert_eq!(colex_rank(mask), rank);
                return SolveResult {
                    variant: opts.variant,
                    value: k,
                    witness: VertexSet::from_word(n, mask),
                    exact: true,
                    nodes: nodes + rank + 1,
                };
            }
            LevelOutcome::NotFound => nodes += binom(n, k),
            LevelOutcome::Aborted => {
                let witness = greedy_unchecked(g, ctx.d, opts.variant);
                return SolveResult {
                    variant: opts.variant,
                    value: witness.len(),
                    witness,
                    exact: false,
                    nodes,
                };
            }
        }
    }
    unreachable!("the empty set is always valid")
}

fn solve_bnb(ctx: &Ctx<'_>, g: &Graph, n: usize, opts: &SolveOptions) -> SolveResult {
    let greedy = greedy_unchecked(g, ctx.d, opts.variant);
    let greedy_mask = greedy.words().first().copied().unwrap_or(0);
    let mut bnb = Bnb {
        ctx,
        n,
        first_candidates: match opts.symmetry {
            Symmetry::None => None,
            Symmetry::VertexOrbits => Some(orbit_proxy_minima(g)),
        },
        best_size: greedy.len(),
        best_mask: greedy_mask,
        have_witness: true,
        nodes: 0,
        scratch: VertexSet::empty(n),
        aborted: false,
    };
    bnb.dfs(0, 0, 0);
    SolveResult {
        variant: opts.variant,
        value: bnb.best_size,
        witness: VertexSet::from_word(n, bnb.best_mask),
        exact: !bnb.aborted,
        nodes: bnb.nodes,
    }
}

/// Greedy insertion in degree-descending order (ties by index). The result
/// verifies by construction; it seeds reporting and budget-exhausted results
/// and never shortcuts exactness.
pub fn greedy_lower_bound(g: &Graph, variant: Variant) -> Result<VertexSet, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let d = g.distance_matrix();
    Ok(greedy_unchecked(g, &d, variant))
}

fn greedy_unchecked(g: &Graph, d: &DistanceMatrix, variant: Variant) -> VertexSet {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut x = VertexSet::empty(n);
    for v in order {
        x.insert(v);
        if !verify_unchecked(g, d, &x, variant).valid {
            x.remove(v);
        }
    }
    x
}

/// Up to `cap` maximum witnesses in colexicographic order.
pub fn all_max_witnesses(
    g: &Graph,
    variant: Variant,
    cap: usize,
) -> Result<Vec<VertexSet>, SolveError> {
    let value = max_visibility(g, &SolveOptions::new(variant))?.value;
    let n = g.n();
    let d = g.distance_matrix();
    let mut out = Vec::new();
    let mut scratch = VertexSet::empty(n);
    let total = binom(n, value);
    let mut mask = colex_unrank(n, value, 0);
    for rank in 0..total {
        scratch.set_word(mask);
        if verify_unchecked(g, &d, &scratch, variant).valid {
            out.push(scratch.clone());
            if out.len() >= cap {
                break;
            }
        }
        if rank + 1 < total {
            mask = next_colex(mask);
        }
    }
    Ok(out)
}
