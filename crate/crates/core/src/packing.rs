//! Exact search for vertex-disjoint rainbow triangles.
//!
//! The solver branches on the lowest undecided vertex: either it is covered by
//! one of the rainbow triples whose minimum vertex it is, or it is left out.
//! Every packing is reachable by exactly one branch sequence, so exhausting the
//! tree certifies that no packing of the requested size exists.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::analysis::enumerate_rainbow_triangles;
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredGraph, RainbowTriple};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// What "k disjoint rainbow triangles" means.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PackingMode {
    /// Each triangle is rainbow on its own; colors may repeat across triangles.
    EachRainbow,
    /// All `3k` edges carry pairwise distinct colors (a rainbow `kC3`).
    GloballyRainbow,
}

impl PackingMode {
    pub fn name(self) -> &'static str {
        match self {
            PackingMode::EachRainbow => "each",
            PackingMode::GloballyRainbow => "global",
        }
    }
}

impl fmt::Display for PackingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PackingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "each" => Ok(PackingMode::EachRainbow),
            "global" => Ok(PackingMode::GloballyRainbow),
            _ => Err(Error::InvalidParams(format!("unknown packing mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePacking {
    pub mode: PackingMode,
    pub triples: Vec<RainbowTriple>,
}

impl TrianglePacking {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// All edge colors, triangle by triangle.
    pub fn colors(&self) -> Vec<Color> {
        self.triples.iter().flat_map(|t| t.colors).collect()
    }

    /// Re-checks the packing against `g` without trusting how it was found.
    pub fn validate(&self, g: &EdgeColoredGraph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for t in &self.triples {
            let [a, b, c] = t.vertices;
            for v in t.vertices {
                g.check_vertex(v)?;
                if seen[v] {
                    return Err(Error::InvalidPacking(format!("vertex {v} used twice")));
                }
                seen[v] = true;
            }
            match g.rainbow_triple(a, b, c) {
                Some(actual) if actual == *t => {}
                _ => return Err(Error::InvalidPacking(format!("{:?} is not a rainbow triangle", t.vertices))),
            }
        }
        if self.mode == PackingMode::GloballyRainbow {
            let mut colors = self.colors();
            colors.sort_unstable();
            if colors.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidPacking("colors repeat across triangles".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    None,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub status: SearchStatus,
    pub witness: Option<TrianglePacking>,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Maximum number of search nodes.
    pub budget: u64,
    /// Worker threads for the first branching level; `1` is fully deterministic.
    pub workers: usize,
    /// Prune when the still-coverable vertices cannot host the missing triangles.
    pub coverage_bound: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, workers: 1, coverage_bound: true }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions { budget, ..Self::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Found,
    Exhausted,
    Budget,
    Cancelled,
}

/// Candidate triples shared by every worker.
struct Candidates {
    n: usize,
    triples: Vec<RainbowTriple>,
    colors: Vec<[usize; 3]>,
    by_min: Vec<Vec<usize>>,
    palette_len: usize,
}

impl Candidates {
    fn new(g: &EdgeColoredGraph) -> Self {
        let triples = enumerate_rainbow_triangles(g);
        let palette = g.palette();
        let index = |c: Color| palette.binary_search(&c).expect("color in palette");
        let colors = triples.iter().map(|t| t.colors.map(index)).collect();
        let mut by_min = vec![Vec::new(); g.n()];
        for (i, t) in triples.iter().enumerate() {
            by_min[t.vertices[0]].push(i);
        }
        Candidates { n: g.n(), triples, colors, by_min, palette_len: palette.len() }
    }
}

struct Shared<'a> {
    nodes: &'a AtomicU64,
    /// Lowest first-level branch known to contain a packing.
    found_branch: &'a AtomicUsize,
}

struct Solver<'a> {
    cand: &'a Candidates,
    k: usize,
    mode: PackingMode,
    opts: SearchOptions,
    taken: Vec<bool>,
    color_used: Vec<bool>,
    chosen: Vec<usize>,
    nodes: u64,
    unflushed: u64,
    shared: Option<(Shared<'a>, usize)>,
}

const FLUSH_EVERY: u64 = 1024;

impl<'a> Solver<'a> {
    fn new(cand: &'a Candidates, k: usize, mode: PackingMode, opts: SearchOptions) -> Self {
        Solver {
            cand,
            k,
            mode,
            opts,
            taken: vec![false; cand.n],
            color_used: vec![false; cand.palette_len],
            chosen: Vec::with_capacity(k),
            nodes: 0,
            unflushed: 0,
            shared: None,
        }
    }

    fn admissible(&self, ti: usize) -> bool {
        let [_, b, c] = self.cand.triples[ti].vertices;
        if self.taken[b] || self.taken[c] {
            return false;
        }
        self.mode == PackingMode::EachRainbow || self.cand.colors[ti].iter().all(|&c| !self.color_used[c])
    }

    fn take(&mut self, ti: usize, on: bool) {
        for v in self.cand.triples[ti].vertices {
            self.taken[v] = on;
        }
        if self.mode == PackingMode::GloballyRainbow {
            for c in self.cand.colors[ti] {
                self.color_used[c] = on;
            }
        }
        if on {
            self.chosen.push(ti);
        } else {
            self.chosen.pop();
        }
    }

    /// Counts a node; returns an outcome when the search must stop.
    fn tick(&mut self) -> Option<Outcome> {
        self.nodes += 1;
        match &self.shared {
            None => (self.nodes > self.opts.budget).then_some(Outcome::Budget),
            Some((shared, branch)) => {
                self.unflushed += 1;
                if self.unflushed < FLUSH_EVERY {
                    return None;
                }
                let total = shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
                self.unflushed = 0;
                if shared.found_branch.load(Ordering::Relaxed) < *branch {
                    Some(Outcome::Cancelled)
                } else if total > self.opts.budget {
                    Some(Outcome::Budget)
                } else {
                    None
                }
            }
        }
    }

    fn flush(&mut self) {
        if let Some((shared, _)) = &self.shared {
            shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed);
            self.unflushed = 0;
        }
    }

    /// Upper bound on how many more triangles fit among undecided vertices `>= v`.
    fn coverage_room(&self, v: usize) -> usize {
        let mut coverable = vec![false; self.cand.n];
        for u in v..self.cand.n {
            if self.taken[u] {
                continue;
            }
            for &ti in &self.cand.by_min[u] {
                if self.admissible(ti) {
                    for w in self.cand.triples[ti].vertices {
                        coverable[w] = true;
                    }
                }
            }
        }
        coverable.iter().filter(|&&c| c).count() / 3
    }

    fn dfs(&mut self, mut v: usize, free: usize) -> Outcome {
        if self.chosen.len() == self.k {
            return Outcome::Found;
        }
        while v < self.cand.n && self.taken[v] {
            v += 1;
        }
        let missing = self.k - self.chosen.len();
        if v >= self.cand.n || free < 3 * missing {
            return Outcome::Exhausted;
        }
        if let Some(stop) = self.tick() {
            return stop;
        }
        if self.opts.coverage_bound && self.coverage_room(v) < missing {
            return Outcome::Exhausted;
        }
        for idx in 0..self.cand.by_min[v].len() {
            let ti = self.cand.by_min[v][idx];
            if !self.admissible(ti) {
                continue;
            }
            self.take(ti, true);
            let r = self.dfs(v + 1, free - 3);
            if r == Outcome::Found {
                return r;
            }
            self.take(ti, false);
            if r != Outcome::Exhausted {
                return r;
            }
        }
        self.dfs(v + 1, free - 1)
    }

    fn witness(&self) -> TrianglePacking {
        let mut triples: Vec<RainbowTriple> = self.chosen.iter().map(|&i| self.cand.triples[i]).collect();
        triples.sort();
        TrianglePacking { mode: self.mode, triples }
    }
}

/// Decides whether `g` has `k` vertex-disjoint rainbow triangles in `mode`.
pub fn find_packing(
    g: &EdgeColoredGraph,
    k: usize,
    mode: PackingMode,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let cand = Candidates::new(g);
    Ok(search_with(&cand, k, mode, opts))
}

fn search_with(cand: &Candidates, k: usize, mode: PackingMode, opts: &SearchOptions) -> SearchResult {
    if opts.workers <= 1 || cand.n == 0 {
        let mut s = Solver::new(cand, k, mode, *opts);
        let out = s.dfs(0, cand.n);
        return finish(&s, out);
    }
    parallel_search(cand, k, mode, opts)
}

fn finish(s: &Solver<'_>, out: Outcome) -> SearchResult {
    match out {
        Outcome::Found => SearchResult { status: SearchStatus::Found, witness: Some(s.witness()), nodes: s.nodes },
        Outcome::Exhausted => SearchResult { status: SearchStatus::None, witness: None, nodes: s.nodes },
        Outcome::Budget | Outcome::Cancelled => {
            SearchResult { status: SearchStatus::BudgetExceeded, witness: None, nodes: s.nodes }
        }
    }
}

/// Splits the first branching level (the choices at vertex 0) across workers.
/// The reported witness is the one from the lowest-indexed successful branch,
/// so it matches the single-worker witness.
fn parallel_search(cand: &Candidates, k: usize, mode: PackingMode, opts: &SearchOptions) -> SearchResult {
    // Branches: each triple with minimum vertex 0, then "leave 0 out".
    let first = &cand.by_min[0];
    let branches = first.len() + 1;
    let nodes = AtomicU64::new(1);
    let found_branch = AtomicUsize::new(usize::MAX);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, Outcome, Option<TrianglePacking>)>> = Mutex::new(Vec::new());
    if 3 * k > cand.n {
        return SearchResult { status: SearchStatus::None, witness: None, nodes: 0 };
    }

    std::thread::scope(|scope| {
        for _ in 0..opts.workers.min(branches) {
            scope.spawn(|| loop {
                let b = next.fetch_add(1, Ordering::Relaxed);
                if b >= branches {
                    break;
                }
                if found_branch.load(Ordering::Relaxed) < b {
                    results.lock().unwrap().push((b, Outcome::Cancelled, None));
                    continue;
                }
                let mut s = Solver::new(cand, k, mode, *opts);
                s.shared = Some((Shared { nodes: &nodes, found_branch: &found_branch }, b));
                let out = if b < first.len() {
                    let ti = first[b];
                    s.take(ti, true);
                    s.dfs(1, cand.n - 3)
                } else {
                    s.dfs(1, cand.n - 1)
                };
                s.flush();
                let witness = (out == Outcome::Found).then(|| s.witness());
                if out == Outcome::Found {
                    found_branch.fetch_min(b, Ordering::Relaxed);
                }
                results.lock().unwrap().push((b, out, witness));
            });
        }
    });

    let nodes = nodes.load(Ordering::Relaxed);
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|r| r.0);
    if let Some((_, _, w)) = results.iter_mut().find(|r| r.1 == Outcome::Found) {
        return SearchResult { status: SearchStatus::Found, witness: w.take(), nodes };
    }
    if results.iter().any(|r| r.1 == Outcome::Budget || r.1 == Outcome::Cancelled) {
        return SearchResult { status: SearchStatus::BudgetExceeded, witness: None, nodes };
    }
    SearchResult { status: SearchStatus::None, witness: None, nodes }
}

/// The largest `k` with a packing in `mode`, with a witness.
///
/// Levels are tried in increasing order; each level gets the full budget.
/// On budget exhaustion the error carries the best level proved so far.
pub fn max_packing(
    g: &EdgeColoredGraph,
    mode: PackingMode,
    opts: &SearchOptions,
) -> Result<(usize, TrianglePacking)> {
    let cand = Candidates::new(g);
    let mut best = TrianglePacking { mode, triples: Vec::new() };
    for k in 1..=g.n() / 3 {
        let r = search_with(&cand, k, mode, opts);
        match r.status {
            SearchStatus::Found => best = r.witness.expect("found has witness"),
            SearchStatus::None => break,
            SearchStatus::BudgetExceeded => {
                return Err(Error::BudgetExceeded { budget: opts.budget, best_proved: best.len() })
            }
        }
    }
    Ok((best.len(), best))
}

/// Outcome of checking the color-degree Dirac condition against search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracReport {
    pub n: usize,
    pub k: usize,
    pub min_color_degree: usize,
    /// `δ^c(G) >= (n + k) / 2`.
    pub color_degree_ok: bool,
    /// `n >= 42.5k + 48`.
    pub order_ok: bool,
    pub search: SearchResult,
    /// Both hypotheses hold yet the exhaustive search found nothing.
    pub theorem_violation: bool,
}

impl DiracReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.color_degree_ok && self.order_ok
    }
}

pub fn dirac_rainbow_check(g: &EdgeColoredGraph, k: usize, opts: &SearchOptions) -> Result<DiracReport> {
    let n = g.n();
    let dc = g.min_color_degree();
    let color_degree_ok = 2 * dc >= n + k;
    let order_ok = 2 * n >= 85 * k + 96;
    let search = find_packing(g, k, PackingMode::EachRainbow, opts)?;
    let theorem_violation = color_degree_ok && order_ok && search.status == SearchStatus::None;
    Ok(DiracReport { n, k, min_color_degree: dc, color_degree_ok, order_ok, search, theorem_violation })
}
