//! Exact anti-Ramsey numbers `ar(n, kC3)` for tiny `n`.
//!
//! Colorings of `K_n` are enumerated up to color renaming as restricted-growth
//! strings over the lexicographic edge order. A branch dies as soon as its
//! colored edges contain a rainbow `kC3`, or when it cannot beat the best
//! color count found so far.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::graph::{pairs, EdgeColoredGraph};
use crate::packing::{find_packing, PackingMode, SearchOptions, SearchResult, SearchStatus, TrianglePacking};

pub const MAX_ORACLE_N: usize = 8;

/// A partial coloring of `K_n` in restricted-growth form: `rgs[i]` colors the
/// `i`-th pair in lexicographic order and never exceeds `1 + max(rgs[..i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringState {
    pub n: usize,
    pub rgs: Vec<u32>,
}

impl ColoringState {
    pub fn edges(n: usize) -> Vec<(usize, usize)> {
        pairs(n).collect()
    }

    pub fn is_valid(&self) -> bool {
        let mut max = 0;
        for &c in &self.rgs {
            if c == 0 || c > max + 1 {
                return false;
            }
            max = max.max(c);
        }
        self.rgs.len() <= self.n * (self.n - 1) / 2
    }

    pub fn is_complete(&self) -> bool {
        self.rgs.len() == self.n * (self.n - 1) / 2
    }

    pub fn color_count(&self) -> usize {
        self.rgs.iter().copied().max().unwrap_or(0) as usize
    }

    /// The colored prefix as a graph.
    pub fn to_graph(&self) -> EdgeColoredGraph {
        let edges = pairs(self.n).zip(&self.rgs).map(|((u, v), &c)| (u, v, c));
        EdgeColoredGraph::build(self.n, edges).expect("restricted-growth strings describe valid colorings")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub budget: u64,
    pub workers: usize,
    /// Cut branches whose colored edges already contain a rainbow `kC3`.
    /// When off, every complete coloring is checked by packing search.
    pub rainbow_prune: bool,
    /// Cut branches that cannot exceed the incumbent color count.
    pub bound_prune: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { budget: crate::packing::DEFAULT_BUDGET, workers: 1, rainbow_prune: true, bound_prune: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub n: usize,
    pub k: usize,
    /// `ar(n, kC3)` when `completed`, otherwise the best lower bound found.
    pub value: usize,
    /// A coloring with `value` colors and no rainbow `kC3`.
    pub witness: Option<EdgeColoredGraph>,
    pub completed: bool,
    pub nodes: u64,
    /// Complete colorings reached.
    pub leaves: u64,
}

#[derive(Clone, Copy)]
struct Tri {
    mask: u32,
    colors: [u32; 3],
}

struct Shared<'a> {
    best: &'a AtomicUsize,
    nodes: &'a AtomicU64,
}

struct Dfs<'a> {
    n: usize,
    k: usize,
    opts: OracleOptions,
    edges: &'a [(usize, usize)],
    index: Vec<usize>,
    rgs: Vec<u32>,
    max_color: u32,
    rainbow: Vec<Tri>,
    best: usize,
    best_rgs: Option<Vec<u32>>,
    nodes: u64,
    unflushed: u64,
    leaves: u64,
    stopped: bool,
    shared: Option<Shared<'a>>,
}

const FLUSH_EVERY: u64 = 1024;

impl<'a> Dfs<'a> {
    fn new(n: usize, k: usize, opts: OracleOptions, edges: &'a [(usize, usize)]) -> Self {
        let mut index = vec![usize::MAX; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u * n + v] = i;
        }
        Dfs {
            n,
            k,
            opts,
            edges,
            index,
            rgs: Vec::with_capacity(edges.len()),
            max_color: 0,
            rainbow: Vec::new(),
            best: 0,
            best_rgs: None,
            nodes: 0,
            unflushed: 0,
            leaves: 0,
            stopped: false,
            shared: None,
        }
    }

    fn color(&self, u: usize, v: usize) -> u32 {
        self.rgs[self.index[u * self.n + v]]
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        let total = match &self.shared {
            None => self.nodes,
            Some(s) => {
                self.unflushed += 1;
                if self.unflushed < FLUSH_EVERY {
                    return true;
                }
                let t = s.nodes.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
                self.unflushed = 0;
                t
            }
        };
        if total > self.opts.budget {
            self.stopped = true;
        }
        !self.stopped
    }

    fn flush(&mut self) {
        if let Some(s) = &self.shared {
            s.nodes.fetch_add(self.unflushed, Ordering::Relaxed);
            self.unflushed = 0;
        }
    }

    /// Colors the next edge, returning how many rainbow triangles it completed.
    fn push(&mut self, c: u32) -> usize {
        let (u, v) = self.edges[self.rgs.len()];
        self.rgs.push(c);
        self.max_color = self.max_color.max(c);
        // Lexicographic order: {a, u, v} with a < u is complete once uv is colored.
        let before = self.rainbow.len();
        for a in 0..u {
            let (x, y) = (self.color(a, u), self.color(a, v));
            if x != y && x != c && y != c {
                self.rainbow.push(Tri { mask: 1 << a | 1 << u | 1 << v, colors: [x, y, c] });
            }
        }
        self.rainbow.len() - before
    }

    fn pop(&mut self, added: usize, prev_max: u32) {
        self.rgs.pop();
        self.max_color = prev_max;
        self.rainbow.truncate(self.rainbow.len() - added);
    }

    /// Whether some rainbow `kC3` uses one of the last `fresh` triangles.
    fn packing_through_fresh(&self, fresh: usize) -> bool {
        let start = self.rainbow.len() - fresh;
        let mut colors = Vec::with_capacity(3 * self.k);
        (start..self.rainbow.len()).any(|i| {
            let t = self.rainbow[i];
            colors.clear();
            colors.extend_from_slice(&t.colors);
            self.extend(t.mask, &mut colors, 0, i, self.k - 1)
        })
    }

    fn extend(&self, mask: u32, colors: &mut Vec<u32>, from: usize, skip: usize, missing: usize) -> bool {
        if missing == 0 {
            return true;
        }
        for j in from..self.rainbow.len() {
            let t = self.rainbow[j];
            if j == skip || t.mask & mask != 0 || t.colors.iter().any(|c| colors.contains(c)) {
                continue;
            }
            colors.extend_from_slice(&t.colors);
            let hit = self.extend(mask | t.mask, colors, j + 1, skip, missing - 1);
            colors.truncate(colors.len() - 3);
            if hit {
                return true;
            }
        }
        false
    }

    fn incumbent_beats(&self, optimistic: usize) -> bool {
        if optimistic <= self.best {
            return true;
        }
        // Strict against other workers so that ties stay visible to every prefix.
        self.shared.as_ref().is_some_and(|s| optimistic < s.best.load(Ordering::Relaxed))
    }

    fn leaf(&mut self) {
        self.leaves += 1;
        if !self.opts.rainbow_prune {
            let g = ColoringState { n: self.n, rgs: self.rgs.clone() }.to_graph();
            let r = find_packing(&g, self.k, PackingMode::GloballyRainbow, &SearchOptions::default())
                .expect("k >= 1");
            if r.status != SearchStatus::None {
                return;
            }
        }
        let value = self.max_color as usize;
        if value > self.best {
            self.best = value;
            self.best_rgs = Some(self.rgs.clone());
            if let Some(s) = &self.shared {
                s.best.fetch_max(value, Ordering::Relaxed);
            }
        }
    }

    fn run(&mut self) {
        if !self.tick() {
            return;
        }
        let i = self.rgs.len();
        if i == self.edges.len() {
            self.leaf();
            return;
        }
        if self.opts.bound_prune && self.incumbent_beats(self.max_color as usize + self.edges.len() - i) {
            return;
        }
        let prev_max = self.max_color;
        let fresh = prev_max + 1;
        for c in std::iter::once(fresh).chain(1..=prev_max) {
            let added = self.push(c);
            let dead = self.opts.rainbow_prune && added > 0 && self.packing_through_fresh(added);
            if !dead {
                self.run();
            }
            self.pop(added, prev_max);
            if self.stopped {
                return;
            }
        }
    }

    /// Replays a prefix; false if the prefix already contains a rainbow `kC3`.
    fn replay(&mut self, prefix: &[u32]) -> bool {
        for &c in prefix {
            let added = self.push(c);
            if self.opts.rainbow_prune && added > 0 && self.packing_through_fresh(added) {
                return false;
            }
        }
        true
    }
}

/// All restricted-growth prefixes of the given length, in search order.
fn prefixes(len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &out {
            let max = p.iter().copied().max().unwrap_or(0);
            for c in std::iter::once(max + 1).chain(1..=max) {
                let mut q = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Computes `ar(n, kC3)`: the most colors in a coloring of `K_n` without a
/// rainbow `kC3`. Stops at the node budget with `completed = false` and the best
/// lower bound found.
pub fn brute_force_ar(n: usize, k: usize, opts: &OracleOptions) -> Result<OracleResult> {
    if k == 0 || 3 * k > n {
        return Err(Error::InvalidParams(format!("need 1 <= k and 3k <= n, got n = {n}, k = {k}")));
    }
    if n > MAX_ORACLE_N {
        return Err(Error::InvalidParams(format!("n = {n} exceeds the oracle limit {MAX_ORACLE_N}")));
    }
    let edges = ColoringState::edges(n);
    let (best, best_rgs, completed, nodes, leaves) = if opts.workers <= 1 {
        let mut d = Dfs::new(n, k, *opts, &edges);
        d.run();
        (d.best, d.best_rgs, !d.stopped, d.nodes, d.leaves)
    } else {
        parallel(n, k, opts, &edges)
    };
    let witness = best_rgs.map(|rgs| ColoringState { n, rgs }.to_graph());
    Ok(OracleResult { n, k, value: best, witness, completed, nodes, leaves })
}

type Found = (usize, Option<Vec<u32>>, bool, u64, u64);

fn parallel(n: usize, k: usize, opts: &OracleOptions, edges: &[(usize, usize)]) -> Found {
    let mut depth = 0;
    while depth < edges.len() && prefixes(depth).len() < 8 * opts.workers {
        depth += 1;
    }
    let work = prefixes(depth);
    let best = AtomicUsize::new(0);
    let nodes = AtomicU64::new(0);
    let next = AtomicUsize::new(0);
    // (prefix, best, best rgs, stopped, leaves)
    type Outcome = (usize, usize, Option<Vec<u32>>, bool, u64);
    let results: Mutex<Vec<Outcome>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..opts.workers.min(work.len()) {
            scope.spawn(|| loop {
                let w = next.fetch_add(1, Ordering::Relaxed);
                if w >= work.len() {
                    break;
                }
                let mut d = Dfs::new(n, k, *opts, edges);
                d.shared = Some(Shared { best: &best, nodes: &nodes });
                if d.replay(&work[w]) {
                    d.run();
                }
                d.flush();
                results.lock().unwrap().push((w, d.best, d.best_rgs, d.stopped, d.leaves));
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|r| r.0);
    let value = results.iter().map(|r| r.1).max().unwrap_or(0);
    let completed = results.iter().all(|r| !r.3);
    let leaves = results.iter().map(|r| r.4).sum();
    let witness = results.into_iter().find(|r| r.1 == value && r.2.is_some()).and_then(|r| r.2);
    (value, witness, completed, nodes.load(Ordering::Relaxed), leaves)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreenessVerdict {
    /// No rainbow `kC3`, and a rainbow `(k-1)C3` exists.
    Certified,
    /// A rainbow `kC3` exists.
    NotExtremal,
    /// No rainbow `kC3`, but no rainbow `(k-1)C3` either.
    NoSmallerPacking,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub k: usize,
    pub verdict: FreenessVerdict,
    /// The exhaustive search at level `k`.
    pub at_k: SearchResult,
    /// A rainbow `(k-1)C3` (empty for `k = 1`).
    pub below: Option<TrianglePacking>,
}

/// Certifies that `g` has no rainbow `kC3` but does have a rainbow `(k-1)C3`.
pub fn verify_freeness(g: &EdgeColoredGraph, k: usize, opts: &SearchOptions) -> Result<FreenessCertificate> {
    let at_k = find_packing(g, k, PackingMode::GloballyRainbow, opts)?;
    let over = || Error::BudgetExceeded { budget: opts.budget, best_proved: 0 };
    match at_k.status {
        SearchStatus::BudgetExceeded => return Err(over()),
        SearchStatus::Found => {
            return Ok(FreenessCertificate { k, verdict: FreenessVerdict::NotExtremal, at_k, below: None })
        }
        SearchStatus::None => {}
    }
    let below = if k == 1 {
        Some(TrianglePacking { mode: PackingMode::GloballyRainbow, triples: Vec::new() })
    } else {
        let r = find_packing(g, k - 1, PackingMode::GloballyRainbow, opts)?;
        match r.status {
            SearchStatus::BudgetExceeded => return Err(over()),
            _ => r.witness,
        }
    };
    let verdict = if below.is_some() { FreenessVerdict::Certified } else { FreenessVerdict::NoSmallerPacking };
    Ok(FreenessCertificate { k, verdict, at_k, below })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_construction, Family};

    fn unpruned() -> OracleOptions {
        OracleOptions { rainbow_prune: false, bound_prune: false, ..OracleOptions::default() }
    }

    #[test]
    fn bell_number_leaf_count() {
        // Without pruning every set partition of the six edges of K4 is a leaf.
        let r = brute_force_ar(4, 1, &unpruned()).unwrap();
        assert_eq!(r.leaves, 203);
        assert_eq!(r.value, 3);
    }

    #[test]
    fn prefix_counts_are_bell_numbers() {
        let counts: Vec<usize> = (0..7).map(|l| prefixes(l).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn small_values() {
        let opts = OracleOptions::default();
        assert_eq!(brute_force_ar(4, 1, &opts).unwrap().value, 3);
        let r = brute_force_ar(5, 1, &opts).unwrap();
        assert!(r.completed);
        assert_eq!(r.value, 4);
        let w = r.witness.unwrap();
        assert_eq!(w.color_number(), 4);
        assert_eq!(verify_freeness(&w, 1, &SearchOptions::default()).unwrap().verdict, FreenessVerdict::Certified);
    }

    #[test]
    fn pruning_is_sound() {
        for (n, k) in [(4, 1), (5, 1)] {
            let fast = brute_force_ar(n, k, &OracleOptions::default()).unwrap();
            let slow = brute_force_ar(n, k, &OracleOptions { rainbow_prune: false, ..OracleOptions::default() })
                .unwrap();
            assert_eq!(fast.value, slow.value);
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = brute_force_ar(5, 1, &OracleOptions::default()).unwrap();
        let par = brute_force_ar(5, 1, &OracleOptions { workers: 4, ..OracleOptions::default() }).unwrap();
        assert_eq!(seq.value, par.value);
        assert_eq!(seq.witness, par.witness);
    }

    #[test]
    fn budget_reports_incomplete() {
        let r = brute_force_ar(6, 2, &OracleOptions { budget: 50, ..OracleOptions::default() }).unwrap();
        assert!(!r.completed);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(brute_force_ar(5, 2, &OracleOptions::default()).is_err());
        assert!(brute_force_ar(9, 1, &OracleOptions::default()).is_err());
    }

    #[test]
    fn certificates() {
        let opts = SearchOptions::default();
        let g = build_construction(Family::G3, 10, 3).unwrap();
        assert_eq!(verify_freeness(&g, 3, &opts).unwrap().verdict, FreenessVerdict::Certified);
        let g = build_construction(Family::G1, 8, 2).unwrap();
        assert_eq!(verify_freeness(&g, 2, &opts).unwrap().verdict, FreenessVerdict::Certified);
        let g = EdgeColoredGraph::rainbow_complete(6).unwrap();
        assert_eq!(verify_freeness(&g, 2, &opts).unwrap().verdict, FreenessVerdict::NotExtremal);
    }
}
