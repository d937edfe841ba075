use std::collections::BTreeMap;

use super::classify::{classify_v0_edges, EdgeClassification};
use super::context::PackingContext;
use super::friendship::max_friendship;
use super::reduction::Verdict;
use super::rf21::max_rf21;
use super::triangles::{enumerate_rainbow_triangles, RainbowCounts};
use crate::constructions::Rational;
use crate::error::{Error, Result};
use crate::graph::EdgeColoredGraph;
use crate::packing::{find_packing, PackingMode, SearchOptions, SearchStatus, TrianglePacking};

/// The inequalities checked by [`claim_audit`]. Throughout, `N = n - 3k + 3 = |V1|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimKind {
    /// No rainbow triangle lies entirely in `V1`.
    OutsideTriangles,
    /// `s_max(v) <= 3k - 3`.
    FriendshipBound,
    /// `rt(v) <= (3k-3)(n-1)`.
    VertexRtBound,
    /// `rt1(v) <= (3k-3)(N-1)`.
    VertexRt1Bound,
    /// `u1, u2` in one triangle, `rt1(u1) > N-1` implies `rt1(u2) <= 4`.
    HeavyPartner,
    /// `u1, u2` in one triangle, `1 <= rt1(u1) <= N-1` implies `rt1(u2) <= 2(N-1)`.
    LightPartner,
    /// Hourglass triangles: `Σ rt1 + Σ_{E1} rt2 <= t(3kn-12k+9)`, also per center.
    HourglassTriangles,
    /// Plain triangles: `Σ rt1 <= max{2t(N-1)+8, 3(N-1)}` each, and the summed form.
    PlainTriangles,
    /// `Σ_{E3} rt2 <= 6·C(k-1-t, 2)·N`.
    PlainPairEdges,
    /// `Σ_{E2} rt2 <= t(k-1-t)(3N+9)`.
    MixedPairEdges,
    /// `Σ_{E5} rt2 <= 16·C(t, 2)`.
    HourglassPairEdges,
    /// `Σ_{E4} rt2 <= (3k-3)N`.
    TriangleEdges,
    /// `rt(G) <= |RT1| + |RT2| + C(3k-3, 3)`.
    CountSplit,
    /// `rt(G)` is at most the sum of all class bounds plus `C(3k-3, 3)`.
    CombinedBound,
}

impl ClaimKind {
    pub fn name(self) -> &'static str {
        match self {
            ClaimKind::OutsideTriangles => "outside-triangles",
            ClaimKind::FriendshipBound => "friendship-bound",
            ClaimKind::VertexRtBound => "vertex-rt-bound",
            ClaimKind::VertexRt1Bound => "vertex-rt1-bound",
            ClaimKind::HeavyPartner => "heavy-partner",
            ClaimKind::LightPartner => "light-partner",
            ClaimKind::HourglassTriangles => "hourglass-triangles",
            ClaimKind::PlainTriangles => "plain-triangles",
            ClaimKind::PlainPairEdges => "plain-pair-edges",
            ClaimKind::MixedPairEdges => "mixed-pair-edges",
            ClaimKind::HourglassPairEdges => "hourglass-pair-edges",
            ClaimKind::TriangleEdges => "triangle-edges",
            ClaimKind::CountSplit => "count-split",
            ClaimKind::CombinedBound => "combined-bound",
        }
    }
}

impl std::fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Graph,
    Vertex(usize),
    /// Ordered pair `(u1, u2)` inside one triangle.
    Pair(usize, usize),
    /// Index into the context's triangle list.
    Triangle(usize),
}

impl std::fmt::Display for Scope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scope::Graph => f.write_str("graph"),
            Scope::Vertex(v) => write!(f, "vertex {v}"),
            Scope::Pair(a, b) => write!(f, "pair ({a}, {b})"),
            Scope::Triangle(i) => write!(f, "triangle {i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub kind: ClaimKind,
    pub scope: Scope,
    pub lhs: i64,
    pub bound: i64,
    pub verdict: Verdict,
}

/// Exact counts for a packing context with maximal hourglass number `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStatistics {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub rt_total: usize,
    pub rt_vertex: Vec<usize>,
    /// `rt1(v)` for `v ∈ V0`.
    pub rt1: BTreeMap<usize, usize>,
    /// `rt2(e)` for each edge of `G[V0]`.
    pub rt2: BTreeMap<(usize, usize), usize>,
    /// `s_max(v)` for every vertex.
    pub friendship: Vec<usize>,
    pub classification: EdgeClassification,
    /// `Σ_{e ∈ E_i} rt2(e)`.
    pub class_sums: [usize; 5],
    /// Rainbow triangles with two vertices in `V1`.
    pub rt_two_outside: usize,
    /// Rainbow triangles with one vertex in `V1`.
    pub rt_one_outside: usize,
    /// Rainbow triangles inside `V0`.
    pub rt_inside: usize,
    /// Rainbow triangles inside `V1`.
    pub rt_outside: usize,
    /// `|RT1| + |RT2| + C(3k-3, 3)`.
    pub split_bound: i64,
    /// Sum of the class bounds plus `C(3k-3, 3)`.
    pub combined_bound: i64,
    /// `kn(n+k)/12`, the lower bound available when `δ^c >= (n+k)/2`.
    pub density_bound: Rational,
    pub density_hypothesis: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimAudit {
    /// The claims presuppose no `k` disjoint rainbow triangles and `n >= 3k`.
    NotApplicable { reason: String, witness: Option<TrianglePacking> },
    Audited { stats: Box<ProofStatistics>, checks: Vec<ClaimCheck> },
}

impl ClaimAudit {
    pub fn checks(&self) -> &[ClaimCheck] {
        match self {
            ClaimAudit::NotApplicable { .. } => &[],
            ClaimAudit::Audited { checks, .. } => checks,
        }
    }

    pub fn failures(&self) -> Vec<&ClaimCheck> {
        self.checks().iter().filter(|c| c.verdict.is_fail()).collect()
    }
}

fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn choose3(x: i64) -> i64 {
    x * (x - 1) * (x - 2) / 6
}

fn exhaustive(status: SearchStatus, opts: &SearchOptions) -> Result<bool> {
    match status {
        SearchStatus::Found => Ok(true),
        SearchStatus::None => Ok(false),
        SearchStatus::BudgetExceeded => Err(Error::BudgetExceeded { budget: opts.budget, best_proved: 0 }),
    }
}

fn statistics(g: &EdgeColoredGraph, ctx: &PackingContext) -> Result<ProofStatistics> {
    let (n, k, t) = (g.n(), ctx.k(), ctx.t());
    let triangles = enumerate_rainbow_triangles(g);
    let counts = RainbowCounts::from_triangles(n, &triangles);
    let mut rt1: BTreeMap<usize, usize> = ctx.v0().into_iter().map(|v| (v, 0)).collect();
    let mut rt2: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v, _) in g.edges() {
        if ctx.in_v0(u) && ctx.in_v0(v) {
            rt2.insert((u, v), 0);
        }
    }
    let (mut two, mut one, mut inside, mut outside) = (0, 0, 0, 0);
    for tri in &triangles {
        let inner: Vec<usize> = tri.vertices.iter().copied().filter(|&v| ctx.in_v0(v)).collect();
        match inner.len() {
            0 => outside += 1,
            1 => {
                two += 1;
                *rt1.get_mut(&inner[0]).unwrap() += 1;
            }
            2 => {
                one += 1;
                *rt2.get_mut(&(inner[0], inner[1])).unwrap() += 1;
            }
            _ => inside += 1,
        }
    }
    let classification = classify_v0_edges(g, ctx)?;
    let class_sums: [usize; 5] =
        std::array::from_fn(|i| classification.classes[i].iter().map(|e| rt2[e]).sum());
    let friendship = (0..n).map(|v| max_friendship(g, v, None).map(|f| f.s)).collect::<Result<Vec<_>>>()?;

    let (ni, ki, ti) = (n as i64, k as i64, t as i64);
    let cap = ni - 3 * ki + 3;
    let rest = ki - 1 - ti;
    let plain_total = ((rest) * (2 * ti * (cap - 1) + 8)).max(3 * rest * (cap - 1));
    let combined_bound = plain_total
        + ti * (3 * ki * ni - 12 * ki + 9)
        + ti * rest * (3 * cap + 9)
        + 6 * choose2(rest) * cap
        + (3 * ki - 3) * cap
        + 16 * choose2(ti)
        + choose3(3 * ki - 3);
    Ok(ProofStatistics {
        n,
        k,
        t,
        rt_total: triangles.len(),
        rt_vertex: counts.per_vertex,
        rt1,
        rt2,
        friendship,
        classification,
        class_sums,
        rt_two_outside: two,
        rt_one_outside: one,
        rt_inside: inside,
        rt_outside: outside,
        split_bound: (two + one) as i64 + choose3(3 * ki - 3),
        combined_bound,
        density_bound: Rational::new(ki * ni * (ni + ki), 12),
        density_hypothesis: 2 * g.min_color_degree() >= n + k,
    })
}

/// Audits the counting inequalities of the disjoint-rainbow-triangle argument
/// for `G` and a context whose hourglass number is maximal.
///
/// The audit is only meaningful when `G` has no `k = ctx.k()` disjoint rainbow
/// triangles; that is checked by exhaustive search and reported as
/// `NotApplicable` otherwise. Individual checks whose own side conditions fail
/// carry `HypothesisNotMet`:
///
/// * vertex bounds at `v` need `G - v` to have `k - 1` disjoint rainbow triangles,
///   and the `rt1` form additionally `N != 6k - 5`;
/// * `HeavyPartner` needs `N >= 4`, `LightPartner` needs `N >= 6`;
/// * hourglass sums need `N >= 6` and the vertex bound at each center;
/// * plain-triangle sums need `N >= 4`.
pub fn claim_audit(g: &EdgeColoredGraph, ctx: &PackingContext, opts: &SearchOptions) -> Result<ClaimAudit> {
    if ctx.n() != g.n() {
        return Err(Error::InvalidPacking("context was built for a different graph".into()));
    }
    let (n, k, t) = (g.n(), ctx.k(), ctx.t());
    if n < 3 * k {
        return Ok(ClaimAudit::NotApplicable { reason: format!("n = {n} < 3k = {}", 3 * k), witness: None });
    }
    let full = find_packing(g, k, PackingMode::EachRainbow, opts)?;
    if exhaustive(full.status, opts)? {
        return Ok(ClaimAudit::NotApplicable {
            reason: format!("the graph has {k} disjoint rainbow triangles"),
            witness: full.witness,
        });
    }
    let (t_max, _) = max_rf21(g, &ctx.triples)?;
    if t_max != t {
        return Err(Error::InvalidPacking(format!("context has {t} hourglasses but {t_max} are possible")));
    }

    let stats = statistics(g, ctx)?;
    let (ni, ki, ti) = (n as i64, k as i64, t as i64);
    let cap = ni - 3 * ki + 3;
    let mut checks = Vec::new();
    let mut push = |kind, scope, lhs: i64, bound: i64, applicable: bool| {
        checks.push(ClaimCheck { kind, scope, lhs, bound, verdict: Verdict::from_check(applicable, lhs <= bound) });
    };

    push(ClaimKind::OutsideTriangles, Scope::Graph, stats.rt_outside as i64, 0, true);

    let mut minus_ok = vec![true; n];
    if k >= 2 {
        for v in ctx.v0() {
            let r = find_packing(&g.without_vertex(v)?, k - 1, PackingMode::EachRainbow, opts)?;
            minus_ok[v] = exhaustive(r.status, opts)?;
        }
    }
    for (v, &ok) in minus_ok.iter().enumerate() {
        push(ClaimKind::FriendshipBound, Scope::Vertex(v), stats.friendship[v] as i64, 3 * ki - 3, ok);
        push(ClaimKind::VertexRtBound, Scope::Vertex(v), stats.rt_vertex[v] as i64, (3 * ki - 3) * (ni - 1), ok);
    }
    for (&v, &r) in &stats.rt1 {
        let ok = minus_ok[v] && cap != 6 * ki - 5;
        push(ClaimKind::VertexRt1Bound, Scope::Vertex(v), r as i64, (3 * ki - 3) * (cap - 1), ok);
    }

    for tri in &ctx.triples {
        for &u1 in tri {
            let r1 = stats.rt1[&u1] as i64;
            for &u2 in tri.iter().filter(|&&u| u != u1) {
                let r2 = stats.rt1[&u2] as i64;
                if r1 > cap - 1 {
                    push(ClaimKind::HeavyPartner, Scope::Pair(u1, u2), r2, 4, cap >= 4);
                } else if r1 >= 1 {
                    push(ClaimKind::LightPartner, Scope::Pair(u1, u2), r2, 2 * (cap - 1), cap >= 6);
                }
            }
        }
    }

    let tri_rt1 = |i: usize| ctx.triples[i].iter().map(|v| stats.rt1[v] as i64).sum::<i64>();
    let per_center = 3 * ki * ni - 12 * ki + 9;
    let mut hour_lhs = 0;
    let mut hour_ok = true;
    for i in 0..t {
        let c = ctx.centers[i];
        let e1i: i64 = stats
            .classification
            .class(1)
            .iter()
            .filter(|&&(a, b)| a == c || b == c)
            .map(|e| stats.rt2[e] as i64)
            .sum();
        let ok = cap >= 6 && minus_ok[c];
        hour_ok &= ok;
        hour_lhs += tri_rt1(i);
        push(ClaimKind::HourglassTriangles, Scope::Triangle(i), tri_rt1(i) + e1i, per_center, ok);
    }
    hour_lhs += stats.class_sums[0] as i64;
    push(ClaimKind::HourglassTriangles, Scope::Graph, hour_lhs, ti * per_center, hour_ok);

    let rest = ki - 1 - ti;
    let each = (2 * ti * (cap - 1) + 8).max(3 * (cap - 1));
    let mut plain_lhs = 0;
    for i in t..ctx.triples.len() {
        plain_lhs += tri_rt1(i);
        push(ClaimKind::PlainTriangles, Scope::Triangle(i), tri_rt1(i), each, cap >= 4);
    }
    let plain_total = (rest * (2 * ti * (cap - 1) + 8)).max(3 * rest * (cap - 1));
    push(ClaimKind::PlainTriangles, Scope::Graph, plain_lhs, plain_total, cap >= 4);

    let sums = stats.class_sums.map(|s| s as i64);
    push(ClaimKind::PlainPairEdges, Scope::Graph, sums[2], 6 * choose2(rest) * cap, true);
    push(ClaimKind::MixedPairEdges, Scope::Graph, sums[1], ti * rest * (3 * cap + 9), true);
    push(ClaimKind::HourglassPairEdges, Scope::Graph, sums[4], 16 * choose2(ti), true);
    push(ClaimKind::TriangleEdges, Scope::Graph, sums[3], (3 * ki - 3) * cap, true);
    push(ClaimKind::CountSplit, Scope::Graph, stats.rt_total as i64, stats.split_bound, true);
    let all_ok = hour_ok && cap >= 4;
    push(ClaimKind::CombinedBound, Scope::Graph, stats.rt_total as i64, stats.combined_bound, all_ok);

    Ok(ClaimAudit::Audited { stats: Box::new(stats), checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::context::{rt1_vertex, rt2_edge};
    use crate::constructions::{ConstructionSpec, Family};
    use crate::packing::max_packing;

    fn audit(g: &EdgeColoredGraph) -> ClaimAudit {
        let opts = SearchOptions::default();
        let (_, packing) = max_packing(g, PackingMode::EachRainbow, &opts).unwrap();
        let triples: Vec<[usize; 3]> = packing.triples.iter().map(|t| t.vertices).collect();
        let (_, ctx) = max_rf21(g, &triples).unwrap();
        claim_audit(g, &ctx, &opts).unwrap()
    }

    #[test]
    fn g4_instances_pass() {
        for (n, k) in [(7, 2), (10, 3), (12, 3), (13, 4)] {
            let g = ConstructionSpec::new(Family::G4, n, k).unwrap().build();
            let a = audit(&g);
            assert!(matches!(a, ClaimAudit::Audited { .. }), "G4({n},{k})");
            assert!(a.failures().is_empty(), "G4({n},{k}): {:?}", a.failures());
        }
    }

    #[test]
    fn not_applicable_with_full_packing() {
        let g = EdgeColoredGraph::rainbow_complete(9).unwrap();
        let ctx = PackingContext::from_packing(&g, vec![[0, 1, 2], [3, 4, 5]]).unwrap();
        let (_, ctx) = max_rf21(&g, &ctx.triples).unwrap();
        let a = claim_audit(&g, &ctx, &SearchOptions::default()).unwrap();
        assert!(matches!(a, ClaimAudit::NotApplicable { witness: Some(_), .. }));
    }

    #[test]
    fn rejects_non_maximal_t() {
        let g = ConstructionSpec::new(Family::G4, 12, 3).unwrap().build();
        // X = 0..8; 0..6 packed, 6,7 outside with the Y vertices.
        let (t, ctx) = max_rf21(&g, &[[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(t, 1);
        let plain = PackingContext::from_packing(&g, ctx.triples.clone()).unwrap();
        assert!(matches!(claim_audit(&g, &plain, &SearchOptions::default()), Err(Error::InvalidPacking(_))));
    }

    #[test]
    fn statistics_match_direct_counts() {
        let g = ConstructionSpec::new(Family::G4, 12, 3).unwrap().build();
        let ClaimAudit::Audited { stats, .. } = audit(&g) else { panic!("G4(12,3) is audited") };
        let (_, ctx) = {
            let opts = SearchOptions::default();
            let (_, p) = max_packing(&g, PackingMode::EachRainbow, &opts).unwrap();
            max_rf21(&g, &p.triples.iter().map(|t| t.vertices).collect::<Vec<_>>()).unwrap()
        };
        for (&v, &r) in &stats.rt1 {
            assert_eq!(rt1_vertex(&g, &ctx, v).unwrap(), r);
        }
        for (&(u, v), &r) in &stats.rt2 {
            assert_eq!(rt2_edge(&g, &ctx, u, v).unwrap(), r);
        }
        assert_eq!(stats.rt1.values().sum::<usize>(), stats.rt_two_outside);
        assert_eq!(stats.rt2.values().sum::<usize>(), stats.rt_one_outside);
        assert_eq!(
            stats.rt_two_outside + stats.rt_one_outside + stats.rt_inside + stats.rt_outside,
            stats.rt_total
        );
    }
}
