use std::collections::HashMap;

use super::triangles::enumerate_rainbow_triangles;
use crate::constructions::Rational;
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredGraph};

/// Spanning subgraph with `δ^c >= d` from which no single edge can be removed
/// without pushing some vertex below `d`. Edges are tried in lexicographic
/// order, pass after pass, until a pass removes nothing.
pub fn minimal_color_degree_subgraph(g: &EdgeColoredGraph, d: usize) -> Result<EdgeColoredGraph> {
    let actual = g.min_color_degree();
    if actual < d {
        return Err(Error::DegreeTooLow { actual, floor: d });
    }
    let n = g.n();
    let mut mult: Vec<HashMap<Color, usize>> = vec![HashMap::new(); n];
    for (u, v, c) in g.edges() {
        *mult[u].entry(c).or_default() += 1;
        *mult[v].entry(c).or_default() += 1;
    }
    let mut alive: Vec<(usize, usize, Color)> = g.edges().collect();
    let spare = |m: &HashMap<Color, usize>, c: Color| m[&c] >= 2 || m.len() > d;
    loop {
        let before = alive.len();
        alive.retain(|&(u, v, c)| {
            if !(spare(&mult[u], c) && spare(&mult[v], c)) {
                return true;
            }
            for x in [u, v] {
                let m = &mut mult[x];
                let e = m.get_mut(&c).unwrap();
                *e -= 1;
                if *e == 0 {
                    m.remove(&c);
                }
            }
            false
        });
        if alive.len() == before {
            break;
        }
    }
    EdgeColoredGraph::build(n, alive.into_iter().map(|(u, v, c)| (u, v, c.get())))
}

/// Outcome of one inequality check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisNotMet,
}

impl Verdict {
    pub fn from_check(hypothesis: bool, holds: bool) -> Self {
        match (hypothesis, holds) {
            (false, _) => Verdict::HypothesisNotMet,
            (true, true) => Verdict::Pass,
            (true, false) => Verdict::Fail,
        }
    }

    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::HypothesisNotMet => "HYPOTHESIS_NOT_MET",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The edge and degree lower bounds on the reduced graph `G'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBounds {
    pub edges: usize,
    pub min_color_degree: usize,
    pub rt: usize,
    /// `e(G')(2δ^c(G') - n) / 3`
    pub edge_bound: Rational,
    /// `δ^c(G')(2δ^c(G') - n)n / 6`
    pub degree_bound: Rational,
    pub edge_verdict: Verdict,
    pub degree_verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub n: usize,
    pub k: usize,
    pub rt: usize,
    pub min_color_degree: usize,
    /// Present when `δ^c(G) >= (n+1)/2`.
    pub reduced: Option<ReducedBounds>,
    pub reduced_verdict: Verdict,
    /// `kn(n+k) / 12`
    pub density_bound: Rational,
    pub density_verdict: Verdict,
}

impl LemmaReport {
    pub fn any_fail(&self) -> bool {
        self.reduced_verdict.is_fail() || self.density_verdict.is_fail()
    }
}

/// Checks the rainbow-triangle lower bounds:
/// on `G' = minimal_color_degree_subgraph(G, δ^c(G))` when `δ^c >= (n+1)/2`,
/// `rt(G') >= e(G')(2δ^c(G')-n)/3 >= δ^c(G')(2δ^c(G')-n)n/6`; and
/// `rt(G) >= kn(n+k)/12` when `δ^c(G) >= (n+k)/2`.
pub fn lemma_bounds_check(g: &EdgeColoredGraph, k: usize) -> Result<LemmaReport> {
    let n = g.n();
    let dc = g.min_color_degree();
    let rt = enumerate_rainbow_triangles(g).len();
    let big = |x: usize| x as i64;

    let reduced = if 2 * dc > n {
        let h = minimal_color_degree_subgraph(g, dc)?;
        let (e, d) = (h.edge_count(), h.min_color_degree());
        let rt_h = enumerate_rainbow_triangles(&h).len();
        let slack = 2 * big(d) - big(n);
        let edge_bound = Rational::new(big(e) * slack, 3);
        let degree_bound = Rational::new(big(d) * slack * big(n), 6);
        let have = Rational::from_integer(big(rt_h));
        Some(ReducedBounds {
            edges: e,
            min_color_degree: d,
            rt: rt_h,
            edge_bound,
            degree_bound,
            edge_verdict: Verdict::from_check(true, have >= edge_bound),
            degree_verdict: Verdict::from_check(true, have >= degree_bound && edge_bound >= degree_bound),
        })
    } else {
        None
    };
    let reduced_verdict = match &reduced {
        None => Verdict::HypothesisNotMet,
        Some(r) if r.edge_verdict.is_fail() || r.degree_verdict.is_fail() => Verdict::Fail,
        Some(_) => Verdict::Pass,
    };
    let density_bound = Rational::new(big(k) * big(n) * big(n + k), 12);
    let density_verdict =
        Verdict::from_check(2 * dc >= n + k, Rational::from_integer(big(rt)) >= density_bound);
    Ok(LemmaReport { n, k, rt, min_color_degree: dc, reduced, reduced_verdict, density_bound, density_verdict })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_edge_minimal(h: &EdgeColoredGraph, d: usize) -> bool {
        h.min_color_degree() >= d
            && h.edges().all(|(u, v, _)| h.remove_edge(u, v).unwrap().min_color_degree() < d)
    }

    #[test]
    fn floor_zero_removes_everything() {
        let g = EdgeColoredGraph::rainbow_complete(5).unwrap();
        assert_eq!(minimal_color_degree_subgraph(&g, 0).unwrap().edge_count(), 0);
    }

    #[test]
    fn nothing_removable() {
        // A perfect matching with distinct colors: every edge is its endpoints' only color.
        let g = EdgeColoredGraph::build(4, [(0, 1, 1), (2, 3, 2)]).unwrap();
        assert_eq!(minimal_color_degree_subgraph(&g, 1).unwrap(), g);
    }

    #[test]
    fn rainbow_k6_floor_three() {
        let g = EdgeColoredGraph::rainbow_complete(6).unwrap();
        let h = minimal_color_degree_subgraph(&g, 3).unwrap();
        assert!(is_edge_minimal(&h, 3));
        assert_eq!(h.n(), 6);
    }

    #[test]
    fn too_low() {
        let g = EdgeColoredGraph::monochromatic_complete(4).unwrap();
        assert_eq!(minimal_color_degree_subgraph(&g, 2), Err(Error::DegreeTooLow { actual: 1, floor: 2 }));
    }

    #[test]
    fn rainbow_k6_boundary() {
        let r = lemma_bounds_check(&EdgeColoredGraph::rainbow_complete(6).unwrap(), 4).unwrap();
        assert_eq!(r.rt, 20);
        assert_eq!(r.density_bound, Rational::from_integer(20));
        assert_eq!(r.density_verdict, Verdict::Pass);
        assert_eq!(r.reduced_verdict, Verdict::Pass);
    }

    #[test]
    fn rainbow_k7_single() {
        let r = lemma_bounds_check(&EdgeColoredGraph::rainbow_complete(7).unwrap(), 1).unwrap();
        assert_eq!(r.rt, 35);
        assert_eq!(r.density_bound, Rational::new(56, 12));
        assert_eq!(r.density_verdict, Verdict::Pass);
    }

    #[test]
    fn monochromatic_fails_hypotheses() {
        let r = lemma_bounds_check(&EdgeColoredGraph::monochromatic_complete(6).unwrap(), 1).unwrap();
        assert_eq!(r.reduced_verdict, Verdict::HypothesisNotMet);
        assert_eq!(r.density_verdict, Verdict::HypothesisNotMet);
        assert!(!r.any_fail());
    }
}
