use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use crate::error::{Error, Result};
use crate::graph::EdgeColoredGraph;

/// The link graph `E_v`: pairs `uw` of neighbors of `v` such that `vuw` is a rainbow triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub center: usize,
    /// `N(v)` in increasing order.
    pub vertices: Vec<usize>,
    /// Link edges `(u, w)` with `u < w`, lexicographic.
    pub edges: Vec<(usize, usize)>,
}

pub fn link_graph(g: &EdgeColoredGraph, v: usize) -> Result<LinkGraph> {
    g.check_vertex(v)?;
    let nbrs: Vec<_> = g.neighbors(v).collect();
    let mut edges = Vec::new();
    for (i, &(a, ca)) in nbrs.iter().enumerate() {
        for &(b, cb) in &nbrs[i + 1..] {
            if ca == cb {
                continue;
            }
            if let Some(ab) = g.color(a, b) {
                if ab != ca && ab != cb {
                    edges.push((a, b));
                }
            }
        }
    }
    Ok(LinkGraph { center: v, vertices: nbrs.into_iter().map(|(u, _)| u).collect(), edges })
}

/// Largest rainbow friendship graph `RF_s(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Friendship {
    pub s: usize,
    /// `s` vertex-disjoint link edges, sorted.
    pub matching: Vec<(usize, usize)>,
}

/// Maximum `s` with `RF_s(v) ⊆ G`, all non-center vertices inside `restrict`
/// (default: every other vertex). Computed as a maximum matching of the link graph.
pub fn max_friendship(g: &EdgeColoredGraph, v: usize, restrict: Option<&[usize]>) -> Result<Friendship> {
    let link = link_graph(g, v)?;
    let allowed = match restrict {
        None => vec![true; g.n()],
        Some(set) => {
            let mut mask = vec![false; g.n()];
            for &u in set {
                g.check_vertex(u)?;
                if u == v {
                    return Err(Error::InvalidParams(format!("restriction contains the center {v}")));
                }
                mask[u] = true;
            }
            mask
        }
    };
    let edges: Vec<_> = link.edges.into_iter().filter(|&(a, b)| allowed[a] && allowed[b]).collect();
    let matching = matching_of(g.n(), &edges);
    Ok(Friendship { s: matching.len(), matching })
}

fn matching_of(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    if edges.is_empty() {
        return Vec::new();
    }
    let mut graph = UnGraph::<(), ()>::with_capacity(n, edges.len());
    for _ in 0..n {
        graph.add_node(());
    }
    for &(a, b) in edges {
        graph.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
    }
    let m = maximum_matching(&graph);
    let mut out: Vec<_> = m
        .edges()
        .map(|(a, b)| {
            let (a, b) = (a.index(), b.index());
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}
