use crate::error::{Error, Result};
use crate::graph::{EdgeColoredGraph, RainbowTriple};

/// Every rainbow triangle, each once, in lexicographic vertex order.
pub fn enumerate_rainbow_triangles(g: &EdgeColoredGraph) -> Vec<RainbowTriple> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for (b, ab) in g.neighbors(a).filter(|&(b, _)| b > a) {
            for (c, ac) in g.neighbors(a).filter(|&(c, _)| c > b) {
                if ab == ac {
                    continue;
                }
                if let Some(bc) = g.color(b, c) {
                    if bc != ab && bc != ac {
                        out.push(RainbowTriple { vertices: [a, b, c], colors: [ab, ac, bc] });
                    }
                }
            }
        }
    }
    out
}

/// Rainbow triangle counts per vertex and per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowCounts {
    n: usize,
    pub total: usize,
    pub per_vertex: Vec<usize>,
    per_pair: Vec<usize>,
}

impl RainbowCounts {
    pub fn new(g: &EdgeColoredGraph) -> Self {
        Self::from_triangles(g.n(), &enumerate_rainbow_triangles(g))
    }

    pub fn from_triangles(n: usize, triangles: &[RainbowTriple]) -> Self {
        let mut per_vertex = vec![0; n];
        let mut per_pair = vec![0; n * n];
        for t in triangles {
            let [a, b, c] = t.vertices;
            for v in t.vertices {
                per_vertex[v] += 1;
            }
            for (u, v) in [(a, b), (a, c), (b, c)] {
                per_pair[u * n + v] += 1;
                per_pair[v * n + u] += 1;
            }
        }
        RainbowCounts { n, total: triangles.len(), per_vertex, per_pair }
    }

    /// Rainbow triangles through the pair `{u, v}` (0 for a non-edge).
    pub fn edge(&self, u: usize, v: usize) -> usize {
        self.per_pair[u * self.n + v]
    }
}

/// `rt(v)`: rainbow triangles containing `v`.
pub fn rt_vertex(g: &EdgeColoredGraph, v: usize) -> Result<usize> {
    g.check_vertex(v)?;
    let nbrs: Vec<_> = g.neighbors(v).collect();
    let mut count = 0;
    for (i, &(a, ca)) in nbrs.iter().enumerate() {
        for &(b, cb) in &nbrs[i + 1..] {
            if ca == cb {
                continue;
            }
            if let Some(ab) = g.color(a, b) {
                if ab != ca && ab != cb {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// `rt(e)`: rainbow triangles containing edge `{u, v}`.
pub fn rt_edge(g: &EdgeColoredGraph, u: usize, v: usize) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v || !g.has_edge(u, v) {
        return Err(Error::NoSuchEdge(u.min(v), u.max(v)));
    }
    Ok((0..g.n()).filter(|&w| w != u && w != v && g.rainbow_triple(u, v, w).is_some()).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_counts() {
        assert_eq!(enumerate_rainbow_triangles(&EdgeColoredGraph::rainbow_complete(5).unwrap()).len(), 10);
        assert!(enumerate_rainbow_triangles(&EdgeColoredGraph::monochromatic_complete(5).unwrap()).is_empty());
        let k4 = EdgeColoredGraph::rainbow_complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(rt_vertex(&k4, v).unwrap(), 3);
        }
        for (u, v, _) in k4.edges() {
            assert_eq!(rt_edge(&k4, u, v).unwrap(), 2);
        }
    }

    #[test]
    fn hub_star_coloring() {
        // K4 with every edge at vertex 0 colored 1, the rest distinct: no rainbow triangle touches 0.
        let g = EdgeColoredGraph::build(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 2), (1, 3, 3), (2, 3, 4)])
            .unwrap();
        let all = enumerate_rainbow_triangles(&g);
        assert_eq!(rt_vertex(&g, 0).unwrap(), all.iter().filter(|t| t.contains(0)).count());
        assert_eq!(rt_vertex(&g, 0).unwrap(), 0);
        assert_eq!(rt_vertex(&g, 1).unwrap(), 1);
    }

    #[test]
    fn errors() {
        let g = EdgeColoredGraph::build(3, [(0, 1, 1)]).unwrap();
        assert!(rt_vertex(&g, 3).is_err());
        assert_eq!(rt_edge(&g, 1, 2), Err(Error::NoSuchEdge(1, 2)));
    }
}
