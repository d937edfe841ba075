use crate::error::{Error, Result};
use crate::graph::EdgeColoredGraph;

/// `k - 1` disjoint rainbow triangles `T_1..T_{k-1}` (their union is `V0`),
/// of which the first `t` are extended to hourglasses: triangle `i < t` has a
/// center `centers[i]` and two wing vertices `wings[i]` outside `V0` such that
/// `{center, wing, wing}` is again rainbow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingContext {
    pub triples: Vec<[usize; 3]>,
    pub centers: Vec<usize>,
    pub wings: Vec<[usize; 2]>,
    n: usize,
    // Index of the triangle containing each vertex, if any.
    owner: Vec<Option<usize>>,
}

impl PackingContext {
    /// Validates every structural invariant against `g`.
    pub fn new(
        g: &EdgeColoredGraph,
        triples: Vec<[usize; 3]>,
        centers: Vec<usize>,
        wings: Vec<[usize; 2]>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPacking(msg));
        let n = g.n();
        let mut owner = vec![None; n];
        let mut triples = triples;
        for (i, t) in triples.iter_mut().enumerate() {
            t.sort_unstable();
            for &v in t.iter() {
                g.check_vertex(v)?;
                if owner[v].is_some() {
                    return bad(format!("vertex {v} lies in two triangles"));
                }
                owner[v] = Some(i);
            }
            if g.rainbow_triple(t[0], t[1], t[2]).is_none() {
                return bad(format!("{t:?} is not a rainbow triangle"));
            }
        }
        if centers.len() != wings.len() || centers.len() > triples.len() {
            return bad("need one wing pair per center and at most one center per triangle".into());
        }
        let mut wing_used = vec![false; n];
        for (i, (&c, w)) in centers.iter().zip(&wings).enumerate() {
            if !triples[i].contains(&c) {
                return bad(format!("center {c} is not in triangle {i}"));
            }
            for &x in w {
                g.check_vertex(x)?;
                if owner[x].is_some() || wing_used[x] {
                    return bad(format!("wing vertex {x} overlaps V0 or another wing"));
                }
                wing_used[x] = true;
            }
            if w[0] == w[1] || g.rainbow_triple(c, w[0], w[1]).is_none() {
                return bad(format!("{{{c}, {}, {}}} is not a rainbow triangle", w[0], w[1]));
            }
        }
        Ok(PackingContext { triples, centers, wings, n, owner })
    }

    /// A context without hourglasses.
    pub fn from_packing(g: &EdgeColoredGraph, triples: Vec<[usize; 3]>) -> Result<Self> {
        Self::new(g, triples, Vec::new(), Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hourglass triangles.
    pub fn t(&self) -> usize {
        self.centers.len()
    }

    /// `k` in the sense "these are `k - 1` triangles".
    pub fn k(&self) -> usize {
        self.triples.len() + 1
    }

    pub fn in_v0(&self, v: usize) -> bool {
        self.owner.get(v).is_some_and(|o| o.is_some())
    }

    /// Index of the triangle containing `v`.
    pub fn owner(&self, v: usize) -> Option<usize> {
        self.owner.get(v).copied().flatten()
    }

    pub fn v0(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.in_v0(v)).collect()
    }

    pub fn v1(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.in_v0(v)).collect()
    }

    pub fn is_center(&self, v: usize) -> bool {
        self.owner(v).is_some_and(|i| i < self.t() && self.centers[i] == v)
    }
}

/// `rt1(v)`: rainbow triangles through `v ∈ V0` whose other two vertices lie in `V1`.
pub fn rt1_vertex(g: &EdgeColoredGraph, ctx: &PackingContext, v: usize) -> Result<usize> {
    g.check_vertex(v)?;
    if !ctx.in_v0(v) {
        return Err(Error::NotInV0(v));
    }
    let outside: Vec<_> = g.neighbors(v).filter(|&(u, _)| !ctx.in_v0(u)).collect();
    let mut count = 0;
    for (i, &(a, _)) in outside.iter().enumerate() {
        for &(b, _) in &outside[i + 1..] {
            count += usize::from(g.rainbow_triple(v, a, b).is_some());
        }
    }
    Ok(count)
}

/// `rt2(e)`: rainbow triangles through an edge of `G[V0]` whose third vertex lies in `V1`.
pub fn rt2_edge(g: &EdgeColoredGraph, ctx: &PackingContext, u: usize, v: usize) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    for x in [u, v] {
        if !ctx.in_v0(x) {
            return Err(Error::NotInV0(x));
        }
    }
    if u == v || !g.has_edge(u, v) {
        return Err(Error::NoSuchEdge(u.min(v), u.max(v)));
    }
    Ok((0..g.n()).filter(|&w| !ctx.in_v0(w) && g.rainbow_triple(u, v, w).is_some()).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rt1_rt2_on_rainbow_k6() {
        let g = EdgeColoredGraph::rainbow_complete(6).unwrap();
        let ctx = PackingContext::from_packing(&g, vec![[0, 1, 2]]).unwrap();
        for v in 0..3 {
            assert_eq!(rt1_vertex(&g, &ctx, v).unwrap(), 3);
        }
        assert_eq!(rt2_edge(&g, &ctx, 0, 1).unwrap(), 3);
        assert_eq!(rt1_vertex(&g, &ctx, 4), Err(Error::NotInV0(4)));
        assert_eq!(rt2_edge(&g, &ctx, 0, 4), Err(Error::NotInV0(4)));
    }

    #[test]
    fn empty_v1() {
        let g = EdgeColoredGraph::rainbow_complete(6).unwrap();
        let ctx = PackingContext::from_packing(&g, vec![[0, 1, 2], [3, 4, 5]]).unwrap();
        assert!(ctx.v1().is_empty());
        for v in 0..6 {
            assert_eq!(rt1_vertex(&g, &ctx, v).unwrap(), 0);
        }
    }

    #[test]
    fn invalid_contexts() {
        let g = EdgeColoredGraph::rainbow_complete(7).unwrap();
        assert!(PackingContext::from_packing(&g, vec![[0, 1, 2], [2, 3, 4]]).is_err());
        assert!(PackingContext::new(&g, vec![[0, 1, 2]], vec![3], vec![[4, 5]]).is_err());
        assert!(PackingContext::new(&g, vec![[0, 1, 2]], vec![0], vec![[1, 5]]).is_err());
        assert!(PackingContext::new(&g, vec![[0, 1, 2]], vec![0], vec![[5, 5]]).is_err());
        let ok = PackingContext::new(&g, vec![[0, 1, 2]], vec![0], vec![[5, 6]]).unwrap();
        assert_eq!(ok.t(), 1);
        assert!(ok.is_center(0));
        assert!(!ok.is_center(1));
        let mono = EdgeColoredGraph::monochromatic_complete(7).unwrap();
        assert!(PackingContext::from_packing(&mono, vec![[0, 1, 2]]).is_err());
    }
}
