use super::context::PackingContext;
use crate::error::{Error, Result};
use crate::graph::EdgeColoredGraph;

/// The five edge classes of `G[V0]` relative to a packing with hourglass centers.
///
/// * `E1`: a center to a vertex of another triangle.
/// * `E2`: a non-center of an hourglass triangle to a plain triangle.
/// * `E3`: between two plain triangles.
/// * `E4`: inside a triangle.
/// * `E5`: between non-centers of two hourglass triangles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeClassification {
    pub classes: [Vec<(usize, usize)>; 5],
}

impl EdgeClassification {
    /// `E_i` for `i` in `1..=5`.
    pub fn class(&self, i: usize) -> &[(usize, usize)] {
        &self.classes[i - 1]
    }

    pub fn sizes(&self) -> [usize; 5] {
        std::array::from_fn(|i| self.classes[i].len())
    }

    pub fn total(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

/// Which of the five class definitions contain the pair `{u, v}` of `V0`.
fn memberships(ctx: &PackingContext, u: usize, v: usize) -> [bool; 5] {
    let (i, j) = (ctx.owner(u).unwrap(), ctx.owner(v).unwrap());
    let t = ctx.t();
    let hour = |x: usize| x < t;
    let center = |x: usize| ctx.is_center(x);
    let directed = |a: usize, ia: usize, b: usize, ib: usize| {
        [
            center(a) && ia != ib,
            hour(ia) && !center(a) && !hour(ib),
            !hour(ia) && !hour(ib) && ia < ib,
            ia == ib,
            hour(ia) && hour(ib) && ia < ib && !center(a) && !center(b),
        ]
    };
    let x = directed(u, i, v, j);
    let y = directed(v, j, u, i);
    std::array::from_fn(|c| x[c] || y[c])
}

/// Splits the edges of `G[V0]` into `E1..E5`, failing loudly if the classes
/// overlap or miss an edge.
pub fn classify_v0_edges(g: &EdgeColoredGraph, ctx: &PackingContext) -> Result<EdgeClassification> {
    if ctx.n() != g.n() {
        return Err(Error::InvalidPacking("context was built for a different graph".into()));
    }
    let v0 = ctx.v0();
    let mut out = EdgeClassification::default();
    let mut inside = 0;
    for (a, &u) in v0.iter().enumerate() {
        for &v in &v0[a + 1..] {
            if !g.has_edge(u, v) {
                continue;
            }
            inside += 1;
            let m = memberships(ctx, u, v);
            let hits: Vec<usize> = (0..5).filter(|&c| m[c]).collect();
            if hits.len() != 1 {
                return Err(Error::Invariant(format!(
                    "edge {{{u}, {v}}} lies in {} of the classes E1..E5",
                    hits.len()
                )));
            }
            out.classes[hits[0]].push((u, v));
        }
    }
    if out.total() != inside {
        return Err(Error::Invariant("E1..E5 do not cover G[V0]".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_triangles_one_hourglass() {
        let g = EdgeColoredGraph::rainbow_complete(11).unwrap();
        let ctx = PackingContext::new(&g, vec![[0, 1, 2], [3, 4, 5], [6, 7, 8]], vec![0], vec![[9, 10]])
            .unwrap();
        let c = classify_v0_edges(&g, &ctx).unwrap();
        assert_eq!(c.sizes(), [6, 12, 9, 9, 0]);
        assert_eq!(c.total(), 36);
    }

    #[test]
    fn without_centers() {
        let g = EdgeColoredGraph::rainbow_complete(9).unwrap();
        let ctx = PackingContext::from_packing(&g, vec![[0, 1, 2], [3, 4, 5]]).unwrap();
        let c = classify_v0_edges(&g, &ctx).unwrap();
        assert_eq!(c.sizes(), [0, 0, 9, 6, 0]);
        let single = PackingContext::from_packing(&g, vec![[0, 1, 2]]).unwrap();
        assert_eq!(classify_v0_edges(&g, &single).unwrap().sizes(), [0, 0, 0, 3, 0]);
    }

    #[test]
    fn two_hourglasses() {
        let g = EdgeColoredGraph::rainbow_complete(10).unwrap();
        let ctx = PackingContext::new(&g, vec![[0, 1, 2], [3, 4, 5]], vec![0, 3], vec![[6, 7], [8, 9]]).unwrap();
        let c = classify_v0_edges(&g, &ctx).unwrap();
        // 0 and 3 each see the other triangle (one shared edge 0-3), non-centers pair up 2x2.
        assert_eq!(c.sizes(), [5, 0, 0, 6, 4]);
    }
}
