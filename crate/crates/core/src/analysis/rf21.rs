use super::context::PackingContext;
use crate::error::Result;
use crate::graph::EdgeColoredGraph;

#[derive(Clone, Copy)]
struct Hourglass {
    center: usize,
    wings: [usize; 2],
}

struct Search<'a> {
    options: &'a [Vec<Hourglass>],
    used: Vec<bool>,
    current: Vec<Option<Hourglass>>,
    best: Vec<Option<Hourglass>>,
    best_t: usize,
}

impl Search<'_> {
    fn run(&mut self, i: usize, chosen: usize) {
        if chosen > self.best_t {
            self.best_t = chosen;
            self.best = self.current.clone();
        }
        let open = self.options[i..].iter().filter(|o| !o.is_empty()).count();
        if chosen + open <= self.best_t {
            return;
        }
        for &h in &self.options[i] {
            let [a, b] = h.wings;
            if self.used[a] || self.used[b] {
                continue;
            }
            self.used[a] = true;
            self.used[b] = true;
            self.current[i] = Some(h);
            self.run(i + 1, chosen + 1);
            self.current[i] = None;
            self.used[a] = false;
            self.used[b] = false;
            if self.best_t == self.options.len() {
                return;
            }
        }
        self.run(i + 1, chosen);
    }
}

/// Largest `t` such that `t` of the given triangles extend to hourglasses with
/// pairwise disjoint wings outside the packing. The center may be any vertex
/// of its triangle. The returned context lists the extended triangles first,
/// each group in input order.
pub fn max_rf21(g: &EdgeColoredGraph, triples: &[[usize; 3]]) -> Result<(usize, PackingContext)> {
    let plain = PackingContext::from_packing(g, triples.to_vec())?;
    let outside = plain.v1();
    let options: Vec<Vec<Hourglass>> = plain
        .triples
        .iter()
        .map(|tri| {
            let mut opts = Vec::new();
            for &center in tri {
                for (i, &a) in outside.iter().enumerate() {
                    for &b in &outside[i + 1..] {
                        if g.rainbow_triple(center, a, b).is_some() {
                            opts.push(Hourglass { center, wings: [a, b] });
                        }
                    }
                }
            }
            opts
        })
        .collect();
    let mut search = Search {
        options: &options,
        used: vec![false; g.n()],
        current: vec![None; options.len()],
        best: vec![None; options.len()],
        best_t: 0,
    };
    search.run(0, 0);

    let mut ordered = Vec::with_capacity(triples.len());
    let mut centers = Vec::new();
    let mut wings = Vec::new();
    for (tri, h) in plain.triples.iter().zip(&search.best) {
        if let Some(h) = h {
            ordered.push(*tri);
            centers.push(h.center);
            wings.push(h.wings);
        }
    }
    for (tri, h) in plain.triples.iter().zip(&search.best) {
        if h.is_none() {
            ordered.push(*tri);
        }
    }
    let ctx = PackingContext::new(g, ordered, centers, wings)?;
    Ok((search.best_t, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ConstructionSpec, Family};

    #[test]
    fn no_outside_vertices() {
        let g = EdgeColoredGraph::rainbow_complete(6).unwrap();
        let (t, ctx) = max_rf21(&g, &[[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(t, 0);
        assert_eq!(ctx.t(), 0);
    }

    #[test]
    fn rainbow_cliques() {
        // Three outside vertices leave room for one wing pair only.
        let k9 = EdgeColoredGraph::rainbow_complete(9).unwrap();
        let (t, ctx) = max_rf21(&k9, &[[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(t, 1);
        assert_eq!(ctx.centers, vec![0]);
        assert_eq!(ctx.wings, vec![[6, 7]]);

        let k10 = EdgeColoredGraph::rainbow_complete(10).unwrap();
        let (t, ctx) = max_rf21(&k10, &[[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(t, 2);
        assert_eq!(ctx.centers, vec![0, 3]);
        assert_eq!(ctx.wings, vec![[6, 7], [8, 9]]);
    }

    #[test]
    fn g4_packing_inside_x() {
        let g = ConstructionSpec::new(Family::G4, 10, 3).unwrap().build();
        // All rainbow triangles lie in X = {0..7}; the two unpacked X vertices
        // still form one wing pair.
        let (t, ctx) = max_rf21(&g, &[[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(t, 1);
        assert_eq!(ctx.wings, vec![[6, 7]]);
        let (t, _) = max_rf21(&g, &[[0, 1, 2], [5, 6, 7]]).unwrap();
        assert_eq!(t, 1);
    }

    #[test]
    fn contested_wings() {
        // Two triangles, one shared outside pair {6, 7}: only one hourglass fits.
        let mut b = crate::graph::GraphBuilder::new(8).unwrap();
        let mut c = 1;
        for tri in [[0, 1, 2], [3, 4, 5]] {
            for (i, &u) in tri.iter().enumerate() {
                for &v in &tri[i + 1..] {
                    b.add(u, v, c).unwrap();
                    c += 1;
                }
            }
        }
        for (u, v) in [(0, 6), (0, 7), (3, 6), (3, 7), (6, 7)] {
            b.add(u, v, c).unwrap();
            c += 1;
        }
        let g = b.finish();
        let (t, ctx) = max_rf21(&g, &[[3, 4, 5], [0, 1, 2]]).unwrap();
        assert_eq!(t, 1);
        assert_eq!(ctx.triples[0], [3, 4, 5]);
        assert_eq!(ctx.centers, vec![3]);
        assert_eq!(ctx.wings, vec![[6, 7]]);
    }
}
