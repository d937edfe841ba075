//! Edge-colored simple graphs.
//!
//! Vertices are dense indices `0..n`. Each unordered pair is either absent or
//! carries a positive [`Color`]. Graph values are immutable once built; edits
//! return new values, so a graph can be shared freely between search workers.

use std::collections::HashMap;
use std::fmt;
use std::num::NonZeroU32;

use crate::error::{Error, Result};

/// A positive color id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(NonZeroU32);

impl Color {
    pub fn new(value: u32) -> Option<Self> {
        NonZeroU32::new(value).map(Color)
    }

    pub fn get(self) -> u32 {
        self.0.get()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A triangle whose three edges are present and pairwise differently colored.
///
/// `vertices` is sorted; `colors` lists the colors of the edges
/// `v0v1`, `v0v2`, `v1v2` in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RainbowTriple {
    pub vertices: [usize; 3],
    pub colors: [Color; 3],
}

impl RainbowTriple {
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    // Row-major n*n table, mirrored across the diagonal.
    cells: Vec<Option<Color>>,
    edge_count: usize,
}

impl fmt::Debug for EdgeColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeColoredGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().map(|(u, v, c)| (u, v, c.get())).collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental builder; every setter validates its pair.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    graph: EdgeColoredGraph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Self {
            graph: EdgeColoredGraph { n, cells: vec![None; n * n], edge_count: 0 },
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    /// Adds edge `{u, v}` with color `color`; fails on a pair that is already present.
    pub fn add(&mut self, u: usize, v: usize, color: u32) -> Result<&mut Self> {
        let g = &mut self.graph;
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let color = Color::new(color).ok_or(Error::BadColor(u.min(v), u.max(v)))?;
        if g.cells[u * g.n + v].is_some() {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        g.cells[u * g.n + v] = Some(color);
        g.cells[v * g.n + u] = Some(color);
        g.edge_count += 1;
        Ok(self)
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        u < self.graph.n && v < self.graph.n && self.graph.cells[u * self.graph.n + v].is_some()
    }

    pub fn finish(self) -> EdgeColoredGraph {
        self.graph
    }
}

impl EdgeColoredGraph {
    /// Builds a graph from `(u, v, color)` triples.
    pub fn build<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v, c) in edges {
            b.add(u, v, c)?;
        }
        Ok(b.finish())
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Ok(GraphBuilder::new(n)?.finish())
    }

    /// `K_n` with every edge colored `1`.
    pub fn monochromatic_complete(n: usize) -> Result<Self> {
        Self::build(n, pairs(n).map(|(u, v)| (u, v, 1)))
    }

    /// `K_n` with pairwise distinct colors, numbered in lexicographic edge order.
    pub fn rainbow_complete(n: usize) -> Result<Self> {
        Self::build(n, pairs(n).zip(1u32..).map(|((u, v), c)| (u, v, c)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange { vertex: v, n: self.n })
        }
    }

    /// Color of `{u, v}`, or `None` when the pair is absent.
    ///
    /// Panics if either vertex is out of range.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.cells[u * self.n + v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.color(u, v).is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * (self.n - 1) / 2
    }

    /// All edges as `(u, v, color)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        pairs(self.n).filter_map(move |(u, v)| self.cells[u * self.n + v].map(|c| (u, v, c)))
    }

    /// Neighbors of `v` in increasing order, with the connecting edge's color.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Color)> + '_ {
        let row = &self.cells[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter_map(|(u, c)| c.map(|c| (u, c)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of distinct colors on edges at `v`.
    pub fn color_degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        let mut seen: Vec<Color> = self.neighbors(v).map(|(_, c)| c).collect();
        seen.sort_unstable();
        seen.dedup();
        Ok(seen.len())
    }

    /// Minimum color degree over all vertices; 0 if some vertex is isolated.
    pub fn min_color_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.color_degree(v).expect("in range"))
            .min()
            .unwrap_or(0)
    }

    /// Distinct colors in increasing order.
    pub fn palette(&self) -> Vec<Color> {
        let mut colors: Vec<Color> = self.edges().map(|(_, _, c)| c).collect();
        colors.sort_unstable();
        colors.dedup();
        colors
    }

    /// Number of distinct colors used.
    pub fn color_number(&self) -> usize {
        self.palette().len()
    }

    /// The rainbow triangle on `{u, v, w}`, if there is one.
    pub fn rainbow_triple(&self, u: usize, v: usize, w: usize) -> Option<RainbowTriple> {
        let mut t = [u, v, w];
        t.sort_unstable();
        let [a, b, c] = t;
        if a == b || b == c {
            return None;
        }
        let ab = self.color(a, b)?;
        let ac = self.color(a, c)?;
        let bc = self.color(b, c)?;
        (ab != ac && ab != bc && ac != bc).then_some(RainbowTriple { vertices: t, colors: [ab, ac, bc] })
    }

    pub fn is_rainbow_triple(&self, u: usize, v: usize, w: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        Ok(self.rainbow_triple(u, v, w).is_some())
    }

    /// A copy without edge `{u, v}`.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.cells[u * self.n + v] = None;
        g.cells[v * self.n + u] = None;
        g.edge_count -= 1;
        Ok(g)
    }

    /// Subgraph induced by `vertices`, renumbered by increasing original index.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut b = GraphBuilder::new(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if let Some(c) = self.color(u, v) {
                    b.add(i, j, c.get())?;
                }
            }
        }
        Ok(b.finish())
    }

    /// `G - v`. The remaining vertices keep their relative order.
    pub fn without_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let rest: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&rest)
    }

    /// Relabels colors `1..=c(G)` in order of first appearance along the
    /// lexicographic edge order.
    pub fn canonical(&self) -> Self {
        let mut map: HashMap<Color, u32> = HashMap::new();
        let mut b = GraphBuilder::new(self.n).expect("n >= 1");
        for (u, v, c) in self.edges() {
            let next = map.len() as u32 + 1;
            let id = *map.entry(c).or_insert(next);
            b.add(u, v, id).expect("valid edge");
        }
        b.finish()
    }
}

/// Unordered pairs `(u, v)`, `u < v < n`, in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}
