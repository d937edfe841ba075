#![allow(dead_code)]

use rainbowlab::EdgeColoredGraph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Each pair becomes an edge with probability `p`, colored uniformly from `1..=palette`.
pub fn random_coloring(rng: &mut StdRng, n: usize, p: f64, palette: u32) -> EdgeColoredGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, rng.gen_range(1..=palette)));
            }
        }
    }
    EdgeColoredGraph::build(n, edges).unwrap()
}

/// `K_n` where a random set of `s` vertices spans a rainbow clique and every
/// other edge takes the color of its earlier endpoint in a random order, so
/// rainbow triangles live inside the clique. `noise` edges are then recolored at random.
pub fn clique_plus_lexical(rng: &mut StdRng, n: usize, s: usize, noise: usize) -> EdgeColoredGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let clique = |v: usize| rank[v] < s;
    let mut next = n as u32 + 1;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let c = if clique(u) && clique(v) {
                next += 1;
                next
            } else {
                1 + rank[u].min(rank[v]) as u32
            };
            edges.push((u, v, c));
        }
    }
    for _ in 0..noise {
        let i = rng.gen_range(0..edges.len());
        edges[i].2 = rng.gen_range(1..=next + 3);
    }
    EdgeColoredGraph::build(n, edges).unwrap()
}

pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Rainbow triangles found by checking every triple directly.
pub fn naive_rainbow_triples(g: &EdgeColoredGraph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if let (Some(x), Some(y), Some(z)) = (g.color(a, b), g.color(a, c), g.color(b, c)) {
                    if x != y && x != z && y != z {
                        out.push([a, b, c]);
                    }
                }
            }
        }
    }
    out
}

/// Whether `k` disjoint rainbow triangles exist, by trying every family of `k`
/// triples. With `global`, all `3k` edge colors must also be distinct.
pub fn naive_packing_exists(g: &EdgeColoredGraph, k: usize, global: bool) -> bool {
    let triples = naive_rainbow_triples(g);
    fn go(g: &EdgeColoredGraph, triples: &[[usize; 3]], from: usize, left: usize, used: u64, colors: &mut Vec<u32>, global: bool) -> bool {
        if left == 0 {
            return true;
        }
        for i in from..triples.len() {
            let t = triples[i];
            let mask = t.iter().fold(0u64, |m, &v| m | 1 << v);
            if mask & used != 0 {
                continue;
            }
            let cs = [g.color(t[0], t[1]), g.color(t[0], t[2]), g.color(t[1], t[2])].map(|c| c.unwrap().get());
            if global && cs.iter().any(|c| colors.contains(c)) {
                continue;
            }
            colors.extend(cs);
            let found = go(g, triples, i + 1, left - 1, used | mask, colors, global);
            colors.truncate(colors.len() - 3);
            if found {
                return true;
            }
        }
        false
    }
    go(g, &triples, 0, k, 0, &mut Vec::new(), global)
}

/// Random dense coloring whose minimum color degree is at least `floor`.
pub fn dense_coloring(rng: &mut StdRng, n: usize, floor: usize) -> EdgeColoredGraph {
    loop {
        let palette = rng.gen_range(n as u32..=(n * n) as u32);
        let p = rng.gen_range(0.8..=1.0);
        let g = random_coloring(rng, n, p, palette);
        if g.min_color_degree() >= floor {
            return g;
        }
    }
}
