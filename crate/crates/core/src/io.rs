//! JSON formats for graphs, packing contexts and packing witnesses.
//!
//! Graph: `{"n": 5, "edges": [[0, 1, 3], ...]}` with `u < v` and colors `>= 1`.
//! Context: `{"triples": [[a, b, c], ...], "centers": [...], "wings": [[p, q], ...]}`.
//! Witness: `{"triples": [[a, b, c], ...], "mode": "each", "colors": [[x, y, z], ...]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::PackingContext;
use crate::error::Error;
use crate::graph::EdgeColoredGraph;
use crate::packing::TrianglePacking;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize, u32)>,
}

impl From<&EdgeColoredGraph> for GraphJson {
    fn from(g: &EdgeColoredGraph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().map(|(u, v, c)| (u, v, c.get())).collect() }
    }
}

impl GraphJson {
    pub fn into_graph(self) -> Result<EdgeColoredGraph, Error> {
        EdgeColoredGraph::build(self.n, self.edges)
    }
}

/// Serializes with the graph's own color ids; parsing the output gives back an equal graph.
pub fn graph_to_json(g: &EdgeColoredGraph) -> String {
    let mut s = serde_json::to_string(&GraphJson::from(g)).expect("plain data serializes");
    s.push('\n');
    s
}

/// Serializes after relabeling colors `1..=c(G)` by first appearance.
pub fn graph_to_canonical_json(g: &EdgeColoredGraph) -> String {
    graph_to_json(&g.canonical())
}

pub fn parse_graph(text: &str) -> Result<EdgeColoredGraph, ParseError> {
    let raw: GraphJson = serde_json::from_str(text)?;
    Ok(raw.into_graph()?)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextJson {
    pub triples: Vec<[usize; 3]>,
    #[serde(default)]
    pub centers: Vec<usize>,
    #[serde(default)]
    pub wings: Vec<[usize; 2]>,
}

impl From<&PackingContext> for ContextJson {
    fn from(ctx: &PackingContext) -> Self {
        ContextJson { triples: ctx.triples.clone(), centers: ctx.centers.clone(), wings: ctx.wings.clone() }
    }
}

pub fn context_to_json(ctx: &PackingContext) -> String {
    let mut s = serde_json::to_string(&ContextJson::from(ctx)).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses a context and validates it against `g`.
pub fn parse_context(g: &EdgeColoredGraph, text: &str) -> Result<PackingContext, ParseError> {
    let raw: ContextJson = serde_json::from_str(text)?;
    Ok(PackingContext::new(g, raw.triples, raw.centers, raw.wings)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub triples: Vec<[usize; 3]>,
    pub mode: String,
    pub colors: Vec<[u32; 3]>,
}

impl From<&TrianglePacking> for WitnessJson {
    fn from(p: &TrianglePacking) -> Self {
        WitnessJson {
            triples: p.triples.iter().map(|t| t.vertices).collect(),
            mode: p.mode.name().to_string(),
            colors: p.triples.iter().map(|t| t.colors.map(|c| c.get())).collect(),
        }
    }
}

pub fn witness_to_json(p: &TrianglePacking) -> String {
    let mut s = serde_json::to_string(&WitnessJson::from(p)).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses a witness and re-validates it against `g`.
pub fn parse_witness(g: &EdgeColoredGraph, text: &str) -> Result<TrianglePacking, ParseError> {
    let raw: WitnessJson = serde_json::from_str(text)?;
    let mode = raw.mode.parse()?;
    let mut triples = Vec::with_capacity(raw.triples.len());
    for [a, b, c] in raw.triples {
        for v in [a, b, c] {
            g.check_vertex(v)?;
        }
        let t = g
            .rainbow_triple(a, b, c)
            .ok_or_else(|| Error::InvalidPacking(format!("{:?} is not a rainbow triangle", [a, b, c])))?;
        triples.push(t);
    }
    let p = TrianglePacking { mode, triples };
    p.validate(g)?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packing::{find_packing, PackingMode, SearchOptions};

    #[test]
    fn graph_round_trip() {
        let g = EdgeColoredGraph::build(4, [(0, 1, 7), (2, 3, 2), (1, 3, 7)]).unwrap();
        let text = graph_to_json(&g);
        assert_eq!(text, "{\"n\":4,\"edges\":[[0,1,7],[1,3,7],[2,3,2]]}\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(graph_to_canonical_json(&g), "{\"n\":4,\"edges\":[[0,1,1],[1,3,1],[2,3,2]]}\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_graph("{"), Err(ParseError::Json(_))));
        assert!(matches!(parse_graph("{\"n\":2,\"edges\":[[0,0,1]]}"), Err(ParseError::Graph(Error::SelfLoop(0)))));
        assert!(matches!(parse_graph("{\"n\":2,\"edges\":[],\"x\":1}"), Err(ParseError::Json(_))));
    }

    #[test]
    fn context_round_trip() {
        let g = EdgeColoredGraph::rainbow_complete(7).unwrap();
        let ctx = parse_context(&g, "{\"triples\":[[2,1,0]],\"centers\":[0],\"wings\":[[5,6]]}").unwrap();
        assert_eq!(ctx.triples, vec![[0, 1, 2]]);
        assert_eq!(parse_context(&g, &context_to_json(&ctx)).unwrap(), ctx);
        assert!(parse_context(&g, "{\"triples\":[[0,1,2]]}").unwrap().centers.is_empty());
        assert!(matches!(parse_context(&g, "{\"triples\":[[0,1,9]]}"), Err(ParseError::Graph(_))));
    }

    #[test]
    fn witness_round_trip() {
        let g = EdgeColoredGraph::rainbow_complete(6).unwrap();
        let w = find_packing(&g, 2, PackingMode::GloballyRainbow, &SearchOptions::default()).unwrap().witness.unwrap();
        let text = witness_to_json(&w);
        assert_eq!(parse_witness(&g, &text).unwrap(), w);
    }
}
