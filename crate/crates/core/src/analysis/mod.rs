//! Rainbow-triangle statistics: counts, link graphs, hourglass structure,
//! edge classes, degree reductions and the counting inequalities.

mod claims;
mod classify;
mod context;
mod friendship;
mod reduction;
mod rf21;
mod thresholds;
mod triangles;

pub use claims::{claim_audit, ClaimAudit, ClaimCheck, ClaimKind, ProofStatistics, Scope};
pub use classify::{classify_v0_edges, EdgeClassification};
pub use context::{rt1_vertex, rt2_edge, PackingContext};
pub use friendship::{link_graph, max_friendship, Friendship, LinkGraph};
pub use reduction::{lemma_bounds_check, minimal_color_degree_subgraph, LemmaReport, ReducedBounds, Verdict};
pub use rf21::max_rf21;
pub use thresholds::{proof_thresholds, CertifiedInterval, ProofThresholds, MAX_THRESHOLD_K};
pub use triangles::{enumerate_rainbow_triangles, rt_edge, rt_vertex, RainbowCounts};
