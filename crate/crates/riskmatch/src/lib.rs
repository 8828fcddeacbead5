//! Bounded-risk maximum-weight matchings on uncertain weighted
//! graphs and hypergraphs.
//!
//! Every hyperedge of an [`UncertainHypergraph`] carries a probability
//! distribution over its reward (weighted Bernoulli, Gaussian, or raw
//! first two moments). Given a hard budget `B` on the total risk of a
//! matching (the sum of its edges' standard deviations, or of their
//! variances), the [`solver`] module maximizes expected reward subject
//! to `risk ≤ B` by filtering edges, sorting them by reward-to-risk
//! ratio, and binary-searching a nested sequence of prefix hypergraphs
//! with a pluggable matching engine ([`matchers`]).
//!
//! The remaining modules supply the surrounding machinery: exhaustive
//! ground-truth baselines for small instances ([`oracle`]), seeded
//! random-graph generators ([`generators`]), and file ingestion
//! including coauthorship-hypergraph construction ([`ingest`]).

pub mod generators;
pub mod hypergraph;
pub mod ingest;
pub mod matchers;
pub mod oracle;
pub mod solver;

pub use hypergraph::{
    EdgeDistribution, Matching, NodeId, RiskMeasure, UncertainHyperedge, UncertainHypergraph,
};
pub use solver::SolveOutcome;
