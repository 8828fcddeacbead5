//! Black-box maximum-weight matching engines behind one interface:
//! greedy for hypergraphs of any rank, exact blossom for ordinary
//! graphs.
//!
//! Engines are pure functions of a read-only [`WeightedView`]; any
//! number of matching computations may run concurrently on the same
//! hypergraph.

mod blossom;

use std::collections::HashMap;

use thiserror::Error;

use crate::hypergraph::{Matching, UncertainHypergraph};

/// A window onto a hypergraph: of a fixed edge order, only the first
/// `active_prefix` edges are visible, each weighted by a caller-chosen
/// positive weight (the solver uses expected rewards).
///
/// Carries two precomputed orderings so engines stay linear per call:
/// the solve order itself and the same edges sorted by weight.
#[derive(Debug, Clone, Copy)]
pub struct WeightedView<'a> {
    hypergraph: &'a UncertainHypergraph,
    /// Edge ids in solve order; `order[..active_prefix]` is visible.
    order: &'a [usize],
    /// The same edge ids sorted by weight descending, id ascending.
    by_weight: &'a [usize],
    /// Dense map from edge id to its rank in `order` (`usize::MAX` for
    /// edges outside the order).
    position: &'a [usize],
    /// Dense map from edge id to weight.
    weights: &'a [f64],
    active_prefix: usize,
}

impl<'a> WeightedView<'a> {
    pub fn new(
        hypergraph: &'a UncertainHypergraph,
        order: &'a [usize],
        by_weight: &'a [usize],
        position: &'a [usize],
        weights: &'a [f64],
        active_prefix: usize,
    ) -> Self {
        assert!(active_prefix <= order.len());
        assert_eq!(order.len(), by_weight.len());
        assert_eq!(position.len(), hypergraph.edge_count());
        assert_eq!(weights.len(), hypergraph.edge_count());
        debug_assert!(order[..active_prefix].iter().all(|&e| weights[e] > 0.0));
        WeightedView {
            hypergraph,
            order,
            by_weight,
            position,
            weights,
            active_prefix,
        }
    }

    pub fn hypergraph(&self) -> &'a UncertainHypergraph {
        self.hypergraph
    }

    pub fn active_prefix(&self) -> usize {
        self.active_prefix
    }

    pub fn weight(&self, edge_id: usize) -> f64 {
        self.weights[edge_id]
    }

    pub fn is_visible(&self, edge_id: usize) -> bool {
        self.position[edge_id] < self.active_prefix
    }

    /// Visible edge ids in solve order.
    pub fn visible_edge_ids(&self) -> &'a [usize] {
        &self.order[..self.active_prefix]
    }

    /// Visible edge ids, heaviest first (ties by id ascending).
    pub fn visible_by_weight(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_weight.iter().copied().filter(|&e| self.is_visible(e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatcherError {
    #[error("edge {edge_id} has cardinality {cardinality}; the exact engine handles graphs only")]
    UnsupportedCardinality { edge_id: usize, cardinality: usize },
}

/// A black-box matching engine with a declared approximation constant.
///
/// Implementations must be deterministic (identical views give
/// identical matchings) and must return node-disjoint edges drawn from
/// the visible prefix.
pub trait MatchingOracle {
    fn matching(&self, view: &WeightedView<'_>) -> Result<Matching, MatcherError>;

    /// The constant `c` in `(0, 1]` such that the returned matching
    /// weighs at least `c` times the optimum, for instances of the
    /// given rank.
    fn approximation_ratio(&self, rank: usize) -> f64;

    fn name(&self) -> &'static str;
}

/// Scans visible edges by descending weight, adding each whose nodes
/// are all still free. `1/k`-approximate on rank-`k` hypergraphs;
/// linear per call thanks to the view's presorted order.
pub fn greedy_matching(view: &WeightedView<'_>) -> Matching {
    let h = view.hypergraph();
    let mut covered = vec![false; h.node_count()];
    let mut chosen = Vec::new();
    for edge_id in view.visible_by_weight() {
        let nodes = &h.edge(edge_id).nodes;
        if nodes.iter().all(|v| !covered[v.index()]) {
            for v in nodes {
                covered[v.index()] = true;
            }
            chosen.push(edge_id);
        }
    }
    Matching::from_edge_ids(h, chosen).expect("greedy picks disjoint edges")
}

/// Exact maximum-weight matching on the visible prefix via the blossom
/// method. Every visible edge must have cardinality 2.
pub fn exact_graph_matching(view: &WeightedView<'_>) -> Result<Matching, MatcherError> {
    let h = view.hypergraph();
    for &edge_id in view.visible_edge_ids() {
        let cardinality = h.edge(edge_id).cardinality();
        if cardinality != 2 {
            return Err(MatcherError::UnsupportedCardinality { edge_id, cardinality });
        }
    }

    // Among parallel edges keep the heaviest (lowest id on ties); the
    // rest can never enter a maximum-weight matching.
    let mut best_for_pair: HashMap<(u32, u32), usize> = HashMap::new();
    let mut visible: Vec<usize> = view.visible_edge_ids().to_vec();
    visible.sort_unstable();
    for &edge_id in &visible {
        let e = h.edge(edge_id);
        let pair = (e.nodes[0].0, e.nodes[1].0);
        best_for_pair
            .entry(pair)
            .and_modify(|cur| {
                if view.weight(edge_id) > view.weight(*cur) {
                    *cur = edge_id;
                }
            })
            .or_insert(edge_id);
    }
    let mut kept: Vec<usize> = best_for_pair.values().copied().collect();
    kept.sort_unstable();

    // Compress to the touched nodes so the solver cost scales with the
    // prefix, not the whole node universe.
    let mut dense_of: HashMap<u32, usize> = HashMap::new();
    let mut edges = Vec::with_capacity(kept.len());
    for &edge_id in &kept {
        let e = h.edge(edge_id);
        let next = dense_of.len();
        let u = *dense_of.entry(e.nodes[0].0).or_insert(next);
        let next = dense_of.len();
        let v = *dense_of.entry(e.nodes[1].0).or_insert(next);
        edges.push((u, v, view.weight(edge_id)));
    }

    let mate = blossom::maximum_weight_matching(dense_of.len(), &edges);
    let mut chosen = Vec::new();
    for (&edge_id, &(u, v, _)) in kept.iter().zip(&edges) {
        if mate[u] == v {
            chosen.push(edge_id);
        }
    }
    Ok(Matching::from_edge_ids(h, chosen).expect("blossom mates are disjoint"))
}

/// The greedy engine as a pluggable oracle.
#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyMatcher;

impl MatchingOracle for GreedyMatcher {
    fn matching(&self, view: &WeightedView<'_>) -> Result<Matching, MatcherError> {
        Ok(greedy_matching(view))
    }

    fn approximation_ratio(&self, rank: usize) -> f64 {
        1.0 / rank.max(1) as f64
    }

    fn name(&self) -> &'static str {
        "greedy"
    }
}

/// The exact blossom engine as a pluggable oracle (graphs only).
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactMatcher;

impl MatchingOracle for ExactMatcher {
    fn matching(&self, view: &WeightedView<'_>) -> Result<Matching, MatcherError> {
        exact_graph_matching(view)
    }

    fn approximation_ratio(&self, _rank: usize) -> f64 {
        1.0
    }

    fn name(&self) -> &'static str {
        "exact"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::EdgeDistribution;

    /// Order/view scaffolding equivalent to the solver's, for tests.
    pub(crate) struct TestOrder {
        order: Vec<usize>,
        by_weight: Vec<usize>,
        position: Vec<usize>,
        weights: Vec<f64>,
    }

    impl TestOrder {
        pub(crate) fn by_mean_reward(h: &UncertainHypergraph) -> Self {
            let order: Vec<usize> = (0..h.edge_count()).collect();
            let weights: Vec<f64> = h.edges().iter().map(|e| e.dist.mean_reward()).collect();
            let mut by_weight = order.clone();
            by_weight.sort_by(|&a, &b| {
                weights[b].partial_cmp(&weights[a]).unwrap().then(a.cmp(&b))
            });
            let mut position = vec![usize::MAX; h.edge_count()];
            for (rank, &e) in order.iter().enumerate() {
                position[e] = rank;
            }
            TestOrder { order, by_weight, position, weights }
        }

        pub(crate) fn view<'a>(
            &'a self,
            h: &'a UncertainHypergraph,
            prefix: usize,
        ) -> WeightedView<'a> {
            WeightedView::new(h, &self.order, &self.by_weight, &self.position, &self.weights, prefix)
        }
    }

    fn sure(mean: f64) -> EdgeDistribution {
        EdgeDistribution::Moments { mean, stddev: 0.0 }
    }

    fn path_graph(weights: &[f64]) -> UncertainHypergraph {
        let edges = weights
            .iter()
            .enumerate()
            .map(|(i, &w)| (vec![i as u32, i as u32 + 1], sure(w)))
            .collect();
        UncertainHypergraph::new(weights.len() + 1, edges).unwrap()
    }

    #[test]
    fn greedy_takes_disjoint_heavy_pair() {
        let h = path_graph(&[3.0, 2.0, 3.0]);
        let ord = TestOrder::by_mean_reward(&h);
        let m = greedy_matching(&ord.view(&h, 3));
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(h.matching_reward(&m), 6.0);
    }

    #[test]
    fn greedy_is_half_approximate_on_bad_path() {
        let h = path_graph(&[2.0, 3.0, 2.0]);
        let ord = TestOrder::by_mean_reward(&h);
        let m = greedy_matching(&ord.view(&h, 3));
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![1]);
        assert_eq!(h.matching_reward(&m), 3.0); // optimum is 4
    }

    #[test]
    fn greedy_single_visible_edge() {
        let h = path_graph(&[2.0, 3.0, 2.0]);
        let ord = TestOrder::by_mean_reward(&h);
        let m = greedy_matching(&ord.view(&h, 1));
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn greedy_empty_prefix() {
        let h = path_graph(&[1.0]);
        let ord = TestOrder::by_mean_reward(&h);
        assert!(greedy_matching(&ord.view(&h, 0)).is_empty());
    }

    #[test]
    fn exact_resolves_conflict_at_shared_node() {
        // Edges share node 0; the heavier one wins alone.
        let h = UncertainHypergraph::new(
            4,
            vec![(vec![0, 2], sure(1.0)), (vec![0, 1], sure(1.5))],
        )
        .unwrap();
        let ord = TestOrder::by_mean_reward(&h);
        let m = exact_graph_matching(&ord.view(&h, 2)).unwrap();
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn exact_switches_to_disjoint_pair_when_third_edge_appears() {
        let h = UncertainHypergraph::new(
            4,
            vec![
                (vec![0, 2], sure(1.0)),
                (vec![0, 1], sure(1.5)),
                (vec![1, 3], sure(1.0)),
            ],
        )
        .unwrap();
        let ord = TestOrder::by_mean_reward(&h);
        let m = exact_graph_matching(&ord.view(&h, 3)).unwrap();
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(h.matching_reward(&m), 2.0);
    }

    #[test]
    fn exact_on_triangle() {
        let h = UncertainHypergraph::new(
            3,
            vec![
                (vec![0, 1], sure(5.0)),
                (vec![1, 2], sure(4.0)),
                (vec![0, 2], sure(3.0)),
            ],
        )
        .unwrap();
        let ord = TestOrder::by_mean_reward(&h);
        let m = exact_graph_matching(&ord.view(&h, 3)).unwrap();
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![0]);
        assert_eq!(h.matching_reward(&m), 5.0);
    }

    #[test]
    fn exact_rejects_hyperedges() {
        let h = UncertainHypergraph::new(3, vec![(vec![0, 1, 2], sure(1.0))]).unwrap();
        let ord = TestOrder::by_mean_reward(&h);
        assert_eq!(
            exact_graph_matching(&ord.view(&h, 1)).unwrap_err(),
            MatcherError::UnsupportedCardinality { edge_id: 0, cardinality: 3 }
        );
    }

    #[test]
    fn exact_handles_parallel_edges() {
        let h = UncertainHypergraph::new(
            4,
            vec![
                (vec![0, 1], sure(2.0)),
                (vec![0, 1], sure(5.0)),
                (vec![2, 3], sure(1.0)),
            ],
        )
        .unwrap();
        let ord = TestOrder::by_mean_reward(&h);
        let m = exact_graph_matching(&ord.view(&h, 3)).unwrap();
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![1, 2]);
    }
}
