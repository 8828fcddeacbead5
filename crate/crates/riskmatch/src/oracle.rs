//! Exhaustive baselines for small instances.
//!
//! Everything here enumerates node-disjoint edge subsets outright and
//! is meant as ground truth for the approximation algorithms, not for
//! real workloads. Inputs beyond the configured budget are refused
//! rather than run unbounded.

use thiserror::Error;

use crate::hypergraph::{Matching, RiskMeasure, UncertainHypergraph};

/// Caps on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Maximum number of edges in the instance.
    pub max_edges: usize,
    /// Maximum number of include/exclude decisions explored.
    pub max_states: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        // 22 edges keep the worst case (all edges pairwise disjoint)
        // around 4M subsets; node conflicts prune typical cases far
        // below that.
        EnumerationBudget {
            max_edges: 22,
            max_states: 64_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance has {edges} edges, over the enumeration cap of {max}")]
    TooManyEdges { edges: usize, max: usize },
    #[error("enumeration exceeded the state budget of {max}")]
    StateBudgetExceeded { max: u64 },
}

struct Enumerator<'a, F> {
    h: &'a UncertainHypergraph,
    covered: Vec<bool>,
    chosen: Vec<usize>,
    states: u64,
    max_states: u64,
    visit: F,
}

impl<F: FnMut(&[usize])> Enumerator<'_, F> {
    fn run(&mut self, next: usize) -> Result<(), OracleError> {
        self.states += 1;
        if self.states > self.max_states {
            return Err(OracleError::StateBudgetExceeded { max: self.max_states });
        }
        if next == self.h.edge_count() {
            (self.visit)(&self.chosen);
            return Ok(());
        }
        // Exclude edge `next`.
        self.run(next + 1)?;
        // Include it if none of its nodes is taken.
        let nodes = &self.h.edge(next).nodes;
        if nodes.iter().all(|v| !self.covered[v.index()]) {
            for v in nodes {
                self.covered[v.index()] = true;
            }
            self.chosen.push(next);
            self.run(next + 1)?;
            self.chosen.pop();
            for v in nodes {
                self.covered[v.index()] = false;
            }
        }
        Ok(())
    }
}

/// Depth-first inclusion/exclusion over edge ids, calling `visit` once
/// per node-disjoint edge subset (the empty matching included) with the
/// member ids in ascending order.
pub fn for_each_matching<F>(
    h: &UncertainHypergraph,
    budget: EnumerationBudget,
    visit: F,
) -> Result<(), OracleError>
where
    F: FnMut(&[usize]),
{
    if h.edge_count() > budget.max_edges {
        return Err(OracleError::TooManyEdges {
            edges: h.edge_count(),
            max: budget.max_edges,
        });
    }
    let mut e = Enumerator {
        h,
        covered: vec![false; h.node_count()],
        chosen: Vec::with_capacity(h.edge_count()),
        states: 0,
        max_states: budget.max_states,
        visit,
    };
    e.run(0)
}

/// Materializes every matching of the instance.
pub fn enumerate_matchings(
    h: &UncertainHypergraph,
    budget: EnumerationBudget,
) -> Result<Vec<Matching>, OracleError> {
    let mut out = Vec::new();
    for_each_matching(h, budget, |ids| {
        out.push(Matching::from_edge_ids(h, ids.iter().copied()).expect("enumerated set is a matching"));
    })?;
    Ok(out)
}

/// Exact optimum of the bounded-risk problem: among all matchings with
/// risk at most `b`, one with maximum expected reward. Reward ties go
/// to the lexicographically smallest edge-id set, so the result is
/// deterministic.
pub fn brute_force_brmwm(
    h: &UncertainHypergraph,
    b: f64,
    measure: RiskMeasure,
    budget: EnumerationBudget,
) -> Result<(Matching, f64), OracleError> {
    let rewards: Vec<f64> = h.edges().iter().map(|e| e.dist.mean_reward()).collect();
    let risks: Vec<f64> = h
        .edges()
        .iter()
        .map(|e| e.dist.risk_contribution(measure))
        .collect();
    let mut best: Vec<usize> = Vec::new();
    let mut best_reward = f64::NEG_INFINITY;
    for_each_matching(h, budget, |ids| {
        // Sums run in ascending id order, matching `matching_risk` and
        // `matching_reward` exactly.
        let risk: f64 = ids.iter().map(|&id| risks[id]).sum();
        if risk > b {
            return;
        }
        let reward: f64 = ids.iter().map(|&id| rewards[id]).sum();
        if reward > best_reward || (reward == best_reward && ids < best.as_slice()) {
            best_reward = reward;
            best = ids.to_vec();
        }
    })?;
    // The empty matching is always feasible, so a best set exists.
    let matching = Matching::from_edge_ids(h, best).expect("oracle result is a matching");
    let reward = h.matching_reward(&matching);
    Ok((matching, reward))
}

/// Maximum total expected reward over all matchings, no risk bound.
pub fn brute_force_max_matching(
    h: &UncertainHypergraph,
    budget: EnumerationBudget,
) -> Result<(Matching, f64), OracleError> {
    brute_force_brmwm(h, f64::INFINITY, RiskMeasure::StdDev, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::EdgeDistribution;

    fn moments(mean: f64, stddev: f64) -> EdgeDistribution {
        EdgeDistribution::Moments { mean, stddev }
    }

    fn bern(weight: f64, prob: f64) -> EdgeDistribution {
        EdgeDistribution::Bernoulli { weight, prob }
    }

    fn risky_square() -> UncertainHypergraph {
        UncertainHypergraph::new(
            4,
            vec![
                (vec![0, 1], bern(100.0, 0.5)),
                (vec![2, 3], bern(100.0, 0.5)),
                (vec![0, 2], bern(40.0, 1.0)),
                (vec![1, 3], bern(40.0, 1.0)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn triangle_has_four_matchings() {
        let h = UncertainHypergraph::new(
            3,
            vec![
                (vec![0, 1], moments(1.0, 0.0)),
                (vec![1, 2], moments(1.0, 0.0)),
                (vec![0, 2], moments(1.0, 0.0)),
            ],
        )
        .unwrap();
        let all = enumerate_matchings(&h, EnumerationBudget::default()).unwrap();
        assert_eq!(all.len(), 4); // empty plus three singletons
    }

    #[test]
    fn square_has_seven_matchings() {
        let all = enumerate_matchings(&risky_square(), EnumerationBudget::default()).unwrap();
        assert_eq!(all.len(), 7);
        assert_eq!(all.iter().filter(|m| m.len() == 2).count(), 2);
    }

    #[test]
    fn single_edge_has_two_matchings() {
        let h = UncertainHypergraph::new(2, vec![(vec![0, 1], moments(1.0, 0.0))]).unwrap();
        let all = enumerate_matchings(&h, EnumerationBudget::default()).unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn bounded_optimum_on_square() {
        let h = risky_square();
        let budget = EnumerationBudget::default();
        let (_, r100) = brute_force_brmwm(&h, 100.0, RiskMeasure::StdDev, budget).unwrap();
        assert_eq!(r100, 100.0);
        let (m99, r99) = brute_force_brmwm(&h, 99.0, RiskMeasure::StdDev, budget).unwrap();
        assert_eq!(r99, 80.0);
        assert_eq!(m99.edge_ids().collect::<Vec<_>>(), vec![2, 3]);
        let (_, unbounded) = brute_force_max_matching(&h, budget).unwrap();
        assert_eq!(unbounded, 100.0);
    }

    #[test]
    fn annotated_square_prefers_disjoint_pair() {
        // Side pair worth 1 + 1 beats the heavy top edge plus the
        // light bottom one (1.5 + 0.1).
        let h = UncertainHypergraph::new(
            4,
            vec![
                (vec![0, 1], moments(1.5, 0.5)),
                (vec![2, 3], moments(0.1, 1.0)),
                (vec![0, 2], moments(1.0, 0.1)),
                (vec![1, 3], moments(1.0, 0.35)),
            ],
        )
        .unwrap();
        let (m, w) = brute_force_max_matching(&h, EnumerationBudget::default()).unwrap();
        assert_eq!(w, 2.0);
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn path_max_matching_takes_outer_edges() {
        let h = UncertainHypergraph::new(
            4,
            vec![
                (vec![0, 1], moments(2.0, 0.0)),
                (vec![1, 2], moments(3.0, 0.0)),
                (vec![2, 3], moments(2.0, 0.0)),
            ],
        )
        .unwrap();
        let (m, w) = brute_force_max_matching(&h, EnumerationBudget::default()).unwrap();
        assert_eq!(w, 4.0);
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn empty_graph_optimum_is_zero() {
        let h = UncertainHypergraph::new(0, vec![]).unwrap();
        let (m, w) = brute_force_max_matching(&h, EnumerationBudget::default()).unwrap();
        assert!(m.is_empty());
        assert_eq!(w, 0.0);
    }

    #[test]
    fn refuses_oversized_instances() {
        let h = UncertainHypergraph::new(2, vec![(vec![0, 1], moments(1.0, 0.0))]).unwrap();
        let tight = EnumerationBudget { max_edges: 0, max_states: 10 };
        assert_eq!(
            enumerate_matchings(&h, tight).unwrap_err(),
            OracleError::TooManyEdges { edges: 1, max: 0 }
        );
        let starved = EnumerationBudget { max_edges: 22, max_states: 2 };
        assert_eq!(
            enumerate_matchings(&h, starved).unwrap_err(),
            OracleError::StateBudgetExceeded { max: 2 }
        );
    }
}
