//! Core domain types: uncertain hyperedges, hypergraphs, risk measures,
//! and matching evaluation.
//!
//! All types here are immutable values after construction; hypergraphs
//! may be shared freely across threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Index of a node in the dense universe `[0, n)` of a hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Per-hyperedge reward law. Algorithms consume only the first two
/// moments, so arbitrary distributions enter through [`EdgeDistribution::Moments`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeDistribution {
    /// The edge exists with probability `prob` and then pays `weight`;
    /// otherwise it pays nothing.
    Bernoulli { weight: f64, prob: f64 },
    /// The reward is normally distributed.
    Gaussian { mean: f64, variance: f64 },
    /// Any distribution, reduced to its mean and standard deviation.
    Moments { mean: f64, stddev: f64 },
}

impl EdgeDistribution {
    /// Expected reward of the edge.
    pub fn mean_reward(&self) -> f64 {
        match *self {
            EdgeDistribution::Bernoulli { weight, prob } => prob * weight,
            EdgeDistribution::Gaussian { mean, .. } => mean,
            EdgeDistribution::Moments { mean, .. } => mean,
        }
    }

    /// Standard deviation of the edge's reward.
    pub fn stddev(&self) -> f64 {
        match *self {
            EdgeDistribution::Bernoulli { weight, prob } => weight * (prob * (1.0 - prob)).sqrt(),
            EdgeDistribution::Gaussian { variance, .. } => variance.sqrt(),
            EdgeDistribution::Moments { stddev, .. } => stddev,
        }
    }

    /// The edge's contribution to the total risk of a matching under
    /// the given measure.
    pub fn risk_contribution(&self, measure: RiskMeasure) -> f64 {
        let s = self.stddev();
        match measure {
            RiskMeasure::StdDev => s,
            RiskMeasure::Variance => s * s,
        }
    }

    /// Reward-to-risk ratio used to order edges. Zero-risk edges have
    /// infinite ratio.
    ///
    /// Only defined for edges with positive expected reward; calling
    /// this on an edge with `mean_reward() <= 0` is a contract
    /// violation and panics.
    pub fn alpha(&self, measure: RiskMeasure) -> f64 {
        let reward = self.mean_reward();
        assert!(
            reward > 0.0,
            "alpha is only defined for edges with positive expected reward (got {reward})"
        );
        let risk = self.risk_contribution(measure);
        if risk == 0.0 {
            f64::INFINITY
        } else {
            reward / risk
        }
    }
}

/// Aggregate risk functional over a matching: sum of standard
/// deviations, or sum of variances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RiskMeasure {
    StdDev,
    Variance,
}

impl fmt::Display for RiskMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RiskMeasure::StdDev => write!(f, "std"),
            RiskMeasure::Variance => write!(f, "var"),
        }
    }
}

impl FromStr for RiskMeasure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "std" => Ok(RiskMeasure::StdDev),
            "var" => Ok(RiskMeasure::Variance),
            other => Err(format!("unknown risk measure {other:?} (expected std or var)")),
        }
    }
}

/// A hyperedge: a nonempty set of nodes plus a reward distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct UncertainHyperedge {
    /// Dense id, equal to the edge's position in the owning hypergraph.
    pub id: usize,
    /// Member nodes, strictly ascending.
    pub nodes: Vec<NodeId>,
    pub dist: EdgeDistribution,
}

impl UncertainHyperedge {
    pub fn cardinality(&self) -> usize {
        self.nodes.len()
    }
}

/// One violated type invariant, reported by [`UncertainHypergraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// The offending edge, or `None` for graph-level problems.
    pub edge_id: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.edge_id {
            Some(id) => write!(f, "edge {}: {}", id, self.message),
            None => write!(f, "graph: {}", self.message),
        }
    }
}

/// An uncertain weighted hypergraph: `n` nodes and a list of hyperedges
/// indexed by dense id.
#[derive(Debug, Clone, PartialEq)]
pub struct UncertainHypergraph {
    n: usize,
    edges: Vec<UncertainHyperedge>,
    rank: usize,
}

impl UncertainHypergraph {
    /// Builds a hypergraph and checks every type invariant, sorting
    /// each edge's node list first. Duplicate nodes within an edge,
    /// out-of-range node indices, and invalid distribution parameters
    /// are all reported.
    pub fn new(
        n: usize,
        edges: Vec<(Vec<u32>, EdgeDistribution)>,
    ) -> Result<Self, Vec<Violation>> {
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(id, (mut nodes, dist))| {
                nodes.sort_unstable();
                UncertainHyperedge {
                    id,
                    nodes: nodes.into_iter().map(NodeId).collect(),
                    dist,
                }
            })
            .collect();
        let h = Self::from_parts(n, edges);
        let violations = h.validate();
        if violations.is_empty() {
            Ok(h)
        } else {
            Err(violations)
        }
    }

    /// Builds a hypergraph without checking invariants. Edge ids are
    /// reassigned to match positions. Use [`UncertainHypergraph::validate`]
    /// to inspect the result.
    pub fn from_parts(n: usize, mut edges: Vec<UncertainHyperedge>) -> Self {
        for (id, edge) in edges.iter_mut().enumerate() {
            edge.id = id;
        }
        let rank = edges.iter().map(|e| e.nodes.len()).max().unwrap_or(0);
        UncertainHypergraph { n, edges, rank }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Maximum hyperedge cardinality (0 for an edgeless graph).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &[UncertainHyperedge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &UncertainHyperedge {
        &self.edges[id]
    }

    /// True when every edge follows a weighted Bernoulli law.
    pub fn is_all_bernoulli(&self) -> bool {
        self.edges
            .iter()
            .all(|e| matches!(e.dist, EdgeDistribution::Bernoulli { .. }))
    }

    /// Checks every type invariant and returns the violations found
    /// (empty means the graph is well-formed).
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut report = |edge_id, message: String| {
            out.push(Violation {
                edge_id,
                message,
            })
        };
        for (pos, edge) in self.edges.iter().enumerate() {
            let id = Some(pos);
            if edge.id != pos {
                report(id, format!("edge id {} does not match position {}", edge.id, pos));
            }
            if edge.nodes.is_empty() {
                report(id, "hyperedge has no nodes".to_string());
            }
            for pair in edge.nodes.windows(2) {
                if pair[0] == pair[1] {
                    report(id, format!("duplicate node {}", pair[0]));
                } else if pair[0] > pair[1] {
                    report(id, format!("nodes not ascending ({} after {})", pair[1], pair[0]));
                }
            }
            for &node in &edge.nodes {
                if node.index() >= self.n {
                    report(id, format!("node {} out of range (n = {})", node, self.n));
                }
            }
            match edge.dist {
                EdgeDistribution::Bernoulli { weight, prob } => {
                    if prob.is_nan() || prob <= 0.0 || prob > 1.0 {
                        report(id, format!("probability {prob} outside (0, 1]"));
                    }
                    if weight <= 0.0 {
                        report(id, format!("weight {weight} is not positive"));
                    }
                    if !weight.is_finite() {
                        report(id, format!("weight {weight} is not finite"));
                    }
                }
                EdgeDistribution::Gaussian { mean, variance } => {
                    if variance < 0.0 {
                        report(id, format!("variance {variance} is negative"));
                    }
                    if !mean.is_finite() || !variance.is_finite() {
                        report(id, "non-finite Gaussian parameter".to_string());
                    }
                }
                EdgeDistribution::Moments { mean, stddev } => {
                    if stddev < 0.0 {
                        report(id, format!("stddev {stddev} is negative"));
                    }
                    if !mean.is_finite() || !stddev.is_finite() {
                        report(id, "non-finite moment parameter".to_string());
                    }
                }
            }
        }
        out
    }

    /// Total expected reward of a matching (0 for the empty matching).
    ///
    /// Panics if the matching references an edge id this graph does not
    /// have; matchings must be built against the same graph.
    pub fn matching_reward(&self, matching: &Matching) -> f64 {
        let total: f64 = matching
            .edge_ids()
            .map(|id| {
                assert!(id < self.edges.len(), "matching references unknown edge {id}");
                self.edges[id].dist.mean_reward()
            })
            .sum();
        total + 0.0 // empty sums yield -0.0
    }

    /// Total risk of a matching under the given measure (0 for the
    /// empty matching). Panics on unknown edge ids, like
    /// [`UncertainHypergraph::matching_reward`].
    pub fn matching_risk(&self, matching: &Matching, measure: RiskMeasure) -> f64 {
        let total: f64 = matching
            .edge_ids()
            .map(|id| {
                assert!(id < self.edges.len(), "matching references unknown edge {id}");
                self.edges[id].dist.risk_contribution(measure)
            })
            .sum();
        total + 0.0 // empty sums yield -0.0
    }
}

/// Why a set of edge ids does not form a matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge id {0} is not in the hypergraph")]
    UnknownEdge(usize),
    #[error("edges {a} and {b} overlap on node {node}")]
    Overlap { a: usize, b: usize, node: NodeId },
}

/// A node-disjoint set of hyperedge ids together with the nodes they
/// cover.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edge_ids: BTreeSet<usize>,
    covered: BTreeSet<NodeId>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching::default()
    }

    /// Builds a matching from edge ids, rejecting unknown ids and
    /// node overlaps. Duplicated ids collapse.
    pub fn from_edge_ids<I>(h: &UncertainHypergraph, ids: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = usize>,
    {
        let edge_ids: BTreeSet<usize> = ids.into_iter().collect();
        let mut owner: BTreeMap<NodeId, usize> = BTreeMap::new();
        for &id in &edge_ids {
            if id >= h.edge_count() {
                return Err(MatchingError::UnknownEdge(id));
            }
            for &node in &h.edge(id).nodes {
                if let Some(&other) = owner.get(&node) {
                    return Err(MatchingError::Overlap { a: other, b: id, node });
                }
                owner.insert(node, id);
            }
        }
        Ok(Matching {
            edge_ids,
            covered: owner.into_keys().collect(),
        })
    }

    /// Member edge ids in ascending order.
    pub fn edge_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.edge_ids.iter().copied()
    }

    pub fn covered_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.covered.iter().copied()
    }

    pub fn contains(&self, edge_id: usize) -> bool {
        self.edge_ids.contains(&edge_id)
    }

    pub fn covers(&self, node: NodeId) -> bool {
        self.covered.contains(&node)
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }
}
