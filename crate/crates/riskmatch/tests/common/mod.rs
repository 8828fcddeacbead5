//! Random instance builders shared by the integration suites.

#![allow(dead_code)]

use rand::Rng;
use riskmatch::generators::SeededRng;
use riskmatch::hypergraph::{EdgeDistribution, UncertainHypergraph};

/// Plain weighted graph with sure (zero-risk) dyadic-rational rewards:
/// sums and halvings of multiples of 1/8 stay exact in f64, so optimal
/// matching weights compare bitwise against the brute-force oracle.
pub fn random_sure_graph(rng: &mut SeededRng, max_n: usize, max_m: usize) -> UncertainHypergraph {
    let n = rng.random_range(2..=max_n);
    let m = rng.random_range(1..=max_m);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (u, v) = random_pair(rng, n);
        let mean = rng.random_range(1..=800) as f64 / 8.0;
        edges.push((vec![u, v], EdgeDistribution::Moments { mean, stddev: 0.0 }));
    }
    UncertainHypergraph::new(n, edges).unwrap()
}

/// Graph with mixed Bernoulli/Gaussian/moment edges, including sure
/// (p = 1) and worthless (mean <= 0) ones to exercise filtering.
pub fn random_uncertain_graph(
    rng: &mut SeededRng,
    max_n: usize,
    max_m: usize,
) -> UncertainHypergraph {
    let n = rng.random_range(2..=max_n);
    let m = rng.random_range(1..=max_m);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (u, v) = random_pair(rng, n);
        edges.push((vec![u, v], random_distribution(rng)));
    }
    UncertainHypergraph::new(n, edges).unwrap()
}

/// Hypergraph with edge cardinalities up to `max_k`.
pub fn random_uncertain_hypergraph(
    rng: &mut SeededRng,
    max_n: usize,
    max_m: usize,
    max_k: usize,
) -> UncertainHypergraph {
    let n = rng.random_range(2.max(max_k)..=max_n);
    let m = rng.random_range(1..=max_m);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let k = rng.random_range(1..=max_k.min(n));
        let mut nodes = std::collections::BTreeSet::new();
        while nodes.len() < k {
            nodes.insert(rng.random_range(0..n as u32));
        }
        edges.push((nodes.into_iter().collect(), random_distribution(rng)));
    }
    UncertainHypergraph::new(n, edges).unwrap()
}

fn random_pair(rng: &mut SeededRng, n: usize) -> (u32, u32) {
    let u = rng.random_range(0..n as u32);
    let mut v = rng.random_range(0..n as u32);
    while v == u {
        v = rng.random_range(0..n as u32);
    }
    (u.min(v), u.max(v))
}

fn random_distribution(rng: &mut SeededRng) -> EdgeDistribution {
    match rng.random_range(0..3) {
        0 => {
            let prob = if rng.random::<f64>() < 0.15 {
                1.0
            } else {
                rng.random_range(0.05..1.0)
            };
            EdgeDistribution::Bernoulli { weight: rng.random_range(0.5..100.0), prob }
        }
        1 => EdgeDistribution::Gaussian {
            mean: rng.random_range(-5.0..100.0),
            variance: rng.random_range(0.0..25.0),
        },
        _ => EdgeDistribution::Moments {
            mean: rng.random_range(-5.0..100.0),
            stddev: rng.random_range(0.0..5.0),
        },
    }
}

/// Sum of all edges' risk contributions: a natural upper end for
/// random budgets.
pub fn total_risk(h: &UncertainHypergraph, measure: riskmatch::hypergraph::RiskMeasure) -> f64 {
    h.edges().iter().map(|e| e.dist.risk_contribution(measure)).sum()
}

/// Smallest allowed matcher-call count bound, `2 ceil(log2 m) + 2`.
pub fn call_budget(m: usize) -> usize {
    if m <= 1 {
        return 2;
    }
    let ceil_log2 = usize::BITS as usize - (m - 1).leading_zeros() as usize;
    2 * ceil_log2 + 2
}
