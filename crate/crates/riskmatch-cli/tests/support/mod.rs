//! Shared fixtures, random instance builders, and binary runners for
//! the CLI test suites.

#![allow(dead_code)]

use std::path::Path;
use std::process::Output;

use rand::Rng;
use riskmatch::generators::SeededRng;
use riskmatch::hypergraph::{EdgeDistribution, UncertainHypergraph};

/// Four-cycle with two risky high-reward edges (ids 0, 1) and two sure
/// low-reward side edges (ids 2, 3): max expected reward 100 against a
/// zero-risk alternative worth 80.
pub fn risky_square() -> UncertainHypergraph {
    UncertainHypergraph::new(
        4,
        vec![
            (vec![0, 1], EdgeDistribution::Bernoulli { weight: 100.0, prob: 0.5 }),
            (vec![2, 3], EdgeDistribution::Bernoulli { weight: 100.0, prob: 0.5 }),
            (vec![0, 2], EdgeDistribution::Bernoulli { weight: 40.0, prob: 1.0 }),
            (vec![1, 3], EdgeDistribution::Bernoulli { weight: 40.0, prob: 1.0 }),
        ],
    )
    .unwrap()
}

pub const RISKY_SQUARE_FILE: &str = "uhg 1 4 4\nbern 0.5 100 0 1\nbern 0.5 100 2 3\nbern 1 40 0 2\nbern 1 40 1 3\n";

/// Four-cycle annotated by (mean, stddev): ratio order is edge 2, 0,
/// 3, 1 and the prefix matchings have risks 0.1, 0.5, 0.45.
pub fn annotated_square() -> UncertainHypergraph {
    UncertainHypergraph::new(
        4,
        vec![
            (vec![0, 1], EdgeDistribution::Moments { mean: 1.5, stddev: 0.5 }),
            (vec![2, 3], EdgeDistribution::Moments { mean: 0.1, stddev: 1.0 }),
            (vec![0, 2], EdgeDistribution::Moments { mean: 1.0, stddev: 0.1 }),
            (vec![1, 3], EdgeDistribution::Moments { mean: 1.0, stddev: 0.35 }),
        ],
    )
    .unwrap()
}

pub const ANNOTATED_SQUARE_FILE: &str =
    "uhg 1 4 4\nmom 1.5 0.5 0 1\nmom 0.1 1 2 3\nmom 1 0.1 0 2\nmom 1 0.35 1 3\n";

pub fn random_pair(rng: &mut SeededRng, n: usize) -> (u32, u32) {
    let u = rng.random_range(0..n as u32);
    let mut v = rng.random_range(0..n as u32);
    while v == u {
        v = rng.random_range(0..n as u32);
    }
    (u.min(v), u.max(v))
}

pub fn random_distribution(rng: &mut SeededRng) -> EdgeDistribution {
    match rng.random_range(0..2) {
        0 => {
            let prob = if rng.random::<f64>() < 0.15 {
                1.0
            } else {
                rng.random_range(0.05..1.0)
            };
            EdgeDistribution::Bernoulli { weight: rng.random_range(0.5..100.0), prob }
        }
        _ => EdgeDistribution::Gaussian {
            mean: rng.random_range(-5.0..100.0),
            variance: rng.random_range(0.0..25.0),
        },
    }
}

/// Mixed Bernoulli/Gaussian graph, n <= max_n, m <= max_m.
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

/// Mixed-distribution hypergraph with edge cardinalities up to max_k.
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

/// Graph with sure dyadic-rational rewards so weight sums are exact.
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

pub fn total_risk(h: &UncertainHypergraph, measure: riskmatch::hypergraph::RiskMeasure) -> f64 {
    h.edges().iter().map(|e| e.dist.risk_contribution(measure)).sum()
}

pub fn call_budget(m: usize) -> usize {
    if m <= 1 {
        return 2;
    }
    let ceil_log2 = usize::BITS as usize - (m - 1).leading_zeros() as usize;
    2 * ceil_log2 + 2
}

pub fn run_bin(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_riskmatch"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn run_bin_ok(args: &[&str]) -> Output {
    let out = run_bin(args);
    assert!(
        out.status.success(),
        "`riskmatch {}` failed:\n{}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}
