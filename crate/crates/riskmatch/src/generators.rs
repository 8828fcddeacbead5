//! Seeded synthetic uncertain-graph construction: Erdős–Rényi and
//! Barabási–Albert topologies with sampled weights/probabilities
//! (Bernoulli graphs) or means/variances (Gaussian graphs).
//!
//! Everything is driven by [`SeededRng`] so that identical seeds and
//! parameters reproduce identical hypergraphs byte for byte.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::hypergraph::{EdgeDistribution, UncertainHypergraph};

/// Deterministic stream generator: ChaCha8 keyed from a 64-bit seed.
/// The same seed yields the same stream on every platform.
#[derive(Debug, Clone)]
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl RngCore for SeededRng {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.0.fill_bytes(dest)
    }
}

/// Derives independent child seeds from a master seed (SplitMix64 over
/// the child index), e.g. for repeated generation runs per
/// configuration.
pub fn derived_seeds(master: u64, count: usize) -> Vec<u64> {
    (0..count as u64)
        .map(|i| {
            let mut z = master
                .wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(i.wrapping_add(1)));
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^ (z >> 31)
        })
        .collect()
}

/// A real interval with individually open or closed ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_inclusive: bool,
    pub hi_inclusive: bool,
}

impl Interval {
    pub fn open(lo: f64, hi: f64) -> Self {
        Interval { lo, hi, lo_inclusive: false, hi_inclusive: false }
    }

    pub fn closed(lo: f64, hi: f64) -> Self {
        Interval { lo, hi, lo_inclusive: true, hi_inclusive: true }
    }

    /// (lo, hi]
    pub fn open_closed(lo: f64, hi: f64) -> Self {
        Interval { lo, hi, lo_inclusive: false, hi_inclusive: true }
    }

    /// [lo, hi)
    pub fn closed_open(lo: f64, hi: f64) -> Self {
        Interval { lo, hi, lo_inclusive: true, hi_inclusive: false }
    }

    pub fn all() -> Self {
        Interval::open(f64::NEG_INFINITY, f64::INFINITY)
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_inclusive { x >= self.lo } else { x > self.lo };
        let below = if self.hi_inclusive { x <= self.hi } else { x < self.hi };
        above && below
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        let lo_ok = self.lo > other.lo
            || (self.lo == other.lo && (other.lo_inclusive || !self.lo_inclusive));
        let hi_ok = self.hi < other.hi
            || (self.hi == other.hi && (other.hi_inclusive || !self.hi_inclusive));
        lo_ok && hi_ok
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_inclusive { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_inclusive { ']' } else { ')' },
        )
    }
}

const MAX_REJECTIONS: u32 = 100_000;

/// Value sampler with a declared domain; every emitted value lies in
/// the domain (Gaussian draws are rejection-sampled into it, which
/// preserves the distribution's shape on-domain).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sampler {
    /// Uniform over the open interval `(lo, hi)`.
    UniformRange { lo: f64, hi: f64 },
    GaussianClipped { mu: f64, sigma: f64, domain: Interval },
}

impl Sampler {
    /// A degenerate sampler that always returns `value`.
    pub fn constant(value: f64) -> Self {
        Sampler::GaussianClipped { mu: value, sigma: 0.0, domain: Interval::closed(value, value) }
    }

    /// Parses `uniform:LO:HI`, `gauss:MU:SIGMA`, or `const:V`. Gaussian
    /// samplers clip into `domain`; the others must fit inside it.
    pub fn parse(spec: &str, domain: Interval) -> Result<Self, String> {
        let parts: Vec<&str> = spec.split(':').collect();
        let num = |s: &str| -> Result<f64, String> {
            s.parse::<f64>().map_err(|_| format!("{s:?} is not a number"))
        };
        let sampler = match parts.as_slice() {
            ["uniform", lo, hi] => {
                let (lo, hi) = (num(lo)?, num(hi)?);
                if !lo.is_finite() || !hi.is_finite() || lo >= hi {
                    return Err(format!("empty range {lo}..{hi}"));
                }
                Sampler::UniformRange { lo, hi }
            }
            ["gauss", mu, sigma] => {
                let (mu, sigma) = (num(mu)?, num(sigma)?);
                if sigma.is_nan() || sigma < 0.0 {
                    return Err(format!("negative sigma {sigma}"));
                }
                Sampler::GaussianClipped { mu, sigma, domain }
            }
            ["const", v] => Sampler::constant(num(v)?),
            _ => return Err("expected uniform:LO:HI, gauss:MU:SIGMA, or const:V".to_string()),
        };
        if !sampler.domain().is_subset_of(&domain) {
            return Err(format!("domain {} must lie inside {domain}", sampler.domain()));
        }
        Ok(sampler)
    }

    pub fn domain(&self) -> Interval {
        match *self {
            Sampler::UniformRange { lo, hi } => Interval::open(lo, hi),
            Sampler::GaussianClipped { domain, .. } => domain,
        }
    }

    pub fn sample(&self, rng: &mut SeededRng) -> f64 {
        match *self {
            Sampler::UniformRange { lo, hi } => {
                assert!(lo < hi, "uniform range must be non-degenerate");
                for _ in 0..MAX_REJECTIONS {
                    let x = rng.random_range(lo..hi);
                    if x > lo {
                        return x;
                    }
                }
                panic!("uniform sampler kept hitting the open endpoint");
            }
            Sampler::GaussianClipped { mu, sigma, domain } => {
                let normal = Normal::new(mu, sigma).expect("sigma must be non-negative");
                for _ in 0..MAX_REJECTIONS {
                    let x = normal.sample(rng);
                    if domain.contains(x) {
                        return x;
                    }
                }
                panic!(
                    "gaussian sampler N({mu}, {sigma}^2) rejected {MAX_REJECTIONS} draws outside {domain}"
                );
            }
        }
    }
}

/// A plain edge list over `n` nodes, prior to attaching distributions.
/// Pairs are stored `(low, high)` in generation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

/// Erdős–Rényi G(n, p): each of the C(n, 2) pairs is included
/// independently with probability `p`, scanned in lexicographic order.
pub fn gnp_topology(n: usize, p: f64, rng: &mut SeededRng) -> Topology {
    assert!(n >= 1, "need at least one node");
    assert!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Topology { n, edges }
}

/// Barabási–Albert preferential attachment: a complete seed graph on
/// `m_attach + 1` nodes, then each new node attaches to `m_attach`
/// distinct existing nodes chosen proportionally to their degree at
/// arrival time.
pub fn ba_topology(n: usize, m_attach: usize, rng: &mut SeededRng) -> Topology {
    assert!(m_attach >= 1, "each node must attach at least one edge");
    assert!(n > m_attach, "need more nodes than attachments");
    let mut edges = Vec::new();
    // Every edge contributes both endpoints; picking a uniform element
    // of this list is degree-proportional selection.
    let mut repeated: Vec<u32> = Vec::new();
    let seed_size = (m_attach + 1).min(n) as u32;
    for i in 0..seed_size {
        for j in (i + 1)..seed_size {
            edges.push((i, j));
            repeated.push(i);
            repeated.push(j);
        }
    }
    for v in seed_size..n as u32 {
        let mut targets: Vec<u32> = Vec::with_capacity(m_attach);
        while targets.len() < m_attach {
            let candidate = repeated[rng.random_range(0..repeated.len())];
            if !targets.contains(&candidate) {
                targets.push(candidate);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            repeated.push(t);
            repeated.push(v);
        }
    }
    Topology { n, edges }
}

/// Attaches weighted Bernoulli distributions to a topology, sampling a
/// weight then a probability per edge, in edge order.
pub fn attach_bernoulli(
    topology: &Topology,
    weight_sampler: &Sampler,
    prob_sampler: &Sampler,
    rng: &mut SeededRng,
) -> UncertainHypergraph {
    assert!(
        weight_sampler.domain().is_subset_of(&Interval::open(0.0, f64::INFINITY)),
        "weight sampler domain {} must lie in (0, inf)",
        weight_sampler.domain()
    );
    assert!(
        prob_sampler.domain().is_subset_of(&Interval::open_closed(0.0, 1.0)),
        "probability sampler domain {} must lie in (0, 1]",
        prob_sampler.domain()
    );
    let edges = topology
        .edges
        .iter()
        .map(|&(a, b)| {
            let weight = weight_sampler.sample(rng);
            let prob = prob_sampler.sample(rng);
            (vec![a, b], EdgeDistribution::Bernoulli { weight, prob })
        })
        .collect();
    UncertainHypergraph::new(topology.n, edges).expect("sampled graph is well-formed")
}

/// Attaches Gaussian distributions to a topology, sampling a mean then
/// a variance per edge, in edge order.
pub fn attach_gaussian(
    topology: &Topology,
    mean_sampler: &Sampler,
    var_sampler: &Sampler,
    rng: &mut SeededRng,
) -> UncertainHypergraph {
    assert!(
        var_sampler.domain().is_subset_of(&Interval::closed(0.0, f64::INFINITY)),
        "variance sampler domain {} must lie in [0, inf)",
        var_sampler.domain()
    );
    let edges = topology
        .edges
        .iter()
        .map(|&(a, b)| {
            let mean = mean_sampler.sample(rng);
            let variance = var_sampler.sample(rng);
            (vec![a, b], EdgeDistribution::Gaussian { mean, variance })
        })
        .collect();
    UncertainHypergraph::new(topology.n, edges).expect("sampled graph is well-formed")
}
