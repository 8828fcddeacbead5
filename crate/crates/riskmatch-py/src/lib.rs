//! Python bindings: the uncertain hypergraph, the bounded-risk solver,
//! the exhaustive oracle, and the synthetic generators, exposed as the
//! `riskmatch_py` extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use riskmatch::generators::{
    attach_bernoulli, attach_gaussian, ba_topology, gnp_topology, Interval, Sampler, SeededRng,
};
use riskmatch::hypergraph::{EdgeDistribution, RiskMeasure, UncertainHypergraph as Graph};
use riskmatch::ingest;
use riskmatch::matchers::{ExactMatcher, GreedyMatcher, MatchingOracle};
use riskmatch::oracle::{brute_force_brmwm, EnumerationBudget};
use riskmatch::solver;

fn parse_measure(s: &str) -> PyResult<RiskMeasure> {
    s.parse().map_err(PyValueError::new_err)
}

fn engine_for(name: &str) -> PyResult<&'static dyn MatchingOracle> {
    match name {
        "greedy" => Ok(&GreedyMatcher),
        "exact" => Ok(&ExactMatcher),
        other => Err(PyValueError::new_err(format!(
            "unknown matcher {other:?} (expected greedy or exact)"
        ))),
    }
}

/// Result of one bounded-risk solve.
#[pyclass(name = "SolveOutcome", frozen)]
struct PySolveOutcome {
    #[pyo3(get)]
    edge_ids: Vec<usize>,
    #[pyo3(get)]
    reward: f64,
    #[pyo3(get)]
    risk: f64,
    #[pyo3(get)]
    ell_star: Option<usize>,
    #[pyo3(get)]
    fallback_used: bool,
    #[pyo3(get)]
    matcher_calls: usize,
    #[pyo3(get)]
    runtime_ms: f64,
}

#[pymethods]
impl PySolveOutcome {
    fn __repr__(&self) -> String {
        format!(
            "SolveOutcome(edge_ids={:?}, reward={}, risk={}, ell_star={:?}, fallback_used={})",
            self.edge_ids, self.reward, self.risk, self.ell_star, self.fallback_used
        )
    }
}

impl PySolveOutcome {
    fn from_outcome(out: solver::SolveOutcome) -> Self {
        PySolveOutcome {
            edge_ids: out.matching.edge_ids().collect(),
            reward: out.reward,
            risk: out.risk,
            ell_star: out.ell_star,
            fallback_used: out.fallback_used,
            matcher_calls: out.matcher_calls,
            runtime_ms: out.elapsed.as_secs_f64() * 1e3,
        }
    }
}

/// An uncertain weighted hypergraph: nodes `0..n` and hyperedges whose
/// rewards are random variables known by their first two moments.
#[pyclass(name = "UncertainHypergraph", frozen)]
struct PyUncertainHypergraph {
    inner: Graph,
}

#[pymethods]
impl PyUncertainHypergraph {
    /// Builds a graph from edge tuples:
    /// `("bern", p, w, nodes)`, `("gauss", mean, var, nodes)`, or
    /// `("mom", mean, sd, nodes)`.
    #[new]
    fn new(n: usize, edges: Vec<(String, f64, f64, Vec<u32>)>) -> PyResult<Self> {
        let specs = edges
            .into_iter()
            .map(|(kind, a, b, nodes)| {
                let dist = match kind.as_str() {
                    "bern" => EdgeDistribution::Bernoulli { prob: a, weight: b },
                    "gauss" => EdgeDistribution::Gaussian { mean: a, variance: b },
                    "mom" => EdgeDistribution::Moments { mean: a, stddev: b },
                    other => {
                        return Err(PyValueError::new_err(format!(
                            "unknown edge kind {other:?} (expected bern, gauss, or mom)"
                        )))
                    }
                };
                Ok((nodes, dist))
            })
            .collect::<PyResult<Vec<_>>>()?;
        let inner = Graph::new(n, specs).map_err(|violations| {
            let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            PyValueError::new_err(msgs.join("; "))
        })?;
        Ok(PyUncertainHypergraph { inner })
    }

    /// Parses the `uhg` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner =
            ingest::parse_hypergraph_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyUncertainHypergraph { inner })
    }

    #[getter]
    fn node_count(&self) -> usize {
        self.inner.node_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn edge_nodes(&self, edge_id: usize) -> PyResult<Vec<u32>> {
        self.check_edge(edge_id)?;
        Ok(self.inner.edge(edge_id).nodes.iter().map(|v| v.0).collect())
    }

    fn mean_reward(&self, edge_id: usize) -> PyResult<f64> {
        self.check_edge(edge_id)?;
        Ok(self.inner.edge(edge_id).dist.mean_reward())
    }

    fn stddev(&self, edge_id: usize) -> PyResult<f64> {
        self.check_edge(edge_id)?;
        Ok(self.inner.edge(edge_id).dist.stddev())
    }

    /// Violated invariants as human-readable strings (empty = valid).
    fn validate(&self) -> Vec<String> {
        self.inner.validate().iter().map(|v| v.to_string()).collect()
    }

    /// Canonical text form; `parse` of it reproduces the graph.
    fn to_text(&self) -> String {
        ingest::hypergraph_to_string(&self.inner)
    }

    fn matching_reward(&self, edge_ids: Vec<usize>) -> PyResult<f64> {
        let m = riskmatch::hypergraph::Matching::from_edge_ids(&self.inner, edge_ids)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(self.inner.matching_reward(&m))
    }

    #[pyo3(signature = (edge_ids, measure = "std"))]
    fn matching_risk(&self, edge_ids: Vec<usize>, measure: &str) -> PyResult<f64> {
        let measure = parse_measure(measure)?;
        let m = riskmatch::hypergraph::Matching::from_edge_ids(&self.inner, edge_ids)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(self.inner.matching_risk(&m, measure))
    }

    /// The greedy risk benchmark used to normalize budgets.
    #[pyo3(signature = (measure = "std"))]
    fn b_max(&self, measure: &str) -> PyResult<f64> {
        Ok(solver::compute_b_max(&self.inner, parse_measure(measure)?))
    }

    /// Maximizes expected reward subject to `risk <= B`. Pass exactly
    /// one of `risk_bound` (absolute) and `normalized_risk` (fraction
    /// of `b_max`; note `b_max` is a benchmark, not a supremum).
    #[pyo3(signature = (risk_bound = None, normalized_risk = None, measure = "std", matcher = "greedy"))]
    fn solve(
        &self,
        risk_bound: Option<f64>,
        normalized_risk: Option<f64>,
        measure: &str,
        matcher: &str,
    ) -> PyResult<PySolveOutcome> {
        let measure = parse_measure(measure)?;
        let engine = engine_for(matcher)?;
        let b = match (risk_bound, normalized_risk) {
            (Some(b), None) => {
                if !b.is_finite() || b < 0.0 {
                    return Err(PyValueError::new_err(format!(
                        "risk_bound must be non-negative and finite, got {b}"
                    )));
                }
                b
            }
            (None, Some(bn)) => {
                if !(0.0..=1.0).contains(&bn) {
                    return Err(PyValueError::new_err(format!(
                        "normalized_risk must lie in [0, 1], got {bn}"
                    )));
                }
                bn * solver::compute_b_max(&self.inner, measure)
            }
            _ => {
                return Err(PyValueError::new_err(
                    "pass exactly one of risk_bound and normalized_risk",
                ))
            }
        };
        let out = solver::solve_brmwm(&self.inner, b, measure, engine)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PySolveOutcome::from_outcome(out))
    }

    /// Exhaustive optimum for small instances: `(edge_ids, reward)`.
    #[pyo3(signature = (risk_bound = None, measure = "std", max_edges = 22))]
    fn brute_force(
        &self,
        risk_bound: Option<f64>,
        measure: &str,
        max_edges: usize,
    ) -> PyResult<(Vec<usize>, f64)> {
        let measure = parse_measure(measure)?;
        let budget = EnumerationBudget { max_edges, ..EnumerationBudget::default() };
        let b = risk_bound.unwrap_or(f64::INFINITY);
        let (m, reward) = brute_force_brmwm(&self.inner, b, measure, budget)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok((m.edge_ids().collect(), reward))
    }

    fn __repr__(&self) -> String {
        format!(
            "UncertainHypergraph(n={}, m={}, rank={})",
            self.inner.node_count(),
            self.inner.edge_count(),
            self.inner.rank()
        )
    }
}

impl PyUncertainHypergraph {
    fn check_edge(&self, edge_id: usize) -> PyResult<()> {
        if edge_id >= self.inner.edge_count() {
            return Err(PyValueError::new_err(format!(
                "edge id {edge_id} out of range (m = {})",
                self.inner.edge_count()
            )));
        }
        Ok(())
    }
}

fn sampler(spec: &str, domain: Interval, what: &str) -> PyResult<Sampler> {
    Sampler::parse(spec, domain)
        .map_err(|msg| PyValueError::new_err(format!("{what} sampler {spec:?}: {msg}")))
}

/// Generates a seeded synthetic uncertain graph.
///
/// model: "gnp" (needs p) or "ba" (needs m_attach); dist: "bernoulli"
/// (weights/probs samplers) or "gaussian" (means/vars samplers).
/// Sampler specs: "uniform:LO:HI", "gauss:MU:SIGMA", "const:V".
#[pyfunction]
#[pyo3(signature = (
    model, n, p = None, m_attach = None, dist = "bernoulli", seed = 0,
    weights = "uniform:0:1000", probs = "uniform:0:1",
    means = "uniform:0:1000", vars = "uniform:0:100",
))]
#[allow(clippy::too_many_arguments)]
fn generate(
    model: &str,
    n: usize,
    p: Option<f64>,
    m_attach: Option<usize>,
    dist: &str,
    seed: u64,
    weights: &str,
    probs: &str,
    means: &str,
    vars: &str,
) -> PyResult<PyUncertainHypergraph> {
    let mut rng = SeededRng::new(seed);
    let topology = match model {
        "gnp" => {
            let p = p.ok_or_else(|| PyValueError::new_err("model gnp requires p"))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(PyValueError::new_err(format!("p must lie in [0, 1], got {p}")));
            }
            gnp_topology(n.max(1), p, &mut rng)
        }
        "ba" => {
            let m = m_attach.ok_or_else(|| PyValueError::new_err("model ba requires m_attach"))?;
            if !(1..n).contains(&m) {
                return Err(PyValueError::new_err(format!(
                    "m_attach must lie in [1, n), got {m} with n = {n}"
                )));
            }
            ba_topology(n, m, &mut rng)
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown model {other:?} (expected gnp or ba)"
            )))
        }
    };
    let inner = match dist {
        "bernoulli" => {
            let ws = sampler(weights, Interval::open(0.0, f64::INFINITY), "weight")?;
            let ps = sampler(probs, Interval::open_closed(0.0, 1.0), "probability")?;
            attach_bernoulli(&topology, &ws, &ps, &mut rng)
        }
        "gaussian" => {
            let ms = sampler(means, Interval::all(), "mean")?;
            let vs = sampler(vars, Interval::closed_open(0.0, f64::INFINITY), "variance")?;
            attach_gaussian(&topology, &ms, &vs, &mut rng)
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown dist {other:?} (expected bernoulli or gaussian)"
            )))
        }
    };
    Ok(PyUncertainHypergraph { inner })
}

/// Builds the coauthorship hypergraph from `(citations, [authors])`
/// records; returns `(graph, author_names)` with names indexed by node
/// id.
#[pyfunction]
fn build_coauthor_hypergraph(
    records: Vec<(u64, Vec<String>)>,
) -> PyResult<(PyUncertainHypergraph, Vec<String>)> {
    let records: Vec<ingest::PublicationRecord> = records
        .into_iter()
        .map(|(citations, authors)| {
            let authors: std::collections::BTreeSet<String> = authors.into_iter().collect();
            if authors.is_empty() {
                return Err(PyValueError::new_err("record has no authors"));
            }
            Ok(ingest::PublicationRecord { authors, citations })
        })
        .collect::<PyResult<_>>()?;
    let built = ingest::build_coauthor_hypergraph(&records);
    Ok((PyUncertainHypergraph { inner: built.hypergraph }, built.authors))
}

#[pymodule]
fn riskmatch_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyUncertainHypergraph>()?;
    m.add_class::<PySolveOutcome>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(build_coauthor_hypergraph, m)?)?;
    Ok(())
}
