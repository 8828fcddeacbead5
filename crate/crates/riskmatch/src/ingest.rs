//! Hypergraph serialization and coauthorship-hypergraph construction.
//!
//! File format (UTF-8, LF newlines): `#` starts a comment line, the
//! header is `uhg 1 <n> <m>`, then one edge per line:
//!
//! ```text
//! bern <p> <w> <v1> ... <vk>
//! gauss <mean> <variance> <v1> ... <vk>
//! mom <mean> <stddev> <v1> ... <vk>
//! ```
//!
//! Fields are single-space separated and node ids strictly ascending.
//! The writer emits a canonical form (edges by id, shortest
//! round-trip-exact float rendering), so parse/write round-trips are
//! byte identity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::hypergraph::{EdgeDistribution, UncertainHyperedge, UncertainHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn parse_f64(line: usize, field: &str, what: &str) -> Result<f64, ParseError> {
    let v: f64 = field
        .parse()
        .map_err(|_| err(line, format!("{what} {field:?} is not a number")))?;
    if !v.is_finite() {
        return Err(err(line, format!("{what} must be finite, got {field}")));
    }
    Ok(v)
}

fn parse_nodes(line: usize, fields: &[&str], n: usize) -> Result<Vec<u32>, ParseError> {
    if fields.is_empty() {
        return Err(err(line, "edge has no nodes"));
    }
    let mut nodes = Vec::with_capacity(fields.len());
    for f in fields {
        let v: u32 = f
            .parse()
            .map_err(|_| err(line, format!("node id {f:?} is not a non-negative integer")))?;
        if v as usize >= n {
            return Err(err(line, format!("node id {v} out of range (n = {n})")));
        }
        if let Some(&last) = nodes.last() {
            if v == last {
                return Err(err(line, format!("duplicate node {v}")));
            }
            if v < last {
                return Err(err(line, format!("node ids must be ascending ({v} after {last})")));
            }
        }
        nodes.push(v);
    }
    Ok(nodes)
}

/// Parses the hypergraph file format. Malformed lines are reported
/// with their line number and reason.
pub fn parse_hypergraph<R: BufRead>(reader: R) -> Result<UncertainHypergraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<UncertainHyperedge> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| err(lineno, format!("read failed: {e}")))?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(' ').filter(|f| !f.is_empty()).collect();
        let Some((n, m)) = header else {
            if fields.len() != 4 || fields[0] != "uhg" || fields[1] != "1" {
                return Err(err(lineno, "expected header `uhg 1 <n> <m>`"));
            }
            let n: usize = fields[2]
                .parse()
                .map_err(|_| err(lineno, format!("node count {:?} is not an integer", fields[2])))?;
            let m: usize = fields[3]
                .parse()
                .map_err(|_| err(lineno, format!("edge count {:?} is not an integer", fields[3])))?;
            header = Some((n, m));
            continue;
        };
        if edges.len() == m {
            return Err(err(lineno, format!("more than the declared {m} edges")));
        }
        if fields.len() < 4 {
            return Err(err(lineno, "edge lines need `<kind> <a> <b> <v1> ...`"));
        }
        let dist = match fields[0] {
            "bern" => {
                let prob = parse_f64(lineno, fields[1], "probability")?;
                let weight = parse_f64(lineno, fields[2], "weight")?;
                EdgeDistribution::Bernoulli { weight, prob }
            }
            "gauss" => {
                let mean = parse_f64(lineno, fields[1], "mean")?;
                let variance = parse_f64(lineno, fields[2], "variance")?;
                EdgeDistribution::Gaussian { mean, variance }
            }
            "mom" => {
                let mean = parse_f64(lineno, fields[1], "mean")?;
                let stddev = parse_f64(lineno, fields[2], "stddev")?;
                EdgeDistribution::Moments { mean, stddev }
            }
            other => return Err(err(lineno, format!("unknown edge kind {other:?}"))),
        };
        let nodes = parse_nodes(lineno, &fields[3..], n)?;
        match dist {
            EdgeDistribution::Bernoulli { prob, .. } if !(prob > 0.0 && prob <= 1.0) => {
                return Err(err(lineno, format!("probability {prob} outside (0, 1]")));
            }
            EdgeDistribution::Gaussian { variance, .. } if variance < 0.0 => {
                return Err(err(lineno, format!("variance {variance} is negative")));
            }
            EdgeDistribution::Moments { stddev, .. } if stddev < 0.0 => {
                return Err(err(lineno, format!("stddev {stddev} is negative")));
            }
            _ => {}
        }
        edges.push(UncertainHyperedge {
            id: edges.len(),
            nodes: nodes.into_iter().map(crate::hypergraph::NodeId).collect(),
            dist,
        });
    }
    let Some((n, m)) = header else {
        return Err(err(0, "missing header `uhg 1 <n> <m>`"));
    };
    if edges.len() != m {
        return Err(err(0, format!("declared {m} edges, found {}", edges.len())));
    }
    Ok(UncertainHypergraph::from_parts(n, edges))
}

pub fn parse_hypergraph_str(s: &str) -> Result<UncertainHypergraph, ParseError> {
    parse_hypergraph(s.as_bytes())
}

/// Writes the canonical form; parsing it back reproduces the graph and
/// re-writing reproduces the bytes.
pub fn write_hypergraph<W: Write>(h: &UncertainHypergraph, mut w: W) -> io::Result<()> {
    w.write_all(hypergraph_to_string(h).as_bytes())
}

pub fn hypergraph_to_string(h: &UncertainHypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "uhg 1 {} {}", h.node_count(), h.edge_count());
    for e in h.edges() {
        match e.dist {
            EdgeDistribution::Bernoulli { weight, prob } => {
                let _ = write!(out, "bern {prob} {weight}");
            }
            EdgeDistribution::Gaussian { mean, variance } => {
                let _ = write!(out, "gauss {mean} {variance}");
            }
            EdgeDistribution::Moments { mean, stddev } => {
                let _ = write!(out, "mom {mean} {stddev}");
            }
        }
        for v in &e.nodes {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

/// One bibliographic record: a team of authors and a citation count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublicationRecord {
    pub authors: BTreeSet<String>,
    pub citations: u64,
}

/// Parses `<citations>\t<author>;<author>;...` records, one per line.
pub fn parse_publication_records<R: BufRead>(reader: R) -> Result<Vec<PublicationRecord>, ParseError> {
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| err(lineno, format!("read failed: {e}")))?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((count, names)) = line.split_once('\t') else {
            return Err(err(lineno, "expected `<citations>\\t<author>;<author>;...`"));
        };
        let citations: u64 = count
            .trim()
            .parse()
            .map_err(|_| err(lineno, format!("citation count {count:?} is not a non-negative integer")))?;
        let authors: BTreeSet<String> = names
            .split(';')
            .map(|a| a.trim())
            .filter(|a| !a.is_empty())
            .map(|a| a.to_string())
            .collect();
        if authors.is_empty() {
            return Err(err(lineno, "record has no authors"));
        }
        records.push(PublicationRecord { authors, citations });
    }
    Ok(records)
}

/// A coauthorship hypergraph plus the author-name table mapping node
/// ids back to names.
#[derive(Debug, Clone, PartialEq)]
pub struct CoauthorHypergraph {
    pub hypergraph: UncertainHypergraph,
    /// Name of node `i` at position `i`.
    pub authors: Vec<String>,
}

/// Builds the coauthorship hypergraph:
///
/// - single-author records produce no hyperedge (their collaboration
///   probability would be one), but still count toward author paper
///   sets;
/// - records with identical author sets merge into one hyperedge with
///   summed citations;
/// - a team's probability is |intersection| / |union| of its members'
///   paper sets over all input records, the empirical collaboration
///   rate;
/// - the weight is the merged citation sum. Zero-citation teams are
///   kept (the solver's filter drops them) so the output reflects the
///   dataset faithfully.
///
/// Nodes are the authors of retained hyperedges, numbered in name
/// order; hyperedges are ordered by node list. The result therefore
/// does not depend on the input record order.
pub fn build_coauthor_hypergraph(records: &[PublicationRecord]) -> CoauthorHypergraph {
    // Paper sets over all records, solo work included.
    let mut papers_of: BTreeMap<&str, BTreeSet<usize>> = BTreeMap::new();
    for (idx, r) in records.iter().enumerate() {
        for a in &r.authors {
            papers_of.entry(a).or_default().insert(idx);
        }
    }

    let mut teams: BTreeMap<&BTreeSet<String>, u64> = BTreeMap::new();
    for r in records {
        if r.authors.len() < 2 {
            continue;
        }
        *teams.entry(&r.authors).or_insert(0) += r.citations;
    }

    let authors: Vec<String> = teams
        .keys()
        .flat_map(|t| t.iter().cloned())
        .collect::<BTreeSet<String>>()
        .into_iter()
        .collect();
    let id_of: BTreeMap<&str, u32> = authors
        .iter()
        .enumerate()
        .map(|(i, a)| (a.as_str(), i as u32))
        .collect();

    let mut edges: Vec<UncertainHyperedge> = Vec::new();
    for (team, &citations) in &teams {
        let mut intersection: Option<BTreeSet<usize>> = None;
        let mut union: BTreeSet<usize> = BTreeSet::new();
        for a in team.iter() {
            let papers = &papers_of[a.as_str()];
            union.extend(papers.iter().copied());
            intersection = Some(match intersection {
                None => papers.clone(),
                Some(acc) => acc.intersection(papers).copied().collect(),
            });
        }
        let inter = intersection.map_or(0, |s| s.len());
        let prob = inter as f64 / union.len() as f64;
        let nodes = team.iter().map(|a| crate::hypergraph::NodeId(id_of[a.as_str()])).collect();
        edges.push(UncertainHyperedge {
            id: edges.len(),
            nodes,
            dist: EdgeDistribution::Bernoulli { weight: citations as f64, prob },
        });
    }
    // Sorted author names give sorted node ids, and the team map is
    // ordered by name set, so edges are already canonically ordered.
    CoauthorHypergraph {
        hypergraph: UncertainHypergraph::from_parts(authors.len(), edges),
        authors,
    }
}
