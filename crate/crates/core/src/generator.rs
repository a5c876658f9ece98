//! Exhaustive enumeration of small graphs with bounded maximum degree, one
//! representative per isomorphism class.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::iso::{canonical_form, canonical_graph, CanonicalCert};

pub const MAX_CORPUS_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub delta_max: usize,
    /// Drop the 6-vertex octahedron from the output. Smaller and larger
    /// octahedra are kept.
    pub exclude_octahedron: bool,
    /// Only connected graphs. Disabling this enumerates every graph with the
    /// degree bound, which the oracle comparisons use.
    pub connected_only: bool,
}

impl CorpusSpec {
    /// Connected graphs with `Δ ≤ 4`, octahedron excluded.
    pub fn low_degree(n_min: usize, n_max: usize) -> Self {
        CorpusSpec {
            n_min,
            n_max,
            delta_max: 4,
            exclude_octahedron: true,
            connected_only: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let range =
            |name: &'static str, value: usize, expected: &'static str| Error::ParameterOutOfRange {
                name,
                value,
                expected,
            };
        if self.n_min < 1 {
            return Err(range("n_min", self.n_min, "at least 1"));
        }
        if self.n_max < self.n_min || self.n_max > MAX_CORPUS_ORDER {
            return Err(range("n_max", self.n_max, "between n_min and 10"));
        }
        if self.delta_max < 1 {
            return Err(range("delta_max", self.delta_max, "at least 1"));
        }
        Ok(())
    }

    /// True iff `graph` belongs to the corpus described by `self`.
    pub fn admits(&self, graph: &Graph) -> bool {
        let n = graph.order();
        n >= self.n_min
            && n <= self.n_max
            && graph.max_degree() <= self.delta_max
            && (!self.connected_only || graph.is_connected())
            && !(self.exclude_octahedron && n == 6 && graph.is_octahedron())
    }
}

/// Children of `parent`: a new last vertex joined to every allowed subset.
fn extend(parent: &Graph, spec: &CorpusSpec, level: &mut BTreeMap<CanonicalCert, Graph>) {
    let n = parent.order();
    let spare: Vec<usize> = (0..n)
        .filter(|&v| parent.adjacency(v).len() < spec.delta_max)
        .collect();
    let first = if spec.connected_only { 1u32 } else { 0 };
    for mask in first..(1u32 << spare.len()) {
        if mask.count_ones() as usize > spec.delta_max {
            continue;
        }
        let attach: Vec<(usize, usize)> = (0..spare.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| (spare[i], n))
            .collect();
        let mut edges: Vec<(usize, usize)> = parent.edges().collect();
        edges.extend(attach);
        let child = Graph::from_edge_list(n + 1, &edges).expect("valid extension");
        let (cert, canonical) = canonical_graph(&child);
        level.entry(cert).or_insert(canonical);
    }
}

fn merge(
    mut a: BTreeMap<CanonicalCert, Graph>,
    b: BTreeMap<CanonicalCert, Graph>,
) -> BTreeMap<CanonicalCert, Graph> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (cert, g) in b {
        a.entry(cert).or_insert(g);
    }
    a
}

/// Canonically labeled representatives, ordered by order then certificate.
/// Every level is complete: removing the last vertex of a breadth-first order
/// leaves a connected graph whose degrees are still bounded.
pub fn enumerate_connected_bounded(spec: &CorpusSpec) -> Result<Vec<Graph>> {
    spec.validate()?;
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(1)];
    for n in 1..=spec.n_max {
        if n > 1 {
            level = level
                .par_iter()
                .fold(BTreeMap::new, |mut acc, parent| {
                    extend(parent, spec, &mut acc);
                    acc
                })
                .reduce(BTreeMap::new, merge)
                .into_values()
                .collect();
        }
        if n >= spec.n_min {
            out.extend(level.iter().filter(|g| spec.admits(g)).cloned());
        }
    }
    Ok(out)
}

/// Number of representatives per order, indexed from `n_min`.
pub fn corpus_counts(spec: &CorpusSpec) -> Result<Vec<(usize, usize)>> {
    let graphs = enumerate_connected_bounded(spec)?;
    Ok((spec.n_min..=spec.n_max)
        .map(|n| (n, graphs.iter().filter(|g| g.order() == n).count()))
        .collect())
}

/// Reads one graph6 token per line (blank lines and `>>graph6<<` headers are
/// skipped), keeps admitted graphs, and drops isomorphic repeats. Graphs keep
/// their input labeling and are ordered by order then certificate.
pub fn filter_graph6_corpus(text: &str, spec: &CorpusSpec) -> Result<Vec<Graph>> {
    spec.validate()?;
    let mut kept = BTreeMap::new();
    for (line_no, line) in text.lines().enumerate() {
        let token = line.trim().trim_start_matches(">>graph6<<");
        if token.is_empty() {
            continue;
        }
        let g = parse_graph6(token).map_err(|e| Error::EdgeList {
            line: line_no + 1,
            message: e.to_string(),
        })?;
        if spec.admits(&g) {
            kept.entry((g.order(), canonical_form(&g))).or_insert(g);
        }
    }
    Ok(kept.into_values().collect())
}
