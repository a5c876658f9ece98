//! Finite simple graphs with bit-set adjacency.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An undirected simple graph on the vertex ids `0..order`.
///
/// Values are immutable once built; every constructor validates symmetry and
/// the absence of loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the host id of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `mapping[i]` is the host vertex represented by vertex `i`.
    pub mapping: Vec<usize>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(order); order],
        }
    }

    pub fn from_edge_list(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows that are assumed symmetric and
    /// loop-free. Used for derived graphs whose construction guarantees both.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(v, row)| {
            row.universe() == adj.len()
                && !row.contains(v)
                && row.iter().all(|u| adj[u].contains(v))
        }));
        Graph { adj }
    }

    /// Builds a graph from a symmetric predicate over unordered pairs.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(order);
        for v in 1..order {
            for u in 0..v {
                if adjacent(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Unordered edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                order: self.order(),
            })
        }
    }

    /// Open neighborhood `N(x)`.
    pub fn neighbors(&self, x: usize) -> Result<&VertexSet> {
        self.check_vertex(x)?;
        Ok(&self.adj[x])
    }

    /// Borrowed open neighborhood without a range check.
    #[inline]
    pub fn adjacency(&self, x: usize) -> &VertexSet {
        &self.adj[x]
    }

    /// Closed neighborhood `N[x] = N(x) ∪ {x}`.
    pub fn closed_neighborhood(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        let mut set = self.adj[x].clone();
        set.insert(x);
        Ok(set)
    }

    pub fn degree(&self, x: usize) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self.adj[x].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    /// `Δ(G)`; zero for edgeless and empty graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn is_complete_set(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn induced_subgraph(&self, subset: &VertexSet) -> Result<InducedSubgraph> {
        if subset.universe() != self.order() {
            if let Some(bad) = subset.iter().find(|&v| v >= self.order()) {
                return Err(Error::VertexOutOfRange {
                    vertex: bad,
                    order: self.order(),
                });
            }
        }
        let mapping: Vec<usize> = subset.iter().collect();
        let graph = Graph::from_fn(mapping.len(), |i, j| {
            self.adj[mapping[i]].contains(mapping[j])
        });
        Ok(InducedSubgraph { graph, mapping })
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let n = self.order();
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.order(), |u, v| !self.is_adjacent(u, v))
    }

    /// True iff the graph has one component; the zero-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(n);
        seen.insert(0);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(n);
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen.len() == n
    }

    /// True iff the graph is the octahedron `O_d` for some `d ≥ 2`, i.e. the
    /// complement of a perfect matching on `2d` vertices.
    pub fn is_octahedron(&self) -> bool {
        let n = self.order();
        n >= 4 && n.is_multiple_of(2) && self.adj.iter().all(|row| row.len() == n - 2)
    }

    /// Connected, `Δ ≤ 4`, and not the 6-vertex octahedron.
    pub fn is_low_degree(&self) -> bool {
        !self.is_empty()
            && self.is_connected()
            && self.max_degree() <= 4
            && !(self.order() == 6 && self.is_octahedron())
    }

    /// Plain edge-list text: the order on the first line, then one `u v` per edge.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, first) = lines.next().ok_or(Error::EdgeList {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let order: usize = first.parse().map_err(|_| Error::EdgeList {
            line,
            message: format!("bad vertex count {first:?}"),
        })?;
        let mut edges = Vec::new();
        for (line, text) in lines {
            let mut parts = text.split_whitespace();
            let mut next_id = || -> Result<usize> {
                let tok = parts.next().ok_or_else(|| Error::EdgeList {
                    line,
                    message: "expected two vertex ids".into(),
                })?;
                tok.parse().map_err(|_| Error::EdgeList {
                    line,
                    message: format!("bad vertex id {tok:?}"),
                })
            };
            let u = next_id()?;
            let v = next_id()?;
            if parts.next().is_some() {
                return Err(Error::EdgeList {
                    line,
                    message: "trailing tokens".into(),
                });
            }
            edges.push((u, v));
        }
        Graph::from_edge_list(order, &edges)
    }

    /// Graphviz DOT text. `labels`, when given, must have one entry per vertex.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            match labels.and_then(|l| l.get(v)) {
                Some(label) => {
                    let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
                    let _ = writeln!(out, "  {v} [label=\"{escaped}\"];");
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: n,
            expected: "n >= 1",
        });
    }
    Ok(Graph::from_fn(n, |_, _| true))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: n,
            expected: "n >= 3",
        });
    }
    Ok(Graph::from_fn(n, |u, v| {
        v == u + 1 || (u == 0 && v == n - 1)
    }))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: n,
            expected: "n >= 1",
        });
    }
    Ok(Graph::from_fn(n, |u, v| v == u + 1))
}

/// Complete multipartite graph with `d` parts `{2i, 2i+1}`.
pub fn octahedron(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(Error::ParameterOutOfRange {
            name: "d",
            value: d,
            expected: "d >= 2",
        });
    }
    Ok(Graph::from_fn(2 * d, |u, v| u / 2 != v / 2))
}

/// The 3-sun: triangle `0 1 2` with outer vertex `3 + i` joined to the two
/// triangle vertices other than `i`.
pub fn hajos_sun() -> Graph {
    Graph::from_edge_list(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 1),
            (3, 2),
            (4, 0),
            (4, 2),
            (5, 0),
            (5, 1),
        ],
    )
    .expect("static edge list")
}

/// Two inner triangles `{0,1,2}` and `{0,3,4}` meeting only in vertex 0,
/// joined by the crossbars `1–3` and `2–4`; vertices 5 and 6 complete the
/// third triangle on the edges `1–2` and `3–4`.
pub fn inner_pair_sharing_vertex() -> Graph {
    Graph::from_edge_list(
        7,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (3, 4),
            (1, 3),
            (2, 4),
            (5, 1),
            (5, 2),
            (6, 3),
            (6, 4),
        ],
    )
    .expect("static edge list")
}

/// Two inner triangles `{0,1,2}` and `{0,1,3}` sharing the edge `0–1`, with
/// vertex 4 on `0–2–3` and vertex 5 on `1–2–3`. This is the octahedron minus
/// the edge `4–5`.
pub fn inner_pair_sharing_edge() -> Graph {
    Graph::from_edge_list(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (0, 4),
            (2, 4),
            (3, 4),
            (1, 5),
            (2, 5),
            (3, 5),
        ],
    )
    .expect("static edge list")
}

/// Named constructions shared by the CLI, docs and tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Octahedron(usize),
    HajosSun,
    InnerPairSharingVertex,
    InnerPairSharingEdge,
}

impl Named {
    pub fn build(self) -> Result<Graph> {
        match self {
            Named::Complete(n) => complete(n),
            Named::Cycle(n) => cycle(n),
            Named::Path(n) => path(n),
            Named::Octahedron(d) => octahedron(d),
            Named::HajosSun => Ok(hajos_sun()),
            Named::InnerPairSharingVertex => Ok(inner_pair_sharing_vertex()),
            Named::InnerPairSharingEdge => Ok(inner_pair_sharing_edge()),
        }
    }
}

impl FromStr for Named {
    type Err = Error;

    /// Accepts `k<n>`, `c<n>`, `p<n>`, `octahedron<d>`, `hajos_sun`,
    /// `inner_pair_vertex` and `inner_pair_edge`.
    fn from_str(s: &str) -> Result<Named> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "hajos_sun" | "sun" => return Ok(Named::HajosSun),
            "inner_pair_vertex" => return Ok(Named::InnerPairSharingVertex),
            "inner_pair_edge" => return Ok(Named::InnerPairSharingEdge),
            _ => {}
        }
        let bad = || Error::Precondition(format!("unknown named graph {s:?}"));
        let (ctor, digits): (fn(usize) -> Named, &str) =
            if let Some(d) = s.strip_prefix("octahedron") {
                (Named::Octahedron, d)
            } else if let Some(d) = s.strip_prefix('k') {
                (Named::Complete, d)
            } else if let Some(d) = s.strip_prefix('c') {
                (Named::Cycle, d)
            } else if let Some(d) = s.strip_prefix('p') {
                (Named::Path, d)
            } else {
                return Err(bad());
            };
        let param: usize = digits.parse().map_err(|_| bad())?;
        Ok(ctor(param))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let g = c4();
        assert_eq!(g, cycle(4).unwrap());
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        let dup = Graph::from_edge_list(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn neighborhoods_and_degrees() {
        let g = c4();
        assert_eq!(g.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1, 3]);
        assert_eq!(g.neighbors(2).unwrap().to_vec(), vec![1, 3]);
        assert!(g.degree(4).is_err());
        let oct = octahedron(3).unwrap();
        assert!((0..6).all(|x| oct.degree(x).unwrap() == 4));
        assert_eq!(complete(1).unwrap().max_degree(), 0);
    }

    #[test]
    fn induced_subgraphs() {
        let oct = octahedron(3).unwrap();
        let mut s = oct.vertex_set();
        s.remove(5);
        let sub = oct.induced_subgraph(&s).unwrap();
        assert_eq!(sub.graph.order(), 5);
        assert_eq!(sub.graph.edge_count(), 8);
        assert_eq!(sub.mapping, vec![0, 1, 2, 3, 4]);

        let g = c4();
        assert_eq!(g.induced_subgraph(&g.vertex_set()).unwrap().graph, g);
        let edge = g.induced_subgraph(&VertexSet::from_ids(4, [0, 1])).unwrap();
        assert_eq!(edge.graph.edge_count(), 1);
    }

    #[test]
    fn connectivity() {
        assert!(c4().is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(octahedron(3).unwrap().is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn named_constructions() {
        let oct = octahedron(3).unwrap();
        assert_eq!((oct.order(), oct.edge_count()), (6, 12));
        let sun = hajos_sun();
        assert_eq!(sun.edge_count(), 9);
        assert_eq!(sun.degrees(), vec![4, 4, 4, 2, 2, 2]);
        assert_eq!(complete(5).unwrap().max_degree(), 4);
        assert!(complete(0).is_err());
        assert!(cycle(2).is_err());
        assert!(octahedron(1).is_err());
        assert_eq!(
            "octahedron3".parse::<Named>().unwrap(),
            Named::Octahedron(3)
        );
        assert_eq!("k5".parse::<Named>().unwrap(), Named::Complete(5));
        assert_eq!("hajos_sun".parse::<Named>().unwrap(), Named::HajosSun);
        assert!("q3".parse::<Named>().is_err());
        let v = inner_pair_sharing_vertex();
        assert_eq!((v.order(), v.edge_count(), v.max_degree()), (7, 12, 4));
        assert!(v.is_low_degree());
        let e = inner_pair_sharing_edge();
        assert_eq!((e.order(), e.edge_count(), e.max_degree()), (6, 11, 4));
        assert!(e.is_low_degree());
    }

    #[test]
    fn octahedron_and_low_degree_tests() {
        let oct = octahedron(3).unwrap();
        assert!(oct.is_octahedron());
        assert!(!oct.is_low_degree());
        assert!(hajos_sun().is_low_degree());
        let k5 = complete(5).unwrap();
        assert!(!k5.is_octahedron());
        assert!(k5.is_low_degree());
        // C4 is the two-dimensional octahedron but still low degree.
        assert!(c4().is_octahedron());
        assert!(c4().is_low_degree());
        for d in 2..=8 {
            let o = octahedron(d).unwrap();
            assert!(o.is_octahedron());
            for (u, v) in o.edges() {
                let pruned =
                    Graph::from_fn(o.order(), |a, b| o.is_adjacent(a, b) && (a, b) != (u, v));
                assert!(!pruned.is_octahedron());
            }
        }
    }

    #[test]
    fn dot_output() {
        let k1 = complete(1).unwrap();
        let dot = k1.to_dot(None);
        assert_eq!(dot.matches("--").count(), 0);
        assert!(dot.contains("  0;"));
        let dot = c4().to_dot(None);
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 4);
        let labels = vec!["necktie {0,1,2}".to_string()];
        assert!(k1
            .to_dot(Some(&labels))
            .contains("label=\"necktie {0,1,2}\""));
    }

    #[test]
    fn edge_list_text_round_trip() {
        let sun = hajos_sun();
        let text = sun.to_edge_list_text();
        assert_eq!(Graph::parse_edge_list_text(&text).unwrap(), sun);
        assert!(Graph::parse_edge_list_text("3\n0 1 2\n").is_err());
        assert!(Graph::parse_edge_list_text("").is_err());
    }
}
