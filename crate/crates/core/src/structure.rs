//! Stars, neckties and inner triangles: the vertices of `K²(G)` described in
//! terms of the host graph.
//!
//! A vertex of `K²(G)` is a clique `Q` of `K(G)`, i.e. a maximal pairwise
//! intersecting family of cliques of `G`. When the cliques in `Q` share a host
//! vertex `x`, then `Q = x*` (the star of `x`) and `x` is normal. Otherwise
//! `Q` is a necktie, and for low-degree hosts it is `Q_T` for exactly one
//! inner triangle `T`.

use std::fmt;

use serde::Serialize;

use crate::cliques::{maximal_cliques, CliqueFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A complete triple of host vertices, stored in ascending order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triangle([usize; 3]);

impl Triangle {
    /// Validates that `vertices` are three distinct, pairwise adjacent vertices.
    pub fn new(graph: &Graph, vertices: [usize; 3]) -> Result<Self> {
        let mut v = vertices;
        v.sort_unstable();
        let ok = v[0] != v[1]
            && v[1] != v[2]
            && v[2] < graph.order()
            && graph.is_adjacent(v[0], v[1])
            && graph.is_adjacent(v[0], v[2])
            && graph.is_adjacent(v[1], v[2]);
        if ok {
            Ok(Triangle(v))
        } else {
            Err(Error::NotATriangle(vertices.to_vec()))
        }
    }

    pub fn from_set(graph: &Graph, set: &VertexSet) -> Result<Self> {
        let v = set.to_vec();
        match v.as_slice() {
            &[a, b, c] => Triangle::new(graph, [a, b, c]),
            _ => Err(Error::NotATriangle(v)),
        }
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn to_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_ids(universe, self.0)
    }

    pub fn edges(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    /// Vertices shared with `other`, ascending.
    pub fn common(&self, other: &Triangle) -> Vec<usize> {
        self.0
            .iter()
            .copied()
            .filter(|v| other.contains(*v))
            .collect()
    }

    /// Vertices of `self` other than `v`.
    pub fn others(&self, v: usize) -> Vec<usize> {
        self.0.iter().copied().filter(|&w| w != v).collect()
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{{{a},{b},{c}}}")
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A triangle that is a clique and each of whose edges lies in a second triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct InnerTriangle(Triangle);

impl InnerTriangle {
    pub fn new(graph: &Graph, triangle: Triangle) -> Result<Self> {
        if is_inner(graph, &triangle) {
            Ok(InnerTriangle(triangle))
        } else {
            Err(Error::NotInnerTriangle(triangle.vertices().to_vec()))
        }
    }

    pub fn triangle(&self) -> &Triangle {
        &self.0
    }
}

impl std::ops::Deref for InnerTriangle {
    type Target = Triangle;

    fn deref(&self) -> &Triangle {
        &self.0
    }
}

/// All triangles of `graph` in lexicographic order.
pub fn triangles(graph: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for a in 0..graph.order() {
        for b in graph.adjacency(a).iter().filter(|&b| b > a) {
            let ab = graph.adjacency(a).intersection(graph.adjacency(b));
            for c in ab.iter().filter(|&c| c > b) {
                out.push(Triangle([a, b, c]));
            }
        }
    }
    out
}

fn common_neighbors(graph: &Graph, u: usize, v: usize) -> VertexSet {
    graph.adjacency(u).intersection(graph.adjacency(v))
}

fn is_inner(graph: &Graph, t: &Triangle) -> bool {
    let [a, b, c] = t.vertices();
    let maximal = common_neighbors(graph, a, b)
        .intersection(graph.adjacency(c))
        .is_empty();
    // For a maximal triangle every other common neighbor of an edge lies outside it.
    maximal
        && t.edges()
            .iter()
            .all(|&(u, v)| common_neighbors(graph, u, v).len() >= 2)
}

/// Accepts any three-element vertex set; errors unless it is a triangle.
pub fn is_inner_triangle(graph: &Graph, set: &VertexSet) -> Result<bool> {
    let t = Triangle::from_set(graph, set)?;
    Ok(is_inner(graph, &t))
}

pub fn inner_triangles(graph: &Graph) -> Vec<InnerTriangle> {
    triangles(graph)
        .into_iter()
        .filter(|t| is_inner(graph, t))
        .map(InnerTriangle)
        .collect()
}

/// What a vertex of `K²(G)` is in terms of the host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum K2Kind {
    /// `Q = x*`. `multi_center` is set when the members share more than one
    /// host vertex (true twins), in which case `center` is the least.
    Star { center: usize, multi_center: bool },
    /// `Q = Q_T` for the inner triangle `center`; `ears` are the member clique
    /// indices other than `T` itself.
    Necktie {
        center: InnerTriangle,
        ears: Vec<usize>,
    },
    /// Empty total intersection but equal to no `Q_T`.
    UnmatchedNecktie,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K2Vertex {
    #[serde(flatten)]
    pub kind: K2Kind,
    /// Indices into the host clique family, i.e. vertices of `K(G)`.
    pub members: VertexSet,
}

impl K2Vertex {
    pub fn is_star(&self) -> bool {
        matches!(self.kind, K2Kind::Star { .. })
    }

    pub fn is_necktie(&self) -> bool {
        !self.is_star()
    }

    pub fn center_triangle(&self) -> Option<&InnerTriangle> {
        match &self.kind {
            K2Kind::Necktie { center, .. } => Some(center),
            _ => None,
        }
    }

    pub fn star_center(&self) -> Option<usize> {
        match self.kind {
            K2Kind::Star { center, .. } => Some(center),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match &self.kind {
            K2Kind::Star { center, .. } => format!("star {center}"),
            K2Kind::Necktie { center, .. } => format!("necktie {}", center.triangle()),
            K2Kind::UnmatchedNecktie => "necktie ?".to_string(),
        }
    }
}

/// `G`, `K(G)` and `K²(G)` with every vertex of `K²(G)` classified.
#[derive(Debug, Clone)]
pub struct K2Structure {
    host: Graph,
    cliques: CliqueFamily,
    k1: Graph,
    k2_cliques: CliqueFamily,
    k2: Graph,
    vertices: Vec<K2Vertex>,
    inner: Vec<InnerTriangle>,
    /// `Q_T` member sets, aligned with `inner`.
    q_sets: Vec<VertexSet>,
    /// K² index of `x*` for each normal host vertex.
    star_index: Vec<Option<usize>>,
    /// K² index of `Q_T`, aligned with `inner`, when `Q_T` is a clique of `K(G)`.
    necktie_index: Vec<Option<usize>>,
}

impl K2Structure {
    pub fn new(host: &Graph) -> Result<Self> {
        let cliques = maximal_cliques(host)?;
        let k1 = cliques.intersection_graph();
        let k2_cliques = maximal_cliques(&k1)?;
        let k2 = k2_cliques.intersection_graph();
        let inner = inner_triangles(host);
        let q_sets: Vec<VertexSet> = inner.iter().map(|t| q_set(&cliques, t)).collect();

        let mut vertices = Vec::with_capacity(k2_cliques.len());
        for q in &k2_cliques {
            let mut common = VertexSet::full(host.order());
            for i in q {
                common.intersect_with(cliques.get(i));
            }
            let kind = match common.first() {
                Some(center) => K2Kind::Star {
                    center,
                    multi_center: common.len() > 1,
                },
                None => match q_sets.iter().position(|s| s == q) {
                    Some(t) => K2Kind::Necktie {
                        center: inner[t],
                        ears: ears_of(&cliques, &inner[t], &q_sets[t]),
                    },
                    None => K2Kind::UnmatchedNecktie,
                },
            };
            vertices.push(K2Vertex {
                kind,
                members: q.clone(),
            });
        }
        let star_index = (0..host.order())
            .map(|x| k2_cliques.position(&cliques.containing(x)))
            .collect();
        let necktie_index = q_sets.iter().map(|s| k2_cliques.position(s)).collect();
        Ok(K2Structure {
            host: host.clone(),
            cliques,
            k1,
            k2_cliques,
            k2,
            vertices,
            inner,
            q_sets,
            star_index,
            necktie_index,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn cliques(&self) -> &CliqueFamily {
        &self.cliques
    }

    /// `K(G)`.
    pub fn k1(&self) -> &Graph {
        &self.k1
    }

    /// Cliques of `K(G)`, indexed like the vertices of `K²(G)`.
    pub fn k2_cliques(&self) -> &CliqueFamily {
        &self.k2_cliques
    }

    /// `K²(G)`.
    pub fn k2(&self) -> &Graph {
        &self.k2
    }

    pub fn vertices(&self) -> &[K2Vertex] {
        &self.vertices
    }

    pub fn inner_triangles(&self) -> &[InnerTriangle] {
        &self.inner
    }

    fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.host.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                order: self.host.order(),
            })
        }
    }

    /// `x*`: indices of the cliques containing `x`.
    pub fn star(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(self.cliques.containing(x))
    }

    /// True iff `x*` is a clique of `K(G)`.
    pub fn is_normal_vertex(&self, x: usize) -> Result<bool> {
        self.check_vertex(x)?;
        Ok(self.star_index[x].is_some())
    }

    pub fn normal_vertices(&self) -> Vec<usize> {
        (0..self.host.order())
            .filter(|&x| self.star_index[x].is_some())
            .collect()
    }

    /// K² index of `x*`, if `x` is normal.
    pub fn star_vertex(&self, x: usize) -> Option<usize> {
        self.star_index.get(x).copied().flatten()
    }

    fn inner_position(&self, t: &Triangle) -> Option<usize> {
        self.inner.binary_search_by(|i| i.triangle().cmp(t)).ok()
    }

    /// K² index of `Q_T`, if `T` is inner and `Q_T` is a clique of `K(G)`.
    pub fn necktie_vertex(&self, t: &Triangle) -> Option<usize> {
        self.inner_position(t).and_then(|p| self.necktie_index[p])
    }

    /// Clique index of a triangle of the host, if it is a clique.
    pub fn clique_index(&self, t: &Triangle) -> Option<usize> {
        self.cliques.position(&t.to_set(self.host.order()))
    }

    /// `Q_T = { q : |q ∩ T| ≥ 2 }` as a necktie value.
    pub fn q_of_triangle(&self, t: &Triangle) -> Result<K2Vertex> {
        let p = self
            .inner_position(t)
            .ok_or_else(|| Error::NotInnerTriangle(t.vertices().to_vec()))?;
        Ok(K2Vertex {
            kind: K2Kind::Necktie {
                center: self.inner[p],
                ears: ears_of(&self.cliques, &self.inner[p], &self.q_sets[p]),
            },
            members: self.q_sets[p].clone(),
        })
    }

    pub fn star_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.is_star()).count()
    }

    pub fn necktie_count(&self) -> usize {
        self.vertices.len() - self.star_count()
    }

    pub fn unmatched_neckties(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.kind == K2Kind::UnmatchedNecktie)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn multi_center_stars(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| {
                matches!(
                    v.kind,
                    K2Kind::Star {
                        multi_center: true,
                        ..
                    }
                )
            })
            .map(|(i, _)| i)
            .collect()
    }

    fn require_normal(&self, x: usize) -> Result<()> {
        if self.is_normal_vertex(x)? {
            Ok(())
        } else {
            Err(Error::NotNormal(x))
        }
    }

    fn require_inner(&self, t: &Triangle) -> Result<()> {
        self.inner_position(t)
            .map(|_| ())
            .ok_or_else(|| Error::NotInnerTriangle(t.vertices().to_vec()))
    }

    /// `x* ∼ y*` in `K²(G)` iff `x ∼ y` in `G`.
    pub fn star_star_adjacent(&self, x: usize, y: usize) -> Result<bool> {
        self.require_normal(x)?;
        self.require_normal(y)?;
        Ok(self.host.is_adjacent(x, y))
    }

    /// `x* ∼ Q_T` iff `x` is adjacent to two vertices of `T`.
    pub fn star_necktie_adjacent(&self, x: usize, t: &Triangle) -> Result<bool> {
        self.require_normal(x)?;
        self.require_inner(t)?;
        Ok(t.vertices()
            .iter()
            .filter(|&&v| self.host.is_adjacent(x, v))
            .count()
            >= 2)
    }

    /// `Q_T ∼ Q_T'` iff `|T ∩ T'| = 2`, or `T ∩ T' = {v}` and some edge (a
    /// crossbar) joins `T − v` to `T' − v`.
    pub fn necktie_necktie_adjacent(&self, t: &Triangle, u: &Triangle) -> Result<bool> {
        self.require_inner(t)?;
        self.require_inner(u)?;
        if t == u {
            return Err(Error::Precondition(format!("{t} given twice")));
        }
        let common = t.common(u);
        Ok(match common.as_slice() {
            [_, _] => true,
            &[v] => has_crossbar(&self.host, t, u, v),
            _ => false,
        })
    }

    /// Adjacency in `K²(G)` by intersection of the underlying families.
    pub fn k2_adjacent(&self, a: usize, b: usize) -> bool {
        self.k2.is_adjacent(a, b)
    }

    pub fn dot(&self) -> String {
        let labels: Vec<String> = self.vertices.iter().map(K2Vertex::label).collect();
        self.k2.to_dot(Some(&labels))
    }

    pub fn report(&self) -> K2Report {
        K2Report {
            host_order: self.host.order(),
            cliques: self.cliques.len(),
            k2_order: self.vertices.len(),
            stars: self.star_count(),
            neckties: self.necktie_count(),
            unmatched_neckties: self.unmatched_neckties().len(),
            multi_center_stars: self.multi_center_stars().len(),
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(index, v)| K2VertexRecord {
                    index,
                    vertex: v.clone(),
                    member_cliques: v
                        .members
                        .iter()
                        .map(|i| self.cliques.get(i).clone())
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Crossbar test for two triangles meeting exactly in `v`.
pub fn has_crossbar(graph: &Graph, t: &Triangle, u: &Triangle, v: usize) -> bool {
    t.others(v)
        .iter()
        .any(|&a| u.others(v).iter().any(|&b| graph.is_adjacent(a, b)))
}

fn q_set(cliques: &CliqueFamily, t: &Triangle) -> VertexSet {
    let n = cliques.host_order();
    let ts = t.to_set(n);
    VertexSet::from_ids(
        cliques.len(),
        cliques
            .iter()
            .enumerate()
            .filter(|(_, q)| q.intersection_len(&ts) >= 2)
            .map(|(i, _)| i),
    )
}

fn ears_of(cliques: &CliqueFamily, t: &Triangle, members: &VertexSet) -> Vec<usize> {
    let center = cliques.position(&t.to_set(cliques.host_order()));
    members.iter().filter(|&i| Some(i) != center).collect()
}

/// Serializable classification of `K²(G)`.
#[derive(Debug, Clone, Serialize)]
pub struct K2Report {
    pub host_order: usize,
    pub cliques: usize,
    pub k2_order: usize,
    pub stars: usize,
    pub neckties: usize,
    pub unmatched_neckties: usize,
    pub multi_center_stars: usize,
    pub vertices: Vec<K2VertexRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct K2VertexRecord {
    pub index: usize,
    #[serde(flatten)]
    pub vertex: K2Vertex,
    pub member_cliques: Vec<VertexSet>,
}

/// Classifies every vertex of `K²(G)`.
pub fn classify_k2_vertices(graph: &Graph) -> Result<Vec<K2Vertex>> {
    Ok(K2Structure::new(graph)?.vertices)
}
