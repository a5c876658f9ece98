//! Helly property of set families, clique-Helly and hereditary clique-Helly
//! recognition.

use serde::Serialize;

use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest family accepted by the brute-force Helly oracle.
pub const HELLY_ORACLE_LIMIT: usize = 20;

/// Largest order accepted by the definitional hereditary check.
pub const DEFINITIONAL_LIMIT: usize = 15;

pub fn is_intersecting_family(family: &[VertexSet]) -> bool {
    family
        .iter()
        .enumerate()
        .all(|(i, a)| family[i + 1..].iter().all(|b| a.intersects(b)))
}

/// Brute-force Helly test: every pairwise-intersecting subfamily of size at
/// least two must have a common element.
pub fn is_helly_family(family: &[VertexSet]) -> Result<bool> {
    if family.len() > HELLY_ORACLE_LIMIT {
        return Err(Error::FamilyTooLarge {
            size: family.len(),
            limit: HELLY_ORACLE_LIMIT,
        });
    }
    Ok(helly_sets(family))
}

fn helly_sets(family: &[VertexSet]) -> bool {
    fn extend(
        family: &[VertexSet],
        chosen: &mut Vec<usize>,
        from: usize,
        common: Option<&VertexSet>,
    ) -> bool {
        for i in from..family.len() {
            let s = &family[i];
            if chosen.iter().all(|&c| family[c].intersects(s)) {
                let meet = common.map_or_else(|| s.clone(), |c| c.intersection(s));
                if !chosen.is_empty() && meet.is_empty() {
                    return false;
                }
                chosen.push(i);
                let ok = extend(family, chosen, i + 1, Some(&meet));
                chosen.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    extend(family, &mut Vec::new(), 0, None)
}

/// Depth-first walk over all pairwise-intersecting subfamilies, extending by
/// increasing index; fails on the first one with empty total intersection.
/// `helly_sets` is the same walk over unbounded sets.
fn helly_masks(family: &[u64]) -> bool {
    fn extend(family: &[u64], chosen: &mut Vec<u64>, from: usize, common: u64) -> bool {
        for i in from..family.len() {
            let s = family[i];
            if chosen.iter().all(|&c| c & s != 0) {
                let meet = common & s;
                if !chosen.is_empty() && meet == 0 {
                    return false;
                }
                chosen.push(s);
                let ok = extend(family, chosen, i + 1, meet);
                chosen.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    extend(family, &mut Vec::new(), 0, u64::MAX)
}

/// Extended-triangle test: for every triangle `T`, the vertices adjacent to at
/// least two vertices of `T` must include one adjacent to all of the others.
pub fn is_clique_helly(graph: &Graph) -> bool {
    find_bad_extended_triangle(graph).is_none()
}

/// A triangle whose extended triangle lacks a universal vertex.
pub fn find_bad_extended_triangle(graph: &Graph) -> Option<[usize; 3]> {
    let n = graph.order();
    for a in 0..n {
        for b in graph.adjacency(a).iter().filter(|&b| b > a) {
            let ab = graph.adjacency(a).intersection(graph.adjacency(b));
            for c in ab.iter().filter(|&c| c > b) {
                let na = graph.adjacency(a);
                let nb = graph.adjacency(b);
                let nc = graph.adjacency(c);
                let mut ext = na.intersection(nb);
                ext.union_with(&na.intersection(nc));
                ext.union_with(&nb.intersection(nc));
                let universal = ext.iter().any(|u| {
                    let mut closed = graph.adjacency(u).clone();
                    closed.insert(u);
                    ext.is_subset(&closed)
                });
                if !universal {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Hereditary clique-Helly by definition: enumerates every induced subgraph
/// and tests its clique family with the brute-force Helly walk.
pub fn is_hereditary_helly_definitional(graph: &Graph) -> Result<bool> {
    Ok(find_non_helly_induced_subgraph(graph)?.is_none())
}

/// Smallest-mask vertex subset whose induced subgraph is not clique-Helly.
pub fn find_non_helly_induced_subgraph(graph: &Graph) -> Result<Option<VertexSet>> {
    let n = graph.order();
    if n > DEFINITIONAL_LIMIT {
        return Err(Error::GraphTooLarge {
            order: n,
            limit: DEFINITIONAL_LIMIT,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| graph.adjacency(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut cliques = Vec::new();
    for subset in 1u32..(1u32 << n) {
        // Fewer than four vertices cannot carry a non-Helly clique family.
        if subset.count_ones() < 4 {
            continue;
        }
        cliques.clear();
        mask_cliques(&adj, 0, subset, 0, &mut cliques);
        if cliques.len() >= 3 {
            let family: Vec<u64> = cliques.iter().map(|&c| c as u64).collect();
            if !helly_masks(&family) {
                return Ok(Some(VertexSet::from_ids(
                    n,
                    (0..n).filter(|&v| subset >> v & 1 == 1),
                )));
            }
        }
    }
    Ok(None)
}

/// Bron–Kerbosch on 32-bit masks.
fn mask_cliques(adj: &[u32], current: u32, candidates: u32, excluded: u32, out: &mut Vec<u32>) {
    if candidates == 0 {
        if excluded == 0 {
            out.push(current);
        }
        return;
    }
    let pool = candidates | excluded;
    let mut pivot = 0;
    let mut best = -1i32;
    let mut p = pool;
    while p != 0 {
        let u = p.trailing_zeros() as usize;
        p &= p - 1;
        let score = (adj[u] & candidates).count_ones() as i32;
        if score > best {
            best = score;
            pivot = u;
        }
    }
    let mut branch = candidates & !adj[pivot];
    let (mut candidates, mut excluded) = (candidates, excluded);
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        branch &= branch - 1;
        let nv = adj[v];
        mask_cliques(adj, current | 1 << v, candidates & nv, excluded & nv, out);
        candidates &= !(1 << v);
        excluded |= 1 << v;
    }
}

/// Six host vertices realizing the solid part of the Hajós diagram: the inner
/// triangle `inner` and outer vertices with `outer[i]` adjacent to both inner
/// vertices other than `inner[i]`. The dashed edges are `{outer[i], inner[i]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HajosEmbedding {
    pub inner: [usize; 3],
    pub outer: [usize; 3],
}

impl HajosEmbedding {
    pub fn dashed_edges(&self) -> [(usize, usize); 3] {
        [0, 1, 2].map(|i| (self.outer[i], self.inner[i]))
    }

    pub fn has_dashed_edge(&self, graph: &Graph) -> bool {
        self.dashed_edges()
            .iter()
            .any(|&(o, t)| graph.is_adjacent(o, t))
    }

    /// Checks distinctness and presence of all nine solid edges.
    pub fn is_valid_in(&self, graph: &Graph) -> bool {
        let all = [
            self.inner[0],
            self.inner[1],
            self.inner[2],
            self.outer[0],
            self.outer[1],
            self.outer[2],
        ];
        let distinct = (0..6).all(|i| (i + 1..6).all(|j| all[i] != all[j]));
        let n = graph.order();
        if !distinct || all.iter().any(|&v| v >= n) {
            return false;
        }
        let [t1, t2, t3] = self.inner;
        let solid = [
            (t1, t2),
            (t1, t3),
            (t2, t3),
            (self.outer[0], t2),
            (self.outer[0], t3),
            (self.outer[1], t1),
            (self.outer[1], t3),
            (self.outer[2], t1),
            (self.outer[2], t2),
        ];
        solid.iter().all(|&(u, v)| graph.is_adjacent(u, v))
    }
}

/// Visits one embedding per orbit of the diagram's symmetry group, taking
/// `inner` in ascending order.
fn for_each_hajos_embedding(graph: &Graph, mut visit: impl FnMut(HajosEmbedding) -> bool) {
    let n = graph.order();
    for t1 in 0..n {
        let n1 = graph.adjacency(t1);
        for t2 in n1.iter().filter(|&v| v > t1) {
            let n2 = graph.adjacency(t2);
            let n12 = n1.intersection(n2);
            for t3 in n12.iter().filter(|&v| v > t2) {
                let n3 = graph.adjacency(t3);
                let mut inner = VertexSet::new(n);
                for t in [t1, t2, t3] {
                    inner.insert(t);
                }
                let o1s = n2.intersection(n3).difference(&inner);
                let o2s = n1.intersection(n3).difference(&inner);
                let o3s = n12.difference(&inner);
                for o1 in &o1s {
                    for o2 in o2s.iter().filter(|&v| v != o1) {
                        for o3 in o3s.iter().filter(|&v| v != o1 && v != o2) {
                            if !visit(HajosEmbedding {
                                inner: [t1, t2, t3],
                                outer: [o1, o2, o3],
                            }) {
                                return;
                            }
                        }
                    }
                }
            }
        }
    }
}

pub fn enumerate_hajos_embeddings(graph: &Graph) -> Vec<HajosEmbedding> {
    let mut out = Vec::new();
    for_each_hajos_embedding(graph, |e| {
        out.push(e);
        true
    });
    out
}

/// First embedding with none of its dashed edges present.
pub fn find_uncovered_hajos_embedding(graph: &Graph) -> Option<HajosEmbedding> {
    let mut found = None;
    for_each_hajos_embedding(graph, |e| {
        if e.has_dashed_edge(graph) {
            true
        } else {
            found = Some(e);
            false
        }
    });
    found
}

/// Hereditary clique-Helly test via the Hajós diagram: every embedding of the
/// solid edges must have at least one dashed edge.
pub fn hajos_compatible(graph: &Graph) -> bool {
    find_uncovered_hajos_embedding(graph).is_none()
}

/// Brute-force Helly check of the clique family of `graph`.
pub fn is_clique_helly_by_family(graph: &Graph) -> Result<bool> {
    let family = maximal_cliques(graph)?;
    is_helly_family(family.as_slice())
}
