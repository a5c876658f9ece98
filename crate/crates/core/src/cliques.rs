//! Maximal-clique enumeration and the clique operator `K`.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_VERTEX_BUDGET: usize = 200_000;

/// The maximal complete vertex sets of a host graph, sorted by size and then
/// by ascending member list. Position `i` is vertex `i` of `K(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueFamily {
    host_order: usize,
    cliques: Vec<VertexSet>,
}

impl CliqueFamily {
    fn from_unsorted(host_order: usize, mut cliques: Vec<VertexSet>) -> Self {
        cliques.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp_members(b)));
        CliqueFamily {
            host_order,
            cliques,
        }
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn get(&self, index: usize) -> &VertexSet {
        &self.cliques[index]
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.cliques.iter()
    }

    /// Index of `set` in the family, if it is one of the cliques.
    pub fn position(&self, set: &VertexSet) -> Option<usize> {
        self.cliques
            .binary_search_by(|c| c.len().cmp(&set.len()).then_with(|| c.cmp_members(set)))
            .ok()
    }

    pub fn max_clique_size(&self) -> usize {
        self.cliques.last().map_or(0, VertexSet::len)
    }

    /// Indices of the cliques containing host vertex `x`.
    pub fn containing(&self, x: usize) -> VertexSet {
        VertexSet::from_ids(
            self.len(),
            self.cliques
                .iter()
                .enumerate()
                .filter(|(_, c)| c.contains(x))
                .map(|(i, _)| i),
        )
    }

    /// Intersection graph of the family.
    pub fn intersection_graph(&self) -> Graph {
        let k = self.len();
        let mut adj = vec![VertexSet::new(k); k];
        for i in 0..k {
            for j in i + 1..k {
                if self.cliques[i].intersects(&self.cliques[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }
}

impl<'a> IntoIterator for &'a CliqueFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.cliques.iter()
    }
}

/// Visits every maximal clique once, in search order, until `visit` breaks.
///
/// Bron–Kerbosch over candidate and excluded sets, pivoting on the vertex of
/// `P ∪ X` with the most neighbors in `P`.
pub fn for_each_maximal_clique<F>(graph: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let n = graph.order();
    let mut current = VertexSet::new(n);
    bron_kerbosch(
        graph,
        &mut current,
        VertexSet::full(n),
        VertexSet::new(n),
        &mut visit,
    )
}

fn bron_kerbosch<F>(
    graph: &Graph,
    current: &mut VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    if candidates.is_empty() {
        if excluded.is_empty() {
            return visit(current);
        }
        return ControlFlow::Continue(());
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&u| {
            (
                graph.adjacency(u).intersection_len(&candidates),
                std::cmp::Reverse(u),
            )
        })
        .expect("candidates nonempty");
    let branch = candidates.difference(graph.adjacency(pivot));
    for v in &branch {
        let nbrs = graph.adjacency(v);
        current.insert(v);
        bron_kerbosch(
            graph,
            current,
            candidates.intersection(nbrs),
            excluded.intersection(nbrs),
            visit,
        )?;
        current.remove(v);
        candidates.remove(v);
        excluded.insert(v);
    }
    ControlFlow::Continue(())
}

pub fn maximal_cliques(graph: &Graph) -> Result<CliqueFamily> {
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut found = Vec::new();
    let _ = for_each_maximal_clique(graph, |c| {
        found.push(c.clone());
        ControlFlow::Continue(())
    });
    Ok(CliqueFamily::from_unsorted(graph.order(), found))
}

/// Outcome of a clique enumeration that stopped once `limit` was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueLimitExceeded {
    pub limit: usize,
    /// Number of cliques found before stopping (always `limit + 1`).
    pub counted: usize,
}

/// Enumerates maximal cliques but aborts as soon as more than `limit` exist.
pub fn maximal_cliques_bounded(
    graph: &Graph,
    limit: usize,
) -> Result<Result<CliqueFamily, CliqueLimitExceeded>> {
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut found = Vec::new();
    let flow = for_each_maximal_clique(graph, |c| {
        if found.len() == limit {
            return ControlFlow::Break(());
        }
        found.push(c.clone());
        ControlFlow::Continue(())
    });
    Ok(match flow {
        ControlFlow::Continue(()) => Ok(CliqueFamily::from_unsorted(graph.order(), found)),
        ControlFlow::Break(()) => Err(CliqueLimitExceeded {
            limit,
            counted: limit + 1,
        }),
    })
}

/// `K(G)` together with the clique family naming its vertices.
pub fn clique_graph(graph: &Graph) -> Result<(Graph, CliqueFamily)> {
    let family = maximal_cliques(graph)?;
    Ok((family.intersection_graph(), family))
}

/// Iterates `K^0 .. K^steps`, stopping early when the next order would exceed
/// the budget.
#[derive(Debug, Clone)]
pub struct Iteration {
    /// `graphs[i]` is `K^i(G)`.
    pub graphs: Vec<Graph>,
    pub truncation: Option<Truncation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Truncation {
    /// Index of the iterate that was not built.
    pub step: usize,
    pub vertex_budget: usize,
    /// Lower bound on the order of that iterate.
    pub projected_order_at_least: usize,
}

impl Iteration {
    pub fn orders(&self) -> Vec<usize> {
        self.graphs.iter().map(Graph::order).collect()
    }
}

pub fn iterate(graph: &Graph, steps: usize, vertex_budget: usize) -> Result<Iteration> {
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if vertex_budget < graph.order() {
        return Err(Error::ParameterOutOfRange {
            name: "vertex_budget",
            value: vertex_budget,
            expected: "vertex_budget >= order of the input",
        });
    }
    let mut graphs = vec![graph.clone()];
    for step in 1..=steps {
        let last = graphs.last().expect("nonempty");
        match next_iterate(last, vertex_budget)? {
            Ok(next) => graphs.push(next),
            Err(exceeded) => {
                return Ok(Iteration {
                    graphs,
                    truncation: Some(Truncation {
                        step,
                        vertex_budget,
                        projected_order_at_least: exceeded.counted,
                    }),
                })
            }
        }
    }
    Ok(Iteration {
        graphs,
        truncation: None,
    })
}

pub(crate) fn next_iterate(
    graph: &Graph,
    vertex_budget: usize,
) -> Result<Result<Graph, CliqueLimitExceeded>> {
    Ok(maximal_cliques_bounded(graph, vertex_budget)?.map(|family| family.intersection_graph()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, hajos_sun, octahedron, path};
    use crate::iso::is_isomorphic;

    fn members(family: &CliqueFamily) -> Vec<Vec<usize>> {
        family.iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn cliques_of_small_graphs() {
        assert_eq!(
            members(&maximal_cliques(&cycle(4).unwrap()).unwrap()),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        let oct = maximal_cliques(&octahedron(3).unwrap()).unwrap();
        assert_eq!(oct.len(), 8);
        assert!(oct
            .iter()
            .all(|c| c.len() == 3 && c.iter().map(|v| v / 2).collect::<Vec<_>>() == vec![0, 1, 2]));
        assert_eq!(
            members(&maximal_cliques(&hajos_sun()).unwrap()),
            vec![vec![0, 1, 2], vec![0, 1, 5], vec![0, 2, 4], vec![1, 2, 3]]
        );
        assert_eq!(maximal_cliques(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn clique_graphs() {
        let (k_sun, _) = clique_graph(&hajos_sun()).unwrap();
        assert_eq!(k_sun, complete(4).unwrap());
        let (k_oct, _) = clique_graph(&octahedron(3).unwrap()).unwrap();
        assert!(k_oct.is_octahedron());
        assert!(is_isomorphic(&k_oct, &octahedron(4).unwrap()));
        let (k_k5, _) = clique_graph(&complete(5).unwrap()).unwrap();
        assert_eq!(k_k5.order(), 1);
        let (k_edgeless, _) = clique_graph(&Graph::empty(4)).unwrap();
        assert_eq!((k_edgeless.order(), k_edgeless.edge_count()), (4, 0));
    }

    #[test]
    fn iterate_orders() {
        assert_eq!(
            iterate(&complete(3).unwrap(), 2, 100).unwrap().orders(),
            vec![3, 1, 1]
        );
        assert_eq!(
            iterate(&cycle(4).unwrap(), 1, 100).unwrap().orders(),
            vec![4, 4]
        );
        let it = iterate(&octahedron(3).unwrap(), 3, 1000).unwrap();
        assert_eq!(it.orders(), vec![6, 8, 16, 256]);
        assert!(it.truncation.is_none());
    }

    #[test]
    fn iterate_truncates_at_budget() {
        let it = iterate(&octahedron(3).unwrap(), 10, 1000).unwrap();
        assert_eq!(it.orders(), vec![6, 8, 16, 256]);
        assert_eq!(
            it.truncation,
            Some(Truncation {
                step: 4,
                vertex_budget: 1000,
                projected_order_at_least: 1001
            })
        );
        assert!(iterate(&path(3).unwrap(), 1, 2).is_err());
    }

    #[test]
    fn bounded_enumeration_aborts() {
        let oct = octahedron(5).unwrap();
        assert_eq!(
            maximal_cliques_bounded(&oct, 31).unwrap(),
            Err(CliqueLimitExceeded {
                limit: 31,
                counted: 32
            })
        );
        assert_eq!(
            maximal_cliques_bounded(&oct, 32).unwrap().unwrap().len(),
            32
        );
    }

    #[test]
    fn family_lookup() {
        let family = maximal_cliques(&hajos_sun()).unwrap();
        for (i, c) in family.iter().enumerate() {
            assert_eq!(family.position(c), Some(i));
        }
        assert_eq!(family.position(&VertexSet::from_ids(6, [3, 4])), None);
        assert_eq!(family.containing(0).to_vec(), vec![0, 1, 2]);
    }
}
