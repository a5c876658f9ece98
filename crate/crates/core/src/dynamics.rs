//! Convergence classification of the iterated clique graph sequence.

use serde::Serialize;

use crate::cliques::{next_iterate, DEFAULT_VERTEX_BUDGET};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::helly::is_clique_helly;
use crate::iso::{canonical_form, IsoClassIndex};

pub const DEFAULT_MAX_ITERATIONS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub max_iterations: usize,
    pub vertex_budget: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_iterations: DEFAULT_MAX_ITERATIONS,
            vertex_budget: DEFAULT_VERTEX_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// `K^m(G) ≅ K^n(G)` with `m` least and `n` the least partner of `m`.
    Convergent { m: usize, n: usize },
    /// Neither a repeat nor a proof of divergence within the budgets.
    BudgetExceeded { exhausted: Exhausted },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exhausted {
    Iterations,
    /// The next iterate would have more than `vertex_budget` vertices.
    Vertices {
        projected_order_at_least: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Behavior {
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Orders of `K^0 ..` for every iterate that was built.
    pub orders: Vec<usize>,
    pub budgets: Budgets,
}

impl Behavior {
    pub fn is_convergent(&self) -> bool {
        matches!(self.verdict, Verdict::Convergent { .. })
    }
}

pub fn classify_behavior(graph: &Graph, budgets: Budgets) -> Result<Behavior> {
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if budgets.max_iterations == 0 || budgets.vertex_budget == 0 {
        return Err(Error::Precondition("budgets must be positive".into()));
    }
    let mut seen = IsoClassIndex::new();
    let mut orders = vec![graph.order()];
    let mut current = graph.clone();
    seen.insert(current.clone(), 0usize);
    for step in 1..=budgets.max_iterations {
        let next = match next_iterate(&current, budgets.vertex_budget)? {
            Ok(next) => next,
            Err(exceeded) => {
                return Ok(Behavior {
                    verdict: Verdict::BudgetExceeded {
                        exhausted: Exhausted::Vertices {
                            projected_order_at_least: exceeded.counted,
                        },
                    },
                    orders,
                    budgets,
                })
            }
        };
        orders.push(next.order());
        if let Some(&m) = seen.find(&next) {
            return Ok(Behavior {
                verdict: Verdict::Convergent { m, n: step },
                orders,
                budgets,
            });
        }
        seen.insert(next.clone(), step);
        current = next;
    }
    Ok(Behavior {
        verdict: Verdict::BudgetExceeded {
            exhausted: Exhausted::Iterations,
        },
        orders,
        budgets,
    })
}

/// Recomputes the iterates and compares the certificates at `m` and `n`
/// directly, independently of the classification index.
pub fn reassert_convergence(graph: &Graph, behavior: &Behavior) -> Result<bool> {
    let Verdict::Convergent { m, n } = behavior.verdict else {
        return Ok(false);
    };
    let iteration = crate::cliques::iterate(graph, n, usize::MAX)?;
    let certs: Vec<_> = iteration.graphs.iter().map(canonical_form).collect();
    let first_repeat =
        (1..certs.len()).find_map(|j| (0..j).find(|&i| certs[i] == certs[j]).map(|i| (i, j)));
    Ok(first_repeat == Some((m, n)))
}

/// For a clique-Helly graph, true iff it classifies as convergent. A false
/// return is an anomaly: either the budgets were too small or a bug.
pub fn helly_convergence_crosscheck(graph: &Graph, budgets: Budgets) -> Result<bool> {
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !is_clique_helly(graph) {
        return Err(Error::NotCliqueHelly);
    }
    Ok(classify_behavior(graph, budgets)?.is_convergent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, hajos_sun, octahedron, path};

    #[test]
    fn convergent_examples() {
        let c4 = classify_behavior(&cycle(4).unwrap(), Budgets::default()).unwrap();
        assert_eq!(c4.verdict, Verdict::Convergent { m: 0, n: 1 });
        assert_eq!(c4.orders, vec![4, 4]);
        let k3 = classify_behavior(&complete(3).unwrap(), Budgets::default()).unwrap();
        assert_eq!(k3.verdict, Verdict::Convergent { m: 1, n: 2 });
        assert_eq!(k3.orders, vec![3, 1, 1]);
        for g in [cycle(4).unwrap(), complete(3).unwrap(), hajos_sun()] {
            let b = classify_behavior(&g, Budgets::default()).unwrap();
            assert!(reassert_convergence(&g, &b).unwrap());
        }
    }

    #[test]
    fn octahedron_exhausts_vertex_budget() {
        let budgets = Budgets {
            max_iterations: 10,
            vertex_budget: 100_000,
        };
        let b = classify_behavior(&octahedron(3).unwrap(), budgets).unwrap();
        assert_eq!(b.orders, vec![6, 8, 16, 256]);
        assert_eq!(
            b.verdict,
            Verdict::BudgetExceeded {
                exhausted: Exhausted::Vertices {
                    projected_order_at_least: 100_001
                }
            }
        );
        assert!(b.orders.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn iteration_budget() {
        let b = classify_behavior(
            &path(6).unwrap(),
            Budgets {
                max_iterations: 2,
                vertex_budget: 100,
            },
        )
        .unwrap();
        assert_eq!(b.orders, vec![6, 5, 4]);
        assert_eq!(
            b.verdict,
            Verdict::BudgetExceeded {
                exhausted: Exhausted::Iterations
            }
        );
    }

    #[test]
    fn helly_crosscheck() {
        assert!(helly_convergence_crosscheck(&cycle(4).unwrap(), Budgets::default()).unwrap());
        assert!(helly_convergence_crosscheck(&complete(4).unwrap(), Budgets::default()).unwrap());
        let p5 = path(5).unwrap();
        assert!(helly_convergence_crosscheck(&p5, Budgets::default()).unwrap());
        let b = classify_behavior(&p5, Budgets::default()).unwrap();
        assert_eq!(b.orders, vec![5, 4, 3, 2, 1, 1]);
        assert_eq!(
            helly_convergence_crosscheck(&hajos_sun(), Budgets::default()),
            Err(Error::NotCliqueHelly)
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            classify_behavior(&Graph::empty(0), Budgets::default()),
            Err(Error::EmptyGraph)
        );
        assert!(classify_behavior(
            &cycle(5).unwrap(),
            Budgets {
                max_iterations: 0,
                vertex_budget: 5
            }
        )
        .is_err());
    }
}
