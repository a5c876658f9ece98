//! Executable checks for the low-degree structure results.
//!
//! Each checker quantifies over the configurations named by its hypothesis.
//! A verdict is `Vacuous` when no such configuration exists, `Pass` when all
//! of them satisfy the conclusion, and `Fail` with the first violating
//! configuration otherwise. Every `Fail` witness can be re-verified with
//! [`Witness::recheck`], which evaluates the violated condition directly.

use serde::Serialize;

use crate::dynamics::{classify_behavior, Behavior, Budgets, Verdict as BehaviorVerdict};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::helly::{find_uncovered_hajos_embedding, HajosEmbedding};
use crate::structure::{has_crossbar, triangles, K2Kind, K2Structure, Triangle};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    /// Completes inside the union of two suitably separated cliques lie in one of them.
    CompleteInUnion,
    /// With `Δ ≤ 4`, neckties contain only triangles.
    NecktiesOnlyTriangles,
    /// Neckties are exactly the `Q_T` of inner triangles, each with three ears.
    NecktieCharacterization,
    /// Adjacency in `K²(G)` of stars and neckties in terms of the host.
    AdjacencyConditions,
    /// Inner triangle meeting another triangle in one vertex.
    IntersectingInnerOne,
    /// Two inner triangles sharing an edge.
    IntersectingInnerTwo,
    /// No path of three neckties in `K²(G)`.
    NoNecktiePath,
    /// Two stars and two neckties never induce the forbidden diamonds.
    ForbiddenDiamonds,
    /// Four stars and a necktie in the first forbidden configuration.
    LemmaIii,
    /// Four stars and a necktie in the second forbidden configuration.
    LemmaIv,
    /// `K²(G)` is Hajós-compatible, hence hereditary clique-Helly.
    MainTheoremConfig,
    /// A 5-clique in a connected graph with `Δ ≤ 4` forces `K5`.
    CliqueSizeBound,
    /// Connected, not the octahedron, and `Δ ≤ 4` implies convergent.
    DivergenceNeedsDegreeFive,
}

impl LemmaId {
    pub const ALL: [LemmaId; 13] = [
        LemmaId::CompleteInUnion,
        LemmaId::NecktiesOnlyTriangles,
        LemmaId::NecktieCharacterization,
        LemmaId::AdjacencyConditions,
        LemmaId::IntersectingInnerOne,
        LemmaId::IntersectingInnerTwo,
        LemmaId::NoNecktiePath,
        LemmaId::ForbiddenDiamonds,
        LemmaId::LemmaIii,
        LemmaId::LemmaIv,
        LemmaId::MainTheoremConfig,
        LemmaId::CliqueSizeBound,
        LemmaId::DivergenceNeedsDegreeFive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::CompleteInUnion => "complete_in_union",
            LemmaId::NecktiesOnlyTriangles => "neckties_only_triangles",
            LemmaId::NecktieCharacterization => "necktie_characterization",
            LemmaId::AdjacencyConditions => "adjacency_conditions",
            LemmaId::IntersectingInnerOne => "intersecting_inner_one",
            LemmaId::IntersectingInnerTwo => "intersecting_inner_two",
            LemmaId::NoNecktiePath => "no_necktie_path",
            LemmaId::ForbiddenDiamonds => "forbidden_diamonds",
            LemmaId::LemmaIii => "lemma_iii",
            LemmaId::LemmaIv => "lemma_iv",
            LemmaId::MainTheoremConfig => "main_theorem_config",
            LemmaId::CliqueSizeBound => "clique_size_bound",
            LemmaId::DivergenceNeedsDegreeFive => "divergence_needs_degree_five",
        }
    }

    pub fn gate(self) -> Gate {
        match self {
            LemmaId::CompleteInUnion => Gate::Any,
            LemmaId::NecktiesOnlyTriangles => Gate::MaxDegreeFour,
            LemmaId::CliqueSizeBound => Gate::ConnectedMaxDegreeFour,
            LemmaId::DivergenceNeedsDegreeFive => Gate::Connected,
            _ => Gate::LowDegree,
        }
    }
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<LemmaId> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown lemma {s:?}")))
    }
}

/// Host preconditions for a checker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Any,
    MaxDegreeFour,
    ConnectedMaxDegreeFour,
    Connected,
    LowDegree,
}

impl Gate {
    pub fn check(self, graph: &Graph) -> Result<()> {
        if graph.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let ok = match self {
            Gate::Any => true,
            Gate::MaxDegreeFour => graph.max_degree() <= 4,
            Gate::ConnectedMaxDegreeFour => graph.is_connected() && graph.max_degree() <= 4,
            Gate::Connected => graph.is_connected(),
            Gate::LowDegree => graph.is_low_degree(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(match self {
                Gate::Any => unreachable!(),
                Gate::MaxDegreeFour => "maximum degree at most 4".into(),
                Gate::ConnectedMaxDegreeFour => "connected with maximum degree at most 4".into(),
                Gate::Connected => "connected".into(),
                Gate::LowDegree => "connected, maximum degree at most 4, not the octahedron".into(),
            }))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LemmaVerdict {
    Pass,
    Vacuous,
    Fail { witness: Witness },
}

impl LemmaVerdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, LemmaVerdict::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub host: String,
    #[serde(flatten)]
    pub verdict: LemmaVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiamondForm {
    /// All pairs adjacent except the two neckties.
    R,
    /// All pairs adjacent except `a*` and the second necktie.
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    StarStar,
    StarNecktie,
    NecktieNecktie,
}

/// A violating configuration. Host vertices, host clique indices (`clique`)
/// and `K²(G)` vertex indices (`k2`) are kept apart by field names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "witness", rename_all = "snake_case")]
pub enum Witness {
    CompleteOutsideBoth {
        q1_clique: usize,
        q2_clique: usize,
        complete: Vec<usize>,
    },
    NecktieMemberSize {
        necktie_k2: usize,
        member_clique: usize,
        size: usize,
    },
    NecktieCenterCount {
        necktie_k2: usize,
        matching_inner_triangles: usize,
    },
    EarCount {
        center: Triangle,
        ears: usize,
    },
    QtNotClique {
        center: Triangle,
    },
    QtHasCommonVertex {
        center: Triangle,
        common: Vec<usize>,
    },
    AdjacencyMismatch {
        pair: PairKind,
        a_k2: usize,
        b_k2: usize,
        predicted: bool,
        actual: bool,
    },
    NeighborhoodNotFourCycle {
        vertex: usize,
        inner: Triangle,
        other: Triangle,
    },
    InnerEar {
        center: Triangle,
        ear_clique: usize,
        other: Triangle,
    },
    NormalVertexInTriangle {
        center: Triangle,
        vertex: usize,
        other: Triangle,
    },
    InnerNecktiesNotAdjacent {
        inner: Triangle,
        other: Triangle,
    },
    NecktiePath {
        path_k2: [usize; 3],
    },
    Diamond {
        form: DiamondForm,
        a_k2: usize,
        b_k2: usize,
        q1_k2: usize,
        q2_k2: usize,
    },
    ConfigurationIii {
        a_k2: usize,
        b_k2: usize,
        x_k2: usize,
        z_k2: usize,
        q_k2: usize,
    },
    ConfigurationIv {
        a_k2: usize,
        b_k2: usize,
        c_k2: usize,
        x_k2: usize,
        q_k2: usize,
    },
    UncoveredHajos {
        embedding_k2: HajosEmbedding,
    },
    OversizedClique {
        clique: usize,
        size: usize,
    },
    NotConvergent {
        orders: Vec<usize>,
    },
}

fn fail(witness: Witness) -> LemmaVerdict {
    LemmaVerdict::Fail { witness }
}

fn induces_four_cycle(graph: &Graph, x: usize) -> bool {
    let nbrs = graph.adjacency(x);
    nbrs.len() == 4
        && nbrs
            .iter()
            .all(|v| graph.adjacency(v).intersection_len(nbrs) == 2)
}

fn necktie_indices(s: &K2Structure) -> Vec<usize> {
    (0..s.vertices().len())
        .filter(|&i| s.vertices()[i].is_necktie())
        .collect()
}

fn star_indices(s: &K2Structure) -> Vec<usize> {
    (0..s.vertices().len())
        .filter(|&i| s.vertices()[i].is_star())
        .collect()
}

fn check_complete_in_union_on(s: &K2Structure) -> LemmaVerdict {
    let g = s.host();
    let cliques = s.cliques();
    let mut exercised = false;
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let (q1, q2) = (cliques.get(i), cliques.get(j));
            let union = q1.union(q2);
            let meet = q1.intersection(q2);
            let outside = union.difference(&meet);
            if outside.iter().any(|v| g.adjacency(v).intersects(&outside)) {
                continue;
            }
            exercised = true;
            if let Some(c) = complete_outside_both(g, &union, q1, q2) {
                return fail(Witness::CompleteOutsideBoth {
                    q1_clique: i,
                    q2_clique: j,
                    complete: c,
                });
            }
        }
    }
    if exercised {
        LemmaVerdict::Pass
    } else {
        LemmaVerdict::Vacuous
    }
}

/// Enumerates every complete subset of `union` by extension and returns the
/// first contained in neither clique.
fn complete_outside_both(
    g: &Graph,
    union: &VertexSet,
    q1: &VertexSet,
    q2: &VertexSet,
) -> Option<Vec<usize>> {
    fn grow(
        g: &Graph,
        current: &mut VertexSet,
        candidates: VertexSet,
        q1: &VertexSet,
        q2: &VertexSet,
    ) -> Option<Vec<usize>> {
        if !current.is_empty() && !current.is_subset(q1) && !current.is_subset(q2) {
            return Some(current.to_vec());
        }
        let mut rest = candidates;
        while let Some(v) = rest.first() {
            rest.remove(v);
            current.insert(v);
            let next = rest.intersection(g.adjacency(v));
            if let Some(found) = grow(g, current, next, q1, q2) {
                return Some(found);
            }
            current.remove(v);
        }
        None
    }
    grow(g, &mut VertexSet::new(g.order()), union.clone(), q1, q2)
}

fn check_neckties_only_triangles_on(s: &K2Structure) -> LemmaVerdict {
    let neckties = necktie_indices(s);
    if neckties.is_empty() {
        return LemmaVerdict::Vacuous;
    }
    for k in neckties {
        for q in &s.vertices()[k].members {
            let size = s.cliques().get(q).len();
            if size != 3 {
                return fail(Witness::NecktieMemberSize {
                    necktie_k2: k,
                    member_clique: q,
                    size,
                });
            }
        }
    }
    LemmaVerdict::Pass
}

fn check_necktie_characterization_on(s: &K2Structure) -> LemmaVerdict {
    let neckties = necktie_indices(s);
    let inner = s.inner_triangles();
    if neckties.is_empty() && inner.is_empty() {
        return LemmaVerdict::Vacuous;
    }
    for &k in &neckties {
        let members = &s.vertices()[k].members;
        let matching: Vec<_> = inner
            .iter()
            .filter(|t| {
                s.q_of_triangle(t)
                    .map(|q| &q.members == members)
                    .unwrap_or(false)
            })
            .collect();
        if matching.len() != 1 {
            return fail(Witness::NecktieCenterCount {
                necktie_k2: k,
                matching_inner_triangles: matching.len(),
            });
        }
        if let K2Kind::Necktie { center, ears } = &s.vertices()[k].kind {
            if ears.len() != 3 {
                return fail(Witness::EarCount {
                    center: **center,
                    ears: ears.len(),
                });
            }
        }
    }
    for t in inner {
        let q = s.q_of_triangle(t).expect("inner triangle");
        if s.k2_cliques().position(&q.members).is_none() {
            return fail(Witness::QtNotClique { center: **t });
        }
        let mut common = s.host().vertex_set();
        for i in &q.members {
            common.intersect_with(s.cliques().get(i));
        }
        if !common.is_empty() {
            return fail(Witness::QtHasCommonVertex {
                center: **t,
                common: common.to_vec(),
            });
        }
    }
    LemmaVerdict::Pass
}

fn predicted_adjacency(s: &K2Structure, a: usize, b: usize) -> Option<(PairKind, bool)> {
    let g = s.host();
    let (va, vb) = (&s.vertices()[a], &s.vertices()[b]);
    match (&va.kind, &vb.kind) {
        (K2Kind::Star { center: x, .. }, K2Kind::Star { center: y, .. }) => {
            Some((PairKind::StarStar, g.is_adjacent(*x, *y)))
        }
        (K2Kind::Star { center: x, .. }, K2Kind::Necktie { center: t, .. })
        | (K2Kind::Necktie { center: t, .. }, K2Kind::Star { center: x, .. }) => Some((
            PairKind::StarNecktie,
            t.vertices()
                .iter()
                .filter(|&&v| g.is_adjacent(*x, v))
                .count()
                >= 2,
        )),
        (K2Kind::Necktie { center: t, .. }, K2Kind::Necktie { center: u, .. }) => {
            let common = t.common(u);
            let predicted = match common.as_slice() {
                [_, _] => true,
                &[v] => has_crossbar(g, t, u, v),
                _ => false,
            };
            Some((PairKind::NecktieNecktie, predicted))
        }
        _ => None,
    }
}

fn check_adjacency_conditions_on(s: &K2Structure) -> LemmaVerdict {
    let k = s.vertices().len();
    if k < 2 {
        return LemmaVerdict::Vacuous;
    }
    for a in 0..k {
        for b in a + 1..k {
            if let Some((kind, predicted)) = predicted_adjacency(s, a, b) {
                let actual = s.k2_adjacent(a, b);
                if predicted != actual {
                    return fail(Witness::AdjacencyMismatch {
                        pair: kind,
                        a_k2: a,
                        b_k2: b,
                        predicted,
                        actual,
                    });
                }
            }
        }
    }
    LemmaVerdict::Pass
}

/// Ear clique indices of `Q_T` that are inner triangles.
fn inner_ears(s: &K2Structure, t: &Triangle) -> Vec<usize> {
    let q = s.q_of_triangle(t).expect("inner triangle");
    let K2Kind::Necktie { ears, .. } = q.kind else {
        unreachable!()
    };
    ears.into_iter()
        .filter(|&e| {
            let c = s.cliques().get(e);
            c.len() == 3
                && Triangle::from_set(s.host(), c)
                    .map(|tri| s.inner_triangles().iter().any(|i| *i.triangle() == tri))
                    .unwrap_or(false)
        })
        .collect()
}

fn check_intersecting_inner_one_on(s: &K2Structure) -> LemmaVerdict {
    let g = s.host();
    let all = triangles(g);
    let mut exercised = false;
    for t in s.inner_triangles() {
        for other in &all {
            let common = t.common(other);
            let &[x] = common.as_slice() else { continue };
            exercised = true;
            if !induces_four_cycle(g, x) {
                return fail(Witness::NeighborhoodNotFourCycle {
                    vertex: x,
                    inner: **t,
                    other: *other,
                });
            }
            if !s.inner_triangles().iter().any(|i| i.triangle() == other) {
                continue;
            }
            if let Some(&ear) = inner_ears(s, t).first() {
                return fail(Witness::InnerEar {
                    center: **t,
                    ear_clique: ear,
                    other: *other,
                });
            }
            for v in t.others(x) {
                if s.star_vertex(v).is_some() {
                    return fail(Witness::NormalVertexInTriangle {
                        center: **t,
                        vertex: v,
                        other: *other,
                    });
                }
            }
            let adjacent = match (s.necktie_vertex(t), s.necktie_vertex(other)) {
                (Some(a), Some(b)) => s.k2_adjacent(a, b),
                _ => false,
            };
            if !adjacent {
                return fail(Witness::InnerNecktiesNotAdjacent {
                    inner: **t,
                    other: *other,
                });
            }
        }
    }
    if exercised {
        LemmaVerdict::Pass
    } else {
        LemmaVerdict::Vacuous
    }
}

fn check_intersecting_inner_two_on(s: &K2Structure) -> LemmaVerdict {
    let g = s.host();
    let mut exercised = false;
    for t in s.inner_triangles() {
        for u in s.inner_triangles() {
            let common = t.common(u);
            let &[x, y] = common.as_slice() else { continue };
            exercised = true;
            for v in [x, y] {
                if !induces_four_cycle(g, v) {
                    return fail(Witness::NeighborhoodNotFourCycle {
                        vertex: v,
                        inner: **t,
                        other: **u,
                    });
                }
            }
            let u_clique = s.clique_index(u);
            if let Some(&ear) = inner_ears(s, t).iter().find(|&&e| Some(e) != u_clique) {
                return fail(Witness::InnerEar {
                    center: **t,
                    ear_clique: ear,
                    other: **u,
                });
            }
            for v in t.vertices() {
                if v != x && v != y && s.star_vertex(v).is_some() {
                    return fail(Witness::NormalVertexInTriangle {
                        center: **t,
                        vertex: v,
                        other: **u,
                    });
                }
            }
        }
    }
    if exercised {
        LemmaVerdict::Pass
    } else {
        LemmaVerdict::Vacuous
    }
}

fn check_no_necktie_path_on(s: &K2Structure) -> LemmaVerdict {
    let neckties = necktie_indices(s);
    if neckties.len() < 3 {
        return LemmaVerdict::Vacuous;
    }
    for &mid in &neckties {
        let ends: Vec<usize> = neckties
            .iter()
            .copied()
            .filter(|&q| q != mid && s.k2_adjacent(q, mid))
            .collect();
        if let [first, second, ..] = ends.as_slice() {
            return fail(Witness::NecktiePath {
                path_k2: [*first, mid, *second],
            });
        }
    }
    LemmaVerdict::Pass
}

fn diamond_form(s: &K2Structure, a: usize, b: usize, q1: usize, q2: usize) -> Option<DiamondForm> {
    let adj = |u, v| s.k2_adjacent(u, v);
    let (ab, aq1, aq2, bq1, bq2, qq) = (
        adj(a, b),
        adj(a, q1),
        adj(a, q2),
        adj(b, q1),
        adj(b, q2),
        adj(q1, q2),
    );
    if ab && aq1 && aq2 && bq1 && bq2 && !qq {
        Some(DiamondForm::R)
    } else if ab && aq1 && !aq2 && bq1 && bq2 && qq {
        Some(DiamondForm::L)
    } else {
        None
    }
}

fn check_forbidden_diamonds_on(s: &K2Structure) -> LemmaVerdict {
    let stars = star_indices(s);
    let neckties = necktie_indices(s);
    if stars.len() < 2 || neckties.len() < 2 {
        return LemmaVerdict::Vacuous;
    }
    for &a in &stars {
        for &b in &stars {
            if a == b || !s.k2_adjacent(a, b) {
                continue;
            }
            for &q1 in &neckties {
                for &q2 in &neckties {
                    if q1 == q2 {
                        continue;
                    }
                    if let Some(form) = diamond_form(s, a, b, q1, q2) {
                        return fail(Witness::Diamond {
                            form,
                            a_k2: a,
                            b_k2: b,
                            q1_k2: q1,
                            q2_k2: q2,
                        });
                    }
                }
            }
        }
    }
    LemmaVerdict::Pass
}

fn check_lemma_iii_on(s: &K2Structure) -> LemmaVerdict {
    let stars = star_indices(s);
    let neckties = necktie_indices(s);
    let adj = |u, v| s.k2_adjacent(u, v);
    let mut exercised = false;
    for &a in &stars {
        for &b in stars.iter().filter(|&&b| b != a && adj(a, b)) {
            for &q in neckties.iter().filter(|&&q| adj(a, q) && adj(b, q)) {
                for &x in stars
                    .iter()
                    .filter(|&&x| x != a && x != b && adj(b, x) && adj(x, q))
                {
                    for &z in stars
                        .iter()
                        .filter(|&&z| z != a && z != b && z != x && adj(b, z) && adj(a, z))
                    {
                        exercised = true;
                        if !adj(a, x) && !adj(z, q) {
                            return fail(Witness::ConfigurationIii {
                                a_k2: a,
                                b_k2: b,
                                x_k2: x,
                                z_k2: z,
                                q_k2: q,
                            });
                        }
                    }
                }
            }
        }
    }
    if exercised {
        LemmaVerdict::Pass
    } else {
        LemmaVerdict::Vacuous
    }
}

fn check_lemma_iv_on(s: &K2Structure) -> LemmaVerdict {
    let stars = star_indices(s);
    let neckties = necktie_indices(s);
    let adj = |u, v| s.k2_adjacent(u, v);
    let mut exercised = false;
    for &a in &stars {
        for &b in stars.iter().filter(|&&b| b != a && adj(a, b)) {
            for &c in stars
                .iter()
                .filter(|&&c| c != a && c != b && adj(a, c) && adj(b, c))
            {
                for &x in stars
                    .iter()
                    .filter(|&&x| x != a && x != b && x != c && adj(b, x) && adj(c, x))
                {
                    for &q in neckties.iter().filter(|&&q| adj(a, q) && adj(b, q)) {
                        exercised = true;
                        if !adj(a, x) && !adj(c, q) {
                            return fail(Witness::ConfigurationIv {
                                a_k2: a,
                                b_k2: b,
                                c_k2: c,
                                x_k2: x,
                                q_k2: q,
                            });
                        }
                    }
                }
            }
        }
    }
    if exercised {
        LemmaVerdict::Pass
    } else {
        LemmaVerdict::Vacuous
    }
}

fn check_main_theorem_config_on(s: &K2Structure) -> LemmaVerdict {
    match find_uncovered_hajos_embedding(s.k2()) {
        Some(embedding_k2) => fail(Witness::UncoveredHajos { embedding_k2 }),
        None => LemmaVerdict::Pass,
    }
}

fn check_clique_size_bound_on(s: &K2Structure) -> LemmaVerdict {
    let g = s.host();
    let is_k5 = g.order() == 5 && g.edge_count() == 10;
    for (i, c) in s.cliques().iter().enumerate() {
        if c.len() > 5 || (c.len() == 5 && !is_k5) {
            return fail(Witness::OversizedClique {
                clique: i,
                size: c.len(),
            });
        }
    }
    LemmaVerdict::Pass
}

fn degree_five_verdict(graph: &Graph, behavior: &Behavior) -> LemmaVerdict {
    if !graph.is_low_degree() {
        return LemmaVerdict::Vacuous;
    }
    match behavior.verdict {
        BehaviorVerdict::Convergent { .. } => LemmaVerdict::Pass,
        BehaviorVerdict::BudgetExceeded { .. } => fail(Witness::NotConvergent {
            orders: behavior.orders.clone(),
        }),
    }
}

/// Evaluates a structural lemma without checking its host preconditions.
/// `DivergenceNeedsDegreeFive` needs a behavior and is not handled here.
pub fn evaluate(id: LemmaId, s: &K2Structure) -> Result<LemmaVerdict> {
    Ok(match id {
        LemmaId::CompleteInUnion => check_complete_in_union_on(s),
        LemmaId::NecktiesOnlyTriangles => check_neckties_only_triangles_on(s),
        LemmaId::NecktieCharacterization => check_necktie_characterization_on(s),
        LemmaId::AdjacencyConditions => check_adjacency_conditions_on(s),
        LemmaId::IntersectingInnerOne => check_intersecting_inner_one_on(s),
        LemmaId::IntersectingInnerTwo => check_intersecting_inner_two_on(s),
        LemmaId::NoNecktiePath => check_no_necktie_path_on(s),
        LemmaId::ForbiddenDiamonds => check_forbidden_diamonds_on(s),
        LemmaId::LemmaIii => check_lemma_iii_on(s),
        LemmaId::LemmaIv => check_lemma_iv_on(s),
        LemmaId::MainTheoremConfig => check_main_theorem_config_on(s),
        LemmaId::CliqueSizeBound => check_clique_size_bound_on(s),
        LemmaId::DivergenceNeedsDegreeFive => {
            return Err(Error::Precondition(
                "needs a behavior classification".into(),
            ))
        }
    })
}

/// Runs one checker on a prepared structure, enforcing its gate.
pub fn check_prepared(
    id: LemmaId,
    s: &K2Structure,
    behavior: Option<&Behavior>,
    host: &str,
) -> Result<LemmaReport> {
    id.gate().check(s.host())?;
    let verdict = match id {
        LemmaId::DivergenceNeedsDegreeFive => {
            let owned;
            let behavior = match behavior {
                Some(b) => b,
                None => {
                    owned = classify_behavior(s.host(), Budgets::default())?;
                    &owned
                }
            };
            degree_five_verdict(s.host(), behavior)
        }
        _ => evaluate(id, s)?,
    };
    Ok(LemmaReport {
        lemma: id,
        host: host.to_string(),
        verdict,
    })
}

pub fn host_label(graph: &Graph) -> String {
    crate::graph6::to_graph6(graph).unwrap_or_else(|_| format!("order-{}", graph.order()))
}

/// Runs one checker on a graph, enforcing its gate.
pub fn check(id: LemmaId, graph: &Graph) -> Result<LemmaReport> {
    id.gate().check(graph)?;
    let s = K2Structure::new(graph)?;
    check_prepared(id, &s, None, &host_label(graph))
}

/// Runs every checker; entries for gated-out checkers carry the error.
pub fn run_all(
    s: &K2Structure,
    behavior: Option<&Behavior>,
    host: &str,
) -> Vec<(LemmaId, Result<LemmaReport>)> {
    LemmaId::ALL
        .into_iter()
        .map(|id| (id, check_prepared(id, s, behavior, host)))
        .collect()
}

pub fn check_complete_in_union(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::CompleteInUnion, graph)
}

pub fn check_neckties_only_triangles(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::NecktiesOnlyTriangles, graph)
}

pub fn check_necktie_characterization(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::NecktieCharacterization, graph)
}

pub fn check_adjacency_conditions(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::AdjacencyConditions, graph)
}

pub fn check_intersecting_inner_one(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::IntersectingInnerOne, graph)
}

pub fn check_intersecting_inner_two(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::IntersectingInnerTwo, graph)
}

pub fn check_no_necktie_path(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::NoNecktiePath, graph)
}

pub fn check_forbidden_diamonds(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::ForbiddenDiamonds, graph)
}

pub fn check_lemma_iii(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::LemmaIii, graph)
}

pub fn check_lemma_iv(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::LemmaIv, graph)
}

pub fn check_main_theorem_config(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::MainTheoremConfig, graph)
}

pub fn check_clique_size_bound(graph: &Graph) -> Result<LemmaReport> {
    check(LemmaId::CliqueSizeBound, graph)
}

pub fn check_divergence_needs_degree_five(graph: &Graph, budgets: Budgets) -> Result<LemmaReport> {
    LemmaId::DivergenceNeedsDegreeFive.gate().check(graph)?;
    let behavior = classify_behavior(graph, budgets)?;
    Ok(LemmaReport {
        lemma: LemmaId::DivergenceNeedsDegreeFive,
        host: host_label(graph),
        verdict: degree_five_verdict(graph, &behavior),
    })
}

impl Witness {
    /// Re-evaluates the violated condition from scratch on the host. True iff
    /// the witness describes a genuine violation.
    pub fn recheck(&self, s: &K2Structure) -> bool {
        let g = s.host();
        let k2 = s.k2();
        let kind_of = |i: usize| s.vertices().get(i).map(|v| &v.kind);
        let is_star = |i: usize| matches!(kind_of(i), Some(K2Kind::Star { .. }));
        let is_necktie = |i: usize| i < s.vertices().len() && !is_star(i);
        let common_of = |members: &VertexSet| {
            let mut common = g.vertex_set();
            for i in members {
                common.intersect_with(s.cliques().get(i));
            }
            common
        };
        let q_t = |t: &Triangle| {
            VertexSet::from_ids(
                s.cliques().len(),
                (0..s.cliques().len())
                    .filter(|&i| s.cliques().get(i).intersection_len(&t.to_set(g.order())) >= 2),
            )
        };
        let is_clique_set = |set: &VertexSet| {
            g.is_complete_set(set)
                && (0..g.order()).all(|v| set.contains(v) || !set.is_subset(g.adjacency(v)))
        };
        let is_inner = |t: &Triangle| {
            is_clique_set(&t.to_set(g.order()))
                && t.edges().iter().all(|&(u, v)| {
                    (0..g.order())
                        .any(|w| !t.contains(w) && g.is_adjacent(u, w) && g.is_adjacent(v, w))
                })
        };
        match self {
            Witness::CompleteOutsideBoth {
                q1_clique,
                q2_clique,
                complete,
            } => {
                let (q1, q2) = (s.cliques().get(*q1_clique), s.cliques().get(*q2_clique));
                let c = VertexSet::from_ids(g.order(), complete.iter().copied());
                g.is_complete_set(&c)
                    && c.is_subset(&q1.union(q2))
                    && !c.is_subset(q1)
                    && !c.is_subset(q2)
            }
            Witness::NecktieMemberSize {
                necktie_k2,
                member_clique,
                size,
            } => {
                let q = &s.k2_cliques().get(*necktie_k2);
                common_of(q).is_empty()
                    && q.contains(*member_clique)
                    && s.cliques().get(*member_clique).len() == *size
                    && *size != 3
            }
            Witness::NecktieCenterCount {
                necktie_k2,
                matching_inner_triangles,
            } => {
                let q = s.k2_cliques().get(*necktie_k2);
                let count = triangles(g)
                    .iter()
                    .filter(|t| is_inner(t) && q_t(t) == *q)
                    .count();
                common_of(q).is_empty() && count == *matching_inner_triangles && count != 1
            }
            Witness::EarCount { center, ears } => {
                is_inner(center) && q_t(center).len() - 1 == *ears && *ears != 3
            }
            Witness::QtNotClique { center } => {
                let q = q_t(center);
                let k1 = s.k1();
                let maximal =
                    (0..k1.order()).all(|v| q.contains(v) || !q.is_subset(k1.adjacency(v)));
                is_inner(center) && !maximal
            }
            Witness::QtHasCommonVertex { center, common } => {
                is_inner(center)
                    && !common.is_empty()
                    && common_of(&q_t(center)).to_vec() == *common
            }
            Witness::AdjacencyMismatch {
                a_k2,
                b_k2,
                predicted,
                actual,
                ..
            } => {
                let truth = s
                    .k2_cliques()
                    .get(*a_k2)
                    .intersects(s.k2_cliques().get(*b_k2));
                truth == *actual && predicted != actual
            }
            Witness::NeighborhoodNotFourCycle {
                vertex,
                inner,
                other,
            } => {
                let nbrs = g.adjacency(*vertex);
                let four_cycle = nbrs.len() == 4
                    && nbrs
                        .iter()
                        .all(|v| nbrs.iter().filter(|&w| g.is_adjacent(v, w)).count() == 2);
                is_inner(inner) && inner.common(other) == vec![*vertex] && !four_cycle
                    || is_inner(inner)
                        && is_inner(other)
                        && inner.common(other).contains(vertex)
                        && !four_cycle
            }
            Witness::InnerEar {
                center,
                ear_clique,
                other,
            } => {
                let ear = s.cliques().get(*ear_clique);
                let ear_inner = Triangle::from_set(g, ear)
                    .map(|t| is_inner(&t))
                    .unwrap_or(false);
                let shared = center.common(other).len();
                is_inner(center)
                    && is_inner(other)
                    && q_t(center).contains(*ear_clique)
                    && ear.len() == 3
                    && ear != &center.to_set(g.order())
                    && ear_inner
                    && (shared == 1 || (shared == 2 && ear != &other.to_set(g.order())))
            }
            Witness::NormalVertexInTriangle {
                center,
                vertex,
                other,
            } => {
                let star = s.cliques().containing(*vertex);
                let k1 = s.k1();
                let normal =
                    (0..k1.order()).all(|v| star.contains(v) || !star.is_subset(k1.adjacency(v)));
                is_inner(center)
                    && is_inner(other)
                    && center.contains(*vertex)
                    && !other.contains(*vertex)
                    && normal
            }
            Witness::InnerNecktiesNotAdjacent { inner, other } => {
                is_inner(inner)
                    && is_inner(other)
                    && inner.common(other).len() == 1
                    && !q_t(inner).intersects(&q_t(other))
                    || is_inner(inner)
                        && is_inner(other)
                        && inner.common(other).len() == 1
                        && !(s.k2_cliques().position(&q_t(inner)).is_some()
                            && s.k2_cliques().position(&q_t(other)).is_some())
            }
            Witness::NecktiePath { path_k2: [a, b, c] } => {
                let distinct = a != b && b != c && a != c;
                distinct
                    && [a, b, c]
                        .iter()
                        .all(|&&i| is_necktie(i) && common_of(s.k2_cliques().get(i)).is_empty())
                    && k2.is_adjacent(*a, *b)
                    && k2.is_adjacent(*b, *c)
            }
            Witness::Diamond {
                form,
                a_k2,
                b_k2,
                q1_k2,
                q2_k2,
            } => {
                let meet =
                    |u: usize, v: usize| s.k2_cliques().get(u).intersects(s.k2_cliques().get(v));
                let (a, b, q1, q2) = (*a_k2, *b_k2, *q1_k2, *q2_k2);
                let typed = is_star(a)
                    && is_star(b)
                    && a != b
                    && is_necktie(q1)
                    && is_necktie(q2)
                    && q1 != q2;
                let edges = [
                    meet(a, b),
                    meet(a, q1),
                    meet(a, q2),
                    meet(b, q1),
                    meet(b, q2),
                    meet(q1, q2),
                ];
                let expected = match form {
                    DiamondForm::R => [true, true, true, true, true, false],
                    DiamondForm::L => [true, true, false, true, true, true],
                };
                typed && edges == expected
            }
            Witness::ConfigurationIii {
                a_k2,
                b_k2,
                x_k2,
                z_k2,
                q_k2,
            } => {
                let (a, b, x, z, q) = (*a_k2, *b_k2, *x_k2, *z_k2, *q_k2);
                let stars = [a, b, x, z];
                let distinct = (0..4).all(|i| (i + 1..4).all(|j| stars[i] != stars[j]));
                let e = |u, v| k2.is_adjacent(u, v);
                distinct
                    && stars.iter().all(|&i| is_star(i))
                    && is_necktie(q)
                    && e(a, b)
                    && e(b, x)
                    && e(b, z)
                    && e(a, z)
                    && e(a, q)
                    && e(b, q)
                    && e(x, q)
                    && !e(a, x)
                    && !e(z, q)
            }
            Witness::ConfigurationIv {
                a_k2,
                b_k2,
                c_k2,
                x_k2,
                q_k2,
            } => {
                let (a, b, c, x, q) = (*a_k2, *b_k2, *c_k2, *x_k2, *q_k2);
                let stars = [a, b, c, x];
                let distinct = (0..4).all(|i| (i + 1..4).all(|j| stars[i] != stars[j]));
                let e = |u, v| k2.is_adjacent(u, v);
                distinct
                    && stars.iter().all(|&i| is_star(i))
                    && is_necktie(q)
                    && e(a, b)
                    && e(a, c)
                    && e(b, c)
                    && e(b, x)
                    && e(c, x)
                    && e(a, q)
                    && e(b, q)
                    && !e(a, x)
                    && !e(c, q)
            }
            Witness::UncoveredHajos { embedding_k2 } => {
                embedding_k2.is_valid_in(k2) && !embedding_k2.has_dashed_edge(k2)
            }
            Witness::OversizedClique { clique, size } => {
                let c = s.cliques().get(*clique);
                let is_k5 = g.order() == 5 && g.edge_count() == 10;
                is_clique_set(c) && c.len() == *size && (*size > 5 || (*size == 5 && !is_k5))
            }
            Witness::NotConvergent { orders } => {
                // Only the recorded trace can be compared; convergence is
                // re-established by a fresh classification.
                classify_behavior(g, Budgets::default())
                    .map(|b| !b.is_convergent() && b.orders == *orders)
                    .unwrap_or(false)
            }
        }
    }
}
