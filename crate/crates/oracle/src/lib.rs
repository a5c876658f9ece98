//! Brute-force reference implementations. Everything here works on plain
//! adjacency matrices and sorted vertex lists, shares no code with the
//! engine, and is only meant for small inputs.

use std::collections::BTreeSet;

/// Symmetric boolean adjacency matrix without loops.
pub type Matrix = Vec<Vec<bool>>;

pub fn matrix_from_edges(n: usize, edges: &[(usize, usize)]) -> Matrix {
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in edges {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Edges `(u, v)` with `u < v` in lexicographic order.
pub fn edges_of(m: &Matrix) -> Vec<(usize, usize)> {
    m.iter()
        .enumerate()
        .flat_map(|(u, row)| {
            row.iter()
                .enumerate()
                .skip(u + 1)
                .filter(|(_, &b)| b)
                .map(move |(v, _)| (u, v))
        })
        .collect()
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn is_complete(m: &Matrix, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| m[u][v]))
}

/// Maximal complete sets by checking every vertex subset, sorted by size then
/// member list.
pub fn maximal_cliques(m: &Matrix) -> Vec<Vec<usize>> {
    let n = m.len();
    assert!(n <= 20, "subset oracle is exponential");
    let complete: Vec<bool> = (0..1u64 << n)
        .map(|mask| is_complete(m, &members(mask, n)))
        .collect();
    let mut out: Vec<Vec<usize>> = (1..1u64 << n)
        .filter(|&mask| complete[mask as usize])
        .filter(|&mask| (0..n).all(|v| mask >> v & 1 == 1 || !complete[(mask | 1 << v) as usize]))
        .map(|mask| members(mask, n))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn intersection_matrix(family: &[Vec<usize>]) -> Matrix {
    let k = family.len();
    let mut m = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            m[i][j] = i != j && family[i].iter().any(|x| family[j].contains(x));
        }
    }
    m
}

pub fn clique_graph(m: &Matrix) -> Matrix {
    intersection_matrix(&maximal_cliques(m))
}

pub fn is_connected(m: &Matrix) -> bool {
    let n = m.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if m[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn max_degree(m: &Matrix) -> usize {
    m.iter()
        .map(|row| row.iter().filter(|&&b| b).count())
        .max()
        .unwrap_or(0)
}

/// True iff every subfamily whose members pairwise meet has a common element.
pub fn is_helly(family: &[Vec<usize>]) -> bool {
    let k = family.len();
    assert!(k <= 24, "subfamily oracle is exponential");
    (1..1u64 << k).all(|mask| {
        let chosen: Vec<&Vec<usize>> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| &family[i])
            .collect();
        let pairwise = chosen.iter().enumerate().all(|(i, a)| {
            chosen[i + 1..]
                .iter()
                .all(|b| a.iter().any(|x| b.contains(x)))
        });
        !pairwise
            || chosen[0]
                .iter()
                .any(|x| chosen.iter().all(|c| c.contains(x)))
    })
}

pub fn is_clique_helly(m: &Matrix) -> bool {
    is_helly(&maximal_cliques(m))
}

/// Induced subgraph on `set`, relabelled in increasing order.
pub fn induced(m: &Matrix, set: &[usize]) -> Matrix {
    set.iter()
        .map(|&u| set.iter().map(|&v| m[u][v]).collect())
        .collect()
}

/// Every induced subgraph is clique-Helly.
pub fn is_hereditary_clique_helly(m: &Matrix) -> bool {
    let n = m.len();
    (1..1u64 << n).all(|mask| is_clique_helly(&induced(m, &members(mask, n))))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Least upper-triangle bit string over all relabellings.
pub struct Canonizer {
    n: usize,
    perms: Vec<Vec<usize>>,
}

impl Canonizer {
    pub fn new(n: usize) -> Self {
        assert!(n <= 8, "permutation oracle is factorial");
        Canonizer {
            n,
            perms: permutations(n),
        }
    }

    pub fn canonical(&self, m: &Matrix) -> Vec<bool> {
        assert_eq!(m.len(), self.n);
        let mut best: Option<Vec<bool>> = None;
        for p in &self.perms {
            let mut bits = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
            for u in 0..self.n {
                for v in u + 1..self.n {
                    bits.push(m[p[u]][p[v]]);
                }
            }
            if best.as_ref().is_none_or(|b| bits < *b) {
                best = Some(bits);
            }
        }
        best.unwrap_or_default()
    }
}

pub fn isomorphic(a: &Matrix, b: &Matrix) -> bool {
    a.len() == b.len() && {
        let c = Canonizer::new(a.len());
        c.canonical(a) == c.canonical(b)
    }
}

/// Canonical forms of all `n`-vertex graphs with `Δ ≤ delta_max` (and
/// connected if asked), by enumerating every adjacency matrix.
pub fn graph_classes(n: usize, delta_max: usize, connected: bool) -> BTreeSet<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let canon = Canonizer::new(n);
    let mut out = BTreeSet::new();
    for mask in 0..1u64 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let m = matrix_from_edges(n, &edges);
        if max_degree(&m) <= delta_max && (!connected || is_connected(&m)) {
            out.insert(canon.canonical(&m));
        }
    }
    out
}

/// Every adjacency matrix on `n` vertices, labeled, in mask order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Matrix> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        matrix_from_edges(n, &edges)
    })
}
