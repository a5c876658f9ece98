//! Canonical labeling and isomorphism testing.
//!
//! Individualization-refinement: the unit partition is refined to an
//! equitable ordered partition, then the search branches on the vertices of
//! the first smallest non-singleton cell. Each discrete leaf yields a labeling;
//! the certificate is the lexicographically least upper-triangle adjacency
//! bit string over all leaves. Leaves that tie with the current best yield
//! automorphisms, which prune sibling branches lying in the same orbit of the
//! stabilizer of the current prefix.

use std::collections::{HashMap, VecDeque};

use crate::graph::Graph;

/// Canonical adjacency encoding: equal certificates iff isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCert(Vec<u8>);

impl CanonicalCert {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Debug for CanonicalCert {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalCert({})", self.to_hex())
    }
}

/// Cheap isomorphism invariant used to skip certificate computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantKey {
    pub order: usize,
    pub edges: usize,
    pub degrees: Vec<usize>,
}

impl InvariantKey {
    pub fn of(graph: &Graph) -> Self {
        let mut degrees = graph.degrees();
        degrees.sort_unstable();
        InvariantKey {
            order: graph.order(),
            edges: graph.edge_count(),
            degrees,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    pub cert: CanonicalCert,
    /// `perm[v]` is the canonical label of vertex `v`.
    pub perm: Vec<usize>,
}

impl CanonicalLabeling {
    pub fn apply(&self, graph: &Graph) -> Graph {
        graph.permuted(&self.perm)
    }
}

pub fn canonical_form(graph: &Graph) -> CanonicalCert {
    canonical_labeling(graph).cert
}

pub fn canonical_labeling(graph: &Graph) -> CanonicalLabeling {
    let n = graph.order();
    let mut search = Search::new(graph);
    let mut root = Partition::unit(n);
    if n > 0 {
        search.refine(&mut root, &[0]);
    }
    let mut fixed = Vec::new();
    search.descend(&root, &mut fixed);
    let (code, lab) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    let mut bytes = Vec::with_capacity(4 + code.len() * 8);
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    for block in &code {
        bytes.extend_from_slice(&block.to_be_bytes());
    }
    CanonicalLabeling {
        cert: CanonicalCert(bytes),
        perm,
    }
}

/// Returns the graph relabeled into canonical vertex order.
pub fn canonical_graph(graph: &Graph) -> (CanonicalCert, Graph) {
    let labeling = canonical_labeling(graph);
    let g = labeling.apply(graph);
    (labeling.cert, g)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    InvariantKey::of(g) == InvariantKey::of(h) && canonical_form(g) == canonical_form(h)
}

/// Ordered partition of `0..n` stored as a vertex array split into cells.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    /// For a cell starting at position `i`, `cell_end[i]` is its exclusive end.
    cell_end: Vec<usize>,
    /// Start position of the cell containing each vertex.
    start_of: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cell_end = vec![0; n];
        if n > 0 {
            cell_end[0] = n;
        }
        Partition {
            lab: (0..n).collect(),
            cell_end,
            start_of: vec![0; n],
            cells: usize::from(n > 0),
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// First non-singleton cell of minimum size.
    fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut i = 0;
        while i < self.lab.len() {
            let end = self.cell_end[i];
            let len = end - i;
            if len > 1 && best.is_none_or(|(a, b)| len < b - a) {
                best = Some((i, end));
                if len == 2 {
                    break;
                }
            }
            i = end;
        }
        best
    }

    /// Splits `v` off the front of its cell; returns the new singleton's start.
    fn individualize(&mut self, v: usize) -> usize {
        let start = self.start_of[v];
        let end = self.cell_end[start];
        let pos = self.lab[start..end].iter().position(|&w| w == v).unwrap() + start;
        self.lab.swap(start, pos);
        self.cell_end[start] = start + 1;
        self.cell_end[start + 1] = end;
        for &w in &self.lab[start + 1..end] {
            self.start_of[w] = start + 1;
        }
        self.cells += 1;
        start
    }
}

struct Search<'g> {
    n: usize,
    nbrs: Vec<Vec<usize>>,
    graph: &'g Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 512;

impl<'g> Search<'g> {
    fn new(graph: &'g Graph) -> Self {
        let n = graph.order();
        Search {
            n,
            nbrs: (0..n).map(|v| graph.adjacency(v).to_vec()).collect(),
            graph,
            best: None,
            automorphisms: Vec::new(),
            counts: vec![0; n],
        }
    }

    /// Refines `p` to an equitable partition, processing splitter cells
    /// (by start position) in FIFO order starting from `initial`.
    fn refine(&mut self, p: &mut Partition, initial: &[usize]) {
        let n = self.n;
        let mut queued = vec![false; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in initial {
            queued[s] = true;
            queue.push_back(s);
        }
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut cell_touched = vec![false; n];
        while let Some(s) = queue.pop_front() {
            queued[s] = false;
            if p.is_discrete() {
                break;
            }
            let s_end = p.cell_end[s];
            for i in s..s_end {
                let w = p.lab[i];
                for &v in &self.nbrs[w] {
                    self.counts[v] += 1;
                    let c = p.start_of[v];
                    if !cell_touched[c] {
                        cell_touched[c] = true;
                        touched_cells.push(c);
                    }
                }
            }
            touched_cells.sort_unstable();
            for &c in &touched_cells {
                cell_touched[c] = false;
                let end = p.cell_end[c];
                if end - c == 1 {
                    continue;
                }
                let counts = &self.counts;
                let first = counts[p.lab[c]];
                if p.lab[c..end].iter().all(|&v| counts[v] == first) {
                    continue;
                }
                p.lab[c..end].sort_unstable_by_key(|&v| (counts[v], v));
                let mut frag_start = c;
                for i in c + 1..=end {
                    if i == end || counts[p.lab[i]] != counts[p.lab[i - 1]] {
                        p.cell_end[frag_start] = i;
                        for &v in &p.lab[frag_start..i] {
                            p.start_of[v] = frag_start;
                        }
                        if frag_start != c {
                            p.cells += 1;
                        }
                        if !queued[frag_start] {
                            queued[frag_start] = true;
                            queue.push_back(frag_start);
                        }
                        frag_start = i;
                    }
                }
            }
            touched_cells.clear();
            for i in s..s_end {
                for &v in &self.nbrs[p.lab[i]] {
                    self.counts[v] = 0;
                }
            }
        }
    }

    fn encode(&self, lab: &[usize]) -> Vec<u64> {
        let bits = self.n * self.n.saturating_sub(1) / 2;
        let mut code = vec![0u64; bits.div_ceil(64)];
        let mut k = 0;
        for j in 1..self.n {
            let row = self.graph.adjacency(lab[j]);
            for &u in &lab[..j] {
                if row.contains(u) {
                    code[k / 64] |= 1u64 << (63 - k % 64);
                }
                k += 1;
            }
        }
        code
    }

    fn leaf(&mut self, p: &Partition) {
        let code = self.encode(&p.lab);
        match &self.best {
            None => self.best = Some((code, p.lab.clone())),
            Some((best, best_lab)) => match code.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((code, p.lab.clone())),
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0; self.n];
                    for (i, &v) in best_lab.iter().enumerate() {
                        gamma[v] = p.lab[i];
                    }
                    if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS
                        && gamma.iter().enumerate().any(|(v, &w)| v != w)
                    {
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbit representatives of the group generated by the stored
    /// automorphisms that fix `fixed` pointwise.
    fn orbit_roots(&self, fixed: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if fixed.iter().any(|&f| gamma[f] != f) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn descend(&mut self, p: &Partition, fixed: &mut Vec<usize>) {
        let Some((start, end)) = p.target_cell() else {
            self.leaf(p);
            return;
        };
        let mut candidates = p.lab[start..end].to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::with_capacity(candidates.len());
        let mut seen_autos = 0;
        let mut roots: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() {
                if self.automorphisms.len() != seen_autos || roots.is_empty() {
                    seen_autos = self.automorphisms.len();
                    roots = self.orbit_roots(fixed);
                }
                if explored.iter().any(|&u| roots[u] == roots[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = p.clone();
            let singleton = child.individualize(v);
            self.refine(&mut child, &[singleton]);
            fixed.push(v);
            self.descend(&child, fixed);
            fixed.pop();
        }
    }
}

/// Isomorphism-class index: buckets by [`InvariantKey`] and computes
/// certificates only when a bucket holds more than one candidate.
#[derive(Debug, Default)]
pub struct IsoClassIndex<T> {
    buckets: HashMap<InvariantKey, Vec<IndexEntry<T>>>,
}

#[derive(Debug)]
struct IndexEntry<T> {
    graph: Graph,
    cert: Option<CanonicalCert>,
    value: T,
}

impl<T> IsoClassIndex<T> {
    pub fn new() -> Self {
        IsoClassIndex {
            buckets: HashMap::new(),
        }
    }

    /// Value stored for a graph isomorphic to `graph`, if any.
    pub fn find(&mut self, graph: &Graph) -> Option<&T> {
        let bucket = self.buckets.get_mut(&InvariantKey::of(graph))?;
        let cert = canonical_form(graph);
        let hit = bucket.iter_mut().position(|e| {
            let c = e.cert.get_or_insert_with(|| canonical_form(&e.graph));
            *c == cert
        })?;
        Some(&bucket[hit].value)
    }

    pub fn insert(&mut self, graph: Graph, value: T) {
        self.buckets
            .entry(InvariantKey::of(&graph))
            .or_default()
            .push(IndexEntry {
                graph,
                cert: None,
                value,
            });
    }

    pub fn len(&self) -> usize {
        self.buckets.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }
}
