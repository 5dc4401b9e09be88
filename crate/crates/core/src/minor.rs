//! Desk-scale ground truth: exact clique-minor detection and exhaustive
//! minimum-defect computation.
//!
//! [`has_clique_minor`] decides by exact backtracking whether K_k is a
//! minor of a graph, returning a checkable [`MinorModel`] on success. The
//! search assigns vertices (in descending-degree order) to one of `k`
//! branch sets or leaves them out, pruning branches that can no longer
//! produce `k` non-empty, individually connected, pairwise linked sets. A
//! deterministic node-expansion budget bounds the work; exhausting it
//! yields [`MinorOutcome::Timeout`], never a wrong answer.
//!
//! [`min_defect`] computes, by exhaustive search over all partitions into
//! a given number of parts, the smallest achievable maximum within-part
//! degree. It is the measuring stick for the engine: the engine promises
//! defect `< s`, the oracle reports what is actually possible.
//!
//! Everything here is exponential by design and guarded for desk-scale
//! inputs; it exists to validate the fast path, not to replace it.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId};

/// A witness that K_k is a minor: `k` disjoint branch sets, each inducing
/// a connected subgraph, every pair joined by at least one edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinorModel {
    /// The branch sets, in the order the search filled them.
    pub branch_sets: Vec<BTreeSet<VertexId>>,
}

/// Result of a clique-minor search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MinorOutcome {
    /// K_k is a minor; `model` passes [`verify_minor_model`].
    Found { model: MinorModel },
    /// Exhaustive search ruled the minor out.
    Absent,
    /// The node budget ran out before the search completed.
    Timeout,
}

/// How a [`MinorModel`] failed independent verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ModelViolation {
    /// Branch set `index` has no vertices.
    EmptyBranchSet { index: usize },
    /// A branch set names a vertex the graph does not have live.
    MissingVertex { vertex: VertexId, index: usize },
    /// A vertex appears in two branch sets.
    Overlap { vertex: VertexId, first: usize, second: usize },
    /// Branch set `index` does not induce a connected subgraph.
    Disconnected { index: usize },
    /// No edge of the graph joins branch sets `first` and `second`.
    NoLinkingEdge { first: usize, second: usize },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModelViolation::EmptyBranchSet { index } => {
                write!(f, "branch set {index} is empty")
            }
            ModelViolation::MissingVertex { vertex, index } => {
                write!(f, "branch set {index} names vertex {vertex}, which is not in the graph")
            }
            ModelViolation::Overlap { vertex, first, second } => {
                write!(f, "vertex {vertex} lies in branch sets {first} and {second}")
            }
            ModelViolation::Disconnected { index } => {
                write!(f, "branch set {index} does not induce a connected subgraph")
            }
            ModelViolation::NoLinkingEdge { first, second } => {
                write!(f, "no edge joins branch sets {first} and {second}")
            }
        }
    }
}

impl core::error::Error for ModelViolation {}

/// Checks a model against the graph from first principles: non-empty,
/// live, disjoint, connected, pairwise linked. Shares no state with the
/// search in [`has_clique_minor`], so it can catch the search lying.
pub fn verify_minor_model(g: &Graph, model: &MinorModel) -> Result<(), ModelViolation> {
    let sets = &model.branch_sets;
    for (index, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return Err(ModelViolation::EmptyBranchSet { index });
        }
        for &v in set {
            if !g.is_live(v) {
                return Err(ModelViolation::MissingVertex { vertex: v, index });
            }
        }
    }
    for first in 0..sets.len() {
        for second in first + 1..sets.len() {
            if let Some(&vertex) = sets[first].intersection(&sets[second]).next() {
                return Err(ModelViolation::Overlap { vertex, first, second });
            }
        }
    }
    for (index, set) in sets.iter().enumerate() {
        if !connected_in(g, set) {
            return Err(ModelViolation::Disconnected { index });
        }
    }
    for first in 0..sets.len() {
        for second in first + 1..sets.len() {
            let linked = sets[first]
                .iter()
                .any(|&u| g.neighbors(u).map(|n| !n.is_disjoint(&sets[second])).unwrap_or(false));
            if !linked {
                return Err(ModelViolation::NoLinkingEdge { first, second });
            }
        }
    }
    Ok(())
}

/// True when `set` induces a connected subgraph of `g` (vacuously for the
/// empty set).
fn connected_in(g: &Graph, set: &BTreeSet<VertexId>) -> bool {
    let Some(&start) = set.iter().next() else { return true };
    let mut seen: BTreeSet<VertexId> = [start].into_iter().collect();
    let mut queue: VecDeque<VertexId> = [start].into_iter().collect();
    while let Some(v) = queue.pop_front() {
        let Ok(nbrs) = g.neighbors(v) else { continue };
        for &w in nbrs {
            if set.contains(&w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == set.len()
}

enum SearchResult {
    FoundNow,
    Exhausted,
    BudgetOut,
}

struct MinorSearch {
    /// Compacted adjacency; index i corresponds to `verts[i]`.
    adj: Vec<BTreeSet<usize>>,
    /// Assignment order: indices into `adj`, descending degree, ties by
    /// ascending vertex id.
    order: Vec<usize>,
    /// Current branch sets, as compacted indices.
    sets: Vec<BTreeSet<usize>>,
    /// Nodes expanded so far.
    visited: u64,
    budget: u64,
}

impl MinorSearch {
    /// True when the current sets already form a complete model: all
    /// non-empty, each connected, every pair directly linked.
    fn complete(&self) -> bool {
        if self.sets.iter().any(BTreeSet::is_empty) {
            return false;
        }
        for set in &self.sets {
            if !self.connected_among(set, None) {
                return false;
            }
        }
        for a in 0..self.sets.len() {
            for b in a + 1..self.sets.len() {
                let linked = self.sets[a]
                    .iter()
                    .any(|&x| !self.adj[x].is_disjoint(&self.sets[b]));
                if !linked {
                    return false;
                }
            }
        }
        true
    }

    /// BFS connectivity of `set`, optionally allowing passage through the
    /// extra vertex pool `via` as well.
    fn connected_among(&self, set: &BTreeSet<usize>, via: Option<&BTreeSet<usize>>) -> bool {
        let Some(&start) = set.iter().next() else { return true };
        let allowed = |x: usize| set.contains(&x) || via.map(|p| p.contains(&x)).unwrap_or(false);
        let mut seen: BTreeSet<usize> = [start].into_iter().collect();
        let mut queue: VecDeque<usize> = [start].into_iter().collect();
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if allowed(y) && seen.insert(y) {
                    if set.contains(&y) {
                        reached += 1;
                    }
                    queue.push_back(y);
                }
            }
        }
        reached == set.len()
    }

    /// Sound completability prunes for the state at `pos`. Returns false
    /// when no completion of the current partial assignment can succeed.
    fn completable(&self, pos: usize) -> bool {
        let remaining = self.order.len() - pos;
        let empty = self.sets.iter().filter(|s| s.is_empty()).count();
        if empty > remaining {
            return false;
        }
        let pool: BTreeSet<usize> = self.order[pos..].iter().copied().collect();
        // Each branch set must be connectable using only itself plus
        // still-unprocessed vertices.
        for set in &self.sets {
            if !self.connected_among(set, Some(&pool)) {
                return false;
            }
        }
        // Each pair of non-empty sets needs a potential linking edge:
        // direct, set-to-pool, or pool-to-pool.
        let k = self.sets.len();
        let mut direct = vec![false; k * k];
        let mut half = vec![false; k];
        let mut pool_pool = false;
        let side = |s: &MinorSearch, x: usize| -> Option<usize> {
            (0..k).find(|&i| s.sets[i].contains(&x))
        };
        for x in 0..self.adj.len() {
            let sx = side(self, x);
            let px = pool.contains(&x);
            for &y in self.adj[x].range(x + 1..) {
                let sy = side(self, y);
                let py = pool.contains(&y);
                match (sx, sy) {
                    (Some(a), Some(b)) if a != b => {
                        direct[a * k + b] = true;
                        direct[b * k + a] = true;
                    }
                    (Some(a), None) if py => half[a] = true,
                    (None, Some(b)) if px => half[b] = true,
                    (None, None) if px && py => pool_pool = true,
                    _ => {}
                }
            }
        }
        for a in 0..k {
            if self.sets[a].is_empty() {
                continue;
            }
            for b in a + 1..k {
                if self.sets[b].is_empty() {
                    continue;
                }
                if !(direct[a * k + b] || half[a] || half[b] || pool_pool) {
                    return false;
                }
            }
        }
        true
    }

    fn search(&mut self, pos: usize) -> SearchResult {
        if self.visited >= self.budget {
            return SearchResult::BudgetOut;
        }
        self.visited += 1;
        if self.complete() {
            return SearchResult::FoundNow;
        }
        if pos == self.order.len() {
            return SearchResult::Exhausted;
        }
        if !self.completable(pos) {
            return SearchResult::Exhausted;
        }
        let v = self.order[pos];
        let mut tried_empty = false;
        for i in 0..self.sets.len() {
            // Branch sets are interchangeable until first used: trying one
            // empty set covers them all.
            if self.sets[i].is_empty() {
                if tried_empty {
                    continue;
                }
                tried_empty = true;
            }
            self.sets[i].insert(v);
            match self.search(pos + 1) {
                SearchResult::Exhausted => {
                    self.sets[i].remove(&v);
                }
                done => {
                    // Keep the sets intact on success so the caller can
                    // read the model out of them.
                    if matches!(done, SearchResult::BudgetOut) {
                        self.sets[i].remove(&v);
                    }
                    return done;
                }
            }
        }
        self.search(pos + 1)
    }
}

/// Decides exactly whether K_k is a minor of `g`, within a deterministic
/// search budget counted in node expansions.
///
/// `k ≥ 1` and `budget ≥ 1` are required. [`MinorOutcome::Absent`] means
/// the search space was exhausted — a proof of absence, not a guess. Any
/// returned model has already passed [`verify_minor_model`].
pub fn has_clique_minor(g: &Graph, k: u32, budget: u64) -> MinorOutcome {
    assert!(k >= 1, "a clique minor needs at least one branch set");
    assert!(budget >= 1, "the search budget must be positive");
    let verts: Vec<VertexId> = g.vertices().collect();
    let n = verts.len();
    if (k as usize) > n {
        // Branch sets are disjoint and non-empty, so k of them need at
        // least k vertices.
        return MinorOutcome::Absent;
    }
    let index_of = |v: VertexId| verts.binary_search(&v).expect("vertex is live");
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (i, &v) in verts.iter().enumerate() {
        for &w in g.neighbors(v).expect("live vertex") {
            adj[i].insert(index_of(w));
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (usize::MAX - adj[i].len(), verts[i]));
    let mut search = MinorSearch {
        adj,
        order,
        sets: vec![BTreeSet::new(); k as usize],
        visited: 0,
        budget,
    };
    match search.search(0) {
        SearchResult::FoundNow => {
            let model = MinorModel {
                branch_sets: search
                    .sets
                    .iter()
                    .map(|set| set.iter().map(|&i| verts[i]).collect())
                    .collect(),
            };
            if let Err(violation) = verify_minor_model(g, &model) {
                panic!("search produced an invalid model: {violation}");
            }
            MinorOutcome::Found { model }
        }
        SearchResult::Exhausted => MinorOutcome::Absent,
        SearchResult::BudgetOut => MinorOutcome::Timeout,
    }
}

/// Largest vertex count [`min_defect`] will attempt. The search is
/// exponential in the vertex count; past this it is no longer desk-scale.
pub const DEFECT_ORACLE_VERTEX_CAP: usize = 14;

/// Why [`min_defect`] refused to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DefectOracleError {
    /// The graph has more live vertices than the exhaustive search cap.
    TooLarge { order: usize, cap: usize },
}

impl fmt::Display for DefectOracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DefectOracleError::TooLarge { order, cap } => {
                write!(f, "graph has {order} vertices; the exhaustive search caps at {cap}")
            }
        }
    }
}

impl core::error::Error for DefectOracleError {}

struct DefectSearch {
    adj: Vec<Vec<usize>>,
    parts_count: u32,
    assignment: Vec<u32>,
    within: Vec<u32>,
    best: u32,
}

impl DefectSearch {
    fn run(&mut self, pos: usize, used: u32, cur_max: u32) {
        if cur_max >= self.best {
            return;
        }
        if pos == self.adj.len() {
            self.best = cur_max;
            return;
        }
        // Part indices beyond the first unused one are interchangeable
        // with it; skipping them loses no partition up to relabeling.
        let limit = (used + 1).min(self.parts_count);
        for p in 0..limit {
            let mut bumped: u32 = 0;
            let mut peak = cur_max;
            for &w in &self.adj[pos] {
                if w < pos && self.assignment[w] == p {
                    bumped += 1;
                    peak = peak.max(self.within[w] + 1);
                }
            }
            peak = peak.max(bumped);
            if peak >= self.best {
                continue;
            }
            self.assignment[pos] = p;
            self.within[pos] = bumped;
            for i in 0..self.adj[pos].len() {
                let w = self.adj[pos][i];
                if w < pos && self.assignment[w] == p {
                    self.within[w] += 1;
                }
            }
            self.run(pos + 1, used.max(p + 1), peak);
            for i in 0..self.adj[pos].len() {
                let w = self.adj[pos][i];
                if w < pos && self.assignment[w] == p {
                    self.within[w] -= 1;
                }
            }
        }
    }
}

/// Minimum over all partitions of the live vertices into `parts_count`
/// (possibly empty) parts of the maximum within-part degree — found by
/// exhaustive search with symmetry and incumbent pruning.
///
/// `min_defect(g, 1)` equals the maximum degree of `g`. Requires
/// `parts_count ≥ 1` and at most [`DEFECT_ORACLE_VERTEX_CAP`] vertices.
pub fn min_defect(g: &Graph, parts_count: u32) -> Result<u32, DefectOracleError> {
    assert!(parts_count >= 1, "a partition needs at least one part");
    let verts: Vec<VertexId> = g.vertices().collect();
    let n = verts.len();
    if n > DEFECT_ORACLE_VERTEX_CAP {
        return Err(DefectOracleError::TooLarge { order: n, cap: DEFECT_ORACLE_VERTEX_CAP });
    }
    // The one-part partition achieves the maximum degree, so that is a
    // valid incumbent; the search only improves on it.
    let delta = verts
        .iter()
        .map(|&v| g.degree(v).expect("live vertex"))
        .max()
        .unwrap_or(0) as u32;
    if delta == 0 {
        return Ok(0);
    }
    let index_of = |v: VertexId| verts.binary_search(&v).expect("vertex is live");
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .expect("live vertex")
                .iter()
                .map(|&w| index_of(w))
                .collect()
        })
        .collect();
    let mut search = DefectSearch {
        adj,
        parts_count,
        assignment: vec![0; n],
        within: vec![0; n],
        best: delta,
    };
    search.run(0, 0, 0);
    Ok(search.best)
}
