//! Simple undirected graphs with stable vertex identities.
//!
//! Vertices are numbered `0..n` at construction and keep their ids for the
//! lifetime of the graph: deletion tombstones a slot instead of renumbering.
//! That stability is what lets the reduction engine record a vertex id while
//! peeling and reuse it verbatim while replaying, after arbitrary further
//! deletions.
//!
//! Neighbor sets are ordered, so every iteration in this crate (`vertices`,
//! `neighbors`, `edges`) is deterministic, which in turn makes all
//! tie-breaking rules built on "lowest id first" well-defined.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Identifier of a vertex: its index in the graph's original numbering.
///
/// Ids are dense at construction (`0..n`) and never reused after deletion.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    /// The id as a slot index.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(raw: u32) -> Self {
        VertexId(raw)
    }
}

/// Errors from graph queries and mutations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphError {
    /// The id is not within `0..original_len()`.
    OutOfRange { vertex: VertexId, len: usize },
    /// The vertex was deleted earlier.
    Deleted { vertex: VertexId },
    /// Loops are not representable: both endpoints of an edge must differ.
    SelfLoop { vertex: VertexId },
    /// The edge is already present (parallel edges are not representable).
    DuplicateEdge { u: VertexId, v: VertexId },
    /// The edge is not present.
    MissingEdge { u: VertexId, v: VertexId },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::OutOfRange { vertex, len } => {
                write!(f, "vertex {vertex} out of range for a graph on {len} vertices")
            }
            GraphError::Deleted { vertex } => write!(f, "vertex {vertex} was deleted"),
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "edge {{{u}, {v}}} already present"),
            GraphError::MissingEdge { u, v } => write!(f, "edge {{{u}, {v}}} not present"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph (no loops, no parallel edges) with tombstone
/// deletion.
///
/// `order()` and `size()` count live vertices and edges; deleted slots remain
/// addressable so that ids stay stable. Two graphs compare equal when they
/// have the same slots, the same liveness, and the same edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    /// Neighbor sets indexed by vertex id; empty for tombstoned slots.
    adj: Vec<BTreeSet<VertexId>>,
    /// Liveness flags: `false` marks a deleted slot.
    alive: Vec<bool>,
    /// Number of live vertices.
    live: usize,
    /// Number of edges (always between live vertices).
    edges: usize,
}

impl Graph {
    /// An edgeless graph on `n` live vertices `0..n`.
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: alloc::vec![BTreeSet::new(); n],
            alive: alloc::vec![true; n],
            live: n,
            edges: 0,
        }
    }

    /// Builds a graph on `n` vertices from an edge list, rejecting loops,
    /// duplicates, and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    /// Number of vertex slots ever allocated (live + tombstoned).
    #[inline]
    pub fn original_len(&self) -> usize {
        self.adj.len()
    }

    /// Number of live vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.live
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges
    }

    /// True when no live vertex remains.
    #[inline]
    pub fn is_null(&self) -> bool {
        self.live == 0
    }

    /// True when `v` is in range and not deleted.
    #[inline]
    pub fn is_live(&self, v: VertexId) -> bool {
        self.alive.get(v.index()).copied().unwrap_or(false)
    }

    fn require_live(&self, v: VertexId) -> Result<(), GraphError> {
        if v.index() >= self.adj.len() {
            Err(GraphError::OutOfRange { vertex: v, len: self.adj.len() })
        } else if !self.alive[v.index()] {
            Err(GraphError::Deleted { vertex: v })
        } else {
            Ok(())
        }
    }

    /// True when the edge `{u, v}` is present (false for dead or out-of-range
    /// endpoints).
    pub fn contains_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.is_live(u) && self.adj[u.index()].contains(&v)
    }

    /// Inserts the edge `{u, v}` between two live vertices.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.require_live(u)?;
        self.require_live(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if self.adj[u.index()].contains(&v) {
            return Err(GraphError::DuplicateEdge { u, v });
        }
        self.adj[u.index()].insert(v);
        self.adj[v.index()].insert(u);
        self.edges += 1;
        Ok(())
    }

    /// Degree of a live vertex.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.require_live(v)?;
        Ok(self.adj[v.index()].len())
    }

    /// Neighbor set of a live vertex, in ascending id order.
    pub fn neighbors(&self, v: VertexId) -> Result<&BTreeSet<VertexId>, GraphError> {
        self.require_live(v)?;
        Ok(&self.adj[v.index()])
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| VertexId(i as u32))
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u.index()]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Deletes a live vertex together with its incident edges and returns the
    /// neighbor set it had at deletion time. The slot is tombstoned; the id
    /// is never reused.
    pub fn delete_vertex(&mut self, v: VertexId) -> Result<BTreeSet<VertexId>, GraphError> {
        self.require_live(v)?;
        let neighbors = core::mem::take(&mut self.adj[v.index()]);
        for &w in &neighbors {
            self.adj[w.index()].remove(&v);
        }
        self.edges -= neighbors.len();
        self.alive[v.index()] = false;
        self.live -= 1;
        Ok(neighbors)
    }

    /// Deletes the edge `{u, v}`, leaving both endpoints live.
    pub fn delete_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.require_live(u)?;
        self.require_live(v)?;
        if !self.adj[u.index()].contains(&v) {
            return Err(GraphError::MissingEdge { u, v });
        }
        self.adj[u.index()].remove(&v);
        self.adj[v.index()].remove(&u);
        self.edges -= 1;
        Ok(())
    }

    /// Reverses a `delete_vertex`: brings `v` back to life with edges to
    /// `neighbors`, all of which must currently be live. Used by trace
    /// replay, where deletions are unwound in reverse order.
    pub(crate) fn restore_vertex(
        &mut self,
        v: VertexId,
        neighbors: &BTreeSet<VertexId>,
    ) -> Result<(), GraphError> {
        if v.index() >= self.adj.len() {
            return Err(GraphError::OutOfRange { vertex: v, len: self.adj.len() });
        }
        if self.alive[v.index()] {
            return Err(GraphError::DuplicateEdge { u: v, v });
        }
        for &w in neighbors {
            self.require_live(w)?;
            if w == v {
                return Err(GraphError::SelfLoop { vertex: v });
            }
        }
        self.alive[v.index()] = true;
        self.live += 1;
        for &w in neighbors {
            self.adj[w.index()].insert(v);
        }
        self.adj[v.index()] = neighbors.clone();
        self.edges += neighbors.len();
        Ok(())
    }

    /// Full-scan consistency check: adjacency symmetry, no loops, no edges at
    /// dead slots, and correct cached counts. Debug/test helper; all public
    /// mutations preserve these invariants.
    pub fn check_invariants(&self) -> Result<(), String> {
        if self.adj.len() != self.alive.len() {
            return Err(format!(
                "{} adjacency slots but {} liveness flags",
                self.adj.len(),
                self.alive.len()
            ));
        }
        let live = self.alive.iter().filter(|&&a| a).count();
        if live != self.live {
            return Err(format!("live count {} but {} flags set", self.live, live));
        }
        let mut degree_sum = 0usize;
        for (i, set) in self.adj.iter().enumerate() {
            let v = VertexId(i as u32);
            if !self.alive[i] {
                if !set.is_empty() {
                    return Err(format!("dead vertex {v} has neighbors"));
                }
                continue;
            }
            degree_sum += set.len();
            for &w in set {
                if w == v {
                    return Err(format!("self-loop at {v}"));
                }
                if !self.is_live(w) {
                    return Err(format!("edge {{{v}, {w}}} reaches a dead or missing vertex"));
                }
                if !self.adj[w.index()].contains(&v) {
                    return Err(format!("asymmetric edge {{{v}, {w}}}"));
                }
            }
        }
        if degree_sum != 2 * self.edges {
            return Err(format!(
                "degree sum {} inconsistent with {} edges",
                degree_sum, self.edges
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Path 0 - 1 - 2.
    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    /// Triangle on {0, 1, 2}.
    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    /// Star with center 3 and leaves 0, 1, 2.
    fn star() -> Graph {
        Graph::from_edges(4, [(0, 3), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn construction_counts() {
        let g = p3();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(g.original_len(), 3);
        assert!(!g.is_null());
        assert!(Graph::new(0).is_null());
        g.check_invariants().unwrap();
    }

    #[test]
    fn degrees_on_a_path() {
        let g = p3();
        assert_eq!(g.degree(VertexId(0)).unwrap(), 1);
        assert_eq!(g.degree(VertexId(1)).unwrap(), 2);
        assert_eq!(g.degree(VertexId(2)).unwrap(), 1);
    }

    #[test]
    fn degree_of_deleted_vertex_is_an_error() {
        let mut g = p3();
        g.delete_vertex(VertexId(1)).unwrap();
        assert_eq!(g.degree(VertexId(1)), Err(GraphError::Deleted { vertex: VertexId(1) }));
        assert_eq!(
            g.degree(VertexId(9)),
            Err(GraphError::OutOfRange { vertex: VertexId(9), len: 3 })
        );
    }

    #[test]
    fn deleting_a_vertex_removes_incident_edges() {
        let mut g = star();
        let removed = g.delete_vertex(VertexId(3)).unwrap();
        assert_eq!(removed.len(), 3);
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 0);
        for v in 0..3 {
            assert_eq!(g.degree(VertexId(v)).unwrap(), 0);
        }
        g.check_invariants().unwrap();
    }

    #[test]
    fn deleting_an_edge_keeps_endpoints() {
        let mut g = k3();
        g.delete_edge(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(g.degree(VertexId(0)).unwrap(), 1);
        assert_eq!(g.degree(VertexId(2)).unwrap(), 2);
        // Deleting again reports the missing edge, in either orientation.
        assert_eq!(
            g.delete_edge(VertexId(1), VertexId(0)),
            Err(GraphError::MissingEdge { u: VertexId(1), v: VertexId(0) })
        );
        g.check_invariants().unwrap();
    }

    #[test]
    fn double_vertex_deletion_is_an_error() {
        let mut g = p3();
        g.delete_vertex(VertexId(0)).unwrap();
        assert_eq!(
            g.delete_vertex(VertexId(0)),
            Err(GraphError::Deleted { vertex: VertexId(0) })
        );
    }

    #[test]
    fn ids_stay_stable_across_deletions() {
        let mut g = star();
        g.delete_vertex(VertexId(1)).unwrap();
        // Remaining vertices keep their original ids.
        let ids: Vec<u32> = g.vertices().map(|v| v.0).collect();
        assert_eq!(ids, [0, 2, 3]);
        assert_eq!(g.degree(VertexId(3)).unwrap(), 2);
        assert!(g.contains_edge(VertexId(0), VertexId(3)));
        assert!(!g.contains_edge(VertexId(1), VertexId(3)));
    }

    #[test]
    fn add_edge_rejects_loops_duplicates_and_dead_endpoints() {
        let mut g = Graph::new(3);
        assert_eq!(
            g.add_edge(VertexId(1), VertexId(1)),
            Err(GraphError::SelfLoop { vertex: VertexId(1) })
        );
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(
            g.add_edge(VertexId(1), VertexId(0)),
            Err(GraphError::DuplicateEdge { u: VertexId(1), v: VertexId(0) })
        );
        g.delete_vertex(VertexId(2)).unwrap();
        assert_eq!(
            g.add_edge(VertexId(0), VertexId(2)),
            Err(GraphError::Deleted { vertex: VertexId(2) })
        );
    }

    #[test]
    fn edge_iteration_is_lexicographic() {
        let g = Graph::from_edges(4, [(2, 3), (0, 3), (0, 1)]).unwrap();
        let edges: Vec<(u32, u32)> = g.edges().map(|(u, v)| (u.0, v.0)).collect();
        assert_eq!(edges, [(0, 1), (0, 3), (2, 3)]);
    }

    #[test]
    fn restore_reverses_deletion() {
        let mut g = k3();
        let neighbors = g.delete_vertex(VertexId(1)).unwrap();
        g.restore_vertex(VertexId(1), &neighbors).unwrap();
        assert_eq!(g, k3());
        g.check_invariants().unwrap();
    }

    #[test]
    fn restore_rejects_live_vertex_and_dead_neighbors() {
        let mut g = p3();
        let n0 = g.delete_vertex(VertexId(0)).unwrap();
        assert!(g.restore_vertex(VertexId(2), &n0).is_err());
        g.delete_vertex(VertexId(1)).unwrap();
        // 0's recorded neighbor 1 is now dead, so the restore must fail.
        assert!(g.restore_vertex(VertexId(0), &n0).is_err());
    }
}
