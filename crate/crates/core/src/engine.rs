//! The peel-and-replay coloring engine.
//!
//! **Peel** (`reduce`): repeatedly shrink a working copy of the graph,
//! preferring to delete the lowest-numbered vertex of degree `< t`, else the
//! lexicographically least edge whose endpoints both have degree `< s`.
//! Every deletion is recorded as a [`ReductionStep`]. If the graph empties,
//! the recorded [`ReductionTrace`] certifies colorability; if neither rule
//! applies to a non-empty remainder, the input was too dense for the
//! parameters and the engine reports [`ReduceOutcome::Stuck`].
//!
//! **Replay** (`replay`): process the trace in reverse, restoring what was
//! deleted. A restored vertex had fewer than `t` neighbors when it was
//! peeled, so by pigeonhole some part contains none of them; it joins the
//! lowest-indexed such part, keeping its within-part degree zero at that
//! moment. A restored edge had both endpoints of degree `< s` when it was
//! peeled, so even if they share a part their within-part degrees stay
//! `≤ s − 1`. The loop invariant — every part induces maximum degree
//! `≤ s − 1` in the partially restored graph — is checked with debug
//! assertions at each step that can raise a within-part degree.
//!
//! The two halves compose into [`defective_coloring`]: graphs with no
//! K_{t+1} minor always peel to empty under the derived parameters, and the
//! replayed partition splits the vertices into `t` parts each inducing
//! maximum degree `< s`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId};
use crate::params::{ParamError, Params, DEFAULT_DENSITY_COEFFICIENT};

/// One recorded deletion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReductionStep {
    /// A vertex of degree `< t` was deleted; `neighbors` is its exact
    /// neighborhood at the moment of deletion.
    VertexDeletion {
        vertex: VertexId,
        neighbors: BTreeSet<VertexId>,
    },
    /// An edge whose endpoints both had degree `< s` was deleted.
    EdgeDeletion { u: VertexId, v: VertexId },
}

/// A complete record of a successful peel: the graph it started from and
/// the steps that emptied it, in the order they were applied.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionTrace {
    original: Graph,
    steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// Packages a starting graph with a step sequence. No validation
    /// happens here; [`replay`] checks every step against the graph.
    pub fn new(original: Graph, steps: Vec<ReductionStep>) -> ReductionTrace {
        ReductionTrace { original, steps }
    }

    /// The graph the peel started from.
    pub fn original(&self) -> &Graph {
        &self.original
    }

    /// The deletions, first-applied first.
    pub fn steps(&self) -> &[ReductionStep] {
        &self.steps
    }

    /// Number of recorded steps; at most `|V| + |E|` of the original.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// True when no steps were needed (the original graph was null).
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Result of peeling a graph to exhaustion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReduceOutcome {
    /// The graph emptied; the trace replays into a partition.
    Emptied(ReductionTrace),
    /// No rule applies to a non-empty remainder. `remaining` is the working
    /// graph at that point — a subgraph of the input (not necessarily
    /// induced, since earlier edge deletions may have removed edges among
    /// its survivors). Its existence certifies the input violates the
    /// density the parameters assumed, i.e. a K_{t+1} minor when the
    /// parameters were derived honestly.
    Stuck { remaining: Graph },
}

/// Picks the next deletion, or `None` when neither rule applies.
///
/// Vertex rule first: the lowest-numbered live vertex of degree `< t`.
/// Otherwise the lexicographically least edge `{u, v}` (ordered pairs
/// `u < v`, compared by `u` then `v`) with both endpoint degrees `< s`.
pub fn find_reduction(g: &Graph, t: u32, s: u64) -> Option<ReductionStep> {
    for v in g.vertices() {
        let deg = g.degree(v).expect("live vertex has a degree") as u64;
        if deg < t as u64 {
            let neighbors = g.neighbors(v).expect("live vertex has neighbors").clone();
            return Some(ReductionStep::VertexDeletion { vertex: v, neighbors });
        }
    }
    for (u, v) in g.edges() {
        let du = g.degree(u).expect("edge endpoint is live") as u64;
        let dv = g.degree(v).expect("edge endpoint is live") as u64;
        if du < s && dv < s {
            return Some(ReductionStep::EdgeDeletion { u, v });
        }
    }
    None
}

/// Peels a copy of `g` until it empties or no rule applies.
pub fn reduce(g: &Graph, t: u32, s: u64) -> ReduceOutcome {
    let mut working = g.clone();
    let mut steps = Vec::new();
    loop {
        if working.is_null() {
            return ReduceOutcome::Emptied(ReductionTrace::new(g.clone(), steps));
        }
        match find_reduction(&working, t, s) {
            Some(step) => {
                match step {
                    ReductionStep::VertexDeletion { vertex, .. } => {
                        working.delete_vertex(vertex).expect("chosen vertex is live");
                    }
                    ReductionStep::EdgeDeletion { u, v } => {
                        working.delete_edge(u, v).expect("chosen edge is present");
                    }
                }
                steps.push(step);
            }
            None => return ReduceOutcome::Stuck { remaining: working },
        }
    }
}

/// Why a trace failed to replay.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReplayError {
    /// Step `index` (0-based) does not apply to the graph state produced by
    /// the steps before it — wrong neighborhood snapshot, dead vertex,
    /// missing edge.
    StepNotApplicable { index: usize },
    /// All steps applied but `remaining` vertices survive, so the trace
    /// proves nothing.
    NotEmptied { remaining: usize },
    /// During reverse restoration, every one of the `t` parts contained a
    /// recorded neighbor of `vertex`. Impossible for traces produced by
    /// [`reduce`] (vertex deletions record fewer than `t` neighbors);
    /// reachable for hand-built traces.
    NoAdmissiblePart { vertex: VertexId },
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ReplayError::StepNotApplicable { index } => {
                write!(f, "step {index} does not apply to the graph state at that point")
            }
            ReplayError::NotEmptied { remaining } => {
                write!(f, "trace leaves {remaining} vertices undeleted")
            }
            ReplayError::NoAdmissiblePart { vertex } => {
                write!(f, "no part is free of vertex {vertex}'s recorded neighbors")
            }
        }
    }
}

impl core::error::Error for ReplayError {}

/// A vertex partition certifying bounded within-part degrees.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<BTreeSet<VertexId>>,
    defect_bound: u64,
}

impl Partition {
    /// The parts, indexed 0 to t − 1. Every live vertex of the colored
    /// graph appears in exactly one.
    pub fn parts(&self) -> &[BTreeSet<VertexId>] {
        &self.parts
    }

    /// The strict bound: each part induces maximum degree `< defect_bound`.
    pub fn defect_bound(&self) -> u64 {
        self.defect_bound
    }

    /// Largest within-part degree this partition actually attains in `g`.
    pub fn max_induced_degree(&self, g: &Graph) -> usize {
        let mut max = 0;
        for part in &self.parts {
            for &v in part {
                let Ok(nbrs) = g.neighbors(v) else { continue };
                let inside = nbrs.iter().filter(|w| part.contains(w)).count();
                max = max.max(inside);
            }
        }
        max
    }
}

/// Within-part degree of `v` in `working`, where `part_of` maps vertex
/// index to assigned part (restored vertices only).
fn induced_degree(working: &Graph, part_of: &[Option<u32>], v: VertexId) -> usize {
    let mine = part_of[v.index()];
    working
        .neighbors(v)
        .map(|nbrs| nbrs.iter().filter(|w| part_of[w.index()] == mine).count())
        .unwrap_or(0)
}

/// Validates a trace against its original graph, then replays it in
/// reverse into a `t`-part partition with within-part degrees `< s`.
///
/// The forward pass re-applies every step to a fresh copy of the original
/// and rejects the trace at the first step that does not apply exactly
/// ([`ReplayError::StepNotApplicable`]), or if the steps fail to empty the
/// graph ([`ReplayError::NotEmptied`]). The reverse pass restores steps
/// last-deleted first: a restored vertex joins the lowest-indexed part
/// containing none of its recorded neighbors.
pub fn replay(trace: &ReductionTrace, t: u32, s: u64) -> Result<Partition, ReplayError> {
    let mut working = trace.original().clone();
    for (index, step) in trace.steps().iter().enumerate() {
        let applied = match step {
            ReductionStep::VertexDeletion { vertex, neighbors } => working
                .delete_vertex(*vertex)
                .map(|actual| actual == *neighbors)
                .unwrap_or(false),
            ReductionStep::EdgeDeletion { u, v } => working.delete_edge(*u, *v).is_ok(),
        };
        if !applied {
            return Err(ReplayError::StepNotApplicable { index });
        }
    }
    if !working.is_null() {
        return Err(ReplayError::NotEmptied { remaining: working.order() });
    }

    let mut parts: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); t as usize];
    let mut part_of: Vec<Option<u32>> = vec![None; working.original_len()];
    for step in trace.steps().iter().rev() {
        match step {
            ReductionStep::VertexDeletion { vertex, neighbors } => {
                working
                    .restore_vertex(*vertex, neighbors)
                    .expect("forward pass validated this deletion");
                let free = (0..t).find(|&p| {
                    neighbors.iter().all(|w| !parts[p as usize].contains(w))
                });
                let Some(p) = free else {
                    return Err(ReplayError::NoAdmissiblePart { vertex: *vertex });
                };
                parts[p as usize].insert(*vertex);
                part_of[vertex.index()] = Some(p);
                // The chosen part holds none of the vertex's neighbors, so
                // no within-part degree changed anywhere.
                debug_assert_eq!(induced_degree(&working, &part_of, *vertex), 0);
            }
            ReductionStep::EdgeDeletion { u, v } => {
                working
                    .add_edge(*u, *v)
                    .expect("forward pass validated this deletion");
                // Both endpoints had degree < s when this edge was peeled,
                // so their within-part degrees stay ≤ s − 1 even if they
                // share a part.
                debug_assert!(induced_degree(&working, &part_of, *u) as u64 <= s.saturating_sub(1));
                debug_assert!(induced_degree(&working, &part_of, *v) as u64 <= s.saturating_sub(1));
            }
        }
    }
    Ok(Partition { parts, defect_bound: s })
}

/// A single verification failure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// A live vertex of the graph appears in no part.
    Uncovered { vertex: VertexId },
    /// A vertex appears in two parts (the first two, by index).
    Duplicated { vertex: VertexId, first: usize, second: usize },
    /// A part names a vertex the graph does not have live.
    UnknownVertex { vertex: VertexId, part: usize },
    /// A vertex has `induced_degree ≥ bound` inside its own part.
    ExcessDegree {
        vertex: VertexId,
        part: usize,
        induced_degree: usize,
        bound: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Uncovered { vertex } => write!(f, "vertex {vertex} is in no part"),
            Violation::Duplicated { vertex, first, second } => {
                write!(f, "vertex {vertex} is in parts {first} and {second}")
            }
            Violation::UnknownVertex { vertex, part } => {
                write!(f, "part {part} names vertex {vertex}, which is not in the graph")
            }
            Violation::ExcessDegree { vertex, part, induced_degree, bound } => write!(
                f,
                "vertex {vertex} has within-part degree {induced_degree} in part {part}, bound is < {bound}"
            ),
        }
    }
}

/// Outcome of checking a partition against a graph and a degree bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    /// True when `violations` is empty.
    pub ok: bool,
    /// Every failure found, in vertex-coverage order then degree order.
    pub violations: Vec<Violation>,
}

/// Checks that `parts` is an exact partition of `g`'s live vertices and
/// that every part induces maximum degree `< s`. Collects all violations
/// rather than stopping at the first.
pub fn verify_partition(g: &Graph, parts: &[BTreeSet<VertexId>], s: u64) -> VerifyReport {
    let mut violations = Vec::new();
    let mut seen: Vec<Option<usize>> = vec![None; g.original_len()];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            if !g.is_live(v) {
                violations.push(Violation::UnknownVertex { vertex: v, part: i });
                continue;
            }
            match seen[v.index()] {
                None => seen[v.index()] = Some(i),
                Some(first) => {
                    violations.push(Violation::Duplicated { vertex: v, first, second: i })
                }
            }
        }
    }
    for v in g.vertices() {
        if seen[v.index()].is_none() {
            violations.push(Violation::Uncovered { vertex: v });
        }
    }
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            let Ok(nbrs) = g.neighbors(v) else { continue };
            let inside = nbrs.iter().filter(|w| part.contains(w)).count();
            if inside as u64 >= s {
                violations.push(Violation::ExcessDegree {
                    vertex: v,
                    part: i,
                    induced_degree: inside,
                    bound: s,
                });
            }
        }
    }
    VerifyReport { ok: violations.is_empty(), violations }
}

/// Knobs for [`defective_coloring`]. `Default` gives the standard
/// parameter derivation: coefficient 4, no overrides.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ColoringConfig {
    /// Density coefficient `C` for the derived bound.
    pub coefficient: f64,
    /// Per-class density bound replacing the `C`-based one.
    pub density_override: Option<f64>,
    /// Replaces the derived degree bound `s` entirely. The peel uses this
    /// value; setting it below the derived one can make reducible graphs
    /// stick, setting it above weakens the certificate.
    pub s_override: Option<u64>,
}

impl Default for ColoringConfig {
    fn default() -> ColoringConfig {
        ColoringConfig {
            coefficient: DEFAULT_DENSITY_COEFFICIENT,
            density_override: None,
            s_override: None,
        }
    }
}

/// Overall result of an engine run.
#[derive(Clone, PartialEq, Debug)]
pub enum ColoringOutcome {
    /// The graph peeled to empty and the trace replayed cleanly.
    Colored {
        partition: Partition,
        params: Params,
        trace: ReductionTrace,
    },
    /// The peel stuck; `remaining` is the irreducible working graph. For
    /// honestly derived parameters this certifies a K_{t+1} minor.
    Stuck { remaining: Graph, params: Params },
}

/// Runs the full pipeline: derive parameters, peel, replay.
///
/// On success every live vertex of `g` lands in exactly one of `t` parts
/// and each part induces maximum degree `< params.s`. The replay of a
/// trace produced here cannot fail, so the `Result` only carries parameter
/// derivation errors.
pub fn defective_coloring(
    g: &Graph,
    t: u32,
    config: &ColoringConfig,
) -> Result<ColoringOutcome, ParamError> {
    let mut params = Params::derive(t, config.coefficient, config.density_override)?;
    if let Some(s) = config.s_override {
        params.s = s;
    }
    match reduce(g, t, params.s) {
        ReduceOutcome::Emptied(trace) => {
            let partition =
                replay(&trace, t, params.s).expect("trace from reduce replays cleanly");
            Ok(ColoringOutcome::Colored { partition, params, trace })
        }
        ReduceOutcome::Stuck { remaining } => Ok(ColoringOutcome::Stuck { remaining, params }),
    }
}
