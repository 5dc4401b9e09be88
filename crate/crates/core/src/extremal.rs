//! Executable forms of the density facts the engine's correctness rests on.
//!
//! Two inequalities matter. First, the edge-density bound: a graph with no
//! K_{t+1} minor has at most `C(t+1)·sqrt(ln(t+1))·|V|` edges.
//! [`density_bound_holds`] evaluates it on a concrete graph. Second, the
//! stable-removal bound: if `A` is a stable set whose vertices all have
//! degree at least `t`, then `|E(G∖A)| + |A| ≤ r·|V(G∖A)|` for any valid
//! density parameter `r` of the class. [`stable_removal_bound_holds`]
//! evaluates that, after verifying the witness. Property tests run these
//! over generated minor-free corpora; a single `holds = false` on such a
//! graph would falsify the parameter derivation in [`crate::params`].
//!
//! Both checkers return the two sides of their inequality, not a bare
//! boolean, so a failure pinpoints the numbers. The left side is an exact
//! integer count compared against the real right side without tolerance.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::generate::seeded_shuffle;
use crate::graph::{Graph, VertexId};

/// A stable set `A` in a host graph, every member having degree at least
/// `min_degree` there. Construct by hand or via [`random_stable_witness`];
/// [`stable_removal_bound_holds`] re-verifies the invariants either way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StableSetWitness {
    /// The stable set.
    pub vertices: BTreeSet<VertexId>,
    /// Degree every member must meet in the host graph.
    pub min_degree: u32,
}

/// Both sides of a density inequality, plus the verdict.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct DensityReport {
    /// True when `lhs ≤ rhs`.
    pub holds: bool,
    /// The exact integer side (an edge or edge-plus-set count).
    pub lhs: u64,
    /// The real side (a density expression).
    pub rhs: f64,
}

/// Why a [`StableSetWitness`] failed verification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessError {
    /// The witness names a vertex the graph does not have live.
    VertexMissing { vertex: VertexId },
    /// A member's degree falls short of the witness's own threshold.
    DegreeTooSmall { vertex: VertexId, degree: usize, required: u32 },
    /// Two members are adjacent, so the set is not stable.
    NotStable { u: VertexId, v: VertexId },
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WitnessError::VertexMissing { vertex } => {
                write!(f, "witness vertex {vertex} is not in the graph")
            }
            WitnessError::DegreeTooSmall { vertex, degree, required } => {
                write!(f, "witness vertex {vertex} has degree {degree} < {required}")
            }
            WitnessError::NotStable { u, v } => {
                write!(f, "witness vertices {u} and {v} are adjacent")
            }
        }
    }
}

impl core::error::Error for WitnessError {}

/// Evaluates `|E(G)| ≤ C(t+1)·sqrt(ln(t+1))·|V(G)|`, the edge bound that
/// graphs with no K_{t+1} minor obey.
///
/// `c` must be positive. Note `t = 0` zeroes the right side (`ln 1 = 0`),
/// so any graph with an edge fails — consistent with K_1 being a minor of
/// everything nonempty.
pub fn density_bound_holds(g: &Graph, t: u32, c: f64) -> DensityReport {
    debug_assert!(c > 0.0, "density coefficient must be positive");
    let tp1 = t as f64 + 1.0;
    let lhs = g.size() as u64;
    let rhs = c * tp1 * libm::sqrt(libm::log(tp1)) * g.order() as f64;
    DensityReport { holds: lhs as f64 <= rhs, lhs, rhs }
}

/// Verifies `witness` against `g`: every member live, every member of
/// degree at least the witness's threshold, no two members adjacent.
fn verify_witness(g: &Graph, witness: &StableSetWitness) -> Result<(), WitnessError> {
    for &v in &witness.vertices {
        if !g.is_live(v) {
            return Err(WitnessError::VertexMissing { vertex: v });
        }
        let degree = g.degree(v).expect("liveness just checked");
        if (degree as u64) < witness.min_degree as u64 {
            return Err(WitnessError::DegreeTooSmall {
                vertex: v,
                degree,
                required: witness.min_degree,
            });
        }
    }
    for &u in &witness.vertices {
        for &v in witness.vertices.range(u..).skip(1) {
            if g.contains_edge(u, v) {
                return Err(WitnessError::NotStable { u, v });
            }
        }
    }
    Ok(())
}

/// Evaluates `|E(G∖A)| + |A| ≤ r·|V(G∖A)|` for a verified stable-set
/// witness `A`.
///
/// Removing a stable set of high-degree vertices cannot leave the
/// remainder dense: this is the inequality that lets the degree-bound
/// derivation charge each deleted vertex against the edges it took with
/// it. With an empty witness it degenerates to `|E(G)| ≤ r·|V(G)|`.
pub fn stable_removal_bound_holds(
    g: &Graph,
    witness: &StableSetWitness,
    r: f64,
) -> Result<DensityReport, WitnessError> {
    verify_witness(g, witness)?;
    let mut remainder = g.clone();
    for &v in &witness.vertices {
        remainder.delete_vertex(v).expect("witness vertices verified live");
    }
    let lhs = remainder.size() as u64 + witness.vertices.len() as u64;
    let rhs = r * remainder.order() as f64;
    Ok(DensityReport { holds: lhs as f64 <= rhs, lhs, rhs })
}

/// Greedily builds a maximal stable set among the vertices of degree at
/// least `min_degree`, scanning them in a seed-determined random order.
/// Returns `None` when no vertex qualifies.
pub fn random_stable_witness(g: &Graph, min_degree: u32, seed: u64) -> Option<StableSetWitness> {
    let mut candidates: Vec<VertexId> = g
        .vertices()
        .filter(|&v| g.degree(v).expect("live vertex") as u64 >= min_degree as u64)
        .collect();
    if candidates.is_empty() {
        return None;
    }
    seeded_shuffle(&mut candidates, seed);
    let mut chosen: BTreeSet<VertexId> = BTreeSet::new();
    for v in candidates {
        if chosen.iter().all(|&u| !g.contains_edge(u, v)) {
            chosen.insert(v);
        }
    }
    Some(StableSetWitness { vertices: chosen, min_degree })
}
