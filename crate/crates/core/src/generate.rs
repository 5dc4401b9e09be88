//! Deterministic graph families.
//!
//! Every generator is a pure function of its arguments: the seeded ones draw
//! from a ChaCha8 stream seeded with the given value, so the same call
//! produces the same graph on every platform and run. The unseeded ones
//! (`gen_grid`, `construct_sharp`) have a fixed layout.
//!
//! The random families exist because their excluded clique minors are known
//! a priori: forests have no K_3 minor, k-trees no K_{k+2} minor, grids are
//! planar and so have no K_5 minor. `construct_sharp` builds the layered
//! family showing the engine's degree bound cannot be improved to `s` parts
//! of smaller defect with one part fewer.

use alloc::vec::Vec;

use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};

/// Default cap on the predicted vertex count of [`construct_sharp`]; the
/// recursion is exponential in `t`.
pub const SHARP_DEFAULT_VERTEX_CAP: u64 = 1_000_000;

/// Cap on vertex counts accepted by the random-family generators.
pub const MAX_GENERATED_VERTICES: u64 = 100_000_000;

/// Errors from the generators.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum GenerateError {
    /// `construct_sharp` needs at least one part.
    SharpPartsZero,
    /// The predicted vertex count of `construct_sharp(s, t)` exceeds the cap.
    SharpTooLarge { predicted: u128, cap: u64 },
    /// A k-tree needs an initial clique: `n >= k + 1`.
    KtreeTooFewVertices { n: u32, k: u32 },
    /// Edge probability must lie in `[0, 1]`.
    ProbabilityOutOfRange { p: f64 },
    /// Requested vertex count exceeds [`MAX_GENERATED_VERTICES`].
    TooManyVertices { requested: u64 },
}

impl fmt::Display for GenerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenerateError::SharpPartsZero => {
                write!(f, "the layered family is defined for t >= 1")
            }
            GenerateError::SharpTooLarge { predicted, cap } => {
                write!(f, "predicted vertex count {predicted} exceeds the cap {cap}")
            }
            GenerateError::KtreeTooFewVertices { n, k } => {
                write!(f, "a {k}-tree needs at least {} vertices, requested {n}", k as u64 + 1)
            }
            GenerateError::ProbabilityOutOfRange { p } => {
                write!(f, "edge probability {p} outside [0, 1]")
            }
            GenerateError::TooManyVertices { requested } => {
                write!(f, "vertex count {requested} exceeds the supported maximum {MAX_GENERATED_VERTICES}")
            }
        }
    }
}

impl core::error::Error for GenerateError {}

/// Predicted vertex count of [`construct_sharp`]: `((s+1)^t - 1) / s` for
/// `s >= 1` and `t` for `s = 0`, computed by the recurrence
/// `n(1) = 1, n(t) = (s+1) n(t-1) + 1`. `None` on u128 overflow.
pub fn sharp_order(s: u32, t: u32) -> Option<u128> {
    let mut n: u128 = 1;
    for _ in 1..t {
        n = n.checked_mul(s as u128 + 1)?.checked_add(1)?;
    }
    Some(n)
}

/// Builds the layered family value `G(s, t)` with the default size cap.
///
/// `G(s, 1)` is a single vertex; `G(s, t)` is `s + 1` disjoint copies of
/// `G(s, t-1)` plus one apex adjacent to every other vertex. The layout is
/// fixed: copies occupy consecutive id blocks, the apex takes the last id.
/// Every part of every partition of `G(s, t)` into `t - 1` parts induces a
/// vertex of degree greater than `s`, which is what makes the family
/// interesting as a stress input.
pub fn construct_sharp(s: u32, t: u32) -> Result<Graph, GenerateError> {
    construct_sharp_capped(s, t, SHARP_DEFAULT_VERTEX_CAP)
}

/// [`construct_sharp`] with an explicit cap on the predicted vertex count.
pub fn construct_sharp_capped(s: u32, t: u32, cap: u64) -> Result<Graph, GenerateError> {
    if t < 1 {
        return Err(GenerateError::SharpPartsZero);
    }
    let predicted = sharp_order(s, t).unwrap_or(u128::MAX);
    if predicted > cap as u128 {
        return Err(GenerateError::SharpTooLarge { predicted, cap });
    }

    // Grow iteratively: given the edge list of G(s, level-1) on `n` vertices,
    // lay out s+1 shifted copies and wire the new apex to everything below it.
    let mut n: u32 = 1;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for _ in 1..t {
        let copies = s + 1;
        let mut next_edges = Vec::with_capacity(edges.len() * copies as usize + (n * copies) as usize);
        for c in 0..copies {
            let off = c * n;
            next_edges.extend(edges.iter().map(|&(u, v)| (u + off, v + off)));
        }
        let apex = n * copies;
        next_edges.extend((0..apex).map(|v| (v, apex)));
        n = apex + 1;
        edges = next_edges;
    }
    Ok(Graph::from_edges(n as usize, edges).expect("layered family edges are simple by construction"))
}

fn check_vertex_budget(n: u64) -> Result<(), GenerateError> {
    if n > MAX_GENERATED_VERTICES {
        Err(GenerateError::TooManyVertices { requested: n })
    } else {
        Ok(())
    }
}

/// A seeded random forest on `n` vertices (acyclic, so free of K_3 minors).
///
/// Vertex 0 starts a tree; each later vertex either starts a fresh tree
/// (probability 1/8) or attaches to a uniformly random earlier vertex, so
/// the output is a union of random recursive trees with `m <= n - 1`.
pub fn gen_forest(n: u32, seed: u64) -> Result<Graph, GenerateError> {
    check_vertex_budget(n as u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n as usize);
    for v in 1..n {
        if rng.gen_range(0..8u32) == 0 {
            continue; // new root
        }
        let parent = rng.gen_range(0..v);
        g.add_edge(VertexId(parent), VertexId(v))
            .expect("attachment edges go to distinct earlier vertices");
    }
    Ok(g)
}

/// A seeded random k-tree on `n` vertices (no K_{k+2} minor,
/// `m = k n - k (k+1) / 2`).
///
/// Starts from K_{k+1} on ids `0..=k`; every later vertex is joined to all
/// members of a uniformly random k-clique of the graph built so far, and the
/// k new k-cliques this creates become candidates for later vertices.
pub fn gen_ktree(n: u32, k: u32, seed: u64) -> Result<Graph, GenerateError> {
    check_vertex_budget(n as u64)?;
    if (n as u64) < k as u64 + 1 {
        return Err(GenerateError::KtreeTooFewVertices { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n as usize);
    for u in 0..=k {
        for v in (u + 1)..=k {
            g.add_edge(VertexId(u), VertexId(v)).expect("initial clique edges are simple");
        }
    }
    // All k-subsets of the initial clique, ascending, so the candidate order
    // is deterministic.
    let mut cliques: Vec<Vec<u32>> = (0..=k)
        .map(|skip| (0..=k).filter(|&x| x != skip).collect())
        .collect();
    for v in (k + 1)..n {
        let pick = rng.gen_range(0..cliques.len());
        let base = cliques[pick].clone();
        for &u in &base {
            g.add_edge(VertexId(u), VertexId(v)).expect("new vertex joins existing clique");
        }
        for skip in 0..base.len() {
            let mut next: Vec<u32> = base
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &x)| x)
                .collect();
            next.push(v);
            cliques.push(next);
        }
    }
    Ok(g)
}

/// The `w x h` grid graph (planar, hence no K_5 minor). Vertex `(row, col)`
/// gets id `row * w + col`; edges join horizontal and vertical neighbors.
pub fn gen_grid(w: u32, h: u32) -> Result<Graph, GenerateError> {
    let n = w as u64 * h as u64;
    check_vertex_budget(n)?;
    let mut g = Graph::new(n as usize);
    for row in 0..h {
        for col in 0..w {
            let v = row * w + col;
            if col + 1 < w {
                g.add_edge(VertexId(v), VertexId(v + 1)).expect("grid edges are simple");
            }
            if row + 1 < h {
                g.add_edge(VertexId(v), VertexId(v + w)).expect("grid edges are simple");
            }
        }
    }
    Ok(g)
}

/// A seeded binomial random graph: every pair `{u, v}` becomes an edge
/// independently with probability `p`, drawn in lexicographic pair order.
pub fn gen_random(n: u32, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    check_vertex_budget(n as u64)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::ProbabilityOutOfRange { p });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n as usize);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(VertexId(u), VertexId(v)).expect("pair enumeration yields simple edges");
            }
        }
    }
    Ok(g)
}

/// Shuffles a slice deterministically; shared by callers that need a seeded
/// random order over vertices.
pub(crate) fn seeded_shuffle<T>(items: &mut [T], seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    items.shuffle(&mut rng);
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn sharp_base_case_is_a_single_vertex() {
        let g = construct_sharp(1, 1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn sharp_1_2_is_the_path_p3() {
        let g = construct_sharp(1, 2).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        // Two copies of K_1 at ids 0, 1; apex 2 adjacent to both.
        assert!(g.contains_edge(VertexId(0), VertexId(2)));
        assert!(g.contains_edge(VertexId(1), VertexId(2)));
        assert!(!g.contains_edge(VertexId(0), VertexId(1)));
    }

    #[test]
    fn sharp_2_2_is_the_three_leaf_star() {
        let g = construct_sharp(2, 2).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 3);
        assert_eq!(g.degree(VertexId(3)).unwrap(), 3);
    }

    #[test]
    fn sharp_1_3_has_seven_vertices_and_a_full_apex() {
        let g = construct_sharp(1, 3).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree(VertexId(6)).unwrap(), 6);
        // Frozen full edge set, matching the documented layout.
        let edges: Vec<(u32, u32)> = g.edges().map(|(u, v)| (u.0, v.0)).collect();
        assert_eq!(
            edges,
            [(0, 2), (0, 6), (1, 2), (1, 6), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
        );
    }

    #[test]
    fn sharp_with_zero_sparsity_is_a_clique() {
        // s = 0: one copy per level plus an apex, i.e. K_t.
        let g = construct_sharp(0, 4).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn sharp_order_matches_closed_form() {
        for s in 1..=3u32 {
            for t in 1..=4u32 {
                let predicted = sharp_order(s, t).unwrap();
                let closed = ((s as u128 + 1).pow(t) - 1) / s as u128;
                assert_eq!(predicted, closed, "s={s} t={t}");
                let g = construct_sharp(s, t).unwrap();
                assert_eq!(g.order() as u128, closed, "s={s} t={t}");
                g.check_invariants().unwrap();
            }
        }
    }

    #[test]
    fn sharp_first_block_is_the_previous_level() {
        for s in 1..=3u32 {
            for t in 2..=4u32 {
                let prev = construct_sharp(s, t - 1).unwrap();
                let cur = construct_sharp(s, t).unwrap();
                let block = prev.order() as u32;
                // Edges inside ids 0..block are exactly the previous level's.
                let inner: Vec<(u32, u32)> = cur
                    .edges()
                    .map(|(u, v)| (u.0, v.0))
                    .filter(|&(u, v)| u < block && v < block)
                    .collect();
                let expected: Vec<(u32, u32)> = prev.edges().map(|(u, v)| (u.0, v.0)).collect();
                assert_eq!(inner, expected, "s={s} t={t}");
            }
        }
    }

    #[test]
    fn sharp_rejects_zero_parts_and_oversize() {
        assert_eq!(construct_sharp(1, 0), Err(GenerateError::SharpPartsZero));
        assert!(matches!(
            construct_sharp(1, 30),
            Err(GenerateError::SharpTooLarge { .. })
        ));
        // Deep recursion with a fat branching factor must not overflow the
        // predictor.
        assert!(matches!(
            construct_sharp(u32::MAX, 50),
            Err(GenerateError::SharpTooLarge { .. })
        ));
    }

    #[test]
    fn forest_has_no_cycles_and_few_edges() {
        // Union-find cycle check, independent of the generator's internals.
        for seed in 0..20u64 {
            let n = 1 + (seed as u32 * 13) % 120;
            let g = gen_forest(n, seed).unwrap();
            assert!(g.size() <= g.order().saturating_sub(1), "n={n} seed={seed}");
            let mut parent: Vec<usize> = (0..g.original_len()).collect();
            fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                if parent[x] != x {
                    let root = find(parent, parent[x]);
                    parent[x] = root;
                }
                parent[x]
            }
            for (u, v) in g.edges() {
                let (ru, rv) = (find(&mut parent, u.index()), find(&mut parent, v.index()));
                assert_ne!(ru, rv, "cycle through edge {u}-{v} (n={n} seed={seed})");
                parent[ru] = rv;
            }
            g.check_invariants().unwrap();
        }
    }

    #[test]
    fn forest_trivial_cases() {
        assert!(gen_forest(0, 7).unwrap().is_null());
        let k1 = gen_forest(1, 7).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.size(), 0);
    }

    #[test]
    fn ktree_edge_count_identity() {
        let g = gen_ktree(5, 2, 42).unwrap();
        assert_eq!(g.size(), 7); // 2 * 5 - 3
        for seed in 0..10u64 {
            for k in 1..=3u32 {
                let n = k + 1 + (seed as u32 % 40);
                let g = gen_ktree(n, k, seed).unwrap();
                let expected = (k as usize * n as usize) - (k as usize * (k as usize + 1)) / 2;
                assert_eq!(g.size(), expected, "n={n} k={k} seed={seed}");
                g.check_invariants().unwrap();
            }
        }
    }

    #[test]
    fn ktree_needs_its_initial_clique() {
        assert_eq!(
            gen_ktree(2, 2, 0),
            Err(GenerateError::KtreeTooFewVertices { n: 2, k: 2 })
        );
        // Exactly k+1 vertices is the complete graph K_{k+1}.
        let g = gen_ktree(4, 3, 0).unwrap();
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn grid_2x2_is_the_four_cycle() {
        let g = gen_grid(2, 2).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 4);
        for v in 0..4 {
            assert_eq!(g.degree(VertexId(v)).unwrap(), 2);
        }
    }

    #[test]
    fn grid_counts_and_degenerate_sizes() {
        let g = gen_grid(4, 3).unwrap();
        assert_eq!(g.order(), 12);
        // m = h(w-1) + w(h-1)
        assert_eq!(g.size(), 3 * 3 + 4 * 2);
        assert!(gen_grid(0, 5).unwrap().is_null());
        assert!(gen_grid(5, 0).unwrap().is_null());
        let line = gen_grid(6, 1).unwrap();
        assert_eq!(line.size(), 5);
    }

    #[test]
    fn random_extremes_and_validation() {
        let empty = gen_random(6, 0.0, 3).unwrap();
        assert_eq!(empty.size(), 0);
        let full = gen_random(6, 1.0, 3).unwrap();
        assert_eq!(full.size(), 15);
        assert!(matches!(
            gen_random(6, 1.5, 3),
            Err(GenerateError::ProbabilityOutOfRange { .. })
        ));
        assert!(matches!(
            gen_random(6, f64::NAN, 3),
            Err(GenerateError::ProbabilityOutOfRange { .. })
        ));
    }

    #[test]
    fn seeded_generators_are_reproducible() {
        assert_eq!(gen_forest(64, 9).unwrap(), gen_forest(64, 9).unwrap());
        assert_eq!(gen_ktree(30, 3, 9).unwrap(), gen_ktree(30, 3, 9).unwrap());
        assert_eq!(gen_random(24, 0.37, 9).unwrap(), gen_random(24, 0.37, 9).unwrap());
        // Different seeds virtually always differ; spot-check one pair.
        assert_ne!(gen_random(24, 0.37, 9).unwrap(), gen_random(24, 0.37, 10).unwrap());
    }

    #[test]
    fn oversized_requests_are_rejected() {
        assert!(matches!(
            gen_forest(u32::MAX, 0),
            Err(GenerateError::TooManyVertices { .. })
        ));
        assert!(matches!(
            gen_grid(100_000, 100_000),
            Err(GenerateError::TooManyVertices { .. })
        ));
    }
}
