//! Vertex partitions into `r` blocks: the fewest edges to delete for
//! r-partiteness, the edit distance to the Turán graph, and related checks.
//!
//! For a balanced partition the edit distance to the labelled Turán graph on
//! those blocks is `internal + missing_cross = 2·internal + e(T_r(n)) − m`,
//! so both searches minimise internal edges, with or without the balance
//! constraint.

mod exact;
mod heuristic;
mod multipartite;

use serde::Serialize;

pub use multipartite::max_complete_multipartite_subgraph;

use crate::graph::turan_parts;
use crate::{Error, Graph, Result};

/// Exact search for `r >= 5` is allowed while `r^(n−1)` stays below this.
pub const EXACT_BUDGET: u64 = 1 << 16;

/// Default seed for the randomised local search.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    Exact,
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionAssignment {
    pub r: usize,
    pub block_of: Vec<usize>,
    pub internal_edges: usize,
    /// `Σ_{i<j} (|V_i||V_j| − e(V_i, V_j))`.
    pub missing_cross: usize,
    /// Block sizes are a permutation of the Turán part sizes.
    pub balanced: bool,
}

impl PartitionAssignment {
    pub fn new(g: &Graph, r: usize, block_of: Vec<usize>) -> Result<Self> {
        if block_of.len() != g.n() || block_of.iter().any(|&b| b >= r) {
            return Err(Error::Domain(format!(
                "assignment must map all {} vertices into [0, {r})",
                g.n()
            )));
        }
        let mut sizes = vec![0usize; r];
        for &b in &block_of {
            sizes[b] += 1;
        }
        let internal_edges = g.edges().filter(|&(u, v)| block_of[u] == block_of[v]).count();
        let cross = g.m() - internal_edges;
        let n = g.n();
        let same: usize = sizes.iter().map(|s| s * s.saturating_sub(1) / 2).sum();
        let all_pairs_cross = n * (n - 1) / 2 - same;
        let balanced = r <= n && {
            let mut sorted = sizes.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            sorted == turan_parts(r, n)
        };
        Ok(PartitionAssignment {
            r,
            block_of,
            internal_edges,
            missing_cross: all_pairs_cross - cross,
            balanced,
        })
    }

    /// Vertices of each block, ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.r];
        for (v, &b) in self.block_of.iter().enumerate() {
            out[b].push(v);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionResult {
    pub value: usize,
    pub assignment: PartitionAssignment,
    /// `Heuristic` values are upper bounds.
    pub mode: Mode,
}

pub fn min_edges_to_r_partite(g: &Graph, r: usize, mode: Mode) -> Result<PartitionResult> {
    min_edges_to_r_partite_seeded(g, r, mode, DEFAULT_SEED)
}

pub fn min_edges_to_r_partite_seeded(g: &Graph, r: usize, mode: Mode, seed: u64) -> Result<PartitionResult> {
    if r < 2 {
        return Err(Error::Domain("r-partiteness needs r >= 2".into()));
    }
    if r >= g.n() {
        let assignment = PartitionAssignment::new(g, r, (0..g.n()).collect())?;
        return Ok(PartitionResult {
            value: 0,
            assignment,
            mode,
        });
    }
    let block_of = search(g, r, false, mode, seed)?;
    let assignment = PartitionAssignment::new(g, r, block_of)?;
    Ok(PartitionResult {
        value: assignment.internal_edges,
        assignment,
        mode,
    })
}

pub fn edit_distance_to_turan(g: &Graph, r: usize, mode: Mode) -> Result<PartitionResult> {
    edit_distance_to_turan_seeded(g, r, mode, DEFAULT_SEED)
}

pub fn edit_distance_to_turan_seeded(g: &Graph, r: usize, mode: Mode, seed: u64) -> Result<PartitionResult> {
    if r < 1 || r > g.n() {
        return Err(Error::Domain(format!(
            "Turán graph needs 1 <= r <= n, got r={r}, n={}",
            g.n()
        )));
    }
    let block_of = if r == 1 {
        vec![0; g.n()]
    } else {
        search(g, r, true, mode, seed)?
    };
    let assignment = PartitionAssignment::new(g, r, block_of)?;
    debug_assert!(assignment.balanced);
    Ok(PartitionResult {
        value: assignment.internal_edges + assignment.missing_cross,
        assignment,
        mode,
    })
}

fn search(g: &Graph, r: usize, balanced: bool, mode: Mode, seed: u64) -> Result<Vec<usize>> {
    let upper = heuristic::local_search(g, r, balanced, seed);
    match mode {
        Mode::Heuristic => Ok(upper),
        Mode::Exact => {
            if !exact_feasible(g.n(), r) {
                return Err(Error::Capacity(format!(
                    "exact {r}-partition search on {} vertices is over budget; use heuristic mode",
                    g.n()
                )));
            }
            Ok(exact::branch_and_bound(g, r, balanced, &upper))
        }
    }
}

/// Whether exact mode accepts `(n, r)`: `r = 2` up to 16 vertices, `r = 3`
/// up to 11, `r = 4` up to 9.
pub fn exact_feasible(n: usize, r: usize) -> bool {
    if r >= n || n <= 1 {
        return true;
    }
    match r {
        2 => n <= 16,
        3 => n <= 11,
        4 => n <= 9,
        _ => (r as u64).checked_pow(n as u32 - 1).is_some_and(|x| x <= EXACT_BUDGET),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlmostComplete {
    pub ok: bool,
    /// `(vertex, block)` pairs where the vertex misses too many of the block.
    pub violators: Vec<(usize, usize)>,
}

/// Whether every `v ∈ U_i` has at least `|U_j| − eps·n_ref` neighbours in
/// each other `U_j`. Blocks must be disjoint but need not cover the graph.
pub fn is_eps_almost_complete(g: &Graph, blocks: &[Vec<usize>], eps: f64, n_ref: usize) -> Result<AlmostComplete> {
    if eps.is_nan() || eps < 0.0 {
        return Err(Error::Domain(format!("eps must be nonnegative, got {eps}")));
    }
    let mut seen = vec![false; g.n()];
    for &v in blocks.iter().flatten() {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Domain(format!(
                "blocks must be disjoint vertex sets; bad vertex {v}"
            )));
        }
    }
    let slack = eps * n_ref as f64;
    let mut violators = Vec::new();
    for (i, ui) in blocks.iter().enumerate() {
        for &v in ui {
            for (j, uj) in blocks.iter().enumerate() {
                if i == j {
                    continue;
                }
                let hits = uj.iter().filter(|&&w| g.has_edge(v, w)).count();
                if (hits as f64) < uj.len() as f64 - slack - 1e-9 {
                    violators.push((v, j));
                }
            }
        }
    }
    violators.sort_unstable();
    Ok(AlmostComplete {
        ok: violators.is_empty(),
        violators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::chromatic_number;
    use crate::FamilySpec;

    fn build(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    /// Independent oracle: every map V → [r].
    fn brute(g: &Graph, r: usize, balanced: bool) -> usize {
        let n = g.n();
        let total = r.pow(n as u32);
        (0..total)
            .filter_map(|mut code| {
                let block: Vec<usize> = (0..n)
                    .map(|_| {
                        let b = code % r;
                        code /= r;
                        b
                    })
                    .collect();
                let a = PartitionAssignment::new(g, r, block).unwrap();
                if balanced && !a.balanced {
                    return None;
                }
                Some(if balanced {
                    a.internal_edges + a.missing_cross
                } else {
                    a.internal_edges
                })
            })
            .min()
            .unwrap()
    }

    fn random_graph(n: usize, state: &mut u64) -> Graph {
        Graph::from_fn(n, |_, _| {
            *state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            *state >> 63 == 1
        })
        .unwrap()
    }

    #[test]
    fn spec_examples() {
        let c5 = build(FamilySpec::Cycle(5));
        let k4 = build(FamilySpec::Complete(4));
        assert_eq!(min_edges_to_r_partite(&c5, 2, Mode::Exact).unwrap().value, 1);
        assert_eq!(min_edges_to_r_partite(&k4, 2, Mode::Exact).unwrap().value, 2);
        assert_eq!(min_edges_to_r_partite(&k4, 3, Mode::Exact).unwrap().value, 1);
        let t37 = build(FamilySpec::Turan { r: 3, n: 7 });
        assert_eq!(edit_distance_to_turan(&t37, 3, Mode::Exact).unwrap().value, 0);
        let c5_edit = edit_distance_to_turan(&c5, 2, Mode::Exact).unwrap();
        assert_eq!(c5_edit.value, 3);
        assert!(c5_edit.assignment.balanced);
        assert_eq!(edit_distance_to_turan(&k4, 2, Mode::Exact).unwrap().value, 2);
    }

    #[test]
    fn exact_matches_brute_force() {
        let mut state = 99;
        for n in 2..=7 {
            for _ in 0..6 {
                let g = random_graph(n, &mut state);
                for r in 2..=3.min(n) {
                    let d = min_edges_to_r_partite(&g, r, Mode::Exact).unwrap();
                    assert_eq!(d.value, brute(&g, r, false), "{g} r={r}");
                    let e = edit_distance_to_turan(&g, r, Mode::Exact).unwrap();
                    assert_eq!(e.value, brute(&g, r, true), "{g} r={r}");
                    assert!(d.value <= e.value);
                    let h = min_edges_to_r_partite(&g, r, Mode::Heuristic).unwrap();
                    assert!(h.value >= d.value);
                    assert_eq!(d.value == 0, chromatic_number(&g).unwrap() <= r);
                }
            }
        }
    }

    #[test]
    fn budget_window() {
        assert!(exact_feasible(16, 2) && !exact_feasible(17, 2));
        assert!(exact_feasible(11, 3) && !exact_feasible(12, 3));
        assert!(exact_feasible(9, 4) && !exact_feasible(10, 4));
        let g = build(FamilySpec::Cycle(17));
        assert!(matches!(
            min_edges_to_r_partite(&g, 2, Mode::Exact),
            Err(Error::Capacity(_))
        ));
        assert_eq!(min_edges_to_r_partite(&g, 2, Mode::Heuristic).unwrap().value, 1);
    }

    #[test]
    fn almost_complete_examples() {
        let t = build(FamilySpec::CompleteMultipartite(vec![3, 2, 2]));
        let parts = vec![vec![0, 1, 2], vec![3, 4], vec![5, 6]];
        assert!(is_eps_almost_complete(&t, &parts, 0.0, 7).unwrap().ok);
        let t26 = build(FamilySpec::Turan { r: 2, n: 6 });
        let (u, v) = t26.edges().next().unwrap();
        let g = t26.without_edge(u, v);
        let blocks = PartitionAssignment::new(&t26, 2, vec![0, 0, 0, 1, 1, 1])
            .unwrap()
            .blocks();
        assert!(is_eps_almost_complete(&g, &blocks, 1.0 / 6.0, 6).unwrap().ok);
        let strict = is_eps_almost_complete(&g, &blocks, 0.0, 6).unwrap();
        assert_eq!(strict.violators, vec![(u, 1), (v, 0)]);
        assert!(is_eps_almost_complete(&g, &blocks, -0.1, 6).is_err());
    }
}
