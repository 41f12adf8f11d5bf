//! Canonical labelling by equitable refinement plus an exhaustive
//! individualisation search. Every leaf of the search tree is visited (up to
//! pruning of twin vertices, whose transposition is an automorphism), so the
//! lexicographically largest leaf certificate is an isomorphism invariant.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::graph::emit_graph6;
use crate::Graph;

/// Leaves visited before the search stops and returns an uncertified form.
pub const DEFAULT_LEAF_BUDGET: u64 = 5_000_000;

/// Isomorphism-invariant encoding: the graph6 text of the canonical
/// relabelling. Equality of certified forms decides isomorphism.
#[derive(Debug, Clone, Eq, Serialize)]
pub struct CanonicalForm {
    pub bytes: Vec<u8>,
    /// False when the leaf budget ran out; the bytes are then only a
    /// refinement-based guess.
    pub certified: bool,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.bytes == other.bytes
    }
}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bytes.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bytes.cmp(&other.bytes)
    }
}

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.bytes).expect("graph6 is ASCII")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (h, certified) = canonical_graph(g);
    CanonicalForm {
        bytes: emit_graph6(&h).into_bytes(),
        certified,
    }
}

/// The canonical relabelling of `g` and whether it is certified.
pub fn canonical_graph(g: &Graph) -> (Graph, bool) {
    let (labels, certified) = canonical_labeling(g, DEFAULT_LEAF_BUDGET);
    (g.relabel(&labels), certified)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}

/// `labels[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph, leaf_budget: u64) -> (Vec<usize>, bool) {
    let n = g.n();
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut search = Search {
        g,
        best: None,
        leaves: 0,
        budget: leaf_budget.max(1),
        exhausted: false,
    };
    search.visit(cells);
    let (_, order) = search.best.expect("at least one leaf");
    let mut labels = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labels[v] = pos;
    }
    (labels, !search.exhausted)
}

/// Splits cells by neighbour counts into other cells until equitable. Pieces
/// are ordered by count, so the result depends only on the input cell order.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for s in 0..cells.len() {
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let splitter = &cells[s];
                let mut keyed: Vec<(usize, usize)> = cells[c]
                    .iter()
                    .map(|&v| (splitter.iter().filter(|&&w| g.has_edge(v, w)).count(), v))
                    .collect();
                let first = keyed[0].0;
                if keyed.iter().all(|&(k, _)| k == first) {
                    continue;
                }
                keyed.sort_unstable();
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        pieces.push(Vec::new());
                        last = k;
                    }
                    pieces.last_mut().expect("piece").push(v);
                }
                cells.splice(c..=c, pieces);
                continue 'outer;
            }
        }
        return;
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.n()).all(|w| w == u || w == v || g.has_edge(u, w) == g.has_edge(v, w))
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    leaves: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn visit(&mut self, cells: Vec<Vec<usize>>) {
        if self.leaves >= self.budget {
            self.exhausted = true;
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        let mut members = cells[t].clone();
        members.sort_unstable();
        for &v in &members {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = members.iter().copied().filter(|&w| w != v).collect();
            next.splice(t..=t, [vec![v], rest]);
            refine(self.g, &mut next);
            self.visit(next);
            if self.exhausted {
                return;
            }
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        self.leaves += 1;
        let n = order.len();
        let words = n.div_ceil(64);
        let mut cert = vec![0u64; n * words];
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    // most significant bit = lowest label, so lexicographic
                    // comparison of words follows label order
                    cert[i * words + j / 64] |= 1u64 << (63 - j % 64);
                }
            }
        }
        let better = match &self.best {
            None => true,
            Some((b, _)) => cert > *b,
        };
        if better {
            self.best = Some((cert, order));
        }
    }
}
