use serde::Serialize;

use crate::bits;
use crate::{Error, Graph, Result};

/// Largest pattern accepted by [`contains_subgraph`].
pub const MAX_PATTERN_ORDER: usize = 12;

/// Default number of search nodes before giving up.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// Outcome of a (not necessarily induced) subgraph search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Containment {
    /// `embedding[u]` is the host vertex for pattern vertex `u`.
    Found(Vec<usize>),
    /// Exhaustive search found no copy.
    Free,
    /// The node budget ran out before the search finished.
    Indeterminate { nodes: u64 },
}

impl Containment {
    pub fn is_found(&self) -> bool {
        matches!(self, Containment::Found(_))
    }

    pub fn is_free(&self) -> bool {
        matches!(self, Containment::Free)
    }
}

/// Searches for an injective map `φ` with `φ(u)φ(v) ∈ E(g)` for every edge
/// `uv` of `pattern`.
pub fn contains_subgraph(g: &Graph, pattern: &Graph) -> Result<Containment> {
    contains_subgraph_with_budget(g, pattern, DEFAULT_NODE_BUDGET)
}

pub fn contains_subgraph_with_budget(g: &Graph, pattern: &Graph, budget: u64) -> Result<Containment> {
    if pattern.n() > MAX_PATTERN_ORDER {
        return Err(Error::Capacity(format!(
            "pattern order {} exceeds {MAX_PATTERN_ORDER}",
            pattern.n()
        )));
    }
    if pattern.n() > g.n() || pattern.m() > g.m() {
        return Ok(Containment::Free);
    }
    let order = match_order(pattern);
    // earlier[i]: pattern neighbours of order[i] that are matched before it
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &u)| order[..i].iter().copied().filter(|&w| pattern.has_edge(u, w)).collect())
        .collect();
    let mut search = Search {
        g,
        pattern,
        order: &order,
        earlier: &earlier,
        host_deg: g.degrees(),
        map: vec![usize::MAX; pattern.n()],
        used: vec![0u64; bits::words_for(g.n())],
        nodes: 0,
        budget,
    };
    match search.descend(0) {
        Some(true) => Ok(Containment::Found(search.map)),
        Some(false) => Ok(Containment::Free),
        None => Ok(Containment::Indeterminate { nodes: search.nodes }),
    }
}

/// Pattern vertices ordered so that each one (after the first of its
/// component) has a previously placed neighbour, highest degree first.
fn match_order(p: &Graph) -> Vec<usize> {
    let n = p.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let pick = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = order.iter().filter(|&&w| p.has_edge(v, w)).count();
                (back, p.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[pick] = true;
        order.push(pick);
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    earlier: &'a [Vec<usize>],
    host_deg: Vec<usize>,
    map: Vec<usize>,
    used: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(found)` when the subtree was fully decided, `None` on budget exhaustion.
    fn descend(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let u = self.order[depth];
        let need = self.pattern.degree(u);
        let mut cand = bits::full(self.g.n());
        for &w in &self.earlier[depth] {
            let row = self.g.row(self.map[w]);
            for (c, r) in cand.iter_mut().zip(row) {
                *c &= r;
            }
        }
        for (c, x) in cand.iter_mut().zip(&self.used) {
            *c &= !x;
        }
        for v in bits::ones(&cand) {
            if self.host_deg[v] < need {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.map[u] = v;
            bits::set(&mut self.used, v);
            let found = self.descend(depth + 1);
            if found != Some(false) {
                return found;
            }
            bits::clear(&mut self.used, v);
            self.map[u] = usize::MAX;
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FamilySpec;

    fn build(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    fn assert_embedding(g: &Graph, f: &Graph, c: &Containment) {
        let Containment::Found(map) = c else {
            panic!("expected an embedding, got {c:?}")
        };
        let mut seen = map.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), f.n());
        for (u, v) in f.edges() {
            assert!(g.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn spec_examples() {
        let c5 = build(FamilySpec::Cycle(5));
        let k3 = build(FamilySpec::Complete(3));
        let c4 = build(FamilySpec::Cycle(4));
        assert_eq!(contains_subgraph(&c5, &k3).unwrap(), Containment::Free);
        let t26 = build(FamilySpec::Turan { r: 2, n: 6 });
        let found = contains_subgraph(&t26, &c4).unwrap();
        assert_embedding(&t26, &c4, &found);
        let f5 = build(FamilySpec::Friendship(5));
        assert_eq!(contains_subgraph(&f5, &c4).unwrap(), Containment::Free);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = build(FamilySpec::Turan { r: 2, n: 24 });
        let k3 = build(FamilySpec::Complete(3));
        let res = contains_subgraph_with_budget(&g, &k3, 10).unwrap();
        assert!(matches!(res, Containment::Indeterminate { .. }));
        let big = build(FamilySpec::Complete(13));
        assert!(matches!(contains_subgraph(&g, &big), Err(Error::Capacity(_))));
    }

    #[test]
    fn disconnected_patterns() {
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(contains_subgraph(&p3, &two_edges).unwrap(), Containment::Free);
        let c5 = build(FamilySpec::Cycle(5));
        assert_embedding(&c5, &two_edges, &contains_subgraph(&c5, &two_edges).unwrap());
    }

    #[test]
    fn split_graph_avoids_long_odd_cycles() {
        for k in 1..=3 {
            let s = build(FamilySpec::Split { n: 14, k });
            let odd = build(FamilySpec::Cycle(2 * k + 1));
            let fr = build(FamilySpec::Friendship(2 * k + 1));
            assert!(contains_subgraph(&s, &odd).unwrap().is_free(), "k={k}");
            assert!(contains_subgraph(&s, &fr).unwrap().is_free(), "k={k}");
            if k >= 2 {
                let even = build(FamilySpec::Cycle(2 * k));
                assert!(contains_subgraph(&s, &even).unwrap().is_found());
            }
        }
    }
}
