//! Immutable simple undirected graphs stored as adjacency bitrows.

mod family;
mod graph6;

pub use family::{turan_parts, FamilySpec};
pub use graph6::{emit_graph6, parse_graph6, read_graph6_lines};

use std::fmt;

use crate::bits;
use crate::{Error, Result};

/// Largest order representable in graph6 (and therefore by this type).
pub const MAX_ORDER: usize = 4095;

/// A simple undirected graph on vertices `0..n`.
///
/// Row `i` is a bitset of the neighbours of `i`; the matrix is symmetric with
/// a zero diagonal and `m` caches the number of edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Domain(format!(
                "graph order must be in 1..={MAX_ORDER}, got {n}"
            )));
        }
        let words = bits::words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate.
    pub(crate) fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                if adjacent(i, j) {
                    g.insert(i, j);
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if !self.has_edge(u, v) {
            let w = self.words;
            bits::set(&mut self.rows[u * w..(u + 1) * w], v);
            bits::set(&mut self.rows[v * w..(v + 1) * w], u);
            self.m += 1;
        }
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            let w = self.words;
            bits::clear(&mut self.rows[u * w..(u + 1) * w], v);
            bits::clear(&mut self.rows[v * w..(v + 1) * w], u);
            self.m -= 1;
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighbourhood of `v` as a bitset of `ceil(n/64)` words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbourhood of `v` as a single word. Only valid for `n <= 64`.
    #[inline]
    pub fn row_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.has_edge(i, j)).expect("same order")
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.insert(u, v);
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove(u, v);
        g
    }

    /// The graph obtained by moving vertex `v` to position `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        g
    }

    /// Induced subgraph on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Same vertex set, keeping only the listed edges.
    pub fn spanning_subgraph(&self, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(self.n, edges).expect("edges come from a graph of the same order")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// `G ∨ H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n;
        Graph::from_fn(n1 + other.n, |i, j| match (i < n1, j < n1) {
            (true, true) => self.has_edge(i, j),
            (false, false) => other.has_edge(i - n1, j - n1),
            _ => true,
        })
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n;
        Graph::from_fn(n1 + other.n, |i, j| match (i < n1, j < n1) {
            (true, true) => self.has_edge(i, j),
            (false, false) => other.has_edge(i - n1, j - n1),
            _ => false,
        })
    }

    /// Part sizes if the graph is complete multipartite (non-adjacency is an
    /// equivalence relation), sorted descending. Edgeless graphs are one part.
    pub fn multipartite_parts(&self) -> Option<Vec<usize>> {
        let mut part_of = vec![usize::MAX; self.n];
        let mut sizes = Vec::new();
        for v in 0..self.n {
            if part_of[v] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let mut size = 0;
            for u in v..self.n {
                if u == v || !self.has_edge(u, v) {
                    if part_of[u] != usize::MAX {
                        return None;
                    }
                    part_of[u] = id;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if (part_of[u] == part_of[v]) == self.has_edge(u, v) {
                    return None;
                }
            }
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(sizes)
    }

    /// Adjacency matrix as dense row-major `f64`.
    pub fn adjacency_dense(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", emit_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_bookkeeping() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(g.min_degree(), 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.complement().m(), 3);
        assert!(g.is_connected());
        assert_eq!(g.without_edge(1, 2).components().len(), 2);
    }

    #[test]
    fn rejects_loops_and_bad_orders() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn multipartite_detection() {
        let k222 = Graph::from_fn(6, |i, j| i / 2 != j / 2).unwrap();
        assert_eq!(k222.multipartite_parts(), Some(vec![2, 2, 2]));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.multipartite_parts(), Some(vec![2, 1]));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.multipartite_parts(), None);
        assert_eq!(Graph::empty(3).unwrap().multipartite_parts(), Some(vec![3]));
    }

    #[test]
    fn wide_rows() {
        let g = Graph::from_edges(130, &[(0, 129), (64, 65)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.m(), 2);
    }
}
