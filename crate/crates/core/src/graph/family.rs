use super::Graph;
use crate::{Error, Result};

/// Named graph families. Vertices of every constructed graph are numbered
/// deterministically as documented per variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `T_r(n)`: complete r-partite, part sizes `⌈n/r⌉` first, then `⌊n/r⌋`,
    /// parts occupying consecutive vertex ranges.
    Turan {
        r: usize,
        n: usize,
    },
    /// Complete multipartite graph with the given part sizes (consecutive ranges).
    CompleteMultipartite(Vec<usize>),
    Complete(usize),
    /// `C_n` with edges `i ~ i+1 (mod n)`.
    Cycle(usize),
    /// `W_n = K_1 ∨ C_{n-1}`; vertex 0 is the hub.
    Wheel(usize),
    /// `k` triangles on the common edge `{0, 1}`.
    Book(usize),
    /// `F_n`: vertex 0 is the centre, `(2i+1, 2i+2)` are the matched pairs;
    /// for even `n` the last vertex is a pendant on the centre.
    Friendship(usize),
    /// `S_{n,k} = K_k ∨ I_{n-k}`; the clique is `0..k`.
    Split {
        n: usize,
        k: usize,
    },
    /// `S_{n,k}^+`: `S_{n,k}` plus the edge `{k, k+1}` inside the independent set.
    SplitPlus {
        n: usize,
        k: usize,
    },
    /// `H(s)`: every vertex `v` becomes the independent set `v*s..(v+1)*s`.
    BlowUp(Graph, usize),
    Join(Graph, Graph),
    DisjointUnion(Graph, Graph),
    EmptyGraph(usize),
}

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

/// Part sizes of `T_r(n)`, larger parts first.
pub fn turan_parts(r: usize, n: usize) -> Vec<usize> {
    let (q, s) = (n / r, n % r);
    (0..r).map(|i| if i < s { q + 1 } else { q }).collect()
}

impl FamilySpec {
    pub fn construct(&self) -> Result<Graph> {
        match self {
            FamilySpec::Turan { r, n } => {
                if *r < 1 || r > n {
                    return Err(domain(format!("Turan requires 1 <= r <= n, got r={r}, n={n}")));
                }
                complete_multipartite(&turan_parts(*r, *n))
            }
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(domain("multipartite parts must be nonempty".into()));
                }
                complete_multipartite(parts)
            }
            FamilySpec::Complete(n) => Graph::from_fn(*n, |_, _| true),
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return Err(domain(format!("cycle requires n >= 3, got {n}")));
                }
                let n = *n;
                Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1))
            }
            FamilySpec::Wheel(n) => {
                if *n < 4 {
                    return Err(domain(format!("wheel requires n >= 4, got {n}")));
                }
                let rim = FamilySpec::Cycle(n - 1).construct()?;
                Graph::empty(1)?.join(&rim)
            }
            FamilySpec::Book(k) => {
                if *k < 1 {
                    return Err(domain("book requires k >= 1".into()));
                }
                Graph::from_fn(k + 2, |i, _| i < 2)
            }
            FamilySpec::Friendship(n) => {
                if *n < 3 {
                    return Err(domain(format!("friendship graph requires n >= 3, got {n}")));
                }
                let n = *n;
                let pairs_end = if n % 2 == 1 { n } else { n - 1 };
                Graph::from_fn(n, |i, j| i == 0 || (j < pairs_end && i % 2 == 1 && j == i + 1))
            }
            FamilySpec::Split { n, k } => {
                if k > n || *n < 1 {
                    return Err(domain(format!("split graph requires 0 <= k <= n, got n={n}, k={k}")));
                }
                let k = *k;
                Graph::from_fn(*n, |i, _| i < k)
            }
            FamilySpec::SplitPlus { n, k } => {
                if k + 2 > *n {
                    return Err(domain(format!(
                        "S+ needs at least two independent vertices, got n={n}, k={k}"
                    )));
                }
                let k = *k;
                Graph::from_fn(*n, |i, j| i < k || (i == k && j == k + 1))
            }
            FamilySpec::BlowUp(base, s) => {
                if *s < 1 {
                    return Err(domain("blow-up factor must be >= 1".into()));
                }
                let s = *s;
                Graph::from_fn(base.n() * s, |i, j| base.has_edge(i / s, j / s))
            }
            FamilySpec::Join(g, h) => g.join(h),
            FamilySpec::DisjointUnion(g, h) => g.disjoint_union(h),
            FamilySpec::EmptyGraph(n) => Graph::empty(*n),
        }
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let part_of: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(idx, &size)| std::iter::repeat_n(idx, size))
        .collect();
    Graph::from_fn(part_of.len(), |i, j| part_of[i] != part_of[j])
}
