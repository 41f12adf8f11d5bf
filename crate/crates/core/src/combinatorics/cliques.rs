use serde::Serialize;

use crate::bits;
use crate::graph::turan_parts;
use crate::{Error, Graph, Result};

/// Exact clique counts `k_1, k_2, ...` together with the clique number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueProfile {
    /// `counts[s - 1] = k_s(G)` for `s = 1..=max_s`.
    pub counts: Vec<u128>,
    pub omega: usize,
}

impl CliqueProfile {
    /// `k_s`; zero for sizes above the counted range or above `omega`.
    pub fn k(&self, s: usize) -> u128 {
        if s == 0 {
            return 1;
        }
        self.counts.get(s - 1).copied().unwrap_or(0)
    }
}

/// Counts cliques of every size up to `max_s` (clamped to `n`). Vertices are
/// processed in degeneracy order so each clique is generated once, from its
/// earliest vertex, by intersecting forward neighbourhoods.
pub fn clique_profile(g: &Graph, max_s: usize) -> CliqueProfile {
    let max_s = max_s.min(g.n());
    let omega = clique_number(g);
    let mut counts = vec![0u128; max_s];
    if max_s > 0 {
        let order = degeneracy_order(g);
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let h = g.relabel(&pos);
        let words = bits::words_for(h.n());
        let mut cand = vec![0u64; words];
        for v in 0..h.n() {
            counts[0] += 1;
            if max_s > 1 {
                for w in 0..words {
                    cand[w] = h.row(v)[w] & above_mask(v, w);
                }
                extend(&h, &cand, 2, max_s, &mut counts);
            }
        }
    }
    CliqueProfile { counts, omega }
}

fn above_mask(v: usize, word: usize) -> u64 {
    let lo = word * 64;
    if v < lo {
        u64::MAX
    } else if v + 1 >= lo + 64 {
        0
    } else {
        u64::MAX << (v + 1 - lo)
    }
}

fn extend(g: &Graph, cand: &[u64], size: usize, max_s: usize, counts: &mut [u128]) {
    let c = bits::count(cand) as u128;
    counts[size - 1] = counts[size - 1].saturating_add(c);
    if size == max_s || c < 2 {
        return;
    }
    let words = cand.len();
    let mut next = vec![0u64; words];
    for v in bits::ones(cand) {
        let mut any = false;
        for w in 0..words {
            next[w] = cand[w] & g.row(v)[w] & above_mask(v, w);
            any |= next[w] != 0;
        }
        if any {
            extend(g, &next, size + 1, max_s, counts);
        }
    }
}

/// Vertices in smallest-last (degeneracy) order.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}

/// A maximum clique, found by branch and bound with a greedy-colouring bound.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let all = bits::full(g.n());
    expand_max(g, &mut current, all, &mut best);
    best.sort_unstable();
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

fn expand_max(g: &Graph, current: &mut Vec<usize>, mut cand: Vec<u64>, best: &mut Vec<usize>) {
    // Greedy colouring of the candidates gives an upper bound per vertex.
    let (order, colors) = color_sort(g, &cand);
    for idx in (0..order.len()).rev() {
        if current.len() + colors[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let mut next = vec![0u64; cand.len()];
        bits::and_into(&mut next, &cand, g.row(v));
        if bits::is_empty(&next) {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_max(g, current, next, best);
        }
        current.pop();
        bits::clear(&mut cand, v);
    }
}

fn color_sort(g: &Graph, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = cand.to_vec();
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut color = 0;
    while !bits::is_empty(&uncolored) {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = bits::ones(&avail).next() {
            bits::clear(&mut avail, v);
            bits::clear(&mut uncolored, v);
            for (a, r) in avail.iter_mut().zip(g.row(v)) {
                *a &= !r;
            }
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

/// Whether `g` contains `K_s`.
pub fn has_clique(g: &Graph, s: usize) -> bool {
    s <= 1 || clique_number(g) >= s
}

/// `k_s(T_r(n))` as the elementary symmetric polynomial of the Turán part
/// sizes `⌊(n+i)/r⌋`, `i = 0..r`, i.e. the sum over `i_1 < ... < i_s`.
///
/// Returns 0 when `s > r` (no `K_s` fits in an r-partite graph).
pub fn turan_clique_closed_form(r: usize, n: usize, s: usize) -> Result<u128> {
    if r < 1 || r > n {
        return Err(Error::Domain(format!("need 1 <= r <= n, got r={r}, n={n}")));
    }
    if s == 0 {
        return Ok(1);
    }
    if s > r {
        return Ok(0);
    }
    let parts = turan_parts(r, n);
    // e[j] = elementary symmetric polynomial of degree j of the parts seen so far
    let mut e = vec![0u128; s + 1];
    e[0] = 1;
    for &p in &parts {
        for j in (1..=s).rev() {
            e[j] += e[j - 1] * p as u128;
        }
    }
    Ok(e[s])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FamilySpec;

    fn build(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    fn brute_force_counts(g: &Graph) -> Vec<u128> {
        let n = g.n();
        let mut counts = vec![0u128; n];
        for mask in 1u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let complete = vs
                .iter()
                .enumerate()
                .all(|(a, &u)| vs[a + 1..].iter().all(|&v| g.has_edge(u, v)));
            if complete {
                counts[vs.len() - 1] += 1;
            }
        }
        counts
    }

    #[test]
    fn spec_examples() {
        let k4 = build(FamilySpec::Complete(4));
        let p = clique_profile(&k4, 4);
        assert_eq!((p.k(3), p.k(4), p.omega), (4, 1, 4));
        let t36 = build(FamilySpec::Turan { r: 3, n: 6 });
        assert_eq!(clique_profile(&t36, 6).k(3), 8);
        let c5 = build(FamilySpec::Cycle(5));
        let p = clique_profile(&c5, 5);
        assert_eq!((p.k(3), p.omega), (0, 2));
        let e = clique_profile(&Graph::empty(4).unwrap(), 4);
        assert_eq!(e.counts, vec![4, 0, 0, 0]);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(turan_clique_closed_form(3, 6, 3).unwrap(), 8);
        assert_eq!(turan_clique_closed_form(2, 5, 2).unwrap(), 6);
        assert_eq!(turan_clique_closed_form(4, 4, 4).unwrap(), 1);
        assert_eq!(turan_clique_closed_form(2, 5, 3).unwrap(), 0);
        assert!(turan_clique_closed_form(6, 5, 2).is_err());
    }

    #[test]
    fn closed_form_matches_counts() {
        for r in 1..=5 {
            for n in r..=11 {
                let p = clique_profile(&build(FamilySpec::Turan { r, n }), n);
                for s in 1..=n {
                    assert_eq!(p.k(s), turan_clique_closed_form(r, n, s).unwrap(), "r={r} n={n} s={s}");
                }
            }
        }
    }

    #[test]
    fn matches_brute_force_on_pseudorandom_graphs() {
        let mut state = 0x9e3779b97f4a7c15u64;
        for n in 1..=11 {
            for _ in 0..20 {
                let g = Graph::from_fn(n, |_, _| {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    state % 3 != 0
                })
                .unwrap();
                let p = clique_profile(&g, n);
                let brute = brute_force_counts(&g);
                assert_eq!(p.counts, brute);
                let omega = brute.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
                assert_eq!(p.omega, omega);
            }
        }
    }

    #[test]
    fn wide_graph_cliques() {
        let g = build(FamilySpec::Split { n: 100, k: 3 });
        let p = clique_profile(&g, 5);
        assert_eq!(p.omega, 4);
        assert_eq!(p.k(4), 97);
        assert_eq!(p.k(2) as usize, g.m());
    }
}
