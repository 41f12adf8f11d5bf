use serde::Serialize;

use super::cliques::clique_number;
use crate::{Error, Graph, Result};

/// Largest order accepted by the exact chromatic routines.
pub const MAX_CHROMATIC_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticInfo {
    pub chi: usize,
    /// Edges `e` with `χ(F − e) < χ(F)`, each as `(u, v)` with `u < v`.
    pub critical_edges: Vec<(usize, usize)>,
    pub is_color_critical: bool,
}

pub fn chromatic_info(f: &Graph) -> Result<ChromaticInfo> {
    let chi = chromatic_number(f)?;
    let critical_edges: Vec<(usize, usize)> = f
        .edges()
        .filter(|&(u, v)| is_colorable(&f.without_edge(u, v), chi - 1))
        .collect();
    Ok(ChromaticInfo {
        chi,
        is_color_critical: !critical_edges.is_empty(),
        critical_edges,
    })
}

/// Exact chromatic number: starts from the clique lower bound and tests
/// colourability upward until the greedy upper bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > MAX_CHROMATIC_ORDER {
        return Err(Error::Capacity(format!(
            "exact chromatic number limited to n <= {MAX_CHROMATIC_ORDER}, got {}",
            g.n()
        )));
    }
    let lower = clique_number(g).max(1);
    let upper = greedy_colors(g);
    for k in lower..upper {
        if is_colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn greedy_colors(g: &Graph) -> usize {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for &v in &order {
        let mut c = 0;
        while g.neighbors(v).any(|u| color[u] == c) {
            c += 1;
        }
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Whether `g` admits a proper colouring with `k` colours (`n <= 64`).
pub fn is_colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    assert!(n <= 64, "is_colorable works on single-word rows");
    let rows: Vec<u64> = (0..n).map(|v| g.row_mask(v)).collect();
    // class[c] = vertices with colour c
    let mut class = vec![0u64; k];
    let mut colored = 0u64;
    dsatur(&rows, n, k, &mut class, &mut colored, 0)
}

/// Backtracking on the most constrained vertex; a new colour is only opened
/// as the next unused index, which removes colour permutations.
fn dsatur(rows: &[u64], n: usize, k: usize, class: &mut [u64], colored: &mut u64, opened: usize) -> bool {
    if colored.count_ones() as usize == n {
        return true;
    }
    let mut best = usize::MAX;
    let mut best_sat = 0;
    let mut best_deg = 0;
    for v in 0..n {
        if *colored >> v & 1 == 1 {
            continue;
        }
        let sat = class[..opened].iter().filter(|&&c| c & rows[v] != 0).count();
        let deg = (rows[v] & !*colored).count_ones();
        if best == usize::MAX || sat > best_sat || (sat == best_sat && deg > best_deg) {
            best = v;
            best_sat = sat;
            best_deg = deg;
        }
    }
    let v = best;
    let limit = (opened + 1).min(k);
    for c in 0..limit {
        if class[c] & rows[v] != 0 {
            continue;
        }
        class[c] |= 1 << v;
        *colored |= 1 << v;
        if dsatur(rows, n, k, class, colored, opened.max(c + 1)) {
            return true;
        }
        class[c] &= !(1 << v);
        *colored &= !(1 << v);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FamilySpec;

    fn build(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        (1..=n)
            .find(|&k| {
                let total = k.pow(n as u32);
                (0..total).any(|mut code| {
                    let mut col = vec![0; n];
                    for c in col.iter_mut() {
                        *c = code % k;
                        code /= k;
                    }
                    g.edges().all(|(u, v)| col[u] != col[v])
                })
            })
            .unwrap()
    }

    #[test]
    fn spec_examples() {
        let c5 = chromatic_info(&build(FamilySpec::Cycle(5))).unwrap();
        assert_eq!(c5.chi, 3);
        assert!(c5.is_color_critical);
        assert_eq!(c5.critical_edges.len(), 5);
        let w6 = chromatic_info(&build(FamilySpec::Wheel(6))).unwrap();
        assert_eq!(w6.chi, 4);
        assert!(w6.is_color_critical);
        let w7 = chromatic_info(&build(FamilySpec::Wheel(7))).unwrap();
        assert_eq!(w7.chi, 3);
        assert!(!w7.is_color_critical);
    }

    #[test]
    fn complete_graphs_and_books() {
        for r in 1..=7 {
            let info = chromatic_info(&build(FamilySpec::Complete(r + 1))).unwrap();
            assert_eq!(info.chi, r + 1);
            assert_eq!(info.critical_edges.len(), r * (r + 1) / 2);
        }
        for k in 1..=5 {
            let info = chromatic_info(&build(FamilySpec::Book(k))).unwrap();
            assert_eq!(info.chi, 3);
            assert!(info.is_color_critical);
        }
    }

    #[test]
    fn matches_brute_force() {
        let mut state = 12345u64;
        for n in 1..=7 {
            for _ in 0..15 {
                let g = Graph::from_fn(n, |_, _| {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    state >> 62 != 0
                })
                .unwrap();
                assert_eq!(chromatic_number(&g).unwrap(), brute_chi(&g), "{g}");
            }
        }
    }

    #[test]
    fn order_limit() {
        let g = build(FamilySpec::Cycle(21));
        assert!(matches!(chromatic_number(&g), Err(Error::Capacity(_))));
    }
}
