//! Structural predicates for equality characterisations.

use crate::combinatorics::{canonical_form, CanonicalForm};
use crate::graph::turan_parts;
use crate::{FamilySpec, Graph};

/// `T_r(n)` with `r` clamped to `n` (for `r ≥ n` this is `K_n`).
pub fn turan(r: usize, n: usize) -> Graph {
    FamilySpec::Turan { r: r.clamp(1, n), n }
        .construct()
        .expect("Turán parameters in range")
}

pub fn is_turan(g: &Graph, r: usize) -> bool {
    g.multipartite_parts()
        .is_some_and(|p| p == turan_parts(r.clamp(1, g.n()), g.n()))
}

/// Graph with its isolated vertices removed; `None` if nothing remains.
pub fn without_isolated(g: &Graph) -> Option<Graph> {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    if keep.is_empty() {
        None
    } else {
        Some(g.induced(&keep).expect("nonempty vertex set"))
    }
}

/// Complete bipartite (ω = 2) or complete regular multipartite (ω ≥ 3),
/// possibly with isolated vertices. Edgeless graphs are excluded.
pub fn is_clique_bound_extremal(g: &Graph) -> bool {
    let Some(h) = without_isolated(g) else {
        return false;
    };
    match h.multipartite_parts() {
        Some(parts) if parts.len() == 2 => true,
        Some(parts) if parts.len() >= 3 => parts.iter().all(|&p| p == parts[0]),
        _ => false,
    }
}

/// Spanning complete bipartite graph `K_{a,b}`, `a + b = n`, `a, b ≥ 1`.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    g.multipartite_parts().is_some_and(|p| p.len() == 2)
}

/// Canonical forms of every spanning complete `r`-partite graph on `n`
/// vertices with nonempty parts.
pub fn complete_multipartite_forms(n: usize, r: usize) -> Vec<CanonicalForm> {
    fn parts(left: usize, slots: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            parts(left - p, slots - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    parts(n, r, n, &mut Vec::new(), &mut all);
    let mut forms: Vec<CanonicalForm> = all
        .into_iter()
        .map(|p| canonical_form(&FamilySpec::CompleteMultipartite(p).construct().expect("parts")))
        .collect();
    forms.sort();
    forms
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicates() {
        let c5 = FamilySpec::Cycle(5).construct().unwrap();
        assert!(!is_turan(&c5, 2));
        assert!(is_turan(&turan(3, 7), 3));
        assert!(is_turan(&turan(9, 4), 9));
        let star_plus = FamilySpec::DisjointUnion(
            FamilySpec::CompleteMultipartite(vec![1, 3]).construct().unwrap(),
            Graph::empty(2).unwrap(),
        )
        .construct()
        .unwrap();
        assert!(is_clique_bound_extremal(&star_plus));
        assert!(!is_complete_bipartite(&star_plus));
        let k221 = FamilySpec::CompleteMultipartite(vec![2, 2, 1]).construct().unwrap();
        assert!(!is_clique_bound_extremal(&k221));
        assert!(is_clique_bound_extremal(&FamilySpec::Complete(4).construct().unwrap()));
        assert!(!is_clique_bound_extremal(&Graph::empty(3).unwrap()));
        assert_eq!(complete_multipartite_forms(6, 2).len(), 3);
        assert_eq!(complete_multipartite_forms(7, 3).len(), 4);
    }
}
