use super::cliques::has_clique;
use crate::{Error, Graph, Result};

/// Whether `g` is `K_{r+1}`-saturated: `K_{r+1}`-free, and adding any
/// missing edge creates a `K_{r+1}`. A non-edge `uv` completes a `K_{r+1}`
/// exactly when the common neighbourhood of `u` and `v` holds a `K_{r-1}`.
pub fn is_saturated(g: &Graph, r: usize) -> Result<bool> {
    if r < 1 {
        return Err(Error::Domain("saturation needs r >= 1".into()));
    }
    if has_clique(g, r + 1) {
        return Err(Error::Domain(format!("graph already contains K_{}", r + 1)));
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let common: Vec<usize> = g.neighbors(u).filter(|&w| g.has_edge(v, w)).collect();
            if common.len() + 1 < r {
                return Ok(false);
            }
            let sub = if common.is_empty() {
                None
            } else {
                Some(g.induced(&common)?)
            };
            let completes = match sub {
                None => r <= 1,
                Some(h) => has_clique(&h, r - 1),
            };
            if !completes {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FamilySpec;

    #[test]
    fn spec_examples() {
        let c5 = FamilySpec::Cycle(5).construct().unwrap();
        assert!(is_saturated(&c5, 2).unwrap());
        let t26 = FamilySpec::Turan { r: 2, n: 6 }.construct().unwrap();
        assert!(is_saturated(&t26, 2).unwrap());
        assert!(!is_saturated(&Graph::empty(4).unwrap(), 2).unwrap());
        let k3 = FamilySpec::Complete(3).construct().unwrap();
        assert!(is_saturated(&k3, 2).is_err());
    }

    #[test]
    fn turan_graphs_are_saturated() {
        for r in 2..=4 {
            for n in r..=9 {
                let t = FamilySpec::Turan { r, n }.construct().unwrap();
                assert!(is_saturated(&t, r).unwrap());
                if t.m() > 0 {
                    let (u, v) = t.edges().next().unwrap();
                    // deleting a cross edge leaves a non-edge whose ends share no K_{r-1}
                    assert!(!is_saturated(&t.without_edge(u, v), r).unwrap());
                }
            }
        }
    }
}
