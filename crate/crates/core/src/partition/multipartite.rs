use crate::{Error, Graph, Result};

/// Largest order accepted by [`max_complete_multipartite_subgraph`].
pub const MAX_MULTIPARTITE_ORDER: usize = 12;

/// Disjoint nonempty independent sets `U_1..U_r`, pairwise completely
/// joined, with the largest total size. Empty when `g` has no `K_r`.
pub fn max_complete_multipartite_subgraph(g: &Graph, r: usize) -> Result<Vec<Vec<usize>>> {
    if r < 1 {
        return Err(Error::Domain("need at least one block".into()));
    }
    if g.n() > MAX_MULTIPARTITE_ORDER {
        return Err(Error::Capacity(format!(
            "complete multipartite subgraph search limited to n <= {MAX_MULTIPARTITE_ORDER}, got {}",
            g.n()
        )));
    }
    if r > g.n() {
        return Ok(Vec::new());
    }
    let mut search = Search {
        rows: (0..g.n()).map(|v| g.row_mask(v)).collect(),
        r,
        blocks: vec![0; r],
        best: 0,
        best_blocks: None,
    };
    search.dfs(0, 0, 0);
    Ok(search
        .best_blocks
        .map(|blocks| {
            blocks
                .iter()
                .map(|&m| (0..g.n()).filter(|&v| m >> v & 1 == 1).collect())
                .collect()
        })
        .unwrap_or_default())
}

struct Search {
    rows: Vec<u64>,
    r: usize,
    blocks: Vec<u64>,
    best: usize,
    best_blocks: Option<Vec<u64>>,
}

impl Search {
    fn dfs(&mut self, v: usize, opened: usize, chosen: usize) {
        let n = self.rows.len();
        if chosen + (n - v) <= self.best {
            return;
        }
        if v == n {
            if opened == self.r {
                self.best = chosen;
                self.best_blocks = Some(self.blocks.clone());
            }
            return;
        }
        for b in 0..(opened + 1).min(self.r) {
            let fits = (0..opened.max(b + 1)).all(|c| {
                let inside = self.rows[v] & self.blocks[c];
                if c == b {
                    inside == 0
                } else {
                    inside == self.blocks[c]
                }
            });
            if fits {
                self.blocks[b] |= 1 << v;
                self.dfs(v + 1, opened.max(b + 1), chosen + 1);
                self.blocks[b] &= !(1 << v);
            }
        }
        self.dfs(v + 1, opened, chosen);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FamilySpec;

    fn size(blocks: &[Vec<usize>]) -> usize {
        blocks.iter().map(Vec::len).sum()
    }

    #[test]
    fn spec_examples() {
        let t26 = FamilySpec::Turan { r: 2, n: 6 }.construct().unwrap();
        assert_eq!(size(&max_complete_multipartite_subgraph(&t26, 2).unwrap()), 6);
        let c5 = FamilySpec::Cycle(5).construct().unwrap();
        let blocks = max_complete_multipartite_subgraph(&c5, 2).unwrap();
        assert_eq!(size(&blocks), 3);
        let k4 = FamilySpec::Complete(4).construct().unwrap();
        assert_eq!(size(&max_complete_multipartite_subgraph(&k4, 2).unwrap()), 2);
        assert!(max_complete_multipartite_subgraph(&c5, 3).unwrap().is_empty());
        let big = FamilySpec::Cycle(13).construct().unwrap();
        assert!(max_complete_multipartite_subgraph(&big, 2).is_err());
    }

    #[test]
    fn blocks_are_independent_and_joined() {
        let g = FamilySpec::Wheel(9).construct().unwrap();
        let blocks = max_complete_multipartite_subgraph(&g, 3).unwrap();
        // hub plus a three-vertex path on the rim
        assert_eq!(size(&blocks), 4);
        for (i, a) in blocks.iter().enumerate() {
            for (j, b) in blocks.iter().enumerate() {
                for &u in a {
                    for &v in b {
                        if u != v {
                            assert_eq!(g.has_edge(u, v), i != j);
                        }
                    }
                }
            }
        }
    }
}
