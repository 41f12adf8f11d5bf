//! Branch and bound over block assignments in first-use order (vertex 0 in
//! block 0, a new block only ever opened as the next index), which removes
//! the `r!` relabellings of each partition.

use rayon::prelude::*;

use crate::Graph;

struct Ctx {
    rows: Vec<u64>,
    n: usize,
    r: usize,
    balanced: bool,
    /// Balanced block sizes are `q` or `q + 1`, with `s` blocks of `q + 1`.
    q: usize,
    s: usize,
}

#[derive(Clone)]
struct State {
    block_of: Vec<usize>,
    masks: Vec<u64>,
    sizes: Vec<usize>,
    opened: usize,
    cost: usize,
}

impl Ctx {
    fn can_place(&self, st: &State, b: usize, placed: usize) -> bool {
        if !self.balanced {
            return true;
        }
        let size = st.sizes[b] + 1;
        let cap = self.q + usize::from(self.s > 0);
        if size > cap {
            return false;
        }
        let full =
            st.sizes.iter().filter(|&&z| z == self.q + 1).count() + usize::from(size == self.q + 1 && self.s > 0);
        if self.s > 0 && full > self.s {
            return false;
        }
        // every block must still be able to reach q
        let deficit: usize = (0..self.r)
            .map(|c| {
                let z = st.sizes[c] + usize::from(c == b);
                self.q.saturating_sub(z)
            })
            .sum();
        deficit < self.n - placed
    }

    fn place(&self, st: &mut State, v: usize, b: usize) -> usize {
        let added = (self.rows[v] & st.masks[b]).count_ones() as usize;
        st.block_of[v] = b;
        st.masks[b] |= 1 << v;
        st.sizes[b] += 1;
        st.cost += added;
        let prev_opened = st.opened;
        st.opened = st.opened.max(b + 1);
        prev_opened
    }

    fn unplace(&self, st: &mut State, v: usize, b: usize, prev_opened: usize, added: usize) {
        st.masks[b] &= !(1 << v);
        st.sizes[b] -= 1;
        st.cost -= added;
        st.opened = prev_opened;
    }

    fn choices(&self, st: &State) -> usize {
        (st.opened + 1).min(self.r)
    }

    fn dfs(&self, v: usize, st: &mut State, best: &mut usize, best_assign: &mut Option<Vec<usize>>) {
        if st.cost >= *best {
            return;
        }
        if v == self.n {
            *best = st.cost;
            *best_assign = Some(st.block_of.clone());
            return;
        }
        for b in 0..self.choices(st) {
            if !self.can_place(st, b, v) {
                continue;
            }
            let before = st.cost;
            let prev = self.place(st, v, b);
            let added = st.cost - before;
            self.dfs(v + 1, st, best, best_assign);
            self.unplace(st, v, b, prev, added);
        }
    }

    /// All canonical states after placing the first `depth` vertices.
    fn prefixes(&self, depth: usize) -> Vec<State> {
        let mut out = vec![State {
            block_of: vec![usize::MAX; self.n],
            masks: vec![0; self.r],
            sizes: vec![0; self.r],
            opened: 0,
            cost: 0,
        }];
        for v in 0..depth {
            let mut next = Vec::new();
            for st in out {
                for b in 0..self.choices(&st) {
                    if self.can_place(&st, b, v) {
                        let mut child = st.clone();
                        self.place(&mut child, v, b);
                        next.push(child);
                    }
                }
            }
            out = next;
        }
        out
    }
}

/// Minimum-internal-edge assignment; `upper` is a feasible assignment whose
/// cost seeds the bound and is returned when nothing strictly better exists.
/// Among optimal assignments the first in search order wins, independent of
/// how the search is sharded.
pub(super) fn branch_and_bound(g: &Graph, r: usize, balanced: bool, upper: &[usize]) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 64, "exact partition search works on single-word rows");
    let ctx = Ctx {
        rows: (0..n).map(|v| g.row_mask(v)).collect(),
        n,
        r,
        balanced,
        q: n / r,
        s: n % r,
    };
    let ub = g.edges().filter(|&(u, v)| upper[u] == upper[v]).count();
    let workers = rayon::current_num_threads().max(1) * 4;
    let mut depth = 0;
    while depth < n && r.pow(depth as u32) < workers {
        depth += 1;
    }
    let shards = ctx.prefixes(depth);
    let found: Vec<(usize, Option<Vec<usize>>)> = shards
        .into_par_iter()
        .map(|mut st| {
            let mut best = ub;
            let mut assign = None;
            ctx.dfs(depth, &mut st, &mut best, &mut assign);
            (best, assign)
        })
        .collect();
    let mut best = ub;
    let mut result = upper.to_vec();
    for (cost, assign) in found {
        if let Some(a) = assign {
            if cost < best {
                best = cost;
                result = a;
            }
        }
    }
    result
}
