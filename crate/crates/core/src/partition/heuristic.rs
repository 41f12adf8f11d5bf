//! Multi-start local search: best-block vertex moves, then pair swaps, until
//! neither improves.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graph::turan_parts;
use crate::Graph;

const STARTS: usize = 32;

pub(super) fn local_search(g: &Graph, r: usize, balanced: bool, seed: u64) -> Vec<usize> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let starts: Vec<Vec<usize>> = (0..STARTS)
        .map(|_| {
            if balanced {
                let mut slots: Vec<usize> = turan_parts(r, n)
                    .iter()
                    .enumerate()
                    .flat_map(|(b, &size)| std::iter::repeat_n(b, size))
                    .collect();
                slots.shuffle(&mut rng);
                slots
            } else {
                (0..n).map(|_| rng.gen_range(0..r)).collect()
            }
        })
        .collect();
    starts
        .into_par_iter()
        .enumerate()
        .map(|(i, start)| {
            let local = Local::new(g, r, balanced, start).improve();
            (local.cost, i, local.block)
        })
        .min_by_key(|(cost, i, _)| (*cost, *i))
        .map(|(_, _, block)| block)
        .expect("at least one start")
}

struct Local<'a> {
    g: &'a Graph,
    r: usize,
    balanced: bool,
    q: usize,
    block: Vec<usize>,
    sizes: Vec<usize>,
    /// `count[v * r + b]`: neighbours of `v` in block `b`.
    count: Vec<usize>,
    cost: usize,
}

impl<'a> Local<'a> {
    fn new(g: &'a Graph, r: usize, balanced: bool, block: Vec<usize>) -> Self {
        let n = g.n();
        let mut count = vec![0; n * r];
        let mut sizes = vec![0; r];
        for v in 0..n {
            sizes[block[v]] += 1;
            for u in g.neighbors(v) {
                count[v * r + block[u]] += 1;
            }
        }
        let cost = g.edges().filter(|&(u, v)| block[u] == block[v]).count();
        Local {
            g,
            r,
            balanced,
            q: n / r,
            block,
            sizes,
            count,
            cost,
        }
    }

    fn shift(&mut self, v: usize, to: usize) {
        let from = self.block[v];
        for u in self.g.neighbors(v) {
            self.count[u * self.r + from] -= 1;
            self.count[u * self.r + to] += 1;
        }
        self.sizes[from] -= 1;
        self.sizes[to] += 1;
        self.block[v] = to;
    }

    /// A move keeps balance only when it trades a large block for a small one.
    fn move_allowed(&self, from: usize, to: usize) -> bool {
        !self.balanced || (self.sizes[from] == self.q + 1 && self.sizes[to] == self.q)
    }

    fn try_moves(&mut self) -> bool {
        let mut improved = false;
        for v in 0..self.g.n() {
            let a = self.block[v];
            let here = self.count[v * self.r + a];
            let target = (0..self.r)
                .filter(|&b| b != a && self.move_allowed(a, b))
                .min_by_key(|&b| (self.count[v * self.r + b], b));
            if let Some(b) = target {
                let there = self.count[v * self.r + b];
                if there < here {
                    self.shift(v, b);
                    self.cost -= here - there;
                    improved = true;
                }
            }
        }
        improved
    }

    fn try_swaps(&mut self) -> bool {
        let n = self.g.n();
        let r = self.r;
        for u in 0..n {
            for v in (u + 1)..n {
                let (a, b) = (self.block[u], self.block[v]);
                if a == b {
                    continue;
                }
                let e = usize::from(self.g.has_edge(u, v));
                let before = self.count[u * r + a] + self.count[v * r + b];
                let after = self.count[u * r + b] + self.count[v * r + a] - 2 * e;
                if after < before {
                    self.shift(u, b);
                    self.shift(v, a);
                    self.cost -= before - after;
                    return true;
                }
            }
        }
        false
    }

    fn improve(mut self) -> Self {
        loop {
            if self.try_moves() {
                continue;
            }
            if !self.try_swaps() {
                return self;
            }
        }
    }
}
