//! Isomorphism classes of small graphs, generated by adding one vertex at a
//! time to every class on one vertex fewer and deduplicating canonically.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::canon::{canonical_form, canonical_graph, CanonicalForm};
use super::subgraph::{contains_subgraph, Containment};
use crate::graph::read_graph6_lines;
use crate::{Error, Graph, Result};

/// Largest order generated internally; larger orders need a corpus file.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Number of isomorphism classes of graphs on `n` vertices, `n = 0..=8`.
pub const CLASS_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

static CATALOG: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_ORDER + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION_ORDER + 1];

/// One canonical representative per isomorphism class on `n` vertices,
/// ordered by edge count then canonical graph6. Cached per process.
pub fn all_graphs(n: usize) -> Result<&'static [Graph]> {
    check_order(n)?;
    Ok(CATALOG[n].get_or_init(|| generate(n, &|_| true)))
}

/// Classes on `n` vertices that satisfy `filter`.
pub fn enumerate_graphs(n: usize, filter: impl Fn(&Graph) -> bool + Sync) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.par_iter().filter(|g| filter(g)).cloned().collect())
}

/// Classes on `n` vertices containing no copy of `forbidden`. Freeness is
/// hereditary, so only free classes are extended at each step.
pub fn enumerate_free(n: usize, forbidden: &Graph) -> Result<Vec<Graph>> {
    check_order(n)?;
    let free = |g: &Graph| -> bool {
        match contains_subgraph(g, forbidden) {
            Ok(Containment::Free) => true,
            Ok(Containment::Found(_)) => false,
            // patterns over the order limit or budget exhaustion cannot be
            // settled; on graphs this small neither happens.
            Ok(Containment::Indeterminate { .. }) | Err(_) => {
                panic!("containment undecided for {g} against {forbidden}")
            }
        }
    };
    Ok(generate(n, &free))
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("graphs need at least one vertex".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Capacity(format!(
            "internal enumeration limited to n <= {MAX_ENUMERATION_ORDER}; supply a graph6 corpus for n = {n}"
        )));
    }
    Ok(())
}

/// Classes satisfying a hereditary predicate (closed under vertex deletion).
fn generate(n: usize, keep: &(dyn Fn(&Graph) -> bool + Sync)) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::empty(1).expect("order 1")];
    level.retain(|g| keep(g));
    for k in 2..=n {
        let found: Vec<(CanonicalForm, Graph)> = level
            .par_iter()
            .flat_map_iter(|parent| {
                let parent = parent.clone();
                (0u64..(1 << (k - 1))).filter_map(move |mask| {
                    let g = Graph::from_fn(k, |i, j| {
                        if j == k - 1 {
                            mask >> i & 1 == 1
                        } else {
                            parent.has_edge(i, j)
                        }
                    })
                    .expect("order in range");
                    if !keep(&g) {
                        return None;
                    }
                    let (canon, certified) = canonical_graph(&g);
                    debug_assert!(certified);
                    Some((canonical_form(&canon), canon))
                })
            })
            .collect();
        let unique: BTreeMap<CanonicalForm, Graph> = found.into_iter().collect();
        level = sort_classes(unique.into_values().collect());
    }
    level
}

fn sort_classes(mut graphs: Vec<Graph>) -> Vec<Graph> {
    graphs.sort_by_cached_key(|g| (g.m(), crate::graph::emit_graph6(g)));
    graphs
}

/// Reads a newline-delimited graph6 corpus, keeps graphs of order `n`
/// passing `filter`, and drops isomorphic duplicates (first occurrence wins,
/// returned in canonical form). Uncertified canonical forms are never merged.
pub fn enumerate_corpus(path: &Path, n: usize, filter: impl Fn(&Graph) -> bool + Sync) -> Result<Vec<Graph>> {
    let file = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let graphs = read_graph6_lines(std::io::BufReader::new(file))?;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in graphs.into_iter().filter(|g| g.n() == n) {
        if !filter(&g) {
            continue;
        }
        if g.n() <= 64 {
            let (canon, certified) = canonical_graph(&g);
            if certified {
                if seen.insert(crate::graph::emit_graph6(&canon)) {
                    out.push(canon);
                }
                continue;
            }
        }
        out.push(g);
    }
    Ok(out)
}
