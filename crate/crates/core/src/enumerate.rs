//! Isomorph-free generation of small graphs.
//!
//! Everything here is generate-then-deduplicate on [`CanonicalForm`]: a
//! level of graphs is extended by one vertex or one edge in every possible
//! way and the children are collected in an ordered set of certificates.
//! Outputs are canonical representatives sorted by edge count and then by
//! certificate, so runs are deterministic.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

pub const MAX_CONNECTED_ORDER: usize = 8;
pub const MAX_CUBIC_ORDER: usize = 12;
pub const MAX_SUBGRAPH_EDGES: usize = 14;

fn finish(set: BTreeSet<CanonicalForm>) -> Vec<Graph> {
    let mut out: Vec<Graph> = set.into_iter().map(|cf| cf.to_graph()).collect();
    // BTreeSet order within one edge count is certificate order already
    out.sort_by_key(|g| g.m());
    out
}

/// Trees on `n` vertices, up to isomorphism, built by attaching leaves.
/// `max_degree` restricts the vertex degrees.
fn trees_bounded(n: usize, max_degree: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(1)));
    for size in 1..n {
        let mut next = BTreeSet::new();
        for cf in &level {
            let t = cf.to_graph();
            let mut edges = t.edges().to_vec();
            for v in 0..size {
                if t.degree(v) < max_degree {
                    edges.push((v, size));
                    next.insert(canonical_form(&Graph::new(size + 1, &edges).unwrap()));
                    edges.pop();
                }
            }
        }
        level = next;
    }
    finish(level)
}

/// All trees on `n` vertices, one per isomorphism class.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    trees_bounded(n, usize::MAX)
}

/// All connected graphs on `n <= 8` vertices, one per isomorphism class.
///
/// Every connected graph with a cycle has an edge whose removal keeps it
/// connected, so adding edges to the trees level by level reaches all of
/// them.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CONNECTED_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut level: BTreeSet<CanonicalForm> =
        trees_bounded(n, usize::MAX).iter().map(canonical_form).collect();
    let mut all = level.clone();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for cf in &level {
            let g = cf.to_graph();
            for v in 1..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        next.insert(canonical_form(&g.with_edge(u, v).unwrap()));
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(finish(all))
}

/// Whether the missing degrees of a subcubic graph could still be filled by
/// new edges: each deficient vertex needs enough deficient non-neighbors.
fn completable(g: &Graph) -> bool {
    let short: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < 3).collect();
    short.iter().all(|&v| {
        let room = short.iter().filter(|&&w| w != v && !g.has_edge(v, w)).count();
        room >= 3 - g.degree(v)
    })
}

/// All connected cubic graphs on an even `n` with `4 <= n <= 12`.
///
/// Starts from the trees of maximum degree 3 (the spanning trees of cubic
/// graphs) and adds edges between vertices of degree below 3. Every step
/// only adds edges at the first vertex still below degree 3: in the target
/// graph that vertex has a missing edge whose other end is also short, so
/// no cubic graph is lost.
pub fn enumerate_cubic(n: usize) -> Result<Vec<Graph>> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n > MAX_CUBIC_ORDER {
        return Err(Error::TooLarge(n));
    }
    if n < 4 {
        return Err(Error::InvalidParams("cubic graphs need at least 4 vertices".into()));
    }
    let mut level: BTreeSet<CanonicalForm> = trees_bounded(n, 3)
        .iter()
        .filter(|t| completable(t))
        .map(canonical_form)
        .collect();
    for _ in n - 1..3 * n / 2 {
        let mut next = BTreeSet::new();
        for cf in &level {
            let g = cf.to_graph();
            let v = (0..n).find(|&v| g.degree(v) < 3).unwrap();
            for w in 0..n {
                if w != v && g.degree(w) < 3 && !g.has_edge(v, w) {
                    let h = g.with_edge(v, w).unwrap();
                    if completable(&h) {
                        next.insert(canonical_form(&h));
                    }
                }
            }
        }
        level = next;
    }
    Ok(finish(level))
}

/// Connected proper subgraphs of `g` (edge subsets other than the whole
/// edge set, isolated vertices dropped), one per isomorphism class.
pub fn enumerate_connected_subgraphs(g: &Graph) -> Result<Vec<Graph>> {
    let m = g.m();
    if m > MAX_SUBGRAPH_EDGES {
        return Err(Error::TooLarge(m));
    }
    let mut set = BTreeSet::new();
    let mut chosen = Vec::with_capacity(m);
    for mask in 1u32..(1 << m) - 1 {
        chosen.clear();
        chosen.extend((0..m).filter(|&i| mask >> i & 1 == 1).map(EdgeId));
        let h = g.edge_subgraph(&chosen);
        if h.is_connected() {
            set.insert(canonical_form(&h));
        }
    }
    Ok(finish(set))
}
