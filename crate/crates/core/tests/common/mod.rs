//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the shortest-path DAG, the canonical labeling or the solver.
#![allow(dead_code, clippy::needless_range_loop)]

use proptest::prelude::*;
use scfc_core::Graph;

pub const INF: usize = usize::MAX / 4;

pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn adjacency(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let mut a = vec![vec![None; g.n()]; g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        a[u][v] = Some(i);
        a[v][u] = Some(i);
    }
    a
}

/// Every simple `u`-`v` path with exactly `len` edges, as edge indices.
pub fn paths_of_length(g: &Graph, u: usize, v: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(
        a: &[Vec<Option<usize>>],
        at: usize,
        v: usize,
        left: usize,
        seen: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            if at == v {
                out.push(cur.clone());
            }
            return;
        }
        for w in 0..a.len() {
            if let Some(e) = a[at][w] {
                if !seen[w] {
                    seen[w] = true;
                    cur.push(e);
                    go(a, w, v, left - 1, seen, cur, out);
                    cur.pop();
                    seen[w] = false;
                }
            }
        }
    }
    let a = adjacency(g);
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    let mut out = Vec::new();
    go(&a, u, v, len, &mut seen, &mut Vec::new(), &mut out);
    out
}

/// All shortest paths of every unordered pair, as edge-index lists.
pub fn all_shortest_paths(g: &Graph) -> Vec<Vec<Vec<usize>>> {
    let d = floyd(g);
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            out.push(paths_of_length(g, u, v, d[u][v]));
        }
    }
    out
}

pub fn conflict_free(colors: &[u8], path: &[usize]) -> bool {
    let mut count = [0u8; 64];
    for &e in path {
        count[colors[e] as usize] += 1;
    }
    count.contains(&1)
}

pub fn proper(colors: &[u8], path: &[usize]) -> bool {
    path.windows(2).all(|w| colors[w[0]] != colors[w[1]])
}

pub fn strong_cfc(paths: &[Vec<Vec<usize>>], colors: &[u8]) -> bool {
    paths.iter().all(|ps| ps.iter().any(|p| conflict_free(colors, p)))
}

pub fn strong_pc(paths: &[Vec<Vec<usize>>], colors: &[u8]) -> bool {
    paths.iter().all(|ps| ps.iter().any(|p| proper(colors, p)))
}

/// Whether some coloring with colors `1..=k` satisfies `ok`. Plain
/// odometer over all `k^m` colorings, no symmetry breaking.
pub fn exists_coloring(m: usize, k: usize, ok: impl Fn(&[u8]) -> bool) -> bool {
    let mut colors = vec![1u8; m];
    loop {
        if ok(&colors) {
            return true;
        }
        let mut i = m;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if (colors[i] as usize) < k {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
        }
    }
}

/// scfc by trying every coloring for `k = 1, 2, ...`.
pub fn naive_scfc(g: &Graph) -> usize {
    let paths = all_shortest_paths(g);
    (1..=g.m())
        .find(|&k| exists_coloring(g.m(), k, |c| strong_cfc(&paths, c)))
        .expect("the rainbow coloring works")
}

pub fn naive_decide(g: &Graph, k: usize, spc: bool) -> bool {
    let paths = all_shortest_paths(g);
    exists_coloring(g.m(), k, |c| {
        if spc {
            strong_pc(&paths, c)
        } else {
            strong_cfc(&paths, c)
        }
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Adjacency bitmask of `g` under `perm`, upper triangle in a fixed order.
pub fn mask_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut mask = 0u64;
    for &(u, v) in g.edges() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        mask |= 1 << (b * (b - 1) / 2 + a);
        debug_assert!(b < n);
    }
    mask
}

/// Smallest adjacency mask over all relabelings.
pub fn brute_certificate(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| mask_under(g, p)).min().unwrap()
}

pub fn is_connected(g: &Graph) -> bool {
    let d = floyd(g);
    (0..g.n()).all(|v| d[0][v] < INF)
}

/// Random connected graphs: a random spanning tree plus random extra edges.
pub fn connected_graph(min_n: usize, max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (min_n..=max_n)
        .prop_flat_map(move |n| {
            (
                Just(n),
                proptest::collection::vec(any::<proptest::sample::Index>(), n - 1),
                proptest::collection::vec(proptest::bool::weighted(density), n * (n - 1) / 2),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, parents, extra, perm)| {
            let mut edges = Vec::new();
            for v in 1..n {
                edges.push((perm[parents[v - 1].index(v)], perm[v]));
            }
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if extra[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
            edges.sort_unstable();
            edges.dedup();
            Graph::new(n, &edges).unwrap()
        })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}
