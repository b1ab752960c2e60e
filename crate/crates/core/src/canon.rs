//! Exact canonical labeling.
//!
//! Individualization-refinement: the vertex partition is refined to an
//! equitable one, then the first non-singleton cell is split by trying every
//! vertex in it. Each leaf of the search tree is a labeling; the certificate
//! is the largest relabeled adjacency bit-string over all leaves. Automorphisms
//! discovered when two leaves give the same bit-string are used to skip
//! children that lie in a common orbit of the stabilizer of the current node.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Isomorphism certificate: equal iff the graphs are isomorphic.
///
/// Holds the vertex count and the upper-triangle adjacency bits of the
/// canonical relabeling, in graph6 column order, packed most significant bit
/// first so that the derived ordering is lexicographic on the bit string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(self.n, &edges).expect("certificate encodes a simple graph")
    }
}

struct Rows {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl Rows {
    fn new(g: &Graph) -> Rows {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![vec![0u64; words]; n];
        for &(u, v) in g.edges() {
            rows[u][v / 64] |= 1 << (v % 64);
            rows[v][u / 64] |= 1 << (u % 64);
        }
        Rows { words, rows }
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    fn count_into(&self, v: usize, set: &[u64]) -> u32 {
        self.rows[v]
            .iter()
            .zip(set)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn set_of(&self, cell: &[usize]) -> Vec<u64> {
        let mut s = vec![0u64; self.words];
        for &v in cell {
            s[v / 64] |= 1 << (v % 64);
        }
        s
    }
}

/// Splits cells until every cell is equitable with respect to every other.
/// Sub-cells are ordered by their neighbor count, so the result does not
/// depend on vertex names.
fn refine(rows: &Rows, cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = rows.set_of(&cells[s]);
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c]
                    .iter()
                    .map(|&v| (rows.count_into(v, &splitter), v))
                    .collect();
                if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        parts.push(Vec::new());
                        last = Some(k);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, parts);
                continue 'restart;
            }
        }
        return;
    }
}

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'a> {
    rows: &'a Rows,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let total = self.n * self.n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; total.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.rows.adjacent(lab[i], lab[j]) {
                    bits[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        bits
    }

    fn record_auto(&mut self, from: &[usize], to: &[usize]) {
        let mut perm = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            perm[a] = b;
        }
        if perm.iter().enumerate().any(|(i, &p)| i != p) && !self.autos.contains(&perm) {
            self.autos.push(perm);
        }
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let cert = self.certificate(&lab);
        if let Some(first) = &self.first {
            if first.cert == cert {
                let f = first.lab.clone();
                self.record_auto(&f, &lab);
            }
        } else {
            self.first = Some(Leaf {
                cert: cert.clone(),
                lab: lab.clone(),
            });
        }
        match &self.best {
            Some(best) if best.cert > cert => {}
            Some(best) if best.cert == cert => {
                let b = best.lab.clone();
                self.record_auto(&b, &lab);
            }
            _ => self.best = Some(Leaf { cert, lab }),
        }
    }

    /// Orbits of the group generated by the known automorphisms that fix
    /// every vertex in `fixed`.
    fn stabilizer_orbits(&self, fixed: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.autos {
            if fixed.iter().any(|&v| a[v] != v) {
                continue;
            }
            for (v, &w) in a.iter().enumerate() {
                let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
                if rv != rw {
                    parent[rv.max(rw)] = rv.min(rw);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn run(&mut self, mut cells: Vec<Vec<usize>>, fixed: &mut Vec<usize>) {
        refine(self.rows, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let lab = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(lab);
            return;
        };
        let mut children = cells[target].clone();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in children {
            if !explored.is_empty() && !self.autos.is_empty() {
                let orbit = self.stabilizer_orbits(fixed);
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            let mut next = cells.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&w| w != v).collect();
            next.splice(target..=target, [vec![v], rest]);
            fixed.push(v);
            self.run(next, fixed);
            fixed.pop();
            explored.push(v);
        }
    }
}

/// A canonical relabeling: vertex `v` of `g` becomes `perm[v]` in the
/// canonical representative.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let rows = Rows::new(g);
    let mut search = Search {
        rows: &rows,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    search.run(vec![(0..n).collect()], &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in best.lab.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let perm = canonical_labeling(g);
    let n = g.n();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64).max(1)];
    for &(u, v) in g.edges() {
        let (i, j) = {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        };
        let k = j * (j - 1) / 2 + i;
        bits[k / 64] |= 1 << (63 - k % 64);
    }
    CanonicalForm { n, bits }
}

/// `g` relabeled into its canonical representative.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.m() == h.m()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}
