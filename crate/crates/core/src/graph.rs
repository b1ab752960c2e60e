//! Immutable simple undirected graphs and the structural queries the solver
//! and the theorem checks rely on.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Distance sentinel for unreachable vertices.
pub const UNREACHABLE: usize = usize::MAX;

/// Position of an edge in a graph's sorted edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A simple undirected graph on the vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically, so an
/// [`EdgeId`] is stable for a given edge set. Neighbor lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    nbrs: Vec<Vec<usize>>,
    // incident edge ids, parallel to `nbrs`
    inc: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range
    /// endpoints. Pairs may be given in either orientation.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push(if a < b { (a, b) } else { (b, a) });
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph::from_sorted(n, edges))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut nbrs = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            nbrs[u].push((v, i));
            nbrs[v].push((u, i));
        }
        let mut sorted_nbrs = Vec::with_capacity(n);
        for (v, list) in nbrs.iter_mut().enumerate() {
            list.sort_unstable();
            sorted_nbrs.push(list.iter().map(|&(w, _)| w).collect::<Vec<_>>());
            inc[v] = list.iter().map(|&(_, e)| EdgeId(e)).collect();
        }
        Graph {
            n,
            edges,
            nbrs: sorted_nbrs,
            inc,
        }
    }

    /// The graph with no edges on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    /// Edge ids incident to `v`, parallel to [`Graph::neighbors`].
    pub fn incident(&self, v: usize) -> &[EdgeId] {
        &self.inc[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.nbrs.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.nbrs[u]
            .binary_search(&v)
            .ok()
            .map(|i| self.inc[u][i])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Returns a copy with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut pairs = self.edges.clone();
        pairs.push((u, v));
        Graph::new(self.n, &pairs)
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort_unstable();
        Graph::from_sorted(self.n, edges)
    }

    /// The subgraph formed by the chosen edges, with vertices not touched by
    /// any chosen edge removed and the rest renumbered in increasing order.
    pub fn edge_subgraph(&self, chosen: &[EdgeId]) -> Graph {
        let mut keep = vec![false; self.n];
        for &e in chosen {
            let (u, v) = self.edge(e);
            keep[u] = true;
            keep[v] = true;
        }
        let mut index = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep[v] {
                index[v] = next;
                next += 1;
            }
        }
        let mut edges: Vec<(usize, usize)> = chosen
            .iter()
            .map(|&e| {
                let (u, v) = self.edge(e);
                (index[u], index[v])
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Graph::from_sorted(next, edges)
    }

    /// Breadth-first distances from `u`; unreachable vertices get
    /// [`UNREACHABLE`].
    pub fn bfs_distances(&self, u: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[u] = 0;
        queue.push_back(u);
        while let Some(a) = queue.pop_front() {
            for &b in &self.nbrs[a] {
                if dist[b] == UNREACHABLE {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        dist
    }

    /// All-pairs distances, one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|u| self.bfs_distances(u)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.nbrs.iter().all(|l| l.len() == d)
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.bfs_distances(u) {
                if d == UNREACHABLE {
                    return Err(Error::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// The DAG of all shortest `u`-`v` paths.
    pub fn shortest_path_dag(&self, u: usize, v: usize) -> Result<ShortestPathDag> {
        let from_u = self.bfs_distances(u);
        let from_v = self.bfs_distances(v);
        ShortestPathDag::build(self, u, v, &from_u, &from_v)
    }

    pub fn common_neighbors(&self, x: usize, z: usize) -> Vec<usize> {
        let (a, b) = (&self.nbrs[x], &self.nbrs[z]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Cut-edges, by the low-link method (iterative DFS). Works on
    /// disconnected graphs too. Sorted by edge id.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let n = self.n;
        let mut disc = vec![0usize; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut out = Vec::new();
        // (vertex, edge used to enter it, next neighbor index)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != 0 {
                continue;
            }
            time += 1;
            disc[root] = time;
            low[root] = time;
            stack.push((root, None, 0));
            while let Some(top) = stack.last_mut() {
                let (a, via, i) = *top;
                if i < self.nbrs[a].len() {
                    top.2 += 1;
                    let b = self.nbrs[a][i];
                    let e = self.inc[a][i];
                    if Some(e) == via {
                        continue;
                    }
                    if disc[b] == 0 {
                        time += 1;
                        disc[b] = time;
                        low[b] = time;
                        stack.push((b, Some(e), 0));
                    } else {
                        low[a] = low[a].min(disc[b]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(parent)) = (via, stack.last()) {
                        let p = parent.0;
                        low[p] = low[p].min(low[a]);
                        if low[a] > disc[p] {
                            out.push(e);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Edges lying on no cycle of length 3 or 4.
    pub fn forced_edges(&self) -> Vec<EdgeId> {
        self.edge_ids()
            .filter(|&e| !self.edge_in_short_cycle(e))
            .collect()
    }

    fn edge_in_short_cycle(&self, e: EdgeId) -> bool {
        let (u, v) = self.edge(e);
        // triangle: a common neighbor
        if !self.common_neighbors(u, v).is_empty() {
            return true;
        }
        // 4-cycle u-a-b-v with a ∉ {v}, b ∉ {u}, a ≠ b
        self.nbrs[u].iter().any(|&a| {
            a != v
                && self.nbrs[a]
                    .iter()
                    .any(|&b| b != u && b != v && self.has_edge(b, v))
        })
    }

    /// Whether `x-y-z` is a forced 2-path: `xz` is not an edge and `y` is the
    /// only common neighbor of `x` and `z`.
    pub fn is_forced_2path(&self, x: usize, y: usize, z: usize) -> Result<bool> {
        if x == z || !self.has_edge(x, y) || !self.has_edge(y, z) {
            return Err(Error::NotAPath);
        }
        Ok(!self.has_edge(x, z) && self.common_neighbors(x, z).len() == 1)
    }

    fn forced_2path_unchecked(&self, x: usize, z: usize) -> bool {
        x != z && !self.has_edge(x, z) && self.common_neighbors(x, z).len() == 1
    }

    /// Cycles of length at most `max_len` in which every two successive
    /// edges form a forced 2-path. Each cycle is reported once, starting at
    /// its smallest vertex; chordless cycles come first, then shorter ones.
    pub fn forced_cycles(&self, max_len: usize) -> Vec<ForcedCycle> {
        let mut out = Vec::new();
        let mut on_path = vec![false; self.n];
        for s in 0..self.n {
            let mut path = vec![s];
            on_path[s] = true;
            self.extend_forced(s, max_len, &mut path, &mut on_path, &mut out);
            on_path[s] = false;
        }
        out.sort_by(|a, b| {
            (a.has_chord, a.vertices.len(), &a.vertices).cmp(&(
                b.has_chord,
                b.vertices.len(),
                &b.vertices,
            ))
        });
        out
    }

    fn extend_forced(
        &self,
        s: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<ForcedCycle>,
    ) {
        let last = *path.last().unwrap();
        for &w in &self.nbrs[last] {
            if w == s && path.len() >= 3 {
                let k = path.len();
                // direction: report each cycle once
                if path[1] < path[k - 1]
                    && self.forced_2path_unchecked(path[k - 2], s)
                    && self.forced_2path_unchecked(last, path[1])
                {
                    out.push(ForcedCycle::new(self, path.clone()));
                }
                continue;
            }
            if w < s || on_path[w] || path.len() >= max_len {
                continue;
            }
            if path.len() >= 2 && !self.forced_2path_unchecked(path[path.len() - 2], w) {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            self.extend_forced(s, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }

    /// Maximal chains of degree-2 vertices, grouped by their endpoints.
    ///
    /// A chain starts at a vertex whose degree is not 2, walks through
    /// degree-2 vertices and stops at the next vertex whose degree is not 2.
    /// A direct edge between two such vertices is a chain of length 1.
    /// Chains returning to their start are dropped, as is every component
    /// that is a bare cycle (it has no endpoint at all), and so are pairs
    /// joined only by a direct edge.
    pub fn parallel_path_bundles(&self) -> Vec<PathBundle> {
        let mut chains: Vec<(usize, usize, usize)> = Vec::new();
        for a in 0..self.n {
            if self.degree(a) == 2 {
                continue;
            }
            for &first in &self.nbrs[a] {
                let (mut prev, mut cur, mut len) = (a, first, 1);
                while self.degree(cur) == 2 {
                    let next = if self.nbrs[cur][0] == prev {
                        self.nbrs[cur][1]
                    } else {
                        self.nbrs[cur][0]
                    };
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                if a < cur {
                    chains.push((a, cur, len));
                }
            }
        }
        chains.sort_unstable();
        let mut out: Vec<PathBundle> = Vec::new();
        for (u, v, len) in chains {
            match out.last_mut() {
                Some(b) if b.u == u && b.v == v => b.lengths.push(len),
                _ => out.push(PathBundle {
                    u,
                    v,
                    lengths: vec![len],
                }),
            }
        }
                out.retain(|b| b.lengths.iter().any(|&l| l > 1));
        out
    }

    /// Number of connected components of the graph with `w` deleted.
    pub fn cut_vertex_components(&self, w: usize) -> usize {
        let mut seen = vec![false; self.n];
        seen[w] = true;
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(a) = stack.pop() {
                for &b in &self.nbrs[a] {
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        count
    }
}

/// A cycle whose successive edge pairs are all forced 2-paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedCycle {
    pub vertices: Vec<usize>,
    pub has_chord: bool,
}

impl ForcedCycle {
    fn new(g: &Graph, vertices: Vec<usize>) -> ForcedCycle {
        let k = vertices.len();
        let mut has_chord = false;
        for i in 0..k {
            for j in i + 2..k {
                if !(i == 0 && j == k - 1) && g.has_edge(vertices[i], vertices[j]) {
                    has_chord = true;
                }
            }
        }
        ForcedCycle {
            vertices,
            has_chord,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.vertices.len().is_multiple_of(2)
    }
}

/// Internally disjoint paths between `u` and `v` whose internal vertices all
/// have degree 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathBundle {
    pub u: usize,
    pub v: usize,
    /// Path lengths in edges, ascending.
    pub lengths: Vec<usize>,
}

/// All shortest paths between two vertices, as a layered DAG.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPathDag {
    source: usize,
    target: usize,
    dist: usize,
    /// Vertices on some shortest path, in nondecreasing distance from the
    /// source. The source is first and the target last.
    nodes: Vec<usize>,
    levels: Vec<usize>,
    succ: Vec<Vec<(usize, EdgeId)>>,
    pred: Vec<Vec<(usize, EdgeId)>>,
}

impl ShortestPathDag {
    /// Builds the DAG from precomputed BFS distances out of both endpoints.
    pub fn build(
        g: &Graph,
        source: usize,
        target: usize,
        from_source: &[usize],
        from_target: &[usize],
    ) -> Result<ShortestPathDag> {
        if source == target {
            return Err(Error::InvalidParams(
                "shortest-path DAG needs distinct endpoints".into(),
            ));
        }
        let dist = from_source[target];
        if dist == UNREACHABLE {
            return Err(Error::Disconnected);
        }
        let mut on: Vec<(usize, usize)> = (0..g.n())
            .filter(|&w| {
                from_source[w] != UNREACHABLE
                    && from_target[w] != UNREACHABLE
                    && from_source[w] + from_target[w] == dist
            })
            .map(|w| (from_source[w], w))
            .collect();
        on.sort_unstable();
        let nodes: Vec<usize> = on.iter().map(|&(_, w)| w).collect();
        let levels: Vec<usize> = on.iter().map(|&(l, _)| l).collect();
        let mut index = vec![usize::MAX; g.n()];
        for (i, &w) in nodes.iter().enumerate() {
            index[w] = i;
        }
        let mut succ = vec![Vec::new(); nodes.len()];
        let mut pred = vec![Vec::new(); nodes.len()];
        for (i, &a) in nodes.iter().enumerate() {
            for (&b, &e) in g.neighbors(a).iter().zip(g.incident(a)) {
                let j = index[b];
                if j != usize::MAX && levels[j] == levels[i] + 1 {
                    succ[i].push((j, e));
                    pred[j].push((i, e));
                }
            }
        }
        Ok(ShortestPathDag {
            source,
            target,
            dist,
            nodes,
            levels,
            succ,
            pred,
        })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn dist(&self) -> usize {
        self.dist
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn level(&self, node: usize) -> usize {
        self.levels[node]
    }

    pub fn successors(&self, node: usize) -> &[(usize, EdgeId)] {
        &self.succ[node]
    }

    pub fn predecessors(&self, node: usize) -> &[(usize, EdgeId)] {
        &self.pred[node]
    }

    /// Distinct edges of the DAG, sorted.
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .succ
            .iter()
            .flat_map(|l| l.iter().map(|&(_, e)| e))
            .collect();
        out.sort_unstable();
        out
    }

    /// Number of shortest source-target paths.
    pub fn path_count(&self) -> u64 {
        let mut ways = vec![0u64; self.nodes.len()];
        ways[0] = 1;
        for i in 1..self.nodes.len() {
            ways[i] = self.pred[i].iter().map(|&(p, _)| ways[p]).sum();
        }
        *ways.last().unwrap()
    }

    /// Every shortest path as a vertex sequence. Exponential; meant for
    /// small graphs and tests.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = vec![0usize];
        self.collect_paths(&mut cur, &mut out);
        out
    }

    fn collect_paths(&self, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *cur.last().unwrap();
        if last == self.nodes.len() - 1 {
            out.push(cur.iter().map(|&i| self.nodes[i]).collect());
            return;
        }
        for &(j, _) in &self.succ[last] {
            cur.push(j);
            self.collect_paths(cur, out);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn build_normalizes_and_rejects() {
        let k3 = g(3, &[(1, 0), (2, 1), (0, 2)]);
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(k3.neighbors(1), &[0, 2]);
        let t = g(1, &[]);
        assert_eq!((t.n(), t.m()), (1, 0));
        assert_eq!(
            Graph::new(4, &[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(4, &[(1, 0), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn edge_ids_follow_sorted_order() {
        let c4 = families::cycle(4).unwrap();
        assert_eq!(c4.edge_id(3, 0), Some(EdgeId(1)));
        assert_eq!(c4.edge(EdgeId(1)), (0, 3));
        assert_eq!(c4.edge_id(0, 2), None);
        for v in 0..4 {
            for (&w, &e) in c4.neighbors(v).iter().zip(c4.incident(v)) {
                let (a, b) = c4.edge(e);
                assert!((a, b) == (v.min(w), v.max(w)));
            }
        }
    }

    #[test]
    fn bfs_examples() {
        let c6 = families::cycle(6).unwrap();
        assert_eq!(c6.bfs_distances(0), vec![0, 1, 2, 3, 2, 1]);
        let s4 = families::star(4).unwrap();
        assert_eq!(s4.bfs_distances(0), vec![0, 1, 1, 1, 1]);
        let p4 = families::path(4).unwrap();
        assert_eq!(p4.bfs_distances(0), vec![0, 1, 2, 3]);
        let two = Graph::empty(2);
        assert_eq!(two.bfs_distances(0), vec![0, UNREACHABLE]);
    }

    #[test]
    fn diameter_examples() {
        for n in 2..7 {
            assert_eq!(families::complete(n).unwrap().diameter(), Ok(1));
        }
        assert_eq!(families::cycle(6).unwrap().diameter(), Ok(3));
        for m in 3..10 {
            assert_eq!(families::gamma(m).unwrap().diameter(), Ok(3), "gamma({m})");
        }
        assert_eq!(Graph::empty(3).diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn dag_examples() {
        let c4 = families::cycle(4).unwrap();
        let dag = c4.shortest_path_dag(0, 2).unwrap();
        assert_eq!(dag.dist(), 2);
        assert_eq!(dag.path_count(), 2);
        let mut paths = dag.paths();
        paths.sort();
        assert_eq!(paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);

        let tree = families::q_k(4).unwrap();
        for u in 0..tree.n() {
            for v in 0..tree.n() {
                if u != v {
                    assert_eq!(tree.shortest_path_dag(u, v).unwrap().path_count(), 1);
                }
            }
        }

        // K4 minus the edge 2-3
        let k4e = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let dag = k4e.shortest_path_dag(2, 3).unwrap();
        assert_eq!((dag.dist(), dag.path_count()), (2, 2));
        assert_eq!(dag.edge_ids().len(), 4);

        assert_eq!(
            Graph::empty(2).shortest_path_dag(0, 1),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn bridges_examples() {
        let t = families::q_k(4).unwrap();
        assert_eq!(t.bridges().len(), t.m());
        for n in 3..9 {
            assert!(families::cycle(n).unwrap().bridges().is_empty());
        }
        let s = families::star_plus_matching(9, 2).unwrap();
        let b: Vec<(usize, usize)> = s.bridges().iter().map(|&e| s.edge(e)).collect();
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|&(u, _)| u == 0));
        // bridge between two triangles
        let bowtie_bar = g(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(bowtie_bar.bridges(), vec![bowtie_bar.edge_id(2, 3).unwrap()]);
    }

    #[test]
    fn forced_edge_examples() {
        for k in 3..7 {
            let f = families::f0(k).unwrap();
            let forced = f.forced_edges();
            let x = 2 * k;
            assert_eq!(forced, vec![f.edge_id(x, x + 1).unwrap()], "F0({k})");
        }
        // k = 2: x-s1-s2-y closes a 4-cycle through xy
        assert!(families::f0(2).unwrap().forced_edges().is_empty());
        assert!(families::prism(3).unwrap().forced_edges().is_empty());
        let p3 = families::path(3).unwrap();
        assert_eq!(p3.forced_edges().len(), 2);
    }

    #[test]
    fn forced_2path_examples() {
        let c5 = families::cycle(5).unwrap();
        assert_eq!(c5.is_forced_2path(0, 1, 2), Ok(true));
        let c4 = families::cycle(4).unwrap();
        assert_eq!(c4.is_forced_2path(0, 1, 2), Ok(false));
        let k3 = families::complete(3).unwrap();
        assert_eq!(k3.is_forced_2path(0, 1, 2), Ok(false));
        assert_eq!(c5.is_forced_2path(0, 2, 3), Err(Error::NotAPath));
    }

    #[test]
    fn forced_cycle_examples() {
        let f = families::f0(4).unwrap();
        let cycles = f.forced_cycles(2 * f.n());
        // x s1 s2 s3 s4 y and x t1 t2 t3 t4 y
        let (x, y) = (8, 9);
        let want = [vec![x, 0, 1, 2, 3, y], vec![x, 4, 5, 6, 7, y]];
        for w in &want {
            let mut sorted_w = w.clone();
            sorted_w.sort_unstable();
            assert!(
                cycles.iter().any(|c| {
                    let mut s = c.vertices.clone();
                    s.sort_unstable();
                    s == sorted_w && c.is_even()
                }),
                "missing forced cycle {w:?}"
            );
        }

        // The rims of C6□K2: s1 and s3 share only s2, so each rim is forced.
        let p6 = families::prism(6).unwrap();
        let cycles = p6.forced_cycles(12);
        let rims: Vec<_> = cycles.iter().filter(|c| c.len() == 6).collect();
        assert!(rims.iter().any(|c| c.vertices == vec![0, 1, 2, 3, 4, 5]));
        assert!(rims.iter().any(|c| c.vertices == vec![6, 7, 8, 9, 10, 11]));
        // the cube has no forced 2-path at all
        assert!(families::prism(4).unwrap().forced_cycles(8).is_empty());

        let c5 = families::cycle(5).unwrap();
        let cycles = c5.forced_cycles(10);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 5);
        assert!(!cycles[0].is_even());
        assert!(!cycles[0].has_chord);
    }

    #[test]
    fn bundle_examples() {
        let theta = g(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
        assert_eq!(
            theta.parallel_path_bundles(),
            vec![PathBundle {
                u: 0,
                v: 1,
                lengths: vec![2, 2, 2]
            }]
        );
        assert!(families::cycle(6).unwrap().parallel_path_bundles().is_empty());
        assert!(families::complete(4).unwrap().parallel_path_bundles().is_empty());
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(families::star(3).unwrap().cut_vertex_components(0), 3);
        assert_eq!(families::cycle(5).unwrap().cut_vertex_components(2), 1);
        // Q4: centers 0 and 2 glued through leaf 1
        let q4 = families::q_k(4).unwrap();
        assert_eq!(q4.cut_vertex_components(1), 2);
        assert_eq!(q4.cut_vertex_components(0), 3);
    }

    #[test]
    fn edge_subgraph_drops_isolated() {
        let p4 = families::path(4).unwrap();
        let sub = p4.edge_subgraph(&[EdgeId(2)]);
        assert_eq!((sub.n(), sub.edges()), (2, &[(0, 1)][..]));
    }
}
