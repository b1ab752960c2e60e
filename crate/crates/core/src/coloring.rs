//! Edge colorings and the verification engine.
//!
//! A shortest `u`-`v` path is conflict-free iff some color `c` occurs on it
//! exactly once, so the check runs one reachability pass over the
//! shortest-path DAG carrying two bitmasks per node: the colors `c` for which
//! the node is reachable with no `c`-edge, and those reachable with exactly
//! one. Bit `c - 1` stands for color `c`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, ShortestPathDag, UNREACHABLE};

/// Largest number of colors the engine handles.
pub const MAX_COLORS: usize = 32;

/// One color in `1..=k` per edge of a specific graph, indexed by [`EdgeId`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn new(k: usize, colors: Vec<u8>) -> Result<EdgeColoring> {
        if k == 0 || k > MAX_COLORS {
            return Err(Error::InvalidColoring(format!(
                "k = {k} is outside 1..={MAX_COLORS}"
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c as usize > k) {
            return Err(Error::InvalidColoring(format!(
                "color {c} is outside 1..={k}"
            )));
        }
        Ok(EdgeColoring { k, colors })
    }

    /// Every edge gets its own color.
    pub fn rainbow(m: usize) -> Result<EdgeColoring> {
        EdgeColoring::new(m.max(1), (1..=m).map(|c| c as u8).collect())
    }

    pub fn uniform(m: usize, color: u8) -> Result<EdgeColoring> {
        EdgeColoring::new(color as usize, vec![color; m])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> u8 {
        self.colors[e.index()]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        self.colors
            .iter()
            .fold(0u64, |acc, &c| acc | 1 << (c - 1))
            .count_ones() as usize
    }

    /// The same coloring with a larger palette.
    pub fn with_k(&self, k: usize) -> Result<EdgeColoring> {
        EdgeColoring::new(k, self.colors.clone())
    }

    fn check_for(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::InvalidColoring(format!(
                "{} colors for {} edges",
                self.colors.len(),
                g.m()
            )));
        }
        Ok(())
    }
}

/// Per-color multiplicities saturated at 2.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorCounts {
    once: u64,
    many: u64,
}

impl ColorCounts {
    pub fn with(self, color: u8) -> ColorCounts {
        let bit = 1u64 << (color - 1);
        if self.many & bit != 0 {
            self
        } else if self.once & bit != 0 {
            ColorCounts {
                once: self.once & !bit,
                many: self.many | bit,
            }
        } else {
            ColorCounts {
                once: self.once | bit,
                many: self.many,
            }
        }
    }

    /// 0, 1 or 2 (meaning two or more).
    pub fn count(self, color: u8) -> u8 {
        let bit = 1u64 << (color - 1);
        if self.many & bit != 0 {
            2
        } else if self.once & bit != 0 {
            1
        } else {
            0
        }
    }

    /// Colors seen exactly once, as a bitmask.
    pub fn singles(self) -> u64 {
        self.once
    }
}

/// Outcome of a verification query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub ok: bool,
    pub failing_pair: Option<(usize, usize)>,
    pub witness_path: Option<Vec<usize>>,
}

impl VerificationReport {
    fn pass(witness: Option<Vec<usize>>) -> VerificationReport {
        VerificationReport {
            ok: true,
            failing_pair: None,
            witness_path: witness,
        }
    }

    fn fail(u: usize, v: usize) -> VerificationReport {
        VerificationReport {
            ok: false,
            failing_pair: Some((u, v)),
            witness_path: None,
        }
    }
}

fn path_edges(g: &Graph, path: &[usize]) -> Result<Vec<EdgeId>> {
    path.windows(2)
        .map(|w| g.edge_id(w[0], w[1]).ok_or(Error::NotAPath))
        .collect()
}

/// Whether some color occurs exactly once along `path`.
pub fn is_conflict_free_path(g: &Graph, c: &EdgeColoring, path: &[usize]) -> Result<bool> {
    c.check_for(g)?;
    if path.len() < 2 {
        return Err(Error::NotAPath);
    }
    let counts = path_edges(g, path)?
        .into_iter()
        .fold(ColorCounts::default(), |acc, e| acc.with(c.color(e)));
    Ok(counts.singles() != 0)
}

/// Shortest-path DAG compiled for repeated checks under changing colorings.
#[derive(Debug, Clone)]
pub struct PairDag {
    u: usize,
    v: usize,
    /// For node `i > 0`, its incoming DAG edges as `(pred node, edge)`.
    pred: Vec<Vec<(u32, u32)>>,
    /// Vertex of each node, for witness paths.
    verts: Vec<usize>,
    edges: Vec<EdgeId>,
}

impl PairDag {
    pub fn from_dag(dag: &ShortestPathDag) -> PairDag {
        let len = dag.nodes().len();
        let pred = (0..len)
            .map(|i| {
                dag.predecessors(i)
                    .iter()
                    .map(|&(p, e)| (p as u32, e.index() as u32))
                    .collect()
            })
            .collect();
        PairDag {
            u: dag.source(),
            v: dag.target(),
            pred,
            verts: dag.nodes().to_vec(),
            edges: dag.edge_ids(),
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// Distinct DAG edges, sorted.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Per node, colors reachable with zero and with exactly one edge of
    /// that color.
    fn cf_masks(&self, colors: &[u8]) -> Vec<(u64, u64)> {
        let mut r = vec![(0u64, 0u64); self.pred.len()];
        r[0] = (u64::MAX, 0);
        for i in 1..self.pred.len() {
            let (mut z, mut o) = (0, 0);
            for &(p, e) in &self.pred[i] {
                let (pz, po) = r[p as usize];
                let b = 1u64 << (colors[e as usize] - 1);
                z |= pz & !b;
                o |= (po & !b) | (pz & b);
            }
            r[i] = (z, o);
        }
        r
    }

    /// Whether a conflict-free shortest path exists. Every DAG edge must be
    /// colored.
    pub fn conflict_free(&self, colors: &[u8]) -> bool {
        self.cf_masks(colors).last().unwrap().1 != 0
    }

    /// A conflict-free shortest path, if one exists.
    pub fn cf_witness(&self, colors: &[u8]) -> Option<Vec<usize>> {
        let r = self.cf_masks(colors);
        let last = r.len() - 1;
        let c = r[last].1.trailing_zeros();
        if c == 64 {
            return None;
        }
        let bit = 1u64 << c;
        let mut path = vec![self.verts[last]];
        let (mut node, mut once) = (last, true);
        while node != 0 {
            let (p, was_once) = self.pred[node]
                .iter()
                .find_map(|&(p, e)| {
                    let (pz, po) = r[p as usize];
                    let hit = 1u64 << (colors[e as usize] - 1) == bit;
                    match (once, hit) {
                        (true, true) if pz & bit != 0 => Some((p, false)),
                        (true, false) if po & bit != 0 => Some((p, true)),
                        (false, false) if pz & bit != 0 => Some((p, false)),
                        _ => None,
                    }
                })
                .expect("masks are consistent");
            node = p as usize;
            once = was_once;
            path.push(self.verts[node]);
        }
        path.reverse();
        Some(path)
    }

    /// Per node, the set of colors that can be the last edge of a properly
    /// colored path from the source. Bit 63 marks the source itself.
    fn pc_masks(&self, colors: &[u8]) -> Vec<u64> {
        let mut r = vec![0u64; self.pred.len()];
        r[0] = 1 << 63;
        for i in 1..self.pred.len() {
            let mut m = 0;
            for &(p, e) in &self.pred[i] {
                let b = 1u64 << (colors[e as usize] - 1);
                if r[p as usize] & !b != 0 {
                    m |= b;
                }
            }
            r[i] = m;
        }
        r
    }

    /// Whether a shortest path with no two consecutive edges of one color
    /// exists.
    pub fn properly_connected(&self, colors: &[u8]) -> bool {
        *self.pc_masks(colors).last().unwrap() != 0
    }

    pub fn pc_witness(&self, colors: &[u8]) -> Option<Vec<usize>> {
        let r = self.pc_masks(colors);
        let last = r.len() - 1;
        if r[last] == 0 {
            return None;
        }
        let mut path = vec![self.verts[last]];
        let mut node = last;
        let mut need = r[last] & r[last].wrapping_neg();
        while node != 0 {
            let (p, b) = self.pred[node]
                .iter()
                .find_map(|&(p, e)| {
                    let b = 1u64 << (colors[e as usize] - 1);
                    (b == need && r[p as usize] & !b != 0).then_some((p as usize, b))
                })
                .expect("masks are consistent");
            let rest = r[p] & !b;
            need = rest & rest.wrapping_neg();
            node = p;
            path.push(self.verts[node]);
        }
        path.reverse();
        Some(path)
    }
}

/// Compiled DAGs for every pair at distance at least 2, in `(u, v)` order.
/// Adjacent pairs always pass and are omitted.
pub fn pair_dags(g: &Graph) -> Result<Vec<PairDag>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = g.distance_matrix();
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if dist[u][v] >= 2 {
                let dag = ShortestPathDag::build(g, u, v, &dist[u], &dist[v])?;
                out.push(PairDag::from_dag(&dag));
            }
        }
    }
    Ok(out)
}

/// Decides whether `u` and `v` are joined by a conflict-free shortest path.
pub fn has_cf_shortest_path(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
) -> Result<VerificationReport> {
    c.check_for(g)?;
    let dag = g.shortest_path_dag(u, v)?;
    let pd = PairDag::from_dag(&dag);
    Ok(match pd.cf_witness(&c.colors) {
        Some(p) => VerificationReport::pass(Some(p)),
        None => VerificationReport::fail(u, v),
    })
}

fn all_pairs(
    g: &Graph,
    c: &EdgeColoring,
    ok: impl Fn(&PairDag, &[u8]) -> bool,
) -> Result<VerificationReport> {
    c.check_for(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for u in 0..g.n() {
        let du = g.bfs_distances(u);
        for v in u + 1..g.n() {
            if du[v] < 2 || du[v] == UNREACHABLE {
                continue;
            }
            let dv = g.bfs_distances(v);
            let pd = PairDag::from_dag(&ShortestPathDag::build(g, u, v, &du, &dv)?);
            if !ok(&pd, &c.colors) {
                return Ok(VerificationReport::fail(u, v));
            }
        }
    }
    Ok(VerificationReport::pass(None))
}

/// Whether every pair is joined by a conflict-free shortest path. The first
/// failing pair in `(u, v)` order is reported.
pub fn is_strong_cfc(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    all_pairs(g, c, PairDag::conflict_free)
}

/// Whether every pair is joined by a properly colored shortest path.
pub fn is_strong_pc(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport> {
    all_pairs(g, c, PairDag::properly_connected)
}

/// Conflict-free connectivity of a tree, where every path is a shortest one.
pub fn is_cfc_tree(t: &Graph, c: &EdgeColoring) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(is_strong_cfc(t, c)?.ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn col(k: usize, c: &[u8]) -> EdgeColoring {
        EdgeColoring::new(k, c.to_vec()).unwrap()
    }

    #[test]
    fn coloring_validation() {
        assert!(EdgeColoring::new(0, vec![]).is_err());
        assert!(EdgeColoring::new(2, vec![1, 3]).is_err());
        assert!(EdgeColoring::new(2, vec![0]).is_err());
        assert!(EdgeColoring::new(33, vec![1]).is_err());
        assert_eq!(col(5, &[1, 2, 1]).used_colors(), 2);
        let g = families::path(3).unwrap();
        assert!(matches!(
            is_strong_cfc(&g, &col(1, &[1])),
            Err(Error::InvalidColoring(_))
        ));
    }

    #[test]
    fn paths_and_multiplicity() {
        let g = families::path(4).unwrap();
        assert!(is_conflict_free_path(&g, &col(2, &[1, 2, 1]), &[0, 1, 2, 3]).unwrap());
        assert!(!is_conflict_free_path(&g, &col(2, &[1, 1, 2]), &[0, 1, 2]).unwrap());
        assert!(is_conflict_free_path(&g, &col(2, &[1, 1, 2]), &[2, 3]).unwrap());
        assert_eq!(
            is_conflict_free_path(&g, &col(2, &[1, 1, 2]), &[0, 2]),
            Err(Error::NotAPath)
        );
        let r = has_cf_shortest_path(&g, &col(1, &[1, 1, 1]), 0, 3).unwrap();
        assert!(!r.ok);
        assert_eq!(r.failing_pair, Some((0, 3)));
        let r = has_cf_shortest_path(&g, &col(2, &[1, 2, 1]), 0, 3).unwrap();
        assert_eq!(r.witness_path, Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn counts_saturate() {
        let c = [1u8, 1, 1, 2]
            .iter()
            .fold(ColorCounts::default(), |a, &c| a.with(c));
        assert_eq!(c.count(1), 2);
        assert_eq!(c.count(2), 1);
        assert_eq!(c.count(3), 0);
        assert_eq!(c.singles(), 0b10);
    }

    #[test]
    fn alternating_c6() {
        let g = families::cycle(6).unwrap();
        // edge order for cycle(6): (0,1),(0,5),(1,2),(2,3),(3,4),(4,5)
        let c = col(2, &[1, 2, 2, 1, 2, 1]);
        assert!(is_strong_cfc(&g, &c).unwrap().ok);
        assert!(is_strong_pc(&g, &c).unwrap().ok);
    }

    #[test]
    fn c6_plus_chord_has_no_two_coloring() {
        let g = families::cycle(6).unwrap().with_edge(1, 3).unwrap();
        for mask in 0u32..1 << g.m() {
            let c: Vec<u8> = (0..g.m()).map(|i| (mask >> i & 1) as u8 + 1).collect();
            assert!(!is_strong_cfc(&g, &col(2, &c)).unwrap().ok);
        }
    }

    #[test]
    fn strong_pc_examples() {
        let g = families::path(3).unwrap();
        assert!(!is_strong_pc(&g, &col(1, &[1, 1])).unwrap().ok);
        let p = families::prism(3).unwrap();
        let c: Vec<u8> = p
            .edges()
            .iter()
            .map(|&(a, b)| if (a < 3) == (b < 3) { 1 } else { 2 })
            .collect();
        assert!(is_strong_pc(&p, &col(2, &c)).unwrap().ok);
        let pd = PairDag::from_dag(&g.shortest_path_dag(0, 2).unwrap());
        assert_eq!(pd.pc_witness(&[1, 2]), Some(vec![0, 1, 2]));
    }

    #[test]
    fn trees() {
        let s = families::star(3).unwrap();
        assert!(is_cfc_tree(&s, &col(3, &[1, 2, 3])).unwrap());
        assert!(!is_cfc_tree(&s, &col(2, &[1, 2, 2])).unwrap());
        assert!(is_cfc_tree(&families::path(4).unwrap(), &col(2, &[1, 2, 1])).unwrap());
        assert_eq!(
            is_cfc_tree(&families::cycle(3).unwrap(), &col(1, &[1, 1, 1])),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn rainbow_always_passes() {
        for g in [
            families::prism(5).unwrap(),
            families::wheel(5).unwrap(),
            families::q_k(4).unwrap(),
        ] {
            assert!(is_strong_cfc(&g, &EdgeColoring::rainbow(g.m()).unwrap()).unwrap().ok);
        }
    }
}
