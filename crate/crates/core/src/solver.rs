//! Exact scfc: bounds, the structural conditions forcing three colors,
//! maximum edge-disjoint triangle packing and a backtracking decision
//! procedure.
//!
//! The search colors edges in BFS discovery order. Edge `j` may only take a
//! color at most one above the largest color used before it, which removes
//! color permutations. A pair is checked the moment the last edge of its
//! shortest-path DAG receives a color; pairs completing at the same edge are
//! checked cheapest first. The two edges of a forced 2-path `xyz` are the
//! only shortest `x`-`z` path, so they must differ under either acceptance
//! predicate; that is applied as a filter before the DAG checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::ceil_log2;
use crate::coloring::{pair_dags, EdgeColoring, PairDag, MAX_COLORS};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// The four structural conditions each forcing at least three colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// Some vertex whose removal leaves at least three components.
    CutVertex,
    /// A path of at least four bridges.
    BridgePath,
    /// Two vertices at distance 2 joined by parallel paths of lengths 2 and 3.
    Parallel2And3,
    /// Two nonadjacent vertices joined by five parallel paths.
    Parallel5,
}

impl Condition {
    pub const ALL: [Condition; 4] = [
        Condition::CutVertex,
        Condition::BridgePath,
        Condition::Parallel2And3,
        Condition::Parallel5,
    ];

    pub fn holds(self, g: &Graph) -> bool {
        match self {
            Condition::CutVertex => condition_cutvertex(g),
            Condition::BridgePath => condition_bridgepath(g),
            Condition::Parallel2And3 => condition_parallel_2_3(g),
            Condition::Parallel5 => condition_parallel_5(g),
        }
    }
}

pub fn condition_cutvertex(g: &Graph) -> bool {
    (0..g.n()).any(|w| g.cut_vertex_components(w) >= 3)
}

/// A path of bridges is the only path between its ends, so it is a
/// shortest one; it suffices to find a component of the bridge forest with
/// diameter at least 4.
pub fn condition_bridgepath(g: &Graph) -> bool {
    let bridges: Vec<(usize, usize)> = g.bridges().into_iter().map(|e| g.edge(e)).collect();
    let forest = Graph::new(g.n(), &bridges).expect("bridges form a simple graph");
    (0..g.n()).any(|v| {
        forest
            .bfs_distances(v)
            .iter()
            .any(|&d| d != crate::graph::UNREACHABLE && d >= 4)
    })
}

/// Checked pair by pair: `u - a - v` and `u - b - c - v` with `u`, `v`
/// nonadjacent and `a`, `b`, `c` distinct vertices of degree 2.
pub fn condition_parallel_2_3(g: &Graph) -> bool {
    for a in (0..g.n()).filter(|&a| g.degree(a) == 2) {
        let [x, y] = [g.neighbors(a)[0], g.neighbors(a)[1]];
        if g.has_edge(x, y) {
            continue;
        }
        for (u, v) in [(x, y), (y, x)] {
            for &b in g.neighbors(u) {
                if b == a || g.degree(b) != 2 {
                    continue;
                }
                let c = if g.neighbors(b)[0] == u {
                    g.neighbors(b)[1]
                } else {
                    g.neighbors(b)[0]
                };
                if c != a && c != v && g.degree(c) == 2 && g.has_edge(c, v) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn condition_parallel_5(g: &Graph) -> bool {
    g.parallel_path_bundles().iter().any(|b| {
        !g.has_edge(b.u, b.v) && b.lengths.iter().filter(|&&l| l >= 2).count() >= 5
    })
}

/// Why a bound holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundReason {
    /// At least one edge needs a color.
    Nontrivial,
    NonComplete,
    Structural3(Condition),
    /// Trees: `ceil(log2(diam + 1))`.
    TreeDiameter,
    /// Trees: the maximum degree.
    TreeMaxDegree,
    /// Every edge its own color.
    TrivialRainbow,
    /// `m - 2t` for a maximum edge-disjoint triangle packing of size `t`.
    TrianglePacking,
    /// `m - |C| + ceil(log2 |C|)` for a cycle `C`.
    CycleBound,
    /// `m - d + ceil(log2(d + 1))` for a shortest path of length `d`.
    DiameterPath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bound {
    pub value: usize,
    pub reason: BoundReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundTrace {
    pub lower: Bound,
    pub upper: Bound,
}

fn raise(b: &mut Bound, value: usize, reason: BoundReason) {
    if value > b.value {
        *b = Bound { value, reason };
    }
}

fn lower(b: &mut Bound, value: usize, reason: BoundReason) {
    if value < b.value {
        *b = Bound { value, reason };
    }
}

/// Lower bound for a connected graph with at least one edge.
pub fn lower_bound(g: &Graph) -> Bound {
    let mut b = Bound {
        value: 1,
        reason: BoundReason::Nontrivial,
    };
    if !g.is_complete() {
        raise(&mut b, 2, BoundReason::NonComplete);
    }
    if let Some(c) = Condition::ALL.into_iter().find(|c| c.holds(g)) {
        raise(&mut b, 3, BoundReason::Structural3(c));
    }
    if g.is_tree() {
        let d = g.diameter().expect("trees are connected");
        raise(&mut b, ceil_log2(d + 1), BoundReason::TreeDiameter);
        raise(&mut b, g.max_degree(), BoundReason::TreeMaxDegree);
    }
    b
}

/// Upper bound for a connected graph with at least one edge.
pub fn upper_bound(g: &Graph) -> Bound {
    let m = g.m();
    let mut b = Bound {
        value: m,
        reason: BoundReason::TrivialRainbow,
    };
    let t = max_edge_disjoint_triangles(g).len();
    lower(&mut b, m - 2 * t, BoundReason::TrianglePacking);
    if let Some(c) = longest_cycle(g, CYCLE_BUDGET) {
        lower(&mut b, m - c.len() + ceil_log2(c.len()), BoundReason::CycleBound);
    }
    if let Ok(d) = g.diameter() {
        if d >= 1 {
            lower(&mut b, m - d + ceil_log2(d + 1), BoundReason::DiameterPath);
        }
    }
    b
}

pub fn bounds(g: &Graph) -> BoundTrace {
    BoundTrace {
        lower: lower_bound(g),
        upper: upper_bound(g),
    }
}

const CYCLE_BUDGET: u64 = 1 << 20;

/// The longest cycle found by exhaustive DFS within `budget` steps, as a
/// vertex sequence. `|C| - ceil(log2 |C|)` never decreases with `|C|`, so
/// the longest cycle gives the best cycle bound.
pub fn longest_cycle(g: &Graph, budget: u64) -> Option<Vec<usize>> {
    struct Dfs<'a> {
        g: &'a Graph,
        start: usize,
        on: Vec<bool>,
        path: Vec<usize>,
        best: Option<Vec<usize>>,
        steps: u64,
        budget: u64,
    }
    impl Dfs<'_> {
        fn go(&mut self, v: usize) {
            if self.steps >= self.budget || self.best.as_ref().is_some_and(|b| b.len() == self.g.n()) {
                return;
            }
            self.steps += 1;
            for &w in self.g.neighbors(v) {
                if w == self.start && self.path.len() >= 3 {
                    if self.best.as_ref().is_none_or(|b| b.len() < self.path.len()) {
                        self.best = Some(self.path.clone());
                    }
                } else if w > self.start && !self.on[w] {
                    self.on[w] = true;
                    self.path.push(w);
                    self.go(w);
                    self.path.pop();
                    self.on[w] = false;
                }
            }
        }
    }
    let mut dfs = Dfs {
        g,
        start: 0,
        on: vec![false; g.n()],
        path: Vec::new(),
        best: None,
        steps: 0,
        budget,
    };
    for s in 0..g.n() {
        dfs.start = s;
        dfs.on[s] = true;
        dfs.path = vec![s];
        dfs.go(s);
        dfs.on[s] = false;
    }
    dfs.best
}

/// Pairwise edge-disjoint triangles, as sorted vertex triples.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TrianglePacking {
    pub triangles: Vec<[usize; 3]>,
}

impl TrianglePacking {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }
}

/// Every triangle `a < b < c` of `g`, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        for &c in g.neighbors(b) {
            if c > b && g.has_edge(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// A maximum set of edge-disjoint triangles, by branch and bound: take the
/// first edge still covered by an available triangle and either put one of
/// its triangles in the packing or leave the edge uncovered.
pub fn max_edge_disjoint_triangles(g: &Graph) -> TrianglePacking {
    let tris = triangles(g);
    let tri_edges: Vec<[usize; 3]> = tris
        .iter()
        .map(|&[a, b, c]| {
            [(a, b), (b, c), (a, c)].map(|(x, y)| g.edge_id(x, y).unwrap().index())
        })
        .collect();
    let mut by_edge = vec![Vec::new(); g.m()];
    for (i, es) in tri_edges.iter().enumerate() {
        for &e in es {
            by_edge[e].push(i);
        }
    }

    struct Bb<'a> {
        tri_edges: &'a [[usize; 3]],
        by_edge: &'a [Vec<usize>],
        /// 0 free, 1 covered, 2 left uncovered.
        state: Vec<u8>,
        chosen: Vec<usize>,
        best: Vec<usize>,
    }
    impl Bb<'_> {
        fn available(&self, t: usize) -> bool {
            self.tri_edges[t].iter().all(|&e| self.state[e] == 0)
        }

        fn go(&mut self) {
            let mut first = None;
            let mut coverable = 0;
            for e in 0..self.state.len() {
                if self.state[e] == 0 && self.by_edge[e].iter().any(|&t| self.available(t)) {
                    coverable += 1;
                    first.get_or_insert(e);
                }
            }
            if self.chosen.len() + coverable / 3 <= self.best.len() {
                return;
            }
            let Some(e) = first else {
                self.best = self.chosen.clone();
                return;
            };
            for i in 0..self.by_edge[e].len() {
                let t = self.by_edge[e][i];
                if !self.available(t) {
                    continue;
                }
                for &x in &self.tri_edges[t] {
                    self.state[x] = 1;
                }
                self.chosen.push(t);
                self.go();
                self.chosen.pop();
                for &x in &self.tri_edges[t] {
                    self.state[x] = 0;
                }
            }
            self.state[e] = 2;
            self.go();
            self.state[e] = 0;
        }
    }
    let mut bb = Bb {
        tri_edges: &tri_edges,
        by_edge: &by_edge,
        state: vec![0; g.m()],
        chosen: Vec::new(),
        best: Vec::new(),
    };
    bb.go();
    let mut triangles: Vec<[usize; 3]> = bb.best.iter().map(|&t| tris[t]).collect();
    triangles.sort_unstable();
    TrianglePacking { triangles }
}

/// Result of a budgeted decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Colorable(EdgeColoring),
    NotColorable,
    /// The node budget ran out before the search finished.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecideOutcome {
    pub decision: Decision,
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    ConflictFree,
    Proper,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

struct Search<'a> {
    mode: Mode,
    k: u8,
    pairs: &'a [PairDag],
    order: Vec<EdgeId>,
    /// Pairs to check once position `j` is colored.
    checks: Vec<Vec<usize>>,
    /// Edges before position `j` that must differ from it.
    differ: Vec<Vec<EdgeId>>,
    colors: Vec<u8>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn pair_ok(&self, p: usize) -> bool {
        match self.mode {
            Mode::ConflictFree => self.pairs[p].conflict_free(&self.colors),
            Mode::Proper => self.pairs[p].properly_connected(&self.colors),
        }
    }

    fn go(&mut self, j: usize, top: u8) -> Step {
        if j == self.order.len() {
            return Step::Found;
        }
        let e = self.order[j].index();
        for c in 1..=self.k.min(top + 1) {
            if self.differ[j].iter().any(|f| self.colors[f.index()] == c) {
                continue;
            }
            if self.budget.is_some_and(|b| self.nodes >= b) {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            self.colors[e] = c;
            if (0..self.checks[j].len()).all(|i| self.pair_ok(self.checks[j][i])) {
                match self.go(j + 1, top.max(c)) {
                    Step::Dead => {}
                    done => return done,
                }
            }
        }
        self.colors[e] = 0;
        Step::Dead
    }
}

/// Edges in the order a BFS from vertex 0 first meets them.
fn bfs_edge_order(g: &Graph) -> Vec<EdgeId> {
    let mut seen_v = vec![false; g.n()];
    let mut seen_e = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    let mut queue = alloc::collections::VecDeque::new();
    for s in 0..g.n() {
        if seen_v[s] {
            continue;
        }
        seen_v[s] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident(v)) {
                if !seen_e[e.index()] {
                    seen_e[e.index()] = true;
                    order.push(e);
                }
                if !seen_v[w] {
                    seen_v[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn decide(g: &Graph, k: usize, mode: Mode, budget: Option<u64>) -> Result<DecideOutcome> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let k = k.min(g.m().max(1));
    if k > MAX_COLORS {
        return Err(Error::TooLarge(k));
    }
    let pairs = pair_dags(g)?;
    let order = bfs_edge_order(g);
    let mut pos = vec![0; g.m()];
    for (j, e) in order.iter().enumerate() {
        pos[e.index()] = j;
    }
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); g.m()];
    for (p, pd) in pairs.iter().enumerate() {
        let last = pd.edges().iter().map(|e| pos[e.index()]).max().unwrap();
        checks[last].push(p);
    }
    for list in &mut checks {
        list.sort_by_key(|&p| pairs[p].edges().len());
    }
    let mut differ: Vec<Vec<EdgeId>> = vec![Vec::new(); g.m()];
    for y in 0..g.n() {
        let (nb, inc) = (g.neighbors(y), g.incident(y));
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.is_forced_2path(nb[i], y, nb[j]).unwrap() {
                    let (a, b) = (inc[i], inc[j]);
                    let (early, late) = if pos[a.index()] < pos[b.index()] { (a, b) } else { (b, a) };
                    differ[pos[late.index()]].push(early);
                }
            }
        }
    }
    let mut s = Search {
        mode,
        k: k as u8,
        pairs: &pairs,
        order,
        checks,
        differ,
        colors: vec![0; g.m()],
        nodes: 0,
        budget,
    };
    let decision = match s.go(0, 0) {
        Step::Found => Decision::Colorable(EdgeColoring::new(k, s.colors.clone())?),
        Step::Dead => Decision::NotColorable,
        Step::OutOfBudget => Decision::Exhausted,
    };
    Ok(DecideOutcome {
        decision,
        nodes: s.nodes,
    })
}

/// A strong conflict-free connection coloring with at most `k` colors, if
/// one exists.
pub fn scfc_decide(g: &Graph, k: usize) -> Result<Option<EdgeColoring>> {
    Ok(match scfc_decide_budget(g, k, None)?.decision {
        Decision::Colorable(c) => Some(c),
        _ => None,
    })
}

pub fn scfc_decide_budget(g: &Graph, k: usize, budget: Option<u64>) -> Result<DecideOutcome> {
    decide(g, k, Mode::ConflictFree, budget)
}

/// A strong proper connection coloring with at most `k` colors, if one
/// exists.
pub fn spc_decide(g: &Graph, k: usize) -> Result<Option<EdgeColoring>> {
    Ok(match spc_decide_budget(g, k, None)?.decision {
        Decision::Colorable(c) => Some(c),
        _ => None,
    })
}

pub fn spc_decide_budget(g: &Graph, k: usize, budget: Option<u64>) -> Result<DecideOutcome> {
    decide(g, k, Mode::Proper, budget)
}

/// The exact value with a witness using exactly `value` colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScfcResult {
    pub value: usize,
    pub witness: EdgeColoring,
    pub trace: BoundTrace,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Solved(ScfcResult),
    /// The budget ran out; the value lies in `lower..=upper`.
    Exhausted {
        lower: usize,
        upper: usize,
        trace: BoundTrace,
        nodes: u64,
    },
}

/// scfc of a connected graph on at least two vertices.
pub fn scfc_exact(g: &Graph) -> Result<ScfcResult> {
    match scfc_exact_budget(g, None)? {
        ExactOutcome::Solved(r) => Ok(r),
        ExactOutcome::Exhausted { .. } => unreachable!("no budget was set"),
    }
}

/// Like [`scfc_exact`], with a node budget per decision call. The search
/// starts one below the lower bound, so the bound is confirmed by search
/// rather than trusted.
pub fn scfc_exact_budget(g: &Graph, budget: Option<u64>) -> Result<ExactOutcome> {
    if g.n() <= 1 {
        return Err(Error::Trivial);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let trace = bounds(g);
    let mut nodes = 0;
    let start = trace.lower.value.saturating_sub(1).max(1);
    for k in start..=trace.upper.value {
        let out = scfc_decide_budget(g, k, budget)?;
        nodes += out.nodes;
        match out.decision {
            Decision::Colorable(_) if k < trace.lower.value => {
                return Err(Error::VerificationFailed(alloc::format!(
                    "{k} colors suffice below the lower bound {:?}",
                    trace.lower
                )))
            }
            Decision::Colorable(witness) => {
                return Ok(ExactOutcome::Solved(ScfcResult {
                    value: k,
                    witness,
                    trace,
                    nodes,
                }))
            }
            Decision::NotColorable => {}
            Decision::Exhausted => {
                return Ok(ExactOutcome::Exhausted {
                    lower: k,
                    upper: trace.upper.value,
                    trace,
                    nodes,
                })
            }
        }
    }
    Err(Error::VerificationFailed(alloc::format!(
        "no coloring with {} colors although that is an upper bound",
        trace.upper.value
    )))
}
