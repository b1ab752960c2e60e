//! Executable checks of the characterization results over bounded corpora.
//!
//! A check runs the solver over a corpus and compares each value with the
//! relation the result predicts. Results quantified over all graphs are
//! only ever verified up to the corpus bound, and the corpus label says so.
//! Any graph the solver could not finish within the node budget makes the
//! check `Partial`, never `Pass`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use scfc_core::coloring::{is_strong_cfc, pair_dags};
use scfc_core::enumerate::{enumerate_connected, enumerate_connected_subgraphs, enumerate_cubic};
use scfc_core::families;
use scfc_core::graph6::write_graph6;
use scfc_core::solver::{
    max_edge_disjoint_triangles, scfc_decide_budget, scfc_exact_budget, spc_decide_budget,
    Condition, Decision, ExactOutcome,
};
use scfc_core::{canonical_form, ceil_log2, is_isomorphic, CanonicalForm, EdgeColoring, Graph};
use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Partial,
}

impl Status {
    /// 0 for pass, 1 for fail, 2 for partial.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Partial => 2,
        }
    }

    /// The combined status of several checks: any failure wins, then any
    /// partial result.
    pub fn combine(all: impl IntoIterator<Item = Status>) -> Status {
        all.into_iter().fold(Status::Pass, |acc, s| match (acc, s) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Partial, _) | (_, Status::Partial) => Status::Partial,
            _ => Status::Pass,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub n: usize,
    pub m: usize,
    pub members: Vec<String>,
}

/// Report of one check. Counterexamples and unresolved graphs are graph6.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheck {
    pub id: String,
    pub corpus: String,
    pub status: Status,
    pub counterexamples: Vec<String>,
    pub unresolved: Vec<String>,
    pub census: Vec<CensusEntry>,
    pub notes: Vec<String>,
    pub runtime_ms: u128,
}

struct Builder {
    id: &'static str,
    corpus: String,
    started: Instant,
    counterexamples: Vec<String>,
    unresolved: Vec<String>,
    census: Vec<CensusEntry>,
    notes: Vec<String>,
}

impl Builder {
    fn new(id: &'static str, corpus: impl Into<String>) -> Builder {
        Builder {
            id,
            corpus: corpus.into(),
            started: Instant::now(),
            counterexamples: Vec::new(),
            unresolved: Vec::new(),
            census: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, g: &Graph, why: impl Into<String>) {
        let g6 = write_graph6(g);
        self.notes.push(format!("counterexample {g6}: {}", why.into()));
        self.counterexamples.push(g6);
    }

    fn unresolved(&mut self, g: &Graph) {
        self.unresolved.push(write_graph6(g));
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self) -> TheoremCheck {
        let status = if !self.counterexamples.is_empty() {
            Status::Fail
        } else if !self.unresolved.is_empty() {
            Status::Partial
        } else {
            Status::Pass
        };
        TheoremCheck {
            id: self.id.into(),
            corpus: self.corpus,
            status,
            counterexamples: self.counterexamples,
            unresolved: self.unresolved,
            census: self.census,
            notes: self.notes,
            runtime_ms: self.started.elapsed().as_millis(),
        }
    }
}

/// A graph with its scfc, or `None` when the budget ran out.
#[derive(Debug, Clone)]
pub struct Solved {
    pub graph: Graph,
    pub value: Option<usize>,
    pub nodes: u64,
}

/// A corpus with every member solved once, shared by several checks.
#[derive(Debug, Clone)]
pub struct SolvedCorpus {
    pub label: String,
    pub items: Vec<Solved>,
}

fn exact(g: &Graph, budget: Option<u64>) -> Result<(Option<usize>, u64)> {
    Ok(match scfc_exact_budget(g, budget)? {
        ExactOutcome::Solved(r) => (Some(r.value), r.nodes),
        ExactOutcome::Exhausted { nodes, .. } => (None, nodes),
    })
}

impl SolvedCorpus {
    /// Solves `graphs` in parallel; the order is kept.
    pub fn solve(label: impl Into<String>, graphs: Vec<Graph>, budget: Option<u64>) -> Result<SolvedCorpus> {
        let items = graphs
            .into_par_iter()
            .map(|graph| {
                let (value, nodes) = exact(&graph, budget)?;
                Ok(Solved { graph, value, nodes })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SolvedCorpus {
            label: label.into(),
            items,
        })
    }

    /// All connected graphs on `2..=max_n` vertices.
    pub fn connected(max_n: usize, budget: Option<u64>) -> Result<SolvedCorpus> {
        SolvedCorpus::solve(
            format!("connected graphs, 2 <= n <= {max_n}"),
            connected_graphs(max_n)?,
            budget,
        )
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// All connected graphs on `2..=max_n` vertices, by order.
pub fn connected_graphs(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.extend(enumerate_connected(n)?);
    }
    Ok(out)
}

/// All connected cubic graphs on `min_n..=max_n` vertices.
pub fn cubic_graphs(min_n: usize, max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in (min_n.max(4)..=max_n).filter(|n| n % 2 == 0) {
        out.extend(enumerate_cubic(n)?);
    }
    Ok(out)
}

/// Which offset below `m` a census collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CensusClass {
    #[serde(rename = "m-2")]
    MinusTwo,
    #[serde(rename = "m-3")]
    MinusThree,
}

impl CensusClass {
    pub fn offset(self) -> usize {
        match self {
            CensusClass::MinusTwo => 2,
            CensusClass::MinusThree => 3,
        }
    }

    pub fn parse(s: &str) -> Result<CensusClass> {
        match s {
            "m-2" => Ok(CensusClass::MinusTwo),
            "m-3" => Ok(CensusClass::MinusThree),
            _ => Err(Error::Format(format!("census class must be m-2 or m-3, got {s:?}"))),
        }
    }
}

/// Graphs with `scfc = m - offset`, grouped by order and size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCensus {
    pub class: CensusClass,
    pub entries: Vec<CensusEntry>,
    /// Graphs whose value is unknown, so membership is undecided.
    pub unresolved: Vec<String>,
}

impl FamilyCensus {
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.members.len()).sum()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        let g6 = write_graph6(&canonical_form(g).to_graph());
        self.entries.iter().any(|e| e.members.contains(&g6))
    }
}

pub fn family_census(corpus: &SolvedCorpus, class: CensusClass) -> FamilyCensus {
    let mut groups: BTreeMap<(usize, usize), BTreeSet<CanonicalForm>> = BTreeMap::new();
    let mut unresolved = Vec::new();
    for s in &corpus.items {
        match s.value {
            Some(v) if v + class.offset() == s.graph.m() => {
                groups
                    .entry((s.graph.n(), s.graph.m()))
                    .or_default()
                    .insert(canonical_form(&s.graph));
            }
            Some(_) => {}
            None => unresolved.push(write_graph6(&s.graph)),
        }
    }
    let entries = groups
        .into_iter()
        .map(|((n, m), set)| CensusEntry {
            n,
            m,
            members: set.iter().map(|cf| write_graph6(&cf.to_graph())).collect(),
        })
        .collect();
    FamilyCensus {
        class,
        entries,
        unresolved,
    }
}

/// Runs `check` on every solved member; unsolved members are unresolved.
fn each(b: &mut Builder, corpus: &SolvedCorpus, check: impl Fn(&Graph, usize) -> Option<String>) {
    for s in &corpus.items {
        match s.value {
            Some(v) => {
                if let Some(why) = check(&s.graph, v) {
                    b.fail(&s.graph, why);
                }
            }
            None => b.unresolved(&s.graph),
        }
    }
}

pub fn check_complete_iff_one(corpus: &SolvedCorpus) -> TheoremCheck {
    let mut b = Builder::new("complete-iff-one", &corpus.label);
    each(&mut b, corpus, |g, v| {
        (g.is_complete() != (v == 1)).then(|| format!("complete = {}, scfc = {v}", g.is_complete()))
    });
    b.finish()
}

pub fn check_star_iff_m(corpus: &SolvedCorpus) -> TheoremCheck {
    let mut b = Builder::new("star-iff-m", &corpus.label);
    each(&mut b, corpus, |g, v| {
        let star = is_isomorphic(g, &families::star(g.m()).unwrap());
        (star != (v == g.m())).then(|| format!("star = {star}, scfc = {v}, m = {}", g.m()))
    });
    b.finish()
}

/// Paths on 4 and 5 vertices and `Γ_m` are the graphs with `scfc = m - 1`.
pub fn is_m_minus_one_family(g: &Graph) -> bool {
    let m = g.m();
    is_isomorphic(g, &families::path(4).unwrap())
        || is_isomorphic(g, &families::path(5).unwrap())
        || (m >= 3 && is_isomorphic(g, &families::gamma(m).unwrap()))
}

pub fn check_m_minus_one(corpus: &SolvedCorpus) -> TheoremCheck {
    let mut b = Builder::new("m-minus-one", &corpus.label);
    each(&mut b, corpus, |g, v| {
        let named = is_m_minus_one_family(g);
        (named != (v + 1 == g.m())).then(|| format!("named = {named}, scfc = {v}, m = {}", g.m()))
    });
    b.finish()
}

fn census_check(id: &'static str, corpus: &SolvedCorpus, class: CensusClass) -> (Builder, FamilyCensus) {
    let mut b = Builder::new(id, &corpus.label);
    let census = family_census(corpus, class);
    b.unresolved = census.unresolved.clone();
    b.census = census.entries.clone();
    b.note(format!("{} members in the census", census.total()));
    (b, census)
}

/// The census `scfc = m - 2`. Among paths and cycles its members must be
/// exactly `C_3`, `C_4`, `C_5` and the path on 6 vertices; every other
/// member is reported.
pub fn check_census_m_minus_two(corpus: &SolvedCorpus) -> TheoremCheck {
    let (mut b, census) = census_check("census-m-minus-two", corpus, CensusClass::MinusTwo);
    let max_n = corpus.items.iter().map(|s| s.graph.n()).max().unwrap_or(0);
    let mut named: Vec<(String, Graph)> = Vec::new();
    for n in 2..=max_n {
        named.push((format!("path({n})"), families::path(n).unwrap()));
        if n >= 3 {
            named.push((format!("cycle({n})"), families::cycle(n).unwrap()));
        }
    }
    let expected = ["cycle(3)", "cycle(4)", "cycle(5)", "path(6)"];
    for (label, g) in &named {
        let want = expected.contains(&label.as_str());
        if census.contains(g) != want {
            b.fail(g, format!("{label}: in census = {}, expected {want}", !want));
        }
    }
    let found: Vec<&str> = named
        .iter()
        .filter(|(_, g)| census.contains(g))
        .map(|(l, _)| l.as_str())
        .collect();
    b.note(format!("paths and cycles in the census: {}", found.join(", ")));
    b.note(format!(
        "{} further members reported as recovered families",
        census.total() - found.len()
    ));
    b.finish()
}

pub fn check_census_m_minus_three(corpus: &SolvedCorpus) -> TheoremCheck {
    let (mut b, census) = census_check("census-m-minus-three", corpus, CensusClass::MinusThree);
    for e in &census.entries {
        if e.m < 4 {
            b.note(format!("n = {}, m = {}: below the m >= 4 range", e.n, e.m));
        }
    }
    b.finish()
}

/// `scfc <= m - 2t` with `t` the maximum number of edge-disjoint triangles,
/// with equality exactly for `S_{m,t}`.
pub fn check_triangle_packing(corpus: &SolvedCorpus) -> TheoremCheck {
    let mut b = Builder::new("triangle-packing-bound", &corpus.label);
    each(&mut b, corpus, |g, v| {
        let m = g.m();
        if m < 2 {
            return None;
        }
        let t = max_edge_disjoint_triangles(g).len();
        if v > m - 2 * t {
            return Some(format!("scfc = {v} > m - 2t = {}", m - 2 * t));
        }
        let smt = m >= 3 * t && is_isomorphic(g, &families::star_plus_matching(m, t).unwrap());
        (smt != (v == m - 2 * t)).then(|| format!("S_(m,t) = {smt}, scfc = {v}, m = {m}, t = {t}"))
    });
    b.finish()
}

/// Graphs meeting one of the four structural conditions have no
/// 2-coloring. Refuted by the search directly, without the lower bound
/// that relies on the same conditions.
pub fn check_three_color_conditions(graphs: &[Graph], label: &str, budget: Option<u64>) -> Result<TheoremCheck> {
    let mut b = Builder::new("three-color-conditions", label);
    let results = graphs
        .par_iter()
        .map(|g| {
            let held: Vec<Condition> = Condition::ALL.into_iter().filter(|c| c.holds(g)).collect();
            if held.is_empty() {
                return Ok((held, None));
            }
            Ok((held, Some(scfc_decide_budget(g, 2, budget)?.decision)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counts = [0usize; 4];
    for (g, (held, decision)) in graphs.iter().zip(results) {
        for c in &held {
            counts[*c as usize] += 1;
        }
        match decision {
            None | Some(Decision::NotColorable) => {}
            Some(Decision::Colorable(_)) => b.fail(g, format!("{held:?} hold but 2 colors suffice")),
            Some(Decision::Exhausted) => b.unresolved(g),
        }
    }
    b.note(format!(
        "graphs meeting each condition: cut vertex {}, bridge path {}, parallel 2+3 {}, parallel 5 {}",
        counts[0], counts[1], counts[2], counts[3]
    ));
    Ok(b.finish())
}

fn expect_value(b: &mut Builder, label: &str, g: &Graph, want: &[usize], budget: Option<u64>) -> Result<Option<usize>> {
    let (v, _) = exact(g, budget)?;
    match v {
        Some(v) if want.contains(&v) => {}
        Some(v) => b.fail(g, format!("{label}: scfc = {v}, expected one of {want:?}")),
        None => b.unresolved(g),
    }
    Ok(v)
}

/// `scfc(C_n)` is `ceil(log2 n) - 1` or `ceil(log2 n)`; the branch each
/// cycle attains is recorded.
pub fn check_cycles(max_n: usize, budget: Option<u64>) -> Result<TheoremCheck> {
    let mut b = Builder::new("cycles", format!("cycles, 3 <= n <= {max_n}"));
    for n in 3..=max_n {
        let top = ceil_log2(n);
        let g = families::cycle(n)?;
        if let Some(v) = expect_value(&mut b, &format!("cycle({n})"), &g, &[top - 1, top], budget)? {
            let branch = if v == top { "upper" } else { "lower" };
            b.note(format!("cycle({n}): scfc = {v}, {branch} branch"));
        }
    }
    Ok(b.finish())
}

pub fn check_paths_and_stars(max_path: usize, max_star: usize, budget: Option<u64>) -> Result<TheoremCheck> {
    let mut b = Builder::new(
        "paths-and-stars",
        format!("paths on 2..={max_path} vertices, stars with 1..={max_star} edges"),
    );
    for n in 2..=max_path {
        expect_value(&mut b, &format!("path({n})"), &families::path(n)?, &[ceil_log2(n)], budget)?;
    }
    for m in 1..=max_star {
        expect_value(&mut b, &format!("star({m})"), &families::star(m)?, &[m], budget)?;
    }
    Ok(b.finish())
}

pub fn check_wheels(max_n: usize, budget: Option<u64>) -> Result<TheoremCheck> {
    let mut b = Builder::new("wheels", format!("wheels, 3 <= n <= {max_n}"));
    for n in 3..=max_n {
        expect_value(&mut b, &format!("wheel({n})"), &families::wheel(n)?, &[n.div_ceil(3)], budget)?;
    }
    Ok(b.finish())
}

pub fn check_complete_bipartite(max_s: usize, max_t: usize, budget: Option<u64>) -> Result<TheoremCheck> {
    let mut b = Builder::new(
        "complete-bipartite",
        format!("K_(s,t), 1 <= s <= {max_s}, s <= t <= {max_t}"),
    );
    for s in 1..=max_s {
        for t in s..=max_t {
            let want = scfc_core::constructions::kst_colors(s, t);
            let g = families::complete_bipartite(s, t)?;
            expect_value(&mut b, &format!("K_({s},{t})"), &g, &[want], budget)?;
        }
    }
    Ok(b.finish())
}

/// `Q_k` needs `k` colors and every connected proper subgraph fewer. On
/// trees every path is a shortest path, so the solver value is the plain
/// conflict-free connection number.
pub fn check_qk_critical(max_k: usize, budget: Option<u64>) -> Result<TheoremCheck> {
    let mut b = Builder::new("qk-critical", format!("Q_k, 2 <= k <= {max_k}"));
    for k in 2..=max_k {
        let q = families::q_k(k)?;
        expect_value(&mut b, &format!("Q_{k}"), &q, &[k], budget)?;
        let subs = enumerate_connected_subgraphs(&q)?;
        let mut worst = 0;
        for h in &subs {
            let (v, _) = exact(h, budget)?;
            match v {
                Some(v) if v < k => worst = worst.max(v),
                Some(v) => b.fail(h, format!("proper subgraph of Q_{k} has cfc {v}")),
                None => b.unresolved(h),
            }
        }
        b.note(format!(
            "Q_{k}: {} connected proper subgraphs, largest cfc {worst}",
            subs.len()
        ));
    }
    Ok(b.finish())
}

fn two_colorable(g: &Graph, budget: Option<u64>) -> Result<Option<bool>> {
    Ok(match scfc_decide_budget(g, 2, budget)?.decision {
        Decision::Colorable(_) => Some(true),
        Decision::NotColorable => Some(false),
        Decision::Exhausted => None,
    })
}

/// Prisms, Möbius ladders and `F_0(k)`: which parameters allow two colors.
pub fn check_cubic_families(budget: Option<u64>) -> Result<TheoremCheck> {
    let mut b = Builder::new(
        "cubic-families",
        "prism(3..=8), mobius(3..=8), f0(2..=5)",
    );
    let mut cases: Vec<(String, Graph, bool)> = Vec::new();
    for k in 3..=8 {
        cases.push((format!("prism({k})"), families::prism(k)?, matches!(k, 3 | 4 | 6)));
        cases.push((format!("mobius({k})"), families::mobius(k)?, k <= 7));
    }
    for k in 2..=5 {
        cases.push((format!("f0({k})"), families::f0(k)?, matches!(k, 2 | 4)));
    }
    for (label, g, want) in &cases {
        match two_colorable(g, budget)? {
            Some(got) if got == *want => b.note(format!("{label}: scfc = 2 is {got}")),
            Some(got) => b.fail(g, format!("{label}: scfc = 2 is {got}, expected {want}")),
            None => b.unresolved(g),
        }
    }
    Ok(b.finish())
}

/// Over cubic graphs, two colors for conflict-free connection imply two
/// colors for proper connection, with at most one exceptional class.
pub fn check_cubic_spc(graphs: &[Graph], label: &str, budget: Option<u64>) -> Result<TheoremCheck> {
    let mut b = Builder::new("cubic-spc", label);
    let results = graphs
        .par_iter()
        .map(|g| -> Result<(Option<bool>, Option<bool>)> {
            let cf = two_colorable(g, budget)?;
            if cf != Some(true) {
                return Ok((cf, None));
            }
            let pc = match spc_decide_budget(g, 2, budget)?.decision {
                Decision::Colorable(_) => Some(true),
                Decision::NotColorable => Some(false),
                Decision::Exhausted => None,
            };
            Ok((cf, pc))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut exceptions: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut two = 0;
    for (g, (cf, pc)) in graphs.iter().zip(results) {
        match (cf, pc) {
            (None, _) | (Some(true), None) => b.unresolved(g),
            (Some(true), Some(false)) => {
                exceptions.insert(canonical_form(g));
            }
            (Some(true), Some(true)) => two += 1,
            _ => {}
        }
    }
    b.note(format!("{two} graphs with scfc = 2 and spc = 2"));
    for cf in &exceptions {
        b.note(format!("scfc = 2 but spc > 2: {}", write_graph6(&cf.to_graph())));
    }
    if exceptions.len() > 1 {
        for cf in &exceptions {
            b.fail(&cf.to_graph(), "more than one exceptional class");
        }
    }
    Ok(b.finish())
}

/// The families named in the text that must appear in the cubic `scfc = 2`
/// census, limited to order `max_n`.
pub fn cubic_named_members(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in [3, 4, 6] {
        out.push((format!("prism({k})"), families::prism(k).unwrap()));
    }
    for k in 3..=7 {
        out.push((format!("mobius({k})"), families::mobius(k).unwrap()));
    }
    for k in [2, 4] {
        out.push((format!("f0({k})"), families::f0(k).unwrap()));
    }
    out.retain(|(_, g)| g.n() <= max_n);
    out
}

/// Census of cubic graphs with `scfc = 2`. The named members in range must
/// be present; the rest is reported.
pub fn check_cubic_census(graphs: &[Graph], label: &str, budget: Option<u64>) -> Result<TheoremCheck> {
    let mut b = Builder::new("cubic-census", label);
    let results = graphs
        .par_iter()
        .map(|g| two_colorable(g, budget))
        .collect::<Result<Vec<_>>>()?;
    let mut groups: BTreeMap<(usize, usize), BTreeSet<CanonicalForm>> = BTreeMap::new();
    for (g, r) in graphs.iter().zip(results) {
        match r {
            Some(true) => {
                groups.entry((g.n(), g.m())).or_default().insert(canonical_form(g));
            }
            Some(false) => {}
            None => b.unresolved(g),
        }
    }
    let members: BTreeSet<&CanonicalForm> = groups.values().flatten().collect();
    let max_n = graphs.iter().map(Graph::n).max().unwrap_or(0);
    let named = cubic_named_members(max_n);
    let mut named_forms = BTreeSet::new();
    for (label, g) in &named {
        let cf = canonical_form(g);
        if !members.contains(&cf) {
            b.fail(g, format!("{label} is missing from the census"));
        }
        named_forms.insert(cf);
    }
    let rest = members.iter().filter(|cf| !named_forms.contains(**cf)).count();
    b.note(format!(
        "{} members: {} named classes, {rest} further classes reported",
        members.len(),
        named_forms.len()
    ));
    b.census = groups
        .into_iter()
        .map(|((n, m), set)| CensusEntry {
            n,
            m,
            members: set.iter().map(|cf| write_graph6(&cf.to_graph())).collect(),
        })
        .collect();
    Ok(b.finish())
}

/// Every valid 2-coloring of `g`, one per swap of the two colors. Only for
/// small `m`.
pub fn all_two_colorings(g: &Graph) -> Result<Vec<EdgeColoring>> {
    let m = g.m();
    if m > 24 {
        return Err(scfc_core::Error::TooLarge(m).into());
    }
    let pairs = pair_dags(g)?;
    let mut out = Vec::new();
    let mut colors = vec![1u8; m];
    for mask in 0u32..1 << m.saturating_sub(1) {
        for (i, c) in colors.iter_mut().enumerate().skip(1) {
            *c = (mask >> (i - 1) & 1) as u8 + 1;
        }
        if pairs.iter().all(|p| p.conflict_free(&colors)) {
            out.push(EdgeColoring::new(2, colors.clone())?);
        }
    }
    Ok(out)
}

/// In every valid 2-coloring the two edges of a forced 2-path differ, and a
/// graph with a valid 2-coloring has only even forced cycles.
pub fn check_forced_paths(graphs: &[Graph], label: &str) -> Result<TheoremCheck> {
    let mut b = Builder::new("forced-paths", label);
    let mut checked = 0;
    for g in graphs {
        let mut forced = Vec::new();
        for y in 0..g.n() {
            let (nb, inc) = (g.neighbors(y), g.incident(y));
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if g.is_forced_2path(nb[i], y, nb[j])? {
                        forced.push((inc[i], inc[j]));
                    }
                }
            }
        }
        let cycles = g.forced_cycles(2 * g.n());
        if forced.is_empty() && cycles.is_empty() {
            continue;
        }
        checked += 1;
        let colorings = all_two_colorings(g)?;
        for c in &colorings {
            debug_assert!(is_strong_cfc(g, c)?.ok);
            if let Some(&(e, f)) = forced.iter().find(|&&(e, f)| c.color(e) == c.color(f)) {
                b.fail(g, format!("forced 2-path edges {:?} and {:?} share a color", g.edge(e), g.edge(f)));
                break;
            }
        }
        if !colorings.is_empty() {
            if let Some(odd) = cycles.iter().find(|c| !c.is_even()) {
                b.fail(g, format!("2-colorable with odd forced cycle {:?}", odd.vertices));
            }
        }
    }
    b.note(format!("{checked} graphs with a forced 2-path or forced cycle"));
    Ok(b.finish())
}

/// Options shared by registry runs.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Overrides the default corpus bound of the check.
    pub max_n: Option<usize>,
    pub budget: Option<u64>,
}

pub struct TheoremInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub default_max_n: usize,
}

pub const THEOREMS: &[TheoremInfo] = &[
    TheoremInfo { id: "complete-iff-one", summary: "scfc = 1 exactly for complete graphs", default_max_n: 7 },
    TheoremInfo { id: "star-iff-m", summary: "scfc = m exactly for stars", default_max_n: 7 },
    TheoremInfo { id: "m-minus-one", summary: "scfc = m - 1 exactly for the paths on 4 and 5 vertices and gamma(m)", default_max_n: 7 },
    TheoremInfo { id: "census-m-minus-two", summary: "census of scfc = m - 2; named members C3, C4, C5, path(6)", default_max_n: 7 },
    TheoremInfo { id: "census-m-minus-three", summary: "census of scfc = m - 3", default_max_n: 7 },
    TheoremInfo { id: "triangle-packing-bound", summary: "scfc <= m - 2t, equality exactly for S(m,t)", default_max_n: 7 },
    TheoremInfo { id: "three-color-conditions", summary: "each structural condition forces 3 colors", default_max_n: 7 },
    TheoremInfo { id: "cycles", summary: "scfc(C_n) is ceil(log2 n) - 1 or ceil(log2 n)", default_max_n: 12 },
    TheoremInfo { id: "paths-and-stars", summary: "scfc(path(n)) = ceil(log2 n), scfc(star(m)) = m", default_max_n: 12 },
    TheoremInfo { id: "wheels", summary: "scfc(W_n) = ceil(n/3)", default_max_n: 7 },
    TheoremInfo { id: "complete-bipartite", summary: "scfc(K_(s,t)) = ceil(t^(1/s)) for s <= 2", default_max_n: 5 },
    TheoremInfo { id: "qk-critical", summary: "Q_k needs k colors, proper connected subgraphs fewer", default_max_n: 5 },
    TheoremInfo { id: "cubic-families", summary: "which prisms, Mobius ladders and F0(k) have scfc = 2", default_max_n: 8 },
    TheoremInfo { id: "cubic-spc", summary: "cubic scfc = 2 implies spc = 2 up to one class", default_max_n: 12 },
    TheoremInfo { id: "cubic-census", summary: "cubic graphs with scfc = 2 include the named families", default_max_n: 12 },
    TheoremInfo { id: "forced-paths", summary: "forced 2-paths differ and forced cycles are even under 2 colors", default_max_n: 6 },
];

pub fn theorem_info(id: &str) -> Option<&'static TheoremInfo> {
    THEOREMS.iter().find(|t| t.id == id)
}

/// Runs one registry entry on its default corpus, bounded by `max_n`.
/// The runtime includes building and solving the corpus.
pub fn run_theorem(id: &str, opts: RunOptions) -> Result<TheoremCheck> {
    let started = Instant::now();
    let mut check = run_registered(id, opts)?;
    check.runtime_ms = started.elapsed().as_millis();
    Ok(check)
}

fn run_registered(id: &str, opts: RunOptions) -> Result<TheoremCheck> {
    let info = theorem_info(id).ok_or_else(|| Error::UnknownTheorem(id.into()))?;
    let n = opts.max_n.unwrap_or(info.default_max_n);
    let budget = opts.budget;
    let connected = || SolvedCorpus::connected(n, budget);
    let cubic_label = |n: usize| format!("connected cubic graphs, 4 <= n <= {n}");
    match id {
        "complete-iff-one" => Ok(check_complete_iff_one(&connected()?)),
        "star-iff-m" => Ok(check_star_iff_m(&connected()?)),
        "m-minus-one" => Ok(check_m_minus_one(&connected()?)),
        "census-m-minus-two" => Ok(check_census_m_minus_two(&connected()?)),
        "census-m-minus-three" => Ok(check_census_m_minus_three(&connected()?)),
        "triangle-packing-bound" => Ok(check_triangle_packing(&connected()?)),
        "three-color-conditions" => check_three_color_conditions(
            &connected_graphs(n)?,
            &format!("connected graphs, 2 <= n <= {n}"),
            budget,
        ),
        "cycles" => check_cycles(n, budget),
        "paths-and-stars" => check_paths_and_stars(n, n.min(7), budget),
        "wheels" => check_wheels(n, budget),
        "complete-bipartite" => check_complete_bipartite(2, n, budget),
        "qk-critical" => check_qk_critical(n, budget),
        "cubic-families" => check_cubic_families(budget),
        "cubic-spc" => check_cubic_spc(&cubic_graphs(4, n)?, &cubic_label(n), budget),
        "cubic-census" => check_cubic_census(&cubic_graphs(4, n)?, &cubic_label(n), budget),
        "forced-paths" => {
            let mut graphs = connected_graphs(n)?;
            graphs.extend(cubic_graphs(4, n.max(8))?);
            check_forced_paths(
                &graphs,
                &format!("connected graphs with n <= {n} and cubic graphs with n <= {}", n.max(8)),
            )
        }
        _ => unreachable!("registry ids are matched above"),
    }
}
