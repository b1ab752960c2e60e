//! Explicit colorings for the named families.
//!
//! Every builder that has a known target checks its own output with
//! [`is_strong_cfc`] and reports [`Error::VerificationFailed`] instead of
//! returning a coloring that does not work. Vertex names follow the
//! conventions of [`crate::families`].

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::ceil_log2;
use crate::coloring::{is_strong_cfc, EdgeColoring, MAX_COLORS};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;

fn color_by(g: &Graph, k: usize, f: impl Fn(usize, usize) -> u8) -> Result<EdgeColoring> {
    EdgeColoring::new(k, g.edges().iter().map(|&(u, v)| f(u, v)).collect())
}

fn verified(g: &Graph, c: EdgeColoring, what: &str) -> Result<EdgeColoring> {
    let report = is_strong_cfc(g, &c)?;
    match report.failing_pair {
        None => Ok(c),
        Some((u, v)) => Err(Error::VerificationFailed(format!(
            "{what}: pair {u}-{v} has no conflict-free shortest path"
        ))),
    }
}

fn need(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParams(msg.into()))
    }
}

/// Edge `i` of the path (joining vertices `i - 1` and `i`) gets one more
/// than the exponent of the largest power of 2 dividing `i`.
pub fn ruler_path_coloring(n: usize) -> Result<EdgeColoring> {
    need(n >= 2, "ruler coloring needs at least 2 vertices")?;
    let g = families::path(n)?;
    color_by(&g, ceil_log2(n), |_, v| v.trailing_zeros() as u8 + 1)
}

/// The ruler coloring of the spanning path `0 - ... - (n-1)`, closed by the
/// edge `{0, n-1}`. The closing edge takes the top color when exactly one
/// color occurs once on the path and the next color down otherwise; if that
/// choice does not verify the other one is tried.
pub fn cycle_coloring(n: usize) -> Result<EdgeColoring> {
    need(n >= 3, "cycle coloring needs at least 3 vertices")?;
    let g = families::cycle(n)?;
    let top = ceil_log2(n) as u8;
    let ruler = |i: usize| i.trailing_zeros() as u8 + 1;
    let mut counts = [0usize; 64];
    for i in 1..n {
        counts[ruler(i) as usize] += 1;
    }
    let singles = counts.iter().filter(|&&c| c == 1).count();
    let (first, second) = if singles == 1 {
        (top, top - 1)
    } else {
        (top - 1, top)
    };
    for closing in [first, second] {
        let c = color_by(&g, top as usize, |u, v| {
            if (u, v) == (0, n - 1) {
                closing
            } else {
                ruler(v)
            }
        })?;
        if is_strong_cfc(&g, &c)?.ok {
            return Ok(c);
        }
    }
    Err(Error::VerificationFailed(format!(
        "neither closing color works for C_{n}"
    )))
}

/// One color per triangle of the packing, and a fresh color for every other
/// edge: `m - 2t` colors in total. Triangles are vertex triples.
pub fn triangle_packing_coloring(g: &Graph, packing: &[[usize; 3]]) -> Result<EdgeColoring> {
    if packing.len() > MAX_COLORS {
        return Err(Error::InvalidColoring(format!(
            "{} triangles need more than {MAX_COLORS} colors",
            packing.len()
        )));
    }
    let mut colors = vec![0u8; g.m()];
    for (i, &[a, b, c]) in packing.iter().enumerate() {
        for (x, y) in [(a, b), (b, c), (a, c)] {
            let e = g.edge_id(x, y).ok_or(Error::NotATriangle)?;
            if colors[e.index()] != 0 {
                return Err(Error::NotEdgeDisjoint);
            }
            colors[e.index()] = i as u8 + 1;
        }
    }
    let needed = g.m() - 2 * packing.len();
    if needed > MAX_COLORS {
        return Err(Error::InvalidColoring(format!(
            "{needed} colors exceed the limit of {MAX_COLORS}"
        )));
    }
    let mut next = packing.len() as u8;
    for c in colors.iter_mut().filter(|c| **c == 0) {
        next += 1;
        *c = next;
    }
    EdgeColoring::new((next as usize).max(1), colors)
}

/// Colors of `K_{s,t}`: vertex `w_j` on the `t` side carries a vector in
/// `[q]^s` with `q` the least integer such that `q^s >= t`, and the edge
/// `u_i w_j` takes coordinate `i` of that vector. Vectors are taken in
/// lexicographic order with the constant ones last, so that when `t > 1`
/// every two coordinates are separated by some chosen vector.
pub fn kst_vector_coloring(s: usize, t: usize) -> Result<EdgeColoring> {
    need(1 <= s && s <= t, "kst coloring needs 1 <= s <= t")?;
    let q = kst_colors(s, t);
    let g = families::complete_bipartite(s, t)?;
    let digits = |mut x: usize| {
        let mut d = vec![0usize; s];
        for slot in d.iter_mut().rev() {
            *slot = x % q;
            x /= q;
        }
        d
    };
    let total = q.checked_pow(s as u32).unwrap_or(usize::MAX);
    let vectors: Vec<Vec<usize>> = (0..total)
        .map(digits)
        .filter(|d| d.iter().any(|&x| x != d[0]))
        .chain((0..q).map(|c| vec![c; s]))
        .take(t)
        .collect();
    let c = color_by(&g, q, |u, w| vectors[w - s][u] as u8 + 1)?;
    verified(&g, c, "K_{s,t} vector coloring")
}

/// The least `q` with `q^s >= t`.
pub fn kst_colors(s: usize, t: usize) -> usize {
    let mut q = 1usize;
    while q.checked_pow(s as u32).is_some_and(|p| p < t) {
        q += 1;
    }
    q
}

/// Two colors on `C_k □ K_2` for `k` in {3, 4, 6}.
pub fn prism_coloring(k: usize) -> Result<EdgeColoring> {
    need(matches!(k, 3 | 4 | 6), "prism coloring needs k in {3, 4, 6}")?;
    let g = families::prism(k)?;
    let rim = |a: usize, b: usize| (a < k) == (b < k);
    let c = if k == 3 {
        color_by(&g, 2, |u, v| if rim(u, v) { 1 } else { 2 })?
    } else {
        // rim edge s_i s_{i+1} (or t_i t_{i+1}) is indexed by i; the closing
        // edge s_k s_1 has i = k
        color_by(&g, 2, |u, v| {
            if !rim(u, v) {
                return 1;
            }
            let (a, b) = (u % k, v % k);
            let i = if a == 0 && b == k - 1 { k } else { a + 1 };
            let odd = i % 2 == 1;
            if (u < k) == odd {
                1
            } else {
                2
            }
        })?
    };
    verified(&g, c, "prism coloring")
}

/// Two colors on the Möbius ladder `M_{2k}` for `3 <= k <= 7`.
pub fn mobius_coloring(k: usize) -> Result<EdgeColoring> {
    need((3..=7).contains(&k), "Möbius coloring needs 3 <= k <= 7")?;
    let g = families::mobius(k)?;
    let s = |i: usize| i - 1;
    let t = |i: usize| k + i - 1;
    let mut ones: Vec<(usize, usize)> = Vec::new();
    let add = |ones: &mut Vec<(usize, usize)>, i: usize, j: usize, tside: bool| {
        if i <= k && j <= k {
            ones.push(if tside { (t(i), t(j)) } else { (s(i), s(j)) });
        }
    };
    if k.is_multiple_of(2) {
        for i in [1, 3, 5] {
            add(&mut ones, i, i + 1, false);
            add(&mut ones, i, i + 1, true);
            if i <= k {
                ones.push((s(i), t(i)));
            }
        }
    } else {
        for i in [1, 3, 5, 7] {
            add(&mut ones, i, i + 1, false);
            add(&mut ones, i + 1, i + 2, true);
        }
        ones.extend((1..=k).map(|i| (s(i), t(i))));
        ones.push((s(k), t(1)));
    }
    let c = color_by(&g, 2, |u, v| {
        if ones.contains(&(u, v)) || ones.contains(&(v, u)) {
            1
        } else {
            2
        }
    })?;
    verified(&g, c, "Möbius coloring")
}

/// Two colors on `F_0(k)` for `k` in {2, 4}.
pub fn f0_coloring(k: usize) -> Result<EdgeColoring> {
    need(matches!(k, 2 | 4), "F0 coloring needs k in {2, 4}")?;
    let g = families::f0(k)?;
    let (x, y) = (2 * k, 2 * k + 1);
    // ladder index of a ladder vertex, 1-based
    let idx = |v: usize| v % k + 1;
    let c = color_by(&g, 2, |u, v| {
        if (u, v) == (x, y) {
            return 2;
        }
        if v >= x {
            return 1;
        }
        let i = idx(u).min(idx(v));
        if i % 2 == 0 {
            1
        } else {
            2
        }
    })?;
    verified(&g, c, "F0 coloring")
}

/// `m - 1` colors on `Γ_m`: the star edges get distinct colors and the
/// pendant edge at leaf 1 reuses the color of the star edge at leaf 2.
pub fn gamma_coloring(m: usize) -> Result<EdgeColoring> {
    need(m >= 4, "gamma coloring needs m >= 4")?;
    let g = families::gamma(m)?;
    let c = color_by(&g, m - 1, |u, v| if u == 0 { v as u8 } else { 2 })?;
    verified(&g, c, "gamma coloring")
}

/// A named construction with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    RulerPath(usize),
    CycleClosing(usize),
    StarDistinct(usize),
    /// `S_{m,t}` colored through its `t` triangles.
    SmtColoring(usize, usize),
    KstVectors(usize, usize),
    PrismPattern(usize),
    MobiusPattern(usize),
    F0Pattern(usize),
    GammaPattern(usize),
}

impl Construction {
    pub fn parse(name: &str, params: &[usize]) -> Result<Construction> {
        let one = || match params {
            [a] => Ok(*a),
            _ => Err(Error::InvalidParams(format!("{name} takes one parameter"))),
        };
        let two = || match params {
            [a, b] => Ok((*a, *b)),
            _ => Err(Error::InvalidParams(format!("{name} takes two parameters"))),
        };
        Ok(match name {
            "ruler" | "ruler-path" => Construction::RulerPath(one()?),
            "cycle" | "cycle-closing" => Construction::CycleClosing(one()?),
            "star" => Construction::StarDistinct(one()?),
            "smt" | "star-plus-matching" | "triangle-packing" => {
                let (m, t) = two()?;
                Construction::SmtColoring(m, t)
            }
            "kst" => {
                let (s, t) = two()?;
                Construction::KstVectors(s, t)
            }
            "prism" => Construction::PrismPattern(one()?),
            "mobius" => Construction::MobiusPattern(one()?),
            "f0" => Construction::F0Pattern(one()?),
            "gamma" => Construction::GammaPattern(one()?),
            _ => return Err(Error::InvalidParams(format!("unknown construction {name}"))),
        })
    }

    pub fn label(&self) -> String {
        match *self {
            Construction::RulerPath(n) => format!("ruler-path({n})"),
            Construction::CycleClosing(n) => format!("cycle-closing({n})"),
            Construction::StarDistinct(m) => format!("star({m})"),
            Construction::SmtColoring(m, t) => format!("smt({m},{t})"),
            Construction::KstVectors(s, t) => format!("kst({s},{t})"),
            Construction::PrismPattern(k) => format!("prism({k})"),
            Construction::MobiusPattern(k) => format!("mobius({k})"),
            Construction::F0Pattern(k) => format!("f0({k})"),
            Construction::GammaPattern(m) => format!("gamma({m})"),
        }
    }

    /// The graph the coloring applies to.
    pub fn graph(&self) -> Result<Graph> {
        match *self {
            Construction::RulerPath(n) => families::path(n),
            Construction::CycleClosing(n) => families::cycle(n),
            Construction::StarDistinct(m) => families::star(m),
            Construction::SmtColoring(m, t) => families::star_plus_matching(m, t),
            Construction::KstVectors(s, t) => families::complete_bipartite(s, t),
            Construction::PrismPattern(k) => families::prism(k),
            Construction::MobiusPattern(k) => families::mobius(k),
            Construction::F0Pattern(k) => families::f0(k),
            Construction::GammaPattern(m) => families::gamma(m),
        }
    }

    pub fn coloring(&self) -> Result<EdgeColoring> {
        match *self {
            Construction::RulerPath(n) => ruler_path_coloring(n),
            Construction::CycleClosing(n) => cycle_coloring(n),
            Construction::StarDistinct(m) => {
                let g = families::star(m)?;
                verified(&g, EdgeColoring::rainbow(m)?, "star coloring")
            }
            Construction::SmtColoring(m, t) => {
                let g = families::star_plus_matching(m, t)?;
                let packing: Vec<[usize; 3]> =
                    (0..t).map(|i| [0, 2 * i + 1, 2 * i + 2]).collect();
                let c = triangle_packing_coloring(&g, &packing)?;
                verified(&g, c, "S_{m,t} coloring")
            }
            Construction::KstVectors(s, t) => kst_vector_coloring(s, t),
            Construction::PrismPattern(k) => prism_coloring(k),
            Construction::MobiusPattern(k) => mobius_coloring(k),
            Construction::F0Pattern(k) => f0_coloring(k),
            Construction::GammaPattern(m) => gamma_coloring(m),
        }
    }

    /// Number of colors the construction is meant to use.
    pub fn claimed_colors(&self) -> usize {
        match *self {
            Construction::RulerPath(n) | Construction::CycleClosing(n) => ceil_log2(n),
            Construction::StarDistinct(m) => m,
            Construction::SmtColoring(m, t) => m - 2 * t,
            Construction::KstVectors(s, t) => kst_colors(s, t),
            Construction::PrismPattern(_)
            | Construction::MobiusPattern(_)
            | Construction::F0Pattern(_) => 2,
            Construction::GammaPattern(m) => m - 1,
        }
    }

    /// Whether the claimed count is the exact value of scfc for the target
    /// graph. The cycle construction only gives an upper bound.
    pub fn claims_optimal(&self) -> bool {
        !matches!(self, Construction::CycleClosing(_))
    }

    /// Every construction with in-range parameters up to the given sizes.
    pub fn catalog() -> Vec<Construction> {
        let mut out = Vec::new();
        out.extend((2..=12).map(Construction::RulerPath));
        out.extend((3..=12).map(Construction::CycleClosing));
        out.extend((1..=7).map(Construction::StarDistinct));
        for m in 1..=10 {
            for t in 0..=m / 3 {
                out.push(Construction::SmtColoring(m, t));
            }
        }
        for s in 1..=2 {
            for t in s..=5 {
                out.push(Construction::KstVectors(s, t));
            }
        }
        out.extend([3, 4, 6].map(Construction::PrismPattern));
        out.extend((3..=7).map(Construction::MobiusPattern));
        out.extend([2, 4].map(Construction::F0Pattern));
        out.extend((4..=7).map(Construction::GammaPattern));
        out
    }
}
