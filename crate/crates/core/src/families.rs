//! Deterministic generators for the named graph families.
//!
//! Labeling conventions, used by [`crate::constructions`]:
//!
//! - `path(n)`: `0 - 1 - ... - (n-1)`.
//! - `cycle(n)`: the path plus `(n-1, 0)`.
//! - `star(m)`, `wheel(n)`: the center/hub is vertex `0`.
//! - `complete_bipartite(s, t)`: sides `0..s` and `s..s+t`.
//! - `star_plus_matching(m, t)`: center `0`, triangle `i` is
//!   `{0, 2i+1, 2i+2}`, pendant leaves follow.
//! - `gamma(m)`: center `0`, leaves `1..m`, extra vertex `m` hangs off leaf `1`.
//! - `q_k(k)`: first center `0`, shared leaf `1`, second center `2`, then the
//!   remaining leaves of the first star, then those of the second.
//! - ladders: `s_i = i - 1` and `t_i = k + i - 1` for `i` in `1..=k`;
//!   `f0(k)` adds `x = 2k` and `y = 2k + 1`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A family name with its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    StarPlusMatching(usize, usize),
    Gamma(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Qk(usize),
    Ladder(usize),
    Prism(usize),
    Mobius(usize),
    F0(usize),
}

impl FamilySpec {
    pub fn build(self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Star(m) => star(m),
            FamilySpec::StarPlusMatching(m, t) => star_plus_matching(m, t),
            FamilySpec::Gamma(m) => gamma(m),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::CompleteBipartite(s, t) => complete_bipartite(s, t),
            FamilySpec::Wheel(n) => wheel(n),
            FamilySpec::Qk(k) => q_k(k),
            FamilySpec::Ladder(k) => ladder(k),
            FamilySpec::Prism(k) => prism(k),
            FamilySpec::Mobius(k) => mobius(k),
            FamilySpec::F0(k) => f0(k),
        }
    }

    /// Parses a family name and its comma-free parameter list, e.g.
    /// `("prism", &[6])`.
    pub fn parse(name: &str, params: &[usize]) -> Result<FamilySpec> {
        let one = |f: fn(usize) -> FamilySpec| match params {
            [a] => Ok(f(*a)),
            _ => Err(Error::InvalidParams(format!("{name} takes one parameter"))),
        };
        let two = |f: fn(usize, usize) -> FamilySpec| match params {
            [a, b] => Ok(f(*a, *b)),
            _ => Err(Error::InvalidParams(format!("{name} takes two parameters"))),
        };
        match name {
            "path" => one(FamilySpec::Path),
            "cycle" => one(FamilySpec::Cycle),
            "star" => one(FamilySpec::Star),
            "star-plus-matching" | "smt" => two(FamilySpec::StarPlusMatching),
            "gamma" => one(FamilySpec::Gamma),
            "complete" => one(FamilySpec::Complete),
            "complete-bipartite" | "kst" => two(FamilySpec::CompleteBipartite),
            "wheel" => one(FamilySpec::Wheel),
            "qk" => one(FamilySpec::Qk),
            "ladder" => one(FamilySpec::Ladder),
            "prism" => one(FamilySpec::Prism),
            "mobius" => one(FamilySpec::Mobius),
            "f0" => one(FamilySpec::F0),
            _ => Err(Error::InvalidParams(format!("unknown family {name}"))),
        }
    }

    /// Short human-readable name such as `prism(6)`.
    pub fn label(&self) -> String {
        match *self {
            FamilySpec::Path(n) => format!("path({n})"),
            FamilySpec::Cycle(n) => format!("cycle({n})"),
            FamilySpec::Star(m) => format!("star({m})"),
            FamilySpec::StarPlusMatching(m, t) => format!("star_plus_matching({m},{t})"),
            FamilySpec::Gamma(m) => format!("gamma({m})"),
            FamilySpec::Complete(n) => format!("complete({n})"),
            FamilySpec::CompleteBipartite(s, t) => format!("complete_bipartite({s},{t})"),
            FamilySpec::Wheel(n) => format!("wheel({n})"),
            FamilySpec::Qk(k) => format!("q_k({k})"),
            FamilySpec::Ladder(k) => format!("ladder({k})"),
            FamilySpec::Prism(k) => format!("prism({k})"),
            FamilySpec::Mobius(k) => format!("mobius({k})"),
            FamilySpec::F0(k) => format!("f0({k})"),
        }
    }
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParams(what.into()))
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, &edges).expect("family generators produce simple graphs")
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, "path needs at least one vertex")?;
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, "cycle needs at least 3 vertices")?;
    let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    e.push((n - 1, 0));
    Ok(build(n, e))
}

/// The star with `m` edges.
pub fn star(m: usize) -> Result<Graph> {
    need(m >= 1, "star needs at least one edge")?;
    Ok(build(m + 1, (1..=m).map(|i| (0, i)).collect()))
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, "complete graph needs at least one vertex")?;
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Ok(build(n, e))
}

pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    need(s >= 1 && t >= 1, "both sides need at least one vertex")?;
    let mut e = Vec::new();
    for u in 0..s {
        for w in s..s + t {
            e.push((u, w));
        }
    }
    Ok(build(s + t, e))
}

/// The wheel whose hub has degree `n`: a cycle on `1..=n` plus hub `0`.
pub fn wheel(n: usize) -> Result<Graph> {
    need(n >= 3, "wheel needs a rim of at least 3 vertices")?;
    let mut e: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    e.extend((1..n).map(|i| (i, i + 1)));
    e.push((1, n));
    Ok(build(n + 1, e))
}

/// `t` triangles through a common center plus `m - 3t` pendant edges at the
/// center; `m` is the total edge count.
pub fn star_plus_matching(m: usize, t: usize) -> Result<Graph> {
    need(m >= 3 * t && m >= 1, "star_plus_matching needs m >= 3t and m >= 1")?;
    let pendants = m - 3 * t;
    let n = 1 + 2 * t + pendants;
    let mut e = Vec::with_capacity(m);
    for i in 0..t {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        e.extend([(0, a), (0, b), (a, b)]);
    }
    e.extend((1 + 2 * t..n).map(|v| (0, v)));
    Ok(build(n, e))
}

/// A star with `m - 1` edges and one more edge hanging off a leaf; `m`
/// edges in total.
pub fn gamma(m: usize) -> Result<Graph> {
    need(m >= 3, "gamma needs at least 3 edges")?;
    let mut e: Vec<_> = (1..m).map(|i| (0, i)).collect();
    e.push((1, m));
    Ok(build(m + 1, e))
}

/// Two copies of `K_{1,k-1}` glued at a leaf.
pub fn q_k(k: usize) -> Result<Graph> {
    need(k >= 2, "q_k needs k >= 2")?;
    let mut e = vec![(0, 1), (2, 1)];
    let mut next = 3;
    for _ in 0..k - 2 {
        e.push((0, next));
        next += 1;
    }
    for _ in 0..k - 2 {
        e.push((2, next));
        next += 1;
    }
    Ok(build(next, e))
}

fn ladder_edges(k: usize) -> Vec<(usize, usize)> {
    let s = |i: usize| i - 1;
    let t = |i: usize| k + i - 1;
    let mut e = Vec::new();
    for i in 1..=k {
        e.push((s(i), t(i)));
        if i < k {
            e.push((s(i), s(i + 1)));
            e.push((t(i), t(i + 1)));
        }
    }
    e
}

/// `P_k □ K_2`.
pub fn ladder(k: usize) -> Result<Graph> {
    need(k >= 1, "ladder needs k >= 1")?;
    Ok(build(2 * k, ladder_edges(k)))
}

/// `C_k □ K_2`: the ladder plus `s_1 s_k` and `t_1 t_k`.
pub fn prism(k: usize) -> Result<Graph> {
    need(k >= 3, "prism needs k >= 3")?;
    let mut e = ladder_edges(k);
    e.extend([(0, k - 1), (k, 2 * k - 1)]);
    Ok(build(2 * k, e))
}

/// The Möbius ladder `M_{2k}`: the ladder plus `s_1 t_k` and `t_1 s_k`.
pub fn mobius(k: usize) -> Result<Graph> {
    need(k >= 3, "mobius needs k >= 3")?;
    let mut e = ladder_edges(k);
    e.extend([(0, 2 * k - 1), (k, k - 1)]);
    Ok(build(2 * k, e))
}

/// The ladder `L_k` plus `x`, `y` and the edges `xy, xs_1, xt_1, ys_k, yt_k`.
pub fn f0(k: usize) -> Result<Graph> {
    need(k >= 2, "f0 needs k >= 2")?;
    let (x, y) = (2 * k, 2 * k + 1);
    let mut e = ladder_edges(k);
    e.extend([(x, y), (x, 0), (x, k), (y, k - 1), (y, 2 * k - 1)]);
    Ok(build(2 * k + 2, e))
}
