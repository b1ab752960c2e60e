#![allow(clippy::needless_range_loop)]

mod common;

use common::*;
use scfc_core::constructions::{kst_colors, Construction};
use scfc_core::families;
use scfc_core::solver::{max_edge_disjoint_triangles, scfc_decide};

#[test]
fn catalog_passes_the_path_oracle() {
    for con in Construction::catalog() {
        let g = con.graph().unwrap();
        let c = con.coloring().unwrap();
        assert_eq!(c.used_colors(), con.claimed_colors(), "{}", con.label());
        if g.n() <= 12 {
            assert!(strong_cfc(&all_shortest_paths(&g), c.colors()), "{}", con.label());
        }
    }
}

#[test]
fn optimal_constructions_cannot_lose_a_color() {
    for con in Construction::catalog().into_iter().filter(Construction::claims_optimal) {
        let g = con.graph().unwrap();
        let k = con.claimed_colors();
        if k > 1 {
            assert!(scfc_decide(&g, k - 1).unwrap().is_none(), "{}", con.label());
        }
    }
}

#[test]
fn kst_color_counts() {
    let want = [(1, 1, 1), (1, 5, 5), (2, 2, 2), (2, 4, 2), (2, 5, 3), (3, 8, 2), (3, 9, 3)];
    for (s, t, q) in want {
        assert_eq!(kst_colors(s, t), q, "K_({s},{t})");
    }
}

#[test]
fn star_plus_matching_packing() {
    for m in 1..=15 {
        for t in 0..=m / 3 {
            let g = families::star_plus_matching(m, t).unwrap();
            assert_eq!(g.m(), m);
            assert_eq!(max_edge_disjoint_triangles(&g).len(), t, "S_({m},{t})");
        }
    }
}

#[test]
fn packing_matches_brute_force() {
    for g in [
        families::complete(4).unwrap(),
        families::complete(5).unwrap(),
        families::wheel(6).unwrap(),
        families::prism(3).unwrap(),
        families::f0(3).unwrap(),
    ] {
        let tri = scfc_core::solver::triangles(&g);
        let mut best = 0;
        for mask in 0u32..1 << tri.len() {
            let chosen: Vec<_> = (0..tri.len()).filter(|&i| mask >> i & 1 == 1).map(|i| tri[i]).collect();
            let mut edges: Vec<(usize, usize)> = chosen
                .iter()
                .flat_map(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])])
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            let before = edges.len();
            edges.sort_unstable();
            edges.dedup();
            if edges.len() == before {
                best = best.max(chosen.len());
            }
        }
        assert_eq!(max_edge_disjoint_triangles(&g).len(), best);
    }
}
