#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use scfc_core::enumerate::{enumerate_connected, enumerate_connected_subgraphs, enumerate_cubic, enumerate_trees};
use scfc_core::{canonical_form, families, is_isomorphic, Graph};

/// Connected graphs on `n` vertices by brute force: all edge subsets,
/// deduplicated by the minimum mask over all permutations.
fn naive_connected(n: usize) -> BTreeSet<u64> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        if seen.contains(&mask) {
            continue;
        }
        let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = Graph::new(n, &edges).unwrap();
        let orbit: BTreeSet<u64> = perms.iter().map(|p| mask_under(&g, p)).collect();
        let cert = *orbit.iter().next().unwrap();
        seen.extend(orbit);
        if is_connected(&g) {
            out.insert(cert);
        }
    }
    out
}

#[test]
fn connected_matches_brute_force() {
    for n in 1..=6 {
        let perms = permutations(n);
        let got: Vec<u64> = enumerate_connected(n).unwrap().iter().map(|g| brute_certificate(g, &perms)).collect();
        let set: BTreeSet<u64> = got.iter().copied().collect();
        assert_eq!(set.len(), got.len(), "duplicates at n = {n}");
        assert_eq!(set, naive_connected(n), "n = {n}");
    }
}

#[test]
fn connected_count_seven() {
    assert_eq!(enumerate_connected(7).unwrap().len(), 853);
}

#[test]
fn cubic_matches_filtered_connected() {
    for n in [4, 6, 8] {
        let want: BTreeSet<_> = enumerate_connected(n)
            .unwrap()
            .iter()
            .filter(|g| g.is_regular(3))
            .map(canonical_form)
            .collect();
        let got: BTreeSet<_> = enumerate_cubic(n).unwrap().iter().map(canonical_form).collect();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn cubic_counts() {
    let counts: Vec<usize> = [4, 6, 8, 10, 12].iter().map(|&n| enumerate_cubic(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 5, 19, 85]);
    for g in enumerate_cubic(10).unwrap() {
        assert!(g.is_regular(3) && g.is_connected());
    }
}

#[test]
fn trees_are_trees_and_distinct() {
    for n in 1..=8 {
        let trees = enumerate_trees(n);
        assert!(trees.iter().all(|t| t.is_tree()));
        let set: BTreeSet<_> = trees.iter().map(canonical_form).collect();
        assert_eq!(set.len(), trees.len());
    }
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(enumerate_connected(6).unwrap(), enumerate_connected(6).unwrap());
    assert_eq!(enumerate_cubic(10).unwrap(), enumerate_cubic(10).unwrap());
}

#[test]
fn subgraphs_by_brute_force() {
    let q = families::q_k(4).unwrap();
    let perms = permutations(7);
    let mut want = BTreeSet::new();
    for mask in 1u32..(1 << q.m()) - 1 {
        let chosen: Vec<_> = (0..q.m()).filter(|&i| mask >> i & 1 == 1).map(scfc_core::EdgeId).collect();
        let h = q.edge_subgraph(&chosen);
        if is_connected(&h) {
            let padded = Graph::new(7, h.edges()).unwrap();
            want.insert((h.n(), brute_certificate(&padded, &perms)));
        }
    }
    let got: BTreeSet<_> = enumerate_connected_subgraphs(&q)
        .unwrap()
        .iter()
        .map(|h| (h.n(), brute_certificate(&Graph::new(7, h.edges()).unwrap(), &perms)))
        .collect();
    assert_eq!(got, want);
}

#[test]
fn k33_differs_from_prism() {
    let k33 = families::complete_bipartite(3, 3).unwrap();
    let prism = families::prism(3).unwrap();
    assert_ne!(canonical_form(&k33), canonical_form(&prism));
    assert!(is_isomorphic(&k33, &families::mobius(3).unwrap()));
    assert!(is_isomorphic(&prism, &families::f0(2).unwrap()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn relabeling_keeps_the_form(g in connected_graph(1, 10, 0.3), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_form(&g).to_graph(), canonical_form(&h).to_graph());
    }

    #[test]
    fn forms_agree_with_brute_isomorphism(
        g in connected_graph(4, 6, 0.3),
        h in connected_graph(4, 6, 0.3),
    ) {
        if g.n() == h.n() {
            let perms = permutations(g.n());
            let brute = brute_certificate(&g, &perms) == brute_certificate(&h, &perms);
            prop_assert_eq!(canonical_form(&g) == canonical_form(&h), brute);
        }
    }
}
