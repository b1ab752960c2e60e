use scfc::harness::*;
use scfc_core::families;
use scfc_core::graph6::write_graph6;

#[test]
fn status_combination() {
    assert_eq!(Status::combine([Status::Pass, Status::Pass]), Status::Pass);
    assert_eq!(Status::combine([Status::Pass, Status::Partial]), Status::Partial);
    assert_eq!(Status::combine([Status::Partial, Status::Fail]), Status::Fail);
    assert_eq!(Status::Fail.exit_code(), 1);
}

#[test]
fn every_registry_entry_runs() {
    for t in THEOREMS {
        let max_n = match t.id {
            "cubic-spc" | "cubic-census" => 8,
            "qk-critical" => 4,
            _ => t.default_max_n.min(6),
        };
        let check = run_theorem(t.id, RunOptions { max_n: Some(max_n), budget: None }).unwrap();
        assert_eq!(check.status, Status::Pass, "{}: {:?}", t.id, check.notes);
        assert!(check.counterexamples.is_empty());
        assert!(check.corpus.contains(&max_n.to_string()) || t.id == "cubic-families");
    }
    assert!(run_theorem("nope", RunOptions::default()).is_err());
}

#[test]
fn exhausted_budget_is_partial() {
    let check = run_theorem("cycles", RunOptions { max_n: Some(9), budget: Some(1) }).unwrap();
    assert_eq!(check.status, Status::Partial);
    assert!(!check.unresolved.is_empty());
    let corpus = SolvedCorpus::connected(5, Some(1)).unwrap();
    let census = family_census(&corpus, CensusClass::MinusTwo);
    assert!(!census.unresolved.is_empty());
    assert_eq!(check_complete_iff_one(&corpus).status, Status::Partial);
}

#[test]
fn census_examples() {
    let corpus = SolvedCorpus::connected(6, None).unwrap();
    let two = family_census(&corpus, CensusClass::MinusTwo);
    let three = family_census(&corpus, CensusClass::MinusThree);
    assert!(two.contains(&families::cycle(4).unwrap()));
    assert!(two.contains(&families::cycle(3).unwrap()));
    assert!(two.contains(&families::cycle(5).unwrap()));
    assert!(!three.contains(&families::cycle(5).unwrap()));
    for a in &two.entries {
        for g in &a.members {
            assert!(three.entries.iter().all(|b| !b.members.contains(g)));
        }
        let mut sorted = a.members.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), a.members.len());
    }
    assert_eq!(family_census(&corpus, CensusClass::MinusTwo), two);
}

#[test]
fn larger_budget_census_is_a_superset() {
    let small = family_census(&SolvedCorpus::connected(6, Some(40)).unwrap(), CensusClass::MinusTwo);
    let full = family_census(&SolvedCorpus::connected(6, None).unwrap(), CensusClass::MinusTwo);
    for e in &small.entries {
        for g in &e.members {
            assert!(full.entries.iter().any(|f| f.members.contains(g)));
        }
    }
}

#[test]
fn counterexamples_are_reported() {
    // a corpus with a deliberately wrong value makes the check fail
    let g = families::complete(4).unwrap();
    let corpus = SolvedCorpus {
        label: "tampered".into(),
        items: vec![Solved { graph: g.clone(), value: Some(2), nodes: 0 }],
    };
    let check = check_complete_iff_one(&corpus);
    assert_eq!(check.status, Status::Fail);
    assert_eq!(check.counterexamples, [write_graph6(&g)]);
}

#[test]
fn two_colorings_of_c6() {
    let all = all_two_colorings(&families::cycle(6).unwrap()).unwrap();
    assert!(!all.is_empty());
    assert!(all_two_colorings(&families::cycle(5).unwrap()).unwrap().is_empty());
}

#[test]
fn m_minus_one_recognition() {
    assert!(is_m_minus_one_family(&families::path(4).unwrap()));
    assert!(is_m_minus_one_family(&families::path(5).unwrap()));
    assert!(is_m_minus_one_family(&families::gamma(6).unwrap()));
    assert!(!is_m_minus_one_family(&families::path(6).unwrap()));
    assert!(!is_m_minus_one_family(&families::star(4).unwrap()));
}
