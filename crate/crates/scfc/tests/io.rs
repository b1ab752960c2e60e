use std::io::Write;

use scfc::io::*;
use scfc::Error;
use scfc_core::enumerate::enumerate_cubic;
use scfc_core::{families, EdgeColoring};

#[test]
fn edge_list_round_trip() {
    let g = families::wheel(6).unwrap();
    assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    let text = "# a triangle\n3 3\n0 1\n\n1 2\n2 0\n";
    assert_eq!(parse_edge_list(text).unwrap(), families::complete(3).unwrap());
}

#[test]
fn edge_list_errors() {
    assert!(matches!(parse_edge_list(""), Err(Error::Format(_))));
    assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Format(_))));
    assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Format(_))));
    assert!(matches!(parse_edge_list("3 1\n0 0\n"), Err(Error::Core(scfc_core::Error::SelfLoop(0)))));
    assert!(matches!(parse_edge_list("3 1\n0 5\n"), Err(Error::Core(_))));
}

#[test]
fn coloring_json_round_trip() {
    let g = families::cycle(6).unwrap();
    let c = EdgeColoring::new(2, vec![1, 2, 2, 1, 2, 1]).unwrap();
    let text = coloring_to_json(&g, &c);
    assert_eq!(coloring_from_json(&g, &text).unwrap(), c);
}

#[test]
fn coloring_json_errors() {
    let g = families::path(3).unwrap();
    let bad = [
        r#"{"k": 2, "edges": [[0, 1, 1]]}"#,
        r#"{"k": 2, "edges": [[0, 1, 1], [0, 2, 1]]}"#,
        r#"{"k": 2, "edges": [[0, 1, 1], [1, 2, 0]]}"#,
        r#"{"k": 2, "edges": [[0, 1, 1], [1, 0, 2], [1, 2, 1]]}"#,
        r#"{"k": 2, "edges": [[0, 1, 1], [1, 2, 3]]}"#,
        r#"{"k": 2}"#,
    ];
    for text in bad {
        assert!(coloring_from_json(&g, text).is_err(), "{text}");
    }
    let ok = r#"{"k": 2, "edges": [[2, 1, 2], [1, 0, 1]]}"#;
    assert_eq!(coloring_from_json(&g, ok).unwrap().colors(), [1, 2]);
}

#[test]
fn graph6_stream_reports_line_numbers() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "Bw\n!!\n\nDhc\n").unwrap();
    let items: Vec<_> = stream_graph6(f.path()).unwrap().collect();
    assert_eq!(items.len(), 3);
    assert!(items[0].is_ok());
    assert!(matches!(items[1], Err(Error::Line { line: 2, .. })));
    assert_eq!(items[2].as_ref().unwrap(), &families::cycle(5).unwrap());
    assert!(read_graph6_file(f.path()).is_err());
}

#[test]
fn graph6_file_edge_cases() {
    let empty = tempfile::NamedTempFile::new().unwrap();
    assert!(read_graph6_file(empty.path()).unwrap().is_empty());
    assert!(matches!(
        read_graph6_file(std::path::Path::new("/nonexistent/x.g6")),
        Err(Error::Io { .. })
    ));
    let graphs = enumerate_cubic(8).unwrap();
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(write_graph6_lines(&graphs).as_bytes()).unwrap();
    assert_eq!(read_graph6_file(f.path()).unwrap(), graphs);
}

#[test]
fn graph_arguments() {
    let k3 = families::complete(3).unwrap();
    assert_eq!(graph_argument("Bw").unwrap(), k3);
    let mut el = tempfile::NamedTempFile::new().unwrap();
    write!(el, "# comment\n{}", write_edge_list(&k3)).unwrap();
    assert_eq!(graph_argument(el.path().to_str().unwrap()).unwrap(), k3);
    let mut g6 = tempfile::NamedTempFile::new().unwrap();
    writeln!(g6, "Dhc").unwrap();
    assert_eq!(graph_argument(g6.path().to_str().unwrap()).unwrap(), families::cycle(5).unwrap());
    assert!(graph_argument("not a graph").is_err());
}

#[test]
fn fixtures_match_generation() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for n in [10, 12] {
        let stored = read_graph6_file(&dir.join(format!("cubic{n}.g6"))).unwrap();
        assert_eq!(stored, enumerate_cubic(n).unwrap(), "n = {n}");
    }
}
