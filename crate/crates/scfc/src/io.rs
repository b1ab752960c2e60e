//! Edge lists, coloring files and graph6 corpora.

use std::fs::File;
use std::io::{BufRead, BufReader, Lines};
use std::path::Path;

use scfc_core::graph6::{parse_graph6, write_graph6};
use scfc_core::{EdgeColoring, Graph};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let numbers = |line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(Error::Format(format!("expected two integers, got {line:?}"))),
        }
    };
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty edge list".into()))?;
    let (n, m) = numbers(header)?;
    let edges = lines.map(numbers).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Format(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// On-disk coloring: `{"k": 2, "edges": [[u, v, color], ...]}`, colors
/// starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub k: usize,
    pub edges: Vec<[usize; 3]>,
}

impl ColoringFile {
    pub fn new(g: &Graph, c: &EdgeColoring) -> ColoringFile {
        ColoringFile {
            k: c.k(),
            edges: g
                .edges()
                .iter()
                .zip(c.colors())
                .map(|(&(u, v), &col)| [u, v, col as usize])
                .collect(),
        }
    }

    /// The coloring of `g` described by this file. Every edge of `g` must
    /// appear exactly once, in either orientation.
    pub fn to_coloring(&self, g: &Graph) -> Result<EdgeColoring> {
        let mut colors = vec![0u8; g.m()];
        for &[u, v, col] in &self.edges {
            let e = g
                .edge_id(u, v)
                .ok_or_else(|| Error::Format(format!("{u}-{v} is not an edge of the graph")))?;
            if colors[e.index()] != 0 {
                return Err(Error::Format(format!("edge {u}-{v} colored twice")));
            }
            colors[e.index()] = u8::try_from(col)
                .map_err(|_| Error::Format(format!("color {col} is too large")))?;
            if col == 0 {
                return Err(Error::Format(format!("edge {u}-{v} has color 0")));
            }
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            let (u, v) = g.edges()[i];
            return Err(Error::Format(format!("edge {u}-{v} has no color")));
        }
        Ok(EdgeColoring::new(self.k, colors)?)
    }
}

pub fn coloring_to_json(g: &Graph, c: &EdgeColoring) -> String {
    serde_json::to_string(&ColoringFile::new(g, c)).expect("plain data serializes")
}

pub fn coloring_from_json(g: &Graph, text: &str) -> Result<EdgeColoring> {
    serde_json::from_str::<ColoringFile>(text)?.to_coloring(g)
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

/// Graphs of a graph6 file, parsed lazily. Blank lines are skipped;
/// errors carry 1-based line numbers.
pub struct Graph6Stream<R> {
    lines: Lines<R>,
    line: usize,
    path: std::path::PathBuf,
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            let text = match self.lines.next()? {
                Ok(t) => t,
                Err(source) => {
                    return Some(Err(Error::Io {
                        path: self.path.clone(),
                        source,
                    }))
                }
            };
            self.line += 1;
            if text.trim().is_empty() {
                continue;
            }
            return Some(parse_graph6(&text).map_err(|source| Error::Line {
                line: self.line,
                source,
            }));
        }
    }
}

pub fn stream_graph6(path: &Path) -> Result<Graph6Stream<BufReader<File>>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    Ok(Graph6Stream {
        lines: BufReader::new(file).lines(),
        line: 0,
        path: path.to_owned(),
    })
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    stream_graph6(path)?.collect()
}

pub fn write_graph6_lines(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| write_graph6(g) + "\n").collect()
}

/// A graph given on the command line: a graph6 string, or the path of a
/// file holding one graph in graph6 or edge-list form.
pub fn graph_argument(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = read_to_string(path)?;
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        let looks_numeric = first
            .split_whitespace()
            .all(|t| t.bytes().all(|b| b.is_ascii_digit()));
        if looks_numeric && first.split_whitespace().count() == 2 {
            return parse_edge_list(&text);
        }
        return Ok(parse_graph6(first)?);
    }
    Ok(parse_graph6(arg)?)
}
