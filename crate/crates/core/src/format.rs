//! Text and JSON formats for graphs, posets, words and permutation
//! sequences.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{detect_bipartition, BipartiteGraph, Graph, GraphError, VertexId};
use crate::poset::{Poset, PosetError};
use crate::words::{PermSequence, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Word(#[from] WordError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e.to_string())
    }
}

/// `{"vertices": [...], "edges": [[u, v], ...]}`, optionally with the
/// vertices of part A.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub part_a: Option<Vec<String>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g.edges().map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()]).collect(),
            part_a: None,
        }
    }

    pub fn from_bipartite(g: &BipartiteGraph) -> Self {
        let mut j = GraphJson::from_graph(g.graph());
        j.part_a = Some(g.part_a().iter().map(|&v| g.graph().label(v).to_string()).collect());
        j
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        let mut g = Graph::new(self.vertices.iter().cloned())?;
        for [a, b] in &self.edges {
            g.add_edge_by_label(a, b)?;
        }
        Ok(g)
    }
}

/// Graph from JSON (text starting with `{`) or an edge list: one `u v` pair
/// per line, `#` starts a comment, a lone name adds an isolated vertex.
/// Vertices are numbered in order of first appearance.
pub fn parse_graph(text: &str) -> Result<(Graph, Option<Vec<String>>), FormatError> {
    if text.trim_start().starts_with('{') {
        let j: GraphJson = serde_json::from_str(text)?;
        return Ok((j.to_graph()?, j.part_a));
    }
    let mut names: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        let mut id = |s: &str| match names.iter().position(|n| n == s) {
            Some(p) => p,
            None => {
                names.push(s.to_string());
                names.len() - 1
            }
        };
        match toks.as_slice() {
            [] => {}
            [v] => {
                id(v);
            }
            [u, v] => {
                let (a, b) = (id(u), id(v));
                edges.push((a, b));
            }
            _ => {
                return Err(FormatError::Syntax {
                    line: i + 1,
                    msg: format!("expected `u v`, found {} fields", toks.len()),
                })
            }
        }
    }
    Ok((Graph::from_edges(names, &edges)?, None))
}

/// Parses a graph and fixes its bipartition: the listed part A when given,
/// two-colouring otherwise.
pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, FormatError> {
    let (g, part_a) = parse_graph(text)?;
    match part_a {
        Some(names) => {
            let ids = names.iter().map(|n| g.id_of(n)).collect::<Result<Vec<_>, _>>()?;
            Ok(BipartiteGraph::with_part_a(g, &ids)?)
        }
        None => Ok(detect_bipartition(&g)?),
    }
}

/// `{"elements": [...], "covers": [[lower, upper], ...]}`; any relations may
/// be listed, the closure is taken on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl PosetJson {
    pub fn from_poset(p: &Poset) -> Self {
        PosetJson {
            elements: p.labels().to_vec(),
            covers: p
                .cover_relations()
                .into_iter()
                .map(|(a, b)| [p.label(a).to_string(), p.label(b).to_string()])
                .collect(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset, FormatError> {
        let elems: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        let rels: Vec<(&str, &str)> = self.covers.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        Ok(Poset::from_labelled(&elems, &rels)?)
    }
}

pub fn parse_poset(text: &str) -> Result<Poset, FormatError> {
    let j: PosetJson = serde_json::from_str(text)?;
    j.to_poset()
}

/// Whitespace-separated vertex names; `|` marks permutation boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedWord {
    pub word: Word,
    /// Segments between `|` marks (1 when there are none).
    pub segments: Vec<Vec<VertexId>>,
}

pub fn parse_word(text: &str, g: &Graph) -> Result<ParsedWord, FormatError> {
    let mut segments: Vec<Vec<VertexId>> = vec![Vec::new()];
    for tok in text.split_whitespace() {
        for (i, piece) in tok.split('|').enumerate() {
            if i > 0 {
                segments.push(Vec::new());
            }
            if !piece.is_empty() {
                let v = g.id(piece).ok_or_else(|| FormatError::UnknownVertex(piece.to_string()))?;
                segments.last_mut().expect("non-empty").push(v);
            }
        }
    }
    segments.retain(|s| !s.is_empty());
    let word = Word::new(segments.concat());
    Ok(ParsedWord { word, segments })
}

pub fn format_word(w: &Word, g: &Graph) -> String {
    w.letters.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
}

pub fn format_perms(p: &PermSequence, g: &Graph) -> String {
    p.perms()
        .iter()
        .map(|perm| perm.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}
