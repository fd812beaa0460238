//! Words over vertex ids: projection, alternation, representation checks and
//! decoding, plus structural scans of permutational representations of
//! bipartite graphs.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("vertex {0:?} does not occur in the word")]
    MissingVertex(String),
    #[error("letter {0} is not a vertex of the graph")]
    UnknownLetter(VertexId),
    #[error("permutation {index} is not a permutation of the first one's vertex set")]
    NotAPermutation { index: usize },
}

/// A finite sequence of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    pub letters: Vec<VertexId>,
}

impl Word {
    pub fn new(letters: Vec<VertexId>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Distinct letters, ascending.
    pub fn alphabet(&self) -> Vec<VertexId> {
        let set: BTreeSet<_> = self.letters.iter().copied().collect();
        set.into_iter().collect()
    }

    /// Occurrence positions of every letter `0..=max`.
    fn positions(&self) -> Vec<Vec<usize>> {
        let size = self.letters.iter().max().map_or(0, |m| m + 1);
        let mut pos = vec![Vec::new(); size];
        for (i, &x) in self.letters.iter().enumerate() {
            pos[x].push(i);
        }
        pos
    }
}

impl From<Vec<VertexId>> for Word {
    fn from(letters: Vec<VertexId>) -> Self {
        Word { letters }
    }
}

/// Concatenation of permutations of one vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermSequence {
    perms: Vec<Vec<VertexId>>,
}

impl PermSequence {
    pub fn new(perms: Vec<Vec<VertexId>>) -> Result<Self, WordError> {
        if let Some(first) = perms.first() {
            let mut base: Vec<VertexId> = first.clone();
            base.sort_unstable();
            if base.windows(2).any(|w| w[0] == w[1]) {
                return Err(WordError::NotAPermutation { index: 0 });
            }
            for (index, p) in perms.iter().enumerate().skip(1) {
                let mut s = p.clone();
                s.sort_unstable();
                if s != base {
                    return Err(WordError::NotAPermutation { index });
                }
            }
        }
        Ok(PermSequence { perms })
    }

    pub fn perms(&self) -> &[Vec<VertexId>] {
        &self.perms
    }

    pub fn into_perms(self) -> Vec<Vec<VertexId>> {
        self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    /// Vertex set, ascending.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut v = self.perms.first().cloned().unwrap_or_default();
        v.sort_unstable();
        v
    }

    pub fn flatten(&self) -> Word {
        Word::new(self.perms.concat())
    }
}

/// Subword of `w` made of the letters in `set`.
pub fn project(w: &Word, set: &[VertexId]) -> Word {
    let keep: BTreeSet<VertexId> = set.iter().copied().collect();
    Word::new(w.letters.iter().copied().filter(|x| keep.contains(x)).collect())
}

/// Whether two sorted occurrence lists interleave strictly.
fn interleaved(pu: &[usize], pv: &[usize]) -> bool {
    if pu.is_empty() || pv.is_empty() {
        return pu.len() + pv.len() <= 1;
    }
    let (first, second) = if pu[0] < pv[0] { (pu, pv) } else { (pv, pu) };
    if first.len() != second.len() && first.len() != second.len() + 1 {
        return false;
    }
    (0..second.len()).all(|i| first[i] < second[i] && first.get(i + 1).is_none_or(|&n| second[i] < n))
}

/// Whether `u` and `v` alternate in `w`.
pub fn alternates(w: &Word, u: VertexId, v: VertexId) -> bool {
    let pu: Vec<usize> = w.letters.iter().enumerate().filter(|(_, &x)| x == u).map(|(i, _)| i).collect();
    let pv: Vec<usize> = w.letters.iter().enumerate().filter(|(_, &x)| x == v).map(|(i, _)| i).collect();
    interleaved(&pu, &pv)
}

/// Outcome of [`represents`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Represents,
    /// First pair (lexicographic in ids) whose alternation disagrees with
    /// adjacency.
    Counterexample {
        u: VertexId,
        v: VertexId,
        adjacent: bool,
        projection: Word,
    },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Represents)
    }
}

/// Checks that `u ~ v` in `g` iff `u` and `v` alternate in `w`, for all pairs.
pub fn represents(w: &Word, g: &Graph) -> Result<Verdict, WordError> {
    if let Some(&bad) = w.letters.iter().find(|&&x| x >= g.n()) {
        return Err(WordError::UnknownLetter(bad));
    }
    let mut pos = w.positions();
    pos.resize(g.n(), Vec::new());
    if let Some(v) = (0..g.n()).find(|&v| pos[v].is_empty()) {
        return Err(WordError::MissingVertex(g.label(v).to_string()));
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let adjacent = g.has_edge(u, v);
            if interleaved(&pos[u], &pos[v]) != adjacent {
                return Ok(Verdict::Counterexample { u, v, adjacent, projection: project(w, &[u, v]) });
            }
        }
    }
    Ok(Verdict::Represents)
}

/// `Some(k)` if every letter occurs exactly `k` times.
pub fn is_uniform(w: &Word) -> Option<usize> {
    let counts: Vec<usize> = w.positions().into_iter().map(|p| p.len()).filter(|&c| c > 0).collect();
    match counts.first() {
        None => Some(0),
        Some(&k) if counts.iter().all(|&c| c == k) => Some(k),
        _ => None,
    }
}

/// Graph on the letters of `w`, labelled by id, with an edge for every
/// alternating pair. Vertex `i` is the `i`-th smallest letter.
pub fn decode(w: &Word) -> Graph {
    let alphabet = w.alphabet();
    let labels: Vec<String> = alphabet.iter().map(|x| x.to_string()).collect();
    decode_onto(w, &alphabet, labels)
}

/// Like [`decode`] but labels letter `x` with `labels[x]`.
pub fn decode_labelled(w: &Word, labels: &[String]) -> Graph {
    let alphabet = w.alphabet();
    let names = alphabet.iter().map(|&x| labels[x].clone()).collect();
    decode_onto(w, &alphabet, names)
}

fn decode_onto(w: &Word, alphabet: &[VertexId], labels: Vec<String>) -> Graph {
    let pos = w.positions();
    let mut g = Graph::new(labels).expect("decode labels are distinct");
    for (i, &x) in alphabet.iter().enumerate() {
        for (j, &y) in alphabet.iter().enumerate().skip(i + 1) {
            if interleaved(&pos[x], &pos[y]) {
                g.add_edge(i, j).expect("distinct vertices");
            }
        }
    }
    g
}

/// A breach of one of the structural properties every permutational
/// representation of a bipartite graph has.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaViolation {
    /// `a b c` occurs in permutation `perm` although `a, c` are both
    /// neighbors of `b`.
    BetweenNeighbors { perm: usize, a: VertexId, b: VertexId, c: VertexId },
    /// Neighbors of `a` on both sides of it in `perm`.
    SplitNeighborhood { perm: usize, a: VertexId },
    /// `a` and `c` share a neighbor, but their neighborhoods lie on opposite
    /// sides of them in `perm`.
    OppositeSides { perm: usize, a: VertexId, c: VertexId },
}

/// Scans `perms` for the three ordering properties; empty means all hold.
pub fn lemma_scan(perms: &PermSequence, g: &BipartiteGraph) -> Vec<LemmaViolation> {
    let graph = g.graph();
    let n = graph.n();
    let mut out = Vec::new();
    for (k, p) in perms.perms().iter().enumerate() {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in p.iter().enumerate() {
            pos[v] = i;
        }
        // Some(true): every neighbor is to the right
        let mut right: Vec<Option<bool>> = vec![None; n];
        for b in 0..n {
            let ns = graph.neighbors(b);
            for &a in ns {
                for &c in ns {
                    if a != c && pos[a] < pos[b] && pos[b] < pos[c] {
                        out.push(LemmaViolation::BetweenNeighbors { perm: k, a, b, c });
                    }
                }
            }
            let after = ns.iter().filter(|&&x| pos[x] > pos[b]).count();
            if after != 0 && after != ns.len() {
                out.push(LemmaViolation::SplitNeighborhood { perm: k, a: b });
            } else if !ns.is_empty() {
                right[b] = Some(after == ns.len());
            }
        }
        for a in 0..n {
            for c in a + 1..n {
                let (Some(ra), Some(rc)) = (right[a], right[c]) else {
                    continue;
                };
                let share = graph.neighbors(a).iter().any(|x| graph.neighbors(c).binary_search(x).is_ok());
                if share && ra != rc {
                    out.push(LemmaViolation::OppositeSides { perm: k, a, c });
                }
            }
        }
    }
    out
}
