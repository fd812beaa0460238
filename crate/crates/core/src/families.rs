//! Graph families: complete bipartite graphs, crowns and their variants,
//! extended crown graphs over posets, and closed-form words for the width-two
//! cases.

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{reduce, BipartiteGraph, Graph, GraphError, Side, VertexId};
use crate::poset::{width_and_cover, Poset, PosetError};
use crate::words::{represents, PermSequence, Verdict, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0:?} is not a maximum antichain")]
    NotMaximumAntichain(Vec<String>),
    #[error("poset has width {0}, expected 2")]
    WidthNot2(usize),
    #[error("poset is not of the overlapping two-chain path shape: {0}")]
    NotType2(String),
    #[error("poset is not a supported cycle: {0}")]
    NotCycle(String),
    #[error("word does not represent the extended crown graph: {0}")]
    VerificationFailed(String),
    #[error("search budget of {0} nodes exhausted")]
    SearchExhausted(usize),
}

fn labels(prefix: &str, n: usize) -> impl Iterator<Item = String> + '_ {
    (1..=n).map(move |i| format!("{prefix}{i}"))
}

fn with_a_first(labels: Vec<String>, na: usize, edges: &[(VertexId, VertexId)]) -> BipartiteGraph {
    let g = Graph::from_edges(labels, edges).expect("generated edges are valid");
    let part_a: Vec<VertexId> = (0..na).collect();
    BipartiteGraph::with_part_a(g, &part_a).expect("generated graph is bipartite")
}

/// `K_{m,n}` with parts `a1..am` and `b1..bn`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<BipartiteGraph, FamilyError> {
    if m == 0 || n == 0 {
        return Err(FamilyError::InvalidParameter("both parts need a vertex".into()));
    }
    let names: Vec<String> = labels("a", m).chain(labels("b", n)).collect();
    let edges: Vec<_> = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect();
    Ok(with_a_first(names, m, &edges))
}

/// Crown `H_{n,n}`: `a_i ~ b_j` iff `i != j`.
pub fn crown(n: usize) -> Result<BipartiteGraph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::InvalidParameter("crown needs n >= 2".into()));
    }
    Ok(crown_unchecked(n))
}

fn crown_unchecked(n: usize) -> BipartiteGraph {
    let names: Vec<String> = labels("a", n).chain(labels("b", n)).collect();
    let edges = crown_edges(n);
    with_a_first(names, n, &edges)
}

fn crown_edges(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))).collect()
}

/// Crown `H_{k,k}` with `pa` pendants `p1..` hung on `a1..` and `pb`
/// pendants `q1..` hung on `b1..`.
pub fn crown_with_pendants(k: usize, pa: usize, pb: usize) -> Result<BipartiteGraph, FamilyError> {
    if k < 2 {
        return Err(FamilyError::InvalidParameter("crown needs k >= 2".into()));
    }
    if pa > k || pb > k {
        return Err(FamilyError::InvalidParameter(format!("at most {k} pendants per side")));
    }
    // A: a1..ak q1..q_pb, B: b1..bk p1..p_pa
    let names: Vec<String> =
        labels("a", k).chain(labels("q", pb)).chain(labels("b", k)).chain(labels("p", pa)).collect();
    let na = k + pb;
    let b0 = na;
    let mut edges: Vec<_> = crown_edges(k).into_iter().map(|(a, b)| (a, b0 + (b - k))).collect();
    for i in 0..pa {
        edges.push((i, b0 + k + i));
    }
    for i in 0..pb {
        edges.push((k + i, b0 + i));
    }
    Ok(with_a_first(names, na, &edges))
}

/// Crown `H_{k,k}` plus `a0` adjacent to all of B and `b0` adjacent to all
/// of A.
pub fn crown_with_universal(k: usize) -> Result<BipartiteGraph, FamilyError> {
    if k == 0 {
        return Err(FamilyError::InvalidParameter("k >= 1".into()));
    }
    // A: a0 a1..ak, B: b0 b1..bk
    let names: Vec<String> = std::iter::once("a0".to_string())
        .chain(labels("a", k))
        .chain(std::iter::once("b0".to_string()))
        .chain(labels("b", k))
        .collect();
    let n = k + 1;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == 0 || j == 0 || i != j {
                edges.push((i, n + j));
            }
        }
    }
    Ok(with_a_first(names, n, &edges))
}

/// Bipartite graph grown from a poset around a crown on a maximum antichain.
#[derive(Debug, Clone)]
pub struct ExtendedCrown {
    pub base: Poset,
    /// Maximum antichain the crown sits on, ascending.
    pub antichain: Vec<usize>,
    /// Part A holds the poset elements (ids `0..n`), part B their primed
    /// copies (ids `n..2n`).
    pub graph: BipartiteGraph,
}

impl ExtendedCrown {
    /// Vertex id of the primed copy of element `x`.
    pub fn prime(&self, x: usize) -> VertexId {
        self.base.n() + x
    }
}

pub fn extended_crown(p: &Poset, antichain: Option<&[usize]>) -> Result<ExtendedCrown, FamilyError> {
    let n = p.n();
    if n == 0 {
        return Err(FamilyError::InvalidParameter("empty poset".into()));
    }
    let m: Vec<usize> = match antichain {
        Some(m) => {
            let mut m = m.to_vec();
            m.sort_unstable();
            m.dedup();
            let (w, _) = width_and_cover(p);
            if m.iter().any(|&x| x >= n) || m.len() != w || !p.is_antichain(&m) {
                let names = m.iter().map(|&x| p.labels().get(x).cloned().unwrap_or_else(|| x.to_string()));
                return Err(FamilyError::NotMaximumAntichain(names.collect()));
            }
            m
        }
        None => p.least_maximum_antichain(),
    };
    let mut in_m = vec![false; n];
    for &x in &m {
        in_m[x] = true;
    }
    // base neighborhoods from the crown and the matching
    let mut base: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &x in &m {
        base[x] = m.iter().copied().filter(|&y| y != x).collect();
    }
    for v in 0..n {
        if !in_m[v] {
            base[v].push(v);
        }
    }
    let names: Vec<String> = p.labels().iter().cloned().chain(p.labels().iter().map(|l| format!("{l}'"))).collect();
    let mut edges = Vec::new();
    for v in 0..n {
        for (u, targets) in base.iter().enumerate() {
            if u == v || p.lt(u, v) {
                edges.extend(targets.iter().map(|&y| (v, n + y)));
            }
        }
    }
    let graph = with_a_first(names, n, &edges);
    Ok(ExtendedCrown { base: p.clone(), antichain: m, graph })
}

/// Shape of a width-two poset, read off its cover graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Width2Class {
    DisconnectedCover,
    /// Cover graph is a path and some element is comparable to all others.
    PathType1,
    /// Cover graph is a path with no element comparable to all others.
    PathType2,
    Cycle,
    OtherConnected,
}

impl Width2Class {
    /// Permutation count of the extended crown graph: 3 exactly when the
    /// cover graph is connected and not a path.
    pub fn predicted_prn(self) -> usize {
        match self {
            Width2Class::DisconnectedCover | Width2Class::PathType1 | Width2Class::PathType2 => 2,
            Width2Class::Cycle | Width2Class::OtherConnected => 3,
        }
    }
}

impl std::fmt::Display for Width2Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Width2Class::DisconnectedCover => "disconnected_cover",
            Width2Class::PathType1 => "path_type1",
            Width2Class::PathType2 => "path_type2",
            Width2Class::Cycle => "cycle",
            Width2Class::OtherConnected => "other_connected",
        })
    }
}

pub fn classify_width2(p: &Poset) -> Result<Width2Class, FamilyError> {
    let (w, _) = width_and_cover(p);
    if w != 2 {
        return Err(FamilyError::WidthNot2(w));
    }
    let cg = p.cover_graph();
    let n = cg.n();
    if !cg.is_connected() {
        return Ok(Width2Class::DisconnectedCover);
    }
    let max_deg = (0..n).map(|v| cg.degree(v)).max().unwrap_or(0);
    if max_deg <= 2 && cg.edge_count() == n - 1 {
        let universal = (0..n).any(|x| (0..n).all(|y| x == y || p.comparable(x, y)));
        return Ok(if universal { Width2Class::PathType1 } else { Width2Class::PathType2 });
    }
    if (0..n).all(|v| cg.degree(v) == 2) {
        return Ok(Width2Class::Cycle);
    }
    Ok(Width2Class::OtherConnected)
}

/// Walks a path-shaped cover graph from its least endpoint.
fn path_order(p: &Poset) -> Vec<usize> {
    let cg = p.cover_graph();
    let n = cg.n();
    let start = (0..n).find(|&v| cg.degree(v) <= 1).expect("a path has an endpoint");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = cg.neighbors(cur).iter().find(|&&x| x != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn verify_word(ecg: &ExtendedCrown, w: &Word) -> Result<(), FamilyError> {
    let g = ecg.graph.graph();
    match represents(w, g).map_err(|e| FamilyError::VerificationFailed(e.to_string()))? {
        Verdict::Represents => Ok(()),
        Verdict::Counterexample { u, v, .. } => {
            Err(FamilyError::VerificationFailed(format!("pair ({}, {})", g.label(u), g.label(v))))
        }
    }
}

/// Primed partner of an element: its own copy, except that the two antichain
/// elements swap copies.
fn partner(ecg: &ExtendedCrown, x: usize) -> VertexId {
    match ecg.antichain.as_slice() {
        [u, v] if x == *u => ecg.prime(*v),
        [u, v] if x == *v => ecg.prime(*u),
        _ => ecg.prime(x),
    }
}

/// Two permutations for the extended crown graph of a path-shaped width-two
/// poset without a universal element.
pub fn type2_word(p: &Poset, antichain: Option<&[usize]>) -> Result<(ExtendedCrown, PermSequence), FamilyError> {
    match classify_width2(p)? {
        Width2Class::PathType2 => {}
        other => return Err(FamilyError::NotType2(format!("classified as {other}"))),
    }
    // orient the path as a_1 < ... < a_k > a_{k+1} < ... < a_n
    let mut a = path_order(p);
    if !p.lt(a[0], a[1]) {
        a.reverse();
    }
    let n = a.len();
    let k = (1..n).find(|&i| !p.lt(a[i - 1], a[i])).ok_or_else(|| FamilyError::NotType2("no descent".into()))?;
    if (k + 1..n).any(|i| !p.lt(a[i - 1], a[i])) || k + 1 >= n {
        return Err(FamilyError::NotType2("expected exactly one descent".into()));
    }
    let ecg = extended_crown(p, antichain)?;
    // a[m - 1] is a_m in the 1-based notation
    let pair = |m: usize| [a[m - 1], partner(&ecg, a[m - 1])];
    let mut p1 = Vec::with_capacity(2 * n);
    for m in (k + 2..=n).rev() {
        p1.extend(pair(m));
    }
    p1.extend([a[k], a[k - 1], partner(&ecg, a[k]), partner(&ecg, a[k - 1])]);
    for m in (1..k).rev() {
        p1.extend(pair(m));
    }
    let mut p2: Vec<VertexId> = a[..k].to_vec();
    p2.extend(a[..k].iter().map(|&x| partner(&ecg, x)));
    p2.extend(&a[k..]);
    p2.extend(a[k..].iter().map(|&x| partner(&ecg, x)));
    let perms = PermSequence::new(vec![p1, p2]).map_err(|e| FamilyError::VerificationFailed(e.to_string()))?;
    verify_word(&ecg, &perms.flatten())?;
    Ok((ecg, perms))
}

/// Node budget for the double-occurrence word search.
pub const TWO_UNIFORM_SEARCH_LIMIT: usize = 5_000_000;

/// A 2-uniform word for the extended crown graph of a width-two poset whose
/// cover graph is a cycle. Cycles with a unique minimum and maximum use a
/// closed form; the height-two cycle falls back to a small exhaustive search.
pub fn cycle_word(p: &Poset, antichain: Option<&[usize]>) -> Result<(ExtendedCrown, Word), FamilyError> {
    match classify_width2(p)? {
        Width2Class::Cycle => {}
        other => return Err(FamilyError::NotCycle(format!("classified as {other}"))),
    }
    let ecg = extended_crown(p, antichain)?;
    if p.height() == 2 {
        let w = two_uniform_word(ecg.graph.graph(), TWO_UNIFORM_SEARCH_LIMIT)?
            .ok_or_else(|| FamilyError::NotCycle("no 2-uniform word exists".into()))?;
        return Ok((ecg, w));
    }
    let n = p.n();
    let minima: Vec<usize> = (0..n).filter(|&x| (0..n).all(|y| !p.lt(y, x))).collect();
    let maxima: Vec<usize> = (0..n).filter(|&x| (0..n).all(|y| !p.lt(x, y))).collect();
    let (lo, hi) = match (minima.as_slice(), maxima.as_slice()) {
        ([lo], [hi]) => (*lo, *hi),
        _ => return Err(FamilyError::NotCycle("needs a unique minimum and maximum".into())),
    };
    // the two sides of the cycle between lo and hi
    let cg = p.cover_graph();
    let mut sides: Vec<Vec<usize>> = cg
        .neighbors(lo)
        .iter()
        .map(|&first| {
            let mut side = Vec::new();
            let (mut prev, mut cur) = (lo, first);
            while cur != hi {
                side.push(cur);
                let next = *cg.neighbors(cur).iter().find(|&&x| x != prev).expect("cycle vertices have degree 2");
                prev = cur;
                cur = next;
            }
            side
        })
        .collect();
    // longer side joins the extremes in X1; the other one is X2
    sides.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut x1 = vec![lo];
    x1.extend(&sides[0]);
    x1.push(hi);
    let x2 = sides[1].clone();
    let (r, s) = (x1.len(), x2.len());
    if s >= r {
        return Err(FamilyError::NotCycle(format!("chain lengths r={r}, s={s}")));
    }
    let in_x1 = |v: usize| x1.contains(&v);
    match ecg.antichain.as_slice() {
        [u, v] if in_x1(*u) != in_x1(*v) => {}
        _ => return Err(FamilyError::NotCycle("antichain must meet both chains".into())),
    }
    let part = |x: usize| partner(&ecg, x);
    let mut w: Vec<VertexId> = Vec::with_capacity(4 * n);
    for &a in x1.iter().rev() {
        w.extend([a, part(a)]);
    }
    w.extend(&x1[..r - 1]);
    w.extend(x2.iter().map(|&b| part(b)));
    w.push(x1[r - 1]);
    for &b in x2.iter().rev() {
        w.extend([b, part(b)]);
    }
    w.push(ecg.prime(x1[0]));
    w.extend(&x2);
    w.extend(x1[1..].iter().map(|&a| part(a)));
    let w = Word::new(w);
    verify_word(&ecg, &w)?;
    Ok((ecg, w))
}

/// Exhaustive search for a word in which every vertex occurs twice and which
/// represents `g`. Returns `Ok(None)` when none exists.
pub fn two_uniform_word(g: &Graph, node_limit: usize) -> Result<Option<Word>, FamilyError> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Word::new(Vec::new())));
    }
    let mut s = DoubleSearch {
        g,
        word: Vec::with_capacity(2 * n),
        first: vec![usize::MAX; n],
        closed: vec![false; n],
        nodes: 0,
        limit: node_limit,
    };
    // a rotation of a representing word still represents, so start with 0
    s.open(0);
    let found = s.run()?;
    Ok(found.then(|| Word::new(s.word)))
}

struct DoubleSearch<'a> {
    g: &'a Graph,
    word: Vec<VertexId>,
    first: Vec<usize>,
    closed: Vec<bool>,
    nodes: usize,
    limit: usize,
}

impl DoubleSearch<'_> {
    fn open(&mut self, v: VertexId) {
        self.first[v] = self.word.len();
        self.word.push(v);
    }

    /// Whether closing `v` now gives the right alternation with every vertex.
    fn can_close(&self, v: VertexId) -> bool {
        let mut between = vec![0u8; self.g.n()];
        for &x in &self.word[self.first[v] + 1..] {
            between[x] += 1;
        }
        (0..self.g.n()).all(|u| u == v || (between[u] == 1) == self.g.has_edge(u, v))
    }

    fn run(&mut self) -> Result<bool, FamilyError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(FamilyError::SearchExhausted(self.limit));
        }
        let n = self.g.n();
        if self.word.len() == 2 * n {
            return Ok(true);
        }
        for v in 0..n {
            if self.first[v] != usize::MAX && !self.closed[v] && self.can_close(v) {
                self.word.push(v);
                self.closed[v] = true;
                if self.run()? {
                    return Ok(true);
                }
                self.closed[v] = false;
                self.word.pop();
            }
        }
        for v in 0..n {
            if self.first[v] == usize::MAX {
                self.open(v);
                if self.run()? {
                    return Ok(true);
                }
                self.word.pop();
                self.first[v] = usize::MAX;
            }
        }
        Ok(false)
    }
}

/// Induced crown `H_{k,k}`: `a[i] ~ b[j]` iff `i != j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrownWitness {
    pub k: usize,
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
}

/// Largest induced crown, found as a largest induced matching among the
/// non-adjacent cross pairs. `k = 0` for complete bipartite graphs.
pub fn largest_induced_crown(g: &BipartiteGraph, cap: usize) -> Result<CrownWitness, GraphError> {
    let graph = g.graph();
    if graph.n() > cap {
        return Err(GraphError::SizeLimit { n: graph.n(), cap });
    }
    let a_side = g.part(Side::A);
    let b_side = g.part(Side::B);
    let pairs: Vec<(VertexId, VertexId)> = a_side
        .iter()
        .flat_map(|&a| b_side.iter().filter(move |&&b| !graph.has_edge(a, b)).map(move |&b| (a, b)))
        .collect();
    let limit = a_side.len().min(b_side.len());
    let mut search = CrownSearch { g: graph, pairs: &pairs, chosen: Vec::new(), best: Vec::new(), limit };
    search.run(0);
    let (a, b): (Vec<_>, Vec<_>) = search.best.into_iter().unzip();
    Ok(CrownWitness { k: a.len(), a, b })
}

struct CrownSearch<'a> {
    g: &'a Graph,
    pairs: &'a [(VertexId, VertexId)],
    chosen: Vec<(VertexId, VertexId)>,
    best: Vec<(VertexId, VertexId)>,
    limit: usize,
}

impl CrownSearch<'_> {
    fn run(&mut self, start: usize) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.best.len() == self.limit {
            return;
        }
        for i in start..self.pairs.len() {
            let (a, b) = self.pairs[i];
            // distinct A vertices left, including a
            let mut rest = self.pairs[i..].iter().map(|p| p.0).collect::<Vec<_>>();
            rest.dedup();
            if self.chosen.len() + rest.len() <= self.best.len() {
                return;
            }
            if self.chosen.last().is_some_and(|&(pa, _)| pa >= a) {
                continue;
            }
            let fits = self.chosen.iter().all(|&(ca, cb)| cb != b && self.g.has_edge(a, cb) && self.g.has_edge(ca, b));
            if fits {
                self.chosen.push((a, b));
                self.run(i + 1);
                self.chosen.pop();
                if self.best.len() == self.limit {
                    return;
                }
            }
        }
    }
}

/// Random connected reduced bipartite graph on at most `max_n` vertices
/// (at least 2). Parts are labelled `a*` and `b*`.
pub fn random_reduced_bipartite<R: Rng>(rng: &mut R, max_n: usize) -> BipartiteGraph {
    let max_n = max_n.max(2);
    loop {
        let n = rng.gen_range(2..=max_n);
        let na = rng.gen_range(1..n);
        let nb = n - na;
        let p: f64 = rng.gen_range(0.2..0.8);
        let names: Vec<String> = labels("a", na).chain(labels("b", nb)).collect();
        let mut edges = Vec::new();
        for i in 0..na {
            for j in 0..nb {
                if rng.gen_bool(p) {
                    edges.push((i, na + j));
                }
            }
        }
        let g = with_a_first(names, na, &edges);
        if !g.graph().is_connected() {
            continue;
        }
        let red = reduce(&g).reduced;
        if red.graph().n() >= 2 {
            return red;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::neighborhood_poset;

    fn edge_labels(g: &Graph) -> Vec<(String, String)> {
        let mut e: Vec<_> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (g.label(u).to_string(), g.label(v).to_string());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        e.sort();
        e
    }

    #[test]
    fn small_families() {
        assert_eq!(complete_bipartite(2, 3).unwrap().graph().edge_count(), 6);
        let c = crown(3).unwrap();
        assert_eq!(c.graph().edge_count(), 6);
        assert!(c.graph().is_connected());
        assert_eq!(crown(2).unwrap().graph().components().len(), 2);
        assert_eq!(crown_with_pendants(2, 0, 0).unwrap().graph().n(), 4);
        let g = crown_with_pendants(4, 2, 3).unwrap();
        assert_eq!(g.graph().n(), 13);
        assert_eq!(g.graph().degree(g.graph().id("p2").unwrap()), 1);
        let u = crown_with_universal(1).unwrap();
        assert_eq!(u.graph().edge_count(), 3);
    }

    #[test]
    fn chain_ecg() {
        // 4 < 3 < 2 < 1, crown on {1}
        let p = Poset::from_labelled(&["1", "2", "3", "4"], &[("4", "3"), ("3", "2"), ("2", "1")]).unwrap();
        let e = extended_crown(&p, Some(&[0])).unwrap();
        let expect: Vec<(String, String)> = [
            ("1", "2'"),
            ("1", "3'"),
            ("1", "4'"),
            ("2", "2'"),
            ("2", "3'"),
            ("2", "4'"),
            ("3", "3'"),
            ("3", "4'"),
            ("4", "4'"),
        ]
        .iter()
        .map(|&(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(edge_labels(e.graph.graph()), expect);
        assert_eq!(largest_induced_crown(&e.graph, 20).unwrap().k, 1);
    }

    #[test]
    fn antichain_ecg_is_crown() {
        let e = extended_crown(&Poset::antichain(4), None).unwrap();
        let c = crown(4).unwrap();
        assert_eq!(e.graph.graph().edge_count(), c.graph().edge_count());
        assert_eq!(largest_induced_crown(&e.graph, 20).unwrap().k, 4);
    }

    #[test]
    fn rejects_small_antichain() {
        let p = Poset::numbered(3, &[(0, 1)]).unwrap();
        assert!(matches!(extended_crown(&p, Some(&[0])), Err(FamilyError::NotMaximumAntichain(_))));
    }

    #[test]
    fn ecg_width_matches_poset() {
        // the width-three example whose neighborhood poset differs from it
        let p = Poset::from_labelled(&["1", "2", "3", "4", "5"], &[("2", "1"), ("3", "2"), ("4", "2"), ("5", "1")])
            .unwrap();
        let e = extended_crown(&p, None).unwrap();
        let pa = neighborhood_poset(&e.graph, Side::A).unwrap().poset;
        assert_eq!(width_and_cover(&pa).0, 3);
        assert_ne!(pa.relations().len(), p.relations().len());
    }

    #[test]
    fn classify_examples() {
        let crown4 = Poset::numbered(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(classify_width2(&crown4).unwrap(), Width2Class::Cycle);
        let two_chains = Poset::numbered(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(classify_width2(&two_chains).unwrap(), Width2Class::DisconnectedCover);
        let vee = Poset::numbered(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(classify_width2(&vee).unwrap(), Width2Class::PathType1);
        let n_shape = Poset::numbered(4, &[(0, 1), (2, 3), (2, 1)]).unwrap();
        assert_eq!(classify_width2(&n_shape).unwrap(), Width2Class::PathType2);
        assert_eq!(classify_width2(&Poset::chain(3)).unwrap_err(), FamilyError::WidthNot2(1));
    }

    #[test]
    fn type2_smallest() {
        let n_shape = Poset::numbered(4, &[(0, 1), (2, 3), (2, 1)]).unwrap();
        let (_, perms) = type2_word(&n_shape, None).unwrap();
        assert_eq!(perms.len(), 2);
        assert!(matches!(
            type2_word(&Poset::numbered(3, &[(0, 2), (1, 2)]).unwrap(), None),
            Err(FamilyError::NotType2(_))
        ));
    }

    #[test]
    fn cycle_words() {
        let diamond = Poset::numbered(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let (_, w) = cycle_word(&diamond, None).unwrap();
        assert_eq!(crate::words::is_uniform(&w), Some(2));
        let crown4 = Poset::numbered(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let (_, w) = cycle_word(&crown4, None).unwrap();
        assert_eq!(crate::words::is_uniform(&w), Some(2));
    }

    #[test]
    fn complete_has_no_crown() {
        let k = complete_bipartite(3, 3).unwrap();
        assert_eq!(largest_induced_crown(&k, 20).unwrap().k, 0);
    }

    #[test]
    fn random_graphs_are_reduced_and_connected() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let g = random_reduced_bipartite(&mut rng, 12);
            assert!(g.is_reduced());
            assert!(g.graph().is_connected());
            assert!(g.graph().n() <= 12);
        }
    }
}
