//! Finite posets, neighborhood posets of bipartite graphs, Dilworth chain
//! covers, realizers and dimension bounds.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{BipartiteGraph, Graph, Side, VertexId};
use crate::matching::HopcroftKarp;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("relation is not a strict order: {0:?} and {1:?} lie on a cycle")]
    Cycle(String, String),
    #[error("vertices {0:?} and {1:?} share a neighborhood")]
    NotReduced(String, String),
    #[error("invalid chain cover: {0}")]
    InvalidCover(String),
}

/// Strict partial order on elements `0..n`, stored transitively closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    lt: Vec<Vec<bool>>,
}

impl Poset {
    /// Transitive closure of `relations` (pairs `(a, b)` meaning `a < b`).
    pub fn from_relations(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = labels.len();
        let mut seen = HashMap::new();
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(PosetError::DuplicateElement(l.clone()));
            }
        }
        let mut lt = vec![vec![false; n]; n];
        for &(a, b) in relations {
            for x in [a, b] {
                if x >= n {
                    return Err(PosetError::UnknownElement(x.to_string()));
                }
            }
            lt[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if lt[i][k] {
                    let row = lt[k].clone();
                    for (j, _) in row.iter().enumerate().filter(|(_, &x)| x) {
                        lt[i][j] = true;
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| lt[i][i]) {
            let j = (0..n).find(|&j| lt[i][j] && lt[j][i]).unwrap_or(i);
            return Err(PosetError::Cycle(labels[i].clone(), labels[j].clone()));
        }
        Ok(Poset { labels, lt })
    }

    /// Elements labelled `"1".."n"`; `relations` use 0-based indices.
    pub fn numbered(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        Self::from_relations((1..=n).map(|i| i.to_string()).collect(), relations)
    }

    /// Builds from label pairs `(lower, upper)`; elements keep the given order.
    pub fn from_labelled(elements: &[&str], relations: &[(&str, &str)]) -> Result<Self, PosetError> {
        let labels: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
        let idx = |s: &str| labels.iter().position(|l| l == s).ok_or_else(|| PosetError::UnknownElement(s.to_string()));
        let rel = relations.iter().map(|&(a, b)| Ok((idx(a)?, idx(b)?))).collect::<Result<Vec<_>, PosetError>>()?;
        Self::from_relations(labels, &rel)
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Poset {
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::numbered(n, &rel).expect("a chain is acyclic")
    }

    pub fn antichain(n: usize) -> Poset {
        Self::numbered(n, &[]).expect("no relations")
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a][b]
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.lt[a][b] || self.lt[b][a]
    }

    /// All pairs `(a, b)` with `a < b`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).flat_map(|a| (0..n).filter(move |&b| self.lt[a][b]).map(move |b| (a, b))).collect()
    }

    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt[a][b] && !(0..self.n()).any(|c| self.lt[a][c] && self.lt[c][b])
    }

    /// Cover pairs `(a, b)`, lexicographic.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations().into_iter().filter(|&(a, b)| self.covers(a, b)).collect()
    }

    /// Undirected Hasse diagram.
    pub fn cover_graph(&self) -> Graph {
        let mut g = Graph::new(self.labels.clone()).expect("poset labels are unique");
        for (a, b) in self.cover_relations() {
            g.add_edge(a, b).expect("a < b implies a != b");
        }
        g
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && !self.comparable(a, b)))
    }

    pub fn is_chain(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && self.comparable(a, b)))
    }

    /// Size of a longest chain.
    pub fn height(&self) -> usize {
        let order = self.linear_order();
        let mut best = vec![1usize; self.n()];
        for (i, &b) in order.iter().enumerate() {
            for &a in &order[..i] {
                if self.lt[a][b] {
                    best[b] = best[b].max(best[a] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// Lexicographically least linear extension.
    pub fn linear_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .find(|&x| !placed[x] && (0..n).all(|y| placed[y] || !self.lt[y][x]))
                .expect("a strict order has a minimal element");
            placed[next] = true;
            out.push(next);
        }
        out
    }

    /// Subposet induced by `elements`, in the given order.
    pub fn restrict(&self, elements: &[usize]) -> Poset {
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        let lt = elements.iter().map(|&a| elements.iter().map(|&b| self.lt[a][b]).collect()).collect();
        Poset { labels, lt }
    }

    /// Lexicographically least antichain of maximum size.
    pub fn least_maximum_antichain(&self) -> Vec<usize> {
        let (w, _) = width_and_cover(self);
        let mut chosen = Vec::with_capacity(w);
        let found = self.antichain_search(0, w, &mut chosen);
        debug_assert!(found || w == 0);
        chosen
    }

    fn antichain_search(&self, start: usize, target: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == target {
            return true;
        }
        for x in start..self.n() {
            if self.n() - x < target - chosen.len() {
                break;
            }
            if chosen.iter().all(|&c| !self.comparable(c, x)) {
                chosen.push(x);
                if self.antichain_search(x + 1, target, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

/// Disjoint chains covering the ground set, each listed ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCover {
    pub chains: Vec<Vec<usize>>,
}

impl ChainCover {
    pub fn new(chains: Vec<Vec<usize>>) -> Self {
        ChainCover { chains }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Checks disjointness, coverage of `0..p.n()` and ascending chains.
    pub fn validate(&self, p: &Poset) -> Result<(), PosetError> {
        let mut hit = vec![false; p.n()];
        for chain in &self.chains {
            if chain.is_empty() {
                return Err(PosetError::InvalidCover("empty chain".into()));
            }
            for &x in chain {
                if x >= p.n() {
                    return Err(PosetError::UnknownElement(x.to_string()));
                }
                if std::mem::replace(&mut hit[x], true) {
                    return Err(PosetError::InvalidCover(format!("{:?} is covered twice", p.label(x))));
                }
            }
            if let Some(w) = chain.windows(2).find(|w| !p.lt(w[0], w[1])) {
                return Err(PosetError::InvalidCover(format!(
                    "{:?} < {:?} does not hold",
                    p.label(w[0]),
                    p.label(w[1])
                )));
            }
        }
        if let Some(x) = hit.iter().position(|h| !h) {
            return Err(PosetError::InvalidCover(format!("{:?} is not covered", p.label(x))));
        }
        Ok(())
    }
}

/// Width and a minimum chain cover. The cover is read off a maximum matching
/// of the comparability split graph; chains are seeded from their least
/// element in ascending order.
pub fn width_and_cover(p: &Poset) -> (usize, ChainCover) {
    let n = p.n();
    let mut hk = HopcroftKarp::new(n, n);
    for (a, b) in p.relations() {
        hk.add_edge(a, b);
    }
    let m = hk.max_matching();
    let mut chains = Vec::with_capacity(n - m.size);
    for start in 0..n {
        if m.right_mate[start].is_some() {
            continue;
        }
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(next) = m.left_mate[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    (n - m.size, ChainCover { chains })
}

/// Neighborhood poset of one side of a bipartite graph: `a < b` iff
/// `N(a)` is a proper subset of `N(b)`.
#[derive(Debug, Clone)]
pub struct NeighborhoodPoset {
    pub side: Side,
    pub poset: Poset,
    /// Poset element -> graph vertex.
    pub vertices: Vec<VertexId>,
}

impl NeighborhoodPoset {
    /// Graph vertex -> poset element.
    pub fn element_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Chain cover in graph vertex ids.
    pub fn cover_to_vertices(&self, cover: &ChainCover) -> Vec<Vec<VertexId>> {
        cover.chains.iter().map(|c| c.iter().map(|&e| self.vertices[e]).collect()).collect()
    }

    /// Chain cover given in graph vertex ids, validated against the poset.
    pub fn cover_from_vertices(&self, chains: &[Vec<VertexId>]) -> Result<ChainCover, PosetError> {
        let chains = chains
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&v| {
                        self.element_of(v)
                            .ok_or_else(|| PosetError::InvalidCover(format!("vertex {v} is not on side {}", self.side)))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let cover = ChainCover { chains };
        cover.validate(&self.poset)?;
        Ok(cover)
    }
}

pub(crate) fn proper_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.len() < b.len() && subset(a, b)
}

/// Subset test on ascending slices.
pub(crate) fn subset(a: &[VertexId], b: &[VertexId]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

pub fn neighborhood_poset(g: &BipartiteGraph, side: Side) -> Result<NeighborhoodPoset, PosetError> {
    let graph = g.graph();
    let vertices = g.part(side);
    if let Some((u, v)) = crate::graph::first_twin_pair(graph, vertices.iter().copied()) {
        return Err(PosetError::NotReduced(graph.label(u).into(), graph.label(v).into()));
    }
    let labels = vertices.iter().map(|&v| graph.label(v).to_string()).collect();
    let n = vertices.len();
    let mut rel = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && proper_subset(graph.neighbors(vertices[i]), graph.neighbors(vertices[j])) {
                rel.push((i, j));
            }
        }
    }
    let poset = Poset::from_relations(labels, &rel).expect("proper containment is a strict order");
    Ok(NeighborhoodPoset { side, poset, vertices })
}

/// A family of linear extensions, each a permutation of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizer {
    pub linexts: Vec<Vec<usize>>,
}

/// Whether every member is a linear extension and their intersection is
/// exactly the order of `p`.
pub fn is_realizer(p: &Poset, r: &Realizer) -> bool {
    let n = p.n();
    let mut positions = Vec::with_capacity(r.linexts.len());
    for l in &r.linexts {
        let mut pos = vec![usize::MAX; n];
        if l.len() != n {
            return false;
        }
        for (i, &x) in l.iter().enumerate() {
            if x >= n || pos[x] != usize::MAX {
                return false;
            }
            pos[x] = i;
        }
        positions.push(pos);
    }
    if positions.is_empty() {
        return n <= 1;
    }
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let everywhere = positions.iter().all(|pos| pos[a] < pos[b]);
            if p.lt(a, b) != everywhere {
                return false;
            }
        }
    }
    true
}

/// Dimension upper bounds from width and size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionBounds {
    pub size: usize,
    pub width: usize,
    pub size_minus_width: usize,
    /// `floor(n/2)`, only for `n >= 4`.
    pub half_size: Option<usize>,
    pub is_chain: bool,
    /// Antichain with at least two elements; its dimension is exactly 2.
    pub is_antichain: bool,
    /// Best applicable upper bound, at least 1.
    pub upper: usize,
}

pub fn dimension_bounds(p: &Poset) -> DimensionBounds {
    let n = p.n();
    let (width, _) = width_and_cover(p);
    let is_chain = width <= 1;
    let is_antichain = n >= 2 && width == n;
    let half_size = (n >= 4).then_some(n / 2);
    let upper = if is_chain {
        1
    } else {
        // n - w only bounds the dimension when it is at least 2
        let mut u = width.min((n - width).max(2));
        if let Some(h) = half_size {
            u = u.min(h);
        }
        u
    };
    DimensionBounds { size: n, width, size_minus_width: n - width, half_size, is_chain, is_antichain, upper }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::detect_bipartition;

    pub(crate) fn fig8() -> BipartiteGraph {
        crate::catalog::demo_graph()
    }

    fn cover_labels(p: &Poset) -> Vec<(String, String)> {
        p.cover_relations().into_iter().map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string())).collect()
    }

    fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
        let mut out: Vec<_> = v.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect();
        out.sort();
        out
    }

    #[test]
    fn fig8_neighborhood_poset_a() {
        let np = neighborhood_poset(&fig8(), Side::A).unwrap();
        let mut got = cover_labels(&np.poset);
        got.sort();
        assert_eq!(got, pairs(&[("1", "4"), ("1", "5"), ("2", "4"), ("2", "5"), ("3", "5"), ("4", "6"), ("5", "6")]));
        let (w, cover) = width_and_cover(&np.poset);
        assert_eq!(w, 3);
        assert_eq!(cover.len(), 3);
        cover.validate(&np.poset).unwrap();
    }

    #[test]
    fn fig8_neighborhood_poset_b() {
        let np = neighborhood_poset(&fig8(), Side::B).unwrap();
        let mut got = cover_labels(&np.poset);
        got.sort();
        assert_eq!(got, pairs(&[("7", "8"), ("7", "10"), ("8", "9"), ("10", "9")]));
        let eleven = np.poset.index("11").unwrap();
        assert!((0..np.poset.n()).all(|x| x == eleven || !np.poset.comparable(x, eleven)));
        assert_eq!(width_and_cover(&np.poset).0, 3);
    }

    #[test]
    fn neighborhood_poset_needs_distinct_neighborhoods() {
        let g = Graph::from_edges(["a", "b", "c"], &[(0, 2), (1, 2)]).unwrap();
        let g = detect_bipartition(&g).unwrap();
        assert_eq!(neighborhood_poset(&g, Side::A).unwrap_err(), PosetError::NotReduced("a".into(), "b".into()));
        assert!(neighborhood_poset(&g, Side::B).is_ok());
    }

    #[test]
    fn crown_side_is_an_antichain() {
        let g =
            Graph::from_edges(["a1", "a2", "a3", "b1", "b2", "b3"], &[(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)])
                .unwrap();
        let np = neighborhood_poset(&detect_bipartition(&g).unwrap(), Side::A).unwrap();
        assert!(np.poset.relations().is_empty());
        assert_eq!(width_and_cover(&np.poset).0, 3);
    }

    #[test]
    fn chain_has_width_one() {
        for n in 1..8 {
            let (w, c) = width_and_cover(&Poset::chain(n));
            assert_eq!(w, 1);
            assert_eq!(c.chains, vec![(0..n).collect::<Vec<_>>()]);
        }
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(matches!(Poset::numbered(2, &[(0, 1), (1, 0)]), Err(PosetError::Cycle(..))));
    }

    #[test]
    fn realizer_checks() {
        let chain = Poset::chain(3);
        assert!(is_realizer(&chain, &Realizer { linexts: vec![vec![0, 1, 2]] }));
        assert!(!is_realizer(&chain, &Realizer { linexts: vec![vec![1, 0, 2]] }));
        let anti = Poset::antichain(2);
        assert!(is_realizer(&anti, &Realizer { linexts: vec![vec![0, 1], vec![1, 0]] }));
        assert!(!is_realizer(&anti, &Realizer { linexts: vec![vec![0, 1]] }));
    }

    #[test]
    fn bounds() {
        let b = dimension_bounds(&Poset::antichain(4));
        assert!(b.is_antichain);
        assert_eq!((b.width, b.size_minus_width, b.upper), (4, 0, 2));
        let np = neighborhood_poset(&fig8(), Side::A).unwrap();
        let b = dimension_bounds(&np.poset);
        assert_eq!((b.width, b.size_minus_width, b.half_size, b.upper), (3, 3, Some(3), 3));
        assert_eq!(dimension_bounds(&Poset::chain(5)).upper, 1);
        // a < b, a < c: n - w = 1 is not a valid bound
        let v = Poset::numbered(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(dimension_bounds(&v).upper, 2);
    }

    #[test]
    fn least_maximum_antichain() {
        let p = Poset::numbered(5, &[(1, 0), (2, 1), (3, 1), (4, 0)]).unwrap();
        assert_eq!(p.least_maximum_antichain(), vec![2, 3, 4]);
        assert_eq!(Poset::chain(4).least_maximum_antichain(), vec![0]);
    }

    #[test]
    fn height_and_cover_graph() {
        let p = Poset::numbered(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(p.height(), 3);
        assert_eq!(p.cover_graph().edge_count(), 3);
        assert!(!p.covers(0, 2));
    }
}
