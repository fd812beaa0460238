//! Simple undirected graphs over dense vertex ids, bipartitions, twin
//! reduction and induced-subgraph search.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense vertex index `0..n`.
pub type VertexId = usize;

/// Default vertex cap for [`contains_induced`].
pub const INDUCED_SEARCH_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex label must be non-empty")]
    EmptyLabel,
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex id {0} out of range")]
    OutOfRange(VertexId),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not bipartite; odd cycle {0:?}")]
    OddCycle(Vec<String>),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("graph has {n} vertices, search cap is {cap}")]
    SizeLimit { n: usize, cap: usize },
}

/// Simple undirected graph. Vertex `v` carries the display name `labels[v]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
    matrix: Vec<bool>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v])).collect();
        f.debug_struct("Graph").field("vertices", &self.labels).field("edges", &edges).finish()
    }
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(GraphError::EmptyLabel);
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph { labels, index, adj: vec![Vec::new(); n], matrix: vec![false; n * n] })
    }

    /// Edgeless graph labelled `"0".."n-1"`.
    pub fn with_vertices(n: usize) -> Self {
        Graph::new((0..n).map(|i| i.to_string())).expect("numeric labels are unique")
    }

    pub fn from_edges<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(labels)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from labelled edges; vertices are numbered in order of
    /// first appearance.
    pub fn from_labelled_edges(edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let mut labels: Vec<String> = Vec::new();
        let mut seen = HashMap::new();
        let mut ids = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let mut id = |s: &str| -> VertexId {
                *seen.entry(s.to_string()).or_insert_with(|| {
                    labels.push(s.to_string());
                    labels.len() - 1
                })
            };
            let (u, v) = (id(a), id(b));
            ids.push((u, v));
        }
        Graph::from_edges(labels, &ids)
    }

    /// Vertices in the given order, edges by label.
    pub fn from_names(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(vertices.iter().copied())?;
        for &(a, b) in edges {
            g.add_edge_by_label(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::OutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::OutOfRange(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(self.labels[u].clone()));
        }
        if self.matrix[u * n + v] {
            return Ok(());
        }
        self.matrix[u * n + v] = true;
        self.matrix[v * n + u] = true;
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        let u = self.id_of(a)?;
        let v = self.id_of(b)?;
        self.add_edge(u, v)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn id_of(&self, label: &str) -> Result<VertexId, GraphError> {
        self.id(label).ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.matrix[u * self.n() + v]
    }

    /// Neighbors of `v` in ascending id order.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let labels = vertices.iter().map(|&v| self.labels[v].clone());
        let mut h = Graph::new(labels).expect("labels of a graph are unique");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j).expect("distinct indices");
                }
            }
        }
        h
    }

    /// Connected components, each sorted ascending, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Label-level equality: same vertex names and same edges between names,
    /// regardless of the id numbering.
    pub fn same_labelled(&self, other: &Graph) -> bool {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return false;
        }
        let Some(map) = self.labels.iter().map(|l| other.id(l)).collect::<Option<Vec<_>>>() else {
            return false;
        };
        self.edges().all(|(u, v)| other.has_edge(map[u], map[v]))
    }

    /// Disjoint union; labels must not collide.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let offset = self.n();
        let labels = self.labels.iter().chain(other.labels.iter()).cloned();
        let mut g = Graph::new(labels)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset)?;
        }
        Ok(g)
    }
}

/// Part of a bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// A graph together with a certified bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    side: Vec<Side>,
}

impl BipartiteGraph {
    /// Uses the given part A; everything else goes to part B. Fails if some
    /// edge does not cross.
    pub fn with_part_a(graph: Graph, part_a: &[VertexId]) -> Result<Self, GraphError> {
        let mut side = vec![Side::B; graph.n()];
        for &v in part_a {
            if v >= graph.n() {
                return Err(GraphError::OutOfRange(v));
            }
            side[v] = Side::A;
        }
        Self::with_sides(graph, side)
    }

    pub fn with_sides(graph: Graph, side: Vec<Side>) -> Result<Self, GraphError> {
        if side.len() != graph.n() {
            return Err(GraphError::InvalidBipartition(format!("{} side tags for {} vertices", side.len(), graph.n())));
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| side[u] == side[v]) {
            return Err(GraphError::InvalidBipartition(format!(
                "edge {}-{} does not cross",
                graph.label(u),
                graph.label(v)
            )));
        }
        Ok(BipartiteGraph { graph, side })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn side_of(&self, v: VertexId) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    /// Vertices of one part, ascending.
    pub fn part(&self, s: Side) -> Vec<VertexId> {
        (0..self.graph.n()).filter(|&v| self.side[v] == s).collect()
    }

    pub fn part_a(&self) -> Vec<VertexId> {
        self.part(Side::A)
    }

    pub fn part_b(&self) -> Vec<VertexId> {
        self.part(Side::B)
    }

    /// Same graph with the parts swapped.
    pub fn swapped(&self) -> BipartiteGraph {
        BipartiteGraph { graph: self.graph.clone(), side: self.side.iter().map(|s| s.opposite()).collect() }
    }

    /// Whether no two vertices share a neighborhood.
    pub fn is_reduced(&self) -> bool {
        first_twin_pair(&self.graph, 0..self.graph.n()).is_none()
    }
}

/// First pair `(u, v)`, `u < v`, among `vertices` with equal neighborhoods.
pub(crate) fn first_twin_pair(g: &Graph, vertices: impl IntoIterator<Item = VertexId>) -> Option<(VertexId, VertexId)> {
    let mut seen: HashMap<&[VertexId], VertexId> = HashMap::new();
    let mut best: Option<(VertexId, VertexId)> = None;
    for v in vertices {
        match seen.get(g.neighbors(v)) {
            Some(&u) => {
                let pair = (u.min(v), u.max(v));
                if best.is_none_or(|b| pair < b) {
                    best = Some(pair);
                }
            }
            None => {
                seen.insert(g.neighbors(v), v);
            }
        }
    }
    best
}

/// Two-colours `g`. Components are explored from their least vertex, which
/// lands in part A.
pub fn detect_bipartition(g: &Graph) -> Result<BipartiteGraph, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::A);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are coloured");
            for &v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(su.opposite());
                        parent[v] = Some(u);
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => {
                        let cycle = odd_cycle(&parent, u, v);
                        return Err(GraphError::OddCycle(cycle.into_iter().map(|x| g.label(x).to_string()).collect()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let side = side.into_iter().map(|s| s.expect("all coloured")).collect();
    BipartiteGraph::with_sides(g.clone(), side)
}

fn odd_cycle(parent: &[Option<VertexId>], u: VertexId, v: VertexId) -> Vec<VertexId> {
    let path = |mut x: VertexId| {
        let mut p = vec![x];
        while let Some(q) = parent[x] {
            p.push(q);
            x = q;
        }
        p
    };
    let pu = path(u);
    let pv = path(v);
    // both paths end at the BFS root; strip the shared tail
    let mut i = pu.len();
    let mut j = pv.len();
    while i > 1 && j > 1 && pu[i - 2] == pv[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<VertexId> = pu[..i].to_vec();
    cycle.extend(pv[..j - 1].iter().rev());
    cycle
}

/// A bipartite graph with twin classes merged.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub reduced: BipartiteGraph,
    /// Original vertex -> reduced vertex.
    pub representative: Vec<VertexId>,
    /// Reduced vertex -> original members, ascending (first is the representative).
    pub twins: Vec<Vec<VertexId>>,
}

impl Reduction {
    pub fn is_identity(&self) -> bool {
        self.twins.iter().all(|t| t.len() == 1)
    }
}

/// Merges vertices with equal neighborhoods. The least id of each class
/// represents it; reduced ids follow representative order.
pub fn reduce(g: &BipartiteGraph) -> Reduction {
    let graph = g.graph();
    let n = graph.n();
    let mut class_of: BTreeMap<&[VertexId], usize> = BTreeMap::new();
    let mut twins: Vec<Vec<VertexId>> = Vec::new();
    let mut representative = vec![0; n];
    for (v, rep) in representative.iter_mut().enumerate() {
        let c = *class_of.entry(graph.neighbors(v)).or_insert_with(|| {
            twins.push(Vec::new());
            twins.len() - 1
        });
        twins[c].push(v);
        *rep = c;
    }
    let reps: Vec<VertexId> = twins.iter().map(|t| t[0]).collect();
    let rg = graph.induced(&reps);
    let sides = reps.iter().map(|&r| g.side_of(r)).collect();
    let reduced = BipartiteGraph::with_sides(rg, sides).expect("induced subgraph stays bipartite");
    Reduction { reduced, representative, twins }
}

/// Searches for `h` as an induced subgraph of `g`. Returns the
/// lexicographically least injective map `h-vertex -> g-vertex`.
pub fn contains_induced(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<VertexId>>, GraphError> {
    if g.n() > cap {
        return Err(GraphError::SizeLimit { n: g.n(), cap });
    }
    if h.n() > g.n() {
        return Ok(None);
    }
    if h.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut map = Vec::with_capacity(h.n());
    let mut used = vec![false; g.n()];
    if extend_embedding(g, h, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn extend_embedding(g: &Graph, h: &Graph, map: &mut Vec<VertexId>, used: &mut [bool]) -> bool {
    let u = map.len();
    if u == h.n() {
        return true;
    }
    for v in 0..g.n() {
        if used[v] || g.degree(v) < h.degree(u) {
            continue;
        }
        let consistent = map.iter().enumerate().all(|(w, &x)| h.has_edge(u, w) == g.has_edge(v, x));
        if !consistent {
            continue;
        }
        map.push(v);
        used[v] = true;
        if extend_embedding(g, h, map, used) {
            return true;
        }
        used[v] = false;
        map.pop();
    }
    false
}
