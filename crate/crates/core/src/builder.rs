//! Permutation constructions from chain covers of a neighborhood poset,
//! bound reports, twin expansion and composition of components.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;
use thiserror::Error;

use crate::catalog;
use crate::families;
use crate::graph::{
    contains_induced, first_twin_pair, reduce, BipartiteGraph, Graph, GraphError, Reduction, Side, VertexId,
    INDUCED_SEARCH_CAP,
};
use crate::poset::{neighborhood_poset, proper_subset, subset, width_and_cover, NeighborhoodPoset, PosetError};
use crate::words::{represents, PermSequence, Verdict, WordError};

/// Vertex cap for the crown search inside [`bounds_report`].
pub const CROWN_SEARCH_CAP: usize = 20;

/// Search nodes spent looking for a minimum cover that passes [`check_zeta`].
pub const ZETA_COVER_SEARCH_LIMIT: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("graph is not connected and the construction does not represent it")]
    NotConnected,
    #[error("vertices {0:?} and {1:?} have the same neighborhood; reduce the graph first")]
    NotReduced(String, String),
    #[error("side {0} has no vertices")]
    EmptySide(Side),
    #[error("chain cover has a single chain; one permutation cannot represent a non-complete graph")]
    SingleChain,
    #[error("chain cover fails the two-chain domination test on the pair ({0:?}, {1:?})")]
    ZetaViolated(String, String),
    #[error("constructed word does not represent the graph: {0}")]
    InternalVerificationFailed(String),
    #[error("twin expansion needs at least two permutations")]
    SinglePermutation,
    #[error("invalid component list: {0}")]
    InvalidComponents(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    General,
    Zeta,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::General => "general",
            Mode::Zeta => "zeta",
        })
    }
}

/// Order of the vertices inside one exclusive-neighborhood block of the
/// leading chain's permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockOrder {
    /// Ascending vertex id.
    #[default]
    Ascending,
    /// Larger neighborhoods before the ones they strictly contain, ties by id.
    Containment,
}

/// A verified permutational representation built from a chain cover.
#[derive(Debug, Clone)]
pub struct BuildResult {
    pub perms: PermSequence,
    pub mode: Mode,
    /// Side whose neighborhood poset was covered.
    pub side: Side,
    /// Chains in vertex ids, each ascending.
    pub chains: Vec<Vec<VertexId>>,
    /// Opposite-side vertices in the order they receive the indices `1..m`.
    pub relabel: Vec<VertexId>,
    /// The closing permutation. In general mode it is also `perms[0]`; in zeta
    /// mode it is only filled in on request.
    pub p0: Option<Vec<VertexId>>,
    pub kappa0: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sidecar {
    pub mode: Mode,
    pub side: Side,
    pub chains: Vec<Vec<String>>,
    pub kappa0: usize,
}

impl BuildResult {
    pub fn sidecar(&self, g: &Graph) -> Sidecar {
        Sidecar { mode: self.mode, side: self.side, chains: labelled(g, &self.chains), kappa0: self.kappa0 }
    }
}

fn labelled(g: &Graph, chains: &[Vec<VertexId>]) -> Vec<Vec<String>> {
    chains.iter().map(|c| c.iter().map(|&v| g.label(v).to_string()).collect()).collect()
}

/// Outcome of [`check_zeta`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZetaVerdict {
    Holds,
    /// First opposite-side pair, lexicographic in ids, that fails.
    Violated(VertexId, VertexId),
    /// A single chain; the test is vacuous.
    SingleChain,
}

/// Side with the narrower neighborhood poset; A on ties.
pub fn better_side(g: &BipartiteGraph) -> Result<Side, BuildError> {
    let (wa, wb) = widths(g)?;
    Ok(if wb < wa { Side::B } else { Side::A })
}

fn widths(g: &BipartiteGraph) -> Result<(usize, usize), BuildError> {
    let wa = width_and_cover(&neighborhood_poset(g, Side::A)?.poset).0;
    let wb = width_and_cover(&neighborhood_poset(g, Side::B)?.poset).0;
    Ok((wa, wb))
}

fn require_reduced(g: &BipartiteGraph) -> Result<(), BuildError> {
    let graph = g.graph();
    match first_twin_pair(graph, 0..graph.n()) {
        Some((u, v)) => Err(BuildError::NotReduced(graph.label(u).into(), graph.label(v).into())),
        None => Ok(()),
    }
}

/// Validates a cover given in vertex ids; chains may be listed in any order
/// and come back ascending.
fn normalise_cover(
    g: &BipartiteGraph,
    np: &NeighborhoodPoset,
    chains: &[Vec<VertexId>],
) -> Result<Vec<Vec<VertexId>>, BuildError> {
    let graph = g.graph();
    let sorted: Vec<Vec<VertexId>> = chains
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_by_key(|&v| (graph.degree(v), v));
            c
        })
        .collect();
    np.cover_from_vertices(&sorted)?;
    Ok(sorted)
}

fn minimum_cover(np: &NeighborhoodPoset) -> Vec<Vec<VertexId>> {
    np.cover_to_vertices(&width_and_cover(&np.poset).1)
}

/// Leading-chain segment: `T \ N(top)`, top, `N(top) \ N(prev)`, prev, ...,
/// bottom, `N(bottom)`. Each block is passed through `arrange`.
fn chain_segment(
    g: &Graph,
    chain: &[VertexId],
    opposite: &[VertexId],
    arrange: &mut dyn FnMut(&mut Vec<VertexId>),
) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(chain.len() + opposite.len());
    let top = *chain.last().expect("chains are non-empty");
    let mut block: Vec<VertexId> = opposite.iter().copied().filter(|&b| !g.has_edge(top, b)).collect();
    arrange(&mut block);
    out.extend(block);
    for idx in (0..chain.len()).rev() {
        let a = chain[idx];
        out.push(a);
        let mut block: Vec<VertexId> =
            g.neighbors(a).iter().copied().filter(|&b| idx == 0 || !g.has_edge(chain[idx - 1], b)).collect();
        arrange(&mut block);
        out.extend(block);
    }
    out
}

/// Topological order by strict neighborhood containment, supersets first,
/// smallest id among the available ones.
fn containment_order(g: &Graph, block: &mut Vec<VertexId>) {
    let n = block.len();
    let mut indeg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && proper_subset(g.neighbors(block[j]), g.neighbors(block[i])) {
                succ[i].push(j);
                indeg[j] += 1;
            }
        }
    }
    let mut heap: BinaryHeap<Reverse<(VertexId, usize)>> =
        (0..n).filter(|&i| indeg[i] == 0).map(|i| Reverse((block[i], i))).collect();
    let mut out = Vec::with_capacity(n);
    while let Some(Reverse((v, i))) = heap.pop() {
        out.push(v);
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                heap.push(Reverse((block[j], j)));
            }
        }
    }
    *block = out;
}

struct Built {
    leading: Vec<Vec<VertexId>>,
    p0: Vec<VertexId>,
    relabel: Vec<VertexId>,
}

fn assemble(g: &BipartiteGraph, side: Side, chains: &[Vec<VertexId>], order: BlockOrder) -> Built {
    let graph = g.graph();
    let opposite = g.part(side.opposite());
    let k = chains.len();

    let mut p1: Vec<VertexId> = chains[1..].concat();
    let mut first_order = |block: &mut Vec<VertexId>| match order {
        BlockOrder::Ascending => block.sort_unstable(),
        BlockOrder::Containment => {
            block.sort_unstable();
            containment_order(graph, block)
        }
    };
    p1.extend(chain_segment(graph, &chains[0], &opposite, &mut first_order));

    let relabel: Vec<VertexId> = p1.iter().copied().filter(|&v| g.side_of(v) != side).collect();
    let mut c_index = vec![usize::MAX; graph.n()];
    for (i, &b) in relabel.iter().enumerate() {
        c_index[b] = i;
    }

    let mut leading = vec![p1];
    for i in 1..k {
        let mut p: Vec<VertexId> = Vec::with_capacity(graph.n());
        for (j, c) in chains.iter().enumerate() {
            if j != i {
                p.extend(c);
            }
        }
        let mut descending = |block: &mut Vec<VertexId>| block.sort_unstable_by_key(|&b| Reverse(c_index[b]));
        p.extend(chain_segment(graph, &chains[i], &opposite, &mut descending));
        leading.push(p);
    }

    let mut p0: Vec<VertexId> = chains.iter().rev().flatten().copied().collect();
    p0.extend(relabel.iter().rev());
    Built { leading, p0, relabel }
}

fn verify(g: &BipartiteGraph, perms: &PermSequence) -> Result<(), BuildError> {
    match represents(&perms.flatten(), g.graph())? {
        Verdict::Represents => Ok(()),
        Verdict::Counterexample { .. } if !g.graph().is_connected() => Err(BuildError::NotConnected),
        Verdict::Counterexample { u, v, adjacent, projection } => {
            let graph = g.graph();
            let proj: Vec<&str> = projection.letters.iter().map(|&x| graph.label(x)).collect();
            Err(BuildError::InternalVerificationFailed(format!(
                "{} and {} ({}) project to {}",
                graph.label(u),
                graph.label(v),
                if adjacent { "adjacent" } else { "non-adjacent" },
                proj.join("")
            )))
        }
    }
}

fn prepare(
    g: &BipartiteGraph,
    side: Side,
    cover: Option<&[Vec<VertexId>]>,
) -> Result<(NeighborhoodPoset, Vec<Vec<VertexId>>, usize), BuildError> {
    require_reduced(g)?;
    if g.part(side).is_empty() {
        return Err(BuildError::EmptySide(side));
    }
    let (wa, wb) = widths(g)?;
    let np = neighborhood_poset(g, side)?;
    let chains = match cover {
        Some(c) => normalise_cover(g, &np, c)?,
        None => minimum_cover(&np),
    };
    Ok((np, chains, wa.min(wb)))
}

/// General construction: `k + 1` permutations for a `k`-chain cover of the
/// neighborhood poset of `side`, closing permutation first.
pub fn construct_general(
    g: &BipartiteGraph,
    side: Side,
    cover: Option<&[Vec<VertexId>]>,
) -> Result<BuildResult, BuildError> {
    construct_general_with(g, side, cover, BlockOrder::Ascending)
}

pub fn construct_general_with(
    g: &BipartiteGraph,
    side: Side,
    cover: Option<&[Vec<VertexId>]>,
    order: BlockOrder,
) -> Result<BuildResult, BuildError> {
    let (_, chains, kappa0) = prepare(g, side, cover)?;
    let built = assemble(g, side, &chains, order);
    let mut perms = vec![built.p0.clone()];
    perms.extend(built.leading);
    let perms = PermSequence::new(perms)?;
    verify(g, &perms)?;
    Ok(BuildResult { perms, mode: Mode::General, side, chains, relabel: built.relabel, p0: Some(built.p0), kappa0 })
}

/// Checks that every pair of opposite-side vertices dominates each other on
/// two different chains of `cover`.
pub fn check_zeta(g: &BipartiteGraph, cover: &[Vec<VertexId>], side: Side) -> Result<ZetaVerdict, BuildError> {
    let np = neighborhood_poset(g, side)?;
    let chains = normalise_cover(g, &np, cover)?;
    Ok(zeta_on(g, &chains, side))
}

fn zeta_on(g: &BipartiteGraph, chains: &[Vec<VertexId>], side: Side) -> ZetaVerdict {
    if chains.len() < 2 {
        return ZetaVerdict::SingleChain;
    }
    let graph = g.graph();
    let opposite = g.part(side.opposite());
    let mut sorted: Vec<Vec<VertexId>> = chains.to_vec();
    for c in &mut sorted {
        c.sort_unstable();
    }
    // relative neighborhoods per opposite vertex and chain
    let rel: Vec<Vec<Vec<VertexId>>> = opposite
        .iter()
        .map(|&b| sorted.iter().map(|c| c.iter().copied().filter(|&a| graph.has_edge(a, b)).collect()).collect())
        .collect();
    for x in 0..opposite.len() {
        for y in x + 1..opposite.len() {
            let fwd: Vec<bool> = (0..sorted.len()).map(|i| subset(&rel[x][i], &rel[y][i])).collect();
            let bwd: Vec<bool> = (0..sorted.len()).map(|i| subset(&rel[y][i], &rel[x][i])).collect();
            let ok = (0..sorted.len()).any(|i| fwd[i] && (0..sorted.len()).any(|j| j != i && bwd[j]));
            if !ok {
                return ZetaVerdict::Violated(opposite[x], opposite[y]);
            }
        }
    }
    ZetaVerdict::Holds
}

/// Searches the minimum chain covers of `side` for one passing
/// [`check_zeta`]. The Hopcroft–Karp cover is tried first.
pub fn find_zeta_cover(
    g: &BipartiteGraph,
    side: Side,
    node_limit: usize,
) -> Result<Option<Vec<Vec<VertexId>>>, BuildError> {
    let np = neighborhood_poset(g, side)?;
    let first = minimum_cover(&np);
    if first.len() < 2 {
        return Ok(None);
    }
    if zeta_on(g, &first, side) == ZetaVerdict::Holds {
        return Ok(Some(first));
    }
    let width = first.len();
    let order = np.poset.linear_order();
    let mut search =
        CoverSearch { g, np: &np, side, order: &order, width, chains: Vec::new(), nodes: 0, limit: node_limit };
    Ok(search.run(0))
}

struct CoverSearch<'a> {
    g: &'a BipartiteGraph,
    np: &'a NeighborhoodPoset,
    side: Side,
    order: &'a [usize],
    width: usize,
    chains: Vec<Vec<usize>>,
    nodes: usize,
    limit: usize,
}

impl CoverSearch<'_> {
    fn run(&mut self, pos: usize) -> Option<Vec<Vec<VertexId>>> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return None;
        }
        if pos == self.order.len() {
            let chains: Vec<Vec<VertexId>> =
                self.chains.iter().map(|c| c.iter().map(|&e| self.np.vertices[e]).collect()).collect();
            return (zeta_on(self.g, &chains, self.side) == ZetaVerdict::Holds).then_some(chains);
        }
        let x = self.order[pos];
        let remaining = self.order.len() - pos;
        for i in 0..self.chains.len() {
            let top = *self.chains[i].last().expect("non-empty");
            if self.np.poset.lt(top, x) {
                self.chains[i].push(x);
                if let Some(found) = self.run(pos + 1) {
                    return Some(found);
                }
                self.chains[i].pop();
            }
        }
        // open a new chain only if enough elements remain to fill the rest
        if self.chains.len() < self.width && remaining > self.width - self.chains.len() - 1 {
            self.chains.push(vec![x]);
            if let Some(found) = self.run(pos + 1) {
                return Some(found);
            }
            self.chains.pop();
        }
        None
    }
}

/// Construction with one permutation per chain. Needs a cover with at least
/// two chains passing [`check_zeta`]; when `cover` is omitted the minimum
/// covers of `side` are searched for one.
///
/// `with_p0` also builds the leading permutation of the general construction
/// and stores it in [`BuildResult::p0`]. The condition is then not required
/// and the check runs on `p0` followed by `perms`.
pub fn construct_zeta(
    g: &BipartiteGraph,
    side: Side,
    cover: Option<&[Vec<VertexId>]>,
    with_p0: bool,
) -> Result<BuildResult, BuildError> {
    let (np, chains, kappa0) = prepare(g, side, cover)?;
    // With p0 in front the word never depends on the condition, so it is
    // only enforced when the k permutations have to stand alone.
    let chains = match zeta_on(g, &chains, side) {
        ZetaVerdict::Holds => chains,
        ZetaVerdict::SingleChain => return Err(BuildError::SingleChain),
        ZetaVerdict::Violated(..) if with_p0 => chains,
        ZetaVerdict::Violated(b, b2) => {
            let alt = if cover.is_none() { find_zeta_cover(g, side, ZETA_COVER_SEARCH_LIMIT)? } else { None };
            match alt {
                Some(c) => normalise_cover(g, &np, &c)?,
                None => {
                    let graph = g.graph();
                    return Err(BuildError::ZetaViolated(graph.label(b).into(), graph.label(b2).into()));
                }
            }
        }
    };
    let built = assemble(g, side, &chains, BlockOrder::Containment);
    let perms = PermSequence::new(built.leading)?;
    if with_p0 {
        let mut all = vec![built.p0.clone()];
        all.extend(perms.perms().iter().cloned());
        verify(g, &PermSequence::new(all)?)?;
    } else {
        verify(g, &perms)?;
    }
    Ok(BuildResult {
        perms,
        mode: Mode::Zeta,
        side,
        chains,
        relabel: built.relabel,
        p0: with_p0.then_some(built.p0),
        kappa0,
    })
}

/// Replaces every reduced vertex by its twin class: ascending in the first
/// permutation, descending in the second, ascending after that.
pub fn expand_twins(
    perms: &PermSequence,
    red: &Reduction,
    original: &BipartiteGraph,
) -> Result<PermSequence, BuildError> {
    if red.is_identity() {
        let out: Vec<Vec<VertexId>> =
            perms.perms().iter().map(|p| p.iter().map(|&c| red.twins[c][0]).collect()).collect();
        return Ok(PermSequence::new(out)?);
    }
    if perms.len() < 2 {
        return Err(BuildError::SinglePermutation);
    }
    let out: Vec<Vec<VertexId>> = perms
        .perms()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut q = Vec::with_capacity(original.graph().n());
            for &c in p {
                if i == 1 {
                    q.extend(red.twins[c].iter().rev());
                } else {
                    q.extend(&red.twins[c]);
                }
            }
            q
        })
        .collect();
    let out = PermSequence::new(out)?;
    verify(original, &out)?;
    Ok(out)
}

/// Interleaves representations of the components of `g` so that vertices of
/// different components never alternate.
pub fn compose_disconnected(g: &Graph, reps: &[PermSequence]) -> Result<PermSequence, BuildError> {
    if reps.len() < 2 {
        return Err(BuildError::InvalidComponents("need at least two components".into()));
    }
    let mut seen = vec![false; g.n()];
    for r in reps {
        if r.is_empty() {
            return Err(BuildError::InvalidComponents("empty representation".into()));
        }
        for v in r.vertices() {
            if v >= g.n() {
                return Err(GraphError::OutOfRange(v).into());
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(BuildError::InvalidComponents(format!("{} appears in two components", g.label(v))));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(BuildError::InvalidComponents(format!("{} is in no component", g.label(v))));
    }
    let mut padded: Vec<Vec<Vec<VertexId>>> = reps
        .iter()
        .map(|r| {
            let mut p = r.perms().to_vec();
            if p.len() == 1 {
                p.push(p[0].clone());
            }
            p
        })
        .collect();
    padded.sort_by_key(|p| p.len());
    let mut acc = padded[0].clone();
    for next in &padded[1..] {
        acc = interleave(&acc, next);
    }
    let out = PermSequence::new(acc)?;
    match represents(&out.flatten(), g)? {
        Verdict::Represents => Ok(out),
        Verdict::Counterexample { u, v, .. } => {
            Err(BuildError::InternalVerificationFailed(format!("{} and {} after composition", g.label(u), g.label(v))))
        }
    }
}

/// `p1q1 ... p(k-1)q(k-1) qk pk q(k+1) pk ... ql pk` for `k <= l`, `k >= 2`.
fn interleave(p: &[Vec<VertexId>], q: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    let (k, l) = (p.len(), q.len());
    debug_assert!(2 <= k && k <= l);
    let mut out = Vec::with_capacity(l);
    for i in 0..k - 1 {
        out.push([p[i].as_slice(), q[i].as_slice()].concat());
    }
    for qi in &q[k - 1..] {
        out.push([qi.as_slice(), p[k - 1].as_slice()].concat());
    }
    out
}

/// Upper and lower bounds on the number of permutations needed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub kappa0: usize,
    pub w_pa: usize,
    pub w_pb: usize,
    /// Distinct neighborhoods in A and B of the input graph.
    pub alpha: usize,
    pub beta: usize,
    /// `min(|A|, |B|)` of the reduced graph.
    pub size_bound: usize,
    pub crown_lower: Option<usize>,
    pub forbidden3: bool,
    /// Name of the induced witness behind `forbidden3`.
    pub forbidden3_witness: Option<String>,
    /// Whether a minimum cover passes the domination test and builds.
    pub zeta: bool,
    pub lower: usize,
    pub upper: usize,
    pub prn: Option<usize>,
    pub verdict: String,
}

fn distinct_neighborhoods(g: &BipartiteGraph, side: Side) -> usize {
    let graph = g.graph();
    let mut ns: Vec<&[VertexId]> = g.part(side).iter().map(|&v| graph.neighbors(v)).collect();
    ns.sort_unstable();
    ns.dedup();
    ns.len()
}

fn is_complete(g: &Graph) -> bool {
    (0..g.n()).all(|u| g.degree(u) + 1 == g.n())
}

pub fn bounds_report(g: &BipartiteGraph, with_crown: bool) -> Result<BoundsReport, BuildError> {
    let red = reduce(g);
    let r = &red.reduced;
    let (w_pa, w_pb) = widths(r)?;
    let kappa0 = w_pa.min(w_pb);
    let alpha = distinct_neighborhoods(g, Side::A);
    let beta = distinct_neighborhoods(g, Side::B);
    let size_bound = r.part_a().len().min(r.part_b().len());

    let mut zeta = false;
    if kappa0 >= 2 {
        for side in [Side::A, Side::B] {
            let w = if side == Side::A { w_pa } else { w_pb };
            if w == kappa0 && construct_zeta(r, side, None, false).is_ok() {
                zeta = true;
                break;
            }
        }
    }

    let (mut crown_lower, mut forbidden3, mut forbidden3_witness) = (None, false, None);
    if with_crown {
        crown_lower = Some(families::largest_induced_crown(r, CROWN_SEARCH_CAP)?.k);
        for (name, h) in catalog::prn_three_witnesses() {
            if h.n() <= r.graph().n() && contains_induced(r.graph(), &h, INDUCED_SEARCH_CAP)?.is_some() {
                forbidden3 = true;
                forbidden3_witness = Some(name.to_string());
                break;
            }
        }
    }

    let (lower, upper) = if is_complete(g.graph()) {
        (1, 1)
    } else {
        let mut upper = (1 + kappa0).min(size_bound.max(1));
        if zeta {
            upper = upper.min(kappa0);
        }
        let upper = upper.max(2);
        let mut lower = 2.max(crown_lower.unwrap_or(0));
        if forbidden3 {
            lower = lower.max(3);
        }
        (lower, upper)
    };
    let prn = (lower == upper).then_some(lower);
    let verdict = match prn {
        Some(p) => format!("prn = {p}"),
        None if crown_lower == Some(kappa0) => format!("prn = {kappa0} or {}", kappa0 + 1),
        None => format!("{lower} <= prn <= {upper}"),
    };
    Ok(BoundsReport {
        kappa0,
        w_pa,
        w_pb,
        alpha,
        beta,
        size_bound,
        crown_lower,
        forbidden3,
        forbidden3_witness,
        zeta,
        lower,
        upper,
        prn,
        verdict,
    })
}

/// Requested construction for [`represent`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModeChoice {
    /// Zeta on either side when possible, general otherwise.
    #[default]
    Auto,
    General,
    Zeta,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RepresentOptions {
    pub mode: ModeChoice,
    /// `None` picks the narrower side.
    pub side: Option<Side>,
    /// Map the result back onto the unreduced graph.
    pub expand_twins: bool,
}

/// Representation of an arbitrary bipartite graph, reduced and split into
/// components as needed.
#[derive(Debug, Clone)]
pub struct Representation {
    /// The graph `perms` is over: the input when twins were expanded or the
    /// input was already reduced, the reduced graph otherwise.
    pub graph: BipartiteGraph,
    pub perms: PermSequence,
    /// One build per non-trivial component of the reduced graph.
    pub builds: Vec<BuildResult>,
    pub reduced: bool,
}

pub fn represent(g: &BipartiteGraph, opts: &RepresentOptions) -> Result<Representation, BuildError> {
    let red = reduce(g);
    let r = &red.reduced;
    let rg = r.graph();
    let mut builds = Vec::new();
    let perms = if is_complete(rg) {
        PermSequence::new(vec![(0..rg.n()).collect()])?
    } else {
        let comps = rg.components();
        let mut reps = Vec::with_capacity(comps.len());
        for comp in &comps {
            let sub = induced_bipartite(r, comp);
            let local = if is_complete(sub.graph()) {
                PermSequence::new(vec![(0..comp.len()).collect()])?
            } else {
                let b = build_component(&sub, opts)?;
                let p = b.perms.clone();
                builds.push(remap(b, comp));
                p
            };
            let global: Vec<Vec<VertexId>> =
                local.perms().iter().map(|p| p.iter().map(|&v| comp[v]).collect()).collect();
            reps.push(PermSequence::new(global)?);
        }
        if reps.len() == 1 {
            reps.pop().expect("one component")
        } else {
            compose_disconnected(rg, &reps)?
        }
    };

    if red.is_identity() {
        return Ok(Representation { graph: g.clone(), perms, builds, reduced: false });
    }
    if !opts.expand_twins {
        return Ok(Representation { graph: r.clone(), perms, builds, reduced: true });
    }
    let perms = if perms.len() == 1 {
        let p = perms.perms()[0].clone();
        PermSequence::new(vec![p.clone(), p])?
    } else {
        perms
    };
    let expanded = expand_twins(&perms, &red, g)?;
    Ok(Representation { graph: g.clone(), perms: expanded, builds, reduced: false })
}

fn induced_bipartite(g: &BipartiteGraph, vertices: &[VertexId]) -> BipartiteGraph {
    let sub = g.graph().induced(vertices);
    let sides = vertices.iter().map(|&v| g.side_of(v)).collect();
    BipartiteGraph::with_sides(sub, sides).expect("induced subgraph stays bipartite")
}

fn remap(mut b: BuildResult, comp: &[VertexId]) -> BuildResult {
    let map = |v: &mut VertexId| *v = comp[*v];
    b.chains.iter_mut().flatten().for_each(map);
    b.relabel.iter_mut().for_each(map);
    if let Some(p0) = b.p0.as_mut() {
        p0.iter_mut().for_each(map);
    }
    let perms = b.perms.perms().iter().map(|p| p.iter().map(|&v| comp[v]).collect()).collect();
    b.perms = PermSequence::new(perms).expect("relabelling keeps permutations");
    b
}

fn build_component(g: &BipartiteGraph, opts: &RepresentOptions) -> Result<BuildResult, BuildError> {
    let preferred = match opts.side {
        Some(s) => s,
        None => better_side(g)?,
    };
    match opts.mode {
        ModeChoice::General => construct_general(g, preferred, None),
        ModeChoice::Zeta => construct_zeta(g, preferred, None, false),
        ModeChoice::Auto => {
            let sides: Vec<Side> = match opts.side {
                Some(s) => vec![s],
                None => vec![preferred, preferred.opposite()],
            };
            let (wa, wb) = widths(g)?;
            let general = construct_general(g, preferred, None)?;
            for side in sides {
                let w = if side == Side::A { wa } else { wb };
                if w + 1 > general.perms.len() {
                    continue;
                }
                if let Ok(z) = construct_zeta(g, side, None, false) {
                    if z.perms.len() < general.perms.len() {
                        return Ok(z);
                    }
                }
            }
            Ok(general)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::graph::detect_bipartition;

    fn ids(g: &BipartiteGraph, labels: &[&[&str]]) -> Vec<Vec<VertexId>> {
        labels.iter().map(|c| c.iter().map(|l| g.graph().id(l).unwrap()).collect()).collect()
    }

    fn text(g: &Graph, p: &[VertexId]) -> String {
        p.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn table_rows_for_tree_ecg() {
        let g = ecg_tree();
        let cover = ids(&g, &[&["3", "5", "1"], &["7"]]);
        let r = construct_zeta(&g, Side::A, Some(&cover), true).unwrap();
        let gr = g.graph();
        assert_eq!(text(gr, &r.perms.perms()[0]), "7 1 2 5 4 6 3 8");
        assert_eq!(text(gr, &r.perms.perms()[1]), "3 5 1 8 6 2 7 4");
        assert_eq!(text(gr, r.p0.as_ref().unwrap()), "7 3 5 1 8 6 4 2");
    }

    #[test]
    fn general_is_one_longer() {
        let g = demo_graph();
        let cover = ids(&g, &[&["7", "8", "9"], &["10"], &["11"]]);
        let r = construct_general(&g, Side::B, Some(&cover)).unwrap();
        assert_eq!(r.perms.len(), 4);
        assert_eq!(r.p0.as_deref(), Some(r.perms.perms()[0].as_slice()));
    }

    #[test]
    fn zeta_witness_on_demo_graph() {
        let g = demo_graph();
        let cover = ids(&g, &[&["7", "8", "9"], &["10"], &["11"]]);
        let one = g.graph().id("1").unwrap();
        let six = g.graph().id("6").unwrap();
        assert_eq!(check_zeta(&g, &cover, Side::B).unwrap(), ZetaVerdict::Violated(one, six));
        let good = ids(&g, &[&["1", "4"], &["2", "5", "6"], &["3"]]);
        assert_eq!(check_zeta(&g, &good, Side::A).unwrap(), ZetaVerdict::Holds);
        assert_eq!(
            construct_zeta(&g, Side::B, Some(&cover), false).unwrap_err(),
            BuildError::ZetaViolated("1".into(), "6".into())
        );
    }

    #[test]
    fn cover_order_inside_chain_is_free() {
        let g = ecg_tree();
        let cover = ids(&g, &[&["1", "3", "5"], &["7"]]);
        let r = construct_zeta(&g, Side::A, Some(&cover), true).unwrap();
        assert_eq!(r.chains[0], ids(&g, &[&["3", "5", "1"]])[0]);
    }

    #[test]
    fn single_chain() {
        // path a-x-b-y: neighborhoods of {a, b} nest
        let g = Graph::from_edges(["a", "x", "b", "y"], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let g = detect_bipartition(&g).unwrap();
        assert_eq!(construct_zeta(&g, Side::A, None, false).unwrap_err(), BuildError::SingleChain);
        assert_eq!(construct_general(&g, Side::A, None).unwrap().perms.len(), 2);
    }

    #[test]
    fn rejects_twins() {
        let g = twin_example();
        assert!(matches!(construct_general(&g, Side::A, None), Err(BuildError::NotReduced(..))));
    }

    #[test]
    fn edge_builds_two_permutations() {
        let g = detect_bipartition(&Graph::from_edges(["a", "b"], &[(0, 1)]).unwrap()).unwrap();
        assert_eq!(construct_general(&g, Side::A, None).unwrap().perms.len(), 2);
    }

    #[test]
    fn twins_expand() {
        let g = twin_example();
        let red = reduce(&g);
        let r = construct_zeta(&red.reduced, Side::B, None, false).unwrap();
        assert_eq!(r.perms.len(), 2);
        let out = expand_twins(&r.perms, &red, &g).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out.vertices().len(), 9);
    }

    #[test]
    fn compose_pads_single_permutations() {
        let g = Graph::from_edges(["a", "b", "c"], &[(1, 2)]).unwrap();
        let a = PermSequence::new(vec![vec![0]]).unwrap();
        let bc = PermSequence::new(vec![vec![1, 2], vec![1, 2]]).unwrap();
        let out = compose_disconnected(&g, &[bc, a]).unwrap();
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn compose_rejects_overlap() {
        let g = Graph::from_edges(["a", "b"], &[]).unwrap();
        let a = PermSequence::new(vec![vec![0]]).unwrap();
        assert!(compose_disconnected(&g, &[a.clone(), a]).is_err());
    }

    #[test]
    fn bounds_on_examples() {
        let b = bounds_report(&twin_example(), true).unwrap();
        assert_eq!((b.kappa0, b.alpha.min(b.beta), b.prn), (2, 3, Some(2)));
        let b = bounds_report(&demo_graph(), true).unwrap();
        assert_eq!(b.kappa0, 3);
        let name = b.forbidden3_witness.expect("demo graph contains a forbidden subgraph");
        let (_, h) = prn_three_witnesses().into_iter().find(|(n, _)| *n == name).unwrap();
        assert!(crate::graph::contains_induced(demo_graph().graph(), &h, crate::graph::INDUCED_SEARCH_CAP)
            .unwrap()
            .is_some());
        assert_eq!(b.prn, Some(3));
    }

    #[test]
    fn represent_handles_everything() {
        let opts = RepresentOptions { expand_twins: true, ..Default::default() };
        for g in [twin_example(), demo_graph(), ecg_diamond()] {
            let r = represent(&g, &opts).unwrap();
            assert!(represents(&r.perms.flatten(), g.graph()).unwrap().is_ok());
        }
        // three isolated vertices and an edge
        let g = Graph::from_edges(["a", "b", "c", "d", "e"], &[(3, 4)]).unwrap();
        let g = detect_bipartition(&g).unwrap();
        let r = represent(&g, &opts).unwrap();
        assert!(represents(&r.perms.flatten(), g.graph()).unwrap().is_ok());
        // complete bipartite
        let g = Graph::from_edges(["a", "b", "c", "d"], &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let g = detect_bipartition(&g).unwrap();
        assert_eq!(represent(&g, &opts).unwrap().perms.len(), 2);
    }
}
