//! Exact answers for small instances: poset dimension, permutation counts of
//! bipartite graphs, and an exhaustive sweep over width-two posets.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::families::{classify_width2, extended_crown, FamilyError, Width2Class};
use crate::format::PosetJson;
use crate::graph::{BipartiteGraph, Side};
use crate::poset::{is_realizer, width_and_cover, Poset, Realizer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is {got}, budget allows {limit}")]
    BudgetExceeded { what: &'static str, got: usize, limit: usize },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("sweep supports at most 7 elements, got {0}")]
    SweepTooLarge(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Limits on the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_elements: usize,
    /// Largest realizer size tried before giving up.
    pub max_realizer_size: usize,
    /// Linear extensions enumerated by [`dimension_by_enumeration`].
    pub max_linexts: usize,
    /// Search nodes per realizer size in [`dimension`].
    pub max_nodes: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_elements: 9, max_realizer_size: 5, max_linexts: 1_000_000, max_nodes: 20_000_000 }
    }
}

impl OracleBudget {
    /// Default budget with room for `n` elements.
    pub fn for_elements(n: usize) -> Self {
        OracleBudget { max_elements: n, ..Default::default() }
    }
}

/// Largest poset handled by the bitset kernels.
const WORD_BITS: usize = 64;

fn check_size(n: usize, budget: &OracleBudget) -> Result<(), OracleError> {
    let limit = budget.max_elements.min(WORD_BITS);
    if n > limit {
        return Err(OracleError::BudgetExceeded { what: "poset size", got: n, limit });
    }
    Ok(())
}

/// Lexicographically least linear extension of the relation given by
/// `below[x]` = bitset of elements under `x`.
fn least_extension(n: usize, below: &[u64]) -> Vec<usize> {
    let mut placed = 0u64;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = (0..n).find(|&x| placed >> x & 1 == 0 && below[x] & !placed == 0).expect("relation is acyclic");
        placed |= 1 << x;
        out.push(x);
    }
    out
}

fn below_sets(p: &Poset) -> Vec<u64> {
    (0..p.n()).map(|x| (0..p.n()).filter(|&y| p.lt(y, x)).fold(0u64, |m, y| m | 1 << y)).collect()
}

/// Ordered incomparable pairs `(a, b)` with `D(a) ⊆ D(b)` and `U(b) ⊆ U(a)`.
/// A family of linear extensions realizes `p` iff each of them has `b`
/// before `a` somewhere.
pub fn critical_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || p.comparable(a, b) {
                continue;
            }
            let down = (0..n).all(|z| !p.lt(z, a) || p.lt(z, b));
            let up = (0..n).all(|z| !p.lt(b, z) || p.lt(a, z));
            if down && up {
                out.push((a, b));
            }
        }
    }
    out
}

/// Exact dimension with a witnessing realizer.
///
/// Critical pairs are coloured so that each colour class, added to the order,
/// stays acyclic; the fewest colours is the dimension.
pub fn dimension(p: &Poset, budget: &OracleBudget) -> Result<(usize, Realizer), OracleError> {
    let n = p.n();
    check_size(n, budget)?;
    let base = below_sets(p);
    let pairs = critical_pairs(p);
    if pairs.is_empty() {
        let r = Realizer { linexts: vec![least_extension(n, &base)] };
        return Ok((1, r));
    }
    let le = |x: usize, y: usize| x == y || p.lt(x, y);
    // reversing (a, b) and (c, d) together closes the cycle b < a <= d < c <= b
    let conflict = |(a, b): (usize, usize), (c, d): (usize, usize)| le(a, d) && le(c, b);

    let mut clique: Vec<usize> = Vec::new();
    for i in 0..pairs.len() {
        if clique.iter().all(|&j| conflict(pairs[i], pairs[j])) {
            clique.push(i);
        }
    }
    let mut order = clique.clone();
    let mut rest: Vec<usize> = (0..pairs.len()).filter(|i| !clique.contains(i)).collect();
    // most constrained first
    let degree: Vec<usize> = (0..pairs.len())
        .map(|i| (0..pairs.len()).filter(|&j| j != i && conflict(pairs[i], pairs[j])).count())
        .collect();
    rest.sort_by_key(|&i| (std::cmp::Reverse(degree[i]), i));
    order.extend(rest);
    let ordered: Vec<(usize, usize)> = order.iter().map(|&i| pairs[i]).collect();

    let lower = clique.len().max(2);
    for t in lower..=budget.max_realizer_size {
        let mut search = Colouring {
            n,
            pairs: &ordered,
            fixed: clique.len(),
            below: vec![base.clone(); t],
            used: 0,
            nodes: 0,
            limit: budget.max_nodes,
        };
        match search.run(0) {
            Some(true) => {
                let linexts = search.below.iter().map(|b| least_extension(n, b)).collect();
                let r = Realizer { linexts };
                if !is_realizer(p, &r) {
                    return Err(OracleError::Internal("colouring produced a non-realizer".into()));
                }
                return Ok((t, r));
            }
            Some(false) => {}
            None => {
                return Err(OracleError::BudgetExceeded {
                    what: "search nodes",
                    got: search.nodes,
                    limit: budget.max_nodes,
                })
            }
        }
    }
    Err(OracleError::BudgetExceeded {
        what: "realizer size",
        got: budget.max_realizer_size + 1,
        limit: budget.max_realizer_size,
    })
}

struct Colouring<'a> {
    n: usize,
    pairs: &'a [(usize, usize)],
    /// Leading pairs that pairwise conflict; pair `i < fixed` gets colour `i`.
    fixed: usize,
    below: Vec<Vec<u64>>,
    used: usize,
    nodes: usize,
    limit: usize,
}

impl Colouring<'_> {
    /// `Some(found)`, or `None` when the node budget runs out.
    fn run(&mut self, i: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return None;
        }
        if i == self.pairs.len() {
            return Some(true);
        }
        let (a, b) = self.pairs[i];
        let t = self.below.len();
        let colours: Vec<usize> = if i < self.fixed { vec![i] } else { (0..t.min(self.used + 1)).collect() };
        for c in colours {
            // b < a would close a cycle
            if self.below[c][b] >> a & 1 == 1 {
                continue;
            }
            if self.below[c][a] >> b & 1 == 1 {
                // already reversed in this class, which costs nothing
                return self.descend(i, c, None);
            }
            let saved = self.below[c].clone();
            self.add(c, b, a);
            let r = self.descend(i, c, Some(saved));
            match r {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
        }
        Some(false)
    }

    fn descend(&mut self, i: usize, c: usize, saved: Option<Vec<u64>>) -> Option<bool> {
        let prev_used = self.used;
        self.used = self.used.max(c + 1);
        let r = self.run(i + 1);
        self.used = prev_used;
        if r != Some(true) {
            if let Some(s) = saved {
                self.below[c] = s;
            }
        }
        r
    }

    /// Adds `lo < hi` to class `c` and closes transitively.
    fn add(&mut self, c: usize, lo: usize, hi: usize) {
        let rel = &mut self.below[c];
        let down = rel[lo] | 1 << lo;
        for (v, r) in rel.iter_mut().enumerate().take(self.n) {
            if v == hi || *r >> hi & 1 == 1 {
                *r |= down;
            }
        }
    }
}

/// All linear extensions, in lexicographic order.
pub fn linear_extensions(p: &Poset, limit: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = p.n();
    let below = below_sets(p);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    extend_linear(n, &below, 0, &mut cur, &mut out, limit)?;
    Ok(out)
}

fn extend_linear(
    n: usize,
    below: &[u64],
    placed: u64,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<(), OracleError> {
    if cur.len() == n {
        if out.len() == limit {
            return Err(OracleError::BudgetExceeded { what: "linear extensions", got: limit + 1, limit });
        }
        out.push(cur.clone());
        return Ok(());
    }
    for x in 0..n {
        if placed >> x & 1 == 0 && below[x] & !placed == 0 {
            cur.push(x);
            extend_linear(n, below, placed | 1 << x, cur, out, limit)?;
            cur.pop();
        }
    }
    Ok(())
}

/// Dimension by listing every linear extension and trying subsets of
/// growing size. Independent of [`dimension`]; only for small posets.
pub fn dimension_by_enumeration(p: &Poset, budget: &OracleBudget) -> Result<(usize, Realizer), OracleError> {
    let n = p.n();
    check_size(n, budget)?;
    let exts = linear_extensions(p, budget.max_linexts)?;
    // index every ordered incomparable pair (x, y); an extension covers it
    // when it puts y before x
    let mut index = vec![usize::MAX; n * n];
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            if x != y && !p.comparable(x, y) {
                index[x * n + y] = count;
                count += 1;
            }
        }
    }
    if count == 0 {
        return Ok((1, Realizer { linexts: vec![exts[0].clone()] }));
    }
    let blocks = count.div_ceil(64);
    let covers: Vec<Vec<u64>> = exts
        .iter()
        .map(|l| {
            let mut bits = vec![0u64; blocks];
            for (i, &y) in l.iter().enumerate() {
                for &x in &l[i + 1..] {
                    let k = index[x * n + y];
                    if k != usize::MAX {
                        bits[k / 64] |= 1 << (k % 64);
                    }
                }
            }
            bits
        })
        .collect();
    let full: Vec<u64> =
        (0..blocks).map(|b| if (b + 1) * 64 <= count { u64::MAX } else { (1u64 << (count % 64)) - 1 }).collect();
    for t in 2..=budget.max_realizer_size {
        let mut chosen = Vec::with_capacity(t);
        if subset_search(&covers, &full, t, 0, &vec![0; blocks], &mut chosen) {
            let r = Realizer { linexts: chosen.iter().map(|&i| exts[i].clone()).collect() };
            return Ok((t, r));
        }
    }
    Err(OracleError::BudgetExceeded {
        what: "realizer size",
        got: budget.max_realizer_size + 1,
        limit: budget.max_realizer_size,
    })
}

fn subset_search(
    covers: &[Vec<u64>],
    full: &[u64],
    t: usize,
    start: usize,
    acc: &[u64],
    chosen: &mut Vec<usize>,
) -> bool {
    if acc == full {
        while chosen.len() < t {
            chosen.push(chosen[0]);
        }
        return true;
    }
    if chosen.len() == t {
        return false;
    }
    for i in start..covers.len() {
        let next: Vec<u64> = acc.iter().zip(&covers[i]).map(|(a, c)| a | c).collect();
        if next == acc {
            continue;
        }
        chosen.push(i);
        if subset_search(covers, full, t, i + 1, &next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Poset on all vertices with `a < b` for every edge from A to B.
pub fn bipartite_poset(g: &BipartiteGraph) -> Poset {
    let graph = g.graph();
    let rel: Vec<(usize, usize)> =
        graph.edges().map(|(u, v)| if g.side_of(u) == Side::A { (u, v) } else { (v, u) }).collect();
    Poset::from_relations(graph.labels().to_vec(), &rel).expect("height-two relation is a strict order")
}

/// Fewest permutations whose concatenation represents `g`: the dimension of
/// its bipartite poset.
pub fn prn_exact(g: &BipartiteGraph, budget: &OracleBudget) -> Result<(usize, Realizer), OracleError> {
    dimension(&bipartite_poset(g), budget)
}

/// Size of a largest antichain by trying every subset.
pub fn max_antichain_brute(p: &Poset) -> usize {
    let n = p.n();
    assert!(n <= 20, "brute force is exponential");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        if p.is_antichain(&members) {
            best = size;
        }
    }
    best
}

/// One poset of the sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub poset: PosetJson,
    pub class: Width2Class,
    pub predicted_prn: usize,
    pub exact_prn: usize,
}

impl SweepRecord {
    pub fn matches(&self) -> bool {
        self.predicted_prn == self.exact_prn
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub records: Vec<SweepRecord>,
}

impl SweepReport {
    pub fn mismatches(&self) -> Vec<&SweepRecord> {
        self.records.iter().filter(|r| !r.matches()).collect()
    }
}

/// Every width-two poset with at most `max_n` elements, up to isomorphism,
/// with the class-based prediction for its extended crown graph next to the
/// exact value.
pub fn sweep_width2(max_n: usize) -> Result<SweepReport, OracleError> {
    if max_n > 7 {
        return Err(OracleError::SweepTooLarge(max_n));
    }
    let posets: Vec<Poset> =
        posets_of_width_at_most_2(max_n).into_iter().filter(|p| p.n() >= 2 && width_and_cover(p).0 == 2).collect();
    let budget = OracleBudget::for_elements(2 * max_n.max(1));
    let records: Result<Vec<SweepRecord>, OracleError> = posets
        .par_iter()
        .map(|p| {
            let class = classify_width2(p)?;
            let ecg = extended_crown(p, None)?;
            let (exact, _) = prn_exact(&ecg.graph, &budget)?;
            Ok(SweepRecord {
                poset: PosetJson::from_poset(p),
                class,
                predicted_prn: class.predicted_prn(),
                exact_prn: exact,
            })
        })
        .collect();
    Ok(SweepReport { records: records? })
}

/// Canonical code of a poset: its relation matrix, rows then columns, under
/// the best relabelling that respects a refined degree signature.
type Code = Vec<bool>;

fn canonical_code(n: usize, lt: &[u64]) -> Code {
    let down = |x: usize| (0..n).filter(|&y| lt[x] >> y & 1 == 1).count();
    let up = |x: usize| (0..n).filter(|&y| lt[y] >> x & 1 == 1).count();
    let sig0: Vec<(usize, usize)> = (0..n).map(|x| (down(x), up(x))).collect();
    // own degrees, then the sorted degrees below and above
    type Signature = (usize, usize, Vec<(usize, usize)>, Vec<(usize, usize)>);
    let sig1: Vec<Signature> = (0..n)
        .map(|x| {
            let mut lower: Vec<_> = (0..n).filter(|&y| lt[x] >> y & 1 == 1).map(|y| sig0[y]).collect();
            let mut upper: Vec<_> = (0..n).filter(|&y| lt[y] >> x & 1 == 1).map(|y| sig0[y]).collect();
            lower.sort_unstable();
            upper.sort_unstable();
            (sig0[x].0, sig0[x].1, lower, upper)
        })
        .collect();
    let mut elems: Vec<usize> = (0..n).collect();
    elems.sort_by(|&x, &y| sig1[x].cmp(&sig1[y]));
    // groups of equal signature can be permuted freely
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &x in &elems {
        match groups.last_mut() {
            Some(g) if sig1[g[0]] == sig1[x] => g.push(x),
            _ => groups.push(vec![x]),
        }
    }
    let mut best: Option<Code> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    permute_groups(&groups, 0, &mut perm, &mut |order: &[usize]| {
        let code: Code = order.iter().flat_map(|&x| order.iter().map(move |&y| lt[y] >> x & 1 == 1)).collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    best.unwrap_or_default()
}

fn permute_groups(groups: &[Vec<usize>], gi: usize, perm: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if gi == groups.len() {
        visit(perm);
        return;
    }
    let mut g = groups[gi].clone();
    permutations_of(&mut g, 0, &mut |arr: &[usize]| {
        let len = perm.len();
        perm.extend_from_slice(arr);
        permute_groups(groups, gi + 1, perm, visit);
        perm.truncate(len);
    });
}

fn permutations_of(arr: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == arr.len() {
        visit(arr);
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permutations_of(arr, k + 1, visit);
        arr.swap(k, i);
    }
}

fn code_to_poset(n: usize, code: &Code) -> Poset {
    let mut rel = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if code[x * n + y] {
                rel.push((y, x));
            }
        }
    }
    Poset::numbered(n, &rel).expect("canonical codes are strict orders")
}

/// Posets of width at most two on `1..=max_n` elements, one per isomorphism
/// class, grown by adding a new maximal element above an order ideal.
pub fn posets_of_width_at_most_2(max_n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    if max_n == 0 {
        return out;
    }
    // lt[x] = bitset of elements below x
    let mut level: BTreeSet<Code> = BTreeSet::new();
    level.insert(canonical_code(1, &[0]));
    out.push(code_to_poset(1, level.first().expect("one poset")));
    for n in 1..max_n {
        let current: Vec<Code> = level.iter().cloned().collect();
        let next: BTreeSet<Code> = current
            .par_iter()
            .flat_map_iter(|code| {
                let lt: Vec<u64> =
                    (0..n).map(|x| (0..n).filter(|&y| code[x * n + y]).fold(0u64, |m, y| m | 1 << y)).collect();
                let mut found = Vec::new();
                for ideal in 0u64..(1 << n) {
                    let closed = (0..n).all(|x| ideal >> x & 1 == 0 || lt[x] & !ideal == 0);
                    if !closed {
                        continue;
                    }
                    let mut ext = lt.clone();
                    ext.push(ideal);
                    let ext_ref = &ext;
                    let rels: Vec<(usize, usize)> = (0..=n)
                        .flat_map(|x| (0..=n).filter(move |&y| ext_ref[x] >> y & 1 == 1).map(move |y| (y, x)))
                        .collect();
                    let p = Poset::numbered(n + 1, &rels).expect("adding a maximal element keeps a strict order");
                    if width_and_cover(&p).0 <= 2 {
                        found.push(canonical_code(n + 1, &ext));
                    }
                }
                found
            })
            .collect();
        out.extend(next.iter().map(|c| code_to_poset(n + 1, c)));
        level = next;
    }
    out
}
