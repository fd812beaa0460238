//! Maximum bipartite matching (Hopcroft–Karp).

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

/// Bipartite graph with `left` and `right` vertex counts and adjacency from
/// the left side.
#[derive(Debug, Clone)]
pub struct HopcroftKarp {
    adj: Vec<Vec<usize>>,
    right: usize,
}

/// Result of a maximum matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub size: usize,
    /// Left vertex -> matched right vertex.
    pub left_mate: Vec<Option<usize>>,
    /// Right vertex -> matched left vertex.
    pub right_mate: Vec<Option<usize>>,
}

impl HopcroftKarp {
    pub fn new(left: usize, right: usize) -> Self {
        HopcroftKarp { adj: vec![Vec::new(); left], right }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(v < self.right);
        self.adj[u].push(v);
    }

    pub fn max_matching(&self) -> Matching {
        let left = self.adj.len();
        let mut mate_l = vec![NIL; left];
        let mut mate_r = vec![NIL; self.right];
        let mut dist = vec![0usize; left];
        let mut size = 0;
        while self.bfs(&mate_l, &mate_r, &mut dist) {
            for u in 0..left {
                if mate_l[u] == NIL && self.dfs(u, &mut mate_l, &mut mate_r, &mut dist) {
                    size += 1;
                }
            }
        }
        let wrap = |m: Vec<usize>| m.into_iter().map(|x| (x != NIL).then_some(x)).collect();
        Matching { size, left_mate: wrap(mate_l), right_mate: wrap(mate_r) }
    }

    fn bfs(&self, mate_l: &[usize], mate_r: &[usize], dist: &mut [usize]) -> bool {
        let mut queue = VecDeque::new();
        for (u, d) in dist.iter_mut().enumerate() {
            if mate_l[u] == NIL {
                *d = 0;
                queue.push_back(u);
            } else {
                *d = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                let w = mate_r[v];
                if w == NIL {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        found
    }

    fn dfs(&self, u: usize, mate_l: &mut [usize], mate_r: &mut [usize], dist: &mut [usize]) -> bool {
        for &v in &self.adj[u] {
            let w = mate_r[v];
            if w == NIL || (dist[w] == dist[u] + 1 && self.dfs(w, mate_l, mate_r, dist)) {
                mate_l[u] = v;
                mate_r[v] = u;
                return true;
            }
        }
        dist[u] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_matching() {
        let mut hk = HopcroftKarp::new(4, 4);
        for (u, v) in [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)] {
            hk.add_edge(u, v);
        }
        assert_eq!(hk.max_matching().size, 4);
    }

    #[test]
    fn needs_augmenting_path() {
        let mut hk = HopcroftKarp::new(3, 3);
        for (u, v) in [(0, 0), (0, 1), (1, 0), (2, 1), (2, 2)] {
            hk.add_edge(u, v);
        }
        let m = hk.max_matching();
        assert_eq!(m.size, 3);
        for (u, v) in m.left_mate.iter().enumerate() {
            let v = v.unwrap();
            assert_eq!(m.right_mate[v], Some(u));
        }
    }

    #[test]
    fn empty() {
        assert_eq!(HopcroftKarp::new(0, 0).max_matching().size, 0);
        assert_eq!(HopcroftKarp::new(3, 2).max_matching().size, 0);
    }

    // König: matching size equals the brute-force maximum on small graphs
    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (l, r) = (rng.gen_range(1..5), rng.gen_range(1..5));
            let mut hk = HopcroftKarp::new(l, r);
            let mut edges = Vec::new();
            for u in 0..l {
                for v in 0..r {
                    if rng.gen_bool(0.4) {
                        hk.add_edge(u, v);
                        edges.push((u, v));
                    }
                }
            }
            let mut best = 0;
            for mask in 0u32..(1 << edges.len()) {
                let chosen: Vec<_> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                let ok =
                    chosen.iter().enumerate().all(|(i, a)| chosen[i + 1..].iter().all(|b| a.0 != b.0 && a.1 != b.1));
                if ok {
                    best = best.max(chosen.len());
                }
            }
            assert_eq!(hk.max_matching().size, best);
        }
    }
}
