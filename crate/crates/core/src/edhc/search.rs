//! Backtracking search for two edge-disjoint Hamiltonian cycles with forced
//! edges, on graphs of at most 64 vertices.
//!
//! One Hamiltonian cycle is found by extending a path over `u64` vertex
//! masks. Candidates are tried fewest-onward-options first with random tie
//! breaks, and a move is rejected when it leaves some unvisited vertex with
//! fewer than two possible path neighbors. A pair search alternates: find
//! `C1`, then look for `C2` in the remaining edges, and restart with a new
//! random order when that fails.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{edge, is_hamiltonian_cycle, Cycle, EdhcPair, Edge, Graph};

/// Largest vertex count the search accepts.
pub const SEARCH_VERTEX_CAP: usize = 64;

const DEFAULT_NODE_LIMIT: u64 = 2_000_000;
const DEFAULT_ATTEMPTS: usize = 200;

/// Configurable pair search; [`edhc_search`] runs it with defaults.
#[derive(Debug, Clone)]
pub struct EdhcSearch<'g> {
    g: &'g Graph,
    required_c1: Vec<Edge>,
    required_c2: Vec<Edge>,
    fixed_c1: Option<Cycle>,
    seed: u64,
    node_limit: u64,
    attempts: usize,
    time_limit: Option<Duration>,
}

impl<'g> EdhcSearch<'g> {
    pub fn new(g: &'g Graph) -> Self {
        EdhcSearch {
            g,
            required_c1: Vec::new(),
            required_c2: Vec::new(),
            fixed_c1: None,
            seed: 0,
            node_limit: DEFAULT_NODE_LIMIT,
            attempts: DEFAULT_ATTEMPTS,
            time_limit: None,
        }
    }

    pub fn require_c1(mut self, edges: &[Edge]) -> Self {
        self.required_c1.extend(edges.iter().map(|&(u, v)| edge(u, v)));
        self
    }

    pub fn require_c2(mut self, edges: &[Edge]) -> Self {
        self.required_c2.extend(edges.iter().map(|&(u, v)| edge(u, v)));
        self
    }

    /// Keeps `c1` as the first cycle and only searches for its partner.
    pub fn keep_c1(mut self, c1: Cycle) -> Self {
        self.fixed_c1 = Some(c1);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Search nodes allowed for a single Hamiltonian-cycle search.
    pub fn node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = nodes.max(1);
        self
    }

    /// Number of randomized restarts.
    pub fn attempts(mut self, attempts: usize) -> Self {
        self.attempts = attempts.max(1);
        self
    }

    pub fn time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn run(&self) -> Result<Option<EdhcPair>> {
        let g = self.g;
        let n = g.n_vertices();
        if n > SEARCH_VERTEX_CAP {
            return Err(Error::Capacity {
                op: "edhc_search",
                cap: SEARCH_VERTEX_CAP,
                n_vertices: n,
            });
        }
        for &(u, v) in self.required_c1.iter().chain(&self.required_c2) {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange {
                    index: u.max(v),
                    n_vertices: n,
                });
            }
            if !g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!(
                    "required edge ({}, {}) is not in the graph",
                    g.label(u),
                    g.label(v)
                )));
            }
        }
        // two disjoint Hamiltonian cycles need 2|V| edges and degree 4
        if n < 3 || g.n_edges() < 2 * n || (0..n).any(|v| g.degree(v) < 4) {
            return Ok(None);
        }
        if self.required_c1.iter().any(|e| self.required_c2.contains(e)) {
            return Ok(None);
        }

        let full = masks(g);
        let deadline = self.time_limit.map(|t| Instant::now() + t);
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);

        if let Some(c1) = &self.fixed_c1 {
            let edges = c1.edge_set();
            if !is_hamiltonian_cycle(g, c1) || self.required_c1.iter().any(|e| !edges.contains(e)) {
                return Err(Error::InvalidArgument(
                    "kept cycle is not a Hamiltonian cycle with the required edges".into(),
                ));
            }
            let residual = remove_edges(&full, c1.edges());
            for _ in 0..self.attempts {
                if expired(deadline) {
                    break;
                }
                match hamiltonian(&residual, &self.required_c2, self.node_limit, &mut rng) {
                    Found(c2) => return self.certified(c1.clone(), c2),
                    Impossible => return Ok(None),
                    OutOfBudget => {}
                }
            }
            return Ok(None);
        }

        let without_c2_edges = remove_edges(&full, self.required_c2.iter().copied());
        for attempt in 0..self.attempts {
            if expired(deadline) {
                break;
            }
            let c1 = match hamiltonian(&without_c2_edges, &self.required_c1, self.node_limit, &mut rng) {
                Found(c) => c,
                Impossible => return Ok(None),
                OutOfBudget => continue,
            };
            let residual = remove_edges(&full, c1.edges());
            if let Found(c2) = hamiltonian(&residual, &self.required_c2, self.node_limit, &mut rng) {
                log::debug!("edhc_search: pair found on attempt {attempt}");
                return self.certified(c1, c2);
            }
        }
        Ok(None)
    }

    fn certified(&self, c1: Cycle, c2: Cycle) -> Result<Option<EdhcPair>> {
        EdhcPair::certify(self.g, c1, c2, &self.required_c1, &self.required_c2).map(Some)
    }
}

/// Two edge-disjoint Hamiltonian cycles of `g`, `C1` containing every edge
/// of `required_c1` and `C2` every edge of `required_c2`, or `None` if the
/// default search budget finds none.
pub fn edhc_search(g: &Graph, required_c1: &[Edge], required_c2: &[Edge]) -> Result<Option<EdhcPair>> {
    EdhcSearch::new(g).require_c1(required_c1).require_c2(required_c2).run()
}

fn expired(deadline: Option<Instant>) -> bool {
    deadline.is_some_and(|d| Instant::now() >= d)
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n_vertices())
        .map(|v| g.adj(v).iter().fold(0u64, |m, &w| m | bit(w)))
        .collect()
}

fn remove_edges(adj: &[u64], edges: impl IntoIterator<Item = Edge>) -> Vec<u64> {
    let mut out = adj.to_vec();
    for (u, v) in edges {
        out[u] &= !bit(v);
        out[v] &= !bit(u);
    }
    out
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

enum Outcome {
    Found(Cycle),
    /// The search space was exhausted.
    Impossible,
    OutOfBudget,
}
use Outcome::{Found, Impossible, OutOfBudget};

/// One Hamiltonian cycle of the graph given by `adj` masks, through every
/// edge of `forced`.
fn hamiltonian(adj: &[u64], forced: &[Edge], node_limit: u64, rng: &mut ChaCha8Rng) -> Outcome {
    let n = adj.len();
    let mut forced_at = vec![0u64; n];
    for &(u, v) in forced {
        if adj[u] & bit(v) == 0 {
            return Impossible;
        }
        forced_at[u] |= bit(v);
        forced_at[v] |= bit(u);
    }
    if forced_at.iter().any(|m| m.count_ones() > 2) || adj.iter().any(|m| m.count_ones() < 2) {
        return Impossible;
    }
    let start = forced
        .first()
        .map(|e| e.0)
        .unwrap_or_else(|| (0..n).min_by_key(|&v| adj[v].count_ones()).unwrap_or(0));
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut s = Walker {
        adj,
        forced: &forced_at,
        start,
        all,
        path: Vec::with_capacity(n),
        nodes: 0,
        node_limit,
        rng,
    };
    s.path.push(start);
    match s.extend(bit(start)) {
        Step::Done => Found(Cycle::new(s.path)),
        Step::Dead => Impossible,
        Step::Budget => OutOfBudget,
    }
}

enum Step {
    Done,
    Dead,
    Budget,
}

struct Walker<'a> {
    adj: &'a [u64],
    forced: &'a [u64],
    start: usize,
    all: u64,
    path: Vec<usize>,
    nodes: u64,
    node_limit: u64,
    rng: &'a mut ChaCha8Rng,
}

impl Walker<'_> {
    /// Path neighbors still available to `w` once `visited` is fixed and
    /// `end` is the current path end.
    fn options(&self, w: usize, visited: u64, end: usize) -> u32 {
        (self.adj[w] & (!visited & self.all | bit(end) | bit(self.start)) & !bit(w)).count_ones()
    }

    fn extend(&mut self, visited: u64) -> Step {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Step::Budget;
        }
        let cur = *self.path.last().expect("path starts non-empty");
        let prev = (self.path.len() >= 2).then(|| self.path[self.path.len() - 2]);
        let pending = self.forced[cur] & !prev.map_or(0, bit);

        if visited == self.all {
            let closes = self.adj[cur] & bit(self.start) != 0;
            // every forced edge at `cur` and at the start must lie on the cycle
            let cur_ok = pending & !bit(self.start) == 0;
            let second = self.path.get(1).copied().map_or(0, bit);
            let start_ok = self.forced[self.start] & !(second | bit(cur)) == 0;
            return if closes && cur_ok && start_ok { Step::Done } else { Step::Dead };
        }

        let unvisited = !visited & self.all;
        let mut candidates: Vec<usize> = if pending != 0 {
            if pending.count_ones() > 1 && prev.is_some() {
                return Step::Dead;
            }
            let w = pending.trailing_zeros() as usize;
            if unvisited & bit(w) == 0 {
                return Step::Dead;
            }
            if !self.may_enter(w, cur, visited) {
                return Step::Dead;
            }
            vec![w]
        } else {
            bits(self.adj[cur] & unvisited).filter(|&w| self.may_enter(w, cur, visited)).collect()
        };
        candidates.shuffle(&mut *self.rng);
        let next_visited = |w: usize| visited | bit(w);
        candidates.sort_by_cached_key(|&w| self.options(w, next_visited(w), w));

        for w in candidates {
            let nv = next_visited(w);
            if !self.viable(cur, w, nv) {
                continue;
            }
            self.path.push(w);
            match self.extend(nv) {
                Step::Dead => {
                    self.path.pop();
                }
                other => return other,
            }
        }
        Step::Dead
    }

    /// `w` can be entered from `cur` without breaking its forced edges.
    fn may_enter(&self, w: usize, cur: usize, visited: u64) -> bool {
        let others = self.forced[w] & !bit(cur);
        match others.count_ones() {
            0 => true,
            1 => {
                let x = others.trailing_zeros() as usize;
                // `w` must leave to `x` next, so `x` must be fresh or be the
                // start on the closing step
                visited & bit(x) == 0 || (x == self.start && (visited | bit(w)) == self.all)
            }
            _ => false,
        }
    }

    /// After `cur → w`, every unvisited neighbor of `cur` keeps two options
    /// and the start keeps one.
    fn viable(&self, cur: usize, w: usize, visited: u64) -> bool {
        let unvisited = !visited & self.all;
        if unvisited == 0 {
            return true;
        }
        if self.adj[self.start] & (unvisited | bit(w)) == 0 {
            return false;
        }
        bits(self.adj[cur] & unvisited).all(|x| self.options(x, visited, w) >= 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{hypercube, spined_cube_direct};

    fn k4_minus_edge() -> Graph {
        let labels = (0..4).map(|i| i.to_string()).collect();
        Graph::from_edges(labels, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn too_few_edges_gives_none() {
        assert_eq!(edhc_search(&k4_minus_edge(), &[], &[]).unwrap(), None);
        assert_eq!(edhc_search(&k4_minus_edge(), &[(0, 1)], &[(2, 0)]).unwrap(), None);
    }

    #[test]
    fn q4_with_forced_edges() {
        let q4 = hypercube(4).unwrap();
        // 1 = 0000, a4 = 0001, a3a4 = 0011
        let pair = edhc_search(&q4, &[(0b0000, 0b0001)], &[(0b0001, 0b0011)]).unwrap().unwrap();
        assert!(pair.certificate.passed());
        assert!(pair.c1.contains_edge(0, 1));
        assert!(pair.c2.contains_edge(1, 3));
    }

    #[test]
    fn sq4_pair_exists() {
        let g = spined_cube_direct(4).unwrap();
        assert!(edhc_search(&g, &[], &[]).unwrap().is_some());
    }

    #[test]
    fn conflicting_requirements() {
        let q4 = hypercube(4).unwrap();
        assert_eq!(edhc_search(&q4, &[(0, 1)], &[(1, 0)]).unwrap(), None);
        assert!(edhc_search(&q4, &[(0, 3)], &[]).is_err());
    }

    #[test]
    fn capacity() {
        let q7 = hypercube(7).unwrap();
        assert!(matches!(edhc_search(&q7, &[], &[]), Err(Error::Capacity { .. })));
    }

    #[test]
    fn seeds_are_reproducible() {
        let g = spined_cube_direct(5).unwrap();
        let a = EdhcSearch::new(&g).seed(7).run().unwrap().unwrap();
        let b = EdhcSearch::new(&g).seed(7).run().unwrap().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn partner_for_a_kept_cycle() {
        let g = spined_cube_direct(6).unwrap();
        let first = EdhcSearch::new(&g).seed(1).run().unwrap().unwrap();
        let pair = EdhcSearch::new(&g).keep_c1(first.c1.clone()).seed(2).run().unwrap().unwrap();
        assert_eq!(pair.c1, first.c1);
    }
}
