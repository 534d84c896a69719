//! Isomorphism and automorphism search for small graphs.
//!
//! The search is individualization–refinement: both graphs are colored
//! jointly (degree, triangle and 4-cycle counts per vertex), the coloring is
//! refined to a stable partition, and the search branches on the smallest
//! non-singleton cell by individualizing one vertex on each side. A discrete
//! partition induces a candidate bijection that is then checked edge by edge.

use std::collections::BTreeMap;

use super::{enumerate_four_cycles_through, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`find_isomorphism`] and
/// [`automorphism_orbits`].
pub const ISO_VERTEX_CAP: usize = 64;

fn check_cap(op: &'static str, g: &Graph) -> Result<()> {
    if g.n_vertices() > ISO_VERTEX_CAP {
        return Err(Error::Capacity {
            op,
            cap: ISO_VERTEX_CAP,
            n_vertices: g.n_vertices(),
        });
    }
    Ok(())
}

/// True iff `pi` is a bijection with `(u,v) ∈ E(g1) ⇔ (pi[u],pi[v]) ∈ E(g2)`.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, pi: &[usize]) -> bool {
    let n = g1.n_vertices();
    if n != g2.n_vertices() || pi.len() != n || g1.n_edges() != g2.n_edges() {
        return false;
    }
    let mut hit = vec![false; n];
    for &p in pi {
        if p >= n || std::mem::replace(&mut hit[p], true) {
            return false;
        }
    }
    // equal edge counts plus injectivity make one direction sufficient
    g1.edges().all(|(u, v)| g2.has_edge(pi[u], pi[v]))
}

/// Some isomorphism from `g1` to `g2`, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    find_isomorphism_with(g1, g2, &[])
}

/// Like [`find_isomorphism`], but every returned bijection maps `a ↦ b` for
/// each `(a, b)` in `fixed`.
pub fn find_isomorphism_with(g1: &Graph, g2: &Graph, fixed: &[(usize, usize)]) -> Result<Option<Vec<usize>>> {
    check_cap("find_isomorphism", g1)?;
    check_cap("find_isomorphism", g2)?;
    for &(a, b) in fixed {
        if a >= g1.n_vertices() || b >= g2.n_vertices() {
            return Err(Error::IndexOutOfRange {
                index: a.max(b),
                n_vertices: g1.n_vertices().min(g2.n_vertices()),
            });
        }
    }
    if g1.n_vertices() != g2.n_vertices() || g1.n_edges() != g2.n_edges() {
        return Ok(None);
    }
    let search = Search::new(g1, g2);
    let mut colors = search.initial_colors();
    for &(a, b) in fixed {
        let fresh = next_color(&colors);
        colors[a] = fresh;
        colors[search.n + b] = fresh;
    }
    Ok(search.run(colors))
}

/// Orbit partition of `Aut(g)` on the vertices: sorted orbits, each sorted,
/// ordered by their least vertex.
pub fn automorphism_orbits(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check_cap("automorphism_orbits", g)?;
    let n = g.n_vertices();
    let search = Search::new(g, g);
    let mut root = search.initial_colors();
    if !search.refine(&mut root) {
        return Err(Error::Internal("self-refinement diverged".into()));
    }
    let mut uf = UnionFind::new(n);
    let mut representatives: Vec<usize> = Vec::new();
    for v in 0..n {
        let mut merged = false;
        for &u in &representatives {
            if uf.find(u) == uf.find(v) {
                merged = true;
                break;
            }
            if root[u] != root[v] {
                continue;
            }
            let mut colors = root.clone();
            let fresh = next_color(&colors);
            colors[u] = fresh;
            colors[n + v] = fresh;
            if let Some(pi) = search.run(colors) {
                for (x, &y) in pi.iter().enumerate() {
                    uf.union(x, y);
                }
                merged = true;
                break;
            }
        }
        if !merged {
            representatives.push(v);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        groups.entry(uf.find(v)).or_default().push(v);
    }
    let mut orbits: Vec<Vec<usize>> = groups.into_values().collect();
    orbits.sort_by_key(|o| o[0]);
    Ok(orbits)
}

fn next_color(colors: &[u32]) -> u32 {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

/// Joint coloring state over the disjoint union `g1 ⊔ g2`; indices `n..2n`
/// are the vertices of `g2`.
struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    n: usize,
    adjacency: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g1: &'a Graph, g2: &'a Graph) -> Self {
        let n = g1.n_vertices();
        let mut adjacency: Vec<Vec<usize>> = (0..n).map(|v| g1.adj(v).to_vec()).collect();
        adjacency.extend((0..n).map(|v| g2.adj(v).iter().map(|&w| w + n).collect()));
        Search { g1, g2, n, adjacency }
    }

    fn local_invariant(g: &Graph, v: usize) -> (usize, usize, usize) {
        let nbrs = g.adj(v);
        let triangles = nbrs
            .iter()
            .map(|&w| g.adj(w).iter().filter(|x| nbrs.binary_search(x).is_ok()).count())
            .sum::<usize>()
            / 2;
        let squares = enumerate_four_cycles_through(g, v).map_or(0, |c| c.len());
        (g.degree(v), triangles, squares)
    }

    fn initial_colors(&self) -> Vec<u32> {
        let keys: Vec<_> = (0..self.n)
            .map(|v| Self::local_invariant(self.g1, v))
            .chain((0..self.n).map(|v| Self::local_invariant(self.g2, v)))
            .collect();
        let mut distinct = keys.clone();
        distinct.sort_unstable();
        distinct.dedup();
        keys.iter()
            .map(|k| distinct.binary_search(k).expect("key present") as u32)
            .collect()
    }

    /// Refines to the coarsest stable partition below `colors`. Returns
    /// false when the two sides stop having matching color histograms.
    fn refine(&self, colors: &mut [u32]) -> bool {
        let mut classes = count_classes(colors);
        loop {
            let signatures: Vec<(u32, Vec<u32>)> = self
                .adjacency
                .iter()
                .enumerate()
                .map(|(x, nbrs)| {
                    let mut sig: Vec<u32> = nbrs.iter().map(|&w| colors[w]).collect();
                    sig.sort_unstable();
                    (colors[x], sig)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
            distinct.sort_unstable();
            distinct.dedup();
            for (x, sig) in signatures.iter().enumerate() {
                colors[x] = distinct.binary_search(&sig).expect("signature present") as u32;
            }
            if !self.balanced(colors) {
                return false;
            }
            if distinct.len() == classes {
                return true;
            }
            classes = distinct.len();
        }
    }

    fn balanced(&self, colors: &[u32]) -> bool {
        let k = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut diff = vec![0i64; k];
        for &c in &colors[..self.n] {
            diff[c as usize] += 1;
        }
        for &c in &colors[self.n..] {
            diff[c as usize] -= 1;
        }
        diff.iter().all(|&d| d == 0)
    }

    fn run(&self, mut colors: Vec<u32>) -> Option<Vec<usize>> {
        if !self.refine(&mut colors) {
            return None;
        }
        let k = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut size = vec![0usize; k];
        for &c in &colors[..self.n] {
            size[c as usize] += 1;
        }
        let target = (0..k).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
        match target {
            None => {
                let mut by_color = vec![usize::MAX; k];
                for v in 0..self.n {
                    by_color[colors[self.n + v] as usize] = v;
                }
                let pi: Vec<usize> = (0..self.n).map(|u| by_color[colors[u] as usize]).collect();
                is_isomorphism(self.g1, self.g2, &pi).then_some(pi)
            }
            Some(cell) => {
                let cell = cell as u32;
                let u = (0..self.n).find(|&u| colors[u] == cell)?;
                let fresh = k as u32;
                for v in (0..self.n).filter(|&v| colors[self.n + v] == cell) {
                    let mut next = colors.clone();
                    next[u] = fresh;
                    next[self.n + v] = fresh;
                    if let Some(pi) = self.run(next) {
                        return Some(pi);
                    }
                }
                None
            }
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Graph::from_edges(labels, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Graph::from_edges(labels, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn self_isomorphism_exists() {
        let g = cycle_graph(6);
        let pi = find_isomorphism(&g, &g).unwrap().unwrap();
        assert!(is_isomorphism(&g, &g, &pi));
    }

    #[test]
    fn hexagon_is_not_two_triangles() {
        let labels = (0..6).map(|i| i.to_string()).collect();
        let triangles = Graph::from_edges(labels, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(find_isomorphism(&cycle_graph(6), &triangles).unwrap(), None);
    }

    #[test]
    fn fixed_pairs_are_honored() {
        let g = cycle_graph(5);
        let pi = find_isomorphism_with(&g, &g, &[(0, 3)]).unwrap().unwrap();
        assert_eq!(pi[0], 3);
        let p = path(4);
        assert_eq!(find_isomorphism_with(&p, &p, &[(0, 1)]).unwrap(), None);
    }

    #[test]
    fn orbits_of_path_and_cycle() {
        assert_eq!(automorphism_orbits(&cycle_graph(4)).unwrap(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            automorphism_orbits(&path(5)).unwrap(),
            vec![vec![0, 4], vec![1, 3], vec![2]]
        );
    }

    #[test]
    fn capacity_is_enforced() {
        let big = cycle_graph(ISO_VERTEX_CAP + 1);
        assert!(matches!(automorphism_orbits(&big), Err(Error::Capacity { .. })));
        assert!(matches!(find_isomorphism(&big, &big), Err(Error::Capacity { .. })));
    }
}
