//! Undirected simple graphs with labelled vertices, plus the verification
//! machinery shared by every topology in the crate.

mod bfs;
mod cycle;
mod four_cycles;
pub mod io;
mod iso;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

pub use bfs::{bfs_distances, diameter, eccentricity, Diameter};
pub use cycle::{are_edge_disjoint, check_hamiltonian_cycle, is_hamiltonian_cycle, Certificate, Cycle, CycleDefect, EdhcPair};
pub use four_cycles::{count_four_cycles_through, enumerate_four_cycles_through, FourCycle};
pub use iso::{automorphism_orbits, find_isomorphism, find_isomorphism_with, is_isomorphism, ISO_VERTEX_CAP};

/// An undirected edge stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Normalizes an unordered vertex pair.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable undirected simple graph.
///
/// Adjacency lists are sorted; `labels` are pairwise distinct and are the
/// names used by every import/export format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<String, usize>,
}

impl Graph {
    /// Builds a graph from labels and an edge list. Repeated edges collapse
    /// into one; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange {
                    index: u.max(v),
                    n_vertices: n,
                });
            }
            if u == v {
                return Err(Error::MalformedGraph(format!("self-loop at {}", labels[u])));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Self::from_adjacency(labels, adjacency)
    }

    /// Builds a graph from per-vertex neighbor lists. Lists are sorted and
    /// deduplicated; the relation must already be symmetric.
    pub fn from_adjacency(labels: Vec<String>, mut adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if adjacency.len() != n {
            return Err(Error::MalformedGraph(format!(
                "{} labels but {} adjacency lists",
                n,
                adjacency.len()
            )));
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if let Some(&bad) = list.iter().find(|&&w| w >= n) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    n_vertices: n,
                });
            }
            if list.binary_search(&v).is_ok() {
                return Err(Error::MalformedGraph(format!("self-loop at {}", labels[v])));
            }
        }
        for (v, list) in adjacency.iter().enumerate() {
            for &w in list {
                if adjacency[w].binary_search(&v).is_err() {
                    return Err(Error::MalformedGraph(format!(
                        "asymmetric adjacency: {} -> {} without reverse",
                        labels[v], labels[w]
                    )));
                }
            }
        }
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::MalformedGraph(format!("duplicate label {label}")));
            }
        }
        Ok(Self {
            labels,
            adjacency,
            index,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Panics if `v` is out of range.
    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Checked neighborhood lookup.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or(Error::IndexOutOfRange {
                index: v,
                n_vertices: self.n_vertices(),
            })
    }

    /// Sorted neighbor list; panics if `v` is out of range.
    #[inline]
    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n_vertices() && v < self.n_vertices() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges().collect()
    }

    /// Edge set rendered through labels, for comparing graphs whose vertex
    /// numbering differs.
    pub fn labelled_edge_set(&self) -> BTreeSet<(String, String)> {
        self.edges()
            .map(|(u, v)| {
                let (a, b) = (&self.labels[u], &self.labels[v]);
                if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn degree_sum(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self` and keeps its label.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut position = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n_vertices() {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    n_vertices: self.n_vertices(),
                });
            }
            if position.insert(v, i).is_some() {
                return Err(Error::InvalidArgument(format!("vertex {v} repeated in induced set")));
            }
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|w| position.get(w).copied())
                    .collect()
            })
            .collect();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        Graph::from_adjacency(labels, adjacency)
    }

    /// Applies the vertex permutation `perm` (old index `v` becomes
    /// `perm[v]`), carrying labels along.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n_vertices();
        if perm.len() != n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let mut labels = vec![String::new(); n];
        let mut adjacency = vec![Vec::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
            adjacency[perm[v]] = self.adjacency[v].iter().map(|&w| perm[w]).collect();
        }
        Graph::from_adjacency(labels, adjacency)
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let v = members[head];
                head += 1;
                for &w in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(labels(3), [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.n_edges(), 2);
        assert_eq!(g.adj(1), &[0, 2]);
    }

    #[test]
    fn rejects_self_loop_and_bad_index() {
        assert!(matches!(
            Graph::from_edges(labels(2), [(1, 1)]),
            Err(Error::MalformedGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(labels(2), [(0, 2)]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_duplicate_labels_and_asymmetry() {
        let dup = vec!["a".to_string(), "a".to_string()];
        assert!(Graph::from_edges(dup, [(0, 1)]).is_err());
        assert!(Graph::from_adjacency(labels(2), vec![vec![1], vec![]]).is_err());
    }

    #[test]
    fn neighbors_out_of_range() {
        let g = Graph::from_edges(labels(2), [(0, 1)]).unwrap();
        assert_eq!(g.neighbors(0).unwrap(), &[1]);
        assert_eq!(
            g.neighbors(5),
            Err(Error::IndexOutOfRange {
                index: 5,
                n_vertices: 2
            })
        );
    }

    #[test]
    fn induced_and_permuted() {
        let g = Graph::from_edges(labels(4), [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h.n_edges(), 2);
        let p = g.permuted(&[1, 2, 3, 0]).unwrap();
        assert_eq!(p.labelled_edge_set(), g.labelled_edge_set());
        assert_eq!(p.label(1), "0");
        assert_eq!(g.components().len(), 1);
    }
}
