use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use super::Graph;

/// Result of an all-sources BFS sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

/// Hop distances from `source`; unreachable vertices get `None`.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![u32::MAX; g.n_vertices()];
    let mut queue = VecDeque::new();
    sweep(g, source, &mut dist, &mut queue);
    dist.into_iter()
        .map(|d| (d != u32::MAX).then_some(d as usize))
        .collect()
}

/// Eccentricity of `source`, or `None` if some vertex is unreachable.
pub fn eccentricity(g: &Graph, source: usize) -> Option<usize> {
    let mut dist = vec![u32::MAX; g.n_vertices()];
    let mut queue = VecDeque::new();
    sweep(g, source, &mut dist, &mut queue)
}

// Returns the eccentricity; `dist` must be all u32::MAX on entry.
fn sweep(g: &Graph, source: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) -> Option<usize> {
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    let mut reached = 1usize;
    let mut far = 0u32;
    while let Some(v) = queue.pop_front() {
        let dv = dist[v];
        far = far.max(dv);
        for &w in g.adj(v) {
            if dist[w] == u32::MAX {
                dist[w] = dv + 1;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    (reached == g.n_vertices()).then_some(far as usize)
}

/// Exact diameter: maximum BFS eccentricity over all sources, swept in
/// parallel on the current rayon pool.
pub fn diameter(g: &Graph) -> Diameter {
    let n = g.n_vertices();
    if n == 0 {
        return Diameter::Finite(0);
    }
    let eccentricities: Option<Vec<usize>> = (0..n)
        .into_par_iter()
        .map_init(
            || (vec![u32::MAX; n], VecDeque::with_capacity(n)),
            |(dist, queue), s| {
                dist.fill(u32::MAX);
                sweep(g, s, dist, queue)
            },
        )
        .collect();
    match eccentricities {
        Some(e) => Diameter::Finite(e.into_iter().max().unwrap_or(0)),
        None => Diameter::Disconnected,
    }
}
