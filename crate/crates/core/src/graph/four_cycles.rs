use super::{edge, Edge, Graph};
use crate::error::{Error, Result};

/// A 4-cycle in canonical form: the lexicographically least of its eight
/// rotations and reflections. Two traversals of the same edge set compare
/// equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourCycle([usize; 4]);

impl FourCycle {
    pub fn new(walk: [usize; 4]) -> Self {
        let mut best = walk;
        for start in 0..4 {
            let fwd = [walk[start], walk[(start + 1) % 4], walk[(start + 2) % 4], walk[(start + 3) % 4]];
            let back = [walk[start], walk[(start + 3) % 4], walk[(start + 2) % 4], walk[(start + 1) % 4]];
            best = best.min(fwd).min(back);
        }
        FourCycle(best)
    }

    pub fn vertices(&self) -> [usize; 4] {
        self.0
    }

    pub fn edges(&self) -> [Edge; 4] {
        let w = self.0;
        [edge(w[0], w[1]), edge(w[1], w[2]), edge(w[2], w[3]), edge(w[3], w[0])]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges().contains(&edge(u, v))
    }

    /// The traversal starting at `v`, going first to its smaller cycle
    /// neighbor. `None` if `v` is not on the cycle.
    pub fn walk_from(&self, v: usize) -> Option<[usize; 4]> {
        let p = self.0.iter().position(|&x| x == v)?;
        let w = self.0;
        let (next, prev) = (w[(p + 1) % 4], w[(p + 3) % 4]);
        let opposite = w[(p + 2) % 4];
        Some(if next <= prev {
            [v, next, opposite, prev]
        } else {
            [v, prev, opposite, next]
        })
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n_vertices() {
        return Err(Error::IndexOutOfRange {
            index: v,
            n_vertices: g.n_vertices(),
        });
    }
    Ok(())
}

/// Every 4-cycle through `v`, each reported once in canonical form, sorted.
pub fn enumerate_four_cycles_through(g: &Graph, v: usize) -> Result<Vec<FourCycle>> {
    check_vertex(g, v)?;
    let nbrs = g.adj(v);
    let mut out = Vec::new();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            // sorted-merge intersection of N(a) and N(b)
            let (na, nb) = (g.adj(a), g.adj(b));
            let (mut x, mut y) = (0, 0);
            while x < na.len() && y < nb.len() {
                match na[x].cmp(&nb[y]) {
                    std::cmp::Ordering::Less => x += 1,
                    std::cmp::Ordering::Greater => y += 1,
                    std::cmp::Ordering::Equal => {
                        let c = na[x];
                        if c != v {
                            out.push(FourCycle::new([v, a, c, b]));
                        }
                        x += 1;
                        y += 1;
                    }
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of 4-cycles through `v`, optionally restricted to those that also
/// use the edge `through` (which must be incident to `v`).
pub fn count_four_cycles_through(g: &Graph, v: usize, through: Option<Edge>) -> Result<usize> {
    check_vertex(g, v)?;
    let cycles = enumerate_four_cycles_through(g, v)?;
    match through {
        None => Ok(cycles.len()),
        Some((a, b)) => {
            if !g.has_edge(a, b) {
                return Err(Error::InvalidArgument(format!("({a}, {b}) is not an edge")));
            }
            if a != v && b != v {
                return Err(Error::InvalidArgument(format!("edge ({a}, {b}) is not incident to {v}")));
            }
            Ok(cycles.iter().filter(|c| c.contains_edge(a, b)).count())
        }
    }
}
