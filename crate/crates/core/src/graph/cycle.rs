use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::{edge, Edge, Graph};
use crate::error::{Error, Result};

/// A closed walk stored without repeating its first vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Self {
        Cycle(vertices)
    }

    /// Resolves a label sequence against `g`. A trailing repeat of the first
    /// label (the closed-walk notation) is dropped.
    pub fn from_labels<S: AsRef<str>>(g: &Graph, labels: &[S]) -> Result<Self> {
        let mut labels: Vec<&str> = labels.iter().map(AsRef::as_ref).collect();
        if labels.len() > 1 && labels.first() == labels.last() {
            labels.pop();
        }
        labels
            .iter()
            .map(|l| {
                g.index_of(l)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown vertex label {l:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Cycle)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive pairs including the closing one, normalized.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.0.len();
        (0..n).filter(move |_| n >= 2).map(move |i| edge(self.0[i], self.0[(i + 1) % n]))
    }

    pub fn edge_set(&self) -> HashSet<Edge> {
        self.edges().collect()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        let target = edge(u, v);
        self.edges().any(|e| e == target)
    }

    /// Same cycle rotated so that `v` comes first.
    pub fn rotated_to(&self, v: usize) -> Option<Cycle> {
        let pos = self.0.iter().position(|&x| x == v)?;
        let mut out = self.0.clone();
        out.rotate_left(pos);
        Some(Cycle(out))
    }

    /// Same cycle traversed backwards, still starting at the same vertex.
    pub fn reversed(&self) -> Cycle {
        let mut out = self.0.clone();
        if out.len() > 1 {
            out[1..].reverse();
        }
        Cycle(out)
    }

    /// Applies a vertex map to every entry.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Cycle {
        Cycle(self.0.iter().map(|&v| f(v)).collect())
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.0.iter().map(|&v| g.label(v)).collect()
    }
}

/// Why a vertex sequence fails to be a Hamiltonian cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum CycleDefect {
    WrongLength { expected: usize, found: usize },
    OutOfRange { vertex: usize },
    RepeatedVertex { vertex: usize },
    MissingEdge { from: usize, to: usize },
}

impl fmt::Display for CycleDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleDefect::WrongLength { expected, found } => {
                write!(f, "cycle has {found} vertices, graph has {expected}")
            }
            CycleDefect::OutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            CycleDefect::RepeatedVertex { vertex } => write!(f, "vertex {vertex} visited twice"),
            CycleDefect::MissingEdge { from, to } => write!(f, "{from} and {to} are not adjacent"),
        }
    }
}

/// Validates `c` as a Hamiltonian cycle of `g`, reporting the first defect.
pub fn check_hamiltonian_cycle(g: &Graph, c: &Cycle) -> std::result::Result<(), CycleDefect> {
    let n = g.n_vertices();
    let vs = c.vertices();
    if vs.len() != n || n < 3 {
        return Err(CycleDefect::WrongLength {
            expected: n,
            found: vs.len(),
        });
    }
    let mut seen = vec![false; n];
    for &v in vs {
        if v >= n {
            return Err(CycleDefect::OutOfRange { vertex: v });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(CycleDefect::RepeatedVertex { vertex: v });
        }
    }
    for i in 0..n {
        let (a, b) = (vs[i], vs[(i + 1) % n]);
        if !g.has_edge(a, b) {
            return Err(CycleDefect::MissingEdge { from: a, to: b });
        }
    }
    Ok(())
}

pub fn is_hamiltonian_cycle(g: &Graph, c: &Cycle) -> bool {
    check_hamiltonian_cycle(g, c).is_ok()
}

/// True iff the undirected edge sets of the two cycles do not meet.
pub fn are_edge_disjoint(c1: &Cycle, c2: &Cycle) -> bool {
    let first = c1.edge_set();
    c2.edges().all(|e| !first.contains(&e))
}

/// Verification record attached to every [`EdhcPair`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub lengths: [usize; 2],
    pub hamiltonian: [bool; 2],
    pub disjoint: bool,
    pub required_edges_present: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub defects: Vec<String>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.hamiltonian[0] && self.hamiltonian[1] && self.disjoint && self.required_edges_present
    }

    pub fn compute(g: &Graph, c1: &Cycle, c2: &Cycle, required_c1: &[Edge], required_c2: &[Edge]) -> Self {
        let mut defects = Vec::new();
        let mut hamiltonian = [true; 2];
        for (i, c) in [c1, c2].into_iter().enumerate() {
            if let Err(d) = check_hamiltonian_cycle(g, c) {
                hamiltonian[i] = false;
                defects.push(format!("cycle {}: {d}", i + 1));
            }
        }
        let disjoint = are_edge_disjoint(c1, c2);
        if !disjoint {
            defects.push("cycles share an edge".into());
        }
        let mut required_edges_present = true;
        for (i, (c, req)) in [(c1, required_c1), (c2, required_c2)].into_iter().enumerate() {
            let edges = c.edge_set();
            for &(u, v) in req {
                if !edges.contains(&edge(u, v)) {
                    required_edges_present = false;
                    defects.push(format!("cycle {} lacks required edge ({u}, {v})", i + 1));
                }
            }
        }
        Certificate {
            lengths: [c1.len(), c2.len()],
            hamiltonian,
            disjoint,
            required_edges_present,
            defects,
        }
    }
}

/// Two Hamiltonian cycles certified edge-disjoint in a host graph. The only
/// constructor runs the certification, so a value of this type is proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdhcPair {
    pub c1: Cycle,
    pub c2: Cycle,
    pub certificate: Certificate,
}

impl EdhcPair {
    pub fn certify(g: &Graph, c1: Cycle, c2: Cycle, required_c1: &[Edge], required_c2: &[Edge]) -> Result<Self> {
        let certificate = Certificate::compute(g, &c1, &c2, required_c1, required_c2);
        if !certificate.passed() {
            return Err(Error::Certification(certificate.defects.join("; ")));
        }
        Ok(EdhcPair { c1, c2, certificate })
    }
}
