//! `SQ_n` (`n ≥ 6`) as eight vertex-disjoint copies of `Q_{n-3}` joined by
//! three perfect matchings.
//!
//! Each part `i` of `Γ_n` splits into the two cosets of `H^{i1}`; the
//! classes are the preimages of those cosets under `φ`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{hypercube, spined_cube_direct, SpinedType};
use crate::error::{require_dimension, Result};
use crate::graph::{edge, find_isomorphism, Edge, Graph};
use crate::mcayley::group::{independent, BitVector, Span};
use crate::mcayley::{gamma_n_table, phi_inverse, phi_vertex, subcube_generators, PartedVertex};

/// Largest `n` for which subcubes are compared to `Q_{n-3}` by a full
/// isomorphism search; above it the check is structural.
const ISO_SUBCUBE_MAX_N: usize = 9;
const ISO_PART_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcubeClass {
    pub part: usize,
    /// Canonical representative of the coset of `H^{i1}`.
    pub coset: BitVector,
    /// Member vertices as `SQ_n` indices, ascending.
    pub vertices: Vec<usize>,
    pub types_present: Vec<SpinedType>,
}

#[derive(Debug, Clone)]
pub struct SpinedDecomposition {
    pub n: usize,
    pub graph: Graph,
    pub classes: Vec<SubcubeClass>,
    /// `M_1 = {h_1h_2, h_3h_4}`, `M_2 = {h_1h_4, h_2h_3}` and
    /// `M_3 = {h_1(Ah)_1, h_4(Ah)_4, h_2(Ah)_3}` with `A = a_{n-2}`.
    pub matchings: [Vec<Edge>; 3],
    class_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub part: usize,
    pub coset: String,
    pub size: usize,
    pub types: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub classes: Vec<ClassSummary>,
    pub partition: bool,
    pub subcube_check: &'static str,
    pub subcubes_are_hypercubes: bool,
    pub parts_one_and_four_are_hypercubes: bool,
    pub matching_sizes: [usize; 3],
    pub matchings_perfect: bool,
    pub edges_partitioned: bool,
    pub intra_class_edges: usize,
    pub pass: bool,
}

pub fn decompose_spined(n: usize) -> Result<SpinedDecomposition> {
    require_dimension("decompose_spined", n, 6, "n >= 6")?;
    let graph = spined_cube_direct(n)?;
    let k = n - 2;
    let size = 1usize << n;
    let sq = |part: usize, h: u64| phi_inverse(n, PartedVertex::new(BitVector::from_bits(k, h), part)) as usize;

    let mut classes = Vec::with_capacity(8);
    let mut class_of = vec![usize::MAX; size];
    for part in 1..=4 {
        let span = Span::new(k, &subcube_generators(n, part)?);
        let mut cosets: Vec<(BitVector, Vec<usize>)> = Vec::new();
        for h in 0..1u64 << k {
            let rep = span.coset_representative(BitVector::from_bits(k, h));
            let slot = match cosets.iter().position(|(r, _)| *r == rep) {
                Some(s) => s,
                None => {
                    cosets.push((rep, Vec::new()));
                    cosets.len() - 1
                }
            };
            cosets[slot].1.push(sq(part, h));
        }
        cosets.sort_by_key(|(r, _)| r.bits());
        for (coset, mut vertices) in cosets {
            vertices.sort_unstable();
            let types: BTreeSet<SpinedType> = vertices.iter().map(|&v| SpinedType::from_bits(v as u8)).collect();
            for &v in &vertices {
                class_of[v] = classes.len();
            }
            classes.push(SubcubeClass {
                part,
                coset,
                vertices,
                types_present: types.into_iter().collect(),
            });
        }
    }

    let a = 1u64 << 0; // a_{n-2} is the lowest exponent bit
    let mut matchings: [Vec<Edge>; 3] = Default::default();
    for h in 0..1u64 << k {
        matchings[0].push(edge(sq(1, h), sq(2, h)));
        matchings[0].push(edge(sq(3, h), sq(4, h)));
        matchings[1].push(edge(sq(1, h), sq(4, h)));
        matchings[1].push(edge(sq(2, h), sq(3, h)));
        if h & a == 0 {
            matchings[2].push(edge(sq(1, h), sq(1, h ^ a)));
            matchings[2].push(edge(sq(4, h), sq(4, h ^ a)));
        }
        matchings[2].push(edge(sq(2, h), sq(3, h ^ a)));
    }
    for m in &mut matchings {
        m.sort_unstable();
    }
    Ok(SpinedDecomposition {
        n,
        graph,
        classes,
        matchings,
        class_of,
    })
}

impl SpinedDecomposition {
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn verify(&self) -> Result<DecompositionReport> {
        let n = self.n;
        let g = &self.graph;
        let size = g.n_vertices();
        let class_size = 1usize << (n - 3);

        let mut covered = vec![0u8; size];
        for c in &self.classes {
            for &v in &c.vertices {
                covered[v] += 1;
            }
        }
        let partition = self.classes.len() == 8
            && self.classes.iter().all(|c| c.vertices.len() == class_size)
            && covered.iter().all(|&k| k == 1);

        let use_iso = n <= ISO_SUBCUBE_MAX_N;
        let subcubes_are_hypercubes = partition
            && if use_iso {
                let q = hypercube(n - 3)?;
                let mut ok = true;
                for c in &self.classes {
                    ok &= find_isomorphism(&g.induced_subgraph(&c.vertices)?, &q)?.is_some();
                }
                ok
            } else {
                let mut ok = true;
                for c in &self.classes {
                    ok &= self.structural_hypercube(&c.vertices, &subcube_generators(n, c.part)?, n - 3);
                }
                ok
            };

        let table = gamma_n_table(n)?;
        let mut parts_ok = true;
        for part in [1, 4] {
            let members: Vec<usize> = self
                .classes
                .iter()
                .filter(|c| c.part == part)
                .flat_map(|c| c.vertices.iter().copied())
                .collect();
            parts_ok &= if n <= ISO_PART_MAX_N {
                find_isomorphism(&g.induced_subgraph(&members)?, &hypercube(n - 2)?)?.is_some()
            } else {
                self.structural_hypercube(&members, table.get(part, part), n - 2)
            };
        }

        let matching_sizes = [0, 1, 2].map(|i| self.matchings[i].len());
        let matchings_perfect = self.matchings.iter().all(|m| {
            let mut hit = vec![false; size];
            m.iter()
                .all(|&(u, v)| !std::mem::replace(&mut hit[u], true) && !std::mem::replace(&mut hit[v], true))
                && hit.iter().all(|&b| b)
        });

        let mut intra_class_edges = 0;
        let mut matched: BTreeSet<Edge> = BTreeSet::new();
        let mut repeated = false;
        for m in &self.matchings {
            for &e in m {
                repeated |= !matched.insert(e);
            }
        }
        let mut edges_partitioned = !repeated && matched.iter().all(|&(u, v)| g.has_edge(u, v));
        for (u, v) in g.edges() {
            let inside = self.class_of[u] == self.class_of[v];
            intra_class_edges += usize::from(inside);
            // each edge is inside a class or in exactly one matching, never both
            edges_partitioned &= inside != matched.contains(&(u, v));
        }
        edges_partitioned &= intra_class_edges + matched.len() == g.n_edges()
            && intra_class_edges == (n - 3) << (n - 1);

        let pass = partition && subcubes_are_hypercubes && parts_ok && matchings_perfect && edges_partitioned;
        Ok(DecompositionReport {
            n,
            classes: self
                .classes
                .iter()
                .map(|c| ClassSummary {
                    part: c.part,
                    coset: c.coset.exponent_string(),
                    size: c.vertices.len(),
                    types: c.types_present.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            partition,
            subcube_check: if use_iso { "isomorphism" } else { "structural" },
            subcubes_are_hypercubes,
            parts_one_and_four_are_hypercubes: parts_ok,
            matching_sizes,
            matchings_perfect,
            edges_partitioned,
            intra_class_edges,
            pass,
        })
    }

    /// `members` induces `Cay(⟨gens⟩, gens)` with `dim` independent
    /// generators, i.e. a copy of `Q_dim`.
    fn structural_hypercube(&self, members: &[usize], gens: &[BitVector], dim: usize) -> bool {
        let n = self.n;
        if gens.len() != dim || !independent(n - 2, gens) || members.len() != 1 << dim {
            return false;
        }
        let inside: BTreeSet<usize> = members.iter().copied().collect();
        members.iter().all(|&v| {
            let p = phi_vertex(n, v as u64);
            let got: BTreeSet<usize> = self.graph.adj(v).iter().copied().filter(|w| inside.contains(w)).collect();
            let want: BTreeSet<usize> = gens
                .iter()
                .map(|&t| phi_inverse(n, PartedVertex::new(t.mul(p.h), p.part)) as usize)
                .collect();
            got == want
        })
    }
}
