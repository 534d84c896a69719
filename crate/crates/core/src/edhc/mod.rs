//! Edge-disjoint Hamiltonian cycles: a backtracking search, the doubling
//! construction on hypercubes, and the spined-cube constructions.

mod fixtures;
mod hypercube;
mod search;
mod spined;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};
use crate::mcayley::group::{BitVector, FiniteGroup};
use crate::mcayley::{gamma_group, PartedVertex};

pub use hypercube::{base_pair, coordinate_pair, hypercube_edhc, parse_word_list, BasePair, HypercubeEdhc};
pub use search::{edhc_search, EdhcSearch, SEARCH_VERTEX_CAP};
pub use spined::{junction_edges, spined_edhc, EdhcReport, EdhcSource, SpinedEdhc};

/// One of the eight subcube classes of `Γ_n`: part `i`, coset `j`, and the
/// ordered generator list of `H^{i1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcubeFrame {
    pub part: usize,
    pub coset: usize,
    pub generators: Vec<BitVector>,
    /// `1_H` for the first coset, `a_{n-2}` for the second.
    pub representative: BitVector,
}

/// The eight frames of `Γ_n`, `n ≥ 7`, ordered by part then coset.
pub fn subcube_frames(n: usize) -> Result<Vec<SubcubeFrame>> {
    crate::error::require_dimension("subcube_frames", n, 7, "n >= 7")?;
    let h = gamma_group(n)?;
    let mut out = Vec::with_capacity(8);
    for part in 1..=4 {
        let generators = crate::mcayley::subcube_generators(n, part)?;
        for (coset, representative) in [(1, h.identity()), (2, h.generator(n - 2))] {
            out.push(SubcubeFrame {
                part,
                coset,
                generators: generators.clone(),
                representative,
            });
        }
    }
    Ok(out)
}

/// Image of a cycle of `Γ_n` under `h_i ↦ (h·x)_i`.
pub fn translate_cycle(gamma: &Graph, n: usize, c: &Cycle, x: BitVector) -> Result<Cycle> {
    let h = gamma_group(n)?;
    if x.rank() != n - 2 {
        return Err(Error::InvalidArgument(format!("{x} is not in Z_2^{}", n - 2)));
    }
    let image = c.map(|v| {
        let p = PartedVertex::from_index(&h, v);
        PartedVertex::new(p.h.mul(x), p.part).index(&h)
    });
    if let Some((u, v)) = image.edges().find(|&(u, v)| !gamma.has_edge(u, v)) {
        return Err(Error::Internal(format!(
            "translate by {x}: ({}, {}) is not an edge",
            gamma.label(u),
            gamma.label(v)
        )));
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcayley::{gamma_index, gamma_n};
    use crate::mcayley::group::Span;

    #[test]
    fn frames_partition_each_part() {
        let n = 8;
        let frames = subcube_frames(n).unwrap();
        assert_eq!(frames.len(), 8);
        for f in &frames {
            assert_eq!(f.generators.len(), n - 3);
            let span = Span::new(n - 2, &f.generators);
            assert_eq!(span.dimension(), n - 3);
            assert_eq!(span.contains(f.representative), f.coset == 1);
        }
    }

    #[test]
    fn translation_of_a_part_one_cycle() {
        let n = 7;
        let g = gamma_n(n).unwrap();
        let h = gamma_group(n).unwrap();
        let hc = hypercube_edhc(&crate::mcayley::subcube_generators(n, 1).unwrap()).unwrap();
        let c11 = Cycle::new(hc.c1_elements().into_iter().map(|x| gamma_index(n, 1, x)).collect());
        let a = h.generator(n - 2);
        let moved = translate_cycle(&g, n, &c11, a).unwrap();
        // ((1_H)_1, (a_{n-3})_1) moves to ((a_{n-2})_1, (a_{n-3}a_{n-2})_1)
        assert!(c11.contains_edge(gamma_index(n, 1, h.identity()), gamma_index(n, 1, h.generator(n - 3))));
        assert!(moved.contains_edge(gamma_index(n, 1, a), gamma_index(n, 1, h.word(&[n - 3, n - 2]))));
        assert_eq!(translate_cycle(&g, n, &moved, a).unwrap(), c11);
        assert_eq!(translate_cycle(&g, n, &c11, h.identity()).unwrap(), c11);
    }
}
