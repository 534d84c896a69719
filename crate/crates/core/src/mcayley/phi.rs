//! The map `φ: V(SQ_n) → V(Γ_n)`: the last two address bits pick the part
//! (`00 → 1, 01 → 2, 11 → 3, 10 → 4`) and `x_1⋯x_{n-2}` is the exponent
//! vector of the group element.

use rayon::prelude::*;
use serde::Serialize;

use super::group::BitVector;
use super::{gamma_index, gamma_n, PartedVertex};
use crate::error::{require_dimension, Error, Result};
use crate::graph::Graph;
use crate::topology::spined_cube_direct;

const PART_OF_SUFFIX: [usize; 4] = [1, 2, 4, 3];
const SUFFIX_OF_PART: [u64; 4] = [0b00, 0b01, 0b11, 0b10];

pub fn phi_vertex(n: usize, x: u64) -> PartedVertex<BitVector> {
    PartedVertex::new(BitVector::from_bits(n - 2, x >> 2), PART_OF_SUFFIX[(x & 0b11) as usize])
}

pub fn phi_inverse(n: usize, v: PartedVertex<BitVector>) -> u64 {
    debug_assert_eq!(v.h.rank(), n - 2);
    (v.h.bits() << 2) | SUFFIX_OF_PART[v.part - 1]
}

/// `φ` as an index map from [`spined_cube_direct`]`(n)` to [`gamma_n`]`(n)`.
pub fn phi_map(n: usize) -> Result<Vec<usize>> {
    require_dimension("phi_map", n, 6, "n >= 6")?;
    Ok((0..1u64 << n)
        .map(|x| {
            let v = phi_vertex(n, x);
            gamma_index(n, v.part, v.h)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiCounterexample {
    pub edge: (String, String),
    pub image: (String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiReport {
    pub n: usize,
    pub vertices_checked: usize,
    pub edges_checked: usize,
    pub pass: bool,
    pub counterexample: Option<PhiCounterexample>,
}

/// Checks that `map` is a bijection `V(source) → V(target)` carrying every
/// edge to an edge. With equal edge counts that makes it an isomorphism.
pub fn verify_map(n: usize, source: &Graph, target: &Graph, map: &[usize]) -> Result<PhiReport> {
    let size = source.n_vertices();
    if map.len() != size || target.n_vertices() != size {
        return Err(Error::InvalidArgument(format!(
            "map of length {} between graphs on {} and {} vertices",
            map.len(),
            size,
            target.n_vertices()
        )));
    }
    let mut hit = vec![false; size];
    for &y in map {
        if y >= size || std::mem::replace(&mut hit[y], true) {
            return Err(Error::InvalidArgument("map is not a bijection".into()));
        }
    }
    let bad = (0..size).into_par_iter().find_map_first(|u| {
        source
            .adj(u)
            .iter()
            .find(|&&v| u < v && !target.has_edge(map[u], map[v]))
            .map(|&v| PhiCounterexample {
                edge: (source.label(u).into(), source.label(v).into()),
                image: (target.label(map[u]).into(), target.label(map[v]).into()),
            })
    });
    let counts_agree = source.n_edges() == target.n_edges();
    Ok(PhiReport {
        n,
        vertices_checked: size,
        edges_checked: source.n_edges(),
        pass: bad.is_none() && counts_agree,
        counterexample: bad,
    })
}

/// Builds `SQ_n` and `Γ_n` and checks `φ` edge by edge.
pub fn verify_phi_isomorphism(n: usize) -> Result<PhiReport> {
    require_dimension("verify_phi_isomorphism", n, 6, "n >= 6")?;
    let sq = spined_cube_direct(n)?;
    let gamma = gamma_n(n)?;
    verify_map(n, &sq, &gamma, &phi_map(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_round_trips() {
        for x in 0..1u64 << 7 {
            assert_eq!(phi_inverse(7, phi_vertex(7, x)), x);
        }
        let v = phi_vertex(6, 0b101110);
        assert_eq!((v.part, v.h.to_string()), (4, "a1a3a4".to_string()));
    }

    #[test]
    fn phi_is_an_isomorphism_for_small_n() {
        for n in 6..=9 {
            let r = verify_phi_isomorphism(n).unwrap();
            assert!(r.pass, "{r:?}");
            assert_eq!(r.edges_checked, n << (n - 1));
        }
    }

    #[test]
    fn swapping_parts_two_and_four_breaks_phi() {
        let n = 7;
        let sq = spined_cube_direct(n).unwrap();
        let gamma = gamma_n(n).unwrap();
        let block = 1usize << (n - 2);
        let swapped: Vec<usize> = phi_map(n)
            .unwrap()
            .into_iter()
            .map(|y| match y / block {
                1 => y + 2 * block,
                3 => y - 2 * block,
                _ => y,
            })
            .collect();
        let r = verify_map(n, &sq, &gamma, &swapped).unwrap();
        assert!(!r.pass);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn small_n_is_rejected() {
        assert!(matches!(phi_map(5), Err(Error::DimensionOutOfRange { .. })));
    }
}
