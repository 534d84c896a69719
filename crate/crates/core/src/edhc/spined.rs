//! Two edge-disjoint Hamiltonian cycles in `SQ_n`, `n ≥ 4`.
//!
//! For `n ≤ 6` the transcribed listings are loaded and checked; a defective
//! listing is replaced by a search partner of the valid one. For `n ≥ 7`
//! each of the eight subcube classes carries a hypercube pair, and sixteen
//! cycle segments are chained through the matching edges between classes.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::fixtures;
use super::hypercube::{hypercube_edhc, path_avoiding};
use super::search::EdhcSearch;
use crate::error::{require_dimension, Error, Result};
use crate::graph::{check_hamiltonian_cycle, edge, Cycle, EdhcPair, Graph};
use crate::mcayley::group::BitVector;
use crate::mcayley::{phi_inverse, subcube_generators, PartedVertex};
use crate::topology::spined_cube_direct;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EdhcSource {
    /// Loaded from the transcribed listings; `repairs` names each listing
    /// that failed validation and was replaced by search.
    Listing { repairs: Vec<String> },
    /// Spliced from the eight subcube pairs.
    Subcubes,
}

#[derive(Debug, Clone)]
pub struct SpinedEdhc {
    pub n: usize,
    pub graph: Graph,
    pub pair: EdhcPair,
    pub source: EdhcSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdhcReport {
    pub n: usize,
    pub lengths: [usize; 2],
    pub hamiltonian: [bool; 2],
    pub disjoint: bool,
    pub required_edges_present: bool,
    pub source: EdhcSource,
}

impl SpinedEdhc {
    pub fn report(&self) -> EdhcReport {
        let c = &self.pair.certificate;
        EdhcReport {
            n: self.n,
            lengths: c.lengths,
            hamiltonian: c.hamiltonian,
            disjoint: c.disjoint,
            required_edges_present: c.required_edges_present,
            source: self.source.clone(),
        }
    }
}

pub fn spined_edhc(n: usize) -> Result<SpinedEdhc> {
    require_dimension("spined_edhc", n, 4, "n >= 4")?;
    let graph = spined_cube_direct(n)?;
    if n <= 6 {
        let (pair, repairs) = from_listing(&graph, n)?;
        return Ok(SpinedEdhc {
            n,
            graph,
            pair,
            source: EdhcSource::Listing { repairs },
        });
    }
    let (c1, c2) = splice(n)?;
    let pair = EdhcPair::certify(&graph, c1, c2, &[], &[])?;
    Ok(SpinedEdhc {
        n,
        graph,
        pair,
        source: EdhcSource::Subcubes,
    })
}

fn from_listing(g: &Graph, n: usize) -> Result<(EdhcPair, Vec<String>)> {
    let texts = fixtures::listing(n).expect("listings cover 4..=6");
    let mut loaded: Vec<std::result::Result<Cycle, String>> = Vec::new();
    for text in texts {
        let parsed = Cycle::from_labels(g, &fixtures::tokens(text)).map_err(|e| e.to_string());
        loaded.push(parsed.and_then(|c| check_hamiltonian_cycle(g, &c).map(|_| c).map_err(|d| d.to_string())));
    }
    let mut repairs = Vec::new();
    for (i, r) in loaded.iter().enumerate() {
        if let Err(d) = r {
            let msg = format!("SQ_{n} listing {}: {d}", i + 1);
            log::warn!("{msg}; replacing by search");
            repairs.push(msg);
        }
    }
    let search = EdhcSearch::new(g).seed(n as u64);
    let pair = match (&loaded[0], &loaded[1]) {
        (Ok(c1), Ok(c2)) => match EdhcPair::certify(g, c1.clone(), c2.clone(), &[], &[]) {
            Ok(p) => Some(p),
            Err(e) => {
                repairs.push(format!("SQ_{n} listings: {e}"));
                log::warn!("SQ_{n} listings fail together: {e}; replacing the second by search");
                search.keep_c1(c1.clone()).run()?
            }
        },
        (Ok(c1), Err(_)) => search.keep_c1(c1.clone()).run()?,
        (Err(_), Ok(c2)) => search
            .keep_c1(c2.clone())
            .run()?
            .map(|p| EdhcPair::certify(g, p.c2, p.c1, &[], &[]))
            .transpose()?,
        (Err(_), Err(_)) => search.run()?,
    };
    let pair = pair.ok_or_else(|| Error::Internal(format!("no replacement pair found for SQ_{n}")))?;
    Ok((pair, repairs))
}

/// Which cycle of a class, and whether it lives on the `a_{n-2}` coset.
#[derive(Debug, Clone, Copy)]
struct Piece {
    part: usize,
    second: bool,
    shifted: bool,
}

/// A walk through one constituent cycle, from `entry` to `exit`, where
/// `(entry, exit)` is the cycle edge left out.
struct Segment {
    piece: Piece,
    entry: u64,
    exit: u64,
}

fn seg(part: usize, second: bool, shifted: bool, entry: u64, exit: u64) -> Segment {
    Segment {
        piece: Piece { part, second, shifted },
        entry,
        exit,
    }
}

/// Builds `C1` and `C2` on `SQ_n`, `n ≥ 7`.
fn splice(n: usize) -> Result<(Cycle, Cycle)> {
    let k = n - 2;
    // generators as exponent masks: a_{n-2}, a_{n-3}, a_{n-4}
    let (a, b, d) = (1u64, 1u64 << 1, 1u64 << 2);

    let frames: Vec<(Vec<BitVector>, Vec<BitVector>)> = (1..=4)
        .into_par_iter()
        .map(|part| {
            let h = hypercube_edhc(&subcube_generators(n, part)?)?;
            Ok((h.c1_elements(), h.c2_elements()))
        })
        .collect::<Result<_>>()?;

    let cycle_of = |p: Piece| -> Vec<u64> {
        let (c1, c2) = &frames[p.part - 1];
        let base = if p.second { c2 } else { c1 };
        let shift = if p.shifted { a } else { 0 };
        base.iter().map(|h| h.bits() ^ shift).collect()
    };

    // all sixteen constituent cycles are pairwise edge-disjoint
    let mut seen: HashSet<(usize, u64, u64)> = HashSet::new();
    for part in 1..=4 {
        for second in [false, true] {
            for shifted in [false, true] {
                let c = cycle_of(Piece { part, second, shifted });
                for i in 0..c.len() {
                    let (x, y) = (c[i], c[(i + 1) % c.len()]);
                    if !seen.insert((part, x.min(y), x.max(y))) {
                        return Err(Error::Internal(format!("constituent cycles share an edge in part {part}")));
                    }
                }
            }
        }
    }

    let ba = b | a;
    let first = [
        seg(1, false, false, 0, b),
        seg(1, false, true, ba, a),
        seg(2, false, true, a, b),
        seg(3, false, false, ba, 0),
        seg(2, false, false, 0, ba),
        seg(3, false, true, b, a),
        seg(4, false, true, a, ba),
        seg(4, false, false, b, 0),
    ];
    let second = [
        seg(1, true, false, b, d | b),
        seg(2, true, false, d | b, ba),
        seg(1, true, true, ba, d | ba),
        seg(2, true, true, d | ba, b),
        seg(3, true, true, b, d | a),
        seg(4, true, true, d | a, ba),
        seg(3, true, false, ba, d),
        seg(4, true, false, d, b),
    ];

    let walk = |segments: &[Segment]| -> Result<Cycle> {
        let mut out = Vec::with_capacity(1 << n);
        for s in segments {
            let c = cycle_of(s.piece);
            let path = path_avoiding(&c, s.entry, s.exit).ok_or_else(|| {
                Error::Internal(format!(
                    "({:b}, {:b}) is not an edge of the part-{} cycle",
                    s.entry, s.exit, s.piece.part
                ))
            })?;
            out.extend(path.into_iter().map(|h| {
                phi_inverse(n, PartedVertex::new(BitVector::from_bits(k, h), s.piece.part)) as usize
            }));
        }
        Ok(Cycle::new(out))
    };
    Ok((walk(&first)?, walk(&second)?))
}

/// Edges of `c` not inside a single class of the decomposition, which for
/// a spliced cycle are exactly the eight junctions.
pub fn junction_edges(g: &Graph, c: &Cycle, class_of: impl Fn(usize) -> usize) -> Vec<(String, String)> {
    c.edges()
        .filter(|&(u, v)| class_of(u) != class_of(v))
        .map(|(u, v)| {
            let (u, v) = edge(u, v);
            (g.label(u).to_string(), g.label(v).to_string())
        })
        .collect()
}
