//! Two edge-disjoint Hamiltonian cycles in `Q_m = Cay(⟨g_1..g_m⟩, {g_1..g_m})`
//! for any independent generators, `C1 ∋ (1, g_m)` and `C2 ∋ (g_m, g_{m-1}g_m)`.
//!
//! The construction runs on coordinate masks (bit `k-1` stands for `g_k`)
//! and doubles the cube one generator at a time, starting from a fixed pair
//! on `Q_4`. Elements are substituted only at the end.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{Cycle, EdhcPair, Edge, Graph};
use crate::mcayley::group::{independent, BitVector};
use crate::topology::{hypercube, MAX_DIMENSION};

use super::search::EdhcSearch;

/// Base listings for `Q_4` in generator-word notation. The first one lost a
/// comma between `a_1a_2` and `a_2`, which reads as the single word
/// `a_1a_2a_2 = a_1`; it is validated and repaired on load.
const BASE_C1: &str = "1_H,a_3,a_2a_3,a_1a_2a_3, a_1a_3,a_1,a_1a_2
a_2,a_2a_4,a_1a_2a_4, a_1a_2a_3a_4, a_2a_3a_4,a_3a_4,a_1a_3a_4,a_1a_4,a_4,1_H";
const BASE_C2: &str = "1_H,a_1,a_1a_4,a_1a_2a_4,a_1a_2,a_1a_2a_3,a_1a_2a_3a_4,
a_1a_3a_4,a_1a_3,a_3,a_3a_4,a_4,a_2a_4,a_2a_3a_4,a_2a_3,a_2,1_H";

/// Parses a comma-separated list of words such as `1_H, a_1a_3`. Whitespace
/// inside a word is ignored, so `a_1a_2 a_2` is the product `a_1`.
pub fn parse_word_list(text: &str, rank: usize) -> Result<Vec<u64>> {
    text.split(',')
        .map(|token| {
            let word: String = token.chars().filter(|c| !c.is_whitespace()).collect();
            if word == "1_H" || word == "1" {
                return Ok(0);
            }
            let mut mask = 0u64;
            let mut rest = word.as_str();
            while !rest.is_empty() {
                let tail = rest
                    .strip_prefix("a_")
                    .ok_or_else(|| Error::InvalidArgument(format!("bad word {word:?}")))?;
                let digits = tail.bytes().take_while(u8::is_ascii_digit).count();
                let i: usize = tail[..digits]
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad word {word:?}")))?;
                if !(1..=rank).contains(&i) {
                    return Err(Error::InvalidArgument(format!("a_{i} out of range in {word:?}")));
                }
                mask ^= 1 << (i - 1);
                rest = &tail[digits..];
            }
            Ok(mask)
        })
        .collect()
}

/// Why a coordinate cycle is not a Hamiltonian cycle of `Q_m`.
fn coordinate_defect(m: usize, c: &[u64]) -> Option<String> {
    if c.len() != 1 << m {
        return Some(format!("{} vertices instead of {}", c.len(), 1u64 << m));
    }
    let mut seen = vec![false; 1 << m];
    for &x in c {
        if x >> m != 0 {
            return Some(format!("{x:#b} is outside Q_{m}"));
        }
        if std::mem::replace(&mut seen[x as usize], true) {
            return Some(format!("vertex {x:#b} repeats"));
        }
    }
    (0..c.len())
        .map(|i| (c[i], c[(i + 1) % c.len()]))
        .find(|(a, b)| (a ^ b).count_ones() != 1)
        .map(|(a, b)| format!("{a:#b} and {b:#b} are not adjacent"))
}

fn contains_edge(c: &[u64], a: u64, b: u64) -> bool {
    (0..c.len()).any(|i| {
        let (x, y) = (c[i], c[(i + 1) % c.len()]);
        (x, y) == (a, b) || (x, y) == (b, a)
    })
}

fn drop_closing(mut c: Vec<u64>) -> Vec<u64> {
    if c.len() > 1 && c.first() == c.last() {
        c.pop();
    }
    c
}

/// Outcome of loading the base listings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePair {
    pub c1: Vec<u64>,
    pub c2: Vec<u64>,
    /// Defects found in the transcribed listings, empty when both loaded
    /// cleanly.
    pub repairs: Vec<String>,
}

/// The `Q_4` base pair, repaired by search where a listing is defective.
pub fn base_pair() -> &'static BasePair {
    static BASE: OnceLock<BasePair> = OnceLock::new();
    BASE.get_or_init(|| load_base().expect("Q_4 admits the base pair"))
}

fn load_base() -> Result<BasePair> {
    let (g4, g3g4) = (0b1000u64, 0b1100u64);
    let check = |text: &str, required: (u64, u64)| -> std::result::Result<Vec<u64>, String> {
        let c = drop_closing(parse_word_list(text, 4).map_err(|e| e.to_string())?);
        if let Some(d) = coordinate_defect(4, &c) {
            return Err(d);
        }
        if !contains_edge(&c, required.0, required.1) {
            return Err("required edge missing".into());
        }
        Ok(c)
    };
    let first = check(BASE_C1, (0, g4));
    let second = check(BASE_C2, (g4, g3g4));
    let mut repairs = Vec::new();
    if let Err(d) = &first {
        repairs.push(format!("base C1: {d}"));
    }
    if let Err(d) = &second {
        repairs.push(format!("base C2: {d}"));
    }
    if let (Ok(c1), Ok(c2)) = (&first, &second) {
        let disjoint = (0..c2.len()).all(|i| !contains_edge(c1, c2[i], c2[(i + 1) % c2.len()]));
        if disjoint {
            return Ok(BasePair {
                c1: c1.clone(),
                c2: c2.clone(),
                repairs,
            });
        }
        repairs.push("base listings share an edge".into());
    }
    for r in &repairs {
        log::warn!("hypercube base pair: {r}; replacing by search");
    }

    // Q_4 indices coincide with coordinate masks.
    let q4 = hypercube(4)?;
    let as_cycle = |c: &[u64]| Cycle::new(c.iter().map(|&x| x as usize).collect());
    let back = |c: &Cycle| c.vertices().iter().map(|&v| v as u64).collect::<Vec<_>>();
    let e1: Edge = (0, g4 as usize);
    let e2: Edge = (g4 as usize, g3g4 as usize);
    let found = match (&first, &second) {
        (Err(_), Ok(c2)) => EdhcSearch::new(&q4)
            .require_c1(&[e2])
            .require_c2(&[e1])
            .keep_c1(as_cycle(c2))
            .run()?
            .map(|p| (back(&p.c2), back(&p.c1))),
        (Ok(c1), Err(_)) => EdhcSearch::new(&q4)
            .require_c1(&[e1])
            .require_c2(&[e2])
            .keep_c1(as_cycle(c1))
            .run()?
            .map(|p| (back(&p.c1), back(&p.c2))),
        _ => EdhcSearch::new(&q4)
            .require_c1(&[e1])
            .require_c2(&[e2])
            .run()?
            .map(|p| (back(&p.c1), back(&p.c2))),
    };
    let (c1, c2) = found.ok_or_else(|| Error::Internal("no replacement base pair on Q_4".into()))?;
    Ok(BasePair { c1, c2, repairs })
}

/// The path from `a` to `b` around `c`, skipping the cycle edge `(a, b)`.
pub(crate) fn path_avoiding<T: Copy + PartialEq>(c: &[T], a: T, b: T) -> Option<Vec<T>> {
    let len = c.len();
    let p = c.iter().position(|&x| x == a)?;
    let forward = if c[(p + 1) % len] == b {
        false
    } else if c[(p + len - 1) % len] == b {
        true
    } else {
        return None;
    };
    Some(
        (0..len)
            .map(|i| if forward { c[(p + i) % len] } else { c[(p + len - i) % len] })
            .collect(),
    )
}

/// Edges of `c` joining the two halves split by bit `k`.
fn cross_edges(c: &[u64], k: usize) -> Vec<(u64, u64)> {
    (0..c.len())
        .map(|i| (c[i], c[(i + 1) % c.len()]))
        .filter(|(a, b)| (a ^ b) >> k & 1 == 1)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

/// One doubling step from `Q_k` to `Q_{k+1}`, `α: h ↦ h·g_{k+1}`.
fn double(k: usize, c1: &[u64], c2: &[u64]) -> Result<(Vec<u64>, Vec<u64>)> {
    let gk = 1u64 << (k - 1);
    let alpha = 1u64 << k;
    let missing = |what: &str| Error::Internal(format!("doubling to Q_{}: {what}", k + 1));

    // C1 minus (1, g_k), then its translate walked back from g_k·g_{k+1}
    let lower = path_avoiding(c1, 0, gk).ok_or_else(|| missing("C1 lacks (1, g_k)"))?;
    let mut new_c1 = lower.clone();
    new_c1.extend(lower.iter().rev().map(|&x| x ^ alpha));

    let mut new_c2 = None;
    for reverse in [false, true] {
        let start = c2.iter().position(|&x| x == 0).expect("C2 visits the identity");
        let len = c2.len();
        let seq: Vec<u64> = (0..len)
            .map(|i| if reverse { c2[(start + len - i) % len] } else { c2[(start + i) % len] })
            .collect();
        let at = seq.iter().position(|&x| x == gk).ok_or_else(|| missing("C2 misses g_k"))?;
        // seq = (1, u, …, g_k, v, …); P1 = u…g_k, P2 = 1, last, …, v
        let p1 = &seq[1..=at];
        let p2: Vec<u64> = std::iter::once(0).chain(seq[at + 1..].iter().rev().copied()).collect();
        let mut cand: Vec<u64> = Vec::with_capacity(2 * len);
        cand.extend_from_slice(p1);
        cand.extend_from_slice(&p2);
        cand.extend(p2.iter().rev().map(|&x| x ^ alpha));
        cand.extend(p1.iter().rev().map(|&x| x ^ alpha));
        if coordinate_defect(k + 1, &cand).is_none() {
            new_c2 = Some(cand);
            break;
        }
        log::debug!("doubling to Q_{}: orientation {reverse} rejected", k + 1);
    }
    let new_c2 = new_c2.ok_or_else(|| missing("neither orientation of C2 splices"))?;
    if let Some(d) = coordinate_defect(k + 1, &new_c1) {
        return Err(missing(&format!("spliced C1 invalid: {d}")));
    }

    let (x1, x2) = (cross_edges(&new_c1, k), cross_edges(&new_c2, k));
    let mut all: Vec<_> = x1.iter().chain(&x2).copied().collect();
    all.sort_unstable();
    all.dedup();
    if x1.len() != 2 || x2.len() != 2 || all.len() != 4 {
        return Err(missing("cross edges are not four distinct rungs"));
    }
    Ok((new_c1, new_c2))
}

/// The pair on coordinate masks for `Q_m`, `m ≥ 4`.
pub fn coordinate_pair(m: usize) -> Result<(Vec<u64>, Vec<u64>)> {
    if !(4..=MAX_DIMENSION).contains(&m) {
        return Err(Error::DimensionOutOfRange {
            op: "hypercube_edhc",
            n: m,
            requirement: "4 <= n <= 24",
        });
    }
    let base = base_pair();
    let (mut c1, mut c2) = (base.c1.clone(), base.c2.clone());
    for k in 4..m {
        (c1, c2) = double(k, &c1, &c2)?;
    }
    Ok((c1, c2))
}

/// A certified pair on the Cayley graph of the supplied generators.
#[derive(Debug, Clone)]
pub struct HypercubeEdhc {
    pub generators: Vec<BitVector>,
    /// Vertex `p` of [`Self::graph`] is the product of the generators whose
    /// positions are set in `p`.
    pub graph: Graph,
    pub pair: EdhcPair,
}

impl HypercubeEdhc {
    pub fn element(&self, v: usize) -> BitVector {
        element_of(&self.generators, v as u64)
    }

    pub fn c1_elements(&self) -> Vec<BitVector> {
        self.pair.c1.vertices().iter().map(|&v| self.element(v)).collect()
    }

    pub fn c2_elements(&self) -> Vec<BitVector> {
        self.pair.c2.vertices().iter().map(|&v| self.element(v)).collect()
    }
}

fn element_of(generators: &[BitVector], p: u64) -> BitVector {
    let rank = generators[0].rank();
    (0..generators.len())
        .filter(|&j| p >> j & 1 == 1)
        .fold(BitVector::identity(rank), |acc, j| acc.mul(generators[j]))
}

/// Two edge-disjoint Hamiltonian cycles in the cube spanned by
/// `generators`, with `C1 ∋ (1, g_m)` and `C2 ∋ (g_m, g_{m-1}g_m)` for
/// `m = generators.len()`.
pub fn hypercube_edhc(generators: &[BitVector]) -> Result<HypercubeEdhc> {
    let m = generators.len();
    if m < 4 {
        return Err(Error::DimensionOutOfRange {
            op: "hypercube_edhc",
            n: m,
            requirement: "n >= 4",
        });
    }
    let rank = generators[0].rank();
    if generators.iter().any(|g| g.rank() != rank) {
        return Err(Error::InvalidArgument("generators come from different groups".into()));
    }
    if !independent(rank, generators) {
        return Err(Error::InvalidArgument("generators are not independent".into()));
    }
    let (c1, c2) = coordinate_pair(m)?;
    let labels = (0..1u64 << m).map(|p| element_of(generators, p).exponent_string()).collect();
    let adjacency = (0..1usize << m).map(|p| (0..m).map(|j| p ^ (1 << j)).collect()).collect();
    let graph = Graph::from_adjacency(labels, adjacency)?;
    let top = 1usize << (m - 1);
    let pair = EdhcPair::certify(
        &graph,
        Cycle::new(c1.into_iter().map(|x| x as usize).collect()),
        Cycle::new(c2.into_iter().map(|x| x as usize).collect()),
        &[(0, top)],
        &[(top, top | top >> 1)],
    )?;
    Ok(HypercubeEdhc {
        generators: generators.to_vec(),
        graph,
        pair,
    })
}
