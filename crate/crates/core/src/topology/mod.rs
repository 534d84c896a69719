//! Hypercube and spined-cube generators.
//!
//! Vertex `x_1x_2⋯x_n` is stored as the integer `Σ x_i·2^{n-i}`, so `x_1`
//! is the most significant bit and the rendered label is the integer in
//! binary, zero-padded to width `n`. Every mod-2 sum is an XOR.

mod decompose;

use std::fmt;
use std::str::FromStr;

use crate::error::{require_dimension, Error, Result};
use crate::graph::Graph;

pub use decompose::{decompose_spined, DecompositionReport, SpinedDecomposition, SubcubeClass};

/// Largest dimension the graph constructors accept.
pub const MAX_DIMENSION: usize = 24;

/// An `n`-bit vertex address `x_1⋯x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel {
    n: usize,
    bits: u64,
}

impl VertexLabel {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 || n > 63 || bits >> n != 0 {
            return Err(Error::InvalidArgument(format!("{bits:#b} is not an {n}-bit label")));
        }
        Ok(VertexLabel { n, bits })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// `x_i` for `1 ≤ i ≤ n`.
    pub fn bit(&self, i: usize) -> u8 {
        assert!((1..=self.n).contains(&i), "bit index {i} out of 1..={}", self.n);
        ((self.bits >> (self.n - i)) & 1) as u8
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.n)
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > 63 || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::InvalidArgument(format!("{s:?} is not a binary label")));
        }
        let bits = u64::from_str_radix(s, 2).expect("validated binary");
        VertexLabel::new(s.len(), bits)
    }
}

pub fn binary_label(n: usize, x: u64) -> String {
    format!("{x:0n$b}")
}

fn binary_labels(n: usize) -> Vec<String> {
    (0..1u64 << n).map(|x| binary_label(n, x)).collect()
}

fn check_dimension(op: &'static str, n: usize) -> Result<()> {
    require_dimension(op, n, 1, "n >= 1")?;
    if n > MAX_DIMENSION {
        return Err(Error::DimensionOutOfRange {
            op,
            n,
            requirement: "n <= 24",
        });
    }
    Ok(())
}

/// Position mask of `x_i` in an `n`-bit address.
#[inline]
fn pos(n: usize, i: usize) -> u64 {
    1u64 << (n - i)
}

/// `Q_n`: vertices adjacent iff they differ in exactly one bit.
pub fn hypercube(n: usize) -> Result<Graph> {
    check_dimension("hypercube", n)?;
    let adjacency = (0..1u64 << n)
        .map(|x| (0..n).map(|b| (x ^ (1 << b)) as usize).collect())
        .collect();
    Graph::from_adjacency(binary_labels(n), adjacency)
}

/// The vertex of `1SQ_{n-1}` matched to `x = 0x_2⋯x_n` when `SQ_n` is
/// assembled from two copies of `SQ_{n-1}`.
pub fn spined_cross_partner(n: usize, x: u64) -> u64 {
    let bit = |i: usize| (x >> (n - i)) & 1 == 1;
    let mut y = x | pos(n, 1);
    match n {
        0..=2 => {}
        3 | 4 => {
            if bit(n) {
                y ^= pos(n, 2);
            }
        }
        _ => {
            if bit(n - 1) {
                y ^= pos(n, 2);
            }
            if bit(n) {
                y ^= pos(n, 3);
            }
        }
    }
    y
}

/// `SQ_n` assembled copy by copy: `SQ_1 = K_2`, and `SQ_k` is `0SQ_{k-1}`
/// plus `1SQ_{k-1}` joined by the cross matching of [`spined_cross_partner`].
pub fn spined_cube_recursive(n: usize) -> Result<Graph> {
    check_dimension("spined_cube_recursive", n)?;
    let mut adjacency: Vec<Vec<usize>> = vec![vec![1], vec![0]];
    for k in 2..=n {
        let half = 1usize << (k - 1);
        let mut next = Vec::with_capacity(2 * half);
        // 0SQ_{k-1} keeps its indices; 1SQ_{k-1} is shifted by 2^{k-1}.
        next.extend(adjacency.iter().cloned());
        next.extend(adjacency.iter().map(|l| l.iter().map(|&w| w + half).collect::<Vec<_>>()));
        for x in 0..half {
            let y = spined_cross_partner(k, x as u64) as usize;
            next[x].push(y);
            next[y].push(x);
        }
        adjacency = next;
    }
    Graph::from_adjacency(binary_labels(n), adjacency)
}

/// Neighbors of `x` in `SQ_n` from the closed-form adjacency rule.
pub fn spined_neighbors(n: usize, x: u64) -> Vec<u64> {
    let bit = |i: usize| (x >> (n - i)) & 1 == 1;
    let flip = |y: u64, i: usize| y ^ pos(n, i);
    // flip x_i, and add x_src to x_dst for each listed pair
    let step = |i: usize, adds: &[(usize, usize)]| {
        let mut y = flip(x, i);
        for &(dst, src) in adds {
            if bit(src) {
                y = flip(y, dst);
            }
        }
        y
    };
    match n {
        1 => vec![step(1, &[])],
        2 => vec![step(1, &[]), step(2, &[])],
        3 => vec![step(1, &[(2, 3)]), step(2, &[]), step(3, &[])],
        4 => vec![step(1, &[(2, 4)]), step(2, &[(3, 4)]), step(3, &[]), step(4, &[])],
        5 => vec![
            step(1, &[(2, 4), (3, 5)]),
            step(2, &[(3, 5)]),
            step(3, &[(4, 5)]),
            step(4, &[]),
            step(5, &[]),
        ],
        _ => {
            let mut out = vec![
                step(n, &[]),
                step(n - 1, &[]),
                step(n - 2, &[(n - 1, n)]),
                step(n - 3, &[(n - 2, n)]),
            ];
            out.extend((2..=n - 4).map(|k| step(k, &[(k + 1, n - 1), (k + 2, n)])));
            out.push(step(1, &[(2, n - 1), (3, n)]));
            out
        }
    }
}

/// `SQ_n` from the direct adjacency rule.
pub fn spined_cube_direct(n: usize) -> Result<Graph> {
    check_dimension("spined_cube_direct", n)?;
    let adjacency = (0..1u64 << n)
        .map(|x| spined_neighbors(n, x).into_iter().map(|y| y as usize).collect())
        .collect();
    Graph::from_adjacency(binary_labels(n), adjacency)
}

/// The last three bits `x_{n-2}x_{n-1}x_n` of a spined-cube address.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinedType(u8);

impl SpinedType {
    pub fn from_bits(bits: u8) -> Self {
        SpinedType(bits & 0b111)
    }

    pub fn bits(&self) -> u8 {
        self.0
    }
}

impl fmt::Display for SpinedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:03b}", self.0)
    }
}

pub fn spined_type(x: &VertexLabel) -> Result<SpinedType> {
    require_dimension("spined_type", x.dimension(), 3, "n >= 3")?;
    Ok(SpinedType((x.bits() & 0b111) as u8))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_conventions() {
        let x: VertexLabel = "01011".parse().unwrap();
        assert_eq!(x.bits(), 0b01011);
        assert_eq!((x.bit(1), x.bit(2), x.bit(5)), (0, 1, 1));
        assert_eq!(x.to_string(), "01011");
        assert!("0120".parse::<VertexLabel>().is_err());
        assert!("".parse::<VertexLabel>().is_err());
    }

    #[test]
    fn zero_dimension_is_rejected() {
        assert!(matches!(hypercube(0), Err(Error::DimensionOutOfRange { .. })));
        assert!(matches!(spined_cube_recursive(0), Err(Error::DimensionOutOfRange { .. })));
        assert!(matches!(spined_cube_direct(0), Err(Error::DimensionOutOfRange { .. })));
        assert!(hypercube(MAX_DIMENSION + 1).is_err());
    }

    #[test]
    fn small_hypercubes() {
        let q1 = hypercube(1).unwrap();
        assert_eq!((q1.n_vertices(), q1.n_edges()), (2, 1));
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.n_vertices(), q4.n_edges()), (16, 32));
        assert_eq!(q4.regular_degree(), Some(4));
    }

    #[test]
    fn sq1_and_sq2() {
        let sq1 = spined_cube_recursive(1).unwrap();
        assert_eq!(sq1.labels(), &["0", "1"]);
        assert!(sq1.has_edge(0, 1));
        let sq2 = spined_cube_recursive(2).unwrap();
        assert_eq!(sq2.regular_degree(), Some(2));
        assert_eq!(sq2.n_edges(), 4);
        let nbrs: Vec<&str> = sq2.neighbors(0).unwrap().iter().map(|&v| sq2.label(v)).collect();
        assert_eq!(nbrs, vec!["01", "10"]);
    }

    #[test]
    fn cross_partner_in_sq5() {
        // 0x2x3x4x5 = 01011 -> 1(x2+x4)(x3+x5)x4x5 = 1(1+1)(0+1)11
        assert_eq!(binary_label(5, spined_cross_partner(5, 0b01011)), "10111");
        let sq5 = spined_cube_recursive(5).unwrap();
        assert!(sq5.has_edge(0b01011, 0b10111));
    }

    #[test]
    fn sq3_origin_neighbors() {
        let sq3 = spined_cube_direct(3).unwrap();
        let nbrs: Vec<&str> = sq3.adj(0).iter().map(|&v| sq3.label(v)).collect();
        assert_eq!(nbrs, vec!["001", "010", "100"]);
    }

    #[test]
    fn sq6_origin_neighbors_by_hand() {
        // all-zero address: every additive term vanishes, each move is a plain flip
        let mut got: Vec<String> = spined_neighbors(6, 0).into_iter().map(|y| binary_label(6, y)).collect();
        got.sort();
        assert_eq!(got, vec!["000001", "000010", "000100", "001000", "010000", "100000"]);
    }

    #[test]
    fn types() {
        let t = |s: &str| spined_type(&s.parse().unwrap()).unwrap().to_string();
        assert_eq!(t("000000"), "000");
        assert_eq!(t("010110"), "110");
        assert_eq!(t("1111011"), "011");
        assert!(spined_type(&"01".parse().unwrap()).is_err());
    }
}
