//! The three finite groups in play: `Z_2^k`, the cyclic group `Z_m`, and the
//! order-16 group `K = ⟨b_1,b_2,b_3,b_4⟩` with `b_4b_1 = b_1b_3b_4`.

use std::fmt::{self, Debug};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};

pub trait FiniteGroup {
    type Element: Copy + Eq + Ord + Hash + Debug;

    fn order(&self) -> usize;
    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: Self::Element, b: Self::Element) -> Self::Element;
    fn inverse(&self, a: Self::Element) -> Self::Element;
    /// Position of `a` in [`FiniteGroup::elements`].
    fn index_of(&self, a: Self::Element) -> usize;
    fn element(&self, index: usize) -> Self::Element;
    /// Normal-form exponent string used in vertex labels.
    fn render(&self, a: Self::Element) -> String;

    fn elements(&self) -> Vec<Self::Element> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }
}

/// `a_1^{e_1}⋯a_k^{e_k}` in `Z_2^k`. Exponent `e_i` lives in bit `k - i`, so
/// the bits read as a `k`-digit binary string give `e_1⋯e_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BitVector {
    rank: u8,
    bits: u64,
}

impl BitVector {
    pub fn identity(rank: usize) -> Self {
        assert!(rank <= 63, "rank {rank} too large");
        BitVector { rank: rank as u8, bits: 0 }
    }

    /// The generator `a_i`, `1 ≤ i ≤ rank`.
    pub fn generator(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "a_{i} is not a generator of Z_2^{rank}");
        BitVector {
            rank: rank as u8,
            bits: 1 << (rank - i),
        }
    }

    /// Product `a_{i_1}a_{i_2}⋯` of the listed generators.
    pub fn word(rank: usize, generators: &[usize]) -> Self {
        generators
            .iter()
            .fold(Self::identity(rank), |acc, &i| acc.mul(Self::generator(rank, i)))
    }

    pub fn from_bits(rank: usize, bits: u64) -> Self {
        assert!(rank <= 63 && bits >> rank == 0, "{bits:#b} does not fit rank {rank}");
        BitVector { rank: rank as u8, bits }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Exponent of `a_i`.
    pub fn exponent(&self, i: usize) -> u8 {
        ((self.bits >> (self.rank() - i)) & 1) as u8
    }

    pub fn is_identity(&self) -> bool {
        self.bits == 0
    }

    /// Group product; panics on a rank mismatch.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Self) -> Self {
        assert_eq!(self.rank, other.rank, "Z_2^k rank mismatch");
        BitVector {
            rank: self.rank,
            bits: self.bits ^ other.bits,
        }
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::GroupMismatch {
                left: format!("Z_2^{}", self.rank),
                right: format!("Z_2^{}", other.rank),
            });
        }
        Ok(self.mul(other))
    }

    /// `e_1⋯e_k`.
    pub fn exponent_string(&self) -> String {
        format!("{:0w$b}", self.bits, w = self.rank())
    }
}

impl fmt::Display for BitVector {
    /// Word form such as `a1a3`, or `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        for i in 1..=self.rank() {
            if self.exponent(i) == 1 {
                write!(f, "a{i}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementaryAbelian {
    rank: usize,
}

impl ElementaryAbelian {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 || rank > 30 {
            return Err(Error::InvalidArgument(format!("Z_2^{rank}: rank must be in 1..=30")));
        }
        Ok(ElementaryAbelian { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator(&self, i: usize) -> BitVector {
        BitVector::generator(self.rank, i)
    }

    pub fn word(&self, generators: &[usize]) -> BitVector {
        BitVector::word(self.rank, generators)
    }
}

impl FiniteGroup for ElementaryAbelian {
    type Element = BitVector;

    fn order(&self) -> usize {
        1 << self.rank
    }
    fn identity(&self) -> BitVector {
        BitVector::identity(self.rank)
    }
    fn multiply(&self, a: BitVector, b: BitVector) -> BitVector {
        a.mul(b)
    }
    fn inverse(&self, a: BitVector) -> BitVector {
        a
    }
    fn index_of(&self, a: BitVector) -> usize {
        a.bits as usize
    }
    fn element(&self, index: usize) -> BitVector {
        BitVector::from_bits(self.rank, index as u64)
    }
    fn render(&self, a: BitVector) -> String {
        a.exponent_string()
    }
}

/// `a^k` in `Z_m`, written additively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclicElement {
    order: u32,
    exponent: u32,
}

impl CyclicElement {
    pub fn new(order: u32, exponent: u32) -> Self {
        assert!(order > 0, "cyclic group of order 0");
        CyclicElement {
            order,
            exponent: exponent % order,
        }
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::GroupMismatch {
                left: format!("Z_{}", self.order),
                right: format!("Z_{}", other.order),
            });
        }
        Ok(CyclicElement::new(self.order, self.exponent + other.exponent))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicGroup {
    order: u32,
}

impl CyclicGroup {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("cyclic group of order 0".into()));
        }
        Ok(CyclicGroup { order })
    }

    pub fn power(&self, k: i64) -> CyclicElement {
        CyclicElement::new(self.order, k.rem_euclid(self.order as i64) as u32)
    }
}

impl FiniteGroup for CyclicGroup {
    type Element = CyclicElement;

    fn order(&self) -> usize {
        self.order as usize
    }
    fn identity(&self) -> CyclicElement {
        CyclicElement::new(self.order, 0)
    }
    fn multiply(&self, a: CyclicElement, b: CyclicElement) -> CyclicElement {
        CyclicElement::new(self.order, a.exponent + b.exponent)
    }
    fn inverse(&self, a: CyclicElement) -> CyclicElement {
        CyclicElement::new(self.order, self.order - a.exponent)
    }
    fn index_of(&self, a: CyclicElement) -> usize {
        a.exponent as usize
    }
    fn element(&self, index: usize) -> CyclicElement {
        CyclicElement::new(self.order, index as u32)
    }
    fn render(&self, a: CyclicElement) -> String {
        a.exponent.to_string()
    }
}

/// `b_1^{e_1}b_2^{e_2}b_3^{e_3}b_4^{e_4}` in `K`; `e_1` is bit 3, `e_4` bit 0.
///
/// Moving `b_1^{f_1}` left across `b_4^{e_4}` leaves `b_3^{e_4 f_1}` behind
/// (`b_4b_1 = b_1b_3b_4`, and `b_3` is central), hence
/// `(e)(f) = (e_1+f_1, e_2+f_2, e_3+f_3+e_4f_1, e_4+f_4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KElement(u8);

impl KElement {
    pub const IDENTITY: KElement = KElement(0);

    pub fn from_exponents(e: [u8; 4]) -> Self {
        KElement(e.iter().fold(0, |acc, &x| (acc << 1) | (x & 1)))
    }

    pub fn exponents(&self) -> [u8; 4] {
        [(self.0 >> 3) & 1, (self.0 >> 2) & 1, (self.0 >> 1) & 1, self.0 & 1]
    }

    /// The generator `b_i`, `1 ≤ i ≤ 4`.
    pub fn generator(i: usize) -> Self {
        assert!((1..=4).contains(&i), "b_{i} is not a generator of K");
        KElement(1 << (4 - i))
    }

    /// Product of the listed generators, left to right.
    pub fn word(generators: &[usize]) -> Self {
        generators
            .iter()
            .fold(Self::IDENTITY, |acc, &i| acc.mul(Self::generator(i)))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Self) -> Self {
        let [e1, e2, e3, e4] = self.exponents();
        let [f1, f2, f3, f4] = other.exponents();
        KElement::from_exponents([e1 ^ f1, e2 ^ f2, e3 ^ f3 ^ (e4 & f1), e4 ^ f4])
    }

    pub fn inverse(self) -> Self {
        let [e1, e2, e3, e4] = self.exponents();
        KElement::from_exponents([e1, e2, e3 ^ (e4 & e1), e4])
    }

    pub fn exponent_string(&self) -> String {
        format!("{:04b}", self.0)
    }

    pub fn index(&self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for (i, e) in self.exponents().iter().enumerate() {
            if *e == 1 {
                write!(f, "b{}", i + 1)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GroupK;

impl FiniteGroup for GroupK {
    type Element = KElement;

    fn order(&self) -> usize {
        16
    }
    fn identity(&self) -> KElement {
        KElement::IDENTITY
    }
    fn multiply(&self, a: KElement, b: KElement) -> KElement {
        a.mul(b)
    }
    fn inverse(&self, a: KElement) -> KElement {
        a.inverse()
    }
    fn index_of(&self, a: KElement) -> usize {
        a.index()
    }
    fn element(&self, index: usize) -> KElement {
        assert!(index < 16, "K has 16 elements");
        KElement(index as u8)
    }
    fn render(&self, a: KElement) -> String {
        a.exponent_string()
    }
}

/// An element of any of the supported groups, for callers that mix groups
/// at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GroupElement {
    Z2(BitVector),
    Cyclic(CyclicElement),
    K(KElement),
}

impl GroupElement {
    pub fn multiply(self, other: GroupElement) -> Result<GroupElement> {
        match (self, other) {
            (GroupElement::Z2(a), GroupElement::Z2(b)) => a.try_mul(b).map(GroupElement::Z2),
            (GroupElement::Cyclic(a), GroupElement::Cyclic(b)) => a.try_mul(b).map(GroupElement::Cyclic),
            (GroupElement::K(a), GroupElement::K(b)) => Ok(GroupElement::K(a.mul(b))),
            (a, b) => Err(Error::GroupMismatch {
                left: a.group_name(),
                right: b.group_name(),
            }),
        }
    }

    pub fn group_name(&self) -> String {
        match self {
            GroupElement::Z2(a) => format!("Z_2^{}", a.rank()),
            GroupElement::Cyclic(a) => format!("Z_{}", a.order),
            GroupElement::K(_) => "K".into(),
        }
    }
}

/// A subgroup of `Z_2^k` kept in reduced echelon form, so every coset has a
/// canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    rank: usize,
    // (pivot bit, vector), pivots strictly decreasing
    basis: Vec<(u32, u64)>,
}

impl Span {
    pub fn new(rank: usize, generators: &[BitVector]) -> Self {
        let mut span = Span { rank, basis: Vec::new() };
        for g in generators {
            assert_eq!(g.rank(), rank, "generator of the wrong rank");
            let r = span.reduce_bits(g.bits);
            if r != 0 {
                let pivot = 63 - r.leading_zeros();
                for entry in span.basis.iter_mut() {
                    if entry.1 >> pivot & 1 == 1 {
                        entry.1 ^= r;
                    }
                }
                span.basis.push((pivot, r));
                span.basis.sort_unstable_by_key(|b| std::cmp::Reverse(b.0));
            }
        }
        span
    }

    fn reduce_bits(&self, mut x: u64) -> u64 {
        for &(pivot, b) in &self.basis {
            if x >> pivot & 1 == 1 {
                x ^= b;
            }
        }
        x
    }

    /// Dimension of the span over `Z_2`.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Canonical representative of the coset `x·⟨generators⟩`: the coset
    /// element that vanishes on every pivot position.
    pub fn coset_representative(&self, x: BitVector) -> BitVector {
        BitVector::from_bits(self.rank, self.reduce_bits(x.bits))
    }

    pub fn contains(&self, x: BitVector) -> bool {
        self.reduce_bits(x.bits) == 0
    }
}

/// True iff the vectors are linearly independent over `Z_2`.
pub fn independent(rank: usize, vectors: &[BitVector]) -> bool {
    Span::new(rank, vectors).dimension() == vectors.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_generators_square_to_identity() {
        let a1 = BitVector::generator(4, 1);
        assert!(a1.mul(a1).is_identity());
        assert_eq!(BitVector::word(4, &[1, 3]).exponent_string(), "1010");
        assert_eq!(BitVector::word(4, &[1, 3]).to_string(), "a1a3");
    }

    #[test]
    fn k_defining_relation() {
        let (b1, b3, b4) = (KElement::generator(1), KElement::generator(3), KElement::generator(4));
        assert_eq!(b4.mul(b1), b1.mul(b3).mul(b4));
        assert_ne!(b4.mul(b1), b1.mul(b4));
        assert_eq!(b4.mul(b1).to_string(), "b1b3b4");
    }

    #[test]
    fn k_has_order_four_elements() {
        let x = KElement::word(&[1, 4]);
        assert_eq!(x.mul(x), KElement::generator(3));
        assert_eq!(x.mul(x).mul(x).mul(x), KElement::IDENTITY);
        assert_eq!(x.mul(x.inverse()), KElement::IDENTITY);
    }

    #[test]
    fn cyclic_arithmetic() {
        let z8 = CyclicGroup::new(8).unwrap();
        let a = z8.power(1);
        assert_eq!(z8.inverse(a), z8.power(-1));
        assert_eq!(z8.power(-1).exponent(), 7);
        assert_eq!(z8.multiply(z8.power(4), z8.power(4)), z8.identity());
    }

    #[test]
    fn mixed_groups_are_rejected() {
        let a = GroupElement::Z2(BitVector::generator(3, 1));
        let b = GroupElement::K(KElement::generator(1));
        assert!(matches!(a.multiply(b), Err(Error::GroupMismatch { .. })));
        let c = GroupElement::Z2(BitVector::generator(4, 1));
        assert!(matches!(a.multiply(c), Err(Error::GroupMismatch { .. })));
        assert_eq!(
            a.multiply(a).unwrap(),
            GroupElement::Z2(BitVector::identity(3))
        );
    }

    #[test]
    fn span_cosets() {
        let g = |w: &[usize]| BitVector::word(4, w);
        let s = Span::new(4, &[g(&[1, 2]), g(&[2, 3]), g(&[1, 3])]);
        assert_eq!(s.dimension(), 2);
        assert!(s.contains(g(&[1, 3])));
        assert!(!s.contains(g(&[1])));
        // the even-weight subgroup of the first three coordinates
        let reps: std::collections::BTreeSet<u64> =
            (0..16).map(|x| s.coset_representative(BitVector::from_bits(4, x)).bits()).collect();
        assert_eq!(reps.len(), 4);
        assert!(independent(4, &[g(&[1]), g(&[1, 2]), g(&[4])]));
        assert!(!independent(4, &[g(&[1]), g(&[1, 2]), g(&[2])]));
    }
}
