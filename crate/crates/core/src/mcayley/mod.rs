//! m-Cayley graphs over small finite groups, the graphs `Γ_3, Γ_4, Γ_5` and
//! `Γ_n`, and the explicit isomorphism `φ: SQ_n → Γ_n`.
//!
//! Vertex `h_i` of an m-Cayley graph over `H` gets index
//! `(i-1)·|H| + index_of(h)` and label `i:<exponent string of h>`.

pub mod group;
mod phi;

use std::collections::BTreeSet;

use crate::error::{require_dimension, Error, Result};
use crate::graph::Graph;
use group::{BitVector, CyclicGroup, ElementaryAbelian, FiniteGroup, GroupK, KElement};

pub use phi::{phi_inverse, phi_map, phi_vertex, verify_map, verify_phi_isomorphism, PhiCounterexample, PhiReport};

/// Vertex `h_i` of an m-Cayley graph; `part` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartedVertex<E> {
    pub h: E,
    pub part: usize,
}

impl<E: Copy> PartedVertex<E> {
    pub fn new(h: E, part: usize) -> Self {
        PartedVertex { h, part }
    }

    pub fn label<G: FiniteGroup<Element = E>>(&self, group: &G) -> String {
        format!("{}:{}", self.part, group.render(self.h))
    }

    pub fn index<G: FiniteGroup<Element = E>>(&self, group: &G) -> usize {
        (self.part - 1) * group.order() + group.index_of(self.h)
    }

    pub fn from_index<G: FiniteGroup<Element = E>>(group: &G, index: usize) -> Self {
        PartedVertex {
            h: group.element(index % group.order()),
            part: index / group.order() + 1,
        }
    }
}

/// Connection sets `T_ij ⊆ H` for `i, j ∈ {1..m}`, validated on
/// construction: `T_ij^{-1} = T_ji` and `1_H ∉ T_ii`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionTable<E> {
    m: usize,
    sets: Vec<Vec<Vec<E>>>,
}

impl<E: Copy + Ord + std::fmt::Debug> ConnectionTable<E> {
    /// Every set given explicitly; unlisted `(i, j)` are empty.
    pub fn new<G, I>(group: &G, m: usize, entries: I) -> Result<Self>
    where
        G: FiniteGroup<Element = E>,
        I: IntoIterator<Item = ((usize, usize), Vec<E>)>,
    {
        if m == 0 {
            return Err(Error::ConnectionTable("m must be at least 1".into()));
        }
        let mut sets = vec![vec![Vec::new(); m]; m];
        for ((i, j), set) in entries {
            if !(1..=m).contains(&i) || !(1..=m).contains(&j) {
                return Err(Error::ConnectionTable(format!("index ({i},{j}) outside 1..={m}")));
            }
            let unique: BTreeSet<E> = set.into_iter().collect();
            sets[i - 1][j - 1] = unique.into_iter().collect();
        }
        let table = ConnectionTable { m, sets };
        table.validate(group)?;
        Ok(table)
    }

    /// Diagonal and upper-triangle sets given; `T_ji` is filled in as
    /// `T_ij^{-1}`.
    pub fn from_upper<G, I>(group: &G, m: usize, entries: I) -> Result<Self>
    where
        G: FiniteGroup<Element = E>,
        I: IntoIterator<Item = ((usize, usize), Vec<E>)>,
    {
        let mut all = Vec::new();
        for ((i, j), set) in entries {
            if i > j {
                return Err(Error::ConnectionTable(format!("({i},{j}) is below the diagonal")));
            }
            if i < j {
                all.push(((j, i), set.iter().map(|&t| group.inverse(t)).collect()));
            }
            all.push(((i, j), set));
        }
        Self::new(group, m, all)
    }

    fn validate<G: FiniteGroup<Element = E>>(&self, group: &G) -> Result<()> {
        for i in 0..self.m {
            if self.sets[i][i].contains(&group.identity()) {
                return Err(Error::ConnectionTable(format!("identity lies in T_{0}{0}", i + 1)));
            }
            for j in 0..self.m {
                let inverse: BTreeSet<E> = self.sets[i][j].iter().map(|&t| group.inverse(t)).collect();
                let transpose: BTreeSet<E> = self.sets[j][i].iter().copied().collect();
                if inverse != transpose {
                    return Err(Error::ConnectionTable(format!(
                        "T_{}{}^-1 differs from T_{}{}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn parts(&self) -> usize {
        self.m
    }

    /// `T_ij` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> &[E] {
        &self.sets[i - 1][j - 1]
    }
}

/// The m-Cayley graph: `h_i ~ (t·h)_j` for every `t ∈ T_ij`.
pub fn m_cayley_graph<G: FiniteGroup>(group: &G, table: &ConnectionTable<G::Element>) -> Result<Graph> {
    let order = group.order();
    let m = table.parts();
    let elements = group.elements();
    let mut labels = Vec::with_capacity(m * order);
    for part in 1..=m {
        labels.extend(elements.iter().map(|&h| PartedVertex::new(h, part).label(group)));
    }
    let mut adjacency = vec![Vec::new(); m * order];
    for i in 1..=m {
        for (hi, &h) in elements.iter().enumerate() {
            let from = (i - 1) * order + hi;
            for j in 1..=m {
                for &t in table.get(i, j) {
                    let to = (j - 1) * order + group.index_of(group.multiply(t, h));
                    adjacency[from].push(to);
                }
            }
        }
    }
    Graph::from_adjacency(labels, adjacency)
}

/// `Γ_3 = Cay(Z_8, {a, a^{-1}, a^4})`, and the bi-Cayley graphs `Γ_4` over
/// `Z_2^3` and `Γ_5` over `K`.
pub fn gamma_small(which: usize) -> Result<Graph> {
    match which {
        3 => {
            let z8 = CyclicGroup::new(8)?;
            let table = ConnectionTable::new(&z8, 1, [((1, 1), vec![z8.power(1), z8.power(-1), z8.power(4)])])?;
            m_cayley_graph(&z8, &table)
        }
        4 => {
            let h = ElementaryAbelian::new(3)?;
            let table = ConnectionTable::from_upper(
                &h,
                2,
                [
                    ((1, 1), vec![h.word(&[1]), h.word(&[2]), h.word(&[3])]),
                    ((2, 2), vec![h.word(&[1, 2]), h.word(&[2, 3]), h.word(&[3])]),
                    ((1, 2), vec![h.identity()]),
                ],
            )?;
            m_cayley_graph(&h, &table)
        }
        5 => {
            let k = GroupK;
            let b = KElement::word;
            let table = ConnectionTable::from_upper(
                &k,
                2,
                [
                    ((1, 1), vec![b(&[1]), b(&[2]), b(&[3]), b(&[4])]),
                    ((2, 2), vec![b(&[1, 2]), b(&[2, 3]), b(&[2, 4]), b(&[4])]),
                    ((1, 2), vec![KElement::IDENTITY]),
                ],
            )?;
            m_cayley_graph(&k, &table)
        }
        _ => Err(Error::InvalidArgument(format!("no small graph Γ_{which}; expected 3, 4 or 5"))),
    }
}

/// The group `H = Z_2^{n-2}` underlying `Γ_n`.
pub fn gamma_group(n: usize) -> Result<ElementaryAbelian> {
    require_dimension("gamma_n", n, 6, "n >= 6")?;
    ElementaryAbelian::new(n - 2)
}

/// Connection sets of `Γ_n`, `n ≥ 6`.
pub fn gamma_n_table(n: usize) -> Result<ConnectionTable<BitVector>> {
    let h = gamma_group(n)?;
    let a = |i: usize| h.generator(i);
    let w = |gens: &[usize]| h.word(gens);
    let t11: Vec<_> = (1..=n - 2).map(a).collect();
    let mut t22: Vec<_> = (1..=n - 4).map(|k| w(&[k, k + 2])).collect();
    t22.push(w(&[n - 3, n - 2]));
    let mut t33: Vec<_> = (1..=n - 4).map(|k| w(&[k, k + 1, k + 2])).collect();
    t33.push(w(&[n - 3, n - 2]));
    let mut t44: Vec<_> = (1..=n - 4).map(|k| w(&[k, k + 1])).collect();
    t44.extend([a(n - 3), a(n - 2)]);
    let one = h.identity();
    ConnectionTable::from_upper(
        &h,
        4,
        [
            ((1, 1), t11),
            ((2, 2), t22),
            ((3, 3), t33),
            ((4, 4), t44),
            ((1, 2), vec![one]),
            ((1, 4), vec![one]),
            ((3, 4), vec![one]),
            ((2, 3), vec![one, a(n - 2)]),
        ],
    )
}

/// The 4-Cayley graph `Γ_n` of `Z_2^{n-2}`.
pub fn gamma_n(n: usize) -> Result<Graph> {
    let h = gamma_group(n)?;
    if n > crate::topology::MAX_DIMENSION {
        return Err(Error::DimensionOutOfRange {
            op: "gamma_n",
            n,
            requirement: "n <= 24",
        });
    }
    m_cayley_graph(&h, &gamma_n_table(n)?)
}

/// Independent generators of the index-2 subgroup `H^{i1} ≤ Z_2^{n-2}`
/// whose two cosets cut part `i` of `Γ_n` into copies of `Q_{n-3}`.
/// These are `T_ii` without `a_{n-2}`.
pub fn subcube_generators(n: usize, part: usize) -> Result<Vec<BitVector>> {
    let h = gamma_group(n)?;
    let w = |gens: &[usize]| h.word(gens);
    let gens = match part {
        1 => (1..=n - 3).map(|i| h.generator(i)).collect(),
        2 => {
            let mut g: Vec<_> = (1..=n - 4).map(|k| w(&[k, k + 2])).collect();
            g.push(w(&[n - 3, n - 2]));
            g
        }
        3 => {
            let mut g: Vec<_> = (1..=n - 4).map(|k| w(&[k, k + 1, k + 2])).collect();
            g.push(w(&[n - 3, n - 2]));
            g
        }
        4 => {
            let mut g: Vec<_> = (1..=n - 4).map(|k| w(&[k, k + 1])).collect();
            g.push(h.generator(n - 3));
            g
        }
        _ => return Err(Error::InvalidArgument(format!("Γ_n has parts 1..=4, not {part}"))),
    };
    Ok(gens)
}

/// Index of `h_part` in [`gamma_n`]`(n)`.
pub fn gamma_index(n: usize, part: usize, h: BitVector) -> usize {
    debug_assert!((1..=4).contains(&part) && h.rank() == n - 2);
    ((part - 1) << (n - 2)) | h.bits() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphism_orbits, find_isomorphism};

    fn nbr_labels(g: &Graph, label: &str) -> BTreeSet<String> {
        let v = g.index_of(label).unwrap();
        g.adj(v).iter().map(|&w| g.label(w).to_string()).collect()
    }

    #[test]
    fn single_part_over_z2_is_k2() {
        let z2 = ElementaryAbelian::new(1).unwrap();
        let t = ConnectionTable::new(&z2, 1, [((1, 1), vec![z2.generator(1)])]).unwrap();
        let g = m_cayley_graph(&z2, &t).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (2, 1));
        assert_eq!(g.labels(), &["1:0", "1:1"]);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let h = ElementaryAbelian::new(3).unwrap();
        let with_identity = ConnectionTable::new(&h, 1, [((1, 1), vec![h.identity()])]);
        assert!(matches!(with_identity, Err(Error::ConnectionTable(_))));
        let lopsided = ConnectionTable::new(&h, 2, [((1, 2), vec![h.identity()])]);
        assert!(matches!(lopsided, Err(Error::ConnectionTable(_))));
        let k = GroupK;
        let x = KElement::word(&[1, 4]);
        // {b1b4} is not closed under inversion
        assert!(ConnectionTable::new(&k, 1, [((1, 1), vec![x])]).is_err());
        assert!(ConnectionTable::new(&k, 1, [((1, 1), vec![x, x.inverse()])]).is_ok());
    }

    #[test]
    fn gamma_small_shapes() {
        let g3 = gamma_small(3).unwrap();
        assert_eq!((g3.n_vertices(), g3.regular_degree()), (8, Some(3)));
        assert_eq!(automorphism_orbits(&g3).unwrap().len(), 1);
        let g4 = gamma_small(4).unwrap();
        assert_eq!((g4.n_vertices(), g4.regular_degree()), (16, Some(4)));
        let g5 = gamma_small(5).unwrap();
        assert_eq!((g5.n_vertices(), g5.regular_degree()), (32, Some(5)));
        assert!(gamma_small(6).is_err());
    }

    #[test]
    fn gamma_n_order_and_valency() {
        assert!(matches!(gamma_n(5), Err(Error::DimensionOutOfRange { .. })));
        for n in 6..=9 {
            let g = gamma_n(n).unwrap();
            assert_eq!(g.n_vertices(), 1 << n);
            assert_eq!(g.regular_degree(), Some(n));
            let t = gamma_n_table(n).unwrap();
            assert_eq!((1..=4).map(|j| t.get(1, j).len()).sum::<usize>(), n);
        }
    }

    #[test]
    fn gamma6_neighborhoods_match_closed_forms() {
        let g = gamma_n(6).unwrap();
        // N((1_H)_1) = {1_2, 1_4, (a_k)_1}
        let expected: BTreeSet<String> = ["2:0000", "4:0000", "1:1000", "1:0100", "1:0010", "1:0001"]
            .map(String::from)
            .into();
        assert_eq!(nbr_labels(&g, "1:0000"), expected);
        // N((1_H)_4) = {1_1, 1_3, (a_4)_4, (a_3)_4, (a_1a_2)_4, (a_2a_3)_4}
        let expected: BTreeSet<String> = ["1:0000", "3:0000", "4:0001", "4:0010", "4:1100", "4:0110"]
            .map(String::from)
            .into();
        assert_eq!(nbr_labels(&g, "4:0000"), expected);
    }

    #[test]
    fn parts_induce_cayley_graphs() {
        let n = 7;
        let g = gamma_n(n).unwrap();
        let h = gamma_group(n).unwrap();
        let t = gamma_n_table(n).unwrap();
        for part in 1..=4 {
            let members: Vec<usize> = (0..h.order()).map(|x| (part - 1) * h.order() + x).collect();
            let induced = g.induced_subgraph(&members).unwrap();
            let cay = m_cayley_graph(&h, &ConnectionTable::new(&h, 1, [((1, 1), t.get(part, part).to_vec())]).unwrap())
                .unwrap();
            // same vertex order, so the edge sets must agree index for index
            assert_eq!(induced.edge_set(), cay.edge_set(), "part {part}");
        }
    }

    #[test]
    fn right_translation_preserves_parts() {
        let n = 7;
        let g = gamma_n(n).unwrap();
        let h = gamma_group(n).unwrap();
        for x in [h.generator(2), h.word(&[1, 5]), h.word(&[3, 4, 5])] {
            for part in 1..=4 {
                for y in h.elements() {
                    let u = gamma_index(n, part, y);
                    for &w in g.adj(u) {
                        let pw = PartedVertex::from_index(&h, w);
                        if pw.part == part {
                            assert!(g.has_edge(gamma_index(n, part, y.mul(x)), gamma_index(n, part, pw.h.mul(x))));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gamma4_matches_sq4() {
        let sq4 = crate::topology::spined_cube_recursive(4).unwrap();
        assert!(find_isomorphism(&sq4, &gamma_small(4).unwrap()).unwrap().is_some());
    }
}
