//! 4-cycle census at `(1_H)_1` and `(1_H)_2` of `Γ_n`, and vertex-transitivity
//! verdicts for `SQ_n`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{require_dimension, Result};
use crate::graph::{automorphism_orbits, count_four_cycles_through, edge, enumerate_four_cycles_through, ISO_VERTEX_CAP};
use crate::mcayley::group::BitVector;
use crate::mcayley::{gamma_group, gamma_index, gamma_n, PartedVertex};
use crate::topology::{binary_label, spined_cube_recursive};

/// `(n² − 5n + 12)/2`, the 4-cycle count at `(1_H)_1`.
pub fn formula_v1(n: usize) -> usize {
    (n * n + 12 - 5 * n) / 2
}

/// `(n² − 7n + 20)/2`, the 4-cycle count at `(1_H)_2`.
pub fn formula_v2(n: usize) -> usize {
    (n * n + 20 - 7 * n) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCount {
    pub edge: (String, String),
    pub count: usize,
    pub expected: usize,
}

/// How many enumerated cycles fell into one table row, against how many
/// instances the row describes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowTally {
    pub row: usize,
    pub found: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub count_v1: usize,
    pub count_v2: usize,
    pub formula_v1: usize,
    pub formula_v2: usize,
    pub per_edge_counts: Vec<EdgeCount>,
    pub rows_v1: Vec<RowTally>,
    pub rows_v2: Vec<RowTally>,
    pub unclassified: usize,
    pub patterns_match: bool,
    pub pass: bool,
}

/// A table row with its parameters, e.g. row 4 at `(1_H)_1` with `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowInstance {
    pub row: usize,
    pub params: Vec<usize>,
}

impl RowInstance {
    fn new(row: usize, params: Vec<usize>) -> Self {
        RowInstance { row, params }
    }
}

/// Generators appearing in `x`, ascending.
fn support(x: BitVector) -> Vec<usize> {
    (1..=x.rank()).filter(|&i| x.exponent(i) == 1).collect()
}

/// `Some(i)` when `x = a_i a_{i+2}` with `i ≤ n-4`.
fn skip_pair(n: usize, x: BitVector) -> Option<usize> {
    match support(x)[..] {
        [i, j] if j == i + 2 && i <= n - 4 => Some(i),
        _ => None,
    }
}

/// Vertex set of a 4-cycle as `(part, h)` pairs, sorted.
fn vertex_set(walk: &[PartedVertex<BitVector>; 4]) -> Vec<(usize, u64)> {
    let mut s: Vec<(usize, u64)> = walk.iter().map(|v| (v.part, v.h.bits())).collect();
    s.sort_unstable();
    s
}

fn identity_quad(walk: &[PartedVertex<BitVector>; 4]) -> bool {
    vertex_set(walk) == [(1, 0), (2, 0), (3, 0), (4, 0)]
}

/// Rows of the census at `(1_H)_1`. `walk[0]` is `(1_H)_1`.
pub fn classify_v1(walk: &[PartedVertex<BitVector>; 4]) -> Option<RowInstance> {
    let b = 1u64 << 1; // a_{n-3}
    let a = 1u64; // a_{n-2}
    if identity_quad(walk) {
        return Some(RowInstance::new(1, vec![]));
    }
    let set = vertex_set(walk);
    for (row, g) in [(2, b), (3, a)] {
        let mut want = vec![(1, 0), (1, g), (4, 0), (4, g)];
        want.sort_unstable();
        if set == want {
            return Some(RowInstance::new(row, vec![]));
        }
    }
    if walk.iter().all(|v| v.part == 1) {
        let (x, u, y) = (walk[1].h, walk[2].h, walk[3].h);
        if let ([i], [j]) = (&support(x)[..], &support(y)[..]) {
            if u == x.mul(y) && i != j {
                return Some(RowInstance::new(4, vec![*i.max(j), *i.min(j)]));
            }
        }
    }
    None
}

/// Rows of the census at `(1_H)_2`. `walk[0]` is `(1_H)_2`.
pub fn classify_v2(n: usize, walk: &[PartedVertex<BitVector>; 4]) -> Option<RowInstance> {
    let b = 1u64 << 1;
    let a = 1u64;
    let ba = a | b;
    if identity_quad(walk) {
        return Some(RowInstance::new(1, vec![]));
    }
    let set = vertex_set(walk);
    let fixed: [(usize, [(usize, u64); 4]); 3] = [
        (2, [(2, 0), (3, 0), (2, a), (3, a)]),
        (3, [(2, 0), (3, 0), (3, ba), (2, ba)]),
        (4, [(2, 0), (3, a), (3, b), (2, ba)]),
    ];
    for (row, vs) in fixed {
        let mut want = vs.to_vec();
        want.sort_unstable();
        if set == want {
            return Some(RowInstance::new(row, vec![]));
        }
    }
    if walk.iter().all(|v| v.part == 2) {
        let (x, u, y) = (walk[1].h, walk[2].h, walk[3].h);
        if u != x.mul(y) {
            return None;
        }
        let (px, py) = (skip_pair(n, x), skip_pair(n, y));
        match (px, py) {
            (Some(i), Some(j)) if i != j => return Some(RowInstance::new(6, vec![i.max(j), i.min(j)])),
            (Some(i), None) if y.bits() == ba => return Some(RowInstance::new(5, vec![i])),
            (None, Some(i)) if x.bits() == ba => return Some(RowInstance::new(5, vec![i])),
            _ => {}
        }
    }
    None
}

/// Every row instance listed for `(1_H)_1`.
pub fn expected_rows_v1(n: usize) -> Vec<RowInstance> {
    let mut out = vec![RowInstance::new(1, vec![]), RowInstance::new(2, vec![]), RowInstance::new(3, vec![])];
    for i in 1..=n - 2 {
        for j in 1..i {
            out.push(RowInstance::new(4, vec![i, j]));
        }
    }
    out
}

/// Every row instance listed for `(1_H)_2`.
pub fn expected_rows_v2(n: usize) -> Vec<RowInstance> {
    let mut out: Vec<RowInstance> = (1..=4).map(|r| RowInstance::new(r, vec![])).collect();
    out.extend((1..=n - 4).map(|i| RowInstance::new(5, vec![i])));
    for i in 1..=n - 4 {
        for j in 1..i {
            out.push(RowInstance::new(6, vec![i, j]));
        }
    }
    out
}

fn tally(instances: &[RowInstance], rows: usize) -> BTreeMap<usize, usize> {
    let mut t: BTreeMap<usize, usize> = (1..=rows).map(|r| (r, 0)).collect();
    for inst in instances {
        *t.entry(inst.row).or_default() += 1;
    }
    t
}

fn row_tallies(found: &[RowInstance], expected: &[RowInstance], rows: usize) -> Vec<RowTally> {
    let f = tally(found, rows);
    let e = tally(expected, rows);
    e.into_iter()
        .map(|(row, expected)| RowTally {
            row,
            found: f.get(&row).copied().unwrap_or(0),
            expected,
        })
        .collect()
}

/// Enumerates the 4-cycles through `(1_H)_1` and `(1_H)_2` of `Γ_n`,
/// compares them with the closed forms, the per-edge counts and the two
/// row tables.
pub fn census_check(n: usize) -> Result<CensusReport> {
    require_dimension("census_check", n, 6, "n >= 6")?;
    let g = gamma_n(n)?;
    let k = n - 2;
    let one = BitVector::identity(k);
    let v1 = gamma_index(n, 1, one);
    let v2 = gamma_index(n, 2, one);
    let cycles_v1 = enumerate_four_cycles_through(&g, v1)?;
    let cycles_v2 = enumerate_four_cycles_through(&g, v2)?;

    let mut per_edge_counts = Vec::new();
    let mut push = |w: usize, expected: usize| -> Result<()> {
        per_edge_counts.push(EdgeCount {
            edge: (g.label(v1).to_string(), g.label(w).to_string()),
            count: count_four_cycles_through(&g, v1, Some(edge(v1, w)))?,
            expected,
        });
        Ok(())
    };
    push(v2, 1)?;
    push(gamma_index(n, 4, one), 3)?;
    for i in 1..=n - 2 {
        push(gamma_index(n, 1, BitVector::generator(k, i)), if i >= n - 3 { n - 2 } else { n - 3 })?;
    }

    let h = gamma_group(n)?;
    let as_walk = |walk: [usize; 4]| walk.map(|x| PartedVertex::from_index(&h, x));
    let mut unclassified = 0;
    let mut found_v1 = Vec::new();
    for c in &cycles_v1 {
        match classify_v1(&as_walk(c.walk_from(v1).expect("cycle through v1"))) {
            Some(r) => found_v1.push(r),
            None => unclassified += 1,
        }
    }
    let mut found_v2 = Vec::new();
    for c in &cycles_v2 {
        match classify_v2(n, &as_walk(c.walk_from(v2).expect("cycle through v2"))) {
            Some(r) => found_v2.push(r),
            None => unclassified += 1,
        }
    }
    let (mut exp1, mut exp2) = (expected_rows_v1(n), expected_rows_v2(n));
    let rows_v1 = row_tallies(&found_v1, &exp1, 4);
    let rows_v2 = row_tallies(&found_v2, &exp2, 6);
    found_v1.sort();
    found_v2.sort();
    exp1.sort();
    exp2.sort();
    let patterns_match = unclassified == 0 && found_v1 == exp1 && found_v2 == exp2;

    let (count_v1, count_v2) = (cycles_v1.len(), cycles_v2.len());
    let pass = count_v1 == formula_v1(n)
        && count_v2 == formula_v2(n)
        && per_edge_counts.iter().all(|e| e.count == e.expected)
        && patterns_match;
    Ok(CensusReport {
        n,
        count_v1,
        count_v2,
        formula_v1: formula_v1(n),
        formula_v2: formula_v2(n),
        per_edge_counts,
        rows_v1,
        rows_v2,
        unclassified,
        patterns_match,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `SQ_n` labels of the two vertices.
    pub vertices: (String, String),
    /// The same vertices in `Γ_n`.
    pub gamma_vertices: (String, String),
    pub four_cycle_counts: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub n: usize,
    pub vertex_transitive: bool,
    pub orbit_count: Option<usize>,
    pub witness: Option<Witness>,
}

/// Orbit partition of `Aut(SQ_n)` as vertex labels, for `2^n` up to the
/// isomorphism search cap.
pub fn spined_orbits(n: usize) -> Result<Vec<Vec<String>>> {
    let g = spined_cube_recursive(n)?;
    Ok(automorphism_orbits(&g)?
        .into_iter()
        .map(|o| o.into_iter().map(|v| g.label(v).to_string()).collect())
        .collect())
}

/// For `n ≤ 5` the verdict comes from the full orbit partition. For
/// `n ≥ 6` it comes from the 4-cycle counts at `00⋯0` and `00⋯01`
/// (`(1_H)_1` and `(1_H)_2`), counted in `SQ_n` itself; the orbit count is
/// added while `SQ_n` fits under the isomorphism cap.
pub fn transitivity_report(n: usize) -> Result<TransitivityReport> {
    require_dimension("transitivity_report", n, 2, "n >= 2")?;
    if n <= 5 {
        let orbits = spined_orbits(n)?.len();
        return Ok(TransitivityReport {
            n,
            vertex_transitive: orbits == 1,
            orbit_count: Some(orbits),
            witness: None,
        });
    }
    let g = spined_cube_recursive(n)?;
    let (u, v) = (0usize, 1usize);
    let counts = (
        enumerate_four_cycles_through(&g, u)?.len(),
        enumerate_four_cycles_through(&g, v)?.len(),
    );
    let differ = counts.0 != counts.1;
    let orbit_count = if g.n_vertices() <= ISO_VERTEX_CAP {
        Some(automorphism_orbits(&g)?.len())
    } else {
        None
    };
    let gamma_label = |part: usize| format!("{part}:{}", binary_label(n - 2, 0));
    Ok(TransitivityReport {
        n,
        vertex_transitive: !differ && orbit_count == Some(1),
        orbit_count,
        witness: differ.then(|| Witness {
            vertices: (g.label(u).to_string(), g.label(v).to_string()),
            gamma_vertices: (gamma_label(1), gamma_label(2)),
            four_cycle_counts: counts,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas_at_small_n() {
        assert_eq!((formula_v1(6), formula_v2(6)), (9, 7));
        assert_eq!((formula_v1(7), formula_v2(7)), (13, 10));
        assert_eq!((formula_v1(9), formula_v2(9)), (24, 19));
        for n in 6..40 {
            assert_eq!(formula_v1(n) - formula_v2(n), n - 4);
        }
    }

    #[test]
    fn expected_rows_sum_to_formulas() {
        for n in 6..=12 {
            assert_eq!(expected_rows_v1(n).len(), formula_v1(n));
            assert_eq!(expected_rows_v2(n).len(), formula_v2(n));
        }
    }

    #[test]
    fn census_n7() {
        let r = census_check(7).unwrap();
        assert_eq!((r.count_v1, r.count_v2), (13, 10));
        assert!(r.pass, "{r:?}");
        assert_eq!(r.rows_v2.iter().map(|t| t.found).collect::<Vec<_>>(), vec![1, 1, 1, 1, 3, 3]);
    }

    #[test]
    fn census_rejects_small_n() {
        assert!(census_check(5).is_err());
    }

    #[test]
    fn misplaced_cycle_is_unclassified() {
        let k = 4;
        let p = |part, bits| PartedVertex::new(BitVector::from_bits(k, bits), part);
        // a square in part 3 is not a row of either table
        let walk = [p(3, 0), p(3, 0b1110), p(3, 0b0001), p(3, 0b1111)];
        assert_eq!(classify_v1(&walk), None);
        assert_eq!(classify_v2(6, &walk), None);
    }

    #[test]
    fn sq3_is_transitive() {
        let r = transitivity_report(3).unwrap();
        assert!(r.vertex_transitive);
        assert_eq!(r.orbit_count, Some(1));
        assert!(transitivity_report(2).unwrap().vertex_transitive);
    }

    #[test]
    fn sq9_witness() {
        let r = transitivity_report(9).unwrap();
        assert!(!r.vertex_transitive);
        assert_eq!(r.witness.unwrap().four_cycle_counts, (24, 19));
    }
}
