use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;

use spined::graph::{automorphism_orbits, find_isomorphism, io, is_isomorphism, Graph};
use spined::mcayley::group::{independent, BitVector, KElement, Span};
use spined::topology::{hypercube, spined_cube_direct, spined_cube_recursive};

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Random simple graph on `n` vertices from an edge mask over all pairs.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges = pairs.enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(labels(n), edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_force_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.n_vertices() == g2.n_vertices()
        && g1.n_edges() == g2.n_edges()
        && permutations(g1.n_vertices())
            .iter()
            .any(|p| g1.edges().all(|(u, v)| g2.has_edge(p[u], p[v])))
}

/// Normal form of a word in `K` by rewriting: `b_i b_i = 1`, generators
/// commute except `b_4 b_1 = b_1 b_3 b_4`.
fn k_by_rewriting(word: &[usize]) -> [u8; 4] {
    let mut w = word.to_vec();
    loop {
        if let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] == w[i + 1]) {
            w.drain(i..i + 2);
            continue;
        }
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
            break;
        };
        if (w[i], w[i + 1]) == (4, 1) {
            w.splice(i..i + 2, [1, 3, 4]);
        } else {
            w.swap(i, i + 1);
        }
    }
    let mut e = [0u8; 4];
    for g in w {
        e[g - 1] ^= 1;
    }
    e
}

fn topology(kind: u8, n: usize) -> Graph {
    match kind {
        0 => hypercube(n).unwrap(),
        1 => spined_cube_recursive(n).unwrap(),
        _ => spined_cube_direct(n).unwrap(),
    }
}

proptest! {
    #[test]
    fn handshake(kind in 0u8..3, n in 1usize..=10) {
        let g = topology(kind, n);
        prop_assert_eq!(g.degree_sum(), 2 * g.n_edges());
        prop_assert_eq!(g.regular_degree(), Some(n));
        prop_assert_eq!(g.n_vertices(), 1 << n);
    }

    #[test]
    fn handshake_on_random_graphs(n in 1usize..=9, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let sum: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.n_edges());
    }

    #[test]
    fn edge_list_round_trip(kind in 0u8..3, n in 1usize..=8) {
        let g = topology(kind, n);
        let back = io::parse_edge_list(&io::to_edge_list(&g)).unwrap();
        prop_assert_eq!(back.n_vertices(), g.n_vertices());
        prop_assert_eq!(back.labelled_edge_set(), g.labelled_edge_set());
        let back = io::parse_json(&io::to_json(&g)).unwrap();
        prop_assert_eq!(back.labelled_edge_set(), g.labelled_edge_set());
    }

    #[test]
    fn iso_matches_exhaustion(n in 1usize..=7, m1 in any::<u64>(), m2 in any::<u64>()) {
        let (g1, g2) = (graph_from_mask(n, m1), graph_from_mask(n, m2));
        let found = find_isomorphism(&g1, &g2).unwrap();
        prop_assert_eq!(found.is_some(), brute_force_isomorphic(&g1, &g2));
        if let Some(pi) = found {
            prop_assert!(is_isomorphism(&g1, &g2, &pi));
        }
    }

    #[test]
    fn iso_finds_hidden_permutation(n in 1usize..=8, mask in any::<u64>(), seed in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm).unwrap();
        let pi = find_isomorphism(&g, &h).unwrap();
        prop_assert!(pi.is_some_and(|pi| g.edges().all(|(u, v)| h.has_edge(pi[u], pi[v]))));
    }

    #[test]
    fn orbits_stable_under_relabelling(kind in 0u8..2, n in 2usize..=4, perm in Just(()).prop_perturb(|_, mut rng| {
        let mut p: Vec<usize> = (0..16).collect();
        for i in (1..16).rev() {
            p.swap(i, rng.random_range(0..=i));
        }
        p
    })) {
        let g = topology(kind, n);
        let size = g.n_vertices();
        let perm: Vec<usize> = perm.into_iter().filter(|&p| p < size).collect();
        let h = g.permuted(&perm).unwrap();
        let by_label = |g: &Graph, orbits: Vec<Vec<usize>>| -> BTreeSet<BTreeSet<String>> {
            orbits.into_iter().map(|o| o.into_iter().map(|v| g.label(v).to_string()).collect()).collect()
        };
        let before = by_label(&g, automorphism_orbits(&g).unwrap());
        let after = by_label(&h, automorphism_orbits(&h).unwrap());
        prop_assert_eq!(before, after);
    }

    #[test]
    fn k_product_matches_rewriting(a in prop::collection::vec(1usize..=4, 0..12), b in prop::collection::vec(1usize..=4, 0..12)) {
        let product = KElement::word(&a).mul(KElement::word(&b));
        let joined: Vec<usize> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(product.exponents(), k_by_rewriting(&joined));
    }

    #[test]
    fn k_is_a_group(x in 0u8..16, y in 0u8..16, z in 0u8..16) {
        let e = |v: u8| KElement::from_exponents([v >> 3 & 1, v >> 2 & 1, v >> 1 & 1, v & 1]);
        let (x, y, z) = (e(x), e(y), e(z));
        prop_assert_eq!(x.mul(y).mul(z), x.mul(y.mul(z)));
        prop_assert_eq!(x.mul(x.inverse()), KElement::IDENTITY);
        prop_assert_eq!(x.inverse().mul(x), KElement::IDENTITY);
    }

    #[test]
    fn span_membership_by_enumeration(rank in 1usize..=6, raw in prop::collection::vec(any::<u64>(), 0..5), x in any::<u64>()) {
        let mask = (1u64 << rank) - 1;
        let gens: Vec<BitVector> = raw.iter().map(|&b| BitVector::from_bits(rank, b & mask)).collect();
        let span: HashSet<u64> = (0..1u64 << gens.len())
            .map(|s| (0..gens.len()).filter(|&j| s >> j & 1 == 1).fold(0, |acc, j| acc ^ gens[j].bits()))
            .collect();
        let sp = Span::new(rank, &gens);
        prop_assert_eq!(1usize << sp.dimension(), span.len());
        prop_assert_eq!(independent(rank, &gens), span.len() == 1 << gens.len());
        let x = BitVector::from_bits(rank, x & mask);
        prop_assert_eq!(sp.contains(x), span.contains(&x.bits()));
        let rep = sp.coset_representative(x);
        prop_assert!(span.contains(&(rep.bits() ^ x.bits())));
    }
}
