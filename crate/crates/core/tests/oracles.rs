//! Enumeration and h-values against independent labeled computations.

use std::collections::HashSet;

use eh_core::colex::ColexSubsets;
use eh_core::constructions::{clique_plus_isolated, hprime, ngon};
use eh_core::enumerate::{
    automorphism_count, brute_h_value, canonical_form, enumerate_qfree, h_value, h_value_with,
    is_canonical, HMode,
};
use eh_core::homsolve::homogeneous_number;
use eh_core::hypercore::induced_subgraph;
use eh_core::profiles::{is_q_free, q_complement};
use eh_core::{Error, ForbiddenFamily, UniformHypergraph, VertexSet};

fn fam(s: &str) -> ForbiddenFamily {
    s.parse().unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Applies `perm` as old -> new.
fn apply(h: &UniformHypergraph, perm: &[usize]) -> Vec<bool> {
    let mut bits = vec![false; ColexSubsets::new(h.n(), 3).count()];
    for e in h.edges() {
        let mut t: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
        t.sort_unstable();
        bits[eh_core::colex::rank(&t)] = true;
    }
    bits
}

/// Q-free labeled 3-graphs on `n <= 5` vertices, grouped into orbits under
/// the symmetric group by explicit permutation.
fn labeled_orbits(n: usize, q: &ForbiddenFamily) -> (usize, Vec<Vec<bool>>) {
    let triples: Vec<Vec<usize>> = ColexSubsets::new(n, 3).collect();
    let perms = permutations(n);
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut reps = Vec::new();
    let mut labeled = 0;
    for mask in 0u32..1 << triples.len() {
        let h = UniformHypergraph::from_edges(
            3,
            n,
            triples
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, t)| t.clone()),
        )
        .unwrap();
        if !is_q_free(&h, q).unwrap().is_free() {
            continue;
        }
        labeled += 1;
        let bits: Vec<bool> = (0..triples.len()).map(|i| mask >> i & 1 == 1).collect();
        if seen.contains(&bits) {
            continue;
        }
        for p in &perms {
            seen.insert(apply(&h, p));
        }
        reps.push(bits);
    }
    (labeled, reps)
}

#[test]
fn class_counts_match_orbit_counting() {
    for q in [
        "4:0", "4:2", "4:1,3", "4:0,4", "4:0,2,3", "4:1,2,3", "4:0,1,3", "4:1,3,4",
    ] {
        let q = fam(q);
        for n in 0..=5 {
            let (labeled, orbits) = labeled_orbits(n, &q);
            let classes = enumerate_qfree(n, &q).unwrap();
            assert_eq!(classes.len(), orbits.len(), "q = {q}, n = {n}");
            let fact: u64 = (1..=n as u64).product();
            let by_stabilizer: u64 = classes.iter().map(|c| fact / c.aut_count).sum();
            assert_eq!(by_stabilizer, labeled as u64, "q = {q}, n = {n}");
        }
    }
}

#[test]
fn h_value_matches_labeled_scan() {
    for q in [
        "4:0", "4:1", "4:2", "4:0,2", "4:1,3", "4:0,4", "4:0,2,3", "4:1,2,3", "4:0,1,3",
    ] {
        let q = fam(q);
        for n in 0..=5 {
            match (h_value(n, &q), brute_h_value(n, &q)) {
                (Ok(a), Ok(b)) => assert_eq!(a.value, b, "q = {q}, n = {n}"),
                (Err(Error::NoWitness { .. }), Err(Error::NoWitness { .. })) => {}
                other => panic!("q = {q}, n = {n}: {other:?}"),
            }
        }
    }
}

#[test]
fn complement_duality_beyond_the_oracle() {
    for q in ["4:0,1,3", "4:0,2", "4:1,3", "4:0,2,3"] {
        let q = fam(q);
        let qc = q_complement(&q);
        for n in 6..=7 {
            let a = h_value(n, &q).unwrap();
            let b = h_value(n, &qc).unwrap();
            assert_eq!(a.value, b.value, "q = {q}, n = {n}");
            assert_eq!(a.count, b.count, "q = {q}, n = {n}");
        }
    }
}

#[test]
fn monotonicity_under_larger_families() {
    // single-pair families explode past n = 6
    for (chain, nmax) in [
        (&["4:0", "4:0,3", "4:0,1,3"][..], 6),
        (&["4:0,3", "4:0,1,3"][..], 8),
    ] {
        for n in 4..=nmax {
            let values: Vec<usize> = chain
                .iter()
                .map(|q| h_value(n, &fam(q)).unwrap().value)
                .collect();
            assert!(
                values.windows(2).all(|w| w[0] <= w[1]),
                "n = {n}: {values:?}"
            );
        }
    }
}

#[test]
fn classes_are_pairwise_non_isomorphic() {
    for (q, nmax) in [("4:1,3", 7), ("4:0,2", 7), ("4:1,3,4", 7)] {
        let q = fam(q);
        for n in 4..=nmax {
            let classes = enumerate_qfree(n, &q).unwrap();
            let forms: HashSet<_> = classes
                .iter()
                .map(|c| canonical_form(&c.rep).unwrap())
                .collect();
            assert_eq!(forms.len(), classes.len());
            for c in &classes {
                assert!(is_canonical(&c.rep).unwrap());
                assert!(is_q_free(&c.rep, &q).unwrap().is_free());
                // the parent in the generation tree is the last-vertex deletion
                if n > 0 {
                    let parent = induced_subgraph(&c.rep, &VertexSet::range(n - 1)).unwrap();
                    assert!(is_canonical(&parent).unwrap());
                }
            }
        }
    }
}

#[test]
fn minimizer_is_canonically_least_and_mode_independent() {
    let q = fam("4:0,1,3");
    for n in 4..=8 {
        let full = h_value_with(n, &q, HMode::Full).unwrap();
        let short = h_value_with(n, &q, HMode::ShortCircuit).unwrap();
        assert_eq!(full.minimizer, short.minimizer);
        let classes = enumerate_qfree(n, &q).unwrap();
        let first = classes
            .iter()
            .find(|c| homogeneous_number(&c.rep).unwrap().size == full.value)
            .unwrap();
        assert_eq!(first, &full.minimizer);
    }
}

#[test]
fn named_extremal_graphs_attain_the_minimum() {
    // a clique plus an isolated vertex for {(4,0),(4,2),(4,3)}
    for n in 5..=9 {
        let h = clique_plus_isolated(n).unwrap();
        assert_eq!(homogeneous_number(&h).unwrap().size, n - 1);
        assert_eq!(h_value(n, &fam("4:0,2,3")).unwrap().value, n - 1);
    }
    // blow-ups of the 6-vertex design at n = 6k and n-gons otherwise for {(4,0),(4,1),(4,3)}
    let q = fam("4:0,1,3");
    assert!(is_q_free(&complement_of(&hprime()), &q).unwrap().is_free());
    for n in [7, 9] {
        let g = complement_of(&ngon(n).unwrap());
        assert!(is_q_free(&g, &q).unwrap().is_free());
        assert_eq!(
            homogeneous_number(&g).unwrap().size,
            h_value(n, &q).unwrap().value
        );
    }
}

fn complement_of(h: &UniformHypergraph) -> UniformHypergraph {
    eh_core::hypercore::complement(h)
}

#[test]
fn automorphisms_match_permutation_scan() {
    for h in [hprime(), ngon(6).unwrap(), clique_plus_isolated(5).unwrap()] {
        let own: Vec<bool> = apply(&h, &(0..h.n()).collect::<Vec<_>>());
        let count = permutations(h.n())
            .iter()
            .filter(|p| apply(&h, p) == own)
            .count();
        assert_eq!(automorphism_count(&h).unwrap(), count as u64);
    }
}
