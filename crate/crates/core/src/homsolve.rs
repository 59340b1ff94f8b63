//! Exact clique / coclique search for 2- and 3-graphs on at most 64 vertices,
//! and a seeded greedy fallback for anything larger.
//!
//! The exact engine is a plain branch and bound over vertices in ascending
//! order. It keeps the mask of vertices compatible with the partial set `P`:
//! for 3-graphs a vertex `w` is compatible when `p v w` has the wanted edge
//! status for every `p` in `P` and the vertex `v` just added. The bound is
//! `|P| + |candidates|`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::colex::{for_each_subset_of, rank};
use crate::error::{Error, Result};
use crate::hypercore::{HomogeneousWitness, UniformHypergraph, VertexSet, WitnessKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub size: usize,
    pub witness: HomogeneousWitness,
    /// Search-tree nodes visited.
    pub nodes_explored: u64,
}

enum Compat {
    Pairs(Vec<u64>),
    Triples { n: usize, masks: Vec<u64> },
}

struct Search {
    compat: Compat,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
}

impl Search {
    fn new(h: &UniformHypergraph, kind: WitnessKind) -> Result<Search> {
        h.check_exact_size("exact homogeneous search")?;
        let n = h.n();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let compat = match (h.r(), kind) {
            (2, WitnessKind::Clique) => Compat::Pairs(h.adjacency_masks()),
            (2, WitnessKind::Coclique) => Compat::Pairs(
                h.adjacency_masks()
                    .into_iter()
                    .enumerate()
                    .map(|(v, m)| !m & full & !(1u64 << v))
                    .collect(),
            ),
            (3, WitnessKind::Clique) => Compat::Triples {
                n,
                masks: h.pair_masks(),
            },
            (3, WitnessKind::Coclique) => Compat::Triples {
                n,
                masks: h.pair_masks().into_iter().map(|m| !m & full).collect(),
            },
            (r, _) => return Err(Error::UnsupportedUniformity(r)),
        };
        Ok(Search {
            compat,
            best: Vec::new(),
            current: Vec::with_capacity(n),
            nodes: 0,
        })
    }

    #[inline]
    fn restrict(&self, v: usize, cand: u64) -> u64 {
        match &self.compat {
            Compat::Pairs(adj) => cand & adj[v],
            Compat::Triples { n, masks } => {
                self.current.iter().fold(cand, |c, &p| c & masks[p * n + v])
            }
        }
    }

    fn expand(&mut self, mut cand: u64) {
        self.nodes += 1;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        while cand != 0 {
            if self.current.len() + cand.count_ones() as usize <= self.best.len() {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let next = self.restrict(v, cand);
            self.current.push(v);
            self.expand(next);
            self.current.pop();
        }
    }

    fn run(mut self, n: usize, kind: WitnessKind) -> SolveReport {
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        self.expand(all);
        SolveReport {
            size: self.best.len(),
            witness: HomogeneousWitness::new(
                kind,
                VertexSet::new(self.best).expect("search adds vertices in ascending order"),
            ),
            nodes_explored: self.nodes,
        }
    }
}

fn solve(h: &UniformHypergraph, kind: WitnessKind) -> Result<SolveReport> {
    Ok(Search::new(h, kind)?.run(h.n(), kind))
}

/// Largest vertex set all of whose r-subsets are edges (exact).
pub fn max_clique(h: &UniformHypergraph) -> Result<SolveReport> {
    solve(h, WitnessKind::Clique)
}

/// Largest vertex set spanning no edge (exact).
pub fn max_coclique(h: &UniformHypergraph) -> Result<SolveReport> {
    solve(h, WitnessKind::Coclique)
}

/// `h(H)`: the larger of the two, preferring the clique on ties.
///
/// With fewer than `r` vertices every set is homogeneous and the value is `n`.
pub fn homogeneous_number(h: &UniformHypergraph) -> Result<SolveReport> {
    let clique = max_clique(h)?;
    let coclique = max_coclique(h)?;
    let nodes = clique.nodes_explored + coclique.nodes_explored;
    let mut best = if clique.size >= coclique.size {
        clique
    } else {
        coclique
    };
    best.nodes_explored = nodes;
    Ok(best)
}

fn greedy_grow(h: &UniformHypergraph, order: &[usize], want_edge: bool) -> Vec<usize> {
    let r = h.r();
    let mut chosen: Vec<usize> = Vec::new();
    let mut buf = Vec::with_capacity(r);
    for &v in order {
        let mut ok = true;
        if chosen.len() + 1 >= r {
            for_each_subset_of(&chosen, r - 1, |sub| {
                if !ok {
                    return;
                }
                buf.clear();
                buf.extend_from_slice(sub);
                buf.push(v);
                buf.sort_unstable();
                if h.edge_bits().get(rank(&buf)) != want_edge {
                    ok = false;
                }
            });
        }
        if ok {
            let pos = chosen.partition_point(|&x| x < v);
            chosen.insert(pos, v);
        }
    }
    chosen
}

/// Greedy clique and coclique along a seeded random vertex order; returns the
/// larger (clique on ties). No size guarantee, any uniformity, any `n`.
///
/// The order is a Fisher-Yates shuffle driven by `ChaCha8Rng::seed_from_u64(seed)`.
pub fn greedy_homogeneous(h: &UniformHypergraph, seed: u64) -> HomogeneousWitness {
    let mut order: Vec<usize> = (0..h.n()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let clique = greedy_grow(h, &order, true);
    let coclique = greedy_grow(h, &order, false);
    let (kind, set) = if clique.len() >= coclique.len() {
        (WitnessKind::Clique, clique)
    } else {
        (WitnessKind::Coclique, coclique)
    };
    HomogeneousWitness::new(kind, VertexSet::new(set).expect("kept sorted"))
}

/// Greedy coclique in ascending vertex order.
pub(crate) fn greedy_coclique_ascending(h: &UniformHypergraph) -> VertexSet {
    let order: Vec<usize> = (0..h.n()).collect();
    VertexSet::new(greedy_grow(h, &order, false)).expect("kept sorted")
}
