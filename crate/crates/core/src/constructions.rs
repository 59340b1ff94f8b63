//! Explicit hypergraph families: affine-plane collinear triples, the n-gon
//! "triangle contains the centre" 3-graph, the 6-vertex 10-edge 3-graph and its
//! blow-ups, parity triples of a two-coloring, a clique plus an isolated
//! vertex, and the recursive r-partite edge count `g_r(m)`.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colex::{binom_usize, BitVec};
use crate::error::{Error, Result};
use crate::homsolve::max_clique;
use crate::hypercore::{TwoColoring, UniformHypergraph, VertexSet};

/// Part sizes of a blow-up, one entry per base vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartSizes(pub Vec<usize>);

impl PartSizes {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The vertex range of each part in the blow-up, in base-vertex order.
    pub fn parts(&self) -> Vec<VertexSet> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&s| {
                let part = VertexSet::new((start..start + s).collect()).expect("ranges are sorted");
                start += s;
                part
            })
            .collect()
    }
}

fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Collinear triples of AG(2, q) for a prime `q >= 3`, on the first `n`
/// points (default `q^2`) in row-major order; point `(x, y)` is `x * q + y`.
pub fn affine_plane(q: usize, n: Option<usize>) -> Result<UniformHypergraph> {
    if q < 3 || !is_prime(q) {
        return Err(Error::Unsupported(format!(
            "affine planes need a prime order q >= 3, got {q}"
        )));
    }
    let points = q * q;
    let n = n.unwrap_or(points);
    if !(3..=points).contains(&n) {
        return Err(Error::Precondition(format!(
            "point count {n} must lie in 3..={points}"
        )));
    }
    let mut lines: Vec<Vec<usize>> = Vec::with_capacity(q * q + q);
    for slope in 0..q {
        for intercept in 0..q {
            lines.push(
                (0..q)
                    .map(|x| x * q + (slope * x + intercept) % q)
                    .collect(),
            );
        }
    }
    for x in 0..q {
        lines.push((0..q).map(|y| x * q + y).collect());
    }
    let mut h = UniformHypergraph::empty(3, n)?;
    for line in lines {
        let kept: Vec<usize> = line.into_iter().filter(|&p| p < n).collect();
        for k in 2..kept.len() {
            for j in 1..k {
                for i in 0..j {
                    h.insert_edge(&[kept[i], kept[j], kept[k]])?;
                }
            }
        }
    }
    Ok(h)
}

/// Triangles of a regular polygon that contain the centre in their interior.
///
/// For odd `n` the vertices are those of the regular `n`-gon and a triple is
/// an edge iff each of its three circular gaps is below `n / 2`. A regular
/// polygon with an even number of vertices has antipodal pairs, so for even `n`
/// the vertices are `n` consecutive vertices of the regular `(n + 1)`-gon,
/// which keeps every triangle off the centre.
pub fn ngon(n: usize) -> Result<UniformHypergraph> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "the n-gon construction needs n >= 4, got {n}"
        )));
    }
    let sides = if n % 2 == 1 { n } else { n + 1 };
    let mut h = UniformHypergraph::empty(3, n)?;
    for c in 2..n {
        for b in 1..c {
            for a in 0..b {
                let gaps = [b - a, c - b, sides - c + a];
                if gaps.iter().all(|&g| 2 * g < sides) {
                    h.insert_edge(&[a, b, c])?;
                }
            }
        }
    }
    Ok(h)
}

/// The 6-vertex 3-graph with edges 123, 124, 345, 346, 561, 562, 135, 146,
/// 236, 245, relabeled to vertices `0..6`.
pub fn hprime() -> UniformHypergraph {
    const EDGES: [[usize; 3]; 10] = [
        [1, 2, 3],
        [1, 2, 4],
        [3, 4, 5],
        [3, 4, 6],
        [5, 6, 1],
        [5, 6, 2],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    UniformHypergraph::from_edges(3, 6, EDGES.iter().map(|e| e.map(|v| v - 1)))
        .expect("fixed edge list is valid")
}

/// Replaces base vertex `i` by a coclique of `sizes[i]` vertices (empty parts
/// allowed). An r-set is an edge iff it meets r distinct parts whose base
/// vertices form an edge.
pub fn blowup(base: &UniformHypergraph, sizes: &PartSizes) -> Result<UniformHypergraph> {
    if sizes.0.len() != base.n() {
        return Err(Error::Precondition(format!(
            "{} part sizes given for a base with {} vertices",
            sizes.0.len(),
            base.n()
        )));
    }
    let parts = sizes.parts();
    let mut h = UniformHypergraph::empty(base.r(), sizes.total())?;
    let mut pick = Vec::with_capacity(base.r());
    for e in base.edges() {
        let ranges: Vec<&[usize]> = e.iter().map(|&b| parts[b].as_slice()).collect();
        product_edges(&ranges, &mut pick, &mut h)?;
    }
    Ok(h)
}

fn product_edges(
    ranges: &[&[usize]],
    pick: &mut Vec<usize>,
    h: &mut UniformHypergraph,
) -> Result<()> {
    match ranges.split_first() {
        None => h.insert_edge(pick),
        Some((first, rest)) => {
            for &v in *first {
                pick.push(v);
                product_edges(rest, pick, h)?;
                pick.pop();
            }
            Ok(())
        }
    }
}

/// Triples whose three pairs include an odd number of red pairs.
pub fn parity_triples(chi: &TwoColoring) -> UniformHypergraph {
    let n = chi.n();
    let mut bits = BitVec::zeros(binom_usize(n, 3));
    let mut idx = 0;
    // colex order: c outermost, then b, then a
    for c in 2..n {
        for b in 1..c {
            let bc = chi.is_red(b, c);
            for a in 0..b {
                if chi.is_red(a, b) ^ chi.is_red(a, c) ^ bc {
                    bits.set(idx, true);
                }
                idx += 1;
            }
        }
    }
    UniformHypergraph::from_bits(3, n, bits)
}

/// Sizes of the largest red clique and the largest blue clique.
pub fn mono_clique_numbers(chi: &TwoColoring) -> Result<(usize, usize)> {
    let red = max_clique(&chi.red_graph())?.size;
    let blue = max_clique(&chi.blue_graph())?.size;
    Ok((red, blue))
}

/// Colors each pair of `0..n`, in colex order, red iff the top bit of the next
/// `u64` from `ChaCha8Rng::seed_from_u64(seed)` is set.
pub fn random_coloring(n: usize, seed: u64) -> TwoColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = binom_usize(n, 2);
    let mut red = BitVec::zeros(len);
    for i in 0..len {
        if rng.next_u64() >> 63 == 1 {
            red.set(i, true);
        }
    }
    TwoColoring::new(n, red).expect("length matches")
}

/// A complete 3-graph on `0..n-1` plus the isolated vertex `n - 1`.
pub fn clique_plus_isolated(n: usize) -> Result<UniformHypergraph> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "clique plus isolated vertex needs n >= 2, got {n}"
        )));
    }
    // the triples inside 0..n-1 are exactly the first C(n-1, 3) colex ranks
    let mut bits = BitVec::zeros(binom_usize(n, 3));
    for i in 0..binom_usize(n - 1, 3) {
        bits.set(i, true);
    }
    Ok(UniformHypergraph::from_bits(3, n, bits))
}

/// Edge count of the recursive construction on `m` vertices: split into `r`
/// near-equal parts (larger parts first), take every r-set meeting all parts,
/// recurse inside each part. Zero when `m < r`.
pub fn g_value(r: usize, m: usize) -> u64 {
    if r < 2 || m < r {
        return 0;
    }
    let (q, rem) = (m / r, m % r);
    let parts: Vec<usize> = (0..r).map(|i| if i < rem { q + 1 } else { q }).collect();
    let crossing: u64 = parts.iter().map(|&p| p as u64).product();
    crossing + parts.iter().map(|&p| g_value(r, p)).sum::<u64>()
}
