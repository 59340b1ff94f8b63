//! Uniform hypergraphs on labeled vertices, vertex sets, homogeneous witnesses,
//! two-colorings, and the induced-substructure operations built on them.
//!
//! Edges are stored as one bit per r-subset of `0..n`, indexed by colex rank.

use std::fmt;

use crate::colex::{binom_usize, rank, rank2, rank3, unrank, BitVec, ColexSubsets};
use crate::error::{Error, Result};

/// Largest vertex count accepted by the exact (bitmask based) algorithms.
pub const MAX_EXACT_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    r: usize,
    n: usize,
    edges: BitVec,
}

impl UniformHypergraph {
    pub fn empty(r: usize, n: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::UnsupportedUniformity(r));
        }
        Ok(UniformHypergraph {
            r,
            n,
            edges: BitVec::zeros(binom_usize(n, r)),
        })
    }

    pub fn complete(r: usize, n: usize) -> Result<Self> {
        let mut h = Self::empty(r, n)?;
        h.edges = BitVec::ones(h.edges.len());
        Ok(h)
    }

    /// Builds a hypergraph from edge lists given in any vertex order.
    pub fn from_edges<I, E>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut h = Self::empty(r, n)?;
        for e in edges {
            h.insert_edge(e.as_ref())?;
        }
        Ok(h)
    }

    pub(crate) fn from_bits(r: usize, n: usize, edges: BitVec) -> Self {
        debug_assert_eq!(edges.len(), binom_usize(n, r));
        UniformHypergraph { r, n, edges }
    }

    /// Adds the edge spanned by `vertices` (any order). Adding an existing edge is a no-op.
    pub fn insert_edge(&mut self, vertices: &[usize]) -> Result<()> {
        let idx = self.edge_index(vertices)?;
        self.edges.set(idx, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, vertices: &[usize]) -> Result<()> {
        let idx = self.edge_index(vertices)?;
        self.edges.set(idx, false);
        Ok(())
    }

    fn edge_index(&self, vertices: &[usize]) -> Result<usize> {
        if vertices.len() != self.r {
            return Err(Error::Precondition(format!(
                "edge {:?} has {} vertices, expected {}",
                vertices,
                vertices.len(),
                self.r
            )));
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!(
                "edge {vertices:?} repeats a vertex"
            )));
        }
        if let Some(&v) = sorted.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        Ok(rank(&sorted))
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones()
    }

    /// The colex-indexed edge bit vector.
    pub fn edge_bits(&self) -> &BitVec {
        &self.edges
    }

    /// Whether the r-set `vertices` (any order, distinct, in range) is an edge.
    pub fn contains_edge(&self, vertices: &[usize]) -> bool {
        self.edge_index(vertices)
            .map(|i| self.edges.get(i))
            .unwrap_or(false)
    }

    /// Edge test for a 3-graph on three distinct vertices in any order.
    #[inline]
    pub fn has_triple(&self, a: usize, b: usize, c: usize) -> bool {
        debug_assert_eq!(self.r, 3);
        let (a, b, c) = sort3(a, b, c);
        self.edges.get(rank3(a, b, c))
    }

    /// Edge test for a 2-graph.
    #[inline]
    pub fn has_pair(&self, a: usize, b: usize) -> bool {
        debug_assert_eq!(self.r, 2);
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.edges.get(rank2(a, b))
    }

    /// Edges in ascending colex order, each as an ascending vertex list.
    pub fn edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.edges.iter_ones().map(move |i| unrank(i, self.r))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges().filter(|e| e.contains(&v)).count()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.as_slice().last() {
            Some(&v) if v >= self.n => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_exact_size(&self, what: &'static str) -> Result<()> {
        if self.n > MAX_EXACT_N {
            Err(Error::SizeLimit {
                what,
                n: self.n,
                max: MAX_EXACT_N,
            })
        } else {
            Ok(())
        }
    }

    /// For a 3-graph with `n <= 64`: entry `x * n + y` is the mask of vertices `z`
    /// with `xyz` an edge.
    pub(crate) fn pair_masks(&self) -> Vec<u64> {
        debug_assert_eq!(self.r, 3);
        debug_assert!(self.n <= MAX_EXACT_N);
        let n = self.n;
        let mut masks = vec![0u64; n * n];
        for e in self.edges.iter_ones() {
            let t = unrank(e, 3);
            let (a, b, c) = (t[0], t[1], t[2]);
            masks[a * n + b] |= 1 << c;
            masks[b * n + a] |= 1 << c;
            masks[a * n + c] |= 1 << b;
            masks[c * n + a] |= 1 << b;
            masks[b * n + c] |= 1 << a;
            masks[c * n + b] |= 1 << a;
        }
        masks
    }

    /// For a 2-graph with `n <= 64`: neighbourhood masks.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert_eq!(self.r, 2);
        debug_assert!(self.n <= MAX_EXACT_N);
        let mut adj = vec![0u64; self.n];
        for e in self.edges.iter_ones() {
            let p = unrank(e, 2);
            adj[p[0]] |= 1 << p[1];
            adj[p[1]] |= 1 << p[0];
        }
        adj
    }
}

#[inline(always)]
pub(crate) fn sort3(a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let (b, c) = if b < c { (b, c) } else { (c, b) };
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    (a, b, c)
}

/// A strictly increasing list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Accepts an already strictly increasing list.
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(format!(
                "vertex set {vertices:?} is not strictly increasing"
            )));
        }
        Ok(VertexSet(vertices))
    }

    /// Sorts and deduplicates.
    pub fn from_unsorted(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            v.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(v)
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    /// Bitmask form; `None` if some vertex is 64 or larger.
    pub fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |m, &v| (v < 64).then(|| m | (1u64 << v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Maps every element through `f` and re-sorts.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> VertexSet {
        VertexSet::from_unsorted(self.0.iter().map(|&v| f(v)).collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessKind {
    Clique,
    Coclique,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::Clique => "clique",
            WitnessKind::Coclique => "coclique",
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            WitnessKind::Clique => WitnessKind::Coclique,
            WitnessKind::Coclique => WitnessKind::Clique,
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A vertex set claimed to be a clique or a coclique of some host.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousWitness {
    pub kind: WitnessKind,
    pub vertices: VertexSet,
}

impl HomogeneousWitness {
    pub fn new(kind: WitnessKind, vertices: VertexSet) -> Self {
        HomogeneousWitness { kind, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks every r-subset of the witness against `host`.
    pub fn validate(&self, host: &UniformHypergraph) -> bool {
        if host.check_set(&self.vertices).is_err() {
            return false;
        }
        match self.kind {
            WitnessKind::Clique => is_clique(host, &self.vertices),
            WitnessKind::Coclique => is_coclique(host, &self.vertices),
        }
    }
}

impl fmt::Display for HomogeneousWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.len(), self.kind)?;
        if !self.vertices.is_empty() {
            write!(f, " {}", self.vertices)?;
        }
        Ok(())
    }
}

fn all_subsets_match(h: &UniformHypergraph, s: &VertexSet, want: bool) -> bool {
    let vs = s.as_slice();
    if vs.len() < h.r {
        return true;
    }
    ColexSubsets::new(vs.len(), h.r).all(|pos| {
        let sub: Vec<usize> = pos.iter().map(|&i| vs[i]).collect();
        h.edges.get(rank(&sub)) == want
    })
}

pub fn is_clique(h: &UniformHypergraph, s: &VertexSet) -> bool {
    all_subsets_match(h, s, true)
}

pub fn is_coclique(h: &UniformHypergraph, s: &VertexSet) -> bool {
    all_subsets_match(h, s, false)
}

/// A red/blue coloring of the pairs of `0..n`; bit set means red.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    n: usize,
    red: BitVec,
}

impl TwoColoring {
    pub fn new(n: usize, red: BitVec) -> Result<Self> {
        if red.len() != binom_usize(n, 2) {
            return Err(Error::Precondition(format!(
                "coloring of {} vertices needs {} pair bits, got {}",
                n,
                binom_usize(n, 2),
                red.len()
            )));
        }
        Ok(TwoColoring { n, red })
    }

    pub fn all_blue(n: usize) -> Self {
        TwoColoring {
            n,
            red: BitVec::zeros(binom_usize(n, 2)),
        }
    }

    pub fn all_red(n: usize) -> Self {
        TwoColoring {
            n,
            red: BitVec::ones(binom_usize(n, 2)),
        }
    }

    pub fn from_red_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut c = Self::all_blue(n);
        for &(a, b) in pairs {
            if a == b || a >= n || b >= n {
                return Err(Error::Precondition(format!("bad pair ({a}, {b})")));
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            c.red.set(rank2(a, b), true);
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn red_bits(&self) -> &BitVec {
        &self.red
    }

    pub fn red_count(&self) -> usize {
        self.red.count_ones()
    }

    #[inline]
    pub fn is_red(&self, a: usize, b: usize) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.red.get(rank2(a, b))
    }

    /// The red pairs as a 2-graph.
    pub fn red_graph(&self) -> UniformHypergraph {
        UniformHypergraph::from_bits(2, self.n, self.red.clone())
    }

    pub fn blue_graph(&self) -> UniformHypergraph {
        UniformHypergraph::from_bits(2, self.n, self.red.negated())
    }
}

/// Number of edges of `h` inside `s`.
pub fn induced_count(h: &UniformHypergraph, s: &VertexSet) -> Result<usize> {
    h.check_set(s)?;
    if s.len() < h.r {
        return Err(Error::Precondition(format!(
            "vertex set of size {} is smaller than the uniformity {}",
            s.len(),
            h.r
        )));
    }
    Ok(count_inside(h, s.as_slice()))
}

/// Edge count inside a sorted, in-range slice; no validation.
pub(crate) fn count_inside(h: &UniformHypergraph, vs: &[usize]) -> usize {
    if h.r == 3 {
        let mut count = 0;
        for k in 2..vs.len() {
            for j in 1..k {
                for i in 0..j {
                    count += h.edges.get(rank3(vs[i], vs[j], vs[k])) as usize;
                }
            }
        }
        return count;
    }
    let mut count = 0;
    crate::colex::for_each_subset_of(vs, h.r, |sub| count += h.edges.get(rank(sub)) as usize);
    count
}

/// The sub-hypergraph induced on `s`, relabeled `s[i] -> i`.
pub fn induced_subgraph(h: &UniformHypergraph, s: &VertexSet) -> Result<UniformHypergraph> {
    h.check_set(s)?;
    let vs = s.as_slice();
    let m = vs.len();
    let mut bits = BitVec::zeros(binom_usize(m, h.r));
    for (i, pos) in ColexSubsets::new(m, h.r).enumerate() {
        let sub: Vec<usize> = pos.iter().map(|&p| vs[p]).collect();
        if h.edges.get(rank(&sub)) {
            bits.set(i, true);
        }
    }
    Ok(UniformHypergraph::from_bits(h.r, m, bits))
}

/// Every r-set flips between edge and non-edge.
pub fn complement(h: &UniformHypergraph) -> UniformHypergraph {
    UniformHypergraph::from_bits(h.r, h.n, h.edges.negated())
}

/// The (r-1)-graph on the vertices other than `v` (order-preserving relabel)
/// whose edges complete `v` to an edge of `h`.
pub fn link_graph(h: &UniformHypergraph, v: usize) -> Result<UniformHypergraph> {
    if h.r < 3 {
        return Err(Error::UnsupportedUniformity(h.r));
    }
    h.check_vertex(v)?;
    let mut link = UniformHypergraph::empty(h.r - 1, h.n - 1)?;
    for e in h.edges() {
        if e.contains(&v) {
            let rest: Vec<usize> = e
                .iter()
                .filter(|&&w| w != v)
                .map(|&w| if w > v { w - 1 } else { w })
                .collect();
            link.edges.set(rank(&rest), true);
        }
    }
    Ok(link)
}

/// The link of `u` restricted to `s`: a 2-graph on `|s|` vertices (`s[i] -> i`)
/// with `{i, j}` an edge iff `u s[i] s[j]` is an edge of the 3-graph `h`.
pub fn restricted_link(
    h: &UniformHypergraph,
    u: usize,
    s: &VertexSet,
) -> Result<UniformHypergraph> {
    if h.r != 3 {
        return Err(Error::UnsupportedUniformity(h.r));
    }
    h.check_vertex(u)?;
    h.check_set(s)?;
    if s.contains(u) {
        return Err(Error::Precondition(format!(
            "vertex {u} lies in the restricting set"
        )));
    }
    let vs = s.as_slice();
    let mut g = UniformHypergraph::empty(2, vs.len())?;
    for j in 1..vs.len() {
        for i in 0..j {
            if h.has_triple(u, vs[i], vs[j]) {
                g.edges.set(rank2(i, j), true);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{affine_plane, hprime, ngon, parity_triples};

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn induced_count_examples() {
        let k4 = UniformHypergraph::complete(3, 4).unwrap();
        assert_eq!(induced_count(&k4, &set(&[0, 1, 2, 3])).unwrap(), 4);
        let e = UniformHypergraph::empty(3, 7).unwrap();
        assert_eq!(induced_count(&e, &set(&[1, 3, 4, 6])).unwrap(), 0);
        let chi = TwoColoring::from_red_pairs(4, &[(0, 1)]).unwrap();
        let p = parity_triples(&chi);
        assert_eq!(induced_count(&p, &set(&[0, 1, 2, 3])).unwrap(), 2);
    }

    #[test]
    fn induced_count_errors() {
        let k4 = UniformHypergraph::complete(3, 4).unwrap();
        assert!(matches!(
            induced_count(&k4, &set(&[0, 1])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            induced_count(&k4, &set(&[0, 1, 4])),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = UniformHypergraph::complete(3, 5).unwrap();
        assert_eq!(
            induced_subgraph(&k5, &set(&[0, 2, 4])).unwrap(),
            UniformHypergraph::complete(3, 3).unwrap()
        );
        let hp = hprime();
        assert_eq!(
            induced_subgraph(&hp, &set(&[0, 1, 2, 3]))
                .unwrap()
                .edge_count(),
            2
        );
        assert_eq!(induced_subgraph(&hp, &VertexSet::range(6)).unwrap(), hp);
        assert!(induced_subgraph(&hp, &set(&[2, 9])).is_err());
    }

    #[test]
    fn complement_examples() {
        let e6 = UniformHypergraph::empty(3, 6).unwrap();
        assert_eq!(complement(&e6), UniformHypergraph::complete(3, 6).unwrap());
        let k4 = UniformHypergraph::complete(3, 4).unwrap();
        assert_eq!(complement(&k4), UniformHypergraph::empty(3, 4).unwrap());
        let hp = hprime();
        assert_eq!(complement(&hp).edge_count(), 10);
        assert_eq!(complement(&complement(&hp)), hp);
    }

    #[test]
    fn link_graph_examples() {
        let k4 = UniformHypergraph::complete(3, 4).unwrap();
        assert_eq!(
            link_graph(&k4, 0).unwrap(),
            UniformHypergraph::complete(2, 3).unwrap()
        );
        let e = UniformHypergraph::empty(3, 6).unwrap();
        assert_eq!(link_graph(&e, 3).unwrap().edge_count(), 0);
        let l = link_graph(&ngon(5).unwrap(), 0).unwrap();
        assert_eq!((l.n(), l.r(), l.edge_count()), (4, 2, 3));
        let g = UniformHypergraph::complete(2, 4).unwrap();
        assert_eq!(link_graph(&g, 0), Err(Error::UnsupportedUniformity(2)));
    }

    #[test]
    fn restricted_link_examples() {
        let k5 = UniformHypergraph::complete(3, 5).unwrap();
        assert_eq!(
            restricted_link(&k5, 4, &set(&[0, 1, 2])).unwrap(),
            UniformHypergraph::complete(2, 3).unwrap()
        );
        let e = UniformHypergraph::empty(3, 5).unwrap();
        assert_eq!(
            restricted_link(&e, 0, &set(&[1, 2, 3]))
                .unwrap()
                .edge_count(),
            0
        );
        assert!(restricted_link(&k5, 1, &set(&[0, 1, 2])).is_err());
    }

    #[test]
    fn restricted_link_in_affine_plane_matches_brute_force() {
        // points are x*3 + y; the line x = 1 is {3, 4, 5}; point 0 is off it
        let h = affine_plane(3, None).unwrap();
        let line = set(&[3, 4, 5]);
        let g = restricted_link(&h, 0, &line).unwrap();
        // oracle: u, v, w collinear over GF(3) via the determinant
        let pt = |p: usize| ((p / 3) as i64, (p % 3) as i64);
        let collinear = |a: usize, b: usize, c: usize| {
            let (ax, ay) = pt(a);
            let (bx, by) = pt(b);
            let (cx, cy) = pt(c);
            ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)).rem_euclid(3) == 0
        };
        for j in 1..3 {
            for i in 0..j {
                let vs = line.as_slice();
                assert_eq!(g.has_pair(i, j), collinear(0, vs[i], vs[j]));
            }
        }
        // a line not through u meets every line through u at most once
        assert_eq!(g.edge_count(), 0);
        // a non-collinear set picks up exactly the pairs collinear with u
        let s = set(&[1, 2, 3, 6]);
        let g = restricted_link(&h, 0, &s).unwrap();
        let vs = s.as_slice();
        let mut expected = 0;
        for j in 1..4 {
            for i in 0..j {
                let c = collinear(0, vs[i], vs[j]);
                expected += c as usize;
                assert_eq!(g.has_pair(i, j), c);
            }
        }
        assert_eq!(g.edge_count(), expected);
        assert_eq!(expected, 2);
    }

    #[test]
    fn witness_validation() {
        let hp = hprime();
        let w = HomogeneousWitness::new(WitnessKind::Clique, set(&[0, 1, 2]));
        assert!(w.validate(&hp));
        let w = HomogeneousWitness::new(WitnessKind::Coclique, set(&[0, 1, 2]));
        assert!(!w.validate(&hp));
        let w = HomogeneousWitness::new(WitnessKind::Coclique, set(&[0, 9]));
        assert!(!w.validate(&hp));
        // fewer than r vertices are vacuously both
        let w = HomogeneousWitness::new(WitnessKind::Coclique, set(&[4, 5]));
        assert!(w.validate(&hp));
    }

    #[test]
    fn edge_insertion_checks() {
        let mut h = UniformHypergraph::empty(3, 4).unwrap();
        assert!(h.insert_edge(&[2, 0, 1]).is_ok());
        assert!(h.contains_edge(&[0, 1, 2]));
        assert!(h.insert_edge(&[0, 1, 1]).is_err());
        assert!(h.insert_edge(&[0, 1]).is_err());
        assert!(h.insert_edge(&[0, 1, 4]).is_err());
        assert_eq!(h.degree(1), 1);
        h.remove_edge(&[0, 1, 2]).unwrap();
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn vertex_set_basics() {
        assert!(VertexSet::new(vec![1, 1]).is_err());
        assert!(VertexSet::new(vec![2, 1]).is_err());
        let s = VertexSet::from_unsorted(vec![5, 1, 5, 3]);
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert_eq!(VertexSet::from_mask(s.to_mask().unwrap()), s);
        assert_eq!(s.to_string(), "1 3 5");
        assert_eq!(VertexSet::new(vec![70]).unwrap().to_mask(), None);
    }
}
