//! Canonical forms, isomorph-free enumeration of Q-free 3-graphs, the exact
//! minimum `h(n, Q)`, a labeled brute-force oracle, and a classifier for the
//! 3-graphs in which every four vertices span zero or two edges.
//!
//! # Canonical form
//!
//! The canonical form of `H` is the relabeling whose colex edge bit vector is
//! least in [`BitVec::lex_cmp`] order. Since the r-sets inside `0..k` form a
//! colex prefix, the vector is decided block by block: choosing the vertex that
//! receives label `k` fixes exactly the bits of the r-sets whose largest label
//! is `k`. The search keeps every partial labeling whose prefix ties the best
//! one, and merges partial labelings that leave an identical labeled remainder
//! (same used set, same relabeled hypergraph), so the work stays small even for
//! highly symmetric inputs.
//!
//! Because the least vector's prefix on `0..n-1` is itself least, deleting the
//! last vertex of a canonical hypergraph leaves a canonical hypergraph. The
//! enumeration exploits this: a child is a canonical parent plus one new last
//! vertex, and it is kept iff it is canonical. That child's canonical deletion
//! (the vertex whose removal gives the least `(n-1)`-vertex form) then
//! reproduces the parent, so each class appears exactly once.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::colex::{binom_usize, rank2, BitVec};
use crate::constructions::{blowup, hprime, ngon, PartSizes};
use crate::error::{Error, Result};
use crate::homsolve::{greedy_homogeneous, homogeneous_number};
use crate::hypercore::{UniformHypergraph, VertexSet};
use crate::profiles::ForbiddenFamily;

/// Largest vertex count for canonical forms and enumeration.
pub const MAX_CANON_N: usize = 12;

/// Largest vertex count for [`brute_h_value`].
pub const MAX_BRUTE_N: usize = 5;

enum Adjacency {
    Graph(Vec<u64>),
    Triples { n: usize, masks: Vec<u64> },
}

impl Adjacency {
    fn new(h: &UniformHypergraph) -> Result<Self> {
        match h.r() {
            2 => Ok(Adjacency::Graph(h.adjacency_masks())),
            3 => Ok(Adjacency::Triples {
                n: h.n(),
                masks: h.pair_masks(),
            }),
            r => Err(Error::UnsupportedUniformity(r)),
        }
    }

    /// Bits of the r-sets `{w} ∪ labels` with `w` taking label `perm.len()`,
    /// read in colex order, first bit most significant.
    #[inline]
    fn block(&self, perm: &[usize], w: usize) -> u64 {
        let mut out = 0u64;
        match self {
            Adjacency::Graph(adj) => {
                for &a in perm {
                    out = (out << 1) | ((adj[a] >> w) & 1);
                }
            }
            Adjacency::Triples { n, masks } => {
                for (j, &b) in perm.iter().enumerate().skip(1) {
                    for &a in &perm[..j] {
                        out = (out << 1) | ((masks[a * n + b] >> w) & 1);
                    }
                }
            }
        }
        out
    }

    /// The edge bit vector after relabeling `order[i] -> i`.
    fn relabeled(&self, r: usize, order: &[usize]) -> BitVec {
        let n = order.len();
        let mut bits = BitVec::zeros(binom_usize(n, r));
        let mut idx = 0;
        match self {
            Adjacency::Graph(adj) => {
                for j in 1..n {
                    for i in 0..j {
                        if (adj[order[i]] >> order[j]) & 1 == 1 {
                            bits.set(idx, true);
                        }
                        idx += 1;
                    }
                }
            }
            Adjacency::Triples { n: hn, masks } => {
                for k in 2..n {
                    for j in 1..k {
                        let m = masks[order[j] * hn + order[k]];
                        for &oi in &order[..j] {
                            if (m >> oi) & 1 == 1 {
                                bits.set(idx, true);
                            }
                            idx += 1;
                        }
                    }
                }
            }
        }
        bits
    }
}

#[derive(Clone)]
struct Partial {
    perm: Vec<usize>,
    used: u64,
}

fn check_canon_input(h: &UniformHypergraph) -> Result<()> {
    if h.n() > MAX_CANON_N {
        return Err(Error::SizeLimit {
            what: "canonical form",
            n: h.n(),
            max: MAX_CANON_N,
        });
    }
    Ok(())
}

/// Drops partial labelings whose labeled remainder duplicates an earlier one.
fn merge_equivalent(adj: &Adjacency, r: usize, n: usize, states: Vec<Partial>) -> Vec<Partial> {
    if states.len() <= 1 {
        return states;
    }
    let mut seen: HashSet<(u64, BitVec)> = HashSet::with_capacity(states.len());
    states
        .into_iter()
        .filter(|s| {
            let mut order = s.perm.clone();
            order.extend((0..n).filter(|&v| s.used >> v & 1 == 0));
            seen.insert((s.used, adj.relabeled(r, &order)))
        })
        .collect()
}

enum Target {
    /// Find the least labeling.
    Minimum,
    /// Decide whether the identity labeling is least.
    Identity,
}

/// Returns the least labeling, or `None` when testing the identity and some
/// labeling beats it.
fn least_labeling(h: &UniformHypergraph, target: Target) -> Result<Option<Vec<usize>>> {
    check_canon_input(h)?;
    let n = h.n();
    let adj = Adjacency::new(h)?;
    let identity: Vec<usize> = (0..n).collect();
    let mut states = vec![Partial {
        perm: Vec::with_capacity(n),
        used: 0,
    }];
    for k in 0..n {
        let mut best = match target {
            Target::Minimum => u64::MAX,
            Target::Identity => adj.block(&identity[..k], k),
        };
        let mut next = Vec::new();
        for s in &states {
            for w in (0..n).filter(|&w| s.used >> w & 1 == 0) {
                let b = adj.block(&s.perm, w);
                if b < best {
                    if let Target::Identity = target {
                        return Ok(None);
                    }
                    best = b;
                    next.clear();
                }
                if b == best {
                    let mut perm = s.perm.clone();
                    perm.push(w);
                    next.push(Partial {
                        perm,
                        used: s.used | 1 << w,
                    });
                }
            }
        }
        states = merge_equivalent(&adj, h.r(), n, next);
    }
    Ok(Some(states.swap_remove(0).perm))
}

/// The relabeling `order[i] -> i` of `h`.
pub fn relabel(h: &UniformHypergraph, order: &[usize]) -> Result<UniformHypergraph> {
    if order.len() != h.n() {
        return Err(Error::Precondition(
            "relabeling must list every vertex".into(),
        ));
    }
    let mut seen = 0u128;
    for &v in order {
        if v >= h.n() || v >= 128 || seen >> v & 1 == 1 {
            return Err(Error::Precondition(format!(
                "{order:?} is not a permutation"
            )));
        }
        seen |= 1 << v;
    }
    h.check_exact_size("relabel")?;
    let adj = Adjacency::new(h)?;
    Ok(UniformHypergraph::from_bits(
        h.r(),
        h.n(),
        adj.relabeled(h.r(), order),
    ))
}

/// Canonical form plus the labeling producing it (`order[i]` gets label `i`).
pub fn canonical_labeling(h: &UniformHypergraph) -> Result<(UniformHypergraph, Vec<usize>)> {
    let order = least_labeling(h, Target::Minimum)?.expect("minimum search always finishes");
    let form = relabel(h, &order)?;
    Ok((form, order))
}

/// The least relabeling of `h`; isomorphic inputs give identical outputs.
pub fn canonical_form(h: &UniformHypergraph) -> Result<UniformHypergraph> {
    Ok(canonical_labeling(h)?.0)
}

/// Whether `h` already equals its canonical form.
pub fn is_canonical(h: &UniformHypergraph) -> Result<bool> {
    Ok(least_labeling(h, Target::Identity)?.is_some())
}

/// Vertex whose deletion leaves the least `(n-1)`-vertex canonical form; ties go
/// to the smaller index.
pub fn canonical_deletion(h: &UniformHypergraph) -> Result<usize> {
    if h.n() == 0 {
        return Err(Error::Precondition("nothing to delete".into()));
    }
    let mut best: Option<(BitVec, usize)> = None;
    for v in 0..h.n() {
        let rest = VertexSet::new((0..h.n()).filter(|&u| u != v).collect())?;
        let form = canonical_form(&crate::hypercore::induced_subgraph(h, &rest)?)?;
        let better = match &best {
            None => true,
            Some((b, _)) => form.edge_bits().lex_cmp(b).is_lt(),
        };
        if better {
            best = Some((form.edge_bits().clone(), v));
        }
    }
    Ok(best.expect("n > 0").1)
}

fn extends_consistently(adj: &Adjacency, map: &[usize], x: usize, y: usize) -> bool {
    match adj {
        Adjacency::Graph(g) => (0..x).all(|a| (g[a] >> x & 1) == (g[map[a]] >> y & 1)),
        Adjacency::Triples { n, masks } => (1..x).all(|b| {
            (0..b).all(|a| (masks[a * n + b] >> x & 1) == (masks[map[a] * n + map[b]] >> y & 1))
        }),
    }
}

fn complete_automorphism(adj: &Adjacency, map: &mut Vec<usize>, used: u64, n: usize) -> bool {
    let x = map.len();
    if x == n {
        return true;
    }
    for y in (0..n).filter(|&y| used >> y & 1 == 0) {
        if extends_consistently(adj, map, x, y) {
            map.push(y);
            if complete_automorphism(adj, map, used | 1 << y, n) {
                return true;
            }
            map.pop();
        }
    }
    false
}

/// Order of the automorphism group, as a product of orbit lengths along the
/// chain of pointwise stabilizers of `0`, `0..2`, ...
pub fn automorphism_count(h: &UniformHypergraph) -> Result<u64> {
    check_canon_input(h)?;
    let n = h.n();
    let adj = Adjacency::new(h)?;
    let mut order = 1u64;
    for j in 0..n {
        let fixed: Vec<usize> = (0..j).collect();
        let fixed_mask = if j == 0 { 0 } else { (1u64 << j) - 1 };
        let orbit = (j..n)
            .filter(|&w| {
                if !extends_consistently(&adj, &fixed, j, w) {
                    return false;
                }
                let mut map = fixed.clone();
                map.push(w);
                complete_automorphism(&adj, &mut map, fixed_mask | 1 << w, n)
            })
            .count();
        order *= orbit as u64;
    }
    Ok(order)
}

/// One isomorphism class: its canonical representative and automorphism count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalClass {
    pub rep: UniformHypergraph,
    pub aut_count: u64,
}

struct LinkSearch<'a> {
    parent: &'a UniformHypergraph,
    q: &'a ForbiddenFamily,
    pairs: Vec<(usize, usize)>,
    link: Vec<u64>,
    out: Vec<UniformHypergraph>,
}

impl LinkSearch<'_> {
    /// Every `m`-set made of the new vertex, `b`, `c` and `m - 3` vertices
    /// below `b` is decided once pair `bc` is; none may hit a forbidden size.
    fn new_sets_allowed(&self, b: usize, c: usize) -> bool {
        let m = self.q.m();
        let extra = m - 3;
        if extra > b {
            return true;
        }
        let mut below: Vec<usize> = (0..extra).collect();
        loop {
            let mut t = below.clone();
            t.push(b);
            t.push(c);
            let mut count = crate::hypercore::count_inside(self.parent, &t);
            let mask = t.iter().fold(0u64, |acc, &v| acc | 1 << v);
            count += t
                .iter()
                .map(|&v| (self.link[v] & mask).count_ones() as usize)
                .sum::<usize>()
                / 2;
            if self.q.contains(count) {
                return false;
            }
            // next colex (m-3)-subset of 0..b
            let mut j = 0;
            loop {
                if j == extra {
                    return true;
                }
                let limit = if j + 1 < extra { below[j + 1] } else { b };
                if below[j] + 1 < limit {
                    below[j] += 1;
                    for (i, slot) in below.iter_mut().enumerate().take(j) {
                        *slot = i;
                    }
                    break;
                }
                j += 1;
            }
        }
    }

    fn child(&self) -> UniformHypergraph {
        let old = self.parent.n();
        let mut bits = BitVec::zeros(binom_usize(old + 1, 3));
        for i in self.parent.edge_bits().iter_ones() {
            bits.set(i, true);
        }
        let base = binom_usize(old, 3);
        for &(a, b) in &self.pairs {
            if self.link[a] >> b & 1 == 1 {
                bits.set(base + rank2(a, b), true);
            }
        }
        UniformHypergraph::from_bits(3, old + 1, bits)
    }

    fn run(&mut self, idx: usize) {
        if idx == self.pairs.len() {
            let child = self.child();
            if is_canonical(&child).expect("sizes are checked up front") {
                self.out.push(child);
            }
            return;
        }
        let (b, c) = self.pairs[idx];
        let enforce = self.q.m() <= self.parent.n() + 1;
        for present in [false, true] {
            if present {
                self.link[b] |= 1 << c;
                self.link[c] |= 1 << b;
            }
            if !enforce || self.new_sets_allowed(b, c) {
                self.run(idx + 1);
            }
            if present {
                self.link[b] &= !(1 << c);
                self.link[c] &= !(1 << b);
            }
        }
    }
}

/// Canonical Q-free children of a canonical Q-free parent, one new vertex each.
fn children(parent: &UniformHypergraph, q: &ForbiddenFamily) -> Vec<UniformHypergraph> {
    let old = parent.n();
    let pairs = (1..old).flat_map(|c| (0..c).map(move |b| (b, c))).collect();
    let mut search = LinkSearch {
        parent,
        q,
        pairs,
        link: vec![0; old],
        out: Vec::new(),
    };
    search.run(0);
    search.out
}

/// One canonical representative per isomorphism class of Q-free 3-graphs on
/// `n` vertices, in ascending canonical order.
pub fn enumerate_qfree(n: usize, q: &ForbiddenFamily) -> Result<Vec<CanonicalClass>> {
    if q.r() != 3 {
        return Err(Error::UniformityMismatch {
            expected: 3,
            found: q.r(),
        });
    }
    if n > MAX_CANON_N {
        return Err(Error::SizeLimit {
            what: "enumeration",
            n,
            max: MAX_CANON_N,
        });
    }
    let mut level = vec![UniformHypergraph::empty(3, 0)?];
    for _ in 0..n {
        level = level.par_iter().flat_map_iter(|p| children(p, q)).collect();
    }
    level.sort_by(|a, b| a.edge_bits().lex_cmp(b.edge_bits()));
    level
        .into_par_iter()
        .map(|rep| {
            let aut_count = automorphism_count(&rep)?;
            Ok(CanonicalClass { rep, aut_count })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HValueReport {
    pub n: usize,
    pub q: ForbiddenFamily,
    pub value: usize,
    /// Canonically least class attaining `value`.
    pub minimizer: CanonicalClass,
    /// Number of Q-free classes examined.
    pub count: usize,
    /// Number of classes whose homogeneous number was solved exactly.
    pub exact_solves: usize,
}

/// How [`h_value_with`] spends exact solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HMode {
    /// Skip the exact solve for a class whose greedy homogeneous set is already
    /// larger than the running minimum.
    #[default]
    ShortCircuit,
    /// Solve every class exactly.
    Full,
}

/// `h_3(n, Q)`: the least homogeneous number over all Q-free 3-graphs on `n` vertices.
pub fn h_value(n: usize, q: &ForbiddenFamily) -> Result<HValueReport> {
    h_value_with(n, q, HMode::default())
}

pub fn h_value_with(n: usize, q: &ForbiddenFamily, mode: HMode) -> Result<HValueReport> {
    let classes = enumerate_qfree(n, q)?;
    if classes.is_empty() {
        return Err(Error::NoWitness { n });
    }
    let count = classes.len();
    let (best_idx, value, exact_solves) = match mode {
        HMode::Full => {
            let values = classes
                .par_iter()
                .map(|c| homogeneous_number(&c.rep).map(|r| r.size))
                .collect::<Result<Vec<_>>>()?;
            // first index in canonical order attaining the minimum
            let (idx, &v) = values
                .iter()
                .enumerate()
                .min_by_key(|&(i, &v)| (v, i))
                .expect("nonempty");
            (idx, v, count)
        }
        HMode::ShortCircuit => {
            let mut best: Option<(usize, usize)> = None;
            let mut solves = 0;
            for (i, c) in classes.iter().enumerate() {
                if let Some((_, v)) = best {
                    if greedy_homogeneous(&c.rep, 0).len() > v {
                        continue;
                    }
                }
                solves += 1;
                let h = homogeneous_number(&c.rep)?.size;
                if best.is_none_or(|(_, v)| h < v) {
                    best = Some((i, h));
                }
            }
            let (i, v) = best.expect("nonempty");
            (i, v, solves)
        }
    };
    Ok(HValueReport {
        n,
        q: q.clone(),
        value,
        minimizer: classes[best_idx].clone(),
        count,
        exact_solves,
    })
}

/// `h_3(n, Q)` by scanning all `2^C(n,3)` labeled 3-graphs directly, for `n <= 5`.
///
/// Works on raw triple masks and shares no code with the enumeration, the
/// Q-freeness check or the solvers, so it can serve as their oracle.
pub fn brute_h_value(n: usize, q: &ForbiddenFamily) -> Result<usize> {
    brute_scan(n, q)?.0.ok_or(Error::NoWitness { n })
}

/// Number of labeled Q-free 3-graphs on `0..n`, by the same scan, for `n <= 5`.
pub fn brute_qfree_count(n: usize, q: &ForbiddenFamily) -> Result<u64> {
    Ok(brute_scan(n, q)?.1)
}

fn brute_scan(n: usize, q: &ForbiddenFamily) -> Result<(Option<usize>, u64)> {
    if n > MAX_BRUTE_N {
        return Err(Error::SizeLimit {
            what: "brute-force h value",
            n,
            max: MAX_BRUTE_N,
        });
    }
    if q.r() != 3 {
        return Err(Error::UniformityMismatch {
            expected: 3,
            found: q.r(),
        });
    }
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triples.push((1u32 << a) | (1 << b) | (1 << c));
            }
        }
    }
    // inside[s]: mask over triple indices of the triples contained in vertex set s
    let inside: Vec<u32> = (0u32..1 << n)
        .map(|s| {
            triples
                .iter()
                .enumerate()
                .filter(|&(_, &t)| t & s == t)
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let m_sets: Vec<u32> = (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == q.m())
        .collect();
    let mut best: Option<usize> = None;
    let mut count = 0u64;
    for edges in 0u32..1 << triples.len() {
        let q_free = m_sets
            .iter()
            .all(|&s| !q.contains((edges & inside[s as usize]).count_ones() as usize));
        if !q_free {
            continue;
        }
        count += 1;
        let h = (0u32..1 << n)
            .filter(|&s| {
                let t = inside[s as usize];
                t & edges == t || t & edges == 0
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0);
        best = Some(best.map_or(h, |b| b.min(h)));
    }
    Ok((best, count))
}

/// Proof that a 3-graph is a blow-up of [`hprime`]: `parts[i]` is the
/// coclique replacing base vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupCertificate {
    pub sizes: PartSizes,
    pub parts: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FfClass {
    Blowup(BlowupCertificate),
    NgonIsomorphic,
    Neither,
}

struct PartAssignment<'a> {
    masks: &'a [u64],
    n: usize,
    base: [[[bool; 6]; 6]; 6],
    part: Vec<usize>,
    all_nonempty: bool,
}

impl PartAssignment<'_> {
    fn fits(&self, x: usize, p: usize) -> bool {
        (1..x).all(|b| {
            (0..b).all(|a| {
                let want = self.base[self.part[a]][self.part[b]][p];
                let has = self.masks[a * self.n + b] >> x & 1 == 1;
                want == has
            })
        })
    }

    fn search(&mut self) -> bool {
        let x = self.part.len();
        if x == self.n {
            return !self.all_nonempty || (0..6).all(|p| self.part.contains(&p));
        }
        if self.all_nonempty {
            let missing = (0..6).filter(|p| !self.part.contains(p)).count();
            if missing > self.n - x {
                return false;
            }
        }
        for p in 0..6 {
            if self.fits(x, p) {
                self.part.push(p);
                if self.search() {
                    return true;
                }
                self.part.pop();
            }
        }
        false
    }
}

/// Finds a blow-up certificate, optionally insisting that all six parts are nonempty.
pub fn find_blowup_certificate(
    h: &UniformHypergraph,
    all_nonempty: bool,
) -> Result<Option<BlowupCertificate>> {
    if h.r() != 3 {
        return Err(Error::UnsupportedUniformity(h.r()));
    }
    check_canon_input(h)?;
    let hp = hprime();
    let mut base = [[[false; 6]; 6]; 6];
    for (a, row) in base.iter_mut().enumerate() {
        for (b, col) in row.iter_mut().enumerate() {
            for (c, cell) in col.iter_mut().enumerate() {
                *cell = a != b && b != c && a != c && hp.has_triple(a, b, c);
            }
        }
    }
    let masks = h.pair_masks();
    let mut search = PartAssignment {
        masks: &masks,
        n: h.n(),
        base,
        part: Vec::with_capacity(h.n()),
        all_nonempty,
    };
    if !search.search() {
        return Ok(None);
    }
    let parts: Vec<VertexSet> = (0..6)
        .map(|p| {
            VertexSet::new((0..h.n()).filter(|&v| search.part[v] == p).collect())
                .expect("ascending")
        })
        .collect();
    let sizes = PartSizes(parts.iter().map(|s| s.len()).collect());
    let cert = BlowupCertificate { sizes, parts };
    if !verify_blowup_certificate(h, &cert)? {
        return Err(Error::ClaimFailed(
            "blow-up certificate does not reconstruct the input".into(),
        ));
    }
    Ok(Some(cert))
}

/// Rebuilds the blow-up from the certificate and compares it with `h` vertex by vertex.
pub fn verify_blowup_certificate(h: &UniformHypergraph, cert: &BlowupCertificate) -> Result<bool> {
    if cert.parts.len() != 6 || cert.sizes.total() != h.n() {
        return Ok(false);
    }
    let rebuilt = blowup(&hprime(), &cert.sizes)?;
    // blow-up vertex (part p, i-th) corresponds to cert.parts[p][i] in h
    let order: Vec<usize> = cert.parts.iter().flat_map(|p| p.iter().copied()).collect();
    let mut seen = vec![false; h.n()];
    for &v in &order {
        if v >= h.n() || seen[v] {
            return Ok(false);
        }
        seen[v] = true;
    }
    Ok(relabel(h, &order)? == rebuilt)
}

/// Whether `h` is a blow-up of the 6-vertex 10-edge 3-graph, the n-gon
/// 3-graph up to isomorphism, or neither. Blow-ups are reported first.
pub fn ff_classify(h: &UniformHypergraph) -> Result<FfClass> {
    if h.r() != 3 {
        return Err(Error::UnsupportedUniformity(h.r()));
    }
    check_canon_input(h)?;
    if let Some(cert) = find_blowup_certificate(h, false)? {
        return Ok(FfClass::Blowup(cert));
    }
    if h.n() >= 4 && canonical_form(h)? == canonical_form(&ngon(h.n())?)? {
        return Ok(FfClass::NgonIsomorphic);
    }
    Ok(FfClass::Neither)
}
