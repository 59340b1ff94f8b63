//! Constructive extraction of homogeneous sets from hypergraphs that avoid
//! small order-size pairs.
//!
//! Each procedure returns an [`ExtractionTrace`]: the witness plus the
//! structural claims it relied on along the way. Every claim can be re-checked
//! against the input with [`Claim::holds`], and [`ExtractionTrace::verify`]
//! re-checks the lot. Inputs violating a procedure's precondition are rejected
//! with [`Error::ForbiddenSubgraph`] carrying the colex-least violating set.

use std::fmt;

use crate::colex::{binom_usize, ColexSubsets};
use crate::error::{Error, Result};
use crate::homsolve::{greedy_coclique_ascending, homogeneous_number, max_coclique};
use crate::hypercore::{
    count_inside, is_clique, is_coclique, link_graph, restricted_link, HomogeneousWitness,
    UniformHypergraph, VertexSet, WitnessKind,
};
use crate::profiles::{is_q_free, ForbiddenFamily};

/// A structural fact about the input hypergraph, stated in its own labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    /// The link graph of `y` (on the other vertices) has no induced 2K2.
    LinkTwoK2Free {
        y: usize,
    },
    /// The link of `v` restricted to `s` has no induced 4-cycle.
    RestrictedLinkC4Free {
        v: usize,
        s: VertexSet,
    },
    /// `set` is a clique, resp. coclique, of the link of `y`.
    InLink {
        y: usize,
        kind: WitnessKind,
        set: VertexSet,
    },
    /// Every pair of `set` forms an edge with `w`.
    RestrictedLinkClique {
        w: usize,
        set: VertexSet,
    },
    IsClique {
        set: VertexSet,
    },
    IsCoclique {
        set: VertexSet,
    },
    /// No `m` vertices of `set` span exactly `f` edges.
    InducedFree {
        set: VertexSet,
        m: usize,
        f: usize,
    },
}

fn all_pairs_with(h: &UniformHypergraph, y: usize, set: &VertexSet, want: bool) -> bool {
    let vs = set.as_slice();
    (1..vs.len()).all(|j| (0..j).all(|i| h.contains_edge(&sorted3(y, vs[i], vs[j])) == want))
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Whether some four vertices of the 2-graph `g` induce a shape accepted by
/// `shape`, given the 6 pair bits.
fn some_four_set(g: &UniformHypergraph, shape: impl Fn(&[bool; 6]) -> bool) -> bool {
    ColexSubsets::new(g.n(), 4).any(|s| {
        let bits = [
            g.has_pair(s[0], s[1]),
            g.has_pair(s[0], s[2]),
            g.has_pair(s[0], s[3]),
            g.has_pair(s[1], s[2]),
            g.has_pair(s[1], s[3]),
            g.has_pair(s[2], s[3]),
        ];
        shape(&bits)
    })
}

// pair order: 01 02 03 12 13 23; the three perfect matchings are
// {01,23}, {02,13}, {03,12}
const MATCHINGS: [(usize, usize); 3] = [(0, 5), (1, 4), (2, 3)];

fn is_2k2(b: &[bool; 6]) -> bool {
    b.iter().filter(|&&x| x).count() == 2 && MATCHINGS.iter().any(|&(i, j)| b[i] && b[j])
}

fn is_c4(b: &[bool; 6]) -> bool {
    // a 4-cycle is the complement of a perfect matching
    b.iter().filter(|&&x| x).count() == 4 && MATCHINGS.iter().any(|&(i, j)| !b[i] && !b[j])
}

pub fn has_induced_2k2(g: &UniformHypergraph) -> bool {
    g.r() == 2 && some_four_set(g, is_2k2)
}

pub fn has_induced_c4(g: &UniformHypergraph) -> bool {
    g.r() == 2 && some_four_set(g, is_c4)
}

impl Claim {
    /// Re-checks the claim by exhaustive scan.
    pub fn holds(&self, h: &UniformHypergraph) -> bool {
        let in_range = |s: &VertexSet| s.iter().all(|&v| v < h.n());
        match self {
            Claim::LinkTwoK2Free { y } => {
                *y < h.n() && link_graph(h, *y).is_ok_and(|l| !has_induced_2k2(&l))
            }
            Claim::RestrictedLinkC4Free { v, s } => {
                restricted_link(h, *v, s).is_ok_and(|l| !has_induced_c4(&l))
            }
            Claim::InLink { y, kind, set } => {
                h.r() == 3
                    && *y < h.n()
                    && in_range(set)
                    && !set.contains(*y)
                    && all_pairs_with(h, *y, set, *kind == WitnessKind::Clique)
            }
            Claim::RestrictedLinkClique { w, set } => {
                h.r() == 3
                    && *w < h.n()
                    && in_range(set)
                    && !set.contains(*w)
                    && all_pairs_with(h, *w, set, true)
            }
            Claim::IsClique { set } => in_range(set) && is_clique(h, set),
            Claim::IsCoclique { set } => in_range(set) && is_coclique(h, set),
            Claim::InducedFree { set, m, f } => {
                in_range(set)
                    && (*m < h.r()
                        || ColexSubsets::new(set.len(), *m).all(|pos| {
                            let vs: Vec<usize> = pos.iter().map(|&i| set.as_slice()[i]).collect();
                            count_inside(h, &vs) != *f
                        }))
            }
        }
    }

    /// Vertex sets the claim mentions.
    pub fn sets(&self) -> Vec<&VertexSet> {
        match self {
            Claim::LinkTwoK2Free { .. } => vec![],
            Claim::RestrictedLinkC4Free { s, .. } => vec![s],
            Claim::InLink { set, .. }
            | Claim::RestrictedLinkClique { set, .. }
            | Claim::IsClique { set }
            | Claim::IsCoclique { set }
            | Claim::InducedFree { set, .. } => vec![set],
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::LinkTwoK2Free { y } => write!(f, "link of {y} has no induced 2K2"),
            Claim::RestrictedLinkC4Free { v, s } => {
                write!(f, "link of {v} on {{{s}}} has no induced C4")
            }
            Claim::InLink { y, kind, set } => write!(f, "{{{set}}} is a {kind} of the link of {y}"),
            Claim::RestrictedLinkClique { w, set } => {
                write!(f, "{{{set}}} is a clique of the link of {w}")
            }
            Claim::IsClique { set } => write!(f, "{{{set}}} is a clique"),
            Claim::IsCoclique { set } => write!(f, "{{{set}}} is a coclique"),
            Claim::InducedFree { set, m, f: e } => {
                write!(f, "no {m} vertices of {{{set}}} span {e} edges")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub description: String,
    pub claim: Claim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionTrace {
    pub steps: Vec<TraceStep>,
    pub witness: HomogeneousWitness,
}

impl ExtractionTrace {
    fn new() -> Self {
        ExtractionTrace {
            steps: Vec::new(),
            witness: HomogeneousWitness::new(WitnessKind::Clique, VertexSet::range(0)),
        }
    }

    fn record(&mut self, description: impl Into<String>, claim: Claim) {
        self.steps.push(TraceStep {
            description: description.into(),
            claim,
        });
    }

    /// Records a claim after checking it; a false claim aborts the extraction.
    fn assert(
        &mut self,
        h: &UniformHypergraph,
        description: impl Into<String>,
        claim: Claim,
    ) -> Result<()> {
        if !claim.holds(h) {
            return Err(Error::ClaimFailed(claim.to_string()));
        }
        self.record(description, claim);
        Ok(())
    }

    /// Re-checks the witness and every recorded claim against `h`.
    pub fn verify(&self, h: &UniformHypergraph) -> Result<()> {
        if !self.witness.validate(h) {
            return Err(Error::ClaimFailed(format!(
                "witness {} is not homogeneous",
                self.witness
            )));
        }
        for step in &self.steps {
            if !step.claim.holds(h) {
                return Err(Error::ClaimFailed(step.claim.to_string()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ExtractionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(f, "step {i}: {}: {}", s.description, s.claim)?;
        }
        write!(f, "witness {}", self.witness)
    }
}

fn require_free(h: &UniformHypergraph, q: &str) -> Result<()> {
    let q = ForbiddenFamily::parse(q, 3)?;
    is_q_free(h, &q)?.into_result()
}

fn require_3graph(h: &UniformHypergraph) -> Result<()> {
    if h.r() != 3 {
        return Err(Error::UnsupportedUniformity(h.r()));
    }
    h.check_exact_size("extraction")
}

// ---------------------------------------------------------------------------
// 2-graphs

/// Largest class of a greedy colouring of `x` in ascending order, where
/// `conflict[v]` masks the vertices `v` may not share a class with.
fn largest_colour_class(x: &[usize], conflict: &[u64]) -> Vec<usize> {
    let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
    for &v in x {
        match classes.iter_mut().find(|(mask, _)| mask & conflict[v] == 0) {
            Some((mask, members)) => {
                *mask |= 1 << v;
                members.push(v);
            }
            None => classes.push((1 << v, vec![v])),
        }
    }
    classes
        .into_iter()
        .map(|(_, m)| m)
        .fold(
            Vec::new(),
            |best, m| if m.len() > best.len() { m } else { best },
        )
}

struct GraphExtraction<'a> {
    g: &'a UniformHypergraph,
    adj: Vec<u64>,
    non_adj: Vec<u64>,
    trace: ExtractionTrace,
}

impl GraphExtraction<'_> {
    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::new(vs.to_vec()).expect("kept ascending")
    }

    fn run(&mut self, x: Vec<usize>, m: usize, f: usize) -> Result<HomogeneousWitness> {
        let depth = self.trace.steps.len();
        self.trace.assert(
            self.g,
            format!("level {depth}: working set of {} vertices", x.len()),
            Claim::InducedFree {
                set: Self::set(&x),
                m,
                f,
            },
        )?;
        if x.len() <= 1 {
            return Ok(HomogeneousWitness::new(WitnessKind::Clique, Self::set(&x)));
        }
        if m == 2 {
            // (2,0)-free means complete, (2,1)-free means empty
            let kind = if f == 0 {
                WitnessKind::Clique
            } else {
                WitnessKind::Coclique
            };
            return Ok(HomogeneousWitness::new(kind, Self::set(&x)));
        }
        let xmask = x.iter().fold(0u64, |a, &v| a | 1 << v);
        let deg = |masks: &[u64], v: usize| (masks[v] & xmask).count_ones() as usize;
        let threshold = (x.len() as f64).powf((m - 2) as f64 / (m - 1) as f64);
        // max degree vertex, least label on ties
        let pick = |masks: &[u64]| {
            x.iter()
                .copied()
                .max_by_key(|&v| (deg(masks, v), std::cmp::Reverse(v)))
                .expect("nonempty")
        };
        let hub = pick(&self.adj);
        let anti_hub = pick(&self.non_adj);
        if (deg(&self.adj, hub) as f64) < threshold {
            let class = largest_colour_class(&x, &self.adj);
            self.trace.record(
                "low maximum degree: largest greedy colour class",
                Claim::IsCoclique {
                    set: Self::set(&class),
                },
            );
            return Ok(HomogeneousWitness::new(
                WitnessKind::Coclique,
                Self::set(&class),
            ));
        }
        if (deg(&self.non_adj, anti_hub) as f64) < threshold {
            let class = largest_colour_class(&x, &self.non_adj);
            self.trace.record(
                "low maximum non-degree: largest greedy colour class of the complement",
                Claim::IsClique {
                    set: Self::set(&class),
                },
            );
            return Ok(HomogeneousWitness::new(
                WitnessKind::Clique,
                Self::set(&class),
            ));
        }
        // The non-neighbourhood inherits (m-1, f)-freeness and the neighbourhood
        // (m-1, f-(m-1))-freeness; (m-1, f) is only meaningful for f <= C(m-1, 2).
        let (pivot, rest, sub_f, joins) = if f < m - 1 || (f == m - 1 && f <= binom_usize(m - 1, 2))
        {
            let rest: Vec<usize> = x
                .iter()
                .copied()
                .filter(|&v| self.non_adj[anti_hub] >> v & 1 == 1)
                .collect();
            (anti_hub, rest, f, WitnessKind::Coclique)
        } else {
            let rest: Vec<usize> = x
                .iter()
                .copied()
                .filter(|&v| self.adj[hub] >> v & 1 == 1)
                .collect();
            (hub, rest, f - (m - 1), WitnessKind::Clique)
        };
        let inner = self.run(rest, m - 1, sub_f)?;
        if inner.kind == joins || inner.len() <= 1 {
            let mut vs = inner.vertices.clone().into_vec();
            vs.push(pivot);
            let grown = HomogeneousWitness::new(joins, VertexSet::from_unsorted(vs));
            if grown.validate(self.g) {
                let claim = match joins {
                    WitnessKind::Clique => Claim::IsClique {
                        set: grown.vertices.clone(),
                    },
                    WitnessKind::Coclique => Claim::IsCoclique {
                        set: grown.vertices.clone(),
                    },
                };
                self.trace
                    .record(format!("pivot {pivot} joins the recursive witness"), claim);
                return Ok(grown);
            }
        }
        Ok(inner)
    }
}

/// Homogeneous set in an `(m, f)`-free graph by recursion on `m`.
pub fn extract_graph_homogeneous(
    g: &UniformHypergraph,
    m: usize,
    f: usize,
) -> Result<ExtractionTrace> {
    if g.r() != 2 {
        return Err(Error::UnsupportedUniformity(g.r()));
    }
    g.check_exact_size("graph extraction")?;
    if m < 2 || f > binom_usize(m, 2) {
        return Err(Error::Precondition(format!(
            "({m}, {f}) is not an order-size pair of graphs"
        )));
    }
    if m == 2 && f >= 1 && g.n() >= 2 {
        // ForbiddenFamily needs m > r, so check pairs directly
        if let Some(p) = ColexSubsets::new(g.n(), 2).find(|p| g.has_pair(p[0], p[1]) == (f == 1)) {
            return Err(Error::ForbiddenSubgraph {
                witness: VertexSet::new(p).expect("sorted"),
                count: f,
            });
        }
    } else if m == 2 && f == 0 && g.n() >= 2 {
        if let Some(p) = ColexSubsets::new(g.n(), 2).find(|p| !g.has_pair(p[0], p[1])) {
            return Err(Error::ForbiddenSubgraph {
                witness: VertexSet::new(p).expect("sorted"),
                count: 0,
            });
        }
    } else if m > 2 {
        is_q_free(g, &ForbiddenFamily::new(2, m, [f])?)?.into_result()?;
    }
    let adj = g.adjacency_masks();
    let full = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let non_adj = adj
        .iter()
        .enumerate()
        .map(|(v, a)| !a & full & !(1u64 << v))
        .collect();
    let mut run = GraphExtraction {
        g,
        adj,
        non_adj,
        trace: ExtractionTrace::new(),
    };
    let witness = run.run((0..g.n()).collect(), m, f)?;
    let mut trace = run.trace;
    trace.witness = witness;
    trace.verify(g)?;
    Ok(trace)
}

// ---------------------------------------------------------------------------
// 3-graphs

fn lift_link_set(link_set: &VertexSet, y: usize) -> VertexSet {
    link_set.map(|v| if v >= y { v + 1 } else { v })
}

/// Coclique of a `{(4,1),(4,4)}`-free 3-graph from the link graphs: every link
/// is 2K2-free, and a clique or coclique of a link is a coclique of `h`. The best
/// link wins, the least `y` on ties.
pub fn extract_coclique_41_44(h: &UniformHypergraph) -> Result<ExtractionTrace> {
    require_3graph(h)?;
    require_free(h, "4:1,4")?;
    let mut trace = ExtractionTrace::new();
    trace.witness = HomogeneousWitness::new(WitnessKind::Coclique, VertexSet::range(0));
    let mut best: Option<(usize, HomogeneousWitness)> = None;
    for y in 0..h.n() {
        let link = link_graph(h, y)?;
        trace.assert(h, format!("link of {y}"), Claim::LinkTwoK2Free { y })?;
        let solved = homogeneous_number(&link)?.witness;
        if best.as_ref().is_none_or(|(_, b)| solved.len() > b.len()) {
            best = Some((y, solved));
        }
    }
    if let Some((y, w)) = best {
        let set = lift_link_set(&w.vertices, y);
        trace.assert(
            h,
            format!("largest homogeneous set of the link of {y}"),
            Claim::InLink {
                y,
                kind: w.kind,
                set: set.clone(),
            },
        )?;
        trace.assert(
            h,
            "it spans no edge",
            Claim::IsCoclique { set: set.clone() },
        )?;
        trace.witness = HomogeneousWitness::new(WitnessKind::Coclique, set);
    }
    trace.verify(h)?;
    Ok(trace)
}

/// Pair of maximum codegree (colex-least on ties) and its common neighbourhood.
fn max_codegree_pair(h: &UniformHypergraph) -> Option<(usize, usize, VertexSet)> {
    let masks = h.pair_masks();
    let n = h.n();
    let mut best: Option<(usize, usize, u64)> = None;
    for v in 1..n {
        for u in 0..v {
            let m = masks[u * n + v];
            if best.is_none_or(|(_, _, b)| m.count_ones() > b.count_ones()) {
                best = Some((u, v, m));
            }
        }
    }
    best.map(|(u, v, m)| (u, v, VertexSet::from_mask(m)))
}

/// Clique from the common neighbourhood of a maximum-codegree pair, or a
/// greedy coclique when that is larger, in a `{(4,2),(4,3)}`-free 3-graph.
pub fn extract_42_43(h: &UniformHypergraph) -> Result<ExtractionTrace> {
    require_3graph(h)?;
    require_free(h, "4:2,3")?;
    let mut trace = ExtractionTrace::new();
    let coclique = greedy_coclique_ascending(h);
    trace.assert(
        h,
        "greedy coclique in ascending order",
        Claim::IsCoclique {
            set: coclique.clone(),
        },
    )?;
    let mut clique = VertexSet::range(0);
    if let Some((u, v, s)) = max_codegree_pair(h).filter(|(_, _, s)| !s.is_empty()) {
        trace.assert(
            h,
            format!(
                "common neighbourhood of the pair {u} {v} (codegree {})",
                s.len()
            ),
            Claim::IsClique { set: s.clone() },
        )?;
        let mut grown = s.clone().into_vec();
        grown.extend([u, v]);
        let grown = VertexSet::from_unsorted(grown);
        clique = if is_clique(h, &grown) {
            trace.record(
                "the pair joins its common neighbourhood",
                Claim::IsClique { set: grown.clone() },
            );
            grown
        } else {
            s
        };
    }
    trace.witness = if clique.len() >= coclique.len() && !clique.is_empty() {
        HomogeneousWitness::new(WitnessKind::Clique, clique)
    } else {
        HomogeneousWitness::new(WitnessKind::Coclique, coclique)
    };
    trace.verify(h)?;
    Ok(trace)
}

/// Coclique of a `{(4,2),(4,4)}`-free 3-graph via the restricted link of a
/// maximum-codegree pair, compared with an exact maximum coclique.
pub fn extract_coclique_42_44(h: &UniformHypergraph) -> Result<ExtractionTrace> {
    require_3graph(h)?;
    require_free(h, "4:2,4")?;
    let mut trace = ExtractionTrace::new();
    let mut from_link = VertexSet::range(0);
    if let Some((v, w, s)) = max_codegree_pair(h).filter(|(_, _, s)| !s.is_empty()) {
        trace.assert(
            h,
            format!(
                "common neighbourhood of the pair {v} {w} (codegree {})",
                s.len()
            ),
            Claim::RestrictedLinkC4Free { v, s: s.clone() },
        )?;
        let lv = restricted_link(h, v, &s)?;
        let t = homogeneous_number(&lv)?.witness;
        let set = t.vertices.map(|i| s.as_slice()[i]);
        trace.assert(
            h,
            format!("largest homogeneous set of the restricted link of {v}"),
            Claim::InLink {
                y: v,
                kind: t.kind,
                set: set.clone(),
            },
        )?;
        if t.kind == WitnessKind::Coclique {
            trace.assert(
                h,
                format!("it is a clique of the link of {w}"),
                Claim::RestrictedLinkClique {
                    w,
                    set: set.clone(),
                },
            )?;
        }
        trace.assert(
            h,
            "it spans no edge",
            Claim::IsCoclique { set: set.clone() },
        )?;
        from_link = set;
    }
    let exact = max_coclique(h)?.witness.vertices;
    let chosen = if exact.len() > from_link.len() {
        trace.assert(
            h,
            "exact maximum coclique",
            Claim::IsCoclique { set: exact.clone() },
        )?;
        exact
    } else {
        from_link
    };
    trace.witness = HomogeneousWitness::new(WitnessKind::Coclique, chosen);
    trace.verify(h)?;
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        affine_plane, blowup, clique_plus_isolated, hprime, ngon, PartSizes,
    };
    use crate::homsolve::max_coclique;
    use crate::hypercore::complement;

    fn graph(n: usize, edges: &[[usize; 2]]) -> UniformHypergraph {
        UniformHypergraph::from_edges(2, n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn graph_examples() {
        let e10 = UniformHypergraph::empty(2, 10).unwrap();
        let t = extract_graph_homogeneous(&e10, 3, 3).unwrap();
        assert_eq!(
            (t.witness.kind, t.witness.len()),
            (WitnessKind::Coclique, 10)
        );

        let c5 = graph(5, &[[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]);
        let t = extract_graph_homogeneous(&c5, 3, 3).unwrap();
        assert!(t.witness.validate(&c5));
        assert!(t.witness.len() >= 2);

        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 4..8 {
                edges.push([a, b]);
            }
        }
        let k44 = graph(8, &edges);
        let t = extract_graph_homogeneous(&k44, 3, 3).unwrap();
        assert_eq!(
            (t.witness.kind, t.witness.len()),
            (WitnessKind::Coclique, 4)
        );
        t.verify(&k44).unwrap();
    }

    #[test]
    fn graph_precondition() {
        let k4 = UniformHypergraph::complete(2, 4).unwrap();
        match extract_graph_homogeneous(&k4, 3, 3) {
            Err(Error::ForbiddenSubgraph { witness, count }) => {
                assert_eq!(witness.as_slice(), &[0, 1, 2]);
                assert_eq!(count, 3);
            }
            other => panic!("{other:?}"),
        }
        assert!(extract_graph_homogeneous(&k4, 3, 4).is_err());
        assert!(extract_graph_homogeneous(&k4, 2, 0).is_ok());
        assert!(extract_graph_homogeneous(&k4, 2, 1).is_err());
        assert!(extract_graph_homogeneous(&UniformHypergraph::empty(3, 4).unwrap(), 4, 0).is_err());
    }

    #[test]
    fn graph_middle_size_uses_neighbourhood() {
        // (3,2)-free graphs are disjoint unions of cliques
        let g = graph(7, &[[0, 1], [0, 2], [1, 2], [3, 4], [5, 6]]);
        let t = extract_graph_homogeneous(&g, 3, 2).unwrap();
        t.verify(&g).unwrap();
        assert!(t.witness.len() >= 3);
    }

    #[test]
    fn scanners() {
        let two_k2 = graph(4, &[[0, 1], [2, 3]]);
        assert!(has_induced_2k2(&two_k2));
        assert!(!has_induced_c4(&two_k2));
        let c4 = graph(4, &[[0, 1], [1, 2], [2, 3], [0, 3]]);
        assert!(has_induced_c4(&c4));
        assert!(!has_induced_2k2(&c4));
        let p4 = graph(4, &[[0, 1], [1, 2], [2, 3]]);
        assert!(!has_induced_c4(&p4) && !has_induced_2k2(&p4));
        let k4 = UniformHypergraph::complete(2, 4).unwrap();
        assert!(!has_induced_c4(&k4));
    }

    #[test]
    fn case_41_44_examples() {
        let e8 = UniformHypergraph::empty(3, 8).unwrap();
        let t = extract_coclique_41_44(&e8).unwrap();
        assert!(t.witness.len() >= 7);
        t.verify(&e8).unwrap();

        let h = complement(&clique_plus_isolated(6).unwrap());
        let t = extract_coclique_41_44(&h).unwrap();
        t.verify(&h).unwrap();
        assert!(t.witness.len() <= max_coclique(&h).unwrap().size);

        let h = ngon(9).unwrap();
        let t = extract_coclique_41_44(&h).unwrap();
        t.verify(&h).unwrap();
        assert!(t.witness.len() >= 3);
    }

    #[test]
    fn case_42_43_examples() {
        let k7 = UniformHypergraph::complete(3, 7).unwrap();
        let t = extract_42_43(&k7).unwrap();
        assert_eq!(t.witness.kind, WitnessKind::Clique);
        assert!(t.witness.len() >= 5);
        assert!(t.steps.iter().any(|s| s.claim
            == Claim::IsClique {
                set: VertexSet::new(vec![2, 3, 4, 5, 6]).unwrap()
            }));

        let e7 = UniformHypergraph::empty(3, 7).unwrap();
        let t = extract_42_43(&e7).unwrap();
        assert_eq!(
            (t.witness.kind, t.witness.len()),
            (WitnessKind::Coclique, 7)
        );

        // partial Steiner system: every pair in at most one triple
        let sts = UniformHypergraph::from_edges(3, 7, [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]])
            .unwrap();
        let t = extract_42_43(&sts).unwrap();
        t.verify(&sts).unwrap();
    }

    #[test]
    fn case_42_44_examples() {
        let e8 = UniformHypergraph::empty(3, 8).unwrap();
        assert_eq!(extract_coclique_42_44(&e8).unwrap().witness.len(), 8);

        // the plane itself spans at most one triple on four points
        let h = affine_plane(3, None).unwrap();
        let t = extract_coclique_42_44(&h).unwrap();
        t.verify(&h).unwrap();
        assert_eq!(t.witness.len(), max_coclique(&h).unwrap().size);

        let b = complement(&blowup(&hprime(), &PartSizes(vec![2; 6])).unwrap());
        let q = ForbiddenFamily::parse("4:2,4", 3).unwrap();
        match (
            is_q_free(&b, &q).unwrap().is_free(),
            extract_coclique_42_44(&b),
        ) {
            (true, Ok(t)) => t.verify(&b).unwrap(),
            (false, Err(Error::ForbiddenSubgraph { witness, count })) => {
                assert_eq!(
                    crate::hypercore::induced_count(&b, &witness).unwrap(),
                    count
                );
                assert!(count == 2 || count == 4);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn corrupted_inputs_raise() {
        let k5 = UniformHypergraph::complete(3, 5).unwrap();
        for res in [extract_coclique_41_44(&k5), extract_coclique_42_44(&k5)] {
            match res {
                Err(Error::ForbiddenSubgraph { witness, count }) => {
                    assert_eq!(witness.as_slice(), &[0, 1, 2, 3]);
                    assert_eq!(count, 4);
                }
                other => panic!("{other:?}"),
            }
        }
        let mut h = UniformHypergraph::complete(3, 5).unwrap();
        h.remove_edge(&[0, 1, 2]).unwrap();
        assert!(matches!(
            extract_42_43(&h),
            Err(Error::ForbiddenSubgraph { count: 3, .. })
        ));
    }

    #[test]
    fn claims_recheck_independently() {
        let h = ngon(8).unwrap();
        let t = extract_coclique_41_44(&h).unwrap();
        for s in &t.steps {
            assert!(s.claim.holds(&h), "{}", s.claim);
        }
        // a false claim is caught
        let bogus = Claim::IsClique {
            set: VertexSet::range(4),
        };
        assert!(!bogus.holds(&UniformHypergraph::empty(3, 4).unwrap()));
    }
}
