//! Order-size pairs, forbidden families and Q-freeness.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::colex::{binom_usize, ColexSubsets};
use crate::error::{Error, Result};
use crate::hypercore::{count_inside, UniformHypergraph, VertexSet};

/// An order-size pair `(m, f)`: `m` vertices spanning `f` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderSizePair {
    pub m: usize,
    pub f: usize,
}

/// A set of order-size pairs sharing one order `m`, at uniformity `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForbiddenFamily {
    r: usize,
    m: usize,
    sizes: BTreeSet<usize>,
}

impl ForbiddenFamily {
    pub fn new(r: usize, m: usize, sizes: impl IntoIterator<Item = usize>) -> Result<Self> {
        if r < 2 {
            return Err(Error::UnsupportedUniformity(r));
        }
        if m <= r {
            return Err(Error::Precondition(format!(
                "order {m} must exceed the uniformity {r}"
            )));
        }
        let sizes: BTreeSet<usize> = sizes.into_iter().collect();
        if sizes.is_empty() {
            return Err(Error::Precondition("forbidden family is empty".into()));
        }
        let top = binom_usize(m, r);
        if let Some(&f) = sizes.iter().find(|&&f| f > top) {
            return Err(Error::Precondition(format!(
                "size {f} exceeds C({m}, {r}) = {top}"
            )));
        }
        Ok(ForbiddenFamily { r, m, sizes })
    }

    /// Builds a family from explicit pairs; all pairs must share one order.
    pub fn from_pairs(r: usize, pairs: &[OrderSizePair]) -> Result<Self> {
        let m = pairs
            .first()
            .ok_or_else(|| Error::Precondition("forbidden family is empty".into()))?
            .m;
        if pairs.iter().any(|p| p.m != m) {
            return Err(Error::Unsupported(
                "families mixing several orders are not supported".into(),
            ));
        }
        Self::new(r, m, pairs.iter().map(|p| p.f))
    }

    /// Parses `m:f1,f2,...` at uniformity `r`.
    pub fn parse(text: &str, r: usize) -> Result<Self> {
        let bad = |msg: String| Error::Precondition(format!("bad family `{text}`: {msg}"));
        let (m, fs) = text
            .split_once(':')
            .ok_or_else(|| bad("expected `m:f1,f2,...`".into()))?;
        let m: usize = m
            .trim()
            .parse()
            .map_err(|_| bad("order is not an integer".into()))?;
        let sizes = fs
            .split(',')
            .map(|f| {
                f.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("size `{f}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(r, m, sizes)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sizes(&self) -> &BTreeSet<usize> {
        &self.sizes
    }

    pub fn contains(&self, f: usize) -> bool {
        self.sizes.contains(&f)
    }

    pub fn pairs(&self) -> impl Iterator<Item = OrderSizePair> + '_ {
        self.sizes
            .iter()
            .map(move |&f| OrderSizePair { m: self.m, f })
    }

    /// `C(m, r)`, the size of a complete `m`-vertex r-graph.
    pub fn full_size(&self) -> usize {
        binom_usize(self.m, self.r)
    }

    /// Forbidding both the empty and the complete `m`-set leaves only finitely
    /// many Q-free hypergraphs. Such families are still accepted.
    pub fn forbids_both_extremes(&self) -> bool {
        self.contains(0) && self.contains(self.full_size())
    }

    pub fn is_subset(&self, other: &ForbiddenFamily) -> bool {
        self.r == other.r && self.m == other.m && self.sizes.is_subset(&other.sizes)
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.m)?;
        let mut first = true;
        for s in &self.sizes {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses with uniformity 3.
impl FromStr for ForbiddenFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ForbiddenFamily::parse(s, 3)
    }
}

/// Maps every size `f` to `C(m, r) - f`.
pub fn q_complement(q: &ForbiddenFamily) -> ForbiddenFamily {
    let top = q.full_size();
    ForbiddenFamily {
        r: q.r,
        m: q.m,
        sizes: q.sizes.iter().map(|&f| top - f).collect(),
    }
}

/// Edge counts attained by the `m`-subsets of `h`.
pub fn profile(h: &UniformHypergraph, m: usize) -> Result<BTreeSet<usize>> {
    if m <= h.r() {
        return Err(Error::Precondition(format!(
            "order {m} must exceed the uniformity {}",
            h.r()
        )));
    }
    if m > h.n() {
        return Err(Error::Precondition(format!(
            "order {m} exceeds the vertex count {}",
            h.n()
        )));
    }
    let top = binom_usize(m, h.r());
    let mut seen = BTreeSet::new();
    for s in ColexSubsets::new(h.n(), m) {
        seen.insert(count_inside(h, &s));
        if seen.len() == top + 1 {
            break;
        }
    }
    Ok(seen)
}

/// First `m`-subset in colex order whose edge count satisfies `hit`.
pub(crate) fn first_subset_with_count(
    h: &UniformHypergraph,
    m: usize,
    hit: impl Fn(usize) -> bool,
) -> Option<(VertexSet, usize)> {
    ColexSubsets::new(h.n(), m).find_map(|s| {
        let c = count_inside(h, &s);
        hit(c).then(|| (VertexSet::new(s).expect("colex subsets are sorted"), c))
    })
}

/// Outcome of a Q-freeness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QCheck {
    Free,
    /// The colex-least `m`-subset whose edge count is forbidden.
    Violated {
        witness: VertexSet,
        count: usize,
    },
}

impl QCheck {
    pub fn is_free(&self) -> bool {
        matches!(self, QCheck::Free)
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match self {
            QCheck::Free => None,
            QCheck::Violated { witness, .. } => Some(witness),
        }
    }

    /// The violation as an error, for operations that require freeness.
    pub(crate) fn into_result(self) -> Result<()> {
        match self {
            QCheck::Free => Ok(()),
            QCheck::Violated { witness, count } => Err(Error::ForbiddenSubgraph { witness, count }),
        }
    }
}

pub fn is_q_free(h: &UniformHypergraph, q: &ForbiddenFamily) -> Result<QCheck> {
    if q.r() != h.r() {
        return Err(Error::UniformityMismatch {
            expected: q.r(),
            found: h.r(),
        });
    }
    if h.n() < q.m() {
        return Ok(QCheck::Free);
    }
    Ok(match first_subset_with_count(h, q.m(), |c| q.contains(c)) {
        None => QCheck::Free,
        Some((witness, count)) => QCheck::Violated { witness, count },
    })
}
