//! Homogeneous sets in hypergraphs that avoid prescribed order-size pairs.
//!
//! The crate works with r-uniform hypergraphs (mostly 3-graphs) and families
//! `Q = {(m, f_1), ..., (m, f_t)}` of forbidden order-size pairs: a hypergraph
//! is Q-free when no `m` of its vertices span exactly `f_i` edges. It provides
//!
//! - [`hypercore`]: the colex-indexed hypergraph type, induced subgraphs,
//!   complements, link graphs, and the OSH text codec ([`osh`]);
//! - [`profiles`]: order-size profiles and Q-freeness checks with witnesses;
//! - [`homsolve`]: exact clique / coclique / homogeneous-number search;
//! - [`constructions`]: the extremal constructions (affine planes, n-gons,
//!   blow-ups of the 6-vertex 10-edge 3-graph, parity triples, ...);
//! - [`enumerate`]: canonical forms, isomorph-free enumeration of Q-free
//!   3-graphs and the exact minimum `h(n, Q)`;
//! - [`extractors`]: constructive homogeneous-set extraction procedures that
//!   record and re-check their intermediate structural claims;
//! - [`suites`]: the named verification suites behind `eh verify`.
//!
//! For `n < r` every vertex set is trivially homogeneous, so `h(H) = n` there.

pub mod colex;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod extractors;
pub mod homsolve;
pub mod hypercore;
pub mod osh;
pub mod profiles;
pub mod suites;

pub use suites::{run_suite, SuiteParams, SuiteReport};

pub use constructions::{
    affine_plane, blowup, clique_plus_isolated, g_value, hprime, mono_clique_numbers, ngon,
    parity_triples, random_coloring, PartSizes,
};
pub use enumerate::{
    brute_h_value, brute_qfree_count, canonical_form, enumerate_qfree, ff_classify, h_value,
    CanonicalClass, FfClass, HValueReport,
};
pub use error::{Error, Result};
pub use extractors::{
    extract_42_43, extract_coclique_41_44, extract_coclique_42_44, extract_graph_homogeneous,
    Claim, ExtractionTrace,
};
pub use homsolve::{greedy_homogeneous, homogeneous_number, max_clique, max_coclique, SolveReport};
pub use hypercore::{
    complement, induced_count, induced_subgraph, link_graph, restricted_link, HomogeneousWitness,
    TwoColoring, UniformHypergraph, VertexSet, WitnessKind,
};
pub use osh::{parse_osh, serialize_osh};
pub use profiles::{is_q_free, profile, q_complement, ForbiddenFamily, OrderSizePair, QCheck};
