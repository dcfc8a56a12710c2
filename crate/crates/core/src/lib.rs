//! Exact computation and verification of distance parameters on planar graph classes.
//!
//! The crate revolves around four invariants of a connected graph `G` of order `n`:
//!
//! * the *status* (total distance) `σ(v) = Σ_w d(v, w)` of a vertex,
//! * the *proximity* `π(G) = min_v σ(v)/(n−1)`,
//! * the *remoteness* `ρ(G) = max_v σ(v)/(n−1)`,
//! * the classical *radius* and *diameter* from vertex eccentricities.
//!
//! Everything downstream of a BFS is exact: ratios are reduced rationals
//! ([`rat::Rat`]), and every "equality"/"violation" verdict in the bound registry is a
//! literal rational comparison, never a float one.
//!
//! The modules mirror the pipeline:
//!
//! * [`graph`] — immutable simple graphs, distance matrices, parameter summaries,
//!   BFS level structures;
//! * [`graph6`] — bit-exact graph6 encoding and decoding;
//! * [`connectivity`] — exact vertex connectivity with cut witnesses;
//! * [`planar`] — planarity testing with constructive embeddings, Kuratowski
//!   witnesses, class predicates, active-vertex structures, and lemma checkers;
//! * [`families`] — generators for the extremal constructions `T_n`, `Q_n`,
//!   `MOP_n`, `G_{n,κ}`, `Ḡ_{n,κ}` and the diameter-extremal graphs, each with its
//!   closed-form invariants;
//! * [`bounds`] — the registry of sharp bounds (tagged `THM…`/`COR…`/`PROP…`) and
//!   the verdict engine;
//! * [`canon`] — canonical codes for isomorphism-free enumeration;
//! * [`enumerate`] — exhaustive catalogs of triangulations, quadrangulations and
//!   maximal outerplanar graphs, plus seeded random connected graphs;
//! * [`sweep`] — the harness that drives every catalog member through every
//!   applicable bound and aggregates extremal certificates;
//! * [`exec`] — the parallel/sequential execution switch behind the `parallel`
//!   feature.

pub mod bounds;
pub mod canon;
pub mod connectivity;
pub mod enumerate;
pub mod exec;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod planar;
pub mod rat;
pub mod sweep;

pub use graph::{DistanceMatrix, Graph, GraphError, LevelStructure, ParamSummary};
pub use rat::{rat, Rat};
