//! Exact k-clique counting in weighted blow-ups of small graphs.
//!
//! A weighting `w` assigns a non-negative integer to every vertex of a simple
//! graph `G`; the blow-up `G(w)` replaces each vertex `v` by a clique of size
//! `w(v)` and completely joins the cliques of adjacent vertices. This crate
//! counts the k-cliques of `G(w)` exactly (closed formula and explicit
//! enumeration), implements simultaneous weight shifting along disjoint edge
//! pairs together with a checkable injection certificate, and provides exact
//! and constructive minimizers of the clique count over all weightings of a
//! fixed total.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and the
//! command-line front end live in the `blowmin` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod blowup;
pub mod count;
mod error;
pub mod families;
pub mod graph;
pub mod search;
pub mod shift;

pub use blowup::{BlowupGraph, BlowupVertex, Weighting};
pub use count::BigCount;
pub use error::{Error, Result};
pub use families::{LevelDirection, LevelMatching, MultipartiteSpec, SpernerGraph};
pub use graph::{CliqueSet, EliminationOrdering, Graph};
pub use search::{SearchResult, ShiftTrace, StrictGapReport};
pub use shift::{InjectionCertificate, ShiftMode, ShiftSpec, ShiftValidation};
