//! Minimizing π_k(G(w)) over all weightings of a fixed total.
//!
//! [`brute_force_min`] is the exhaustive oracle. The structured minimizers
//! ([`minimize_sperner`], [`minimize_multipartite`], [`minimize_chordal`])
//! reach a uniform weighting on a maximum independent set through a trace of
//! count-non-increasing steps. [`strict_gap_check`] and [`conjecture_sweep`]
//! compare uniform weightings on k-clique independent sets against the true
//! minimum.

mod brute;
mod gap;
mod minimize;
mod sweep;

pub use brute::{
    brute_force_min, brute_force_min_with, weak_composition_count, SearchBudget, SearchResult,
    DEFAULT_MAX_WEIGHTINGS, MINIMIZER_CAP,
};
pub use gap::{strict_gap_check, StrictGapReport};
pub use minimize::{
    balance_on, minimize_chordal, minimize_multipartite, minimize_multipartite_parts,
    minimize_sperner, StepKind, ShiftTrace, TraceStep,
};
pub use sweep::{
    all_uniform_weightings, conjecture_sweep, SweepFinding, SweepOutcome, SweepReport, SweepRow,
};
