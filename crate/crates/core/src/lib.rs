//! Enumeration of minimal transversals (minimal hitting sets) of a
//! hypergraph, built around an incremental dual-check.
//!
//! The check answers "is this list of minimal transversals complete, and if
//! not, here is a missing one" by hunting for a counterexample that either
//! realizes a k-trace the hypergraph misses or is k-compatible with it. With
//! k above the VC-dimension both hunts stay polynomial; with k at the
//! conformality the second one is empty and can be skipped. Brute-force
//! oracles for everything live behind the `oracle` feature (on by default)
//! so results can always be cross-checked at small scale.

pub mod dualizer;
pub mod enumerator;
mod error;
pub mod extension;
pub mod hypergraph;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod reductions;
pub mod set;
pub mod subtransversal;
pub mod traces;

pub use dualizer::{
    dualize_core, precheck_minimal, trans_hyp_step, DualCheckOutcome, Dualizer, DualizeMode,
    Provenance, StepOutcome,
};
pub use enumerator::{choose_k, enumerate_all, EnumConfig, EnumMode, Enumeration, KPolicy};
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, SubMap};
pub use set::{VertexId, VertexSet};
pub use traces::Trace;
