#![no_std]
#![forbid(unsafe_code)]

//! Exact computation of the strong conflict-free connection number of small
//! graphs.
//!
//! A path is *conflict-free* when some color appears on exactly one of its
//! edges. An edge-colored graph is *strongly conflict-free connected* when
//! every pair of vertices is joined by a conflict-free path of length equal
//! to their distance; `scfc(G)` is the fewest colors that achieve this.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line tool and the theorem harness live in the companion `scfc` crate.
//!
//! - [`graph`]: immutable simple graphs, distances, shortest-path DAGs,
//!   bridges and the forced structures used for cubic graphs.
//! - [`canon`]: exact canonical labeling.
//! - [`graph6`]: the standard graph6 text encoding.
//! - [`families`]: deterministic generators for named graph families.
//! - [`coloring`]: edge colorings and the verification engine.
//! - [`constructions`]: explicit colorings, always re-verified.
//! - [`solver`]: bounds, triangle packings and the exact search.
//! - [`enumerate`]: isomorph-free generation of small graphs.

extern crate alloc;

pub mod canon;
pub mod coloring;
pub mod constructions;
pub mod enumerate;
mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod solver;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use coloring::{EdgeColoring, VerificationReport};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, ShortestPathDag};
pub use solver::{scfc_decide, scfc_exact, ScfcResult};

/// `⌈log₂ x⌉` for `x ≥ 1`.
pub fn ceil_log2(x: usize) -> usize {
    assert!(x >= 1, "ceil_log2 of zero");
    (usize::BITS - (x - 1).leading_zeros()) as usize
}
