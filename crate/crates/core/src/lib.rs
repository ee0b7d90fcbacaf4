//! Exact combinatorics of ad-nilpotent ideals of a fixed Borel subalgebra of
//! sl(n+1).
//!
//! Ideals are modelled as partitions inside the staircase `(n, n-1, ..., 1)`.
//! The crate computes their class of nilpotence (by a full bracket-depth
//! tableau and by a fast re-ranking recursion), the touch-sequence interval
//! decomposition, affine-permutation windows, several independent counting
//! formulas with generating functions, two Dyck-path correspondences, and a
//! (q,t)-Catalan polynomial refining the Catalan count by dimension and class.
//! Everything is exact integer arithmetic; the [`verify`] module cross-checks
//! every route against brute-force enumeration.

pub mod counting;
pub mod dyck;
pub mod error;
pub mod exact;
pub mod nilpotence;
pub mod qt_catalan;
pub mod staircase;
pub mod verify;

pub use dyck::{DyckPath, Step};
pub use error::{Error, Result};
pub use exact::{BiPoly, BigInt, TruncatedSeries, UniPoly};
pub use nilpotence::{AffineWindow, NilpotenceFilling, TouchSequence};
pub use staircase::{RootCell, StaircasePartition};
