//! Exact combinatorics of pointed partitions: a partition together with a
//! distinguished cell of its Ferrers diagram.
//!
//! The centerpiece is [`bijections::phi`], a weight-preserving involution
//! on pointed partitions that exchanges the hook length and the part
//! length of the marked cell. It is built from three reversible steps —
//! a five-region decomposition, a pealing transformation that moves
//! border strips out of the short rows, and a conjugation step — each
//! exposed on its own, together with the row shift [`bijections::tau`]
//! and the class transport [`bijections::zeta`].
//!
//! The [`qseries`] module provides truncated integer power series
//! (Gaussian binomials, inverse Pochhammer expansions) for the counting
//! identities, and [`enumeration`] verifies every structural claim by
//! exhaustive generation at desk scale.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and every operation is pure, so everything can be shared
//! freely across threads.

#![no_std]

extern crate alloc;

pub mod bijections;
pub mod enumeration;
mod error;
pub mod partition;
pub mod qseries;
pub mod rimhook;

pub use error::Error;
pub use partition::{Cell, Partition, PointedPartition, StatTuple};
