//! Exact computational algebra over finite rings and groups.
//!
//! The crate materializes finite groups and rings as full operation tables,
//! builds group rings `R[G]` on top of them, and decides structural questions
//! — principal ideal lattices, Jacobson radicals, local decompositions,
//! idempotent lifting, module splittings — by direct exhaustive computation.
//! On top of the oracles sits a rule engine that classifies group rings as
//! Köthe rings or pure semisimple rings, with every verdict carrying a
//! citation trace of the theorems applied and the hypotheses checked.

pub mod bits;
pub mod classify;
pub mod error;
pub mod group;
pub mod group_ring;
pub mod modules;
pub mod ring;

pub use error::{Error, Result};
pub use group::{materialize_group, GroupDescriptor, GroupTable, SubgroupRef};
pub use ring::{materialize_ring, RingDescriptor, RingTable};
