//! Finite permutation groups, saturated fusion systems, partial groups and
//! localities, represented as explicit finite structures.
//!
//! Everything lives inside one ambient permutation group. Elements are
//! indices into its canonically ordered element list, subgroups are sorted
//! index sets, and morphisms between subgroups are explicit image tables.
//! On top of that the crate builds:
//!
//! * [`groups`]: element enumeration, subgroup lattices, Sylow subgroups,
//!   `O_p`, automorphism groups and the group-level `K`-normalizer;
//! * [`fusion`]: fusion systems over a `p`-subgroup, saturation, `K`-normalizer
//!   subsystems, centric/subcentric sets, hyperfocal subgroups and normality;
//! * [`locality`]: objective partial groups and localities, restriction to a
//!   set of objects, partial normal subgroups and their fusion systems;
//! * [`verify`]: the statement checkers and the suite driver.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod cache;
pub mod error;
pub mod fusion;
pub mod groups;
pub mod locality;
pub mod perm;
pub mod verify;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use fusion::FusionSystem;
pub use groups::{AutGroup, AutSubgroup, Elem, FiniteGroup, Limits, Subgroup};
pub use locality::{Locality, PartialSubgroup};
pub use perm::Perm;
