//! Root systems, Weyl group elements and the noncrossing interval.

mod dynkin;
mod group;
mod interval;
mod perm;
mod root_system;

pub use dynkin::{DynkinType, Series};
pub use group::{GroupElement, GroupElementJson};
pub use interval::NcInterval;
pub use perm::{Permutation, SignedPermutation};
pub use root_system::RootSystem;
