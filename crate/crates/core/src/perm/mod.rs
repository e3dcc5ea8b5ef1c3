//! Finite permutation groups.

mod group;
mod permutation;
mod subgroups;

pub use group::{PermGroup, StabChain, ELEMENT_LISTING_BOUND};
pub use permutation::Permutation;
pub use subgroups::{
    are_conjugate, subgroup_classes, subgroups_up_to_conjugacy, subgroups_up_to_conjugacy_bounded,
    ElementSet, ElementTable, TableSubgroup, SUBGROUP_ENUMERATION_BOUND,
};
