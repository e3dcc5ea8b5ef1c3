//! Brauer group classifiers for complements of hyperplane sections.

mod descriptor;
mod tables;
mod twist;

pub use descriptor::{
    geometric_brauer, BoundaryDescriptor, ConicIntersection, GaloisType, GeometricBrauer,
    QuadraticClass, SingularCubicKind,
};
pub use tables::{algebraic_tables, pairs_for_orbit_count, trio_subgroup_records, SubgroupRecord, TablePair};
pub use twist::{
    geometric_invariants, qmodz_invariants, residue_kernel_check, sqrt_in_cyclotomic,
    transcendental_bound, twist_invariants, twist_module, ResidueKernel,
};
