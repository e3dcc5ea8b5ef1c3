//! Possible pairs `(Br₁(U)/Br(Q), Br(X)/Br(Q))` when the boundary is a
//! tritangent trio, by running over the subgroups of its stabilizer.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::h1_lattice;
use crate::cubic::CubicLattice;
use crate::error::{Error, Result};
use crate::linalg::FinAbGroup;
use crate::perm::{subgroups_up_to_conjugacy, PermGroup};

/// `br1 = H¹(G, Pic Ū)`, `brx = H¹(G, Pic X̄)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TablePair {
    pub br1: FinAbGroup,
    pub brx: FinAbGroup,
}

/// One conjugacy class of subgroups of the trio stabilizer with its data.
#[derive(Clone, Debug)]
pub struct SubgroupRecord {
    pub group: PermGroup,
    pub trio_orbits: usize,
    pub pair: TablePair,
}

/// Every subgroup class of the stabilizer of the first trio, with the
/// cohomology of both lattices.
pub fn trio_subgroup_records(lattice: &CubicLattice) -> Result<Vec<SubgroupRecord>> {
    let trio = &lattice.trios()[0];
    let stab = lattice.trio_stabilizer(trio);
    let classes = subgroups_up_to_conjugacy(&stab)?;
    classes
        .into_par_iter()
        .map(|group| {
            let trio_orbits = group.orbit_count(&trio.indices)?;
            let br1 = h1_lattice(&lattice.quotient_by_trio(trio, &group)?.module()?)?;
            let brx = h1_lattice(&lattice.pic_module(&group)?)?;
            Ok(SubgroupRecord { group, trio_orbits, pair: TablePair { br1, brx } })
        })
        .collect()
}

/// Distinct pairs over subgroups with the given number of orbits on the trio.
pub fn pairs_for_orbit_count(records: &[SubgroupRecord], orbits: usize) -> BTreeSet<TablePair> {
    records.iter().filter(|r| r.trio_orbits == orbits).map(|r| r.pair.clone()).collect()
}

/// The table for a boundary whose three lines form `case` Galois orbits.
pub fn algebraic_tables(case: usize) -> Result<BTreeSet<TablePair>> {
    if !(1..=3).contains(&case) {
        return Err(Error::InvalidInput(format!("orbit case must be 1, 2 or 3, got {case}")));
    }
    let records = trio_subgroup_records(&CubicLattice::new())?;
    Ok(pairs_for_orbit_count(&records, case))
}
