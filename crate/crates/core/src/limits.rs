use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard caps guarding every enumeration. Exceeding one is an error, never a
/// silent truncation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest group order any enumeration-based operation accepts.
    pub max_order: u64,
    /// Largest Sylow p-subgroup whose subgroups are enumerated.
    pub max_sylow_order: u64,
    /// Largest number of subgroups of the fixed Sylow subgroup.
    pub max_sylow_subgroups: usize,
    /// Largest number of conjugacy classes of p-subgroups.
    pub max_subgroup_classes: usize,
    /// Largest orbit explored by an orbit/stabilizer search (the node budget).
    pub max_orbit: usize,
    /// Largest number of elements materialized in a poset.
    pub max_poset_elements: usize,
    /// Largest number of simplices in an order complex.
    pub max_simplices: usize,
    /// Largest coset space enumerated for permutation characters.
    pub max_cosets: usize,
    /// Seed for every randomized subroutine.
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 1_000_000,
            max_sylow_order: 512,
            max_sylow_subgroups: 500_000,
            max_subgroup_classes: 10_000,
            max_orbit: 2_000_000,
            max_poset_elements: 200_000,
            max_simplices: 2_000_000,
            max_cosets: 100_000,
            seed: 0x5eed_2007,
        }
    }
}

impl Limits {
    pub fn check_order(&self, order: &BigUint) -> Result<u64> {
        match u64::try_from(order) {
            Ok(n) if n <= self.max_order => Ok(n),
            _ => Err(Error::resource("max_order", self.max_order, order)),
        }
    }
}
