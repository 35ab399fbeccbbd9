//! Permutation-group engine.

pub mod chain;
pub mod classes;
pub mod group;
pub mod perm;
pub mod search;
pub mod sylow;

pub use classes::{ConjugacyClass, ConjugacyClassTable};
pub use group::{CanonicalKey, Group, Subgroup, SMALL_GROUP_CAP};
pub use perm::Perm;
pub use search::{center, centralizer, centralizer_of_subgroup, intersection, normalizer};
pub use sylow::{is_p_group, is_prime, omega1_center, p_core, p_part, sylow_p};
