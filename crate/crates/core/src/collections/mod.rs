//! `p`-central elements, the hat operator, radical closure, subgroup
//! predicates and the collection kinds.

pub mod kinds;
pub mod pcentral;
pub mod predicates;
pub mod psubgroups;

pub use kinds::{build_collection, enumerate_p_subgroups, Collection, CollectionClass, CollectionKind};
pub use pcentral::{is_p_central, PCentralData};
pub use predicates::{
    characteristic_classification, has_characteristic_p, hat_subgroup, is_elementary_abelian, is_p_centric,
    is_p_radical, radical_closure, Classification,
};
pub use psubgroups::{ClassFlags, PClass, PSubgroups};
