//! Distinguished collections of p-subgroups of finite permutation groups,
//! their subgroup complexes, fixed points, homology and Lefschetz class
//! functions.

pub mod collections;
pub mod error;
pub mod homology;
pub mod lefschetz;
pub mod limits;
pub mod permcore;
pub mod posetlab;

pub use error::{Error, Result};
pub use limits::Limits;
