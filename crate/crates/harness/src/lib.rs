//! Theorem verifiers, a small library of permutation groups, suite
//! configuration and report generation for pcomplex.

pub mod commands;
pub mod config;
pub mod error;
pub mod library;
pub mod report;
pub mod suite;
pub mod verify;

pub use error::HarnessError;
