//! Integral homology of nerves, Euler characteristics and collapses.

pub mod chain;
pub mod collapse;
pub mod snf;

use serde::Serialize;

pub use chain::{homology, homology_of, reduced_euler, ChainComplex, HomologyGroup, HomologyProfile};
pub use collapse::{collapse, Collapse};
pub use snf::{smith_form, SmithForm, SparseMatrix};

use crate::error::Result;
use crate::limits::Limits;
use crate::posetlab::SimplicialComplex;

/// What is known about the homotopy type of a nerve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Contractibility {
    /// A valid certificate or a collapse to a point.
    CertifiedContractible,
    /// Integrally acyclic without a proof of contractibility.
    Acyclic,
    NonAcyclic,
}

impl Contractibility {
    pub fn name(self) -> &'static str {
        match self {
            Contractibility::CertifiedContractible => "certified-contractible",
            Contractibility::Acyclic => "acyclic",
            Contractibility::NonAcyclic => "non-acyclic",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractibilityReport {
    pub verdict: Contractibility,
    pub profile: HomologyProfile,
    pub collapsed_to_point: bool,
}

/// Homology plus a collapse attempt. `certified` records an outside proof
/// such as a valid certificate.
pub fn assess(k: &SimplicialComplex, certified: bool, limits: &Limits) -> Result<ContractibilityReport> {
    let profile = homology(k, limits)?;
    let collapsed = collapse(k, limits)?.collapsed_to_point;
    assert!(
        !(collapsed || certified) || profile.is_acyclic(),
        "a contractible complex has nonzero reduced homology"
    );
    let verdict = if collapsed || certified {
        Contractibility::CertifiedContractible
    } else if profile.is_acyclic() {
        Contractibility::Acyclic
    } else {
        Contractibility::NonAcyclic
    };
    Ok(ContractibilityReport {
        verdict,
        profile,
        collapsed_to_point: collapsed,
    })
}
