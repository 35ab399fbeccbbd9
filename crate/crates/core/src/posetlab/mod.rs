//! Posets of subgroups, their nerves, homotopy certificates, the quotient
//! `C_G(T)/O_p(C_G(T))` and the collection `𝔖`.

pub mod certificate;
pub mod complex;
pub mod frak;
pub mod poset;
pub mod quotient;

pub use certificate::{
    check_certificate, check_retraction, product, ContractionCertificate, Defect, Direction, MapRule,
    RetractionCertificate, Verdict,
};
pub use complex::{order_complex, SimplicialComplex};
pub use frak::{build_frak_s, FrakS, Hypotheses};
pub use poset::{build_poset, Bound, GPoset, Truncation};
pub use quotient::{quotient_context, QuotientContext};
