//! Admissible sets in extended affine Weyl groups.
//!
//! The crate builds based root data, the finite and extended affine Weyl
//! groups, and the quantum Bruhat graph, then verifies order-theoretic
//! properties of augmented admissible sets: dual EL-shellability under a
//! fixed edge labeling, recursive coatom orderings, and N-Cohen-Macaulayness.

pub mod adm;
pub mod affine;
pub mod bits;
pub mod cartan;
pub mod coxeter;
pub mod export;
pub mod fixtures;
pub mod labeling;
pub mod linalg;
pub mod poset;
pub mod qbg;
pub mod report;
pub mod root_datum;
pub mod verify;
pub mod weyl;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AdmError {
    #[error("unknown Cartan type: {0}")]
    UnknownType(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("Weyl group larger than the configured bound")]
    GroupTooLarge,
    #[error("cocharacter is not dominant")]
    NotDominant,
    #[error("elements belong to different root data")]
    MixedDatum,
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("presentation is not acute")]
    NotAcute,
    #[error("elements lie in different affine Weyl cosets")]
    IncomparableCosets,
    #[error("element is not in the admissible set")]
    NotInAdm,
    #[error("expected a unique minimum, found none: {0}")]
    MinNotUnique(String),
    #[error("no witness found: {0}")]
    NoWitness(String),
    #[error("theory violation: {0}")]
    TheoremViolation(String),
    #[error("cover classification failed: {0}")]
    CaseClassificationFailed(String),
    #[error("not a cover relation")]
    NotACover,
    #[error("search budget exceeded")]
    SearchBudgetExceeded,
    #[error("subset is not spherical")]
    NotSpherical,
    #[error("witness mismatch: {0}")]
    WitnessMismatch(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub use affine::AffineElt;
pub use cartan::{CartanSpec, Family, Lattice};
pub use root_datum::{build_root_datum, RootDatum};
pub use weyl::{WeylElt, WeylGroup};
