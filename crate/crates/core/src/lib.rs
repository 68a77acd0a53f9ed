//! Exact computational machinery for the nu(G) and chi(G) constructions on
//! small finite p-groups: coset enumeration to regular permutation
//! representations, orbit-based subgroup arithmetic, the distinguished
//! subgroups of both constructions, executable checkers for the
//! powerful/potent structure theory, and a corpus-driven verification
//! harness with machine-readable reports.

pub mod abelian;
pub mod constructions;
pub mod corpus;
pub mod filter;
pub mod error;
pub mod enumerate;
pub mod fingerprint;
pub mod group;
pub mod hom;
pub mod limits;
pub mod perm;
pub mod pgroup;
pub mod presentation;
pub mod report;
pub mod product;
pub mod subgroup;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use fingerprint::{Fingerprint, Nilpotency};
pub use group::{ElementTable, PermGroup};
pub use limits::Limits;
pub use perm::Permutation;
pub use presentation::{GroupInput, Presentation};
pub use subgroup::Subgroup;
pub use word::Word;
