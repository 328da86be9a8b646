//! Workbench for the symmetric special biserial algebras Γ(p,q;r),
//! Λ(p,q;s,t) and the symmetric Nakayama algebras N_m^n.
//!
//! Algebras are built exactly from quiver presentations, their invariants
//! (Cartan data, centre, Hochschild cohomology, Külshammer ideals) are
//! computed by exact linear algebra, and derived / stable equivalence between
//! family members is decided with an audit trail.

pub mod classify;
pub mod cli;
pub mod dsl;
pub mod engine;
pub mod error;
pub mod families;
pub mod hochschild;
pub mod invariants;
pub mod kernel;
pub mod oracle;
pub mod suite;

pub use error::{Result, SsbError};
