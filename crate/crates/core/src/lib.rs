//! Unit graphs of ℤn ⊕ ℤm and the linear codes spanned by their incidence
//! matrices over prime fields.

pub mod cli;
pub mod code;
pub mod error;
pub mod exec;
pub mod gfmatrix;
pub mod graph;
pub mod ring;
pub mod verify;

pub use code::{CodeParams, LinearCode, MinDistance};
pub use error::{Error, Result};
pub use exec::Exec;
pub use gfmatrix::{GfMatrix, PrimeField};
pub use graph::{GraphInvariants, UnitGraph};
pub use ring::{CaseTag, RingElement, RingSpec, StructureProfile};
